//! Chinese numeral parsing and sentence scanning.
//!
//! The scalar grammar mixes Arabic digit runs with 零一二两三…九, the place
//! words 十/百/千 and the units 万 (10^4) and 亿 (10^8); 万亿 falls out as 万
//! followed by 亿. Structural forms (X分之Y, A比B, A到B, 第N, 负N, N倍,
//! N像素) are recognised around it.

use crate::normalize::{fold_char, fold_zh_alias};
use crate::parse::{is_long_digit_run, is_number_string, unique, vulgar_fraction, ParseError, Span, SpannedExpression};
use crate::types::{CanonicalNumeral, Measure, Operator};
use crate::value::NumericValue;

fn digit_word(c: char) -> Option<u8> {
    Some(match c {
        '零' | '〇' => 0,
        '一' => 1,
        '二' | '两' => 2,
        '三' => 3,
        '四' => 4,
        '五' => 5,
        '六' => 6,
        '七' => 7,
        '八' => 8,
        '九' => 9,
        _ => return None,
    })
}

fn place_word(c: char) -> Option<u32> {
    match c {
        '十' => Some(1),
        '百' => Some(2),
        '千' => Some(3),
        _ => None,
    }
}

fn unit_word(c: char) -> Option<u32> {
    match c {
        '万' => Some(4),
        '亿' => Some(8),
        _ => None,
    }
}

#[derive(Debug, Clone)]
enum Tok {
    Arabic { value: NumericValue, single_digit: bool, fractional: bool },
    Digit(u8),
    Zero,
    Place(u32),
    Unit(u32),
    Point,
}

fn tokenize(cs: &[char], base: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == ',' || cs[i] == '.') {
                i += 1;
            }
            let text: String = cs[start..i].iter().collect();
            let value = NumericValue::parse_decimal(&text)
                .map_err(|e| ParseError::from_value(e, base + start))?;
            toks.push((
                base + start,
                Tok::Arabic {
                    value,
                    single_digit: text.len() == 1,
                    fractional: text.contains('.'),
                },
            ));
            continue;
        }
        let tok = if let Some(d) = digit_word(c) {
            if d == 0 {
                Tok::Zero
            } else {
                Tok::Digit(d)
            }
        } else if let Some(p) = place_word(c) {
            Tok::Place(p)
        } else if let Some(u) = unit_word(c) {
            Tok::Unit(u)
        } else if c == '点' {
            Tok::Point
        } else {
            return Err(ParseError::invalid(base + i, format!("unexpected character `{c}`")));
        };
        toks.push((base + i, tok));
        i += 1;
    }
    Ok(toks)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Prev {
    None,
    Digit,
    Zero,
    Arabic,
    Place(u32),
    Unit(u32),
}

enum Pending {
    Word(u8, Prev),
    Arabic { value: NumericValue, single_digit: bool, prev: Prev },
    Fractional(NumericValue),
}

/// Resolves a trailing digit. A bare word digit right after 百/千/万/亿 is
/// read colloquially one place lower (三万五 = 35000, 一百五 = 150); a bare
/// single Arabic digit in the same position has no safe reading.
fn settle(p: Pending, offset: usize) -> Result<NumericValue, ParseError> {
    let lower = |prev: Prev| match prev {
        Prev::Place(p) if p >= 2 => Some(p - 1),
        Prev::Unit(u) => Some(u - 1),
        _ => None,
    };
    match p {
        Pending::Word(d, prev) => {
            let v = NumericValue::from_digit(d);
            Ok(match lower(prev) {
                Some(k) => v.scale(k as i64),
                None => v,
            })
        }
        Pending::Arabic {
            value,
            single_digit,
            prev,
        } => match lower(prev) {
            Some(k) if single_digit => Err(ParseError::Ambiguous {
                candidates: vec![
                    format!("{} more at the next lower place", value.scale(k as i64)),
                    format!("{value} units (offset {offset})"),
                ],
            }),
            _ => Ok(value),
        },
        Pending::Fractional(v) => Ok(v),
    }
}

/// Unsigned Chinese/Arabic quantity, e.g. `三千五百亿`, `28亿2千万`,
/// `1.43亿`, `二十八点二亿`, `32.6万亿`.
fn scalar(cs: &[char], base: usize) -> Result<NumericValue, ParseError> {
    if cs.is_empty() {
        return Err(ParseError::invalid(base, "expected a number"));
    }
    let toks = tokenize(cs, base)?;

    let wordish = toks.iter().all(|(_, t)| matches!(t, Tok::Digit(_) | Tok::Zero));
    if wordish && toks.len() >= 2 {
        return digit_reading(&toks, base);
    }

    let zero = NumericValue::zero;
    let mut result = zero();
    let mut section = zero();
    let mut num = zero();
    let mut pending: Option<Pending> = None;
    let mut last_place: Option<u32> = None;
    let mut prev = Prev::None;
    let mut seen_wan = false;
    let mut seen_yi = false;
    let mut started = false;
    let mut units_only = false;
    let mut pending_offset = base;

    let mut i = 0;
    while i < toks.len() {
        let (off, tok) = &toks[i];
        let off = *off;
        if units_only && !matches!(tok, Tok::Unit(_)) {
            return Err(ParseError::invalid(off, "nothing may follow a fractional unit amount"));
        }
        match tok {
            Tok::Digit(d) => {
                if pending.is_some() {
                    return Err(ParseError::invalid(off, "two digits without a place word"));
                }
                pending = Some(Pending::Word(*d, prev));
                pending_offset = off;
                prev = Prev::Digit;
            }
            Tok::Zero => {
                if pending.is_some() {
                    return Err(ParseError::invalid(off, "zero after a digit"));
                }
                prev = Prev::Zero;
            }
            Tok::Arabic {
                value,
                single_digit,
                fractional,
            } => {
                if pending.is_some() || prev == Prev::Digit {
                    return Err(ParseError::invalid(off, "digits directly after a number"));
                }
                pending = Some(if *fractional {
                    Pending::Fractional(value.clone())
                } else {
                    Pending::Arabic {
                        value: value.clone(),
                        single_digit: *single_digit,
                        prev,
                    }
                });
                pending_offset = off;
                prev = Prev::Arabic;
            }
            Tok::Place(p) => {
                let mult = match pending.take() {
                    Some(Pending::Word(d, _)) => NumericValue::from_digit(d),
                    Some(Pending::Arabic { value, .. }) => value,
                    Some(Pending::Fractional(v)) => v,
                    None if !started || (*p == 1 && last_place.is_none() && prev != Prev::Zero) => {
                        NumericValue::one()
                    }
                    None => return Err(ParseError::invalid(off, "place word without a digit")),
                };
                if let Some(lp) = last_place {
                    if *p >= lp {
                        return Err(ParseError::invalid(off, "place words out of order"));
                    }
                }
                num = &num + &mult.scale(*p as i64);
                last_place = Some(*p);
                prev = Prev::Place(*p);
            }
            Tok::Unit(u) => {
                let was_fractional = matches!(pending, Some(Pending::Fractional(_)));
                let tail = match pending.take() {
                    Some(p) => settle(p, pending_offset)?,
                    None => zero(),
                };
                let below = &num + &tail;
                if *u == 4 {
                    if seen_wan {
                        return Err(ParseError::invalid(off, "repeated 万"));
                    }
                    if below.is_zero() {
                        return Err(ParseError::invalid(off, "万 without a number"));
                    }
                    section = below.scale(4);
                    seen_wan = true;
                } else {
                    if seen_yi {
                        return Err(ParseError::invalid(off, "repeated 亿"));
                    }
                    let level = &section + &below;
                    if level.is_zero() {
                        return Err(ParseError::invalid(off, "亿 without a number"));
                    }
                    result = level.scale(8);
                    section = zero();
                    seen_wan = false;
                    seen_yi = true;
                }
                num = zero();
                last_place = None;
                prev = Prev::Unit(*u);
                if was_fractional {
                    units_only = true;
                }
            }
            Tok::Point => {
                let mut frac = String::new();
                let mut j = i + 1;
                while j < toks.len() {
                    match toks[j].1 {
                        Tok::Digit(d) => frac.push((b'0' + d) as char),
                        Tok::Zero => frac.push('0'),
                        _ => break,
                    }
                    j += 1;
                }
                if frac.is_empty() {
                    return Err(ParseError::invalid(off, "点 without digits"));
                }
                let int_part = match pending.take() {
                    Some(Pending::Word(d, _)) => NumericValue::from_digit(d),
                    Some(Pending::Arabic { value, .. }) => value,
                    Some(Pending::Fractional(_)) => {
                        return Err(ParseError::invalid(off, "second decimal point"))
                    }
                    None => zero(),
                };
                let whole = &num + &int_part;
                if !started && prev != Prev::Zero && int_part.is_zero() && num.is_zero() {
                    return Err(ParseError::invalid(off, "点 without an integer part"));
                }
                let frac_v = NumericValue::parse_decimal(&format!("0.{frac}")).expect("digits");
                pending = Some(Pending::Fractional(&whole + &frac_v));
                pending_offset = off;
                num = zero();
                last_place = None;
                units_only = true;
                started = true;
                i = j;
                continue;
            }
        }
        started = true;
        i += 1;
    }
    let tail = match pending {
        Some(p) => settle(p, pending_offset)?,
        None => zero(),
    };
    if !started {
        return Err(ParseError::invalid(base, "expected a number"));
    }
    let value = &(&result + &section) + &(&num + &tail);
    if value.is_zero() && !toks.iter().all(|(_, t)| matches!(t, Tok::Zero | Tok::Point | Tok::Arabic { .. })) {
        return Err(ParseError::invalid(base, "number words without a value"));
    }
    Ok(value)
}

/// `二〇二三` style digit-by-digit readings.
fn digit_reading(toks: &[(usize, Tok)], base: usize) -> Result<NumericValue, ParseError> {
    let digits: Vec<u8> = toks
        .iter()
        .map(|(_, t)| match t {
            Tok::Digit(d) => *d,
            _ => 0,
        })
        .collect();
    if digits[0] == 0 {
        return Err(ParseError::invalid(base, "digit reading with a leading zero"));
    }
    let text: String = digits.iter().map(|d| (b'0' + d) as char).collect();
    if digits.len() == 2 && digits[1] != 0 {
        return Err(ParseError::Ambiguous {
            candidates: vec![
                format!("{text} (digit by digit)"),
                format!("{}~{} (approximate range)", digits[0], digits[1]),
            ],
        });
    }
    Ok(NumericValue::parse_decimal(&text).expect("digits"))
}

fn signed_scalar(cs: &[char], base: usize) -> Result<NumericValue, ParseError> {
    match cs.first() {
        Some('负') | Some('-') | Some('−') => Ok(-scalar(&cs[1..], base + 1)?),
        _ => scalar(cs, base),
    }
}

fn trim(cs: &[char], base: usize) -> (&[char], usize) {
    let lead = cs.iter().take_while(|c| c.is_whitespace()).count();
    let cs = &cs[lead..];
    let trail = cs.iter().rev().take_while(|c| c.is_whitespace()).count();
    (&cs[..cs.len() - trail], base + lead)
}

fn find_all(cs: &[char], pat: &[char]) -> Vec<usize> {
    if pat.is_empty() || cs.len() < pat.len() {
        return Vec::new();
    }
    (0..=cs.len() - pat.len())
        .filter(|&i| &cs[i..i + pat.len()] == pat)
        .collect()
}

/// Splits at each occurrence of each separator that is not at the edges.
fn binary_splits<'a>(
    cs: &'a [char],
    base: usize,
    seps: &[&str],
) -> Vec<(&'a [char], usize, &'a [char], usize)> {
    let mut out = Vec::new();
    for sep in seps {
        let pat: Vec<char> = sep.chars().collect();
        for p in find_all(cs, &pat) {
            if p == 0 || p + pat.len() >= cs.len() {
                continue;
            }
            let (l, lb) = trim(&cs[..p], base);
            let (r, rb) = trim(&cs[p + pat.len()..], base + p + pat.len());
            if !l.is_empty() && !r.is_empty() {
                out.push((l, lb, r, rb));
            }
        }
    }
    out
}

fn trailing_unit(cs: &[char]) -> Option<i64> {
    if cs.ends_with(&['万', '亿']) {
        Some(12)
    } else {
        match cs.last() {
            Some('万') => Some(4),
            Some('亿') => Some(8),
            _ => None,
        }
    }
}

fn range_endpoints(
    l: &[char],
    lb: usize,
    r: &[char],
    rb: usize,
) -> Result<CanonicalNumeral, ParseError> {
    let mut lo = signed_scalar(l, lb)?;
    let hi = signed_scalar(r, rb)?;
    // 3到5万: a bare left endpoint shares the right endpoint's unit.
    if let Some(k) = trailing_unit(r) {
        if !l.iter().any(|c| unit_word(*c).is_some()) {
            lo = lo.scale(k);
        }
    }
    Ok(CanonicalNumeral::range(lo, hi))
}

const FORMULA_OPS: [(&str, Operator); 9] = [
    ("+", Operator::Add),
    ("加", Operator::Add),
    ("减", Operator::Sub),
    ("*", Operator::Mul),
    ("x", Operator::Mul),
    ("×", Operator::Mul),
    ("乘以", Operator::Mul),
    ("乘", Operator::Mul),
    ("÷", Operator::Div),
];

fn formula(cs: &[char], base: usize) -> Option<Result<CanonicalNumeral, ParseError>> {
    let mut s: String = cs.iter().collect();
    s = s.replace("除以", "÷");
    let chars: Vec<char> = s.chars().collect();
    // Offsets shift only when 除以 was collapsed; keep the base in that case.
    let mut found: Option<(Operator, Vec<usize>, usize)> = None;
    for (sym, op) in FORMULA_OPS {
        if sym == "乘" && s.contains("乘以") {
            continue;
        }
        let pat: Vec<char> = sym.chars().collect();
        let hits: Vec<usize> = find_all(&chars, &pat);
        if hits.is_empty() {
            continue;
        }
        match &found {
            Some((prev_op, _, _)) if *prev_op != op => {
                return Some(Err(ParseError::invalid(base, "mixed formula operators")))
            }
            Some((_, prev_hits, len)) => {
                let mut all = prev_hits.clone();
                all.extend(hits);
                all.sort_unstable();
                found = Some((op, all, *len.max(&pat.len())));
            }
            None => found = Some((op, hits, pat.len())),
        }
    }
    let (op, hits, _) = found?;
    let mut operands = Vec::new();
    let mut start = 0;
    let mut bounds: Vec<(usize, usize)> = Vec::new();
    for h in &hits {
        let len = if chars[*h..].starts_with(&['乘', '以']) { 2 } else { 1 };
        bounds.push((start, *h));
        start = h + len;
    }
    bounds.push((start, chars.len()));
    for (a, b) in bounds {
        if a >= b {
            return Some(Err(ParseError::invalid(base + a, "missing formula operand")));
        }
        let (part, pb) = trim(&chars[a..b], base + a);
        match scalar(part, pb) {
            Ok(v) => operands.push(v),
            Err(e) => return Some(Err(e)),
        }
    }
    Some(CanonicalNumeral::formula(op, operands).map_err(|e| ParseError::invalid(base, e.to_string())))
}

fn fraction_digits(cs: &[char], base: usize) -> Option<Result<CanonicalNumeral, ParseError>> {
    let slash = cs.iter().position(|&c| c == '/')?;
    let (l, lb) = trim(&cs[..slash], base);
    let (r, rb) = trim(&cs[slash + 1..], base + slash + 1);
    let num = match scalar(l, lb) {
        Ok(v) => v,
        Err(e) => return Some(Err(e)),
    };
    let den = match scalar(r, rb) {
        Ok(v) => v,
        Err(e) => return Some(Err(e)),
    };
    Some(CanonicalNumeral::fraction(num, den).map_err(|e| ParseError::invalid(rb, e.to_string())))
}

/// Parses one Chinese numeric phrase.
pub fn parse_zh_number(text: &str) -> Result<CanonicalNumeral, ParseError> {
    let all: Vec<char> = text.chars().map(|c| fold_zh_alias(fold_char(c))).collect();
    let (cs, base) = trim(&all, 0);
    if cs.is_empty() {
        return Err(ParseError::Empty);
    }
    let s: String = cs.iter().collect();
    let unsigned = s.trim_start_matches(['负', '-', '−']);
    if s.contains('%') || unsigned.starts_with("百分之") || unsigned.starts_with("千分之") {
        return Err(ParseError::Unsupported(format!("percentages are not a supported measure: {s}")));
    }
    if is_number_string(&s) {
        return Ok(CanonicalNumeral::number_string(s).expect("non-empty"));
    }

    if let Some(body) = cs.strip_suffix(&['像', '素']) {
        let (body, bb) = trim(body, base);
        let pixels = scalar(body, bb)?;
        return Ok(CanonicalNumeral::special(Measure::Megapixel, pixels.scale(-6)));
    }
    if let Some(body) = cs.strip_suffix(&['倍']) {
        let (body, bb) = trim(body, base);
        return Ok(CanonicalNumeral::special(Measure::Fold, scalar(body, bb)?));
    }

    // Fractions: X分之Y is Y/X.
    let fen: Vec<char> = "分之".chars().collect();
    let hits = find_all(cs, &fen);
    if !hits.is_empty() {
        if hits.len() > 1 {
            return Err(ParseError::invalid(base + hits[1], "more than one 分之"));
        }
        let p = hits[0];
        let (den_cs, db) = trim(&cs[..p], base);
        let (num_cs, nb) = trim(&cs[p + 2..], base + p + 2);
        let den = scalar(den_cs, db)?;
        let num = scalar(num_cs, nb)?;
        return CanonicalNumeral::fraction(num, den).map_err(|e| ParseError::invalid(db, e.to_string()));
    }
    if s == "半" || s == "一半" {
        return Ok(CanonicalNumeral::fraction(NumericValue::one(), NumericValue::from(2u64)).unwrap());
    }
    if cs.len() == 1 {
        if let Some((n, d)) = vulgar_fraction(cs[0]) {
            return Ok(CanonicalNumeral::fraction(n.into(), d.into()).unwrap());
        }
    }
    if let Some(r) = fraction_digits(cs, base) {
        return r;
    }

    let ratios = binary_splits(cs, base, &["比", ":"])
        .into_iter()
        .map(|(l, lb, r, rb)| Ok(CanonicalNumeral::ratio(signed_scalar(l, lb)?, signed_scalar(r, rb)?)))
        .collect();
    if let Some(c) = unique(ratios)? {
        return Ok(c);
    }

    let ranges = binary_splits(cs, base, &["到", "至", "~", "-"])
        .into_iter()
        .map(|(l, lb, r, rb)| range_endpoints(l, lb, r, rb))
        .collect();
    let range_err = match unique(ranges) {
        Ok(Some(c)) => return Ok(c),
        Ok(None) => None,
        Err(e @ ParseError::Ambiguous { .. }) => return Err(e),
        Err(e) => Some(e),
    };

    if let Some(r) = formula(cs, base) {
        return r;
    }

    if cs[0] == '第' {
        let (body, bb) = trim(&cs[1..], base + 1);
        let v = scalar(body, bb)?;
        return CanonicalNumeral::ordinal(v).map_err(|e| ParseError::invalid(bb, e.to_string()));
    }

    match signed_scalar(cs, base) {
        Ok(v) => Ok(CanonicalNumeral::scalar(v)),
        Err(e) => match range_err {
            Some(re) if re.rank() > e.rank() => Err(re),
            _ => Err(e),
        },
    }
}

fn is_numeral_char(c: char) -> bool {
    c.is_ascii_digit()
        || digit_word(c).is_some()
        || place_word(c).is_some()
        || unit_word(c).is_some()
        || c.is_ascii_uppercase()
        || vulgar_fraction(c).is_some()
        || matches!(
            c,
            ',' | '.' | '点' | '第' | '负' | '分' | '之' | '比' | '到' | '至' | '~' | '-' | '−'
                | ':' | '倍' | '像' | '素' | '半' | '+' | '*' | 'x' | '×' | '÷' | '加' | '减'
                | '乘' | '以' | '除' | '/' | ' '
        )
}

fn is_start_char(c: char) -> bool {
    c.is_ascii_digit()
        || (digit_word(c).is_some() && c != '〇')
        || place_word(c).is_some()
        || c.is_ascii_uppercase()
        || vulgar_fraction(c).is_some()
        || matches!(c, '第' | '负' | '-' | '−' | '半')
}

/// Surfaces that parse but are almost always idiomatic prose: a lone 一
/// (一起, 一般, 统一), 十分 "very", 千万 "by all means".
fn is_idiom(surface: &[char], next: Option<char>) -> bool {
    match surface {
        ['一'] => true,
        ['十'] => next == Some('分'),
        ['千', '万'] => matches!(next, Some('不' | '别' | '要' | '记')),
        _ => false,
    }
}

/// Left-to-right maximal-munch scan of a Chinese sentence.
pub fn scan_zh(text: &str) -> Vec<SpannedExpression> {
    let orig: Vec<char> = text.chars().collect();
    let norm: Vec<char> = orig.iter().map(|&c| fold_zh_alias(fold_char(c))).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < norm.len() {
        if !is_start_char(norm[i]) {
            i += 1;
            continue;
        }
        let mut run_end = i;
        while run_end < norm.len() && is_numeral_char(norm[run_end]) {
            run_end += 1;
        }
        let mut matched = None;
        let mut end = run_end;
        while end > i {
            if norm[end - 1].is_whitespace() {
                end -= 1;
                continue;
            }
            let surface: String = orig[i..end].iter().collect();
            if let Ok(c) = parse_zh_number(&surface) {
                if !is_idiom(&norm[i..end], norm.get(end).copied()) {
                    matched = Some((end, surface, c));
                }
                break;
            }
            end -= 1;
        }
        match matched {
            Some((end, surface, canonical)) => {
                let canonical = if is_long_digit_run(&surface) {
                    CanonicalNumeral::number_string(surface.clone()).expect("non-empty")
                } else {
                    canonical
                };
                out.push(SpannedExpression {
                    span: Span::new(i, end),
                    surface,
                    canonical,
                });
                i = end;
            }
            None => {
                // Skip the whole token when it starts inside an ASCII digit
                // or letter run so we never emit a suffix of a longer number.
                let alnum = norm[i].is_ascii_alphanumeric();
                i += 1;
                while alnum && i < norm.len() && norm[i].is_ascii_alphanumeric() {
                    i += 1;
                }
            }
        }
    }
    out
}
