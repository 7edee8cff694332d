//! English numeral parsing and sentence scanning.

use crate::normalize::fold_char;
use crate::parse::{is_long_digit_run, is_number_string, unique, vulgar_fraction, ParseError, Span, SpannedExpression};
use crate::types::{CanonicalNumeral, Measure, NumericType, Operator};
use crate::value::NumericValue;

const ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
];
const TENS: [&str; 8] = ["twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];
const SCALES: [(&str, u32); 4] = [("thousand", 3), ("million", 6), ("billion", 9), ("trillion", 12)];
const ORDINALS: [(&str, &str); 33] = [
    ("first", "one"),
    ("second", "two"),
    ("third", "three"),
    ("fourth", "four"),
    ("fifth", "five"),
    ("sixth", "six"),
    ("seventh", "seven"),
    ("eighth", "eight"),
    ("ninth", "nine"),
    ("tenth", "ten"),
    ("eleventh", "eleven"),
    ("twelfth", "twelve"),
    ("thirteenth", "thirteen"),
    ("fourteenth", "fourteen"),
    ("fifteenth", "fifteen"),
    ("sixteenth", "sixteen"),
    ("seventeenth", "seventeen"),
    ("eighteenth", "eighteen"),
    ("nineteenth", "nineteen"),
    ("twentieth", "twenty"),
    ("thirtieth", "thirty"),
    ("fortieth", "forty"),
    ("fiftieth", "fifty"),
    ("sixtieth", "sixty"),
    ("seventieth", "seventy"),
    ("eightieth", "eighty"),
    ("ninetieth", "ninety"),
    ("hundredth", "hundred"),
    ("thousandth", "thousand"),
    ("millionth", "million"),
    ("billionth", "billion"),
    ("trillionth", "trillion"),
    ("zeroth", "zero"),
];

fn ones_value(w: &str) -> Option<u8> {
    ONES.iter().position(|&o| o == w).map(|i| i as u8)
}

fn tens_value(w: &str) -> Option<u8> {
    TENS.iter().position(|&t| t == w).map(|i| (i as u8 + 2) * 10)
}

fn scale_value(w: &str) -> Option<u32> {
    SCALES.iter().find(|(s, _)| *s == w).map(|(_, k)| *k)
}

fn ordinal_cardinal(w: &str) -> Option<&'static str> {
    ORDINALS.iter().find(|(o, _)| *o == w).map(|(_, c)| *c)
}

fn is_cardinal_word(w: &str) -> bool {
    ones_value(w).is_some() || tens_value(w).is_some() || scale_value(w).is_some() || w == "hundred"
}

#[derive(Debug, Clone, PartialEq)]
enum Tk {
    Num(NumericValue),
    Ord(NumericValue),
    Word(String),
    Sym(char),
    Glyph(u64, u64),
    Other(char),
}

#[derive(Debug, Clone)]
struct Token {
    start: usize,
    end: usize,
    tk: Tk,
}

impl Token {
    fn word(&self) -> Option<&str> {
        match &self.tk {
            Tk::Word(w) => Some(w),
            _ => None,
        }
    }

    fn is_word(&self, w: &str) -> bool {
        self.word() == Some(w)
    }

    fn is_sym(&self, c: char) -> bool {
        self.tk == Tk::Sym(c)
    }
}

fn ordinal_suffix_ok(v: &NumericValue, suffix: &str) -> bool {
    let Some(n) = v.to_biguint() else { return false };
    let last2 = (&n % 100u32).to_string().parse::<u32>().unwrap_or(0);
    let expected = match (last2 % 10, (11..=13).contains(&last2)) {
        (_, true) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    suffix == expected
}

fn lex(cs: &[char]) -> Vec<Token> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits_end = i;
            while i + 1 < cs.len() && matches!(cs[i], ',' | '.') && cs[i + 1].is_ascii_digit() {
                i += 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = cs[start..i].iter().collect();
            let value = match NumericValue::parse_decimal(&text) {
                Ok(v) => v,
                Err(_) => {
                    i = digits_end;
                    let t: String = cs[start..i].iter().collect();
                    NumericValue::parse_decimal(&t).expect("digit run")
                }
            };
            let letters = cs[i..].iter().take_while(|c| c.is_ascii_alphabetic()).count();
            if letters == 2 && value.is_integer() && !text.contains(',') {
                let suffix: String = cs[i..i + 2].iter().collect();
                if ordinal_suffix_ok(&value, &suffix) {
                    i += 2;
                    out.push(Token { start, end: i, tk: Tk::Ord(value) });
                    continue;
                }
            }
            out.push(Token { start, end: i, tk: Tk::Num(value) });
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                i += 1;
            }
            let w: String = cs[start..i].iter().collect::<String>().to_ascii_lowercase();
            out.push(Token { start, end: i, tk: Tk::Word(w) });
            continue;
        }
        i += 1;
        let tk = if let Some((n, d)) = vulgar_fraction(c) {
            Tk::Glyph(n, d)
        } else if "+*×÷/:~-−%".contains(c) {
            Tk::Sym(c)
        } else {
            Tk::Other(c)
        };
        out.push(Token { start, end: i, tk });
    }
    out
}

/// Drops hyphens that join words (`thirty-two`, `one-fourth`, `3-fold`,
/// `7.0-megapixel`); hyphens between numbers stay as range separators.
fn drop_joiners(toks: Vec<Token>) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(toks.len());
    for (i, t) in toks.iter().enumerate() {
        if t.is_sym('-') && i > 0 {
            let prev = &toks[i - 1];
            let next = toks.get(i + 1);
            let joins = matches!(prev.tk, Tk::Word(_) | Tk::Num(_))
                && prev.end == t.start
                && next.is_some_and(|n| matches!(n.tk, Tk::Word(_)) && n.start == t.end);
            if joins {
                continue;
            }
        }
        out.push(t.clone());
    }
    out
}

fn err_at(toks: &[Token], i: usize, msg: &str) -> ParseError {
    let off = toks.get(i).or(toks.last()).map_or(0, |t| t.start);
    ParseError::invalid(off, msg)
}

/// Cardinal numbers: digit literals, number words up to trillions, scale
/// words with decimal multipliers (`2.82 billion`), `point` decimals.
fn cardinal(toks: &[Token]) -> Result<NumericValue, ParseError> {
    if toks.is_empty() {
        return Err(ParseError::invalid(0, "expected a number"));
    }
    if toks.len() == 1 && toks[0].is_word("zero") {
        return Ok(NumericValue::zero());
    }
    let mut total = NumericValue::zero();
    let mut group = NumericValue::zero();
    let (mut g_hund, mut g_tens, mut g_ones, mut g_num, mut g_frac) = (false, false, false, false, false);
    let mut article = false;
    let mut last_scale: Option<u32> = None;
    let mut after_scale = false;
    let mut closed = false;
    let mut i = 0;
    while i < toks.len() {
        let t = &toks[i];
        let group_empty = !(g_hund || g_tens || g_ones || g_num);
        if closed {
            return Err(err_at(toks, i, "nothing may follow a fractional amount with its unit"));
        }
        match &t.tk {
            Tk::Num(v) => {
                if i != 0 {
                    return Err(err_at(toks, i, "digits must start the number"));
                }
                group = v.clone();
                g_num = true;
                g_frac = !v.is_integer();
            }
            Tk::Word(w) => {
                let w = w.as_str();
                if g_frac && scale_value(w).is_none() {
                    return Err(err_at(toks, i, "only a unit may follow a decimal"));
                }
                if let Some(d) = ones_value(w) {
                    let leads_point = i == 0 && toks.get(1).is_some_and(|t| t.is_word("point"));
                    if d == 0 && !leads_point {
                        return Err(err_at(toks, i, "zero inside a number"));
                    }
                    if article || g_num || g_ones || (d >= 10 && g_tens) {
                        return Err(err_at(toks, i, "misplaced number word"));
                    }
                    group = &group + &NumericValue::from(d as u64);
                    g_ones = true;
                    if d >= 10 {
                        g_tens = true;
                    }
                } else if let Some(d) = tens_value(w) {
                    if article || g_num || g_ones || g_tens {
                        return Err(err_at(toks, i, "misplaced tens word"));
                    }
                    group = &group + &NumericValue::from(d as u64);
                    g_tens = true;
                } else if w == "hundred" {
                    let mult = if article {
                        NumericValue::one()
                    } else if !g_hund
                        && !group.is_zero()
                        && group.is_integer()
                        && group < NumericValue::from(100u64)
                    {
                        group.clone()
                    } else {
                        return Err(err_at(toks, i, "misplaced hundred"));
                    };
                    group = mult.scale(2);
                    g_hund = true;
                    g_tens = false;
                    g_ones = false;
                    g_num = false;
                    article = false;
                } else if let Some(k) = scale_value(w) {
                    let mult = if article {
                        NumericValue::one()
                    } else if !group_empty && !group.is_zero() {
                        group.clone()
                    } else {
                        return Err(err_at(toks, i, "scale word without a number"));
                    };
                    if last_scale.is_some_and(|l| l <= k) {
                        return Err(err_at(toks, i, "scale words out of order"));
                    }
                    total = &total + &mult.scale(k as i64);
                    closed = g_frac;
                    group = NumericValue::zero();
                    (g_hund, g_tens, g_ones, g_num, g_frac) = (false, false, false, false, false);
                    article = false;
                    last_scale = Some(k);
                    after_scale = true;
                    i += 1;
                    continue;
                } else if w == "and" {
                    let ok_before = (g_hund && !g_tens && !g_ones) || after_scale;
                    let ok_after = toks
                        .get(i + 1)
                        .and_then(Token::word)
                        .is_some_and(|n| ones_value(n).is_some_and(|d| d > 0) || tens_value(n).is_some());
                    if !ok_before || !ok_after {
                        return Err(err_at(toks, i, "misplaced and"));
                    }
                } else if w == "point" {
                    if article || g_num || (group_empty && total.is_zero() && !toks[..i].is_empty()) {
                        return Err(err_at(toks, i, "misplaced point"));
                    }
                    let mut frac = String::new();
                    let mut j = i + 1;
                    while let Some(d) = toks.get(j).and_then(Token::word).and_then(|w| match w {
                        "oh" => Some(0),
                        w => ones_value(w).filter(|d| *d < 10),
                    }) {
                        frac.push((b'0' + d) as char);
                        j += 1;
                    }
                    if frac.is_empty() {
                        return Err(err_at(toks, i, "point without digits"));
                    }
                    let f = NumericValue::parse_decimal(&format!("0.{frac}")).expect("digits");
                    group = &group + &f;
                    g_frac = true;
                    g_ones = true;
                    i = j;
                    continue;
                } else if (w == "a" || w == "an") && i == 0 && toks.len() > 1 {
                    article = true;
                } else {
                    return Err(err_at(toks, i, "not a number word"));
                }
            }
            _ => return Err(err_at(toks, i, "unexpected symbol")),
        }
        after_scale = false;
        i += 1;
    }
    if article {
        return Err(err_at(toks, toks.len() - 1, "article without a number"));
    }
    Ok(&total + &group)
}

fn is_minus(t: &Token) -> bool {
    t.is_word("minus") || t.is_word("negative") || t.is_sym('-') || t.is_sym('−')
}

fn signed_cardinal(toks: &[Token]) -> Result<NumericValue, ParseError> {
    match toks.first() {
        Some(t) if is_minus(t) && toks.len() > 1 => Ok(-cardinal(&toks[1..])?),
        _ => cardinal(toks),
    }
}

fn ordinal_phrase(toks: &[Token], plural_ok: bool) -> Result<(NumericValue, bool), ParseError> {
    let last = toks.last().ok_or_else(|| ParseError::invalid(0, "expected an ordinal"))?;
    if let Tk::Ord(v) = &last.tk {
        if toks.len() == 1 {
            return Ok((v.clone(), false));
        }
        return Err(err_at(toks, 0, "words before a numeric ordinal"));
    }
    let w = last.word().ok_or_else(|| err_at(toks, toks.len() - 1, "expected an ordinal word"))?;
    let (card, plural) = match ordinal_cardinal(w) {
        Some(c) => (c, false),
        None => match w.strip_suffix('s').and_then(ordinal_cardinal) {
            Some(c) if plural_ok => (c, true),
            _ => return Err(err_at(toks, toks.len() - 1, "expected an ordinal word")),
        },
    };
    if toks[0].is_word("a") || toks[0].is_word("an") {
        return Err(err_at(toks, 0, "article before an ordinal"));
    }
    let mut rewritten: Vec<Token> = toks.to_vec();
    let n = rewritten.len();
    rewritten[n - 1].tk = Tk::Word(card.to_string());
    if n == 1 && (card == "hundred" || scale_value(card).is_some()) {
        let one = Token { start: last.start, end: last.start, tk: Tk::Word("one".into()) };
        rewritten.insert(0, one);
    }
    let v = cardinal(&rewritten)?;
    if !v.is_integer() {
        return Err(err_at(toks, 0, "ordinal must be a whole number"));
    }
    Ok((v, plural))
}

fn denominator(toks: &[Token]) -> Result<(NumericValue, bool), ParseError> {
    if let [t] = toks {
        match t.word() {
            Some("half") => return Ok((2u64.into(), false)),
            Some("halves") => return Ok((2u64.into(), true)),
            Some("quarter") => return Ok((4u64.into(), false)),
            Some("quarters") => return Ok((4u64.into(), true)),
            _ => {}
        }
    }
    let (v, plural) = ordinal_phrase(toks, true)?;
    if v <= NumericValue::from(2u64) {
        return Err(err_at(toks, 0, "not a fraction denominator"));
    }
    Ok((v, plural))
}

fn word_fraction(toks: &[Token]) -> Option<Result<CanonicalNumeral, ParseError>> {
    let last = toks.last()?.word()?;
    let den_word = matches!(last, "half" | "halves" | "quarter" | "quarters")
        || ordinal_cardinal(last).is_some()
        || last.strip_suffix('s').and_then(ordinal_cardinal).is_some();
    if !den_word {
        return None;
    }
    if toks.len() == 1 {
        return match last {
            "half" => Some(Ok(CanonicalNumeral::fraction(1u64.into(), 2u64.into()).unwrap())),
            "quarter" => Some(Ok(CanonicalNumeral::fraction(1u64.into(), 4u64.into()).unwrap())),
            _ => None,
        };
    }
    let candidates = (1..toks.len())
        .map(|k| {
            let num = match &toks[..k] {
                [t] if t.is_word("a") || t.is_word("an") => NumericValue::one(),
                n => cardinal(n)?,
            };
            if !num.is_integer() {
                return Err(err_at(toks, 0, "fraction numerator must be whole"));
            }
            let (den, plural) = denominator(&toks[k..])?;
            if plural == (num == NumericValue::one()) {
                return Err(err_at(toks, k, "numerator and denominator disagree in number"));
            }
            CanonicalNumeral::fraction(num, den).map_err(|e| err_at(toks, k, &e.to_string()))
        })
        .collect();
    unique(candidates).transpose()
}

/// `1 in 4`, `one out of four`.
fn in_fraction(toks: &[Token]) -> Option<Result<CanonicalNumeral, ParseError>> {
    let mut splits = Vec::new();
    for k in 1..toks.len() {
        if toks[k].is_word("in") {
            splits.push((k, k + 1));
        } else if toks[k].is_word("out") && toks.get(k + 1).is_some_and(|t| t.is_word("of")) {
            splits.push((k, k + 2));
        }
    }
    if splits.is_empty() {
        return None;
    }
    let candidates = splits
        .into_iter()
        .map(|(k, r)| {
            let num = cardinal(&toks[..k])?;
            let den = cardinal(&toks[r..])?;
            if !num.is_integer() || !den.is_integer() {
                return Err(err_at(toks, k, "fraction parts must be whole"));
            }
            CanonicalNumeral::fraction(num, den).map_err(|e| err_at(toks, r, &e.to_string()))
        })
        .collect();
    unique(candidates).transpose()
}

fn fraction(toks: &[Token]) -> Option<Result<CanonicalNumeral, ParseError>> {
    match toks {
        [t] => {
            if let Tk::Glyph(n, d) = t.tk {
                return Some(Ok(CanonicalNumeral::fraction(n.into(), d.into()).unwrap()));
            }
        }
        [a, s, b] if s.is_sym('/') => {
            if let (Tk::Num(n), Tk::Num(d)) = (&a.tk, &b.tk) {
                return Some(
                    CanonicalNumeral::fraction(n.clone(), d.clone())
                        .map_err(|e| ParseError::invalid(b.start, e.to_string())),
                );
            }
        }
        _ => {}
    }
    in_fraction(toks).or_else(|| word_fraction(toks))
}

fn trailing_scale(toks: &[Token]) -> Option<u32> {
    toks.last().and_then(Token::word).and_then(scale_value)
}

fn range(toks: &[Token]) -> Option<Result<CanonicalNumeral, ParseError>> {
    let mut splits: Vec<(usize, usize, usize)> = Vec::new();
    let n = toks.len();
    if toks.first().is_some_and(|t| t.is_word("between")) {
        for k in 2..n.saturating_sub(1) {
            if toks[k].is_word("and") {
                splits.push((1, k, k + 1));
            }
        }
    } else {
        let from = usize::from(toks.first().is_some_and(|t| t.is_word("from")));
        for k in from + 1..n.saturating_sub(1) {
            if toks[k].is_word("to") || (from == 0 && (toks[k].is_sym('-') || toks[k].is_sym('~'))) {
                splits.push((from, k, k + 1));
            }
        }
    }
    if splits.is_empty() {
        return None;
    }
    let candidates = splits
        .into_iter()
        .map(|(a, k, b)| {
            let (l, r) = (&toks[a..k], &toks[b..]);
            let mut lo = signed_cardinal(l)?;
            let hi = signed_cardinal(r)?;
            if let Some(s) = trailing_scale(r) {
                if !l.iter().any(|t| t.word().and_then(scale_value).is_some()) {
                    lo = lo.scale(s as i64);
                }
            }
            Ok(CanonicalNumeral::range(lo, hi))
        })
        .collect();
    match unique(candidates) {
        Ok(Some(c)) => Some(Ok(c)),
        Ok(None) => None,
        Err(e) => Some(Err(e)),
    }
}

fn operator_at(toks: &[Token], k: usize) -> Option<(Operator, usize)> {
    let t = &toks[k];
    let by = toks.get(k + 1).is_some_and(|n| n.is_word("by"));
    Some(match &t.tk {
        Tk::Sym('+') => (Operator::Add, 1),
        Tk::Sym('*') | Tk::Sym('×') => (Operator::Mul, 1),
        Tk::Sym('÷') => (Operator::Div, 1),
        Tk::Word(w) => match w.as_str() {
            "plus" => (Operator::Add, 1),
            "x" | "times" => (Operator::Mul, 1),
            "minus" if k > 0 => (Operator::Sub, 1),
            "multiplied" if by => (Operator::Mul, 2),
            "divided" if by => (Operator::Div, 2),
            _ => return None,
        },
        _ => return None,
    })
}

fn formula(toks: &[Token]) -> Option<Result<CanonicalNumeral, ParseError>> {
    let mut ops = Vec::new();
    let mut k = 1;
    while k < toks.len() {
        if let Some((op, len)) = operator_at(toks, k) {
            ops.push((k, op, len));
            k += len;
        } else {
            k += 1;
        }
    }
    let op = ops.first()?.1;
    if ops.iter().any(|(_, o, _)| *o != op) {
        return Some(Err(err_at(toks, ops[0].0, "mixed formula operators")));
    }
    let mut operands = Vec::new();
    let mut start = 0;
    for (k, _, len) in ops.iter().copied().chain(std::iter::once((toks.len(), op, 0))) {
        match signed_cardinal(&toks[start..k]) {
            Ok(v) => operands.push(v),
            Err(e) => return Some(Err(e)),
        }
        start = k + len;
    }
    Some(CanonicalNumeral::formula(op, operands).map_err(|e| err_at(toks, 0, &e.to_string())))
}

fn is_percent(toks: &[Token]) -> bool {
    toks.iter().any(|t| t.is_sym('%') || t.is_word("percent") || t.is_word("percentage"))
        || toks.windows(2).any(|w| w[0].is_word("per") && w[1].is_word("cent"))
}

fn phrase(toks: &[Token]) -> Result<CanonicalNumeral, ParseError> {
    let n = toks.len();
    if let Some(last) = toks.last().and_then(Token::word) {
        if last == "fold" && n >= 2 {
            return Ok(CanonicalNumeral::special(Measure::Fold, cardinal(&toks[..n - 1])?));
        }
        if n == 1 {
            if let Some(head) = last.strip_suffix("fold").filter(|h| is_cardinal_word(h)) {
                let t = Token { tk: Tk::Word(head.to_string()), ..toks[0].clone() };
                return Ok(CanonicalNumeral::special(Measure::Fold, cardinal(&[t])?));
            }
        }
        if matches!(last, "mp" | "megapixel" | "megapixels") && n >= 2 {
            return Ok(CanonicalNumeral::special(Measure::Megapixel, cardinal(&toks[..n - 1])?));
        }
    }

    let range_err = match range(toks) {
        Some(Ok(c)) => return Ok(c),
        Some(Err(e @ ParseError::Ambiguous { .. })) => return Err(e),
        Some(Err(e)) => Some(e),
        None => None,
    };

    let frac = fraction(toks);
    let ord = ordinal_phrase(toks, false).map(|(v, _)| v);
    match (frac, ord) {
        (Some(Ok(f)), Ok(o)) => {
            return Err(ParseError::Ambiguous {
                candidates: vec![f.to_string(), format!("ordinal({o})")],
            })
        }
        (Some(Ok(f)), Err(_)) => return Ok(f),
        (Some(Err(e @ ParseError::Ambiguous { .. })), _) => return Err(e),
        (_, Ok(o)) => return CanonicalNumeral::ordinal(o).map_err(|e| err_at(toks, 0, &e.to_string())),
        _ => {}
    }

    let colons: Vec<usize> = (1..n.saturating_sub(1)).filter(|&k| toks[k].is_sym(':')).collect();
    if let [k] = colons[..] {
        return Ok(CanonicalNumeral::ratio(signed_cardinal(&toks[..k])?, signed_cardinal(&toks[k + 1..])?));
    }

    if let Some(r) = formula(toks) {
        return r;
    }

    match signed_cardinal(toks) {
        Ok(v) => Ok(CanonicalNumeral::scalar(v)),
        Err(e) => match range_err {
            Some(re) if re.rank() > e.rank() => Err(re),
            _ => Err(e),
        },
    }
}

/// Parses one English numeric phrase.
pub fn parse_en_number(text: &str) -> Result<CanonicalNumeral, ParseError> {
    let cs: Vec<char> = text.chars().map(fold_char).collect();
    let folded: String = cs.iter().collect();
    let trimmed = folded.trim();
    if trimmed.is_empty() {
        return Err(ParseError::Empty);
    }
    if is_number_string(trimmed) {
        return Ok(CanonicalNumeral::number_string(trimmed).expect("non-empty"));
    }
    let toks = drop_joiners(lex(&cs));
    if let Some(t) = toks.iter().find(|t| matches!(t.tk, Tk::Other(_))) {
        return Err(ParseError::invalid(t.start, "unexpected character"));
    }
    if is_percent(&toks) {
        return Err(ParseError::Unsupported(format!("percentages are not a supported measure: {trimmed}")));
    }
    phrase(&toks)
}

fn is_numeral_token(t: &Token) -> bool {
    match &t.tk {
        Tk::Num(_) | Tk::Ord(_) | Tk::Glyph(..) => true,
        Tk::Sym(c) => "+*×÷/:~-−".contains(*c),
        Tk::Word(w) => {
            is_cardinal_word(w)
                || ordinal_cardinal(w).is_some()
                || w.strip_suffix('s').and_then(ordinal_cardinal).is_some()
                || w.strip_suffix("fold").is_some_and(|h| h.is_empty() || is_cardinal_word(h))
                || matches!(
                    w.as_str(),
                    "and" | "to" | "between" | "from" | "in" | "out" | "of" | "minus" | "negative" | "point"
                        | "oh" | "plus" | "times" | "x" | "divided" | "multiplied" | "by" | "a" | "an"
                        | "half" | "halves" | "quarter" | "quarters" | "mp" | "megapixel" | "megapixels"
                )
        }
        Tk::Other(_) => false,
    }
}

fn is_start_token(toks: &[Token], i: usize) -> bool {
    let t = &toks[i];
    match &t.tk {
        Tk::Num(_) | Tk::Ord(_) | Tk::Glyph(..) => true,
        Tk::Sym('-') | Tk::Sym('−') => toks
            .get(i + 1)
            .is_some_and(|n| matches!(n.tk, Tk::Num(_)) && n.start == t.end),
        Tk::Word(w) => {
            (is_cardinal_word(w) && w != "hundred" && scale_value(w).is_none())
                || ordinal_cardinal(w).is_some()
                || w.strip_suffix("fold").is_some_and(is_cardinal_word)
                || matches!(
                    w.as_str(),
                    "between" | "from" | "minus" | "negative" | "a" | "an" | "half" | "quarter"
                )
        }
        _ => false,
    }
}

/// Rejects readings that are legal but rarely intended in running text.
fn plausible(surface_toks: &[Token], c: &CanonicalNumeral) -> bool {
    if c.kind() == NumericType::Fraction && surface_toks.iter().any(|t| t.is_word("in")) {
        let den = &c.values()[1];
        return den.is_integer() && *den <= NumericValue::from(100u64);
    }
    true
}

/// Left-to-right maximal-munch scan of an English sentence.
pub fn scan_en(text: &str) -> Vec<SpannedExpression> {
    let orig: Vec<char> = text.chars().collect();
    let folded: Vec<char> = orig.iter().map(|&c| fold_char(c)).collect();
    let toks = lex(&folded);
    let mut out = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        if !is_start_token(&toks, i) {
            i += 1;
            continue;
        }
        let mut run_end = i;
        while run_end < toks.len() && is_numeral_token(&toks[run_end]) {
            run_end += 1;
        }
        let mut matched = None;
        for j in (i + 1..=run_end).rev() {
            let span = Span::new(toks[i].start, toks[j - 1].end);
            let surface: String = orig[span.start..span.end].iter().collect();
            if let Ok(c) = parse_en_number(&surface) {
                if plausible(&toks[i..j], &c) {
                    matched = Some((j, span, surface, c));
                    break;
                }
            }
        }
        match matched {
            Some((j, span, surface, canonical)) => {
                let canonical = if is_long_digit_run(&surface) {
                    CanonicalNumeral::number_string(surface.clone()).expect("non-empty")
                } else {
                    canonical
                };
                out.push(SpannedExpression { span, surface, canonical });
                i = j;
            }
            None => i += 1,
        }
    }
    out
}
