//! Rendering canonical numerals back into surface forms.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::parse::vulgar_glyph;
use crate::types::{CanonicalNumeral, Lang, Measure, NumericType, Operator};
use crate::value::NumericValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{0} has no digit rendering")]
    Unsupported(NumericType),
}

const EN_UNITS: [(i64, &str); 3] = [(12, "trillion"), (9, "billion"), (6, "million")];
const ZH_UNITS: [(i64, &str); 3] = [(12, "万亿"), (8, "亿"), (4, "万")];
const WORD_LIMIT_EXP: i64 = 15;

fn units(lang: Lang) -> &'static [(i64, &'static str); 3] {
    match lang {
        Lang::En => &EN_UNITS,
        Lang::Zh => &ZH_UNITS,
    }
}

fn en_digits(v: &NumericValue) -> String {
    if v.abs() >= NumericValue::power_of_ten(4) {
        v.to_grouped_string()
    } else {
        v.to_plain_string()
    }
}

fn scalar_digits(v: &NumericValue, lang: Lang) -> String {
    match lang {
        Lang::En => en_digits(v),
        Lang::Zh => v.to_plain_string(),
    }
}

fn en_ordinal_suffix(n: &NumericValue) -> &'static str {
    let last2 = n
        .to_biguint()
        .map(|b| (b % 100u32).to_u32().unwrap_or(0))
        .unwrap_or(0);
    if (11..=13).contains(&last2) {
        return "th";
    }
    match last2 % 10 {
        1 => "st",
        2 => "nd",
        3 => "rd",
        _ => "th",
    }
}

fn symbolic_formula(c: &CanonicalNumeral, lang: Lang) -> String {
    let sym = match c.operator() {
        Some(Operator::Add) => "+",
        Some(Operator::Sub) if lang == Lang::En => " minus ",
        Some(Operator::Sub) => "减",
        Some(Operator::Mul) => "*",
        Some(Operator::Div) | None => "÷",
    };
    let parts: Vec<String> = c.values().iter().map(|v| scalar_digits(v, lang)).collect();
    parts.join(sym)
}

/// Canonical digit rendering. EN groups integers of 10,000 and above; ZH
/// never groups.
pub fn render_digits(c: &CanonicalNumeral, lang: Lang) -> Result<String, FormatError> {
    let vals = c.values();
    let d = |v: &NumericValue| scalar_digits(v, lang);
    Ok(match c.kind() {
        NumericType::Decimal | NumericType::LargeUnit | NumericType::NegativeNumber => d(&vals[0]),
        NumericType::Range => {
            // "-5-10" would not read back as a range.
            let sep = if vals[0].is_negative() || vals[1].is_negative() { "~" } else { "-" };
            format!("{}{sep}{}", d(&vals[0]), d(&vals[1]))
        }
        NumericType::Ratio => format!("{}:{}", d(&vals[0]), d(&vals[1])),
        NumericType::Fraction => format!("{}/{}", d(&vals[0]), d(&vals[1])),
        NumericType::Ordinal => match lang {
            Lang::En => format!("{}{}", vals[0].to_plain_string(), en_ordinal_suffix(&vals[0])),
            Lang::Zh => format!("第{}", vals[0].to_plain_string()),
        },
        NumericType::NumberString => c.literal().unwrap_or_default().to_string(),
        NumericType::Special => match (c.measure(), lang) {
            (Some(Measure::Fold), Lang::En) => format!("{}-fold", d(&vals[0])),
            (Some(Measure::Fold), Lang::Zh) => format!("{}倍", d(&vals[0])),
            (_, Lang::En) => format!("{} MP", d(&vals[0])),
            (_, Lang::Zh) => format!("{}像素", vals[0].scale(6).to_plain_string()),
        },
        NumericType::Formula => return Err(FormatError::Unsupported(NumericType::Formula)),
    })
}

/// Chooses the unit for a large scalar: the largest unit not above the
/// magnitude whose mantissa needs at most four decimals, else the largest
/// unit not above the magnitude.
fn pick_unit(v: &NumericValue, lang: Lang) -> Option<(i64, &'static str)> {
    let mag = v.abs();
    let fitting: Vec<(i64, &str)> = units(lang)
        .iter()
        .copied()
        .filter(|(k, _)| mag >= NumericValue::power_of_ten(*k))
        .collect();
    fitting
        .iter()
        .copied()
        .find(|(k, _)| v.scale(-k).decimal_places() <= 4)
        .or_else(|| fitting.first().copied())
}

fn unit_form(v: &NumericValue, k: i64, unit: &str, lang: Lang) -> String {
    let m = v.scale(-k);
    match lang {
        Lang::En => format!("{} {unit}", en_digits(&m)),
        Lang::Zh => format!("{}{unit}", m.to_plain_string()),
    }
}

/// Decimal-times-largest-unit rendering (`100 billion`, `1.43亿`), falling
/// back to digits below the smallest unit. Never rounds.
pub fn render_large_unit(c: &CanonicalNumeral, lang: Lang) -> String {
    if let (true, Some(v)) = (c.is_scalar(), c.value()) {
        return match pick_unit(v, lang) {
            Some((k, unit)) => unit_form(v, k, unit, lang),
            None => scalar_digits(v, lang),
        };
    }
    render_digits(c, lang).unwrap_or_else(|_| symbolic_formula(c, lang))
}

/// Rendering used when rewriting a translation: digits, or large-unit form
/// for scalars when `large_unit` is set. Formulas get a symbolic rendering.
pub fn render_replacement(c: &CanonicalNumeral, lang: Lang, large_unit: bool) -> String {
    if large_unit {
        return render_large_unit(c, lang);
    }
    render_digits(c, lang).unwrap_or_else(|_| symbolic_formula(c, lang))
}

// ---------------------------------------------------------------- words

const EN_ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
];
const EN_TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];
const EN_SCALE_WORDS: [&str; 5] = ["", " thousand", " million", " billion", " trillion"];

fn en_below_100(n: u32) -> String {
    if n < 20 {
        EN_ONES[n as usize].to_string()
    } else if n.is_multiple_of(10) {
        EN_TENS[(n / 10) as usize].to_string()
    } else {
        format!("{}-{}", EN_TENS[(n / 10) as usize], EN_ONES[(n % 10) as usize])
    }
}

fn en_below_1000(n: u32, and: bool) -> String {
    let (h, r) = (n / 100, n % 100);
    match (h, r) {
        (0, r) => en_below_100(r),
        (h, 0) => format!("{} hundred", EN_ONES[h as usize]),
        (h, r) => format!(
            "{} hundred{}{}",
            EN_ONES[h as usize],
            if and { " and " } else { " " },
            en_below_100(r)
        ),
    }
}

fn small_int(v: &NumericValue) -> Option<u64> {
    if v.abs() >= NumericValue::power_of_ten(WORD_LIMIT_EXP) {
        return None;
    }
    v.abs().to_u64()
}

/// English words for an integer below 10^15.
pub fn en_words(n: u64, and: bool) -> String {
    if n == 0 {
        return "zero".into();
    }
    let mut groups = Vec::new();
    let mut m = n;
    while m > 0 {
        groups.push((m % 1000) as u32);
        m /= 1000;
    }
    let mut parts: Vec<String> = Vec::new();
    for (i, g) in groups.iter().enumerate().rev() {
        if *g == 0 {
            continue;
        }
        let mut w = en_below_1000(*g, and);
        if and && i == 0 && *g < 100 && !parts.is_empty() {
            w = format!("and {w}");
        }
        parts.push(format!("{w}{}", EN_SCALE_WORDS[i]));
    }
    parts.join(" ")
}

fn en_digit_words(frac: &str) -> String {
    frac.bytes()
        .map(|b| EN_ONES[(b - b'0') as usize])
        .collect::<Vec<_>>()
        .join(" ")
}

/// Word forms of a non-negative value (integer part below 10^15).
fn en_magnitude_words(v: &NumericValue) -> Vec<String> {
    let (int, frac) = v.abs().split_magnitude();
    let Some(n) = int.to_u64().filter(|n| *n < 10u64.pow(WORD_LIMIT_EXP as u32)) else {
        return Vec::new();
    };
    let mut out: Vec<String> = [false, true].iter().map(|&and| en_words(n, and)).collect();
    if !frac.is_empty() {
        let tail = format!(" point {}", en_digit_words(&frac));
        out = out.into_iter().map(|w| w + &tail).collect();
        if n == 0 {
            out.push(format!("point {}", en_digit_words(&frac)));
        }
    }
    out
}

fn en_ordinal_words(n: u64) -> Vec<String> {
    [false, true]
        .iter()
        .map(|&and| {
            let w = en_words(n, and);
            let cut = w.rfind([' ', '-']).map_or(0, |i| i + 1);
            let (head, last) = w.split_at(cut);
            let ord = match last {
                "one" => "first".to_string(),
                "two" => "second".into(),
                "three" => "third".into(),
                "five" => "fifth".into(),
                "eight" => "eighth".into(),
                "nine" => "ninth".into(),
                "twelve" => "twelfth".into(),
                l if l.ends_with('y') => format!("{}ieth", &l[..l.len() - 1]),
                l => format!("{l}th"),
            };
            format!("{head}{ord}")
        })
        .collect()
}

const ZH_DIGITS: [char; 10] = ['零', '一', '二', '三', '四', '五', '六', '七', '八', '九'];

fn zh_section(n: u32, top: bool) -> String {
    if top && (10..20).contains(&n) {
        let mut s = String::from("十");
        if n > 10 {
            s.push(ZH_DIGITS[(n - 10) as usize]);
        }
        return s;
    }
    let places = ['千', '百', '十', ' '];
    let digits = [n / 1000 % 10, n / 100 % 10, n / 10 % 10, n % 10];
    let mut s = String::new();
    let mut pending_zero = false;
    for (d, p) in digits.iter().zip(places) {
        if *d == 0 {
            if !s.is_empty() {
                pending_zero = true;
            }
            continue;
        }
        if pending_zero {
            s.push('零');
            pending_zero = false;
        }
        s.push(ZH_DIGITS[*d as usize]);
        if p != ' ' {
            s.push(p);
        }
    }
    s
}

fn zh_int(n: u64, top: bool) -> String {
    if n == 0 {
        return "零".into();
    }
    let (unit, size, zero_below) = if n >= 100_000_000 {
        ('亿', 100_000_000, 10_000_000)
    } else if n >= 10_000 {
        ('万', 10_000, 1_000)
    } else {
        return zh_section(n as u32, top);
    };
    let (hi, lo) = (n / size, n % size);
    let mut s = zh_int(hi, top);
    s.push(unit);
    if lo > 0 {
        if lo < zero_below {
            s.push('零');
        }
        s.push_str(&zh_int(lo, false));
    }
    s
}

/// `二` → `两` where a fresh section starts with 2 before 百/千/万/亿.
fn liang_variant(s: &str) -> String {
    let cs: Vec<char> = s.chars().collect();
    cs.iter()
        .enumerate()
        .map(|(i, &c)| {
            let starts = i == 0 || matches!(cs[i - 1], '零' | '万' | '亿');
            let before_place = matches!(cs.get(i + 1), Some('百' | '千' | '万' | '亿'));
            if c == '二' && starts && before_place {
                '两'
            } else {
                c
            }
        })
        .collect()
}

fn zh_digit_words(frac: &str) -> String {
    frac.bytes().map(|b| ZH_DIGITS[(b - b'0') as usize]).collect()
}

fn zh_magnitude_words(v: &NumericValue) -> Vec<String> {
    let (int, frac) = v.abs().split_magnitude();
    let Some(n) = int.to_u64().filter(|n| *n < 10u64.pow(WORD_LIMIT_EXP as u32)) else {
        return Vec::new();
    };
    let base = zh_int(n, true);
    let mut out = vec![base.clone(), liang_variant(&base)];
    if (10..20).contains(&(n % 100_000)) || (10..20).contains(&n) {
        out.push(format!("一{base}"));
    }
    if !frac.is_empty() {
        let tail = format!("点{}", zh_digit_words(&frac));
        out = out.into_iter().map(|w| w + &tail).collect();
    }
    out
}

/// Arabic sections joined by units (`28亿2000万`, `28亿2千万`).
fn zh_mixed_forms(n: &BigUint) -> Vec<String> {
    let Some(n) = n.to_u64() else { return Vec::new() };
    let sections = [
        (n / 100_000_000, "亿"),
        (n / 10_000 % 10_000, "万"),
        (n % 10_000, ""),
    ];
    if sections.iter().filter(|(s, _)| *s > 0).count() < 2 {
        return Vec::new();
    }
    let render = |s: u64, compact: bool| -> String {
        if compact {
            for (p, place) in [(3u32, '千'), (2, '百')] {
                let unit = 10u64.pow(p);
                if s.is_multiple_of(unit) && s / unit < 10 {
                    return format!("{}{place}", s / unit);
                }
            }
        }
        s.to_string()
    };
    let mut out = Vec::new();
    for compact in [false, true] {
        let mut s = String::new();
        for (i, (sec, unit)) in sections.iter().enumerate() {
            if *sec == 0 {
                continue;
            }
            if !s.is_empty() && *sec < 1000 && i > 0 {
                s.push('零');
            }
            s.push_str(&render(*sec, compact));
            s.push_str(unit);
        }
        out.push(s);
    }
    out
}

// ---------------------------------------------------------------- forms

fn scalar_forms(v: &NumericValue, lang: Lang) -> Vec<String> {
    let mag = v.abs();
    let mut pos: Vec<String> = vec![mag.to_plain_string()];
    let (int, _) = mag.split_magnitude();
    if int >= BigUint::from(1000u32) {
        pos.push(mag.to_grouped_string());
    }
    let mut word_like: Vec<String> = Vec::new();
    let mantissa_limit = match lang {
        Lang::En => NumericValue::from(1000u64),
        Lang::Zh => NumericValue::from(10000u64),
    };
    for (k, unit) in units(lang) {
        let m = mag.scale(-k);
        if m.decimal_places() > 4 || m >= mantissa_limit || m.is_zero() {
            continue;
        }
        if m < NumericValue::one() && mag < NumericValue::power_of_ten(*k - 3) {
            continue;
        }
        pos.push(unit_form(&mag, *k, unit, lang));
        let words = match lang {
            Lang::En => en_magnitude_words(&m),
            Lang::Zh => zh_magnitude_words(&m),
        };
        for w in words {
            word_like.push(match lang {
                Lang::En => format!("{w} {unit}"),
                Lang::Zh => format!("{w}{unit}"),
            });
        }
    }
    match lang {
        Lang::En => word_like.extend(en_magnitude_words(&mag)),
        Lang::Zh => {
            word_like.extend(zh_magnitude_words(&mag));
            if mag.is_integer() {
                pos.extend(zh_mixed_forms(&int));
            }
        }
    }
    if !v.is_negative() {
        pos.extend(word_like);
        return pos;
    }
    let mut out = Vec::new();
    for f in &pos {
        out.push(format!("-{f}"));
    }
    for f in pos.iter().chain(&word_like) {
        out.push(match lang {
            Lang::En => format!("minus {f}"),
            Lang::Zh => format!("负{f}"),
        });
    }
    if lang == Lang::En {
        out.extend(word_like.iter().map(|w| format!("negative {w}")));
    }
    out
}

/// A few tidy spellings per operand, used inside compound forms.
fn operand_styles(v: &NumericValue, lang: Lang) -> Vec<String> {
    let mut out = vec![scalar_digits(v, lang)];
    if lang == Lang::En && v.abs() >= NumericValue::from(1000u64) {
        out.push(v.to_grouped_string());
    }
    if lang == Lang::Zh || v.abs() < NumericValue::power_of_ten(4) {
        out.push(v.to_plain_string());
    }
    if v.abs() >= NumericValue::power_of_ten(4) {
        out.push(render_large_unit(&CanonicalNumeral::scalar(v.clone()), lang));
    }
    let words = match lang {
        Lang::En => en_magnitude_words(v),
        Lang::Zh => zh_magnitude_words(v),
    };
    if let Some(w) = words.into_iter().next() {
        out.push(match (v.is_negative(), lang) {
            (false, _) => w,
            (true, Lang::En) => format!("minus {w}"),
            (true, Lang::Zh) => format!("负{w}"),
        });
    }
    dedup(out)
}

fn dedup(v: Vec<String>) -> Vec<String> {
    let mut seen = BTreeSet::new();
    v.into_iter().filter(|s| seen.insert(s.clone())).collect()
}

/// Styles for both sides of a pair, applied in lockstep.
fn paired_styles(a: &NumericValue, b: &NumericValue, lang: Lang) -> Vec<(String, String)> {
    let sa = operand_styles(a, lang);
    let sb = operand_styles(b, lang);
    let mut out: Vec<(String, String)> = Vec::new();
    for x in &sa {
        for y in &sb {
            let same_class = x.chars().next().map(|c| c.is_ascii_digit() || c == '-')
                == y.chars().next().map(|c| c.is_ascii_digit() || c == '-');
            if same_class {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

fn range_forms(lo: &NumericValue, hi: &NumericValue, lang: Lang) -> Vec<String> {
    let negative = lo.is_negative() || hi.is_negative();
    let scale_words = ["thousand", "million", "billion", "trillion"];
    let has_scale = |s: &str| match lang {
        Lang::En => scale_words.iter().any(|w| s.contains(w)),
        Lang::Zh => s.contains(['万', '亿']),
    };
    let ends_in_scale = |s: &str| match lang {
        Lang::En => scale_words.iter().any(|w| s.ends_with(w)),
        Lang::Zh => s.ends_with(['万', '亿']),
    };
    let mut out = Vec::new();
    for (a, b) in paired_styles(lo, hi, lang) {
        // "3 to 5 million" reads as 3 million to 5 million.
        if ends_in_scale(&b) && !has_scale(&a) {
            continue;
        }
        let hyphen_ok = !negative
            && a.ends_with(|c: char| c.is_ascii_digit())
            && b.starts_with(|c: char| c.is_ascii_digit());
        match lang {
            Lang::En => {
                if hyphen_ok {
                    out.push(format!("{a}-{b}"));
                }
                out.push(format!("{a}~{b}"));
                out.push(format!("{a} to {b}"));
                out.push(format!("between {a} and {b}"));
                out.push(format!("from {a} to {b}"));
            }
            Lang::Zh => {
                if hyphen_ok {
                    out.push(format!("{a}-{b}"));
                }
                out.push(format!("{a}~{b}"));
                out.push(format!("{a}到{b}"));
                out.push(format!("{a}至{b}"));
            }
        }
    }
    out
}

fn fraction_forms(n: &NumericValue, d: &NumericValue, lang: Lang) -> Vec<String> {
    let mut out = vec![format!("{}/{}", n.to_plain_string(), d.to_plain_string())];
    if let Some(g) = vulgar_glyph(n, d) {
        out.push(g.to_string());
    }
    let (Some(ni), Some(di)) = (small_int(n), small_int(d)) else {
        return out;
    };
    if n.is_negative() || d.is_negative() {
        return out;
    }
    match lang {
        Lang::En => {
            out.push(format!("{ni} in {di}"));
            out.push(format!("{ni} out of {di}"));
            let nw = en_words(ni, false);
            let dw = en_words(di, false);
            out.push(format!("{nw} in {dw}"));
            out.push(format!("{nw} out of {dw}"));
            let plural = ni != 1;
            let mut dens: Vec<String> = Vec::new();
            match di {
                2 => dens.push(if plural { "halves" } else { "half" }.into()),
                4 => {
                    dens.push(if plural { "quarters" } else { "quarter" }.into());
                    dens.extend(en_ordinal_words(4).into_iter().map(|w| if plural { w + "s" } else { w }));
                }
                d if d >= 3 => dens.extend(
                    en_ordinal_words(d)
                        .into_iter()
                        .map(|w| if plural { w + "s" } else { w }),
                ),
                _ => {}
            }
            let expected = CanonicalNumeral::fraction(n.clone(), d.clone()).ok();
            // Word fractions such as "thirty four hundred eighty-ninths"
            // admit several splits; keep only readings that are unique.
            let unambiguous = |f: &str| crate::en::parse_en_number(f).ok() == expected;
            for den in dedup(dens) {
                let spaced = format!("{nw} {den}");
                if !unambiguous(&spaced) {
                    continue;
                }
                out.push(spaced);
                if !den.contains(' ') && !nw.contains(' ') {
                    out.push(format!("{nw}-{den}"));
                }
                if ni == 1 {
                    out.push(format!("a {den}"));
                    if di == 2 || di == 4 {
                        out.push(den.clone());
                    }
                }
            }
        }
        Lang::Zh => {
            for (dw, nw) in [
                (zh_int(di, true), zh_int(ni, true)),
                (di.to_string(), ni.to_string()),
            ] {
                out.push(format!("{dw}分之{nw}"));
            }
            if ni == 1 && di == 2 {
                out.push("一半".into());
                out.push("半".into());
            }
        }
    }
    out
}

fn ratio_forms(a: &NumericValue, b: &NumericValue, lang: Lang) -> Vec<String> {
    let mut out = Vec::new();
    for (x, y) in paired_styles(a, b, lang) {
        let digits = x.starts_with(|c: char| c.is_ascii_digit() || c == '-');
        if digits {
            out.push(format!("{x}:{y}"));
        }
        if lang == Lang::Zh {
            out.push(format!("{x}比{y}"));
        }
    }
    out
}

fn formula_forms(c: &CanonicalNumeral, lang: Lang) -> Vec<String> {
    let ops: &[&str] = match (c.operator(), lang) {
        (Some(Operator::Add), Lang::En) => &["+", " + ", " plus "],
        (Some(Operator::Sub), Lang::En) => &[" minus "],
        (Some(Operator::Mul), Lang::En) => &["*", " * ", "x", " x ", "×", " × ", " times ", " multiplied by "],
        (Some(Operator::Div), Lang::En) => &["÷", " ÷ ", " divided by "],
        (Some(Operator::Add), Lang::Zh) => &["+", " + ", "加"],
        (Some(Operator::Sub), Lang::Zh) => &["减"],
        (Some(Operator::Mul), Lang::Zh) => &["*", " * ", "x", "×", "乘", "乘以"],
        (_, Lang::Zh) => &["÷", "除以"],
        (None, Lang::En) => &[],
    };
    let digits: Vec<String> = c.values().iter().map(|v| scalar_digits(v, lang)).collect();
    let words: Option<Vec<String>> = c
        .values()
        .iter()
        .map(|v| {
            let w = match lang {
                Lang::En => en_magnitude_words(v).into_iter().next(),
                Lang::Zh => zh_magnitude_words(v).into_iter().next(),
            }?;
            Some(match (v.is_negative(), lang) {
                (false, _) => w,
                (true, Lang::En) => format!("minus {w}"),
                (true, Lang::Zh) => format!("负{w}"),
            })
        })
        .collect();
    let mut out = Vec::new();
    for op in ops {
        out.push(digits.join(op));
        if let Some(w) = &words {
            if lang == Lang::Zh || op.starts_with(' ') {
                out.push(w.join(op));
            }
        }
    }
    out
}

fn ordinal_forms(n: &NumericValue, lang: Lang) -> Vec<String> {
    let mut out = vec![render_digits(&CanonicalNumeral::ordinal(n.clone()).unwrap(), lang).unwrap()];
    if let Some(ni) = small_int(n) {
        match lang {
            Lang::En => out.extend(en_ordinal_words(ni)),
            Lang::Zh => {
                let w = zh_int(ni, true);
                out.push(format!("第{}", liang_variant(&w)));
                out.push(format!("第{w}"));
            }
        }
    }
    out
}

fn special_forms(m: Measure, v: &NumericValue, lang: Lang) -> Vec<String> {
    let mut out = Vec::new();
    let digits = scalar_digits(v, lang);
    let words = match lang {
        Lang::En => en_magnitude_words(v),
        Lang::Zh => zh_magnitude_words(v),
    };
    match (m, lang) {
        (Measure::Fold, Lang::En) => {
            out.push(format!("{digits}-fold"));
            out.push(format!("{digits} fold"));
            for w in words.iter().take(1) {
                out.push(format!("{w}-fold"));
                if !w.contains([' ', '-']) {
                    out.push(format!("{w}fold"));
                }
            }
        }
        (Measure::Fold, Lang::Zh) => {
            out.push(format!("{digits}倍"));
            out.extend(words.iter().map(|w| format!("{w}倍")));
        }
        (Measure::Megapixel, Lang::En) => {
            let mut mantissas = vec![digits.clone()];
            if v.is_integer() {
                mantissas.push(format!("{}.0", v.to_plain_string()));
            }
            for m in mantissas {
                for suffix in [" MP", "MP", " megapixel", "-megapixel", " megapixels", "-MP"] {
                    out.push(format!("{m}{suffix}"));
                }
            }
        }
        (Measure::Megapixel, Lang::Zh) => {
            for f in scalar_forms(&v.scale(6), Lang::Zh) {
                out.push(format!("{f}像素"));
            }
        }
    }
    out
}

/// Every accepted surface form of `c` in `lang`. Each returned string
/// parses back to `c`.
pub fn render_forms(c: &CanonicalNumeral, lang: Lang) -> BTreeSet<String> {
    let vals = c.values();
    let candidates = match c.kind() {
        NumericType::Decimal | NumericType::LargeUnit | NumericType::NegativeNumber => {
            scalar_forms(&vals[0], lang)
        }
        NumericType::Range => range_forms(&vals[0], &vals[1], lang),
        NumericType::Fraction => fraction_forms(&vals[0], &vals[1], lang),
        NumericType::Ratio => ratio_forms(&vals[0], &vals[1], lang),
        NumericType::Formula => formula_forms(c, lang),
        NumericType::Ordinal => ordinal_forms(&vals[0], lang),
        NumericType::NumberString => vec![c.literal().unwrap_or_default().to_string()],
        NumericType::Special => special_forms(c.measure().unwrap_or(Measure::Fold), &vals[0], lang),
    };
    candidates.into_iter().collect()
}
