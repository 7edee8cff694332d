//! Test-only oracles and generators, shared by the core integration tests
//! and the workspace acceptance suite.
#![allow(dead_code)]

use numtrans::format::render_large_unit;
use numtrans::{CanonicalNumeral, Direction, Lang, Measure, NumericValue, Operator};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Chinese place-value reading written digit by digit from the decimal
/// string: a zero run becomes one 零 before the next non-zero digit, and a
/// group unit is emitted only when its four-digit group is non-zero.
/// Everything above 亿 is read the same way and followed by 亿.
pub fn zh_place_value(n: u64) -> String {
    if n == 0 {
        return "零".to_string();
    }
    let s = n.to_string();
    let mut out = if s.len() > 8 {
        let (high, low) = s.split_at(s.len() - 8);
        let mut out = zh_digits(high);
        out.push('亿');
        let low = low.trim_start_matches('0');
        if !low.is_empty() {
            if low.len() < 8 {
                out.push('零');
            }
            out.push_str(&zh_digits(low));
        }
        out
    } else {
        zh_digits(&s)
    };
    if out.starts_with("一十") {
        out = out.replacen("一十", "十", 1);
    }
    out
}

/// Up to eight digits, no leading zero.
fn zh_digits(s: &str) -> String {
    const DIGITS: [&str; 10] = ["零", "一", "二", "三", "四", "五", "六", "七", "八", "九"];
    const PLACES: [&str; 4] = ["", "十", "百", "千"];
    const GROUPS: [&str; 2] = ["", "万"];
    let len = s.len();
    let mut out = String::new();
    let mut zero_pending = false;
    let mut group_nonzero = false;
    for (i, ch) in s.bytes().enumerate() {
        let pos = len - 1 - i;
        let d = (ch - b'0') as usize;
        if d == 0 {
            if !out.is_empty() {
                zero_pending = true;
            }
        } else {
            if zero_pending {
                out.push('零');
                zero_pending = false;
            }
            out.push_str(DIGITS[d]);
            out.push_str(PLACES[pos % 4]);
            group_nonzero = true;
        }
        if pos.is_multiple_of(4) {
            if group_nonzero {
                out.push_str(GROUPS[pos / 4]);
            }
            group_nonzero = false;
        }
    }
    out
}

/// American English words for 0..=9999, built from the digit string.
pub fn en_words_oracle(n: u64) -> String {
    assert!(n < 10_000);
    const SMALL: [&str; 20] = [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
        "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
        "nineteen",
    ];
    const TENS: [&str; 10] = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];
    if n == 0 {
        return "zero".into();
    }
    let mut words: Vec<String> = Vec::new();
    let thousands = n / 1000;
    let hundreds = n / 100 % 10;
    let rest = n % 100;
    if thousands > 0 {
        words.push(format!("{} thousand", SMALL[thousands as usize]));
    }
    if hundreds > 0 {
        words.push(format!("{} hundred", SMALL[hundreds as usize]));
    }
    if rest > 0 {
        if rest < 20 {
            words.push(SMALL[rest as usize].to_string());
        } else if rest.is_multiple_of(10) {
            words.push(TENS[(rest / 10) as usize].to_string());
        } else {
            words.push(format!("{}-{}", TENS[(rest / 10) as usize], SMALL[(rest % 10) as usize]));
        }
    }
    words.join(" ")
}

fn value(s: &str) -> NumericValue {
    s.parse().expect("generated decimal")
}

/// A random exact decimal: up to `int_digits` integer digits and up to
/// `max_places` decimals.
pub fn random_value(rng: &mut ChaCha8Rng, int_digits: usize, max_places: usize) -> NumericValue {
    let n = rng.gen_range(1..=int_digits);
    let mut s: String = (0..n).map(|_| char::from(b'0' + rng.gen_range(0..10))).collect();
    let places = rng.gen_range(0..=max_places);
    if places > 0 {
        s.push('.');
        s.extend((0..places).map(|_| char::from(b'0' + rng.gen_range(0..10))));
    }
    value(&s)
}

/// Values shaped like real large-unit amounts: a short mantissa times 10^k.
pub fn random_large(rng: &mut ChaCha8Rng) -> NumericValue {
    let mantissa = random_value(rng, 4, 2);
    let mantissa = if mantissa.is_zero() { NumericValue::one() } else { mantissa };
    mantissa.scale(rng.gen_range(3..=12))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> NumericValue {
    let v = match rng.gen_range(0..3) {
        0 => random_value(rng, 18, 4),
        1 => random_large(rng),
        _ => random_value(rng, 4, 3),
    };
    if rng.gen_bool(0.2) {
        -v
    } else {
        v
    }
}

fn small_int(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> NumericValue {
    NumericValue::from(rng.gen_range(lo..=hi))
}

/// A random canonical numeral of any of the ten types.
pub fn random_canonical(rng: &mut ChaCha8Rng) -> CanonicalNumeral {
    match rng.gen_range(0..10) {
        0..=2 => CanonicalNumeral::scalar(random_scalar(rng)),
        3 => {
            let a = random_scalar(rng);
            let b = random_scalar(rng);
            CanonicalNumeral::range(a, b)
        }
        4 => {
            let n = small_int(rng, 1, 99);
            let d = small_int(rng, 2, 1000);
            CanonicalNumeral::fraction(n, d).unwrap()
        }
        5 => CanonicalNumeral::ratio(small_int(rng, 1, 10_000), small_int(rng, 1, 10_000)),
        6 => {
            let op = *[Operator::Add, Operator::Sub, Operator::Mul, Operator::Div].choose(rng).unwrap();
            let k = rng.gen_range(2..=3);
            let operands = (0..k).map(|_| random_value(rng, 5, 2)).collect();
            CanonicalNumeral::formula(op, operands).unwrap()
        }
        7 => CanonicalNumeral::ordinal(small_int(rng, 1, 1_000_000)).unwrap(),
        8 => {
            let digits: String = (0..rng.gen_range(6..12)).map(|_| char::from(b'0' + rng.gen_range(0..10))).collect();
            let lit = match rng.gen_range(0..3) {
                0 => format!("0{digits}"),
                1 => format!("0{}-{}", &digits[..4], &digits[4..]),
                _ => format!("CN{digits}A"),
            };
            CanonicalNumeral::number_string(lit).unwrap()
        }
        _ => {
            if rng.gen_bool(0.5) {
                CanonicalNumeral::special(Measure::Fold, random_value(rng, 2, 1).max(NumericValue::one()))
            } else {
                CanonicalNumeral::special(Measure::Megapixel, random_value(rng, 3, 1).max(NumericValue::one()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    TimesTen,
    TenthOf,
    UnitSwap,
    DigitDrop,
}

#[derive(Debug, Clone)]
pub struct CorruptedCase {
    pub direction: Direction,
    pub source: String,
    pub clean: String,
    pub corrupted: String,
    /// Ground-truth value of every numeral in the source, in order.
    pub truth: Vec<NumericValue>,
    /// Index into `truth` of each corrupted numeral and how it was broken.
    pub injected: Vec<(usize, Corruption)>,
}

fn zh_amount(v: &NumericValue) -> String {
    render_large_unit(&CanonicalNumeral::scalar(v.clone()), Lang::Zh)
}

fn en_amount(v: &NumericValue) -> String {
    render_large_unit(&CanonicalNumeral::scalar(v.clone()), Lang::En)
}

/// Mantissa with two significant digits or more, so a dropped digit is
/// still a number.
fn amount(rng: &mut ChaCha8Rng, lang: Lang) -> NumericValue {
    let mantissa = NumericValue::from(rng.gen_range(12u64..=9_876)).scale(-(rng.gen_range(0..=1)));
    let k = match lang {
        Lang::En => *[6i64, 9].choose(rng).unwrap(),
        Lang::Zh => *[4i64, 8].choose(rng).unwrap(),
    };
    mantissa.scale(k)
}

fn drop_digit(rendered: &str, rng: &mut ChaCha8Rng) -> Option<String> {
    let digits: Vec<usize> = rendered
        .char_indices()
        .filter(|(_, c)| c.is_ascii_digit())
        .map(|(i, _)| i)
        .collect();
    if digits.len() < 2 {
        return None;
    }
    let at = digits[0];
    let _ = rng;
    let mut s = rendered.to_string();
    s.remove(at);
    let s = s.trim_start_matches('.').to_string();
    if s.starts_with('0') && !s.starts_with("0.") {
        return None;
    }
    Some(s)
}

fn corrupt(v: &NumericValue, lang: Lang, how: Corruption, rng: &mut ChaCha8Rng) -> Option<String> {
    let render = |x: &NumericValue| match lang {
        Lang::En => en_amount(x),
        Lang::Zh => zh_amount(x),
    };
    let original = render(v);
    let out = match how {
        Corruption::TimesTen => render(&v.scale(1)),
        Corruption::TenthOf => render(&v.scale(-1)),
        Corruption::UnitSwap => match lang {
            Lang::En if original.ends_with("million") => original.replace("million", "billion"),
            Lang::En => original.replace("billion", "million"),
            Lang::Zh if original.ends_with('万') => original.replace('万', "亿"),
            Lang::Zh => original.replace('亿', "万"),
        },
        Corruption::DigitDrop => drop_digit(&original, rng)?,
    };
    (out != original).then_some(out)
}

const ZH_TEMPLATES: [&str; 5] = [
    "某公司去年营收达到{0}元，净利润为{1}元。",
    "该项目计划投资{0}美元，其中{1}美元用于研发。",
    "全市常住人口约{0}人，比上年增加{1}人。",
    "这笔基金规模为{0}欧元，已投出{1}欧元。",
    "今年出口总额为{0}美元，进口总额为{1}美元。",
];
const EN_TEMPLATES: [&str; 5] = [
    "The company reported revenue of {0} yuan last year and a net profit of {1} yuan.",
    "The project plans to invest {0} dollars, with {1} dollars going to research.",
    "The city has about {0} residents, up {1} from the previous year.",
    "The fund holds {0} euros and has already invested {1} euros.",
    "Exports this year totalled {0} dollars while imports reached {1} dollars.",
];

fn fill(template: &str, a: &str, b: &str) -> String {
    template.replace("{0}", a).replace("{1}", b)
}

/// Generates `n` sentence pairs, alternating direction, each with one or
/// two corrupted amounts in the translation. Values within a pair and
/// every corrupted value are pairwise distinct so alignment cannot
/// confuse them.
pub fn corrupted_corpus(rng: &mut ChaCha8Rng, n: usize) -> Vec<CorruptedCase> {
    let kinds = [Corruption::TimesTen, Corruption::TenthOf, Corruption::UnitSwap, Corruption::DigitDrop];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let direction = if out.len() % 2 == 0 { Direction::ZhEn } else { Direction::EnZh };
        let (src_lang, tgt_lang) = (direction.source(), direction.target());
        let t = rng.gen_range(0..ZH_TEMPLATES.len());
        let (src_t, tgt_t) = match direction {
            Direction::ZhEn => (ZH_TEMPLATES[t], EN_TEMPLATES[t]),
            Direction::EnZh => (EN_TEMPLATES[t], ZH_TEMPLATES[t]),
        };
        let truth = vec![amount(rng, src_lang), amount(rng, src_lang)];
        if truth[0] == truth[1] {
            continue;
        }
        let r = |v: &NumericValue, lang: Lang| match lang {
            Lang::En => en_amount(v),
            Lang::Zh => zh_amount(v),
        };
        let count = rng.gen_range(1..=2);
        let mut idx: Vec<usize> = vec![0, 1];
        idx.shuffle(rng);
        idx.truncate(count);
        let mut tgt: Vec<String> = truth.iter().map(|v| r(v, tgt_lang)).collect();
        let mut injected = Vec::new();
        let mut ok = true;
        for &i in &idx {
            let how = *kinds.choose(rng).unwrap();
            match corrupt(&truth[i], tgt_lang, how, rng) {
                Some(bad) => {
                    let bad_value = numtrans::parse_number(&bad, tgt_lang).ok().and_then(|c| c.value().cloned());
                    if bad_value.is_none() || truth.iter().any(|v| Some(v) == bad_value.as_ref()) {
                        ok = false;
                        break;
                    }
                    tgt[i] = bad;
                    injected.push((i, how));
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let tv: Vec<String> = truth.iter().map(|v| r(v, src_lang)).collect();
        let clean_t: Vec<String> = truth.iter().map(|v| r(v, tgt_lang)).collect();
        injected.sort_by_key(|(i, _)| *i);
        out.push(CorruptedCase {
            direction,
            source: fill(src_t, &tv[0], &tv[1]),
            clean: fill(tgt_t, &clean_t[0], &clean_t[1]),
            corrupted: fill(tgt_t, &tgt[0], &tgt[1]),
            truth,
            injected,
        });
    }
    out
}
