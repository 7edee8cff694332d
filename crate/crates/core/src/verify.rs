//! Pairing numerals across a translation, checking them, and rewriting
//! the wrong ones.

use serde::{Deserialize, Serialize};

use crate::format::render_replacement;
use crate::parse::{parse_number, scan, Span, SpannedExpression};
use crate::types::{CanonicalNumeral, Direction, Lang, NumericType};
use crate::value::NumericValue;

/// One side of a pair. Mentions from an external extractor may fail to
/// parse (`canonical` is `None`) or may not be found in the sentence
/// (`span` is `None`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mention {
    pub surface: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalNumeral>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parse_error: Option<String>,
}

impl From<SpannedExpression> for Mention {
    fn from(e: SpannedExpression) -> Self {
        Mention {
            surface: e.surface,
            span: Some(e.span),
            canonical: Some(e.canonical),
            parse_error: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch { expected: CanonicalNumeral },
    Omitted,
    Spurious,
    Unverifiable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericPair {
    pub source: Option<Mention>,
    pub target: Option<Mention>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Style {
    #[default]
    Digits,
    LargeUnit,
}

impl std::str::FromStr for Style {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "digits" => Ok(Style::Digits),
            "large_unit" | "large-unit" => Ok(Style::LargeUnit),
            other => Err(format!("unknown style `{other}` (expected digits or large_unit)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostEditReport {
    pub edited: String,
    pub pairs: Vec<NumericPair>,
    pub edit_count: usize,
    /// Omitted and unverifiable pairs, plus mismatches with no locatable
    /// target span.
    pub unresolved: usize,
}

/// Scalars, and digit-only number strings without a leading zero, compare
/// by value.
fn numeric_value(c: &CanonicalNumeral) -> Option<NumericValue> {
    if c.is_scalar() {
        return c.value().cloned();
    }
    let lit = c.literal()?;
    if c.kind() == NumericType::NumberString && !lit.starts_with('0') && lit.bytes().all(|b| b.is_ascii_digit()) {
        return lit.parse().ok();
    }
    None
}

/// Type-aware equality: scalar tags do not block comparison; number
/// strings with leading zeros or separators compare literally.
pub fn canonical_match(a: &CanonicalNumeral, b: &CanonicalNumeral) -> bool {
    if let (Some(x), Some(y)) = (numeric_value(a), numeric_value(b)) {
        return x == y;
    }
    a == b
}

fn family(c: &CanonicalNumeral) -> u8 {
    match c.kind() {
        NumericType::Decimal | NumericType::LargeUnit | NumericType::NegativeNumber | NumericType::NumberString => 0,
        NumericType::Range => 1,
        NumericType::Fraction => 2,
        NumericType::Ratio => 3,
        NumericType::Formula => 4,
        NumericType::Ordinal => 5,
        NumericType::Special => 6,
    }
}

/// Aligns scanned expressions: value anchors first, then position when the
/// leftover counts agree, then in-order type matching. Leftovers become
/// omissions and spurious targets.
pub fn align(src: Vec<SpannedExpression>, tgt: Vec<SpannedExpression>) -> Vec<NumericPair> {
    let mut bound: Vec<Option<usize>> = vec![None; src.len()];
    let mut used = vec![false; tgt.len()];
    for (i, s) in src.iter().enumerate() {
        if let Some(j) = (0..tgt.len()).find(|&j| !used[j] && canonical_match(&s.canonical, &tgt[j].canonical)) {
            bound[i] = Some(j);
            used[j] = true;
        }
    }
    let free_s: Vec<usize> = (0..src.len()).filter(|&i| bound[i].is_none()).collect();
    let free_t: Vec<usize> = (0..tgt.len()).filter(|&j| !used[j]).collect();
    if free_s.len() == free_t.len() {
        for (i, j) in free_s.into_iter().zip(free_t) {
            bound[i] = Some(j);
            used[j] = true;
        }
    } else {
        let mut cursor = 0;
        for i in free_s {
            let pick = free_t
                .iter()
                .copied()
                .filter(|&j| j >= cursor && !used[j])
                .find(|&j| family(&tgt[j].canonical) == family(&src[i].canonical));
            if let Some(j) = pick {
                bound[i] = Some(j);
                used[j] = true;
                cursor = j + 1;
            }
        }
    }
    let mut out: Vec<NumericPair> = src
        .iter()
        .zip(&bound)
        .map(|(s, b)| NumericPair {
            source: Some(s.clone().into()),
            target: b.map(|j| tgt[j].clone().into()),
            verdict: None,
        })
        .collect();
    out.extend(tgt.iter().enumerate().filter(|(j, _)| !used[*j]).map(|(_, t)| NumericPair {
        source: None,
        target: Some(t.clone().into()),
        verdict: None,
    }));
    out
}

/// Rule-based extraction: scan both sentences and align.
pub fn extract_pairs(source: &str, target: &str, direction: Direction) -> Vec<NumericPair> {
    align(scan(source, direction.source()), scan(target, direction.target()))
}

fn char_find(hay: &[char], needle: &[char], taken: &[Span]) -> Option<Span> {
    if needle.is_empty() || needle.len() > hay.len() {
        return None;
    }
    let candidates: Vec<Span> = (0..=hay.len() - needle.len())
        .map(|i| Span::new(i, i + needle.len()))
        .filter(|sp| hay[sp.start..sp.end] == *needle && !taken.iter().any(|t| t.overlaps(sp)))
        .collect();
    // Prefer a match that does not cut into a longer digit run.
    let glued = |c: Option<&char>| c.is_some_and(|c| c.is_ascii_digit());
    candidates
        .iter()
        .copied()
        .find(|sp| !glued(sp.start.checked_sub(1).and_then(|i| hay.get(i))) && !glued(hay.get(sp.end)))
        .or(candidates.first().copied())
}

fn locate(sentence: &str, surface: &str, lang: Lang, taken: &mut Vec<Span>) -> Option<Mention> {
    let surface = surface.trim();
    if surface.is_empty() {
        return None;
    }
    let hay: Vec<char> = sentence.chars().collect();
    let needle: Vec<char> = surface.chars().collect();
    let span = char_find(&hay, &needle, taken);
    if let Some(sp) = span {
        taken.push(sp);
    }
    let (canonical, parse_error) = match parse_number(surface, lang) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Some(Mention {
        surface: surface.to_string(),
        span,
        canonical,
        parse_error,
    })
}

/// Builds pairs from an external extractor's `(source, target)` strings,
/// locating each string in its sentence and parsing it. Empty strings mark
/// a missing side.
pub fn pairs_from_strings(
    source: &str,
    target: &str,
    direction: Direction,
    raw: &[(String, String)],
) -> Vec<NumericPair> {
    let mut taken_s = Vec::new();
    let mut taken_t = Vec::new();
    raw.iter()
        .map(|(s, t)| NumericPair {
            source: locate(source, s, direction.source(), &mut taken_s),
            target: locate(target, t, direction.target(), &mut taken_t),
            verdict: None,
        })
        .filter(|p| p.source.is_some() || p.target.is_some())
        .collect()
}

pub fn verify_pair(mut p: NumericPair) -> NumericPair {
    let verdict = match (&p.source, &p.target) {
        (None, _) => Verdict::Spurious,
        (Some(_), None) => Verdict::Omitted,
        (Some(s), Some(t)) => match (&s.canonical, &t.canonical) {
            (None, _) => Verdict::Unverifiable {
                reason: format!("source `{}`: {}", s.surface, s.parse_error.as_deref().unwrap_or("unparsed")),
            },
            (_, None) => Verdict::Unverifiable {
                reason: format!("target `{}`: {}", t.surface, t.parse_error.as_deref().unwrap_or("unparsed")),
            },
            (Some(a), Some(b)) if canonical_match(a, b) => Verdict::Match,
            (Some(a), Some(_)) => Verdict::Mismatch { expected: a.clone() },
        },
    };
    p.verdict = Some(verdict);
    p
}

/// Rewrites every mismatched target span with the expected value rendered
/// in the target language. Text outside replaced spans is untouched.
pub fn post_edit_pairs(target: &str, direction: Direction, pairs: Vec<NumericPair>, style: Style) -> PostEditReport {
    let pairs: Vec<NumericPair> = pairs
        .into_iter()
        .map(|p| if p.verdict.is_some() { p } else { verify_pair(p) })
        .collect();
    let mut edits: Vec<(Span, String)> = Vec::new();
    let mut unresolved = 0;
    for p in &pairs {
        match &p.verdict {
            Some(Verdict::Mismatch { expected }) => {
                let span = p.target.as_ref().and_then(|t| t.span);
                match span {
                    Some(sp) if !edits.iter().any(|(e, _)| e.overlaps(&sp)) => {
                        let text = render_replacement(expected, direction.target(), style == Style::LargeUnit);
                        edits.push((sp, text));
                    }
                    _ => unresolved += 1,
                }
            }
            Some(Verdict::Omitted) | Some(Verdict::Unverifiable { .. }) => unresolved += 1,
            _ => {}
        }
    }
    edits.sort_by_key(|e| std::cmp::Reverse(e.0.start));
    let mut edited = target.to_string();
    let mut edit_count = 0;
    for (sp, text) in edits {
        if let Some(r) = sp.byte_range(&edited) {
            edited.replace_range(r, &text);
            edit_count += 1;
        }
    }
    PostEditReport {
        edited,
        pairs,
        edit_count,
        unresolved,
    }
}

/// Rule-based post-editing of one sentence pair.
pub fn post_edit(source: &str, target: &str, direction: Direction, style: Style) -> PostEditReport {
    let pairs = extract_pairs(source, target, direction)
        .into_iter()
        .map(verify_pair)
        .collect();
    post_edit_pairs(target, direction, pairs, style)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REVENUE_SRC: &str = "某公司去年的年收入超过了1000亿美元，净利润达到5000万美元，总资产达到三千五百亿美元，其中包括134亿美元的现金储备。";
    const REVENUE_MT: &str = "A company's revenue last year exceeded $10 billion, net profit reached $50 million, and total assets reached $35 billion, including $3.4 billion in cash reserves.";

    fn pair(s: &str, t: &str, dir: Direction) -> NumericPair {
        let m = |x: &str, lang| Mention {
            surface: x.into(),
            span: None,
            canonical: parse_number(x, lang).ok(),
            parse_error: None,
        };
        NumericPair {
            source: Some(m(s, dir.source())),
            target: Some(m(t, dir.target())),
            verdict: None,
        }
    }

    fn verdict(s: &str, t: &str, dir: Direction) -> Verdict {
        verify_pair(pair(s, t, dir)).verdict.unwrap()
    }

    #[test]
    fn verdicts() {
        let v = verdict("1000亿", "10 billion", Direction::ZhEn);
        assert_eq!(
            v,
            Verdict::Mismatch {
                expected: CanonicalNumeral::scalar("100000000000".parse().unwrap())
            }
        );
        assert_eq!(verdict("72.2 billion", "722亿", Direction::EnZh), Verdict::Match);
        assert_eq!(
            verdict("00326264", "00,326,264", Direction::ZhEn),
            Verdict::Mismatch {
                expected: CanonicalNumeral::number_string("00326264").unwrap()
            }
        );
        assert_eq!(verdict("700万像素", "7 megapixels", Direction::ZhEn), Verdict::Match);
        assert_eq!(verdict("7", "7.0", Direction::ZhEn), Verdict::Match);
        assert!(matches!(verdict("一半", "0.5", Direction::ZhEn), Verdict::Mismatch { .. }));
        assert!(matches!(verdict("三千五百x亿", "35 billion", Direction::ZhEn), Verdict::Unverifiable { .. }));
    }

    #[test]
    fn revenue_sentence_pairs() {
        let pairs = extract_pairs(REVENUE_SRC, REVENUE_MT, Direction::ZhEn);
        let got: Vec<(&str, &str)> = pairs
            .iter()
            .map(|p| (p.source.as_ref().unwrap().surface.as_str(), p.target.as_ref().unwrap().surface.as_str()))
            .collect();
        assert_eq!(
            got,
            [("1000亿", "10 billion"), ("5000万", "50 million"), ("三千五百亿", "35 billion"), ("134亿", "3.4 billion")]
        );
    }

    #[test]
    fn revenue_sentence_post_edit() {
        let r = post_edit(REVENUE_SRC, REVENUE_MT, Direction::ZhEn, Style::LargeUnit);
        assert_eq!(r.edit_count, 3);
        assert_eq!(
            r.edited,
            "A company's revenue last year exceeded $100 billion, net profit reached $50 million, and total assets reached $350 billion, including $13.4 billion in cash reserves."
        );
        let again = post_edit(REVENUE_SRC, &r.edited, Direction::ZhEn, Style::LargeUnit);
        assert_eq!(again.edit_count, 0);
        let digits = post_edit(REVENUE_SRC, REVENUE_MT, Direction::ZhEn, Style::Digits);
        assert!(digits.edited.contains("$100,000,000,000"), "{}", digits.edited);
        assert_eq!(post_edit(REVENUE_SRC, &digits.edited, Direction::ZhEn, Style::Digits).edit_count, 0);
    }

    #[test]
    fn omissions_and_spurious() {
        let kinds = |s: &str, t: &str| -> Vec<Verdict> {
            extract_pairs(s, t, Direction::ZhEn)
                .into_iter()
                .map(|p| verify_pair(p).verdict.unwrap())
                .collect()
        };
        assert_eq!(
            kinds("价格为3元和5元以及7元", "The price is 3 yuan and 7 yuan"),
            [Verdict::Match, Verdict::Omitted, Verdict::Match]
        );
        assert_eq!(
            kinds("价格为3元", "The price is 3 yuan, or 9"),
            [Verdict::Match, Verdict::Spurious]
        );
        let swapped = kinds("价格为3元和5元以及7元", "The price is 3 yuan and 7 yuan, or 9");
        assert_eq!(swapped[1], Verdict::Mismatch { expected: CanonicalNumeral::scalar(5u64.into()) });
        assert!(extract_pairs("没有数字", "no numbers here", Direction::ZhEn).is_empty());
        let r = post_edit("价格为3元", "The price is unknown", Direction::ZhEn, Style::Digits);
        assert_eq!((r.edit_count, r.unresolved), (0, 1));
        assert_eq!(r.edited, "The price is unknown");
    }

    #[test]
    fn external_pairs() {
        let raw = vec![("72.2 billion".to_string(), "722亿".to_string()), ("7".into(), "8".into())];
        let pairs = pairs_from_strings(
            "It will provide EUR 72.2 billion over 7 years in funding.",
            "它将在8年内提供722亿欧元的资金。",
            Direction::EnZh,
            &raw,
        );
        let r = post_edit_pairs("它将在8年内提供722亿欧元的资金。", Direction::EnZh, pairs, Style::Digits);
        assert_eq!(r.edited, "它将在7年内提供722亿欧元的资金。");
        assert_eq!(r.edit_count, 1);
    }
}
