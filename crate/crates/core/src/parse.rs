//! Pieces shared by the Chinese and English parsers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::types::{CanonicalNumeral, Lang};
use crate::value::{NumericValue, ValueParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty numeric phrase")]
    Empty,
    #[error("cannot parse numeral at offset {offset}: {message}")]
    Invalid { offset: usize, message: String },
    #[error("ambiguous numeral, candidates: {}", candidates.join(" | "))]
    Ambiguous { candidates: Vec<String> },
    #[error("unsupported numeral: {0}")]
    Unsupported(String),
}

impl ParseError {
    pub(crate) fn invalid(offset: usize, message: impl Into<String>) -> Self {
        ParseError::Invalid {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn from_value(err: ValueParseError, base: usize) -> Self {
        ParseError::invalid(base + err.offset, err.message)
    }

    /// Offset used to pick the most informative failure among alternatives.
    pub(crate) fn rank(&self) -> usize {
        match self {
            ParseError::Invalid { offset, .. } => *offset,
            ParseError::Ambiguous { .. } | ParseError::Unsupported(_) => usize::MAX,
            ParseError::Empty => 0,
        }
    }
}

/// Half-open interval of character (not byte) indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start <= end, "span start after end");
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn overlaps(&self, other: &Span) -> bool {
        self.start < other.end && other.start < self.end
    }

    /// Byte range of this span in `text`, or `None` if out of bounds.
    pub fn byte_range(&self, text: &str) -> Option<std::ops::Range<usize>> {
        let mut indices = text.char_indices().map(|(b, _)| b).chain(std::iter::once(text.len()));
        let start = indices.nth(self.start)?;
        let end = if self.end == self.start {
            start
        } else {
            indices.nth(self.end - self.start - 1)?
        };
        Some(start..end)
    }

    pub fn slice<'a>(&self, text: &'a str) -> Option<&'a str> {
        self.byte_range(text).map(|r| &text[r])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpannedExpression {
    pub span: Span,
    pub surface: String,
    pub canonical: CanonicalNumeral,
}

/// Opaque digit strings that must survive translation verbatim: a leading
/// zero (`00326264`), hyphenated groups with a leading zero or more than two
/// groups (`01074316-002`), or a short uppercase prefix on a digit run
/// (`CN102345678A`).
pub fn is_number_string(s: &str) -> bool {
    let b = s.as_bytes();
    if b.len() >= 2 && b[0] == b'0' && b.iter().all(u8::is_ascii_digit) {
        return true;
    }
    if s.contains('-') && !s.starts_with('-') {
        let groups: Vec<&str> = s.split('-').collect();
        if groups
            .iter()
            .all(|g| !g.is_empty() && g.bytes().all(|c| c.is_ascii_digit()))
        {
            return groups.len() >= 3 || groups.iter().any(|g| g.len() > 1 && g.starts_with('0'));
        }
    }
    let prefix = b.iter().take_while(|c| c.is_ascii_uppercase()).count();
    if (1..=4).contains(&prefix) {
        let rest = &s[prefix..];
        let rest = rest.strip_prefix('-').unwrap_or(rest);
        let digits = rest.bytes().filter(u8::is_ascii_digit).count();
        return rest.bytes().next().is_some_and(|c| c.is_ascii_digit())
            && digits >= 3
            && rest
                .bytes()
                .all(|c| c.is_ascii_digit() || c.is_ascii_uppercase() || c == b'-');
    }
    false
}

/// A bare run of six or more ASCII digits. Scanners treat these as number
/// strings when they carry no unit or decimal context.
pub fn is_long_digit_run(s: &str) -> bool {
    s.len() >= 6 && s.bytes().all(|c| c.is_ascii_digit())
}

/// Unicode vulgar fraction glyphs.
pub(crate) fn vulgar_fraction(c: char) -> Option<(u64, u64)> {
    Some(match c {
        '½' => (1, 2),
        '⅓' => (1, 3),
        '⅔' => (2, 3),
        '¼' => (1, 4),
        '¾' => (3, 4),
        '⅕' => (1, 5),
        '⅖' => (2, 5),
        '⅗' => (3, 5),
        '⅘' => (4, 5),
        '⅙' => (1, 6),
        '⅚' => (5, 6),
        '⅛' => (1, 8),
        '⅜' => (3, 8),
        '⅝' => (5, 8),
        '⅞' => (7, 8),
        _ => return None,
    })
}

pub(crate) fn vulgar_glyph(n: &NumericValue, d: &NumericValue) -> Option<char> {
    let (n, d) = (n.to_u64()?, d.to_u64()?);
    ['½', '⅓', '⅔', '¼', '¾', '⅕', '⅖', '⅗', '⅘', '⅙', '⅚', '⅛', '⅜', '⅝', '⅞']
        .into_iter()
        .find(|&c| vulgar_fraction(c) == Some((n, d)))
}

/// Parse a single numeric phrase in `lang`.
pub fn parse_number(text: &str, lang: Lang) -> Result<CanonicalNumeral, ParseError> {
    match lang {
        Lang::En => crate::en::parse_en_number(text),
        Lang::Zh => crate::zh::parse_zh_number(text),
    }
}

/// Scan a sentence in `lang` for numeric expressions.
pub fn scan(text: &str, lang: Lang) -> Vec<SpannedExpression> {
    match lang {
        Lang::En => crate::en::scan_en(text),
        Lang::Zh => crate::zh::scan_zh(text),
    }
}

/// Picks a unique successful alternative, reporting ambiguity when several
/// distinct readings succeed. `Ok(None)` means no alternative applied.
pub(crate) fn unique<T: PartialEq + std::fmt::Display>(
    results: Vec<Result<T, ParseError>>,
) -> Result<Option<T>, ParseError> {
    let mut oks: Vec<T> = Vec::new();
    let mut best_err: Option<ParseError> = None;
    for r in results {
        match r {
            Ok(v) => {
                if !oks.contains(&v) {
                    oks.push(v);
                }
            }
            Err(e @ ParseError::Ambiguous { .. }) => return Err(e),
            Err(e) => {
                if best_err.as_ref().is_none_or(|b| e.rank() > b.rank()) {
                    best_err = Some(e);
                }
            }
        }
    }
    match oks.len() {
        0 => match best_err {
            Some(e) => Err(e),
            None => Ok(None),
        },
        1 => Ok(oks.pop()),
        _ => Err(ParseError::Ambiguous {
            candidates: oks.iter().map(|v| v.to_string()).collect(),
        }),
    }
}
