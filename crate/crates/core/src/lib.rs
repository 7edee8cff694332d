//! Exact parsing, canonicalization and cross-checking of numerals in
//! Chinese/English sentence pairs.

pub mod en;
pub mod eval;
pub mod format;
pub mod normalize;
pub mod parse;
pub mod types;
pub mod value;
pub mod verify;
pub mod zh;

pub use parse::{parse_number, scan, ParseError, Span, SpannedExpression};
pub use types::{CanonicalError, CanonicalNumeral, Direction, Lang, Measure, NumericType, Operator};
pub use value::NumericValue;
