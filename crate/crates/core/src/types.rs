//! The ten-type numeral taxonomy and the language-neutral canonical form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::value::NumericValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NumericType {
    LargeUnit,
    Range,
    Decimal,
    NumberString,
    Fraction,
    Ratio,
    NegativeNumber,
    Formula,
    Ordinal,
    Special,
}

impl NumericType {
    pub const ALL: [NumericType; 10] = [
        NumericType::LargeUnit,
        NumericType::Range,
        NumericType::Decimal,
        NumericType::NumberString,
        NumericType::Fraction,
        NumericType::Ratio,
        NumericType::NegativeNumber,
        NumericType::Formula,
        NumericType::Ordinal,
        NumericType::Special,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NumericType::LargeUnit => "large_unit",
            NumericType::Range => "range",
            NumericType::Decimal => "decimal",
            NumericType::NumberString => "number_string",
            NumericType::Fraction => "fraction",
            NumericType::Ratio => "ratio",
            NumericType::NegativeNumber => "negative_number",
            NumericType::Formula => "formula",
            NumericType::Ordinal => "ordinal",
            NumericType::Special => "special",
        }
    }

    /// Column header used in report tables.
    pub fn label(self) -> &'static str {
        match self {
            NumericType::LargeUnit => "Large unit",
            NumericType::Range => "Range",
            NumericType::Decimal => "Decimal",
            NumericType::NumberString => "Number String",
            NumericType::Fraction => "Fraction",
            NumericType::Ratio => "Ratio",
            NumericType::NegativeNumber => "Negative Number",
            NumericType::Formula => "Formula",
            NumericType::Ordinal => "Ordinal",
            NumericType::Special => "Special",
        }
    }

    /// Decimal, LargeUnit and NegativeNumber all denote a single signed
    /// quantity and compare by value.
    pub fn is_scalar(self) -> bool {
        matches!(
            self,
            NumericType::Decimal | NumericType::LargeUnit | NumericType::NegativeNumber
        )
    }
}

impl fmt::Display for NumericType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Measures recognised by the Special type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    /// `3倍`, `three-fold`.
    Fold,
    /// Value held in megapixels: `700万像素` is 7.
    Megapixel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lang {
    En,
    Zh,
}

impl Lang {
    pub fn name(self) -> &'static str {
        match self {
            Lang::En => "English",
            Lang::Zh => "Chinese",
        }
    }
}

impl FromStr for Lang {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "en" => Ok(Lang::En),
            "zh" => Ok(Lang::Zh),
            other => Err(format!("unknown language `{other}` (expected en or zh)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "en-zh")]
    EnZh,
    #[serde(rename = "zh-en")]
    ZhEn,
}

impl Direction {
    pub fn source(self) -> Lang {
        match self {
            Direction::EnZh => Lang::En,
            Direction::ZhEn => Lang::Zh,
        }
    }

    pub fn target(self) -> Lang {
        match self {
            Direction::EnZh => Lang::Zh,
            Direction::ZhEn => Lang::En,
        }
    }

    pub fn reversed(self) -> Direction {
        match self {
            Direction::EnZh => Direction::ZhEn,
            Direction::ZhEn => Direction::EnZh,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::EnZh => "en-zh",
            Direction::ZhEn => "zh-en",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "en-zh" | "en2zh" => Ok(Direction::EnZh),
            "zh-en" | "zh2en" => Ok(Direction::ZhEn),
            other => Err(format!("unknown direction `{other}` (expected en-zh or zh-en)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("fraction denominator is zero")]
    ZeroDenominator,
    #[error("ordinal must be a non-negative integer, got {0}")]
    BadOrdinal(NumericValue),
    #[error("formula needs at least two operands")]
    ShortFormula,
    #[error("number string literal is empty")]
    EmptyLiteral,
    #[error("{kind} expects {expected}")]
    Shape {
        kind: NumericType,
        expected: &'static str,
    },
}

/// Language-neutral meaning of a numeric expression.
///
/// Scalars (Decimal, LargeUnit, NegativeNumber) are tagged from their value
/// alone: negative values are NegativeNumber, magnitudes of at least 10^4
/// (the smallest unit, 万) are LargeUnit, everything else Decimal. Every
/// spelling of one quantity therefore maps to one canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCanonical", into = "RawCanonical")]
pub struct CanonicalNumeral {
    kind: NumericType,
    values: Vec<NumericValue>,
    literal: Option<String>,
    measure: Option<Measure>,
    operator: Option<Operator>,
}

impl CanonicalNumeral {
    fn bare(kind: NumericType, values: Vec<NumericValue>) -> Self {
        CanonicalNumeral {
            kind,
            values,
            literal: None,
            measure: None,
            operator: None,
        }
    }

    pub fn scalar(value: NumericValue) -> Self {
        Self::bare(Self::scalar_type(&value), vec![value])
    }

    pub fn scalar_type(value: &NumericValue) -> NumericType {
        if value.is_negative() {
            NumericType::NegativeNumber
        } else if value.abs() >= NumericValue::power_of_ten(4) {
            NumericType::LargeUnit
        } else {
            NumericType::Decimal
        }
    }

    /// Endpoints are stored low first.
    pub fn range(a: NumericValue, b: NumericValue) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Self::bare(NumericType::Range, vec![lo, hi])
    }

    pub fn fraction(
        numerator: NumericValue,
        denominator: NumericValue,
    ) -> Result<Self, CanonicalError> {
        if denominator.is_zero() {
            return Err(CanonicalError::ZeroDenominator);
        }
        Ok(Self::bare(NumericType::Fraction, vec![numerator, denominator]))
    }

    pub fn ratio(a: NumericValue, b: NumericValue) -> Self {
        Self::bare(NumericType::Ratio, vec![a, b])
    }

    pub fn formula(operator: Operator, operands: Vec<NumericValue>) -> Result<Self, CanonicalError> {
        if operands.len() < 2 {
            return Err(CanonicalError::ShortFormula);
        }
        let mut c = Self::bare(NumericType::Formula, operands);
        c.operator = Some(operator);
        Ok(c)
    }

    pub fn ordinal(value: NumericValue) -> Result<Self, CanonicalError> {
        if !value.is_integer() || value.is_negative() {
            return Err(CanonicalError::BadOrdinal(value));
        }
        Ok(Self::bare(NumericType::Ordinal, vec![value]))
    }

    pub fn number_string(literal: impl Into<String>) -> Result<Self, CanonicalError> {
        let literal = literal.into();
        if literal.is_empty() {
            return Err(CanonicalError::EmptyLiteral);
        }
        let mut c = Self::bare(NumericType::NumberString, Vec::new());
        c.literal = Some(literal);
        Ok(c)
    }

    pub fn special(measure: Measure, value: NumericValue) -> Self {
        let mut c = Self::bare(NumericType::Special, vec![value]);
        c.measure = Some(measure);
        c
    }

    pub fn kind(&self) -> NumericType {
        self.kind
    }

    pub fn values(&self) -> &[NumericValue] {
        &self.values
    }

    /// The single value of a scalar, ordinal or special.
    pub fn value(&self) -> Option<&NumericValue> {
        match self.values.as_slice() {
            [v] => Some(v),
            _ => None,
        }
    }

    pub fn literal(&self) -> Option<&str> {
        self.literal.as_deref()
    }

    pub fn measure(&self) -> Option<Measure> {
        self.measure
    }

    pub fn operator(&self) -> Option<Operator> {
        self.operator
    }

    pub fn is_scalar(&self) -> bool {
        self.kind.is_scalar()
    }
}

impl fmt::Display for CanonicalNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(lit) = &self.literal {
            return write!(f, "{}({lit:?})", self.kind);
        }
        let vals: Vec<String> = self.values.iter().map(|v| v.to_plain_string()).collect();
        write!(f, "{}({})", self.kind, vals.join(", "))?;
        if let Some(m) = self.measure {
            write!(f, "[{m:?}]")?;
        }
        if let Some(op) = self.operator {
            write!(f, "[{op:?}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawCanonical {
    #[serde(rename = "type")]
    kind: NumericType,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    values: Vec<NumericValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    literal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    measure: Option<Measure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    operator: Option<Operator>,
}

impl From<CanonicalNumeral> for RawCanonical {
    fn from(c: CanonicalNumeral) -> Self {
        RawCanonical {
            kind: c.kind,
            values: c.values,
            literal: c.literal,
            measure: c.measure,
            operator: c.operator,
        }
    }
}

impl TryFrom<RawCanonical> for CanonicalNumeral {
    type Error = CanonicalError;

    fn try_from(raw: RawCanonical) -> Result<Self, Self::Error> {
        let shape = |expected| CanonicalError::Shape {
            kind: raw.kind,
            expected,
        };
        let mut vals = raw.values.clone().into_iter();
        let c = match raw.kind {
            NumericType::NumberString => {
                CanonicalNumeral::number_string(raw.literal.clone().ok_or(shape("a literal"))?)?
            }
            NumericType::Range | NumericType::Ratio | NumericType::Fraction => {
                if raw.values.len() != 2 {
                    return Err(shape("two values"));
                }
                let (a, b) = (vals.next().unwrap(), vals.next().unwrap());
                match raw.kind {
                    NumericType::Range => CanonicalNumeral::range(a, b),
                    NumericType::Ratio => CanonicalNumeral::ratio(a, b),
                    _ => CanonicalNumeral::fraction(a, b)?,
                }
            }
            NumericType::Formula => {
                CanonicalNumeral::formula(raw.operator.ok_or(shape("an operator"))?, raw.values)?
            }
            NumericType::Special => {
                if raw.values.len() != 1 {
                    return Err(shape("one value"));
                }
                CanonicalNumeral::special(
                    raw.measure.ok_or(shape("a measure"))?,
                    vals.next().unwrap(),
                )
            }
            NumericType::Ordinal => {
                if raw.values.len() != 1 {
                    return Err(shape("one value"));
                }
                CanonicalNumeral::ordinal(vals.next().unwrap())?
            }
            NumericType::Decimal | NumericType::LargeUnit | NumericType::NegativeNumber => {
                if raw.values.len() != 1 {
                    return Err(shape("one value"));
                }
                let c = CanonicalNumeral::scalar(vals.next().unwrap());
                if c.kind != raw.kind {
                    return Err(shape("a value consistent with its scalar tag"));
                }
                c
            }
        };
        Ok(c)
    }
}
