//! Exact signed decimal values.
//!
//! A [`NumericValue`] is `sign × significand × 10^exponent` with an
//! arbitrary-precision significand. Values are kept normalized (trailing
//! zeros folded into the exponent, zero is always `+0 × 10^0`) so equality
//! and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Malformed decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal at offset {offset}: {message}")]
pub struct ValueParseError {
    /// Character offset of the offending input.
    pub offset: usize,
    pub message: &'static str,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericValue {
    negative: bool,
    significand: BigUint,
    exponent: i64,
}

fn pow10(k: u32) -> BigUint {
    BigUint::from(10u32).pow(k)
}

impl NumericValue {
    pub fn zero() -> Self {
        NumericValue {
            negative: false,
            significand: BigUint::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from(1u64)
    }

    /// Builds and normalizes `(-1)^negative × significand × 10^exponent`.
    pub fn from_parts(negative: bool, significand: BigUint, exponent: i64) -> Self {
        let mut v = NumericValue {
            negative,
            significand,
            exponent,
        };
        v.normalize();
        v
    }

    /// `10^k`.
    pub fn power_of_ten(k: i64) -> Self {
        Self::from_parts(false, BigUint::one(), k)
    }

    pub fn from_digit(d: u8) -> Self {
        Self::from(u64::from(d))
    }

    fn normalize(&mut self) {
        if self.significand.is_zero() {
            self.negative = false;
            self.exponent = 0;
            return;
        }
        let ten = BigUint::from(10u32);
        loop {
            let (q, r) = self.significand.div_rem(&ten);
            if !r.is_zero() {
                break;
            }
            self.significand = q;
            self.exponent += 1;
        }
    }

    /// Parses `[+-]digits[.digits]`, where the integer digits may be grouped
    /// by commas in threes (`2,820,000,000`).
    pub fn parse_decimal(text: &str) -> Result<Self, ValueParseError> {
        let chars: Vec<char> = text.chars().collect();
        let err = |offset, message| ValueParseError { offset, message };
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        let mut i = 0;
        let mut negative = false;
        if chars[0] == '-' || chars[0] == '+' {
            negative = chars[0] == '-';
            i = 1;
        }
        let int_start = i;
        let mut int_digits = String::new();
        let mut group_len = 0usize;
        let mut grouped = false;
        while i < chars.len() {
            let c = chars[i];
            if c.is_ascii_digit() {
                int_digits.push(c);
                group_len += 1;
                if grouped && group_len > 3 {
                    return Err(err(i, "digit group longer than three"));
                }
            } else if c == ',' {
                if group_len == 0 || (!grouped && group_len > 3) || (grouped && group_len != 3) {
                    return Err(err(i, "misplaced grouping comma"));
                }
                grouped = true;
                group_len = 0;
            } else {
                break;
            }
            i += 1;
        }
        if int_digits.is_empty() {
            return Err(err(int_start, "expected a digit"));
        }
        if grouped && group_len != 3 {
            return Err(err(i.saturating_sub(1), "misplaced grouping comma"));
        }
        let mut frac_digits = String::new();
        if i < chars.len() && chars[i] == '.' {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                frac_digits.push(chars[i]);
                i += 1;
            }
            if frac_digits.is_empty() {
                return Err(err(i, "expected digits after decimal point"));
            }
        }
        if i < chars.len() {
            return Err(err(i, "unexpected character"));
        }
        let mut all = int_digits;
        all.push_str(&frac_digits);
        let significand = BigUint::parse_bytes(all.as_bytes(), 10).expect("ascii digits");
        Ok(Self::from_parts(
            negative,
            significand,
            -(frac_digits.len() as i64),
        ))
    }

    /// `self × 10^k`, exact.
    pub fn scale(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        NumericValue {
            negative: self.negative,
            significand: self.significand.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.significand.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_integer(&self) -> bool {
        self.exponent >= 0
    }

    pub fn abs(&self) -> Self {
        NumericValue {
            negative: false,
            ..self.clone()
        }
    }

    pub fn significand(&self) -> &BigUint {
        &self.significand
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Digits after the decimal point in the shortest exact rendering.
    pub fn decimal_places(&self) -> u32 {
        if self.exponent < 0 {
            (-self.exponent) as u32
        } else {
            0
        }
    }

    /// Magnitude as an integer, when the value has no fractional part.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if self.exponent < 0 {
            return None;
        }
        Some(&self.significand * pow10(self.exponent as u32))
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.negative {
            return None;
        }
        self.to_biguint()?.to_u64()
    }

    /// Integer part and fractional digit string of the magnitude.
    pub fn split_magnitude(&self) -> (BigUint, String) {
        if self.exponent >= 0 {
            return (self.to_biguint().expect("integer"), String::new());
        }
        let places = (-self.exponent) as usize;
        let digits = self.significand.to_str_radix(10);
        if digits.len() > places {
            let (int, frac) = digits.split_at(digits.len() - places);
            (
                BigUint::parse_bytes(int.as_bytes(), 10).expect("digits"),
                frac.to_string(),
            )
        } else {
            let mut frac = "0".repeat(places - digits.len());
            frac.push_str(&digits);
            (BigUint::zero(), frac)
        }
    }

    /// Shortest exact rendering without grouping, e.g. `-0.143`.
    pub fn to_plain_string(&self) -> String {
        self.render(false)
    }

    /// Rendering with comma groups of three in the integer part.
    pub fn to_grouped_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, grouped: bool) -> String {
        let (int, frac) = self.split_magnitude();
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        let int = int.to_str_radix(10);
        if grouped {
            out.push_str(&group_thousands(&int));
        } else {
            out.push_str(&int);
        }
        if !frac.is_empty() {
            out.push('.');
            out.push_str(&frac);
        }
        out
    }

    fn aligned_magnitudes(&self, other: &Self) -> (BigUint, BigUint, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.significand * pow10((self.exponent - e) as u32);
        let b = &other.significand * pow10((other.exponent - e) as u32);
        (a, b, e)
    }
}

/// Inserts commas every three digits counted from the right.
pub fn group_thousands(digits: &str) -> String {
    let bytes = digits.as_bytes();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, b) in bytes.iter().enumerate() {
        if i > 0 && (bytes.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(*b as char);
    }
    out
}

impl From<u64> for NumericValue {
    fn from(n: u64) -> Self {
        Self::from_parts(false, BigUint::from(n), 0)
    }
}

impl From<i64> for NumericValue {
    fn from(n: i64) -> Self {
        Self::from_parts(n < 0, BigUint::from(n.unsigned_abs()), 0)
    }
}

impl From<BigUint> for NumericValue {
    fn from(n: BigUint) -> Self {
        Self::from_parts(false, n, 0)
    }
}

impl FromStr for NumericValue {
    type Err = ValueParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_decimal(s)
    }
}

impl Ord for NumericValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, true) => return Ordering::Greater,
            (true, false) => return Ordering::Less,
            _ => {}
        }
        let (a, b, _) = self.aligned_magnitudes(other);
        let ord = a.cmp(&b);
        if self.negative {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for NumericValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for NumericValue {
    type Output = NumericValue;

    fn neg(mut self) -> NumericValue {
        if !self.is_zero() {
            self.negative = !self.negative;
        }
        self
    }
}

impl Add for &NumericValue {
    type Output = NumericValue;

    fn add(self, rhs: &NumericValue) -> NumericValue {
        let (a, b, e) = self.aligned_magnitudes(rhs);
        if self.negative == rhs.negative {
            return NumericValue::from_parts(self.negative, a + b, e);
        }
        match a.cmp(&b) {
            Ordering::Equal => NumericValue::zero(),
            Ordering::Greater => NumericValue::from_parts(self.negative, a - b, e),
            Ordering::Less => NumericValue::from_parts(rhs.negative, b - a, e),
        }
    }
}

impl Add for NumericValue {
    type Output = NumericValue;

    fn add(self, rhs: NumericValue) -> NumericValue {
        &self + &rhs
    }
}

impl Sub for &NumericValue {
    type Output = NumericValue;

    fn sub(self, rhs: &NumericValue) -> NumericValue {
        self + &(-rhs.clone())
    }
}

impl Mul for &NumericValue {
    type Output = NumericValue;

    fn mul(self, rhs: &NumericValue) -> NumericValue {
        NumericValue::from_parts(
            self.negative != rhs.negative,
            &self.significand * &rhs.significand,
            self.exponent + rhs.exponent,
        )
    }
}

impl Mul for NumericValue {
    type Output = NumericValue;

    fn mul(self, rhs: NumericValue) -> NumericValue {
        &self * &rhs
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain_string())
    }
}

impl fmt::Debug for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericValue({})", self.to_plain_string())
    }
}

impl Serialize for NumericValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_plain_string())
    }
}

impl<'de> Deserialize<'de> for NumericValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        NumericValue::parse_decimal(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> NumericValue {
        s.parse().unwrap()
    }

    #[test]
    fn grouped_billions() {
        let x = v("2,820,000,000");
        assert_eq!(x.significand(), &BigUint::from(282u32));
        assert_eq!(x.exponent(), 7);
        assert_eq!(x, v("2.82").scale(9));
        assert_eq!(x.to_plain_string(), "2820000000");
        assert_eq!(x.to_grouped_string(), "2,820,000,000");
    }

    #[test]
    fn zero_is_positive() {
        for s in ["0", "-0", "+0.000", "0,000"] {
            let z = v(s);
            assert!(z.is_zero());
            assert!(!z.is_negative());
            assert_eq!(z.exponent(), 0);
            assert_eq!(z, NumericValue::zero());
        }
        assert_eq!(-NumericValue::zero(), NumericValue::zero());
    }

    #[test]
    fn negative_105() {
        let x = v("-105");
        assert!(x.is_negative());
        assert_eq!(x.abs(), NumericValue::from(105u64));
        assert_eq!(x.to_plain_string(), "-105");
    }

    #[test]
    fn malformed_inputs_report_offset() {
        let cases = [
            ("12a", 2),
            ("1..2", 2),
            ("1,23", 3),
            ("1,2345", 5),
            (",123", 0),
            ("1234,567", 4),
            ("1.", 2),
            ("", 0),
            ("-", 1),
        ];
        for (s, off) in cases {
            let e = NumericValue::parse_decimal(s).unwrap_err();
            assert_eq!(e.offset, off, "{s}: {e}");
        }
    }

    #[test]
    fn leading_zeros_do_not_change_value() {
        assert_eq!(v("007"), v("7"));
        assert_eq!(v("0.50"), v("5").scale(-1));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(NumericValue::one().scale(8), v("100000000"));
        let x = v("2.82");
        assert_eq!(x.scale(0), x);
        assert_eq!(x.scale(9).to_plain_string(), "2820000000");
        assert_eq!(v("1.43").scale(8), v("143000000"));
    }

    #[test]
    fn compare_revenue_values() {
        assert_eq!(
            v("13400000000").cmp(&v("3400000000")),
            Ordering::Greater
        );
        let x = v("-3.25");
        assert_eq!(x.cmp(&x), Ordering::Equal);
        assert!(v("-10") < v("-9.99"));
        assert!(v("0.001") > v("-1000"));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&v("28") + &v("0.2"), v("28.2"));
        assert_eq!(&v("5") - &v("7.5"), v("-2.5"));
        assert_eq!(&v("1.5") * &v("-4"), v("-6"));
        assert_eq!(&v("3") + &v("-3"), NumericValue::zero());
    }

    #[test]
    fn split_small_fraction() {
        let (i, f) = v("0.000143").split_magnitude();
        assert!(i.is_zero());
        assert_eq!(f, "000143");
        assert_eq!(v("0.000143").to_plain_string(), "0.000143");
        assert_eq!(v("1234567.5").to_grouped_string(), "1,234,567.5");
    }

    #[test]
    fn range_covers_pico_to_exa() {
        let small = NumericValue::power_of_ten(-12);
        let big = NumericValue::power_of_ten(18);
        assert_eq!(small.to_plain_string(), format!("0.{}1", "0".repeat(11)));
        assert_eq!(big.to_plain_string(), format!("1{}", "0".repeat(18)));
        assert!(small < big);
    }
}
