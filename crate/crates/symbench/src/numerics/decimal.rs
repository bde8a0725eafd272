//! `ExactDecimal`: scaled-integer decimals that never round.
//!
//! The represented value is `sign * magnitude / 10^scale`. The scale is the
//! declared fractional-digit count and is never silently reduced: `3.750`
//! keeps scale 3 even though it equals `3.75`. Equality compares values
//! after rescaling to a common scale.

use super::{DigitNumber, NumericsError};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecimalOp {
    Add,
    Sub,
    Mul,
}

/// Exact signed decimal: scaled base-10 integer plus fractional-digit count.
#[derive(Debug, Clone)]
pub struct ExactDecimal {
    negative: bool,
    magnitude: DigitNumber,
    scale: u32,
}

impl ExactDecimal {
    pub fn new(negative: bool, magnitude: DigitNumber, scale: u32) -> Result<Self, NumericsError> {
        if magnitude.base() != 10 {
            return Err(NumericsError::BaseMismatch { left: magnitude.base(), right: 10 });
        }
        Ok(Self { negative: negative && !magnitude.is_zero(), magnitude, scale })
    }

    pub fn zero(scale: u32) -> Self {
        Self { negative: false, magnitude: DigitNumber::zero(10).unwrap(), scale }
    }

    /// Parse `-?digits[.digits]`; the scale is the literal fractional length.
    pub fn parse(text: &str) -> Result<Self, NumericsError> {
        let (negative, rest) = match text.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, text),
        };
        let (whole, frac) = match rest.split_once('.') {
            Some((w, f)) => (w, f),
            None => (rest, ""),
        };
        if whole.is_empty() {
            return Err(NumericsError::Parse(format!("missing whole part in {text:?}")));
        }
        if rest.contains('.') && frac.is_empty() {
            return Err(NumericsError::Parse(format!("trailing decimal point in {text:?}")));
        }
        let digits = format!("{whole}{frac}");
        let magnitude = DigitNumber::from_decimal_str(&digits)?;
        let scale = u32::try_from(frac.len())
            .map_err(|_| NumericsError::Parse("fractional part too long".into()))?;
        Self::new(negative, magnitude, scale)
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn magnitude(&self) -> &DigitNumber {
        &self.magnitude
    }

    /// Same value expressed with a larger scale.
    pub fn rescaled(&self, scale: u32) -> Self {
        assert!(scale >= self.scale, "rescaling may only increase the scale");
        if scale == self.scale || self.is_zero() {
            return Self { negative: self.negative, magnitude: self.magnitude.clone(), scale };
        }
        let mut digits = self.magnitude.digits().to_vec();
        digits.extend(std::iter::repeat(0u8).take((scale - self.scale) as usize));
        Self {
            negative: self.negative,
            magnitude: DigitNumber::from_digits(10, digits).unwrap(),
            scale,
        }
    }

    /// Exact add/sub/mul. Add and sub carry scale max(a, b); mul carries
    /// scale a + b.
    pub fn apply(op: DecimalOp, a: &Self, b: &Self) -> Self {
        match op {
            DecimalOp::Add => a.add(b),
            DecimalOp::Sub => a.sub(b),
            DecimalOp::Mul => a.mul(b),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let scale = self.scale.max(other.scale);
        let a = self.rescaled(scale);
        let b = other.rescaled(scale);
        if a.negative == b.negative {
            let magnitude = a.magnitude.add(&b.magnitude).unwrap();
            return Self::new(a.negative, magnitude, scale).unwrap();
        }
        match a.magnitude.cmp_value(&b.magnitude).unwrap() {
            Ordering::Equal => Self::zero(scale),
            Ordering::Greater => {
                Self::new(a.negative, a.magnitude.sub(&b.magnitude).unwrap(), scale).unwrap()
            }
            Ordering::Less => {
                Self::new(b.negative, b.magnitude.sub(&a.magnitude).unwrap(), scale).unwrap()
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let negated = Self {
            negative: !other.negative && !other.is_zero(),
            magnitude: other.magnitude.clone(),
            scale: other.scale,
        };
        self.add(&negated)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let scale = self.scale + other.scale;
        let magnitude = self.magnitude.mul(&other.magnitude).unwrap();
        Self::new(self.negative != other.negative, magnitude, scale).unwrap()
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        let a = self.rescaled(scale);
        let b = other.rescaled(scale);
        match (a.negative, b.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => a.magnitude.cmp_value(&b.magnitude).unwrap(),
            (true, true) => b.magnitude.cmp_value(&a.magnitude).unwrap(),
        }
    }
}

/// Value equality after rescaling to a common scale: `3.750 == 3.75`.
impl PartialEq for ExactDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Eq for ExactDecimal {}

impl fmt::Display for ExactDecimal {
    /// Exactly `scale` fractional digits, no sign for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        let digits = self.magnitude.to_string();
        if self.scale == 0 {
            return write!(f, "{digits}");
        }
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = padded.len() - scale;
        write!(f, "{}.{}", &padded[..split], &padded[split..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dec(s: &str) -> ExactDecimal {
        ExactDecimal::parse(s).unwrap()
    }

    #[test]
    fn exact_tenths() {
        let sum = dec("0.1").add(&dec("0.2"));
        assert_eq!(sum, dec("0.3"));
        assert_eq!(sum.to_string(), "0.3");
    }

    #[test]
    fn mul_scale_is_sum_of_scales() {
        let p = dec("1.5").mul(&dec("2.0"));
        assert_eq!(p.scale(), 2);
        assert_eq!(p.to_string(), "3.00");
        assert_eq!(p, dec("3.0"));
    }

    #[test]
    fn carry_across_the_point() {
        let s = dec("9.999999").add(&dec("0.000001"));
        assert_eq!(s.to_string(), "10.000000");
    }

    #[test]
    fn subtraction_signs() {
        assert_eq!(dec("1.5").sub(&dec("2.25")).to_string(), "-0.75");
        assert_eq!(dec("2.25").sub(&dec("1.5")).to_string(), "0.75");
        assert_eq!(dec("1.5").sub(&dec("1.50")).to_string(), "0.00");
        // No negative zero.
        assert!(!dec("1.5").sub(&dec("1.5")).is_negative());
    }

    #[test]
    fn value_equality_ignores_trailing_zeros() {
        assert_eq!(dec("3.750"), dec("3.75"));
        assert_ne!(dec("3.751"), dec("3.75"));
        assert_eq!(dec("-0.50"), dec("-0.5"));
        assert_eq!(dec("0.000"), dec("0"));
    }

    #[test]
    fn scale_never_silently_reduced() {
        assert_eq!(dec("0.50").scale(), 2);
        assert_eq!(dec("0.50").to_string(), "0.50");
        assert_eq!(dec("1.25").mul(&dec("4.0")).to_string(), "5.000");
    }

    #[test]
    fn parse_errors() {
        assert!(ExactDecimal::parse("").is_err());
        assert!(ExactDecimal::parse(".5").is_err());
        assert!(ExactDecimal::parse("1.").is_err());
        assert!(ExactDecimal::parse("1.2.3").is_err());
        assert!(ExactDecimal::parse("a.b").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(v in -999_999_999i64..=999_999_999, scale in 0u32..=6) {
            let text = {
                let mag = v.unsigned_abs().to_string();
                let scale_us = scale as usize;
                let padded = if mag.len() <= scale_us {
                    format!("{}{}", "0".repeat(scale_us + 1 - mag.len()), mag)
                } else {
                    mag
                };
                let (sign, body) = if v < 0 { ("-", padded) } else { ("", padded) };
                if scale == 0 {
                    format!("{sign}{body}")
                } else {
                    let split = body.len() - scale_us;
                    format!("{sign}{}.{}", &body[..split], &body[split..])
                }
            };
            let parsed = ExactDecimal::parse(&text).unwrap();
            // Zero never renders a sign, otherwise rendering is verbatim.
            if v == 0 {
                prop_assert_eq!(parsed.to_string(), text.trim_start_matches('-'));
            } else {
                prop_assert_eq!(parsed.to_string(), text);
            }
        }

        #[test]
        fn matches_scaled_host_arithmetic(
            a in -99_999i64..=99_999,
            b in -99_999i64..=99_999,
            sa in 0u32..=4,
            sb in 0u32..=4,
        ) {
            let da = scaled(a, sa);
            let db = scaled(b, sb);
            let common = sa.max(sb);
            let (ra, rb) = (
                a * 10i64.pow(common - sa),
                b * 10i64.pow(common - sb),
            );
            prop_assert_eq!(da.add(&db), scaled(ra + rb, common));
            prop_assert_eq!(da.sub(&db), scaled(ra - rb, common));
            prop_assert_eq!(da.mul(&db), scaled(a * b, sa + sb));
        }
    }

    fn scaled(scaled_value: i64, scale: u32) -> ExactDecimal {
        ExactDecimal::new(
            scaled_value < 0,
            DigitNumber::from_u128(scaled_value.unsigned_abs().into(), 10).unwrap(),
            scale,
        )
        .unwrap()
    }
}
