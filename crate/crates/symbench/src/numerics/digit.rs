//! `DigitNumber`: exact natural numbers as base-p digit sequences.

use super::NumericsError;
use std::cmp::Ordering;
use std::fmt;

/// An exact non-negative integer stored as its base-p digits,
/// most-significant first.
///
/// Canonical form: no leading zero digit, except zero itself which is the
/// single digit `0`. Every digit is strictly less than the base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitNumber {
    base: u32,
    digits: Vec<u8>,
}

impl DigitNumber {
    /// Zero in the given base (single digit `0`).
    pub fn zero(base: u32) -> Result<Self, NumericsError> {
        check_base(base)?;
        Ok(Self { base, digits: vec![0] })
    }

    /// Build from explicit most-significant-first digits.
    pub fn from_digits(base: u32, digits: Vec<u8>) -> Result<Self, NumericsError> {
        check_base(base)?;
        if digits.is_empty() {
            return Err(NumericsError::Parse("empty digit sequence".into()));
        }
        for &d in &digits {
            if u32::from(d) >= base {
                return Err(NumericsError::DigitOutOfRange { digit: u32::from(d), base });
            }
        }
        Ok(Self { base, digits }.normalized())
    }

    /// Convert a machine integer into base-p digits.
    pub fn from_u128(value: u128, base: u32) -> Result<Self, NumericsError> {
        check_base(base)?;
        if value == 0 {
            return Self::zero(base);
        }
        let mut digits = Vec::new();
        let mut v = value;
        while v > 0 {
            digits.push((v % u128::from(base)) as u8);
            v /= u128::from(base);
        }
        digits.reverse();
        Ok(Self { base, digits })
    }

    /// Parse a plain base-10 digit string (the canonical text rendering:
    /// no signs, no separators).
    pub fn from_decimal_str(text: &str) -> Result<Self, NumericsError> {
        if text.is_empty() {
            return Err(NumericsError::Parse("empty string".into()));
        }
        let mut digits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c.to_digit(10) {
                Some(d) => digits.push(d as u8),
                None => {
                    return Err(NumericsError::Parse(format!(
                        "unexpected character {c:?} in decimal string"
                    )))
                }
            }
        }
        Self::from_digits(10, digits)
    }

    fn normalized(mut self) -> Self {
        let nonzero = self.digits.iter().position(|&d| d != 0);
        match nonzero {
            Some(0) => {}
            Some(k) => {
                self.digits.drain(..k);
            }
            None => self.digits = vec![0],
        }
        self
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Most-significant-first digits.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    /// Number of digits; 1 for zero by convention. Equals
    /// floor(1 + log_p(value)) for value >= 1.
    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    /// The value as a machine integer, if it fits.
    pub fn value_u128(&self) -> Option<u128> {
        let mut acc: u128 = 0;
        for &d in &self.digits {
            acc = acc.checked_mul(u128::from(self.base))?;
            acc = acc.checked_add(u128::from(d))?;
        }
        Some(acc)
    }

    fn check_same_base(&self, other: &Self) -> Result<(), NumericsError> {
        if self.base != other.base {
            return Err(NumericsError::BaseMismatch { left: self.base, right: other.base });
        }
        Ok(())
    }

    /// Magnitude comparison. Errors on base mismatch.
    pub fn cmp_value(&self, other: &Self) -> Result<Ordering, NumericsError> {
        self.check_same_base(other)?;
        if self.digits.len() != other.digits.len() {
            return Ok(self.digits.len().cmp(&other.digits.len()));
        }
        Ok(self.digits.cmp(&other.digits))
    }

    /// Schoolbook addition with carry. Result never exceeds
    /// max(digit_count(a), digit_count(b)) + 1 digits.
    pub fn add(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_same_base(other)?;
        let base = self.base;
        let (long, short) = if self.digits.len() >= other.digits.len() {
            (&self.digits, &other.digits)
        } else {
            (&other.digits, &self.digits)
        };
        let mut out = Vec::with_capacity(long.len() + 1);
        let mut carry: u32 = 0;
        for i in 0..long.len() {
            let a = u32::from(long[long.len() - 1 - i]);
            let b = if i < short.len() { u32::from(short[short.len() - 1 - i]) } else { 0 };
            let t = a + b + carry;
            out.push((t % base) as u8);
            carry = t / base;
        }
        if carry > 0 {
            out.push(carry as u8);
        }
        out.reverse();
        Ok(Self { base: self.base, digits: out }.normalized())
    }

    /// Magnitude subtraction (self - other). Errors on underflow.
    pub fn sub(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_same_base(other)?;
        if self.cmp_value(other)? == Ordering::Less {
            return Err(NumericsError::Underflow);
        }
        let base = i64::from(self.base);
        let n = self.digits.len();
        let mut out = vec![0u8; n];
        let mut borrow: i64 = 0;
        for i in 0..n {
            let a = i64::from(self.digits[n - 1 - i]);
            let b = if i < other.digits.len() {
                i64::from(other.digits[other.digits.len() - 1 - i])
            } else {
                0
            };
            let mut t = a - b - borrow;
            if t < 0 {
                t += base;
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[n - 1 - i] = t as u8;
        }
        Ok(Self { base: self.base, digits: out }.normalized())
    }

    /// Schoolbook multiplication. Result never exceeds
    /// digit_count(a) + digit_count(b) digits.
    pub fn mul(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_same_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.base);
        }
        let base = u64::from(self.base);
        let n = self.digits.len();
        let m = other.digits.len();
        // Cell accumulators: at most min(n, m) * (base-1)^2 + carry per cell,
        // which stays far below u64 for any practical digit count.
        let mut acc = vec![0u64; n + m];
        for i in 0..n {
            let a = u64::from(self.digits[n - 1 - i]);
            if a == 0 {
                continue;
            }
            for j in 0..m {
                let b = u64::from(other.digits[m - 1 - j]);
                acc[i + j] += a * b;
            }
        }
        let mut out = Vec::with_capacity(n + m);
        let mut carry: u64 = 0;
        for cell in acc {
            let t = cell + carry;
            out.push((t % base) as u8);
            carry = t / base;
        }
        while carry > 0 {
            out.push((carry % base) as u8);
            carry /= base;
        }
        out.reverse();
        Ok(Self { base: self.base, digits: out }.normalized())
    }
}

impl fmt::Display for DigitNumber {
    /// Canonical rendering: plain digit string for bases up to 10,
    /// bracketed digit list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base <= 10 {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            write!(f, "[")?;
            for (i, &d) in self.digits.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, "]")
        }
    }
}

fn check_base(base: u32) -> Result<(), NumericsError> {
    if !(2..=256).contains(&base) {
        return Err(NumericsError::InvalidBase(base));
    }
    Ok(())
}

/// Digit count of a machine integer in the given base
/// (floor(1 + log_p(value)); 1 for zero by convention).
pub fn digit_count_of(value: u128, base: u32) -> Result<u32, NumericsError> {
    check_base(base)?;
    if value == 0 {
        return Ok(1);
    }
    let mut v = value;
    let mut d = 0u32;
    while v > 0 {
        v /= u128::from(base);
        d += 1;
    }
    Ok(d)
}

/// Bits to encode a number symbolically: floor(1 + log_p(N)) * log2(p).
/// Rejects zero; callers that need it apply the one-digit zero convention
/// themselves.
pub fn number_encoding_bits(value: u128, base: u32) -> Result<f64, NumericsError> {
    if value == 0 {
        return Err(NumericsError::ZeroUndefined);
    }
    let d = digit_count_of(value, base)?;
    Ok(f64::from(d) * f64::from(base).log2())
}
