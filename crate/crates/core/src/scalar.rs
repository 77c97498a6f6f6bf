//! Exact rational scalars.
//!
//! Every quantity in the toolkit (capacities, consumption rates, cumulative
//! sums, relative distance factors, distances) is a [`Scalar`]: an
//! unbounded-precision rational kept in lowest terms. Inputs arrive as
//! decimal strings such as `"961.8"` and are converted without loss.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ArpError, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

pub(crate) fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp as usize)
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Scalar(BigRational::from_integer(value.into()))
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn from_ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Scalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(value: BigRational) -> Self {
        Scalar(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }

    /// Nearest `f64`, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Rounds half away from zero to `digits` fractional decimal digits.
    pub fn round_decimal(&self, digits: u32) -> Self {
        let scale = pow10(digits);
        let denom = self.denom();
        let (mut q, r) = (self.numer().abs() * &scale).div_rem(denom);
        if r * 2u32 >= *denom {
            q += 1u32;
        }
        let q = if self.is_negative() { -q } else { q };
        Scalar::from_ratio(q, scale)
    }

    /// The exact decimal expansion, if the denominator only has factors 2
    /// and 5. At least `min_frac_digits` fractional digits are printed.
    pub fn to_exact_decimal(&self, min_frac_digits: u32) -> Option<String> {
        let mut denom = self.denom().clone();
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let (mut twos, mut fives) = (0u32, 0u32);
        while denom.is_even() {
            denom /= &two;
            twos += 1;
        }
        while (&denom % &five).is_zero() {
            denom /= &five;
            fives += 1;
        }
        if !denom.is_one() {
            return None;
        }
        let digits = twos.max(fives).max(min_frac_digits);
        let scaled = self.numer().abs() * pow10(digits) / self.denom();
        Some(render_fixed(self.is_negative(), &scaled, digits))
    }

    /// Exact decimal when it terminates, otherwise `numer/denom`.
    pub fn to_exact_string(&self, min_frac_digits: u32) -> String {
        self.to_exact_decimal(min_frac_digits)
            .unwrap_or_else(|| self.to_string())
    }

    /// Base-10 exponent `e` with `10^e <= |x| < 10^(e+1)`. `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let numer = self.numer().abs();
        let denom = self.denom();
        let mut e = numer.to_string().len() as i64 - denom.to_string().len() as i64;
        // |x| >= 10^e  <=>  numer * 10^-e >= denom
        let ge = |e: i64| -> bool {
            if e >= 0 {
                numer >= denom * pow10(e as u32)
            } else {
                &numer * pow10((-e) as u32) >= *denom
            }
        };
        while !ge(e) {
            e -= 1;
        }
        while ge(e + 1) {
            e += 1;
        }
        Some(e)
    }

    /// Correctly rounded (half away from zero) to `sig` significant
    /// digits: returns the integer mantissa (`sig` digits) and exponent.
    fn significant(&self, sig: u32) -> Option<(BigInt, i64)> {
        assert!(sig >= 1);
        let mut e = self.decimal_exponent()?;
        let shift = sig as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (self.numer().abs() * pow10(shift as u32), self.denom().clone())
        } else {
            (self.numer().abs(), self.denom() * pow10((-shift) as u32))
        };
        let (mut q, r) = num.div_rem(&den);
        if r * 2 >= den {
            q += 1;
        }
        if q == pow10(sig) {
            q = pow10(sig - 1);
            e += 1;
        }
        Some((q, e))
    }

    /// Scientific notation with `sig` significant digits, e.g. `2.68e300`.
    pub fn to_scientific(&self, sig: u32) -> String {
        let Some((mantissa, e)) = self.significant(sig) else {
            return "0".to_string();
        };
        let digits = mantissa.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if digits.len() == 1 {
            format!("{sign}{digits}e{e}")
        } else {
            format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
        }
    }

    /// Plain decimal notation with exactly `sig` significant digits,
    /// correctly rounded.
    pub fn to_significant_decimal(&self, sig: u32) -> String {
        let Some((mantissa, e)) = self.significant(sig) else {
            return "0".to_string();
        };
        let frac = sig as i64 - 1 - e;
        if frac <= 0 {
            let int = mantissa * pow10((-frac) as u32);
            let sign = if self.is_negative() { "-" } else { "" };
            return format!("{sign}{int}");
        }
        render_fixed(self.is_negative(), &mantissa, frac as u32)
    }
}

fn render_fixed(negative: bool, scaled: &BigInt, frac_digits: u32) -> String {
    let mut s = scaled.to_string();
    let frac = frac_digits as usize;
    if s.len() <= frac {
        s = "0".repeat(frac + 1 - s.len()) + &s;
    }
    let (int, fr) = s.split_at(s.len() - frac);
    let sign = if negative && scaled.sign() != Sign::NoSign {
        "-"
    } else {
        ""
    };
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{fr}")
    }
}

impl FromStr for Scalar {
    type Err = ArpError;

    /// Accepts `[-+]digits[.digits]` or `[-+]digits/digits`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || ArpError::InvalidScalar(text.to_string());
        let s = text.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = parse_signed_digits(n).ok_or_else(bad)?;
            let d: BigInt = parse_signed_digits(d).ok_or_else(bad)?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar::from_ratio(n, d));
        }
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int) || !all_digits(frac) || (body.contains('.') && frac.is_empty()) {
            return Err(bad());
        }
        let joined = format!("{int}{frac}");
        let magnitude = BigInt::parse_bytes(joined.as_bytes(), 10).ok_or_else(bad)?;
        let numer = if negative { -magnitude } else { magnitude };
        Ok(Scalar::from_ratio(numer, pow10(frac.len() as u32)))
    }
}

fn parse_signed_digits(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

impl fmt::Display for Scalar {
    /// Integers print bare, everything else as `numer/denom`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_integer(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(s("961.8"), Scalar::from_ratio(4809, 5));
        assert_eq!(s("4.0"), Scalar::from_integer(4));
        assert_eq!(s("-0.25"), Scalar::from_ratio(-1, 4));
        assert_eq!(s(".5"), Scalar::from_ratio(1, 2));
        assert_eq!(s("379/70"), Scalar::from_ratio(379, 70));
        assert_eq!(s("0.000001"), Scalar::from_ratio(1, 1_000_000));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", "1.", "1e3", "abc", "1.2.3", "3/0", "/4", "1/-", "nan"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = Scalar::from_ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn exact_decimal_rendering() {
        assert_eq!(s("961.8").to_exact_decimal(1).unwrap(), "961.8");
        assert_eq!(s("4").to_exact_decimal(1).unwrap(), "4.0");
        assert_eq!(s("2").to_exact_decimal(0).unwrap(), "2");
        assert_eq!(s("-0.05").to_exact_decimal(0).unwrap(), "-0.05");
        assert_eq!(Scalar::from_ratio(1, 3).to_exact_decimal(0), None);
        assert_eq!(Scalar::from_ratio(1, 3).to_exact_string(0), "1/3");
    }

    #[test]
    fn half_up_rounding() {
        assert_eq!(Scalar::from_ratio(442401, 1001).round_decimal(1), s("442.0"));
        assert_eq!(s("0.25").round_decimal(1), s("0.3"));
        assert_eq!(s("-0.25").round_decimal(1), s("-0.3"));
        assert_eq!(s("0.24").round_decimal(1), s("0.2"));
    }

    #[test]
    fn significant_digits() {
        let x = Scalar::from_ratio(379, 70);
        assert_eq!(x.to_significant_decimal(12), "5.41428571429");
        assert_eq!(Scalar::from_ratio(17, 5).to_significant_decimal(12), "3.40000000000");
        assert_eq!(s("0.000123456").to_significant_decimal(3), "0.000123");
        assert_eq!(s("123456").to_significant_decimal(3), "123000");
        assert_eq!(s("9.996").to_scientific(3), "1.00e1");
        assert_eq!(s("4").to_scientific(3), "4.00e0");
        assert_eq!(s("4").to_scientific(1), "4e0");
        assert_eq!(Scalar::zero().to_scientific(3), "0");
    }

    #[test]
    fn exponent_detection() {
        assert_eq!(s("1").decimal_exponent(), Some(0));
        assert_eq!(s("9.99").decimal_exponent(), Some(0));
        assert_eq!(s("10").decimal_exponent(), Some(1));
        assert_eq!(s("0.01").decimal_exponent(), Some(-2));
        assert_eq!(Scalar::from_ratio(1, 3).decimal_exponent(), Some(-1));
    }
}
