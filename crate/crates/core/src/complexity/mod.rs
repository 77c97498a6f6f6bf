//! How many sequential feasible orders can there be?
//!
//! In the worst case `Q* = 2^(n−2)`. For complete reverse order fleets an
//! index `m` exists beyond which the farthest flyer dominates every other
//! airplane, and the count collapses to
//!
//! ```text
//! Q^(m) = C(n−2, 0) + C(n−2, 1) + … + C(n−2, m−1)  <  (m²/n)·C(n, m)
//! ```
//!
//! once `n > 2m`. This module holds the exact big-number arithmetic for
//! these bounds and the two estimators of `m`.

mod estimate;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{ArpError, Result};
use crate::scalar::Scalar;

pub use estimate::{estimate_m, estimate_m_by_crossings, heuristic_m, heuristic_m_detailed, HeuristicEstimate};

/// An exact non-negative count, displayed as `2.68e300`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        BigCount(value)
    }

    pub fn exact(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::from_integer(num_bigint::BigInt::from(self.0.clone()))
    }

    /// Scientific notation with `sig` significant digits.
    pub fn to_scientific(&self, sig: u32) -> String {
        self.to_scalar().to_scientific(sig)
    }
}

impl From<BigUint> for BigCount {
    fn from(value: BigUint) -> Self {
        BigCount(value)
    }
}

impl From<u64> for BigCount {
    fn from(value: u64) -> Self {
        BigCount(BigUint::from(value))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_scientific(3))
    }
}

/// Reads `d.ddde±x` (or a plain decimal) back into an exact scalar.
pub fn parse_scientific(text: &str) -> Result<Scalar> {
    let bad = || ArpError::InvalidScalar(text.to_string());
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let mantissa = Scalar::from_str(mantissa).map_err(|_| bad())?;
    let scale = Scalar::from_integer(crate::scalar::pow10(exponent.unsigned_abs()));
    Ok(if exponent >= 0 {
        mantissa * scale
    } else {
        mantissa / scale
    })
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: C(n−k+i, i) at step i
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// `n·(n−1)·…·(n−m+1)`.
pub fn falling_factorial(n: u64, m: u64) -> BigUint {
    (0..m).fold(BigUint::one(), |acc, i| acc * n.saturating_sub(i))
}

pub fn factorial(n: u64) -> BigUint {
    falling_factorial(n, n)
}

/// `Q* = 2^(n−2)`, the worst-case number of sequential feasible orders.
pub fn q_star(n: usize) -> Result<BigCount> {
    if n < 2 {
        return Err(ArpError::out_of_range("n", n, "n >= 2"));
    }
    Ok(BigCount(BigUint::one() << (n - 2)))
}

/// `Q^(m) = Σ_{p<m} C(n−2, p)`.
pub fn q_m_exact(n: usize, m: usize) -> Result<BigCount> {
    if m < 1 || m + 1 > n {
        return Err(ArpError::out_of_range("m", m, format!("1 <= m <= {}", n.saturating_sub(1))));
    }
    let top = (n - 2) as u64;
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for p in 0..m as u64 {
        sum += &term;
        term = term * (top - p) / (p + 1);
    }
    Ok(BigCount(sum))
}

/// `(m²/n)·C(n, m)`, exactly.
pub fn q_m_bound(n: usize, m: usize) -> Result<Scalar> {
    if m < 1 || m > n {
        return Err(ArpError::out_of_range("m", m, format!("1 <= m <= {n}")));
    }
    let c = Scalar::from_integer(num_bigint::BigInt::from(binomial(n as u64, m as u64)));
    Ok(c * Scalar::from_ratio((m * m) as u64, n as u64))
}

/// `n/(n+1−m)`: the factor by which the bound grows from `n` to `n+1`.
pub fn growth_ratio(n: usize, m: usize) -> Result<Scalar> {
    if n < m || n == 0 {
        return Err(ArpError::out_of_range("n", n, format!("n >= max(m, 1) = {}", m.max(1))));
    }
    Ok(Scalar::from_ratio(n as u64, (n + 1 - m) as u64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `n ≤ 2m`: the count still looks exponential.
    Exponential,
    /// `n > 2m`: the count is bounded by a polynomial of degree `m`.
    Polynomial,
}

impl Regime {
    pub fn of(n: usize, m: usize) -> Regime {
        if n > 2 * m {
            Regime::Polynomial
        } else {
            Regime::Exponential
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Exponential => "exponential",
            Regime::Polynomial => "polynomial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityReport {
    pub n: usize,
    /// Index found by [`estimate_m`].
    pub m: Option<usize>,
    /// Index found by [`heuristic_m`].
    pub m_prime: Option<usize>,
    pub q_star: BigCount,
    pub q_m_exact: BigCount,
    pub q_m_bound: Scalar,
    pub regime: Regime,
}

impl ComplexityReport {
    /// Bounds for a fleet of `n` at index `index` (`1 <= index < n`).
    pub fn at(n: usize, index: usize) -> Result<Self> {
        Ok(ComplexityReport {
            n,
            m: None,
            m_prime: None,
            q_star: q_star(n)?,
            q_m_exact: q_m_exact(n, index)?,
            q_m_bound: q_m_bound(n, index)?,
            regime: Regime::of(n, index),
        })
    }

    /// The index the bounds were evaluated at.
    pub fn index(&self) -> Option<usize> {
        self.m.or(self.m_prime.map(|m| m.max(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sci(x: &Scalar) -> String {
        x.to_scientific(3)
    }

    #[test]
    fn worst_case_counts() {
        assert_eq!(q_star(4).unwrap(), BigCount::from(4));
        assert_eq!(q_star(10).unwrap(), BigCount::from(256));
        assert_eq!(q_star(1000).unwrap().to_string(), "2.68e300");
        assert!(q_star(1).is_err());
    }

    #[test]
    fn partial_sums() {
        assert_eq!(q_m_exact(4, 1).unwrap(), BigCount::from(1));
        assert_eq!(q_m_exact(10, 3).unwrap(), BigCount::from(37));
        assert_eq!(q_m_exact(12, 11).unwrap(), q_star(12).unwrap());
        assert!(q_m_exact(4, 0).is_err());
        assert!(q_m_exact(4, 4).is_err());
    }

    #[test]
    fn closed_bounds() {
        assert_eq!(q_m_bound(2, 1).unwrap(), Scalar::one());
        assert_eq!(sci(&q_m_bound(1000, 63).unwrap()), "2.72e101");
        assert_eq!(sci(&q_m_bound(126, 63).unwrap()), "1.90e38");
        assert_eq!(sci(&q_m_bound(126, 55).unwrap()), "5.27e37");
        assert_eq!(sci(&q_m_bound(1000, 39).unwrap()), "3.52e70");
        assert!(q_m_bound(5, 6).is_err());
    }

    #[test]
    fn growth() {
        assert_eq!(growth_ratio(17, 1).unwrap(), Scalar::one());
        let r = growth_ratio(1000, 63).unwrap();
        assert_eq!(r, Scalar::from_ratio(1000, 938));
        assert_eq!(q_m_bound(1001, 63).unwrap(), r * q_m_bound(1000, 63).unwrap());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
        assert_eq!(falling_factorial(10, 3), BigUint::from(720u32));
    }

    #[test]
    fn scientific_round_trip() {
        let q = q_star(1000).unwrap();
        let back = parse_scientific(&q.to_string()).unwrap();
        // within half a unit of the third digit
        let ulp = parse_scientific("0.01e300").unwrap();
        let err = (back - q.to_scalar()).abs();
        assert!(err * Scalar::from_integer(2) <= ulp);
        assert_eq!(parse_scientific("1.5e-2").unwrap(), Scalar::from_ratio(3, 200));
        assert!(parse_scientific("e5").is_err());
    }

    #[test]
    fn regime_threshold() {
        assert_eq!(Regime::of(126, 63), Regime::Exponential);
        assert_eq!(Regime::of(127, 63), Regime::Polynomial);
    }
}
