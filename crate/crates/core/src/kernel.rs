//! Integer view of an instance for the hot loops.
//!
//! All capacities and rates are rescaled by the least common denominator
//! `D`, giving integers `V = v·D` and `K = c·D`. With a context `C = S/D`
//!
//! ```text
//! φ(a, C) ≤ φ(b, C)  ⇔  V_a · K_b · (K_b + S) ≤ V_b · K_a · (K_a + S)
//! v / (c + C)        =  V / (K + S)
//! ```
//!
//! so every decision is an exact integer comparison. The word type is the
//! narrowest of `i64`, `i128` and `BigInt` that cannot overflow for the
//! instance at hand.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::model::{AirplaneId, Instance};

pub(crate) trait Word: Clone + Ord + Debug + Send + Sync {
    fn from_big(value: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Word for i64 {
    fn from_big(value: &BigInt) -> Self {
        value.to_i64().expect("kernel bound check admitted an oversized value")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero() -> Self {
        0
    }
    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    #[inline]
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Word for i128 {
    fn from_big(value: &BigInt) -> Self {
        value.to_i128().expect("kernel bound check admitted an oversized value")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero() -> Self {
        0
    }
    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    #[inline]
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Word for BigInt {
    fn from_big(value: &BigInt) -> Self {
        value.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Airplanes in the order the kernel was built from, scaled to integers.
#[derive(Clone, Debug)]
pub(crate) struct Kernel<W> {
    pub ids: Vec<AirplaneId>,
    pub v: Vec<W>,
    pub k: Vec<W>,
}

impl<W: Word> Kernel<W> {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// Orders `φ(a, S)` against `φ(b, S)`.
    #[inline]
    pub fn phi_cmp(&self, a: usize, b: usize, ctx: &W) -> Ordering {
        let lhs = self.v[a].mul(&self.k[b]).mul(&self.k[b].add(ctx));
        let rhs = self.v[b].mul(&self.k[a]).mul(&self.k[a].add(ctx));
        lhs.cmp(&rhs)
    }

    #[inline]
    pub fn phi_le(&self, a: usize, b: usize, ctx: &W) -> bool {
        self.phi_cmp(a, b, ctx) != Ordering::Greater
    }

    /// Orders the solo ranges `v_a/c_a` and `v_b/c_b`.
    pub fn range_cmp(&self, a: usize, b: usize) -> Ordering {
        self.v[a].mul(&self.k[b]).cmp(&self.v[b].mul(&self.k[a]))
    }

    /// The leg `v_a / (c_a + C)` with `C = ctx / D`, exactly.
    pub fn leg(&self, a: usize, ctx: &W) -> BigRational {
        BigRational::new(self.v[a].to_big(), self.k[a].add(ctx).to_big())
    }

    /// Exact total of a farthest-first placement.
    pub fn total_far_first(&self, far_first: &[usize]) -> BigRational {
        let mut ctx = W::zero();
        let mut total = BigRational::zero();
        for &a in far_first {
            total += self.leg(a, &ctx);
            ctx = ctx.add(&self.k[a]);
        }
        total
    }

    /// Fixed-point enclosure of a farthest-first placement's total.
    pub fn enclosure_far_first(&self, far_first: &[usize]) -> Enclosure {
        let mut ctx = W::zero();
        let mut floor_sum = <BigInt as Zero>::zero();
        let shift = BigInt::one() << Enclosure::FRACTION_BITS;
        for &a in far_first {
            let denom = self.k[a].add(&ctx);
            floor_sum += (self.v[a].to_big() * &shift).div_floor(&denom.to_big());
            ctx = ctx.add(&self.k[a]);
        }
        Enclosure {
            floor_sum,
            terms: far_first.len() as u64,
        }
    }
}

/// A sum of positive fractions known to lie in
/// `[floor_sum, floor_sum + terms) / 2^FRACTION_BITS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Enclosure {
    floor_sum: BigInt,
    terms: u64,
}

impl Enclosure {
    pub const FRACTION_BITS: usize = 64;

    /// `Some` when the two intervals are disjoint.
    pub fn try_cmp(&self, other: &Enclosure) -> Option<Ordering> {
        if self.floor_sum >= &other.floor_sum + other.terms {
            Some(Ordering::Greater)
        } else if other.floor_sum >= &self.floor_sum + self.terms {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

/// Work that can run on any kernel width.
pub(crate) trait KernelTask {
    type Output;
    fn run<W: Word>(self, kernel: &Kernel<W>) -> Self::Output;
}

/// Scales `inst` (in its given order) to integers and runs `task` on the
/// narrowest safe word type.
pub(crate) fn dispatch<T: KernelTask>(inst: &Instance, task: T) -> T::Output {
    let mut denom = BigInt::one();
    for a in inst {
        denom = denom.lcm(a.v().denom());
        denom = denom.lcm(a.c().denom());
    }
    let scale = |x: &crate::scalar::Scalar| -> BigInt { x.numer() * (&denom / x.denom()) };
    let v: Vec<BigInt> = inst.iter().map(|a| scale(a.v())).collect();
    let k: Vec<BigInt> = inst.iter().map(|a| scale(a.c())).collect();
    let ids = inst.ids();

    let max_v = v.iter().max().cloned().unwrap_or_default();
    let max_k = k.iter().max().cloned().unwrap_or_default();
    let total_k: BigInt = k.iter().sum();
    // largest product formed by phi_cmp, plus one doubling of headroom
    let bound: BigInt = (&max_v * &max_k * (&max_k + &total_k)).abs() * 2u32;
    let bits = bound.bits();

    if bits < 63 {
        task.run(&build::<i64>(ids, &v, &k))
    } else if bits < 127 {
        task.run(&build::<i128>(ids, &v, &k))
    } else {
        task.run(&build::<BigInt>(ids, &v, &k))
    }
}

fn build<W: Word>(ids: Vec<AirplaneId>, v: &[BigInt], k: &[BigInt]) -> Kernel<W> {
    Kernel {
        ids,
        v: v.iter().map(W::from_big).collect(),
        k: k.iter().map(W::from_big).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Width;
    impl KernelTask for Width {
        type Output = &'static str;
        fn run<W: Word>(self, _: &Kernel<W>) -> &'static str {
            std::any::type_name::<W>()
        }
    }

    struct Phi(usize, usize, i64);
    impl KernelTask for Phi {
        type Output = Ordering;
        fn run<W: Word>(self, k: &Kernel<W>) -> Ordering {
            k.phi_cmp(self.0, self.1, &W::from_big(&BigInt::from(self.2)))
        }
    }

    #[test]
    fn picks_narrow_words() {
        let small = Instance::from_pairs(&[("4", "2"), ("961.8", "401")]).unwrap();
        assert_eq!(dispatch(&small, Width), "i64");
        let wide = Instance::from_pairs(&[("123456789.123", "98765.4321"), ("1", "0.000001")]).unwrap();
        assert_eq!(dispatch(&wide, Width), "i128");
        let huge = Instance::from_pairs(&[
            ("123456789012345678901234567890", "1"),
            ("1", "0.000001"),
        ])
        .unwrap();
        assert!(dispatch(&huge, Width).contains("BigInt"));
    }

    #[test]
    fn phi_comparison_matches_rationals() {
        // scaled by D = 10: A1 = (40, 20), A2 = (70, 30)
        let pair = Instance::from_pairs(&[("4", "2"), ("7", "3.0"), ("0.5", "0.1")]).unwrap();
        // context C = 4 ⇔ S = 40: both φ equal 1/3
        assert_eq!(dispatch(&pair, Phi(0, 1, 40)), Ordering::Equal);
        assert_eq!(dispatch(&pair, Phi(0, 1, 0)), Ordering::Greater);
        assert_eq!(dispatch(&pair, Phi(0, 1, 50)), Ordering::Less);
    }

    #[test]
    fn enclosure_brackets_exact_total() {
        struct Check;
        impl KernelTask for Check {
            type Output = ();
            fn run<W: Word>(self, k: &Kernel<W>) {
                let order = [0usize, 2, 1];
                let exact = k.total_far_first(&order);
                let enc = k.enclosure_far_first(&order);
                let scale = BigRational::from_integer(BigInt::one() << Enclosure::FRACTION_BITS);
                let scaled = exact * scale;
                assert!(scaled >= BigRational::from_integer(enc.floor_sum.clone()));
                assert!(scaled < BigRational::from_integer(enc.floor_sum.clone() + enc.terms));
            }
        }
        let triple = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap();
        dispatch(&triple, Check);
    }
}
