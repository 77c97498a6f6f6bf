//! Instance construction: the closed-form crossing family behind the
//! 1000-airplane worked example, seeded random fleets, and subsets.
//!
//! Every random generator draws from ChaCha8 seeded with
//! `seed_from_u64(seed)`, a fully specified stream, so a seed names the same
//! instance on every platform.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ArpError, Result};
use crate::model::{Airplane, AssumptionParams, Instance};
use crate::scalar::Scalar;

/// Name of the PRNG, for artifact headers.
pub const PRNG: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub n: usize,
    /// Common crossing point of the crossing family.
    pub c_target: Scalar,
    pub seed: u64,
    pub assumptions: AssumptionParams,
}

impl GeneratorParams {
    pub fn new(n: usize, seed: u64) -> Self {
        GeneratorParams {
            n,
            c_target: Scalar::from_integer(2000),
            seed,
            assumptions: AssumptionParams::default(),
        }
    }
}

/// Airplanes `A_1..A_n` with `c_i = i + 1` and
/// `v_i = c_i (c_i + T) / (T/2 + 1)`.
///
/// Every pair crosses at exactly `C = T`, so the fleet is a complete
/// reverse order sequence. With `rounded`, each `v_i` is rounded half up
/// to one decimal. Rounding disturbs `v/c` among the smallest airplanes
/// (`(4, 2)`, `(6, 3)`, `(8, 4)` all reach 2, and `18.1/9 > 20.1/10`), so
/// the rounded fleet is only reverse ordered against its last airplane.
pub fn crossing_family(n: usize, c_target: &Scalar, rounded: bool) -> Result<Instance> {
    if n < 2 {
        return Err(ArpError::out_of_range("n", n, "n >= 2"));
    }
    if !c_target.is_positive() {
        return Err(ArpError::InfeasibleParams("c_target must be positive".into()));
    }
    let divisor = c_target / &Scalar::from_integer(2) + Scalar::one();
    let airplanes = (1..=n as u32)
        .map(|i| {
            let c = Scalar::from_integer(i + 1);
            let mut v = &c * &(&c + c_target) / &divisor;
            if rounded {
                v = v.round_decimal(1);
            }
            Airplane::new(i, v, c)
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(airplanes)
}

/// The first `n` rows of the 1000-airplane worked example (`T = 2000`,
/// capacities to one decimal): `A_1 = (4.0, 2)`, …, `A_1000 = (3001.0, 1001)`.
pub fn table4_family(n: usize) -> Result<Instance> {
    check_table4(n)?;
    crossing_family(n, &Scalar::from_integer(2000), true)
}

/// [`table4_family`] without rounding the capacities.
pub fn table4_family_unrounded(n: usize) -> Result<Instance> {
    check_table4(n)?;
    crossing_family(n, &Scalar::from_integer(2000), false)
}

fn check_table4(n: usize) -> Result<()> {
    if !(2..=1000).contains(&n) {
        return Err(ArpError::out_of_range("n", n, "2 <= n <= 1000"));
    }
    Ok(())
}

const RATE_UNITS: i64 = 10_000;
const RETRIES: usize = 1000;

/// A seeded complete reverse order fleet under the assumptions: solo
/// ranges at least `ε` apart, at most `M`, consumption rates at most `M1`.
///
/// Consumption rates are distinct one-decimal values in `[0.1, M1]`;
/// solo ranges sit on a `10⁻⁴` grid and climb slower than the rates so
/// that `v/c²` falls. Draws that paint themselves into a corner are
/// retried.
pub fn random_cro(params: &GeneratorParams) -> Result<Instance> {
    let n = params.n;
    if n < 2 {
        return Err(ArpError::out_of_range("n", n, "n >= 2"));
    }
    let a = &params.assumptions;
    let units = Scalar::from_integer(RATE_UNITS);
    let eps = ceil(&(a.epsilon() * &units)).max(1);
    let max_rate = floor(&(a.max_range() * &units));
    let c_slots = floor(&(a.max_consumption() * &Scalar::from_integer(10)));
    if (n as i64 - 1) * eps >= max_rate {
        return Err(ArpError::InfeasibleParams(format!(
            "(n - 1)·ε = {} reaches M = {}",
            Scalar::from_ratio((n as i64 - 1) * eps, RATE_UNITS).to_exact_string(1),
            a.max_range().to_exact_string(1)
        )));
    }
    if c_slots < n as i64 {
        return Err(ArpError::InfeasibleParams(format!(
            "only {c_slots} distinct one-decimal rates fit under M1 = {}",
            a.max_consumption().to_exact_string(1)
        )));
    }

    let mut rng = rng(params.seed);
    for _ in 0..RETRIES {
        let mut tenths: Vec<i64> = sample(&mut rng, c_slots as usize, n)
            .into_iter()
            .map(|x| x as i64 + 1)
            .collect();
        tenths.sort_unstable();
        if let Some(rates) = draw_rates(&mut rng, &tenths, eps, max_rate) {
            let airplanes = tenths
                .iter()
                .zip(&rates)
                .zip(1u32..)
                .map(|((&c, &r), id)| {
                    Airplane::new(
                        id,
                        Scalar::from_ratio(r * c, RATE_UNITS * 10),
                        Scalar::from_ratio(c, 10),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            return Instance::new(airplanes);
        }
    }
    Err(ArpError::InfeasibleParams(format!(
        "no complete reverse order draw after {RETRIES} attempts"
    )))
}

/// Solo ranges (in `10⁻⁴` units) with `r_{i+1} ≥ r_i + ε` and
/// `r_{i+1}/c_{i+1} < r_i/c_i`.
fn draw_rates(rng: &mut ChaCha8Rng, tenths: &[i64], eps: i64, max_rate: i64) -> Option<Vec<i64>> {
    let (first, last) = (tenths[0], *tenths.last()?);
    // r_n < r_1·c_n/c_1 keeps every rate under M
    let hi = max_rate * first / last;
    if hi < 1 {
        return None;
    }
    let mut rates = vec![rng.gen_range((hi / 2).max(1)..=hi)];
    for w in tenths.windows(2) {
        let r = *rates.last()?;
        let lo = r + eps;
        let top = (r * w[1] - 1) / w[0];
        if lo > top {
            return None;
        }
        rates.push(rng.gen_range(lo..=top));
    }
    Some(rates)
}

/// Value ranges for [`random_general_in`], in tenths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralRanges {
    pub v_tenths: (u32, u32),
    pub c_tenths: (u32, u32),
}

impl Default for GeneralRanges {
    /// `v ∈ [1.0, 100.0]`, `c ∈ [0.1, 10.0]`.
    fn default() -> Self {
        GeneralRanges {
            v_tenths: (10, 1000),
            c_tenths: (1, 100),
        }
    }
}

/// A seeded fleet with one-decimal capacities and rates and no class
/// guarantee. No two airplanes are identical.
pub fn random_general(n: usize, seed: u64) -> Result<Instance> {
    random_general_in(n, seed, &GeneralRanges::default())
}

pub fn random_general_in(n: usize, seed: u64, ranges: &GeneralRanges) -> Result<Instance> {
    let (v_lo, v_hi) = ranges.v_tenths;
    let (c_lo, c_hi) = ranges.c_tenths;
    if v_lo == 0 || c_lo == 0 || v_lo > v_hi || c_lo > c_hi {
        return Err(ArpError::InfeasibleParams("ranges must be positive and non-empty".into()));
    }
    let pairs = (v_hi - v_lo + 1) as u64 * (c_hi - c_lo + 1) as u64;
    if (n as u64) > pairs {
        return Err(ArpError::InfeasibleParams(format!("only {pairs} distinct airplanes fit the ranges")));
    }
    let mut rng = rng(seed);
    let mut seen = std::collections::HashSet::with_capacity(n);
    let mut airplanes = Vec::with_capacity(n);
    while airplanes.len() < n {
        let v = rng.gen_range(v_lo..=v_hi);
        let c = rng.gen_range(c_lo..=c_hi);
        if seen.insert((v, c)) {
            let id = airplanes.len() as u32 + 1;
            airplanes.push(Airplane::new(id, Scalar::from_ratio(v, 10), Scalar::from_ratio(c, 10))?);
        }
    }
    Instance::new(airplanes)
}

/// `k` airplanes drawn without replacement, ids kept, listed by
/// decreasing `v/c²`.
pub fn random_subset(inst: &Instance, k: usize, seed: u64) -> Result<Instance> {
    if k < 1 || k > inst.len() {
        return Err(ArpError::out_of_range("k", k, format!("1 <= k <= {}", inst.len())));
    }
    let mut rng = rng(seed);
    let mut picked = sample(&mut rng, inst.len(), k).into_vec();
    picked.sort_unstable();
    let airplanes = picked.into_iter().map(|i| inst.airplanes()[i].clone()).collect();
    Ok(Instance::new(airplanes)?.sorted_by_base_factor())
}

fn floor(x: &Scalar) -> i64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    x.numer()
        .div_floor(x.denom())
        .to_i64()
        .unwrap_or(i64::MAX)
}

fn ceil(x: &Scalar) -> i64 {
    -floor(&-x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, is_reverse_order_against_last};
    use crate::model::ClassKind;
    use crate::objective::{crossing_point, delta};

    #[test]
    fn printed_rows() {
        let t = table4_family(1000).unwrap();
        let row = |i: usize| {
            let a = &t.airplanes()[i - 1];
            (a.v().clone(), a.c().clone())
        };
        let s = |x: &str| x.parse::<Scalar>().unwrap();
        assert_eq!(row(1), (s("4.0"), s("2")));
        assert_eq!(row(200), (s("442.0"), s("201")));
        assert_eq!(row(400), (s("961.8"), s("401")));
        assert_eq!(row(600), (s("1561.6"), s("601")));
        assert_eq!(row(800), (s("2241.4"), s("801")));
        assert_eq!(row(999), (s("2997.0"), s("1000")));
        assert_eq!(row(1000), (s("3001.0"), s("1001")));
    }

    #[test]
    fn family_is_reverse_ordered() {
        for n in [2, 3, 44, 50, 126, 1000] {
            let exact = table4_family_unrounded(n).unwrap();
            assert_eq!(classify(&exact).kind, ClassKind::CompleteReverseOrder);
            let rounded = table4_family(n).unwrap();
            assert_eq!(classify(&rounded).kind, ClassKind::Mixed);
            // small prefixes end on a rounding tie: (4,2), (6,3), (8,4) ...
            assert_eq!(is_reverse_order_against_last(&rounded), n >= 44);
        }
        // beyond the rounding ties the strict order returns
        let tail = Instance::new(table4_family(1000).unwrap().airplanes()[100..].to_vec()).unwrap();
        assert_eq!(classify(&tail).kind, ClassKind::CompleteReverseOrder);
        assert!(table4_family(1).is_err());
        assert!(table4_family(1001).is_err());
    }

    #[test]
    fn unrounded_family_crosses_at_target() {
        let t = table4_family_unrounded(30).unwrap();
        let a = t.airplanes();
        assert_eq!(crossing_point(&a[0], &a[29]), Some(Scalar::from_integer(2000)));
        assert_eq!(crossing_point(&a[7], &a[12]), Some(Scalar::from_integer(2000)));
        let t = crossing_family(5, &Scalar::from_integer(50), false).unwrap();
        let a = t.airplanes();
        assert_eq!(crossing_point(&a[1], &a[4]), Some(Scalar::from_integer(50)));
    }

    #[test]
    fn last_gap_is_about_a_thousandth() {
        let t = table4_family(1000).unwrap();
        let a = t.airplanes();
        let d = delta(&a[998], &a[999]);
        assert_eq!(d, Scalar::from_ratio(3001, 1001) - Scalar::from_ratio(2997, 1000));
        assert!(d >= Scalar::from_ratio(1, 1001) - Scalar::from_ratio(1, 10_000));
    }

    #[test]
    fn random_cro_respects_assumptions() {
        for seed in 0..50 {
            let p = GeneratorParams::new(2 + seed as usize % 11, seed);
            let inst = random_cro(&p).unwrap();
            assert_eq!(random_cro(&p).unwrap(), inst);
            assert_eq!(classify(&inst).kind, ClassKind::CompleteReverseOrder);
            let a = inst.airplanes();
            for w in a.windows(2) {
                assert!(delta(&w[0], &w[1]) >= *p.assumptions.epsilon());
            }
            assert!(a.iter().all(|x| x.solo_range() <= *p.assumptions.max_range()));
            assert!(a.iter().all(|x| x.c() <= p.assumptions.max_consumption()));
        }
    }

    #[test]
    fn random_cro_rejects_infeasible() {
        let mut p = GeneratorParams::new(6, 1);
        p.assumptions = AssumptionParams::new(
            Scalar::from_integer(1),
            Scalar::from_integer(5),
            Scalar::from_integer(100),
        )
        .unwrap();
        assert!(matches!(random_cro(&p), Err(ArpError::InfeasibleParams(_))));
        p.assumptions = AssumptionParams::new(Scalar::from_ratio(1, 1000), Scalar::from_integer(50), Scalar::from_ratio(3, 10))
            .unwrap();
        assert!(matches!(random_cro(&p), Err(ArpError::InfeasibleParams(_))));
    }

    #[test]
    fn random_general_is_deterministic() {
        assert_eq!(random_general(5, 7).unwrap(), random_general(5, 7).unwrap());
        assert_ne!(random_general(5, 7).unwrap(), random_general(5, 8).unwrap());
        assert_eq!(random_general(1, 3).unwrap().len(), 1);
    }

    #[test]
    fn subsets() {
        let t = table4_family(40).unwrap();
        let all = random_subset(&t, 40, 9).unwrap();
        assert_eq!(all, t.sorted_by_base_factor());
        let half = random_subset(&t, 20, 9).unwrap();
        assert_eq!(half.len(), 20);
        assert_eq!(half, random_subset(&t, 20, 9).unwrap());
        assert!(is_reverse_order_against_last(&half));
        let strict = table4_family_unrounded(40).unwrap();
        assert_eq!(classify(&random_subset(&strict, 7, 3).unwrap()).kind, ClassKind::CompleteReverseOrder);
        assert!(random_subset(&t, 0, 1).is_err());
        assert!(random_subset(&t, 41, 1).is_err());
    }
}
