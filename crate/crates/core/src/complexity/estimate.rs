use std::cmp::Ordering;

use rayon::prelude::*;

use crate::classify::{classify, is_reverse_order_against_last};
use crate::error::{ArpError, Result};
use crate::kernel::{dispatch, Enclosure, Kernel, KernelTask, Word};
use crate::model::{ClassKind, Instance, Schedule};
use crate::objective::{crossing_point, phi_unchecked, total_distance};
use crate::scalar::Scalar;
use crate::solvers::greedy_fill;

use super::ComplexityReport;

/// Reverse order fleet labeled by decreasing `v/c²`, so the farthest
/// flyer is last. Disorder among the others is tolerated as long as each
/// is in reverse order against the last; see
/// [`is_reverse_order_against_last`].
fn cro_labeled(inst: &Instance) -> Result<Instance> {
    let class = classify(inst);
    if class.kind != ClassKind::CompleteReverseOrder && !is_reverse_order_against_last(inst) {
        return Err(ArpError::NotCompleteReverseOrder(class));
    }
    Ok(inst.sorted_by_base_factor())
}

/// Finds the smallest prefix `A_1..A_m` whose consumption makes `A_n`
/// dominate every airplane between the prefix and `A_n`.
///
/// Starts from `C = c_1` and keeps absorbing the next airplane into the
/// prefix while some remaining `A_r` still has `φ(A_r, C) > φ(A_n, C)`.
pub fn estimate_m(inst: &Instance) -> Result<ComplexityReport> {
    let fleet = cro_labeled(inst)?;
    let a = fleet.airplanes();
    let n = a.len();
    let last = &a[n - 1];
    let mut m = 1;
    let mut context = a[0].c().clone();
    loop {
        let target = phi_unchecked(last, &context);
        // pool is A_{m+1} .. A_{n-1}
        let dominated = a[m..n - 1].iter().all(|r| phi_unchecked(r, &context) <= target);
        if dominated {
            break;
        }
        m += 1;
        context = context + a[m - 1].c();
    }
    let mut report = ComplexityReport::at(n, m)?;
    report.m = Some(m);
    Ok(report)
}

/// The same index read off the crossing points: the smallest `m` with
/// `c_1 + … + c_m ≥ C_{r,n}` for every `m < r < n`.
pub fn estimate_m_by_crossings(inst: &Instance) -> Result<usize> {
    let fleet = cro_labeled(inst)?;
    let a = fleet.airplanes();
    let n = a.len();
    let crossings: Vec<Scalar> = a[..n - 1]
        .iter()
        .map(|r| crossing_point(r, &a[n - 1]).unwrap_or_else(Scalar::zero))
        .collect();
    // suffix maxima over r in m..n-1 (0-based)
    let mut suffix_max = vec![Scalar::zero(); n];
    for r in (0..n - 1).rev() {
        suffix_max[r] = crossings[r].clone().max(suffix_max[r + 1].clone());
    }
    let mut prefix = Scalar::zero();
    for m in 1..n {
        prefix = prefix + a[m - 1].c();
        if prefix >= suffix_max[m] {
            return Ok(m);
        }
    }
    Ok(n - 1)
}

/// Outcome of [`heuristic_m_detailed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicEstimate {
    pub report: ComplexityReport,
    /// The best greedy schedule over all choices of farthest flyer.
    pub schedule: Schedule,
}

/// Heuristic index `m′`: the number of airplanes flying farther than the
/// longest-ranged one in the best greedy schedule.
pub fn heuristic_m(inst: &Instance) -> Result<ComplexityReport> {
    heuristic_m_detailed(inst).map(|h| h.report)
}

/// For every airplane `A_i` but the last (in decreasing `v/c²` order), pins
/// `A_i` to the farthest position and fills the rest greedily; keeps the
/// schedule with the largest total (smallest `i` on ties).
pub fn heuristic_m_detailed(inst: &Instance) -> Result<HeuristicEstimate> {
    let n = inst.len();
    if n < 2 {
        return Err(ArpError::out_of_range("n", n, "n >= 2"));
    }
    let fleet = inst.sorted_by_base_factor();
    let (far_first, m_prime) = dispatch(&fleet, Heuristic);
    let ids = fleet.ids();
    let pi: Vec<_> = far_first.iter().rev().map(|&a| ids[a]).collect();
    let schedule = total_distance(inst, &pi)?;
    let mut report = ComplexityReport::at(n, m_prime.max(1))?;
    report.m_prime = Some(m_prime);
    Ok(HeuristicEstimate { report, schedule })
}

struct Heuristic;

impl KernelTask for Heuristic {
    /// Best farthest-first order and `m′`.
    type Output = (Vec<usize>, usize);

    fn run<W: Word>(self, kernel: &Kernel<W>) -> Self::Output {
        let n = kernel.len();
        let candidates: Vec<(Vec<usize>, Enclosure)> = (0..n - 1)
            .into_par_iter()
            .map(|i| {
                let order = greedy_fill(kernel, Some(i));
                let enclosure = kernel.enclosure_far_first(&order);
                (order, enclosure)
            })
            .collect();

        let mut best = 0;
        for i in 1..candidates.len() {
            let ord = candidates[i].1.try_cmp(&candidates[best].1).unwrap_or_else(|| {
                kernel
                    .total_far_first(&candidates[i].0)
                    .cmp(&kernel.total_far_first(&candidates[best].0))
            });
            if ord == Ordering::Greater {
                best = i;
            }
        }
        let order = candidates.into_iter().nth(best).expect("n >= 2").0;

        // first (farthest) occurrence of the maximal range: ties minimize m′
        let mut m_prime = 0;
        for (pos, &a) in order.iter().enumerate() {
            if kernel.range_cmp(a, order[m_prime]) == Ordering::Greater {
                m_prime = pos;
            }
        }
        (order, m_prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::Regime;
    use crate::model::ids;

    fn triple() -> Instance {
        Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap()
    }

    #[test]
    fn exact_index_small() {
        let r = estimate_m(&triple()).unwrap();
        assert_eq!(r.m, Some(1));
        assert_eq!(r.regime, Regime::Polynomial);
        let pair = Instance::from_pairs(&[("4", "2"), ("7", "3")]).unwrap();
        assert_eq!(estimate_m(&pair).unwrap().m, Some(1));
        assert_eq!(estimate_m_by_crossings(&triple()).unwrap(), 1);
    }

    #[test]
    fn exact_index_needs_cro() {
        let aligned = Instance::from_pairs(&[("4", "2"), ("12", "3")]).unwrap();
        assert!(matches!(
            estimate_m(&aligned),
            Err(ArpError::NotCompleteReverseOrder(_))
        ));
    }

    #[test]
    fn labeling_does_not_matter() {
        let shuffled = Instance::from_pairs(&[("19", "5"), ("4", "2"), ("7", "3")]).unwrap();
        assert_eq!(estimate_m(&shuffled).unwrap().m, Some(1));
    }

    #[test]
    fn heuristic_triple() {
        let h = heuristic_m_detailed(&triple()).unwrap();
        assert_eq!(h.schedule.pi, ids(&[2, 3, 1]));
        assert_eq!(h.report.m_prime, Some(1));
        assert!(heuristic_m(&Instance::from_pairs(&[("1", "1")]).unwrap()).is_err());
    }

    #[test]
    fn heuristic_zero_index_clamps_bounds() {
        // A2 has the longest range and the largest φ at 0, so it flies farthest
        let aligned = Instance::from_pairs(&[("4", "2"), ("12", "3")]).unwrap();
        let r = heuristic_m(&aligned).unwrap();
        assert_eq!(r.m_prime, Some(0));
        assert_eq!(r.index(), Some(1));
    }
}
