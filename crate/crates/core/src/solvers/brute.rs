use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{ArpError, Result};
use crate::feasibility::is_sequential_feasible;
use crate::model::{Airplane, AirplaneId, Instance};
use crate::scalar::Scalar;
use crate::objective::total_distance;

use super::{Method, Permutation, SearchOptions, Solution};

fn check_guard(inst: &Instance, opts: &SearchOptions) -> Result<()> {
    if inst.len() > opts.max_n_guard {
        return Err(ArpError::GuardExceeded {
            n: inst.len(),
            guard: opts.max_n_guard,
        });
    }
    Ok(())
}

/// Steps to the next permutation in lexicographic order; false after the last.
fn next_permutation<T: Ord>(p: &mut [T]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|x| *x > p[i]).expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn for_each_permutation(inst: &Instance, mut f: impl FnMut(&[AirplaneId]) -> Result<()>) -> Result<()> {
    let mut p = inst.ids();
    p.sort();
    loop {
        f(&p)?;
        if !next_permutation(&mut p) {
            return Ok(());
        }
    }
}

/// `S_π` over airplanes already in drop-out order.
fn total(order: &[&Airplane]) -> Scalar {
    let mut beyond = Scalar::zero();
    let mut sum = Scalar::zero();
    for a in order.iter().rev() {
        beyond = beyond + a.c();
        sum = sum + a.v() / &beyond;
    }
    sum
}

/// Scores all `n!` orders and keeps the best; ties go to the
/// lexicographically smallest id sequence.
pub fn brute_force(inst: &Instance, opts: &SearchOptions) -> Result<Solution> {
    check_guard(inst, opts)?;
    let by_id = inst.sorted_by_id();
    let mut index: Vec<usize> = (0..inst.len()).collect();
    let mut order: Vec<&Airplane> = by_id.iter().collect();
    let mut best: Option<(Scalar, Vec<usize>)> = None;
    let mut visited = 0u64;
    loop {
        visited += 1;
        for (slot, &i) in order.iter_mut().zip(&index) {
            *slot = &by_id.airplanes()[i];
        }
        let s = total(&order);
        // lexicographic enumeration: only a strict improvement replaces
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, index.clone()));
        }
        if !next_permutation(&mut index) {
            break;
        }
    }
    let (_, index) = best.expect("at least one permutation");
    let pi: Vec<AirplaneId> = index.iter().map(|&i| by_id.airplanes()[i].id()).collect();
    Ok(Solution {
        schedule: Some(total_distance(inst, &pi)?),
        method: Method::BruteForce,
        q_count: None,
        visited_nodes: visited,
        feasible_set: None,
    })
}

/// Every sequential feasible order, found by testing all `n!` of them.
pub fn enumerate_sfs_oracle(inst: &Instance, opts: &SearchOptions) -> Result<BTreeSet<Permutation>> {
    check_guard(inst, opts)?;
    let mut out = BTreeSet::new();
    for_each_permutation(inst, |p| {
        if is_sequential_feasible(inst, p)? {
            out.insert(p.to_vec());
        }
        Ok(())
    })?;
    Ok(out)
}

/// `brute_force` plus the oracle count, for callers that want both.
pub fn brute_force_counted(inst: &Instance, opts: &SearchOptions) -> Result<Solution> {
    let mut sol = brute_force(inst, opts)?;
    sol.q_count = Some(BigUint::from(enumerate_sfs_oracle(inst, opts)?.len()));
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ids;

    #[test]
    fn permutations_in_order() {
        let mut p = ids(&[1, 2, 3]);
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], ids(&[1, 3, 2]));
        assert_eq!(all[5], ids(&[3, 2, 1]));
    }

    #[test]
    fn optimum_examples() {
        let opts = SearchOptions::default();
        let aligned = Instance::from_pairs(&[("4", "2"), ("12", "3")]).unwrap();
        let s = brute_force(&aligned, &opts).unwrap();
        assert_eq!(s.best().pi, ids(&[1, 2]));
        assert_eq!(s.best().total, Scalar::from_ratio(24, 5));

        let triple = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap();
        let s = brute_force(&triple, &opts).unwrap();
        assert_eq!(s.best().pi, ids(&[2, 3, 1]));
        assert_eq!(s.best().total, Scalar::from_ratio(379, 70));
        assert_eq!(s.visited_nodes, 6);

        let single = Instance::from_pairs(&[("9", "4")]).unwrap();
        assert_eq!(brute_force(&single, &opts).unwrap().best().total, Scalar::from_ratio(9, 4));
    }

    #[test]
    fn ties_prefer_smallest_sequence() {
        let twins = Instance::from_pairs(&[("1", "1"), ("1", "1")]).unwrap();
        let s = brute_force(&twins, &SearchOptions::default()).unwrap();
        assert_eq!(s.best().pi, ids(&[1, 2]));
    }

    #[test]
    fn oracle_sets() {
        let opts = SearchOptions::default();
        let pair = Instance::from_pairs(&[("4", "2"), ("7", "3")]).unwrap();
        assert_eq!(
            enumerate_sfs_oracle(&pair, &opts).unwrap(),
            BTreeSet::from([ids(&[2, 1])])
        );
        let triple = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap();
        assert_eq!(
            enumerate_sfs_oracle(&triple, &opts).unwrap(),
            BTreeSet::from([ids(&[1, 3, 2]), ids(&[2, 3, 1])])
        );
        let one = Instance::from_pairs(&[("1", "1")]).unwrap();
        assert_eq!(enumerate_sfs_oracle(&one, &opts).unwrap(), BTreeSet::from([ids(&[1])]));
    }

    #[test]
    fn guard_refuses_large_instances() {
        let pairs: Vec<(String, String)> = (1..=11).map(|i| (format!("{i}"), "1".to_string())).collect();
        let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let inst = Instance::from_pairs(&refs).unwrap();
        let opts = SearchOptions::default();
        assert_eq!(
            brute_force(&inst, &opts).unwrap_err(),
            ArpError::GuardExceeded { n: 11, guard: 10 }
        );
        assert!(enumerate_sfs_oracle(&inst, &opts).is_err());
    }
}
