//! The sequential feasibility predicate.
//!
//! Take two airplanes at positions `i < j` of a drop-out order (`j` flies
//! farther). Let `C_j` be the consumption of everything beyond `j` and
//! `C_i` the consumption of everything beyond `i`. The pair is acceptable
//! when keeping `π(j)` above `π(i)` is no worse at one of the two contexts
//! where they could meet as neighbours:
//!
//! * at the top, on context `C_j`: `φ(π(i), C_j) ≤ φ(π(j), C_j)`;
//! * at the bottom, on context `C_i − c_π(j)`:
//!   `φ(π(i), C_i − c_π(j)) ≤ φ(π(j), C_i − c_π(j))`.
//!
//! A permutation is sequential feasible when every pair is acceptable. The
//! optimum is always sequential feasible, and a complete reverse order
//! fleet of `n` airplanes has at most `2^(n−2)` of them.

use crate::error::Result;
use crate::model::{Airplane, AirplaneId, Instance};
use crate::objective::phi_unchecked;
use crate::scalar::Scalar;

/// `φ(a, C) ≤ φ(b, C)`.
fn phi_le(a: &Airplane, b: &Airplane, context: &Scalar) -> bool {
    phi_unchecked(a, context) <= phi_unchecked(b, context)
}

/// Whether `lower` (earlier drop) and `upper` may keep their relative order.
/// `upper_context` is the consumption beyond `upper`; `lower_context` is the
/// consumption beyond `lower` (which includes `upper`).
pub fn pair_acceptable(
    lower: &Airplane,
    upper: &Airplane,
    upper_context: &Scalar,
    lower_context: &Scalar,
) -> bool {
    phi_le(lower, upper, upper_context) || {
        let adjacent = lower_context - upper.c();
        phi_le(lower, upper, &adjacent)
    }
}

/// First offending pair of positions `(i, j)`, zero-based, if any.
pub fn first_violation(inst: &Instance, pi: &[AirplaneId]) -> Result<Option<(usize, usize)>> {
    let order = inst.resolve(pi)?;
    let n = order.len();
    let mut beyond = vec![Scalar::zero(); n];
    for l in (0..n.saturating_sub(1)).rev() {
        beyond[l] = &beyond[l + 1] + order[l + 1].c();
    }
    for i in 0..n {
        for j in i + 1..n {
            if !pair_acceptable(order[i], order[j], &beyond[j], &beyond[i]) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_sequential_feasible(inst: &Instance, pi: &[AirplaneId]) -> Result<bool> {
    Ok(first_violation(inst, pi)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ArpError;
    use crate::model::ids;

    #[test]
    fn pair_examples() {
        let pair = Instance::from_pairs(&[("4", "2"), ("7", "3")]).unwrap();
        assert!(is_sequential_feasible(&pair, &ids(&[2, 1])).unwrap());
        assert!(!is_sequential_feasible(&pair, &ids(&[1, 2])).unwrap());
    }

    #[test]
    fn triple_examples() {
        let triple = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap();
        assert_eq!(
            first_violation(&triple, &ids(&[3, 2, 1])).unwrap(),
            Some((0, 1))
        );
        assert!(is_sequential_feasible(&triple, &ids(&[2, 3, 1])).unwrap());
        assert!(is_sequential_feasible(&triple, &ids(&[1, 3, 2])).unwrap());
        // A1 → A2 → A3 passes the literal "beyond i" context but not the
        // adjacent-exchange one: A2 directly under A3 loses at context 0.
        assert_eq!(
            first_violation(&triple, &ids(&[1, 2, 3])).unwrap(),
            Some((1, 2))
        );
    }

    #[test]
    fn single_airplane_is_feasible() {
        let one = Instance::from_pairs(&[("3", "7")]).unwrap();
        assert!(is_sequential_feasible(&one, &ids(&[1])).unwrap());
    }

    #[test]
    fn rejects_non_permutation() {
        let pair = Instance::from_pairs(&[("4", "2"), ("7", "3")]).unwrap();
        assert!(matches!(
            is_sequential_feasible(&pair, &ids(&[1])),
            Err(ArpError::NotAPermutation(_))
        ));
    }

    #[test]
    fn ties_allow_both_orders() {
        let twins = Instance::from_pairs(&[("1", "1"), ("1", "1")]).unwrap();
        assert!(is_sequential_feasible(&twins, &ids(&[1, 2])).unwrap());
        assert!(is_sequential_feasible(&twins, &ids(&[2, 1])).unwrap());
    }
}
