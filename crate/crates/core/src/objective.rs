//! The fractional objective and the pairwise quantities derived from it.
//!
//! For a drop-out order `π` the last airplane reaches
//!
//! ```text
//! S_π = Σ_i v_π(i) / (c_π(i) + c_π(i+1) + … + c_π(n))
//! ```
//!
//! Exchanging two neighbours that sit on top of a consumption context `C`
//! changes `S_π` by an amount whose sign is decided by the relative
//! distance factor `φ(A, C) = v / (c·(c + C))`.

use crate::error::{ArpError, Result};
use crate::model::{Airplane, AirplaneId, Instance, Schedule};
use crate::scalar::Scalar;

/// `φ(a, context) = v_a / (c_a · (c_a + context))`.
pub fn phi(a: &Airplane, context: &Scalar) -> Result<Scalar> {
    if context.is_negative() {
        return Err(ArpError::NegativeContext);
    }
    Ok(phi_unchecked(a, context))
}

pub(crate) fn phi_unchecked(a: &Airplane, context: &Scalar) -> Scalar {
    a.v() / &(a.c() * &(a.c() + context))
}

/// Evaluates a drop-out permutation (`pi[0]` drops first).
pub fn total_distance(inst: &Instance, pi: &[AirplaneId]) -> Result<Schedule> {
    let order = inst.resolve(pi)?;
    let n = order.len();
    let mut cumulative = vec![Scalar::zero(); n];
    let mut legs = vec![Scalar::zero(); n];
    let mut beyond = Scalar::zero();
    for l in (0..n).rev() {
        cumulative[l] = beyond.clone();
        beyond = beyond + order[l].c();
        legs[l] = order[l].v() / &beyond;
    }
    let total = legs.iter().sum();
    Ok(Schedule {
        pi: pi.to_vec(),
        cumulative,
        legs,
        total,
    })
}

/// The positive context at which `φ(a_i, ·)` and `φ(a_j, ·)` coincide:
/// `(v_i c_j² − v_j c_i²) / (v_j c_i − v_i c_j)`.
///
/// `None` when the solo ranges are equal (the curves are proportional) or
/// when the crossing is not strictly positive.
pub fn crossing_point(a_i: &Airplane, a_j: &Airplane) -> Option<Scalar> {
    let (vi, ci, vj, cj) = (a_i.v(), a_i.c(), a_j.v(), a_j.c());
    let denom = vj * ci - vi * cj;
    if denom.is_zero() {
        return None;
    }
    let numer = vi * &(cj * cj) - vj * &(ci * ci);
    let point = numer / denom;
    point.is_positive().then_some(point)
}

/// `v_j/c_j − v_i/c_i`.
pub fn delta(a_i: &Airplane, a_j: &Airplane) -> Scalar {
    a_j.solo_range() - a_i.solo_range()
}
