use std::cmp::Ordering;

use crate::model::{ClassKind, Instance, InstanceClass};
use crate::scalar::Scalar;

/// Classifies a fleet by how `v/c²` and `v/c` are ordered.
///
/// Any equality in either ratio sets `ties` and yields [`ClassKind::Mixed`].
/// A single airplane is [`ClassKind::Aligned`].
pub fn classify(inst: &Instance) -> InstanceClass {
    let mut keys: Vec<(Scalar, Scalar)> = inst
        .iter()
        .map(|a| (a.base_factor(), a.solo_range()))
        .collect();

    let ties = has_duplicates(keys.iter().map(|k| &k.0)) || has_duplicates(keys.iter().map(|k| &k.1));
    if ties {
        return InstanceClass {
            kind: ClassKind::Mixed,
            ties,
        };
    }

    keys.sort_by(|a, b| a.0.cmp(&b.0));
    let ranges = keys.iter().map(|k| &k.1).collect::<Vec<_>>();
    let kind = if ranges.windows(2).all(|w| w[0] < w[1]) {
        ClassKind::Aligned
    } else if ranges.windows(2).all(|w| w[0] > w[1]) {
        // ascending v/c² with descending v/c: read backwards it is the
        // complete reverse order labeling
        ClassKind::CompleteReverseOrder
    } else {
        ClassKind::Mixed
    };
    InstanceClass { kind, ties }
}

fn has_duplicates<'a>(values: impl Iterator<Item = &'a Scalar>) -> bool {
    let mut sorted: Vec<&Scalar> = values.collect();
    sorted.sort();
    sorted.windows(2).any(|w| w[0].cmp(w[1]) == Ordering::Equal)
}

/// True when the instance, in its given order, already has strictly
/// decreasing `v/c²` and strictly increasing `v/c`.
pub fn is_cro_labeled(inst: &Instance) -> bool {
    inst.airplanes().windows(2).all(|w| {
        w[0].base_factor() > w[1].base_factor() && w[0].solo_range() < w[1].solo_range()
    })
}

/// The hypothesis of the index estimate: `v/c²` strictly decreasing and
/// every airplane in reverse order against the last one (the one with the
/// smallest `v/c²`), i.e. `v_r/c_r < v_n/c_n` for all `r < n`.
///
/// Every complete reverse order fleet qualifies. So do fleets whose
/// capacities were rounded, which can disturb the order of `v/c` between
/// small airplanes without touching their relation to the last one.
pub fn is_reverse_order_against_last(inst: &Instance) -> bool {
    if inst.len() < 2 {
        return false;
    }
    let fleet = inst.sorted_by_base_factor();
    let a = fleet.airplanes();
    let last = a[a.len() - 1].solo_range();
    a.windows(2).all(|w| w[0].base_factor() > w[1].base_factor())
        && a[..a.len() - 1].iter().all(|x| x.solo_range() < last)
}
