//! Domain types: airplanes, instances, schedules and classification.

use std::collections::HashMap;
use std::fmt;

use crate::error::{ArpError, Result};
use crate::scalar::Scalar;

/// Identity label of an airplane within an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AirplaneId(pub u32);

impl fmt::Display for AirplaneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for AirplaneId {
    fn from(v: u32) -> Self {
        AirplaneId(v)
    }
}

/// Converts plain integers into ids, e.g. `ids(&[2, 3, 1])`.
pub fn ids(raw: &[u32]) -> Vec<AirplaneId> {
    raw.iter().copied().map(AirplaneId).collect()
}

/// One aircraft: fuel capacity `v` (tanks) and consumption rate `c`
/// (tanks per km), both strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Airplane {
    id: AirplaneId,
    v: Scalar,
    c: Scalar,
}

impl Airplane {
    pub fn new(id: impl Into<AirplaneId>, v: Scalar, c: Scalar) -> Result<Self> {
        let id = id.into();
        if !v.is_positive() {
            return Err(ArpError::NonPositive { id, field: "v" });
        }
        if !c.is_positive() {
            return Err(ArpError::NonPositive { id, field: "c" });
        }
        Ok(Airplane { id, v, c })
    }

    /// Builds an airplane from decimal strings, e.g. `("961.8", "401")`.
    pub fn parse(id: u32, v: &str, c: &str) -> Result<Self> {
        Airplane::new(id, v.parse()?, c.parse()?)
    }

    pub fn id(&self) -> AirplaneId {
        self.id
    }

    pub fn v(&self) -> &Scalar {
        &self.v
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// `v / c`: how far the airplane flies alone.
    pub fn solo_range(&self) -> Scalar {
        &self.v / &self.c
    }

    /// `v / c²`, the relative distance factor at zero context.
    pub fn base_factor(&self) -> Scalar {
        &self.v / &(&self.c * &self.c)
    }
}

/// A fleet: non-empty, ids distinct. Order is the caller's labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    airplanes: Vec<Airplane>,
}

impl Instance {
    pub fn new(airplanes: Vec<Airplane>) -> Result<Self> {
        if airplanes.is_empty() {
            return Err(ArpError::EmptyInstance);
        }
        let mut seen = HashMap::with_capacity(airplanes.len());
        for a in &airplanes {
            if seen.insert(a.id, ()).is_some() {
                return Err(ArpError::DuplicateId(a.id));
            }
        }
        Ok(Instance { airplanes })
    }

    /// Builds an instance with ids `1..=n` from `(v, c)` decimal pairs.
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        let airplanes = pairs
            .iter()
            .enumerate()
            .map(|(i, (v, c))| Airplane::parse(i as u32 + 1, v, c))
            .collect::<Result<Vec<_>>>()?;
        Instance::new(airplanes)
    }

    pub fn len(&self) -> usize {
        self.airplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.airplanes.is_empty()
    }

    pub fn airplanes(&self) -> &[Airplane] {
        &self.airplanes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Airplane> {
        self.airplanes.iter()
    }

    pub fn get(&self, id: AirplaneId) -> Option<&Airplane> {
        self.airplanes.iter().find(|a| a.id == id)
    }

    pub fn ids(&self) -> Vec<AirplaneId> {
        self.airplanes.iter().map(|a| a.id).collect()
    }

    pub fn total_consumption(&self) -> Scalar {
        self.airplanes.iter().map(|a| a.c()).sum()
    }

    /// Maps a permutation of ids onto airplane references, position by
    /// position. Fails unless `pi` is a bijection onto the instance ids.
    pub fn resolve(&self, pi: &[AirplaneId]) -> Result<Vec<&Airplane>> {
        if pi.len() != self.len() {
            return Err(ArpError::NotAPermutation(format!(
                "expected {} ids, got {}",
                self.len(),
                pi.len()
            )));
        }
        let index: HashMap<AirplaneId, &Airplane> =
            self.airplanes.iter().map(|a| (a.id, a)).collect();
        let mut used = HashMap::with_capacity(pi.len());
        pi.iter()
            .map(|id| {
                let a = index
                    .get(id)
                    .ok_or_else(|| ArpError::NotAPermutation(format!("unknown id {id}")))?;
                if used.insert(*id, ()).is_some() {
                    return Err(ArpError::NotAPermutation(format!("id {id} repeated")));
                }
                Ok(*a)
            })
            .collect()
    }

    /// Same airplanes, reordered by decreasing `v/c²` (ties by id).
    pub fn sorted_by_base_factor(&self) -> Instance {
        let mut keyed: Vec<(Scalar, Airplane)> = self
            .airplanes
            .iter()
            .map(|a| (a.base_factor(), a.clone()))
            .collect();
        keyed.sort_by(|(ka, a), (kb, b)| kb.cmp(ka).then(a.id.cmp(&b.id)));
        Instance {
            airplanes: keyed.into_iter().map(|(_, a)| a).collect(),
        }
    }

    /// Same airplanes, reordered by id.
    pub fn sorted_by_id(&self) -> Instance {
        let mut airplanes = self.airplanes.clone();
        airplanes.sort_by_key(|a| a.id);
        Instance { airplanes }
    }
}

impl<'a> IntoIterator for &'a Instance {
    type Item = &'a Airplane;
    type IntoIter = std::slice::Iter<'a, Airplane>;
    fn into_iter(self) -> Self::IntoIter {
        self.airplanes.iter()
    }
}

/// A drop-out permutation with its derived quantities.
///
/// `pi[0]` drops out first and `pi[n-1]` flies farthest. `cumulative[l]`
/// is the consumption of every airplane after position `l`, so the last
/// entry is zero; `legs[l]` is the extra distance contributed by `pi[l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub pi: Vec<AirplaneId>,
    pub cumulative: Vec<Scalar>,
    pub legs: Vec<Scalar>,
    pub total: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// `v/c²` and `v/c` sortable in one common non-decreasing order.
    Aligned,
    /// `v/c²` strictly decreasing while `v/c` strictly increasing.
    CompleteReverseOrder,
    Mixed,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Aligned => "aligned",
            ClassKind::CompleteReverseOrder => "complete-reverse-order",
            ClassKind::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InstanceClass {
    pub kind: ClassKind,
    /// Some pair shares `v/c²` or `v/c`.
    pub ties: bool,
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ties {
            write!(f, "{} (with ties)", self.kind)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

/// Bounds used when generating large complete reverse order fleets:
/// consecutive `v/c` gaps at least `epsilon`, `v/c` at most `max_range`,
/// `c` at most `max_consumption`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionParams {
    epsilon: Scalar,
    max_range: Scalar,
    max_consumption: Scalar,
}

impl AssumptionParams {
    pub fn new(epsilon: Scalar, max_range: Scalar, max_consumption: Scalar) -> Result<Self> {
        for (name, value) in [
            ("epsilon", &epsilon),
            ("max_range", &max_range),
            ("max_consumption", &max_consumption),
        ] {
            if !value.is_positive() {
                return Err(ArpError::InfeasibleParams(format!(
                    "{name} must be strictly positive, got {value}"
                )));
            }
        }
        Ok(AssumptionParams {
            epsilon,
            max_range,
            max_consumption,
        })
    }

    pub fn epsilon(&self) -> &Scalar {
        &self.epsilon
    }

    pub fn max_range(&self) -> &Scalar {
        &self.max_range
    }

    pub fn max_consumption(&self) -> &Scalar {
        &self.max_consumption
    }
}

impl Default for AssumptionParams {
    /// `epsilon = 0.001`, `max_range = 50`, `max_consumption = 100`.
    fn default() -> Self {
        AssumptionParams {
            epsilon: Scalar::from_ratio(1, 1000),
            max_range: Scalar::from_integer(50),
            max_consumption: Scalar::from_integer(100),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_fields() {
        assert_eq!(
            Airplane::parse(3, "0", "1"),
            Err(ArpError::NonPositive {
                id: AirplaneId(3),
                field: "v"
            })
        );
        assert!(Airplane::parse(1, "1", "-2").is_err());
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        let a = Airplane::parse(1, "1", "1").unwrap();
        assert_eq!(
            Instance::new(vec![a.clone(), a]),
            Err(ArpError::DuplicateId(AirplaneId(1)))
        );
        assert_eq!(Instance::new(vec![]), Err(ArpError::EmptyInstance));
    }

    #[test]
    fn resolve_checks_bijection() {
        let inst = Instance::from_pairs(&[("4", "2"), ("7", "3")]).unwrap();
        assert!(inst.resolve(&ids(&[2, 1])).is_ok());
        assert!(inst.resolve(&ids(&[1, 1])).is_err());
        assert!(inst.resolve(&ids(&[1])).is_err());
        assert!(inst.resolve(&ids(&[1, 3])).is_err());
    }

    #[test]
    fn base_factor_ordering() {
        let inst = Instance::from_pairs(&[("4", "2"), ("12", "3"), ("7", "3")]).unwrap();
        let sorted = inst.sorted_by_base_factor();
        assert_eq!(sorted.ids(), ids(&[2, 1, 3]));
    }
}
