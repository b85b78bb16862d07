//! p-Sylow subgroups and their cyclic / generalized-quaternion classification.

use std::collections::BTreeMap;

use super::arith::is_prime;
use super::structure::isomorphic_bounded;
use super::{quaternion, FiniteGroup, GroupError, Subgroup, MAX_TABLE_ORDER};

/// Shape of a p-Sylow subgroup, as far as the periodicity conditions care.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SylowClass {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

impl std::fmt::Display for SylowClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SylowClass::Cyclic => "cyclic",
            SylowClass::GeneralizedQuaternion => "generalized quaternion",
            SylowClass::Other => "other",
        })
    }
}

/// A p-Sylow subgroup: maximal p-power order. Built by growing a p-subgroup
/// inside successive normalizers, which Sylow theory guarantees succeeds.
pub fn sylow_subgroup(group: &FiniteGroup, p: usize) -> Result<Subgroup<'_>, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime { p });
    }
    let n = group.order();
    let mut target = 1usize;
    while n % (target * p) == 0 {
        target *= p;
    }
    if target == 1 {
        return group.subgroup_closure(&[]);
    }

    // Cauchy seed: some element of order exactly p.
    let seed = (0..n)
        .find_map(|g| {
            let o = group.ord(g);
            (o % p == 0).then(|| group.power(g, o / p))
        })
        .expect("p divides the order, so an element of order p exists");

    let mut generators = vec![seed];
    let mut elements = group.closure_set(&generators);
    while elements.len() < target {
        let current = Subgroup {
            parent: group,
            elements: elements.clone(),
        };
        // p divides [N(P):P] while P is not Sylow, so some element of the
        // normalizer extends P to a strictly larger p-subgroup.
        let grown = current.normalizer().into_iter().find_map(|x| {
            if current.contains(x) {
                return None;
            }
            generators.push(x);
            let candidate = group.closure_set(&generators);
            generators.pop();
            (is_power_of(candidate.len(), p) && candidate.len() > elements.len())
                .then_some((x, candidate))
        });
        let (x, candidate) =
            grown.expect("normalizer of a non-Sylow p-subgroup contains a p-extension");
        generators.push(x);
        elements = candidate;
    }
    debug_assert_eq!(elements.len(), target);
    Ok(Subgroup {
        parent: group,
        elements,
    })
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Classify a p-subgroup given as a standalone group.
pub(crate) fn classify_p_group(h: &FiniteGroup, p: usize) -> SylowClass {
    let k = h.order();
    if (0..k).any(|g| h.ord(g) == k) {
        return SylowClass::Cyclic;
    }
    if p == 2 && k >= 8 {
        let involutions = (0..k).filter(|&g| h.ord(g) == 2).count();
        if involutions == 1 {
            // A non-cyclic 2-group with a unique involution is generalized
            // quaternion; cross-check by explicit isomorphism.
            let q = quaternion(k);
            if isomorphic_bounded(h, &q, MAX_TABLE_ORDER).unwrap_or(false) {
                return SylowClass::GeneralizedQuaternion;
            }
        }
    }
    SylowClass::Other
}

/// Sylow shape for every prime dividing the group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityReport {
    classes: BTreeMap<usize, SylowClass>,
}

impl PeriodicityReport {
    /// Map prime -> Sylow classification, in ascending prime order.
    pub fn classes(&self) -> &BTreeMap<usize, SylowClass> {
        &self.classes
    }

    pub fn class_at(&self, p: usize) -> Option<SylowClass> {
        self.classes.get(&p).copied()
    }

    /// Classification of the 2-Sylow subgroup; trivial (odd order) counts
    /// as cyclic.
    pub fn two_sylow(&self) -> SylowClass {
        self.class_at(2).unwrap_or(SylowClass::Cyclic)
    }

    /// Every Sylow subgroup is cyclic or generalized quaternion.
    pub fn all_periodic(&self) -> bool {
        self.classes.values().all(|c| *c != SylowClass::Other)
    }
}

impl FiniteGroup {
    /// Classify the p-Sylow subgroup for each prime p dividing the order.
    pub fn periodicity_report(&self) -> PeriodicityReport {
        let mut classes = BTreeMap::new();
        for (p, _) in super::arith::factorize(self.order()) {
            let sylow = sylow_subgroup(self, p).expect("factorization yields primes");
            let (h, _) = sylow.to_group();
            classes.insert(p, classify_p_group(&h, p));
        }
        PeriodicityReport { classes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    #[test]
    fn sylow_orders_are_maximal_p_powers() {
        let g = make_group("C12").unwrap();
        assert_eq!(sylow_subgroup(&g, 2).unwrap().order(), 4);
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&g, 5).unwrap().order(), 1);

        let h = make_group("C3xQ8").unwrap();
        let s2 = sylow_subgroup(&h, 2).unwrap();
        assert_eq!(s2.order(), 8);
        let (s2_group, _) = s2.to_group();
        assert!(isomorphic_bounded(&s2_group, &make_group("Q8").unwrap(), 64).unwrap());
    }

    #[test]
    fn rejects_composite_p() {
        let g = make_group("C12").unwrap();
        assert!(matches!(
            sylow_subgroup(&g, 4),
            Err(GroupError::NotPrime { p: 4 })
        ));
    }

    #[test]
    fn periodicity_classifications() {
        let report = make_group("C12").unwrap().periodicity_report();
        assert_eq!(report.class_at(2), Some(SylowClass::Cyclic));
        assert_eq!(report.class_at(3), Some(SylowClass::Cyclic));
        assert!(report.all_periodic());

        let report = make_group("Q16").unwrap().periodicity_report();
        assert_eq!(report.class_at(2), Some(SylowClass::GeneralizedQuaternion));
        assert!(report.all_periodic());

        // Dihedral of order 8: neither cyclic nor quaternion at p = 2.
        let report = make_group("D4").unwrap().periodicity_report();
        assert_eq!(report.class_at(2), Some(SylowClass::Other));
        assert!(!report.all_periodic());

        let report = make_group("D7").unwrap().periodicity_report();
        assert_eq!(report.two_sylow(), SylowClass::Cyclic);
        assert_eq!(report.class_at(7), Some(SylowClass::Cyclic));

        // Odd order: the (trivial) 2-Sylow counts as cyclic.
        let report = make_group("C15").unwrap().periodicity_report();
        assert_eq!(report.two_sylow(), SylowClass::Cyclic);
    }

    #[test]
    fn klein_four_is_other() {
        let report = make_group("C2xC2").unwrap().periodicity_report();
        assert_eq!(report.class_at(2), Some(SylowClass::Other));
    }
}
