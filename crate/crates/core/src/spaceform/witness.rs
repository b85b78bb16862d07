//! Selection of extension classes consistent with the geometry of the
//! quotient, and the conjugacy-avoidance witness elements that feed the
//! eta-invariant separation argument.

use std::collections::BTreeSet;

use super::criteria::free_action_necessary;
use super::{SpaceFormError, SpaceFormInstance};
use crate::cohomology::{
    build_extension, cocycle_space, is_split, restrict_cocycle, CocycleSpace, CohomologyClass,
    ExtensionGroup,
};
use crate::group::{FiniteGroup, Subgroup};

/// Filter the classes of an already-computed cocycle space down to those
/// whose restriction to every cyclic subgroup C matches the pin parity:
/// split on even-order C exactly when m is even (restrictions to odd-order
/// subgroups always split and constrain nothing).
pub(crate) fn consistent_from_space(
    group: &FiniteGroup,
    m: usize,
    space: &CocycleSpace,
) -> Vec<CohomologyClass> {
    let mut cyclic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..group.order() {
        let sub = group
            .subgroup_closure(&[x])
            .expect("a single generator always closes");
        if sub.order() % 2 == 0 {
            cyclic.insert(sub.elements().to_vec());
        }
    }
    let want_split = m % 2 == 0;
    space
        .classes()
        .iter()
        .filter(|class| {
            cyclic.iter().all(|elements| {
                let sub = Subgroup::new(group, elements.clone())
                    .expect("cyclic closures are subgroups");
                let f = restrict_cocycle(class.representative(), &sub)
                    .expect("restriction within the same group");
                let (h, _) = sub.to_group();
                is_split(&h, &f) == want_split
            })
        })
        .cloned()
        .collect()
}

/// The extension classes of the fundamental group that are consistent with
/// every cyclic-subgroup splitting constraint in dimension n = 2m − 1.
pub fn consistent_extension_classes(
    inst: &SpaceFormInstance,
) -> Result<Vec<CohomologyClass>, SpaceFormError> {
    if inst.n() % 2 == 0 {
        return Err(SpaceFormError::EvenDimension { n: inst.n() });
    }
    let report = free_action_necessary(inst);
    if !report.passes() {
        return Err(SpaceFormError::NoFreeAction {
            reason: report.first_reason(),
        });
    }
    let space = cocycle_space(inst.group())?;
    Ok(consistent_from_space(
        inst.group(),
        inst.half_dimension(),
        &space,
    ))
}

fn forbidden_conjugates(total: &FiniteGroup, z: usize, g: usize, m: usize) -> [usize; 2] {
    if m % 2 == 0 {
        [total.mul(z, g), total.mul(z, total.inv(g))]
    } else {
        [total.mul(z, g), total.inv(g)]
    }
}

/// First element of the extension's total group, in enumeration order, whose
/// conjugacy class avoids the forbidden pair for the given parity of m:
/// for even m the candidate must also avoid the central fiber {e, z}.
pub fn bg2_witness(ext: &ExtensionGroup, m: usize) -> Option<usize> {
    assert!(m >= 3, "witness search is defined for m >= 3, got {m}");
    let total = ext.total();
    let classes = total.conjugacy_classes();
    let mut class_of = vec![0usize; total.order()];
    for (i, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = i;
        }
    }
    (0..total.order()).find(|&g| {
        if m % 2 == 0 && (g == 0 || g == ext.z()) {
            return false;
        }
        let class = &classes[class_of[g]];
        forbidden_conjugates(total, ext.z(), g, m)
            .iter()
            .all(|bad| !class.contains(bad))
    })
}

/// Re-checks a witness candidate by direct enumeration of all conjugates,
/// without touching the conjugacy-class partition the search used.
pub fn verify_bg2_witness(total: &FiniteGroup, z: usize, g: usize, m: usize) -> bool {
    if m % 2 == 0 && (g == 0 || g == z) {
        return false;
    }
    let forbidden = forbidden_conjugates(total, z, g, m);
    (0..total.order()).all(|h| !forbidden.contains(&total.conjugate(h, g)))
}

/// Convenience used by the classifier and the verification suites: build the
/// extension for one class and run the witness search plus its independent
/// re-check.
pub(crate) fn verified_witness(
    group: &FiniteGroup,
    class: &CohomologyClass,
    m: usize,
) -> Result<(ExtensionGroup, Option<usize>), SpaceFormError> {
    let ext = build_extension(group, class.representative())?;
    let witness = bg2_witness(&ext, m);
    if let Some(g) = witness {
        assert!(
            verify_bg2_witness(ext.total(), ext.z(), g, m),
            "witness candidate failed independent re-verification"
        );
    }
    Ok((ext, witness))
}
