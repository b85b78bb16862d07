//! The central extension 1 → Z/2 → 𝒢 → G → 1 determined by a cocycle.

use super::{coboundary_echelon, pair_index, Cocycle2, CohomologyError};
use crate::gf2::Gf2Vec;
use crate::group::{odd_core, FiniteGroup, Subgroup};

/// The group 𝒢 of order 2|G| on pairs (ε, g) with product
/// (ε₁+ε₂+f(g₁,g₂), g₁g₂), enumerated g-major: (ε, g) ↦ 2g + ε. The
/// distinguished central involution z = (1, e) sits at index 1 and plays the
/// role of −1; the projection drops ε.
pub struct ExtensionGroup {
    base: FiniteGroup,
    cocycle: Cocycle2,
    total: FiniteGroup,
}

pub fn build_extension(
    base: &FiniteGroup,
    f: &Cocycle2,
) -> Result<ExtensionGroup, CohomologyError> {
    let n = base.order();
    if f.order() != n {
        return Err(CohomologyError::OrderMismatch {
            cocycle: f.order(),
            group: n,
        });
    }
    let order = 2 * n;
    let mut table = vec![0usize; order * order];
    for g1 in 0..n {
        for e1 in 0..2usize {
            for g2 in 0..n {
                for e2 in 0..2usize {
                    let sign = e1 ^ e2 ^ usize::from(f.value(g1, g2));
                    table[(2 * g1 + e1) * order + (2 * g2 + e2)] =
                        2 * base.mul(g1, g2) + sign;
                }
            }
        }
    }
    let labels = base.labels().map(|l| {
        l.iter()
            .flat_map(|name| [name.clone(), format!("-{name}")])
            .collect()
    });
    // Associativity of this table is precisely the cocycle identity, which
    // the Cocycle2 invariant guarantees.
    let total = FiniteGroup::from_table(order, table, labels)
        .expect("a valid cocycle yields a valid extension table");
    Ok(ExtensionGroup {
        base: base.clone(),
        cocycle: f.clone(),
        total,
    })
}

impl ExtensionGroup {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn total(&self) -> &FiniteGroup {
        &self.total
    }

    pub fn cocycle(&self) -> &Cocycle2 {
        &self.cocycle
    }

    /// The central involution (1, e), conventionally written −1.
    pub fn z(&self) -> usize {
        1
    }

    pub fn projection(&self, t: usize) -> usize {
        t / 2
    }

    /// The two preimages of a base element, ε = 0 first.
    pub fn lifts(&self, g: usize) -> [usize; 2] {
        [2 * g, 2 * g + 1]
    }

    /// Splitting decided two independent ways (coboundary membership and
    /// complement search), which must agree.
    pub fn is_split(&self) -> bool {
        let by_linear_algebra = coboundary_echelon(&self.base).contains(self.cocycle.bits());
        let by_complement = self.has_complement();
        assert_eq!(
            by_linear_algebra, by_complement,
            "splitting criteria disagree"
        );
        by_linear_algebra
    }

    /// Search for a subgroup of order |G| meeting ⟨z⟩ trivially: lift a
    /// generating set of the base in all 2^k sign patterns and test whether
    /// some closure stays at order |G|. A section exists iff one does.
    pub(crate) fn has_complement(&self) -> bool {
        let gens = self.base.small_generating_set();
        (0..1usize << gens.len()).any(|mask| {
            let lifted: Vec<usize> = gens
                .iter()
                .enumerate()
                .map(|(i, &g)| 2 * g + (mask >> i & 1))
                .collect();
            self.total.closure_set(&lifted).len() == self.base.order()
        })
    }

    /// Orders of the two fiber elements over each base element, ascending.
    pub fn preimage_order_profile(&self) -> Vec<[usize; 2]> {
        (0..self.base.order())
            .map(|g| self.fiber_orders(g))
            .collect()
    }

    pub fn fiber_orders(&self, g: usize) -> [usize; 2] {
        let [a, b] = self.lifts(g);
        let mut pair = [self.total.ord(a), self.total.ord(b)];
        pair.sort_unstable();
        pair
    }
}

impl std::fmt::Debug for ExtensionGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ExtensionGroup(base order={}, split={})",
            self.base.order(),
            self.cocycle.is_zero()
        )
    }
}

/// Copy the values of `f` onto the subgroup `h`, reindexed to the standalone
/// group `h.to_group()`.
pub fn restrict_cocycle(f: &Cocycle2, h: &Subgroup<'_>) -> Result<Cocycle2, CohomologyError> {
    let parent = h.parent();
    if f.order() != parent.order() {
        return Err(CohomologyError::OrderMismatch {
            cocycle: f.order(),
            group: parent.order(),
        });
    }
    let elements = h.elements();
    let k = elements.len();
    let mut bits = Gf2Vec::zeros((k - 1) * (k - 1));
    for (i, &gi) in elements.iter().enumerate().skip(1) {
        for (j, &gj) in elements.iter().enumerate().skip(1) {
            if f.value(gi, gj) {
                bits.set(pair_index(k, i, j), true);
            }
        }
    }
    let (group, _) = h.to_group();
    Cocycle2::from_bits(&group, bits)
}

/// The lifted odd core: the odd-order elements of the preimage of the
/// base's maximal odd-order normal subgroup. Exactly one of the two fiber
/// elements over each core element has odd order, so the lift projects
/// bijectively — indeed isomorphically — onto the core.
pub fn lift_odd_normal(ext: &ExtensionGroup) -> Result<Subgroup<'_>, CohomologyError> {
    let core = odd_core(&ext.base)?;
    let members: Vec<usize> = core
        .elements()
        .iter()
        .flat_map(|&g| ext.lifts(g))
        .filter(|&t| ext.total.ord(t) % 2 == 1)
        .collect();
    let lifted = Subgroup::new(&ext.total, members)
        .expect("odd-order elements of the core preimage form a subgroup");
    assert_eq!(lifted.order(), core.order());
    assert!(lifted.is_normal(), "lifted core must be normal in the total");
    let projected: Vec<usize> = lifted
        .elements()
        .iter()
        .map(|&t| ext.projection(t))
        .collect();
    assert_eq!(
        projected,
        core.elements(),
        "lifted core must project bijectively onto the odd core"
    );
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cocycle_space;
    use crate::group::{direct_product, isomorphic, make_group, GroupError};

    #[test]
    fn split_extension_is_the_direct_product() {
        let g = make_group("C6").unwrap();
        let ext = build_extension(&g, &Cocycle2::zero(&g)).unwrap();
        assert_eq!(ext.total().order(), 12);
        let c2xc6 = direct_product(&make_group("C2").unwrap(), &g).unwrap();
        assert!(isomorphic(ext.total(), &c2xc6).unwrap());
        assert!(ext.is_split());
    }

    #[test]
    fn z_is_central_of_order_two_and_projection_is_a_homomorphism() {
        let g = make_group("D7").unwrap();
        let space = cocycle_space(&g).unwrap();
        for class in space.classes() {
            let ext = build_extension(&g, class.representative()).unwrap();
            let total = ext.total();
            let z = ext.z();
            assert_eq!(total.ord(z), 2);
            assert!((0..total.order()).all(|t| total.mul(z, t) == total.mul(t, z)));
            for a in 0..total.order() {
                for b in 0..total.order() {
                    assert_eq!(
                        ext.projection(total.mul(a, b)),
                        g.mul(ext.projection(a), ext.projection(b))
                    );
                }
            }
            // Kernel of the projection is exactly {identity, z}.
            let kernel: Vec<usize> = (0..total.order())
                .filter(|&t| ext.projection(t) == 0)
                .collect();
            assert_eq!(kernel, vec![0, z]);
        }
    }

    #[test]
    fn labels_mark_the_sign() {
        let g = make_group("C4").unwrap();
        let ext = build_extension(&g, &Cocycle2::zero(&g)).unwrap();
        assert_eq!(ext.total().label(0), "e");
        assert_eq!(ext.total().label(1), "-e");
        assert_eq!(ext.total().label(2), "g");
        assert_eq!(ext.total().label(3), "-g");
    }

    #[test]
    fn preimage_profiles() {
        // Split case: every fiber is {d, lcm(2, d)}.
        let g = make_group("C12").unwrap();
        let ext = build_extension(&g, &Cocycle2::zero(&g)).unwrap();
        for (g_el, profile) in ext.preimage_order_profile().into_iter().enumerate() {
            let d = g.ord(g_el);
            let mut expected = [d, if d % 2 == 0 { d } else { 2 * d }];
            expected.sort_unstable();
            assert_eq!(profile, expected);
        }
        assert_eq!(ext.fiber_orders(0), [1, 2]);

        // C8 over C4: both lifts of a generator generate.
        let c4 = make_group("C4").unwrap();
        let space = cocycle_space(&c4).unwrap();
        let ext = build_extension(&c4, space.classes()[1].representative()).unwrap();
        assert_eq!(ext.fiber_orders(1), [8, 8]);
        assert_eq!(ext.fiber_orders(0), [1, 2]);
    }

    #[test]
    fn cohomologous_cocycles_build_isomorphic_totals() {
        let g = make_group("Q8").unwrap();
        let space = cocycle_space(&g).unwrap();
        let class = &space.classes()[2];
        let ext = build_extension(&g, class.representative()).unwrap();
        for b in space.coboundary_basis() {
            let mut bits = class.representative().bits().clone();
            bits.xor_assign(b.bits());
            let shifted = Cocycle2::from_bits(&g, bits).unwrap();
            let other = build_extension(&g, &shifted).unwrap();
            assert!(isomorphic(ext.total(), other.total()).unwrap());
        }
    }

    #[test]
    fn exactly_one_class_of_q8_splits() {
        let g = make_group("Q8").unwrap();
        let space = cocycle_space(&g).unwrap();
        let split_count = space
            .classes()
            .iter()
            .filter(|c| build_extension(&g, c.representative()).unwrap().is_split())
            .count();
        assert_eq!(split_count, 1);
    }

    #[test]
    fn lifted_core_exists_for_every_class() {
        for spec in ["D7", "C15", "C12"] {
            let g = make_group(spec).unwrap();
            let space = cocycle_space(&g).unwrap();
            for class in space.classes() {
                let ext = build_extension(&g, class.representative()).unwrap();
                let lifted = lift_odd_normal(&ext).unwrap();
                let core = odd_core(&g).unwrap();
                assert_eq!(lifted.order(), core.order());
                let (lifted_group, _) = lifted.to_group();
                let (core_group, _) = core.to_group();
                assert!(isomorphic(&lifted_group, &core_group).unwrap());
            }
        }
    }

    #[test]
    fn lifted_core_needs_a_cyclic_two_sylow() {
        let g = make_group("Q8").unwrap();
        let ext = build_extension(&g, &Cocycle2::zero(&g)).unwrap();
        assert!(matches!(
            lift_odd_normal(&ext),
            Err(CohomologyError::Group(GroupError::SylowNotCyclic { .. }))
        ));
    }
}
