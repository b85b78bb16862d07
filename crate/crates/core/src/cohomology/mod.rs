//! Degree-two group cohomology with Z/2 coefficients, computed by exact
//! GF(2) linear algebra, and the central extensions it classifies.
//!
//! A normalized 2-cocycle on G is a function f: G×G → Z/2 with
//! f(e,·) = f(·,e) = 0 satisfying f(g,h) + f(gh,k) + f(h,k) + f(g,hk) = 0.
//! Only pairs of non-identity elements carry free values, so f is stored as
//! a bit vector of length (|G|−1)²; triples containing the identity satisfy
//! the identity automatically.

mod extension;

pub use extension::{build_extension, lift_odd_normal, restrict_cocycle, ExtensionGroup};

use thiserror::Error;

use crate::gf2::{Gf2Echelon, Gf2Matrix, Gf2Vec};
use crate::group::{FiniteGroup, GroupError};

/// Largest group order accepted by [`cocycle_space`]. The linear system has
/// (|G|−1)² unknowns and (|G|−1)³ equations, so this bound keeps solves well
/// under a second.
pub const MAX_COHOMOLOGY_ORDER: usize = 32;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cocycle bit vector has length {len}, expected {expected} for group order {order}")]
    Shape {
        order: usize,
        expected: usize,
        len: usize,
    },
    #[error("cocycle identity fails at ({g},{h},{k})")]
    Identity { g: usize, h: usize, k: usize },
    #[error("cocycle lives on a group of order {cocycle}, got a group of order {group}")]
    OrderMismatch { cocycle: usize, group: usize },
}

/// Bit index of the pair (g, h) with g, h ≥ 1, inside a vector of length
/// (order−1)². Row-major in g, so ascending bit index is the row-major
/// reading order of the value matrix.
#[inline]
fn pair_index(order: usize, g: usize, h: usize) -> usize {
    (g - 1) * (order - 1) + (h - 1)
}

/// A normalized Z/2-valued 2-cocycle on a group of the recorded order.
#[derive(Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    order: usize,
    bits: Gf2Vec,
}

impl Cocycle2 {
    /// The zero cocycle (the class of the split extension).
    pub fn zero(group: &FiniteGroup) -> Self {
        let n = group.order();
        Cocycle2 {
            order: n,
            bits: Gf2Vec::zeros((n - 1) * (n - 1)),
        }
    }

    /// Wrap and fully validate a bit vector indexed by [`pair_index`].
    pub fn from_bits(group: &FiniteGroup, bits: Gf2Vec) -> Result<Self, CohomologyError> {
        let n = group.order();
        let expected = (n - 1) * (n - 1);
        if bits.len() != expected {
            return Err(CohomologyError::Shape {
                order: n,
                expected,
                len: bits.len(),
            });
        }
        let candidate = Cocycle2 { order: n, bits };
        candidate.check_identity(group)?;
        Ok(candidate)
    }

    fn check_identity(&self, group: &FiniteGroup) -> Result<(), CohomologyError> {
        let n = self.order;
        for g in 1..n {
            for h in 1..n {
                for k in 1..n {
                    let lhs = self.value(g, h)
                        ^ self.value(group.mul(g, h), k)
                        ^ self.value(h, k)
                        ^ self.value(g, group.mul(h, k));
                    if lhs {
                        return Err(CohomologyError::Identity { g, h, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// f(g, h); zero whenever either argument is the identity.
    pub fn value(&self, g: usize, h: usize) -> bool {
        if g == 0 || h == 0 {
            false
        } else {
            self.bits.get(pair_index(self.order, g, h))
        }
    }

    pub fn bits(&self) -> &Gf2Vec {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }
}

impl std::fmt::Debug for Cocycle2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cocycle2(order={}, weight={})", self.order, self.bits.count_ones())
    }
}

/// Text dump: order line, then the full |G|×|G| bit matrix row by row.
impl std::fmt::Display for Cocycle2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.order)?;
        for g in 0..self.order {
            let row: Vec<&str> = (0..self.order)
                .map(|h| if self.value(g, h) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// One element of H²(G; Z/2), held as its canonical representative: the
/// lexicographically least bit matrix in the coset of the coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    representative: Cocycle2,
}

impl CohomologyClass {
    pub fn representative(&self) -> &Cocycle2 {
        &self.representative
    }

    /// The class of the split extension is represented by the zero matrix.
    pub fn is_split_class(&self) -> bool {
        self.representative.is_zero()
    }
}

/// Cocycle and coboundary spaces of a group, with one canonical
/// representative per cohomology class.
pub struct CocycleSpace {
    order: usize,
    cocycle_rank: usize,
    coboundaries: Gf2Echelon,
    classes: Vec<CohomologyClass>,
}

impl CocycleSpace {
    pub fn order(&self) -> usize {
        self.order
    }

    /// dim Z²(G; Z/2) over GF(2).
    pub fn cocycle_rank(&self) -> usize {
        self.cocycle_rank
    }

    /// dim B²(G; Z/2).
    pub fn coboundary_rank(&self) -> usize {
        self.coboundaries.rank()
    }

    /// dim H² = dim Z² − dim B²; the class count is 2 to this power.
    pub fn class_dim(&self) -> usize {
        self.cocycle_rank - self.coboundaries.rank()
    }

    /// All classes, sorted ascending by representative; the split (zero)
    /// class always comes first.
    pub fn classes(&self) -> &[CohomologyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn coboundary_basis(&self) -> Vec<Cocycle2> {
        self.coboundaries
            .basis()
            .iter()
            .map(|v| Cocycle2 {
                order: self.order,
                bits: v.clone(),
            })
            .collect()
    }

    pub fn is_coboundary(&self, f: &Cocycle2) -> bool {
        f.order == self.order && self.coboundaries.contains(&f.bits)
    }

    /// Canonical representative of the class of `f`.
    pub fn reduce_to_representative(&self, f: &Cocycle2) -> Cocycle2 {
        assert_eq!(f.order, self.order, "cocycle belongs to a different group");
        Cocycle2 {
            order: self.order,
            bits: self.coboundaries.reduce(f.bits.clone()),
        }
    }

    /// Index of the class of `f` in [`classes`](Self::classes).
    pub fn class_index_of(&self, f: &Cocycle2) -> usize {
        let rep = self.reduce_to_representative(f);
        self.classes
            .iter()
            .position(|c| c.representative == rep)
            .expect("every cocycle reduces to an enumerated class")
    }
}

/// The coboundary δu for the indicator function of the single element `x`:
/// δu(g,h) = [g=x] + [h=x] + [gh=x].
fn indicator_coboundary(group: &FiniteGroup, x: usize) -> Gf2Vec {
    let n = group.order();
    let mut v = Gf2Vec::zeros((n - 1) * (n - 1));
    for g in 1..n {
        for h in 1..n {
            let value = (g == x) ^ (h == x) ^ (group.mul(g, h) == x);
            if value {
                v.set(pair_index(n, g, h), true);
            }
        }
    }
    v
}

pub(crate) fn coboundary_echelon(group: &FiniteGroup) -> Gf2Echelon {
    let n = group.order();
    let mut echelon = Gf2Echelon::new((n - 1) * (n - 1));
    for x in 1..n {
        echelon.insert(indicator_coboundary(group, x));
    }
    echelon
}

/// Solve for Z², B² and the set of H² classes of `group`.
pub fn cocycle_space(group: &FiniteGroup) -> Result<CocycleSpace, CohomologyError> {
    let n = group.order();
    if n > MAX_COHOMOLOGY_ORDER {
        return Err(GroupError::OrderBound {
            order: n,
            bound: MAX_COHOMOLOGY_ORDER,
        }
        .into());
    }
    let vars = (n - 1) * (n - 1);

    // Cocycle identity, one row per triple of non-identity elements. Terms
    // are toggled so that coincident pairs cancel over GF(2); terms whose
    // pair contains the identity contribute nothing.
    let mut rows = Vec::new();
    for g in 1..n {
        for h in 1..n {
            let gh = group.mul(g, h);
            for k in 1..n {
                let hk = group.mul(h, k);
                let mut row = Gf2Vec::zeros(vars);
                let mut toggle = |a: usize, b: usize| {
                    if a != 0 && b != 0 {
                        let i = pair_index(n, a, b);
                        row.set(i, !row.get(i));
                    }
                };
                toggle(g, h);
                toggle(gh, k);
                toggle(h, k);
                toggle(g, hk);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let system = Gf2Matrix::from_rows(rows, vars);
    let cocycle_basis = system.kernel_basis();
    let cocycle_rank = cocycle_basis.len();

    let coboundaries = coboundary_echelon(group);
    // B² ⊆ Z²: every coboundary satisfies the identity.
    debug_assert!(coboundaries
        .basis()
        .iter()
        .all(|b| system.mul_vec(b).is_zero()));

    // A transversal of B² inside Z²: kernel vectors that enlarge the
    // coboundary echelon. XOR-combinations of the transversal hit every
    // class exactly once.
    let mut quotient = coboundary_echelon(group);
    let mut transversal = Vec::new();
    for v in &cocycle_basis {
        if quotient.insert(v.clone()) {
            transversal.push(v.clone());
        }
    }
    assert!(
        transversal.len() <= 24,
        "H² dimension {} too large to enumerate",
        transversal.len()
    );

    let mut classes: Vec<CohomologyClass> = (0u32..1 << transversal.len())
        .map(|mask| {
            let mut combo = Gf2Vec::zeros(vars);
            for (i, v) in transversal.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    combo.xor_assign(v);
                }
            }
            let representative = Cocycle2 {
                order: n,
                bits: coboundaries.reduce(combo),
            };
            debug_assert!(representative.check_identity(group).is_ok());
            CohomologyClass { representative }
        })
        .collect();
    classes.sort_unstable_by(|a, b| a.representative.bits.cmp(&b.representative.bits));
    debug_assert!(classes.windows(2).all(|w| w[0] != w[1]));

    Ok(CocycleSpace {
        order: n,
        cocycle_rank,
        coboundaries,
        classes,
    })
}

/// Does the extension defined by `f` split? Decided two independent ways —
/// coboundary membership over GF(2), and a search for a complement subgroup
/// in the extension — which are required to agree.
pub fn is_split(group: &FiniteGroup, f: &Cocycle2) -> bool {
    assert_eq!(
        f.order,
        group.order(),
        "cocycle belongs to a group of a different order"
    );
    build_extension(group, f)
        .expect("orders match and the cocycle is validated")
        .is_split()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{isomorphic, make_group, Subgroup};

    fn classes_of(spec: &str) -> CocycleSpace {
        cocycle_space(&make_group(spec).unwrap()).unwrap()
    }

    #[test]
    fn class_counts_for_small_groups() {
        assert_eq!(classes_of("C1").class_count(), 1);
        assert_eq!(classes_of("C2").class_count(), 2);
        assert_eq!(classes_of("C3").class_count(), 1);
        assert_eq!(classes_of("C4").class_count(), 2);
        assert_eq!(classes_of("C6").class_count(), 2);
        assert_eq!(classes_of("C15").class_count(), 1);
        assert_eq!(classes_of("Q8").class_count(), 4);
    }

    #[test]
    fn zero_class_is_first_and_split() {
        let space = classes_of("C4");
        assert!(space.classes()[0].is_split_class());
        assert!(!space.classes()[1].is_split_class());
        assert_eq!(space.class_dim(), 1);
        assert_eq!(
            space.class_count(),
            1 << (space.cocycle_rank() - space.coboundary_rank())
        );
    }

    #[test]
    fn coboundaries_are_cocycles_and_split() {
        let g = make_group("D7").unwrap();
        let space = cocycle_space(&g).unwrap();
        for b in space.coboundary_basis() {
            // from_bits re-runs the cocycle identity.
            let f = Cocycle2::from_bits(&g, b.bits().clone()).unwrap();
            assert!(space.is_coboundary(&f));
            assert!(is_split(&g, &f));
        }
    }

    #[test]
    fn representative_is_canonical() {
        let g = make_group("C6").unwrap();
        let space = cocycle_space(&g).unwrap();
        for class in space.classes() {
            let rep = class.representative();
            for b in space.coboundary_basis() {
                let mut shifted = rep.bits().clone();
                shifted.xor_assign(b.bits());
                let back = space
                    .reduce_to_representative(&Cocycle2::from_bits(&g, shifted).unwrap());
                assert_eq!(&back, rep);
            }
        }
    }

    #[test]
    fn nonzero_class_totals_are_the_expected_cyclic_groups() {
        for (base, expected) in [("C2", "C4"), ("C4", "C8")] {
            let g = make_group(base).unwrap();
            let space = cocycle_space(&g).unwrap();
            let class = &space.classes()[1];
            let ext = build_extension(&g, class.representative()).unwrap();
            assert!(!is_split(&g, class.representative()));
            assert!(isomorphic(ext.total(), &make_group(expected).unwrap()).unwrap());
        }
    }

    #[test]
    fn identity_violations_are_rejected() {
        let g = make_group("C4").unwrap();
        // A single set bit off the diagonal breaks the identity somewhere.
        let mut bits = Gf2Vec::zeros(9);
        bits.set(1, true);
        assert!(matches!(
            Cocycle2::from_bits(&g, bits),
            Err(CohomologyError::Identity { .. })
        ));
        let bad_len = Gf2Vec::zeros(4);
        assert!(matches!(
            Cocycle2::from_bits(&g, bad_len),
            Err(CohomologyError::Shape { expected: 9, .. })
        ));
    }

    #[test]
    fn bound_is_enforced() {
        let g = make_group("C64").unwrap();
        assert!(matches!(
            cocycle_space(&g),
            Err(CohomologyError::Group(GroupError::OrderBound {
                order: 64,
                bound: 32
            }))
        ));
    }

    #[test]
    fn restriction_of_the_c8_class_to_c2_does_not_split() {
        let c4 = make_group("C4").unwrap();
        let space = cocycle_space(&c4).unwrap();
        let class = &space.classes()[1];
        // The order-2 subgroup of C4 is {0, 2}.
        let sub = Subgroup::new(&c4, vec![0, 2]).unwrap();
        let restricted = restrict_cocycle(class.representative(), &sub).unwrap();
        let (c2, _) = sub.to_group();
        assert!(!is_split(&c2, &restricted));

        let zero = restrict_cocycle(&Cocycle2::zero(&c4), &sub).unwrap();
        assert!(is_split(&c2, &zero));

        let trivial = Subgroup::new(&c4, vec![0]).unwrap();
        let onto_trivial = restrict_cocycle(class.representative(), &trivial).unwrap();
        assert!(is_split(&trivial.to_group().0, &onto_trivial));
    }

    #[test]
    fn cocycle_matrix_dump_is_readable() {
        let c2 = make_group("C2").unwrap();
        let space = cocycle_space(&c2).unwrap();
        let dump = space.classes()[1].representative().to_string();
        assert_eq!(dump, "2\n0 0\n0 1\n");
    }

    #[test]
    fn class_index_round_trips() {
        let g = make_group("Q8").unwrap();
        let space = cocycle_space(&g).unwrap();
        for (i, class) in space.classes().iter().enumerate() {
            // Shift by a coboundary; the index must be recovered.
            let mut bits = class.representative().bits().clone();
            if let Some(b) = space.coboundary_basis().first() {
                bits.xor_assign(b.bits());
            }
            let f = Cocycle2::from_bits(&g, bits).unwrap();
            assert_eq!(space.class_index_of(&f), i);
        }
    }
}
