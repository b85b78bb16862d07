//! Finite groups represented by fully validated Cayley tables.
//!
//! Every construction path funnels through [`FiniteGroup::from_table`], which
//! checks the identity convention, the Latin-square property, associativity
//! and two-sided inverses, so downstream algorithms may assume they operate
//! on an actual group.

pub(crate) mod arith;
mod io;
mod spec;
mod structure;
mod sylow;

pub use io::{load_group, save_group, write_table};
pub use spec::{cyclic, dihedral, direct_product, make_group, quaternion, semidirect, GroupExpr, GroupSpec};
pub use structure::{isomorphic, isomorphic_bounded, normal_subgroups, normal_subgroups_bounded, odd_core};
pub use sylow::{sylow_subgroup, PeriodicityReport, SylowClass};

use thiserror::Error;

/// Largest order accepted by the symbolic constructors and the exhaustive
/// enumeration routines (normal subgroups, isomorphism search).
pub const MAX_CONSTRUCTED_ORDER: usize = 64;

/// Largest Cayley table the loader accepts. Twice the construction bound so
/// central extensions of bound-sized groups still round-trip through files.
pub const MAX_TABLE_ORDER: usize = 128;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("table must hold {order}x{order} entries, got {len}")]
    TableShape { order: usize, len: usize },
    #[error("table entry at ({row},{col}) is {value}, outside 0..{order}")]
    EntryRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("index 0 is not a left identity: 0*{col} != {col}")]
    IdentityRow { col: usize },
    #[error("index 0 is not a right identity: {row}*0 != {row}")]
    IdentityColumn { row: usize },
    #[error("row {row} is not a permutation of the elements")]
    RowNotPermutation { row: usize },
    #[error("column {col} is not a permutation of the elements")]
    ColumnNotPermutation { col: usize },
    #[error("associativity fails at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("{count} labels provided for {order} elements")]
    LabelCount { count: usize, order: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("group order {order} exceeds the supported bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("cannot parse group spec {spec:?}: {reason}")]
    SpecParse { spec: String, reason: String },
    #[error("quaternion order {order} must be a power of two, at least 8")]
    QuaternionOrder { order: usize },
    #[error("invalid semidirect action x -> x^{r} on C{m}: need gcd(r,m) = 1 and r^{q} = 1 (mod {m})")]
    SemidirectAction { m: usize, q: usize, r: usize },
    #[error("{p} is not prime")]
    NotPrime { p: usize },
    #[error("elements do not form a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("2-Sylow subgroup is not cyclic (classified as {found})")]
    SylowNotCyclic { found: SylowClass },
    #[error("reading group file: {0}")]
    Io(#[from] std::io::Error),
    #[error("group file line {line}: {reason}")]
    FileFormat { line: usize, reason: String },
}

/// A finite group of order n on the element set {0, .., n-1} with identity 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major products: `table[g*order + h] = g*h`.
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validate a Cayley table and wrap it. `table` is row-major with
    /// `table[g*order + h] = g*h`; index 0 must act as the identity.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::TableShape {
                order,
                len: table.len(),
            });
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(GroupError::LabelCount {
                    count: l.len(),
                    order,
                });
            }
        }
        for row in 0..order {
            for col in 0..order {
                let value = table[row * order + col];
                if value >= order {
                    return Err(GroupError::EntryRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
        }
        for col in 0..order {
            if table[col] != col {
                return Err(GroupError::IdentityRow { col });
            }
        }
        for row in 0..order {
            if table[row * order] != row {
                return Err(GroupError::IdentityColumn { row });
            }
        }
        let mut seen = vec![false; order];
        for row in 0..order {
            seen.fill(false);
            for col in 0..order {
                let v = table[row * order + col];
                if seen[v] {
                    return Err(GroupError::RowNotPermutation { row });
                }
                seen[v] = true;
            }
        }
        for col in 0..order {
            seen.fill(false);
            for row in 0..order {
                let v = table[row * order + col];
                if seen[v] {
                    return Err(GroupError::ColumnNotPermutation { col });
                }
                seen[v] = true;
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inverse = vec![0usize; order];
        for g in 0..order {
            let mut found = None;
            for h in 0..order {
                if table[g * order + h] == 0 && table[h * order + g] == 0 {
                    found = Some(h);
                    break;
                }
            }
            inverse[g] = found.ok_or(GroupError::NoInverse { element: g })?;
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            labels,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
            labels: Some(vec!["e".into()]),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// h g h⁻¹
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.ord(g) == self.order)
    }

    pub fn check_index(&self, g: usize) -> Result<(), GroupError> {
        if g < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }

    /// Multiplicative order of `g`.
    pub fn element_order(&self, g: usize) -> Result<usize, GroupError> {
        self.check_index(g)?;
        Ok(self.ord(g))
    }

    pub(crate) fn ord(&self, g: usize) -> usize {
        let mut k = 1;
        let mut acc = g;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|g| self.ord(g)).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human-readable name of `g`; falls back to `#g` for unlabeled tables.
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) if g < l.len() => l[g].clone(),
            _ => format!("#{g}"),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Conjugacy classes, each sorted ascending, ordered by least member;
    /// the identity class {0} always comes first. The classes partition
    /// the element set.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.order).map(|h| self.conjugate(h, g)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                seen[x] = true;
            }
            classes.push(orbit);
        }
        classes
    }

    /// The single conjugacy class {h g h⁻¹ : h ∈ G}, sorted.
    pub fn conjugacy_class_of(&self, g: usize) -> Result<Vec<usize>, GroupError> {
        self.check_index(g)?;
        let mut orbit: Vec<usize> = (0..self.order).map(|h| self.conjugate(h, g)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        Ok(orbit)
    }

    /// Smallest subgroup containing all of `generators`.
    pub fn subgroup_closure(&self, generators: &[usize]) -> Result<Subgroup<'_>, GroupError> {
        for &g in generators {
            self.check_index(g)?;
        }
        let elements = self.closure_set(generators);
        Ok(Subgroup {
            parent: self,
            elements,
        })
    }

    /// Closure of a generating set, as a sorted element list. Generators are
    /// assumed in range.
    pub(crate) fn closure_set(&self, generators: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        // Generated sets are closed under inverses in a finite group, so
        // right-multiplication alone reaches every word in the generators.
        elements.sort_unstable();
        elements
    }

    /// Greedy small generating set: repeatedly adjoin the least element
    /// outside the current closure. Deterministic.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closed = vec![0usize];
        while closed.len() < self.order {
            let next = (0..self.order)
                .find(|g| closed.binary_search(g).is_err())
                .expect("closure smaller than the group must miss an element");
            gens.push(next);
            closed = self.closure_set(&gens);
        }
        gens
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

/// A subgroup of a parent [`FiniteGroup`], stored as a sorted list of
/// parent element indices. Always contains the identity and is closed
/// under product and inverse; its order divides the parent order.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    elements: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// Validate an explicit element set as a subgroup.
    pub fn new(parent: &'g FiniteGroup, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        for &g in &elements {
            parent.check_index(g)?;
        }
        if elements.first() != Some(&0) {
            return Err(GroupError::NotASubgroup {
                reason: "identity is missing".into(),
            });
        }
        for &a in &elements {
            if elements.binary_search(&parent.inv(a)).is_err() {
                return Err(GroupError::NotASubgroup {
                    reason: format!("inverse of {a} is missing"),
                });
            }
            for &b in &elements {
                if elements.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(GroupError::NotASubgroup {
                        reason: format!("not closed under product: {a}*{b} escapes"),
                    });
                }
            }
        }
        if parent.order() % elements.len() != 0 {
            return Err(GroupError::NotASubgroup {
                reason: format!(
                    "order {} does not divide parent order {}",
                    elements.len(),
                    parent.order()
                ),
            });
        }
        Ok(Subgroup { parent, elements })
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of parent element `g` in the sorted element list.
    pub fn index_of(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    /// gHg⁻¹ = H for all g in the parent.
    pub fn is_normal(&self) -> bool {
        (0..self.parent.order()).all(|g| {
            self.elements
                .iter()
                .all(|&h| self.contains(self.parent.conjugate(g, h)))
        })
    }

    /// Normalizer N(H) = {g : gHg⁻¹ = H}, as a sorted element list.
    pub fn normalizer(&self) -> Vec<usize> {
        (0..self.parent.order())
            .filter(|&g| {
                self.elements
                    .iter()
                    .all(|&h| self.contains(self.parent.conjugate(g, h)))
            })
            .collect()
    }

    /// Re-index the subgroup as a standalone group. Returns the group and
    /// the element map sending new index i to `elements()[i]` in the parent.
    ///
    /// The identity stays at index 0 because the element list is sorted.
    pub fn to_group(&self) -> (FiniteGroup, Vec<usize>) {
        let k = self.elements.len();
        let mut table = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                let p = self.parent.mul(self.elements[i], self.elements[j]);
                table[i * k + j] = self
                    .index_of(p)
                    .expect("validated subgroup is closed under product");
            }
        }
        let labels = self
            .parent
            .labels()
            .map(|l| self.elements.iter().map(|&g| l[g].clone()).collect());
        let group = FiniteGroup::from_table(k, table, labels)
            .expect("a closed subset of a group is a group");
        (group, self.elements.clone())
    }
}

impl std::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={}, elements={:?})", self.order(), self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_table_by_hand() {
        let table = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let g = FiniteGroup::from_table(3, table, None).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(1, 2), 0);
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.element_order(1).unwrap(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn rejects_broken_identity() {
        let table = vec![0, 1, 1, 0];
        let err = FiniteGroup::from_table(2, vec![1, 0, 0, 1], None).unwrap_err();
        assert!(matches!(err, GroupError::IdentityRow { col: 0 }));
        assert!(FiniteGroup::from_table(2, table, None).is_ok());
    }

    #[test]
    fn rejects_non_latin_square() {
        let table = vec![0, 1, 1, 1];
        let err = FiniteGroup::from_table(2, table, None).unwrap_err();
        assert!(matches!(err, GroupError::RowNotPermutation { row: 1 } | GroupError::IdentityColumn { row: 1 }));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // Latin square with two-sided identity that is not a group.
        let table = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 3, 4, 1, 0, //
            3, 4, 0, 2, 1, //
            4, 2, 1, 0, 3,
        ];
        let err = FiniteGroup::from_table(5, table, None).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { a: 1, b: 1, c: 2 }));
    }

    #[test]
    fn conjugacy_classes_partition() {
        let table = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let g = FiniteGroup::from_table(3, table, None).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn closure_and_subgroup_validation() {
        let table = vec![
            0, 1, 2, 3, //
            1, 2, 3, 0, //
            2, 3, 0, 1, //
            3, 0, 1, 2,
        ];
        let g = FiniteGroup::from_table(4, table, None).unwrap();
        let h = g.subgroup_closure(&[2]).unwrap();
        assert_eq!(h.elements(), &[0, 2]);
        assert!(h.is_normal());
        assert!(Subgroup::new(&g, vec![0, 2]).is_ok());
        assert!(matches!(
            Subgroup::new(&g, vec![0, 1]),
            Err(GroupError::NotASubgroup { .. })
        ));
        let (standalone, map) = h.to_group();
        assert_eq!(standalone.order(), 2);
        assert_eq!(map, vec![0, 2]);
    }

    #[test]
    fn small_generating_set_generates() {
        let table = vec![
            0, 1, 2, 3, //
            1, 0, 3, 2, //
            2, 3, 0, 1, //
            3, 2, 1, 0,
        ];
        let g = FiniteGroup::from_table(4, table, None).unwrap();
        let gens = g.small_generating_set();
        assert_eq!(gens, vec![1, 2]);
        assert_eq!(g.closure_set(&gens).len(), 4);
    }
}
