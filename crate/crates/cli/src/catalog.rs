//! The bundled group catalog: deterministic family-based enumeration of
//! candidate fundamental groups. Family-based means non-exhaustive over
//! isomorphism types — user-supplied Cayley tables cover anything else —
//! and the same abstract group may appear under several spec strings.

use std::collections::BTreeSet;

use spaceform_core::group::{make_group, GroupError, SylowClass, MAX_CONSTRUCTED_ORDER};
use spaceform_core::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    CyclicSylow2,
    QuaternionSylow2,
    OddOrder,
    Periodic,
    Other,
}

impl Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tag::CyclicSylow2 => "cyclic_sylow2",
            Tag::QuaternionSylow2 => "quaternion_sylow2",
            Tag::OddOrder => "odd_order",
            Tag::Periodic => "periodic",
            Tag::Other => "other",
        }
    }
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: String,
    pub group: FiniteGroup,
    pub tags: BTreeSet<Tag>,
}

impl CatalogEntry {
    fn from_group(spec: String, group: FiniteGroup) -> Self {
        let report = group.periodicity_report();
        let mut tags = BTreeSet::new();
        match report.two_sylow() {
            SylowClass::Cyclic => tags.insert(Tag::CyclicSylow2),
            SylowClass::GeneralizedQuaternion => tags.insert(Tag::QuaternionSylow2),
            SylowClass::Other => tags.insert(Tag::Other),
        };
        if group.order() % 2 == 1 {
            tags.insert(Tag::OddOrder);
        }
        if report.all_periodic() {
            tags.insert(Tag::Periodic);
        } else {
            tags.insert(Tag::Other);
        }
        CatalogEntry { spec, group, tags }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn tag_line(&self) -> String {
        self.tags
            .iter()
            .map(Tag::as_str)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn push(entries: &mut Vec<CatalogEntry>, spec: String) -> Result<(), GroupError> {
    let group = make_group(&spec)?;
    entries.push(CatalogEntry::from_group(spec, group));
    Ok(())
}

/// All bundled families up to `max_order`: cyclic groups, dihedral groups of
/// twice-odd order, generalized quaternion groups, products of an odd cyclic
/// group with a cyclic or quaternion 2-group, and semidirect products
/// C_m ⋊ C_{2^k} over every valid twisting exponent r.
pub fn generate_catalog(max_order: usize) -> Result<Vec<CatalogEntry>, GroupError> {
    if max_order > MAX_CONSTRUCTED_ORDER {
        return Err(GroupError::OrderBound {
            order: max_order,
            bound: MAX_CONSTRUCTED_ORDER,
        });
    }
    let mut entries = Vec::new();
    for m in 1..=max_order {
        push(&mut entries, format!("C{m}"))?;
    }
    for m in (3..=max_order / 2).step_by(2) {
        push(&mut entries, format!("D{m}"))?;
    }
    let two_groups: Vec<usize> = (3..)
        .map(|k| 1usize << k)
        .take_while(|&q| q <= max_order.max(8))
        .collect();
    for &q in two_groups.iter().filter(|&&q| q <= max_order) {
        push(&mut entries, format!("Q{q}"))?;
    }
    for u in (3..=max_order).step_by(2) {
        for j in 1.. {
            let t = 1usize << j;
            if u * t > max_order {
                break;
            }
            push(&mut entries, format!("C{u}xC{t}"))?;
        }
        for &q in two_groups.iter().filter(|&&q| u * q <= max_order) {
            push(&mut entries, format!("C{u}xQ{q}"))?;
        }
    }
    for m in 3..=max_order {
        for k in 1.. {
            let q = 1usize << k;
            if m * q > max_order {
                break;
            }
            for r in 2..m {
                let spec = format!("C{m}:C{q}@r{r}");
                match make_group(&spec) {
                    Ok(group) => entries.push(CatalogEntry::from_group(spec, group)),
                    Err(GroupError::SemidirectAction { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    entries.sort_by(|a, b| (a.order(), &a.spec).cmp(&(b.order(), &b.spec)));
    debug_assert!(
        entries.windows(2).all(|w| w[0].spec != w[1].spec),
        "family enumeration never repeats a spec string"
    );
    Ok(entries)
}
