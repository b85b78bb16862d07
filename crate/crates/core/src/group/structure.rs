//! Structural queries: normal subgroups, the maximal odd-order normal
//! subgroup, and isomorphism testing.

use std::collections::HashSet;

use super::sylow::{classify_p_group, sylow_subgroup};
use super::{FiniteGroup, GroupError, Subgroup, MAX_CONSTRUCTED_ORDER};

/// Every normal subgroup, exhaustively.
///
/// A subgroup is normal iff it is a union of conjugacy classes, so the
/// lattice is explored by repeatedly adjoining one missing class to an
/// already-found normal subgroup and closing under the product; the closure
/// of a union of classes is again a union of classes. Results are sorted by
/// (order, element list).
pub fn normal_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup<'_>>, GroupError> {
    normal_subgroups_bounded(group, MAX_CONSTRUCTED_ORDER)
}

pub fn normal_subgroups_bounded(
    group: &FiniteGroup,
    bound: usize,
) -> Result<Vec<Subgroup<'_>>, GroupError> {
    if group.order() > bound {
        return Err(GroupError::OrderBound {
            order: group.order(),
            bound,
        });
    }
    let classes = group.conjugacy_classes();
    let trivial = vec![0usize];
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(current) = queue.pop() {
        for class in &classes {
            if class.iter().all(|g| current.binary_search(g).is_ok()) {
                continue;
            }
            let mut generators = current.clone();
            generators.extend_from_slice(class);
            let bigger = group.closure_set(&generators);
            if found.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut sorted: Vec<Vec<usize>> = found.into_iter().collect();
    sorted.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let subgroups: Vec<Subgroup<'_>> = sorted
        .into_iter()
        .map(|elements| Subgroup {
            parent: group,
            elements,
        })
        .collect();
    debug_assert!(subgroups.iter().all(Subgroup::is_normal));
    Ok(subgroups)
}

/// The unique normal subgroup whose order is the odd part of |G|, for groups
/// with cyclic 2-Sylow subgroup.
///
/// Construction: left multiplication by g is a permutation made of
/// |G|/ord(g) cycles, so its sign is (-1)^(|G| - |G|/ord(g)). The sign map
/// is a homomorphism onto {±1}; while the current subgroup has even order a
/// cyclic 2-Sylow generator has odd exponent, so the map is onto and its
/// kernel halves the order. Iterating strips the 2-part entirely.
pub fn odd_core(group: &FiniteGroup) -> Result<Subgroup<'_>, GroupError> {
    let sylow = sylow_subgroup(group, 2)?;
    let cyclic = sylow
        .elements()
        .iter()
        .any(|&g| group.ord(g) == sylow.order());
    if !cyclic {
        let (s, _) = sylow.to_group();
        return Err(GroupError::SylowNotCyclic {
            found: classify_p_group(&s, 2),
        });
    }

    let mut current: Vec<usize> = (0..group.order()).collect();
    while current.len() % 2 == 0 {
        let k = current.len();
        let kernel: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&g| (k - k / group.ord(g)) % 2 == 0)
            .collect();
        assert!(
            kernel.len() * 2 == k,
            "sign map must be onto while the order is even"
        );
        current = kernel;
    }
    debug_assert_eq!(
        current.len(),
        super::arith::odd_part(group.order()),
        "the odd core has index equal to the full 2-part of the order"
    );
    Subgroup::new(group, current)
}

/// Isomorphism test by backtracking over generator images.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, GroupError> {
    isomorphic_bounded(a, b, MAX_CONSTRUCTED_ORDER)
}

pub fn isomorphic_bounded(
    a: &FiniteGroup,
    b: &FiniteGroup,
    bound: usize,
) -> Result<bool, GroupError> {
    for g in [a, b] {
        if g.order() > bound {
            return Err(GroupError::OrderBound {
                order: g.order(),
                bound,
            });
        }
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    // Invariant filter: multiset of (element order, conjugacy class size).
    if profile(a) != profile(b) {
        return Ok(false);
    }

    let gens = a.small_generating_set();
    if gens.is_empty() {
        return Ok(true); // both trivial
    }
    let b_class_size = element_class_sizes(b);
    let a_class_size = element_class_sizes(a);
    let mut images = Vec::with_capacity(gens.len());
    Ok(assign(a, b, &gens, &mut images, &a_class_size, &b_class_size))
}

fn profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut p: Vec<(usize, usize)> = g
        .conjugacy_classes()
        .into_iter()
        .flat_map(|class| {
            let size = class.len();
            class.into_iter().map(move |e| (e, size))
        })
        .map(|(e, size)| (g.ord(e), size))
        .collect();
    p.sort_unstable();
    p
}

fn element_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut sizes = vec![0usize; g.order()];
    for class in g.conjugacy_classes() {
        for &e in &class {
            sizes[e] = class.len();
        }
    }
    sizes
}

fn assign(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &mut Vec<usize>,
    a_class_size: &[usize],
    b_class_size: &[usize],
) -> bool {
    let level = images.len();
    if level == gens.len() {
        return matches!(partial_monomorphism(a, b, gens, images), Some(size) if size == a.order());
    }
    let g = gens[level];
    for y in 0..b.order() {
        if b.ord(y) != a.ord(g) || b_class_size[y] != a_class_size[g] {
            continue;
        }
        images.push(y);
        if partial_monomorphism(a, b, gens, images).is_some()
            && assign(a, b, gens, images, a_class_size, b_class_size)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Check that mapping the first `images.len()` generators to `images`
/// extends to an injective homomorphism on the subgroup they generate.
/// Returns the subgroup order on success.
fn partial_monomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<usize> {
    let active = &gens[..images.len()];
    // BFS closure of the active generators, remembering one word per element.
    let mut phi: Vec<Option<usize>> = vec![None; a.order()];
    phi[0] = Some(0);
    let mut elements = vec![0usize];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        head += 1;
        for (i, &g) in active.iter().enumerate() {
            let y = a.mul(x, g);
            if phi[y].is_none() {
                phi[y] = Some(b.mul(phi[x].expect("visited"), images[i]));
                elements.push(y);
            }
        }
    }
    // Injectivity on the generated subgroup.
    let mut hit = vec![false; b.order()];
    for &x in &elements {
        let fx = phi[x].expect("member of closure");
        if hit[fx] {
            return None;
        }
        hit[fx] = true;
    }
    // Multiplicativity on the whole subgroup.
    for &x in &elements {
        let fx = phi[x].expect("member");
        for &y in &elements {
            let fy = phi[y].expect("member");
            if phi[a.mul(x, y)] != Some(b.mul(fx, fy)) {
                return None;
            }
        }
    }
    Some(elements.len())
}
