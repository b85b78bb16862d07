//! Brute-force verification suites: each one re-proves a group-theoretic
//! step of the classification over the bundled catalog, reporting any
//! counterexample it finds.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use spaceform_core::cohomology::{
    build_extension, cocycle_space, is_split, lift_odd_normal, restrict_cocycle,
};
use spaceform_core::group::{
    isomorphic, make_group, normal_subgroups, odd_core, sylow_subgroup, GroupError, SylowClass,
    MAX_CONSTRUCTED_ORDER,
};
use spaceform_core::FiniteGroup;

use crate::catalog::{generate_catalog, CatalogEntry};
use crate::CliError;

pub const SUITE_NAMES: [&str; 6] = [
    "lemma2.5",
    "lemma2.6b",
    "lemma2.6c",
    "prop2.8",
    "remark",
    "h2sanity",
];

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    /// Groups examined.
    pub groups: usize,
    /// Individual checks performed (e.g. one per extension class).
    pub cases: usize,
    pub elapsed: Duration,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run the named suites (all of them when `names` is empty), capping every
/// internal catalog at `max_order`.
pub fn run_suites(names: &[String], max_order: usize) -> Result<Vec<SuiteOutcome>, CliError> {
    if max_order > MAX_CONSTRUCTED_ORDER {
        return Err(CliError::Group(GroupError::OrderBound {
            order: max_order,
            bound: MAX_CONSTRUCTED_ORDER,
        }));
    }
    let selected: Vec<&'static str> = if names.is_empty() {
        SUITE_NAMES.to_vec()
    } else {
        names
            .iter()
            .map(|n| {
                SUITE_NAMES
                    .iter()
                    .find(|s| **s == n.as_str())
                    .copied()
                    .ok_or_else(|| CliError::UnknownSuite {
                        name: n.clone(),
                        available: SUITE_NAMES.join(", "),
                    })
            })
            .collect::<Result<_, _>>()?
    };
    Ok(selected
        .into_iter()
        .map(|name| run_suite(name, max_order))
        .collect())
}

pub fn run_suite(name: &'static str, max_order: usize) -> SuiteOutcome {
    let start = Instant::now();
    let mut outcome = match name {
        "lemma2.5" => suite_odd_core(max_order.min(48)),
        "lemma2.6b" => suite_lifted_normal(max_order.min(24)),
        "lemma2.6c" => suite_sylow_splitting(max_order.min(24)),
        "prop2.8" => suite_quaternion_fibers(max_order),
        "remark" => suite_remark(max_order),
        "h2sanity" => suite_h2_sanity(max_order.min(16)),
        other => unreachable!("suite {other} has no implementation"),
    };
    outcome.name = name;
    outcome.elapsed = start.elapsed();
    outcome
}

fn blank(groups: usize, cases: usize, failures: Vec<String>) -> SuiteOutcome {
    SuiteOutcome {
        name: "",
        groups,
        cases,
        elapsed: Duration::ZERO,
        failures,
    }
}

fn cyclic_sylow_entries(max_order: usize) -> Vec<CatalogEntry> {
    generate_catalog(max_order)
        .expect("suite caps stay within the constructed-order bound")
        .into_iter()
        .filter(|e| e.group.periodicity_report().two_sylow() == SylowClass::Cyclic)
        .collect()
}

/// The odd core must coincide with the unique odd-order normal subgroup of
/// maximal order found by exhaustive enumeration.
fn suite_odd_core(max_order: usize) -> SuiteOutcome {
    let entries = cyclic_sylow_entries(max_order);
    let failures: Vec<String> = entries
        .par_iter()
        .filter_map(|entry| {
            let core = match odd_core(&entry.group) {
                Ok(core) => core,
                Err(e) => return Some(format!("{}: odd_core failed: {e}", entry.spec)),
            };
            let normals = match normal_subgroups(&entry.group) {
                Ok(n) => n,
                Err(e) => return Some(format!("{}: enumeration failed: {e}", entry.spec)),
            };
            let odd: Vec<_> = normals.iter().filter(|s| s.order() % 2 == 1).collect();
            let best = odd.iter().map(|s| s.order()).max().unwrap_or(0);
            let maximal: Vec<_> = odd.iter().filter(|s| s.order() == best).collect();
            if maximal.len() != 1 {
                return Some(format!(
                    "{}: {} odd normal subgroups of maximal order {best}",
                    entry.spec,
                    maximal.len()
                ));
            }
            if maximal[0].elements() != core.elements() {
                return Some(format!(
                    "{}: odd_core {:?} differs from enumerated {:?}",
                    entry.spec,
                    core.elements(),
                    maximal[0].elements()
                ));
            }
            None
        })
        .collect();
    let n = entries.len();
    blank(n, n, failures)
}

/// Global splitting of every extension class must match splitting of its
/// restriction to a 2-Sylow subgroup.
fn suite_sylow_splitting(max_order: usize) -> SuiteOutcome {
    let entries = cyclic_sylow_entries(max_order);
    let results: Vec<(usize, Vec<String>)> = entries
        .par_iter()
        .map(|entry| {
            let group = &entry.group;
            let space = match cocycle_space(group) {
                Ok(s) => s,
                Err(e) => return (0, vec![format!("{}: {e}", entry.spec)]),
            };
            let sylow = match sylow_subgroup(group, 2) {
                Ok(s) => s,
                Err(e) => return (0, vec![format!("{}: {e}", entry.spec)]),
            };
            let (sylow_group, _) = sylow.to_group();
            let mut failures = Vec::new();
            for (i, class) in space.classes().iter().enumerate() {
                let rep = class.representative();
                let global = is_split(group, rep);
                let restricted = restrict_cocycle(rep, &sylow)
                    .expect("restriction within the same group");
                let local = is_split(&sylow_group, &restricted);
                if global != local {
                    failures.push(format!(
                        "{} class {i}: global split = {global}, Sylow split = {local}",
                        entry.spec
                    ));
                }
            }
            (space.classes().len(), failures)
        })
        .collect();
    let cases = results.iter().map(|(c, _)| c).sum();
    let failures = results.into_iter().flat_map(|(_, f)| f).collect();
    blank(entries.len(), cases, failures)
}

/// In every central extension, the odd core must lift to a normal subgroup
/// that the projection maps bijectively onto it.
fn suite_lifted_normal(max_order: usize) -> SuiteOutcome {
    let entries = cyclic_sylow_entries(max_order);
    let results: Vec<(usize, Vec<String>)> = entries
        .par_iter()
        .map(|entry| {
            let group = &entry.group;
            let space = match cocycle_space(group) {
                Ok(s) => s,
                Err(e) => return (0, vec![format!("{}: {e}", entry.spec)]),
            };
            let core = match odd_core(group) {
                Ok(c) => c,
                Err(e) => return (0, vec![format!("{}: {e}", entry.spec)]),
            };
            let mut failures = Vec::new();
            for (i, class) in space.classes().iter().enumerate() {
                let tag = format!("{} class {i}", entry.spec);
                let ext = match build_extension(group, class.representative()) {
                    Ok(e) => e,
                    Err(e) => {
                        failures.push(format!("{tag}: {e}"));
                        continue;
                    }
                };
                let lifted = match lift_odd_normal(&ext) {
                    Ok(l) => l,
                    Err(e) => {
                        failures.push(format!("{tag}: lift failed: {e}"));
                        continue;
                    }
                };
                if lifted.order() != core.order() {
                    failures.push(format!(
                        "{tag}: lift order {} vs core order {}",
                        lifted.order(),
                        core.order()
                    ));
                    continue;
                }
                if !lifted.is_normal() {
                    failures.push(format!("{tag}: lift is not normal in the total group"));
                    continue;
                }
                let image: BTreeSet<usize> = lifted
                    .elements()
                    .iter()
                    .map(|&t| ext.projection(t))
                    .collect();
                if image.len() != lifted.order()
                    || !image.iter().copied().eq(core.elements().iter().copied())
                {
                    failures.push(format!(
                        "{tag}: projection is not a bijection onto the odd core"
                    ));
                }
            }
            (space.classes().len(), failures)
        })
        .collect();
    let cases = results.iter().map(|(c, _)| c).sum();
    let failures = results.into_iter().flat_map(|(_, f)| f).collect();
    blank(entries.len(), cases, failures)
}

/// No extension class of a generalized quaternion group doubles the order
/// over every non-trivial element: each class has some g ≠ e with a fiber
/// element of the same order as g.
fn suite_quaternion_fibers(max_order: usize) -> SuiteOutcome {
    let orders: Vec<usize> = [8usize, 16, 32]
        .into_iter()
        .filter(|&q| q <= max_order)
        .collect();
    let mut cases = 0;
    let mut failures = Vec::new();
    for q in &orders {
        let spec = format!("Q{q}");
        let group = make_group(&spec).expect("quaternion orders are valid");
        let space = match cocycle_space(&group) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        let element_orders = group.element_orders();
        for (i, class) in space.classes().iter().enumerate() {
            cases += 1;
            let ext = match build_extension(&group, class.representative()) {
                Ok(e) => e,
                Err(e) => {
                    failures.push(format!("{spec} class {i}: {e}"));
                    continue;
                }
            };
            let keeps_an_order = (1..group.order())
                .any(|g| ext.fiber_orders(g).contains(&element_orders[g]));
            if !keeps_an_order {
                failures.push(format!(
                    "{spec} class {i}: every non-trivial fiber is order-doubled"
                ));
            }
        }
    }
    blank(orders.len(), cases, failures)
}

fn splits_on_every_cyclic_subgroup(group: &FiniteGroup, class_rep: &spaceform_core::cohomology::Cocycle2) -> bool {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..group.order() {
        let sub = group
            .subgroup_closure(&[x])
            .expect("single generators close");
        if !seen.insert(sub.elements().to_vec()) {
            continue;
        }
        let restricted =
            restrict_cocycle(class_rep, &sub).expect("restriction within the same group");
        let (sub_group, _) = sub.to_group();
        if !is_split(&sub_group, &restricted) {
            return false;
        }
    }
    true
}

/// Q8 admits a non-split class splitting on every cyclic subgroup, and the
/// total group of every such class is the C4-by-C4 semidirect product.
fn suite_remark(max_order: usize) -> SuiteOutcome {
    if max_order < 8 {
        return blank(0, 0, Vec::new());
    }
    let q8 = make_group("Q8").expect("fixed spec");
    let target = make_group("C4:C4@r3").expect("fixed spec");
    let space = match cocycle_space(&q8) {
        Ok(s) => s,
        Err(e) => return blank(1, 0, vec![format!("Q8: {e}")]),
    };
    let mut failures = Vec::new();
    let mut found = 0usize;
    for (i, class) in space.classes().iter().enumerate() {
        if class.is_split_class() || !splits_on_every_cyclic_subgroup(&q8, class.representative())
        {
            continue;
        }
        found += 1;
        let ext = match build_extension(&q8, class.representative()) {
            Ok(e) => e,
            Err(e) => {
                failures.push(format!("Q8 class {i}: {e}"));
                continue;
            }
        };
        match isomorphic(ext.total(), &target) {
            Ok(true) => {}
            Ok(false) => failures.push(format!(
                "Q8 class {i}: total group is not the C4-by-C4 semidirect product"
            )),
            Err(e) => failures.push(format!("Q8 class {i}: isomorphism test failed: {e}")),
        }
    }
    if found == 0 {
        failures.push("Q8: no non-split class splits on every cyclic subgroup".to_string());
    }
    blank(1, space.classes().len(), failures)
}

/// Class counts for cyclic groups, and the concrete totals of the non-split
/// classes of C2 and C4.
fn suite_h2_sanity(max_order: usize) -> SuiteOutcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    for p in 1..=max_order.min(16) {
        let group = make_group(&format!("C{p}")).expect("cyclic specs are valid");
        let space = match cocycle_space(&group) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("C{p}: {e}"));
                continue;
            }
        };
        cases += 1;
        let expected = if p % 2 == 0 { 2 } else { 1 };
        if space.classes().len() != expected {
            failures.push(format!(
                "C{p}: {} classes, expected {expected}",
                space.classes().len()
            ));
        }
    }
    for (p, total_spec) in [(2usize, "C4"), (4, "C8")] {
        if p > max_order {
            continue;
        }
        cases += 1;
        let group = make_group(&format!("C{p}")).expect("cyclic specs are valid");
        let space = cocycle_space(&group).expect("tiny groups");
        let Some(class) = space.classes().iter().find(|c| !c.is_split_class()) else {
            failures.push(format!("C{p}: no non-split class"));
            continue;
        };
        let ext = build_extension(&group, class.representative()).expect("orders match");
        let target = make_group(total_spec).expect("cyclic specs are valid");
        match isomorphic(ext.total(), &target) {
            Ok(true) => {}
            Ok(false) => failures.push(format!(
                "C{p}: non-split total is not {total_spec}"
            )),
            Err(e) => failures.push(format!("C{p}: isomorphism test failed: {e}")),
        }
    }
    blank(max_order.min(16), cases, failures)
}

/// Fixed-width table of suite results for terminal output.
pub fn render_table(outcomes: &[SuiteOutcome]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<10}  {:>6}  {:>6}  {:>9}  result\n",
        "suite", "groups", "cases", "elapsed"
    ));
    for o in outcomes {
        out.push_str(&format!(
            "{:<10}  {:>6}  {:>6}  {:>8.2}s  {}\n",
            o.name,
            o.groups,
            o.cases,
            o.elapsed.as_secs_f64(),
            if o.passed() { "pass" } else { "FAIL" }
        ));
        for failure in &o.failures {
            out.push_str(&format!("    counterexample: {failure}\n"));
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    out.push_str(&format!("{passed}/{} suites passed\n", outcomes.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_order_24() {
        let outcomes = run_suites(&[], 24).unwrap();
        assert_eq!(outcomes.len(), SUITE_NAMES.len());
        for o in &outcomes {
            assert!(o.passed(), "{} failed: {:?}", o.name, o.failures);
            assert!(o.cases > 0, "{} ran no cases", o.name);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let err = run_suites(&["nope".to_string()], 24).unwrap_err();
        assert!(matches!(err, CliError::UnknownSuite { .. }));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn oversized_bound_is_rejected() {
        let err = run_suites(&[], 128).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn table_renders() {
        let outcomes = run_suites(&["h2sanity".to_string()], 16).unwrap();
        let table = render_table(&outcomes);
        assert!(table.contains("h2sanity"));
        assert!(table.contains("1/1 suites passed"));
    }
}
