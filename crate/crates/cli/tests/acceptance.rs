//! Acceptance gate: each test re-checks one numbered criterion and prints a
//! single pass line (visible with `--nocapture`); a failed assertion marks
//! the criterion failed.

use spaceform_cli::catalog::generate_catalog;
use spaceform_cli::verify::{run_suite, SuiteOutcome};
use spaceform_core::cohomology::build_extension;
use spaceform_core::group::make_group;
use spaceform_core::spaceform::{
    bg2_witness, bg3_applicable, classify, consistent_extension_classes, free_action_necessary,
    psc_exists, rpn_characteristic, verify_bg2_witness, Outcome, PscAnswer, SpaceFormInstance,
    Theorem,
};

fn assert_suite(outcome: &SuiteOutcome) {
    assert!(
        outcome.passed(),
        "suite {} found counterexamples: {:?}",
        outcome.name,
        outcome.failures
    );
    assert!(outcome.cases > 0, "suite {} ran no cases", outcome.name);
}

#[test]
fn criterion_1_odd_core_matches_enumeration_oracle() {
    let outcome = run_suite("lemma2.5", 48);
    assert_suite(&outcome);
    assert!(
        outcome.groups >= 50,
        "expected a substantial catalog, got {} groups",
        outcome.groups
    );
    println!(
        "ACCEPTANCE 1 (lemma2.5: odd core vs exhaustive normal-subgroup oracle, order <= 48): \
         PASS over {} groups in {:.2?}",
        outcome.groups, outcome.elapsed
    );
}

#[test]
fn criterion_2_global_splitting_matches_sylow_restriction() {
    let outcome = run_suite("lemma2.6c", 24);
    assert_suite(&outcome);
    println!(
        "ACCEPTANCE 2 (lemma2.6c: splitting iff 2-Sylow restriction splits, order <= 24): \
         PASS over {} classes in {:.2?}",
        outcome.cases, outcome.elapsed
    );
}

#[test]
fn criterion_3_odd_core_lifts_into_every_extension() {
    let outcome = run_suite("lemma2.6b", 24);
    assert_suite(&outcome);
    println!(
        "ACCEPTANCE 3 (lemma2.6b: lifted odd normal subgroup in every extension): \
         PASS over {} classes in {:.2?}",
        outcome.cases, outcome.elapsed
    );
}

#[test]
fn criterion_4_no_quaternion_class_doubles_every_fiber() {
    let outcome = run_suite("prop2.8", 48);
    assert_suite(&outcome);
    assert_eq!(outcome.groups, 3, "Q8, Q16, Q32");
    println!(
        "ACCEPTANCE 4 (prop2.8: every class of Q8/Q16/Q32 keeps some element order): \
         PASS over {} classes in {:.2?}",
        outcome.cases, outcome.elapsed
    );
}

#[test]
fn criterion_5_remark_class_with_semidirect_total() {
    let outcome = run_suite("remark", 48);
    assert_suite(&outcome);
    println!(
        "ACCEPTANCE 5 (remark: non-split Q8 class splitting on all cyclic subgroups, \
         total = C4:C4@r3): PASS in {:.2?}",
        outcome.elapsed
    );
}

#[test]
fn criterion_6_h2_class_counts_and_totals() {
    let outcome = run_suite("h2sanity", 16);
    assert_suite(&outcome);
    println!(
        "ACCEPTANCE 6 (h2sanity: cyclic class counts, C2->C4 and C4->C8 totals): \
         PASS over {} checks in {:.2?}",
        outcome.cases, outcome.elapsed
    );
}

#[test]
fn criterion_7_main_sweep() {
    let start = std::time::Instant::now();
    let entries = generate_catalog(32).unwrap();
    let mut classified = 0usize;
    let mut needs_alpha = 0usize;
    for n in 5..=15 {
        for entry in &entries {
            if entry.group.order() == 1 {
                continue;
            }
            let inst = SpaceFormInstance::new(n, entry.group.clone(), None).unwrap();
            if !free_action_necessary(&inst).passes() {
                continue;
            }
            let psc = psc_exists(&inst).unwrap();
            if psc.answer != PscAnswer::Yes {
                assert_eq!(psc.answer, PscAnswer::NeedsAlpha);
                needs_alpha += 1;
                continue;
            }
            let verdict = classify(&inst).unwrap();
            assert_eq!(
                verdict.outcome,
                Outcome::InfinitelyManyComponents,
                "(n={n}, {})",
                entry.spec
            );
            if n % 2 == 1 {
                let m = inst.half_dimension();
                let classes = consistent_extension_classes(&inst).unwrap();
                assert!(!classes.is_empty(), "(n={n}, {})", entry.spec);
                assert_eq!(classes.len(), verdict.classes_considered);
                let witnesses = verdict.witnesses.as_ref().unwrap();
                assert_eq!(witnesses.len(), classes.len());
                for (i, class) in classes.iter().enumerate() {
                    let ext = build_extension(&entry.group, class.representative()).unwrap();
                    let w = bg2_witness(&ext, m).unwrap_or_else(|| {
                        panic!("(n={n}, {}): class {i} has no witness", entry.spec)
                    });
                    assert!(verify_bg2_witness(ext.total(), ext.z(), w, m));
                    assert_eq!(ext.total().label(w), witnesses[i]);
                }
                let expected = if m % 2 == 0 {
                    Theorem::Thm31a
                } else {
                    Theorem::Thm31b
                };
                assert_eq!(verdict.theorem, Some(expected));
            } else {
                assert_eq!(
                    entry.group.order(),
                    2,
                    "only order-2 groups pass the even-dimension gate"
                );
                assert_eq!(verdict.theorem, Some(Theorem::Thm32));
                assert!(bg3_applicable(&inst).applicable);
            }
            classified += 1;
        }
    }
    assert!(
        classified >= 100,
        "sweep should cover many instances, got {classified}"
    );
    println!(
        "ACCEPTANCE 7 (main sweep, 5 <= n <= 15, catalog |G| <= 32): PASS over {classified} \
         classified instances ({needs_alpha} deferred to the alpha flag) in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_projective_characteristic_table() {
    let c2 = make_group("C2").unwrap();
    for n in (2..=30).step_by(2) {
        let c = rpn_characteristic(n).unwrap();
        assert_eq!(c.w1_label(), "a", "n={n}");
        assert_eq!(c.w2_label() == "a^2", (n * (n + 1) / 2) % 2 == 1, "n={n}");
        if n >= 6 {
            let inst = SpaceFormInstance::new(n, c2.clone(), None).unwrap();
            let bg3 = bg3_applicable(&inst);
            assert!(bg3.applicable, "n={n}");
            let epsilon_plus = (n / 2) % 2 == 0;
            assert_eq!(bg3.epsilon_plus, epsilon_plus, "n={n}");
            let pin_exists = if epsilon_plus {
                c.pin_plus()
            } else {
                c.pin_minus()
            };
            assert!(pin_exists, "n={n}: Pin^eps must exist for eps = sign((-1)^m)");
        }
    }
    println!(
        "ACCEPTANCE 8 (characteristic-class table, even n in [2, 30], Pin^eps cross-check): PASS"
    );
}

#[test]
fn criterion_9_negative_gates() {
    let run = |n: usize, spec: &str, alpha: Option<bool>| {
        let inst = SpaceFormInstance::new(n, make_group(spec).unwrap(), alpha).unwrap();
        classify(&inst).unwrap().outcome
    };
    assert_eq!(run(9, "Q8", None), Outcome::NotASpaceFormGroup);
    assert_eq!(run(9, "C3", Some(false)), Outcome::NoPscMetric);
    assert_eq!(run(9, "C3", None), Outcome::NeedsAlphaInput);
    assert_eq!(run(4, "C2", None), Outcome::DimensionOutOfScope);
    println!("ACCEPTANCE 9 (negative gates: Q8 at n=9, alpha paths, dimension gate): PASS");
}
