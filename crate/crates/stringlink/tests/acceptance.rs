//! Acceptance gate: one test per criterion, each printing a pass/fail line.

use stringlink::{
    arf, borromean, check_commutator_4_2_random, check_cross_oracle_on,
    check_cross_oracle_conway, check_full_classification_homomorphism,
    check_nonsplitting_4_4_random, check_property_additivity, check_property_conjugation,
    check_property_inverse_negation, check_property_stack_inverse,
    check_property_truncation_stability, classify_full_2comp, figure_eight_component, milnor,
    sato_levine, trivial, twisted_hopf, verdict, whitehead, SolvabilityLevel,
};

const SEED: u64 = 0;

fn gate(criterion: &str, ok: bool) {
    println!("acceptance {criterion}: {}", if ok { "pass" } else { "FAIL" });
    assert!(ok, "acceptance criterion failed: {criterion}");
}

#[test]
fn criterion_1_paper_values_exact() {
    let sl = sato_levine(&whitehead(2).unwrap(), 1, 2).unwrap();
    let triple = milnor(&borromean(), &[1, 2, 3]).unwrap();
    let arf_fig8 = arf(&figure_eight_component().closure()).unwrap().value();
    gate(
        "1 (fixture values: sl(W)=1, mu123(borromean)=1, arf(4_1)=1)",
        sl == 1 && triple == 1 && arf_fig8 == 1,
    );
}

#[test]
fn criterion_2_quotient_structure() {
    let hom = check_full_classification_homomorphism(SEED, 200);
    let w = whitehead(2).unwrap();
    let w_class = classify_full_2comp(&w).unwrap();
    let ww_class = classify_full_2comp(&w.stack(&w).unwrap()).unwrap();
    let order_two = w_class != (0, 0, 0, 0) && ww_class == (0, 0, 0, 0);
    let mut twists_ok = true;
    for n in -5i64..=5 {
        let mut d = trivial(2);
        let step = if n >= 0 {
            twisted_hopf(1)
        } else {
            twisted_hopf(1).inverse()
        };
        for _ in 0..n.unsigned_abs() {
            d = d.stack(&step).unwrap();
        }
        twists_ok &= classify_full_2comp(&d).unwrap() == (0, 0, 0, n);
    }
    gate(
        "2 (Z2^3 + Z quotient: homomorphism x200, order-2 Whitehead, twist axis)",
        hom.passed && order_two && twists_ok,
    );
}

#[test]
fn criterion_3_commutators_are_zero_solvable() {
    let r = check_commutator_4_2_random(SEED, 50);
    gate("3 (commutator solvability x50)", r.passed);
}

#[test]
fn criterion_4_triple_linking_realization() {
    let r = check_nonsplitting_4_4_random(SEED, 20);
    gate("4 (triple-linking realization x20)", r.passed);
}

#[test]
fn criterion_5_cross_oracle_equivalence() {
    let anchor = check_cross_oracle_on(&whitehead(2).unwrap()).unwrap();
    let r = check_cross_oracle_conway(SEED, 100);
    gate(
        "5 (Magnus vs Conway x100, linking vs mu(ij))",
        anchor.passed && r.passed,
    );
}

#[test]
fn criterion_6_invariant_properties() {
    let checks = [
        check_property_additivity(SEED, 100),
        check_property_inverse_negation(SEED, 100),
        check_property_conjugation(SEED, 100),
        check_property_truncation_stability(SEED, 100),
        check_property_stack_inverse(SEED, 100),
    ];
    let ok = checks.iter().all(|c| c.passed);
    for c in checks.iter().filter(|c| !c.passed) {
        eprintln!("{}", c.to_text());
    }
    gate("6 (invariant property suites x100 each)", ok);
}

#[test]
fn criterion_7_obstruction_wiring() {
    let w = whitehead(2).unwrap();
    let vw = verdict(&w).unwrap();
    let vww = verdict(&w.stack(&w).unwrap()).unwrap();
    gate(
        "7 (0.5-obstruction wiring: W not 0.5-solvable, W*W zero-solvable with SL=2)",
        vw.level == SolvabilityLevel::LinkingTrivialNot0Solvable
            && vw.obstruction_to_half == vec![1]
            && vww.level == SolvabilityLevel::ZeroSolvable
            && vww.obstruction_to_half == vec![2],
    );
}
