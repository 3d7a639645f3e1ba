//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line with the measured evidence. Criteria that name the
//! command line drive the real binary; the rest go through the library.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use frobenius_cli::report::{compare_methods, JsonReport};
use frobenius_cli::validate::{random_coprime_tuple, run_random_validation, ValidationConfig};
use frobenius_core::{
    buchberger, run_pipeline, Binomial, Monomial, MonomialOrder, NumericalSemigroup,
};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_frobenius"))
}

fn run_binary(args: &[&str]) -> (Output, Duration) {
    let started = Instant::now();
    let output = binary().args(args).output().expect("binary runs");
    (output, started.elapsed())
}

fn parse_report(output: &Output) -> JsonReport {
    let text = String::from_utf8(output.stdout.clone()).expect("utf-8 stdout");
    serde_json::from_str(text.trim()).expect("stdout is one JSON report")
}

/// The same instance stream the validation harness uses for criteria 3-5.
fn seeded_instances(seed: u64, count: usize) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_coprime_tuple(&mut rng, 4, 40))
        .collect()
}

#[test]
fn criterion_1_example_semigroup_6_8_9() {
    let (output, elapsed) = run_binary(&["compare", "6", "8", "9", "--format", "json"]);
    assert!(output.status.success(), "compare 6 8 9 must exit 0");
    assert!(
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} exceeds 1 s"
    );
    let report = parse_report(&output);
    assert_eq!(report.frobenius, 19);
    assert_eq!(report.conductor, 20);
    assert_eq!(report.semigroup_type, 1);
    assert_eq!(report.apery_max, Some(28));
    assert_eq!(report.socle_degrees, Some(vec![28]));
    assert_eq!(report.agree, Some(true));

    // Witnesses, checked exactly through the library: the socle is spanned
    // by x1^2 x2^2 and the projected ideal is (x1^3, x2^3).
    let s = NumericalSemigroup::new(&[6, 8, 9]).unwrap();
    let run = run_pipeline(&s, 2).unwrap();
    assert_eq!(run.report.dim(), 1);
    assert_eq!(run.report.max_degree(), 28);
    assert_eq!(run.report.socle_monomials()[0].exponents(), &[2, 2]);

    let order = MonomialOrder::weighted_revlex(vec![6, 8]);
    let expected = buchberger(
        &[
            Binomial::monomial(Monomial::new(vec![3, 0])),
            Binomial::monomial(Monomial::new(vec![0, 3])),
        ],
        order,
    )
    .unwrap();
    assert!(run.presentation.p_prime().same_ideal_as(&expected).unwrap());
    // The reduced basis for a fixed order is unique, so exact equality
    // holds as well.
    assert_eq!(run.presentation.p_prime().elements(), expected.elements());

    println!(
        "[PASS] criterion 1: compare 6 8 9 -> f=19 c=20 dim=1 deg(b)=28, socle = x1^2 x2^2, p' = (x1^3, x2^3), {elapsed:?}"
    );
}

#[test]
fn criterion_2_example_semigroup_7_8_9_11() {
    let (output, elapsed) = run_binary(&["compare", "7", "8", "9", "11", "--format", "json"]);
    assert!(output.status.success(), "compare 7 8 9 11 must exit 0");
    assert!(
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} exceeds 1 s"
    );
    let report = parse_report(&output);
    assert_eq!(report.frobenius, 13);
    assert_eq!(report.conductor, 14);
    assert_eq!(report.semigroup_type, 3);
    assert_eq!(report.socle_degrees, Some(vec![21, 23, 24]));
    assert_eq!(report.agree, Some(true));

    let s = NumericalSemigroup::new(&[7, 8, 9, 11]).unwrap();
    let run = run_pipeline(&s, 3).unwrap();
    assert_eq!(run.report.dim(), 3);
    assert_eq!(run.report.socle_degrees(), &[21, 23, 24]);

    println!(
        "[PASS] criterion 2: compare 7 8 9 11 -> f=13 c=14 dim=3 socle degrees {{21, 23, 24}}, {elapsed:?}"
    );
}

#[test]
fn criterion_3_two_hundred_seeded_instances_agree_with_the_oracle() {
    let started = Instant::now();
    let summary = run_random_validation(ValidationConfig {
        seed: 1,
        count: 200,
        max_d: 4,
        max_gen: 40,
    });
    let elapsed = started.elapsed();
    assert_eq!(summary.passes, 200, "{:?}", summary.first_counterexample);
    assert_eq!(summary.failures, 0, "{:?}", summary.first_counterexample);
    assert!(
        elapsed < Duration::from_secs(60),
        "runtime {elapsed:?} exceeds 60 s"
    );
    println!(
        "[PASS] criterion 3: 200 seeded instances, socle = apery = naive scan for f, c, and type; 0 failures, {elapsed:?}"
    );
}

#[test]
fn criterion_4_top_apery_value_equals_top_socle_degree() {
    for gens in seeded_instances(1, 200) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let n_d = s.largest_generator();
        let run = run_pipeline(&s, s.embedding_dimension() - 1).unwrap();
        let ap = s.apery_set(n_d).unwrap();
        assert_eq!(
            ap.max(),
            run.report.max_degree(),
            "generators {gens:?}: max Ap(H, {n_d}) != deg(b)"
        );
    }
    println!("[PASS] criterion 4: max Ap(H, n_d) = deg(b) exactly on all 200 instances");
}

#[test]
fn criterion_5_standard_monomials_carry_the_apery_set() {
    for gens in seeded_instances(1, 200) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let n_d = s.largest_generator();
        let run = run_pipeline(&s, s.embedding_dimension() - 1).unwrap();
        assert_eq!(
            run.quotient.len() as u64,
            n_d,
            "generators {gens:?}: standard monomial count"
        );
        let ap = s.apery_set(n_d).unwrap();
        assert_eq!(
            run.quotient.degrees(),
            ap.values().as_slice(),
            "generators {gens:?}: degree set"
        );
    }
    println!(
        "[PASS] criterion 5: |standard monomials| = n_d and degree set = Ap(H, n_d) on all 200 instances"
    );
}

#[test]
fn criterion_6_socle_degrees_survive_variable_permutations() {
    // 20 instances with at least two variables left after the quotient,
    // so the permutation actually moves something.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut instances: Vec<Vec<u64>> = vec![vec![6, 8, 9], vec![7, 8, 9, 11]];
    while instances.len() < 20 {
        let gens = random_coprime_tuple(&mut rng, 4, 40);
        if NumericalSemigroup::new(&gens)
            .unwrap()
            .embedding_dimension()
            >= 3
        {
            instances.push(gens);
        }
    }

    for gens in &instances {
        let s = NumericalSemigroup::new(gens).unwrap();
        let d = s.embedding_dimension();
        let run = run_pipeline(&s, d - 1).unwrap();
        let nvars = d - 1;
        let base_weights = &run.presentation.ambient_weights()[..nvars];

        let reversed: Vec<usize> = (0..nvars).rev().collect();
        let rotated: Vec<usize> = (0..nvars).map(|i| (i + 1) % nvars).collect();
        for perm in [reversed, rotated] {
            let weights: Vec<u64> = perm.iter().map(|&old| base_weights[old]).collect();
            let order = MonomialOrder::weighted_revlex(weights);
            let permuted: Vec<Binomial> = run
                .presentation
                .p_prime()
                .elements()
                .iter()
                .map(|b| b.permuted(&perm, &order).unwrap())
                .collect();
            let gb = buchberger(&permuted, order).unwrap();
            gb.verify().unwrap();
            let basis = frobenius_core::quotient_basis(&gb, s.largest_generator()).unwrap();
            let report = frobenius_core::socle(&basis, &gb, s.largest_generator()).unwrap();
            assert_eq!(
                report.socle_degrees(),
                run.report.socle_degrees(),
                "generators {gens:?}, permutation {perm:?}"
            );
        }
    }
    println!(
        "[PASS] criterion 6: socle degree multiset invariant under permuted variable orders on 20 instances"
    );
}

#[test]
fn criterion_7_every_emitted_basis_passes_the_independent_verifier() {
    let mut checked = 0usize;
    let mut instances = vec![
        vec![6, 8, 9],
        vec![7, 8, 9, 11],
        vec![1],
        vec![2, 3],
        vec![4, 6],
    ];
    instances.extend(seeded_instances(1, 200));
    for gens in instances {
        let Ok(s) = NumericalSemigroup::new(&gens) else {
            continue; // (4, 6) never reaches the pipeline
        };
        let run = run_pipeline(&s, s.embedding_dimension() - 1).unwrap();
        run.presentation
            .p()
            .verify()
            .unwrap_or_else(|e| panic!("generators {gens:?}: presentation basis rejected: {e}"));
        run.presentation
            .p_prime()
            .verify()
            .unwrap_or_else(|e| panic!("generators {gens:?}: projected basis rejected: {e}"));
        checked += 1;
    }
    println!(
        "[PASS] criterion 7: all S-pairs reduce to zero and reducedness holds for both bases on {checked} pipeline runs"
    );
}

#[test]
fn criterion_8_edge_cases() {
    // H = the whole line.
    let (output, _) = run_binary(&["compare", "1", "--format", "json"]);
    assert!(output.status.success());
    let report = parse_report(&output);
    assert_eq!(report.frobenius, -1);
    assert_eq!(report.conductor, 0);

    // Sylvester's smallest case.
    let (output, _) = run_binary(&["compare", "2", "3", "--format", "json"]);
    assert!(output.status.success());
    assert_eq!(parse_report(&output).frobenius, 1);

    // Non-coprime input: diagnostic code and nonzero exit.
    let (output, _) = run_binary(&["compare", "4", "6"]);
    assert!(!output.status.success(), "gcd 2 must fail");
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("E_GCD"), "stderr was: {stderr}");

    // Library-level agreement for the same edges.
    let s = NumericalSemigroup::new(&[1]).unwrap();
    let report = compare_methods(&s);
    assert!(report.agree);

    println!("[PASS] criterion 8: (1) -> f=-1 c=0; (2,3) -> f=1; (4,6) -> E_GCD with nonzero exit");
}
