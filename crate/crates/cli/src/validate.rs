//! Seeded random cross-validation: both routes plus the brute-force scan
//! on every instance, with the Apéry/socle identities checked exactly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use frobenius_core::{oracle, run_pipeline, NumericalSemigroup};

use crate::report::{apery_route, compare_methods};

#[derive(Debug, Clone, Copy)]
pub struct ValidationConfig {
    pub seed: u64,
    pub count: u64,
    pub max_d: usize,
    pub max_gen: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub generators: Vec<u64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub seed: u64,
    pub count: u64,
    pub passes: u64,
    pub failures: u64,
    pub first_counterexample: Option<Counterexample>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Next coprime tuple from the stream: up to `max_d` values in
/// `1..=max_gen`, resampled until the gcd is 1.
pub fn random_coprime_tuple(rng: &mut ChaCha8Rng, max_d: usize, max_gen: u64) -> Vec<u64> {
    loop {
        let d = rng.gen_range(1..=max_d);
        let gens: Vec<u64> = (0..d).map(|_| rng.gen_range(1..=max_gen)).collect();
        if gens.iter().copied().fold(0, gcd) == 1 {
            return gens;
        }
    }
}

/// Full per-instance check battery. Returns a description of the first
/// identity that fails, if any.
pub fn validate_instance(raw_generators: &[u64]) -> Result<(), String> {
    let s =
        NumericalSemigroup::new(raw_generators).map_err(|e| format!("construction failed: {e}"))?;
    let n_d = s.largest_generator();

    // Both routes agree with each other.
    let report = compare_methods(&s);
    if !report.agree {
        return Err("routes disagree on frobenius/conductor/type".to_string());
    }
    let apery = report
        .apery
        .as_ref()
        .expect("agree implies both routes ran");
    let socle = report
        .socle
        .as_ref()
        .expect("agree implies both routes ran");

    // ... and with the naive scan.
    let naive_f = oracle::frobenius(s.generators()).map_err(|e| format!("oracle failed: {e}"))?;
    if apery.frobenius != naive_f {
        return Err(format!(
            "naive scan gives f = {naive_f}, routes give {}",
            apery.frobenius
        ));
    }
    let naive_pf =
        oracle::pseudo_frobenius(s.generators()).map_err(|e| format!("oracle failed: {e}"))?;
    if naive_pf.len() != socle.dim {
        return Err(format!(
            "naive type {} != socle dimension {}",
            naive_pf.len(),
            socle.dim
        ));
    }

    // Socle degrees shift to the pseudo-Frobenius numbers.
    let shifted: Vec<i64> = socle
        .socle_degrees
        .iter()
        .map(|&deg| deg as i64 - n_d as i64)
        .collect();
    if shifted != naive_pf {
        return Err(format!(
            "socle degrees - {n_d} = {shifted:?} but pseudo-Frobenius numbers are {naive_pf:?}"
        ));
    }

    // Top Apéry value equals the top socle degree.
    if apery.max_apery != socle.max_degree {
        return Err(format!(
            "max Ap(H, {n_d}) = {} but deg(b) = {}",
            apery.max_apery, socle.max_degree
        ));
    }

    // The quotient has exactly n_d standard monomials whose degrees are
    // the Apéry set, and both emitted bases verify from first principles.
    let run = run_pipeline(&s, s.embedding_dimension() - 1)
        .map_err(|e| format!("pipeline failed: {e}"))?;
    if run.quotient.len() as u64 != n_d {
        return Err(format!(
            "{} standard monomials, expected {n_d}",
            run.quotient.len()
        ));
    }
    let ap = s.apery_set(n_d).map_err(|e| format!("apery failed: {e}"))?;
    if run.quotient.degrees() != ap.values() {
        return Err("standard-monomial degrees differ from the Apéry set".to_string());
    }
    run.presentation
        .p()
        .verify()
        .map_err(|e| format!("presentation basis failed verification: {e}"))?;
    run.presentation
        .p_prime()
        .verify()
        .map_err(|e| format!("projected basis failed verification: {e}"))?;

    let _ = apery_route(&s, n_d).map_err(|e| format!("apery route failed: {e}"))?;
    Ok(())
}

/// Run `count` random instances; deterministic for a fixed seed.
pub fn run_random_validation(config: ValidationConfig) -> ValidationSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut summary = ValidationSummary {
        seed: config.seed,
        count: config.count,
        passes: 0,
        failures: 0,
        first_counterexample: None,
    };
    for _ in 0..config.count {
        let gens = random_coprime_tuple(&mut rng, config.max_d.max(1), config.max_gen.max(2));
        match validate_instance(&gens) {
            Ok(()) => summary.passes += 1,
            Err(detail) => {
                summary.failures += 1;
                if summary.first_counterexample.is_none() {
                    summary.first_counterexample = Some(Counterexample {
                        generators: gens,
                        detail,
                    });
                }
            }
        }
    }
    summary
}
