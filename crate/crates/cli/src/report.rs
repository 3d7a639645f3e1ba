//! Route runners and the comparison report, plus its JSON form.
//!
//! The JSON schema is fixed: `generators`, `frobenius`, `conductor`,
//! `type`, `apery_max`, `socle_degrees`, `method`, `agree`, `timing_us`.
//! All numbers are exact integers. `timing_us` is `null` unless timings
//! were explicitly requested, so identical invocations emit identical
//! bytes.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use frobenius_core::{run_pipeline, Error, NumericalSemigroup};

/// What the combinatorial route reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyRoute {
    pub frobenius: i64,
    pub conductor: u64,
    pub semigroup_type: usize,
    pub max_apery: u64,
    pub modulus: u64,
}

/// What the socle route reports. Basis elements are kept in rendered form
/// for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleRoute {
    pub frobenius: i64,
    pub conductor: u64,
    pub dim: usize,
    pub max_degree: u64,
    pub socle_degrees: Vec<u64>,
    pub socle_monomials: Vec<String>,
    pub p_prime_basis: Vec<String>,
    pub modulus: u64,
}

/// Both routes side by side with timings; `agree` means the Frobenius
/// number, conductor, and type/dimension all match.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub generators: Vec<u64>,
    pub apery: Result<AperyRoute, Error>,
    pub socle: Result<SocleRoute, Error>,
    pub agree: bool,
    pub apery_us: u64,
    pub socle_us: u64,
}

/// Apéry route: tabulate `Ap(H, modulus)` and read the invariants off it.
pub fn apery_route(s: &NumericalSemigroup, modulus: u64) -> Result<AperyRoute, Error> {
    let table = s.apery_set(modulus)?;
    let frobenius = table.max() as i64 - modulus as i64;
    Ok(AperyRoute {
        frobenius,
        conductor: (frobenius + 1) as u64,
        semigroup_type: s.pseudo_frobenius().semigroup_type(),
        max_apery: table.max(),
        modulus,
    })
}

/// Socle route: run the toric pipeline quotienting by the generator at
/// `distinguished` (index into the canonical generator list).
pub fn socle_route(s: &NumericalSemigroup, distinguished: usize) -> Result<SocleRoute, Error> {
    let run = run_pipeline(s, distinguished)?;
    Ok(SocleRoute {
        frobenius: run.report.frobenius(),
        conductor: run.report.conductor(),
        dim: run.report.dim(),
        max_degree: run.report.max_degree(),
        socle_degrees: run.report.socle_degrees().to_vec(),
        socle_monomials: run
            .report
            .socle_monomials()
            .iter()
            .map(|m| m.to_string())
            .collect(),
        p_prime_basis: run
            .presentation
            .p_prime()
            .elements()
            .iter()
            .map(|b| b.to_string())
            .collect(),
        modulus: run.report.modulus(),
    })
}

/// Run both routes with their default distinguished generator (the
/// largest) and compare.
pub fn compare_methods(s: &NumericalSemigroup) -> ComparisonReport {
    compare_methods_with(s, s.largest_generator(), s.embedding_dimension() - 1)
}

/// Run both routes with explicit Apéry modulus and socle generator index.
pub fn compare_methods_with(
    s: &NumericalSemigroup,
    apery_modulus: u64,
    socle_index: usize,
) -> ComparisonReport {
    let started = Instant::now();
    let apery = apery_route(s, apery_modulus);
    let apery_us = started.elapsed().as_micros() as u64;

    let started = Instant::now();
    let socle = socle_route(s, socle_index);
    let socle_us = started.elapsed().as_micros() as u64;

    let agree = match (&apery, &socle) {
        (Ok(a), Ok(b)) => {
            a.frobenius == b.frobenius && a.conductor == b.conductor && a.semigroup_type == b.dim
        }
        _ => false,
    };
    ComparisonReport {
        generators: s.generators().to_vec(),
        apery,
        socle,
        agree,
        apery_us,
        socle_us,
    }
}

/// Per-route wall-clock durations in microseconds; absent entries mean the
/// route did not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingBreakdown {
    pub apery: Option<u64>,
    pub socle: Option<u64>,
}

/// One JSON object per input, fixed key set and order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub conductor: u64,
    #[serde(rename = "type")]
    pub semigroup_type: u64,
    pub apery_max: Option<u64>,
    pub socle_degrees: Option<Vec<u64>>,
    pub method: String,
    pub agree: Option<bool>,
    pub timing_us: Option<TimingBreakdown>,
}

impl ComparisonReport {
    /// JSON form; fails with the first route error when neither route
    /// produced numbers.
    pub fn to_json(&self, include_timings: bool) -> Result<JsonReport, Error> {
        let (frobenius, conductor, semigroup_type) = match (&self.apery, &self.socle) {
            (Ok(a), _) => (a.frobenius, a.conductor, a.semigroup_type as u64),
            (Err(_), Ok(b)) => (b.frobenius, b.conductor, b.dim as u64),
            (Err(e), Err(_)) => return Err(e.clone()),
        };
        Ok(JsonReport {
            generators: self.generators.clone(),
            frobenius,
            conductor,
            semigroup_type,
            apery_max: self.apery.as_ref().ok().map(|a| a.max_apery),
            socle_degrees: self.socle.as_ref().ok().map(|b| b.socle_degrees.clone()),
            method: "both".to_string(),
            agree: Some(self.agree),
            timing_us: include_timings.then_some(TimingBreakdown {
                apery: Some(self.apery_us),
                socle: Some(self.socle_us),
            }),
        })
    }

    /// Human-readable block.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "semigroup <");
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                let _ = write!(out, ", ");
            }
            let _ = write!(out, "{g}");
        }
        let _ = writeln!(out, ">");
        match &self.apery {
            Ok(a) => {
                let _ = writeln!(
                    out,
                    "  apery route: f = {}  c = {}  type = {}  max Ap(H, {}) = {}  [{} us]",
                    a.frobenius,
                    a.conductor,
                    a.semigroup_type,
                    a.modulus,
                    a.max_apery,
                    self.apery_us
                );
            }
            Err(e) => {
                let _ = writeln!(out, "  apery route: error: {e}");
            }
        }
        match &self.socle {
            Ok(b) => {
                let _ = writeln!(
                    out,
                    "  socle route: f = {}  c = {}  dim = {}  deg(b) = {}  [{} us]",
                    b.frobenius, b.conductor, b.dim, b.max_degree, self.socle_us
                );
                let pairs: Vec<String> = b
                    .socle_monomials
                    .iter()
                    .zip(&b.socle_degrees)
                    .map(|(m, d)| format!("{m} (degree {d})"))
                    .collect();
                let _ = writeln!(out, "    socle basis: {}", pairs.join(", "));
                let _ = writeln!(out, "    p' basis: {}", b.p_prime_basis.join(", "));
            }
            Err(e) => {
                let _ = writeln!(out, "  socle route: error: {e}");
            }
        }
        let _ = writeln!(out, "  agree: {}", if self.agree { "yes" } else { "no" });
        out
    }
}
