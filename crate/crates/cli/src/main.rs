//! `frobenius` — exact numerical-semigroup invariants two independent
//! ways, with cross-checking, batch processing, seeded validation, and a
//! small benchmark mode.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use frobenius_cli::batch::parse_batch;
use frobenius_cli::error_code;
use frobenius_cli::report::{
    apery_route, compare_methods_with, socle_route, JsonReport, TimingBreakdown,
};
use frobenius_cli::validate::{run_random_validation, ValidationConfig};
use frobenius_core::{Error, NumericalSemigroup};

/// Largest generator the CLI accepts; the library itself is uncapped but
/// this is a desk tool and failing loudly beats thrashing.
const MAX_GENERATOR: u64 = 1_000_000;

const EXIT_OK: i32 = 0;
const EXIT_DISAGREE: i32 = 1;
const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(
    name = "frobenius",
    version,
    about = "Frobenius numbers, Apéry sets, and semigroup types, computed two independent ways"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Include measured timings in JSON output (off by default so that
    /// identical invocations emit identical bytes).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Apery,
    Socle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one semigroup.
    Compute {
        /// Generators of the semigroup (positive integers, gcd 1).
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Apéry-route modulus (any nonzero element of the semigroup);
        /// defaults to the largest generator.
        #[arg(long)]
        modulus: Option<u64>,
        /// 1-based index of the generator the socle route quotients by;
        /// defaults to the largest generator.
        #[arg(long)]
        socle_var: Option<usize>,
    },
    /// Run both routes and cross-check them; exits nonzero on mismatch.
    Compare {
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        socle_var: Option<usize>,
    },
    /// Random cross-validation of the two routes against a naive scan.
    Validate {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[arg(long, default_value_t = 40)]
        max_gen: u64,
    },
    /// Time both routes over repeated runs.
    Bench {
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        repeat: u32,
    },
    /// Process a file with one generator list per line (`#` comments).
    Batch { file: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn report_error(e: &Error) -> i32 {
    eprintln!("{}: {}", error_code(e), e);
    EXIT_ERROR
}

fn report_input_error(message: &str) -> i32 {
    eprintln!("E_INPUT: {message}");
    EXIT_ERROR
}

/// Build the semigroup, enforcing the CLI generator cap and noting on
/// stderr when the input was not minimal.
fn build_semigroup(raw: &[u64]) -> Result<NumericalSemigroup, i32> {
    if let Some(&g) = raw.iter().find(|&&g| g > MAX_GENERATOR) {
        return Err(report_input_error(&format!(
            "generator {g} exceeds the supported maximum of {MAX_GENERATOR}"
        )));
    }
    let s = NumericalSemigroup::new(raw).map_err(|e| report_error(&e))?;
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if s.generators() != sorted.as_slice() {
        eprintln!("note: generators minimized to {s}");
    }
    Ok(s)
}

/// Resolve --socle-var (1-based) to an index into the canonical
/// generators, defaulting to the largest generator.
fn resolve_socle_var(s: &NumericalSemigroup, socle_var: Option<usize>) -> Result<usize, i32> {
    match socle_var {
        None => Ok(s.embedding_dimension() - 1),
        Some(k) if (1..=s.embedding_dimension()).contains(&k) => Ok(k - 1),
        Some(k) => Err(report_input_error(&format!(
            "--socle-var {k} out of range; the semigroup has {} generators",
            s.embedding_dimension()
        ))),
    }
}

fn emit_json(report: &JsonReport) {
    println!(
        "{}",
        serde_json::to_string(report).expect("report serializes")
    );
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Compute {
            generators,
            method,
            modulus,
            socle_var,
        } => {
            let s = match build_semigroup(&generators) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let socle_index = match resolve_socle_var(&s, socle_var) {
                Ok(i) => i,
                Err(code) => return code,
            };
            let modulus = modulus.unwrap_or_else(|| s.largest_generator());
            match method {
                Method::Both => run_compare(&s, modulus, socle_index, cli.format, cli.timings),
                Method::Apery => {
                    let started = Instant::now();
                    let route = match apery_route(&s, modulus) {
                        Ok(r) => r,
                        Err(e) => return report_error(&e),
                    };
                    let elapsed = started.elapsed().as_micros() as u64;
                    match cli.format {
                        Format::Json => emit_json(&JsonReport {
                            generators: s.generators().to_vec(),
                            frobenius: route.frobenius,
                            conductor: route.conductor,
                            semigroup_type: route.semigroup_type as u64,
                            apery_max: Some(route.max_apery),
                            socle_degrees: None,
                            method: "apery".to_string(),
                            agree: None,
                            timing_us: cli.timings.then_some(TimingBreakdown {
                                apery: Some(elapsed),
                                socle: None,
                            }),
                        }),
                        Format::Human => {
                            println!("semigroup {s}");
                            println!(
                                "  f = {}  c = {}  type = {}  max Ap(H, {}) = {}  [{} us]",
                                route.frobenius,
                                route.conductor,
                                route.semigroup_type,
                                route.modulus,
                                route.max_apery,
                                elapsed
                            );
                            if route.modulus <= 64 {
                                let values: Vec<String> = s
                                    .apery_set(route.modulus)
                                    .expect("route already used this modulus")
                                    .values()
                                    .iter()
                                    .map(|v| v.to_string())
                                    .collect();
                                println!("  Ap(H, {}) = {{{}}}", route.modulus, values.join(", "));
                            }
                            let pf = s.pseudo_frobenius();
                            if pf.semigroup_type() <= 32 {
                                let values: Vec<String> =
                                    pf.values().iter().map(|v| v.to_string()).collect();
                                println!("  pseudo-Frobenius: {{{}}}", values.join(", "));
                            }
                        }
                    }
                    EXIT_OK
                }
                Method::Socle => {
                    let started = Instant::now();
                    let route = match socle_route(&s, socle_index) {
                        Ok(r) => r,
                        Err(e) => return report_error(&e),
                    };
                    let elapsed = started.elapsed().as_micros() as u64;
                    match cli.format {
                        Format::Json => emit_json(&JsonReport {
                            generators: s.generators().to_vec(),
                            frobenius: route.frobenius,
                            conductor: route.conductor,
                            semigroup_type: route.dim as u64,
                            apery_max: None,
                            socle_degrees: Some(route.socle_degrees.clone()),
                            method: "socle".to_string(),
                            agree: None,
                            timing_us: cli.timings.then_some(TimingBreakdown {
                                apery: None,
                                socle: Some(elapsed),
                            }),
                        }),
                        Format::Human => {
                            println!("semigroup {s}");
                            println!(
                                "  f = {}  c = {}  dim = {}  deg(b) = {}  [{} us]",
                                route.frobenius,
                                route.conductor,
                                route.dim,
                                route.max_degree,
                                elapsed
                            );
                            let degrees: Vec<String> =
                                route.socle_degrees.iter().map(|d| d.to_string()).collect();
                            println!("  socle degrees: {{{}}}", degrees.join(", "));
                            println!("  socle basis: {}", route.socle_monomials.join(", "));
                            println!("  p' basis: {}", route.p_prime_basis.join(", "));
                        }
                    }
                    EXIT_OK
                }
            }
        }
        Command::Compare {
            generators,
            modulus,
            socle_var,
        } => {
            let s = match build_semigroup(&generators) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let socle_index = match resolve_socle_var(&s, socle_var) {
                Ok(i) => i,
                Err(code) => return code,
            };
            let modulus = modulus.unwrap_or_else(|| s.largest_generator());
            run_compare(&s, modulus, socle_index, cli.format, cli.timings)
        }
        Command::Validate {
            seed,
            count,
            max_d,
            max_gen,
        } => {
            if max_d < 1 {
                return report_input_error("--max-d must be at least 1");
            }
            if max_gen < 2 {
                return report_input_error("--max-gen must be at least 2");
            }
            if max_gen > MAX_GENERATOR {
                return report_input_error(&format!(
                    "--max-gen exceeds the supported maximum of {MAX_GENERATOR}"
                ));
            }
            let summary = run_random_validation(ValidationConfig {
                seed,
                count,
                max_d,
                max_gen,
            });
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&summary).expect("summary serializes")
                ),
                Format::Human => {
                    println!(
                        "validation: seed = {}  count = {}  passes = {}  failures = {}",
                        summary.seed, summary.count, summary.passes, summary.failures
                    );
                    if let Some(cx) = &summary.first_counterexample {
                        println!(
                            "first counterexample: generators {:?}: {}",
                            cx.generators, cx.detail
                        );
                    }
                }
            }
            if summary.failures == 0 {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            }
        }
        Command::Bench { generators, repeat } => {
            let s = match build_semigroup(&generators) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let repeat = repeat.max(1);
            let mut apery_us = Vec::with_capacity(repeat as usize);
            let mut socle_us = Vec::with_capacity(repeat as usize);
            let mut last = None;
            for _ in 0..repeat {
                let report =
                    compare_methods_with(&s, s.largest_generator(), s.embedding_dimension() - 1);
                if let Err(e) = report
                    .apery
                    .as_ref()
                    .err()
                    .map_or(Ok(()), |e| Err(e.clone()))
                {
                    return report_error(&e);
                }
                if let Err(e) = report
                    .socle
                    .as_ref()
                    .err()
                    .map_or(Ok(()), |e| Err(e.clone()))
                {
                    return report_error(&e);
                }
                apery_us.push(report.apery_us);
                socle_us.push(report.socle_us);
                last = Some(report);
            }
            let report = last.expect("repeat >= 1");
            let stats = |v: &[u64]| {
                let min = *v.iter().min().unwrap();
                let max = *v.iter().max().unwrap();
                let mean = v.iter().sum::<u64>() / v.len() as u64;
                (min, mean, max)
            };
            let (a_min, a_mean, a_max) = stats(&apery_us);
            let (s_min, s_mean, s_max) = stats(&socle_us);
            match cli.format {
                Format::Json => {
                    let mut json = report.to_json(true).expect("both routes succeeded");
                    json.method = "bench".to_string();
                    json.timing_us = Some(TimingBreakdown {
                        apery: Some(a_mean),
                        socle: Some(s_mean),
                    });
                    emit_json(&json);
                }
                Format::Human => {
                    println!("bench {s}  repeat = {repeat}");
                    println!("  apery: min {a_min} us  mean {a_mean} us  max {a_max} us");
                    println!("  socle: min {s_min} us  mean {s_mean} us  max {s_max} us");
                    println!("  agree: {}", if report.agree { "yes" } else { "no" });
                }
            }
            if report.agree {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            }
        }
        Command::Batch { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    return report_input_error(&format!("cannot read {}: {e}", file.display()))
                }
            };
            let lines = match parse_batch(&text) {
                Ok(l) => l,
                Err(e) => return report_input_error(&e.to_string()),
            };
            let mut exit = EXIT_OK;
            let mut first = true;
            for line in lines {
                if cli.format == Format::Human && !first {
                    println!();
                }
                first = false;
                let s = match build_semigroup(&line.generators) {
                    Ok(s) => s,
                    Err(_) => {
                        eprintln!("(error was on line {})", line.line_number);
                        exit = EXIT_ERROR;
                        continue;
                    }
                };
                let code = run_compare(
                    &s,
                    s.largest_generator(),
                    s.embedding_dimension() - 1,
                    cli.format,
                    cli.timings,
                );
                exit = exit.max(code);
            }
            exit
        }
    }
}

fn run_compare(
    s: &NumericalSemigroup,
    modulus: u64,
    socle_index: usize,
    format: Format,
    timings: bool,
) -> i32 {
    let report = compare_methods_with(s, modulus, socle_index);
    for route_err in [report.apery.as_ref().err(), report.socle.as_ref().err()]
        .into_iter()
        .flatten()
    {
        eprintln!("{}: {}", error_code(route_err), route_err);
    }
    match format {
        Format::Json => match report.to_json(timings) {
            Ok(json) => emit_json(&json),
            Err(e) => return report_error(&e),
        },
        Format::Human => print!("{}", report.render_human()),
    }
    if report.apery.is_err() || report.socle.is_err() {
        EXIT_ERROR
    } else if report.agree {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}
