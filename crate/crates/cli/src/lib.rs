//! Library side of the `frobenius` command-line tool: route runners,
//! report shapes, batch parsing, and the seeded validation harness. The
//! binary in `main.rs` is a thin clap wrapper over these.

pub mod batch;
pub mod report;
pub mod validate;

use frobenius_core::Error;

/// Machine-parsable diagnostic prefix for an error, printed on stderr by
/// the binary.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::NonCoprime { .. } => "E_GCD",
        Error::Overflow { .. } => "E_OVERFLOW",
        Error::DegreeCollision { .. } => "E_COLLISION",
        Error::NotArtinian { .. } => "E_NOT_ARTINIAN",
        Error::EmptyGenerators
        | Error::ZeroGenerator
        | Error::NotInSemigroup { .. }
        | Error::DimensionMismatch { .. } => "E_INPUT",
        Error::ClosureViolation { .. } | Error::BasisDefect { .. } => "E_INTERNAL",
    }
}
