//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building a semigroup or running the
/// socle pipeline. All arithmetic is checked; silent wraparound never happens.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// No generators were supplied.
    #[error("no generators supplied")]
    EmptyGenerators,

    /// A generator was zero; generators must be positive.
    #[error("generator 0 is not allowed; generators must be positive")]
    ZeroGenerator,

    /// The generators are not coprime, so the complement of the semigroup is
    /// infinite and the Frobenius number does not exist.
    #[error("generators have gcd {gcd} > 1; the Frobenius number does not exist")]
    NonCoprime { gcd: u64 },

    /// A value required to be a nonzero semigroup element is not one.
    #[error("{value} is not a nonzero element of the semigroup")]
    NotInSemigroup { value: u64 },

    /// Checked integer arithmetic overflowed machine width.
    #[error("integer overflow in {context}")]
    Overflow { context: &'static str },

    /// Two objects over different variable sets were combined.
    #[error("variable count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A reduction or S-pair step left the pure-difference closure. This is
    /// an internal bug, never a property of valid input.
    #[error("internal closure violation: {detail}")]
    ClosureViolation { detail: &'static str },

    /// The standard-monomial enumeration did not produce exactly the
    /// expected number of monomials; the quotient is not the Artinian ring
    /// the pipeline constructs, which signals a bug upstream.
    #[error(
        "quotient is not Artinian of the expected dimension: found {found}, expected {expected}"
    )]
    NotArtinian { found: u64, expected: u64 },

    /// Two standard monomials share a weighted degree, contradicting the
    /// identification of the quotient with the span of the Apéry set.
    #[error("two standard monomials share weighted degree {degree}")]
    DegreeCollision { degree: u64 },

    /// Independent verification of an emitted Gröbner basis failed.
    #[error("Gröbner basis verification failed: {detail}")]
    BasisDefect { detail: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
