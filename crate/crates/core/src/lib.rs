//! Exact computation of numerical-semigroup invariants, two independent
//! ways.
//!
//! The [`semigroup`] module is pure combinatorics: Apéry sets by shortest
//! paths over residue classes, and the Frobenius number, conductor, gaps,
//! and pseudo-Frobenius numbers read off from them. The [`pipeline`] module
//! reaches the same numbers through commutative algebra: it presents the
//! semigroup ring as a quotient of a polynomial ring by a pure-difference
//! ideal (computed by Gröbner-basis elimination in [`algebra`]), cuts down
//! to an Artinian quotient, and reads the invariants off the socle degrees.
//! The [`oracle`] module holds deliberately naive reference
//! implementations used to cross-check both routes.
//!
//! ```
//! use frobenius_core::{frobenius_via_socle, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::new(&[6, 8, 9]).unwrap();
//! assert_eq!(s.frobenius_number(), 19);
//!
//! let report = frobenius_via_socle(&s).unwrap();
//! assert_eq!(report.frobenius(), 19);
//! assert_eq!(report.dim(), s.pseudo_frobenius().semigroup_type());
//! ```

pub mod algebra;
mod error;
pub mod oracle;
pub mod pipeline;
pub mod semigroup;

pub use algebra::{buchberger, reduce, Binomial, GroebnerBasis, Monomial, MonomialOrder};
pub use error::{Error, Result};
pub use pipeline::{
    frobenius_via_socle, presentation_ideal, quotient_basis, run_pipeline, socle,
    substitute_last_to_zero, IdealPresentation, PipelineRun, QuotientBasis, SocleReport,
};
pub use semigroup::{AperyTable, NumericalSemigroup, PseudoFrobeniusSet};
