//! Pure-difference binomials `x^a - x^b` and bare monomials `x^a`.
//!
//! Toric ideals are generated by differences of two monic monomials, and
//! that shape is closed under S-pairs and reduction, so no coefficient
//! arithmetic exists anywhere in this engine. The zero polynomial is never
//! a `Binomial`; functions that can produce zero return an `Option`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::order::MonomialOrder;

/// Either `lead - trail` with `lead > trail` in the ambient order, or the
/// single monomial `lead` when `trail` is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    lead: Monomial,
    trail: Option<Monomial>,
}

impl Binomial {
    /// Builds `a - b` normalized against `order`; returns `None` when the
    /// two monomials coincide (the difference is zero).
    pub fn from_monomials(a: Monomial, b: Monomial, order: &MonomialOrder) -> Result<Option<Self>> {
        match order.compare(&a, &b)? {
            Ordering::Equal => Ok(None),
            Ordering::Greater => Ok(Some(Self {
                lead: a,
                trail: Some(b),
            })),
            Ordering::Less => Ok(Some(Self {
                lead: b,
                trail: Some(a),
            })),
        }
    }

    /// A single monomial viewed as a basis element.
    pub fn monomial(m: Monomial) -> Self {
        Self {
            lead: m,
            trail: None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> Option<&Monomial> {
        self.trail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.trail.is_none()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// Homogeneous under the grading `deg(x_i) = weights[i]`: both
    /// monomials have the same weighted degree. Single monomials are
    /// trivially homogeneous.
    pub fn is_homogeneous(&self, weights: &[u64]) -> Result<bool> {
        match &self.trail {
            None => Ok(true),
            Some(t) => {
                Ok(self.lead.weighted_degree_wide(weights)? == t.weighted_degree_wide(weights)?)
            }
        }
    }

    /// Reorder both monomials' variables and renormalize against the order
    /// of the permuted ring.
    pub fn permuted(&self, perm: &[usize], order: &MonomialOrder) -> Result<Self> {
        let lead = self.lead.permuted(perm);
        match &self.trail {
            None => Ok(Self::monomial(lead)),
            Some(t) => Self::from_monomials(lead, t.permuted(perm), order)?.ok_or(
                Error::ClosureViolation {
                    detail: "permutation collapsed a binomial",
                },
            ),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.trail {
            None => write!(f, "{}", self.lead),
            Some(t) => write!(f, "{} - {}", self.lead, t),
        }
    }
}
