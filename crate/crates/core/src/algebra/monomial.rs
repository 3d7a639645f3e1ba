//! Monomials as exponent vectors over a fixed, weighted variable set.

use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}`, stored as its exponent vector.
/// Coefficients do not exist at this layer; every monomial is monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Self { exponents }
    }

    /// The unit monomial in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Self {
            exponents: vec![0; nvars],
        }
    }

    /// The single variable `x_{index+1}` in `nvars` variables.
    pub fn variable(index: usize, nvars: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Self { exponents }
    }

    /// `x_{index+1}^power` in `nvars` variables.
    pub fn power(index: usize, power: u64, nvars: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = power;
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Product, with checked exponent addition.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| {
                a.checked_add(b).ok_or(Error::Overflow {
                    context: "monomial exponent",
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { exponents })
    }

    /// Does `self` divide `other` componentwise?
    pub fn divides(&self, other: &Self) -> bool {
        self.nvars() == other.nvars()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / divisor`, or `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Self {
            exponents: self
                .exponents
                .iter()
                .zip(&divisor.exponents)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Disjoint supports, i.e. gcd = 1.
    pub fn is_coprime_with(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Weighted degree as a wide integer; cannot overflow for any inputs
    /// this crate produces, but the sum is still checked.
    pub fn weighted_degree_wide(&self, weights: &[u64]) -> Result<u128> {
        if weights.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: weights.len(),
                found: self.nvars(),
            });
        }
        let mut total: u128 = 0;
        for (&e, &w) in self.exponents.iter().zip(weights) {
            total = total
                .checked_add(e as u128 * w as u128)
                .ok_or(Error::Overflow {
                    context: "weighted degree",
                })?;
        }
        Ok(total)
    }

    /// Weighted degree under the grading `deg(x_i) = weights[i]`.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        u64::try_from(self.weighted_degree_wide(weights)?).map_err(|_| Error::Overflow {
            context: "weighted degree",
        })
    }

    /// Variable reordering: entry `i` of the result is the exponent of the
    /// old variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.nvars());
        Self {
            exponents: perm.iter().map(|&old| self.exponents[old]).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
