//! Monomial orders: weighted-degree reverse-lexicographic, and the block
//! elimination order the toric pipeline uses to project out the auxiliary
//! variable.

use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::monomial::Monomial;

/// A total multiplicative well-order on monomials over a weighted variable
/// set. Weights must be positive; with positive weights the unit monomial
/// is minimal, which is what makes reduction terminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Compare by weighted degree, break ties reverse-lexicographically
    /// (the monomial with the smaller exponent in the last differing
    /// variable is the larger one).
    WeightedRevLex { weights: Vec<u64> },
    /// Block order: the first `block` variables dominate. Each block is
    /// compared by weighted degree, then reverse-lexicographically. A
    /// Gröbner basis under this order intersected with the second block
    /// is a Gröbner basis of the elimination ideal.
    Elimination { block: usize, weights: Vec<u64> },
}

impl MonomialOrder {
    pub fn weighted_revlex(weights: Vec<u64>) -> Self {
        debug_assert!(weights.iter().all(|&w| w > 0));
        Self::WeightedRevLex { weights }
    }

    pub fn elimination(block: usize, weights: Vec<u64>) -> Self {
        debug_assert!(block <= weights.len());
        debug_assert!(weights.iter().all(|&w| w > 0));
        Self::Elimination { block, weights }
    }

    pub fn nvars(&self) -> usize {
        self.weights().len()
    }

    pub fn weights(&self) -> &[u64] {
        match self {
            Self::WeightedRevLex { weights } | Self::Elimination { weights, .. } => weights,
        }
    }

    /// Total comparison of two monomials over this order's variable set.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: a.nvars(),
            });
        }
        if b.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp_unchecked(a, b))
    }

    /// Comparison with dimensions already validated by the caller.
    pub(crate) fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Self::WeightedRevLex { weights } => segment_cmp(a.exponents(), b.exponents(), weights),
            Self::Elimination { block, weights } => {
                let (wa, wb) = weights.split_at(*block);
                let (ea1, ea2) = a.exponents().split_at(*block);
                let (eb1, eb2) = b.exponents().split_at(*block);
                segment_cmp(ea1, eb1, wa).then_with(|| segment_cmp(ea2, eb2, wb))
            }
        }
    }

    /// A key whose lexicographic `Ord` agrees with this order, so monomials
    /// can sit in heaps and trees without dragging the order along.
    pub(crate) fn sort_key(&self, m: &Monomial) -> Vec<u128> {
        fn segment(out: &mut Vec<u128>, exps: &[u64], weights: &[u64]) {
            let deg: u128 = exps
                .iter()
                .zip(weights)
                .map(|(&e, &w)| e as u128 * w as u128)
                .sum();
            out.push(deg);
            // Reverse-lexicographic: scanning from the last variable, the
            // smaller exponent belongs to the larger monomial.
            out.extend(exps.iter().rev().map(|&e| (u64::MAX - e) as u128));
        }
        let mut key = Vec::with_capacity(m.nvars() + 2);
        match self {
            Self::WeightedRevLex { weights } => segment(&mut key, m.exponents(), weights),
            Self::Elimination { block, weights } => {
                let (w1, w2) = weights.split_at(*block);
                let (e1, e2) = m.exponents().split_at(*block);
                segment(&mut key, e1, w1);
                segment(&mut key, e2, w2);
            }
        }
        key
    }
}

/// Weighted degree then reverse-lexicographic, on one variable segment.
fn segment_cmp(a: &[u64], b: &[u64], weights: &[u64]) -> Ordering {
    let da: u128 = a
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as u128 * w as u128)
        .sum();
    let db: u128 = b
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as u128 * w as u128)
        .sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                // Smaller exponent in the last differing variable wins.
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}
