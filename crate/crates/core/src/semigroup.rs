//! Numerical semigroups and their combinatorial invariants.
//!
//! A numerical semigroup `H` is the set of non-negative integer combinations
//! of coprime positive generators. This module computes memberships, Apéry
//! sets, the Frobenius number and conductor, gaps, and the pseudo-Frobenius
//! numbers, entirely with checked integer arithmetic.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

/// A numerical semigroup, stored by its minimal generating set.
///
/// Construction canonicalizes the input: duplicates are removed, generators
/// are sorted increasingly, and generators representable by the others are
/// discarded. The Apéry table of the smallest generator is precomputed so
/// that membership and the Frobenius number are cheap afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// Apéry table for the smallest generator; drives `contains`.
    apery_min: AperyTable,
}

/// The Apéry set of a nonzero semigroup element `n`, tabulated by residue:
/// `entries[r]` is the smallest semigroup element congruent to `r` mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: u64,
    entries: Vec<u64>,
}

/// The pseudo-Frobenius numbers: integers `z` outside `H` with `z + m` in
/// `H` for every nonzero `m` in `H`. Their count is the type of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoFrobeniusSet {
    values: Vec<i64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Is `target` a non-negative combination of `gens`? Bounded dynamic
/// programming, `O(target * gens.len())`.
fn representable(target: u64, gens: &[u64]) -> bool {
    if target == 0 {
        return true;
    }
    let target = target as usize;
    let mut dp = vec![false; target + 1];
    dp[0] = true;
    for v in 1..=target {
        dp[v] = gens
            .iter()
            .any(|&g| (g as usize) <= v && dp[v - g as usize]);
    }
    dp[target]
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw_generators`.
    ///
    /// The input is deduplicated, sorted, and minimized; non-minimal
    /// generators are silently dropped. Fails with `NonCoprime` when the
    /// gcd of the input exceeds 1, since the complement is then infinite.
    pub fn new(raw_generators: &[u64]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if raw_generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens: Vec<u64> = raw_generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }

        let mut minimal: Vec<u64> = Vec::with_capacity(gens.len());
        for &cand in &gens {
            if !representable(cand, &minimal) {
                minimal.push(cand);
            }
        }

        let apery_min = apery_by_shortest_path(&minimal, minimal[0])?;
        Ok(Self {
            generators: minimal,
            apery_min,
        })
    }

    /// The minimal generators, strictly increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Largest minimal generator; the default distinguished generator of
    /// the socle pipeline.
    pub fn largest_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// The Apéry set of `n` in `H`, for a nonzero element `n` of `H`.
    pub fn apery_set(&self, n: u64) -> Result<AperyTable> {
        if n == 0 || !self.contains_u64(n) {
            return Err(Error::NotInSemigroup { value: n });
        }
        if n == self.apery_min.modulus {
            return Ok(self.apery_min.clone());
        }
        apery_by_shortest_path(&self.generators, n)
    }

    fn contains_u64(&self, x: u64) -> bool {
        let r = (x % self.apery_min.modulus) as usize;
        x >= self.apery_min.entries[r]
    }

    fn contains_wide(&self, x: u128) -> bool {
        let r = (x % self.apery_min.modulus as u128) as usize;
        x >= self.apery_min.entries[r] as u128
    }

    /// Membership test: is `x` a non-negative combination of the generators?
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.contains_u64(x as u64)
    }

    /// The largest integer not in `H`; `-1` when `H` is all of the
    /// non-negative integers.
    pub fn frobenius_number(&self) -> i64 {
        // max Ap(H, n) - n, independent of the choice of n.
        self.apery_min.max() as i64 - self.apery_min.modulus as i64
    }

    /// The least `c` with `c + k` in `H` for every `k >= 0`; equals the
    /// Frobenius number plus one.
    pub fn conductor(&self) -> u64 {
        (self.frobenius_number() + 1) as u64
    }

    /// All positive integers not in `H`, increasing. Empty exactly when the
    /// semigroup is all of the non-negative integers.
    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius_number();
        if f < 0 {
            return Vec::new();
        }
        (1..=f as u64).filter(|&x| !self.contains_u64(x)).collect()
    }

    /// The pseudo-Frobenius numbers of `H`.
    ///
    /// Every pseudo-Frobenius number `z` has `z + n_1` in the Apéry set of
    /// `n_1` (it is in `H` and dropping `n_1` again leaves `H`), so it is
    /// enough to test `z = w - n_1` for the `n_1` Apéry elements `w`; the
    /// Apéry property already gives `z` outside `H`.
    ///
    /// For `H` equal to all non-negative integers the set is `{-1}`: `-1`
    /// is not in `H` and `-1 + m >= 0` for every nonzero element `m`.
    pub fn pseudo_frobenius(&self) -> PseudoFrobeniusSet {
        let n = self.apery_min.modulus;
        let mut values: Vec<i64> = self
            .apery_min
            .entries
            .iter()
            .filter(|&&w| {
                // z + g = w - n + g, never negative since n is the
                // smallest generator.
                self.generators
                    .iter()
                    .all(|&g| self.contains_wide(w as u128 + g as u128 - n as u128))
            })
            .map(|&w| w as i64 - n as i64)
            .collect();
        values.sort_unstable();
        PseudoFrobeniusSet { values }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Apéry set by shortest paths on the cycle of residues mod `n`: from
/// residue `r` an arc of weight `n_i` leads to `(r + n_i) mod n`, and the
/// distance from 0 to `r` is the least semigroup element congruent to `r`.
fn apery_by_shortest_path(gens: &[u64], n: u64) -> Result<AperyTable> {
    let size = usize::try_from(n).map_err(|_| Error::Overflow {
        context: "Apéry table size",
    })?;
    let mut dist = vec![u64::MAX; size];
    dist[0] = 0;
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d.checked_add(g).ok_or(Error::Overflow {
                context: "Apéry shortest-path relaxation",
            })?;
            let nr = ((r as u64 + g % n) % n) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    // gcd(gens) = 1 makes every residue reachable.
    debug_assert!(dist.iter().all(|&d| d != u64::MAX));
    let max = dist.iter().copied().max().unwrap_or(0);
    if i64::try_from(max).is_err() {
        return Err(Error::Overflow {
            context: "Apéry entry exceeds signed range",
        });
    }
    Ok(AperyTable {
        modulus: n,
        entries: dist,
    })
}

impl AperyTable {
    /// The element `n` whose residues index the table.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `entries()[r]` is the least element of `H` congruent to `r` mod `n`.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// The Apéry set as a sorted list of values.
    pub fn values(&self) -> Vec<u64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    /// The largest element of the Apéry set.
    pub fn max(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

impl PseudoFrobeniusSet {
    /// The pseudo-Frobenius numbers, strictly increasing.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The type of the semigroup: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> usize {
        self.values.len()
    }

    /// The largest pseudo-Frobenius number, which is the Frobenius number.
    pub fn max(&self) -> i64 {
        *self.values.last().unwrap()
    }
}
