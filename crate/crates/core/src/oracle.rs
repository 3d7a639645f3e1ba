//! Brute-force reference implementations.
//!
//! Everything here recomputes semigroup invariants by plain dynamic
//! programming over an explicit membership table, with no Apéry tables and
//! no Gröbner machinery. These functions exist to cross-check the fast
//! paths; they are deliberately naive and only suitable for small
//! generators. Nothing in the main computation paths calls into them.

use crate::error::{Error, Result};

/// Hard cap on the membership table so misuse fails loudly instead of
/// exhausting memory.
const MAX_TABLE: u64 = 1 << 28;

fn checked_bound(gens: &[u64]) -> Result<u64> {
    let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
    let hi = *gens.iter().max().unwrap();
    // lo * hi bounds the conductor from above, with headroom for the
    // `conductor + largest generator` window the tests scan.
    let bound = lo
        .checked_mul(hi)
        .and_then(|b| b.checked_add(2 * hi + 1))
        .ok_or(Error::Overflow {
            context: "oracle membership bound",
        })?;
    if bound > MAX_TABLE {
        return Err(Error::Overflow {
            context: "oracle membership table size",
        });
    }
    Ok(bound)
}

/// Membership table for `0..=bound`: `table[x]` is true iff `x` is a
/// non-negative combination of `gens`.
pub fn membership_up_to(gens: &[u64], bound: u64) -> Vec<bool> {
    let bound = bound as usize;
    let mut table = vec![false; bound + 1];
    table[0] = true;
    for x in 1..=bound {
        table[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && table[x - g as usize]);
    }
    table
}

/// Frobenius number by scanning the membership table downwards.
pub fn frobenius(gens: &[u64]) -> Result<i64> {
    let bound = checked_bound(gens)?;
    let table = membership_up_to(gens, bound);
    Ok(table
        .iter()
        .rposition(|&m| !m)
        .map(|x| x as i64)
        .unwrap_or(-1))
}

/// Apéry set of `n` by scanning for the least member of each residue class.
pub fn apery(gens: &[u64], n: u64) -> Result<Vec<u64>> {
    let bound = checked_bound(gens)?.max(n.checked_mul(2).ok_or(Error::Overflow {
        context: "oracle Apéry scan bound",
    })?);
    if bound > MAX_TABLE {
        return Err(Error::Overflow {
            context: "oracle Apéry table size",
        });
    }
    let table = membership_up_to(gens, bound);
    let mut minima = vec![None; n as usize];
    for (x, &member) in table.iter().enumerate() {
        if member {
            let r = x % n as usize;
            if minima[r].is_none() {
                minima[r] = Some(x as u64);
            }
        }
    }
    let mut values: Vec<u64> = minima
        .into_iter()
        .map(|m| m.expect("coprime generators reach every residue"))
        .collect();
    values.sort_unstable();
    Ok(values)
}

/// Gaps: positive non-members up to the Frobenius number.
pub fn gaps(gens: &[u64]) -> Result<Vec<u64>> {
    let f = frobenius(gens)?;
    if f < 0 {
        return Ok(Vec::new());
    }
    let table = membership_up_to(gens, f as u64);
    Ok((1..=f as u64).filter(|&x| !table[x as usize]).collect())
}

/// Pseudo-Frobenius numbers straight from the definition: integers `z`
/// outside the semigroup with `z + g` inside for every generator `g`.
pub fn pseudo_frobenius(gens: &[u64]) -> Result<Vec<i64>> {
    let f = frobenius(gens)?;
    if f < 0 {
        // Only z = -1 works: it is negative, and -1 + g >= 0 for g >= 1.
        return Ok(vec![-1]);
    }
    let hi = *gens.iter().max().unwrap();
    let table = membership_up_to(gens, f as u64 + hi);
    Ok((1..=f)
        .filter(|&z| !table[z as usize])
        .filter(|&z| gens.iter().all(|&g| table[(z as u64 + g) as usize]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_formula_for_two_generators() {
        // f(<a, b>) = ab - a - b for coprime a, b.
        for (a, b) in [(2u64, 3u64), (3, 5), (5, 8), (7, 11), (4, 9)] {
            assert_eq!(
                frobenius(&[a, b]).unwrap(),
                (a * b - a - b) as i64,
                "generators ({a}, {b})"
            );
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(frobenius(&[6, 8, 9]).unwrap(), 19);
        assert_eq!(frobenius(&[7, 8, 9, 11]).unwrap(), 13);
        assert_eq!(frobenius(&[1]).unwrap(), -1);
        assert_eq!(
            apery(&[6, 8, 9], 9).unwrap(),
            vec![0, 6, 8, 12, 14, 16, 20, 22, 28]
        );
        assert_eq!(pseudo_frobenius(&[7, 8, 9, 11]).unwrap(), vec![10, 12, 13]);
        assert_eq!(pseudo_frobenius(&[1]).unwrap(), vec![-1]);
        assert_eq!(gaps(&[2, 3]).unwrap(), vec![1]);
    }

    #[test]
    fn refuses_absurd_tables() {
        assert!(frobenius(&[1_000_000_007, 998_244_353]).is_err());
    }
}
