//! Buchberger's algorithm specialized to pure-difference binomials.
//!
//! The S-polynomial of two pure differences is again a pure difference (or
//! a single monomial, or zero), and each reduction step rewrites one monic
//! monomial into another, so the whole computation runs on `Binomial`
//! values with no coefficient arithmetic. Pairs are processed by
//! increasing weighted degree of the lcm (then by the ambient order, then
//! first-in-first-out), with Buchberger's coprime-lead criterion for
//! pruning; for the homogeneous ideals the pipeline feeds in, degree-first
//! selection keeps the intermediate basis small even under elimination
//! orders. Output is deterministic for a fixed input sequence and order.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

use super::binomial::Binomial;
use super::monomial::Monomial;
use super::order::MonomialOrder;

/// A reduced Gröbner basis together with the order it was computed under.
/// Only `buchberger` constructs values of this type, so the reducedness
/// invariants hold by construction; `verify` re-checks them from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: MonomialOrder,
}

/// Fully reduce `f` modulo `basis`: the result has no monomial divisible
/// by any basis lead. `None` means `f` reduced to zero.
pub fn reduce(f: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Result<Option<Binomial>> {
    check_dims(std::iter::once(f), order)?;
    check_dims(basis.iter(), order)?;
    reduce_unchecked(f, basis, order)
}

fn find_reducer<'a>(m: &Monomial, basis: &'a [Binomial]) -> Option<&'a Binomial> {
    basis.iter().find(|g| g.lead().divides(m))
}

fn reduce_unchecked(
    f: &Binomial,
    basis: &[Binomial],
    order: &MonomialOrder,
) -> Result<Option<Binomial>> {
    let mut lead = f.lead().clone();
    let mut trail = f.trail().cloned();
    loop {
        // Rewrite the lead while some basis lead divides it.
        if let Some(g) = find_reducer(&lead, basis) {
            match g.trail() {
                Some(b) => {
                    let quotient = lead.div_exact(g.lead()).expect("reducer divides lead");
                    let image = quotient.checked_mul(b)?;
                    match trail.take() {
                        Some(t) => {
                            if image == t {
                                return Ok(None);
                            }
                            if order.cmp_unchecked(&image, &t) == Ordering::Greater {
                                lead = image;
                                trail = Some(t);
                            } else {
                                lead = t;
                                trail = Some(image);
                            }
                        }
                        None => lead = image,
                    }
                }
                // Reducing by a bare monomial kills the lead outright.
                None => match trail.take() {
                    Some(t) => lead = t,
                    None => return Ok(None),
                },
            }
            continue;
        }
        // Lead is irreducible; normalize the trail the same way.
        if let Some(t) = &trail {
            if let Some(g) = find_reducer(t, basis) {
                match g.trail() {
                    Some(b) => {
                        let quotient = t.div_exact(g.lead()).expect("reducer divides trail");
                        let image = quotient.checked_mul(b)?;
                        if image == lead {
                            return Ok(None);
                        }
                        if order.cmp_unchecked(&image, &lead) == Ordering::Greater {
                            trail = Some(std::mem::replace(&mut lead, image));
                        } else {
                            trail = Some(image);
                        }
                    }
                    None => trail = None,
                }
                continue;
            }
        }
        break;
    }
    Ok(Some(match trail {
        Some(t) => Binomial::from_monomials(lead, t, order)?.ok_or(Error::ClosureViolation {
            detail: "reduction produced equal lead and trail",
        })?,
        None => Binomial::monomial(lead),
    }))
}

/// S-polynomial of `f` and `g`; `None` when it is zero (e.g. two bare
/// monomials).
fn s_polynomial(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Result<Option<Binomial>> {
    let l = f.lead().lcm(g.lead());
    let f_factor = |t: &Monomial| -> Result<Monomial> {
        l.div_exact(f.lead())
            .expect("lcm is divisible")
            .checked_mul(t)
    };
    let g_factor = |t: &Monomial| -> Result<Monomial> {
        l.div_exact(g.lead())
            .expect("lcm is divisible")
            .checked_mul(t)
    };
    match (f.trail(), g.trail()) {
        (Some(tf), Some(tg)) => Binomial::from_monomials(g_factor(tg)?, f_factor(tf)?, order),
        (Some(tf), None) => Ok(Some(Binomial::monomial(f_factor(tf)?))),
        (None, Some(tg)) => Ok(Some(Binomial::monomial(g_factor(tg)?))),
        (None, None) => Ok(None),
    }
}

/// A queued S-pair. The key is (weighted degree of the lcm, order key of
/// the lcm); insertion sequence breaks remaining ties, so selection is
/// deterministic.
#[derive(PartialEq, Eq)]
struct Pair {
    key: Vec<u128>,
    seq: u64,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .cmp(&other.key)
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by
/// `generators` under `order`. Deterministic: fixed pair selection,
/// reduction against basis elements in insertion order, canonical sorting
/// of the result.
pub fn buchberger(generators: &[Binomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    check_dims(generators.iter(), &order)?;

    // Renormalize the inputs against this order.
    let mut basis: Vec<Binomial> = Vec::with_capacity(generators.len());
    for g in generators {
        let normalized = match g.trail() {
            Some(t) => Binomial::from_monomials(g.lead().clone(), t.clone(), &order)?,
            None => Some(Binomial::monomial(g.lead().clone())),
        };
        if let Some(b) = normalized {
            basis.push(b);
        }
    }

    // Elements whose lead another lead divides can never be the first
    // applicable reducer, so reduction only consults this thinned list.
    // The final reduced basis is unique for the ideal and order, so this
    // changes nothing about the output.
    let mut reducers: Vec<Binomial> = basis.clone();

    let mut pairs: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut next_seq: u64 = 0;
    let enqueue = |pairs: &mut BinaryHeap<Reverse<Pair>>,
                   next_seq: &mut u64,
                   basis: &[Binomial],
                   j: usize| {
        for i in 0..j {
            // Coprime leads: the S-polynomial reduces to zero on its own.
            if basis[i].lead().is_coprime_with(basis[j].lead()) {
                continue;
            }
            let lcm = basis[i].lead().lcm(basis[j].lead());
            let deg: u128 = lcm
                .exponents()
                .iter()
                .zip(order.weights())
                .map(|(&e, &w)| e as u128 * w as u128)
                .sum();
            let mut key = vec![deg];
            key.extend(order.sort_key(&lcm));
            pairs.push(Reverse(Pair {
                key,
                seq: *next_seq,
                i,
                j,
            }));
            *next_seq += 1;
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut pairs, &mut next_seq, &basis, j);
    }

    // Smallest lcm degree first, earliest-inserted pair on final ties.
    while let Some(Reverse(pair)) = pairs.pop() {
        let s = match s_polynomial(&basis[pair.i], &basis[pair.j], &order)? {
            Some(s) => s,
            None => continue,
        };
        if let Some(h) = reduce_unchecked(&s, &reducers, &order)? {
            reducers.retain(|r| !h.lead().divides(r.lead()));
            reducers.push(h.clone());
            basis.push(h);
            enqueue(&mut pairs, &mut next_seq, &basis, basis.len() - 1);
        }
    }

    // Minimalize: drop elements whose lead another kept lead divides.
    let mut indices: Vec<usize> = (0..basis.len()).collect();
    indices.sort_by(|&a, &b| order.cmp_unchecked(basis[a].lead(), basis[b].lead()));
    let mut kept: Vec<Binomial> = Vec::new();
    for idx in indices {
        if !kept.iter().any(|k| k.lead().divides(basis[idx].lead())) {
            kept.push(basis[idx].clone());
        }
    }

    // Inter-reduce: leads are pairwise irreducible already, so only the
    // trails need normal forms, against every kept element but the own.
    let mut reduced: Vec<Binomial> = Vec::with_capacity(kept.len());
    for (i, e) in kept.iter().enumerate() {
        let r = match e.trail() {
            None => e.clone(),
            Some(t) => match trail_normal_form(t, &kept, i)? {
                None => Binomial::monomial(e.lead().clone()),
                Some(nf) => Binomial::from_monomials(e.lead().clone(), nf, &order)?.ok_or(
                    Error::ClosureViolation {
                        detail: "inter-reduction cancelled a minimal basis element",
                    },
                )?,
            },
        };
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp_unchecked(a.lead(), b.lead()));

    Ok(GroebnerBasis {
        elements: reduced,
        order,
    })
}

/// Monomial normal form of `m` against every element of `kept` except
/// index `skip`; `None` when it reduces to zero.
fn trail_normal_form(m: &Monomial, kept: &[Binomial], skip: usize) -> Result<Option<Monomial>> {
    let mut current = m.clone();
    loop {
        let reducer = kept
            .iter()
            .enumerate()
            .find(|(k, g)| *k != skip && g.lead().divides(&current));
        match reducer {
            None => return Ok(Some(current)),
            Some((_, g)) => match g.trail() {
                None => return Ok(None),
                Some(b) => {
                    current = current
                        .div_exact(g.lead())
                        .expect("reducer divides monomial")
                        .checked_mul(b)?;
                }
            },
        }
    }
}

fn check_dims<'a>(items: impl Iterator<Item = &'a Binomial>, order: &MonomialOrder) -> Result<()> {
    for b in items {
        if b.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch {
                expected: order.nvars(),
                found: b.nvars(),
            });
        }
    }
    Ok(())
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of `f` modulo this basis; `None` when `f` lies in the
    /// ideal.
    pub fn reduce(&self, f: &Binomial) -> Result<Option<Binomial>> {
        reduce(f, &self.elements, &self.order)
    }

    /// Ideal membership for a single element.
    pub fn contains_element(&self, f: &Binomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_none())
    }

    /// Do this basis and `other` generate the same ideal? Checked by
    /// mutual reduction of all elements.
    pub fn same_ideal_as(&self, other: &GroebnerBasis) -> Result<bool> {
        for e in &other.elements {
            if !self.contains_element(e)? {
                return Ok(false);
            }
        }
        for e in &self.elements {
            if !other.contains_element(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Normal form of a monic monomial: a monic monomial again, or `None`
    /// when the monomial lies in the ideal. Each step replaces a multiple
    /// of a basis lead with the matching multiple of its trail, so no
    /// two-term form can appear.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Result<Option<Monomial>> {
        if m.nvars() != self.order.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.order.nvars(),
                found: m.nvars(),
            });
        }
        let mut current = m.clone();
        loop {
            match find_reducer(&current, &self.elements) {
                None => return Ok(Some(current)),
                Some(g) => match g.trail() {
                    None => return Ok(None),
                    Some(b) => {
                        current = current
                            .div_exact(g.lead())
                            .expect("reducer divides monomial")
                            .checked_mul(b)?;
                    }
                },
            }
        }
    }

    /// Independent check of the Gröbner property, run from first
    /// principles: structural sanity, pairwise reducedness, and reduction
    /// of every S-polynomial to zero with no criterion shortcuts.
    pub fn verify(&self) -> Result<()> {
        check_dims(self.elements.iter(), &self.order)?;
        for e in &self.elements {
            if let Some(t) = e.trail() {
                if self.order.cmp_unchecked(e.lead(), t) != Ordering::Greater {
                    return Err(Error::BasisDefect {
                        detail: "element is not normalized (lead <= trail)",
                    });
                }
            }
        }
        for (i, e) in self.elements.iter().enumerate() {
            for (j, o) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                if o.lead().divides(e.lead()) {
                    return Err(Error::BasisDefect {
                        detail: "lead monomial divisible by another lead",
                    });
                }
                if let Some(t) = e.trail() {
                    if o.lead().divides(t) {
                        return Err(Error::BasisDefect {
                            detail: "trail monomial divisible by a lead",
                        });
                    }
                }
            }
        }
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if let Some(s) = s_polynomial(&self.elements[i], &self.elements[j], &self.order)? {
                    if reduce_unchecked(&s, &self.elements, &self.order)?.is_some() {
                        return Err(Error::BasisDefect {
                            detail: "an S-polynomial does not reduce to zero",
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
