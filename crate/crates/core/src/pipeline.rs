//! The algebraic route to the Frobenius number.
//!
//! For a semigroup with minimal generators `n_1 < ... < n_d`, the kernel of
//! `x_i -> t^{n_i}` is a pure-difference prime ideal. Setting the last
//! variable to zero cuts the semigroup ring down to an Artinian quotient of
//! dimension `n_d`, whose standard monomials carry exactly the Apéry set of
//! `n_d` as weighted degrees. The socle of that quotient — everything the
//! variables annihilate — has its degrees in bijection with the
//! pseudo-Frobenius numbers shifted by `n_d`, so the top socle degree minus
//! `n_d` is the Frobenius number and the socle dimension is the type.

use std::collections::{BTreeSet, VecDeque};

use crate::algebra::{buchberger, Binomial, GroebnerBasis, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// The two Gröbner bases the pipeline produces: the presentation ideal in
/// `d` variables and its image in `d - 1` variables after the last
/// variable is sent to zero.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    ambient_weights: Vec<u64>,
    p: GroebnerBasis,
    p_prime: GroebnerBasis,
}

impl IdealPresentation {
    /// The grading `deg(x_i) = n_i`, in the variable order the run used
    /// (the distinguished generator last).
    pub fn ambient_weights(&self) -> &[u64] {
        &self.ambient_weights
    }

    /// Reduced basis of the presentation ideal, `d` variables.
    pub fn p(&self) -> &GroebnerBasis {
        &self.p
    }

    /// Reduced basis of its image with the last variable set to zero,
    /// `d - 1` variables.
    pub fn p_prime(&self) -> &GroebnerBasis {
        &self.p_prime
    }
}

/// Monomial basis of the Artinian quotient: the standard monomials of the
/// projected ideal, sorted by weighted degree.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    standard_monomials: Vec<Monomial>,
    degrees: Vec<u64>,
    weights: Vec<u64>,
}

impl QuotientBasis {
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard_monomials
    }

    /// Weighted degrees, parallel to `standard_monomials`, increasing.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.standard_monomials.is_empty()
    }
}

/// The socle of the quotient and the invariants read off from it.
#[derive(Debug, Clone)]
pub struct SocleReport {
    socle_monomials: Vec<Monomial>,
    socle_degrees: Vec<u64>,
    max_degree: u64,
    frobenius: i64,
    conductor: u64,
    modulus: u64,
}

impl SocleReport {
    /// Standard monomials annihilated by every variable, by degree.
    pub fn socle_monomials(&self) -> &[Monomial] {
        &self.socle_monomials
    }

    /// Their weighted degrees, strictly increasing.
    pub fn socle_degrees(&self) -> &[u64] {
        &self.socle_degrees
    }

    /// Socle dimension; equals the type of the semigroup.
    pub fn dim(&self) -> usize {
        self.socle_monomials.len()
    }

    /// The top socle degree, which is also the largest Apéry value of the
    /// distinguished generator.
    pub fn max_degree(&self) -> u64 {
        self.max_degree
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The distinguished generator the quotient was taken by.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Everything a single pipeline run produces, kept around so callers can
/// cross-examine the intermediate objects.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub presentation: IdealPresentation,
    pub quotient: QuotientBasis,
    pub report: SocleReport,
}

/// Reduced basis of the kernel of `x_i -> t^{n_i}` for the given weight
/// sequence, computed by eliminating `t` from `{x_i - t^{n_i}}` under a
/// block order with `t` first and keeping the `t`-free elements.
fn presentation_ideal_of(weights: &[u64]) -> Result<GroebnerBasis> {
    let d = weights.len();
    let target_order = MonomialOrder::weighted_revlex(weights.to_vec());
    if d == 1 {
        // The map is onto with trivial kernel.
        return buchberger(&[], target_order);
    }
    let nvars = d + 1;
    let mut ambient = Vec::with_capacity(nvars);
    ambient.push(1);
    ambient.extend_from_slice(weights);
    let elim_order = MonomialOrder::elimination(1, ambient);

    let mut gens = Vec::with_capacity(d);
    for (i, &n) in weights.iter().enumerate() {
        let relation = Binomial::from_monomials(
            Monomial::power(0, n, nvars),
            Monomial::variable(i + 1, nvars),
            &elim_order,
        )?
        .expect("t^n and x_i are distinct monomials");
        gens.push(relation);
    }
    let elim_gb = buchberger(&gens, elim_order)?;

    let mut projected = Vec::new();
    for b in elim_gb.elements() {
        let t_free =
            b.lead().exponents()[0] == 0 && b.trail().is_none_or(|t| t.exponents()[0] == 0);
        if !t_free {
            continue;
        }
        let strip = |m: &Monomial| Monomial::new(m.exponents()[1..].to_vec());
        let projected_elem = match b.trail() {
            Some(t) => Binomial::from_monomials(strip(b.lead()), strip(t), &target_order)?.ok_or(
                Error::ClosureViolation {
                    detail: "projection collapsed a binomial",
                },
            )?,
            None => Binomial::monomial(strip(b.lead())),
        };
        projected.push(projected_elem);
    }
    // The t-free slice of a reduced elimination basis is already a reduced
    // basis of the kernel; rerunning the engine just re-checks and sorts.
    buchberger(&projected, target_order)
}

/// Reduced basis of the presentation ideal of the semigroup, variables
/// ordered by the canonical (increasing) generator sequence.
pub fn presentation_ideal(s: &NumericalSemigroup) -> Result<GroebnerBasis> {
    presentation_ideal_of(s.generators())
}

/// Image of each element under "send the last variable to zero": an
/// element keeps both monomials, survives as a single monomial, or
/// vanishes, depending on how many of its monomials the last variable
/// divides. The images of ideal generators generate the image ideal.
pub fn substitute_last_to_zero(
    elements: &[Binomial],
    target_order: &MonomialOrder,
) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    for b in elements {
        if b.nvars() != target_order.nvars() + 1 {
            return Err(Error::DimensionMismatch {
                expected: target_order.nvars() + 1,
                found: b.nvars(),
            });
        }
        let last = b.nvars() - 1;
        let lead_dies = b.lead().exponents()[last] > 0;
        let strip = |m: &Monomial| Monomial::new(m.exponents()[..last].to_vec());
        match b.trail() {
            Some(t) => {
                let trail_dies = t.exponents()[last] > 0;
                match (lead_dies, trail_dies) {
                    (true, true) => {}
                    (true, false) => out.push(Binomial::monomial(strip(t))),
                    (false, true) => out.push(Binomial::monomial(strip(b.lead()))),
                    (false, false) => out.push(
                        Binomial::from_monomials(strip(b.lead()), strip(t), target_order)?
                            .expect("distinct monomials stay distinct"),
                    ),
                }
            }
            None => {
                if !lead_dies {
                    out.push(Binomial::monomial(strip(b.lead())));
                }
            }
        }
    }
    Ok(out)
}

/// All monomials no basis lead divides, found by breadth-first
/// multiplication from 1. The count must come out to `expected_dim`
/// exactly; anything else means the quotient is not the Artinian ring the
/// pipeline constructed and is reported as such.
pub fn quotient_basis(gb: &GroebnerBasis, expected_dim: u64) -> Result<QuotientBasis> {
    let weights = gb.order().weights().to_vec();
    let nvars = weights.len();

    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    let mut standard: Vec<Monomial> = Vec::new();

    let one = Monomial::one(nvars);
    seen.insert(one.clone());
    queue.push_back(one);

    while let Some(m) = queue.pop_front() {
        let is_standard = !gb.elements().iter().any(|g| g.lead().divides(&m));
        if !is_standard {
            // Multiples of a non-standard monomial are non-standard.
            continue;
        }
        standard.push(m.clone());
        if standard.len() as u64 > expected_dim {
            return Err(Error::NotArtinian {
                found: standard.len() as u64,
                expected: expected_dim,
            });
        }
        for i in 0..nvars {
            let child = m.checked_mul(&Monomial::variable(i, nvars))?;
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }

    if standard.len() as u64 != expected_dim {
        return Err(Error::NotArtinian {
            found: standard.len() as u64,
            expected: expected_dim,
        });
    }

    let mut with_degrees = standard
        .into_iter()
        .map(|m| {
            let deg = m.weighted_degree(&weights)?;
            Ok((deg, m))
        })
        .collect::<Result<Vec<_>>>()?;
    with_degrees.sort();

    let (degrees, standard_monomials) = with_degrees.into_iter().unzip();
    Ok(QuotientBasis {
        standard_monomials,
        degrees,
        weights,
    })
}

/// The socle: standard monomials every variable multiplies to zero.
///
/// Because the standard monomials have pairwise distinct weighted degrees
/// (checked here, aborting with `DegreeCollision` otherwise),
/// multiplication by a variable sends distinct basis monomials to distinct
/// basis monomials or to zero, with no cancellation possible between them;
/// the socle is therefore spanned by the basis monomials it contains, and
/// the monomial-by-monomial annihilation test below finds all of it.
pub fn socle(basis: &QuotientBasis, gb: &GroebnerBasis, modulus: u64) -> Result<SocleReport> {
    for pair in basis.degrees.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DegreeCollision { degree: pair[0] });
        }
    }

    let nvars = gb.order().nvars();
    let mut socle_monomials = Vec::new();
    let mut socle_degrees = Vec::new();
    for (m, &deg) in basis.standard_monomials.iter().zip(&basis.degrees) {
        let mut annihilated = true;
        for i in 0..nvars {
            let product = m.checked_mul(&Monomial::variable(i, nvars))?;
            if gb.normal_form_monomial(&product)?.is_some() {
                annihilated = false;
                break;
            }
        }
        if annihilated {
            socle_monomials.push(m.clone());
            socle_degrees.push(deg);
        }
    }

    // The top-degree standard monomial is always annihilated: a variable
    // would push its degree past every standard degree.
    let max_degree = *socle_degrees
        .last()
        .expect("socle contains the top-degree standard monomial");
    let max_signed = i64::try_from(max_degree).map_err(|_| Error::Overflow {
        context: "socle degree exceeds signed range",
    })?;
    let frobenius = max_signed - modulus as i64;
    Ok(SocleReport {
        socle_monomials,
        socle_degrees,
        max_degree,
        frobenius,
        conductor: (frobenius + 1) as u64,
        modulus,
    })
}

/// Full pipeline with an explicit choice of distinguished generator
/// (`distinguished` indexes the canonical generator list); that generator
/// becomes the last variable and the quotient is taken by it.
pub fn run_pipeline(s: &NumericalSemigroup, distinguished: usize) -> Result<PipelineRun> {
    let gens = s.generators();
    let d = gens.len();
    assert!(
        distinguished < d,
        "distinguished generator index {distinguished} out of range for {d} generators"
    );

    let mut weights: Vec<u64> = Vec::with_capacity(d);
    for (i, &g) in gens.iter().enumerate() {
        if i != distinguished {
            weights.push(g);
        }
    }
    weights.push(gens[distinguished]);
    let modulus = gens[distinguished];

    let p = presentation_ideal_of(&weights)?;
    let inner_order = MonomialOrder::weighted_revlex(weights[..d - 1].to_vec());
    let p_prime_gens = substitute_last_to_zero(p.elements(), &inner_order)?;
    let p_prime = buchberger(&p_prime_gens, inner_order)?;

    let quotient = quotient_basis(&p_prime, modulus)?;
    let report = socle(&quotient, &p_prime, modulus)?;

    Ok(PipelineRun {
        presentation: IdealPresentation {
            ambient_weights: weights,
            p,
            p_prime,
        },
        quotient,
        report,
    })
}

/// The Frobenius number, conductor, and type via the socle, quotienting by
/// the largest generator.
pub fn frobenius_via_socle(s: &NumericalSemigroup) -> Result<SocleReport> {
    let d = s.embedding_dimension();
    Ok(run_pipeline(s, d - 1)?.report)
}
