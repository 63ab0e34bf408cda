//! Buchberger's algorithm over `Q` in graded revlex order, initial ideals
//! and randomized generic initial ideals.

mod buchberger;
mod gin;
mod intpoly;

pub use gin::{gin, gin_monomial, GinOptions, GinResult};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{HilbertSeries, Polynomial, RingSpec};
use intpoly::IntPoly;

/// Reduced Gröbner basis: monic elements, no term of one divisible by the
/// leading monomial of another, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingSpec,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        let leads = self
            .elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect();
        MonomialIdeal::new(self.ring, leads).expect("same ring")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.elements).is_zero()
    }
}

/// Remainder of `f` on division by `divisors`, tried in list order on the
/// leading remaining term.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let n = f.nvars();
    let divisors: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem: Vec<(crate::ring::Monomial, BigRational)> = Vec::new();
    while let Some((m, c)) = p.terms().first().cloned() {
        let hit = divisors
            .iter()
            .find(|g| g.leading_monomial().unwrap().divides(&m));
        match hit {
            Some(g) => {
                let u = m.checked_div(g.leading_monomial().unwrap()).unwrap();
                let q = &c / g.leading_coefficient().unwrap();
                p = &p - &g.mul_term(&u, &q);
            }
            None => {
                rem.push((m.clone(), c.clone()));
                p = &p - &Polynomial::term(m, c);
            }
        }
    }
    Polynomial::from_sorted_terms(n, rem)
}

fn check_inputs(ring: RingSpec, gens: &[Polynomial]) -> Result<Vec<IntPoly>> {
    let mut out = Vec::new();
    for g in gens {
        if g.nvars() != ring.nvars() {
            return Err(Error::Dimension {
                expected: ring.nvars(),
                found: g.nvars(),
            });
        }
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::Grading(g.to_string()));
        }
        out.push(IntPoly::from_rational(g));
    }
    Ok(out)
}

fn leads_ideal(ring: RingSpec, basis: &[IntPoly]) -> MonomialIdeal {
    MonomialIdeal::new(ring, basis.iter().map(|g| g.lead().clone()).collect()).expect("same ring")
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn reduced_groebner_basis(ring: RingSpec, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let inputs = check_inputs(ring, gens)?;
    let basis = buchberger::interreduce(buchberger::groebner_basis(ring, inputs, None));
    Ok(GroebnerBasis {
        ring,
        elements: basis.iter().map(IntPoly::to_rational_monic).collect(),
    })
}

/// `in(I)` for the ideal generated by homogeneous `gens`.
pub fn initial_ideal(ring: RingSpec, gens: &[Polynomial]) -> Result<MonomialIdeal> {
    initial_ideal_with_hint(ring, gens, None)
}

/// As [`initial_ideal`], stopping early once the leading ideal reaches the
/// Hilbert series `hint` of `R/I`. A wrong hint gives a wrong answer.
pub(crate) fn initial_ideal_with_hint(
    ring: RingSpec,
    gens: &[Polynomial],
    hint: Option<&HilbertSeries>,
) -> Result<MonomialIdeal> {
    let inputs = check_inputs(ring, gens)?;
    Ok(leads_ideal(ring, &buchberger::groebner_basis(ring, inputs, hint)))
}

/// Strong stability: `x_i m / x_j ∈ I` for every generator `m`, every `x_j | m`
/// and every `i < j`.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.is_strongly_stable()
}
