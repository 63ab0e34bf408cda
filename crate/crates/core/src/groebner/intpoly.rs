//! Primitive integer polynomials used inside Buchberger's algorithm.
//!
//! Working over `Z` with content removal avoids a gcd per coefficient
//! operation that rational arithmetic would pay.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Monomial, Polynomial};

/// Terms sorted by descending revlex order, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub fn from_rational(p: &Polynomial) -> IntPoly {
        IntPoly {
            terms: p.primitive_part(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn degree(&self) -> u32 {
        self.lead().degree()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        let flip = self.terms[0].1.is_negative();
        if g.is_one() && !flip {
            return;
        }
        for (_, c) in self.terms.iter_mut() {
            if !g.is_one() {
                *c /= &g;
            }
            if flip {
                *c = -&*c;
            }
        }
    }

    /// `a * self[skip..] - b * u * other[other_skip..]`, merged in order.
    fn combine(
        &self,
        skip: usize,
        a: &BigInt,
        other: &IntPoly,
        other_skip: usize,
        u: &Monomial,
        b: &BigInt,
    ) -> Vec<(Monomial, BigInt)> {
        let lhs = &self.terms[skip..];
        let rhs = &other.terms[other_skip..];
        let mut out = Vec::with_capacity(lhs.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        let a_one = a.is_one();
        let mut rhs_mono = rhs.first().map(|(m, _)| m.mul(u));
        while i < lhs.len() {
            let Some(rm) = rhs_mono.as_ref() else { break };
            match lhs[i].0.cmp(rm) {
                std::cmp::Ordering::Greater => {
                    let c = if a_one { lhs[i].1.clone() } else { &lhs[i].1 * a };
                    out.push((lhs[i].0.clone(), c));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((rhs_mono.take().unwrap(), -(&rhs[j].1 * b)));
                    j += 1;
                    rhs_mono = rhs.get(j).map(|(m, _)| m.mul(u));
                }
                std::cmp::Ordering::Equal => {
                    let c = if a_one { lhs[i].1.clone() } else { &lhs[i].1 * a } - &rhs[j].1 * b;
                    if !c.is_zero() {
                        out.push((lhs[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    rhs_mono = rhs.get(j).map(|(m, _)| m.mul(u));
                }
            }
        }
        for t in &lhs[i..] {
            let c = if a_one { t.1.clone() } else { &t.1 * a };
            out.push((t.0.clone(), c));
        }
        if let Some(rm) = rhs_mono {
            out.push((rm, -(&rhs[j].1 * b)));
            for t in &rhs[j + 1..] {
                out.push((t.0.mul(u), -(&t.1 * b)));
            }
        }
        out
    }

    /// S-polynomial of two polynomials with leading monomial lcm `lcm`.
    pub fn s_poly(f: &IntPoly, g: &IntPoly, lcm: &Monomial) -> IntPoly {
        let uf = lcm.checked_div(f.lead()).unwrap();
        let ug = lcm.checked_div(g.lead()).unwrap();
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        // uf * f scaled by a, minus ug * g scaled by b; leading terms cancel
        let ff = IntPoly {
            terms: f.terms[1..].iter().map(|(m, c)| (m.mul(&uf), c * &a)).collect(),
        };
        let mut out = IntPoly {
            terms: ff.combine(0, &BigInt::one(), g, 1, &ug, &b),
        };
        out.make_primitive();
        out
    }

    /// Eliminates the term at `pos` (divisible by `g.lead()`) using `g`.
    /// Terms before `pos` are only rescaled.
    pub fn reduce_at(&mut self, pos: usize, g: &IntPoly) {
        let (m, c) = &self.terms[pos];
        let u = m.checked_div(g.lead()).unwrap();
        let gcd = c.gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = c / &gcd;
        let tail = self.combine(pos + 1, &a, g, 1, &u, &b);
        let mut head: Vec<(Monomial, BigInt)> = self.terms.drain(..pos).collect();
        if !a.is_one() {
            for (_, c) in head.iter_mut() {
                *c *= &a;
            }
        }
        head.extend(tail);
        self.terms = head;
    }

    pub fn to_rational_monic(&self) -> Polynomial {
        let nvars = self.terms.first().map_or(0, |(m, _)| m.nvars());
        let lc = BigRational::from_integer(self.lc().clone());
        Polynomial::from_sorted_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()) / &lc))
                .collect(),
        )
    }
}
