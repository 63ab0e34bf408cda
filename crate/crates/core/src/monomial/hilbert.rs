use super::ideal::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::{HilbertSeries, Monomial, UniPoly};

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    gens.iter()
        .enumerate()
        .all(|(k, a)| gens[k + 1..].iter().all(|b| a.is_coprime(b)))
}

/// Variable occurring in the most minimal generators; ties go to the
/// smallest index. `None` when no variable is shared.
fn pivot_variable(gens: &[Monomial], n: usize) -> Option<usize> {
    let mut counts = vec![0usize; n];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (best, &count) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))?;
    (count >= 2).then_some(best)
}

fn numerator_rec(ideal: &MonomialIdeal) -> UniPoly {
    let gens = ideal.gens();
    if pairwise_coprime(gens) {
        return gens.iter().fold(UniPoly::one(), |acc, g| {
            &acc * &(&UniPoly::one() - &UniPoly::monomial(g.degree() as usize, 1))
        });
    }
    let n = ideal.nvars();
    let v = pivot_variable(gens, n).expect("non-coprime generators share a variable");
    let x = Monomial::var(n, v);
    let with_pivot = numerator_rec(&ideal.with_generator(x.clone()));
    let colon = numerator_rec(&ideal.colon(&x));
    &with_pivot + &(&UniPoly::monomial(1, 1) * &colon)
}

impl MonomialIdeal {
    /// `K(t)` with `Hilb(R/I; t) = K(t) / (1 - t)^n`, by the pivot recursion
    /// `K(I) = K(I + <x>) + t K(I : x)`.
    pub fn hilbert_numerator(&self) -> UniPoly {
        numerator_rec(self)
    }

    /// Canonical Hilbert series of `R/I`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.hilbert_numerator(), self.nvars() as u32)
    }

    /// Height of the ideal (minimum size of a set of variables meeting
    /// the support of every generator); `None` for the unit ideal.
    fn height(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let supports: Vec<Vec<usize>> = self.gens().iter().map(|g| g.support().collect()).collect();
        let mut best = self.nvars();
        let mut chosen = vec![false; self.nvars()];
        cover_search(&supports, &mut chosen, 0, &mut best);
        Some(best)
    }

    /// Krull dimension of `R/I`, or `None` for the unit ideal.
    pub fn dim(&self) -> Option<usize> {
        self.height().map(|h| self.nvars() - h)
    }

    /// Krull dimension with `-1` standing for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        self.dim().map_or(-1, |d| d as i64)
    }

    /// `h(R/I; t)`: the Hilbert numerator over `(1 - t)^dim`.
    pub fn h_polynomial(&self) -> Result<UniPoly> {
        let d = self
            .dim()
            .ok_or_else(|| Error::Domain("h-polynomial of the unit ideal".into()))?;
        let k = (self.nvars() - d) as u32;
        self.hilbert_numerator()
            .div_one_minus_t_pow(k)
            .ok_or_else(|| Error::Invariant(format!("(1-t)^{k} does not divide the numerator of {self}")))
    }
}

fn cover_search(supports: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open = supports.iter().find(|s| !s.iter().any(|&v| chosen[v]));
    match open {
        None => *best = size,
        Some(s) => {
            for &v in s {
                chosen[v] = true;
                cover_search(supports, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}

/// Free-function forms of the inherent methods.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> UniPoly {
    ideal.hilbert_numerator()
}

pub fn h_polynomial(ideal: &MonomialIdeal) -> Result<UniPoly> {
    ideal.h_polynomial()
}

pub fn krull_dimension(ideal: &MonomialIdeal) -> i64 {
    ideal.krull_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::test_support::{count_standard_monomials, ideal};
    use crate::ring::RingSpec;

    #[test]
    fn numerator_matches_monomial_count() {
        let i = ideal(3, "x1*x3, x2*x3");
        let k = i.hilbert_numerator();
        assert_eq!(k, UniPoly::new(vec![1, 0, -2, 1]));
        let counts = count_standard_monomials(&i, 8);
        assert_eq!(HilbertSeries::raw(k, 3).expand(9), counts);
    }

    #[test]
    fn zero_and_unit() {
        let r = RingSpec::new(4).unwrap();
        assert_eq!(MonomialIdeal::zero(r).hilbert_numerator(), UniPoly::one());
        assert!(MonomialIdeal::unit(r).hilbert_numerator().is_zero());
        assert_eq!(MonomialIdeal::zero(r).krull_dimension(), 4);
        assert_eq!(MonomialIdeal::unit(r).krull_dimension(), -1);
        assert_eq!(ideal(4, "x1, x2, x3, x4").krull_dimension(), 0);
    }

    #[test]
    fn example_ideal_numerator_and_h() {
        let i = ideal(6, "x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6");
        assert_eq!(i.krull_dimension(), 3);
        let h = UniPoly::new(vec![1, 3, 0, -1]);
        assert_eq!(i.hilbert_numerator(), &h * &UniPoly::one_minus_t_pow(3));
        assert_eq!(i.h_polynomial().unwrap(), h);
        let counts = count_standard_monomials(&i, 8);
        assert_eq!(i.hilbert_series().expand(9), counts);
    }

    #[test]
    fn h_polynomial_small() {
        // (1 - 2t^2 + t^3)/(1 - t) = 1 + t - t^2
        assert_eq!(
            ideal(3, "x1*x3, x2*x3").h_polynomial().unwrap(),
            UniPoly::new(vec![1, 1, -1])
        );
        assert_eq!(MonomialIdeal::zero(RingSpec::new(2).unwrap()).h_polynomial().unwrap(), UniPoly::one());
    }
}
