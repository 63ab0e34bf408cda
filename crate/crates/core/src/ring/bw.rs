use std::collections::BTreeMap;
use std::fmt;

use super::series::HilbertSeries;
use super::unipoly::UniPoly;

/// Bivariate integer polynomial `sum c_{ij} t^j w^i`, keyed by `(i, j)`.
///
/// Row `i` (the coefficient of `w^i`) is the h-polynomial of the `i`-th
/// unmixed layer of the algebra it describes.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BWPolynomial {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl BWPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `(i, j, c)` triples, summing duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, i64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, j, c) in terms {
            *coeffs.entry((i, j)).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        BWPolynomial { coeffs }
    }

    /// Row `i` of the result is `rows[i]`.
    pub fn from_rows(rows: &[UniPoly]) -> Self {
        Self::from_terms(rows.iter().enumerate().flat_map(|(i, h)| {
            h.coeffs()
                .iter()
                .enumerate()
                .map(move |(j, &c)| (i as u32, j as u32, c))
        }))
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.coeffs.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `w^i` as a polynomial in `t`.
    pub fn row(&self, i: u32) -> UniPoly {
        let len = self
            .coeffs
            .range((i, 0)..=(i, u32::MAX))
            .map(|(&(_, j), _)| j as usize + 1)
            .max()
            .unwrap_or(0);
        let mut c = vec![0; len];
        for (&(_, j), &v) in self.coeffs.range((i, 0)..=(i, u32::MAX)) {
            c[j as usize] = v;
        }
        UniPoly::new(c)
    }

    pub fn w_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, _)| i).max()
    }

    pub fn min_w_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, _)| i).min()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(_, j)| j).max()
    }

    /// Substitutes `w = 1/(1 - t)`, giving the Hilbert series of the algebra.
    pub fn specialize(&self) -> HilbertSeries {
        let Some(top) = self.w_degree() else {
            return HilbertSeries::zero();
        };
        let mut num = UniPoly::zero();
        for i in 0..=top {
            let row = self.row(i);
            if !row.is_zero() {
                num = &num + &(&row * &UniPoly::one_minus_t_pow(top - i));
            }
        }
        HilbertSeries::new(num, top)
    }

    /// Text form in the `t`/`w` notation, e.g. `w^3 + 3tw^3 - t^3w^3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (&(i, j), &c) in &self.coeffs {
            let neg = c < 0;
            let a = c.unsigned_abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut body = String::new();
            match j {
                0 => {}
                1 => body.push('t'),
                _ => body.push_str(&format!("t^{j}")),
            }
            match i {
                0 => {}
                1 => body.push('w'),
                _ => body.push_str(&format!("w^{i}")),
            }
            if a != 1 || body.is_empty() {
                s.push_str(&a.to_string());
            }
            s.push_str(&body);
        }
        s
    }
}

/// Free-function form of [`BWPolynomial::specialize`].
pub fn bw_specialize(p: &BWPolynomial) -> HilbertSeries {
    p.specialize()
}

impl fmt::Display for BWPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BWPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BW({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialize_polynomial_ring() {
        let p = BWPolynomial::from_terms([(4, 0, 1)]);
        let s = bw_specialize(&p);
        assert_eq!(s, HilbertSeries::new(UniPoly::one(), 4));
        assert_eq!(s.denom_power(), 4);
    }

    #[test]
    fn specialize_mixed_layers() {
        // t w + w^2 -> (1 + t - t^2)/(1 - t)^2
        let p = BWPolynomial::from_terms([(1, 1, 1), (2, 0, 1)]);
        let s = p.specialize();
        assert_eq!(s.numerator(), &UniPoly::new(vec![1, 1, -1]));
        assert_eq!(s.denom_power(), 2);
        // standard monomials of k[x1,x2,x3]/(x1x3, x2x3): 1, 3, 4, 5, 6, ...
        assert_eq!(s.expand(9), vec![1, 3, 4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn specialize_borel_example() {
        let p = BWPolynomial::from_terms([(2, 1, 1), (2, 2, 1), (3, 0, 1), (3, 1, 2)]);
        let s = p.specialize();
        assert_eq!(s, HilbertSeries::new(UniPoly::new(vec![1, 3, 0, -1]), 3));
        assert_eq!(s.numerator(), &UniPoly::new(vec![1, 3, 0, -1]));
    }

    #[test]
    fn text_and_rows() {
        let p = BWPolynomial::from_terms([(3, 0, 1), (3, 1, 3), (3, 3, -1)]);
        assert_eq!(p.to_text(), "w^3 + 3tw^3 - t^3w^3");
        assert_eq!(p.row(3), UniPoly::new(vec![1, 3, 0, -1]));
        assert!(p.row(2).is_zero());
        let q = BWPolynomial::from_terms([(2, 1, 1), (2, 2, 1), (3, 0, 1), (3, 1, 2)]);
        assert_eq!(q.to_text(), "tw^2 + t^2w^2 + w^3 + 2tw^3");
        assert_eq!(BWPolynomial::from_terms([(0, 0, 1)]).to_text(), "1");
    }
}
