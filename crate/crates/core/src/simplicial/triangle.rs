use std::collections::BTreeMap;
use std::fmt;

use super::{mask_len, SimplicialComplex};
use crate::ring::{BWPolynomial, UniPoly};

/// Integer array indexed by `(i, j)` with `0 <= j <= i`; zero entries are
/// not stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Triangle {
    entries: BTreeMap<(u32, u32), i64>,
}

/// `f_{i,j}`: faces of cardinality `j` and degree `i`.
pub type FTriangle = Triangle;
/// `h_{i,j}`, the coefficients of `Σ f_{i,j} w^i t^j (1-t)^{i-j}`.
pub type HTriangle = Triangle;

impl Triangle {
    pub fn get(&self, i: u32, j: u32) -> i64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub(crate) fn add(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.entries.remove(&(i, j));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Row `i` as a polynomial in `t`.
    pub fn row(&self, i: u32) -> UniPoly {
        let top = self.entries.keys().filter(|k| k.0 == i).map(|k| k.1).max();
        match top {
            None => UniPoly::zero(),
            Some(top) => UniPoly::new((0..=top).map(|j| self.get(i, j)).collect()),
        }
    }

    pub fn max_row(&self) -> Option<u32> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Reads the triangle as `Σ c_{ij} w^i t^j`.
    pub fn to_bw(&self) -> BWPolynomial {
        BWPolynomial::from_terms(self.entries())
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl fmt::Display for Triangle {
    /// One line per nonzero row: `i: c_{i,0} c_{i,1} ... c_{i,i}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(top) = self.max_row() else {
            return Ok(());
        };
        for i in 0..=top {
            let cells: Vec<String> = (0..=i).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{i}: {}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl SimplicialComplex {
    pub fn f_triangle(&self) -> FTriangle {
        let mut t = Triangle::default();
        for face in self.face_masks() {
            let deg = self.face_degree_mask(face).expect("face") as u32;
            t.add(deg, mask_len(face) as u32, 1);
        }
        t
    }

    pub fn h_triangle(&self) -> HTriangle {
        let f = self.f_triangle();
        let h = h_from_f_generating(&f);
        assert_eq!(h, h_from_f_alternating(&f), "h-triangle formulas disagree on {self}");
        h
    }
}

/// Expands `Σ f_{i,j} w^i t^j (1-t)^{i-j}`.
pub(crate) fn h_from_f_generating(f: &FTriangle) -> HTriangle {
    let mut h = Triangle::default();
    for (i, j, c) in f.entries() {
        let poly = &UniPoly::monomial(j as usize, c) * &UniPoly::one_minus_t_pow(i - j);
        for (l, &a) in poly.coeffs().iter().enumerate() {
            h.add(i, l as u32, a);
        }
    }
    h
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_{i,j} = Σ_k (-1)^{j-k} C(i-k, j-k) f_{i,k}`.
pub(crate) fn h_from_f_alternating(f: &FTriangle) -> HTriangle {
    let mut h = Triangle::default();
    let Some(top) = f.max_row() else {
        return h;
    };
    for i in 0..=top {
        for j in 0..=i {
            let s: i64 = (0..=j)
                .map(|k| {
                    let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((i - k) as i64, (j - k) as i64) * f.get(i, k)
                })
                .sum();
            h.add(i, j, s);
        }
    }
    h
}
