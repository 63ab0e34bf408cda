use std::collections::BTreeMap;
use std::fmt;

use super::homology::reduced_homology_ranks;
use super::{mask_len, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::BettiTable;
use crate::ring::{Field, UniPoly};

/// Largest ground set for which Hochster's formula is evaluated over all
/// `2^n` vertex subsets.
pub const HOCHSTER_MAX_VERTICES: usize = 14;

/// Hilbert series of local cohomology modules written in the basis
/// `(t-1)^{-c}`: `Hilb(H^i_m; t) = Σ_c N_{i,c} (t-1)^{-c}`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LocalCohomologyTable {
    entries: BTreeMap<(u32, i64), i64>,
}

impl LocalCohomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: u32, c: i64, value: i64) {
        if value == 0 {
            return;
        }
        let e = self.entries.entry((i, c)).or_insert(0);
        *e += value;
        if *e == 0 {
            self.entries.remove(&(i, c));
        }
    }

    pub fn get(&self, i: u32, c: i64) -> i64 {
        self.entries.get(&(i, c)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, i64, i64)> + '_ {
        self.entries.iter().map(|(&(i, c), &v)| (i, c, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cohomological degrees with a nonzero module.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.entries.keys().map(|k| k.0).collect();
        d.dedup();
        d
    }

    /// `(t-1)^i Hilb(H^i_m; t)` as a polynomial, or `None` when it has a pole
    /// (some `c > i`).
    pub fn numerator(&self, i: u32) -> Option<UniPoly> {
        let mut taylor = Vec::new();
        for (&(k, c), &v) in self.entries.range((i, i64::MIN)..=(i, i64::MAX)) {
            debug_assert_eq!(k, i);
            let e = i as i64 - c;
            if e < 0 {
                return None;
            }
            let e = e as usize;
            if taylor.len() <= e {
                taylor.resize(e + 1, 0);
            }
            taylor[e] += v;
        }
        Some(UniPoly::from_taylor_at_one(&taylor))
    }

    /// `Hilb(H^i_m)` as text in powers of `(t-1)`.
    pub fn series_text(&self, i: u32) -> String {
        let mut parts = Vec::new();
        for (&(_, c), &v) in self.entries.range((i, i64::MIN)..=(i, i64::MAX)).rev() {
            let pow = match c {
                0 => String::new(),
                1 => "(t-1)^-1".into(),
                _ => format!("(t-1)^{}", -c),
            };
            let term = match (v, pow.is_empty()) {
                (_, true) => v.abs().to_string(),
                (1 | -1, false) => pow,
                (_, false) => format!("{}*{pow}", v.abs()),
            };
            if parts.is_empty() {
                parts.push(if v < 0 { format!("-{term}") } else { term });
            } else {
                parts.push(format!("{} {term}", if v < 0 { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for LocalCohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl fmt::Display for LocalCohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.degrees() {
            writeln!(f, "H^{i}: {}", self.series_text(i))?;
        }
        Ok(())
    }
}

/// `β_{i,j}(k[Δ]) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W)`.
pub fn graded_betti_hochster(complex: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    let n = complex.n();
    if n > HOCHSTER_MAX_VERTICES {
        return Err(Error::Size(format!(
            "Hochster's formula enumerates 2^{n} subsets; limit is n <= {HOCHSTER_MAX_VERTICES}"
        )));
    }
    let mut table = BettiTable::new();
    for w in 0u64..1 << n {
        let j = mask_len(w) as i64;
        let ranks = reduced_homology_ranks(&complex.induced_mask(w), field);
        for (k, &r) in ranks.iter().enumerate() {
            let i = j - k as i64;
            if r > 0 && i >= 0 {
                table.add(i as u32, j as u32, r);
            }
        }
    }
    Ok(table)
}

/// `N_{i,c} = Σ_{F ∈ Δ, |F| = c} dim H̃_{i-c-1}(link F)`.
pub fn local_cohomology_hochster(complex: &SimplicialComplex, field: Field) -> LocalCohomologyTable {
    let mut table = LocalCohomologyTable::new();
    for face in complex.face_masks() {
        let c = mask_len(face) as i64;
        let ranks = reduced_homology_ranks(&complex.link_mask(face), field);
        for (k, &r) in ranks.iter().enumerate() {
            // H̃_{k-1} contributes to i = k + c
            table.add((k as i64 + c) as u32, c, r as i64);
        }
    }
    table
}

/// Reisner's criterion.
pub(crate) fn is_cohen_macaulay(complex: &SimplicialComplex, field: Field) -> bool {
    complex.face_masks().into_iter().all(|face| {
        let ranks = reduced_homology_ranks(&complex.link_mask(face), field);
        ranks[..ranks.len() - 1].iter().all(|&r| r == 0)
    })
}

/// Sequential Cohen-Macaulayness: every pure skeleton is Cohen-Macaulay.
pub fn scm_oracle(complex: &SimplicialComplex, field: Field) -> bool {
    (0..=complex.dim())
        .all(|i| is_cohen_macaulay(&complex.pure_skeleton(i as usize), field))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrwRow {
    pub i: u32,
    /// `Σ_c β_{i-c+1, n-c}(k[Δ*]) (t-1)^{i-c}`
    pub lhs: UniPoly,
    /// `Σ_l h_{i,l}(Δ) t^l`
    pub rhs: UniPoly,
}

impl HrwRow {
    pub fn residual(&self) -> UniPoly {
        &self.lhs - &self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrwReport {
    /// Whether the complex is sequentially Cohen-Macaulay; the identity is
    /// only guaranteed in that case.
    pub scm: bool,
    pub holds: bool,
    pub rows: Vec<HrwRow>,
}

/// Compares the Betti numbers of the Alexander dual with the h-triangle,
/// row by row. The dual of the full simplex is void; its face ring is the
/// zero ring, whose presentation `R -> R` gives `β_{1,0} = 1`.
pub fn hrw_check(complex: &SimplicialComplex, field: Field) -> Result<HrwReport> {
    let n = complex.n() as i64;
    let dual_betti = if complex.is_simplex() {
        let mut t = BettiTable::new();
        t.add(1, 0, 1);
        t
    } else {
        graded_betti_hochster(&complex.alexander_dual()?, field)?
    };
    let h = complex.h_triangle();
    let d = complex.krull_dim() as u32;
    let rows: Vec<HrwRow> = (0..=d)
        .map(|i| {
            let mut taylor = vec![0i64; i as usize + 1];
            for c in 0..=i as i64 {
                let (bi, bj) = (i as i64 - c + 1, n - c);
                if bj >= 0 {
                    taylor[(i as i64 - c) as usize] += dual_betti.get(bi as u32, bj as u32) as i64;
                }
            }
            HrwRow {
                i,
                lhs: UniPoly::from_taylor_at_one(&taylor),
                rhs: h.row(i),
            }
        })
        .collect();
    Ok(HrwReport {
        scm: scm_oracle(complex, field),
        holds: rows.iter().all(|r| r.lhs == r.rhs),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;
    use crate::monomial::{betti_eliahou_kervaire, MonomialIdeal};

    const Q: Field = Field::Rational;

    #[test]
    fn betti_examples() {
        let t = graded_betti_hochster(&example(), Q).unwrap();
        assert_eq!(t.totals(), vec![1, 7, 11, 6, 1]);
        assert_eq!(t.row(1), vec![0, 6, 8, 3, 0]);
        assert_eq!(t.row(2), vec![0, 1, 3, 3, 1]);
        let gin = MonomialIdeal::parse("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2", Some(6)).unwrap();
        assert_eq!(t, betti_eliahou_kervaire(&gin).unwrap());

        // <x1*x2>: the complex {{1},{2}}
        let t = graded_betti_hochster(&cx(2, &[&[1], &[2]]), Q).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.totals(), vec![1, 1]);
    }

    #[test]
    fn betti_size_guard() {
        let big = SimplicialComplex::simplex(15).unwrap();
        assert!(matches!(graded_betti_hochster(&big, Q), Err(Error::Size(_))));
    }

    #[test]
    fn local_cohomology_examples() {
        let t = local_cohomology_hochster(&cx(2, &[&[1, 2]]), Q);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(2, 2, 1)]);

        let t = local_cohomology_hochster(&boundary_triangle(), Q);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(2, 0, 1), (2, 1, 3), (2, 2, 3)]);
        assert_eq!(t.numerator(2).unwrap(), UniPoly::new(vec![1, 1, 1]));
        assert_eq!(t.series_text(2), "3*(t-1)^-2 + 3*(t-1)^-1 + 1");

        let t = local_cohomology_hochster(&cx(2, &[&[1], &[2]]), Q);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(1, 0, 1), (1, 1, 2)]);
    }

    #[test]
    fn oracle_examples() {
        assert!(scm_oracle(&cx(3, &[&[1, 2], &[3]]), Q));
        assert!(!scm_oracle(&example(), Q));
        assert!(scm_oracle(&SimplicialComplex::simplex(4).unwrap(), Q));
        assert!(scm_oracle(&SimplicialComplex::empty_face(2).unwrap(), Q));
        // two triangles sharing a vertex: pure, not CM
        assert!(!scm_oracle(&cx(5, &[&[1, 2, 3], &[3, 4, 5]]), Q));
    }

    #[test]
    fn hrw_examples() {
        let r = hrw_check(&boundary_triangle(), Q).unwrap();
        assert!(r.scm && r.holds);
        assert_eq!(r.rows[2].lhs, UniPoly::new(vec![1, 1, 1]));
        assert!(hrw_check(&cx(3, &[&[1, 2], &[3]]), Q).unwrap().holds);
        let r = hrw_check(&SimplicialComplex::simplex(3).unwrap(), Q).unwrap();
        assert!(r.holds);
    }
}
