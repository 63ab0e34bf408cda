//! Simplicial complexes on `[n]`: face enumeration, f- and h-triangles,
//! the Stanley-Reisner correspondence, Alexander duality, reduced homology,
//! Hochster's formulas and symmetric algebraic shifting.

mod corpus;
mod hochster;
mod homology;
mod shift;
mod triangle;

pub use corpus::{all_complexes_up_to_isomorphism, random_complex, random_corpus};
pub use hochster::{
    graded_betti_hochster, hrw_check, local_cohomology_hochster, scm_oracle, HrwReport, HrwRow, LocalCohomologyTable,
};
pub use homology::reduced_homology_ranks;
pub use shift::{stretch, symmetric_shift};
pub use triangle::{FTriangle, HTriangle, Triangle};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{primary_decomposition, MonomialIdeal};
use crate::ring::{Monomial, RingSpec};

/// Largest ground set handled; faces are stored as `u64` bit masks.
pub const MAX_VERTICES: usize = 63;

/// A nonempty simplicial complex on `[n]`, stored by its facets as bit masks
/// (bit `v - 1` for vertex `v`). The complex `{∅}` has the single facet `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

pub(crate) fn mask_len(m: u64) -> usize {
    m.count_ones() as usize
}

pub(crate) fn mask_vertices(m: u64) -> Vec<usize> {
    (0..64).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Facets first by size (descending), then lexicographically by vertex list.
fn sort_facets(facets: &mut [u64]) {
    facets.sort_by(|a, b| {
        mask_len(*b)
            .cmp(&mask_len(*a))
            .then_with(|| mask_vertices(*a).cmp(&mask_vertices(*b)))
    });
}

/// Inclusion-maximal masks, deduplicated.
fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|m| std::cmp::Reverse(mask_len(*m)));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists (1-based). Non-maximal sets
    /// are discarded. An empty list describes the void complex and is
    /// rejected; `[[]]` describes `{∅}`.
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Size(format!("ground set size {n} outside 1..={MAX_VERTICES}")));
        }
        if facets.is_empty() {
            return Err(Error::Degenerate("the void complex has no faces".into()));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for &v in f {
                if v == 0 || v > n {
                    return Err(Error::Domain(format!("vertex {v} outside [1, {n}]")));
                }
                m |= 1 << (v - 1);
            }
            masks.push(m);
        }
        Ok(Self::from_masks(n, masks))
    }

    pub(crate) fn from_masks(n: usize, masks: Vec<u64>) -> Self {
        debug_assert!(!masks.is_empty());
        let mut facets = maximal_sets(masks);
        sort_facets(&mut facets);
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, &[(1..=n).collect()])
    }

    /// The complex `{∅}` on `[n]`.
    pub fn empty_face(n: usize) -> Result<Self> {
        Self::new(n, &[vec![]])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_vertices(m)).collect()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|&m| mask_len(m) as i64).max().unwrap_or(0) - 1
    }

    /// Krull dimension of the face ring, `dim Δ + 1`.
    pub fn krull_dim(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_simplex(&self) -> bool {
        self.facets == [self.full_mask()]
    }

    pub fn contains_mask(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        to_mask(self.n, face).is_ok_and(|m| self.contains_mask(m))
    }

    /// Every face, sorted by size and then by mask.
    pub fn face_masks(&self) -> Vec<u64> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                all.insert((mask_len(s), s));
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        all.into_iter().map(|(_, m)| m).collect()
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_masks().into_iter().map(mask_vertices).collect()
    }

    pub(crate) fn face_degree_mask(&self, face: u64) -> Option<usize> {
        self.facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| mask_len(f))
            .max()
    }

    /// Largest size of a face containing `face`.
    pub fn face_degree(&self, face: &[usize]) -> Result<usize> {
        let m = to_mask(self.n, face)?;
        self.face_degree_mask(m)
            .ok_or_else(|| Error::Domain(format!("{face:?} is not a face")))
    }

    /// `link(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` for a face `F`.
    pub(crate) fn link_mask(&self, face: u64) -> SimplicialComplex {
        let facets: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        Self::from_masks(self.n, facets)
    }

    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let m = to_mask(self.n, face)?;
        if !self.contains_mask(m) {
            return Err(Error::Domain(format!("{face:?} is not a face")));
        }
        Ok(self.link_mask(m))
    }

    /// Faces contained in `w`.
    pub(crate) fn induced_mask(&self, w: u64) -> SimplicialComplex {
        Self::from_masks(self.n, self.facets.iter().map(|&f| f & w).collect())
    }

    /// Subcomplex generated by the facets of dimension at least `i`; `{∅}`
    /// when there are none.
    pub fn facet_subcomplex(&self, i: usize) -> SimplicialComplex {
        let kept: Vec<u64> = self.facets.iter().copied().filter(|&f| mask_len(f) > i).collect();
        if kept.is_empty() {
            return Self::from_masks(self.n, vec![0]);
        }
        Self::from_masks(self.n, kept)
    }

    /// Subcomplex generated by all faces of dimension `i` (the pure
    /// `i`-skeleton); `{∅}` when there are none.
    pub fn pure_skeleton(&self, i: usize) -> SimplicialComplex {
        let faces: Vec<u64> = self
            .face_masks()
            .into_iter()
            .filter(|&m| mask_len(m) == i + 1)
            .collect();
        if faces.is_empty() {
            return Self::from_masks(self.n, vec![0]);
        }
        Self::from_masks(self.n, faces)
    }

    /// Minimal non-faces as masks, sorted.
    pub(crate) fn minimal_nonfaces(&self) -> Vec<u64> {
        let mut out = BTreeSet::new();
        for face in self.face_masks() {
            for v in 0..self.n {
                let s = face | 1 << v;
                if s == face || self.contains_mask(s) {
                    continue;
                }
                if (0..self.n).all(|u| s >> u & 1 == 0 || self.contains_mask(s & !(1 << u))) {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `Δ* = {F ⊆ [n] : [n] \ F ∉ Δ}`.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let nonfaces = self.minimal_nonfaces();
        if nonfaces.is_empty() {
            return Err(Error::Degenerate("the dual of the full simplex is void".into()));
        }
        let full = self.full_mask();
        Ok(Self::from_masks(self.n, nonfaces.into_iter().map(|s| full & !s).collect()))
    }
}

fn to_mask(n: usize, face: &[usize]) -> Result<u64> {
    let mut m = 0;
    for &v in face {
        if v == 0 || v > n {
            return Err(Error::Domain(format!("vertex {v} outside [1, {n}]")));
        }
        m |= 1 << (v - 1);
    }
    Ok(m)
}

fn mask_monomial(n: usize, m: u64) -> Monomial {
    Monomial::new((0..n).map(|b| (m >> b & 1) as u32).collect())
}

/// Stanley-Reisner ideal: generated by the minimal non-faces.
pub fn sr_bridge(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n;
    let ring = RingSpec::new(n).expect("n >= 1");
    MonomialIdeal::new(
        ring,
        complex.minimal_nonfaces().into_iter().map(|m| mask_monomial(n, m)).collect(),
    )
    .expect("same ring")
}

/// The complex whose Stanley-Reisner ideal is the squarefree `ideal`.
pub fn complex_of(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::Domain(format!("{ideal} is not squarefree")));
    }
    if ideal.is_unit() {
        return Err(Error::Degenerate("the unit ideal describes the void complex".into()));
    }
    let n = ideal.nvars();
    if n > MAX_VERTICES {
        return Err(Error::Size(format!("{n} variables")));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if ideal.is_zero() {
        return Ok(SimplicialComplex::from_masks(n, vec![full]));
    }
    // minimal primes <x_v : v ∉ F> correspond to facets F
    let dec = primary_decomposition(ideal)?;
    let facets = dec
        .components
        .iter()
        .map(|c| full & !c.support.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    Ok(SimplicialComplex::from_masks(n, facets))
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .facets()
            .iter()
            .map(|face| {
                let vs: Vec<String> = face.iter().map(usize::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {self})", self.n)
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    #[test]
    fn construction() {
        assert!(matches!(SimplicialComplex::new(3, &[]), Err(Error::Degenerate(_))));
        assert!(SimplicialComplex::new(3, &[vec![4]]).is_err());
        let d = cx(3, &[&[1, 2], &[1], &[3]]);
        assert_eq!(d.facets(), vec![vec![1, 2], vec![3]]);
        assert_eq!(d.dim(), 1);
        assert_eq!(SimplicialComplex::empty_face(2).unwrap().dim(), -1);
        assert_eq!(d.faces().len(), 5);
    }

    #[test]
    fn face_degrees() {
        let d = cx(3, &[&[1, 2], &[3]]);
        assert_eq!(d.face_degree(&[3]).unwrap(), 1);
        assert_eq!(d.face_degree(&[]).unwrap(), 2);
        assert!(d.face_degree(&[1, 3]).is_err());
        assert_eq!(example().face_degree(&[1]).unwrap(), 3);
    }

    #[test]
    fn stanley_reisner_bridge() {
        let d = cx(3, &[&[1, 2], &[3]]);
        let i = sr_bridge(&d);
        assert_eq!(i, MonomialIdeal::parse("x1*x3, x2*x3", Some(3)).unwrap());
        assert_eq!(complex_of(&i).unwrap(), d);

        let i = MonomialIdeal::parse("x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6", Some(6)).unwrap();
        assert_eq!(complex_of(&i).unwrap(), example());
        assert_eq!(sr_bridge(&example()), i);

        assert!(sr_bridge(&SimplicialComplex::simplex(4).unwrap()).is_zero());
        assert!(complex_of(&MonomialIdeal::parse("x1^2", Some(2)).unwrap()).is_err());
        // an absent vertex is a non-face
        assert_eq!(
            sr_bridge(&cx(3, &[&[1, 2]])),
            MonomialIdeal::parse("x3", Some(3)).unwrap()
        );
    }

    #[test]
    fn facet_subcomplexes() {
        let d = cx(3, &[&[1, 2], &[3]]);
        assert_eq!(d.facet_subcomplex(1), cx(3, &[&[1, 2]]));
        assert_eq!(d.facet_subcomplex(0), d);
        assert_eq!(d.facet_subcomplex(2), SimplicialComplex::empty_face(3).unwrap());
        let chain = crate::monomial::dimension_filtration(&sr_bridge(&d), crate::monomial::FiltrationRoute::Decomposition)
            .unwrap();
        assert_eq!(sr_bridge(&d.facet_subcomplex(1)), chain.ideals[1]);
    }

    #[test]
    fn alexander_duality() {
        let d = cx(3, &[&[1, 2], &[3]]);
        let dual = d.alexander_dual().unwrap();
        assert_eq!(dual, cx(3, &[&[1], &[2]]));
        assert_eq!(dual.alexander_dual().unwrap(), d);
        assert_eq!(
            boundary_triangle().alexander_dual().unwrap(),
            SimplicialComplex::empty_face(3).unwrap()
        );
        assert!(SimplicialComplex::simplex(3).unwrap().alexander_dual().is_err());
    }

    #[test]
    fn pure_skeleta() {
        let d = cx(3, &[&[1, 2], &[3]]);
        assert_eq!(d.pure_skeleton(0), cx(3, &[&[1], &[2], &[3]]));
        assert_eq!(d.pure_skeleton(1), cx(3, &[&[1, 2]]));
    }
}
