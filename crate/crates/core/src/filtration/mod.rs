//! Unmixed layers of the dimension filtration, Björner-Wachs polynomials,
//! the sequential Cohen-Macaulay test battery, local cohomology of
//! sequentially Cohen-Macaulay quotients, and extremal invariants.

mod scm;

pub use scm::{local_cohomology_scm, scm_check, Criterion, ScmReport, Witness};

use crate::error::{Error, Result};
use crate::monomial::{dimension_filtration, FiltrationChain, FiltrationRoute, MonomialIdeal};
use crate::ring::{BWPolynomial, UniPoly};
use crate::simplicial::SimplicialComplex;

/// The dimension filtration with the h-polynomials of its layers
/// `U_i = I^<i> / I^<i-1>`, `i = 0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub chain: FiltrationChain,
    pub layer_h: Vec<UniPoly>,
}

impl LayerDecomposition {
    pub fn bw(&self) -> BWPolynomial {
        BWPolynomial::from_rows(&self.layer_h)
    }
}

fn route_for(ideal: &MonomialIdeal) -> FiltrationRoute {
    if ideal.is_strongly_stable() {
        FiltrationRoute::Borel
    } else {
        FiltrationRoute::Decomposition
    }
}

/// `h(U_i; t) = (K_{i-1} - K_i) / (1-t)^{n-i}` with `K_j` the Hilbert
/// numerator of `R/I^<j>`, `K_{-1} = K(R/I)` and `K_d = 0`.
pub fn layers(ideal: &MonomialIdeal) -> Result<LayerDecomposition> {
    let chain = dimension_filtration(ideal, route_for(ideal))?;
    let n = ideal.nvars();
    let mut prev = ideal.hilbert_numerator();
    let mut layer_h = Vec::with_capacity(chain.dim + 1);
    for (i, level) in chain.ideals.iter().enumerate() {
        let k = level.hilbert_numerator();
        let diff = &prev - &k;
        let h = diff.div_one_minus_t_pow((n - i) as u32).ok_or_else(|| {
            Error::Invariant(format!("layer {i} of {ideal} does not have dimension {i}"))
        })?;
        layer_h.push(h);
        prev = k;
    }
    Ok(LayerDecomposition { chain, layer_h })
}

/// `BW(R/I; t, w) = Σ_i h(U_i; t) w^i`; zero for the unit ideal.
pub fn bw_polynomial(ideal: &MonomialIdeal) -> Result<BWPolynomial> {
    if ideal.is_unit() {
        return Ok(BWPolynomial::zero());
    }
    Ok(layers(ideal)?.bw())
}

/// `Σ f_{i,j} w^i t^j (1-t)^{i-j}`, the h-triangle read as a BW polynomial.
pub fn bw_from_complex(complex: &SimplicialComplex) -> BWPolynomial {
    complex.h_triangle().to_bw()
}

/// `(regularity, depth)`: the largest `t`-degree and the smallest
/// `w`-degree. Meaningful for sequentially Cohen-Macaulay algebras only.
pub fn extremal_from_bw(p: &BWPolynomial) -> Result<(u32, u32)> {
    match (p.t_degree(), p.min_w_degree()) {
        (Some(reg), Some(depth)) => Ok((reg, depth)),
        _ => Err(Error::Degenerate("the zero BW polynomial has no extremal data".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::betti_eliahou_kervaire;
    use crate::ring::RingSpec;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    const GIN: &str = "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2";
    const EXAMPLE: &str = "x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6";

    #[test]
    fn example_pair() {
        let bw_gin = bw_polynomial(&ideal(6, GIN)).unwrap();
        assert_eq!(
            bw_gin,
            BWPolynomial::from_terms([(2, 1, 1), (2, 2, 1), (3, 0, 1), (3, 1, 2)])
        );
        assert_eq!(bw_gin.to_text(), "tw^2 + t^2w^2 + w^3 + 2tw^3");
        let bw = bw_polynomial(&ideal(6, EXAMPLE)).unwrap();
        assert_eq!(bw, BWPolynomial::from_terms([(3, 0, 1), (3, 1, 3), (3, 3, -1)]));
        assert_eq!(bw.specialize(), bw_gin.specialize());
        assert_eq!(bw.specialize(), ideal(6, EXAMPLE).hilbert_series());
    }

    #[test]
    fn degenerate_and_unmixed() {
        let r = RingSpec::new(3).unwrap();
        assert_eq!(bw_polynomial(&MonomialIdeal::zero(r)).unwrap(), BWPolynomial::from_terms([(3, 0, 1)]));
        assert!(bw_polynomial(&MonomialIdeal::unit(r)).unwrap().is_zero());
        // an m-primary component contributes a w^0 layer
        let bw = bw_polynomial(&ideal(2, "x1^2, x1*x2")).unwrap();
        assert_eq!(bw, BWPolynomial::from_terms([(0, 1, 1), (1, 0, 1)]));
        assert_eq!(bw.specialize(), ideal(2, "x1^2, x1*x2").hilbert_series());
    }

    #[test]
    fn complex_route() {
        let d = SimplicialComplex::new(3, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(bw_from_complex(&d), BWPolynomial::from_terms([(1, 1, 1), (2, 0, 1)]));
        assert_eq!(bw_from_complex(&d), bw_polynomial(&crate::simplicial::sr_bridge(&d)).unwrap());
        assert_eq!(
            bw_from_complex(&SimplicialComplex::simplex(4).unwrap()),
            BWPolynomial::from_terms([(4, 0, 1)])
        );
    }

    #[test]
    fn extremal_values() {
        let j = ideal(6, GIN);
        let (reg, depth) = extremal_from_bw(&bw_polynomial(&j).unwrap()).unwrap();
        assert_eq!((reg, depth), (2, 2));
        let betti = betti_eliahou_kervaire(&j).unwrap();
        assert_eq!(betti.regularity(), Some(reg));
        assert_eq!(6 - betti.projective_dimension().unwrap(), depth);
        assert_eq!(extremal_from_bw(&BWPolynomial::from_terms([(4, 0, 1)])).unwrap(), (0, 4));
        assert_eq!(
            extremal_from_bw(&BWPolynomial::from_terms([(2, 0, 1), (2, 1, 1), (2, 2, 1)])).unwrap(),
            (2, 2)
        );
        assert!(extremal_from_bw(&BWPolynomial::zero()).is_err());
    }
}
