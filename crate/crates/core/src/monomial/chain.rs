use super::decomposition::primary_decomposition;
use super::ideal::MonomialIdeal;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationRoute {
    /// Intersect the primary components of dimension greater than `i`.
    Decomposition,
    /// Saturate successively by `x_n, x_{n-1}, ...`; strongly stable input only.
    Borel,
}

/// The dimension filtration `I^<0> ⊆ ... ⊆ I^<d> = <1>` of a proper ideal.
///
/// `I^<i>` is the intersection of the primary components of dimension
/// greater than `i`, so `I^<0>` drops only the component primary to the
/// maximal ideal and equals `I` whenever `depth R/I > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationChain {
    pub base: MonomialIdeal,
    pub dim: usize,
    pub ideals: Vec<MonomialIdeal>,
}

impl FiltrationChain {
    /// `I^<i>` for `-1 <= i <= d`, where `I^<-1>` is the ideal itself.
    pub fn level(&self, i: i64) -> &MonomialIdeal {
        if i < 0 {
            &self.base
        } else {
            &self.ideals[i as usize]
        }
    }
}

pub fn dimension_filtration(ideal: &MonomialIdeal, route: FiltrationRoute) -> Result<FiltrationChain> {
    let d = ideal
        .dim()
        .ok_or_else(|| Error::Degenerate("the unit ideal has no dimension filtration".into()))?;
    let ring = ideal.ring();
    let n = ideal.nvars();
    let unit = MonomialIdeal::unit(ring);
    let ideals = match route {
        _ if ideal.is_zero() => {
            let mut v = vec![ideal.clone(); d];
            v.push(unit);
            v
        }
        FiltrationRoute::Decomposition => {
            let dec = primary_decomposition(ideal)?;
            (0..=d)
                .map(|i| {
                    dec.components
                        .iter()
                        .filter(|c| c.dim() > i)
                        .map(|c| c.component.clone())
                        .reduce(|a, b| a.intersect(&b))
                        .unwrap_or_else(|| unit.clone())
                })
                .collect()
        }
        FiltrationRoute::Borel => {
            if !ideal.is_strongly_stable() {
                return Err(Error::Precondition(format!(
                    "Borel filtration route needs a strongly stable ideal, got {ideal}"
                )));
            }
            // I^<i> = (I^<i-1> : x_{n-i}^∞), starting from I^<-1> = I
            let mut out = Vec::with_capacity(d + 1);
            let mut cur = ideal.clone();
            for i in 0..=d {
                cur = cur.saturate_var(n - 1 - i);
                out.push(cur.clone());
            }
            if !out[d].is_unit() {
                return Err(Error::Invariant(format!(
                    "saturation chain of {ideal} does not reach the unit ideal"
                )));
            }
            out
        }
    };
    Ok(FiltrationChain {
        base: ideal.clone(),
        dim: d,
        ideals,
    })
}

/// Depth of `R/J` for strongly stable proper `J`: the least `i` with
/// `J ⊊ J^<i>`.
pub fn borel_depth(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::Precondition("borel_depth needs a proper ideal".into()));
    }
    let chain = dimension_filtration(ideal, FiltrationRoute::Borel)?;
    Ok(chain
        .ideals
        .iter()
        .position(|j| j != ideal)
        .expect("the top of the chain is the unit ideal"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::test_support::ideal;
    use crate::ring::RingSpec;

    const GIN: &str = "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2";

    #[test]
    fn borel_example_both_routes() {
        let j = ideal(6, GIN);
        for route in [FiltrationRoute::Decomposition, FiltrationRoute::Borel] {
            let c = dimension_filtration(&j, route).unwrap();
            assert_eq!(c.dim, 3);
            assert_eq!(c.ideals[0], j);
            assert_eq!(c.ideals[1], j);
            assert_eq!(c.ideals[2], ideal(6, "x1, x2^2, x2*x3, x3^2"));
            assert!(c.ideals[3].is_unit());
        }
    }

    #[test]
    fn squarefree_example() {
        let c = dimension_filtration(&ideal(3, "x1*x3, x2*x3"), FiltrationRoute::Decomposition).unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(c.ideals[0], ideal(3, "x1*x3, x2*x3"));
        assert_eq!(c.ideals[1], ideal(3, "x3"));
        assert!(c.ideals[2].is_unit());
    }

    #[test]
    fn zero_ideal_is_unmixed() {
        let r = RingSpec::new(3).unwrap();
        let c = dimension_filtration(&MonomialIdeal::zero(r), FiltrationRoute::Decomposition).unwrap();
        assert_eq!(c.ideals.len(), 4);
        assert!(c.ideals[..3].iter().all(MonomialIdeal::is_zero));
        assert!(c.ideals[3].is_unit());
    }

    #[test]
    fn maximal_ideal_component_dropped_at_level_zero() {
        let j = ideal(2, "x1^2, x1*x2");
        for route in [FiltrationRoute::Decomposition, FiltrationRoute::Borel] {
            let c = dimension_filtration(&j, route).unwrap();
            assert_eq!(c.ideals[0], ideal(2, "x1"));
            assert!(c.ideals[1].is_unit());
        }
        assert_eq!(borel_depth(&j).unwrap(), 0);
    }

    #[test]
    fn borel_route_rejects_unstable_input() {
        assert!(matches!(
            dimension_filtration(&ideal(2, "x2"), FiltrationRoute::Borel),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn depths() {
        assert_eq!(borel_depth(&ideal(6, GIN)).unwrap(), 2);
        assert_eq!(borel_depth(&ideal(3, "x1, x2, x3")).unwrap(), 0);
        assert_eq!(borel_depth(&ideal(2, "x1")).unwrap(), 1);
        assert!(borel_depth(&ideal(2, "x2")).is_err());
    }
}
