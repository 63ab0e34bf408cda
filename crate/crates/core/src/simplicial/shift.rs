use super::{complex_of, SimplicialComplex};
use crate::error::{Error, Result};
use crate::groebner::{gin_monomial, GinOptions};
use crate::monomial::MonomialIdeal;
use crate::ring::Monomial;

/// `x_{i1} x_{i2} ... x_{ik} -> x_{i1} x_{i2+1} ... x_{ik+k-1}` with
/// `i1 <= ... <= ik`. `None` if an index leaves `[n]`.
pub fn stretch(m: &Monomial) -> Option<Monomial> {
    let n = m.nvars();
    let mut exps = vec![0u32; n];
    let mut k = 0;
    for (v, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            let target = v + k;
            if target >= n {
                return None;
            }
            exps[target] = 1;
            k += 1;
        }
    }
    Some(Monomial::new(exps))
}

fn is_squarefree_stable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    ideal.gens().iter().all(|m| {
        m.support().all(|j| {
            (0..j).all(|i| {
                if m.exp(i) > 0 {
                    return true;
                }
                let mut e = m.exps().to_vec();
                e[j] -= 1;
                e[i] += 1;
                ideal.contains(&Monomial::new(e))
            })
        }) && m.nvars() == n
    })
}

/// Symmetric algebraic shifting: stretch the generic initial ideal of the
/// Stanley-Reisner ideal and read off the complex.
pub fn symmetric_shift(complex: &SimplicialComplex, opts: &GinOptions) -> Result<SimplicialComplex> {
    let ideal = super::sr_bridge(complex);
    let gin = gin_monomial(&ideal, opts)?.ideal;
    let stretched = gin
        .gens()
        .iter()
        .map(|m| {
            stretch(m).ok_or_else(|| Error::Invariant(format!("stretching {m} leaves [1, {}]", m.nvars())))
        })
        .collect::<Result<Vec<_>>>()?;
    let shifted = MonomialIdeal::new(gin.ring(), stretched)?;
    if !is_squarefree_stable(&shifted) {
        return Err(Error::Invariant(format!("stretched ideal {shifted} is not squarefree stable")));
    }
    complex_of(&shifted)
}
