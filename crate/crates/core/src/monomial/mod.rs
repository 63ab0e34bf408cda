//! Monomial ideals: generators, colons and saturations, primary
//! decomposition, Hilbert numerators, dimension filtrations, and
//! Eliahou-Kervaire Betti numbers of strongly stable ideals.

mod betti;
mod chain;
mod decomposition;
mod hilbert;
mod ideal;

pub use betti::{betti_eliahou_kervaire, BettiTable};
pub use chain::{borel_depth, dimension_filtration, FiltrationChain, FiltrationRoute};
pub use decomposition::{primary_decomposition, PrimaryComponent, PrimaryDecomposition};
pub use hilbert::{h_polynomial, hilbert_numerator, krull_dimension};
pub use ideal::{minimal_generators, ColonMode, MonomialIdeal};

use crate::ring::Monomial;

/// All monomials of total degree `deg` in `n` variables.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == n {
            cur[k] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e;
            rec(n, k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, deg, &mut vec![0; n], &mut out);
    out
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    pub fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text, Some(n)).unwrap()
    }

    /// Brute-force Hilbert function of `R/I` in degrees `0..=max_deg`.
    pub fn count_standard_monomials(i: &MonomialIdeal, max_deg: u32) -> Vec<i64> {
        (0..=max_deg)
            .map(|d| {
                monomials_of_degree(i.nvars(), d)
                    .iter()
                    .filter(|m| !i.contains(m))
                    .count() as i64
            })
            .collect()
    }
}
