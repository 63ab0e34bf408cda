#![allow(dead_code)]

use bwkit::monomial::MonomialIdeal;
use bwkit::ring::{Monomial, RingSpec};
use bwkit::simplicial::{random_complex, SimplicialComplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn arb_monomial(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    (1..=max_deg)
        .prop_flat_map(move |d| prop::collection::vec(0..n, d as usize))
        .prop_map(move |vars| {
            let mut e = vec![0u32; n];
            for v in vars {
                e[v] += 1;
            }
            Monomial::new(e)
        })
}

/// Proper nonzero monomial ideals in at most `max_n` variables.
pub fn arb_ideal(max_n: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(arb_monomial(n, max_deg), 1..=4)
            .prop_map(move |g| MonomialIdeal::new(RingSpec::new(n).unwrap(), g).unwrap())
    })
}

pub fn arb_stable(max_n: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(arb_monomial(n, max_deg), 1..=3)
            .prop_map(move |g| MonomialIdeal::borel_closure(RingSpec::new(n).unwrap(), g))
    })
}

pub fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_complex(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Number of monomials of each degree `0..=max_deg` outside the ideal.
pub fn standard_monomial_counts(i: &MonomialIdeal, max_deg: u32) -> Vec<i64> {
    (0..=max_deg)
        .map(|d| {
            bwkit::monomial::monomials_of_degree(i.nvars(), d)
                .iter()
                .filter(|m| !i.gens().iter().any(|g| g.divides(m)))
                .count() as i64
        })
        .collect()
}
