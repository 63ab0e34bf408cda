//! Test corpora of simplicial complexes.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{sort_facets, SimplicialComplex};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn permute_mask(m: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|(b, _)| m >> b & 1 == 1)
        .fold(0, |acc, (_, &t)| acc | 1 << t)
}

/// Lexicographically least sorted facet list over all relabellings.
fn canonical(facets: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<u64> = facets.iter().map(|&m| permute_mask(m, p)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .expect("at least the identity")
}

/// Every antichain of subsets of `[n]` (facet families), as mask lists.
fn antichains(n: usize) -> Vec<Vec<u64>> {
    fn rec(cands: &[u64], k: usize, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if k == cands.len() {
            out.push(chosen.clone());
            return;
        }
        rec(cands, k + 1, chosen, out);
        let s = cands[k];
        if chosen.iter().all(|&c| c & !s != 0 && s & !c != 0) {
            chosen.push(s);
            rec(cands, k + 1, chosen, out);
            chosen.pop();
        }
    }
    let cands: Vec<u64> = (0..1u64 << n).collect();
    let mut out = Vec::new();
    rec(&cands, 0, &mut Vec::new(), &mut out);
    out
}

/// One representative of each isomorphism class of (non-void) simplicial
/// complexes on exactly the ground set `[n]`, in a fixed order.
pub fn all_complexes_up_to_isomorphism(n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=5).contains(&n), "exhaustive enumeration supports 1 <= n <= 5");
    let perms = permutations(n);
    let classes: BTreeSet<Vec<u64>> = antichains(n)
        .into_iter()
        .filter(|a| !a.is_empty())
        .map(|a| canonical(&a, &perms))
        .collect();
    classes
        .into_iter()
        .map(|mut f| {
            sort_facets(&mut f);
            SimplicialComplex { n, facets: f }
        })
        .collect()
}

/// A random complex on `[n]` with between one and five random facets
/// (possibly absorbed by larger ones).
pub fn random_complex(n: usize, rng: &mut impl Rng) -> SimplicialComplex {
    let k = rng.gen_range(1..=5);
    let masks = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(5));
            let mut m = 0u64;
            while (m.count_ones() as usize) < size {
                m |= 1 << rng.gen_range(0..n);
            }
            m
        })
        .collect();
    SimplicialComplex::from_masks(n, masks)
}

/// `count` random complexes with ground sets of size 6 or 7, from `seed`.
pub fn random_corpus(seed: u64, count: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(6..=7);
            random_complex(n, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // inequivalent monotone Boolean functions minus the constant false
        let counts: Vec<usize> = (1..=4).map(|n| all_complexes_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![2, 4, 9, 29]);
    }

    #[test]
    fn random_corpus_is_deterministic() {
        assert_eq!(random_corpus(5, 10), random_corpus(5, 10));
        assert!(random_corpus(5, 50).iter().all(|d| (6..=7).contains(&d.n())));
    }
}
