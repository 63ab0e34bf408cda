mod common;

use bwkit::filtration::bw_from_complex;
use bwkit::ring::Field;
use bwkit::simplicial::{
    all_complexes_up_to_isomorphism, local_cohomology_hochster, reduced_homology_ranks, scm_oracle,
    SimplicialComplex,
};
use common::arb_complex;
use proptest::prelude::*;

fn is_pure(d: &SimplicialComplex) -> bool {
    let sizes: Vec<usize> = d.facets().iter().map(Vec::len).collect();
    sizes.iter().all(|&s| s == sizes[0])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn alexander_duality_is_an_involution(d in arb_complex(7)) {
        prop_assume!(!d.is_simplex());
        let dual = d.alexander_dual().unwrap();
        prop_assert_eq!(dual.alexander_dual().unwrap(), d);
    }

    #[test]
    fn euler_poincare(d in arb_complex(7)) {
        let ranks = reduced_homology_ranks(&d, Field::Rational);
        let homology: i64 = ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { -(r as i64) } else { r as i64 }).sum();
        // index k holds H~_{k-1}; faces of size k contribute (-1)^{k-1}
        let euler: i64 = d.faces().iter().map(|f| if f.len() % 2 == 0 { -1 } else { 1 }).sum::<i64>();
        prop_assert_eq!(homology, euler);
        for p in [2, 3] {
            let mod_p = reduced_homology_ranks(&d, Field::Prime(p));
            let alt: i64 = mod_p.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { -(r as i64) } else { r as i64 }).sum();
            prop_assert_eq!(alt, homology);
        }
    }
}

#[test]
fn cohen_macaulay_complexes_on_few_vertices() {
    let mut seen = 0;
    for n in 1..=5 {
        for d in all_complexes_up_to_isomorphism(n) {
            if !(is_pure(&d) && scm_oracle(&d, Field::Rational)) {
                continue;
            }
            seen += 1;
            let top = d.krull_dim() as u32;
            let bw = bw_from_complex(&d);
            assert!(bw.terms().all(|(i, _, c)| i == top && c > 0), "{d}: {}", bw.to_text());
            let lc = local_cohomology_hochster(&d, Field::Rational);
            assert!(lc.entries().all(|(i, _, _)| i == top), "{d}: {lc}");
        }
    }
    assert!(seen > 20);
}
