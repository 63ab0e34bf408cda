use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::initial_ideal_with_hint;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{Field, HilbertSeries, LinearChange, Polynomial, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub seed: u64,
    /// Matrix entries are drawn from `[-bound, bound]`; doubled each round.
    pub bound: i64,
    pub rounds: u32,
    pub field: Field,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: 0,
            bound: 10_000,
            rounds: 5,
            field: Field::Rational,
        }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions {
            seed,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub seed: u64,
    /// Number of independent coordinate changes that produced `ideal`.
    pub trials: u32,
    pub borel_certified: bool,
}

fn random_change(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> LinearChange {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        let change = LinearChange::from_integers(&rows).expect("square");
        if change.is_invertible() {
            return change;
        }
    }
}

fn certify(
    ring: RingSpec,
    gens: &[Polynomial],
    hint: &HilbertSeries,
    opts: &GinOptions,
) -> Result<GinResult> {
    if opts.field != Field::Rational {
        return Err(Error::CharZeroOnly);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut bound = opts.bound.max(1);
    for _ in 0..opts.rounds {
        let mut trial = || -> Result<MonomialIdeal> {
            let g = random_change(&mut rng, ring.nvars(), bound);
            let moved = gens
                .iter()
                .map(|f| f.apply_linear_change(&g))
                .collect::<Result<Vec<_>>>()?;
            initial_ideal_with_hint(ring, &moved, Some(hint))
        };
        let first = trial()?;
        let second = trial()?;
        if first == second && first.is_strongly_stable() {
            return Ok(GinResult {
                ideal: first,
                seed: opts.seed,
                trials: 2,
                borel_certified: true,
            });
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::NotCertified { rounds: opts.rounds })
}

/// Generic initial ideal in revlex order of the ideal generated by the
/// homogeneous `gens`, certified by two agreeing random coordinate changes
/// and strong stability.
pub fn gin(ring: RingSpec, gens: &[Polynomial], opts: &GinOptions) -> Result<GinResult> {
    if opts.field != Field::Rational {
        return Err(Error::CharZeroOnly);
    }
    let hint = super::initial_ideal(ring, gens)?.hilbert_series();
    certify(ring, gens, &hint, opts)
}

/// [`gin`] for a monomial ideal.
pub fn gin_monomial(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<GinResult> {
    let n = ideal.nvars();
    let gens: Vec<Polynomial> = ideal.gens().iter().map(|m| Polynomial::monomial(m.clone())).collect();
    if gens.iter().any(|g| g.total_degree() == Some(0)) {
        // the unit ideal is fixed by every change of coordinates
        return Ok(GinResult {
            ideal: ideal.clone(),
            seed: opts.seed,
            trials: 2,
            borel_certified: true,
        });
    }
    debug_assert!(gens.iter().all(|g| g.nvars() == n));
    certify(ideal.ring(), &gens, &ideal.hilbert_series(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse::parse_polynomial_list;

    fn mono(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn example_ideal() {
        let i = mono(6, "x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6");
        let r = gin_monomial(&i, &GinOptions::default()).unwrap();
        assert_eq!(r.ideal, mono(6, "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2"));
        assert_eq!(r.trials, 2);
        assert!(r.borel_certified);
    }

    #[test]
    fn generic_linear_form() {
        let r3 = RingSpec::new(3).unwrap();
        let gens = parse_polynomial_list("x1 + x2 + x3", Some(3)).unwrap();
        let r = gin(r3, &gens, &GinOptions::with_seed(7)).unwrap();
        assert_eq!(r.ideal, mono(3, "x1"));
    }

    #[test]
    fn stable_ideals_are_fixed() {
        let j = mono(2, "x1^2, x1*x2");
        assert_eq!(gin_monomial(&j, &GinOptions::default()).unwrap().ideal, j);
        let j = mono(6, "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2");
        assert_eq!(gin_monomial(&j, &GinOptions::with_seed(3)).unwrap().ideal, j);
    }

    #[test]
    fn prime_field_rejected() {
        let opts = GinOptions {
            field: Field::Prime(7),
            ..GinOptions::default()
        };
        assert_eq!(gin_monomial(&mono(2, "x1"), &opts), Err(Error::CharZeroOnly));
    }

    #[test]
    fn idempotent() {
        let i = mono(3, "x1*x3, x2*x3");
        let g = gin_monomial(&i, &GinOptions::default()).unwrap().ideal;
        assert_eq!(g, mono(3, "x1^2, x1*x2"));
        assert_eq!(gin_monomial(&g, &GinOptions::with_seed(11)).unwrap().ideal, g);
    }
}
