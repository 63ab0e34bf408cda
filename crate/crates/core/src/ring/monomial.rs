use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An exponent vector in `n` variables.
///
/// The `Ord` impl is the graded reverse lexicographic order with `x1` the
/// greatest variable: higher total degree wins, and among monomials of equal
/// degree `a > b` iff the last nonzero entry of `a - b` is negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{index+1}` (indices are 0-based).
    pub fn var(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial on a 0-based vertex set.
    pub fn squarefree(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; n];
        for v in support {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn set_exp(&mut self, index: usize, e: u32) {
        self.exps[index] = e;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Pure power of a single variable (not 1).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// 0-based index of the largest variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `self / gcd(self, other)`, the generator of `<self> : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }
}

fn revlex_cmp_unchecked(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the later variable means larger monomial
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        revlex_cmp_unchecked(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded reverse lexicographic comparison, checking that both monomials live
/// in the same ring.
pub fn revlex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(revlex_cmp_unchecked(&a.exps, &b.exps))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn revlex_examples() {
        assert_eq!(revlex_compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(
            revlex_compare(&m(&[0, 3, 0]), &m(&[1, 1, 1])).unwrap(),
            Ordering::Greater
        );
        let a = m(&[1, 0, 2]);
        assert_eq!(revlex_compare(&a, &a).unwrap(), Ordering::Equal);
        // higher degree always wins
        assert_eq!(revlex_compare(&m(&[0, 0, 2]), &m(&[1, 0, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn revlex_rejects_mismatched_rings() {
        assert!(matches!(
            revlex_compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn variables_descend() {
        let vars: Vec<_> = (0..4).map(|i| Monomial::var(4, i)).collect();
        for w in vars.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn divisibility_helpers() {
        let a = m(&[1, 2, 0]);
        let b = m(&[1, 3, 1]);
        assert!(a.divides(&b));
        assert_eq!(b.checked_div(&a), Some(m(&[0, 1, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.lcm(&m(&[0, 1, 4])), m(&[1, 2, 4]));
        assert_eq!(m(&[1, 0, 2]).colon(&m(&[0, 1, 1])), m(&[1, 0, 1]));
        assert_eq!(b.max_var(), Some(2));
        assert_eq!(Monomial::one(3).max_var(), None);
        assert_eq!(format!("{}", m(&[1, 0, 2])), "x1*x3^2");
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..=2, n).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn revlex_is_multiplicative(
            (a, b, c) in (1usize..=6).prop_flat_map(|n| (mono(n), mono(n), mono(n)))
        ) {
            prop_assume!(a.degree() <= 6 && b.degree() <= 6 && c.degree() <= 6);
            let ab = a.cmp(&b);
            prop_assert_eq!(a.mul(&c).cmp(&b.mul(&c)), ab);
        }

        #[test]
        fn revlex_is_total_and_antisymmetric(
            (a, b) in (1usize..=6).prop_flat_map(|n| (mono(n), mono(n)))
        ) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        }
    }
}
