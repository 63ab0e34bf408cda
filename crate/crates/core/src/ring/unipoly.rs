use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in one variable `t`, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        UniPoly::new(coeffs)
    }

    /// `(1 - t)^k`
    pub fn one_minus_t_pow(k: u32) -> Self {
        let base = UniPoly::new(vec![1, -1]);
        (0..k).fold(UniPoly::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`, `None` if it does not divide.
    pub fn div_one_minus_t(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        // f = (1 - t) q  =>  q_j = sum_{k <= j} f_k
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut run = 0i64;
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            run += c;
            q.push(run);
        }
        if run + self.coeffs[self.coeffs.len() - 1] != 0 {
            return None;
        }
        Some(UniPoly::new(q))
    }

    /// Exact division by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: u32) -> Option<UniPoly> {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.div_one_minus_t()?;
        }
        Some(cur)
    }

    /// Coefficients `a_k` with `self(t) = sum_k a_k (t - 1)^k`.
    pub fn taylor_at_one(&self) -> Vec<i64> {
        // repeated synthetic division by (t - 1)
        let mut cur = self.coeffs.clone();
        let mut out = Vec::with_capacity(cur.len());
        while !cur.is_empty() {
            let m = cur.len();
            let mut quot = vec![0i64; m - 1];
            let mut carry = 0i64;
            for k in (0..m).rev() {
                let v = cur[k] + carry;
                if k == 0 {
                    out.push(v);
                } else {
                    quot[k - 1] = v;
                    carry = v;
                }
            }
            cur = quot;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Inverse of [`UniPoly::taylor_at_one`].
    pub fn from_taylor_at_one(a: &[i64]) -> UniPoly {
        let t_minus_one = UniPoly::new(vec![-1, 1]);
        let mut acc = UniPoly::zero();
        let mut pow = UniPoly::one();
        for &c in a {
            acc = &acc + &pow.scale(c);
            pow = &pow * &t_minus_one;
        }
        acc
    }

    pub fn scale(&self, c: i64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Text form such as `1 + 3t - t^3`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let neg = c < 0;
            let a = c.unsigned_abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match j {
                0 => s.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        s.push_str(&a.to_string());
                    }
                    s.push_str(var);
                    if j > 1 {
                        s.push_str(&format!("^{j}"));
                    }
                }
            }
        }
        s
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(-1)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_and_degrees() {
        assert_eq!(UniPoly::new(vec![1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert_eq!(UniPoly::new(vec![0, 0]).degree(), None);
        assert_eq!(UniPoly::one().degree(), Some(0));
    }

    #[test]
    fn division_by_one_minus_t() {
        // 1 - 2t^2 + t^3 = (1 - t)(1 + t - t^2)
        let k = UniPoly::new(vec![1, 0, -2, 1]);
        assert_eq!(k.div_one_minus_t().unwrap(), UniPoly::new(vec![1, 1, -1]));
        assert_eq!(UniPoly::new(vec![1, 1]).div_one_minus_t(), None);
        let c = UniPoly::one_minus_t_pow(3);
        assert_eq!(c.coeffs(), &[1, -3, 3, -1]);
        assert_eq!(c.div_one_minus_t_pow(3).unwrap(), UniPoly::one());
    }

    #[test]
    fn taylor_expansion_at_one() {
        // t^2 + t + 1 = (t-1)^2 + 3(t-1) + 3
        let h = UniPoly::new(vec![1, 1, 1]);
        assert_eq!(h.taylor_at_one(), vec![3, 3, 1]);
        assert_eq!(UniPoly::from_taylor_at_one(&[3, 3, 1]), h);
    }

    #[test]
    fn text_form() {
        assert_eq!(UniPoly::new(vec![1, 3, 0, -1]).to_string(), "1 + 3t - t^3");
        assert_eq!(UniPoly::new(vec![0, -2]).to_string(), "-2t");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn taylor_round_trip(c in proptest::collection::vec(-20i64..20, 0..7)) {
            let p = UniPoly::new(c);
            prop_assert_eq!(UniPoly::from_taylor_at_one(&p.taylor_at_one()), p);
        }

        #[test]
        fn multiply_then_divide(c in proptest::collection::vec(-20i64..20, 0..7), k in 0u32..4) {
            let p = UniPoly::new(c);
            let m = &p * &UniPoly::one_minus_t_pow(k);
            prop_assert_eq!(m.div_one_minus_t_pow(k).unwrap(), p);
        }
    }
}
