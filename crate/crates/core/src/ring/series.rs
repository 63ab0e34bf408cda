use std::fmt;

use super::unipoly::UniPoly;

/// A rational function `numerator / (1 - t)^denom_power`.
///
/// Values built through [`HilbertSeries::new`] are canonical: common factors
/// of `(1 - t)` are cancelled as long as the denominator allows it.
#[derive(Clone, Eq)]
pub struct HilbertSeries {
    numerator: UniPoly,
    denom_power: u32,
}

impl HilbertSeries {
    pub fn new(numerator: UniPoly, denom_power: u32) -> Self {
        let mut num = numerator;
        let mut k = denom_power;
        if num.is_zero() {
            k = 0;
        }
        while k > 0 {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        HilbertSeries {
            numerator: num,
            denom_power: k,
        }
    }

    /// Keeps the given representation without cancelling.
    pub fn raw(numerator: UniPoly, denom_power: u32) -> Self {
        HilbertSeries {
            numerator,
            denom_power,
        }
    }

    pub fn zero() -> Self {
        Self::raw(UniPoly::zero(), 0)
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    pub fn canonical(&self) -> HilbertSeries {
        HilbertSeries::new(self.numerator.clone(), self.denom_power)
    }

    /// Numerator when rewritten over `(1 - t)^k`, for `k >= denom_power`.
    pub fn numerator_over(&self, k: u32) -> UniPoly {
        assert!(k >= self.denom_power, "cannot lower the denominator power");
        &self.numerator * &UniPoly::one_minus_t_pow(k - self.denom_power)
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let k = self.denom_power.max(other.denom_power);
        HilbertSeries::new(&self.numerator_over(k) + &other.numerator_over(k), k)
    }

    /// Power-series coefficients of degrees `0..len`.
    pub fn expand(&self, len: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..len).map(|j| self.numerator.coeff(j)).collect();
        // multiply by 1/(1-t) repeatedly: prefix sums
        for _ in 0..self.denom_power {
            for j in 1..len {
                c[j] += c[j - 1];
            }
        }
        c
    }
}

impl PartialEq for HilbertSeries {
    /// Equality of rational functions via cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        let k = self.denom_power.max(other.denom_power);
        self.numerator_over(k) == other.numerator_over(k)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(1 - t)", self.numerator),
            k => write!(f, "({})/(1 - t)^{}", self.numerator, k),
        }
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSeries({self})")
    }
}
