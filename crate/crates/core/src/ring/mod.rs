//! Exact arithmetic shared by every other module: monomials in graded
//! reverse lexicographic order, rational polynomials, and the integer
//! polynomial types used for Hilbert series and BW polynomials.

mod bw;
mod monomial;
pub mod parse;
mod poly;
mod series;
mod unipoly;

pub use bw::{bw_specialize, BWPolynomial};
pub use monomial::{revlex_compare, Monomial};
pub use poly::{LinearChange, Polynomial};
pub use series::HilbertSeries;
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Standard graded polynomial ring `k[x1, ..., xn]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    n: usize,
}

impl RingSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a ring needs at least one variable".into()));
        }
        Ok(RingSpec { n })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }
}

/// Coefficient field. Everything except homology ranks works over `Q` only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rational,
    /// `F_p` for a prime `p`.
    Prime(u64),
}

impl Field {
    /// Parses `q` or `p:<prime>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let p = t
            .strip_prefix("p:")
            .and_then(|s| s.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field {t:?}, expected q or p:<prime>")))?;
        if p < 2 || p > u32::MAX as u64 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::Parse(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}
