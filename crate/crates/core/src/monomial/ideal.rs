use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, RingSpec};

/// Monomial ideal stored by its minimal generators, sorted in descending
/// revlex order. No generators means the zero ideal; the generator `1`
/// means the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingSpec,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of `gens`, sorted descending.
pub fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColonMode {
    Colon,
    Saturate,
}

impl MonomialIdeal {
    pub fn new(ring: RingSpec, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::Dimension {
                expected: ring.nvars(),
                found: g.nvars(),
            });
        }
        Ok(Self::from_minimal(ring, minimal_generators(gens)))
    }

    pub(crate) fn from_minimal(ring: RingSpec, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring, gens }
    }

    /// Builds from rows of exponents; the ring has `nvars` variables.
    pub fn from_exponents(nvars: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let ring = RingSpec::new(nvars)?;
        Self::new(ring, rows.iter().map(|r| Monomial::new(r.clone())).collect())
    }

    pub fn zero(ring: RingSpec) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingSpec) -> Self {
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(ring.nvars())],
        }
    }

    /// The prime generated by the listed (0-based) variables.
    pub fn prime(ring: RingSpec, vars: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.nvars();
        Self::from_minimal(ring, minimal_generators(vars.into_iter().map(|v| Monomial::var(n, v)).collect()))
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    /// `self : m`
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    /// `self : x_v^∞` for a 0-based variable index.
    pub fn saturate_var(&self, v: usize) -> MonomialIdeal {
        if self.gens.iter().all(|g| g.exp(v) == 0) {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h.set_exp(v, 0);
                h
            })
            .collect();
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    /// `self : m^∞`
    pub fn saturate(&self, m: &Monomial) -> MonomialIdeal {
        m.support().fold(self.clone(), |acc, v| acc.saturate_var(v))
    }

    pub fn colon_saturate(&self, m: &Monomial, mode: ColonMode) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars() {
            return Err(Error::Dimension {
                expected: self.nvars(),
                found: m.nvars(),
            });
        }
        match mode {
            ColonMode::Colon => Ok(self.colon(m)),
            ColonMode::Saturate if m.is_one() => Err(Error::Precondition(
                "saturation by the unit monomial".into(),
            )),
            ColonMode::Saturate => Ok(self.saturate(m)),
        }
    }

    /// Generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let n = self.nvars();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::squarefree(n, g.support()))
            .collect();
        Self::from_minimal(self.ring, minimal_generators(gens))
    }

    /// Closed under `x_j -> x_i` exchanges for `i < j`.
    pub fn is_strongly_stable(&self) -> bool {
        for g in &self.gens {
            for j in g.support().collect::<Vec<_>>() {
                for i in 0..j {
                    let mut h = g.clone();
                    h.set_exp(j, h.exp(j) - 1);
                    h.set_exp(i, h.exp(i) + 1);
                    if !self.contains(&h) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Smallest strongly stable ideal containing the given monomials.
    pub fn borel_closure(ring: RingSpec, gens: Vec<Monomial>) -> MonomialIdeal {
        use std::collections::HashSet;
        let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
        let mut stack = gens;
        while let Some(g) = stack.pop() {
            for j in g.support().collect::<Vec<_>>() {
                for i in 0..j {
                    let mut h = g.clone();
                    h.set_exp(j, h.exp(j) - 1);
                    h.set_exp(i, h.exp(i) + 1);
                    if seen.insert(h.clone()) {
                        stack.push(h);
                    }
                }
            }
        }
        Self::from_minimal(ring, minimal_generators(seen.into_iter().collect()))
    }

    /// Parses a comma-separated list of monomials such as `x1*x2, x3^2`.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<Self> {
        let polys = crate::ring::parse::parse_polynomial_list(text, nvars)?;
        let n = polys.first().map(|p| p.nvars()).or(nvars).unwrap_or(1);
        let gens = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                p.terms()
                    .first()
                    .filter(|_| p.len() == 1)
                    .map(|(m, _)| m.clone())
                    .ok_or_else(|| Error::Parse(format!("{p} is not a monomial")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(RingSpec::new(n)?, gens)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
