//! Text grammar for polynomials: `x1*x2*x3 - 1/2*x4^2`, `3x1 + x2^2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

/// One parsed term: coefficient and 0-based variable exponents.
type RawTerm = (BigRational, Vec<(usize, u32)>);

fn parse_factor(cur: &mut Cursor<'_>, coeff: &mut BigRational, vars: &mut Vec<(usize, u32)>) -> Result<()> {
    match cur.peek() {
        Some(b'x') => {
            cur.bump();
            let idx: usize = cur
                .digits()
                .ok_or_else(|| cur.err("expected variable index"))?
                .parse()
                .map_err(|_| cur.err("bad variable index"))?;
            if idx == 0 {
                return Err(cur.err("variables are numbered from 1"));
            }
            let mut e = 1u32;
            if cur.peek() == Some(b'^') {
                cur.bump();
                e = cur
                    .digits()
                    .ok_or_else(|| cur.err("expected exponent"))?
                    .parse()
                    .map_err(|_| cur.err("bad exponent"))?;
            }
            vars.push((idx - 1, e));
        }
        Some(c) if c.is_ascii_digit() => {
            let num: BigInt = cur.digits().unwrap().parse().unwrap();
            let mut q = BigRational::from_integer(num);
            if cur.peek() == Some(b'/') {
                cur.bump();
                let den: BigInt = cur
                    .digits()
                    .ok_or_else(|| cur.err("expected denominator"))?
                    .parse()
                    .unwrap();
                if den.is_zero() {
                    return Err(cur.err("zero denominator"));
                }
                q /= BigRational::from_integer(den);
            }
            *coeff *= q;
        }
        _ => return Err(cur.err("expected number or variable")),
    }
    Ok(())
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<RawTerm> {
    let mut coeff = BigRational::one();
    let mut vars = Vec::new();
    parse_factor(cur, &mut coeff, &mut vars)?;
    loop {
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
                parse_factor(cur, &mut coeff, &mut vars)?;
            }
            // implicit product such as `3x1`
            Some(b'x') => parse_factor(cur, &mut coeff, &mut vars)?,
            _ => break,
        }
    }
    Ok((coeff, vars))
}

fn parse_raw(s: &str) -> Result<Vec<RawTerm>> {
    let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigRational::one();
        match cur.peek() {
            None if !first => break,
            None => return Err(Error::Parse("empty polynomial".into())),
            Some(b'+') => cur.bump(),
            Some(b'-') => {
                cur.bump();
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(cur.err("expected '+' or '-'")),
        }
        first = false;
        let (c, v) = parse_term(&mut cur)?;
        terms.push((c * sign, v));
    }
    Ok(terms)
}

fn max_index(terms: &[RawTerm]) -> usize {
    terms
        .iter()
        .flat_map(|(_, v)| v.iter().map(|&(i, _)| i + 1))
        .max()
        .unwrap_or(0)
}

fn build(terms: Vec<RawTerm>, n: usize) -> Result<Polynomial> {
    let found = max_index(&terms);
    if found > n {
        return Err(Error::Dimension { expected: n, found });
    }
    Ok(Polynomial::from_terms(
        n,
        terms.into_iter().map(|(c, vars)| {
            let mut e = vec![0u32; n];
            for (i, k) in vars {
                e[i] += k;
            }
            (Monomial::new(e), c)
        }),
    ))
}

/// Parses one polynomial. When `nvars` is `None` the ring is inferred from
/// the largest variable index.
pub fn parse_polynomial(s: &str, nvars: Option<usize>) -> Result<Polynomial> {
    let terms = parse_raw(s)?;
    let n = nvars.unwrap_or_else(|| max_index(&terms).max(1));
    build(terms, n)
}

/// Parses a comma-separated list of polynomials over a common ring.
pub fn parse_polynomial_list(s: &str, nvars: Option<usize>) -> Result<Vec<Polynomial>> {
    let raw: Vec<Vec<RawTerm>> = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_raw)
        .collect::<Result<_>>()?;
    let n = nvars.unwrap_or_else(|| raw.iter().map(|t| max_index(t)).max().unwrap_or(0).max(1));
    raw.into_iter().map(|t| build(t, n)).collect()
}
