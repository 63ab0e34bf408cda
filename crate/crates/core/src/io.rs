//! JSON encodings of inputs and results.
//!
//! Objects are emitted with sorted keys. Integers whose magnitude exceeds
//! `2^53 - 1` are written as decimal strings; readers accept either form.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::filtration::{Criterion, LayerDecomposition, ScmReport, Witness};
use crate::groebner::GinResult;
use crate::monomial::{BettiTable, FiltrationChain, MonomialIdeal};
use crate::ring::parse::parse_polynomial;
use crate::ring::{BWPolynomial, HilbertSeries, Monomial, Polynomial, RingSpec, UniPoly};
use crate::simplicial::{LocalCohomologyTable, SimplicialComplex, Triangle};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// Conversion to and from the canonical JSON form.
pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

pub fn to_string<T: Json>(value: &T) -> String {
    value.to_json().to_string()
}

pub fn from_str<T: Json>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    T::from_json(&v)
}

pub fn int(v: i64) -> Value {
    if v.abs() > MAX_SAFE {
        Value::String(v.to_string())
    } else {
        Value::from(v)
    }
}

fn uint(v: u64) -> Value {
    if v > MAX_SAFE as u64 {
        Value::String(v.to_string())
    } else {
        Value::from(v)
    }
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(&format!("missing key {key:?}")))
}

fn get_i64(v: &Value) -> Result<i64> {
    match v {
        Value::Number(n) => n.as_i64().ok_or_else(|| bad("expected an integer")),
        Value::String(s) => s.parse().map_err(|_| bad("expected an integer string")),
        _ => Err(bad("expected an integer")),
    }
}

fn get_u64(v: &Value) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64().ok_or_else(|| bad("expected a non-negative integer")),
        Value::String(s) => s.parse().map_err(|_| bad("expected a non-negative integer string")),
        _ => Err(bad("expected a non-negative integer")),
    }
}

fn get_u32(v: &Value) -> Result<u32> {
    u32::try_from(get_u64(v)?).map_err(|_| bad("integer out of range"))
}

fn get_usize(v: &Value) -> Result<usize> {
    usize::try_from(get_u64(v)?).map_err(|_| bad("integer out of range"))
}

fn get_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| bad("expected an array"))
}

fn get_str(v: &Value) -> Result<&str> {
    v.as_str().ok_or_else(|| bad("expected a string"))
}

fn get_bool(v: &Value) -> Result<bool> {
    v.as_bool().ok_or_else(|| bad("expected a boolean"))
}

impl Json for UniPoly {
    /// Coefficient list, constant term first.
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(|&c| int(c)).collect())
    }

    fn from_json(value: &Value) -> Result<Self> {
        let coeffs = get_array(value)?.iter().map(get_i64).collect::<Result<_>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

impl Json for MonomialIdeal {
    fn to_json(&self) -> Value {
        let gens: Vec<Value> = self.gens().iter().map(|m| json!(m.exps())).collect();
        json!({ "vars": self.nvars(), "gens": gens })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let n = get_usize(field(value, "vars")?)?;
        let rows = get_array(field(value, "gens")?)?
            .iter()
            .map(|r| get_array(r)?.iter().map(get_u32).collect::<Result<Vec<u32>>>())
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_exponents(n, &rows)
    }
}

/// Homogeneous polynomials in `k[x1..xn]`, written in the text grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialList {
    pub ring: RingSpec,
    pub polys: Vec<Polynomial>,
}

impl PolynomialList {
    /// The list as a monomial ideal when every entry is a single term.
    pub fn as_monomial_ideal(&self) -> Option<Result<MonomialIdeal>> {
        let gens: Option<Vec<Monomial>> = self
            .polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.as_monomial().cloned())
            .collect();
        gens.map(|g| MonomialIdeal::new(self.ring, g))
    }
}

impl Json for PolynomialList {
    fn to_json(&self) -> Value {
        let polys: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        json!({ "vars": self.ring.nvars(), "polys": polys })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let n = get_usize(field(value, "vars")?)?;
        let ring = RingSpec::new(n)?;
        let polys = get_array(field(value, "polys")?)?
            .iter()
            .map(|p| parse_polynomial(get_str(p)?, Some(n)))
            .collect::<Result<_>>()?;
        Ok(PolynomialList { ring, polys })
    }
}

impl Json for SimplicialComplex {
    fn to_json(&self) -> Value {
        json!({ "n": self.n(), "facets": self.facets() })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let n = get_usize(field(value, "n")?)?;
        let facets = get_array(field(value, "facets")?)?
            .iter()
            .map(|f| get_array(f)?.iter().map(get_usize).collect::<Result<Vec<usize>>>())
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(n, &facets)
    }
}

impl Json for BWPolynomial {
    /// `{"dim": d, "terms": [{"i", "j", "c"}]}` for `Σ c w^i t^j`; `dim` is
    /// the top `w`-degree, or -1 for the zero polynomial.
    fn to_json(&self) -> Value {
        let dim = self.w_degree().map_or(-1, i64::from);
        let terms: Vec<Value> = self
            .terms()
            .map(|(i, j, c)| json!({ "i": i, "j": j, "c": int(c) }))
            .collect();
        json!({ "dim": dim, "terms": terms })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let terms = get_array(field(value, "terms")?)?
            .iter()
            .map(|t| Ok((get_u32(field(t, "i")?)?, get_u32(field(t, "j")?)?, get_i64(field(t, "c")?)?)))
            .collect::<Result<Vec<_>>>()?;
        let p = BWPolynomial::from_terms(terms);
        let dim = get_i64(field(value, "dim")?)?;
        if dim != p.w_degree().map_or(-1, i64::from) {
            return Err(bad("dim does not match the terms"));
        }
        Ok(p)
    }
}

impl Json for HilbertSeries {
    /// `numerator / (1-t)^denominator_power`.
    fn to_json(&self) -> Value {
        json!({ "numerator": self.numerator().to_json(), "denominator_power": self.denom_power() })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let num = UniPoly::from_json(field(value, "numerator")?)?;
        let k = get_u32(field(value, "denominator_power")?)?;
        Ok(HilbertSeries::raw(num, k))
    }
}

impl Json for Triangle {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, j, c)| json!({ "i": i, "j": j, "c": int(c) }))
            .collect();
        json!({ "entries": entries })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let mut t = Triangle::default();
        for e in get_array(field(value, "entries")?)? {
            let (i, j) = (get_u32(field(e, "i")?)?, get_u32(field(e, "j")?)?);
            if j > i {
                return Err(bad("triangle entry with j > i"));
            }
            t.add(i, j, get_i64(field(e, "c")?)?);
        }
        Ok(t)
    }
}

impl Json for BettiTable {
    /// Entries `β_{i,j}` with homological index `i` and internal degree `j`.
    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, j, b)| json!({ "i": i, "j": j, "b": uint(b) }))
            .collect();
        let totals: Vec<Value> = self.totals().into_iter().map(uint).collect();
        json!({ "entries": entries, "totals": totals })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let mut t = BettiTable::new();
        for e in get_array(field(value, "entries")?)? {
            t.add(get_u32(field(e, "i")?)?, get_u32(field(e, "j")?)?, get_u64(field(e, "b")?)?);
        }
        Ok(t)
    }
}

impl Json for LocalCohomologyTable {
    /// Entries `N_{i,c}` of `Hilb(H^i_m; t) = Σ_c N_{i,c} (t-1)^{-c}`.
    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, c, v)| json!({ "i": i, "c": c, "n": int(v) }))
            .collect();
        json!({ "entries": entries })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let mut t = LocalCohomologyTable::new();
        for e in get_array(field(value, "entries")?)? {
            t.add(get_u32(field(e, "i")?)?, get_i64(field(e, "c")?)?, get_i64(field(e, "n")?)?);
        }
        Ok(t)
    }
}

impl Json for FiltrationChain {
    fn to_json(&self) -> Value {
        let levels: Vec<Value> = self.ideals.iter().map(Json::to_json).collect();
        json!({ "base": self.base.to_json(), "dim": self.dim, "levels": levels })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let base = MonomialIdeal::from_json(field(value, "base")?)?;
        let dim = get_usize(field(value, "dim")?)?;
        let ideals = get_array(field(value, "levels")?)?
            .iter()
            .map(MonomialIdeal::from_json)
            .collect::<Result<Vec<_>>>()?;
        if ideals.len() != dim + 1 {
            return Err(bad("a chain of dimension d has d + 1 levels"));
        }
        Ok(FiltrationChain { base, dim, ideals })
    }
}

impl Json for LayerDecomposition {
    fn to_json(&self) -> Value {
        let layers: Vec<Value> = self.layer_h.iter().map(Json::to_json).collect();
        json!({ "chain": self.chain.to_json(), "layer_h": layers })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let chain = FiltrationChain::from_json(field(value, "chain")?)?;
        let layer_h = get_array(field(value, "layer_h")?)?
            .iter()
            .map(UniPoly::from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(LayerDecomposition { chain, layer_h })
    }
}

impl Json for GinResult {
    fn to_json(&self) -> Value {
        json!({
            "ideal": self.ideal.to_json(),
            "seed": uint(self.seed),
            "trials": self.trials,
            "borel_certified": self.borel_certified,
        })
    }

    fn from_json(value: &Value) -> Result<Self> {
        Ok(GinResult {
            ideal: MonomialIdeal::from_json(field(value, "ideal")?)?,
            seed: get_u64(field(value, "seed")?)?,
            trials: get_u32(field(value, "trials")?)?,
            borel_certified: get_bool(field(value, "borel_certified")?)?,
        })
    }
}

impl Json for Criterion {
    fn to_json(&self) -> Value {
        let witness = match &self.witness {
            None => Value::Null,
            Some(w) => json!({ "i": w.i, "lhs": w.lhs, "rhs": w.rhs }),
        };
        json!({
            "name": self.name,
            "description": self.description,
            "holds": self.holds,
            "witness": witness,
        })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let witness = match field(value, "witness")? {
            Value::Null => None,
            w => Some(Witness {
                i: get_u32(field(w, "i")?)?,
                lhs: get_str(field(w, "lhs")?)?.to_string(),
                rhs: get_str(field(w, "rhs")?)?.to_string(),
            }),
        };
        Ok(Criterion {
            name: get_str(field(value, "name")?)?.to_string(),
            description: get_str(field(value, "description")?)?.to_string(),
            holds: get_bool(field(value, "holds")?)?,
            witness,
        })
    }
}

impl Json for ScmReport {
    fn to_json(&self) -> Value {
        let criteria: Vec<Value> = self.criteria.iter().map(Json::to_json).collect();
        let mut m = Map::new();
        m.insert("scm".into(), Value::Bool(self.scm));
        m.insert("dim".into(), Value::from(self.dim));
        m.insert("gin".into(), self.gin.to_json());
        m.insert("bw".into(), self.bw.to_json());
        m.insert("bw_gin".into(), self.bw_gin.to_json());
        m.insert("criteria".into(), Value::Array(criteria));
        Value::Object(m)
    }

    fn from_json(value: &Value) -> Result<Self> {
        Ok(ScmReport {
            scm: get_bool(field(value, "scm")?)?,
            dim: get_usize(field(value, "dim")?)?,
            gin: MonomialIdeal::from_json(field(value, "gin")?)?,
            bw: BWPolynomial::from_json(field(value, "bw")?)?,
            bw_gin: BWPolynomial::from_json(field(value, "bw_gin")?)?,
            criteria: get_array(field(value, "criteria")?)?
                .iter()
                .map(Criterion::from_json)
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::{layers, scm_check};
    use crate::groebner::{gin_monomial, GinOptions};
    use crate::monomial::betti_eliahou_kervaire;

    fn round_trip<T: Json + PartialEq + std::fmt::Debug>(x: &T) {
        let text = to_string(x);
        assert_eq!(&from_str::<T>(&text).unwrap(), x, "{text}");
        assert_eq!(to_string(&from_str::<T>(&text).unwrap()), text);
    }

    fn example() -> MonomialIdeal {
        MonomialIdeal::parse("x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6", Some(6)).unwrap()
    }

    #[test]
    fn documented_shapes() {
        let d = from_str::<SimplicialComplex>(r#"{"n": 6, "facets": [[1,2,6],[1,3,5],[2,3,4]]}"#).unwrap();
        assert_eq!(d.facets().len(), 3);
        let i = from_str::<MonomialIdeal>(r#"{"vars": 3, "gens": [[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(i.to_string(), "<x1*x3, x2*x3>");
        let bw = BWPolynomial::from_terms([(3, 0, 1), (3, 1, 3), (3, 3, -1)]);
        assert_eq!(
            to_string(&bw),
            r#"{"dim":3,"terms":[{"c":1,"i":3,"j":0},{"c":3,"i":3,"j":1},{"c":-1,"i":3,"j":3}]}"#
        );
        let p = from_str::<PolynomialList>(r#"{"vars": 3, "polys": ["x1*x3 - x2^2", "x2*x3 - x1^2"]}"#).unwrap();
        assert_eq!(p.polys.len(), 2);
        assert!(p.as_monomial_ideal().is_none());
    }

    #[test]
    fn large_integers_are_strings() {
        assert_eq!(int(1 << 53), Value::String("9007199254740992".into()));
        assert_eq!(int(-(1 << 53)), Value::String("-9007199254740992".into()));
        assert_eq!(int((1 << 53) - 1), Value::from(9007199254740991i64));
        round_trip(&UniPoly::new(vec![1, i64::MAX, -(1 << 60)]));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(from_str::<MonomialIdeal>("{"), Err(Error::Parse(_))));
        assert!(matches!(from_str::<MonomialIdeal>(r#"{"vars": 2}"#), Err(Error::Parse(_))));
        assert!(from_str::<MonomialIdeal>(r#"{"vars": 2, "gens": [[1,0,0]]}"#).is_err());
        assert!(from_str::<SimplicialComplex>(r#"{"n": 2, "facets": [[3]]}"#).is_err());
        assert!(from_str::<BWPolynomial>(r#"{"dim": 2, "terms": [{"i":3,"j":0,"c":1}]}"#).is_err());
    }

    #[test]
    fn round_trips() {
        let i = example();
        let opts = GinOptions::default();
        round_trip(&i);
        round_trip(&MonomialIdeal::unit(RingSpec::new(2).unwrap()));
        round_trip(&layers(&i).unwrap());
        round_trip(&layers(&i).unwrap().bw());
        round_trip(&BWPolynomial::zero());
        round_trip(&i.hilbert_series());
        let g = gin_monomial(&i, &opts).unwrap();
        round_trip(&g);
        round_trip(&betti_eliahou_kervaire(&g.ideal).unwrap());
        round_trip(&scm_check(&i, &opts).unwrap());
        let d = crate::simplicial::complex_of(&i).unwrap();
        round_trip(&d);
        round_trip(&d.h_triangle());
        round_trip(&crate::simplicial::local_cohomology_hochster(&d, Default::default()));
        round_trip(&SimplicialComplex::empty_face(3).unwrap());
        round_trip(&PolynomialList {
            ring: RingSpec::new(3).unwrap(),
            polys: crate::ring::parse::parse_polynomial_list("x1*x3 - 1/2*x2^2, x3^4", Some(3)).unwrap(),
        });
    }
}
