use super::{bw_polynomial, layers};
use crate::error::{Error, Result};
use crate::groebner::{gin_monomial, GinOptions};
use crate::monomial::{borel_depth, dimension_filtration, FiltrationRoute, MonomialIdeal};
use crate::ring::BWPolynomial;
use crate::simplicial::LocalCohomologyTable;

/// First index at which a criterion fails, with both sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub name: String,
    pub description: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScmReport {
    pub scm: bool,
    pub dim: usize,
    pub gin: MonomialIdeal,
    pub bw: BWPolynomial,
    pub bw_gin: BWPolynomial,
    /// The BW comparison first, then the filtration criteria.
    pub criteria: Vec<Criterion>,
}

impl ScmReport {
    pub fn criterion(&self, name: &str) -> Option<&Criterion> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

struct Check {
    name: &'static str,
    description: &'static str,
    witness: Option<Witness>,
}

impl Check {
    fn new(name: &'static str, description: &'static str) -> Self {
        Check {
            name,
            description,
            witness: None,
        }
    }

    fn record(&mut self, i: usize, ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness {
                i: i as u32,
                lhs: lhs(),
                rhs: rhs(),
            });
        }
    }

    fn finish(self) -> Criterion {
        Criterion {
            name: self.name.into(),
            description: self.description.into(),
            holds: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

/// Decides sequential Cohen-Macaulayness of `R/I` by comparing BW(R/I)
/// with BW(R/gin(I)), and cross-checks the verdict against the
/// equivalent conditions on the dimension filtration. Disagreement between
/// criteria is reported as an invariant violation.
pub fn scm_check(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<ScmReport> {
    if ideal.is_unit() {
        return Err(Error::Precondition("scm_check needs a proper ideal".into()));
    }
    let lay = layers(ideal)?;
    let d = lay.chain.dim;
    let bw = lay.bw();
    let gin = gin_monomial(ideal, opts)?.ideal;
    let bw_gin = bw_polynomial(&gin)?;
    let gin_chain = dimension_filtration(&gin, FiltrationRoute::Borel)?;

    // gin(I^<i>) for 0 <= i < d, reusing results for repeated levels
    let mut gins: Vec<MonomialIdeal> = Vec::with_capacity(d);
    for i in 0..d {
        let level = &lay.chain.ideals[i];
        let g = if level == ideal {
            gin.clone()
        } else if i > 0 && level == &lay.chain.ideals[i - 1] {
            gins[i - 1].clone()
        } else {
            gin_monomial(level, opts)?.ideal
        };
        gins.push(g);
    }

    let mut main = Check::new("bw", "BW(R/I) = BW(R/gin(I))");
    let top = bw.w_degree().max(bw_gin.w_degree()).unwrap_or(0) as usize;
    for i in 0..=top {
        let (a, b) = (bw.row(i as u32), bw_gin.row(i as u32));
        main.record(i, a == b, || a.to_text("t"), || b.to_text("t"));
    }

    let mut depth = Check::new("depth", "depth R/I^<i> >= i + 1");
    let mut self_filt = Check::new("gin_self_filtration", "gin(I^<i>) = gin(I^<i>)^<i>");
    let mut gin_filt = Check::new("gin_filtration", "gin(I^<i>) = gin(I)^<i>");
    let mut hilb_gin = Check::new("hilbert_gin_filtration", "Hilb(R/gin(I^<i>)) = Hilb(R/gin(I)^<i>)");
    let mut hilb = Check::new("hilbert_filtration", "Hilb(R/I^<i>) = Hilb(R/gin(I)^<i>)");
    for (i, g) in gins.iter().enumerate() {
        let dp = borel_depth(g)?;
        depth.record(i, dp > i, || dp.to_string(), || format!(">= {}", i + 1));

        let own = dimension_filtration(g, FiltrationRoute::Borel)?;
        let own_i = own.level(i as i64);
        self_filt.record(i, g == own_i, || g.to_string(), || own_i.to_string());

        let target = gin_chain.level(i as i64);
        gin_filt.record(i, g == target, || g.to_string(), || target.to_string());

        let target_h = target.hilbert_series();
        let gh = g.hilbert_series();
        hilb_gin.record(i, gh == target_h, || gh.to_string(), || target_h.to_string());
        let lh = lay.chain.ideals[i].hilbert_series();
        hilb.record(i, lh == target_h, || lh.to_string(), || target_h.to_string());
    }

    let criteria: Vec<Criterion> = [main, depth, self_filt, gin_filt, hilb_gin, hilb]
        .into_iter()
        .map(Check::finish)
        .collect();
    let scm = criteria[0].holds;
    if let Some(c) = criteria.iter().find(|c| c.holds != scm) {
        return Err(Error::Invariant(format!(
            "criterion {} disagrees with the BW comparison on {ideal}",
            c.name
        )));
    }
    Ok(ScmReport {
        scm,
        dim: d,
        gin,
        bw,
        bw_gin,
        criteria,
    })
}

/// `Hilb(H^i_m(R/I)) = h(U_i; t) (t-1)^{-i}` for sequentially
/// Cohen-Macaulay `R/I`, in the `(t-1)^{-c}` basis.
pub fn local_cohomology_scm(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<LocalCohomologyTable> {
    if !scm_check(ideal, opts)?.scm {
        return Err(Error::NotScm);
    }
    let lay = layers(ideal)?;
    let mut table = LocalCohomologyTable::new();
    for (i, h) in lay.layer_h.iter().enumerate() {
        for (k, &a) in h.taylor_at_one().iter().enumerate() {
            table.add(i as u32, i as i64 - k as i64, a);
        }
    }
    Ok(table)
}
