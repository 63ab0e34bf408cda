use super::intpoly::IntPoly;
use crate::monomial::{minimal_generators, MonomialIdeal};
use crate::ring::{HilbertSeries, Monomial, RingSpec};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Pair {
    fn degree(&self) -> u32 {
        self.lcm.degree()
    }
}

/// Running state of Buchberger's algorithm. Elements are primitive and
/// pairwise top-reduced; tails are left alone until the final
/// interreduction.
pub(crate) struct Buchberger {
    ring: RingSpec,
    basis: Vec<IntPoly>,
    /// `false` once an element's leading monomial is a multiple of a newer one.
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    fn new(ring: RingSpec) -> Self {
        Buchberger {
            ring,
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        self.basis
            .iter()
            .enumerate()
            .find(|(k, g)| self.active[*k] && g.lead().divides(m))
            .map(|(k, _)| k)
    }

    /// Reduces the leading term until it is not divisible by any leading
    /// monomial of the basis.
    fn top_reduce(&self, mut f: IntPoly) -> IntPoly {
        let mut steps = 0u32;
        while !f.is_zero() {
            let Some(k) = self.find_reducer(f.lead()) else {
                break;
            };
            f.reduce_at(0, &self.basis[k]);
            steps += 1;
            if steps.is_multiple_of(8) {
                f.make_primitive();
            }
        }
        f.make_primitive();
        f
    }

    /// Gebauer-Möller update: records pairs with the new element, dropping
    /// those caught by the product or chain criterion.
    fn insert(&mut self, h: IntPoly) {
        let hk = self.basis.len();
        let hl = h.lead().clone();

        let cands: Vec<Pair> = (0..hk)
            .filter(|&k| self.active[k])
            .map(|k| Pair {
                i: k,
                j: hk,
                lcm: self.basis[k].lead().lcm(&hl),
            })
            .collect();

        // drop pairs whose lcm is a proper multiple of another new lcm
        let minimal: Vec<&Pair> = cands
            .iter()
            .filter(|p| !cands.iter().any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm)))
            .collect();
        // one pair per lcm; a coprime pair in the group makes the whole group redundant
        let mut kept: Vec<Pair> = Vec::new();
        for p in &minimal {
            if kept.iter().any(|q| q.lcm == p.lcm) {
                continue;
            }
            let group_coprime = minimal
                .iter()
                .filter(|q| q.lcm == p.lcm)
                .any(|q| self.basis[q.i].lead().is_coprime(&hl));
            if !group_coprime {
                kept.push((*p).clone());
            }
        }

        // old pairs whose lcm is strictly divisible by the new lead
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && basis[p.i].lead().lcm(&hl) != p.lcm
                && basis[p.j].lead().lcm(&hl) != p.lcm)
        });
        self.pairs.extend(kept);

        for k in 0..hk {
            if self.active[k] && hl.divides(self.basis[k].lead()) {
                self.active[k] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn leading_ideal(&self) -> MonomialIdeal {
        let leads = self
            .basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g.lead().clone())
            .collect();
        MonomialIdeal::new(self.ring, leads).expect("leads live in the ring")
    }

    fn run(&mut self, mut inputs: Vec<IntPoly>, hint: Option<&HilbertSeries>) {
        inputs.retain(|g| !g.is_zero());
        inputs.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.lead().cmp(b.lead())));
        let mut next_input = 0;

        loop {
            let pair_deg = self.pairs.iter().map(Pair::degree).min();
            let input_deg = inputs.get(next_input).map(IntPoly::degree);
            let deg = match (pair_deg, input_deg) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };

            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
                self.pairs.drain(..).partition(|p| p.degree() == deg);
            self.pairs = rest;
            batch.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
            let mut fresh = Vec::new();
            while next_input < inputs.len() && inputs[next_input].degree() == deg {
                fresh.push(inputs[next_input].clone());
                next_input += 1;
            }

            if let Some(target) = hint {
                // degree `deg` of the leading ideal is already complete
                let len = deg as usize + 1;
                if self.leading_ideal().hilbert_series().expand(len)[deg as usize]
                    == target.expand(len)[deg as usize]
                {
                    continue;
                }
            }

            for g in fresh {
                let h = self.top_reduce(g);
                if !h.is_zero() {
                    self.insert(h);
                }
            }
            for p in batch {
                let s = IntPoly::s_poly(&self.basis[p.i], &self.basis[p.j], &p.lcm);
                let h = self.top_reduce(s);
                if !h.is_zero() {
                    self.insert(h);
                }
            }

            if let Some(target) = hint {
                if self.leading_ideal().hilbert_series() == *target {
                    break;
                }
            }
        }
    }

    /// Active elements, sorted by descending leading monomial.
    fn finish(self) -> Vec<IntPoly> {
        let mut out: Vec<IntPoly> = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(g, _)| g)
            .collect();
        out.sort_by(|a, b| b.lead().cmp(a.lead()));
        out
    }
}

/// A Gröbner basis (not necessarily reduced) of the ideal generated by
/// homogeneous `inputs`. With `hint` equal to the Hilbert series of the
/// quotient the computation stops as soon as the leading ideal attains it.
pub(crate) fn groebner_basis(ring: RingSpec, inputs: Vec<IntPoly>, hint: Option<&HilbertSeries>) -> Vec<IntPoly> {
    let mut state = Buchberger::new(ring);
    state.run(inputs, hint);
    state.finish()
}

/// Full interreduction: every tail term is reduced by the other elements.
pub(crate) fn interreduce(basis: Vec<IntPoly>) -> Vec<IntPoly> {
    // the basis is minimal (no lead divides another) by construction
    let leads: Vec<Monomial> = minimal_generators(basis.iter().map(|g| g.lead().clone()).collect());
    let mut basis: Vec<IntPoly> = basis.into_iter().filter(|g| leads.contains(g.lead())).collect();
    for k in 0..basis.len() {
        let mut f = basis[k].clone();
        let mut pos = 1;
        let mut steps = 0u32;
        while pos < f.terms.len() {
            let m = &f.terms[pos].0;
            let reducer = basis
                .iter()
                .enumerate()
                .find(|(j, g)| *j != k && g.lead().divides(m))
                .map(|(j, _)| j);
            match reducer {
                Some(j) => {
                    f.reduce_at(pos, &basis[j]);
                    steps += 1;
                    if steps.is_multiple_of(8) {
                        f.make_primitive();
                    }
                }
                None => pos += 1,
            }
        }
        f.make_primitive();
        basis[k] = f;
    }
    basis.sort_by(|a, b| b.lead().cmp(a.lead()));
    basis
}
