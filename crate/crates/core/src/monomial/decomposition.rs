use std::collections::{BTreeMap, HashSet};

use super::ideal::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::Monomial;

/// One primary component together with the (0-based) variables generating
/// its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub support: Vec<usize>,
    pub component: MonomialIdeal,
}

impl PrimaryComponent {
    /// Krull dimension of `R / sqrt(component)`.
    pub fn dim(&self) -> usize {
        self.component.nvars() - self.support.len()
    }
}

/// Reduced primary decomposition of a proper nonzero monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
}

impl PrimaryDecomposition {
    pub fn intersection(&self) -> Option<MonomialIdeal> {
        self.components
            .iter()
            .map(|c| c.component.clone())
            .reduce(|a, b| a.intersect(&b))
    }
}

/// Irredundant decomposition into ideals generated by pure powers.
pub(crate) fn irreducible_components(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let mut leaves: Vec<MonomialIdeal> = Vec::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(cur) = stack.pop() {
        if cur.is_unit() || !seen.insert(cur.clone()) {
            continue;
        }
        // every leaf below `cur` contains it, so it cannot be minimal
        if leaves.iter().any(|l| l.is_subset(&cur)) {
            continue;
        }
        // generators are kept in descending revlex order; pick the
        // lexicographically first one that is not a pure power
        let splittable = cur
            .gens()
            .iter()
            .filter(|g| !g.is_pure_power())
            .min_by(|a, b| b.exps().cmp(a.exps()));
        match splittable {
            None => leaves.push(cur),
            Some(g) => {
                let v = g.support().next().unwrap();
                let mut u = Monomial::one(g.nvars());
                u.set_exp(v, g.exp(v));
                let w = g.checked_div(&u).unwrap();
                stack.push(cur.with_generator(w));
                stack.push(cur.with_generator(u));
            }
        }
    }
    // keep the inclusion-minimal leaves
    leaves.sort_by_key(|l| l.gens().len());
    leaves.dedup();
    let mut kept: Vec<MonomialIdeal> = Vec::new();
    for l in leaves {
        if !kept.iter().any(|k| k.is_subset(&l)) {
            kept.retain(|k| !l.is_subset(k));
            kept.push(l);
        }
    }
    kept
}

fn support_of(irreducible: &MonomialIdeal) -> Vec<usize> {
    let mut s: Vec<usize> = irreducible.gens().iter().flat_map(|g| g.support()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Splits generators `u*v` with coprime non-units until only pure powers
/// remain, groups the irreducible pieces by radical and intersects each
/// group, then drops redundant components.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain(
            "primary decomposition needs a proper nonzero ideal".into(),
        ));
    }
    let mut groups: BTreeMap<Vec<usize>, MonomialIdeal> = BTreeMap::new();
    for irr in irreducible_components(ideal) {
        let s = support_of(&irr);
        match groups.get_mut(&s) {
            Some(acc) => *acc = acc.intersect(&irr),
            None => {
                groups.insert(s, irr);
            }
        }
    }
    let mut components: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(support, component)| PrimaryComponent { support, component })
        .collect();
    // larger dimension first, then by support
    components.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.support.cmp(&b.support)));

    let mut k = 0;
    while k < components.len() && components.len() > 1 {
        let rest = components
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, c)| c.component.clone())
            .reduce(|a, b| a.intersect(&b))
            .unwrap();
        if rest == *ideal {
            components.remove(k);
        } else {
            k += 1;
        }
    }
    let dec = PrimaryDecomposition { components };
    if dec.intersection().as_ref() != Some(ideal) {
        return Err(Error::Invariant(format!(
            "primary components of {ideal} do not intersect back to it"
        )));
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::test_support::ideal;

    #[test]
    fn stanley_reisner_split() {
        let d = primary_decomposition(&ideal(3, "x1*x3, x2*x3")).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].component, ideal(3, "x3"));
        assert_eq!(d.components[0].dim(), 2);
        assert_eq!(d.components[1].component, ideal(3, "x1, x2"));
        assert_eq!(d.components[1].dim(), 1);
    }

    #[test]
    fn borel_example_components() {
        let j = ideal(6, "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2");
        let d = primary_decomposition(&j).unwrap();
        let comps: Vec<_> = d.components.iter().map(|c| c.component.clone()).collect();
        assert_eq!(comps[0], ideal(6, "x1, x2^2, x2*x3, x3^2"));
        // embedded components are not unique; any valid choice must
        // intersect back to J, like the textbook one does
        let textbook = ideal(6, "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x4^2");
        assert_eq!(comps[0].intersect(&textbook), j);
        assert!(j.is_subset(&comps[1]));
        assert_eq!(comps[0].intersect(&comps[1]), j);
        assert_eq!(d.components[0].support, vec![0, 1, 2]);
        assert_eq!(d.components[1].support, vec![0, 1, 2, 3]);
    }

    #[test]
    fn irreducible_input_is_its_own_decomposition() {
        let d = primary_decomposition(&ideal(3, "x1^2")).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].support, vec![0]);
    }

    #[test]
    fn embedded_component_kept() {
        // <x^2, xy> = <x> ∩ <x^2, y>
        let d = primary_decomposition(&ideal(2, "x1^2, x1*x2")).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[1].component, ideal(2, "x1^2, x2"));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let r = crate::ring::RingSpec::new(2).unwrap();
        assert!(primary_decomposition(&MonomialIdeal::zero(r)).is_err());
        assert!(primary_decomposition(&MonomialIdeal::unit(r)).is_err());
    }
}
