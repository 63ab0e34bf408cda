use std::collections::BTreeMap;
use std::fmt;

use super::ideal::MonomialIdeal;
use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}` of a quotient `R/I`, keyed by homological
/// index `i` and internal degree `j`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: u32, j: u32, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += count;
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti numbers `β_0, β_1, ...` up to the projective dimension.
    pub fn totals(&self) -> Vec<u64> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut t = vec![0; pd as usize + 1];
        for (&(i, _), &c) in &self.entries {
            t[i as usize] += c;
        }
        t
    }

    pub fn projective_dimension(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Castelnuovo-Mumford regularity `max (j - i)`.
    pub fn regularity(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// Row `r` of the table in the usual layout: `β_{i, i+r}` for each `i`.
    pub fn row(&self, r: u32) -> Vec<u64> {
        let width = self.projective_dimension().map_or(0, |p| p as usize + 1);
        (0..width as u32).map(|i| self.get(i, i + r)).collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let totals = self.totals();
        let cells: Vec<String> = totals.iter().map(u64::to_string).collect();
        writeln!(f, "total: {}", cells.join(" "))?;
        for r in 0..=self.regularity().unwrap_or(0) {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|&c| if c == 0 { ".".to_string() } else { c.to_string() })
                .collect();
            writeln!(f, "{r:>5}: {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Eliahou-Kervaire formula for strongly stable ideals:
/// `β_{i+1, i+j}(R/J) = Σ_{u ∈ G(J), deg u = j} C(max(u) - 1, i)`.
pub fn betti_eliahou_kervaire(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_strongly_stable() {
        return Err(Error::Precondition(format!(
            "Eliahou-Kervaire needs a strongly stable ideal, got {ideal}"
        )));
    }
    let mut table = BettiTable::new();
    if ideal.is_unit() {
        return Ok(table);
    }
    table.add(0, 0, 1);
    for u in ideal.gens() {
        let j = u.degree();
        let m = u.max_var().expect("proper generator") as u64 + 1;
        for i in 0..m {
            table.add(i as u32 + 1, i as u32 + j, binomial(m - 1, i));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::test_support::ideal;

    #[test]
    fn borel_example_table() {
        let t = betti_eliahou_kervaire(&ideal(6, "x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4^2")).unwrap();
        assert_eq!(t.totals(), vec![1, 7, 11, 6, 1]);
        assert_eq!(t.row(0), vec![1, 0, 0, 0, 0]);
        assert_eq!(t.row(1), vec![0, 6, 8, 3, 0]);
        assert_eq!(t.row(2), vec![0, 1, 3, 3, 1]);
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(t.projective_dimension(), Some(4));
    }

    #[test]
    fn small_tables() {
        let t = betti_eliahou_kervaire(&ideal(2, "x1")).unwrap();
        assert_eq!(t.totals(), vec![1, 1]);
        let t = betti_eliahou_kervaire(&ideal(2, "x1^2, x1*x2")).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert!(betti_eliahou_kervaire(&ideal(2, "x2")).is_err());
    }
}
