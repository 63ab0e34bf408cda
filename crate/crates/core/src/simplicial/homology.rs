use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{mask_len, SimplicialComplex};
use crate::ring::Field;

/// Row echelon over `Z` with content removal after every update; `None` on
/// `i64` overflow.
fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            let g = pivot[col].gcd(&c);
            let a = pivot[col] / g;
            let b = c / g;
            let mut content = 0i64;
            for k in col..ncols {
                let v = row[k].checked_mul(a)?.checked_sub(pivot[k].checked_mul(b)?)?;
                row[k] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for v in row[col..].iter_mut() {
                    *v /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot[col].gcd(&row[col]);
            let a = &pivot[col] / &g;
            let b = &row[col] / &g;
            let mut content = BigInt::zero();
            for k in col..ncols {
                row[k] = &row[k] * &a - &pivot[k] * &b;
                content = content.gcd(&row[k]);
            }
            if content.abs() > BigInt::from(1) {
                for v in row[col..].iter_mut() {
                    *v /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let inv = |a: u64| -> u64 {
        // Fermat
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let scale = inv(rows[rank][col]);
        for v in rows[rank][col..].iter_mut() {
            *v = *v * scale % p;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            for k in col..ncols {
                row[k] = (row[k] + p - c * pivot[k] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn matrix_rank(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        Field::Rational => rank_i64(rows.to_vec()).unwrap_or_else(|| rank_bigint(rows)),
        Field::Prime(p) => rank_mod_p(rows, p),
    }
}

/// Faces of `complex` grouped by cardinality `0..=dim+1`.
fn faces_by_size(complex: &SimplicialComplex) -> Vec<Vec<u64>> {
    let top = (complex.dim() + 1) as usize;
    let mut out = vec![Vec::new(); top + 1];
    for f in complex.face_masks() {
        out[mask_len(f)].push(f);
    }
    out
}

/// Boundary map from faces of size `k` to faces of size `k - 1`, one row
/// per source face.
fn boundary(src: &[u64], dst: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = dst.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    src.iter()
        .map(|&face| {
            let mut row = vec![0i64; dst.len()];
            let mut sign = 1;
            for b in 0..64 {
                if face >> b & 1 == 1 {
                    row[index[&(face & !(1 << b))]] = sign;
                    sign = -sign;
                }
            }
            row
        })
        .collect()
}

/// `dim H̃_i(Δ; k)` for `i = -1 ..= dim Δ`, at position `i + 1`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: Field) -> Vec<u64> {
    let by_size = faces_by_size(complex);
    let top = by_size.len() - 1;
    // rank of the boundary out of faces of size s, for s = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = matrix_rank(&boundary(&by_size[s], &by_size[s - 1]), field);
    }
    (0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(reduced_homology_ranks(&boundary_triangle(), Field::Rational), vec![0, 0, 1]);
        assert_eq!(reduced_homology_ranks(&cx(1, &[&[1]]), Field::Rational), vec![0, 0]);
        assert_eq!(reduced_homology_ranks(&example(), Field::Rational), vec![0, 0, 1, 0]);
        assert_eq!(
            reduced_homology_ranks(&SimplicialComplex::empty_face(2).unwrap(), Field::Rational),
            vec![1]
        );
        assert_eq!(reduced_homology_ranks(&cx(2, &[&[1], &[2]]), Field::Rational), vec![0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
        );
        assert_eq!(reduced_homology_ranks(&rp2, Field::Rational), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_ranks(&rp2, Field::Prime(2)), vec![0, 0, 1, 1]);
        assert_eq!(reduced_homology_ranks(&rp2, Field::Prime(3)), vec![0, 0, 0, 0]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let rows = vec![vec![i64::MAX / 2, 3], vec![3, i64::MAX / 3]];
        assert_eq!(rank_i64(rows.clone()), None);
        assert_eq!(rank_bigint(&rows), 2);
        assert_eq!(matrix_rank(&rows, Field::Rational), 2);
    }

    #[test]
    fn euler_characteristic() {
        for d in [example(), boundary_triangle(), cx(5, &[&[1, 2, 3], &[3, 4], &[5]])] {
            let ranks = reduced_homology_ranks(&d, Field::Rational);
            let betti: i64 = ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) }).sum();
            // reduced Euler characteristic: Σ (-1)^i f_i over i >= -1
            let chi: i64 = d
                .face_masks()
                .iter()
                .map(|&f| if mask_len(f) % 2 == 1 { 1 } else { -1 })
                .sum();
            assert_eq!(betti, chi);
        }
    }
}
