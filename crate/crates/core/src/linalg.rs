//! Exact rank computations for degree slices.
//!
//! Two independent routes: dense fraction-free (Bareiss) elimination, and
//! incremental sparse elimination, first modulo a 31-bit prime and then over
//! the integers when the modular rank comes out deficient. The modular rank
//! never exceeds the rational rank, so full modular rank is conclusive.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// The prime used by the modular pre-pass.
pub const PRIME: u64 = 2_147_483_647;

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow<T> = Vec<(usize, T)>;

/// Rank of a dense integer matrix by Bareiss elimination. Pivots are taken
/// column by column, choosing the first usable row.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Clears denominators row by row.
pub fn integer_rows(rows: &[SparseRow<Rational>]) -> Vec<SparseRow<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
            row.iter()
                .map(|(c, q)| (*c, q.numer() * (&l / q.denom())))
                .collect()
        })
        .collect()
}

pub fn to_dense(rows: &[SparseRow<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut d = vec![BigInt::zero(); cols];
            for (c, v) in row {
                d[*c] = v.clone();
            }
            d
        })
        .collect()
}

fn reduce_mod(v: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = v.mod_floor(&p);
    r.try_into().expect("reduced below the prime")
}

fn inv_mod(a: u64) -> u64 {
    // Fermat; PRIME is prime.
    let mut result = 1u64;
    let mut base = a % PRIME;
    let mut e = PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % PRIME;
        }
        base = base * base % PRIME;
        e >>= 1;
    }
    result
}

/// Rank modulo [`PRIME`] by incremental sparse elimination.
pub fn sparse_rank_mod_p(rows: &[SparseRow<BigInt>]) -> usize {
    let mut pivots: HashMap<usize, SparseRow<u64>> = HashMap::new();
    for row in rows {
        let mut r: SparseRow<u64> = row
            .iter()
            .map(|(c, v)| (*c, reduce_mod(v)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(lead, lv)) = r.first() {
            match pivots.get(&lead) {
                None => {
                    let inv = inv_mod(lv);
                    for e in r.iter_mut() {
                        e.1 = e.1 * inv % PRIME;
                    }
                    pivots.insert(lead, r);
                    break;
                }
                Some(p) => r = axpy_mod(&r, lv, p),
            }
        }
    }
    pivots.len()
}

/// `r - f * p` modulo the prime, where `p` is monic.
fn axpy_mod(r: &SparseRow<u64>, f: u64, p: &SparseRow<u64>) -> SparseRow<u64> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, (PRIME - f * p[j - 1].1 % PRIME) % PRIME)
        } else {
            i += 1;
            j += 1;
            (ci, (r[i - 1].1 + PRIME - f * p[j - 1].1 % PRIME) % PRIME)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}

/// Exact rank by incremental sparse elimination over the integers; each
/// reduced row is divided by the gcd of its entries.
pub fn sparse_rank_exact(rows: &[SparseRow<BigInt>]) -> usize {
    let mut pivots: HashMap<usize, SparseRow<BigInt>> = HashMap::new();
    for row in rows {
        let mut r: SparseRow<BigInt> = row.iter().filter(|e| !e.1.is_zero()).cloned().collect();
        while let Some((lead, lv)) = r.first().cloned() {
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, r);
                    break;
                }
                Some(p) => r = cross_eliminate(&r, &lv, p),
            }
        }
    }
    pivots.len()
}

/// `p_lead * r - r_lead * p`, made primitive.
fn cross_eliminate(r: &SparseRow<BigInt>, rl: &BigInt, p: &SparseRow<BigInt>) -> SparseRow<BigInt> {
    let pl = &p[0].1;
    let g = pl.gcd(rl);
    let (a, b) = (pl / &g, rl / &g);
    let mut out: SparseRow<BigInt> = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, &a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &a * &r[i - 1].1 - &b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, e| acc.gcd(&e.1));
    if content > BigInt::one() {
        for e in out.iter_mut() {
            e.1 /= &content;
        }
    }
    if out.first().is_some_and(|e| e.1.is_negative()) {
        for e in out.iter_mut() {
            e.1 = -std::mem::take(&mut e.1);
        }
    }
    out
}

/// Exact rank: modular pre-pass, confirmed over the integers when the
/// modular rank falls short of `min(rows, cols)`.
pub fn sparse_rank(rows: &[SparseRow<BigInt>], cols: usize) -> usize {
    let bound = rows.len().min(cols);
    let modular = sparse_rank_mod_p(rows);
    if modular == bound {
        return modular;
    }
    sparse_rank_exact(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rows(m: &[&[i64]]) -> Vec<SparseRow<BigInt>> {
        m.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|e| *e.1 != 0)
                    .map(|(c, v)| (c, BigInt::from(*v)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(bareiss_rank(to_dense(&m, 3)), 2);
        assert_eq!(sparse_rank_exact(&m), 2);
        assert_eq!(sparse_rank(&m, 3), 2);
        assert_eq!(bareiss_rank(vec![]), 0);
        // Singular only modulo the prime.
        let p = PRIME as i64;
        let m = rows(&[&[1, 1], &[1, 1 + p]]);
        assert_eq!(sparse_rank_mod_p(&m), 1);
        assert_eq!(sparse_rank(&m, 2), 2);
        assert_eq!(bareiss_rank(to_dense(&m, 2)), 2);
    }

    #[test]
    fn rational_rows_are_cleared() {
        let r = vec![vec![
            (0, Rational::new(1.into(), 2.into())),
            (2, Rational::new(1.into(), 3.into())),
        ]];
        assert_eq!(
            integer_rows(&r),
            vec![vec![(0, BigInt::from(3)), (2, BigInt::from(2))]]
        );
    }

    proptest! {
        #[test]
        fn routes_agree(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            let refs: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
            let sp = rows(&refs);
            let dense = bareiss_rank(to_dense(&sp, 5));
            prop_assert_eq!(sparse_rank_exact(&sp), dense);
            prop_assert_eq!(sparse_rank(&sp, 5), dense);
        }
    }
}
