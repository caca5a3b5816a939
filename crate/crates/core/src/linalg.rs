//! Rank computations: fraction-free elimination over ℚ and Gaussian
//! elimination over a prime field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over ℚ of an integer matrix, by Bareiss fraction-free elimination.
pub fn rank_over_rationals(rows: &[Vec<i64>], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                // every entry stays an integer minor, so the division is exact
                row[j] = (&prow[col] * &row[j] - &factor * &prow[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Basis of the null space `{x : A x = 0}` over `F_p`, `A` given by rows with
/// entries already reduced mod `p`.
pub fn kernel_mod_p(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let p64 = u64::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| u64::from(x) % p64).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse_mod(m[rank][col], p64);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p64;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + (p64 - f) * y) % p64;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; ncols];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = ((p64 - m[r][fc]) % p64) as u32;
            }
            v
        })
        .collect()
}

pub(crate) fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime and small
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}
