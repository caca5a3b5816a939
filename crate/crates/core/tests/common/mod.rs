#![allow(dead_code)]

use hnkac_core::{DimVector, Quiver, Stability};

pub fn dv(c: &[u32]) -> DimVector {
    DimVector::new(c.to_vec())
}

pub fn sweep_quivers() -> Vec<(String, Quiver)> {
    let mut out: Vec<(String, Quiver)> = (1..=4)
        .map(|m| (format!("Kronecker({m})"), Quiver::kronecker(m)))
        .collect();
    out.push(("triangle".into(), Quiver::triangle()));
    out
}

/// Nonzero indivisible vectors with `|α|₁ ≤ max_weight`.
pub fn indivisible_vectors(vertices: usize, max_weight: u32) -> Vec<DimVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; vertices];
    fill(&mut cur, 0, max_weight, &mut out);
    out.retain(|v| !v.is_zero() && v.gcd() == 1);
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, budget: u32, out: &mut Vec<DimVector>) {
    if i == cur.len() {
        out.push(DimVector::new(cur.clone()));
        return;
    }
    for x in 0..=budget {
        cur[i] = x;
        fill(cur, i + 1, budget - x, out);
    }
    cur[i] = 0;
}

/// A few nonzero `θ` with `θ·α = 0`.
pub fn balanced_thetas(alpha: &DimVector) -> Vec<Stability> {
    let a = alpha.coords();
    let n = a.len();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i] > 0 || a[j] > 0 {
                let mut t = vec![0i64; n];
                t[i] = i64::from(a[j]);
                t[j] = -i64::from(a[i]);
                out.push(t);
            }
        }
    }
    out.retain(|t| t.iter().any(|&x| x != 0));
    out.sort();
    out.dedup();
    out.into_iter().map(Stability::new).collect()
}
