//! Brute-force counts of absolutely indecomposable representations over
//! small prime fields.
//!
//! Every representation is enumerated, orbits under `GL_α(F_p)` are swept
//! from the least unvisited representation, and one delegate per orbit is
//! tested: it is absolutely indecomposable iff each endomorphism is a scalar
//! plus a nilpotent.

use serde::Serialize;

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::hua::{eval_integer, kac_polynomial};
use crate::linalg::{inverse_mod, kernel_mod_p};
use crate::quiver::{DimVector, Quiver};

pub const SUPPORTED_FIELDS: [u32; 3] = [2, 3, 5];

/// Square or rectangular matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Mat {
    fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Mat {
            rows: n,
            cols: n,
            data,
        }
    }

    fn mul(&self, other: &Mat, p: u32) -> Mat {
        debug_assert_eq!(self.cols, other.rows);
        let mut data = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    data[idx] = (data[idx] + a * other.data[k * other.cols + j]) % p;
                }
            }
        }
        Mat {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Inverse by Gauss–Jordan, `None` when singular.
    fn inverse(&self, p: u32) -> Option<Mat> {
        let n = self.rows;
        let p64 = u64::from(p);
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = self.data[i * n..(i + 1) * n]
                    .iter()
                    .map(|&x| u64::from(x))
                    .collect();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, pivot);
            let inv = inverse_mod(a[col][col], p64);
            for x in a[col].iter_mut() {
                *x = *x * inv % p64;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                        *x = (*x + (p64 - f) * y) % p64;
                    }
                }
            }
        }
        let data = a
            .iter()
            .flat_map(|r| r[n..].iter().map(|&x| x as u32))
            .collect();
        Some(Mat {
            rows: n,
            cols: n,
            data,
        })
    }
}

/// A representation over `F_p`: one matrix per arrow copy, shaped
/// `α_target × α_source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqRep {
    p: u32,
    maps: Vec<Mat>,
}

impl FqRep {
    pub fn field(&self) -> u32 {
        self.p
    }

    /// Entries of every arrow matrix, arrow by arrow, row-major.
    pub fn entries(&self) -> Vec<u32> {
        self.maps
            .iter()
            .flat_map(|m| m.data.iter().copied())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCount {
    pub q: u32,
    pub alpha: DimVector,
    pub total_reps: u64,
    pub orbit_count: u64,
    pub abs_indec_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub delegate: FqRep,
    pub size: u64,
    pub absolutely_indecomposable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    #[serde(flatten)]
    pub count: OracleCount,
    pub engine_eval: i64,
    pub pass: bool,
}

/// Representation space of `(Q, α)` over `F_p`, arrows expanded by
/// multiplicity.
pub struct RepSpace {
    p: u32,
    alpha: DimVector,
    /// `(source, target)` of every arrow copy.
    arrows: Vec<(usize, usize)>,
    entries: usize,
}

impl RepSpace {
    pub fn new(q: &Quiver, alpha: &DimVector, p: u32, guards: &Guards) -> Result<Self> {
        q.check_dim(alpha)?;
        if !SUPPORTED_FIELDS.contains(&p) {
            return Err(Error::input(format!("field size {p} not in {{2,3,5}}")));
        }
        let mut arrows = Vec::new();
        for a in q.arrows() {
            for _ in 0..a.mult {
                arrows.push((a.source, a.target));
            }
        }
        let entries: usize = arrows
            .iter()
            .map(|&(s, t)| alpha[s] as usize * alpha[t] as usize)
            .sum();
        let space = RepSpace {
            p,
            alpha: alpha.clone(),
            arrows,
            entries,
        };
        check_bound(
            "q^dim_rep",
            pow_checked(p, entries as u64),
            guards.oracle_reps,
        )?;
        check_bound("|GL_α(F_q)|", space.group_order(), guards.oracle_group)?;
        check_bound(
            "q^(α·α)",
            pow_checked(p, alpha.dot(alpha) as u64),
            guards.oracle_endos,
        )?;
        Ok(space)
    }

    /// `q^{dim Rep}`.
    pub fn size(&self) -> u64 {
        u64::from(self.p).pow(self.entries as u32)
    }

    /// `|GL_α(F_p)| = Π_i Π_{k<α_i} (p^{α_i} − p^k)`, `None` on overflow.
    pub fn group_order(&self) -> Option<u64> {
        let p = u64::from(self.p);
        let mut acc: u64 = 1;
        for &n in self.alpha.coords() {
            let full = p.checked_pow(n)?;
            for k in 0..n {
                acc = acc.checked_mul(full - p.pow(k))?;
            }
        }
        Some(acc)
    }

    /// Representation with big-endian base-`p` index `index`, so increasing
    /// indices are lexicographically increasing entry lists.
    pub fn decode(&self, mut index: u64) -> FqRep {
        let p = u64::from(self.p);
        let mut flat = vec![0u32; self.entries];
        for slot in flat.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        self.rep_from_entries(&flat)
    }

    pub fn encode(&self, rep: &FqRep) -> u64 {
        rep.entries()
            .iter()
            .fold(0u64, |acc, &x| acc * u64::from(self.p) + u64::from(x))
    }

    fn rep_from_entries(&self, flat: &[u32]) -> FqRep {
        let mut maps = Vec::with_capacity(self.arrows.len());
        let mut pos = 0;
        for &(s, t) in &self.arrows {
            let (rows, cols) = (self.alpha[t] as usize, self.alpha[s] as usize);
            maps.push(Mat {
                rows,
                cols,
                data: flat[pos..pos + rows * cols].to_vec(),
            });
            pos += rows * cols;
        }
        FqRep { p: self.p, maps }
    }

    /// Every element of `GL_α(F_p)` with its inverse, vertex by vertex.
    fn group(&self) -> Vec<Vec<(Mat, Mat)>> {
        let per_vertex: Vec<Vec<(Mat, Mat)>> = self
            .alpha
            .coords()
            .iter()
            .map(|&n| general_linear(n as usize, self.p))
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; per_vertex.len()];
        loop {
            out.push(
                idx.iter()
                    .zip(&per_vertex)
                    .map(|(&i, l)| l[i].clone())
                    .collect(),
            );
            let mut k = per_vertex.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < per_vertex[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    fn act(&self, g: &[(Mat, Mat)], rep: &FqRep) -> FqRep {
        let maps = self
            .arrows
            .iter()
            .zip(&rep.maps)
            .map(|(&(s, t), x)| g[t].0.mul(x, self.p).mul(&g[s].1, self.p))
            .collect();
        FqRep { p: self.p, maps }
    }

    /// Basis of `End(rep)`: tuples `(φ_i)` with `φ_t x_a = x_a φ_s`.
    fn endomorphism_basis(&self, rep: &FqRep) -> Vec<Vec<Mat>> {
        let dims: Vec<usize> = self.alpha.coords().iter().map(|&n| n as usize).collect();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut unknowns = 0;
        for &n in &dims {
            offsets.push(unknowns);
            unknowns += n * n;
        }
        let p = self.p;
        let mut rows = Vec::new();
        for (&(s, t), x) in self.arrows.iter().zip(&rep.maps) {
            // (φ_t x − x φ_s)[r][c]
            for r in 0..dims[t] {
                for c in 0..dims[s] {
                    let mut row = vec![0u32; unknowns];
                    for k in 0..dims[t] {
                        let coef = x.data[k * x.cols + c];
                        let at = offsets[t] + r * dims[t] + k;
                        row[at] = (row[at] + coef) % p;
                    }
                    for k in 0..dims[s] {
                        let coef = x.data[r * x.cols + k];
                        let at = offsets[s] + k * dims[s] + c;
                        row[at] = (row[at] + p - coef) % p;
                    }
                    rows.push(row);
                }
            }
        }
        kernel_mod_p(&rows, unknowns, p)
            .into_iter()
            .map(|v| {
                dims.iter()
                    .zip(&offsets)
                    .map(|(&n, &o)| Mat {
                        rows: n,
                        cols: n,
                        data: v[o..o + n * n].to_vec(),
                    })
                    .collect()
            })
            .collect()
    }

    /// Every endomorphism is `λ·id + nilpotent` for one `λ ∈ F_p`.
    pub fn is_absolutely_indecomposable(&self, rep: &FqRep) -> bool {
        if self.alpha.is_zero() {
            return false;
        }
        let basis = self.endomorphism_basis(rep);
        let p = self.p;
        let mut coeffs = vec![0u32; basis.len()];
        loop {
            let phi: Vec<Mat> = (0..self.alpha.len())
                .map(|v| {
                    let n = self.alpha[v] as usize;
                    let mut data = vec![0u32; n * n];
                    for (c, b) in coeffs.iter().zip(&basis) {
                        for (d, &e) in data.iter_mut().zip(&b[v].data) {
                            *d = (*d + c * e) % p;
                        }
                    }
                    Mat {
                        rows: n,
                        cols: n,
                        data,
                    }
                })
                .collect();
            if !(0..p).any(|lambda| self.is_scalar_plus_nilpotent(&phi, lambda)) {
                return false;
            }
            let mut k = coeffs.len();
            loop {
                if k == 0 {
                    return true;
                }
                k -= 1;
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
            }
        }
    }

    fn is_scalar_plus_nilpotent(&self, phi: &[Mat], lambda: u32) -> bool {
        let p = self.p;
        phi.iter().all(|m| {
            let n = m.rows;
            if n == 0 {
                return true;
            }
            let mut shifted = m.clone();
            for i in 0..n {
                shifted.data[i * n + i] = (shifted.data[i * n + i] + p - lambda) % p;
            }
            let mut power = shifted.clone();
            for _ in 1..n {
                power = power.mul(&shifted, p);
            }
            power.is_zero()
        })
    }

    /// All orbits, delegates in increasing order.
    pub fn orbits(&self) -> Vec<Orbit> {
        let total = self.size();
        let group = self.group();
        let mut visited = vec![false; total as usize];
        let mut out = Vec::new();
        for index in 0..total {
            if visited[index as usize] {
                continue;
            }
            let delegate = self.decode(index);
            let mut size = 0u64;
            for g in &group {
                let image = self.encode(&self.act(g, &delegate)) as usize;
                if !visited[image] {
                    visited[image] = true;
                    size += 1;
                }
            }
            let absolutely_indecomposable = self.is_absolutely_indecomposable(&delegate);
            out.push(Orbit {
                delegate,
                size,
                absolutely_indecomposable,
            });
        }
        out
    }

    /// Another element of the orbit of `rep`, if the orbit has one.
    pub fn other_orbit_member(&self, rep: &FqRep) -> Option<FqRep> {
        self.group()
            .iter()
            .map(|g| self.act(g, rep))
            .find(|r| r != rep)
    }
}

fn pow_checked(p: u32, e: u64) -> Option<u64> {
    u64::from(p).checked_pow(u32::try_from(e).ok()?)
}

fn check_bound(what: &'static str, value: Option<u64>, bound: u64) -> Result<()> {
    match value {
        Some(v) if v <= bound => Ok(()),
        _ => Err(Error::GuardExceeded {
            what,
            value: value.map_or_else(|| "overflow".to_string(), |v| v.to_string()),
            bound: bound.to_string(),
        }),
    }
}

/// `GL_n(F_p)` as `(g, g⁻¹)` pairs, in increasing entry order.
fn general_linear(n: usize, p: u32) -> Vec<(Mat, Mat)> {
    if n == 0 {
        return vec![(Mat::identity(0), Mat::identity(0))];
    }
    let count = u64::from(p).pow((n * n) as u32);
    let mut out = Vec::new();
    for index in 0..count {
        let mut data = vec![0u32; n * n];
        let mut rest = index;
        for slot in data.iter_mut().rev() {
            *slot = (rest % u64::from(p)) as u32;
            rest /= u64::from(p);
        }
        let g = Mat {
            rows: n,
            cols: n,
            data,
        };
        if let Some(inv) = g.inverse(p) {
            out.push((g, inv));
        }
    }
    out
}

/// Count absolutely indecomposable isoclasses of `(Q, α)` over `F_p`.
pub fn count_abs_indec(
    q: &Quiver,
    alpha: &DimVector,
    p: u32,
    guards: &Guards,
) -> Result<OracleCount> {
    let space = RepSpace::new(q, alpha, p, guards)?;
    let orbits = space.orbits();
    let total: u64 = orbits.iter().map(|o| o.size).sum();
    if total != space.size() {
        return Err(Error::inconsistent(
            "orbit sizes do not sum to the space size",
        ));
    }
    Ok(OracleCount {
        q: p,
        alpha: alpha.clone(),
        total_reps: total,
        orbit_count: orbits.len() as u64,
        abs_indec_count: orbits
            .iter()
            .filter(|o| o.absolutely_indecomposable)
            .count() as u64,
    })
}

/// Compare the oracle count with `A_α(p)` from Hua's formula.
pub fn check_against_engine(
    q: &Quiver,
    alpha: &DimVector,
    p: u32,
    guards: &Guards,
) -> Result<OracleCheck> {
    let count = count_abs_indec(q, alpha, p, guards)?;
    let engine_eval = eval_integer(&kac_polynomial(q, alpha)?, p)?;
    Ok(OracleCheck {
        pass: i64::try_from(count.abs_indec_count).ok() == Some(engine_eval),
        count,
        engine_eval,
    })
}
