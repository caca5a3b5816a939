//! Slopes, Harder–Narasimhan types and the dimension bookkeeping for their
//! strata in the representation space and in the moment-map zero fiber.
//!
//! For an HN type `d* = (d¹, …, dˢ)` of weight `α` the quantities are
//!
//! * `End(α)_{F*}   = Σ_{k≤l} dᵏ·dˡ`, block upper-triangular endomorphisms,
//! * `Rep_{F*}      = Σ_{arrows i→j} mult·Σ_{k≤l} dᵏ_i dˡ_j`,
//! * `C             = Rep_{F*} − End(α)_{F*}`,
//! * `codim_rep     = −Σ_{k<l} ⟨dᵏ,dˡ⟩` in `Q` (and in the double quiver),
//! * `codim_moment  = −Σ_{k<l} (dᵏ,dˡ)`,
//! * `dim T         = 1 + dim R_{d*} + C = dim μ⁻¹(0) − codim_moment`.
//!
//! Both expressions for `dim T` are evaluated and compared on every call.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::linalg::rank_over_rationals;
use crate::quiver::{DimVector, FlatnessCheck, Quiver};

/// Exact slope `θ·β / |β|₁`.
pub type Slope = Ratio<i64>;

/// A stability parameter `θ ∈ ℤ^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Stability(Vec<i64>);

impl Stability {
    pub fn new(theta: Vec<i64>) -> Self {
        Stability(theta)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn pairing(&self, beta: &DimVector) -> i64 {
        self.0
            .iter()
            .zip(beta.coords())
            .map(|(&t, &b)| t * i64::from(b))
            .sum()
    }

    fn check_len(&self, q: &Quiver) -> Result<()> {
        if self.0.len() != q.vertex_count() {
            return Err(Error::input(format!(
                "stability has {} entries, quiver has {} vertices",
                self.0.len(),
                q.vertex_count()
            )));
        }
        Ok(())
    }

    /// Input check shared by every operation that needs `θ·α = 0`.
    pub(crate) fn check_balanced(&self, q: &Quiver, alpha: &DimVector) -> Result<()> {
        self.check_len(q)?;
        q.check_dim(alpha)?;
        if self.pairing(alpha) != 0 {
            return Err(Error::input(format!(
                "stability must satisfy θ·α = 0, got {}",
                self.pairing(alpha)
            )));
        }
        Ok(())
    }
}

pub fn slope(theta: &Stability, beta: &DimVector) -> Result<Slope> {
    if beta.is_zero() {
        return Err(Error::input("slope of the zero vector is undefined"));
    }
    if theta.coords().len() != beta.len() {
        return Err(Error::input(
            "stability and dimension vector lengths differ",
        ));
    }
    Ok(Ratio::new(theta.pairing(beta), beta.weight() as i64))
}

/// An ordered tuple of nonzero dimension vectors, the subquotient
/// dimensions of a filtration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnType {
    parts: Vec<DimVector>,
}

impl HnType {
    /// A flag type: nonempty, nonzero parts of equal length. Slopes are not
    /// checked; see [`HnType::with_stability`].
    pub fn new(parts: Vec<DimVector>) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::input("HN type needs at least one part"));
        };
        if parts.iter().any(|p| p.len() != first.len()) {
            return Err(Error::input("HN type parts have different lengths"));
        }
        if parts.iter().any(DimVector::is_zero) {
            return Err(Error::input("HN type parts must be nonzero"));
        }
        Ok(HnType { parts })
    }

    /// An HN type whose slopes strictly decrease under `theta`.
    pub fn with_stability(parts: Vec<DimVector>, theta: &Stability) -> Result<Self> {
        let t = HnType::new(parts)?;
        let slopes = t
            .parts
            .iter()
            .map(|p| slope(theta, p))
            .collect::<Result<Vec<_>>>()?;
        if slopes.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::input("HN type slopes must strictly decrease"));
        }
        Ok(t)
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }

    /// Total dimension vector `Σ dᵏ`.
    pub fn weight(&self) -> DimVector {
        let mut acc = DimVector::zero(self.parts[0].len());
        for p in &self.parts {
            acc = &acc + p;
        }
        acc
    }

    /// `ε = min_i min(d¹_i, dˢ_i)`: the smaller of the first block and the
    /// last block over all vertices.
    pub fn epsilon(&self) -> u32 {
        let first = &self.parts[0];
        let last = &self.parts[self.parts.len() - 1];
        first
            .coords()
            .iter()
            .zip(last.coords())
            .map(|(&a, &b)| a.min(b))
            .min()
            .unwrap_or(0)
    }

    /// `Σ_{k≤l} dᵏ·dˡ`.
    pub fn end_flag_dim(&self) -> i64 {
        let mut s = 0;
        for k in 0..self.parts.len() {
            for l in k..self.parts.len() {
                s += self.parts[k].dot(&self.parts[l]);
            }
        }
        s
    }

    /// `⌈End(α)_{F*} / ε⌉`, the edge multiplicity from which the strata
    /// dimension formula applies; `None` when `ε = 0`.
    pub fn edge_threshold(&self) -> Option<u64> {
        let eps = i64::from(self.epsilon());
        if eps == 0 {
            return None;
        }
        Some(self.end_flag_dim().div_euclid(eps) as u64 + u64::from(self.end_flag_dim() % eps != 0))
    }
}

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for HnType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All tuples of nonzero vectors summing to `α` with strictly decreasing
/// slopes, in decreasing lexicographic order. Under enough edge
/// multiplicity these are exactly the HN types of `α`.
pub fn enumerate_hn_types(q: &Quiver, alpha: &DimVector, theta: &Stability) -> Result<Vec<HnType>> {
    theta.check_balanced(q, alpha)?;
    if alpha.is_zero() {
        return Err(Error::input("HN types need a nonzero dimension vector"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_types(alpha, theta, None, &mut prefix, &mut out);
    Ok(out)
}

fn extend_types(
    rest: &DimVector,
    theta: &Stability,
    bound: Option<Slope>,
    prefix: &mut Vec<DimVector>,
    out: &mut Vec<HnType>,
) {
    if rest.is_zero() {
        out.push(HnType {
            parts: prefix.clone(),
        });
        return;
    }
    for part in rest.nonzero_subvectors() {
        let s = Ratio::new(theta.pairing(&part), part.weight() as i64);
        if bound.is_some_and(|b| s >= b) {
            continue;
        }
        let remaining = rest.checked_sub(&part).expect("sub-vector");
        prefix.push(part);
        extend_types(&remaining, theta, Some(s), prefix, out);
        prefix.pop();
    }
}

fn check_type(q: &Quiver, d: &HnType) -> Result<()> {
    q.check_dim(&d.parts[0])
}

/// `Σ_{arrows i→j} mult · Σ_{k≤l} dᵏ_i dˡ_j`.
pub fn rep_flag_dim(q: &Quiver, d: &HnType) -> Result<i64> {
    check_type(q, d)?;
    let mut s = 0;
    for a in q.arrows() {
        let mut per = 0;
        for k in 0..d.parts.len() {
            for l in k..d.parts.len() {
                per += i64::from(d.parts[k][a.source]) * i64::from(d.parts[l][a.target]);
            }
        }
        s += i64::from(a.mult) * per;
    }
    Ok(s)
}

/// `C = Rep_{F*} − End(α)_{F*}`; may be negative.
pub fn constant_c(q: &Quiver, d: &HnType) -> Result<i64> {
    Ok(rep_flag_dim(q, d)? - d.end_flag_dim())
}

fn pair_sum(
    d: &HnType,
    mut form: impl FnMut(&DimVector, &DimVector) -> Result<i64>,
) -> Result<i64> {
    let mut s = 0;
    for k in 0..d.parts.len() {
        for l in k + 1..d.parts.len() {
            s += form(&d.parts[k], &d.parts[l])?;
        }
    }
    Ok(s)
}

/// Codimension of the HN stratum in `Rep(Q,α)`: `−Σ_{k<l}⟨dᵏ,dˡ⟩`.
pub fn codim_rep(q: &Quiver, d: &HnType) -> Result<i64> {
    check_type(q, d)?;
    Ok(-pair_sum(d, |v, w| q.euler_form(v, w))?)
}

/// Same, for the double quiver.
pub fn codim_rep_double(q: &Quiver, d: &HnType) -> Result<i64> {
    check_type(q, d)?;
    let double = q.double();
    Ok(-pair_sum(d, |v, w| double.euler_form(v, w))?)
}

/// `(−Σ_{k<l}(dᵏ,dˡ), codim_rep_double + End(α)_{F*} − α·α)`, two routes to
/// the codimension of the HN stratum in `μ⁻¹(0)`.
pub fn codim_moment_routes(q: &Quiver, d: &HnType) -> Result<(i64, i64)> {
    check_type(q, d)?;
    let direct = -pair_sum(d, |v, w| q.sym_euler_form(v, w))?;
    let alpha = d.weight();
    let via_double = codim_rep_double(q, d)? + d.end_flag_dim() - alpha.dot(&alpha);
    Ok((direct, via_double))
}

/// Codimension of the HN stratum in `μ⁻¹(0)`: `−Σ_{k<l}(dᵏ,dˡ)`.
pub fn codim_moment(q: &Quiver, d: &HnType) -> Result<i64> {
    let (value, other) = codim_moment_routes(q, d)?;
    if value != other {
        return Err(Error::inconsistent(format!(
            "codim_moment {value} differs from codim_rep_double + End_F - α·α = {other} for {d}"
        )));
    }
    Ok(value)
}

/// `dim R_{d*} = dim Rep(Q,α) − codim_rep`.
pub fn dim_r_hn(q: &Quiver, d: &HnType) -> Result<i64> {
    Ok(q.dim_rep(&d.weight())? - codim_rep(q, d)?)
}

/// `(1 + dim R_{d*} + C, dim μ⁻¹(0) − codim_moment)`, two routes to the
/// dimension of the HN stratum of `μ⁻¹(0)`.
pub fn dim_t_routes(q: &Quiver, d: &HnType) -> Result<(i64, i64)> {
    let via_c = 1 + dim_r_hn(q, d)? + constant_c(q, d)?;
    let (direct, _) = codim_moment_routes(q, d)?;
    let via_codim = q.dim_mu_zero(&d.weight())? - direct;
    Ok((via_c, via_codim))
}

/// Dimension of the HN stratum of `μ⁻¹(0)`; both routes must agree.
pub fn dim_t(q: &Quiver, d: &HnType) -> Result<i64> {
    let (via_c, via_codim) = dim_t_routes(q, d)?;
    if via_c != via_codim {
        return Err(Error::inconsistent(format!(
            "dim T for {d}: 1 + dim R + C = {via_c} but dim μ⁻¹(0) − codim = {via_codim}"
        )));
    }
    Ok(via_c)
}

/// Dimension over ℚ of the flag-compatible `g ∈ End(α)_{F*}` commuting with
/// every flag-compatible representation: `g_t E = E g_s` for each arrow and
/// each elementary map `E` with `E(F^k_s) ⊆ F^k_t`.
///
/// Parallel arrows impose identical equations, so multiplicities are
/// ignored and the value does not depend on edge multiplication.
pub fn s0_commutant_dim(q: &Quiver, d: &HnType, guards: &Guards) -> Result<u64> {
    check_type(q, d)?;
    let unknowns = d.end_flag_dim() as u64;
    if unknowns > guards.s0_unknowns {
        return Err(Error::GuardExceeded {
            what: "commutant unknowns",
            value: unknowns.to_string(),
            bound: guards.s0_unknowns.to_string(),
        });
    }
    let n = q.vertex_count();
    // block index of each basis vector, per vertex; basis ordered along the flag
    let blocks: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            d.parts
                .iter()
                .enumerate()
                .flat_map(|(k, p)| std::iter::repeat_n(k, p[v] as usize))
                .collect()
        })
        .collect();
    // var[v][r][c] = index of the unknown g_v[r][c], if the entry is allowed
    let mut count = 0usize;
    let var: Vec<Vec<Vec<Option<usize>>>> = blocks
        .iter()
        .map(|b| {
            (0..b.len())
                .map(|r| {
                    (0..b.len())
                        .map(|c| {
                            (b[r] <= b[c]).then(|| {
                                count += 1;
                                count - 1
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    debug_assert_eq!(count as u64, unknowns);

    let mut rows: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
    for a in q.arrows() {
        let (s, t) = (a.source, a.target);
        let (bs, bt) = (&blocks[s], &blocks[t]);
        for r in 0..bt.len() {
            for c in (0..bs.len()).filter(|&c| bt[r] <= bs[c]) {
                // entry (i, j) of g_t E_{rc} − E_{rc} g_s
                for i in 0..bt.len() {
                    for j in 0..bs.len() {
                        let mut row = Vec::new();
                        if j == c {
                            if let Some(x) = var[t][i][r] {
                                row.push((x, 1));
                            }
                        }
                        if i == r {
                            if let Some(x) = var[s][c][j] {
                                row.push((x, -1));
                            }
                        }
                        if !row.is_empty() {
                            row.sort_unstable();
                            rows.insert(row);
                        }
                    }
                }
            }
        }
    }
    let dense: Vec<Vec<i64>> = rows
        .iter()
        .map(|row| {
            let mut v = vec![0; count];
            for &(x, c) in row {
                v[x] += c;
            }
            v
        })
        .collect();
    let rank = rank_over_rationals(&dense, count);
    Ok((count - rank) as u64)
}

/// One row of a [`StrataReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrataRow {
    pub hn_type: HnType,
    pub epsilon: u32,
    pub end_flag_dim: i64,
    pub rep_flag_dim: i64,
    pub constant_c: i64,
    /// `None` when `ε = 0`.
    pub threshold: Option<u64>,
    pub codim_rep: i64,
    pub codim_rep_double: i64,
    pub codim_moment: i64,
    pub dim_t: i64,
    pub dim_r_hn: i64,
}

impl StrataRow {
    pub fn compute(q: &Quiver, d: &HnType) -> Result<Self> {
        Ok(StrataRow {
            hn_type: d.clone(),
            epsilon: d.epsilon(),
            end_flag_dim: d.end_flag_dim(),
            rep_flag_dim: rep_flag_dim(q, d)?,
            constant_c: constant_c(q, d)?,
            threshold: d.edge_threshold(),
            codim_rep: codim_rep(q, d)?,
            codim_rep_double: codim_rep_double(q, d)?,
            codim_moment: codim_moment(q, d)?,
            dim_t: dim_t(q, d)?,
            dim_r_hn: dim_r_hn(q, d)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrataReport {
    pub alpha: DimVector,
    pub theta: Stability,
    pub dim_rep: i64,
    pub dim_mu_zero: i64,
    pub flatness: FlatnessCheck,
    pub rows: Vec<StrataRow>,
}

/// Strata data for every asymptotic HN type of `α`.
pub fn strata_report(
    q: &Quiver,
    alpha: &DimVector,
    theta: &Stability,
    guards: &Guards,
) -> Result<StrataReport> {
    let types = enumerate_hn_types(q, alpha, theta)?;
    let fiber = q.moment_fiber_dimension(alpha, guards)?;
    let rows = types
        .iter()
        .map(|d| StrataRow::compute(q, d))
        .collect::<Result<Vec<_>>>()?;
    for row in &rows {
        if row.codim_moment != fiber.dim - row.dim_t {
            return Err(Error::inconsistent(format!(
                "codim_moment {} != dim μ⁻¹(0) − dim T for {}",
                row.codim_moment, row.hn_type
            )));
        }
    }
    Ok(StrataReport {
        alpha: alpha.clone(),
        theta: theta.clone(),
        dim_rep: q.dim_rep(alpha)?,
        dim_mu_zero: fiber.dim,
        flatness: fiber.hypothesis,
        rows,
    })
}
