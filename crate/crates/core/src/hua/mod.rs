//! Kac polynomials of indivisible dimension vectors from Hua's formula, and
//! the decomposition of the formula into Harder–Narasimhan buckets.
//!
//! For indivisible `α` Hua's formula reads
//!
//! ```text
//! A_α(q) = (q−1) Σ_l (−1)^{l+1}/l Σ_{α=α¹+…+αˡ} Π_i Σ_{αⁱ=d^{i,1}+…+d^{i,s}}
//!              q^{−Σ_k ⟨d^{i,k},d^{i,k}⟩} / Π_k φ_{δ^{i,k}}(q⁻¹)
//! ```
//!
//! with `δ^{i,k} = d^{i,k} − d^{i,k+1}`. Using
//! `1/φ_m(q⁻¹) = (−1)^m q^{m(m+1)/2} / φ_m(q)` and clearing the common
//! denominator `φ_α(q)`, each double partition `π` contributes the Laurent
//! polynomial
//!
//! ```text
//! (−1)^{l+1}/l · (−1)^{Σ|δ|₁} · q^{Σ b(δ) − Σ ⟨d,d⟩} · φ_α(q) / Π φ_δ(q)
//! ```
//!
//! and `A_α = (q−1)·Σ_π term(π) / φ_α`. Every quotient above is exact.

mod partitions;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use partitions::PartitionTable;
pub use partitions::{
    enumerate_compositions, enumerate_ordered_partitions, DoublePartition, OrderedPartition,
};

use crate::error::{Error, Result};
use crate::phi::{b_exponent, phi_int, phi_vec};
use crate::poly::{integer, rational, LaurentPolynomial, Rational};
use crate::quiver::{DimVector, Quiver, RootClass};
use crate::strata::{codim_moment, slope, HnType, Stability};

/// Key of a bucket of Hua terms: the flattened parts of a double partition
/// ordered by slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "parts", rename_all = "snake_case")]
pub enum BucketKey {
    /// Pairwise distinct slopes: an HN type.
    Hn(HnType),
    /// Some slopes coincide. Parts by weakly decreasing slope, ties in
    /// decreasing lexicographic order.
    Tied(Vec<DimVector>),
}

impl BucketKey {
    pub fn hn_type(&self) -> Option<&HnType> {
        match self {
            BucketKey::Hn(t) => Some(t),
            BucketKey::Tied(_) => None,
        }
    }
}

impl std::fmt::Display for BucketKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BucketKey::Hn(t) => write!(f, "HN{t}"),
            BucketKey::Tied(parts) => {
                write!(f, "U(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bucket {
    pub key: BucketKey,
    pub polynomial: LaurentPolynomial,
}

impl Bucket {
    /// `l(d*)`, the degree of the bucket polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.polynomial.degree().ok()
    }
}

/// Comparison of `l(α) − l(d*)` with the moment-map codimension of `d*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimCheck {
    pub hn_type: HnType,
    /// Degree of the trivial bucket.
    pub l_alpha: i64,
    /// Degree of this bucket.
    pub l_type: i64,
    /// Exponent `b(α) − Σ_k ⟨dᵏ,dᵏ⟩` shared by the leading terms of every
    /// double partition in the bucket; `l_type` falls below it exactly when
    /// those leading terms cancel.
    pub term_degree: i64,
    pub codim_moment: i64,
    pub epsilon: u32,
    pub threshold: Option<u64>,
    /// The quiver's smallest multiplicity reaches the edge threshold.
    pub threshold_met: bool,
    /// `l_alpha − l_type == codim_moment`.
    pub holds: bool,
}

impl CodimCheck {
    pub fn degree_gap(&self) -> i64 {
        self.l_alpha - self.l_type
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub alpha: DimVector,
    pub theta: Stability,
    pub buckets: Vec<Bucket>,
    /// `Σ buckets = φ_α(q)·A_α(q)/(q−1)`.
    pub total: LaurentPolynomial,
    pub kac: LaurentPolynomial,
    pub checks: Vec<CodimCheck>,
}

impl DecompositionReport {
    pub fn bucket(&self, key: &BucketKey) -> Option<&Bucket> {
        self.buckets.iter().find(|b| &b.key == key)
    }

    pub fn hn_bucket(&self, parts: &[&[u32]]) -> Option<&Bucket> {
        let t = HnType::new(parts.iter().map(|p| DimVector::new(p.to_vec())).collect()).ok()?;
        self.bucket(&BucketKey::Hn(t))
    }

    pub fn check_for(&self, t: &HnType) -> Option<&CodimCheck> {
        self.checks.iter().find(|c| &c.hn_type == t)
    }
}

/// Shared state for evaluating every term of Hua's formula for one `α`.
struct HuaEngine<'a> {
    quiver: &'a Quiver,
    alpha: DimVector,
    phi_alpha: LaurentPolynomial,
    partitions: PartitionTable,
    // write-once: keyed by the sorted δ coordinates per vertex
    quotients: Mutex<HashMap<Vec<Vec<u32>>, Arc<LaurentPolynomial>>>,
}

impl<'a> HuaEngine<'a> {
    fn new(quiver: &'a Quiver, alpha: &DimVector) -> Result<Self> {
        quiver.check_dim(alpha)?;
        if !Quiver::is_indivisible(alpha)? {
            return Err(Error::input(format!(
                "{alpha} is divisible: plethystic corrections required, out of scope"
            )));
        }
        Ok(HuaEngine {
            quiver,
            alpha: alpha.clone(),
            phi_alpha: phi_vec(alpha),
            partitions: PartitionTable::new(alpha),
            quotients: Mutex::new(HashMap::new()),
        })
    }

    /// `φ_α / Π φ_δ`.
    fn quotient(&self, diffs: &[DimVector]) -> Result<Arc<LaurentPolynomial>> {
        let n = self.alpha.len();
        let key: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut c: Vec<u32> = diffs.iter().map(|d| d[v]).filter(|&x| x > 0).collect();
                c.sort_unstable();
                c
            })
            .collect();
        if let Some(hit) = self.quotients.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let den = key
            .iter()
            .flatten()
            .fold(LaurentPolynomial::one(), |acc, &m| &acc * &phi_int(m));
        let value = Arc::new(self.phi_alpha.exact_div(&den).map_err(|_| {
            Error::inconsistent(format!(
                "φ_α does not divide the φ_δ product for δ multiset {key:?}"
            ))
        })?);
        Ok(self
            .quotients
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(value)
            .clone())
    }

    fn term(&self, pi: &DoublePartition) -> Result<LaurentPolynomial> {
        let l = pi.blocks() as i64;
        let mut diffs = Vec::new();
        let mut exponent = 0i64;
        for r in pi.refinements() {
            for d in r.parts() {
                exponent -= self.quiver.euler_form(d, d)?;
            }
            for delta in r.differences() {
                exponent += b_exponent(&delta);
                diffs.push(delta);
            }
        }
        let sign_weight: u64 = diffs.iter().map(DimVector::weight).sum();
        let sign = if sign_weight.is_multiple_of(2) { 1 } else { -1 };
        let lsign = if l % 2 == 1 { 1 } else { -1 };
        let coeff = rational(sign * lsign, l);
        let quotient = self.quotient(&diffs)?;
        let mut out = LaurentPolynomial::zero();
        out.add_scaled_shifted(&quotient, &coeff, exponent);
        Ok(out)
    }

    /// Every double partition with its term, grouped per composition in
    /// enumeration order. Compositions are evaluated in parallel.
    fn terms(&self) -> Result<Vec<(DoublePartition, LaurentPolynomial)>> {
        let compositions = enumerate_compositions(&self.alpha)?;
        let chunks: Vec<Result<Vec<_>>> = compositions
            .par_iter()
            .map(|c| {
                self.partitions
                    .refinements_of(c)
                    .into_iter()
                    .map(|pi| {
                        let t = self.term(&pi)?;
                        Ok((pi, t))
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for chunk in chunks {
            out.extend(chunk?);
        }
        Ok(out)
    }

    /// `A_α = (q−1)·total/φ_α`, checked to be an integral polynomial.
    fn kac_from_total(&self, total: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        let q_minus_one = LaurentPolynomial::from_coeffs(&[-1, 1]);
        let kac = (total * &q_minus_one)
            .exact_div(&self.phi_alpha)
            .map_err(|_| {
                Error::inconsistent(format!(
                    "φ_α does not divide (q−1)·total for {}",
                    self.alpha
                ))
            })?;
        if !kac.is_polynomial() || !kac.is_integral() {
            return Err(Error::inconsistent(format!(
                "A_{} = {kac} is not an integral polynomial",
                self.alpha
            )));
        }
        Ok(kac)
    }
}

/// One term of Hua's formula multiplied by `φ_α(q)`, where `α` is the total
/// of `pi`.
pub fn term_value(q: &Quiver, pi: &DoublePartition) -> Result<LaurentPolynomial> {
    let alpha = pi.total();
    q.check_dim(&alpha)?;
    let engine = HuaEngine {
        quiver: q,
        phi_alpha: phi_vec(&alpha),
        partitions: PartitionTable::new(&DimVector::zero(alpha.len())),
        alpha,
        quotients: Mutex::new(HashMap::new()),
    };
    engine.term(pi)
}

/// Bucket of a double partition: its parts sorted by decreasing slope.
pub fn bucket_key(pi: &DoublePartition, theta: &Stability) -> Result<BucketKey> {
    let mut parts: Vec<(crate::strata::Slope, DimVector)> = pi
        .flat_parts()
        .map(|d| Ok((slope(theta, d)?, d.clone())))
        .collect::<Result<_>>()?;
    parts.sort_by(|a, b| b.cmp(a));
    let tied = parts.windows(2).any(|w| w[0].0 == w[1].0);
    let parts: Vec<DimVector> = parts.into_iter().map(|(_, d)| d).collect();
    if tied {
        Ok(BucketKey::Tied(parts))
    } else {
        Ok(BucketKey::Hn(HnType::new(parts)?))
    }
}

/// The Kac polynomial `A_α(q)` of an indivisible `α`.
pub fn kac_polynomial(q: &Quiver, alpha: &DimVector) -> Result<LaurentPolynomial> {
    let engine = HuaEngine::new(q, alpha)?;
    let mut total = LaurentPolynomial::zero();
    for (_, t) in engine.terms()? {
        total += &t;
    }
    engine.kac_from_total(&total)
}

/// [`kac_polynomial`] with its root-theoretic checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacReport {
    pub alpha: DimVector,
    pub polynomial: LaurentPolynomial,
    pub root_class: RootClass,
    /// `1 − ⟨α,α⟩` when `α` is a root.
    pub expected_degree: Option<i64>,
}

impl KacReport {
    pub fn degree(&self) -> Option<i64> {
        self.polynomial.degree().ok()
    }

    pub fn leading_coeff(&self) -> Option<Rational> {
        self.polynomial.leading_coeff().ok().cloned()
    }

    /// Vanishes exactly off the root system; on roots it is monic with
    /// nonnegative coefficients and degree `1 − ⟨α,α⟩`.
    pub fn consistent_with_root_class(&self) -> bool {
        match self.expected_degree {
            None => self.polynomial.is_zero(),
            Some(d) => {
                self.degree() == Some(d)
                    && self.leading_coeff() == Some(Rational::one())
                    && self.polynomial.has_nonnegative_coeffs()
            }
        }
    }
}

pub fn kac_report(q: &Quiver, alpha: &DimVector) -> Result<KacReport> {
    let polynomial = kac_polynomial(q, alpha)?;
    let root_class = q.classify_root(alpha)?;
    let expected_degree = if root_class.is_root() {
        Some(1 - q.euler_form(alpha, alpha)?)
    } else {
        None
    };
    Ok(KacReport {
        alpha: alpha.clone(),
        polynomial,
        root_class,
        expected_degree,
    })
}

/// Group all Hua terms of `α` by [`bucket_key`] and compare bucket degrees
/// with strata codimensions.
pub fn stratified_decomposition(
    q: &Quiver,
    alpha: &DimVector,
    theta: &Stability,
) -> Result<DecompositionReport> {
    theta.check_balanced(q, alpha)?;
    let engine = HuaEngine::new(q, alpha)?;
    let mut direct_total = LaurentPolynomial::zero();
    let mut grouped: BTreeMap<BucketKey, LaurentPolynomial> = BTreeMap::new();
    for (pi, t) in engine.terms()? {
        direct_total += &t;
        *grouped.entry(bucket_key(&pi, theta)?).or_default() += &t;
    }
    let buckets: Vec<Bucket> = grouped
        .into_iter()
        .map(|(key, polynomial)| Bucket { key, polynomial })
        .collect();
    let mut total = LaurentPolynomial::zero();
    for b in &buckets {
        total += &b.polynomial;
    }
    if total != direct_total {
        return Err(Error::inconsistent("bucket sum differs from the term sum"));
    }
    let kac = engine.kac_from_total(&total)?;
    let q_minus_one = LaurentPolynomial::from_coeffs(&[-1, 1]);
    if &kac * &phi_vec(alpha) != &total * &q_minus_one {
        return Err(Error::inconsistent("A_α·φ_α ≠ (q−1)·Σ buckets"));
    }

    let trivial = BucketKey::Hn(HnType::new(vec![alpha.clone()])?);
    let l_alpha = buckets
        .iter()
        .find(|b| b.key == trivial)
        .and_then(Bucket::degree)
        .ok_or_else(|| Error::inconsistent("trivial bucket is empty"))?;
    let mut checks = Vec::new();
    for b in &buckets {
        let (Some(t), Some(l_type)) = (b.key.hn_type(), b.degree()) else {
            continue;
        };
        let mut self_pairing = 0;
        for d in t.parts() {
            self_pairing += q.euler_form(d, d)?;
        }
        let codim = codim_moment(q, t)?;
        let threshold = t.edge_threshold();
        checks.push(CodimCheck {
            hn_type: t.clone(),
            l_alpha,
            l_type,
            term_degree: b_exponent(alpha) - self_pairing,
            codim_moment: codim,
            epsilon: t.epsilon(),
            threshold,
            threshold_met: matches!(
                (threshold, q.min_multiplicity()),
                (Some(th), Some(m)) if u64::from(m) >= th
            ),
            holds: l_alpha - l_type == codim,
        });
    }
    Ok(DecompositionReport {
        alpha: alpha.clone(),
        theta: theta.clone(),
        buckets,
        total,
        kac,
        checks,
    })
}

/// `l(α) − l(d*)` against `codim_moment` for every nonzero HN bucket.
pub fn verify_codim_degrees(
    q: &Quiver,
    alpha: &DimVector,
    theta: &Stability,
) -> Result<Vec<CodimCheck>> {
    Ok(stratified_decomposition(q, alpha, theta)?.checks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftRow {
    pub key: BucketKey,
    pub degree_n1: Option<i64>,
    pub degree_n2: Option<i64>,
    /// `q^{−l}·P` agree at both multiplicities.
    pub shifted_equal: bool,
    pub unshifted_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub n1: u32,
    pub n2: u32,
    pub rows: Vec<ShiftRow>,
}

impl ShiftReport {
    /// Every HN bucket agrees after shifting by its own degree.
    pub fn hn_buckets_agree(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| matches!(r.key, BucketKey::Hn(_)))
            .all(|r| r.shifted_equal)
    }
}

fn normalized(p: Option<&LaurentPolynomial>) -> Option<LaurentPolynomial> {
    let p = p?;
    Some(match p.degree() {
        Ok(d) => p.shift(-d),
        Err(_) => LaurentPolynomial::zero(),
    })
}

/// Compare bucket polynomials of `Q_{n1}` and `Q_{n2}` (uniform edge
/// multiplication of `q`), each normalised to degree 0.
pub fn verify_bucket_shift(
    q: &Quiver,
    alpha: &DimVector,
    theta: &Stability,
    n1: u32,
    n2: u32,
) -> Result<ShiftReport> {
    let first = stratified_decomposition(&q.multiply_edges(n1)?, alpha, theta)?;
    let second = stratified_decomposition(&q.multiply_edges(n2)?, alpha, theta)?;
    let mut keys: Vec<&BucketKey> = first.buckets.iter().map(|b| &b.key).collect();
    keys.extend(second.buckets.iter().map(|b| &b.key));
    keys.sort();
    keys.dedup();
    let rows = keys
        .into_iter()
        .map(|key| {
            let a = first.bucket(key).map(|b| &b.polynomial);
            let b = second.bucket(key).map(|b| &b.polynomial);
            ShiftRow {
                key: key.clone(),
                degree_n1: a.and_then(|p| p.degree().ok()),
                degree_n2: b.and_then(|p| p.degree().ok()),
                shifted_equal: a.is_some() && b.is_some() && normalized(a) == normalized(b),
                unshifted_equal: a.is_some() && a == b,
            }
        })
        .collect();
    Ok(ShiftReport { n1, n2, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationRow {
    pub n: u32,
    #[serde(with = "crate::json::polynomial")]
    pub kac: LaurentPolynomial,
    /// Coefficients of `q⁰ … q^k`.
    #[serde(with = "crate::json::bigints")]
    pub low: Vec<BigInt>,
    /// Coefficients of `q^{deg} … q^{deg−k}`.
    #[serde(with = "crate::json::bigints")]
    pub top: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub k: u32,
    pub rows: Vec<StabilizationRow>,
    /// Least `n` from which all later low rows agree.
    pub low_stable_from: u32,
    /// Least `n` from which all later top rows agree.
    pub top_stable_from: u32,
}

fn integer_coeff(p: &LaurentPolynomial, e: i64) -> Result<BigInt> {
    let c = p.coeff(e);
    if !c.is_integer() {
        return Err(Error::inconsistent(format!("non-integral coefficient {c}")));
    }
    Ok(c.to_integer())
}

fn stable_from<T: PartialEq>(
    rows: &[StabilizationRow],
    pick: impl Fn(&StabilizationRow) -> &T,
) -> u32 {
    let mut i = rows.len() - 1;
    while i > 0 && pick(&rows[i - 1]) == pick(&rows[i]) {
        i -= 1;
    }
    rows[i].n
}

/// Low and top coefficients of `A_{Q_n,α}` for `n_from ≤ n ≤ n_to`.
pub fn stabilization_study(
    q: &Quiver,
    alpha: &DimVector,
    n_from: u32,
    n_to: u32,
    k: u32,
) -> Result<StabilizationReport> {
    if n_from == 0 || n_from > n_to {
        return Err(Error::input(format!(
            "bad multiplicity range {n_from}..={n_to}"
        )));
    }
    let rows = (n_from..=n_to)
        .map(|n| {
            let kac = kac_polynomial(&q.multiply_edges(n)?, alpha)?;
            let low = (0..=i64::from(k))
                .map(|e| integer_coeff(&kac, e))
                .collect::<Result<Vec<_>>>()?;
            let top = match kac.degree() {
                Ok(d) => (0..=i64::from(k))
                    .map(|j| integer_coeff(&kac, d - j))
                    .collect::<Result<Vec<_>>>()?,
                Err(_) => vec![BigInt::zero(); k as usize + 1],
            };
            Ok(StabilizationRow { n, kac, low, top })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilizationReport {
        k,
        low_stable_from: stable_from(&rows, |r| &r.low),
        top_stable_from: stable_from(&rows, |r| &r.top),
        rows,
    })
}

/// Value of `A_α` at an integer `q`, as an integer.
pub fn eval_integer(p: &LaurentPolynomial, q: u32) -> Result<i64> {
    let v = p.eval_at(&integer(i64::from(q)))?;
    if !v.is_integer() {
        return Err(Error::inconsistent(format!("non-integral value {v}")));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::inconsistent("value overflows i64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(c: &[u32]) -> DimVector {
        DimVector::new(c.to_vec())
    }

    fn p(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(c)
    }

    fn dp(blocks: &[&[&[u32]]]) -> DoublePartition {
        DoublePartition::new(
            blocks
                .iter()
                .map(|b| OrderedPartition::new(b.iter().map(|d| dv(d)).collect()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn term_examples() {
        for n in 1..6 {
            let k = Quiver::kronecker(n);
            let trivial = dp(&[&[&[1, 1]]]);
            assert_eq!(
                term_value(&k, &trivial).unwrap(),
                LaurentPolynomial::monomial(integer(1), i64::from(n))
            );
            let split = dp(&[&[&[1, 0]], &[&[0, 1]]]);
            assert_eq!(
                term_value(&k, &split).unwrap(),
                LaurentPolynomial::monomial(rational(-1, 2), 0)
            );
        }
        // A_(1) = 1 on a point: term −1, then (q−1)(−1)/(1−q) = 1
        let pt = dp(&[&[&[1]]]);
        assert_eq!(term_value(&Quiver::point(), &pt).unwrap(), p(&[-1]));
        assert_eq!(
            kac_polynomial(&Quiver::point(), &dv(&[1])).unwrap(),
            p(&[1])
        );
    }

    #[test]
    fn lemma_quotient_instance() {
        // φ_(2,1) / (φ_(1,1) φ_(1,0)) = 1 + q
        let den = &phi_vec(&dv(&[1, 1])) * &phi_vec(&dv(&[1, 0]));
        assert_eq!(phi_vec(&dv(&[2, 1])).exact_div(&den).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn bucket_key_examples() {
        let theta = Stability::new(vec![1, -1]);
        let split = dp(&[&[&[1, 0]], &[&[0, 1]]]);
        assert_eq!(
            bucket_key(&split, &theta).unwrap(),
            BucketKey::Hn(HnType::new(vec![dv(&[1, 0]), dv(&[0, 1])]).unwrap())
        );
        let reversed = dp(&[&[&[0, 1]], &[&[1, 0]]]);
        assert_eq!(
            bucket_key(&reversed, &theta).unwrap(),
            bucket_key(&split, &theta).unwrap()
        );
        assert_eq!(
            bucket_key(&dp(&[&[&[1, 1]]]), &theta).unwrap(),
            BucketKey::Hn(HnType::new(vec![dv(&[1, 1])]).unwrap())
        );
        let tied = dp(&[&[&[1, 0], &[1, 0]], &[&[0, 1]]]);
        assert_eq!(
            bucket_key(&tied, &Stability::new(vec![1, -2])).unwrap(),
            BucketKey::Tied(vec![dv(&[1, 0]), dv(&[1, 0]), dv(&[0, 1])])
        );
    }

    #[test]
    fn kronecker_decomposition() {
        for n in [1u32, 2, 3, 7] {
            let k = Quiver::kronecker(n);
            let r =
                stratified_decomposition(&k, &dv(&[1, 1]), &Stability::new(vec![1, -1])).unwrap();
            assert_eq!(r.buckets.len(), 2);
            assert_eq!(
                r.hn_bucket(&[&[1, 1]]).unwrap().polynomial,
                LaurentPolynomial::monomial(integer(1), n.into())
            );
            assert_eq!(
                r.hn_bucket(&[&[1, 0], &[0, 1]]).unwrap().polynomial,
                p(&[-1])
            );
            let l_alpha =
                b_exponent(&dv(&[1, 1])) - k.euler_form(&dv(&[1, 1]), &dv(&[1, 1])).unwrap();
            assert_eq!(r.checks[0].l_alpha, l_alpha);
            assert!(r.checks.iter().all(|c| c.holds));
        }
    }

    #[test]
    fn tied_buckets_appear() {
        let r = stratified_decomposition(
            &Quiver::kronecker(2),
            &dv(&[2, 1]),
            &Stability::new(vec![1, -2]),
        )
        .unwrap();
        assert!(r
            .bucket(&BucketKey::Tied(vec![
                dv(&[1, 0]),
                dv(&[1, 0]),
                dv(&[0, 1])
            ]))
            .is_some());
    }

    #[test]
    fn small_kac_polynomials() {
        assert_eq!(
            kac_polynomial(&Quiver::kronecker(1), &dv(&[1, 1])).unwrap(),
            p(&[1])
        );
        assert!(kac_polynomial(&Quiver::kronecker(1), &dv(&[2, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            kac_polynomial(&Quiver::kronecker(2), &dv(&[2, 1])).unwrap(),
            p(&[1])
        );
        assert_eq!(
            kac_polynomial(&Quiver::kronecker(3), &dv(&[2, 1])).unwrap(),
            p(&[1, 1, 1])
        );
        for m in 1..6 {
            let expected = p(&vec![1; m as usize]);
            assert_eq!(
                kac_polynomial(&Quiver::kronecker(m), &dv(&[1, 1])).unwrap(),
                expected
            );
        }
        assert!(matches!(
            kac_polynomial(&Quiver::kronecker(2), &dv(&[2, 2])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn stabilization_examples() {
        let r = stabilization_study(&Quiver::kronecker(1), &dv(&[1, 1]), 1, 8, 3).unwrap();
        assert_eq!(r.low_stable_from, 4);
        assert_eq!(r.top_stable_from, 4);
        for row in r.rows.iter().filter(|r| r.n >= 4) {
            assert!(row.low.iter().all(|c| c == &BigInt::one()));
        }
        let r = stabilization_study(&Quiver::point(), &dv(&[1]), 1, 3, 2).unwrap();
        assert_eq!(r.low_stable_from, 1);
        assert!(stabilization_study(&Quiver::point(), &dv(&[1]), 3, 2, 2).is_err());
    }

    #[test]
    fn shift_independence_small() {
        let r = verify_bucket_shift(
            &Quiver::kronecker(1),
            &dv(&[1, 1]),
            &Stability::new(vec![1, -1]),
            3,
            7,
        )
        .unwrap();
        assert!(r.hn_buckets_agree());
        let trivial = &r
            .rows
            .iter()
            .find(|row| matches!(&row.key, BucketKey::Hn(t) if t.is_trivial()))
            .unwrap();
        assert_eq!((trivial.degree_n1, trivial.degree_n2), (Some(3), Some(7)));
        assert!(!trivial.unshifted_equal);
    }
}
