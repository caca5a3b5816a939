//! Quivers, dimension vectors and the quadratic forms attached to them.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Index};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};

/// A nonnegative integer per vertex, in the quiver's vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(coords: Vec<u32>) -> Self {
        DimVector(coords)
    }

    pub fn zero(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    /// The simple root `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `|v|₁`, the total dimension.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn dot(&self, other: &DimVector) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum()
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &x| g.gcd(&x))
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    /// Every nonzero `u` with `0 ≤ u ≤ self`, in decreasing lexicographic order.
    pub fn nonzero_subvectors(&self) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        loop {
            if cur.iter().any(|&x| x > 0) {
                out.push(DimVector(cur.clone()));
            }
            // decrement as a mixed-radix counter, last coordinate fastest
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] > 0 {
                    cur[i] -= 1;
                    break;
                }
                cur[i] = self.0[i];
            }
        }
    }
}

impl Index<usize> for DimVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An arrow `source → target` standing for `mult` parallel copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub mult: u32,
}

/// A loop-free quiver. Parallel arrows are stored once with a multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Position of a dimension vector relative to the root system of the quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    NotRoot,
    RealRoot,
    ImaginaryRoot,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        self != RootClass::NotRoot
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::NotRoot => "not a root",
            RootClass::RealRoot => "real root",
            RootClass::ImaginaryRoot => "imaginary root",
        })
    }
}

/// Whether the hypothesis `p(α) ≥ Σ p(β⁽ᵗ⁾)` over decompositions into
/// positive roots, under which `dim μ⁻¹(0) = α·α − 1 + 2p(α)`, was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatnessCheck {
    Holds,
    Fails,
    /// `|α|₁` exceeded the configured bound.
    Unchecked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentFiberDimension {
    pub dim: i64,
    pub hypothesis: FlatnessCheck,
}

impl Quiver {
    /// Build a quiver from vertex names and `(source, target, mult)` index triples.
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize, u32)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::input(format!("duplicate vertex {v:?}")));
            }
        }
        let n = vertices.len();
        let arrows = arrows
            .into_iter()
            .map(|(source, target, mult)| {
                if source >= n || target >= n {
                    return Err(Error::input(format!(
                        "arrow {source}->{target} references an undeclared vertex"
                    )));
                }
                if source == target {
                    return Err(Error::input(format!(
                        "loop at vertex {:?}: quivers must be loop-free",
                        vertices[source]
                    )));
                }
                if mult == 0 {
                    return Err(Error::input("arrow multiplicity must be at least 1"));
                }
                Ok(Arrow {
                    source,
                    target,
                    mult,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver { vertices, arrows })
    }

    /// Build a quiver from named arrows.
    pub fn from_named(vertices: &[&str], arrows: &[(&str, &str, u32)]) -> Result<Self> {
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::input(format!("unknown vertex {name:?}")))
        };
        let arrows = arrows
            .iter()
            .map(|&(s, t, m)| Ok((index(s)?, index(t)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices.iter().map(|s| s.to_string()).collect(), arrows)
    }

    /// Single vertex, no arrows.
    pub fn point() -> Self {
        Quiver {
            vertices: vec!["1".into()],
            arrows: vec![],
        }
    }

    /// Two vertices joined by `m` parallel arrows `1 → 2`; `m = 1` is A₂.
    pub fn kronecker(m: u32) -> Self {
        assert!(m >= 1, "Kronecker quiver needs at least one arrow");
        Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow {
                source: 0,
                target: 1,
                mult: m,
            }],
        }
    }

    /// Acyclic triangle `1 → 2 → 3`, `1 → 3`.
    pub fn triangle() -> Self {
        Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow {
                    source: 0,
                    target: 1,
                    mult: 1,
                },
                Arrow {
                    source: 1,
                    target: 2,
                    mult: 1,
                },
                Arrow {
                    source: 0,
                    target: 2,
                    mult: 1,
                },
            ],
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Smallest arrow multiplicity, `None` without arrows.
    pub fn min_multiplicity(&self) -> Option<u32> {
        self.arrows.iter().map(|a| a.mult).min()
    }

    pub(crate) fn check_dim(&self, v: &DimVector) -> Result<()> {
        if v.len() != self.vertices.len() {
            return Err(Error::input(format!(
                "dimension vector {v} has {} entries, quiver has {} vertices",
                v.len(),
                self.vertices.len()
            )));
        }
        Ok(())
    }

    /// Parse a dimension vector in vertex order.
    pub fn dim(&self, coords: &[u32]) -> Result<DimVector> {
        let v = DimVector::new(coords.to_vec());
        self.check_dim(&v)?;
        Ok(v)
    }

    fn arrow_sum(&self, v: &DimVector, w: &DimVector) -> i64 {
        self.arrows
            .iter()
            .map(|a| i64::from(a.mult) * i64::from(v[a.source]) * i64::from(w[a.target]))
            .sum()
    }

    /// Euler form `⟨v,w⟩ = Σ v_i w_i − Σ_arrows v_s w_t`, arrows with multiplicity.
    pub fn euler_form(&self, v: &DimVector, w: &DimVector) -> Result<i64> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(v.dot(w) - self.arrow_sum(v, w))
    }

    /// Symmetrized form `(v,w) = ⟨v,w⟩ + ⟨w,v⟩`.
    pub fn sym_euler_form(&self, v: &DimVector, w: &DimVector) -> Result<i64> {
        Ok(self.euler_form(v, w)? + self.euler_form(w, v)?)
    }

    /// Every arrow together with its reverse.
    pub fn double(&self) -> Quiver {
        let mut arrows = self.arrows.clone();
        arrows.extend(self.arrows.iter().map(|a| Arrow {
            source: a.target,
            target: a.source,
            mult: a.mult,
        }));
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
        }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    source: a.target,
                    target: a.source,
                    mult: a.mult,
                })
                .collect(),
        }
    }

    /// Multiply every arrow multiplicity by `factor`.
    pub fn multiply_edges(&self, factor: u32) -> Result<Quiver> {
        self.multiply_edges_by(&vec![factor; self.arrows.len()])
    }

    /// Multiply arrow `k`'s multiplicity by `factors[k]`.
    pub fn multiply_edges_by(&self, factors: &[u32]) -> Result<Quiver> {
        if factors.len() != self.arrows.len() {
            return Err(Error::input(format!(
                "{} edge factors given for {} arrows",
                factors.len(),
                self.arrows.len()
            )));
        }
        if factors.contains(&0) {
            return Err(Error::input(
                "edge multiplication factor must be at least 1",
            ));
        }
        let arrows = self
            .arrows
            .iter()
            .zip(factors)
            .map(|(a, &f)| {
                let mult = a
                    .mult
                    .checked_mul(f)
                    .ok_or_else(|| Error::input("arrow multiplicity overflow"))?;
                Ok(Arrow { mult, ..*a })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver {
            vertices: self.vertices.clone(),
            arrows,
        })
    }

    /// Arrows as a multiset: total multiplicity per ordered vertex pair.
    pub fn arrow_multiset(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for a in &self.arrows {
            *out.entry((a.source, a.target)).or_insert(0) += u64::from(a.mult);
        }
        out
    }

    /// `(α, e_i)` for the symmetrized form.
    fn pairing_with_simple(&self, alpha: &[i64], i: usize) -> i64 {
        let mut s = 2 * alpha[i];
        for a in &self.arrows {
            let m = i64::from(a.mult);
            if a.source == i {
                s -= m * alpha[a.target];
            }
            if a.target == i {
                s -= m * alpha[a.source];
            }
        }
        s
    }

    fn support_connected(&self, alpha: &[i64]) -> bool {
        let support: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] != 0).collect();
        let Some(&start) = support.first() else {
            return false;
        };
        let mut seen = vec![false; alpha.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arrows {
                let next = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if alpha[next] != 0 && !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        support.iter().all(|&i| seen[i])
    }

    /// Classify a positive vector as a real root, an imaginary root or neither.
    ///
    /// Reflects `α ← α − (α,e_i)e_i` at the least vertex with positive
    /// pairing until `α` is simple (real), lies in the fundamental region
    /// (imaginary), or leaves the positive cone or has disconnected support
    /// (not a root). Each reflection strictly lowers the height.
    pub fn classify_root(&self, alpha: &DimVector) -> Result<RootClass> {
        self.check_dim(alpha)?;
        if alpha.is_zero() {
            return Err(Error::input("root classification needs a nonzero vector"));
        }
        let mut v: Vec<i64> = alpha.coords().iter().map(|&x| i64::from(x)).collect();
        loop {
            if !self.support_connected(&v) {
                return Ok(RootClass::NotRoot);
            }
            if v.iter().sum::<i64>() == 1 {
                return Ok(RootClass::RealRoot);
            }
            let pos = (0..v.len())
                .filter(|&i| v[i] != 0)
                .find(|&i| self.pairing_with_simple(&v, i) > 0);
            let Some(i) = pos else {
                return Ok(RootClass::ImaginaryRoot);
            };
            v[i] -= self.pairing_with_simple(&v, i);
            if v[i] < 0 {
                return Ok(RootClass::NotRoot);
            }
        }
    }

    /// Tits form `p(α) = 1 − ⟨α,α⟩`.
    pub fn tits_p(&self, alpha: &DimVector) -> Result<i64> {
        Ok(1 - self.euler_form(alpha, alpha)?)
    }

    /// `dim Rep(Q,α) = Σ_arrows mult·α_s·α_t`.
    pub fn dim_rep(&self, alpha: &DimVector) -> Result<i64> {
        self.check_dim(alpha)?;
        Ok(self.arrow_sum(alpha, alpha))
    }

    /// `α·α + 1 − 2⟨α,α⟩`, the expected dimension of the moment-map zero fiber.
    pub fn dim_mu_zero(&self, alpha: &DimVector) -> Result<i64> {
        Ok(alpha.dot(alpha) + 1 - 2 * self.euler_form(alpha, alpha)?)
    }

    /// [`Quiver::dim_mu_zero`] together with a check of its flatness hypothesis,
    /// run over all decompositions into positive roots when `|α|₁` is within
    /// the guard.
    pub fn moment_fiber_dimension(
        &self,
        alpha: &DimVector,
        guards: &Guards,
    ) -> Result<MomentFiberDimension> {
        let dim = self.dim_mu_zero(alpha)?;
        let hypothesis = if alpha.is_zero() || alpha.weight() > guards.root_check_weight {
            FlatnessCheck::Unchecked
        } else {
            let best = self.max_root_decomposition_p(alpha)?;
            if self.tits_p(alpha)? >= best {
                FlatnessCheck::Holds
            } else {
                FlatnessCheck::Fails
            }
        };
        Ok(MomentFiberDimension { dim, hypothesis })
    }

    /// max over decompositions `α = Σ β⁽ᵗ⁾` into positive roots of `Σ p(β⁽ᵗ⁾)`.
    fn max_root_decomposition_p(&self, alpha: &DimVector) -> Result<i64> {
        let subs = alpha.nonzero_subvectors();
        let mut roots = Vec::new();
        for b in &subs {
            if self.classify_root(b)?.is_root() {
                roots.push((b.clone(), self.tits_p(b)?));
            }
        }
        // sub-vectors in increasing lexicographic order, so every β ≤ v with
        // v − β nonzero is already solved
        let mut best: HashMap<DimVector, i64> = HashMap::new();
        best.insert(DimVector::zero(alpha.len()), 0);
        for v in subs.iter().rev() {
            let value = roots
                .iter()
                .filter_map(|(b, p)| {
                    let rest = v.checked_sub(b)?;
                    best.get(&rest).map(|r| r + p)
                })
                .max()
                .ok_or_else(|| Error::inconsistent(format!("{v} has no root decomposition")))?;
            best.insert(v.clone(), value);
        }
        Ok(best[alpha])
    }

    /// Coordinates of `α` have gcd 1.
    pub fn is_indivisible(alpha: &DimVector) -> Result<bool> {
        if alpha.is_zero() {
            return Err(Error::input(
                "indivisibility is undefined for the zero vector",
            ));
        }
        Ok(alpha.gcd() == 1)
    }
}
