//! Vector compositions, ordered partitions and double partitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::DimVector;

/// A componentwise weakly decreasing chain `d¹ ≥ d² ≥ … ≥ dˢ` of nonzero
/// vectors. Equal consecutive parts are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedPartition {
    parts: Vec<DimVector>,
}

impl OrderedPartition {
    pub fn new(parts: Vec<DimVector>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::input("ordered partition needs at least one part"));
        }
        if parts.iter().any(DimVector::is_zero) {
            return Err(Error::input("ordered partition parts must be nonzero"));
        }
        if parts.windows(2).any(|w| !w[1].le(&w[0])) {
            return Err(Error::input("ordered partition parts must weakly decrease"));
        }
        Ok(OrderedPartition { parts })
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    pub fn total(&self) -> DimVector {
        let mut acc = DimVector::zero(self.parts[0].len());
        for p in &self.parts {
            acc = &acc + p;
        }
        acc
    }

    /// Successive differences `dᵏ − dᵏ⁺¹`, with `dˢ⁺¹ = 0`.
    pub fn differences(&self) -> Vec<DimVector> {
        let zero = DimVector::zero(self.parts[0].len());
        self.parts
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let next = self.parts.get(k + 1).unwrap_or(&zero);
                d.checked_sub(next).expect("parts weakly decrease")
            })
            .collect()
    }
}

/// A composition `α = α¹ + … + αˡ` together with an ordered partition of
/// each `αⁱ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DoublePartition {
    composition: Vec<DimVector>,
    refinements: Vec<OrderedPartition>,
}

impl DoublePartition {
    pub fn new(refinements: Vec<OrderedPartition>) -> Result<Self> {
        if refinements.is_empty() {
            return Err(Error::input("double partition needs at least one block"));
        }
        let composition = refinements.iter().map(OrderedPartition::total).collect();
        Ok(DoublePartition {
            composition,
            refinements,
        })
    }

    pub fn composition(&self) -> &[DimVector] {
        &self.composition
    }

    pub fn refinements(&self) -> &[OrderedPartition] {
        &self.refinements
    }

    /// Number of blocks `l`.
    pub fn blocks(&self) -> usize {
        self.composition.len()
    }

    pub fn total(&self) -> DimVector {
        let mut acc = DimVector::zero(self.composition[0].len());
        for p in &self.composition {
            acc = &acc + p;
        }
        acc
    }

    /// Every `d^{i,k}`, block by block.
    pub fn flat_parts(&self) -> impl Iterator<Item = &DimVector> + '_ {
        self.refinements.iter().flat_map(|r| r.parts.iter())
    }
}

/// Ordered partitions of `β`, first parts in decreasing lexicographic order.
pub fn enumerate_ordered_partitions(beta: &DimVector) -> Result<Vec<OrderedPartition>> {
    if beta.is_zero() {
        return Err(Error::input("ordered partitions need a nonzero vector"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    chains_below(beta, None, &mut prefix, &mut |parts| {
        out.push(OrderedPartition {
            parts: parts.to_vec(),
        })
    });
    Ok(out)
}

fn chains_below(
    rest: &DimVector,
    cap: Option<&DimVector>,
    prefix: &mut Vec<DimVector>,
    emit: &mut dyn FnMut(&[DimVector]),
) {
    if rest.is_zero() {
        emit(prefix);
        return;
    }
    for part in rest.nonzero_subvectors() {
        if cap.is_some_and(|c| !part.le(c)) {
            continue;
        }
        let remaining = rest.checked_sub(&part).expect("sub-vector");
        prefix.push(part);
        let cap = prefix.last().cloned();
        chains_below(&remaining, cap.as_ref(), prefix, emit);
        prefix.pop();
    }
}

/// All ordered tuples of nonzero vectors summing to `α`.
pub fn enumerate_compositions(alpha: &DimVector) -> Result<Vec<Vec<DimVector>>> {
    if alpha.is_zero() {
        return Err(Error::input("compositions need a nonzero vector"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    compositions_into(alpha, &mut prefix, &mut out);
    Ok(out)
}

fn compositions_into(rest: &DimVector, prefix: &mut Vec<DimVector>, out: &mut Vec<Vec<DimVector>>) {
    if rest.is_zero() {
        out.push(prefix.clone());
        return;
    }
    for part in rest.nonzero_subvectors() {
        let remaining = rest.checked_sub(&part).expect("sub-vector");
        prefix.push(part);
        compositions_into(&remaining, prefix, out);
        prefix.pop();
    }
}

/// Ordered partitions of every nonzero `β ≤ α`, computed once.
pub(crate) struct PartitionTable {
    table: HashMap<DimVector, Vec<OrderedPartition>>,
}

impl PartitionTable {
    pub(crate) fn new(alpha: &DimVector) -> Self {
        let table = alpha
            .nonzero_subvectors()
            .into_iter()
            .map(|b| {
                let parts = enumerate_ordered_partitions(&b).expect("nonzero");
                (b, parts)
            })
            .collect();
        PartitionTable { table }
    }

    pub(crate) fn get(&self, beta: &DimVector) -> &[OrderedPartition] {
        &self.table[beta]
    }

    /// Double partitions refining one composition, in odometer order.
    pub(crate) fn refinements_of(&self, composition: &[DimVector]) -> Vec<DoublePartition> {
        let lists: Vec<&[OrderedPartition]> = composition.iter().map(|b| self.get(b)).collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; lists.len()];
        loop {
            let refinements = idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect();
            out.push(DoublePartition {
                composition: composition.to_vec(),
                refinements,
            });
            let mut k = lists.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(c: &[u32]) -> DimVector {
        DimVector::new(c.to_vec())
    }

    fn op(parts: &[&[u32]]) -> OrderedPartition {
        OrderedPartition::new(parts.iter().map(|p| dv(p)).collect()).unwrap()
    }

    #[test]
    fn ordered_partition_examples() {
        assert_eq!(
            enumerate_ordered_partitions(&dv(&[1, 1])).unwrap(),
            vec![op(&[&[1, 1]])]
        );
        assert_eq!(
            enumerate_ordered_partitions(&dv(&[2])).unwrap(),
            vec![op(&[&[2]]), op(&[&[1], &[1]])]
        );
        let ps = enumerate_ordered_partitions(&dv(&[3, 2])).unwrap();
        for expected in [
            op(&[&[2, 1], &[1, 1]]),
            op(&[&[2, 2], &[1, 0]]),
            op(&[&[3, 1], &[0, 1]]),
            op(&[&[1, 1], &[1, 1], &[1, 0]]),
            op(&[&[3, 2]]),
        ] {
            assert!(ps.contains(&expected), "{expected:?}");
        }
        assert!(!ps
            .iter()
            .any(|p| p.parts().contains(&dv(&[0, 1])) && p.parts().contains(&dv(&[1, 0]))));
        assert!(enumerate_ordered_partitions(&dv(&[0, 0])).is_err());
    }

    #[test]
    fn ordered_partition_validation() {
        assert!(OrderedPartition::new(vec![dv(&[1, 0]), dv(&[0, 1])]).is_err());
        assert!(OrderedPartition::new(vec![]).is_err());
        assert!(OrderedPartition::new(vec![dv(&[1, 1]), dv(&[0, 0])]).is_err());
        assert_eq!(
            op(&[&[2, 1], &[1, 1]]).differences(),
            vec![dv(&[1, 0]), dv(&[1, 1])]
        );
    }

    /// f(v) = Σ_{0<u≤v} f(v − u), f(0) = 1.
    fn composition_count(v: &DimVector) -> usize {
        if v.is_zero() {
            return 1;
        }
        v.nonzero_subvectors()
            .iter()
            .map(|u| composition_count(&v.checked_sub(u).unwrap()))
            .sum()
    }

    #[test]
    fn composition_examples() {
        let c = enumerate_compositions(&dv(&[1, 1])).unwrap();
        assert_eq!(
            c,
            vec![
                vec![dv(&[1, 1])],
                vec![dv(&[1, 0]), dv(&[0, 1])],
                vec![dv(&[0, 1]), dv(&[1, 0])]
            ]
        );
        assert_eq!(enumerate_compositions(&dv(&[3, 2])).unwrap().len(), 76);
        assert_eq!(
            enumerate_compositions(&dv(&[0, 1, 0])).unwrap(),
            vec![vec![dv(&[0, 1, 0])]]
        );
        for v in dv(&[3, 2, 1]).nonzero_subvectors() {
            assert_eq!(
                enumerate_compositions(&v).unwrap().len(),
                composition_count(&v)
            );
        }
    }

    #[test]
    fn ordered_partitions_are_chains_summing_to_total() {
        for beta in dv(&[3, 3]).nonzero_subvectors() {
            let ps = enumerate_ordered_partitions(&beta).unwrap();
            let unique: std::collections::HashSet<_> = ps.iter().collect();
            assert_eq!(unique.len(), ps.len());
            for p in &ps {
                assert_eq!(p.total(), beta);
                assert!(p.parts().windows(2).all(|w| w[1].le(&w[0])));
            }
        }
        // single vertex: ordered partitions of (n) are integer partitions of n
        let counts: Vec<usize> = (1..8)
            .map(|n| enumerate_ordered_partitions(&dv(&[n])).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
    }
}
