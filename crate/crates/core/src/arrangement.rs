//! Linear arrangements and the sum of edge lengths `D`.

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::tree::FreeTree;
use crate::Rational;

/// Largest tree accepted by [`enumerate_arrangements`] (10! arrangements).
pub const ENUMERATION_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("arrangement has {arrangement} positions but the tree has {tree} vertices")]
    SizeMismatch { tree: usize, arrangement: usize },
    #[error("positions are not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("exhaustive enumeration limited to n <= {cap}, got {n}")]
    TooLarge { n: usize, cap: usize },
}

/// Bijection from vertices to positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearArrangement {
    positions: Vec<usize>,
}

impl LinearArrangement {
    /// Vertex `v` at position `v + 1`: the word order of a parsed sentence.
    pub fn identity(n: usize) -> Self {
        LinearArrangement { positions: (1..=n).collect() }
    }

    /// `positions[v]` is the 1-based position of vertex `v`.
    pub fn from_positions(positions: Vec<usize>) -> Result<Self, ArrangementError> {
        let n = positions.len();
        let mut seen = vec![false; n + 1];
        for &p in &positions {
            if p == 0 || p > n || seen[p] {
                return Err(ArrangementError::NotPermutation(n));
            }
            seen[p] = true;
        }
        Ok(LinearArrangement { positions })
    }

    /// `order[i]` is the vertex placed at position `i + 1`.
    pub fn from_order(order: &[usize]) -> Result<Self, ArrangementError> {
        let n = order.len();
        let mut positions = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || positions[v] != 0 {
                return Err(ArrangementError::NotPermutation(n));
            }
            positions[v] = i + 1;
        }
        Ok(LinearArrangement { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Vertices listed by position.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.positions.len()];
        for (v, &p) in self.positions.iter().enumerate() {
            order[p - 1] = v;
        }
        order
    }

    pub fn reversed(&self) -> Self {
        let n = self.positions.len();
        LinearArrangement { positions: self.positions.iter().map(|&p| n + 1 - p).collect() }
    }
}

/// `D = sum over edges of |pi(u) - pi(v)|`.
pub fn sum_edge_lengths(t: &FreeTree, a: &LinearArrangement) -> Result<u64, ArrangementError> {
    if t.n() != a.len() {
        return Err(ArrangementError::SizeMismatch { tree: t.n(), arrangement: a.len() });
    }
    Ok(sum_edge_lengths_unchecked(t, a.positions()))
}

pub(crate) fn sum_edge_lengths_unchecked(t: &FreeTree, positions: &[usize]) -> u64 {
    t.edges().iter().map(|&(u, v)| positions[u].abs_diff(positions[v]) as u64).sum()
}

/// Uniformly random arrangement by Durstenfeld's shuffle.
pub fn shuffle_arrangement<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LinearArrangement {
    let mut positions: Vec<usize> = (1..=n).collect();
    durstenfeld(&mut positions, rng);
    LinearArrangement { positions }
}

pub(crate) fn durstenfeld<T, R: Rng + ?Sized>(items: &mut [T], rng: &mut R) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}

/// Exact distribution of `D` over all `n!` arrangements of a tree.
#[derive(Debug, Clone)]
pub struct DDistribution {
    pub n: usize,
    pub counts: BTreeMap<u64, u64>,
    pub argmin: LinearArrangement,
    pub argmax: LinearArrangement,
}

impl DDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min(&self) -> u64 {
        *self.counts.keys().next().expect("non-empty distribution")
    }

    pub fn max(&self) -> u64 {
        *self.counts.keys().next_back().expect("non-empty distribution")
    }

    pub fn mean(&self) -> Rational {
        let total = self.total() as i128;
        let sum: i128 = self.counts.iter().map(|(&d, &c)| d as i128 * c as i128).sum();
        Rational::new(sum, total)
    }

    pub fn variance(&self) -> Rational {
        let total = self.total() as i128;
        let sum_sq: i128 = self.counts.iter().map(|(&d, &c)| (d as i128).pow(2) * c as i128).sum();
        let mean = self.mean();
        Rational::new(sum_sq, total) - mean * mean
    }
}

/// Walks all `n!` arrangements with Heap's algorithm, updating `D`
/// incrementally after each swap.
pub fn enumerate_arrangements(t: &FreeTree) -> Result<DDistribution, ArrangementError> {
    let n = t.n();
    if n > ENUMERATION_CAP {
        return Err(ArrangementError::TooLarge { n, cap: ENUMERATION_CAP });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (1..=n).collect();
    let mut d = sum_edge_lengths_unchecked(t, &pos) as i64;

    let mut counts = BTreeMap::new();
    let mut best_min = (d, pos.clone());
    let mut best_max = (d, pos.clone());
    *counts.entry(d as u64).or_insert(0u64) += 1;

    let local = |pos: &[usize], a: usize, b: usize| -> i64 {
        let mut s = 0i64;
        for &w in t.neighbors(a) {
            s += pos[a].abs_diff(pos[w]) as i64;
        }
        for &w in t.neighbors(b) {
            if w != a {
                s += pos[b].abs_diff(pos[w]) as i64;
            }
        }
        s
    };

    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            let (a, b) = (order[j], order[i]);
            let before = local(&pos, a, b);
            order.swap(j, i);
            pos.swap(a, b);
            d += local(&pos, a, b) - before;
            *counts.entry(d as u64).or_insert(0) += 1;
            if d < best_min.0 {
                best_min = (d, pos.clone());
            }
            if d > best_max.0 {
                best_max = (d, pos.clone());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    Ok(DDistribution {
        n,
        counts,
        argmin: LinearArrangement { positions: best_min.1 },
        argmax: LinearArrangement { positions: best_max.1 },
    })
}
