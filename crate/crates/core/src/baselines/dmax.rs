//! Exact maximum linear arrangement by branch and bound.
//!
//! Positions are filled left to right. `D` equals the sum over the `n - 1`
//! gaps of the number of edges crossing each gap, so a prefix fixes the
//! crossings of its own gaps and bounds the rest. Pruning rules:
//!
//! - an arrangement and its reverse have the same `D`: only arrangements
//!   whose first vertex has a smaller id than the last are completed;
//! - leaves of a common parent are interchangeable: they are placed in
//!   increasing id order;
//! - two leaves with different parents whose exchange would lengthen their
//!   two edges cannot both stay put in a maximum arrangement;
//! - `D_max >= D_rla` (or `D_max >= n(n-1)/2` when configured), so the
//!   search starts with that value as the bar to reach;
//! - the crossings of the remaining gaps depend only on which vertices
//!   the prefix holds, so a prefix strictly shorter than an earlier prefix
//!   over the same vertex set cannot lead to a maximum.

use std::collections::HashMap;

use crate::arrangement::LinearArrangement;
use crate::tree::FreeTree;

use super::{BaselineError, DMaxOptions};

struct Search<'a> {
    tree: &'a FreeTree,
    n: usize,
    deg: Vec<u64>,
    /// Parent of each leaf, `usize::MAX` for internal vertices.
    leaf_parent: Vec<usize>,
    /// Previous sibling leaf in id order, `usize::MAX` if none.
    prev_sibling: Vec<usize>,
    leaf_children: Vec<Vec<usize>>,
    pos: Vec<usize>,
    order: Vec<usize>,
    best: u64,
    best_order: Option<Vec<usize>>,
    /// Longest prefix seen per vertex set, for trees of at most 64 vertices.
    seen: Option<HashMap<u64, u64>>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(tree: &'a FreeTree, bar: u64) -> Self {
        let n = tree.n();
        let deg: Vec<u64> = (0..n).map(|v| tree.degree(v) as u64).collect();
        let mut leaf_parent = vec![usize::MAX; n];
        let mut leaf_children = vec![Vec::new(); n];
        for v in 0..n {
            if tree.degree(v) == 1 {
                let p = tree.neighbors(v)[0];
                leaf_parent[v] = p;
                leaf_children[p].push(v);
            }
        }
        let mut prev_sibling = vec![usize::MAX; n];
        for children in &leaf_children {
            for w in children.windows(2) {
                prev_sibling[w[1]] = w[0];
            }
        }
        Search {
            tree,
            n,
            deg,
            leaf_parent,
            prev_sibling,
            leaf_children,
            pos: vec![0; n],
            order: Vec::with_capacity(n),
            best: bar.saturating_sub(1),
            best_order: None,
            seen: (n <= 64).then(HashMap::new),
            nodes: 0,
        }
    }

    fn upper_bound_rest(&self, cut: u64) -> u64 {
        let m = self.order.len();
        let mut full: Vec<u64> = Vec::with_capacity(self.n - m);
        let mut inner: Vec<u64> = Vec::with_capacity(self.n - m);
        for v in 0..self.n {
            if self.pos[v] == 0 {
                full.push(self.deg[v]);
                inner.push(self.tree.neighbors(v).iter().filter(|&&w| self.pos[w] == 0).count() as u64);
            }
        }
        full.sort_unstable_by(|a, b| b.cmp(a));
        inner.sort_unstable_by(|a, b| b.cmp(a));
        let mut prefix_full = vec![0u64; full.len() + 1];
        let mut prefix_inner = vec![0u64; inner.len() + 1];
        for i in 0..full.len() {
            prefix_full[i + 1] = prefix_full[i] + full[i];
            prefix_inner[i + 1] = prefix_inner[i] + inner[i];
        }
        let mut total = 0;
        for gap in m + 1..self.n {
            let right = self.n - gap;
            let added = gap - m;
            total += prefix_full[right].min(cut + prefix_inner[added]);
        }
        total
    }

    fn leaf_swap_violated(&self, x: usize) -> bool {
        let mut candidates: Vec<usize> = Vec::new();
        if self.leaf_parent[x] != usize::MAX && self.pos[self.leaf_parent[x]] != 0 {
            candidates.push(x);
        }
        for &l in &self.leaf_children[x] {
            if self.pos[l] != 0 {
                candidates.push(l);
            }
        }
        for &a in &candidates {
            let pa = self.leaf_parent[a];
            for b in 0..self.n {
                let pb = self.leaf_parent[b];
                if b == a || pb == usize::MAX || pb == pa || self.pos[b] == 0 || self.pos[pb] == 0 {
                    continue;
                }
                let now = self.pos[pa].abs_diff(self.pos[a]) + self.pos[pb].abs_diff(self.pos[b]);
                let swapped = self.pos[pa].abs_diff(self.pos[b]) + self.pos[pb].abs_diff(self.pos[a]);
                if swapped > now {
                    return true;
                }
            }
        }
        false
    }

    fn place(&mut self, cut: u64, acc: u64, set: u64) {
        self.nodes += 1;
        let m = self.order.len();
        if m == self.n {
            if self.order[0] < self.order[self.n - 1] && acc > self.best {
                self.best = acc;
                self.best_order = Some(self.order.clone());
            }
            return;
        }
        if acc + self.upper_bound_rest(cut) <= self.best {
            return;
        }
        if let Some(seen) = &mut self.seen {
            let longest = seen.entry(set).or_insert(acc);
            if acc < *longest {
                return;
            }
            *longest = acc;
        }
        let mut candidates: Vec<usize> = (0..self.n).filter(|&v| self.pos[v] == 0).collect();
        candidates.sort_by(|&a, &b| self.deg[b].cmp(&self.deg[a]).then(a.cmp(&b)));
        for v in candidates {
            let prev = self.prev_sibling[v];
            if prev != usize::MAX && self.pos[prev] == 0 {
                continue;
            }
            let into_prefix = self.tree.neighbors(v).iter().filter(|&&w| self.pos[w] != 0).count() as u64;
            let new_cut = cut + self.deg[v] - 2 * into_prefix;
            self.pos[v] = m + 1;
            self.order.push(v);
            if !self.leaf_swap_violated(v) {
                let set = if self.seen.is_some() { set | 1 << v } else { 0 };
                self.place(new_cut, acc + new_cut, set);
            }
            self.order.pop();
            self.pos[v] = 0;
        }
    }
}

/// Exact `D_max` with a witness arrangement.
pub fn d_max_exact(t: &FreeTree, opts: &DMaxOptions) -> Result<(u64, LinearArrangement), BaselineError> {
    let n = t.n();
    if n > opts.cap {
        return Err(BaselineError::TooLarge { n, cap: opts.cap });
    }
    if n <= 2 {
        return Ok((n as u64 - 1, LinearArrangement::identity(n)));
    }
    let nn = n as u64;
    let bar = if opts.binomial_bound {
        nn * (nn - 1) / 2
    } else {
        // ceil((n^2 - 1) / 3)
        (nn * nn - 1).div_ceil(3)
    };
    let mut search = Search::new(t, bar);
    search.place(0, 0, 0);
    let order = search.best_order.expect("some arrangement reaches D_rla");
    let arrangement = LinearArrangement::from_order(&order).expect("search yields a permutation");
    Ok((search.best, arrangement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{enumerate_arrangements, sum_edge_lengths};

    #[test]
    fn small_known_values() {
        let opts = DMaxOptions::default();
        assert_eq!(d_max_exact(&FreeTree::path(4), &opts).unwrap().0, 7);
        assert_eq!(d_max_exact(&FreeTree::star(5), &opts).unwrap().0, 10);
        assert_eq!(d_max_exact(&FreeTree::path(2), &opts).unwrap().0, 1);
        assert_eq!(d_max_exact(&FreeTree::path(1), &opts).unwrap().0, 0);
    }

    #[test]
    fn witness_and_cap() {
        let t = FreeTree::from_heads(&[2, 4, 4, 0, 7, 7, 4]).unwrap();
        let (d, a) = d_max_exact(&t, &DMaxOptions::default()).unwrap();
        assert_eq!(sum_edge_lengths(&t, &a).unwrap(), d);
        assert_eq!(d, enumerate_arrangements(&t).unwrap().max());
        let opts = DMaxOptions { cap: 5, ..DMaxOptions::default() };
        assert!(matches!(d_max_exact(&t, &opts), Err(BaselineError::TooLarge { n: 7, cap: 5 })));
    }

    #[test]
    fn binomial_bar_gives_same_answer() {
        let opts = DMaxOptions { binomial_bound: true, ..DMaxOptions::default() };
        for t in crate::tree::generate_free_trees(8, 20).unwrap() {
            let a = d_max_exact(&t, &opts).unwrap().0;
            let b = d_max_exact(&t, &DMaxOptions::default()).unwrap().0;
            assert_eq!(a, b);
        }
    }
}
