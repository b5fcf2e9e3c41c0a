//! Exact unconstrained minimum linear arrangement of a tree.
//!
//! Recursive decomposition in the style of Shiloach and Chung. A subtree is
//! arranged either *free* or *anchored*: an anchored subtree has one extra
//! edge leaving its anchor vertex towards the left boundary, and its cost
//! counts the vertices that edge crosses. For a root `r` with branches
//! sorted by decreasing size, an optimal layout places the `s` largest
//! branches alternately on both sides of `r`, each anchored towards `r`,
//! largest outermost, with the remaining tree (`r` plus the smaller
//! branches) in the middle. When both sides carry the same number of edges
//! towards `r` the middle is arranged free; with one more on the left it is
//! anchored to the left. Free subtrees are rooted at a centroid; the anchor
//! of an anchored subtree is fixed. Every `s` is tried and subproblems are
//! memoized on their vertex sets.

use std::collections::HashMap;

use crate::arrangement::LinearArrangement;
use crate::tree::FreeTree;

const FREE: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Plan {
    cost: u64,
    root: u32,
    sides: u32,
}

type Key = (u32, Vec<u32>);

struct Solver<'a> {
    tree: &'a FreeTree,
    memo: HashMap<Key, Plan>,
    stamp: Vec<u32>,
    generation: u32,
}

struct Parts {
    /// Branches of the root inside the subproblem, largest first.
    branches: Vec<Vec<u32>>,
}

impl<'a> Solver<'a> {
    fn new(tree: &'a FreeTree) -> Self {
        Solver { tree, memo: HashMap::new(), stamp: vec![0; tree.n()], generation: 0 }
    }

    fn mark(&mut self, verts: &[u32]) -> u32 {
        self.generation += 1;
        let g = self.generation;
        for &v in verts {
            self.stamp[v as usize] = g;
        }
        g
    }

    fn centroid(&mut self, verts: &[u32]) -> u32 {
        let g = self.mark(verts);
        let m = verts.len();
        let start = verts[0] as usize;
        let mut order = Vec::with_capacity(m);
        let mut parent = HashMap::with_capacity(m);
        parent.insert(start, usize::MAX);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in self.tree.neighbors(u) {
                if self.stamp[w] == g && !parent.contains_key(&w) {
                    parent.insert(w, u);
                    stack.push(w);
                }
            }
        }
        let mut size: HashMap<usize, usize> = order.iter().map(|&u| (u, 1)).collect();
        for &u in order.iter().rev() {
            let p = parent[&u];
            if p != usize::MAX {
                let s = size[&u];
                *size.get_mut(&p).unwrap() += s;
            }
        }
        let mut best = None;
        for &u in verts {
            let u = u as usize;
            let mut largest = m - size[&u];
            for &w in self.tree.neighbors(u) {
                if self.stamp[w] == g && parent.get(&w) == Some(&u) {
                    largest = largest.max(size[&w]);
                }
            }
            if 2 * largest <= m {
                best = Some(u as u32);
                break;
            }
        }
        best.expect("a centroid exists")
    }

    fn parts(&mut self, root: u32, verts: &[u32]) -> Parts {
        let g = self.mark(verts);
        let r = root as usize;
        self.stamp[r] = 0;
        let mut branches = Vec::new();
        for &c in self.tree.neighbors(r) {
            if self.stamp[c] != g {
                continue;
            }
            let mut comp = vec![c as u32];
            self.stamp[c] = 0;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i] as usize;
                for &w in self.tree.neighbors(u) {
                    if self.stamp[w] == g {
                        self.stamp[w] = 0;
                        comp.push(w as u32);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            branches.push((c as u32, comp));
        }
        branches.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
        Parts { branches: branches.into_iter().map(|(_, comp)| comp).collect() }
    }

    /// Anchor of a branch: its vertex adjacent to the parent root.
    fn branch_anchor(&self, root: u32, branch: &[u32]) -> u32 {
        *branch
            .iter()
            .find(|&&v| self.tree.neighbors(v as usize).contains(&(root as usize)))
            .expect("branch touches its root")
    }

    fn solve(&mut self, anchor: u32, verts: Vec<u32>) -> u64 {
        if verts.len() == 1 {
            return 0;
        }
        let key = (anchor, verts);
        if let Some(plan) = self.memo.get(&key) {
            return plan.cost;
        }
        let verts = key.1;
        let anchored = anchor != FREE;
        let root = if anchored { anchor } else { self.centroid(&verts) };
        let parts = self.parts(root, &verts);
        let k = parts.branches.len();

        let mut branch_costs = Vec::with_capacity(k);
        for b in &parts.branches {
            let a = self.branch_anchor(root, b);
            branch_costs.push(self.solve(a, b.clone()));
        }

        let mut best: Option<Plan> = None;
        for s in 0..=k {
            if s == 0 {
                // s = 0 is the subproblem itself
                continue;
            }
            let (mut cost, left_heavy) = side_cost(&parts, &branch_costs, s, anchored);
            let mut rest = vec![root];
            for b in &parts.branches[s..] {
                rest.extend_from_slice(b);
            }
            rest.sort_unstable();
            let m = rest.len() as u64;
            let per_side = if anchored { s.div_ceil(2) } else { s / 2 } as u64;
            cost += per_side * (m - 1);
            cost += if left_heavy { self.solve(root, rest) } else { self.solve(FREE, rest) };
            if best.is_none_or(|p| cost < p.cost) {
                best = Some(Plan { cost, root, sides: s as u32 });
            }
        }
        let plan = best.expect("non-trivial subproblem has branches");
        self.memo.insert((anchor, verts), plan);
        plan.cost
    }

    /// Vertices of the subproblem in arrangement order (anchor side left).
    fn layout(&mut self, anchor: u32, verts: Vec<u32>) -> Vec<u32> {
        if verts.len() == 1 {
            return verts;
        }
        let plan = *self.memo.get(&(anchor, verts.clone())).expect("solved before layout");
        let anchored = anchor != FREE;
        let parts = self.parts(plan.root, &verts);
        let s = plan.sides as usize;
        let (left, right) = assign_sides(s, anchored);

        let mut out = Vec::with_capacity(verts.len());
        for &i in &left {
            let b = &parts.branches[i];
            let a = self.branch_anchor(plan.root, b);
            let mut sub = self.layout(a, b.clone());
            sub.reverse();
            out.extend(sub);
        }
        let mut rest = vec![plan.root];
        for b in &parts.branches[s..] {
            rest.extend_from_slice(b);
        }
        rest.sort_unstable();
        let left_heavy = if anchored { s.is_multiple_of(2) } else { s % 2 == 1 };
        let central = if left_heavy { self.layout(plan.root, rest) } else { self.layout(FREE, rest) };
        out.extend(central);
        for &i in right.iter().rev() {
            let b = &parts.branches[i];
            let a = self.branch_anchor(plan.root, b);
            out.extend(self.layout(a, b.clone()));
        }
        out
    }
}

/// Branch indices for the left and right sides, outermost first. In the
/// anchored case the anchor edge already occupies the outermost left slot.
fn assign_sides(s: usize, anchored: bool) -> (Vec<usize>, Vec<usize>) {
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for i in 0..s {
        if (i % 2 == 0) != anchored {
            left.push(i);
        } else {
            right.push(i);
        }
    }
    (left, right)
}

/// Cost of the side branches and their edges to the root, excluding the
/// middle part. Also reports whether the left carries one edge more.
fn side_cost(parts: &Parts, branch_costs: &[u64], s: usize, anchored: bool) -> (u64, bool) {
    let (left, right) = assign_sides(s, anchored);
    let mut cost = 0u64;
    for side in [&left, &right] {
        for (depth, &i) in side.iter().enumerate() {
            cost += branch_costs[i] + 1 + parts.branches[i].len() as u64 * depth as u64;
        }
    }
    if anchored {
        cost += left.iter().map(|&i| parts.branches[i].len() as u64).sum::<u64>();
    }
    let left_edges = left.len() + anchored as usize;
    (cost, left_edges == right.len() + 1)
}

/// Minimum `D` over all arrangements of `t`, with a witness arrangement.
pub fn d_min_exact(t: &FreeTree) -> (u64, LinearArrangement) {
    let n = t.n();
    if n == 1 {
        return (0, LinearArrangement::identity(1));
    }
    let mut solver = Solver::new(t);
    let all: Vec<u32> = (0..n as u32).collect();
    let cost = solver.solve(FREE, all.clone());
    let order: Vec<usize> = solver.layout(FREE, all).into_iter().map(|v| v as usize).collect();
    let arrangement = LinearArrangement::from_order(&order).expect("layout is a permutation");
    (cost, arrangement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::sum_edge_lengths;

    #[test]
    fn witness_matches_cost() {
        let t = FreeTree::from_heads(&[2, 4, 4, 0, 7, 7, 4]).unwrap();
        let (d, a) = d_min_exact(&t);
        assert_eq!(d, 8);
        assert_eq!(sum_edge_lengths(&t, &a).unwrap(), 8);
    }

    #[test]
    fn paths_and_stars() {
        for n in 1..30 {
            assert_eq!(d_min_exact(&FreeTree::path(n)).0, n as u64 - 1);
            assert_eq!(d_min_exact(&FreeTree::star(n)).0, (n * n / 4) as u64);
        }
    }
}
