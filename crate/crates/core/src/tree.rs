//! Unrooted trees.
//!
//! Vertices are 0-based inside the crate. External formats (CoNLL-U, head
//! vectors, the internal corpus file) are 1-based and converted at the edge.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::Rational;

mod generate;

pub use generate::{generate_free_trees, FreeTrees, DEFAULT_GENERATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a tree of {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph contains a cycle")]
    CycleDetected,
    #[error("tree size {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// A validated unrooted tree, optionally carrying the syntactic root.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    root: Option<usize>,
}

impl fmt::Debug for FreeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeTree").field("n", &self.n).field("edges", &self.edges).field("root", &self.root).finish()
    }
}

impl FreeTree {
    /// Validates `edges` as a tree on `n` vertices.
    ///
    /// Checks run in this order: vertex range, self-loops, duplicates, too
    /// few edges, connectivity, cycles.
    pub fn new(n: usize, edges: &[(usize, usize)], root: Option<usize>) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(TreeError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push(key);
        }
        if let Some(r) = root {
            if r >= n {
                return Err(TreeError::VertexOutOfRange { vertex: r, n });
            }
        }
        if edges.len() < n - 1 {
            return Err(TreeError::WrongEdgeCount { expected: n - 1, found: edges.len() });
        }
        let mut visited = vec![false; n];
        let mut stack = vec![0];
        visited[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached < n {
            return Err(TreeError::NotConnected);
        }
        if edges.len() > n - 1 {
            return Err(TreeError::CycleDetected);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(FreeTree { n, edges: normalized, adj, root })
    }

    /// Builds a tree from a 1-based head vector (`0` marks the root).
    pub fn from_heads(heads: &[usize]) -> Result<Self, TreeError> {
        let n = heads.len();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut root = None;
        for (i, &h) in heads.iter().enumerate() {
            if h == 0 {
                if root.is_some() {
                    // a second root leaves the graph disconnected
                    return Err(TreeError::NotConnected);
                }
                root = Some(i);
            } else {
                if h > n {
                    return Err(TreeError::VertexOutOfRange { vertex: h - 1, n });
                }
                edges.push((h - 1, i));
            }
        }
        if root.is_none() {
            return Err(TreeError::CycleDetected);
        }
        FreeTree::new(n, &edges, root)
    }

    /// 1-based head vector of the tree oriented away from `root`.
    pub fn to_heads(&self, root: usize) -> Vec<usize> {
        let mut heads = vec![0; self.n];
        let mut stack = vec![(root, usize::MAX)];
        while let Some((u, parent)) = stack.pop() {
            for &w in &self.adj[u] {
                if w != parent {
                    heads[w] = u + 1;
                    stack.push((w, u));
                }
            }
        }
        heads
    }

    /// The same tree with vertex `v` renamed `positions[v] - 1`, root
    /// included. With an arrangement's positions this yields the tree whose
    /// identity order is that arrangement.
    pub fn relabel(&self, positions: &[usize]) -> Self {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (positions[u] - 1, positions[v] - 1)).collect();
        FreeTree::new(self.n, &edges, self.root.map(|r| positions[r] - 1)).expect("relabelling keeps a tree")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FreeTree::new(n, &edges, None).expect("path is a tree")
    }

    /// Star with hub 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        FreeTree::new(n, &edges, None).expect("star is a tree")
    }

    /// Bistar on `n` vertices whose larger hub (vertex 0) has degree `k1`.
    /// The other hub is vertex 1.
    pub fn bistar(n: usize, k1: usize) -> Result<Self, TreeError> {
        if n < 2 || k1 < 1 || k1 >= n {
            return Err(TreeError::WrongEdgeCount { expected: n.saturating_sub(1), found: k1 });
        }
        let mut edges = vec![(0, 1)];
        let mut next = 2;
        for _ in 1..k1 {
            edges.push((0, next));
            next += 1;
        }
        while next < n {
            edges.push((1, next));
            next += 1;
        }
        FreeTree::new(n, &edges, None)
    }

    /// k-quasistar: hub 0 with `k` pendant 2-paths and `l` direct leaves.
    pub fn k_quasistar(k: usize, l: usize) -> Self {
        let n = 2 * k + l + 1;
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for _ in 0..k {
            edges.push((0, next));
            edges.push((next, next + 1));
            next += 2;
        }
        for _ in 0..l {
            edges.push((0, next));
            next += 1;
        }
        FreeTree::new(n, &edges, None).expect("k-quasistar is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: Option<usize>) -> Result<Self, TreeError> {
        if let Some(r) = root {
            if r >= self.n {
                return Err(TreeError::VertexOutOfRange { vertex: r, n: self.n });
            }
        }
        self.root = root;
        Ok(self)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// `<k^2>`, the second moment of vertex degrees about zero.
    pub fn degree_second_moment(&self) -> Rational {
        let sum: i128 = self.adj.iter().map(|a| (a.len() * a.len()) as i128).sum();
        Rational::new(sum, self.n as i128)
    }

    /// Number of unordered pairs of edges sharing a vertex.
    pub fn incident_edge_pairs(&self) -> u64 {
        self.adj
            .iter()
            .map(|a| {
                let d = a.len() as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }

    /// Centroid vertices (one or two), sorted.
    pub fn centroids(&self) -> Vec<usize> {
        let n = self.n;
        let (order, parent) = self.dfs_order(0);
        let mut size = vec![1usize; n];
        for &u in order.iter().rev() {
            if parent[u] != usize::MAX {
                size[parent[u]] += size[u];
            }
        }
        let mut out = Vec::new();
        for u in 0..n {
            let mut largest = n - size[u];
            for &w in &self.adj[u] {
                if w != parent[u] {
                    largest = largest.max(size[w]);
                }
            }
            if 2 * largest <= n {
                out.push(u);
            }
        }
        out
    }

    /// Preorder and parent array of the tree rooted at `root`.
    pub(crate) fn dfs_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut stack = vec![root];
        let mut visited = vec![false; self.n];
        visited[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Isomorphism-invariant encoding: the smaller AHU string over the
    /// centroids. Two trees are isomorphic iff their canonical forms match.
    pub fn canonical_form(&self) -> String {
        self.centroids().into_iter().map(|c| self.rooted_encoding(c)).min().expect("every tree has a centroid")
    }

    fn rooted_encoding(&self, root: usize) -> String {
        let (order, parent) = self.dfs_order(root);
        let mut codes: Vec<String> = vec![String::new(); self.n];
        for &u in order.iter().rev() {
            let mut children: Vec<String> =
                self.adj[u].iter().filter(|&&w| w != parent[u]).map(|&w| std::mem::take(&mut codes[w])).collect();
            children.sort_unstable();
            let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
            code.push('(');
            for c in &children {
                code.push_str(c);
            }
            code.push(')');
            codes[u] = code;
        }
        std::mem::take(&mut codes[root])
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }
}

/// Uniformly random labelled tree on `n` vertices, from a random Prüfer
/// sequence. The tree carries no root.
pub fn random_tree<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> FreeTree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n <= 2 {
        return FreeTree::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = leaves.pop_first().expect("a leaf remains");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    FreeTree::new(n, &edges, None).expect("Prüfer decoding yields a tree")
}

/// Special tree families with closed-form arrangement extremes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeClass {
    Linear,
    Star,
    /// Two adjacent hubs cover every edge; `k1` is the larger hub degree.
    Bistar {
        k1: usize,
    },
    Caterpillar,
    /// Hub with `k` pendant 2-paths and `l` leaves; `n = 2k + l + 1`.
    KQuasistar {
        k: usize,
        l: usize,
    },
    General,
}

impl TreeClass {
    fn priority(&self) -> u8 {
        match self {
            TreeClass::Star => 0,
            TreeClass::Linear => 1,
            TreeClass::Bistar { .. } => 2,
            TreeClass::KQuasistar { .. } => 3,
            TreeClass::Caterpillar => 4,
            TreeClass::General => 5,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TreeClass::Linear => "linear",
            TreeClass::Star => "star",
            TreeClass::Bistar { .. } => "bistar",
            TreeClass::Caterpillar => "caterpillar",
            TreeClass::KQuasistar { .. } => "k-quasistar",
            TreeClass::General => "general",
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeClass::Bistar { k1 } => write!(f, "bistar(k1={k1})"),
            TreeClass::KQuasistar { k, l } => write!(f, "k-quasistar(k={k},l={l})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Result of [`classify`]: the most specific class plus every match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub primary: TreeClass,
    pub all: Vec<TreeClass>,
}

impl Classification {
    pub fn is(&self, pred: impl Fn(&TreeClass) -> bool) -> bool {
        self.all.iter().any(pred)
    }

    pub fn bistar_k1(&self) -> Option<usize> {
        self.all.iter().find_map(|c| match c {
            TreeClass::Bistar { k1 } => Some(*k1),
            _ => None,
        })
    }

    pub fn k_quasistar(&self) -> Option<(usize, usize)> {
        self.all.iter().find_map(|c| match c {
            TreeClass::KQuasistar { k, l } => Some((*k, *l)),
            _ => None,
        })
    }
}

/// Detects every special family the tree belongs to. For `n <= 3` linear
/// and star trees coincide and `Star` is reported as primary.
pub fn classify(t: &FreeTree) -> Classification {
    let n = t.n();
    let deg = t.degrees();
    let mut all = Vec::new();

    let max_deg = deg.iter().copied().max().unwrap_or(0);
    if n <= 2 || max_deg == n - 1 {
        all.push(TreeClass::Star);
    }
    if max_deg <= 2 {
        all.push(TreeClass::Linear);
    }
    if n >= 2 {
        if let Some(k1) =
            t.edges().iter().filter(|&&(u, v)| deg[u] + deg[v] == n).map(|&(u, v)| deg[u].max(deg[v])).max()
        {
            all.push(TreeClass::Bistar { k1 });
        }
    }
    if let Some((k, l)) = k_quasistar_shape(t, &deg) {
        all.push(TreeClass::KQuasistar { k, l });
    }
    if is_caterpillar(t, &deg) {
        all.push(TreeClass::Caterpillar);
    }
    if all.is_empty() {
        all.push(TreeClass::General);
    }
    all.sort_by_key(TreeClass::priority);
    Classification { primary: all[0], all }
}

/// Finds a hub whose neighbours are leaves or degree-2 vertices ending in
/// a leaf. The highest-degree hub is chosen; ties go to the lower id.
fn k_quasistar_shape(t: &FreeTree, deg: &[usize]) -> Option<(usize, usize)> {
    let n = t.n();
    if n == 1 {
        return Some((0, 0));
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for h in 0..n {
        let mut k = 0;
        let mut l = 0;
        let mut ok = true;
        for &w in t.neighbors(h) {
            match deg[w] {
                1 => l += 1,
                2 => {
                    let other = t.neighbors(w).iter().copied().find(|&x| x != h).unwrap();
                    if deg[other] == 1 {
                        k += 1;
                    } else {
                        ok = false;
                        break;
                    }
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && 2 * k + l + 1 == n && best.is_none_or(|(bd, _, _)| deg[h] > bd) {
            best = Some((deg[h], k, l));
        }
    }
    best.map(|(_, k, l)| (k, l))
}

/// Removing every leaf leaves a path (possibly empty or a single vertex).
fn is_caterpillar(t: &FreeTree, deg: &[usize]) -> bool {
    let n = t.n();
    if n <= 2 {
        return true;
    }
    let spine: Vec<usize> = (0..n).filter(|&v| deg[v] > 1).collect();
    spine.iter().all(|&v| t.neighbors(v).iter().filter(|&&w| deg[w] > 1).count() <= 2)
}
