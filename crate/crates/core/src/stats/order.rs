use std::collections::BTreeSet;
use std::fmt::Write;

use super::multiple::{holm_adjust, replace_zero_pvalues, DEFAULT_EPSILON};
use super::StatsError;

/// One-sided p-value for the unordered pair `{low, high}` testing whether
/// `high` (the larger sample mean) is significantly larger than `low`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairTest {
    pub low: usize,
    pub high: usize,
    pub p: f64,
}

#[derive(Debug, Clone)]
pub struct OrderOptions {
    pub level: f64,
    pub holm: bool,
    /// Replicate count of the tests, for zero replacement.
    pub replicates: u64,
    pub epsilon: f64,
}

impl Default for OrderOptions {
    fn default() -> Self {
        OrderOptions { level: 0.05, holm: true, replicates: 100_000, epsilon: DEFAULT_EPSILON }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub low: usize,
    pub high: usize,
    pub p_raw: f64,
    /// After zero replacement and, if enabled, Holm's correction.
    pub p_adjusted: f64,
    pub significant: bool,
}

/// The strict partial order "`x < y`: `<Omega>_x` significantly below
/// `<Omega>_y`", as arcs `y -> x`, and its Hasse diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct RankResult {
    pub languages: Vec<String>,
    pub means: Vec<f64>,
    pub pairs: Vec<PairOutcome>,
    /// `(from, to)` with `from` the more optimized language.
    pub arcs: Vec<(usize, usize)>,
    pub reduced: Vec<(usize, usize)>,
    /// Triples `(a, b, c)` with arcs `a -> b -> c` but no arc `a -> c`.
    pub violations: Vec<(usize, usize, usize)>,
}

impl RankResult {
    pub fn is_transitive(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Adjusts the pairwise p-values jointly and keeps the pairs with adjusted
/// `p <= level`.
pub fn build_partial_order(
    languages: &[String],
    means: &[f64],
    tests: &[PairTest],
    opts: &OrderOptions,
) -> Result<RankResult, StatsError> {
    let l = languages.len();
    if means.len() != l {
        return Err(StatsError::InconsistentInput(format!("{l} languages but {} means", means.len())));
    }
    let mut seen = BTreeSet::new();
    for t in tests {
        if t.low >= l || t.high >= l || t.low == t.high {
            return Err(StatsError::InconsistentInput(format!("bad pair ({}, {})", t.low, t.high)));
        }
        if means[t.low] > means[t.high] {
            return Err(StatsError::InconsistentInput(format!(
                "pair ({}, {}) oriented against the means",
                languages[t.low], languages[t.high]
            )));
        }
        if !seen.insert((t.low.min(t.high), t.low.max(t.high))) {
            return Err(StatsError::InconsistentInput(format!(
                "pair ({}, {}) tested twice",
                languages[t.low], languages[t.high]
            )));
        }
        if !(0.0..=1.0).contains(&t.p) {
            return Err(StatsError::InconsistentInput(format!("p-value {} outside [0, 1]", t.p)));
        }
    }

    let raw: Vec<f64> = tests.iter().map(|t| t.p).collect();
    let replaced = replace_zero_pvalues(&raw, opts.replicates, opts.epsilon);
    let adjusted = if opts.holm { holm_adjust(&replaced) } else { replaced };
    let pairs: Vec<PairOutcome> = tests
        .iter()
        .zip(adjusted)
        .map(|(t, q)| PairOutcome { low: t.low, high: t.high, p_raw: t.p, p_adjusted: q, significant: q <= opts.level })
        .collect();
    let mut arcs: Vec<(usize, usize)> = pairs.iter().filter(|p| p.significant).map(|p| (p.high, p.low)).collect();
    arcs.sort_unstable();

    let arc_set: BTreeSet<(usize, usize)> = arcs.iter().copied().collect();
    let mut violations = Vec::new();
    for &(a, b) in &arcs {
        for &(b2, c) in arc_set.range((b, 0)..(b + 1, 0)) {
            debug_assert_eq!(b2, b);
            if a != c && !arc_set.contains(&(a, c)) {
                violations.push((a, b, c));
            }
        }
    }
    let reduced = transitive_reduction(l, &arcs)?;
    Ok(RankResult { languages: languages.to_vec(), means: means.to_vec(), pairs, arcs, reduced, violations })
}

/// Bitset rows.
struct Bits {
    words: usize,
    data: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Bits { words, data: vec![0; n * words] }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn or_row(&mut self, dst: usize, src: usize) {
        for w in 0..self.words {
            let v = self.data[src * self.words + w];
            self.data[dst * self.words + w] |= v;
        }
    }
}

fn topological_order(n: usize, succ: &[Vec<usize>]) -> Result<Vec<usize>, StatsError> {
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &v in s {
            indeg[v] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(v);
            }
        }
    }
    if order.len() != n {
        return Err(StatsError::CycleDetected);
    }
    Ok(order)
}

fn successors(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, StatsError> {
    let mut succ = vec![Vec::new(); n];
    for &(u, v) in arcs {
        if u >= n || v >= n {
            return Err(StatsError::InconsistentInput(format!("arc ({u}, {v}) outside {n} vertices")));
        }
        if u == v {
            return Err(StatsError::CycleDetected);
        }
        succ[u].push(v);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    Ok(succ)
}

fn closure(n: usize, succ: &[Vec<usize>]) -> Result<Bits, StatsError> {
    let order = topological_order(n, succ)?;
    let mut reach = Bits::new(n);
    for &u in order.iter().rev() {
        for &v in &succ[u] {
            reach.set(u, v);
            reach.or_row(u, v);
        }
    }
    Ok(reach)
}

/// `reach[u][v]`: `v` can be reached from `u` by one or more arcs.
pub fn reachability(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<Vec<bool>>, StatsError> {
    let succ = successors(n, arcs)?;
    let reach = closure(n, &succ)?;
    Ok((0..n).map(|u| (0..n).map(|v| reach.get(u, v)).collect()).collect())
}

/// The unique smallest arc set of a DAG with the same reachability, sorted.
pub fn transitive_reduction(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, StatsError> {
    let succ = successors(n, arcs)?;
    let reach = closure(n, &succ)?;
    let mut out = Vec::new();
    for u in 0..n {
        for &v in &succ[u] {
            let implied = succ[u].iter().any(|&w| w != v && reach.get(w, v));
            if !implied {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// Hasse diagram in DOT. Nodes are listed by decreasing mean, then name;
/// arcs follow the node order.
pub fn to_dot(result: &RankResult, reduced: bool) -> String {
    let mut nodes: Vec<usize> = (0..result.languages.len()).collect();
    nodes.sort_by(|&a, &b| {
        result.means[b].total_cmp(&result.means[a]).then_with(|| result.languages[a].cmp(&result.languages[b]))
    });
    let mut rank = vec![0; nodes.len()];
    for (i, &v) in nodes.iter().enumerate() {
        rank[v] = i;
    }
    let mut arcs = if reduced { result.reduced.clone() } else { result.arcs.clone() };
    arcs.sort_by_key(|&(u, v)| (rank[u], rank[v]));

    let quote = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
    let mut out = String::from("digraph hasse {\n");
    for &v in &nodes {
        let name = quote(&result.languages[v]);
        let _ = writeln!(out, "  \"{name}\" [label=\"{name}\\n⟨Ω⟩={:.4}\"];", result.means[v]);
    }
    for (u, v) in arcs {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", quote(&result.languages[u]), quote(&result.languages[v]));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("L{i}")).collect()
    }

    #[test]
    fn textbook_reduction() {
        assert_eq!(transitive_reduction(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(transitive_reduction(3, &[(0, 1), (1, 2)]).unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(transitive_reduction(2, &[(0, 1), (1, 0)]), Err(StatsError::CycleDetected));
        assert_eq!(transitive_reduction(2, &[(1, 1)]), Err(StatsError::CycleDetected));
    }

    #[test]
    fn three_significant_pairs_form_a_chain() {
        let tests = vec![
            PairTest { low: 0, high: 1, p: 0.0 },
            PairTest { low: 0, high: 2, p: 0.0 },
            PairTest { low: 1, high: 2, p: 0.001 },
        ];
        let res = build_partial_order(&names(3), &[0.1, 0.2, 0.3], &tests, &OrderOptions::default()).unwrap();
        assert_eq!(res.arcs.len(), 3);
        assert!(res.is_transitive());
        assert_eq!(res.reduced, vec![(1, 0), (2, 1)]);
        let dot = to_dot(&res, true);
        assert!(dot.starts_with("digraph hasse {\n  \"L2\" [label=\"L2\\n⟨Ω⟩=0.3000\"];"));
        assert!(dot.contains("\"L2\" -> \"L1\";\n  \"L1\" -> \"L0\";"));
    }

    #[test]
    fn nothing_significant() {
        let tests = vec![PairTest { low: 0, high: 1, p: 0.4 }];
        let res = build_partial_order(&names(2), &[0.5, 0.5], &tests, &OrderOptions::default()).unwrap();
        assert!(res.arcs.is_empty() && res.reduced.is_empty());
    }

    #[test]
    fn holm_changes_decisions() {
        let tests = vec![PairTest { low: 0, high: 1, p: 0.03 }, PairTest { low: 1, high: 2, p: 0.04 }];
        let means = [0.1, 0.2, 0.3];
        let with = build_partial_order(&names(3), &means, &tests, &OrderOptions::default()).unwrap();
        assert!(with.arcs.is_empty());
        let without =
            build_partial_order(&names(3), &means, &tests, &OrderOptions { holm: false, ..Default::default() })
                .unwrap();
        assert_eq!(without.arcs, vec![(1, 0), (2, 1)]);
        assert_eq!(without.violations, vec![(2, 1, 0)]);
    }

    #[test]
    fn input_validation() {
        let opts = OrderOptions::default();
        let bad = [PairTest { low: 1, high: 0, p: 0.1 }];
        assert!(build_partial_order(&names(2), &[0.1, 0.2], &bad, &opts).is_err());
        let dup = [PairTest { low: 0, high: 1, p: 0.1 }, PairTest { low: 0, high: 1, p: 0.2 }];
        assert!(build_partial_order(&names(2), &[0.1, 0.2], &dup, &opts).is_err());
    }
}
