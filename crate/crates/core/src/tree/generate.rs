//! Constant-amortized-time generation of unlabelled free trees
//! (Wright, Richmond, Odlyzko and McKay), driven by canonical level
//! sequences of trees rooted at their centre.

use super::{FreeTree, TreeError};

pub const DEFAULT_GENERATION_CAP: usize = 20;

/// Streams one representative of every isomorphism class of free trees on
/// `n` vertices. `n` must lie in `1..=cap`.
pub fn generate_free_trees(n: usize, cap: usize) -> Result<FreeTrees, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    if n > cap {
        return Err(TreeError::CapExceeded { n, cap });
    }
    Ok(FreeTrees::new(n))
}

pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        let layout = if n <= 2 {
            Some((0..n).collect())
        } else {
            // path rooted at its centre
            let mut l: Vec<usize> = (0..=n / 2).collect();
            l.extend(1..n.div_ceil(2));
            Some(l)
        };
        FreeTrees { n, layout }
    }
}

impl Iterator for FreeTrees {
    type Item = FreeTree;

    fn next(&mut self) -> Option<FreeTree> {
        let current = self.layout.take()?;
        if self.n <= 2 {
            return Some(layout_to_tree(&current));
        }
        let candidate = next_tree(current)?;
        let tree = layout_to_tree(&candidate);
        self.layout = next_rooted_tree(&candidate, None);
        Some(tree)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted up by one) and the remainder with the root kept.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|&(_, &lvl)| lvl == 1).nth(1).map(|(i, _)| i).unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut new_candidate = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&new_candidate);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = new_candidate.len();
        let suffix_len = new_left_height + 1;
        for (offset, level) in (1..=suffix_len).enumerate() {
            new_candidate[len - suffix_len + offset] = level;
        }
    }
    Some(new_candidate)
}

fn layout_to_tree(layout: &[usize]) -> FreeTree {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    FreeTree::new(layout.len(), &edges, None).expect("level sequence encodes a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    // OEIS A000055, n = 1..=16
    const FREE_TREE_COUNTS: [usize; 16] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];

    #[test]
    fn counts_match_known_sequence() {
        for (i, &expected) in FREE_TREE_COUNTS.iter().enumerate() {
            let n = i + 1;
            let count = generate_free_trees(n, DEFAULT_GENERATION_CAP).unwrap().count();
            assert_eq!(count, expected, "n = {n}");
        }
    }

    #[test]
    fn small_sizes() {
        let four: Vec<_> = generate_free_trees(4, 20).unwrap().collect();
        assert_eq!(four.len(), 2);
        let max_degrees: HashSet<usize> = four.iter().map(|t| t.degrees().into_iter().max().unwrap()).collect();
        assert_eq!(max_degrees, HashSet::from([2, 3]));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            generate_free_trees(21, DEFAULT_GENERATION_CAP),
            Err(TreeError::CapExceeded { n: 21, cap: 20 })
        ));
        assert!(generate_free_trees(0, 20).is_err());
    }

    /// Every labelled tree on n vertices via Prüfer sequences; the number of
    /// distinct canonical forms among them is the free tree count.
    fn labelled_tree_classes(n: usize) -> HashSet<String> {
        let mut classes = HashSet::new();
        if n <= 2 {
            classes.insert(FreeTree::path(n).canonical_form());
            return classes;
        }
        let total = n.pow((n - 2) as u32);
        for code in 0..total {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            let mut degree = vec![1usize; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            classes.insert(FreeTree::new(n, &edges, None).unwrap().canonical_form());
        }
        classes
    }

    #[test]
    fn generated_trees_are_pairwise_non_isomorphic_and_complete() {
        for n in 1..=8 {
            let generated: Vec<String> = generate_free_trees(n, 20).unwrap().map(|t| t.canonical_form()).collect();
            let unique: HashSet<String> = generated.iter().cloned().collect();
            assert_eq!(unique.len(), generated.len(), "duplicates at n = {n}");
            assert_eq!(unique, labelled_tree_classes(n), "n = {n}");
        }
    }

    #[test]
    fn no_duplicates_up_to_ten() {
        for n in 9..=10 {
            let forms: HashSet<String> = generate_free_trees(n, 20).unwrap().map(|t| t.canonical_form()).collect();
            assert_eq!(forms.len(), FREE_TREE_COUNTS[n - 1]);
        }
    }
}
