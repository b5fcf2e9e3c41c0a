//! How low `Omega` can go: `Omega_min` of a tree and its minimum `alpha(n)`
//! over all trees of `n` vertices.

use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::LinearArrangement;
use crate::baselines::{
    d_max_balanced_bistar, d_max_bistar, d_max_exact, d_max_for, d_min_bistar, d_min_exact, expected_d_rla,
    BaselineError, DMaxOptions,
};
use crate::tree::{generate_free_trees, FreeTree, TreeClass, TreeError};
use crate::Rational;

/// Default largest `n` accepted by [`alpha_exact`].
pub const DEFAULT_EXTREMAL_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("alpha is defined for n >= 3, got {0}")]
    TooSmall(usize),
    #[error("exact alpha limited to n <= {cap}, got {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn ratio_of(d_rla: Rational, a: u64, b: u64) -> Rational {
    let a = Rational::from_integer(a as i128);
    let b = Rational::from_integer(b as i128);
    (d_rla - a) / (d_rla - b)
}

/// `Omega_min = (D_rla - D_max) / (D_rla - D_min)`.
pub fn omega_min_tree(t: &FreeTree, opts: &DMaxOptions) -> Result<Rational, ExtremalError> {
    let n = t.n();
    if n < 3 {
        return Err(ExtremalError::TooSmall(n));
    }
    let d_min = d_min_exact(t).0;
    let d_max = d_max_for(t, opts)?.0;
    Ok(ratio_of(expected_d_rla(n), d_max, d_min))
}

/// `Z_1(n) = -(5n - 8 - 5 (n mod 2)) / (n + 2 - n mod 2)`, a lower bound of
/// `Omega` for every tree of `n >= 3` vertices.
pub fn z1_lower_bound(n: usize) -> Rational {
    let m = n as i128;
    let odd = m % 2;
    Rational::new(-(5 * m - 8 - 5 * odd), m + 2 - odd)
}

/// Smallest `Omega_min` among bistars of `n` vertices and the larger hub
/// degree `k1` attaining it (the smallest such `k1` on ties).
pub fn alpha_bistar(n: usize) -> Result<(Rational, usize), ExtremalError> {
    if n < 3 {
        return Err(ExtremalError::TooSmall(n));
    }
    let d_rla = expected_d_rla(n);
    let mut best: Option<(Rational, usize)> = None;
    for k1 in n.div_ceil(2)..n {
        let value = ratio_of(d_rla, d_max_bistar(n, k1)?, d_min_bistar(n, k1)?);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, k1));
        }
    }
    Ok(best.expect("k1 range is non-empty for n >= 3"))
}

/// `Omega_min` of the path.
pub fn omega_min_linear(n: usize) -> Rational {
    ratio_of(expected_d_rla(n), crate::baselines::d_max_linear(n), n as u64 - 1)
}

/// Options of [`alpha_exact`].
#[derive(Debug, Clone)]
pub struct ExtremalOptions {
    pub cap: usize,
    pub d_max: DMaxOptions,
    /// Skip linear trees and bistars, and trees whose `Omega_lower` exceeds
    /// the bistar value. Off means every tree is evaluated in full.
    pub prune: bool,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions { cap: DEFAULT_EXTREMAL_CAP, d_max: DMaxOptions::default(), prune: true }
    }
}

#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub n: usize,
    pub alpha: Rational,
    pub witness: FreeTree,
    pub witness_class: TreeClass,
    /// Arrangement of the witness reaching its `D_max`.
    pub witness_arrangement: LinearArrangement,
    pub alpha_bistar: Rational,
    pub alpha_bistar_k1: usize,
    pub z1: Rational,
    pub trees_examined: usize,
    pub trees_pruned: usize,
}

/// Exact `alpha(n)`.
///
/// Starts from the bistar value and walks every unlabelled tree. With
/// pruning on, linear trees and bistars are skipped (neither beats the
/// bistar optimum) and so are trees whose
/// `Omega_lower = (D_rla - D_max^b-bistar) / (D_rla - D_min)` exceeds that
/// starting value, since `Omega_lower <= Omega_min`. Only the remaining
/// trees pay for an exact `D_max`. Pruning decisions use the starting value
/// only, so the result and the counts do not depend on scheduling.
pub fn alpha_exact(n: usize, opts: &ExtremalOptions) -> Result<ExtremalReport, ExtremalError> {
    if n < 3 {
        return Err(ExtremalError::TooSmall(n));
    }
    if n > opts.cap {
        return Err(ExtremalError::CapExceeded { n, cap: opts.cap });
    }
    let (a_bistar, k1) = alpha_bistar(n)?;
    let d_rla = expected_d_rla(n);
    let d_max_bb = d_max_balanced_bistar(n);

    let trees: Vec<FreeTree> = generate_free_trees(n, opts.cap.max(n))?.collect();
    let outcomes: Vec<Result<Option<Rational>, ExtremalError>> = trees
        .par_iter()
        .map(|t| {
            if opts.prune {
                let class = t.classify();
                if class.is(|c| matches!(c, TreeClass::Linear | TreeClass::Bistar { .. } | TreeClass::Star)) {
                    return Ok(None);
                }
                let d_min = d_min_exact(t).0;
                if ratio_of(d_rla, d_max_bb, d_min) > a_bistar {
                    return Ok(None);
                }
                let d_max = d_max_for(t, &opts.d_max)?.0;
                Ok(Some(ratio_of(d_rla, d_max, d_min)))
            } else {
                omega_min_tree(t, &opts.d_max).map(Some)
            }
        })
        .collect();

    let mut alpha = a_bistar;
    let mut witness = FreeTree::bistar(n, k1)?;
    let mut examined = 0;
    let mut pruned = 0;
    for (t, outcome) in trees.iter().zip(outcomes) {
        match outcome? {
            Some(value) => {
                examined += 1;
                if value < alpha {
                    alpha = value;
                    witness = t.clone();
                }
            }
            None => pruned += 1,
        }
    }
    let witness_arrangement = d_max_exact(&witness, &opts.d_max)?.1;
    Ok(ExtremalReport {
        n,
        alpha,
        witness_class: witness.classify().primary,
        witness,
        witness_arrangement,
        alpha_bistar: a_bistar,
        alpha_bistar_k1: k1,
        z1: z1_lower_bound(n),
        trees_examined: examined,
        trees_pruned: pruned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let opts = DMaxOptions::default();
        for t in generate_free_trees(3, 20).unwrap() {
            assert_eq!(omega_min_tree(&t, &opts).unwrap(), Rational::new(-1, 2));
        }
        assert_eq!(omega_min_tree(&FreeTree::path(4), &opts).unwrap(), Rational::from_integer(-1));
        assert_eq!(z1_lower_bound(3), Rational::new(-1, 2));
        assert_eq!(z1_lower_bound(4), Rational::from_integer(-2));
        assert_eq!(alpha_bistar(3).unwrap(), (Rational::new(-1, 2), 2));
        assert!(matches!(omega_min_tree(&FreeTree::path(2), &opts), Err(ExtremalError::TooSmall(2))));
    }

    #[test]
    fn bistar_optimum_at_24() {
        let (value, k1) = alpha_bistar(24).unwrap();
        assert_eq!(value, Rational::new(-613, 323));
        assert_eq!(k1, 13);
        assert_eq!(d_min_bistar(24, k1).unwrap(), 84);
        assert_eq!(d_max_bistar(24, k1).unwrap(), 396);
        assert_eq!(expected_d_rla(24), Rational::new(575, 3));
    }

    #[test]
    fn z1_tends_to_minus_five() {
        // Z1(n) = -5 + 18 / (n + 2) for even n
        let z = z1_lower_bound(1_000_000);
        assert_eq!(z, Rational::new(-5, 1) + Rational::new(18, 1_000_002));
        assert!((crate::to_f64(&z) + 5.0).abs() < 1e-4);
        for n in 3..200 {
            assert!(z1_lower_bound(n) > Rational::from_integer(-5));
        }
    }

    #[test]
    fn linear_never_beats_bistar() {
        for n in 3..=200 {
            assert!(alpha_bistar(n).unwrap().0 <= omega_min_linear(n), "n = {n}");
        }
    }

    #[test]
    fn pruned_equals_unpruned() {
        for n in 3..=9 {
            let full = alpha_exact(n, &ExtremalOptions { prune: false, ..Default::default() }).unwrap();
            let fast = alpha_exact(n, &ExtremalOptions::default()).unwrap();
            assert_eq!(full.alpha, fast.alpha, "n = {n}");
            assert!(fast.z1 <= fast.alpha && fast.alpha <= fast.alpha_bistar);
            assert_eq!(full.trees_pruned, 0);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let opts = ExtremalOptions { cap: 6, ..Default::default() };
        assert!(matches!(alpha_exact(7, &opts), Err(ExtremalError::CapExceeded { n: 7, cap: 6 })));
    }
}
