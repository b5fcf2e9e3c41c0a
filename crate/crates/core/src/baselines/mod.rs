//! Random, minimum and maximum baselines of `D`.
//!
//! Under a uniformly random arrangement each edge length has the same
//! distribution, so `E[D] = (n - 1) (n + 1) / 3`. The variance depends on
//! the tree only through how many edge pairs share a vertex:
//!
//! ```text
//! V[D] = (n - 1) V_L + 2 q_s c_s + 2 q_d c_d
//! V_L = (n + 1)(n - 2) / 18          variance of one edge length
//! c_s = (n - 8)(n + 1) / 180         covariance, edges sharing a vertex
//! c_d = -(n + 1) / 45                covariance, disjoint edges
//! q_s = sum_v C(deg v, 2),   q_d = C(n - 1, 2) - q_s
//! ```
//!
//! The three constants come from the joint distribution of the positions of
//! two and of four distinct vertices; the test suite checks the result
//! against full enumeration.

mod dmax;
mod dmin;

use thiserror::Error;

use crate::arrangement::LinearArrangement;
use crate::tree::{FreeTree, TreeClass};
use crate::Rational;

pub use dmax::d_max_exact;
pub use dmin::d_min_exact;

/// Default size limit of [`d_max_exact`].
pub const DEFAULT_DMAX_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("baseline undefined for n = {0}")]
    Degenerate(usize),
    #[error("no closed form for class {0}")]
    UnsupportedClass(TreeClass),
    #[error("exact D_max search limited to n <= {cap}, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid arguments: {0}")]
    BadArgs(String),
}

/// Options of the exact `D_max` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DMaxOptions {
    pub cap: usize,
    /// Start the search from `n(n-1)/2` instead of `D_rla`.
    pub binomial_bound: bool,
}

impl Default for DMaxOptions {
    fn default() -> Self {
        DMaxOptions { cap: DEFAULT_DMAX_CAP, binomial_bound: false }
    }
}

/// `E_rla[D] = (n^2 - 1) / 3`.
pub fn expected_d_rla(n: usize) -> Rational {
    let n = n as i128;
    Rational::new(n * n - 1, 3)
}

/// Exact variance of `D` over uniformly random arrangements.
pub fn variance_d_rla(t: &FreeTree) -> Result<Rational, BaselineError> {
    let n = t.n();
    if n < 2 {
        return Err(BaselineError::Degenerate(n));
    }
    let ni = n as i128;
    let single = Rational::new((ni + 1) * (ni - 2), 18);
    let shared = Rational::new((ni - 8) * (ni + 1), 180);
    let disjoint = Rational::new(-(ni + 1), 45);
    let q_s = t.incident_edge_pairs() as i128;
    let q_d = (ni - 1) * (ni - 2) / 2 - q_s;
    Ok(single * (ni - 1) + shared * (2 * q_s) + disjoint * (2 * q_d))
}

/// Closed-form `D_min` of linear trees and stars.
pub fn d_min_closed(class: TreeClass, n: usize) -> Result<u64, BaselineError> {
    let m = n as u64;
    match class {
        TreeClass::Linear => Ok(m.saturating_sub(1)),
        TreeClass::Star => Ok((m * m - m % 2) / 4),
        other => Err(BaselineError::UnsupportedClass(other)),
    }
}

/// `D_min` of the bistar with hub degrees `k1` and `n - k1`: each hub
/// sits in the middle of its own leaves, the hubs adjacent.
pub fn d_min_bistar(n: usize, k1: usize) -> Result<u64, BaselineError> {
    check_bistar(n, k1)?;
    let (a, b) = ((k1 + 1) as u64, (n - k1 + 1) as u64);
    Ok(a * a / 4 + b * b / 4 - 1)
}

/// `D_max` of the bistar with hub degrees `k1` and `n - k1`: the hubs sit
/// at the two ends, each hub's leaves packed towards the opposite end.
pub fn d_max_bistar(n: usize, k1: usize) -> Result<u64, BaselineError> {
    check_bistar(n, k1)?;
    let nn = n as u64;
    let fan = |k: u64| (k - 1) * nn - (k * (k + 1) / 2 - 1);
    Ok(nn - 1 + fan(k1 as u64) + fan((n - k1) as u64))
}

fn check_bistar(n: usize, k1: usize) -> Result<(), BaselineError> {
    if n < 2 || k1 == 0 || k1 >= n {
        return Err(BaselineError::BadArgs(format!("bistar needs 1 <= k1 < n, got n = {n}, k1 = {k1}")));
    }
    Ok(())
}

/// Largest `D` of a star with `m` edges placed in `z` positions: the hub
/// at one end and the leaves in the farthest positions.
pub fn d_max_star(m: usize, z: usize) -> Result<u64, BaselineError> {
    if m >= z {
        return Err(BaselineError::BadArgs(format!("star with {m} edges needs more than {m} positions, got {z}")));
    }
    let (m, z) = (m as u64, z as u64);
    Ok(m * (2 * z - m - 1) / 2)
}

/// Largest `D` of `m` independent edges in `z` positions.
pub fn d_max_one_regular(m: usize, z: usize) -> Result<u64, BaselineError> {
    if 2 * m > z {
        return Err(BaselineError::BadArgs(format!("{m} independent edges need {} positions, got {z}", 2 * m)));
    }
    Ok((m * (z - m)) as u64)
}

/// `D_max` of the balanced bistar, the largest `D_max` of any tree of `n`
/// vertices.
pub fn d_max_balanced_bistar(n: usize) -> u64 {
    let m = n as u64;
    if m < 2 {
        return 0;
    }
    (3 * (m - 1) * (m - 1) + 1 - m % 2) / 4
}

/// `D_max` of a hub with `k` pendant 2-paths and `l = n - 2k - 1` leaves.
pub fn d_max_k_quasistar(n: usize, k: usize) -> Result<u64, BaselineError> {
    if n < 2 * k + 1 {
        return Err(BaselineError::BadArgs(format!("k-quasistar with k = {k} needs n >= {}, got {n}", 2 * k + 1)));
    }
    let (n, k) = (n as u64, k as u64);
    Ok((n - 1 - k) * (3 * k + n) / 2)
}

/// `D_max` of the path: `floor(n^2 / 2) - 1`.
pub fn d_max_linear(n: usize) -> u64 {
    let m = n as u64;
    if m < 2 {
        return 0;
    }
    m * m / 2 - 1
}

/// Where a baseline value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm(TreeClass),
    Solver,
    Oracle,
}

/// Baselines of one tree.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineBundle {
    pub n: usize,
    pub d_rla: Rational,
    /// `None` for `n < 2`.
    pub v_rla: Option<Rational>,
    pub d_min: u64,
    pub d_min_source: Provenance,
    pub d_max: Option<u64>,
    pub d_max_source: Option<Provenance>,
}

impl BaselineBundle {
    /// `D_rla`, `V_rla` and `D_min`; closed forms where the class has one.
    pub fn without_d_max(t: &FreeTree) -> Self {
        let n = t.n();
        let class = t.classify();
        let (d_min, d_min_source) = if class.is(|c| *c == TreeClass::Star) {
            (d_min_closed(TreeClass::Star, n).expect("star"), Provenance::ClosedForm(TreeClass::Star))
        } else if class.is(|c| *c == TreeClass::Linear) {
            (d_min_closed(TreeClass::Linear, n).expect("linear"), Provenance::ClosedForm(TreeClass::Linear))
        } else if let Some(k1) = class.bistar_k1() {
            (d_min_bistar(n, k1).expect("valid bistar"), Provenance::ClosedForm(TreeClass::Bistar { k1 }))
        } else {
            (d_min_exact(t).0, Provenance::Solver)
        };
        BaselineBundle {
            n,
            d_rla: expected_d_rla(n),
            v_rla: variance_d_rla(t).ok(),
            d_min,
            d_min_source,
            d_max: None,
            d_max_source: None,
        }
    }

    /// All baselines including `D_max`, which is exact: a closed form for
    /// linear trees, bistars and k-quasistars, otherwise the bounded search.
    pub fn with_d_max(t: &FreeTree, opts: &DMaxOptions) -> Result<Self, BaselineError> {
        let mut b = Self::without_d_max(t);
        let (d_max, source) = d_max_for(t, opts)?;
        b.d_max = Some(d_max);
        b.d_max_source = Some(source);
        Ok(b)
    }

    pub fn sigma_rla(&self) -> Option<f64> {
        self.v_rla.map(|v| crate::to_f64(&v).sqrt())
    }
}

/// Exact `D_max` with its provenance.
pub fn d_max_for(t: &FreeTree, opts: &DMaxOptions) -> Result<(u64, Provenance), BaselineError> {
    let n = t.n();
    let class = t.classify();
    if class.is(|c| *c == TreeClass::Linear) {
        return Ok((d_max_linear(n), Provenance::ClosedForm(TreeClass::Linear)));
    }
    if let Some(k1) = class.bistar_k1() {
        return Ok((d_max_bistar(n, k1)?, Provenance::ClosedForm(TreeClass::Bistar { k1 })));
    }
    if let Some((k, l)) = class.k_quasistar() {
        return Ok((d_max_k_quasistar(n, k)?, Provenance::ClosedForm(TreeClass::KQuasistar { k, l })));
    }
    Ok((d_max_exact(t, opts)?.0, Provenance::Solver))
}

/// Witness arrangement of the minimum, always from the solver.
pub fn d_min_witness(t: &FreeTree) -> LinearArrangement {
    d_min_exact(t).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::enumerate_arrangements;
    use crate::tree::generate_free_trees;

    #[test]
    fn random_baseline_values() {
        assert_eq!(expected_d_rla(7), Rational::from_integer(16));
        assert_eq!(expected_d_rla(6), Rational::new(35, 3));
        assert_eq!(expected_d_rla(1), Rational::from_integer(0));
        assert_eq!(variance_d_rla(&FreeTree::star(3)).unwrap(), Rational::new(2, 9));
        assert_eq!(variance_d_rla(&FreeTree::path(2)).unwrap(), Rational::from_integer(0));
        assert_eq!(variance_d_rla(&FreeTree::path(1)), Err(BaselineError::Degenerate(1)));
    }

    #[test]
    fn baselines_match_enumeration() {
        let opts = DMaxOptions::default();
        for n in 2..=8 {
            for t in generate_free_trees(n, 20).unwrap() {
                let dist = enumerate_arrangements(&t).unwrap();
                assert_eq!(expected_d_rla(n), dist.mean());
                assert_eq!(variance_d_rla(&t).unwrap(), dist.variance());
                assert_eq!(d_min_exact(&t).0, dist.min());
                assert_eq!(d_max_exact(&t, &opts).unwrap().0, dist.max());
                let b = BaselineBundle::with_d_max(&t, &opts).unwrap();
                assert_eq!(b.d_min, dist.min());
                assert_eq!(b.d_max, Some(dist.max()));
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(d_min_closed(TreeClass::Star, 5), Ok(6));
        assert_eq!(d_min_closed(TreeClass::Star, 4), Ok(4));
        assert_eq!(d_min_closed(TreeClass::Linear, 7), Ok(6));
        assert!(matches!(d_min_closed(TreeClass::General, 7), Err(BaselineError::UnsupportedClass(_))));

        assert_eq!(d_max_star(4, 5), Ok(10));
        assert_eq!(d_max_star(1, 2), Ok(1));
        assert_eq!(d_max_star(4, 7), Ok(18));
        assert!(d_max_star(5, 5).is_err());
        assert_eq!(d_max_one_regular(2, 5), Ok(6));
        assert_eq!(d_max_one_regular(1, 2), Ok(1));
        assert_eq!(d_max_one_regular(2, 6), Ok(8));
        assert!(d_max_one_regular(3, 5).is_err());

        assert_eq!(d_max_balanced_bistar(4), 7);
        assert_eq!(d_max_balanced_bistar(2), 1);
        // balanced bistar at n = 24 (k1 = 12); the k1 = 13 bistar gives 396
        assert_eq!(d_max_balanced_bistar(24), 397);
        assert_eq!(d_max_bistar(24, 12), Ok(397));
        assert_eq!(d_max_bistar(24, 13), Ok(396));
        assert_eq!(d_min_bistar(24, 13), Ok(84));

        assert_eq!(d_max_k_quasistar(5, 0), Ok(10));
        assert_eq!(d_max_k_quasistar(7, 2), Ok(26));
        assert_eq!(d_max_k_quasistar(9, 1), Ok(42));
        assert!(d_max_k_quasistar(4, 2).is_err());
        // the inner-star decomposition needs at least one 2-path
        for k in 1..6 {
            for l in 0..6 {
                let n = 2 * k + l + 1;
                let star_end = d_max_star(l + k, n).unwrap();
                let star_inner = d_max_star(l + k, n - 1).unwrap();
                let best = d_max_k_quasistar(n, k).unwrap();
                assert_eq!(best, star_end + d_max_one_regular(k, n - 1).unwrap());
                assert_eq!(best - (star_inner + d_max_one_regular(k, n).unwrap()), l as u64);
            }
        }
    }

    #[test]
    fn family_formulas_match_enumeration() {
        for n in 3..=10 {
            let path = enumerate_arrangements(&FreeTree::path(n)).unwrap();
            assert_eq!(d_max_linear(n), path.max());
            for k1 in n.div_ceil(2)..n {
                let dist = enumerate_arrangements(&FreeTree::bistar(n, k1).unwrap()).unwrap();
                assert_eq!(d_min_bistar(n, k1).unwrap(), dist.min(), "n={n} k1={k1}");
                assert_eq!(d_max_bistar(n, k1).unwrap(), dist.max(), "n={n} k1={k1}");
            }
            for k in 0..=(n - 1) / 2 {
                let t = FreeTree::k_quasistar(k, n - 1 - 2 * k);
                let dist = enumerate_arrangements(&t).unwrap();
                assert_eq!(d_max_k_quasistar(n, k).unwrap(), dist.max(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sandwich_holds() {
        for n in 3..=10 {
            for t in generate_free_trees(n, 20).unwrap() {
                let b = BaselineBundle::with_d_max(&t, &DMaxOptions::default()).unwrap();
                let floor_quarter = (n * n / 4) as u64;
                assert!(n as u64 - 1 <= b.d_min && b.d_min <= floor_quarter);
                assert!(Rational::from_integer(floor_quarter as i128) <= b.d_rla);
                let d_max = b.d_max.unwrap();
                assert!(Rational::from_integer(d_max as i128) >= b.d_rla);
                assert!(d_max <= d_max_balanced_bistar(n));
            }
        }
    }
}
