/// Default `epsilon` of [`replace_zero_pvalues`].
pub const DEFAULT_EPSILON: f64 = 0.01;

/// Replaces Monte Carlo p-values of zero by `(1 - epsilon) / T`, just below
/// the smallest non-zero estimate `1 / T`.
pub fn replace_zero_pvalues(ps: &[f64], t: u64, epsilon: f64) -> Vec<f64> {
    let floor = (1.0 - epsilon) / t as f64;
    ps.iter().map(|&p| if p == 0.0 { floor } else { p }).collect()
}

/// Holm step-down adjustment, returned in input order. With the p-values
/// sorted increasingly, `q_i = min{1, max[p_i (m + 1 - i), q_(i-1)]}` and
/// `q_0 = 0`.
pub fn holm_adjust(ps: &[f64]) -> Vec<f64> {
    let m = ps.len();
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| ps[a].total_cmp(&ps[b]).then(a.cmp(&b)));
    let mut qs = vec![0.0; m];
    let mut prev = 0.0f64;
    for (rank, &i) in idx.iter().enumerate() {
        let q = (ps[i] * (m - rank) as f64).max(prev).min(1.0);
        qs[i] = q;
        prev = q;
    }
    qs
}
