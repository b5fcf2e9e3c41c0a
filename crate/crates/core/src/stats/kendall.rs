use statrs::distribution::{ContinuousCDF, Normal};

use super::{PMethod, Side, StatsError, TestResult};

/// Up to this many strata the p-value is exact, from all `k!` orderings.
pub const EXACT_STRATA_LIMIT: usize = 10;

fn sign(x: f64) -> i64 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Kendall's `S = sum_{i<j} sign(x_j - x_i) sign(y_j - y_i)`.
fn kendall_s(xs: &[f64], ys: &[f64]) -> i64 {
    let mut s = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            s += sign(xs[j] - xs[i]) * sign(ys[j] - ys[i]);
        }
    }
    s
}

/// Sizes of the groups of tied values.
fn tie_groups(v: &[f64]) -> Vec<u64> {
    let mut sorted = v.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut groups = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i > 1 {
            groups.push((j - i) as u64);
        }
        i = j;
    }
    groups
}

/// Kendall's `tau_b`, corrected for ties in either variable.
pub fn kendall_tau_b(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as u64;
    let n0 = n * n.saturating_sub(1) / 2;
    let pairs = |g: Vec<u64>| g.iter().map(|t| t * (t - 1) / 2).sum::<u64>();
    let n1 = pairs(tie_groups(xs));
    let n2 = pairs(tie_groups(ys));
    let denom = (((n0 - n1) * (n0 - n2)) as f64).sqrt();
    if denom == 0.0 {
        return 0.0;
    }
    kendall_s(xs, ys) as f64 / denom
}

/// Contribution to `S` of all pairs involving position `p`.
fn s_at(xs: &[f64], ys: &[f64], order: &[usize], p: usize) -> i64 {
    let mut s = 0;
    for q in 0..xs.len() {
        if q != p {
            s += sign(xs[q] - xs[p]) * sign(ys[order[q]] - ys[order[p]]);
        }
    }
    s
}

/// Counts orderings of `ys` against fixed `xs` with `S` at least (or at
/// most) as extreme as observed, by Heap's algorithm with incremental `S`.
fn exact_tail(xs: &[f64], ys: &[f64], observed: i64, side: Side) -> (u64, u64) {
    let k = xs.len();
    let mut order: Vec<usize> = (0..k).collect();
    let mut s = observed;
    let hit = |s: i64| match side {
        Side::Greater => s >= observed,
        Side::Smaller => s <= observed,
    };
    let mut total = 1u64;
    let mut count = hit(s) as u64;
    let mut c = vec![0usize; k];
    let mut i = 1;
    while i < k {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            let pair = sign(xs[i] - xs[j]) * sign(ys[order[i]] - ys[order[j]]);
            let before = s_at(xs, ys, &order, i) + s_at(xs, ys, &order, j) - pair;
            order.swap(i, j);
            let pair = sign(xs[i] - xs[j]) * sign(ys[order[i]] - ys[order[j]]);
            let after = s_at(xs, ys, &order, i) + s_at(xs, ys, &order, j) - pair;
            s += after - before;
            total += 1;
            count += hit(s) as u64;
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (count, total)
}

/// One-sided test of a monotone trend of `ys` (for instance `<Omega>(n)`)
/// against `xs` (the lengths `n`).
///
/// The statistic is `tau_b`. With at most [`EXACT_STRATA_LIMIT`] strata the
/// p-value is the fraction of orderings of `ys` whose `S` is at least as
/// extreme as the observed one; beyond that it is the normal approximation
/// of `S` with tie-corrected variance and a continuity correction of 1.
/// [`Side::Greater`] tests for an increasing trend.
pub fn kendall_trend_test(xs: &[f64], ys: &[f64], side: Side) -> Result<TestResult, StatsError> {
    if xs.len() != ys.len() {
        return Err(StatsError::InconsistentInput(format!("{} lengths but {} values", xs.len(), ys.len())));
    }
    let k = xs.len();
    if k < 3 {
        return Err(StatsError::TooFewStrata(k));
    }
    let tau = kendall_tau_b(xs, ys);
    let s = kendall_s(xs, ys);
    if k <= EXACT_STRATA_LIMIT {
        let (count, total) = exact_tail(xs, ys, s, side);
        return Ok(TestResult {
            statistic: tau,
            side,
            replicates: Some(total),
            exceedances: Some(count),
            p_raw: count as f64 / total as f64,
            p_adjusted: None,
            method: PMethod::ExactPermutation,
        });
    }
    let n = k as f64;
    let tx = tie_groups(xs);
    let ty = tie_groups(ys);
    let term = |g: &[u64], f: &dyn Fn(f64) -> f64| g.iter().map(|&t| f(t as f64)).sum::<f64>();
    let v0 = n * (n - 1.0) * (2.0 * n + 5.0);
    let vt = term(&tx, &|t| t * (t - 1.0) * (2.0 * t + 5.0));
    let vu = term(&ty, &|t| t * (t - 1.0) * (2.0 * t + 5.0));
    let v1 = term(&tx, &|t| t * (t - 1.0)) * term(&ty, &|t| t * (t - 1.0)) / (2.0 * n * (n - 1.0));
    let v2 = term(&tx, &|t| t * (t - 1.0) * (t - 2.0)) * term(&ty, &|t| t * (t - 1.0) * (t - 2.0))
        / (9.0 * n * (n - 1.0) * (n - 2.0));
    let var = (v0 - vt - vu) / 18.0 + v1 + v2;
    let p = if var <= 0.0 {
        1.0
    } else {
        let normal = Normal::standard();
        let sd = var.sqrt();
        match side {
            Side::Greater => normal.sf((s as f64 - 1.0) / sd),
            Side::Smaller => normal.cdf((s as f64 + 1.0) / sd),
        }
    };
    Ok(TestResult {
        statistic: tau,
        side,
        replicates: None,
        exceedances: None,
        p_raw: p.min(1.0),
        p_adjusted: None,
        method: PMethod::NormalApproximation,
    })
}
