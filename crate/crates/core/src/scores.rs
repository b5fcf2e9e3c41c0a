//! Per-sentence optimality scores and treebank averages.
//!
//! Scores are computed exactly from rationals where the definition allows
//! it. `D` and the baselines enter as [`Rational`] so the same functions
//! serve integer sentences and transformed values alike.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arrangement::{sum_edge_lengths, ArrangementError, LinearArrangement};
use crate::baselines::BaselineBundle;
use crate::tree::FreeTree;
use crate::{to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoreError {
    #[error("score undefined when D_rla = D_min (n < 3)")]
    UndefinedForShort,
    #[error("score undefined when the variance is zero")]
    ZeroVariance,
    #[error("root position {position} outside 1..={n}")]
    BadRoot { position: usize, n: usize },
    #[error("score undefined for D_min = 0")]
    ZeroMinimum,
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// `Omega = (D_rla - D) / (D_rla - D_min)`.
pub fn omega(d: Rational, d_rla: Rational, d_min: Rational) -> Result<Rational, ScoreError> {
    let span = d_rla - d_min;
    if span == Rational::from_integer(0) {
        return Err(ScoreError::UndefinedForShort);
    }
    Ok((d_rla - d) / span)
}

/// `Gamma = D / D_min`.
pub fn gamma(d: Rational, d_min: Rational) -> Result<Rational, ScoreError> {
    if d_min == Rational::from_integer(0) {
        return Err(ScoreError::ZeroMinimum);
    }
    Ok(d / d_min)
}

/// `Delta = D - D_min`.
pub fn delta(d: Rational, d_min: Rational) -> Rational {
    d - d_min
}

/// `D_z = (D - D_rla) / sqrt(V_rla)`.
pub fn d_z(d: Rational, d_rla: Rational, v_rla: Rational) -> Result<f64, ScoreError> {
    if v_rla <= Rational::from_integer(0) {
        return Err(ScoreError::ZeroVariance);
    }
    Ok(to_f64(&(d - d_rla)) / to_f64(&v_rla).sqrt())
}

/// `NDD = |ln(d_bar / sqrt(pi_r n))|` with `d_bar = D / (n - 1)` and
/// `pi_r` the 1-based position of the root. Natural logarithm.
pub fn ndd(d: u64, n: usize, root_position: usize) -> Result<f64, ScoreError> {
    if n < 2 {
        return Err(ScoreError::UndefinedForShort);
    }
    if root_position == 0 || root_position > n {
        return Err(ScoreError::BadRoot { position: root_position, n });
    }
    let d_bar = d as f64 / (n - 1) as f64;
    Ok((d_bar / ((root_position * n) as f64).sqrt()).ln().abs())
}

/// Approximation of `E_rla[NDD]`: `-ln[(sqrt 2 / 3)(1 + 1/n)]`.
pub fn expected_ndd_approx(n: usize) -> f64 {
    -((2f64.sqrt() / 3.0) * (1.0 + 1.0 / n as f64)).ln()
}

/// Range of `E_rla[Gamma]` over trees of `n >= 2` vertices: the star gives
/// the low end, the path the high end.
pub fn expected_gamma_bounds(n: usize) -> (Rational, Rational) {
    let m = n as i128;
    let low = Rational::new(4 * (m * m - 1), 3 * (m * m - m % 2));
    let high = Rational::new(m + 1, 3);
    (low, high)
}

/// Range of `E_rla[Delta]` over trees of `n >= 2` vertices.
pub fn expected_delta_bounds(n: usize) -> (Rational, Rational) {
    let m = n as i128;
    let low = Rational::new(m * m - 4 + 3 * (m % 2), 12);
    let high = Rational::new((m - 1) * (m - 2), 3);
    (low, high)
}

/// Scores of one sentence. Scores undefined for the sentence are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRecord {
    pub language: String,
    pub sentence_id: String,
    pub n: usize,
    pub d: u64,
    /// 1-based position of the syntactic root.
    pub root_position: Option<usize>,
    pub d_min: u64,
    pub d_rla: Rational,
    pub d_bar: Option<f64>,
    pub d0: u64,
    pub gamma: Option<Rational>,
    pub delta: u64,
    pub d_z: Option<f64>,
    pub ndd: Option<f64>,
    pub omega: Option<Rational>,
}

impl ScoreRecord {
    pub fn labelled(mut self, language: &str, sentence_id: &str) -> Self {
        self.language = language.to_string();
        self.sentence_id = sentence_id.to_string();
        self
    }

    pub fn omega_f64(&self) -> Option<f64> {
        self.omega.as_ref().map(to_f64)
    }

    pub fn gamma_f64(&self) -> Option<f64> {
        self.gamma.as_ref().map(to_f64)
    }
}

/// Every score of a sentence with word order `a`.
pub fn score_sentence(t: &FreeTree, a: &LinearArrangement, b: &BaselineBundle) -> Result<ScoreRecord, ScoreError> {
    let n = t.n();
    let d = sum_edge_lengths(t, a)?;
    let dr = Rational::from_integer(d as i128);
    let d_min = Rational::from_integer(b.d_min as i128);
    let root_position = t.root().map(|r| a.position(r));
    Ok(ScoreRecord {
        language: String::new(),
        sentence_id: String::new(),
        n,
        d,
        root_position,
        d_min: b.d_min,
        d_rla: b.d_rla,
        d_bar: (n >= 2).then(|| d as f64 / (n - 1) as f64),
        d0: d - (n as u64).saturating_sub(1),
        gamma: gamma(dr, d_min).ok(),
        delta: d - b.d_min,
        d_z: b.v_rla.and_then(|v| d_z(dr, b.d_rla, v).ok()),
        ndd: root_position.and_then(|p| ndd(d, n, p).ok()),
        omega: omega(dr, b.d_rla, d_min).ok(),
    })
}

/// Grouping of [`aggregate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBy {
    Language,
    LanguageAndLength,
}

/// Mean of one score over the sentences where it is defined.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mean {
    pub count: usize,
    pub value: Option<f64>,
}

#[derive(Default)]
struct Acc {
    sum: f64,
    count: usize,
}

impl Acc {
    fn push(&mut self, x: Option<f64>) {
        if let Some(x) = x {
            self.sum += x;
            self.count += 1;
        }
    }

    fn mean(&self) -> Mean {
        Mean { count: self.count, value: (self.count > 0).then(|| self.sum / self.count as f64) }
    }
}

/// `<X>` for every score over one group.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub language: String,
    pub n: Option<usize>,
    pub count: usize,
    pub omega: Mean,
    pub d: Mean,
    pub d_bar: Mean,
    pub d0: Mean,
    pub gamma: Mean,
    pub delta: Mean,
    pub d_z: Mean,
    pub ndd: Mean,
}

/// Averages in groups ordered by language (then length). `Omega` and
/// `D_z` are averaged over the sentences where they are defined, which
/// excludes `n < 3`.
pub fn aggregate(records: &[ScoreRecord], group_by: GroupBy) -> Vec<AggregateRow> {
    let mut groups: BTreeMap<(String, Option<usize>), Vec<&ScoreRecord>> = BTreeMap::new();
    for r in records {
        let key = match group_by {
            GroupBy::Language => (r.language.clone(), None),
            GroupBy::LanguageAndLength => (r.language.clone(), Some(r.n)),
        };
        groups.entry(key).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((language, n), rs)| {
            let mut acc: [Acc; 8] = Default::default();
            for r in &rs {
                acc[0].push(r.omega_f64());
                acc[1].push(Some(r.d as f64));
                acc[2].push(r.d_bar);
                acc[3].push(Some(r.d0 as f64));
                acc[4].push(r.gamma_f64());
                acc[5].push(Some(r.delta as f64));
                acc[6].push(r.d_z);
                acc[7].push(r.ndd);
            }
            AggregateRow {
                language,
                n,
                count: rs.len(),
                omega: acc[0].mean(),
                d: acc[1].mean(),
                d_bar: acc[2].mean(),
                d0: acc[3].mean(),
                gamma: acc[4].mean(),
                delta: acc[5].mean(),
                d_z: acc[6].mean(),
                ndd: acc[7].mean(),
            }
        })
        .collect()
}

/// `<Omega>` including sentences of 1 and 2 words, which are assigned the
/// conventional values `gamma1` and `gamma2`:
/// `(1 - theta) <Omega> + (N1 gamma1 + N2 gamma2) / N`.
pub fn omega_all_lengths(records: &[ScoreRecord], gamma1: f64, gamma2: f64) -> Option<f64> {
    let total = records.len();
    if total == 0 {
        return None;
    }
    let n1 = records.iter().filter(|r| r.n == 1).count();
    let n2 = records.iter().filter(|r| r.n == 2).count();
    let long: Vec<f64> = records.iter().filter(|r| r.n >= 3).filter_map(ScoreRecord::omega_f64).collect();
    let theta = (n1 + n2) as f64 / total as f64;
    let mean_long = if long.is_empty() { 0.0 } else { long.iter().sum::<f64>() / long.len() as f64 };
    Some((1.0 - theta) * mean_long + (n1 as f64 * gamma1 + n2 as f64 * gamma2) / total as f64)
}
