use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::arrangement::{enumerate_arrangements, ArrangementError, ENUMERATION_CAP};
use crate::baselines::{expected_d_rla, variance_d_rla};
use crate::error::Result;
use crate::extremal::{alpha_bistar, alpha_exact, z1_lower_bound, ExtremalError, ExtremalOptions};
use crate::tree::{generate_free_trees, TreeClass};
use crate::{to_f64, Rational};

use super::{fmt_f64, write_text, Table};

pub(crate) fn class_name(c: TreeClass) -> String {
    match c {
        TreeClass::Linear => "linear".into(),
        TreeClass::Star => "star".into(),
        TreeClass::Bistar { k1 } => format!("bistar k1={k1}"),
        TreeClass::Caterpillar => "caterpillar".into(),
        TreeClass::KQuasistar { k, l } => format!("quasistar k={k} l={l}"),
        TreeClass::General => "general".into(),
    }
}

fn fmt_ratio(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `alpha(n)` over `n_min..=n_max` next to its bistar value and the lower
/// bound `Z1(n)`, flagging sizes where no bistar reaches `alpha(n)`. With `exact` off only the bistar value and the bound are
/// computed, which has no size limit; with it on every `n` must be within
/// `opts.cap`.
///
/// Writes `extremal.csv`.
pub fn cmd_extremal(n_min: usize, n_max: usize, exact: bool, opts: &ExtremalOptions, out: &Path) -> Result<PathBuf> {
    let n_min = n_min.max(3);
    if exact && n_max > opts.cap {
        return Err(ExtremalError::CapExceeded { n: n_max, cap: opts.cap }.into());
    }
    let mut table = Table::create(
        out,
        "extremal.csv",
        "extremal",
        &[
            "n",
            "alpha",
            "alpha_f64",
            "alpha_bistar",
            "alpha_bistar_f64",
            "bistar_k1",
            "bistar_attains",
            "z1",
            "z1_f64",
            "witness_class",
            "witness_heads",
            "trees_examined",
            "trees_pruned",
        ],
    )?;
    for n in n_min..=n_max {
        let (a_b, k1) = alpha_bistar(n)?;
        let z1 = z1_lower_bound(n);
        let mut fields = Vec::with_capacity(13);
        let report = if exact { Some(alpha_exact(n, opts)?) } else { None };
        match &report {
            Some(r) => fields.extend([fmt_ratio(&r.alpha), fmt_f64(to_f64(&r.alpha))]),
            None => fields.extend([String::new(), String::new()]),
        }
        // whether a bistar reaches alpha(n); empty without the exact search
        let attains = report.as_ref().map(|r| (r.alpha == a_b).to_string()).unwrap_or_default();
        fields.extend([
            fmt_ratio(&a_b),
            fmt_f64(to_f64(&a_b)),
            k1.to_string(),
            attains,
            fmt_ratio(&z1),
            fmt_f64(to_f64(&z1)),
        ]);
        match &report {
            Some(r) => {
                // the witness in its maximum order, rooted at the first word
                let relabelled = r.witness.relabel(r.witness_arrangement.positions());
                let heads: Vec<String> = relabelled.to_heads(0).iter().map(|h| h.to_string()).collect();
                fields.extend([
                    class_name(r.witness_class),
                    heads.join(" "),
                    r.trees_examined.to_string(),
                    r.trees_pruned.to_string(),
                ]);
            }
            None => fields.extend(std::iter::repeat_n(String::new(), 4)),
        }
        let mut row = vec![n.to_string()];
        row.extend(fields);
        table.row(row)?;
    }
    table.finish()
}

/// Dumps, for every unlabelled tree with `n_min..=n_max` vertices, the
/// exact distribution of `D` over all arrangements together with its
/// minimum, maximum, mean and variance, and the closed-form mean and
/// variance. Rationals are written as `"p/q"` strings.
///
/// Writes `oracle.json`.
pub fn cmd_oracle(n_min: usize, n_max: usize, out: &Path) -> Result<PathBuf> {
    let n_min = n_min.max(1);
    if n_max > ENUMERATION_CAP {
        return Err(ArrangementError::TooLarge { n: n_max, cap: ENUMERATION_CAP }.into());
    }
    let mut sizes = Vec::new();
    for n in n_min..=n_max {
        let mut trees = Vec::new();
        for t in generate_free_trees(n, ENUMERATION_CAP)? {
            let dist = enumerate_arrangements(&t)?;
            let distribution: Value =
                dist.counts.iter().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>().into();
            let edges: Vec<[usize; 2]> = t.edges().iter().map(|&(u, v)| [u, v]).collect();
            trees.push(json!({
                "edges": edges,
                "class": class_name(t.classify().primary),
                "d_min": dist.min(),
                "d_max": dist.max(),
                "mean": fmt_ratio(&dist.mean()),
                "variance": fmt_ratio(&dist.variance()),
                "expected_d_rla": fmt_ratio(&expected_d_rla(n)),
                "variance_d_rla": variance_d_rla(&t).ok().map(|v| fmt_ratio(&v)),
                "argmin_positions": dist.argmin.positions(),
                "argmax_positions": dist.argmax.positions(),
                "distribution": distribution,
            }));
        }
        sizes.push(json!({ "n": n, "trees": trees }));
    }
    let doc = json!({ "schema": "ddm oracle v1", "sizes": sizes });
    let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
    text.push('\n');
    write_text(out, "oracle.json", &text)
}
