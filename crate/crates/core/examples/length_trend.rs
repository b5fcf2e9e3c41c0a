//! Kendall trend tests of per-length means against sentence length.
//!
//! ```text
//! cargo run --example length_trend
//! ```

use ddm::stats::{kendall_trend_test, Side};

fn main() -> ddm::Result<()> {
    let n: Vec<f64> = (3..=12).map(f64::from).collect();
    let rising: Vec<f64> = n.iter().map(|x| 0.2 + 0.05 * x).collect();
    let noisy = [0.31, 0.28, 0.35, 0.33, 0.30, 0.36, 0.29, 0.34, 0.32, 0.33];
    for (name, ys) in [("rising", &rising[..]), ("noisy", &noisy[..])] {
        for side in [Side::Greater, Side::Smaller] {
            let t = kendall_trend_test(&n, ys, side)?;
            println!("{name:<7}{side:?}: tau = {:+.4}, p = {:.6} ({:?})", t.statistic, t.p_raw, t.method);
        }
    }
    // more than ten strata switch to the normal approximation
    let long: Vec<f64> = (3..=40).map(f64::from).collect();
    let wave: Vec<f64> = long.iter().map(|x| (x / 3.0).sin() + x / 40.0).collect();
    let t = kendall_trend_test(&long, &wave, Side::Greater)?;
    println!("wave   Greater: tau = {:+.4}, p = {:.6} ({:?})", t.statistic, t.p_raw, t.method);
    Ok(())
}
