//! Every unlabelled free tree of small sizes, with its family and its
//! exact `D_min` and `D_max`.
//!
//! ```text
//! cargo run --example enumerate_trees [n]
//! ```

use std::collections::BTreeMap;

use ddm::baselines::{d_max_for, d_min_exact, DMaxOptions};
use ddm::tree::{generate_free_trees, DEFAULT_GENERATION_CAP};

fn main() -> ddm::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for k in 1..=12 {
        print!("{k}:{} ", generate_free_trees(k, DEFAULT_GENERATION_CAP)?.count());
    }
    println!("\n\ntrees of {n} vertices:");
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    for t in generate_free_trees(n, DEFAULT_GENERATION_CAP)? {
        let class = t.classify().primary;
        let (d_max, _) = d_max_for(&t, &DMaxOptions::default())?;
        println!("  degrees {:?}  {:?}  D_min {}  D_max {}", t.degrees(), class, d_min_exact(&t).0, d_max);
        *classes.entry(format!("{class:?}")).or_default() += 1;
    }
    println!("{classes:?}");
    Ok(())
}
