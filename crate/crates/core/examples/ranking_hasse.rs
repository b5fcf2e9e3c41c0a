//! Orders languages by pairwise randomization tests on `Omega` and prints
//! the Hasse diagram in DOT.
//!
//! ```text
//! cargo run --release --example ranking_hasse > hasse.dot
//! ```

use ddm::arrangement::sum_edge_lengths;
use ddm::baselines::BaselineBundle;
use ddm::rng::domain_of;
use ddm::scores::omega;
use ddm::stats::{build_partial_order, pairwise_language_test, to_dot, OrderOptions, PairTest};
use ddm::treebank::synthetic::{synthetic_corpus, OrderMix};
use ddm::{LinearArrangement, Rational};

fn main() -> ddm::Result<()> {
    let shares = [("A", 0.1), ("B", 0.3), ("C", 0.32), ("D", 0.6)];
    let replicates = 20_000;
    let mut names = Vec::new();
    let mut samples = Vec::new();
    for (name, share) in shares {
        let values: Vec<f64> = synthetic_corpus(name, OrderMix::optimal(share), 150, 3..=14, 5)
            .iter()
            .map(|s| {
                let b = BaselineBundle::without_d_max(&s.tree);
                let d = sum_edge_lengths(&s.tree, &LinearArrangement::identity(s.n())).unwrap();
                let w =
                    omega(Rational::from_integer(d as i128), b.d_rla, Rational::from_integer(b.d_min as i128)).unwrap();
                ddm::to_f64(&w)
            })
            .collect();
        names.push(name.to_string());
        samples.push(values);
    }
    let means: Vec<f64> = samples.iter().map(|v| v.iter().sum::<f64>() / v.len() as f64).collect();
    let mut tests = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let (low, high) = if means[j] < means[i] { (j, i) } else { (i, j) };
            let label = format!("{}/{}", names[low], names[high]);
            let r = pairwise_language_test(&samples[low], &samples[high], replicates, 3, domain_of(&label))?;
            tests.push(PairTest { low, high, p: r.p_raw });
        }
    }
    let opts = OrderOptions { replicates, ..OrderOptions::default() };
    let result = build_partial_order(&names, &means, &tests, &opts)?;
    eprintln!("{} arcs, {} after transitive reduction", result.arcs.len(), result.reduced.len());
    print!("{}", to_dot(&result, true));
    Ok(())
}
