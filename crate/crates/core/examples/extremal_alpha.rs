//! The smallest `Omega` any tree of `n` vertices can reach, against the
//! bistar value and the lower bound `Z1(n)`.
//!
//! ```text
//! cargo run --release --example extremal_alpha [max n]
//! ```

use ddm::extremal::{alpha_bistar, alpha_exact, z1_lower_bound, ExtremalOptions};
use ddm::to_f64;

fn main() -> ddm::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let opts = ExtremalOptions::default();
    println!("{:>3}{:>12}{:>12}{:>10}{:>10}  witness", "n", "alpha", "bistar", "Z1", "examined");
    for n in 3..=max_n {
        let r = alpha_exact(n, &opts)?;
        println!(
            "{n:>3}{:>12}{:>12}{:>10.4}{:>10}  {:?}",
            r.alpha.to_string(),
            r.alpha_bistar.to_string(),
            to_f64(&r.z1),
            r.trees_examined,
            r.witness_class
        );
    }
    for n in [24, 100, 10_000] {
        let (a, k1) = alpha_bistar(n)?;
        println!("alpha_bistar({n}) = {a} ~ {:.6} at k1 = {k1}; Z1 = {:.6}", to_f64(&a), to_f64(&z1_lower_bound(n)));
    }
    Ok(())
}
