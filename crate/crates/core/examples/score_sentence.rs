//! Scores of one sentence: `D` against its random and minimum baselines.
//!
//! ```text
//! cargo run --example score_sentence
//! ```

use ddm::scores::score_sentence;
use ddm::{BaselineBundle, FreeTree, LinearArrangement};

fn main() -> ddm::Result<()> {
    // "The dog barked at the mailman" after punctuation removal
    let tree = FreeTree::from_heads(&[2, 3, 0, 6, 6, 3])?;
    let order = LinearArrangement::identity(tree.n());
    let baselines = BaselineBundle::without_d_max(&tree);
    let r = score_sentence(&tree, &order, &baselines)?;

    println!("n = {}, D = {}, D_min = {}, D_rla = {}", r.n, r.d, r.d_min, r.d_rla);
    println!("Omega = {} ({:.4})", r.omega.unwrap(), r.omega_f64().unwrap());
    println!("Gamma = {:.4}, Delta = {}", r.gamma_f64().unwrap(), r.delta);
    println!("D_z = {:.4}, NDD = {:.4}", r.d_z.unwrap(), r.ndd.unwrap());

    // the worst order of the same tree
    let worst = ddm::baselines::d_max_exact(&tree, &Default::default())?.1;
    let w = score_sentence(&tree, &worst, &baselines)?;
    println!("maximum order {:?}: D = {}, Omega = {:.4}", worst.order(), w.d, w.omega_f64().unwrap());
    Ok(())
}
