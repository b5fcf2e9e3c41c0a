//! Baselines of `D` for a few trees: closed forms where a family has one,
//! the exact solvers otherwise, and full enumeration as a check.
//!
//! ```text
//! cargo run --example baselines
//! ```

use ddm::arrangement::enumerate_arrangements;
use ddm::baselines::{d_max_for, d_min_exact, expected_d_rla, variance_d_rla, BaselineBundle, DMaxOptions};
use ddm::FreeTree;

fn main() -> ddm::Result<()> {
    let trees = [
        ("path", FreeTree::path(8)),
        ("star", FreeTree::star(8)),
        ("bistar k1=5", FreeTree::bistar(8, 5)?),
        ("quasistar k=2 l=3", FreeTree::k_quasistar(2, 3)),
        ("caterpillar", FreeTree::from_heads(&[0, 1, 2, 3, 1, 2, 3, 4])?),
    ];
    let opts = DMaxOptions::default();
    println!("{:<20}{:>8}{:>10}{:>7}{:>7}  source", "tree", "D_rla", "V[D]", "D_min", "D_max");
    for (name, t) in &trees {
        let b = BaselineBundle::with_d_max(t, &opts)?;
        let (d_max, source) = d_max_for(t, &opts)?;
        println!(
            "{name:<20}{:>8}{:>10}{:>7}{:>7}  {}",
            b.d_rla.to_string(),
            variance_d_rla(t)?.to_string(),
            b.d_min,
            d_max,
            format!("{source:?}")
        );

        let dist = enumerate_arrangements(t)?;
        assert_eq!(dist.min(), d_min_exact(t).0);
        assert_eq!(dist.max(), d_max);
        assert_eq!(dist.mean(), expected_d_rla(t.n()));
        assert_eq!(dist.variance(), variance_d_rla(t)?);
    }
    println!("all values agree with enumeration of 8! orders");

    // beyond enumeration: a random 40-vertex tree
    let mut rng = ddm::rng::substream(7, 0, 0);
    let big = ddm::tree::random_tree(40, &mut rng);
    let (d_min, _) = d_min_exact(&big);
    println!("random n=40: D_rla = {}, D_min = {d_min}", expected_d_rla(40));
    Ok(())
}
