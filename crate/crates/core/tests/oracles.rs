//! Exact solvers against an independent dynamic program over vertex
//! subsets. `D` of an arrangement equals the sum, over the `n - 1` gaps
//! between consecutive positions, of the number of edges crossing the gap,
//! so `D_min` and `D_max` are shortest and longest paths in the lattice of
//! prefixes.

use rand::Rng;

use ddm::baselines::{
    d_max_bistar, d_max_exact, d_max_for, d_max_k_quasistar, d_max_linear, d_min_bistar, d_min_exact, DMaxOptions,
};
use ddm::rng::{domain_of, substream};
use ddm::tree::random_tree;
use ddm::{sum_edge_lengths, FreeTree};

fn subset_extremes(t: &FreeTree) -> (u64, u64) {
    let n = t.n();
    let adj: Vec<u32> = (0..n).map(|v| t.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let full = (1u32 << n) - 1;
    let mut cut = vec![0i64; 1 << n];
    for s in 1..=full {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        cut[s as usize] = cut[rest as usize] + t.degree(v) as i64 - 2 * (adj[v] & rest).count_ones() as i64;
    }
    let mut lo = vec![i64::MAX; 1 << n];
    let mut hi = vec![i64::MIN; 1 << n];
    lo[0] = 0;
    hi[0] = 0;
    for s in 0..full {
        if lo[s as usize] == i64::MAX {
            continue;
        }
        let mut free = full & !s;
        while free != 0 {
            let v = free.trailing_zeros();
            free &= free - 1;
            let next = (s | 1 << v) as usize;
            let gap = if next as u32 == full { 0 } else { cut[next] };
            lo[next] = lo[next].min(lo[s as usize] + gap);
            hi[next] = hi[next].max(hi[s as usize] + gap);
        }
    }
    (lo[full as usize] as u64, hi[full as usize] as u64)
}

#[test]
fn random_trees_agree_with_subset_program() {
    let opts = DMaxOptions::default();
    for i in 0..150 {
        let mut rng = substream(1, domain_of("oracle/random"), i);
        let n = rng.gen_range(2..=14);
        let t = random_tree(n, &mut rng);
        let (lo, hi) = subset_extremes(&t);
        let (d_min, best) = d_min_exact(&t);
        assert_eq!(d_min, lo, "D_min of {:?}", t.edges());
        assert_eq!(sum_edge_lengths(&t, &best).unwrap(), lo);
        let (d_max, worst) = d_max_exact(&t, &opts).unwrap();
        assert_eq!(d_max, hi, "D_max of {:?}", t.edges());
        assert_eq!(sum_edge_lengths(&t, &worst).unwrap(), hi);
        assert_eq!(d_max_for(&t, &opts).unwrap().0, hi);
    }
}

#[test]
fn minimum_beyond_the_maximum_cap() {
    for i in 0..12 {
        let mut rng = substream(2, domain_of("oracle/large"), i);
        let t = random_tree(rng.gen_range(15..=18), &mut rng);
        assert_eq!(d_min_exact(&t).0, subset_extremes(&t).0, "D_min of {:?}", t.edges());
    }
}

#[test]
fn family_formulas_agree_with_subset_program() {
    for n in 2..=15 {
        assert_eq!(d_max_linear(n), subset_extremes(&FreeTree::path(n)).1);
        for k1 in n.div_ceil(2)..n {
            let (lo, hi) = subset_extremes(&FreeTree::bistar(n, k1).unwrap());
            assert_eq!(d_min_bistar(n, k1).unwrap(), lo, "bistar({n}, {k1})");
            assert_eq!(d_max_bistar(n, k1).unwrap(), hi, "bistar({n}, {k1})");
        }
        for k in 0..=(n - 1) / 2 {
            let t = FreeTree::k_quasistar(k, n - 1 - 2 * k);
            assert_eq!(d_max_k_quasistar(n, k).unwrap(), subset_extremes(&t).1, "quasistar({n}, {k})");
        }
    }
}
