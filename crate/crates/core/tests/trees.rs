//! Leaf-guarding count against the solver, and its certificate.

mod common;

use bridgeburn::graph::Graph;
use bridgeburn::solver::{bridge_burning_cop_number, CopNumber, SolveOptions};
use bridgeburn::tree::tree_cop_number;
use proptest::prelude::*;

fn solver_count(t: &Graph) -> usize {
    match bridge_burning_cop_number(t, t.vertex_count(), &SolveOptions::default()).unwrap() {
        CopNumber::Exact(k) => k,
        CopNumber::Exceeds(k) => panic!("no win with {k} cops"),
    }
}

#[test]
fn nine_vertex_trees_agree_with_solver() {
    let trees = common::unlabeled_trees(9);
    assert_eq!(trees.len(), 47);
    for edges in trees {
        let t = common::graph(9, &edges);
        let n = tree_cop_number(&t, None).unwrap().n;
        assert_eq!(n, solver_count(&t), "{edges:?}");
        for root in 0..9 {
            assert_eq!(tree_cop_number(&t, Some(root)).unwrap().n, n);
        }
    }
}

proptest! {
    #[test]
    fn certificate_covers_every_leaf(seq in (1usize..30).prop_flat_map(|n| proptest::collection::vec(0..n + 2, n)), root in any::<prop::sample::Index>()) {
        let n = seq.len() + 2;
        let t = common::graph(n, &common::prufer_decode(&seq));
        let report = tree_cop_number(&t, Some(root.index(n))).unwrap();
        prop_assert_eq!(report.placements.len(), report.n);
        prop_assert_eq!(report.trace.len(), report.n);
        let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) <= 1).collect();
        prop_assert_eq!(report.guarded_certificate.keys().copied().collect::<Vec<_>>(), leaves);
        for (&leaf, &guard) in &report.guarded_certificate {
            prop_assert!(report.placements.contains(&guard));
            prop_assert!(t.bfs_distance(leaf, guard).unwrap().unwrap() <= 2);
        }
        // Root choice never changes the count.
        prop_assert_eq!(tree_cop_number(&t, Some(0)).unwrap().n, report.n);
    }
}
