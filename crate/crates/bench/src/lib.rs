//! Shared fixtures for the `hiergames` benchmarks.

use hiergames::{HierarchyKind, HierarchyParams};

/// Named parameter sets of increasing size.
pub fn fixtures() -> Vec<(&'static str, HierarchyParams)> {
    let disj = |n: &[u32], k: &[u32]| HierarchyParams::new(HierarchyKind::Disjunctive, n.to_vec(), k.to_vec()).unwrap();
    let conj = |n: &[u32], k: &[u32]| HierarchyParams::new(HierarchyKind::Conjunctive, n.to_vec(), k.to_vec()).unwrap();
    vec![
        ("bank", disj(&[2, 3], &[2, 3])),
        ("nonweighted", disj(&[2, 4], &[2, 4])),
        ("unsc", conj(&[5, 10], &[5, 9])),
        ("three_levels", conj(&[4, 6, 8], &[2, 6, 11])),
        ("four_levels", disj(&[5, 6, 7, 8], &[3, 7, 12, 18])),
    ]
}
