//! Cross-checks of the enumeration and canonical form against independent
//! brute-force oracles, plus frozen values derived from them.

mod common;

use std::collections::BTreeSet;

use common::{brute_force_isomorphic, prufer_class_codes};
use treeshift_core::{
    canonical_code, enumerate_trees, enumerate_trees_with_codes, CanonicalCode, Tree,
};

/// The enumeration must produce exactly the classes the Prüfer sweep finds.
#[test]
fn enumeration_matches_prufer_brute_force_up_to_nine() {
    for n in 2..=9 {
        let enumerated: BTreeSet<CanonicalCode> =
            enumerate_trees_with_codes(n).unwrap().into_iter().map(|(_, c)| c).collect();
        let brute = prufer_class_codes(n);
        assert_eq!(enumerated, brute, "n = {n}");
    }
}

/// Class counts for n = 1..=10, frozen from the Prüfer sweep.
#[test]
fn frozen_class_counts() {
    let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &want) in expected.iter().enumerate() {
        assert_eq!(enumerate_trees(i + 1).unwrap().len(), want);
    }
}

/// Equal canonical codes must mean isomorphic and vice versa. The forward
/// direction is exercised by encoding every labeled tree; the converse by
/// brute-force checks between enumerated class representatives.
#[test]
fn canonical_code_agrees_with_brute_force_isomorphism() {
    for n in 4..=7 {
        let classes = enumerate_trees(n).unwrap();
        for (i, a) in classes.iter().enumerate() {
            for b in classes.iter().skip(i + 1) {
                assert!(
                    !brute_force_isomorphic(a, b),
                    "distinct codes but isomorphic at n = {n}"
                );
            }
        }
        for labeled in common::all_labeled_trees(n) {
            let class = classes
                .iter()
                .find(|c| canonical_code(c) == canonical_code(&labeled))
                .expect("every labeled tree hits an enumerated class");
            assert!(brute_force_isomorphic(class, &labeled));
        }
    }
}

/// Spot checks pinned by hand from the brute-force oracle.
#[test]
fn derived_membership_examples() {
    // spider (2,2,2) and P7 are non-isomorphic 7-vertex trees
    assert!(!brute_force_isomorphic(&Tree::spider(&[2, 2, 2]), &Tree::path(7)));
    // relabeling is invisible to the oracle and to the code
    let relabeled = Tree::from_edges(5, &[(4, 2), (2, 0), (0, 1), (1, 3)]).unwrap();
    assert!(brute_force_isomorphic(&relabeled, &Tree::path(5)));
    assert_eq!(canonical_code(&relabeled), canonical_code(&Tree::path(5)));
}
