//! Property tests over random trees drawn from Prüfer sequences.

mod common;

use common::prufer_decode;
use proptest::prelude::*;
use treeshift_core::spectral::{self, DistMatrix, MatrixKind};
use treeshift_core::transforms::{self, GtsMove, KelmansMove};
use treeshift_core::{canonical_code, io, Tree, DEFAULT_POWER_TOL};

/// Improper shifts fix the isomorphism class, exhaustively for n <= 9.
#[test]
fn improper_shifts_fix_the_class_exhaustively() {
    for n in 4..=9 {
        for t in treeshift_core::enumerate_trees(n).unwrap() {
            let code = canonical_code(&t);
            for m in transforms::enumerate_gts_moves(&t) {
                if transforms::is_proper(&t, &m).unwrap() {
                    continue;
                }
                let out = transforms::gts(&t, &m).unwrap();
                assert_eq!(canonical_code(&out), code, "n = {n}, move {m:?}");
            }
        }
    }
}

/// Variational bound with a fixed pseudorandom sample: a thousand unit
/// vectors per matrix over the full order-7 universe stay below the radius.
#[test]
fn thousand_random_unit_vectors_respect_the_radius() {
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        // xorshift64*, mapped to [-1, 1)
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        let bits = state.wrapping_mul(0x2545f4914f6cdd1d);
        (bits >> 11) as f64 / (1u64 << 52) as f64 - 1.0
    };
    for t in treeshift_core::enumerate_trees(7).unwrap() {
        if t.pendant_count() == t.n() - 1 {
            continue; // star
        }
        for kind in [MatrixKind::Distance, MatrixKind::SignlessLaplacian, MatrixKind::DAlpha(0.5)] {
            let m = spectral::build_matrix(&t, kind).unwrap();
            let radius = spectral::spectral_radius(&m, DEFAULT_POWER_TOL).unwrap().radius;
            for _ in 0..1000 {
                let mut x: Vec<f64> = (0..m.n()).map(|_| next()).collect();
                let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm < 1e-9 {
                    continue;
                }
                for v in &mut x {
                    *v /= norm;
                }
                let q = spectral::rayleigh(&m, &x).unwrap();
                assert!(q <= radius + 1e-9, "kind {kind:?}: {q} > {radius}");
            }
        }
    }
}

/// A random tree on 4..=10 vertices.
fn arb_tree() -> impl Strategy<Value = Tree> {
    (4usize..=10)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, n - 2)))
        .prop_map(|(n, seq)| prufer_decode(n, &seq))
}

fn arb_tree_with_permutation() -> impl Strategy<Value = (Tree, Vec<usize>)> {
    arb_tree().prop_flat_map(|t| {
        let n = t.n();
        (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(t.n(), &edges).unwrap()
}

proptest! {
    #[test]
    fn distances_form_a_metric((t, _) in arb_tree_with_permutation()) {
        let m = t.metrics();
        let d = &m.distances;
        for i in 0..t.n() {
            prop_assert_eq!(d.get(i, i), 0);
            for j in 0..t.n() {
                prop_assert_eq!(d.get(i, j), d.get(j, i));
                if i != j {
                    prop_assert!(d.get(i, j) >= 1);
                }
            }
        }
        prop_assert_eq!(m.diameter as u32, d.max_entry());
        prop_assert_eq!(m.pendant_vertices, t.pendant_vertices());
    }

    #[test]
    fn canonical_code_is_relabeling_invariant((t, perm) in arb_tree_with_permutation()) {
        prop_assert_eq!(canonical_code(&t), canonical_code(&relabel(&t, &perm)));
    }

    // Pendant count rises by one exactly when both endpoints are
    // non-pendant; a pendant `v` fixes the tree and a pendant `u` swaps
    // roles with `v`, fixing the class.
    #[test]
    fn kelmans_shift_preserves_treeness_and_pendant_counts(t in arb_tree(), i in 0usize..64) {
        let &(a, b) = &t.edges()[i % t.edges().len()];
        let out = transforms::kelmans(&t, &KelmansMove { u: a, v: b }).unwrap();
        prop_assert_eq!(out.n(), t.n());
        if t.degree(b) == 1 {
            prop_assert_eq!(&out, &t);
        } else if t.degree(a) == 1 {
            prop_assert_eq!(canonical_code(&out), canonical_code(&t));
        } else {
            prop_assert_eq!(out.pendant_count(), t.pendant_count() + 1);
            let (d0, d1) = (t.metrics().diameter, out.metrics().diameter);
            prop_assert!(d1 == d0 || d1 + 1 == d0);
        }
    }

    #[test]
    fn proper_shift_adds_a_pendant_improper_fixes_the_class(t in arb_tree(), i in 0usize..256) {
        let moves = transforms::enumerate_gts_moves(&t);
        let m: &GtsMove = &moves[i % moves.len()];
        let out = transforms::gts(&t, m).unwrap();
        if transforms::is_proper(&t, m).unwrap() {
            prop_assert_eq!(out.pendant_count(), t.pendant_count() + 1);
            prop_assert_ne!(canonical_code(&out), canonical_code(&t));
        } else {
            prop_assert_eq!(canonical_code(&out), canonical_code(&t));
        }
    }

    #[test]
    fn rayleigh_quotient_never_beats_the_radius(t in arb_tree(), raw in proptest::collection::vec(-1.0f64..1.0, 10)) {
        prop_assume!(t.pendant_count() < t.n() - 1); // skip stars
        let m = spectral::build_matrix(&t, MatrixKind::Distance).unwrap();
        let s = spectral::spectral_radius(&m, DEFAULT_POWER_TOL).unwrap();
        let mut x: Vec<f64> = raw[..m.n()].to_vec();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-6);
        for v in &mut x {
            *v /= norm;
        }
        let q = spectral::rayleigh(&m, &x).unwrap();
        prop_assert!(q <= s.radius + 1e-9);
    }

    #[test]
    fn radius_is_sandwiched_by_row_sums(t in arb_tree(), alpha in 0.0f64..0.99) {
        prop_assume!(t.pendant_count() < t.n() - 1);
        let m = spectral::build_matrix(&t, MatrixKind::DAlpha(alpha)).unwrap();
        let s = spectral::spectral_radius(&m, DEFAULT_POWER_TOL).unwrap();
        let sums = m.row_sums();
        let lo = sums.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = sums.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(lo - 1e-9 <= s.radius && s.radius <= hi + 1e-9);
        prop_assert!(s.radius >= hi / m.n() as f64 - 1e-9); // max row mean
        prop_assert!(s.perron.iter().all(|&e| e > 0.0));
        prop_assert!(s.residual <= DEFAULT_POWER_TOL);
    }

    #[test]
    fn dalpha_interpolates_its_endpoints(t in arb_tree()) {
        prop_assume!(t.pendant_count() < t.n() - 1);
        let d = spectral::build_matrix(&t, MatrixKind::Distance).unwrap();
        let q = spectral::build_matrix(&t, MatrixKind::SignlessLaplacian).unwrap();
        let a0 = spectral::build_matrix(&t, MatrixKind::DAlpha(0.0)).unwrap();
        let h = spectral::build_matrix(&t, MatrixKind::DAlpha(0.5)).unwrap();
        let radius = |m: &DistMatrix| spectral::spectral_radius(m, DEFAULT_POWER_TOL).unwrap().radius;
        prop_assert_eq!(radius(&a0), radius(&d));
        prop_assert!((2.0 * radius(&h) - radius(&q)).abs() <= 1e-9);
    }

    #[test]
    fn edge_list_and_tree_set_round_trip((t, _) in arb_tree_with_permutation()) {
        let mut buf = Vec::new();
        io::write_edge_list(&mut buf, &t).unwrap();
        prop_assert_eq!(&io::read_edge_list(buf.as_slice()).unwrap(), &t);

        let items = vec![(t.clone(), canonical_code(&t))];
        let mut jsonl = Vec::new();
        io::write_tree_set(&mut jsonl, &items).unwrap();
        prop_assert_eq!(io::read_tree_set(jsonl.as_slice()).unwrap(), items);
    }
}
