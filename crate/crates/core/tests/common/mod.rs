//! Independent oracles used by the integration tests. Nothing here shares
//! code with the library paths it checks.
#![allow(dead_code)] // each test binary uses a different subset

use std::collections::BTreeSet;

use treeshift_core::{canonical_code, CanonicalCode, Tree};

/// Decodes a Prüfer sequence of length n-2 into a labeled tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Tree {
    assert_eq!(seq.len(), n.saturating_sub(2));
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).expect("a leaf remains");
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).expect("Prüfer decode yields a tree")
}

/// Visits every labeled tree on n vertices, by walking all n^(n-2) Prüfer
/// sequences. Feasible up to n = 9 or so.
pub fn for_each_labeled_tree(n: usize, mut visit: impl FnMut(Tree)) {
    assert!(n >= 2);
    if n == 2 {
        visit(Tree::from_edges(2, &[(0, 1)]).unwrap());
        return;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        visit(prufer_decode(n, &seq));
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Every labeled tree on n vertices; keep to small n.
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for_each_labeled_tree(n, |t| out.push(t));
    out
}

/// Distinct isomorphism classes among all labeled trees, via canonical
/// codes computed per labeled tree.
pub fn prufer_class_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut codes = BTreeSet::new();
    for_each_labeled_tree(n, |t| {
        codes.insert(canonical_code(&t));
    });
    codes
}

/// Isomorphism by brute force over every vertex permutation; usable for
/// n <= 8.
pub fn brute_force_isomorphic(a: &Tree, b: &Tree) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let n = a.n();
    let target: BTreeSet<(usize, usize)> = b.edges().iter().copied().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| {
            let (x, y) = (p[u].min(p[v]), p[u].max(p[v]));
            target.contains(&(x, y))
        })
    })
}

fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
