//! Exhaustive enumeration of free trees, one representative per
//! isomorphism class.
//!
//! Trees are generated as canonical level sequences with the
//! Wright–Richmond–Odlyzko–McKay successor rule (constant amortized time),
//! built on the Beyer–Hedetniemi successor for rooted level sequences. A
//! level sequence lists vertex depths in preorder; the canonical form roots
//! the tree so that the first root subtree is a deepest one, which yields
//! each free tree exactly once.

use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::tree::Tree;

/// Largest order the stock enumeration accepts. Campaign sizes grow fast
/// enough past this point that a caller should opt in explicitly via
/// [`enumerate_trees_with_max`].
pub const DEFAULT_N_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} is outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
}

/// All isomorphism classes of trees on `n` vertices, sorted by canonical
/// code. Deterministic.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, EnumerateError> {
    Ok(enumerate_trees_with_codes(n)?.into_iter().map(|(t, _)| t).collect())
}

/// Same as [`enumerate_trees`], returning each representative with its code.
pub fn enumerate_trees_with_codes(n: usize) -> Result<Vec<(Tree, CanonicalCode)>, EnumerateError> {
    enumerate_with_codes_and_max(n, DEFAULT_N_MAX)
}

/// Enumeration with an explicit order cap.
pub fn enumerate_trees_with_max(n: usize, n_max: usize) -> Result<Vec<Tree>, EnumerateError> {
    Ok(enumerate_with_codes_and_max(n, n_max)?.into_iter().map(|(t, _)| t).collect())
}

fn enumerate_with_codes_and_max(
    n: usize,
    n_max: usize,
) -> Result<Vec<(Tree, CanonicalCode)>, EnumerateError> {
    if n < 1 || n > n_max {
        return Err(EnumerateError::OutOfRange { n, max: n_max });
    }
    let trees: Vec<Tree> = if n == 1 {
        vec![Tree::from_edges(1, &[]).unwrap()]
    } else {
        LevelSequences::new(n).map(|layout| layout_to_tree(&layout)).collect()
    };
    let mut out: Vec<(Tree, CanonicalCode)> =
        trees.into_iter().map(|t| (canonical_code(&t), t)).map(|(c, t)| (t, c)).collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    for w in out.windows(2) {
        assert!(w[0].1 != w[1].1, "enumeration produced duplicate isomorphism classes");
    }
    Ok(out)
}

/// Iterator over canonical free-tree level sequences for a fixed order >= 2.
struct LevelSequences {
    pending: Option<Vec<usize>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        debug_assert!(n >= 2);
        // the path rooted at its center
        let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        LevelSequences { pending: Some(layout) }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.pending.take()?;
        let layout = next_free(candidate)?;
        self.pending = next_rooted(&layout, None);
        Some(layout)
    }
}

/// Splits a layout at the root's first subtree: `left` holds that subtree's
/// levels shifted down by one, `rest` is the layout with the subtree removed.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &lev)| lev == 1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|&lev| lev - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Beyer–Hedetniemi successor of a rooted level sequence in reverse
/// lexicographic order; `None` once the star is reached. When `at` is given
/// the advance happens at that position instead of the default (the last
/// vertex below depth 2).
fn next_rooted(layout: &[usize], at: Option<usize>) -> Option<Vec<usize>> {
    let p = match at {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Returns the candidate itself when it is a canonical free-tree layout,
/// otherwise jumps straight to the next canonical layout. `None` once the
/// sequence space is exhausted.
fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = *left.iter().max().expect("root has a subtree");
    let rest_height = *rest.iter().max().expect("rest contains the root");
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => left.len() < rest.len() || (left.len() == rest.len() && left <= rest),
    };
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let new_left_height = *new_left.iter().max().expect("root has a subtree");
        let start = next.len() - (new_left_height + 1);
        for (offset, slot) in next[start..].iter_mut().enumerate() {
            *slot = offset + 1;
        }
    }
    Some(next)
}

/// Rebuilds the tree encoded by a preorder level sequence.
fn layout_to_tree(layout: &[usize]) -> Tree {
    let n = layout.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &lev) in layout.iter().enumerate() {
        while stack.last().is_some_and(|&top| layout[top] >= lev) {
            stack.pop();
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Tree::from_edges(n, &edges).expect("level sequence encodes a tree")
}
