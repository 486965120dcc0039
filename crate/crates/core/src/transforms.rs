//! Tree transformations: the Kelmans shift, edge collapse with a new
//! pendant, and the generalized tree shift, plus move enumeration and
//! preimage search over an enumerated universe.

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("edge {u}-{v} is a pendant edge")]
    PendantEdge { u: usize, v: usize },
    #[error("invalid shift move: {0}")]
    InvalidMove(&'static str),
    #[error("universe tree has order {got}, expected {expected}")]
    UniverseMismatch { expected: usize, got: usize },
}

/// One generalized tree shift: all interior vertices of the u-v path have
/// degree 2, and `w` is the path neighbor of `v` (possibly `u` itself).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtsMove {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
    pub w: usize,
}

/// A Kelmans shift along the tree edge `uv`: the neighbors of `v` other
/// than `u` move to `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KelmansMove {
    pub u: usize,
    pub v: usize,
}

/// T - {vw : w in N(v)\{u}} + {uw : w in N(v)\{u}}. When `v` is pendant the
/// output equals the input.
pub fn kelmans(t: &Tree, m: &KelmansMove) -> Result<Tree, TransformError> {
    if !t.has_edge(m.u, m.v) {
        return Err(TransformError::NotAnEdge { u: m.u, v: m.v });
    }
    let moved: Vec<usize> = t.neighbors(m.v).iter().copied().filter(|&w| w != m.u).collect();
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .map(|&(a, b)| {
            let touches_v = a == m.v || b == m.v;
            let other = if a == m.v { b } else { a };
            if touches_v && moved.contains(&other) {
                (m.u, other)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Tree::from_edges(t.n(), &edges).expect("kelmans shift of a tree is a tree"))
}

/// Collapses a non-pendant edge to a single vertex `z` and attaches a new
/// pendant at `z`. The merged vertex keeps the smaller label of the edge;
/// the freed label becomes the pendant, so the order stays `n`.
pub fn collapse_and_pendant(t: &Tree, e: (usize, usize)) -> Result<Tree, TransformError> {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    if !t.has_edge(a, b) {
        return Err(TransformError::NotAnEdge { u: a, v: b });
    }
    if t.degree(a) < 2 || t.degree(b) < 2 {
        return Err(TransformError::PendantEdge { u: a, v: b });
    }
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .filter(|&&edge| edge != (a, b))
        .map(|&(x, y)| {
            let map = |z: usize| if z == b { a } else { z };
            (map(x), map(y))
        })
        .collect();
    edges.push((a, b));
    Ok(Tree::from_edges(t.n(), &edges).expect("collapse of a tree edge is a tree"))
}

/// All ordered pairs (u, v) whose connecting path has interior degrees 2,
/// each with its path and `w`. Lexicographic (u, v) order.
pub fn enumerate_gts_moves(t: &Tree) -> Vec<GtsMove> {
    let n = t.n();
    let mut moves = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let path = t.path_between(u, v);
            if path[1..path.len() - 1].iter().any(|&x| t.degree(x) != 2) {
                continue;
            }
            let w = path[path.len() - 2];
            moves.push(GtsMove { u, v, path, w });
        }
    }
    moves
}

fn validate_move(t: &Tree, m: &GtsMove) -> Result<(), TransformError> {
    if m.u == m.v {
        return Err(TransformError::InvalidMove("u and v must differ"));
    }
    if m.u >= t.n() || m.v >= t.n() {
        return Err(TransformError::InvalidMove("vertex out of range"));
    }
    if t.path_between(m.u, m.v) != m.path {
        return Err(TransformError::InvalidMove("path is not the u-v tree path"));
    }
    if m.path[1..m.path.len() - 1].iter().any(|&x| t.degree(x) != 2) {
        return Err(TransformError::InvalidMove("path interior vertex of degree != 2"));
    }
    if m.w != m.path[m.path.len() - 2] {
        return Err(TransformError::InvalidMove("w is not the path neighbor of v"));
    }
    Ok(())
}

/// Applies a generalized tree shift: the neighbors of `v` off the path move
/// to `u`. Improper moves are allowed and return a tree isomorphic to the
/// input.
pub fn gts(t: &Tree, m: &GtsMove) -> Result<Tree, TransformError> {
    validate_move(t, m)?;
    let moved: Vec<usize> = t.neighbors(m.v).iter().copied().filter(|&z| z != m.w).collect();
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .map(|&(a, b)| {
            let touches_v = a == m.v || b == m.v;
            let other = if a == m.v { b } else { a };
            if touches_v && moved.contains(&other) {
                (m.u, other)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Tree::from_edges(t.n(), &edges).expect("generalized tree shift of a tree is a tree"))
}

/// A shift is proper iff neither endpoint is pendant; proper shifts raise
/// the pendant count by one, improper shifts fix the isomorphism class.
pub fn is_proper(t: &Tree, m: &GtsMove) -> Result<bool, TransformError> {
    validate_move(t, m)?;
    Ok(!t.is_pendant(m.u) && !t.is_pendant(m.v))
}

/// All (tree, move) pairs in the universe whose proper shift lands on `t1`,
/// up to isomorphism. Empty exactly when `t1` has no proper-shift preimage.
pub fn gts_preimages(
    t1: &Tree,
    universe: &[Tree],
) -> Result<Vec<(Tree, GtsMove)>, TransformError> {
    let target = canonical_code(t1);
    let mut out = Vec::new();
    for t in universe {
        if t.n() != t1.n() {
            return Err(TransformError::UniverseMismatch { expected: t1.n(), got: t.n() });
        }
        for m in enumerate_gts_moves(t) {
            if !is_proper(t, &m).expect("enumerated move is valid") {
                continue;
            }
            let image = gts(t, &m).expect("enumerated move is valid");
            if canonical_code(&image) == target {
                out.push((t.clone(), m));
            }
        }
    }
    Ok(out)
}

/// Canonical codes of every class reachable from the path P_n by collapsing
/// one non-pendant edge and re-attaching a pendant, deduplicated and sorted.
pub fn one_step_collapse_images(n: usize) -> Vec<CanonicalCode> {
    assert!(n >= 4, "collapse images need n >= 4");
    let path = Tree::path(n);
    let mut codes = std::collections::BTreeSet::new();
    for &(a, b) in path.edges() {
        if path.degree(a) < 2 || path.degree(b) < 2 {
            continue;
        }
        let image = collapse_and_pendant(&path, (a, b)).expect("non-pendant path edge");
        codes.insert(canonical_code(&image));
    }
    codes.into_iter().collect()
}

/// Convenience: universe lookup used by campaigns and tests.
pub fn universe(n: usize) -> Vec<Tree> {
    enumerate::enumerate_trees(n).expect("order inside configured range")
}
