//! Canonical byte codes for free trees.
//!
//! The code is an AHU-style parenthesized encoding of the tree rooted at its
//! center; a bicentral tree takes the lexicographically smaller of its two
//! rootings. Two trees have equal codes iff they are isomorphic.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tree::Tree;

/// Order-invariant identifier of a tree's isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeParseError {
    #[error("canonical code hex must have even length")]
    OddLength,
    #[error("invalid hex digit {0:?}")]
    BadDigit(char),
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self, CodeParseError> {
        if !s.len().is_multiple_of(2) {
            return Err(CodeParseError::OddLength);
        }
        let digit = |c: char| c.to_digit(16).ok_or(CodeParseError::BadDigit(c));
        let chars: Vec<char> = s.chars().collect();
        let mut bytes = Vec::with_capacity(chars.len() / 2);
        for pair in chars.chunks(2) {
            bytes.push((digit(pair[0])? * 16 + digit(pair[1])?) as u8);
        }
        Ok(CanonicalCode(bytes))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CanonicalCode::from_hex(&s).map_err(D::Error::custom)
    }
}

/// The one or two central vertices of the tree (the vertices left after
/// repeatedly peeling leaves), sorted by label.
pub fn center(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        for &v in &layer {
            for &w in t.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    c.sort_unstable();
    c
}

/// AHU code of the tree rooted at its center; lexicographic minimum over the
/// two rootings of a bicentral tree.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = center(t)
        .into_iter()
        .map(|root| encode_rooted(t, root))
        .min()
        .expect("tree has a center");
    CanonicalCode(code)
}

fn encode_rooted(t: &Tree, root: usize) -> Vec<u8> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    // children codes are ready once all deeper vertices are encoded
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut child_codes: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v && w != root)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        child_codes.sort_unstable();
        let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in child_codes {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}
