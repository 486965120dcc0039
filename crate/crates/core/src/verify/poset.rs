//! The proper-shift poset on isomorphism classes of n-vertex trees.
//!
//! Nodes are canonical codes; a directed edge T -> T1 means T1 is obtained
//! from T by one proper generalized tree shift. Every edge raises the
//! pendant count by exactly one, so the relation is acyclic and graded.

use std::collections::BTreeSet;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::enumerate_trees_with_codes;
use crate::transforms::{enumerate_gts_moves, gts, is_proper};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtsPoset {
    n: usize,
    nodes: Vec<CanonicalCode>,
    reps: Vec<Tree>,
    edges: Vec<(usize, usize)>,
    pendant_counts: Vec<usize>,
}

/// Builds the poset over all classes of order `n` by applying every proper
/// shift to every class and deduplicating images by canonical code.
pub fn build_poset(n: usize) -> GtsPoset {
    assert!(n >= 4, "poset needs n >= 4");
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let nodes: Vec<CanonicalCode> = universe.iter().map(|(_, c)| c.clone()).collect();
    let reps: Vec<Tree> = universe.iter().map(|(t, _)| t.clone()).collect();
    let index_of = |code: &CanonicalCode| {
        nodes.binary_search(code).expect("image class is in the universe")
    };
    let mut edges = BTreeSet::new();
    for (i, tree) in reps.iter().enumerate() {
        for m in enumerate_gts_moves(tree) {
            if !is_proper(tree, &m).expect("enumerated move is valid") {
                continue;
            }
            let image = gts(tree, &m).expect("enumerated move is valid");
            edges.insert((i, index_of(&canonical_code(&image))));
        }
    }
    let pendant_counts = reps.iter().map(Tree::pendant_count).collect();
    GtsPoset { n, nodes, reps, edges: edges.into_iter().collect(), pendant_counts }
}

impl GtsPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical codes of all classes, sorted; node index = position here.
    pub fn nodes(&self) -> &[CanonicalCode] {
        &self.nodes
    }

    pub fn reps(&self) -> &[Tree] {
        &self.reps
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn pendant_counts(&self) -> &[usize] {
        &self.pendant_counts
    }

    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        self.nodes.binary_search(code).ok()
    }

    pub fn path_index(&self) -> usize {
        self.index_of(&canonical_code(&Tree::path(self.n))).expect("path class exists")
    }

    pub fn star_index(&self) -> usize {
        self.index_of(&canonical_code(&Tree::star(self.n))).expect("star class exists")
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(_, to) in &self.edges {
            deg[to] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(from, _) in &self.edges {
            deg[from] += 1;
        }
        deg
    }

    /// Which nodes are reachable from `start` along directed edges
    /// (including `start` itself).
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(from, to) in &self.edges {
            adj[from].push(to);
        }
        let mut seen = vec![false; self.nodes.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Directed BFS distance from `from` to `to`, if reachable.
    pub fn step_distance(&self, from: usize, to: usize) -> Option<usize> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        let mut dist = vec![usize::MAX; self.nodes.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return Some(dist[v]);
            }
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// DOT rendering: one rank per pendant count, nodes labeled by their
    /// representative edge list.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        out.push_str("digraph gts_poset {\n");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box, fontsize=10];\n");
        for (i, tree) in self.reps.iter().enumerate() {
            let label: Vec<String> =
                tree.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "  t{i} [label=\"{}\"];", label.join(" ")).unwrap();
        }
        let max_pendants = self.pendant_counts.iter().copied().max().unwrap_or(0);
        for p in 0..=max_pendants {
            let rank: Vec<String> = (0..self.nodes.len())
                .filter(|&i| self.pendant_counts[i] == p)
                .map(|i| format!("t{i};"))
                .collect();
            if !rank.is_empty() {
                writeln!(out, "  {{ rank=same; {} }}", rank.join(" ")).unwrap();
            }
        }
        for &(from, to) in &self.edges {
            writeln!(out, "  t{from} -> t{to};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_poset_is_a_single_edge() {
        let poset = build_poset(4);
        assert_eq!(poset.nodes().len(), 2);
        assert_eq!(poset.edges().len(), 1);
        let (from, to) = poset.edges()[0];
        assert_eq!(from, poset.path_index());
        assert_eq!(to, poset.star_index());
    }

    #[test]
    fn order_seven_poset_structure() {
        let poset = build_poset(7);
        assert_eq!(poset.nodes().len(), 11);
        let in_deg = poset.in_degrees();
        let out_deg = poset.out_degrees();
        let sources: Vec<usize> =
            (0..11).filter(|&i| in_deg[i] == 0).collect();
        let sinks: Vec<usize> = (0..11).filter(|&i| out_deg[i] == 0).collect();
        assert_eq!(sources, vec![poset.path_index()]);
        assert_eq!(sinks, vec![poset.star_index()]);
        assert!(poset.reachable_from(poset.path_index()).iter().all(|&r| r));
        for &(from, to) in poset.edges() {
            assert_eq!(poset.pendant_counts()[to], poset.pendant_counts()[from] + 1);
        }
    }

    #[test]
    fn grading_fixes_path_length_to_star() {
        for n in 4..=8 {
            let poset = build_poset(n);
            assert_eq!(
                poset.step_distance(poset.path_index(), poset.star_index()),
                Some(n - 3)
            );
        }
    }

    #[test]
    fn dot_export_lists_every_node_and_edge() {
        let poset = build_poset(4);
        let dot = poset.to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("label=").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.contains("rank=same"));
    }
}
