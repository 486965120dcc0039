//! Labeled trees, their metric data, and complement distances.
//!
//! A [`Tree`] is an immutable tree on `n` vertices with 0-based labels.
//! Construction validates the tree axioms once; everything downstream can
//! rely on them. Distances are always computed by breadth-first search,
//! never by closed forms: closed-form identities are claims that the
//! verification campaigns check *against* the BFS output.

use thiserror::Error;

/// Rejected edge lists, one variant per defect.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("a tree on {n} vertices has exactly {expected} edges, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("vertex label {label} out of range for n = {n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge list contains a cycle")]
    Cycle,
    #[error("edge list does not connect all vertices")]
    Disconnected,
}

/// The complement of the input is not connected. Among trees this happens
/// exactly for the stars K_{1,n-1} (including the degenerate n = 2, 3
/// paths), which every spectral statement excludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("complement graph is disconnected")]
    Disconnected,
}

/// Immutable labeled tree on `n` vertices, 0-based labels.
///
/// Edges are stored normalized (`u < v`) and sorted; adjacency lists are
/// derived at construction and kept sorted. Equality and hashing are on the
/// labeled edge set, not the isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Symmetric matrix of exact integer distances, flat row-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

/// Metric summary of a tree: diameter, pendant vertices, all-pairs distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMetrics {
    pub diameter: usize,
    pub pendant_vertices: Vec<usize>,
    pub distances: DistanceMatrix,
}

impl Tree {
    /// Validates and builds a tree from an edge list. Edge orientation and
    /// order do not matter.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::NoVertices);
        }
        let expected = n - 1;
        if edges.len() != expected {
            return Err(TreeError::EdgeCount { n, expected, got: edges.len() });
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(TreeError::LabelOutOfRange { label: a, n });
            }
            if b >= n {
                return Err(TreeError::LabelOutOfRange { label: b, n });
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        // Union-find. With n-1 distinct edges a cycle and a disconnection can
        // only occur together; the scan reports the cycle it hits first.
        let mut parent: Vec<usize> = (0..n).collect();
        for &(a, b) in &norm {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(TreeError::Cycle);
            }
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        if (1..n).any(|v| find(&mut parent, v) != root) {
            return Err(TreeError::Disconnected);
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree { n, edges: norm, adj })
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges).expect("path edge list is a tree")
    }

    /// The star K_{1,n-1} centered at vertex 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::from_edges(n, &edges).expect("star edge list is a tree")
    }

    /// Spider with hub 0 and the given leg lengths; legs are labeled
    /// consecutively outward from the hub.
    pub fn spider(legs: &[usize]) -> Self {
        assert!(legs.iter().all(|&l| l >= 1), "spider legs must be nonempty");
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edges(n, &edges).expect("spider edge list is a tree")
    }

    /// Double star S(a, b): adjacent centers 0 and 1 carrying `a` and `b`
    /// pendant leaves.
    pub fn double_star(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1, "double star needs a leaf on each center");
        let n = a + b + 2;
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        Tree::from_edges(n, &edges).expect("double star edge list is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_pendant(v)).collect()
    }

    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    /// The unique path from `u` to `v`, inclusive of both endpoints.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        assert!(u < self.n && v < self.n);
        if u == v {
            return vec![u];
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([u]);
        parent[u] = u;
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    if y == v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// BFS distances from every vertex, plus diameter and pendant list.
    pub fn metrics(&self) -> TreeMetrics {
        let distances = all_pairs_bfs(&self.adj).expect("tree is connected");
        TreeMetrics {
            diameter: distances.max_entry() as usize,
            pendant_vertices: self.pendant_vertices(),
            distances,
        }
    }

    /// Exact distances of the complement graph, by explicit construction and
    /// all-pairs BFS. Fails iff the complement is disconnected.
    pub fn complement_distances(&self) -> Result<DistanceMatrix, ComplementError> {
        let comp = self.complement_adjacency();
        all_pairs_bfs(&comp).ok_or(ComplementError::Disconnected)
    }

    fn complement_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|v| {
                let mut row = Vec::with_capacity(self.n - 1 - self.adj[v].len());
                let mut nb = self.adj[v].iter().peekable();
                for w in 0..self.n {
                    if nb.peek() == Some(&&w) {
                        nb.next();
                        continue;
                    }
                    if w != v {
                        row.push(w);
                    }
                }
                row
            })
            .collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn bfs_distances(adj: &[Vec<usize>], src: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[src] = 0;
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `None` iff the graph is disconnected.
fn all_pairs_bfs(adj: &[Vec<usize>]) -> Option<DistanceMatrix> {
    let n = adj.len();
    let mut data = vec![0u32; n * n];
    for v in 0..n {
        let row = bfs_distances(adj, v);
        if row.contains(&u32::MAX) {
            return None;
        }
        data[v * n..(v + 1) * n].copy_from_slice(&row);
    }
    Some(DistanceMatrix { n, data })
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.data[i * self.n..(i + 1) * self.n].iter().map(|&d| d as u64).sum()
    }

    /// Row sums, i.e. the transmission of every vertex.
    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.row_sum(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_accepts_path_and_star() {
        let p4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, Tree::path(4));
        let k13 = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(k13, Tree::star(4));
        assert_eq!(k13.degree(0), 3);
    }

    #[test]
    fn from_edges_rejects_each_defect_distinctly() {
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (0, 1)]),
            Err(TreeError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Tree::from_edges(4, &[(0, 1), (1, 2), (0, 2)]),
            Err(TreeError::Cycle)
        );
        assert_eq!(
            Tree::from_edges(4, &[(0, 1), (1, 2)]),
            Err(TreeError::EdgeCount { n: 4, expected: 3, got: 2 })
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 3)]),
            Err(TreeError::LabelOutOfRange { label: 3, n: 3 })
        );
        assert_eq!(Tree::from_edges(2, &[(1, 1)]), Err(TreeError::SelfLoop(1)));
        assert_eq!(Tree::from_edges(0, &[]), Err(TreeError::NoVertices));
    }

    #[test]
    fn single_vertex_tree() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.metrics().diameter, 0);
        assert_eq!(t.complement_distances().unwrap().get(0, 0), 0);
    }

    #[test]
    fn metrics_of_known_trees() {
        let m = Tree::path(5).metrics();
        assert_eq!(m.diameter, 4);
        assert_eq!(m.pendant_vertices, vec![0, 4]);
        assert_eq!(m.distances.get(0, 4), 4);

        let m = Tree::star(4).metrics();
        assert_eq!(m.diameter, 2);
        assert_eq!(m.pendant_vertices, vec![1, 2, 3]);

        let m = Tree::spider(&[2, 2, 2]).metrics();
        assert_eq!(m.diameter, 4);
        assert_eq!(m.pendant_vertices.len(), 3);
    }

    #[test]
    fn distance_matrix_is_metric() {
        let d = Tree::spider(&[1, 2, 3]).metrics().distances;
        let n = d.n();
        for i in 0..n {
            assert_eq!(d.get(i, i), 0);
            for j in 0..n {
                assert_eq!(d.get(i, j), d.get(j, i));
                if i != j {
                    assert!(d.get(i, j) >= 1);
                }
                for k in 0..n {
                    assert!(d.get(i, j) + d.get(j, k) >= d.get(i, k));
                }
            }
        }
    }

    #[test]
    fn transmissions_of_p4_distances() {
        let d = Tree::path(4).metrics().distances;
        assert_eq!(d.transmissions(), vec![6, 4, 4, 6]);
    }

    #[test]
    fn star_complement_is_disconnected() {
        assert_eq!(Tree::star(5).complement_distances(), Err(ComplementError::Disconnected));
        // degenerate small stars
        assert_eq!(Tree::path(2).complement_distances(), Err(ComplementError::Disconnected));
        assert_eq!(Tree::path(3).complement_distances(), Err(ComplementError::Disconnected));
    }

    #[test]
    fn p5_complement_matches_adjacency_closed_form() {
        let t = Tree::path(5);
        let d = t.complement_distances().unwrap();
        assert_eq!(d.get(0, 1), 2);
        assert_eq!(d.get(0, 2), 1);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j {
                    0
                } else if t.has_edge(i, j) {
                    2
                } else {
                    1
                };
                assert_eq!(d.get(i, j), expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn double_star_complement_breaks_closed_form_at_centers() {
        let t = Tree::double_star(2, 2);
        let d = t.complement_distances().unwrap();
        assert_eq!(d.get(0, 1), 3);
        // every other pair still matches 1 + adjacency
        for i in 0..6 {
            for j in 0..6 {
                if i == j || (i.min(j), i.max(j)) == (0, 1) {
                    continue;
                }
                let expect = if t.has_edge(i, j) { 2 } else { 1 };
                assert_eq!(d.get(i, j), expect);
            }
        }
    }

    #[test]
    fn path_between_endpoints() {
        let t = Tree::spider(&[2, 2, 2]);
        assert_eq!(t.path_between(2, 4), vec![2, 1, 0, 3, 4]);
        assert_eq!(t.path_between(0, 0), vec![0]);
        assert_eq!(t.path_between(1, 2), vec![1, 2]);
    }
}
