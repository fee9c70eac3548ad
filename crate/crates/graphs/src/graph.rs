use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices, so no component exists")]
    NoComponent,
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored both as sorted neighbor lists and as a dense
/// bit-matrix, so neighbor iteration and `has_edge` are both cheap.
/// Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for w in 0..words {
                let mut word = bits[u * words + w];
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    adj[u].push(w * 64 + b);
                    word &= word - 1;
                }
            }
        }
        Ok(Graph { n, adj, words, bits })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).unwrap()
    }

    /// Complete graph.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Path on `n` vertices (0-1-2-...-(n-1)).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency row of `v` as packed bits (length `n.div_ceil(64)`).
    pub fn row_bits(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges();
        edges.extend(other.edges().iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, &edges).unwrap()
    }

    /// Relabel by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).unwrap()
    }

    /// Edge iff non-edge in `self`; an involution.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).unwrap()
    }

    /// Induced subgraph on `keep` (deduplicated, sorted internally).
    /// The returned [`Subgraph`] maps new indices back to originals.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Subgraph {
        let mut vertices: Vec<usize> = keep.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(v < self.n, "vertex {v} out of range");
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && index[w] != usize::MAX {
                    edges.push((i, index[w]));
                }
            }
        }
        Subgraph {
            graph: Graph::new(vertices.len(), &edges).unwrap(),
            vertices,
        }
    }

    /// Connected components as sorted vertex sets, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on a largest component; ties broken by the
    /// lowest contained original vertex index. Errors on `n = 0`.
    pub fn giant_component(&self) -> Result<Subgraph, GraphError> {
        let comps = self.connected_components();
        let best = comps
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .ok_or(GraphError::NoComponent)?;
        Ok(self.induced_subgraph(best))
    }

    /// Maximal induced subgraph of minimum degree `>= k` (possibly empty),
    /// by iterated deletion of low-degree vertices.
    pub fn k_core(&self, k: usize) -> Subgraph {
        assert!(k >= 1);
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut queue: VecDeque<usize> =
            (0..self.n).filter(|&v| deg[v] < k).collect();
        for &v in &queue {
            removed[v] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !removed[v] {
                    deg[v] -= 1;
                    if deg[v] < k {
                        removed[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !removed[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Attach a disjoint copy of the rooted graph `t` at `v`, identifying
    /// `t`'s root with `v`. New vertices are appended after the existing
    /// ones in BFS order from the root.
    pub fn attach_rooted(&self, v: usize, t: &RootedGraph) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let order = t.bfs_order();
        let mut map = vec![usize::MAX; t.graph.n()];
        map[t.root] = v;
        let mut next = self.n;
        for &u in &order {
            if u != t.root {
                map[u] = next;
                next += 1;
            }
        }
        let mut edges = self.edges();
        for (a, b) in t.graph.edges() {
            edges.push((map[a], map[b]));
        }
        Graph::new(self.n + t.graph.n() - 1, &edges)
    }
}

/// An induced subgraph together with the map back to original indices:
/// vertex `i` of `graph` is `vertices[i]` of the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// A graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self, GraphError> {
        if root >= graph.n() {
            return Err(GraphError::VertexOutOfRange(root, graph.n()));
        }
        Ok(RootedGraph { graph, root })
    }

    /// Rooted single edge with the root at one end; the smallest
    /// nontrivial pendant tree.
    pub fn rooted_edge() -> Self {
        RootedGraph { graph: Graph::path(2), root: 1 }
    }

    /// BFS order from the root (root first). Unreachable vertices, if
    /// any, follow in index order.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.graph.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in self.graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        for v in 0..n {
            if !seen[v] {
                order.push(v);
            }
        }
        order
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::codec::JsonGraph::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = crate::codec::JsonGraph::deserialize(d)?;
        j.try_into().map_err(serde::de::Error::custom)
    }
}
