//! Locating pendant copies of a rooted tree: embeddings whose non-root
//! vertices touch nothing outside the copy.

use std::collections::VecDeque;

use thiserror::Error;

use cospectra_graphs::{Graph, RootedGraph};

use crate::rooted::rooted_tree_isomorphism;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PendantError {
    #[error("pendant pattern must be a tree")]
    NotATree,
    #[error("host must be connected with at least {needed} vertices, has {got}")]
    HostTooSmall { needed: usize, got: usize },
    #[error("host must be connected")]
    NotConnected,
}

/// One pendant copy: `vertices[i]` is the host vertex playing tree
/// vertex `i`; the root is `vertices[tree.root]`. Only the root may have
/// neighbors outside the copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantEmbedding {
    pub vertices: Vec<usize>,
    pub root: usize,
}

impl PendantEmbedding {
    /// Non-root host vertices of the copy, sorted.
    pub fn interior(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != self.root)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    /// Check the defining invariants against a host and pattern.
    pub fn is_valid(&self, g: &Graph, t: &RootedGraph) -> bool {
        let tn = t.graph.n();
        if self.vertices.len() != tn || self.root != self.vertices[t.root] {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        // induced edges must be exactly the tree's edges
        for i in 0..tn {
            for j in i + 1..tn {
                if g.has_edge(self.vertices[i], self.vertices[j]) != t.graph.has_edge(i, j) {
                    return false;
                }
            }
        }
        // non-root vertices have no external neighbors
        for i in 0..tn {
            if i == t.root {
                continue;
            }
            for &w in g.neighbors(self.vertices[i]) {
                if !seen[w] {
                    return false;
                }
            }
        }
        true
    }
}

/// Components of `g - r`, each reported with its edge count and the
/// number of edges from `r` into it.
fn components_without(g: &Graph, r: usize) -> Vec<(Vec<usize>, usize, usize)> {
    let n = g.n();
    let mut seen = vec![false; n];
    seen[r] = true;
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut internal_edges = 0usize;
        let mut root_edges = 0usize;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if v == r {
                    root_edges += 1;
                } else {
                    internal_edges += 1;
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
        }
        comp.sort_unstable();
        out.push((comp, internal_edges / 2, root_edges));
    }
    out
}

/// All pendant copies of the rooted tree `t` in `g`, one embedding per
/// distinct (vertex set, root) pair.
///
/// A copy rooted at `r` is `r` together with a set of components of
/// `g - r` that are trees, each tied to `r` by exactly one edge, with
/// sizes summing to `t.n - 1`; the union must be rooted-isomorphic to
/// the pattern.
pub fn find_pendant_copies(g: &Graph, t: &RootedGraph) -> Result<Vec<PendantEmbedding>, PendantError> {
    if !t.graph.is_tree() {
        return Err(PendantError::NotATree);
    }
    let tn = t.graph.n();
    let mut found = Vec::new();
    if tn == 1 {
        for v in 0..g.n() {
            found.push(PendantEmbedding { vertices: vec![v], root: v });
        }
        return Ok(found);
    }
    let need = tn - 1;
    for r in 0..g.n() {
        let comps: Vec<Vec<usize>> = components_without(g, r)
            .into_iter()
            .filter(|(comp, edges, root_edges)| {
                comp.len() <= need && *edges == comp.len() - 1 && *root_edges == 1
            })
            .map(|(comp, _, _)| comp)
            .collect();
        // subsets of eligible components with sizes summing to tn - 1
        let mut chosen: Vec<usize> = Vec::new();
        subset_search(g, t, r, &comps, 0, need, &mut chosen, &mut found);
    }
    Ok(found)
}

fn subset_search(
    g: &Graph,
    t: &RootedGraph,
    r: usize,
    comps: &[Vec<usize>],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<PendantEmbedding>,
) {
    if remaining == 0 {
        let mut keep: Vec<usize> = vec![r];
        for &ci in chosen.iter() {
            keep.extend(comps[ci].iter().copied());
        }
        let sub = g.induced_subgraph(&keep);
        debug_assert!(sub.graph.is_tree());
        let root_in_sub = sub.vertices.binary_search(&r).unwrap();
        let rooted = RootedGraph::new(sub.graph, root_in_sub).unwrap();
        if let Some(map) = rooted_tree_isomorphism(t, &rooted) {
            let vertices: Vec<usize> = map.iter().map(|&local| sub.vertices[local]).collect();
            found.push(PendantEmbedding { vertices, root: r });
        }
        return;
    }
    for ci in from..comps.len() {
        let size = comps[ci].len();
        if size <= remaining {
            chosen.push(ci);
            subset_search(g, t, r, comps, ci + 1, remaining - size, chosen, found);
            chosen.pop();
        }
    }
}

/// Every pair of intersecting pendant copies of `t` must share roots in
/// a connected host with at least `2 t.n` vertices; returns whether that
/// holds for `g`. A `false` here contradicts the shared-root lemma and
/// should be treated as a hard failure by callers.
pub fn shared_root_check(g: &Graph, t: &RootedGraph) -> Result<bool, PendantError> {
    if !g.is_connected() {
        return Err(PendantError::NotConnected);
    }
    if g.n() < 2 * t.graph.n() {
        return Err(PendantError::HostTooSmall { needed: 2 * t.graph.n(), got: g.n() });
    }
    let embeddings = find_pendant_copies(g, t)?;
    let sets: Vec<Vec<usize>> = embeddings.iter().map(PendantEmbedding::vertex_set).collect();
    for i in 0..embeddings.len() {
        for j in i + 1..embeddings.len() {
            let intersects = sets[i].iter().any(|v| sets[j].binary_search(v).is_ok());
            if intersects && embeddings[i].root != embeddings[j].root {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
