//! Swapping pendant trees for their cospectral partners, and enumerating
//! the mates reachable by swapping subsets of rigid pendant roots.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use cospectra_graphs::{
    automorphism_moved_vertices, canonical_form, AutBudget, AutOutcome, Graph, RootedGraph,
};
use cospectra_spectral::char_poly;

use crate::embed::{find_pendant_copies, PendantEmbedding, PendantError};
use crate::rooted::rooted_canonical_code;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwapMode {
    /// Swapping preserves the characteristic polynomial.
    Cospectral,
    /// Swapping preserves the char polys of graph and complement.
    RCospectral,
}

/// Two non-isomorphic rooted trees on equal vertex counts with matching
/// char polys and matching root-deleted char polys, so attaching one or
/// the other to any host at any vertex yields cospectral graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootedTreePair {
    pub first: RootedGraph,
    pub second: RootedGraph,
    pub mode: SwapMode,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SwapError {
    #[error("pair trees violate the swap-pair invariants: {0}")]
    BadPair(&'static str),
    #[error("embedding is not a valid pendant copy of the pair's first tree")]
    InvalidEmbedding,
    #[error(transparent)]
    Pendant(#[from] PendantError),
}

impl RootedTreePair {
    pub fn new(first: RootedGraph, second: RootedGraph, mode: SwapMode) -> Result<Self, SwapError> {
        let pair = RootedTreePair { first, second, mode };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<(), SwapError> {
        if !self.first.graph.is_tree() || !self.second.graph.is_tree() {
            return Err(SwapError::BadPair("both members must be trees"));
        }
        if self.first.graph.n() != self.second.graph.n() {
            return Err(SwapError::BadPair("members must have equal vertex counts"));
        }
        if rooted_canonical_code(&self.first) == rooted_canonical_code(&self.second) {
            return Err(SwapError::BadPair("members must differ as rooted trees"));
        }
        if char_poly(&self.first.graph) != char_poly(&self.second.graph) {
            return Err(SwapError::BadPair("char polys must agree"));
        }
        if char_poly(&delete_root(&self.first)) != char_poly(&delete_root(&self.second)) {
            return Err(SwapError::BadPair("root-deleted char polys must agree"));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.first.graph.n()
    }

    /// The same pair with the roles of the trees reversed.
    pub fn reversed(&self) -> RootedTreePair {
        RootedTreePair {
            first: self.second.clone(),
            second: self.first.clone(),
            mode: self.mode,
        }
    }
}

pub(crate) fn delete_root(t: &RootedGraph) -> Graph {
    let keep: Vec<usize> = (0..t.graph.n()).filter(|&v| v != t.root).collect();
    t.graph.induced_subgraph(&keep).graph
}

/// Replace the pendant copy `e` of `pair.first` by `pair.second`: delete
/// the copy except its root and attach the partner tree there. The result
/// is exactly cospectral to `g` (R-cospectral for an R-mode pair).
///
/// Surviving vertices keep their relative order; the swapped-in tree is
/// appended in BFS order from its root.
pub fn swap_pendant(g: &Graph, e: &PendantEmbedding, pair: &RootedTreePair) -> Result<Graph, SwapError> {
    if !e.is_valid(g, &pair.first) {
        return Err(SwapError::InvalidEmbedding);
    }
    Ok(swap_many(g, &[e.clone()], pair))
}

/// Swap several pairwise disjoint embeddings in one pass. Callers have
/// already validated the embeddings.
fn swap_many(g: &Graph, embeddings: &[PendantEmbedding], pair: &RootedTreePair) -> Graph {
    let mut remove = vec![false; g.n()];
    for e in embeddings {
        for v in e.interior() {
            debug_assert!(!remove[v], "embeddings must be disjoint");
            remove[v] = true;
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !remove[v]).collect();
    let base = g.induced_subgraph(&keep);
    let mut out = base.graph;
    for e in embeddings {
        let root_new = base.vertices.binary_search(&e.root).unwrap();
        out = out.attach_rooted(root_new, &pair.second).unwrap();
    }
    out
}

/// Result of mate enumeration.
#[derive(Debug, Clone)]
pub struct MateEnumeration {
    /// Pairwise non-isomorphic graphs, the unswapped host included.
    pub graphs: Vec<Graph>,
    /// Roots that were both pendant-decorated and certified rigid.
    pub rigid_roots: Vec<usize>,
    /// The automorphism search ran out of budget, so only the trivial
    /// subset was used.
    pub aut_budget_exhausted: bool,
}

/// Enumerate the distinct graphs obtained by swapping `pair.first` to
/// `pair.second` on every subset of pendant roots that no automorphism
/// moves, deduplicated by canonical form and truncated at `max_count`.
pub fn enumerate_mates(
    g: &Graph,
    pair: &RootedTreePair,
    max_count: usize,
) -> Result<MateEnumeration, SwapError> {
    let embeddings = find_pendant_copies(g, &pair.first)?;

    let (moved, exhausted) = match automorphism_moved_vertices(g, AutBudget::default()) {
        AutOutcome::Moved(m) => (m, false),
        AutOutcome::Unknown => ((0..g.n()).collect(), true),
    };

    // group embeddings by root; keep roots whose copies are pairwise
    // disjoint and which no automorphism moves
    let mut roots: Vec<usize> = embeddings.iter().map(|e| e.root).collect();
    roots.sort_unstable();
    roots.dedup();
    let mut usable: Vec<(usize, Vec<PendantEmbedding>)> = Vec::new();
    let mut claimed = vec![false; g.n()];
    for &r in &roots {
        if moved.binary_search(&r).is_ok() {
            continue;
        }
        let mine: Vec<PendantEmbedding> =
            embeddings.iter().filter(|e| e.root == r).cloned().collect();
        let mut interior = vec![false; g.n()];
        let mut disjoint = true;
        for e in &mine {
            for v in e.interior() {
                if interior[v] || claimed[v] {
                    disjoint = false;
                }
                interior[v] = true;
            }
        }
        if !disjoint {
            continue;
        }
        for v in 0..g.n() {
            if interior[v] {
                claimed[v] = true;
            }
        }
        usable.push((r, mine));
    }

    let rigid_roots: Vec<usize> = usable.iter().map(|&(r, _)| r).collect();
    let mut graphs: Vec<Graph> = Vec::new();
    let mut forms: Vec<Vec<u8>> = Vec::new();
    let k = usable.len();
    'subsets: for mask in 0u64..1u64 << k.min(63) {
        let mut batch: Vec<PendantEmbedding> = Vec::new();
        for (i, (_, embs)) in usable.iter().enumerate() {
            if mask >> i & 1 == 1 {
                batch.extend(embs.iter().cloned());
            }
        }
        let mate = swap_many(g, &batch, pair);
        let form = canonical_form(&mate);
        if !forms.contains(&form) {
            forms.push(form);
            graphs.push(mate);
            if graphs.len() >= max_count {
                break 'subsets;
            }
        }
    }
    Ok(MateEnumeration { graphs, rigid_roots, aut_budget_exhausted: exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospectra_graphs::is_isomorphic;
    use cospectra_spectral::are_cospectral;

    /// A hand-checkable pair sharing char polys both whole and
    /// root-deleted would be a discovery-run product; these tests use a
    /// quick fake: the same tree twice fails validation.
    #[test]
    fn validation_rejects_identical_trees() {
        let t = RootedGraph::new(Graph::path(4), 0).unwrap();
        assert!(matches!(
            RootedTreePair::new(t.clone(), t, SwapMode::Cospectral),
            Err(SwapError::BadPair(_))
        ));
    }

    #[test]
    fn swap_on_single_vertex_host_yields_partner() {
        // With the host a single vertex, the decorated graph is the tree
        // itself and the swap must produce the partner tree.
        let pairs = crate::discover::discover_swap_pairs(9, SwapMode::Cospectral).unwrap();
        let pair = &pairs[0];
        let g = pair.first.graph.clone();
        let embeddings = find_pendant_copies(&g, &pair.first).unwrap();
        let e = embeddings
            .iter()
            .find(|e| e.root == pair.first.root && e.vertices.len() == g.n())
            .expect("whole-graph embedding");
        let swapped = swap_pendant(&g, e, pair).unwrap();
        assert!(is_isomorphic(&swapped, &pair.second.graph));
        assert!(are_cospectral(&swapped, &g));
    }

    #[test]
    fn swap_then_swap_back_is_isomorphic() {
        let pairs = crate::discover::discover_swap_pairs(9, SwapMode::Cospectral).unwrap();
        let pair = &pairs[0];
        let host = Graph::cycle(5);
        let g = host.attach_rooted(2, &pair.first).unwrap();
        let e = find_pendant_copies(&g, &pair.first)
            .unwrap()
            .into_iter()
            .find(|e| e.root == 2)
            .unwrap();
        let swapped = swap_pendant(&g, &e, pair).unwrap();
        assert!(are_cospectral(&g, &swapped));
        let back_pair = pair.reversed();
        let e2 = find_pendant_copies(&swapped, &back_pair.first)
            .unwrap()
            .into_iter()
            .find(|e| e.root == 2)
            .unwrap();
        let back = swap_pendant(&swapped, &e2, &back_pair).unwrap();
        assert!(is_isomorphic(&back, &g));
    }

    #[test]
    fn invalid_embedding_rejected() {
        let pairs = crate::discover::discover_swap_pairs(9, SwapMode::Cospectral).unwrap();
        let pair = &pairs[0];
        let g = Graph::cycle(12);
        let bogus = PendantEmbedding { vertices: (0..9).collect(), root: 8 };
        assert_eq!(swap_pendant(&g, &bogus, pair), Err(SwapError::InvalidEmbedding));
    }

    #[test]
    fn zero_copy_host_enumerates_only_itself() {
        let pairs = crate::discover::discover_swap_pairs(9, SwapMode::Cospectral).unwrap();
        let g = Graph::cycle(10);
        let out = enumerate_mates(&g, &pairs[0], 100).unwrap();
        assert_eq!(out.graphs.len(), 1);
        assert_eq!(out.graphs[0], g);
        assert!(out.rigid_roots.is_empty());
    }
}
