//! Search for a small connected subgraph with more edges than vertices
//! (equivalently, cyclomatic number at least two).

use std::collections::VecDeque;

use cospectra_graphs::Graph;

/// A connected (not necessarily induced) subgraph witness with
/// `edges.len() >= vertices.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl DenseWitness {
    fn from_edge_set(mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        DenseWitness { vertices, edges }
    }
}

/// Cycles of length at most `max_len`, each as a closed vertex walk
/// starting at its least vertex, deduplicated by direction.
fn cycles_up_to(g: &Graph, max_len: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for s in 0..g.n() {
        if found.len() >= cap {
            break;
        }
        path.push(s);
        extend_cycle(g, s, max_len, cap, &mut path, &mut found);
        path.pop();
    }
    found
}

fn extend_cycle(
    g: &Graph,
    start: usize,
    max_len: usize,
    cap: usize,
    path: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if found.len() >= cap {
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 {
            // dedupe direction: second vertex below final vertex
            if path[1] < *path.last().unwrap() {
                found.push(path.clone());
            }
        } else if w > start && !path.contains(&w) && path.len() < max_len {
            path.push(w);
            extend_cycle(g, start, max_len, cap, path, found);
            path.pop();
        }
    }
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Find a connected subgraph on at most `v_bound` vertices with strictly
/// more edges than vertices, or `None`. Such a witness, when it exists,
/// is two distinct short cycles plus a connecting path, so the search
/// enumerates short cycles and joins pairs.
pub fn dense_small_subgraph(g: &Graph, v_bound: usize) -> Option<DenseWitness> {
    assert!(v_bound >= 3);
    // components with cyclomatic number < 2 can be skipped wholesale
    let rich_component = g.connected_components().into_iter().any(|comp| {
        let sub = g.induced_subgraph(&comp);
        sub.graph.edge_count() >= sub.graph.n() + 1
    });
    if !rich_component {
        return None;
    }
    let cycles = cycles_up_to(g, v_bound, 5_000);
    let mut best: Option<DenseWitness> = None;
    let mut consider = |w: DenseWitness| {
        if w.vertices.len() <= v_bound
            && w.edges.len() >= w.vertices.len() + 1
            && best.as_ref().is_none_or(|b| w.vertices.len() < b.vertices.len())
        {
            best = Some(w);
        }
    };
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let (a, b) = (&cycles[i], &cycles[j]);
            let shared = a.iter().any(|v| b.contains(v));
            if shared {
                let mut edges = cycle_edges(a);
                edges.extend(cycle_edges(b));
                let w = DenseWitness::from_edge_set(edges);
                if w.edges.len() >= w.vertices.len() + 1 {
                    consider(w);
                }
            } else if let Some(path) = shortest_path_between(g, a, b) {
                let mut edges = cycle_edges(a);
                edges.extend(cycle_edges(b));
                for win in path.windows(2) {
                    edges.push((win[0].min(win[1]), win[0].max(win[1])));
                }
                consider(DenseWitness::from_edge_set(edges));
            }
        }
    }
    best
}

/// Shortest path from any vertex of `a` to any vertex of `b` (vertex
/// sequence, endpoints included).
fn shortest_path_between(g: &Graph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &v in a {
        seen[v] = true;
        queue.push_back(v);
    }
    let target: Vec<bool> = {
        let mut t = vec![false; g.n()];
        for &v in b {
            t[v] = true;
        }
        t
    };
    while let Some(u) = queue.pop_front() {
        if target[u] {
            let mut path = vec![u];
            let mut x = u;
            while parent[x] != usize::MAX {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}
