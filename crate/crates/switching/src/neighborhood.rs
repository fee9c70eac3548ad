//! The neighborhood graph of a vertex set: everything a switching on
//! that set can touch.

use cospectra_graphs::Graph;

/// Graph on `X u N(X)` whose edges are exactly the host edges meeting
/// `X`. Not an induced subgraph: edges between two boundary vertices are
/// dropped. Local index `i` is host vertex `vertices[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodGraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
    /// Local indices of the set `X`.
    pub x_set: Vec<usize>,
    /// Local indices of the boundary `N(X) \ X`.
    pub boundary: Vec<usize>,
}

pub fn neighborhood_graph(g: &Graph, x: &[usize]) -> NeighborhoodGraph {
    let mut in_x = vec![false; g.n()];
    for &v in x {
        assert!(v < g.n(), "vertex {v} out of range");
        in_x[v] = true;
    }
    let mut in_scope = in_x.clone();
    for &v in x {
        for &w in g.neighbors(v) {
            in_scope[w] = true;
        }
    }
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| in_scope[v]).collect();
    let local = |v: usize| vertices.binary_search(&v).unwrap();
    let mut edges = Vec::new();
    for &v in &vertices {
        for &w in g.neighbors(v) {
            if w > v && (in_x[v] || in_x[w]) {
                edges.push((local(v), local(w)));
            }
        }
    }
    let x_set: Vec<usize> = vertices.iter().enumerate().filter(|&(_, &v)| in_x[v]).map(|(i, _)| i).collect();
    let boundary: Vec<usize> =
        vertices.iter().enumerate().filter(|&(_, &v)| !in_x[v]).map(|(i, _)| i).collect();
    NeighborhoodGraph {
        graph: Graph::new(vertices.len(), &edges).unwrap(),
        vertices,
        x_set,
        boundary,
    }
}

/// True iff every vertex has degree exactly 2, i.e. the graph is a
/// disjoint union of cycles (vacuously true when empty).
pub fn is_disjoint_cycles(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_full_x() {
        let g = Graph::cycle(6);
        let nb = neighborhood_graph(&g, &[]);
        assert_eq!(nb.graph.n(), 0);
        let nb = neighborhood_graph(&g, &(0..6).collect::<Vec<_>>());
        assert_eq!(nb.graph, g);
    }

    #[test]
    fn two_adjacent_vertices_of_c6_give_p4() {
        let g = Graph::cycle(6);
        let nb = neighborhood_graph(&g, &[0, 1]);
        // vertices 5-0-1-2 with edges meeting {0,1} only
        assert_eq!(nb.vertices, vec![0, 1, 2, 5]);
        assert!(cospectra_graphs::is_isomorphic(&nb.graph, &Graph::path(4)));
    }

    #[test]
    fn boundary_is_independent() {
        // star: boundary vertices all pairwise non-adjacent in the
        // neighborhood graph even when adjacent in the host
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let nb = neighborhood_graph(&g, &[0]);
        for (i, &a) in nb.boundary.iter().enumerate() {
            for &b in &nb.boundary[i + 1..] {
                assert!(!nb.graph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn cycle_union_detection() {
        assert!(is_disjoint_cycles(&Graph::cycle(5)));
        assert!(!is_disjoint_cycles(&Graph::path(3)));
        assert!(is_disjoint_cycles(&Graph::cycle(3).disjoint_union(&Graph::cycle(4))));
        assert!(!is_disjoint_cycles(&Graph::empty(1)));
    }
}
