//! Disjoint unions of paths and cycles: the only graphs of maximum
//! degree two, where all cospectrality is generated by the family
//! `(C_{2n} + 2 P_1, C_4 + 2 P_{n-1})`.

use std::collections::BTreeMap;

use thiserror::Error;

use cospectra_graphs::Graph;
use cospectra_spectral::{cycle_char_poly, path_char_poly, IntPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PcError {
    #[error("the generator pair needs n >= 3, got {0}")]
    PairRange(usize),
}

/// Multiset of cycle components `C_i` (i >= 3) and path components `P_j`
/// (j >= 1 vertices).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathsCyclesMultiset {
    pub cycle_counts: BTreeMap<usize, u64>,
    pub path_counts: BTreeMap<usize, u64>,
}

impl PathsCyclesMultiset {
    pub fn new() -> Self {
        PathsCyclesMultiset::default()
    }

    pub fn with_cycle(mut self, len: usize, count: u64) -> Self {
        assert!(len >= 3);
        if count > 0 {
            *self.cycle_counts.entry(len).or_insert(0) += count;
        }
        self
    }

    pub fn with_path(mut self, vertices: usize, count: u64) -> Self {
        assert!(vertices >= 1);
        if count > 0 {
            *self.path_counts.entry(vertices).or_insert(0) += count;
        }
        self
    }

    /// Decompose a graph if every component is a path or cycle.
    pub fn from_graph(g: &Graph) -> Option<Self> {
        let mut out = PathsCyclesMultiset::new();
        for comp in g.connected_components() {
            let sub = g.induced_subgraph(&comp).graph;
            let degs: Vec<usize> = (0..sub.n()).map(|v| sub.degree(v)).collect();
            if degs.iter().all(|&d| d == 2) {
                out = out.with_cycle(sub.n(), 1);
            } else if degs.iter().all(|&d| d <= 2) {
                out = out.with_path(sub.n(), 1);
            } else {
                return None;
            }
        }
        Some(out)
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(0);
        for (&len, &count) in &self.cycle_counts {
            for _ in 0..count {
                g = g.disjoint_union(&Graph::cycle(len));
            }
        }
        for (&len, &count) in &self.path_counts {
            for _ in 0..count {
                g = g.disjoint_union(&Graph::path(len));
            }
        }
        g
    }

    pub fn char_poly(&self) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for (&len, &count) in &self.cycle_counts {
            let f = cycle_char_poly(len).unwrap();
            for _ in 0..count {
                p = p.mul(&f);
            }
        }
        for (&len, &count) in &self.path_counts {
            let f = path_char_poly(len).unwrap();
            for _ in 0..count {
                p = p.mul(&f);
            }
        }
        p
    }
}

/// The vector `(2 a_{2i} + b_{i-1})` for `i = 1..s+1`, with `b_0 = 0`
/// and `s` the largest component index; trailing zeros trimmed so equal
/// invariants compare equal regardless of representation. Cospectral
/// paths-and-cycles multisets share this vector.
pub fn pc_invariant(m: &PathsCyclesMultiset) -> Vec<u64> {
    let s = m
        .cycle_counts
        .keys()
        .chain(m.path_counts.keys())
        .copied()
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    for i in 1..=s + 1 {
        let a2i = m.cycle_counts.get(&(2 * i)).copied().unwrap_or(0);
        let b_prev = if i >= 2 {
            m.path_counts.get(&(i - 1)).copied().unwrap_or(0)
        } else {
            0 // b_0: there are no empty paths
        };
        out.push(2 * a2i + b_prev);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// The generator pair `(C_{2n} + 2 P_1, C_4 + 2 P_{n-1})` as graphs;
/// cospectral and non-isomorphic for every `n >= 3`.
pub fn pc_cospectral_pair(n: usize) -> Result<(Graph, Graph), PcError> {
    if n < 3 {
        return Err(PcError::PairRange(n));
    }
    let left = PathsCyclesMultiset::new().with_cycle(2 * n, 1).with_path(1, 2);
    let right = PathsCyclesMultiset::new().with_cycle(4, 1).with_path(n - 1, 2);
    Ok((left.to_graph(), right.to_graph()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospectra_graphs::is_isomorphic;
    use cospectra_spectral::{are_cospectral, char_poly};

    #[test]
    fn generator_pair_basics() {
        assert_eq!(pc_cospectral_pair(2), Err(PcError::PairRange(2)));
        for n in 3..=12 {
            let (a, b) = pc_cospectral_pair(n).unwrap();
            assert_eq!(a.n(), 2 * n + 2);
            assert_eq!(b.n(), 2 * n + 2);
            assert!(are_cospectral(&a, &b), "n={n}");
            assert!(!is_isomorphic(&a, &b), "n={n}");
        }
    }

    #[test]
    fn invariant_agrees_on_generator_pair() {
        for n in 3..=12 {
            let left = PathsCyclesMultiset::new().with_cycle(2 * n, 1).with_path(1, 2);
            let right = PathsCyclesMultiset::new().with_cycle(4, 1).with_path(n - 1, 2);
            assert_eq!(pc_invariant(&left), pc_invariant(&right), "n={n}");
        }
    }

    #[test]
    fn empty_multiset_gives_empty_vector() {
        assert_eq!(pc_invariant(&PathsCyclesMultiset::new()), Vec::<u64>::new());
    }

    #[test]
    fn equal_invariant_with_different_cycle_vectors() {
        // compose the generator at n=5 on top of extra shared parts: the
        // two sides share the invariant but differ in their a-vectors
        let a = PathsCyclesMultiset::new().with_cycle(10, 1).with_path(1, 2).with_cycle(6, 1);
        let b = PathsCyclesMultiset::new().with_cycle(4, 1).with_path(4, 2).with_cycle(6, 1);
        assert_eq!(pc_invariant(&a), pc_invariant(&b));
        assert_ne!(a.cycle_counts, b.cycle_counts);
        assert_eq!(a.char_poly(), b.char_poly());
    }

    #[test]
    fn multiset_char_poly_matches_graph_char_poly() {
        let m = PathsCyclesMultiset::new().with_cycle(5, 1).with_path(3, 2).with_path(1, 1);
        assert_eq!(m.char_poly(), char_poly(&m.to_graph()));
        let back = PathsCyclesMultiset::from_graph(&m.to_graph()).unwrap();
        assert_eq!(back, m);
        // a star is not paths-and-cycles
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(PathsCyclesMultiset::from_graph(&star), None);
    }
}
