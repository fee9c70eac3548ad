//! Rooted-tree utilities: canonical codes, automorphism counts,
//! isomorphism mappings, and exhaustive enumeration by level sequences.

use cospectra_graphs::{Graph, RootedGraph};

/// Children lists of a tree oriented away from `root`.
fn orient(g: &Graph, root: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                children[u].push(v);
                stack.push(v);
            }
        }
    }
    children
}

fn code_of(children: &[Vec<usize>], v: usize) -> Vec<u8> {
    let mut kid_codes: Vec<Vec<u8>> = children[v].iter().map(|&c| code_of(children, c)).collect();
    kid_codes.sort();
    let mut out = vec![b'('];
    for k in kid_codes {
        out.extend(k);
    }
    out.push(b')');
    out
}

/// Canonical parenthesis code of a rooted tree: equal codes exactly for
/// rooted-isomorphic trees.
pub fn rooted_canonical_code(t: &RootedGraph) -> Vec<u8> {
    debug_assert!(t.graph.is_tree());
    code_of(&orient(&t.graph, t.root), t.root)
}

/// Number of automorphisms fixing the root: the product over vertices of
/// the factorials of equal-child-code multiplicities.
pub fn rooted_aut_count(t: &RootedGraph) -> u64 {
    fn walk(children: &[Vec<usize>], v: usize) -> (Vec<u8>, u64) {
        let mut pairs: Vec<(Vec<u8>, u64)> =
            children[v].iter().map(|&c| walk(children, c)).collect();
        pairs.sort();
        let mut count: u64 = pairs.iter().map(|(_, a)| a).product();
        let mut i = 0;
        while i < pairs.len() {
            let mut j = i;
            while j < pairs.len() && pairs[j].0 == pairs[i].0 {
                j += 1;
            }
            for m in 2..=(j - i) as u64 {
                count *= m;
            }
            i = j;
        }
        let mut code = vec![b'('];
        for (c, _) in pairs {
            code.extend(c);
        }
        code.push(b')');
        (code, count)
    }
    walk(&orient(&t.graph, t.root), t.root).1
}

/// Root-preserving isomorphism from `a` to `b` (a map on vertex indices),
/// when one exists.
pub fn rooted_tree_isomorphism(a: &RootedGraph, b: &RootedGraph) -> Option<Vec<usize>> {
    if a.graph.n() != b.graph.n() {
        return None;
    }
    let ca = orient(&a.graph, a.root);
    let cb = orient(&b.graph, b.root);

    fn build(
        ca: &[Vec<usize>],
        cb: &[Vec<usize>],
        va: usize,
        vb: usize,
        map: &mut [usize],
    ) -> bool {
        let mut kids_a: Vec<(Vec<u8>, usize)> =
            ca[va].iter().map(|&c| (code_of(ca, c), c)).collect();
        let mut kids_b: Vec<(Vec<u8>, usize)> =
            cb[vb].iter().map(|&c| (code_of(cb, c), c)).collect();
        if kids_a.len() != kids_b.len() {
            return false;
        }
        kids_a.sort();
        kids_b.sort();
        for ((code_a, child_a), (code_b, child_b)) in kids_a.iter().zip(&kids_b) {
            if code_a != code_b {
                return false;
            }
            map[*child_a] = *child_b;
            if !build(ca, cb, *child_a, *child_b, map) {
                return false;
            }
        }
        true
    }

    let mut map = vec![usize::MAX; a.graph.n()];
    map[a.root] = b.root;
    if build(&ca, &cb, a.root, b.root, &mut map) {
        debug_assert!(a
            .graph
            .edges()
            .iter()
            .all(|&(u, v)| b.graph.has_edge(map[u], map[v])));
        Some(map)
    } else {
        None
    }
}

/// Tree on `seq.len()` vertices from a level sequence (root level 1,
/// each vertex's parent is the nearest earlier vertex one level up).
pub fn tree_from_level_sequence(seq: &[usize]) -> RootedGraph {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i).rev().find(|&j| seq[j] == seq[i] - 1).expect("valid level sequence");
        edges.push((parent, i));
    }
    RootedGraph::new(Graph::new(n, &edges).unwrap(), 0).unwrap()
}

/// All rooted trees on `t` vertices, one representative per rooted
/// isomorphism class, via the canonical level-sequence successor rule.
pub fn rooted_trees(t: usize) -> Vec<RootedGraph> {
    if t == 0 {
        return Vec::new();
    }
    let mut seq: Vec<usize> = (1..=t).collect();
    let mut out = Vec::new();
    loop {
        out.push(tree_from_level_sequence(&seq));
        // successor: shift the tail at the last entry > 2 back one level
        let Some(p) = (0..t).rev().find(|&i| seq[i] > 2) else {
            return out;
        };
        let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).unwrap();
        for i in p..t {
            seq[i] = seq[i - (p - q)];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_match_oeis() {
        // number of rooted trees with t nodes: 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842];
        for (i, &want) in expected.iter().enumerate() {
            let t = i + 1;
            let trees = rooted_trees(t);
            assert_eq!(trees.len(), want, "t={t}");
            for tree in &trees {
                assert!(tree.graph.is_tree());
            }
        }
    }

    #[test]
    fn enumeration_has_no_rooted_duplicates() {
        for t in 1..=9 {
            let mut codes: Vec<Vec<u8>> =
                rooted_trees(t).iter().map(rooted_canonical_code).collect();
            let before = codes.len();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), before, "t={t}");
        }
    }

    #[test]
    fn code_separates_roots() {
        // P3 rooted at the middle vs at an end
        let mid = RootedGraph::new(Graph::path(3), 1).unwrap();
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        assert_ne!(rooted_canonical_code(&mid), rooted_canonical_code(&end));
        assert!(rooted_tree_isomorphism(&mid, &end).is_none());
    }

    #[test]
    fn isomorphism_mapping_valid() {
        // same star rooted at center, two labelings
        let a = RootedGraph::new(Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(), 0).unwrap();
        let b = RootedGraph::new(Graph::new(4, &[(3, 0), (3, 1), (3, 2)]).unwrap(), 3).unwrap();
        let map = rooted_tree_isomorphism(&a, &b).unwrap();
        assert_eq!(map[0], 3);
    }

    #[test]
    fn aut_counts() {
        // star K_{1,3} rooted at center: 3! = 6
        let star = RootedGraph::new(Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(), 0).unwrap();
        assert_eq!(rooted_aut_count(&star), 6);
        // rooted edge: rigid
        assert_eq!(rooted_aut_count(&RootedGraph::rooted_edge()), 1);
        // path rooted at an end: rigid
        let p4 = RootedGraph::new(Graph::path(4), 0).unwrap();
        assert_eq!(rooted_aut_count(&p4), 1);
        // spider with two equal legs of length 2: swap them
        let spider = RootedGraph::new(
            Graph::new(5, &[(0, 1), (1, 2), (0, 3), (3, 4)]).unwrap(),
            0,
        )
        .unwrap();
        assert_eq!(rooted_aut_count(&spider), 2);
    }
}
