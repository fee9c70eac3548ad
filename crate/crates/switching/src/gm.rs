//! Search for Godsil–McKay switching sets: `X` of size `2k` inducing a
//! regular subgraph such that every outside vertex has 0, k, or 2k
//! neighbors in `X`.

use cospectra_graphs::Graph;

/// Find up to `limit` valid sets by deterministic backtracking over
/// ascending vertex combinations, pruning as soon as a committed-outside
/// vertex can no longer reach an admissible neighbor count.
pub fn gm_find_sets(g: &Graph, k: usize, limit: usize) -> Vec<Vec<usize>> {
    assert!(k >= 2, "Godsil-McKay needs k >= 2");
    let m = 2 * k;
    let mut out = Vec::new();
    if g.n() < m || limit == 0 {
        return out;
    }
    let mut counts = vec![0usize; g.n()];
    let mut chosen: Vec<usize> = Vec::new();
    backtrack(g, k, m, 0, &mut chosen, &mut counts, limit, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    k: usize,
    m: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    counts: &mut [usize],
    limit: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if out.len() >= limit {
        return;
    }
    if chosen.len() == m {
        if valid_set(g, k, chosen, counts) {
            out.push(chosen.clone());
        }
        return;
    }
    let slots_left = m - chosen.len();
    for v in from..g.n() {
        if g.n() - v < slots_left {
            break;
        }
        chosen.push(v);
        for &w in g.neighbors(v) {
            counts[w] += 1;
        }
        // vertices below v and not chosen are committed outside; any of
        // them with a neighbor count that cannot land on {0, k, 2k}
        // within the remaining picks kills this branch
        let remaining = m - chosen.len();
        let feasible = (0..=v).all(|w| {
            if chosen.binary_search(&w).is_ok() {
                return true;
            }
            let c = counts[w];
            c == 0 || (c <= k && k <= c + remaining) || (c <= 2 * k && 2 * k <= c + remaining)
        });
        if feasible {
            backtrack(g, k, m, v + 1, chosen, counts, limit, out);
        }
        for &w in g.neighbors(v) {
            counts[w] -= 1;
        }
        chosen.pop();
        if out.len() >= limit {
            return;
        }
    }
}

fn valid_set(g: &Graph, k: usize, x: &[usize], counts: &[usize]) -> bool {
    // induced subgraph regular
    let internal_deg = |v: usize| x.iter().filter(|&&w| g.has_edge(v, w)).count();
    let d0 = internal_deg(x[0]);
    if x.iter().any(|&v| internal_deg(v) != d0) {
        return false;
    }
    // outside vertices see 0, k, or 2k
    (0..g.n()).all(|w| {
        if x.binary_search(&w).is_ok() {
            return true;
        }
        counts[w] == 0 || counts[w] == k || counts[w] == 2 * k
    })
}

/// A minimal decorated instance with one degree-1 vertex and a single
/// cycle in the neighborhood graph: an 8-cycle alternating between the
/// switching set and its boundary, with pairwise non-isomorphic complete
/// graphs glued onto the boundary (nothing, K2 as a pendant leaf, K3,
/// K4). The planted set is `{0, 2, 4, 6}` with k = 2.
///
/// In this miniature the switch turns the boundary decorations into
/// their reversed cyclic arrangement, so the switched graph is
/// isomorphic by a reflection of the 8-cycle whatever the decorations
/// are; non-isomorphic outcomes need less symmetric hosts (see the
/// planted-host tests).
pub fn figure_gm_instance() -> (Graph, Vec<usize>) {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    // boundary vertices are 1, 3, 5, 7; glue K2, K3, K4, K1
    edges.push((1, 8)); // pendant leaf: the unique degree-1 vertex
    edges.extend([(3, 9), (3, 10), (9, 10)]); // triangle
    edges.extend([(5, 11), (5, 12), (5, 13), (11, 12), (11, 13), (12, 13)]); // K4
    (Graph::new(14, &edges).unwrap(), vec![0, 2, 4, 6])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neighborhood::{is_disjoint_cycles, neighborhood_graph};
    use crate::switch::{apply_switch, OrthogonalSwitch};
    use cospectra_graphs::is_isomorphic;
    use cospectra_spectral::are_cospectral;

    #[test]
    fn c4_whole_set_is_valid() {
        let sets = gm_find_sets(&Graph::cycle(4), 2, 10);
        assert_eq!(sets, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn star_has_no_valid_set() {
        // K_{1,3}: the only 4-subset induces an irregular graph
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(gm_find_sets(&star, 2, 10).is_empty());
        // exhaustive cross-check over all 4-subsets (there is one)
        assert_eq!(star.n(), 4);
    }

    #[test]
    fn planted_figure_instance_is_found() {
        let (g, x) = figure_gm_instance();
        let sets = gm_find_sets(&g, 2, 100);
        assert!(sets.contains(&x), "planted set found: {sets:?}");
        let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
        let h = apply_switch(&g, &s).unwrap();
        assert!(are_cospectral(&g, &h));
        // single cycle in the neighborhood graph, one degree-1 vertex;
        // this symmetric miniature switches to an isomorphic graph (the
        // boundary decorations come back reflected)
        let nb = neighborhood_graph(&g, &x);
        assert!(is_disjoint_cycles(&nb.graph));
        assert_eq!((0..g.n()).filter(|&v| g.degree(v) == 1).count(), 1);
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn planted_set_in_an_asymmetric_host_switches_to_a_nonisomorphic_mate() {
        // plant a k=2 set in a host with scrambled boundary attachments;
        // the switch must produce a cospectral non-isomorphic graph for
        // at least some seeds (both outcomes are possible in general)
        let mut nontrivial = 0;
        for seed in 0..20u64 {
            let (g, x) = crate::plant::planted_gm_host(14, 2, seed);
            let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
            let h = apply_switch(&g, &s).unwrap();
            assert!(are_cospectral(&g, &h), "seed={seed}");
            if !is_isomorphic(&g, &h) {
                nontrivial += 1;
            }
        }
        assert!(nontrivial > 0, "no planted host produced a non-isomorphic mate");
    }

    #[test]
    fn found_sets_satisfy_the_condition() {
        for seed in 0..10 {
            let g = cospectra_graphs::sample_gnp(&cospectra_graphs::SampleConfig::new(
                18, 2.5, 700 + seed,
            ));
            for x in gm_find_sets(&g, 2, 50) {
                let dx: Vec<usize> = x
                    .iter()
                    .map(|&v| x.iter().filter(|&&w| g.has_edge(v, w)).count())
                    .collect();
                assert!(dx.iter().all(|&d| d == dx[0]), "regular");
                for w in 0..g.n() {
                    if x.binary_search(&w).is_err() {
                        let c = x.iter().filter(|&&v| g.has_edge(v, w)).count();
                        assert!(c == 0 || c == 2 || c == 4, "outside count {c}");
                    }
                }
            }
        }
    }
}
