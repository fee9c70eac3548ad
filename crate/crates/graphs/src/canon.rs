//! Canonical labeling by color refinement plus backtracking over the
//! refined search tree, taking the lexicographically least adjacency
//! string. Adequate for the sparse graphs (n up to a few hundred) this
//! workspace handles; automorphisms discovered along the way prune the
//! root branching and double as an automorphism-group search.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Node budget for automorphism searches; exceeding it yields
/// [`AutOutcome::Unknown`] rather than a wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct AutBudget {
    pub max_nodes: u64,
}

impl Default for AutBudget {
    fn default() -> Self {
        AutBudget { max_nodes: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutOutcome {
    /// Vertices moved by at least one automorphism, sorted.
    Moved(Vec<usize>),
    /// Search budget exhausted before the group was known.
    Unknown,
}

/// Equitable refinement of an ordered partition: repeatedly split every
/// cell by neighbor counts into each cell, keeping groups in ascending
/// count order, until stable. Deterministic.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let splitters: Vec<Vec<usize>> = cells.clone();
        for sp in &splitters {
            let mut cnt = vec![0usize; g.n()];
            for &s in sp {
                for &w in g.neighbors(s) {
                    cnt[w] += 1;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    groups.entry(cnt[v]).or_default().push(v);
                }
                if groups.len() > 1 {
                    changed = true;
                }
                next.extend(groups.into_values());
            }
            *cells = next;
        }
        if !changed {
            return;
        }
    }
}

/// Pack the upper-triangle adjacency bits of `g` under `order`
/// (position -> vertex) into words, row-major.
fn leaf_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * (n - 1) / 2;
    let mut key = vec![0u64; total.div_ceil(64)];
    let mut bit = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                key[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    key
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best_key: Option<Vec<u64>>,
    best_order: Vec<usize>,
    auts: Vec<Vec<usize>>,
    uf: UnionFind,
    nodes: u64,
    max_nodes: Option<u64>,
    exceeded: bool,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph, max_nodes: Option<u64>) -> Self {
        let mut s = Search {
            g,
            best_key: None,
            best_order: Vec::new(),
            auts: Vec::new(),
            uf: UnionFind::new(g.n()),
            nodes: 0,
            max_nodes,
            exceeded: false,
        };
        let mut cells = if g.n() == 0 { Vec::new() } else { vec![(0..g.n()).collect()] };
        refine(g, &mut cells);
        s.descend(cells, 0);
        s
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, depth: usize) {
        self.nodes += 1;
        if let Some(cap) = self.max_nodes {
            if self.nodes > cap {
                self.exceeded = true;
                return;
            }
        }
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let key = leaf_key(self.g, &order);
                match &self.best_key {
                    Some(best) if *best < key => {}
                    Some(best) if *best == key => {
                        // equal leaf: records an automorphism
                        let mut sigma = vec![0usize; self.g.n()];
                        for (pos, &v) in order.iter().enumerate() {
                            sigma[self.best_order[pos]] = v;
                        }
                        for v in 0..self.g.n() {
                            self.uf.union(v, sigma[v]);
                        }
                        self.auts.push(sigma);
                    }
                    _ => {
                        self.best_key = Some(key);
                        self.best_order = order;
                    }
                }
            }
            Some(t) => {
                let target = cells[t].clone();
                let mut explored: Vec<usize> = Vec::new();
                for &v in &target {
                    if depth == 0
                        && explored
                            .iter()
                            .any(|&u| self.uf.find(u) == self.uf.find(v))
                    {
                        continue; // orbit of an explored sibling
                    }
                    explored.push(v);
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    for (i, cell) in cells.iter().enumerate() {
                        if i == t {
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            child.push(cell.clone());
                        }
                    }
                    refine(self.g, &mut child);
                    self.descend(child, depth + 1);
                    if self.exceeded {
                        return;
                    }
                }
            }
        }
    }
}

fn form_header(g: &Graph) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&(g.n() as u64).to_le_bytes());
    out.extend_from_slice(&(g.edge_count() as u64).to_le_bytes());
    let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    for d in degs {
        out.extend_from_slice(&(d as u32).to_le_bytes());
    }
    out
}

/// Canonical labeling: returns (`form`, `labeling`) where equal forms
/// hold exactly for isomorphic graphs and `labeling[v]` is the position
/// of vertex `v` in the canonical order.
pub fn canonical_labeling(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    // Homogeneous graphs make the search tree factorial; their canonical
    // labeling is trivially the identity.
    let m = g.edge_count();
    if m == 0 || m == g.n() * g.n().saturating_sub(1) / 2 {
        let order: Vec<usize> = (0..g.n()).collect();
        let mut form = form_header(g);
        for word in leaf_key(g, &order) {
            form.extend_from_slice(&word.to_le_bytes());
        }
        return (form, order);
    }
    let s = Search::run(g, None);
    let mut form = form_header(g);
    for word in s.best_key.unwrap_or_default() {
        form.extend_from_slice(&word.to_le_bytes());
    }
    let mut labeling = vec![0usize; g.n()];
    for (pos, &v) in s.best_order.iter().enumerate() {
        labeling[v] = pos;
    }
    (form, labeling)
}

/// Byte string equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_labeling(g).0
}

/// Edge-preserving bijection `g -> h` if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (fg, lg) = canonical_labeling(g);
    let (fh, lh) = canonical_labeling(h);
    if fg != fh {
        return None;
    }
    let mut pos_to_h = vec![0usize; h.n()];
    for (v, &p) in lh.iter().enumerate() {
        pos_to_h[p] = v;
    }
    let map: Vec<usize> = (0..g.n()).map(|v| pos_to_h[lg[v]]).collect();
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| h.has_edge(map[u], map[v])));
    Some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// Automorphism generators of `g`, or `None` when the budget runs out.
pub fn automorphism_generators(g: &Graph, budget: AutBudget) -> Option<Vec<Vec<usize>>> {
    let m = g.edge_count();
    if m == 0 || m == g.n() * g.n().saturating_sub(1) / 2 {
        // full symmetric group; adjacent transpositions generate it
        let mut gens = Vec::new();
        for v in 1..g.n() {
            let mut sigma: Vec<usize> = (0..g.n()).collect();
            sigma.swap(v - 1, v);
            gens.push(sigma);
        }
        return Some(gens);
    }
    let s = Search::run(g, Some(budget.max_nodes));
    if s.exceeded {
        None
    } else {
        Some(s.auts)
    }
}

/// Set of vertices moved by at least one automorphism.
pub fn automorphism_moved_vertices(g: &Graph, budget: AutBudget) -> AutOutcome {
    let gens = match automorphism_generators(g, budget) {
        Some(gens) => gens,
        None => return AutOutcome::Unknown,
    };
    let mut uf = UnionFind::new(g.n());
    for sigma in &gens {
        for v in 0..g.n() {
            uf.union(v, sigma[v]);
        }
    }
    let mut orbit_size = vec![0usize; g.n()];
    for v in 0..g.n() {
        let r = uf.find(v);
        orbit_size[r] += 1;
    }
    let moved: Vec<usize> = (0..g.n())
        .filter(|&v| {
            let r = uf.find(v);
            orbit_size[r] > 1
        })
        .collect();
    AutOutcome::Moved(moved)
}
