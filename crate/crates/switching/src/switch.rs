//! Exact rational orthogonal switches and their application by
//! conjugation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use cospectra_graphs::Graph;

pub type RationalMatrix = Vec<Vec<BigRational>>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SwitchError {
    #[error("switch matrix must be square and non-empty")]
    BadShape,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("matrix is a permutation; that switching is trivial")]
    Permutation,
    #[error("Godsil-McKay block size k={0} must be at least 2")]
    GmBlockTooSmall(usize),
    #[error("switch vertices invalid: {0}")]
    BadVertices(&'static str),
    #[error("conjugated matrix has an entry outside {{0,1}} or a nonzero diagonal; Q-switching does not apply at these vertices")]
    NonGraphResult,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// An exact rational orthogonal matrix together with the host vertices
/// it acts on and the vertices negated by the `-I` block.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalSwitch {
    q: RationalMatrix,
    switch_vertices: Vec<usize>,
    negated_vertices: Vec<usize>,
    level: BigInt,
}

fn identity(m: usize) -> RationalMatrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let prod = &a[i][l] * &b[l][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

fn transpose(a: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

fn is_permutation(q: &RationalMatrix) -> bool {
    let one = BigRational::one();
    q.iter().all(|row| {
        row.iter().all(|e| e.is_zero() || *e == one)
            && row.iter().filter(|e| !e.is_zero()).count() == 1
    }) && (0..q.len()).all(|j| q.iter().filter(|row| !row[j].is_zero()).count() == 1)
}

impl OrthogonalSwitch {
    /// Validate `q` (orthogonal, not a permutation) and the vertex
    /// bookkeeping, and compute the level.
    pub fn new(
        q: RationalMatrix,
        switch_vertices: Vec<usize>,
        negated_vertices: Vec<usize>,
    ) -> Result<Self, SwitchError> {
        let m = q.len();
        if m == 0 || q.iter().any(|row| row.len() != m) {
            return Err(SwitchError::BadShape);
        }
        if mat_mul(&transpose(&q), &q) != identity(m) {
            return Err(SwitchError::NotOrthogonal);
        }
        if is_permutation(&q) {
            return Err(SwitchError::Permutation);
        }
        if switch_vertices.len() != m {
            return Err(SwitchError::BadVertices("switch vertex count must match matrix size"));
        }
        let mut sorted = switch_vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m {
            return Err(SwitchError::BadVertices("switch vertices must be distinct"));
        }
        let mut negated = negated_vertices;
        negated.sort_unstable();
        negated.dedup();
        if negated.iter().any(|v| sorted.binary_search(v).is_ok()) {
            return Err(SwitchError::BadVertices("negated vertices must avoid the switch set"));
        }
        let mut level = BigInt::one();
        for row in &q {
            for e in row {
                level = level.lcm(e.denom());
            }
        }
        Ok(OrthogonalSwitch { q, switch_vertices, negated_vertices: negated, level })
    }

    /// The Godsil–McKay switch on a set of `2k` host vertices.
    pub fn godsil_mckay(x: &[usize], k: usize) -> Result<Self, SwitchError> {
        if x.len() != 2 * k {
            return Err(SwitchError::BadVertices("Godsil-McKay set must have 2k vertices"));
        }
        OrthogonalSwitch::new(gm_q_matrix(k)?, x.to_vec(), Vec::new())
    }

    pub fn q(&self) -> &RationalMatrix {
        &self.q
    }

    pub fn switch_vertices(&self) -> &[usize] {
        &self.switch_vertices
    }

    pub fn negated_vertices(&self) -> &[usize] {
        &self.negated_vertices
    }

    /// Least positive integer with `level * q` integral.
    pub fn level(&self) -> &BigInt {
        &self.level
    }

    pub fn size(&self) -> usize {
        self.q.len()
    }

    /// True when no row of `q` is integral (every row then mixes
    /// coordinates; such a switch forces at least two neighbors in the
    /// switching set for every outside vertex adjacent to it).
    pub fn has_no_integral_rows(&self) -> bool {
        self.q
            .iter()
            .all(|row| row.iter().any(|e| !e.denom().is_one()))
    }
}

/// The 2k x 2k Godsil–McKay matrix `(J - kI)/k`; orthogonal, symmetric,
/// an involution, and not a permutation for `k >= 2`.
pub fn gm_q_matrix(k: usize) -> Result<RationalMatrix, SwitchError> {
    if k < 2 {
        return Err(SwitchError::GmBlockTooSmall(k));
    }
    let kk = BigInt::from(k as i64);
    let m = 2 * k;
    let mut q = vec![vec![BigRational::new(BigInt::one(), kk.clone()); m]; m];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = BigRational::new(BigInt::one() - &kk, kk.clone());
    }
    Ok(q)
}

/// Conjugate the adjacency matrix by `diag(Q, -I, I)` in the switch's
/// vertex order (switch vertices, then negated, then fixed). Succeeds
/// iff the result is again a 0/1 symmetric zero-diagonal matrix, which
/// is then returned as a graph on the original vertex labels; the result
/// is exactly cospectral to `g`.
pub fn apply_switch(g: &Graph, s: &OrthogonalSwitch) -> Result<Graph, SwitchError> {
    let n = g.n();
    let m = s.size();
    if s.switch_vertices.iter().any(|&v| v >= n) || s.negated_vertices.iter().any(|&v| v >= n) {
        return Err(SwitchError::BadVertices("switch references a vertex outside the host"));
    }
    let x = &s.switch_vertices;
    let mut in_x = vec![false; n];
    for &v in x {
        in_x[v] = true;
    }
    let mut sign = vec![1i8; n];
    for &v in &s.negated_vertices {
        sign[v] = -1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();

    // B' = Q^T B Q on the switch block
    let b: RationalMatrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if g.has_edge(x[i], x[j]) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let qt = transpose(&s.q);
    let b2 = mat_mul(&mat_mul(&qt, &b), &s.q);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        if !b2[i][i].is_zero() {
            return Err(SwitchError::NonGraphResult);
        }
        for j in i + 1..m {
            if b2[i][j].is_one() {
                edges.push((x[i], x[j]));
            } else if !b2[i][j].is_zero() {
                return Err(SwitchError::NonGraphResult);
            }
        }
    }

    // columns toward the rest: u' = sign(r) * Q^T u
    for &r in &rest {
        let u: Vec<BigRational> = (0..m)
            .map(|i| if g.has_edge(x[i], r) { BigRational::one() } else { BigRational::zero() })
            .collect();
        for i in 0..m {
            let mut val = BigRational::zero();
            for l in 0..m {
                if !u[l].is_zero() {
                    val += &qt[i][l] * &u[l];
                }
            }
            if sign[r] < 0 {
                val = -val;
            }
            if val.is_one() {
                edges.push((x[i], r));
            } else if !val.is_zero() {
                return Err(SwitchError::NonGraphResult);
            }
        }
    }

    // rest-rest entries flip sign only when exactly one endpoint is negated
    for (a_pos, &a) in rest.iter().enumerate() {
        for &b in &rest[a_pos + 1..] {
            if g.has_edge(a, b) {
                if sign[a] * sign[b] < 0 {
                    return Err(SwitchError::NonGraphResult);
                }
                edges.push((a, b));
            }
        }
    }

    Ok(Graph::new(n, &edges).unwrap())
}

/// Check that the switching restricted to `G[X u Y] - F` lands exactly on
/// `H[X u Y] - F`, where `Y` avoids the switch set and `F` avoids the
/// edges of the neighborhood graph of `X` (so `F` lies within `Y`).
pub fn subgraph_switch_check(
    g: &Graph,
    h: &Graph,
    s: &OrthogonalSwitch,
    y: &[usize],
    f: &[(usize, usize)],
) -> Result<bool, SwitchError> {
    if apply_switch(g, s)? != *h {
        return Err(SwitchError::Precondition("h must be the switch of g"));
    }
    let x = s.switch_vertices();
    let mut in_x = vec![false; g.n()];
    for &v in x {
        in_x[v] = true;
    }
    if y.iter().any(|&v| v >= g.n() || in_x[v]) {
        return Err(SwitchError::Precondition("Y must avoid the switch set"));
    }
    let mut y_sorted = y.to_vec();
    y_sorted.sort_unstable();
    y_sorted.dedup();
    for &(a, b) in f {
        let a_in_y = y_sorted.binary_search(&a).is_ok();
        let b_in_y = y_sorted.binary_search(&b).is_ok();
        if !(a_in_y && b_in_y && g.has_edge(a, b)) {
            return Err(SwitchError::Precondition(
                "F must be host edges inside Y (disjoint from the neighborhood graph of X)",
            ));
        }
    }

    let mut keep: Vec<usize> = x.iter().chain(y_sorted.iter()).copied().collect();
    keep.sort_unstable();

    let drop_f = |host: &Graph| -> Graph {
        let sub = host.induced_subgraph(&keep);
        let local = |v: usize| sub.vertices.binary_search(&v).unwrap();
        let banned: Vec<(usize, usize)> = f
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (local(a), local(b));
                (a.min(b), a.max(b))
            })
            .collect();
        let edges: Vec<(usize, usize)> = sub
            .graph
            .edges()
            .into_iter()
            .filter(|e| !banned.contains(e))
            .collect();
        Graph::new(sub.graph.n(), &edges).unwrap()
    };

    let g_sub = drop_f(g);
    let h_sub = drop_f(h);

    // re-index the switch into the subgraph
    let sub_index = |v: usize| keep.binary_search(&v).unwrap();
    let s_sub = OrthogonalSwitch::new(
        s.q.clone(),
        x.iter().map(|&v| sub_index(v)).collect(),
        s.negated_vertices
            .iter()
            .filter(|&&v| keep.binary_search(&v).is_ok())
            .map(|&v| sub_index(v))
            .collect(),
    )?;
    Ok(apply_switch(&g_sub, &s_sub)? == h_sub)
}

/// User-supplied switch in JSON:
/// `{"m":2,"q_num":[[0,1],[-1,0]],"q_den":1,"vertices":[0,1],"negated":[]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UserSwitch {
    pub m: usize,
    pub q_num: Vec<Vec<i64>>,
    pub q_den: i64,
    pub vertices: Vec<usize>,
    #[serde(default)]
    pub negated: Vec<usize>,
}

impl UserSwitch {
    pub fn parse(json: &str) -> Result<OrthogonalSwitch, SwitchError> {
        let u: UserSwitch =
            serde_json::from_str(json).map_err(|_| SwitchError::BadShape)?;
        if u.q_den == 0 || u.q_num.len() != u.m {
            return Err(SwitchError::BadShape);
        }
        let den = BigInt::from(u.q_den.abs());
        let sgn = if u.q_den < 0 { -1 } else { 1 };
        let q: RationalMatrix = u
            .q_num
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| BigRational::new(BigInt::from(v * sgn), den.clone()))
                    .collect()
            })
            .collect();
        OrthogonalSwitch::new(q, u.vertices, u.negated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospectra_spectral::are_cospectral;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gm_matrix_k2_matches_formula() {
        let q = gm_q_matrix(2).unwrap();
        let want = [
            [rat(-1, 2), rat(1, 2), rat(1, 2), rat(1, 2)],
            [rat(1, 2), rat(-1, 2), rat(1, 2), rat(1, 2)],
            [rat(1, 2), rat(1, 2), rat(-1, 2), rat(1, 2)],
            [rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2)],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(q[i][j], want[i][j]);
            }
        }
        assert!(matches!(gm_q_matrix(1), Err(SwitchError::GmBlockTooSmall(1))));
    }

    #[test]
    fn gm_matrix_orthogonal_symmetric_involution_rowsum_one() {
        for k in 2..=6 {
            let q = gm_q_matrix(k).unwrap();
            let m = 2 * k;
            assert_eq!(mat_mul(&transpose(&q), &q), identity(m), "k={k}");
            assert_eq!(q, transpose(&q));
            assert_eq!(mat_mul(&q, &q), identity(m));
            for row in &q {
                let sum: BigRational = row.iter().cloned().sum();
                assert!(sum.is_one());
            }
            let s = OrthogonalSwitch::new(q, (0..m).collect(), vec![]).unwrap();
            assert_eq!(s.level(), &BigInt::from(k as i64));
            assert!(s.has_no_integral_rows());
        }
    }

    #[test]
    fn rotation_on_isolated_vertices_of_empty_graph() {
        // 90-degree rotation: orthogonal, not a permutation
        let q = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(-1, 1), rat(0, 1)]];
        let s = OrthogonalSwitch::new(q, vec![0, 1], vec![]).unwrap();
        let g = Graph::empty(4);
        assert_eq!(apply_switch(&g, &s).unwrap(), g);
    }

    #[test]
    fn permutation_matrices_rejected() {
        let q = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(
            OrthogonalSwitch::new(q, vec![0, 1], vec![]).unwrap_err(),
            SwitchError::Permutation
        );
        let q = vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(-1, 2)]];
        assert_eq!(
            OrthogonalSwitch::new(q, vec![0, 1], vec![]).unwrap_err(),
            SwitchError::NotOrthogonal
        );
    }

    #[test]
    fn gm_switch_on_c4_whole_vertex_set() {
        // X = all of C4: G[X] 2-regular, no outside vertices
        let g = Graph::cycle(4);
        let s = OrthogonalSwitch::godsil_mckay(&[0, 1, 2, 3], 2).unwrap();
        let h = apply_switch(&g, &s).unwrap();
        assert!(are_cospectral(&g, &h));
    }

    #[test]
    fn one_neighbor_in_x_is_a_non_graph_result() {
        // path attached to one vertex of a 4-set: that vertex has exactly
        // one neighbor in X, so Q^T v has entries outside {0,1}
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let s = OrthogonalSwitch::godsil_mckay(&[0, 1, 2, 3], 2).unwrap();
        assert_eq!(apply_switch(&g, &s), Err(SwitchError::NonGraphResult));
    }

    #[test]
    fn subgraph_check_on_planted_hosts() {
        let mut rng = cospectra_graphs::Xoshiro256StarStar::new(404);
        for seed in 0..25u64 {
            let (g, x) = crate::plant::planted_gm_host(15, 2, 9_000 + seed);
            let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
            let h = apply_switch(&g, &s).unwrap();
            // Y = all outside vertices, F = empty: reduces to the switch itself
            let all_y: Vec<usize> =
                (0..g.n()).filter(|v| x.binary_search(v).is_err()).collect();
            assert_eq!(subgraph_switch_check(&g, &h, &s, &all_y, &[]), Ok(true));
            // Y = empty: the switch on G[X] alone
            assert_eq!(subgraph_switch_check(&g, &h, &s, &[], &[]), Ok(true));
            // random Y with a random legal F (edges inside Y)
            let y: Vec<usize> = all_y
                .iter()
                .copied()
                .filter(|_| rng.next_f64() < 0.5)
                .collect();
            let f: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(a, b)| {
                    y.contains(&a) && y.contains(&b) && rng.next_f64() < 0.4
                })
                .collect();
            assert_eq!(subgraph_switch_check(&g, &h, &s, &y, &f), Ok(true), "seed={seed}");
        }
    }

    #[test]
    fn subgraph_check_rejects_bad_preconditions() {
        let (g, x) = crate::plant::planted_gm_host(12, 2, 5);
        let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
        let h = apply_switch(&g, &s).unwrap();
        // Y overlapping the switch set
        assert!(matches!(
            subgraph_switch_check(&g, &h, &s, &[x[0]], &[]),
            Err(SwitchError::Precondition(_))
        ));
        // F touching the switch set
        let bad_edge = g
            .edges()
            .into_iter()
            .find(|&(a, b)| x.binary_search(&a).is_ok() || x.binary_search(&b).is_ok())
            .unwrap();
        let all_y: Vec<usize> = (0..g.n()).filter(|v| x.binary_search(v).is_err()).collect();
        assert!(matches!(
            subgraph_switch_check(&g, &h, &s, &all_y, &[bad_edge]),
            Err(SwitchError::Precondition(_))
        ));
        // h not the switch of g
        assert!(matches!(
            subgraph_switch_check(&g, &g, &s, &[], &[]),
            Err(SwitchError::Precondition(_))
        ));
    }

    #[test]
    fn user_switch_parsing() {
        let ok = r#"{"m":2,"q_num":[[0,1],[-1,0]],"q_den":1,"vertices":[3,4]}"#;
        let s = UserSwitch::parse(ok).unwrap();
        assert_eq!(s.switch_vertices(), &[3, 4]);
        let perm = r#"{"m":2,"q_num":[[0,1],[1,0]],"q_den":1,"vertices":[0,1]}"#;
        assert_eq!(UserSwitch::parse(perm).unwrap_err(), SwitchError::Permutation);
        let skew = r#"{"m":2,"q_num":[[1,1],[1,-1]],"q_den":1,"vertices":[0,1]}"#;
        assert_eq!(UserSwitch::parse(skew).unwrap_err(), SwitchError::NotOrthogonal);
    }
}
