//! The walk matrix `[e, Ae, ..., A^(n-1)e]` and its controllability
//! classification.

use num_bigint::BigInt;
use num_traits::One;

use cospectra_graphs::Graph;

use crate::matrix::{bareiss_rank_det, IntMatrix};

/// Exact walk matrix with its rational rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    /// Column k is `A^k e`.
    pub columns: Vec<Vec<BigInt>>,
    pub rank_over_rationals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Controllability {
    /// rank(W) = n
    Controllable,
    /// rank(W) = n - 1
    AlmostControllable,
    /// rank(W) < n - 1
    Neither,
}

pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    let n = g.n();
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut col = vec![BigInt::one(); n];
    for _ in 0..n {
        columns.push(col.clone());
        let mut next = vec![BigInt::from(0); n];
        for (v, slot) in next.iter_mut().enumerate() {
            for &w in g.neighbors(v) {
                *slot += &col[w];
            }
        }
        col = next;
    }
    let rank = if n == 0 { 0 } else { bareiss_rank_det(&as_matrix(&columns)).0 };
    WalkMatrix { columns, rank_over_rationals: rank }
}

/// Row-major n x n matrix view (rows are vertices, columns are powers).
pub fn as_matrix(columns: &[Vec<BigInt>]) -> IntMatrix {
    let n = columns.len();
    (0..n).map(|i| (0..n).map(|j| columns[j][i].clone()).collect()).collect()
}

impl WalkMatrix {
    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn matrix(&self) -> IntMatrix {
        as_matrix(&self.columns)
    }
}

pub fn controllability_class(g: &Graph) -> Controllability {
    classify(g.n(), walk_matrix(g).rank_over_rationals)
}

pub fn classify(n: usize, rank: usize) -> Controllability {
    if rank == n {
        Controllability::Controllable
    } else if rank + 1 == n {
        Controllability::AlmostControllable
    } else {
        Controllability::Neither
    }
}
