//! First-moment formulas for pendant-copy counts and the mean-degree
//! threshold below which copies appear.

use thiserror::Error;

use cospectra_graphs::{DegreeDivisor, RootedGraph, SampleConfig};

use crate::rooted::rooted_aut_count;

#[derive(Debug, Error, PartialEq)]
pub enum MomentError {
    #[error("tree on {tree} vertices does not fit in a host on {host}")]
    TreeTooLarge { tree: usize, host: usize },
    #[error("tree must have at least 2 vertices")]
    TreeTooSmall,
    #[error("giant fraction estimate {0} outside [0, 1]")]
    BadGiantFraction(f64),
}

/// Exact finite-n expected number of pendant copies of `t` whose root
/// lies in the giant component, counted per distinct (vertex set, root):
///
/// `n (n-1) ... (n-t+1) * p^(t-1) * (1-p)^((t-1)(n-t) + C(t,2) - (t-1))
///  * c_hat / aut`
///
/// where `aut` is the number of root-fixing automorphisms of `t` (the
/// ordered-tuple count overcounts each geometric copy by that factor)
/// and `c_hat` estimates the giant's vertex fraction.
pub fn expected_pendant_count(
    n: usize,
    lambda: f64,
    divisor: DegreeDivisor,
    t: &RootedGraph,
    c_hat: f64,
) -> Result<f64, MomentError> {
    let tn = t.graph.n();
    if tn < 2 {
        return Err(MomentError::TreeTooSmall);
    }
    if tn > n {
        return Err(MomentError::TreeTooLarge { tree: tn, host: n });
    }
    if !(0.0..=1.0).contains(&c_hat) {
        return Err(MomentError::BadGiantFraction(c_hat));
    }
    let p = SampleConfig { n, lambda, seed: 0, divisor }.p();
    let mut falling = 1.0f64;
    for i in 0..tn {
        falling *= (n - i) as f64;
    }
    let non_edges = ((tn - 1) * (n - tn) + tn * (tn - 1) / 2 - (tn - 1)) as f64;
    let log_prob = (tn as f64 - 1.0) * p.ln() + non_edges * (-p).ln_1p();
    let aut = rooted_aut_count(t) as f64;
    Ok(falling * log_prob.exp() * c_hat / aut)
}

/// Mean-degree threshold `ln(n)/(t-1) + ln(ln(n))` below which (minus a
/// diverging slack chosen by the caller) pendant copies of a t-vertex
/// tree appear in the giant with probability tending to one.
pub fn lambda_threshold(n: f64, t: usize) -> f64 {
    assert!(n >= 3.0, "threshold needs n >= 3");
    assert!(t >= 2, "threshold needs t >= 2");
    n.ln() / (t as f64 - 1.0) + n.ln().ln()
}
