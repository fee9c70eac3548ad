use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::rng::Xoshiro256StarStar;

/// Which divisor turns the mean-degree parameter into an edge probability.
///
/// `NMinusOne` (the default) makes `lambda` exactly the expected degree,
/// `p = lambda / (n - 1)`. `N` gives the textbook `p = lambda / n`; the
/// two differ by an O(1/n) shift in average degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum DegreeDivisor {
    #[default]
    NMinusOne,
    N,
}

/// Parameters for one `G(n, p)` draw with `p` derived from a mean degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub n: usize,
    pub lambda: f64,
    pub seed: u64,
    #[serde(default)]
    pub divisor: DegreeDivisor,
}

impl SampleConfig {
    pub fn new(n: usize, lambda: f64, seed: u64) -> Self {
        SampleConfig { n, lambda, seed, divisor: DegreeDivisor::default() }
    }

    /// Edge probability, clamped into `[0, 1]`.
    pub fn p(&self) -> f64 {
        let d = match self.divisor {
            DegreeDivisor::NMinusOne => self.n.saturating_sub(1),
            DegreeDivisor::N => self.n,
        };
        if d == 0 {
            return 0.0;
        }
        (self.lambda / d as f64).clamp(0.0, 1.0)
    }

    /// True when `lambda` would push `p` above one (it gets clamped).
    pub fn is_clamped(&self) -> bool {
        let d = match self.divisor {
            DegreeDivisor::NMinusOne => self.n.saturating_sub(1),
            DegreeDivisor::N => self.n,
        };
        d > 0 && self.lambda / d as f64 > 1.0
    }
}

/// Draw one Erdős–Rényi graph. Each unordered pair is an independent
/// Bernoulli(p) edge; draws consume the stream in row-major pair order
/// `(0,1), (0,2), ..., (n-2, n-1)`, so identical configs give identical
/// edge sets on every platform.
pub fn sample_gnp(config: &SampleConfig) -> Graph {
    let p = config.p();
    let mut rng = Xoshiro256StarStar::new(config.seed);
    let mut edges = Vec::new();
    for u in 0..config.n {
        for v in u + 1..config.n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(config.n, &edges).unwrap()
}
