//! The sampling experiment: is the 2-core of the giant determined by its
//! R-spectrum?

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cospectra_graphs::{sample_gnp, SampleConfig, SplitMix64};

use crate::certify::{certify, CertifyBudget, CertifyOutcome};

/// One trial's worth of bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub core_size: usize,
    pub outcome: String,
    pub wall_ms: u128,
}

/// Aggregated counts in the experiment's column layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub lambda: f64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub avg_core_size: f64,
    pub determined: usize,
    pub r_cospectral: usize,
    pub rank_deficient: usize,
    pub terminated: usize,
}

impl ExperimentRow {
    pub const CSV_HEADER: &'static str =
        "lambda,n,avg_core_size,determined,r_cospectral,rank_deficient,terminated";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{:.2},{},{},{},{}",
            self.lambda,
            self.n,
            self.avg_core_size,
            self.determined,
            self.r_cospectral,
            self.rank_deficient,
            self.terminated
        )
    }
}

/// Seed for one trial: the base seed XOR the trial index, passed through
/// the splitter so trials are independent of scheduling.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    SplitMix64::new(seed ^ trial as u64).next_u64()
}

/// Run one trial: sample, take the giant, take its 2-core, certify.
pub fn run_trial(lambda: f64, n: usize, seed: u64, budget: &CertifyBudget) -> (usize, CertifyOutcome, u128) {
    let g = sample_gnp(&SampleConfig::new(n, lambda, seed));
    let core = match g.giant_component() {
        Ok(giant) => giant.graph.k_core(2).graph,
        Err(_) => cospectra_graphs::Graph::empty(0),
    };
    let report = certify(&core, budget);
    (core.n(), report.outcome, report.wall_time.as_millis())
}

/// The full experiment, trials in parallel, aggregation independent of
/// the scheduling order.
pub fn table1_experiment(
    lambda: f64,
    n: usize,
    trials: usize,
    seed: u64,
    budget: &CertifyBudget,
) -> (ExperimentRow, Vec<TrialRecord>) {
    let mut records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let ts = trial_seed(seed, trial);
            let (core_size, outcome, wall_ms) = run_trial(lambda, n, ts, budget);
            TrialRecord {
                trial,
                seed: ts,
                core_size,
                outcome: outcome.label().to_string(),
                wall_ms,
            }
        })
        .collect();
    records.sort_by_key(|r| r.trial);
    let mut row = ExperimentRow {
        lambda,
        n,
        trials,
        seed,
        avg_core_size: 0.0,
        determined: 0,
        r_cospectral: 0,
        rank_deficient: 0,
        terminated: 0,
    };
    let mut total_core = 0usize;
    for r in &records {
        total_core += r.core_size;
        match r.outcome.as_str() {
            "determined" => row.determined += 1,
            "r_cospectral" => row.r_cospectral += 1,
            "rank_deficient" => row.rank_deficient += 1,
            _ => row.terminated += 1,
        }
    }
    if trials > 0 {
        row.avg_core_size = total_core as f64 / trials as f64;
    }
    (row, records)
}
