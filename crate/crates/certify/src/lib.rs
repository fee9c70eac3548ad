//! Determined-by-spectrum certification at desk scale: exact walk-matrix
//! controllability, Smith normal forms with modular shortcuts, an exact
//! census of graphs on up to nine vertices, and the Monte Carlo
//! experiment classifying 2-cores of sparse random graphs.

mod census;
mod certify;
mod factor;
mod matrix;
mod mod2;
mod snf;
mod table1;
mod walk;

pub use census::{
    brute_force_rds_oracle, census_for, generate_graphs, read_census, write_census, Census,
    CensusEntry, CENSUS_MAX_N, GRAPH_COUNTS,
};
pub use certify::{certify, CertificationReport, CertifyBudget, CertifyOutcome};
pub use factor::{factorize, is_probable_prime, FactorBudget};
pub use matrix::{bareiss_rank_det, determinant, integer_kernel_vector, rank, IntMatrix};
pub use snf::{
    default_modulus, elementary_divisors, kernel_final_column, smith_normal_form, SnfError,
    SnfResult,
};
pub use table1::{run_trial, table1_experiment, trial_seed, ExperimentRow, TrialRecord};
pub use walk::{controllability_class, walk_matrix, Controllability, WalkMatrix};
