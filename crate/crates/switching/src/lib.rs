//! Local switching methods that preserve the adjacency spectrum:
//! conjugation by `diag(Q, -I, I)` for an orthogonal non-permutation `Q`,
//! with Godsil–McKay switching as the workhorse instance, plus the
//! neighborhood-graph machinery and paths-and-cycles generators used to
//! verify when such switchings can only produce isomorphic graphs.

mod dense;
mod gm;
mod neighborhood;
mod pc;
pub mod plant;
mod switch;
mod verify;

pub use dense::{dense_small_subgraph, DenseWitness};
pub use gm::{figure_gm_instance, gm_find_sets};
pub use neighborhood::{is_disjoint_cycles, neighborhood_graph, NeighborhoodGraph};
pub use pc::{pc_cospectral_pair, pc_invariant, PathsCyclesMultiset, PcError};
pub use switch::{
    apply_switch, gm_q_matrix, subgraph_switch_check, OrthogonalSwitch, RationalMatrix,
    SwitchError, UserSwitch,
};
pub use verify::union_cycles_switch_isomorphism;
