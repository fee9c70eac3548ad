//! The constructive side of cospectral-mate building: finding pendant
//! trees in a host graph, swapping them for spectrum-preserving partners,
//! discovering such partner pairs by exhaustive rooted-tree search, and
//! the first-moment bookkeeping for how many pendant copies a sparse
//! random graph should carry.

mod discover;
mod embed;
mod moments;
mod rooted;
mod swap;

pub use discover::{builtin_catalog, discover_swap_pairs, Catalog, CatalogEntry};
pub use embed::{find_pendant_copies, shared_root_check, PendantEmbedding, PendantError};
pub use moments::{expected_pendant_count, lambda_threshold, MomentError};
pub use rooted::{
    rooted_aut_count, rooted_canonical_code, rooted_tree_isomorphism, rooted_trees, tree_from_level_sequence,
};
pub use swap::{enumerate_mates, swap_pendant, MateEnumeration, RootedTreePair, SwapMode};
