//! Exact integer characteristic polynomials of adjacency matrices, and
//! the cospectrality predicates built on them. All arithmetic is over
//! arbitrary-precision integers; no eigenvalue is ever materialized as a
//! float, so spectral equality is literal coefficient equality.

mod charpoly;
mod poly;

pub use charpoly::{
    are_cospectral, are_r_cospectral, char_poly, cycle_char_poly, path_char_poly, PolyError,
    SpectralFingerprint,
};
pub use poly::IntPolynomial;
