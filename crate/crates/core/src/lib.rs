//! Signed black/white (SBW) squared and cubed complexes, and their relation
//! to alternating link diagrams.
//!
//! A configuration of `n` SBW squares with a pairing of positive onto
//! negative corners determines an edge permutation; its orbit count decides
//! whether the associated cubed complex decomposes an alternating link
//! exterior. The [`diagram`] module converts in both directions between PD
//! codes and pairings, [`complex`] builds the quotient complexes, and
//! [`census`] enumerates small configurations.

pub mod census;
pub mod complex;
pub mod diagram;
pub mod homology;
pub mod sbw;
pub mod surface;
mod union_find;

pub use sbw::{
    canonical_form, criterion_check, find_isomorphism, induced_edge_bijection, isomorphic,
    orbit_decomposition, CanonicalForm, Color, Corner, CornerRef, CriterionReport, EdgeBijection,
    EdgeRef, Isomorphism, OrbitDecomposition, SbwSpec, Side, Sign, SpecError,
};
