//! Trees, tree transformations, and distance-type spectra of tree
//! complements, with exhaustive verification campaigns over all
//! isomorphism classes of a given order.
//!
//! The library is organized around four layers:
//!
//! * [`tree`] / [`canon`] / [`enumerate`] — labeled trees, BFS metrics,
//!   complement distances, canonical codes, and exhaustive enumeration of
//!   isomorphism classes;
//! * [`transforms`] — the Kelmans shift, collapse-and-pendant, and the
//!   generalized tree shift, with move enumeration and preimage search;
//! * [`spectral`] / [`jacobi`] — distance, distance signless Laplacian,
//!   and D_α matrices of complements, power iteration for the spectral
//!   radius, and an independent Jacobi oracle;
//! * [`verify`] — campaigns that check the monotonicity and minimality
//!   statements over every class of one order and emit reports.

pub mod canon;
pub mod enumerate;
pub mod io;
pub mod jacobi;
pub mod spectral;
pub mod transforms;
pub mod tree;
pub mod verify;

pub use canon::{canonical_code, center, CanonicalCode};
pub use enumerate::{
    enumerate_trees, enumerate_trees_with_codes, enumerate_trees_with_max, EnumerateError,
    DEFAULT_N_MAX,
};
pub use jacobi::eig_oracle;
pub use spectral::{
    build_matrix, rayleigh, spectral_radius, transmissions, DistMatrix, MatrixError, MatrixKind,
    SpectralError, SpectralSummary, DEFAULT_ITERATION_CAP, DEFAULT_POWER_TOL,
};
pub use transforms::{
    collapse_and_pendant, enumerate_gts_moves, gts, gts_preimages, is_proper, kelmans,
    one_step_collapse_images, GtsMove, KelmansMove, TransformError,
};
pub use tree::{ComplementError, DistanceMatrix, Tree, TreeError, TreeMetrics};
