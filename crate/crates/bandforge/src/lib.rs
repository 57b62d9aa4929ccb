//! Exact enumeration of bands in finite-dimensional partially ordered
//! vector spaces whose order is given by a generating polyhedral cone.
//!
//! The cone is described by its facet functionals together with an order
//! unit. From that the library computes the extreme points of the dual
//! base (`cone`), enumerates saturated and bisaturated index sets
//! (`satcore`), materializes the corresponding bands with disjoint
//! complements, carriers, directedness and extension carriers (`bands`),
//! and ships the built-in instances (`gen`). All arithmetic is in
//! arbitrary-precision rationals (`ratmath`); there is no floating point
//! in any decision path.

pub mod bands;
pub mod cone;
pub mod error;
pub mod gen;
pub mod ratmath;
pub mod report;
pub mod satcore;

pub use error::{Error, Result};

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV_VAR: &str = "BANDFORGE_CAP";

/// Default bound on |Lambda| for the subset enumerations (2^|Lambda|
/// closures are computed).
pub const DEFAULT_CAP: usize = 22;

/// The cap to use: `BANDFORGE_CAP` when set and parseable, else the default.
pub fn cap_from_env() -> usize {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}
