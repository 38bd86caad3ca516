//! Exact birational calculus for hyperplane arrangements on ball quotients.
//!
//! The crate covers
//!
//! - exact scalars over Q, Q(sqrt(-1)), Q(sqrt(-3)) and exact linear algebra ([`numeric`]),
//! - Hermitian lattices over the Gaussian and Eisenstein integers ([`lattice`]),
//! - intersection lattices of central arrangements ([`arrangement`]),
//! - the blow-up ledger: schedules, flags and strata ([`stratification`]),
//! - weights, exponents, cone angles, discrepancies and MMP classes ([`singularity`]),
//! - residue systems of logarithmic connections ([`connection`]),
//! - the join calculus of spherical cone-manifolds ([`cone`]),
//! - JSON input/report handling and the bundled case studies ([`report`]).
//!
//! Everything except [`cone::cone_metric_check`] is exact.

pub mod arrangement;
pub mod cone;
pub mod connection;
pub mod error;
pub mod lattice;
pub mod numeric;
pub mod report;
pub mod singularity;
pub mod stratification;

pub use error::{Error, Result};
