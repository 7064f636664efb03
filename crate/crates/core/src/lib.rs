//! Independence complexes of finite simple graphs.
//!
//! The crate builds independence and clique complexes, star clusters and the
//! graph constructions whose independence complexes are suspensions, and
//! computes exact reduced homology over the integers through Smith normal
//! forms of boundary matrices. The [`verify`] module packages the homotopy
//! statements about these constructions as reproducible homology suites.

pub mod bounds;
pub mod collapses;
pub mod complexes;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graphs;
pub mod homology;
pub mod verify;

pub use complexes::{Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use graphs::{Graph, Vertex};
pub use homology::HomologyProfile;
