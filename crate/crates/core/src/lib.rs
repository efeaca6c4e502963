//! Restricted Lie algebras of dimension at most 4 over small finite fields:
//! exact arithmetic, [p]-maps, automorphism groups, classification of
//! [p]-nilpotent [p]-maps up to isomorphism, and a brute-force orbit oracle
//! that checks the classification.

pub mod aut;
pub mod classify;
pub mod error;
pub mod field;
pub mod json;
pub mod liealg;
pub mod linalg;
pub mod pmap;
pub mod verify;

pub use aut::AutMat;
pub use classify::{ClassList, IsoLabel};
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec};
pub use liealg::{CatalogName, LieAlg};
pub use linalg::{SqMat, Subspace, Vect};
pub use pmap::{PMapImages, RestrictedAlg};
pub use verify::{OrbitReport, VerifyConfig};
