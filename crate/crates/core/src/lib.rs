//! Exact matroid and hyperplane-arrangement computations.
//!
//! Matroids on up to 64 elements are stored by their canonical basis
//! lists ([`Matroid`]). On top of that the crate provides
//!
//! * erection enumeration through block families and exact cover
//!   ([`erection`]),
//! * exact linear algebra over the rationals and prime fields, column
//!   matroids, relation spaces and formality of arrangements
//!   ([`arrangement`]),
//! * characteristic polynomials and integer root splitting
//!   ([`polynomial`]),
//! * minor search with Fano / non-Fano realizability obstructions
//!   ([`minor`]),
//! * text formats and a reproducible report of the bundled example
//!   ([`format`], [`repro`]).

pub mod arrangement;
pub mod catalog;
pub mod erection;
mod error;
pub mod exact_cover;
pub mod field;
pub mod format;
pub mod isomorphism;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod minor;
pub mod polynomial;
pub mod properties;
pub mod repro;
pub mod subset;

pub use arrangement::{ExactMatrix, FormalityReport};
pub use erection::{BlockFamily, ErectionFamily, SearchBudget};
pub use error::{Error, Result};
pub use isomorphism::{are_isomorphic, PointedMap};
pub use lattice::FlatLattice;
pub use matroid::{Matroid, Reindexed};
pub use minor::{MinorWitness, ObstructionReport, Verdict};
pub use polynomial::IntPolynomial;
pub use subset::Subset;
