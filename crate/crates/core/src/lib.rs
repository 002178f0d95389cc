//! Exact-arithmetic computer algebra for regular multiplier Hopf
//! algebras, their quasitriangular structures, and Drinfeld-type
//! doubles, together with a verification command line.
//!
//! Everything is computed over the rationals with no floating point
//! and no modular shortcuts.  Identities that live in multiplier
//! algebras are checked through covered products on a finite window of
//! basis elements; the window radius is recorded in every report.

pub mod scalar;
pub mod linalg;
pub mod mha;
pub mod axioms;
pub mod corrupt;
pub mod double;
pub mod expr;
pub mod report;
pub mod ore;
pub mod group;
pub mod oracle;
pub mod pairing;
pub mod quasitri;
pub mod suites;
pub mod cograded;
pub mod cli;

pub use linalg::{Elem, Idx, Tensor2, Tensor3};
pub use scalar::Scalar;
