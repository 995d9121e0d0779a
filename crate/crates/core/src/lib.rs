//! Presented cohomology rings of Grassmannians, flag manifolds and their
//! associated bundles.
//!
//! Rings are finitely presented graded-commutative algebras over the
//! rationals. Every question about a ring (bases, normal forms, Poincaré
//! series) is answered by exact linear algebra one degree at a time.

pub mod algebra;
pub mod catalog;
mod error;
pub mod extension;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
