//! Graded-commutative polynomial algebra over the rationals, finitely
//! presented quotients, and per-degree normal forms.

mod element;
pub mod elimination;
mod generator;
mod monomial;
mod parse;
mod presentation;
mod quotient;

pub use element::{scalar, GradedElement, Scalar};
pub use generator::{Generator, Role, Universe};
pub use monomial::{monomials_of_degree, Monomial};
pub use parse::parse_element;
pub use presentation::RingPresentation;
pub use quotient::{NormalForm, PivotRule, QuotientRing};
