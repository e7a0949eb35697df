//! Exact polynomial-identity computations for finite-dimensional
//! `G × Z2`-graded algebras and their Grassmann envelopes.
//!
//! The crate computes graded codimension sequences (ordinary, central and
//! proper central), decides graded identities and central polynomials by
//! exact evaluation, builds multilinear consequence spans of graded
//! T-ideals, and computes graded exponents through admissible-subalgebra
//! search. All arithmetic is over `Q` and exact.

pub mod algebra;
pub mod catalog;
pub mod codim;
pub mod envelope;
pub mod exponent;
pub mod group;
pub mod harness;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod rational;
pub mod report;

pub use algebra::{validate_algebra, GradedAlgebra, WedderburnData};
pub use group::{Cocycle, ExtendedDegree, GroupElement, GroupSpec};
pub use linalg::Subspace;
pub use rational::Rational;
