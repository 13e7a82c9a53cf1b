//! Exact Coxeter transformations for Dynkin, extended Dynkin and wild diagrams.
//!
//! The crate is `no_std` with `alloc`. Everything that can be done exactly is:
//! Cartan matrices, symmetrizers and Tits forms live over the rationals,
//! Coxeter transformations are integer matrices in the simple-root basis, and
//! characteristic polynomials are computed by fraction-free elimination over
//! `Z[λ]`. Floating point is used only where the answer is irrational
//! (spectral radii, Mahler measures, eigenvector residuals) and for the
//! character tables of the finite subgroups of SU(2), where every numeric
//! quantity that must be an integer is rounded with a residual check.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`diagram`] | weighted diagrams, bicolored partitions, catalog DSL, gluing, folding |
//! | [`cartan`] | generalized Cartan matrices, symmetrizer, Tits form, definiteness |
//! | [`coxeter`] | `C = w1 w2`, DF/FD spectra, Jordan structure, roots, exponents |
//! | [`charpoly`] | characteristic polynomials by determinant and by recursion |
//! | [`poly`] | exact integer polynomials, rational functions, real and complex roots |
//! | [`mckay`] | binary polyhedral groups, character tables, McKay and Slodowy matrices |
//! | [`poincare`] | Kostant generating functions, Ebeling ratios, folding identities |

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod cartan;
pub mod charpoly;
pub mod coxeter;
pub mod diagram;
mod error;
pub mod linalg;
pub mod matrix;
pub mod mckay;
pub mod poincare;
pub mod poly;

pub use cartan::{CartanData, CartanKind};
pub use coxeter::CoxeterAnalysis;
pub use diagram::{BicoloredPartition, Diagram, VertexId};
pub use error::{Error, Result};
pub use poly::{IntPolynomial, RationalFunction};

/// Exact rational numbers used throughout.
pub type Rational = num_rational::BigRational;
