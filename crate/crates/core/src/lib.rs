//! Exact symbolic calculus on jet bundles.
//!
//! The crate works with finite-order representatives of the algebra of
//! differential forms on the infinite jet space of a fibred manifold.
//! Coefficients are multivariate polynomials over exact rationals (with a
//! small set of opaque elementary atoms), so every operator identity the
//! crate claims is verified by exact cancellation, never by tolerance.
//!
//! Module map:
//! - [`jet`]: bundle signatures, symmetric multi-indices, jet variables.
//! - [`expr`]: canonical scalar expressions and formal partial derivatives.
//! - [`form`]: the graded algebra of forms in the contact basis
//!   `{dx^lambda, theta^i_Lambda}` with bidegree bookkeeping.
//! - [`calculus`]: total derivatives, the horizontal/vertical split of the
//!   exterior differential, the interior Euler operator and the
//!   variational operator, prolongation, contraction, Lie derivative.
//! - [`variational`]: Euler-Lagrange computation, the first variational
//!   split with a canonical boundary term, Noether currents and symmetry
//!   classification, the Helmholtz check, and the bounded-order
//!   horizontal-potential solver.
//! - [`corpus`]: deterministic random corpora for the verification suites.
//!
//! Everything is immutable and pure; values are `Send + Sync` and safe to
//! share across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod approx;
pub mod calculus;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod form;
pub mod jet;
mod solve;
pub mod variational;

pub use calculus::VerticalField;
pub use error::Error;
pub use expr::Expression;
pub use form::{Form, MixedForm, SourceForm, WedgeMonomial};
pub use jet::{BundleSignature, JetVariable, MultiIndex};
pub use variational::{Bounds, Lagrangian, SymmetryKind, SymmetryReport, VariationalSplit};

/// Exact rational scalar used for all coefficients.
pub type Rational = num_rational::BigRational;
