//! Exact-arithmetic invariants of manifold sets.
//!
//! The crate is organised around four building blocks:
//!
//! * [`lpoly`] — Hirzebruch L-polynomials with exact rational coefficients,
//!   their denominator constants, and evaluation against total Pontryagin
//!   classes.
//! * [`lattice`] — integer-lattice algebra: Smith normal form, sublattice
//!   indices, the divisibility function and constructive divisibility
//!   spectra of full affine sublattices.
//! * [`homology`] — finitely generated abelian groups, graded homology
//!   data, manifold descriptors with a JSON file format, and a library of
//!   built-in examples.
//! * [`surgery`] — L-groups of `Z` and `Z[Z^r]`, normal invariants,
//!   kernels and cokernels of surgery obstruction maps, structure-set
//!   presentations and the decision procedures behind the `manset` CLI.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating-point mode. All operations are pure functions over
//! immutable values and are safe to call concurrently.

pub mod homology;
pub mod lattice;
pub mod lpoly;
pub mod surgery;
