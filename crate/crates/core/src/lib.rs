//! Exact computational homological algebra for polynomial Landau-Ginzburg
//! models.
//!
//! Everything here runs over the rationals with arbitrary-precision
//! arithmetic; there is no floating point anywhere. The crate provides:
//!
//! * [`exactalg`] — rational and univariate-polynomial linear algebra
//!   (reduced row echelon form, Smith normal form),
//! * [`groebner`] — multivariate polynomials, Buchberger bases, normal
//!   forms, standard monomials and membership lifting,
//! * [`homology`] — bounded complexes, double complexes, spectral
//!   sequences and filtered comparison,
//! * [`gradedpair`] — sign-exact graded duality and Serre pairings on
//!   exterior algebras,
//! * [`bulk`] — Milnor algebras, residue traces and the bulk Gram
//!   pairing,
//! * [`boundary`] — matrix factorizations, two-periodic Hom complexes,
//!   boundary traces and Gram pairings,
//! * [`category`] — finite Z2-graded categories with shift,
//!   supercompletion and Serre-functor checks.
//!
//! The parallel feature (on by default) runs embarrassingly parallel
//! inner loops (Gram entries, spectral page components, per-pair category
//! checks) on rayon; without it the same code runs sequentially.

pub mod boundary;
pub mod bulk;
pub mod category;
pub mod exactalg;
pub mod gradedpair;
pub mod groebner;
pub mod homology;
pub mod parallel;

pub use exactalg::Rat;
