//! Interval-valued functions on cubical cell complexes.
//!
//! The library works with functions whose values are closed intervals of
//! extended reals. On a finite cubical complex the lower and upper Baire
//! operators and the graph completion operator are computed exactly through
//! the star relation; for closed-form functions a deterministic shrinking-
//! neighborhood estimator approximates the same envelopes numerically.
//! On top of the operators sit segment-continuity and Hausdorff-continuity
//! checks, a brute-force minimality oracle for small complexes, and a
//! gallery of worked examples including an exact shock-wave solution of
//! the inviscid Burgers equation.

pub mod analytic;
pub mod baire;
pub mod cli;
pub mod complex;
pub mod continuity;
pub mod extreal;
pub mod gallery;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
