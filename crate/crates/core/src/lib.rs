//! Exact computation of the exponents of 2-dimensional multiarrangements of
//! lines.
//!
//! A multiarrangement `(A, m)` is a finite set of lines through the origin of
//! the plane, each carrying a positive multiplicity. Its module of logarithmic
//! derivations is free of rank two, and the degrees `(d1, d2)` of a
//! homogeneous basis are its exponents. This crate computes them with exact
//! rational arithmetic by searching for the smallest degree at which the
//! Wakefield–Yuzvinsky linear system has a nontrivial solution, and provides
//! the surrounding machinery: Wronskians, Hadamard factorization of the
//! system matrix, generalized Laplace expansion, p-adic valuations, symbolic
//! determinants in one slope, theorem predicates and lattice sweeps.
//!
//! Everything is computed over ℚ; there is no floating point on any
//! mathematical path.

pub mod error;
pub mod exponents;
pub mod matrix;
pub mod model;
pub mod padic;
pub mod symbolic;
pub mod sweep;
pub mod theorems;
pub mod tuples;
pub mod wy;

pub use error::{Error, Result};
pub use exponents::{
    delta, exponents, exponents_bruteforce, exponents_small, exponents_unbalanced, exponents_wy,
    ExponentResult, Method,
};
pub use matrix::{BlockShape, QMatrix};
pub use model::{DerivationCoeffs, ExponentPair, LineForm, Multiarrangement, Transform2};
pub use tuples::{NNTuple, WronskiMatrix};
pub use wy::WYInstance;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
