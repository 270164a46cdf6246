//! Exact Laplacian spectra of the comaximal graph of `Z_n`.
//!
//! Two residues `x, y` of `Z_n` are adjacent when the ideals they generate sum
//! to the whole ring, which for `Z_n` reduces to `gcd(gcd(x, n), gcd(y, n)) = 1`.
//! Grouping vertices by `gcd(x, n)` gives an equitable partition, so the whole
//! spectrum follows from a small integer quotient matrix indexed by the proper
//! divisors of `n` instead of an `n x n` eigenproblem.
//!
//! Module map:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`divisors`] | factorization, totient, radical, the [`Modulus`] record |
//! | [`comax`] | adjacency, divisor classes, degrees, dense Laplacian export |
//! | [`poly`] | arbitrary-precision integer polynomials, integer roots, real roots |
//! | [`linalg`] | dense integer matrices, fraction-free determinants |
//! | [`quotient`] | quotient matrix, exact spectra, closed forms |
//! | [`oracle`] | brute-force ground truth: dense eigensolver, modular char poly, max-flow cuts |
//! | [`connectivity`] | claimed-versus-computed reports for the connectivity results |
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod comax;
pub mod connectivity;
pub mod divisors;
mod error;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod quotient;

pub use comax::{ClassKind, ComaximalGraph, DivisorClass, DEFAULT_DENSE_LIMIT};
pub use connectivity::{ReportStatus, ReportValue, TheoremReport};
pub use divisors::Modulus;
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use linalg::IntMatrix;
pub use poly::IntPoly;
pub use quotient::{QuotientMatrix, SpectrumMultiset};
