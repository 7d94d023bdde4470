//! Exact computation and verification of a q-analogue of Wilson's
//! congruence, `f_{n-1}(q) ≡ μ(n) (mod Φ_n(q))`, where `f_{n-1}(q)` sums
//! `q^{maj σ}` over the full cycles `σ` of `{1..n}`.
//!
//! All arithmetic is exact: polynomials carry arbitrary-precision integer
//! coefficients and every congruence is decided by a polynomial remainder.

pub mod bigpoly;
pub mod cache;
pub mod cli;
pub mod error;
pub mod numth;
pub mod orbit;
pub mod permstat;
pub mod qcalc;
pub mod report;
pub mod wilson;

pub use bigpoly::{cyclotomic, Degree, Polynomial};
pub use error::Error;
pub use permstat::{f_poly, Permutation, StatBundle};
pub use report::{CongruenceReport, Relation, Status};
