//! Exact computational commutative algebra for affine group schemes.
//!
//! The crate provides, over Q and F_p with arbitrary-precision arithmetic:
//!
//! - multivariate polynomials, monomial orders, and the graded monomial
//!   enumeration with d-bounded coefficient encodings ([`poly`], [`monomial`]);
//! - the division algorithm, Buchberger's algorithm and criterion, elimination
//!   ideals, Krull dimension, and degree bounds ([`groebner`]);
//! - ideal quotients, saturation, intersection, radical membership, and
//!   contraction from localized rings ([`idealops`]);
//! - univariate and multivariate factorization ([`factor`]) feeding a full
//!   primary decomposition in the style of Gianni-Trager-Zacharias
//!   ([`primdec`]);
//! - Hopf quadruples presenting affine group schemes, axiom verification, Lie
//!   algebra and group dimension, and the smoothness verdict ([`hopf`]);
//! - centraliser subgroup schemes of group actions on affine charts
//!   ([`centraliser`]);
//! - first-order ring formulas that mirror the algebraic predicates, with an
//!   exact evaluator for their linear existential blocks ([`fol`]);
//! - a JSON-reporting command line surface ([`cli`]) including a prime sweep
//!   that probes in which characteristics a group scheme stays smooth.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod centraliser;
pub mod cli;
pub mod error;
pub mod factor;
pub mod gcd;
pub mod field;
pub mod files;
pub mod fol;
pub mod groebner;
pub mod hopf;
pub mod idealops;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod primdec;

pub use error::{Error, Result};
