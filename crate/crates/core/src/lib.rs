//! Numerical checks for Moebius-covariant representation theory: interval
//! geometry, group identities, truncated lowest-weight representations,
//! characters and nuclearity bounds, and the free-field branching rules.

// `!(x > 0.0)` is how NaN gets rejected alongside non-positive values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod branching;
pub mod characters;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod moebius;
pub mod rep;
pub mod report;
pub mod sl2;

pub use error::{Error, Result};
