//! The confluent hypergeometric function 1F1(α;γ;z): evaluation across the
//! complex plane, its identities, Laguerre polynomials, value-distribution
//! quantities and special-function reductions.

// `!(x > 0.0)` is used on purpose so that NaN takes the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod applications;
pub mod dd;
pub mod error;
pub mod eval;
pub mod gamma;
pub mod identities;
pub mod laguerre;
pub mod quadrature;
pub mod valuedist;

pub use error::{Error, Result};
pub use eval::{eval, EvalResult, Params, Regime, SeriesBudget};
