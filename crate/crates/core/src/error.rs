use thiserror::Error;

/// Errors produced by evaluation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma parameter {0} is a nonpositive integer")]
    InvalidGamma(String),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms (last term {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },

    #[error("alpha = {0} is not a nonpositive integer")]
    NotDegenerate(String),

    #[error("shifted parameter gamma{shift:+} = {value} is a nonpositive integer")]
    InvalidShift { shift: i32, value: String },

    #[error(
        "function vanishes near the circle |z| = {radius} after {attempts} radius perturbations"
    )]
    ZeroOnCircle { radius: f64, attempts: usize },

    /// A single sample fell under the zero guard; callers perturb the radius.
    #[error("sample magnitude below zero guard at |z| = {radius}")]
    NearZero { radius: f64 },

    #[error("real zero search found {found} positive zeros, closed form predicts {expected}")]
    Inconclusive {
        expected: usize,
        found: usize,
        zeros: Vec<f64>,
    },

    #[error("parameters ({alpha}, {gamma}) fall in an overlapping case of the real zero table")]
    AmbiguousCase { alpha: f64, gamma: f64 },

    #[error("value overflows double precision: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
