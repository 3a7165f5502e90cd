use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::nonpositive_integer;

/// Parameter pair (α, γ) of 1F1(α; γ; z).
///
/// γ may not be a nonpositive integer. When α is within `1e-12` of a
/// nonpositive integer `-n` the function is a polynomial of degree `n`, and
/// the pair is flagged as degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    alpha: Complex64,
    gamma: Complex64,
    degree: Option<u32>,
}

impl Params {
    pub fn new(alpha: Complex64, gamma: Complex64) -> Result<Self> {
        if !(alpha.re.is_finite()
            && alpha.im.is_finite()
            && gamma.re.is_finite()
            && gamma.im.is_finite())
        {
            return Err(Error::Domain(format!(
                "non-finite parameters ({alpha}, {gamma})"
            )));
        }
        if nonpositive_integer(gamma).is_some() {
            return Err(Error::InvalidGamma(gamma.to_string()));
        }
        let degree = nonpositive_integer(alpha).map(|n| n as u32);
        Ok(Self {
            alpha,
            gamma,
            degree,
        })
    }

    pub fn real(alpha: f64, gamma: f64) -> Result<Self> {
        Self::new(Complex64::new(alpha, 0.0), Complex64::new(gamma, 0.0))
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn degenerate(&self) -> bool {
        self.degree.is_some()
    }

    /// Polynomial degree `n = -α` in the degenerate case.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    /// Both parameters real (imaginary parts exactly zero).
    pub fn is_real(&self) -> bool {
        self.alpha.im == 0.0 && self.gamma.im == 0.0
    }

    /// Same γ with a new α; γ was already validated.
    pub(crate) fn with_alpha(&self, alpha: Complex64) -> Self {
        Self {
            alpha,
            gamma: self.gamma,
            degree: nonpositive_integer(alpha).map(|n| n as u32),
        }
    }

    /// Parameters (α + da, γ + dg).
    pub fn shifted(&self, da: i32, dg: i32) -> Result<Self> {
        let gamma = self.gamma + dg as f64;
        if nonpositive_integer(gamma).is_some() {
            return Err(Error::InvalidShift {
                shift: dg,
                value: gamma.to_string(),
            });
        }
        Self::new(self.alpha + da as f64, gamma)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, gamma={})", self.alpha, self.gamma)
    }
}

/// Which algorithm produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    Series,
    KummerReflected,
    Asymptotic,
    Polynomial,
    Integral,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::Series => "Series",
            Regime::KummerReflected => "KummerReflected",
            Regime::Asymptotic => "Asymptotic",
            Regime::Polynomial => "Polynomial",
            Regime::Integral => "Integral",
        };
        f.write_str(s)
    }
}

/// A computed value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_est: f64,
    pub regime: Regime,
    pub terms_used: usize,
}

/// Stopping controls for the power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    /// Relative term size below which the series is considered converged.
    pub tol: f64,
    pub max_terms: usize,
}

impl SeriesBudget {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::Domain(format!(
                "series tolerance must be positive, got {tol}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(Self { tol, max_terms })
    }
}

impl Default for SeriesBudget {
    fn default() -> Self {
        Self {
            tol: 1e-15,
            max_terms: 10_000,
        }
    }
}
