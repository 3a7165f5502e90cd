//! Residuals of the contiguous relations, the Kummer transformation and the
//! differentiation formula. All residuals are relative to the largest term.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{
    derivative, eval, eval_asymptotic, eval_polynomial, eval_series, kummer_reflect, Params,
    SeriesBudget, Truncation, R_SWITCH,
};

/// The six linear relations between F = 1F1(α;γ;z) and its contiguous functions.
///
/// ```text
/// R1: (γ-α) F(α-1) + (2α-γ+z) F - α F(α+1) = 0
/// R2: γ(γ-1) F(γ-1) - γ(γ-1+z) F + z(γ-α) F(γ+1) = 0
/// R3: (α-γ+1) F - α F(α+1) + (γ-1) F(γ-1) = 0
/// R4: γ F - γ F(α-1) - z F(γ+1) = 0
/// R5: γ(α+z) F + z(α-γ) F(γ+1) - αγ F(α+1) = 0
/// R6: (α-1+z) F + (γ-α) F(α-1) + (1-γ) F(γ-1) = 0
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContiguousRelation {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl ContiguousRelation {
    pub const ALL: [ContiguousRelation; 6] =
        [Self::R1, Self::R2, Self::R3, Self::R4, Self::R5, Self::R6];

    /// Parameter shifts (Δα, Δγ) of the three functions, in the order of
    /// [`coefficients`](Self::coefficients).
    pub fn shifts(self) -> [(i32, i32); 3] {
        match self {
            Self::R1 => [(-1, 0), (0, 0), (1, 0)],
            Self::R2 => [(0, -1), (0, 0), (0, 1)],
            Self::R3 => [(0, 0), (1, 0), (0, -1)],
            Self::R4 => [(0, 0), (-1, 0), (0, 1)],
            Self::R5 => [(0, 0), (0, 1), (1, 0)],
            Self::R6 => [(0, 0), (-1, 0), (0, -1)],
        }
    }

    pub fn coefficients(self, a: Complex64, g: Complex64, z: Complex64) -> [Complex64; 3] {
        match self {
            Self::R1 => [g - a, 2.0 * a - g + z, -a],
            Self::R2 => [g * (g - 1.0), -g * (g - 1.0 + z), z * (g - a)],
            Self::R3 => [a - g + 1.0, -a, g - 1.0],
            Self::R4 => [g, -g, -z],
            Self::R5 => [g * (a + z), z * (a - g), -a * g],
            Self::R6 => [a - 1.0 + z, g - a, 1.0 - g],
        }
    }
}

impl fmt::Display for ContiguousRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ContiguousRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "R1" => Ok(Self::R1),
            "R2" => Ok(Self::R2),
            "R3" => Ok(Self::R3),
            "R4" => Ok(Self::R4),
            "R5" => Ok(Self::R5),
            "R6" => Ok(Self::R6),
            _ => Err(Error::Domain(format!("unknown contiguous relation '{s}'"))),
        }
    }
}

/// |Σ t_i| / max |t_i| for the terms of a relation; zero if every term vanishes.
fn relative_sum(terms: &[Complex64]) -> f64 {
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    terms.iter().sum::<Complex64>().norm() / scale
}

pub fn contiguous_residual(id: ContiguousRelation, p: &Params, z: Complex64) -> Result<f64> {
    let b = SeriesBudget::default();
    let coef = id.coefficients(p.alpha(), p.gamma(), z);
    let mut terms = [Complex64::new(0.0, 0.0); 3];
    for (i, &(da, dg)) in id.shifts().iter().enumerate() {
        let q = p.shifted(da, dg)?;
        terms[i] = coef[i] * eval(&q, z, &b)?.value;
    }
    Ok(relative_sum(&terms))
}

/// F(α;γ;z) without Kummer reflection, so that the transformation is not
/// checked against itself.
fn eval_unreflected(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<Complex64> {
    if p.degenerate() {
        return Ok(eval_polynomial(p, z)?.value);
    }
    let on_cut = z.im == 0.0 && z.re < 0.0;
    if z.norm() <= R_SWITCH || on_cut {
        return Ok(eval_series(p, z, b)?.value);
    }
    Ok(eval_asymptotic(p, z, Truncation::Auto, Truncation::Auto)?.value)
}

/// Relative residual of F(α;γ;z) - e^z F(γ-α;γ;-z), both sides evaluated
/// directly (series, polynomial or asymptotic expansion).
pub fn kummer_residual(p: &Params, z: Complex64) -> Result<f64> {
    let b = SeriesBudget::default();
    let k = kummer_reflect(p);
    let lhs = eval_unreflected(p, z, &b)?;
    let rhs = k.prefactor(z) * eval_unreflected(&k.params, k.argument(z), &b)?;
    let scale = lhs.norm().max(rhs.norm());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((lhs - rhs).norm() / scale)
}

pub const MAX_FD_ORDER: u32 = 6;

/// Default finite-difference step: 1e-5 for n = 1, (1e-16)^{1/(n+2)} above.
pub fn default_fd_step(n: u32) -> f64 {
    if n == 1 {
        1e-5
    } else {
        1e-16f64.powf(1.0 / (n as f64 + 2.0))
    }
}

/// Central n-th difference Σ_k (-1)^k C(n,k) f(z + (n/2 - k)h) / h^n.
fn central_difference(
    p: &Params,
    z: Complex64,
    n: u32,
    h: f64,
    b: &SeriesBudget,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut binom = 1.0;
    for k in 0..=n {
        let offset = (n as f64 / 2.0 - k as f64) * h;
        let f = eval(p, z + offset, b)?.value;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * f;
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc / h.powi(n as i32))
}

pub fn differentiation_residual(p: &Params, z: Complex64, n: u32) -> Result<f64> {
    differentiation_residual_with_step(p, z, n, default_fd_step(n))
}

/// Relative deviation between (α)_n/(γ)_n F(α+n;γ+n;z) and a central
/// difference of step `h`, normalized by the larger of the two.
pub fn differentiation_residual_with_step(p: &Params, z: Complex64, n: u32, h: f64) -> Result<f64> {
    if n == 0 || n > MAX_FD_ORDER {
        return Err(Error::Domain(format!(
            "derivative order must be in 1..={MAX_FD_ORDER}, got {n}"
        )));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step must be positive, got {h}")));
    }
    let b = SeriesBudget::default();
    let exact = derivative(p, z, n, &b)?;
    let fd = central_difference(p, z, n, h, &b)?;
    let scale = exact.norm().max(fd.norm());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((exact - fd).norm() / scale)
}
