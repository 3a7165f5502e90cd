//! Evaluation of 1F1(α;γ;z) by regime: terminating polynomial, power series,
//! Kummer reflection for Re z < 0, and the large-|z| expansion.

mod asymptotic;
mod integral;
mod params;
mod series;

pub use asymptotic::{
    asymptotic_terms, eval_asymptotic, AsymptoticPiece, AsymptoticTerms, Truncation,
};
pub use integral::eval_integral;
pub use params::{EvalResult, Params, Regime, SeriesBudget};
pub use series::{eval_polynomial, eval_series, pochhammer};

use num_complex::Complex64;

use crate::error::Result;

/// Radius beyond which the dispatcher prefers the asymptotic expansion.
pub const R_SWITCH: f64 = 40.0;

/// Largest |z| for which the series is tried as a fallback to a poor
/// asymptotic estimate; beyond it the terms overflow.
const SERIES_FALLBACK_RADIUS: f64 = 600.0;

/// Relative error above which an asymptotic value is cross-checked by the series.
const ASYMPTOTIC_REL_TOL: f64 = 1e-12;

/// F(α;γ;z) = e^z F(γ-α;γ;-z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerReflection {
    /// Reflected parameters (γ-α, γ).
    pub params: Params,
}

impl KummerReflection {
    pub fn argument(&self, z: Complex64) -> Complex64 {
        -z
    }

    pub fn prefactor(&self, z: Complex64) -> Complex64 {
        z.exp()
    }

    pub fn ln_prefactor(&self, z: Complex64) -> Complex64 {
        z
    }
}

pub fn kummer_reflect(p: &Params) -> KummerReflection {
    KummerReflection {
        params: p.with_alpha(p.gamma() - p.alpha()),
    }
}

fn relative_error(r: &EvalResult) -> f64 {
    r.abs_error_est / r.value.norm()
}

/// Evaluation for Re z ≥ 0 (or any z for a polynomial).
fn eval_forward(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<EvalResult> {
    if p.degenerate() {
        return eval_polynomial(p, z);
    }
    if z.norm() <= R_SWITCH {
        return eval_series(p, z, b);
    }
    let asym = eval_asymptotic(p, z, Truncation::Auto, Truncation::Auto);
    let poor = match &asym {
        Ok(r) => !(relative_error(r) <= ASYMPTOTIC_REL_TOL),
        Err(_) => true,
    };
    if poor && z.norm() <= SERIES_FALLBACK_RADIUS {
        if let Ok(s) = eval_series(p, z, b) {
            match &asym {
                Ok(a) if relative_error(a) <= relative_error(&s) => {}
                _ => return Ok(s),
            }
        }
    }
    asym
}

/// Regime dispatcher.
///
/// Degenerate α gives the polynomial; Re z < 0 is reflected to -z and
/// evaluated there; otherwise the series is used for |z| ≤ [`R_SWITCH`] and
/// the asymptotic expansion beyond. The reported regime is the outermost
/// transformation applied.
pub fn eval(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<EvalResult> {
    if p.degenerate() {
        return eval_polynomial(p, z);
    }
    if z.re < 0.0 {
        let k = kummer_reflect(p);
        let inner = eval_forward(&k.params, k.argument(z), b)?;
        let pref = k.prefactor(z);
        let value = pref * inner.value;
        return Ok(EvalResult {
            value,
            abs_error_est: pref.norm() * inner.abs_error_est + 2.0 * f64::EPSILON * value.norm(),
            regime: Regime::KummerReflected,
            terms_used: inner.terms_used,
        });
    }
    eval_forward(p, z, b)
}

/// n-th derivative (α)_n/(γ)_n F(α+n;γ+n;z).
pub fn derivative(p: &Params, z: Complex64, n: u32, b: &SeriesBudget) -> Result<Complex64> {
    let n_us = n as usize;
    let coef = pochhammer(p.alpha(), n_us) / pochhammer(p.gamma(), n_us);
    if coef == Complex64::new(0.0, 0.0) {
        return Ok(coef);
    }
    let shifted = Params::new(p.alpha() + n as f64, p.gamma() + n as f64)?;
    Ok(coef * eval(&shifted, z, b)?.value)
}

/// ln F(α;γ;z) (imaginary part modulo 2π) with the regime that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LnEval {
    pub ln_value: Complex64,
    pub regime: Regime,
}

fn ln_forward(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<LnEval> {
    if p.degenerate() || z.norm() <= R_SWITCH {
        let r = eval_forward(p, z, b)?;
        return Ok(LnEval {
            ln_value: r.value.ln(),
            regime: r.regime,
        });
    }
    let t = asymptotic_terms(p, z, Truncation::Auto, Truncation::Auto)?;
    let ln_value = t.ln_value();
    let rel = (t.ln_error() - ln_value.re).exp();
    if !(rel <= ASYMPTOTIC_REL_TOL) && z.norm() <= SERIES_FALLBACK_RADIUS {
        if let Ok(s) = eval_series(p, z, b) {
            if s.value.norm().is_finite() && relative_error(&s) < rel {
                return Ok(LnEval {
                    ln_value: s.value.ln(),
                    regime: Regime::Series,
                });
            }
        }
    }
    Ok(LnEval {
        ln_value,
        regime: Regime::Asymptotic,
    })
}

/// Logarithm of F, usable where F itself overflows (Re z up to ~1e300).
pub fn ln_eval(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<LnEval> {
    if !p.degenerate() && z.re < 0.0 {
        let k = kummer_reflect(p);
        let inner = ln_forward(&k.params, k.argument(z), b)?;
        return Ok(LnEval {
            ln_value: k.ln_prefactor(z) + inner.ln_value,
            regime: Regime::KummerReflected,
        });
    }
    ln_forward(p, z, b)
}

/// ln |F(α;γ;z)|; −∞ at an exact zero.
pub fn log_abs(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<f64> {
    Ok(ln_eval(p, z, b)?.ln_value.re)
}
