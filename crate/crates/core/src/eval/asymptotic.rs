//! Large-|z| expansion of 1F1 as an algebraic part plus an exponential part.
//!
//! ```text
//! 1F1(α;γ;z) ≈ Γ(γ)/Γ(γ-α) (e^{iπε}/z)^α Σ_n (α)_n (α-γ+1)_n / n! (-z)^{-n}
//!            + Γ(γ)/Γ(α)   e^z z^{α-γ}   Σ_n (γ-α)_n (1-α)_n  / n!  z^{-n}
//! ```
//!
//! with ε = +1 for Im z > 0 and ε = -1 otherwise (including the positive real
//! axis). Both sums diverge; the automatic truncation keeps the terms strictly
//! before the smallest one.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{EvalResult, Params, Regime};
use crate::error::{Error, Result};
use crate::gamma::{ln_gamma, ln_rgamma};

const MAX_ASYMPTOTIC_TERMS: usize = 4000;

/// The remainder of an optimally truncated sum runs up to about 1.25 times
/// the first omitted term; the error estimate doubles that term.
pub const ERROR_SAFETY: f64 = 2.0;

/// Truncation index of one asymptotic sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// Stop just before the smallest term (optimal truncation).
    Auto,
    /// Keep terms 0..=n.
    Fixed(usize),
}

/// One of the two parts of the expansion: `exp(ln_prefactor) * sum`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticPiece {
    pub ln_prefactor: Complex64,
    pub sum: Complex64,
    pub abs_sum: f64,
    /// Magnitude of the first omitted term of the sum plus the unresolved
    /// Stokes jump (unscaled).
    pub omitted: f64,
    pub terms: usize,
}

impl AsymptoticPiece {
    pub fn value(&self) -> Complex64 {
        self.ln_prefactor.exp() * self.sum
    }

    pub fn ln_value(&self) -> Complex64 {
        self.ln_prefactor + self.sum.ln()
    }

    /// ln of the absolute error estimate: [`ERROR_SAFETY`] times the omitted
    /// term, plus a rounding bound for the prefactor and the summation.
    pub fn ln_error(&self) -> f64 {
        let rounding = f64::EPSILON * (32.0 + self.ln_prefactor.norm()) * self.abs_sum;
        self.ln_prefactor.re + (ERROR_SAFETY * self.omitted + rounding).ln()
    }

    pub fn error(&self) -> f64 {
        self.ln_error().exp()
    }
}

/// The two parts of the expansion; a part whose gamma prefactor vanishes is `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticTerms {
    pub algebraic: Option<AsymptoticPiece>,
    pub exponential: Option<AsymptoticPiece>,
}

impl AsymptoticTerms {
    pub fn value(&self) -> Complex64 {
        self.pieces().map(|p| p.value()).sum()
    }

    /// ln of the total, computed without overflow.
    pub fn ln_value(&self) -> Complex64 {
        let logs: Vec<Complex64> = self.pieces().map(|p| p.ln_value()).collect();
        log_sum_exp(&logs)
    }

    pub fn error(&self) -> f64 {
        self.pieces().map(|p| p.error()).sum()
    }

    /// ln of the error estimate (−∞ when both parts are exact).
    pub fn ln_error(&self) -> f64 {
        let logs: Vec<f64> = self.pieces().map(|p| p.ln_error()).collect();
        let m = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + logs.iter().map(|l| (l - m).exp()).sum::<f64>().ln()
    }

    pub fn terms(&self) -> usize {
        self.pieces().map(|p| p.terms).sum()
    }

    fn pieces(&self) -> impl Iterator<Item = &AsymptoticPiece> {
        self.algebraic.iter().chain(self.exponential.iter())
    }
}

/// ln(Σ exp(l_i)) for complex logarithms, modulo 2πi.
pub(crate) fn log_sum_exp(logs: &[Complex64]) -> Complex64 {
    let finite: Vec<&Complex64> = logs.iter().filter(|l| l.re > f64::NEG_INFINITY).collect();
    if finite.is_empty() {
        return Complex64::new(f64::NEG_INFINITY, 0.0);
    }
    let m = finite
        .iter()
        .map(|l| l.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let s: Complex64 = finite.iter().map(|l| (**l - m).exp()).sum();
    s.ln() + m
}

/// Σ_{n} (a)_n (b)_n / n! w^n with the requested truncation.
fn divergent_sum(
    a: Complex64,
    b: Complex64,
    w: Complex64,
    trunc: Truncation,
) -> (Complex64, f64, f64, usize) {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut n = 0usize;

    let add = |sum: &mut Complex64, comp: &mut Complex64, t: Complex64| {
        // Neumaier compensation, componentwise.
        let s = *sum + t;
        let c_re = if sum.re.abs() >= t.re.abs() {
            (sum.re - s.re) + t.re
        } else {
            (t.re - s.re) + sum.re
        };
        let c_im = if sum.im.abs() >= t.im.abs() {
            (sum.im - s.im) + t.im
        } else {
            (t.im - s.im) + sum.im
        };
        *sum = s;
        *comp += Complex64::new(c_re, c_im);
    };

    match trunc {
        Truncation::Fixed(m) => {
            for k in 0..=m {
                add(&mut sum, &mut comp, term);
                abs_sum += term.norm();
                term *= (a + k as f64) * (b + k as f64) / (k as f64 + 1.0) * w;
                n = k + 1;
            }
            (sum + comp, abs_sum, term.norm(), n)
        }
        Truncation::Auto => loop {
            add(&mut sum, &mut comp, term);
            abs_sum += term.norm();
            let next = term * ((a + n as f64) * (b + n as f64) / (n as f64 + 1.0) * w);
            n += 1;
            let t_now = term.norm();
            let t_next = next.norm();
            term = next;
            if t_next == 0.0 {
                return (sum + comp, abs_sum, 0.0, n);
            }
            let total = (sum + comp).norm();
            if t_next >= t_now
                || t_next <= 0.25 * f64::EPSILON * f64::EPSILON * total
                || n >= MAX_ASYMPTOTIC_TERMS
            {
                return (sum + comp, abs_sum, t_next, n);
            }
        },
    }
}

fn check_domain(z: Complex64) -> Result<()> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("asymptotic expansion needs z != 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!(
            "arg z = ±π is on the branch cut (z = {z})"
        )));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    Ok(())
}

/// Part of the Stokes jump of a subdominant part that the choice ε = ±1
/// ignores. Across its Stokes line the part switches on smoothly as
/// ½ erfc(-σ), σ = Im w / √(2 Re w) for the singulant w, while the jump
/// multiplies w^s by e^{2πi s}. The remainder ½ erfc(|σ|) |1 - e^{2πi s}| is
/// added to the error of the part.
fn stokes_residual(s: Complex64, w: Complex64) -> f64 {
    if !(w.re > 0.0) {
        return 0.0;
    }
    let sigma = w.im.abs() / (2.0 * w.re).sqrt();
    let jump = (Complex64::new(1.0, 0.0) - (Complex64::new(0.0, 2.0 * PI) * s).exp()).norm();
    0.5 * libm::erfc(sigma) * jump
}

/// Both parts of the expansion with their prefactors kept in logarithmic form.
pub fn asymptotic_terms(
    p: &Params,
    z: Complex64,
    m: Truncation,
    n: Truncation,
) -> Result<AsymptoticTerms> {
    check_domain(z)?;
    let alpha = p.alpha();
    let gamma = p.gamma();
    let eps = if z.im > 0.0 { 1.0 } else { -1.0 };
    let ln_z = z.ln();
    let ln_gamma_g = ln_gamma(gamma);

    let algebraic = ln_rgamma(gamma - alpha).map(|lr| {
        let ln_pref = ln_gamma_g + lr + alpha * (Complex64::new(0.0, PI * eps) - ln_z);
        let (sum, abs_sum, omitted, terms) = divergent_sum(alpha, alpha - gamma + 1.0, -z.inv(), m);
        let omitted = omitted + stokes_residual(alpha, z) * sum.norm();
        AsymptoticPiece {
            ln_prefactor: ln_pref,
            sum,
            abs_sum,
            omitted,
            terms,
        }
    });
    let exponential = ln_rgamma(alpha).map(|lr| {
        let ln_pref = ln_gamma_g + lr + z + (alpha - gamma) * ln_z;
        let (sum, abs_sum, omitted, terms) = divergent_sum(gamma - alpha, 1.0 - alpha, z.inv(), n);
        let omitted = omitted + stokes_residual(alpha - gamma, -z) * sum.norm();
        AsymptoticPiece {
            ln_prefactor: ln_pref,
            sum,
            abs_sum,
            omitted,
            terms,
        }
    });
    Ok(AsymptoticTerms {
        algebraic,
        exponential,
    })
}

/// Evaluates the large-|z| expansion; `m` and `n` truncate the algebraic and
/// exponential sums respectively.
pub fn eval_asymptotic(
    p: &Params,
    z: Complex64,
    m: Truncation,
    n: Truncation,
) -> Result<EvalResult> {
    let t = asymptotic_terms(p, z, m, n)?;
    let value = t.value();
    let abs_error_est = t.error();
    if !(value.re.is_finite() && value.im.is_finite() && abs_error_est.is_finite()) {
        return Err(Error::Overflow(format!("asymptotic value at z = {z}")));
    }
    Ok(EvalResult {
        value,
        abs_error_est,
        regime: Regime::Asymptotic,
        terms_used: t.terms(),
    })
}
