use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_SAMPLES: usize = 4096;
pub const DEFAULT_ZERO_GUARD: f64 = 1e-8;
/// Relative radius increase per perturbation when a sample is too close to a zero.
pub const PERTURBATION: f64 = 1e-6;
pub const MAX_PERTURBATIONS: usize = 8;

/// A circle |z| = r sampled at equispaced angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleSpec {
    r: f64,
    samples: usize,
    zero_guard: f64,
}

impl CircleSpec {
    pub fn new(r: f64) -> Result<Self> {
        Self::with_options(r, DEFAULT_SAMPLES, DEFAULT_ZERO_GUARD)
    }

    /// `samples` must be a power of two, at least 64.
    pub fn with_options(r: f64, samples: usize, zero_guard: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("radius must be positive, got {r}")));
        }
        if samples < 64 || !samples.is_power_of_two() {
            return Err(Error::Domain(format!(
                "samples must be a power of two >= 64, got {samples}"
            )));
        }
        if !(zero_guard > 0.0 && zero_guard.is_finite()) {
            return Err(Error::Domain(format!(
                "zero guard must be positive, got {zero_guard}"
            )));
        }
        Ok(Self {
            r,
            samples,
            zero_guard,
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn zero_guard(&self) -> f64 {
        self.zero_guard
    }

    pub fn with_radius(&self, r: f64) -> Result<Self> {
        Self::with_options(r, self.samples, self.zero_guard)
    }

    /// Radii tried in turn: r, r(1+δ), r(1+δ)², ...
    pub(crate) fn radii(&self) -> impl Iterator<Item = f64> {
        let r = self.r;
        (0..=MAX_PERTURBATIONS).map(move |k| r * (1.0 + PERTURBATION).powi(k as i32))
    }
}

/// One sample of ln|f| and of the quantity whose smallness triggers a retry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub ln_abs: f64,
    pub guard_ln_abs: f64,
}

impl Sample {
    pub fn plain(ln_abs: f64) -> Self {
        Self {
            ln_abs,
            guard_ln_abs: ln_abs,
        }
    }
}

/// Values of ln|f| on the circle actually used.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSamples {
    pub radius: f64,
    pub ln_abs: Vec<f64>,
}

impl CircleSamples {
    /// Trapezoidal mean of log⁺|f|.
    pub fn mean_log_plus(&self) -> f64 {
        self.ln_abs.iter().map(|l| l.max(0.0)).sum::<f64>() / self.ln_abs.len() as f64
    }

    /// Trapezoidal mean of ln|f|.
    pub fn mean_log(&self) -> f64 {
        self.ln_abs.iter().sum::<f64>() / self.ln_abs.len() as f64
    }

    pub fn max_log(&self) -> f64 {
        self.ln_abs
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn try_radius<S>(r: f64, n: usize, ln_guard: f64, sampler: &S) -> Result<Option<Vec<f64>>>
where
    S: Fn(Complex64) -> Result<Sample>,
{
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let theta = 2.0 * PI * j as f64 / n as f64;
        let s = sampler(Complex64::from_polar(r, theta))?;
        if !(s.guard_ln_abs >= ln_guard) {
            return Ok(None);
        }
        out.push(s.ln_abs);
    }
    Ok(Some(out))
}

/// Samples the circle, moving outward when the guard quantity gets too small.
pub fn sample_circle<S>(c: &CircleSpec, sampler: S) -> Result<CircleSamples>
where
    S: Fn(Complex64) -> Result<Sample>,
{
    let ln_guard = c.zero_guard.ln();
    for r in c.radii() {
        if let Some(ln_abs) = try_radius(r, c.samples, ln_guard, &sampler)? {
            return Ok(CircleSamples { radius: r, ln_abs });
        }
    }
    Err(Error::ZeroOnCircle {
        radius: c.r,
        attempts: MAX_PERTURBATIONS + 1,
    })
}

/// m(r, f) = (1/2π) ∫ log⁺|f(re^{iθ})| dθ for a sampler returning ln|f|.
pub fn proximity_m<F>(f: F, c: &CircleSpec) -> Result<f64>
where
    F: Fn(Complex64) -> Result<f64>,
{
    Ok(sample_circle(c, |z| f(z).map(Sample::plain))?.mean_log_plus())
}
