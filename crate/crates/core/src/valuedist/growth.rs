use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::circle::{sample_circle, CircleSamples, CircleSpec, Sample};
use super::zeros::zero_count_argument_principle;
use crate::error::{Error, Result};
use crate::eval::{ln_eval, Params, SeriesBudget};

/// Nevanlinna and Wiman–Valiron quantities on one circle.
///
/// `counting` is N(r, F), which vanishes for the entire F, so the
/// characteristic equals the proximity function. `zeros` is n(r), the number
/// of zeros of F in |z| < r.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharacteristicRow {
    pub r: f64,
    pub m: f64,
    #[serde(rename = "N")]
    pub counting: f64,
    #[serde(rename = "T")]
    pub characteristic: f64,
    #[serde(rename = "logM")]
    pub log_max_modulus: f64,
    pub nu: u64,
    #[serde(rename = "n")]
    pub zeros: u64,
}

/// ln of the maximum term μ(r) and the central index ν(r).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaxTerm {
    pub ln_mu: f64,
    pub nu: u64,
}

const DECAY_RUN: usize = 20;

/// Scans ln|a_n r^n| with a_n = (α)_n / (n! (γ)_n) until the terms have
/// decreased for 20 consecutive indices past the running maximum.
pub fn max_term_central_index(p: &Params, r: f64) -> Result<MaxTerm> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    let (a, g) = (p.alpha(), p.gamma());
    let ln_r = r.ln();
    let cap = 20_000 + (10.0 * r) as usize;
    let mut ln_t = 0.0;
    let mut best = MaxTerm { ln_mu: 0.0, nu: 0 };
    let mut decays = 0;
    for n in 0..cap {
        if p.degree() == Some(n as u32) {
            return Ok(best);
        }
        let nf = n as f64;
        let next = ln_t + (a + nf).norm().ln() - (g + nf).norm().ln() - (nf + 1.0).ln() + ln_r;
        if next >= best.ln_mu {
            best = MaxTerm {
                ln_mu: next,
                nu: n as u64 + 1,
            };
            decays = 0;
        } else if next < ln_t {
            decays += 1;
            if decays >= DECAY_RUN {
                return Ok(best);
            }
        } else {
            decays = 0;
        }
        ln_t = next;
    }
    Err(Error::NonConvergence {
        terms: cap,
        last_term: ln_t.exp(),
    })
}

/// Samples ln F together with a zero-proximity measure.
///
/// An absolute bound on |F| would flag e^z on the left half of every large
/// circle, so the guard is the Newton distance |F/F'| relative to the radius,
/// which is small only near an actual zero.
pub(crate) struct GuardedSampler<'a> {
    p: &'a Params,
    shifted: Params,
    ln_ratio: Option<f64>,
    b: &'a SeriesBudget,
}

impl<'a> GuardedSampler<'a> {
    pub(crate) fn new(p: &'a Params, b: &'a SeriesBudget) -> Result<Self> {
        let ratio = p.alpha() / p.gamma();
        Ok(Self {
            p,
            shifted: p.shifted(1, 1)?,
            ln_ratio: (ratio.norm() > 0.0).then(|| ratio.norm().ln()),
            b,
        })
    }

    /// ln F(z) and ln|F'(z)| (−∞ when F' vanishes identically).
    pub(crate) fn ln_f_and_derivative(&self, z: Complex64) -> Result<(Complex64, f64)> {
        let lf = ln_eval(self.p, z, self.b)?.ln_value;
        let ld = match self.ln_ratio {
            Some(lr) => lr + ln_eval(&self.shifted, z, self.b)?.ln_value.re,
            None => f64::NEG_INFINITY,
        };
        Ok((lf, ld))
    }

    /// ln F(z) and ln(|F/F'| / |z|).
    pub(crate) fn sample(&self, z: Complex64) -> Result<(Complex64, f64)> {
        let (lf, ld) = self.ln_f_and_derivative(z)?;
        Ok((lf, lf.re - ld - z.norm().ln()))
    }
}

fn ln_f_sampler<'a>(
    p: &'a Params,
    b: &'a SeriesBudget,
) -> Result<impl Fn(Complex64) -> Result<Sample> + 'a> {
    let g = GuardedSampler::new(p, b)?;
    Ok(move |z| {
        g.sample(z).map(|(lf, guard)| Sample {
            ln_abs: lf.re,
            guard_ln_abs: guard,
        })
    })
}

/// ln|F| on the circle, perturbing the radius away from zeros of F.
pub fn circle_log_abs(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<CircleSamples> {
    sample_circle(c, ln_f_sampler(p, b)?)
}

/// log M(r) as the largest sampled ln|F|; zeros on the circle do not matter.
pub fn log_max_modulus(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<f64> {
    let s = sample_circle(c, move |z| {
        ln_eval(p, z, b).map(|l| Sample {
            ln_abs: l.ln_value.re,
            guard_ln_abs: f64::INFINITY,
        })
    })?;
    Ok(s.max_log())
}

/// One row of the characteristic table at radius `c.r()`.
pub fn characteristic_t(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<CharacteristicRow> {
    let s = circle_log_abs(p, c, b)?;
    let m = s.mean_log_plus();
    let counting = 0.0;
    let nu = max_term_central_index(p, s.radius)?.nu;
    let zeros = zero_count_argument_principle(p, &c.with_radius(s.radius)?, b)?;
    Ok(CharacteristicRow {
        r: s.radius,
        m,
        counting,
        characteristic: m + counting,
        log_max_modulus: s.max_log(),
        nu,
        zeros,
    })
}

/// Rows for every radius, computed in parallel and returned in input order.
pub fn characteristic_table(
    p: &Params,
    radii: &[f64],
    samples: usize,
    zero_guard: f64,
    b: &SeriesBudget,
) -> Result<Vec<CharacteristicRow>> {
    radii
        .par_iter()
        .map(|&r| characteristic_t(p, &CircleSpec::with_options(r, samples, zero_guard)?, b))
        .collect()
}

/// `points` radii from `rmin` to `rmax` in geometric progression.
pub fn geometric_grid(rmin: f64, rmax: f64, points: usize) -> Result<Vec<f64>> {
    if !(rmin > 0.0 && rmax > rmin && rmax.is_finite()) {
        return Err(Error::Domain(format!(
            "need 0 < rmin < rmax, got {rmin}, {rmax}"
        )));
    }
    if points < 2 {
        return Err(Error::Domain(format!(
            "need at least two grid points, got {points}"
        )));
    }
    let ratio = (rmax / rmin).ln() / (points - 1) as f64;
    Ok((0..points)
        .map(|k| {
            if k + 1 == points {
                rmax
            } else {
                rmin * (ratio * k as f64).exp()
            }
        })
        .collect())
}

fn check_order_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 8 {
        return Err(Error::Domain(format!(
            "order grid needs at least 8 radii, got {}",
            grid.len()
        )));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) || !(grid[0] > 0.0) {
        return Err(Error::Domain(
            "order grid must be positive and increasing".into(),
        ));
    }
    if grid[grid.len() - 1] / grid[0] < 100.0 * (1.0 - 1e-12) {
        return Err(Error::Domain(
            "order grid must span at least two decades".into(),
        ));
    }
    Ok(())
}

/// Least-squares slope of y against x.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

fn upper_half_slope(grid: &[f64], y: &[f64]) -> f64 {
    let start = grid.len() / 2;
    let x: Vec<f64> = grid[start..].iter().map(|r| r.ln()).collect();
    ls_slope(&x, &y[start..])
}

/// Slope of ln log M(r) against ln r over the upper half of the grid.
pub fn order_estimate(p: &Params, r_grid: &[f64], b: &SeriesBudget) -> Result<f64> {
    check_order_grid(r_grid)?;
    let log_m: Vec<f64> = r_grid
        .par_iter()
        .map(|&r| log_max_modulus(p, &CircleSpec::new(r)?, b))
        .collect::<Result<_>>()?;
    if let Some((r, l)) = r_grid.iter().zip(&log_m).find(|(_, l)| !(**l > 0.0)) {
        return Err(Error::Domain(format!(
            "log M({r}) = {l} is not positive; use larger radii"
        )));
    }
    let y: Vec<f64> = log_m.iter().map(|l| l.ln()).collect();
    Ok(upper_half_slope(r_grid, &y))
}

/// Slope of log⁺ν(r) against ln r over the upper half of the grid.
pub fn central_index_slope(p: &Params, r_grid: &[f64]) -> Result<f64> {
    check_order_grid(r_grid)?;
    let y: Vec<f64> = r_grid
        .iter()
        .map(|&r| max_term_central_index(p, r).map(|t| (t.nu as f64).ln().max(0.0)))
        .collect::<Result<_>>()?;
    Ok(upper_half_slope(r_grid, &y))
}

/// m(r, F'/F) with F' = (α/γ) F(α+1; γ+1; z).
pub fn log_derivative_proximity(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<f64> {
    let g = GuardedSampler::new(p, b)?;
    let s = sample_circle(c, |z| {
        let (lf, ld) = g.ln_f_and_derivative(z)?;
        Ok(Sample {
            ln_abs: ld - lf.re,
            guard_ln_abs: lf.re - ld - z.norm().ln(),
        })
    })?;
    Ok(s.mean_log_plus())
}

/// N(r, 1/F) = ∫_0^r n(t)/t dt by the trapezoid rule in ln t on `points` radii.
///
/// The grid starts at a radius inside which F has no zeros (n = 0 there).
pub fn zero_counting_function(p: &Params, r: f64, points: usize, b: &SeriesBudget) -> Result<f64> {
    if points < 2 {
        return Err(Error::Domain(format!(
            "need at least two radii, got {points}"
        )));
    }
    let count = |t: f64| -> Result<f64> {
        Ok(zero_count_argument_principle(p, &CircleSpec::new(t)?, b)? as f64)
    };
    let mut t_min = r * 1e-3;
    let mut halvings = 0;
    while count(t_min)? > 0.0 {
        t_min *= 0.5;
        halvings += 1;
        if halvings > 60 {
            return Err(Error::Domain("zeros accumulate at the origin".into()));
        }
    }
    let grid = geometric_grid(t_min, r, points)?;
    let n: Vec<f64> = grid.par_iter().map(|&t| count(t)).collect::<Result<_>>()?;
    let h = (r / t_min).ln() / (points - 1) as f64;
    Ok(h * (n.iter().sum::<f64>() - 0.5 * (n[0] + n[points - 1])))
}

/// N(r, 1/F) by Jensen's formula: the circle mean of ln|F|, since F(0) = 1.
pub fn jensen_counting(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<f64> {
    Ok(circle_log_abs(p, c, b)?.mean_log())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn b() -> SeriesBudget {
        SeriesBudget::default()
    }

    #[test]
    fn central_index_examples() {
        let p = Params::real(1.0, 1.0).unwrap();
        assert_eq!(
            max_term_central_index(&p, 1.0).unwrap(),
            MaxTerm { ln_mu: 0.0, nu: 1 }
        );
        let d = Params::real(-3.0, 1.0).unwrap();
        assert_eq!(max_term_central_index(&d, 1e5).unwrap().nu, 3);
        let q = Params::real(1.0, 2.0).unwrap();
        let t = max_term_central_index(&q, 100.0).unwrap();
        assert!(t.nu > 0 && t.nu as f64 / 100.0 <= 2.0);
    }

    #[test]
    fn exp_characteristic() {
        let p = Params::real(1.0, 1.0).unwrap();
        for r in [5.0, 50.0] {
            let row = characteristic_t(&p, &CircleSpec::new(r).unwrap(), &b()).unwrap();
            assert!((row.characteristic - r / PI).abs() <= 1e-6 * r);
            assert_eq!(row.zeros, 0);
            assert_eq!(row.counting, 0.0);
            assert!((row.log_max_modulus - r).abs() < 1e-12 * r);
        }
    }

    #[test]
    fn polynomial_proximity() {
        let p = Params::real(-2.0, 1.0).unwrap();
        let r = 1e3;
        let row = characteristic_t(&p, &CircleSpec::new(r).unwrap(), &b()).unwrap();
        let l = 2.0 * r.ln();
        assert!(row.m >= l - 5.0 && row.m <= l + 5.0);
        assert_eq!(row.zeros, 2);
    }

    #[test]
    fn grid_checks() {
        let g = geometric_grid(10.0, 1000.0, 3).unwrap();
        assert!((g[1] - 100.0).abs() < 1e-12);
        assert_eq!(g[2], 1000.0);
        let p = Params::real(1.0, 2.0).unwrap();
        assert!(order_estimate(&p, &geometric_grid(10.0, 100.0, 8).unwrap()[..7], &b()).is_err());
        assert!(order_estimate(&p, &geometric_grid(10.0, 500.0, 8).unwrap(), &b()).is_err());
    }

    #[test]
    fn exp_log_derivative_vanishes() {
        let p = Params::real(2.0, 2.0).unwrap();
        let m = log_derivative_proximity(&p, &CircleSpec::new(30.0).unwrap(), &b()).unwrap();
        assert!(m.abs() < 1e-12);
    }

    #[test]
    fn counting_function_matches_jensen() {
        // Zeros of (e^z - 1)/z at ±2πi: N(10) = 2 ln(10 / 2π).
        let p = Params::real(1.0, 2.0).unwrap();
        let exact = 2.0 * (10.0 / (2.0 * PI)).ln();
        let j = jensen_counting(&p, &CircleSpec::new(10.0).unwrap(), &b()).unwrap();
        assert!((j - exact).abs() < 1e-9, "{j} vs {exact}");
        let n = zero_counting_function(&p, 10.0, 400, &b()).unwrap();
        assert!((n - exact).abs() < 0.05, "{n} vs {exact}");
    }
}
