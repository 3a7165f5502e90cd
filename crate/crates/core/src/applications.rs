//! Classical functions written through 1F1: the error function, the lower
//! incomplete gamma function, the normal distribution and Whittaker's M.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::eval::{
    asymptotic_terms, eval, eval_asymptotic, eval_series, ln_eval, Params, SeriesBudget,
    Truncation, R_SWITCH,
};
use crate::gamma::nonpositive_integer;

/// Above this argument erfc is taken from the algebraic part of the
/// large-argument expansion; it is where erfc(x) drops below 1e-11.
pub const ERFC_SWITCH: f64 = 4.812924067365823;

/// Exponents beyond which e^{±x} leaves the double range.
const LOG_SPACE_THRESHOLD: f64 = 700.0;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// erf x = (2x/√π) e^{-x²} 1F1(1; 3/2; x²), evaluated in log space.
pub fn erf_via_kummer(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_nan() {
        return Err(Error::Domain("erf of NaN".into()));
    }
    if x.is_infinite() {
        return Ok(x.signum());
    }
    let p = Params::real(1.0, 1.5)?;
    let b = SeriesBudget::default();
    let pref = 2.0 * x / PI.sqrt();
    if x * x < LOG_SPACE_THRESHOLD {
        // Direct product: each factor carries only a few ulps.
        let f = eval(&p, c(x * x), &b)?.value.re;
        return Ok((pref * (-x * x).exp() * f).clamp(-1.0, 1.0));
    }
    let lf = ln_eval(&p, c(x * x), &b)?.ln_value.re;
    let v = pref.abs().ln() - x * x + lf;
    Ok(x.signum() * v.exp().min(1.0))
}

/// Complementary error function, using 1 - erf below [`ERFC_SWITCH`] and
/// the algebraic part of the expansion of 1F1(1; 3/2; x²) above it.
pub fn erfc(x: f64) -> Result<f64> {
    if x < ERFC_SWITCH {
        return Ok(1.0 - erf_via_kummer(x)?);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    // erf x = 1 + (2x/√π) e^{-x²} A(x²) where A is the algebraic part, so
    // erfc x = -(2x/√π) e^{-x²} A(x²).
    let p = Params::real(1.0, 1.5)?;
    let t = asymptotic_terms(&p, c(x * x), Truncation::Auto, Truncation::Auto)?;
    let alg = t
        .algebraic
        .ok_or_else(|| Error::Domain("missing algebraic part".into()))?;
    let ln_v = (2.0 * x / PI.sqrt()).ln() - x * x + alg.ln_prefactor.re;
    Ok(-(ln_v.exp()
        * (alg.ln_prefactor.im.cos() * alg.sum.re - alg.ln_prefactor.im.sin() * alg.sum.im)))
}

/// γ(n, x) = ∫_0^x e^{-t} t^{n-1} dt = (1/n) e^{-x} x^n 1F1(1; n+1; x).
pub fn incomplete_gamma(n: f64, x: f64) -> Result<f64> {
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::Domain(format!(
            "incomplete gamma needs n > 0, got {n}"
        )));
    }
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "incomplete gamma needs finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let p = Params::real(1.0, n + 1.0)?;
    let b = SeriesBudget::default();
    if x < LOG_SPACE_THRESHOLD {
        let direct = (-x).exp() * x.powf(n) / n * eval(&p, c(x), &b)?.value.re;
        if direct.is_finite() && direct > 0.0 {
            return Ok(direct);
        }
    }
    let lf = ln_eval(&p, c(x), &b)?.ln_value.re;
    Ok((-n.ln() - x + n * x.ln() + lf).exp())
}

/// Normal distribution function Φ((x-m)/σ) = erfc(-(x-m)/(σ√2)) / 2.
pub fn normal_cdf(m: f64, sigma: f64, x: f64) -> Result<f64> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::Domain(format!(
            "sigma must be positive, got {sigma}"
        )));
    }
    let t = (x - m) / (sigma * std::f64::consts::SQRT_2);
    Ok(0.5 * erfc(-t)?)
}

/// Parameters and argument of the Whittaker function M_{k,m}(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerSpec {
    k: Complex64,
    m: Complex64,
    z: Complex64,
}

impl WhittakerSpec {
    /// Rejects 1+2m on the gamma poles and z on (-∞, 0].
    pub fn new(k: Complex64, m: Complex64, z: Complex64) -> Result<Self> {
        if nonpositive_integer(1.0 + 2.0 * m).is_some() {
            return Err(Error::Domain(format!(
                "1+2m may not be a nonpositive integer, got m = {m}"
            )));
        }
        if z.im == 0.0 && z.re <= 0.0 {
            return Err(Error::Domain(format!(
                "z = {z} lies on the branch cut (-inf, 0]"
            )));
        }
        Ok(Self { k, m, z })
    }

    pub fn k(&self) -> Complex64 {
        self.k
    }

    pub fn m(&self) -> Complex64 {
        self.m
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    fn params(&self) -> Result<Params> {
        Params::new(0.5 + self.m - self.k, 1.0 + 2.0 * self.m)
    }
}

/// M_{k,m}(z) = e^{-z/2} z^{1/2+m} 1F1(1/2+m-k; 1+2m; z) on the principal branch.
pub fn whittaker_m(s: &WhittakerSpec) -> Result<Complex64> {
    let p = s.params()?;
    let lf = ln_eval(&p, s.z, &SeriesBudget::default())?.ln_value;
    Ok((-0.5 * s.z + (0.5 + s.m) * s.z.ln() + lf).exp())
}

/// M_{k,m}(z) = e^{z/2} z^{1/2+m} 1F1(1/2+m+k; 1+2m; -z), with the reflected
/// function summed directly at -z rather than through the dispatcher.
pub fn whittaker_m_reflected(s: &WhittakerSpec) -> Result<Complex64> {
    let p = Params::new(0.5 + s.m + s.k, 1.0 + 2.0 * s.m)?;
    let w = -s.z;
    let f = if w.norm() <= R_SWITCH || w.im == 0.0 {
        eval_series(&p, w, &SeriesBudget::default())?.value
    } else {
        eval_asymptotic(&p, w, Truncation::Auto, Truncation::Auto)?.value
    };
    Ok((0.5 * s.z + (0.5 + s.m) * s.z.ln()).exp() * f)
}
