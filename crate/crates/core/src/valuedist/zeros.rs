use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::circle::{CircleSpec, MAX_PERTURBATIONS};
use super::growth::GuardedSampler;
use crate::error::{Error, Result};
use crate::eval::{eval, kummer_reflect, Params, SeriesBudget, R_SWITCH};
use crate::gamma::nonpositive_integer;

pub const MAX_WINDING_SAMPLES: usize = 1 << 20;

fn wrap_phase(d: f64) -> f64 {
    let mut d = d % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    } else if d <= -PI {
        d += 2.0 * PI;
    }
    d
}

enum Winding {
    Count(i64),
    NearZero,
}

fn winding_at(p: &Params, r: f64, ln_guard: f64, b: &SeriesBudget) -> Result<Winding> {
    let g = GuardedSampler::new(p, b)?;
    let sample = |theta: f64| -> Result<Option<f64>> {
        let (l, guard) = g.sample(Complex64::from_polar(r, theta))?;
        Ok(if guard < ln_guard { None } else { Some(l.im) })
    };
    // Initial spacing resolves a phase rate of about r per radian.
    let initial = 256usize.max((8.0 * r).ceil() as usize);
    if initial > MAX_WINDING_SAMPLES {
        return Err(Error::NonConvergence {
            terms: MAX_WINDING_SAMPLES,
            last_term: r,
        });
    }
    let mut used = initial;
    let mut total = 0.0;
    let step = 2.0 * PI / initial as f64;
    let Some(first) = sample(0.0)? else {
        return Ok(Winding::NearZero);
    };
    let mut prev = first;
    for k in 1..=initial {
        let (t0, t1) = ((k - 1) as f64 * step, k as f64 * step);
        let Some(end) = (if k == initial {
            Some(first)
        } else {
            sample(t1)?
        }) else {
            return Ok(Winding::NearZero);
        };
        // Refine the arc [t0, t1] until every phase step is below π/2.
        let mut stack = vec![(t0, prev, t1, end)];
        while let Some((a, pa, c, pc)) = stack.pop() {
            let d = wrap_phase(pc - pa);
            if d.abs() < FRAC_PI_2 {
                total += d;
                continue;
            }
            used += 1;
            if used > MAX_WINDING_SAMPLES {
                return Err(Error::NonConvergence {
                    terms: MAX_WINDING_SAMPLES,
                    last_term: r,
                });
            }
            let mid = 0.5 * (a + c);
            let Some(pm) = sample(mid)? else {
                return Ok(Winding::NearZero);
            };
            // Process the first half first.
            stack.push((mid, pm, c, pc));
            stack.push((a, pa, mid, pm));
        }
        prev = end;
    }
    Ok(Winding::Count((total / (2.0 * PI)).round() as i64))
}

/// Number of zeros of F in |z| < r from the winding number of F along the circle.
///
/// The radius is pushed outward (as in [`CircleSpec`]) when F comes within
/// the zero guard of vanishing on the circle.
pub fn zero_count_argument_principle(p: &Params, c: &CircleSpec, b: &SeriesBudget) -> Result<u64> {
    let ln_guard = c.zero_guard().ln();
    for r in c.radii() {
        if let Winding::Count(n) = winding_at(p, r, ln_guard, b)? {
            return Ok(n.max(0) as u64);
        }
    }
    Err(Error::ZeroOnCircle {
        radius: c.r(),
        attempts: MAX_PERTURBATIONS + 1,
    })
}

/// Numbers of positive (n⁺) and negative (n⁻) real zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RealZeroCount {
    pub n_plus: u32,
    pub n_minus: u32,
}

fn ceil_neg(x: f64) -> i64 {
    (-x).ceil() as i64
}

/// n⁺(α, γ) from the case table, with the terminating case α = -n, γ < 0
/// handled separately when every coefficient is positive.
fn positive_zero_count(alpha: f64, gamma: f64) -> Result<u32> {
    let a_int = nonpositive_integer(Complex64::new(alpha, 0.0));
    let alpha = match a_int {
        Some(n) => -(n as f64),
        None => alpha,
    };
    if let Some(n) = a_int {
        // For n < ⌈-γ⌉ the factors γ+j, j < n, are all negative, so every
        // coefficient (-n)_k / ((γ)_k k!) is positive.
        if gamma < 0.0 && (ceil_neg(gamma) as u64) > n {
            return Ok(0);
        }
    }
    let ca = ceil_neg(alpha);
    let cg = ceil_neg(gamma);
    let n = if alpha < 0.0 && gamma >= 0.0 {
        ca
    } else if alpha >= 0.0 && gamma >= 0.0 {
        0
    } else if alpha >= 0.0 && gamma > -1.0 {
        1
    } else if alpha >= 0.0 {
        (-gamma / 2.0).floor() as i64 - (-(gamma + 1.0) / 2.0).floor() as i64
    } else if ca >= cg {
        ca - cg
    } else if ca > 0 {
        let d = cg - ca;
        (d + 1).div_euclid(2) - d.div_euclid(2)
    } else {
        return Err(Error::AmbiguousCase { alpha, gamma });
    };
    Ok(n as u32)
}

/// Closed-form counts of real zeros for real α, γ; n⁻(α,γ) = n⁺(γ-α, γ).
pub fn real_zero_count(alpha: f64, gamma: f64) -> Result<RealZeroCount> {
    if !(alpha.is_finite() && gamma.is_finite()) {
        return Err(Error::Domain(format!(
            "non-finite parameters ({alpha}, {gamma})"
        )));
    }
    if nonpositive_integer(Complex64::new(gamma, 0.0)).is_some() {
        return Err(Error::InvalidGamma(gamma.to_string()));
    }
    Ok(RealZeroCount {
        n_plus: positive_zero_count(alpha, gamma)?,
        n_minus: positive_zero_count(gamma - alpha, gamma)?,
    })
}

/// Default scan limit: past it the exponential part of the large-x
/// expansion dominates and F has no further zeros.
pub fn default_x_max(alpha: f64, gamma: f64) -> f64 {
    R_SWITCH + 4.0 * alpha.abs() + 2.0 * gamma.abs()
}

fn real_value(p: &Params, x: f64, b: &SeriesBudget) -> Result<f64> {
    Ok(eval(p, Complex64::new(x, 0.0), b)?.value.re)
}

const MIN_STEP: f64 = 1e-4;
const MAX_STEP: f64 = 0.25;
const ROOT_TOL: f64 = 1e-10;

fn scan_positive(p: &Params, x_max: f64, b: &SeriesBudget) -> Result<Vec<f64>> {
    let mut roots = Vec::new();
    if p.degree() == Some(0) {
        return Ok(roots);
    }
    let damp = 2.0 * (1.0 + p.alpha().re.abs());
    let shifted = p.shifted(1, 1)?;
    let ratio = p.alpha().re / p.gamma().re;
    let mut x = 0.0;
    let mut fx = 1.0;
    while x < x_max {
        // Newton distance to the nearest zero bounds the step.
        let dfx = ratio * real_value(&shifted, x, b)?;
        let newton = if dfx == 0.0 {
            MAX_STEP
        } else {
            (fx / dfx).abs() / damp
        };
        let h = newton.clamp(MIN_STEP, MAX_STEP).min(x_max - x);
        let x1 = x + h;
        let f1 = real_value(p, x1, b)?;
        if f1 == 0.0 {
            roots.push(x1);
            x = x1 + MIN_STEP;
            fx = real_value(p, x, b)?;
            continue;
        }
        if fx.signum() != f1.signum() {
            let (mut lo, mut hi, mut flo) = (x, x1, fx);
            while hi - lo > ROOT_TOL {
                let mid = 0.5 * (lo + hi);
                let fm = real_value(p, mid, b)?;
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x = x1;
        fx = f1;
    }
    Ok(roots)
}

fn check_real(p: &Params) -> Result<(f64, f64)> {
    if !p.is_real() {
        return Err(Error::Domain(format!(
            "real zeros need real parameters, got {p}"
        )));
    }
    Ok((p.alpha().re, p.gamma().re))
}

/// Positive zeros on (0, x_max] by a sign-change scan with bisection to 1e-10.
///
/// Fails with `Inconclusive` when the number found differs from n⁺, which
/// signals a double zero or a zero pair missed by the scan.
pub fn find_real_zeros(p: &Params, x_max: Option<f64>, b: &SeriesBudget) -> Result<Vec<f64>> {
    let (a, g) = check_real(p)?;
    let x_max = x_max.unwrap_or_else(|| default_x_max(a, g));
    let roots = scan_positive(p, x_max, b)?;
    let expected = real_zero_count(a, g)?.n_plus as usize;
    if roots.len() != expected {
        return Err(Error::Inconclusive {
            expected,
            found: roots.len(),
            zeros: roots,
        });
    }
    Ok(roots)
}

/// Negative zeros, located as positive zeros of F(γ-α; γ; x) and negated.
pub fn find_negative_real_zeros(
    p: &Params,
    x_max: Option<f64>,
    b: &SeriesBudget,
) -> Result<Vec<f64>> {
    let k = kummer_reflect(p);
    let (a, g) = check_real(&k.params)?;
    let x_max = x_max.unwrap_or_else(|| default_x_max(a, g));
    let mut roots: Vec<f64> = find_real_zeros(&k.params, Some(x_max), b)?
        .iter()
        .map(|x| -x)
        .collect();
    roots.reverse();
    Ok(roots)
}

/// Real-zero counts, located zeros and argument-principle counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroReport {
    pub n_plus: u32,
    pub n_minus: u32,
    pub located_real_zeros: Vec<f64>,
    pub located_negative_zeros: Vec<f64>,
    pub argument_counts: Vec<(f64, u64)>,
}

pub fn zero_report(p: &Params, radii: &[f64], b: &SeriesBudget) -> Result<ZeroReport> {
    let (a, g) = check_real(p)?;
    let counts = real_zero_count(a, g)?;
    let argument_counts = radii
        .iter()
        .map(|&r| {
            Ok((
                r,
                zero_count_argument_principle(p, &CircleSpec::new(r)?, b)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(ZeroReport {
        n_plus: counts.n_plus,
        n_minus: counts.n_minus,
        located_real_zeros: find_real_zeros(p, None, b)?,
        located_negative_zeros: find_negative_real_zeros(p, None, b)?,
        argument_counts,
    })
}
