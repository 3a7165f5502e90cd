//! Power series and terminating polynomial evaluation of 1F1.

use num_complex::Complex64;

use super::{EvalResult, Params, Regime, SeriesBudget};
use crate::dd::{ComplexDD, DD_EPS};
use crate::error::{Error, Result};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1, by direct product.
pub fn pochhammer(a: Complex64, n: usize) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

pub(crate) struct SeriesSum {
    pub value: ComplexDD,
    pub abs_sum: f64,
    pub terms: usize,
    /// Magnitude of the first term left out (zero for a terminated sum).
    pub omitted: f64,
}

impl SeriesSum {
    /// Rounding bound: term recurrences in double-double plus the final
    /// rounding to double precision.
    pub fn abs_error_est(&self) -> f64 {
        let dd_part = 8.0 * (self.terms as f64 + 1.0) * DD_EPS * self.abs_sum;
        self.omitted + dd_part + f64::EPSILON * self.value.norm()
    }
}

/// Ratio t_{k+1}/t_k = (α+k) z / ((γ+k)(k+1)).
fn next_term(
    t: ComplexDD,
    alpha: ComplexDD,
    gamma: ComplexDD,
    z: ComplexDD,
    k: usize,
) -> ComplexDD {
    let kd = ComplexDD::from(k as f64);
    let num = (alpha + kd) * z;
    let den = (gamma + kd) * ComplexDD::from((k + 1) as f64);
    t * num / den
}

/// Sums the defining series. `limit` forces exactly `limit` terms (polynomial case).
pub(crate) fn sum_series(
    alpha: Complex64,
    gamma: Complex64,
    z: Complex64,
    budget: &SeriesBudget,
    limit: Option<usize>,
) -> Result<SeriesSum> {
    let a = ComplexDD::from(alpha);
    let g = ComplexDD::from(gamma);
    let zd = ComplexDD::from(z);

    let mut sum = ComplexDD::ONE;
    let mut term = ComplexDD::ONE;
    let mut abs_sum = 1.0;
    let mut small_run = 0;

    if let Some(n_terms) = limit {
        for k in 0..n_terms.saturating_sub(1) {
            term = next_term(term, a, g, zd, k);
            sum = sum + term;
            abs_sum += term.norm();
        }
        let value = sum;
        if !value.to_c64().is_finite() {
            return Err(Error::Overflow(format!("polynomial at z = {z}")));
        }
        return Ok(SeriesSum {
            value,
            abs_sum,
            terms: n_terms,
            omitted: 0.0,
        });
    }

    let mut k = 0;
    loop {
        if k + 1 >= budget.max_terms {
            return Err(Error::NonConvergence {
                terms: budget.max_terms,
                last_term: term.norm(),
            });
        }
        term = next_term(term, a, g, zd, k);
        k += 1;
        sum = sum + term;
        let t = term.norm();
        abs_sum += t;
        if !(t.is_finite() && abs_sum.is_finite()) {
            return Err(Error::Overflow(format!("series terms at z = {z}")));
        }
        if t <= budget.tol * sum.norm() {
            small_run += 1;
            if small_run == 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let omitted = next_term(term, a, g, zd, k).norm();
    Ok(SeriesSum {
        value: sum,
        abs_sum,
        terms: k + 1,
        omitted,
    })
}

/// Direct summation of Σ (α)_n / (n! (γ)_n) z^n.
///
/// Terms follow the ratio recurrence in double-double arithmetic, so the
/// cancellation between large terms of alternating phase (Re z < 0, or z near
/// the imaginary axis) costs about 32 digits instead of 16.
pub fn eval_series(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<EvalResult> {
    let s = sum_series(p.alpha(), p.gamma(), z, b, None)?;
    Ok(EvalResult {
        value: s.value.to_c64(),
        abs_error_est: s.abs_error_est(),
        regime: Regime::Series,
        terms_used: s.terms,
    })
}

/// Exact finite sum for α = -n.
pub fn eval_polynomial(p: &Params, z: Complex64) -> Result<EvalResult> {
    let n = p
        .degree()
        .ok_or_else(|| Error::NotDegenerate(p.alpha().to_string()))? as usize;
    let alpha = Complex64::new(-(n as f64), 0.0);
    let s = sum_series(alpha, p.gamma(), z, &SeriesBudget::default(), Some(n + 1))?;
    Ok(EvalResult {
        value: s.value.to_c64(),
        abs_error_est: s.abs_error_est(),
        regime: Regime::Polynomial,
        terms_used: n + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pochhammer_examples() {
        for a in [c(0.3, 0.0), c(-4.0, 1.0), c(7.0, -2.0)] {
            assert_eq!(pochhammer(a, 0), c(1.0, 0.0));
        }
        assert_eq!(pochhammer(c(1.0, 0.0), 4), c(24.0, 0.0));
        assert_eq!(pochhammer(c(-2.0, 0.0), 3), c(0.0, 0.0));
    }

    #[test]
    fn series_at_origin_is_one() {
        let p = Params::new(c(2.5, 1.0), c(-0.5, 0.3)).unwrap();
        let r = eval_series(&p, c(0.0, 0.0), &SeriesBudget::default()).unwrap();
        assert_eq!(r.value, c(1.0, 0.0));
        assert_eq!(r.regime, Regime::Series);
    }

    #[test]
    fn alpha_equal_gamma_is_exp() {
        let p = Params::new(c(1.7, -0.4), c(1.7, -0.4)).unwrap();
        for z in [c(1.0, 0.0), c(-3.0, 2.0), c(0.0, 12.0), c(25.0, -5.0)] {
            let r = eval_series(&p, z, &SeriesBudget::default()).unwrap();
            let e = z.exp();
            assert!(
                (r.value - e).norm() <= 1e-15 * e.norm() + r.abs_error_est,
                "{z}: {} vs {e}",
                r.value
            );
        }
    }

    #[test]
    fn one_two_at_one() {
        let p = Params::real(1.0, 2.0).unwrap();
        let r = eval_series(&p, c(1.0, 0.0), &SeriesBudget::default()).unwrap();
        assert!((r.value.re - (E - 1.0)).abs() < 1e-15);
        assert!(r.abs_error_est >= 0.0 && r.abs_error_est < 1e-14);
    }

    #[test]
    fn stops_on_budget() {
        let p = Params::real(1.0, 2.0).unwrap();
        let b = SeriesBudget::new(1e-15, 5).unwrap();
        assert!(matches!(
            eval_series(&p, c(30.0, 0.0), &b),
            Err(Error::NonConvergence { terms: 5, .. })
        ));
    }

    #[test]
    fn polynomial_examples() {
        let p = Params::real(0.0, 1.0).unwrap();
        let r = eval_polynomial(&p, c(5.0, 2.0)).unwrap();
        assert_eq!(r.value, c(1.0, 0.0));
        assert_eq!(r.terms_used, 1);

        let g = c(2.5, -1.0);
        let z = c(0.7, 3.0);
        let p = Params::new(c(-1.0, 0.0), g).unwrap();
        let r = eval_polynomial(&p, z).unwrap();
        assert!((r.value - (1.0 - z / g)).norm() < 1e-15);
        assert_eq!(r.regime, Regime::Polynomial);
        assert_eq!(r.terms_used, 2);

        let p = Params::real(-2.0, 1.0).unwrap();
        let r = eval_polynomial(&p, c(1.0, 0.0)).unwrap();
        assert_eq!(r.value, c(-0.5, 0.0));
        assert_eq!(r.terms_used, 3);
    }

    #[test]
    fn polynomial_requires_degenerate_alpha() {
        let p = Params::real(0.5, 1.0).unwrap();
        assert!(matches!(
            eval_polynomial(&p, c(1.0, 0.0)),
            Err(Error::NotDegenerate(_))
        ));
    }

    #[test]
    fn negative_axis_cancellation_is_controlled() {
        // 1F1(1; 2; z) = (e^z - 1)/z at z = -30: terms reach ~1e11, result ~ 1/30.
        let p = Params::real(1.0, 2.0).unwrap();
        let z = c(-30.0, 0.0);
        let r = eval_series(&p, z, &SeriesBudget::default()).unwrap();
        let exact = ((-30.0f64).exp() - 1.0) / -30.0;
        assert!((r.value.re - exact).abs() <= 2e-16 * exact.abs() + r.abs_error_est);
        assert!((r.value.re - exact).abs() < 1e-15);
    }
}
