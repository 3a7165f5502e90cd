//! Gauss rules from three-term recurrences (Golub–Welsch).
//!
//! The symmetric tridiagonal eigenproblem is handed to `nalgebra`. For the
//! Laguerre weight the nodes are polished by Newton steps and the weights are
//! taken from the closed form, which keeps the tiny weights at large nodes
//! accurate to full relative precision.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::gamma::{beta, ln_gamma_real};

/// Nodes and weights of an n-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

fn tridiagonal_eigen(diag: &[f64], off: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
        if i + 1 < n {
            m[(i, i + 1)] = off[i];
            m[(i + 1, i)] = off[i];
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

/// Gauss rule on (0, 1) for the weight u^a (1-u)^b, a, b > -1.
pub fn gauss_jacobi_unit(a: f64, b: f64, n: usize) -> Result<GaussRule> {
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi exponents must exceed -1, got ({a}, {b})"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("quadrature needs at least one node".into()));
    }
    // Monic Jacobi recurrence on [-1, 1] for (1-x)^b (1+x)^a; u = (1+x)/2.
    let (pa, pb) = (b, a);
    let s = pa + pb;
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n {
        let kf = k as f64;
        let d = if k == 0 {
            (pb - pa) / (s + 2.0)
        } else {
            (pb * pb - pa * pa) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0))
        };
        diag.push(d);
        if k + 1 < n {
            let j = kf + 1.0;
            let beta_j = if k == 0 {
                4.0 * (1.0 + pa) * (1.0 + pb) / ((2.0 + s).powi(2) * (3.0 + s))
            } else {
                4.0 * j * (j + pa) * (j + pb) * (j + s)
                    / ((2.0 * j + s).powi(2) * (2.0 * j + s + 1.0) * (2.0 * j + s - 1.0))
            };
            off.push(beta_j.sqrt());
        }
    }
    let (x, v0) = tridiagonal_eigen(&diag, &off);
    let mass = beta(a + 1.0, b + 1.0);
    Ok(GaussRule {
        nodes: x.iter().map(|x| 0.5 * (1.0 + x)).collect(),
        weights: v0.iter().map(|v| mass * v).collect(),
    })
}

/// L_n^μ(x) and L_{n-1}^μ(x) by the three-term recurrence.
pub(crate) fn laguerre_pair(n: usize, mu: f64, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + mu - x) * cur - (kf + mu) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Gauss rule on (0, ∞) for the weight x^μ e^{-x}, μ > -1.
pub fn gauss_laguerre(mu: f64, n: usize) -> Result<GaussRule> {
    if !(mu > -1.0) {
        return Err(Error::Domain(format!(
            "Laguerre weight needs mu > -1, got {mu}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("quadrature needs at least one node".into()));
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + mu + 1.0).collect();
    let off: Vec<f64> = (1..n)
        .map(|k| (k as f64 * (k as f64 + mu)).sqrt())
        .collect();
    let (mut nodes, _) = tridiagonal_eigen(&diag, &off);

    let nf = n as f64;
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (l, lm1) = laguerre_pair(n, mu, *x);
            let dl = (nf * l - (nf + mu) * lm1) / *x;
            let step = l / dl;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs() {
                break;
            }
        }
    }
    // w_i = Γ(n+μ+1) x_i / (n! (n+1)^2 L_{n+1}(x_i)^2)
    let ln_scale = ln_gamma_real(nf + mu + 1.0) - ln_gamma_real(nf + 1.0);
    let weights = nodes
        .iter()
        .map(|&x| {
            let (l_next, _) = laguerre_pair(n + 1, mu, x);
            (ln_scale + x.ln() - 2.0 * ((nf + 1.0) * l_next.abs()).ln()).exp()
        })
        .collect();
    Ok(GaussRule { nodes, weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_moments() {
        // ∫_0^1 u^a (1-u)^b u^k du = B(a+k+1, b+1)
        let (a, b) = (-0.5, 0.75);
        let rule = gauss_jacobi_unit(a, b, 12).unwrap();
        for k in 0..20 {
            let q = rule.integrate(|u| u.powi(k));
            let exact = beta(a + k as f64 + 1.0, b + 1.0);
            assert!((q - exact).abs() <= 1e-13 * exact, "k={k}: {q} vs {exact}");
        }
    }

    #[test]
    fn jacobi_sum_minus_one_exponents() {
        // a + b = -1 exercises the removable singularity in the first recurrence entry.
        let rule = gauss_jacobi_unit(-0.5, -0.5, 8).unwrap();
        let total: f64 = rule.weights.iter().sum();
        assert!((total - std::f64::consts::PI).abs() < 1e-13);
        assert!(rule.nodes.iter().all(|&u| u > 0.0 && u < 1.0));
    }

    #[test]
    fn laguerre_moments() {
        // ∫ x^μ e^{-x} x^k dx = Γ(μ+k+1)
        for &mu in &[0.0, 0.5, 2.0] {
            let rule = gauss_laguerre(mu, 20).unwrap();
            for k in 0..30 {
                let q = rule.integrate(|x| x.powi(k));
                let exact = ln_gamma_real(mu + k as f64 + 1.0).exp();
                assert!((q - exact).abs() <= 1e-12 * exact, "mu={mu} k={k}");
            }
        }
    }

    #[test]
    fn domain_checks() {
        assert!(gauss_laguerre(-1.0, 4).is_err());
        assert!(gauss_jacobi_unit(-1.0, 0.0, 4).is_err());
        assert!(gauss_jacobi_unit(0.0, 0.0, 0).is_err());
    }
}
