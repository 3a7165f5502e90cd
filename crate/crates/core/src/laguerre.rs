//! Generalized Laguerre polynomials
//! L_n^μ(z) = (μ+1)_n / n! · 1F1(-n; μ+1; z).

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::eval::{eval_polynomial, pochhammer, Params};
use crate::gamma::nonpositive_integer;
use crate::quadrature::{gauss_laguerre, laguerre_pair};

const MAX_DENOMINATOR: i64 = 1000;

/// Laguerre parameter: exact when it is a rational with a small denominator.
#[derive(Debug, Clone, PartialEq)]
pub enum Mu {
    Rational(BigRational),
    Complex(Complex64),
}

impl Mu {
    pub fn rational(num: i64, den: i64) -> Self {
        Mu::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Recognizes p/q with q ≤ 1000 within 1e-12; otherwise keeps the float.
    pub fn from_f64(x: f64) -> Self {
        if x.is_finite() {
            for q in 1..=MAX_DENOMINATOR {
                let p = (x * q as f64).round();
                if (x - p / q as f64).abs() <= 1e-12 * x.abs().max(1.0) {
                    return Mu::rational(p as i64, q);
                }
            }
        }
        Mu::Complex(Complex64::new(x, 0.0))
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.im == 0.0 {
            Self::from_f64(z.re)
        } else {
            Mu::Complex(z)
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Mu::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Mu::Complex(z) => *z,
        }
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mu::Rational(r) => write!(f, "{r}"),
            Mu::Complex(z) => write!(f, "{z}"),
        }
    }
}

/// Degree and parameter of L_n^μ; μ may not be a negative integer.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreSpec {
    n: u32,
    mu: Mu,
}

impl LaguerreSpec {
    pub fn new(n: u32, mu: Mu) -> Result<Self> {
        let m = mu.to_complex();
        if !(m.re.is_finite() && m.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite Laguerre parameter {mu}")));
        }
        if nonpositive_integer(m + 1.0).is_some() {
            return Err(Error::Domain(format!(
                "Laguerre parameter may not be a negative integer, got {mu}"
            )));
        }
        Ok(Self { n, mu })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> &Mu {
        &self.mu
    }
}

/// Monomial coefficients c_0..c_n.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyCoeffs {
    Exact(Vec<BigRational>),
    Float(Vec<Complex64>),
}

impl PolyCoeffs {
    pub fn degree(&self) -> usize {
        self.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        match self {
            PolyCoeffs::Exact(c) => c.len(),
            PolyCoeffs::Float(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match self {
            PolyCoeffs::Exact(c) => c
                .iter()
                .map(|r| Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0))
                .collect(),
            PolyCoeffs::Float(c) => c.clone(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.to_complex()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> PolyCoeffs {
        match self {
            PolyCoeffs::Exact(c) => PolyCoeffs::Exact(
                c.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, r)| r * BigRational::from_integer(BigInt::from(k)))
                    .collect(),
            ),
            PolyCoeffs::Float(c) => PolyCoeffs::Float(
                c.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, &v)| v * k as f64)
                    .collect(),
            ),
        }
    }

    /// Multiplies every coefficient by -1.
    pub fn negated(&self) -> PolyCoeffs {
        match self {
            PolyCoeffs::Exact(c) => PolyCoeffs::Exact(c.iter().map(|r| -r).collect()),
            PolyCoeffs::Float(c) => PolyCoeffs::Float(c.iter().map(|&v| -v).collect()),
        }
    }

    /// Largest coefficient difference; exact rationals are compared exactly
    /// and the result converted at the end. Missing coefficients count as zero.
    pub fn max_abs_diff(&self, other: &PolyCoeffs) -> f64 {
        match (self, other) {
            (PolyCoeffs::Exact(a), PolyCoeffs::Exact(b)) => {
                let zero = BigRational::zero();
                (0..a.len().max(b.len()))
                    .map(|k| {
                        let d = a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero);
                        d.abs().to_f64().unwrap_or(f64::INFINITY)
                    })
                    .fold(0.0, f64::max)
            }
            _ => {
                let (a, b) = (self.to_complex(), other.to_complex());
                let zero = Complex64::new(0.0, 0.0);
                (0..a.len().max(b.len()))
                    .map(|k| (a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).norm())
                    .fold(0.0, f64::max)
            }
        }
    }
}

/// L_n^μ(z) as (μ+1)_n/n! times the terminating 1F1.
pub fn laguerre_eval(s: &LaguerreSpec, z: Complex64) -> Result<Complex64> {
    let n = s.n as usize;
    let g = s.mu.to_complex() + 1.0;
    let mut pref = pochhammer(g, n);
    for k in 1..=n {
        pref /= k as f64;
    }
    let p = Params::new(Complex64::new(-(n as f64), 0.0), g)?;
    Ok(pref * eval_polynomial(&p, z)?.value)
}

fn rational_coeffs(n: usize, mu: &BigRational) -> Vec<BigRational> {
    let one = BigRational::one();
    let g = mu + &one;
    // (μ+1)_n / n!
    let mut pref = one.clone();
    for k in 0..n {
        pref = pref * (&g + BigRational::from_integer(BigInt::from(k)))
            / BigRational::from_integer(BigInt::from(k + 1));
    }
    // c_k = pref · (-n)_k / (k! (μ+1)_k), built by the term ratio.
    let mut out = Vec::with_capacity(n + 1);
    let mut c = pref;
    out.push(c.clone());
    for k in 0..n {
        let kk = BigRational::from_integer(BigInt::from(k));
        let num = BigRational::from_integer(BigInt::from(k as i64 - n as i64));
        c = c * num / ((&g + &kk) * BigRational::from_integer(BigInt::from(k + 1)));
        out.push(c.clone());
    }
    out
}

fn float_coeffs(n: usize, mu: Complex64) -> Vec<Complex64> {
    let g = mu + 1.0;
    let mut c = pochhammer(g, n);
    for k in 1..=n {
        c /= k as f64;
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(c);
    for k in 0..n {
        c = c * (k as f64 - n as f64) / ((g + k as f64) * (k + 1) as f64);
        out.push(c);
    }
    out
}

/// Coefficients c_k = (μ+1)_n/n! · (-n)_k / (k! (μ+1)_k).
pub fn laguerre_coeffs(s: &LaguerreSpec) -> PolyCoeffs {
    let n = s.n as usize;
    match &s.mu {
        Mu::Rational(r) => PolyCoeffs::Exact(rational_coeffs(n, r)),
        Mu::Complex(z) => PolyCoeffs::Float(float_coeffs(n, *z)),
    }
}

/// Largest coefficient deviation between L_n^m and (-1)^m d^m/dz^m L_{m+n}^0.
pub fn laguerre_diff_identity(n: u32, m: u32) -> Result<f64> {
    let lhs = laguerre_coeffs(&LaguerreSpec::new(n, Mu::rational(m as i64, 1))?);
    let mut rhs = laguerre_coeffs(&LaguerreSpec::new(m + n, Mu::rational(0, 1))?);
    for _ in 0..m {
        rhs = rhs.derivative();
    }
    if m % 2 == 1 {
        rhs = rhs.negated();
    }
    Ok(lhs.max_abs_diff(&rhs))
}

pub const MAX_GENERATING_T: f64 = 0.9;

/// Number of terms after which a crude bound on |L_n^μ(z) t^n| summed over
/// the tail falls below 1e-12 relative to `scale`.
fn generating_terms(mu: Complex64, z: Complex64, t: f64, scale: f64) -> usize {
    let a = mu.norm() + 1.0;
    let zn = z.norm();
    for n in 1..100_000usize {
        let nf = n as f64;
        // |L_n^μ(z)| ≤ C n^{|μ|} e^{2√(n|z|)} for fixed μ, z.
        let ln_tail = a * nf.ln() + 2.0 * (nf * zn).sqrt() + nf * t.ln() - (1.0 - t).ln();
        if ln_tail < (1e-12 * scale).ln() {
            return n;
        }
    }
    100_000
}

/// Relative gap between Σ_{n≤N} L_n^μ(z) t^n and e^{-zt/(1-t)} (1-t)^{-μ-1}.
///
/// `terms = None` picks N from a tail bound.
pub fn generating_residual(
    mu: Complex64,
    z: Complex64,
    t: Complex64,
    terms: Option<usize>,
) -> Result<f64> {
    if !(t.norm() <= MAX_GENERATING_T) {
        return Err(Error::Domain(format!(
            "generating function needs |t| <= {MAX_GENERATING_T}, got {t}"
        )));
    }
    if nonpositive_integer(mu + 1.0).is_some() {
        return Err(Error::Domain(format!(
            "Laguerre parameter may not be a negative integer, got {mu}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let closed = (-z * t / (one - t) - (mu + 1.0) * (one - t).ln()).exp();
    let n_terms = terms.unwrap_or_else(|| generating_terms(mu, z, t.norm(), closed.norm()));

    // (k+1) L_{k+1} = (2k+1+μ-z) L_k - (k+μ) L_{k-1}
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = one;
    let mut tp = one;
    let mut sum = one;
    for k in 0..n_terms {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + mu - z) * cur - (kf + mu) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        tp *= t;
        sum += cur * tp;
    }
    Ok((sum - closed).norm() / closed.norm())
}

/// ∫_0^∞ z^μ e^{-z} L_n^μ L_{n2}^μ dz by Gauss–Laguerre quadrature.
pub fn orthogonality_integral(n: u32, n2: u32, mu: f64, quad_nodes: usize) -> Result<f64> {
    if !(mu > -1.0) {
        return Err(Error::Domain(format!(
            "orthogonality needs mu > -1, got {mu}"
        )));
    }
    let rule = gauss_laguerre(mu, quad_nodes)?;
    Ok(rule.integrate(|x| {
        let (ln, _) = laguerre_pair(n as usize, mu, x);
        let (ln2, _) = laguerre_pair(n2 as usize, mu, x);
        ln * ln2
    }))
}
