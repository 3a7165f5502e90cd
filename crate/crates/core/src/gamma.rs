//! Complex gamma function, its logarithm and the entire reciprocal 1/Γ.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Distance from a nonpositive integer below which an argument is treated as a pole.
pub const POLE_TOL: f64 = 1e-12;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// B_{2k} / (2k (2k-1)) for k = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Returns `Some(k)` when `w` lies within [`POLE_TOL`] of the nonpositive integer `-k`.
pub fn nonpositive_integer(w: Complex64) -> Option<u64> {
    let k = w.re.round();
    if k <= 0.0 && (w - Complex64::new(k, 0.0)).norm() <= POLE_TOL {
        Some((-k) as u64)
    } else {
        None
    }
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        corr += pow * c;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + corr
}

/// ln Γ(w), determined modulo 2πi. Returns `+inf` at the poles.
pub fn ln_gamma(w: Complex64) -> Complex64 {
    if nonpositive_integer(w).is_some() {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    if w.re < 0.5 {
        // Γ(w) Γ(1-w) = π / sin(πw)
        let s = (w * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - w);
    }
    let mut z = w;
    let mut prod = Complex64::new(1.0, 0.0);
    while z.norm() < 15.0 {
        prod *= z;
        z += 1.0;
    }
    stirling(z) - prod.ln()
}

pub fn gamma(w: Complex64) -> Complex64 {
    if nonpositive_integer(w).is_some() {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    ln_gamma(w).exp()
}

/// 1/Γ(w), an entire function: exactly zero at the poles of Γ.
pub fn rgamma(w: Complex64) -> Complex64 {
    if nonpositive_integer(w).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    (-ln_gamma(w)).exp()
}

/// ln(1/Γ(w)) or `None` when 1/Γ(w) = 0.
pub fn ln_rgamma(w: Complex64) -> Option<Complex64> {
    if nonpositive_integer(w).is_some() {
        None
    } else {
        Some(-ln_gamma(w))
    }
}

/// Real ln Γ(x) for x > 0.
pub fn ln_gamma_real(x: f64) -> f64 {
    ln_gamma(Complex64::new(x, 0.0)).re
}

/// Beta function B(a, b) for a, b > 0.
pub fn beta(a: f64, b: f64) -> f64 {
    (ln_gamma_real(a) + ln_gamma_real(b) - ln_gamma_real(a + b)).exp()
}
