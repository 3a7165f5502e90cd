use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use kummer::gamma::ln_gamma_real;
use kummer::laguerre::{
    laguerre_coeffs, laguerre_eval, orthogonality_integral, LaguerreSpec, Mu, PolyCoeffs,
};

fn exact(n: u32, mu: &Mu) -> Vec<BigRational> {
    match laguerre_coeffs(&LaguerreSpec::new(n, mu.clone()).unwrap()) {
        PolyCoeffs::Exact(c) => c,
        PolyCoeffs::Float(_) => panic!("rational μ should give exact coefficients"),
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn leading_coefficient() {
    for mu in [Mu::rational(0, 1), Mu::rational(1, 2), Mu::rational(-1, 3)] {
        for n in 0..=15u32 {
            let c = exact(n, &mu);
            let sign = if n % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            assert_eq!(c[n as usize], BigRational::new(sign, factorial(n)), "n={n}");
        }
    }
}

#[test]
fn eval_matches_coefficients() {
    for mu in [0.0, 0.5, 2.0, -0.3] {
        for n in 0..=15u32 {
            let s = LaguerreSpec::new(n, Mu::from_f64(mu)).unwrap();
            let coeffs = laguerre_coeffs(&s);
            for z in [0.3, 2.0, -4.5, 10.0].map(|x| Complex64::new(x, 0.5)) {
                let a = laguerre_eval(&s, z).unwrap();
                let b = coeffs.eval(z);
                // Horner in the monomial basis cancels; its error scales with Σ|c_k||z|^k.
                let scale: f64 = coeffs
                    .to_complex()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.norm() * z.norm().powi(k as i32))
                    .sum();
                assert!(
                    (a - b).norm() <= 1e-14 * scale + 1e-12 * a.norm(),
                    "n={n} μ={mu} z={z}"
                );
            }
        }
    }
}

/// -z P'' + (z - μ - 1) P' = n P, compared coefficient by coefficient.
#[test]
fn eigenfunction_of_the_laguerre_operator() {
    for (num, den) in [(0, 1), (1, 2), (2, 1), (7, 3)] {
        let mu = BigRational::new(num.into(), den.into());
        for n in 0..=10u32 {
            let p = exact(n, &Mu::rational(num, den));
            let d1 = PolyCoeffs::Exact(p.clone()).derivative();
            let d2 = d1.derivative();
            let (PolyCoeffs::Exact(d1), PolyCoeffs::Exact(d2)) = (d1, d2) else {
                unreachable!()
            };
            let at =
                |v: &[BigRational], k: usize| v.get(k).cloned().unwrap_or_else(BigRational::zero);
            let below = |v: &[BigRational], k: usize| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    at(v, k - 1)
                }
            };
            let nn = BigRational::from_integer(n.into());
            for (k, pk) in p.iter().enumerate() {
                // Coefficient of z^k on the left-hand side.
                let lhs = -below(&d2, k) + below(&d1, k) - (&mu + BigRational::one()) * at(&d1, k);
                assert_eq!(lhs, &nn * pk, "μ={mu} n={n} k={k}");
            }
        }
    }
}

#[test]
fn orthogonality_matrix() {
    for mu in [0.0, 0.5, 2.0] {
        for n in 0..=8u32 {
            for m in 0..=8u32 {
                let v = orthogonality_integral(n, m, mu, 24).unwrap();
                if n == m {
                    let h =
                        (ln_gamma_real(mu + n as f64 + 1.0) - ln_gamma_real(n as f64 + 1.0)).exp();
                    assert!((v - h).abs() <= 1e-10 * h, "μ={mu} n={n}");
                } else {
                    assert!(v.abs() <= 1e-10, "μ={mu} ({n},{m}): {v:e}");
                }
            }
        }
    }
}
