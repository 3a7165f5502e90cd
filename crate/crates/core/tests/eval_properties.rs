use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use kummer::eval::{
    derivative, eval_asymptotic, eval_integral, eval_series, kummer_reflect, pochhammer, Truncation,
};
use kummer::{eval, Params, SeriesBudget};

fn b() -> SeriesBudget {
    SeriesBudget::default()
}

fn complex(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn series_and_asymptotic_agree_across_the_switch_radius() {
    let family = [
        Params::real(0.5, 1.5).unwrap(),
        Params::real(1.0, 3.0).unwrap(),
        Params::real(-1.5, 2.5).unwrap(),
        Params::new(complex(0.5, 0.5), complex(2.0, -1.0)).unwrap(),
    ];
    for p in &family {
        for r in (35..=45).map(f64::from) {
            for k in 0..16 {
                let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / 16.0);
                let s = eval_series(p, z, &b()).unwrap();
                let a = eval_asymptotic(p, z, Truncation::Auto, Truncation::Auto).unwrap();
                let gap = (s.value - a.value).norm();
                assert!(
                    gap <= s.abs_error_est + a.abs_error_est,
                    "{p:?} z={z}: gap {gap:e}, estimates {:e} + {:e}",
                    s.abs_error_est,
                    a.abs_error_est
                );
            }
        }
    }
}

#[test]
fn kummer_identity_on_parameter_grid() {
    let values = [
        complex(0.5, 0.0),
        complex(1.0, 0.0),
        complex(1.5, 0.0),
        complex(2.0, 1.0),
    ];
    let mut points = 0;
    for &a in &values {
        for &g in &values {
            let p = Params::new(a, g).unwrap();
            let k = kummer_reflect(&p);
            for j in 0..7 {
                let z =
                    Complex64::from_polar(3.0 * j as f64 - 0.5 * (j % 2) as f64, 0.9 * j as f64);
                let lhs = eval(&p, z, &b()).unwrap().value;
                let rhs = z.exp() * eval(&k.params, -z, &b()).unwrap().value;
                assert!(
                    (lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()),
                    "{p:?} z={z}"
                );
                points += 1;
            }
        }
    }
    assert!(points >= 100);
}

#[test]
fn reflecting_twice_returns_the_original_value() {
    let p = Params::new(complex(0.3, -0.7), complex(2.5, 0.5)).unwrap();
    let twice = kummer_reflect(&kummer_reflect(&p).params).params;
    for z in [complex(1.0, 2.0), complex(-15.0, 4.0), complex(30.0, -20.0)] {
        let a = eval(&p, z, &b()).unwrap().value;
        let t = eval(&twice, z, &b()).unwrap().value;
        assert!((a - t).norm() <= 1e-12 * a.norm(), "z={z}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn integral_oracle_agrees(
        ar in 0.1f64..2.0,
        ai in -1.0f64..1.0,
        dg in 0.2f64..3.0,
        gi in -1.0f64..1.0,
        r in 0.0f64..20.0,
        theta in -PI..PI,
    ) {
        let p = Params::new(complex(ar, ai), complex(ar + dg, gi)).unwrap();
        let z = Complex64::from_polar(r, theta);
        let v = eval(&p, z, &b()).unwrap().value;
        let q = eval_integral(&p, z, 256).unwrap().value;
        prop_assert!((v - q).norm() <= 1e-9 * (1.0 + v.norm()), "gap {:e}", (v - q).norm());
    }

    #[test]
    fn first_derivative_matches_central_difference(
        a in -3.0f64..3.0,
        g in 0.5f64..4.0,
        r in 0.0f64..5.0,
        theta in -PI..PI,
    ) {
        let p = Params::real(a, g).unwrap();
        let z = Complex64::from_polar(r, theta);
        let h = 1e-5;
        let fd = (eval(&p, z + h, &b()).unwrap().value - eval(&p, z - h, &b()).unwrap().value)
            / (2.0 * h);
        let d = derivative(&p, z, 1, &b()).unwrap();
        prop_assert!((d - fd).norm() <= 1e-6, "{d} vs {fd}");
    }

    #[test]
    fn pochhammer_splits(re in -10.0f64..10.0, im in -3.0f64..3.0, m in 0usize..=20, n in 0usize..=20) {
        let a = complex(re, im);
        let whole = pochhammer(a, m + n);
        let split = pochhammer(a, m) * pochhammer(a + m as f64, n);
        prop_assert!((whole - split).norm() <= 1e-13 * whole.norm().max(split.norm()) + 1e-300);
    }
}
