use kummer::valuedist::{
    central_index_slope, characteristic_t, geometric_grid, log_max_modulus, order_estimate,
    real_zero_count, zero_count_argument_principle, CircleSpec,
};
use kummer::{Params, SeriesBudget};

fn b() -> SeriesBudget {
    SeriesBudget::default()
}

fn family() -> Vec<Params> {
    vec![
        Params::real(1.0, 2.0).unwrap(),
        Params::real(0.5, 1.5).unwrap(),
        Params::real(-3.0, 1.0).unwrap(),
        Params::real(2.5, 0.5).unwrap(),
    ]
}

#[test]
fn characteristic_and_max_modulus_are_nondecreasing() {
    let grid = geometric_grid(0.5, 150.0, 12).unwrap();
    for p in family() {
        let rows: Vec<_> = grid
            .iter()
            .map(|&r| characteristic_t(&p, &CircleSpec::new(r).unwrap(), &b()).unwrap())
            .collect();
        for w in rows.windows(2) {
            assert!(
                w[1].characteristic >= w[0].characteristic - 1e-9,
                "{p:?} at r={}",
                w[1].r
            );
            assert!(
                w[1].log_max_modulus >= w[0].log_max_modulus - 1e-9,
                "{p:?} at r={}",
                w[1].r
            );
        }
    }
}

#[test]
fn sandwich_between_characteristic_and_max_modulus() {
    let slack = 1e-6;
    for p in family() {
        for (r, big_r) in [(2.0, 3.0), (5.0, 10.0), (20.0, 60.0), (50.0, 80.0)] {
            let t = |x: f64| {
                characteristic_t(&p, &CircleSpec::new(x).unwrap(), &b())
                    .unwrap()
                    .characteristic
            };
            let lm = log_max_modulus(&p, &CircleSpec::new(r).unwrap(), &b())
                .unwrap()
                .max(0.0);
            let factor = (big_r + r) / (big_r - r);
            assert!(t(r) <= lm * (1.0 + slack), "{p:?} r={r}");
            assert!(
                lm <= factor * t(big_r) * (1.0 + slack),
                "{p:?} r={r} R={big_r}"
            );
        }
    }
}

#[test]
fn central_index_tracks_the_order() {
    let grid = geometric_grid(10.0, 1e6, 16).unwrap();
    for p in [
        Params::real(1.0, 2.0).unwrap(),
        Params::real(0.5, 1.5).unwrap(),
        Params::real(-3.0, 1.0).unwrap(),
    ] {
        let nu = central_index_slope(&p, &grid).unwrap();
        let sigma = order_estimate(&p, &grid, &b()).unwrap();
        assert!((nu - sigma).abs() <= 0.15, "{p:?}: {nu} vs {sigma}");
    }
}

#[test]
fn argument_count_bounds_real_zeros() {
    for (a, g) in [
        (-2.5, 1.0),
        (-4.3, 0.5),
        (1.5, 2.0),
        (-1.0, 3.0),
        (-6.5, 2.5),
    ] {
        let p = Params::real(a, g).unwrap();
        let k = real_zero_count(a, g).unwrap();
        let n = zero_count_argument_principle(&p, &CircleSpec::new(60.0).unwrap(), &b()).unwrap();
        assert!(n >= (k.n_plus + k.n_minus) as u64, "({a},{g}): {n} < {k:?}");
    }
    for deg in 1..=6u64 {
        let p = Params::real(-(deg as f64), 1.5).unwrap();
        let n = zero_count_argument_principle(&p, &CircleSpec::new(80.0).unwrap(), &b()).unwrap();
        assert_eq!(n, deg);
    }
}

#[test]
fn zero_density_of_the_exponential_quotient() {
    // F(1;2;z) = (e^z - 1)/z vanishes at 2πik, k ≠ 0.
    let p = Params::real(1.0, 2.0).unwrap();
    for r in geometric_grid(10.0, 500.0, 10).unwrap() {
        let n = zero_count_argument_principle(&p, &CircleSpec::new(r).unwrap(), &b()).unwrap();
        assert_eq!(
            n,
            2 * (r / (2.0 * std::f64::consts::PI)).floor() as u64,
            "r={r}"
        );
        assert!(n as f64 / r.powf(1.1) <= 1.0);
    }
}
