use num_complex::Complex64;

use kummer::applications::{
    erf_via_kummer, erfc, incomplete_gamma, normal_cdf, whittaker_m, WhittakerSpec,
};
use kummer::eval::{
    eval_asymptotic, eval_integral, eval_series, kummer_reflect, Truncation, R_SWITCH,
};
use kummer::identities::{
    contiguous_residual, default_fd_step, differentiation_residual_with_step, kummer_residual,
};
use kummer::laguerre::{laguerre_eval, LaguerreSpec, Mu};
use kummer::valuedist::{
    central_index_slope, characteristic_table, find_negative_real_zeros, find_real_zeros,
    geometric_grid, order_estimate, real_zero_count, zero_count_argument_principle, CircleSpec,
};
use kummer::{eval, Error, EvalResult, Params, Regime, Result, SeriesBudget};

use crate::args::{
    AppFunction, CharacteristicArgs, EvalArgs, IdentityArgs, LaguerreArgs, Method, OrderArgs,
    ParamArgs, PointArgs, ZerosArgs,
};
use crate::output::{Field, OutputFormat, Record};

pub const DEFAULT_IDENTITY_TOL: f64 = 1e-9;

impl ParamArgs {
    fn params(&self) -> Result<Params> {
        Params::new(
            Complex64::new(self.alpha_re, self.alpha_im),
            Complex64::new(self.gamma_re, self.gamma_im),
        )
    }
}

impl PointArgs {
    fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }
}

fn kummer_route(p: &Params, z: Complex64, b: &SeriesBudget) -> Result<EvalResult> {
    let k = kummer_reflect(p);
    let w = k.argument(z);
    let inner = if w.norm() <= R_SWITCH {
        eval_series(&k.params, w, b)?
    } else {
        eval_asymptotic(&k.params, w, Truncation::Auto, Truncation::Auto)?
    };
    let pref = k.prefactor(z);
    Ok(EvalResult {
        value: pref * inner.value,
        abs_error_est: pref.norm() * inner.abs_error_est,
        regime: Regime::KummerReflected,
        terms_used: inner.terms_used,
    })
}

pub fn cmd_eval(a: &EvalArgs, b: &SeriesBudget, out: &OutputFormat) -> Result<String> {
    let p = a.params.params()?;
    let z = a.point.z();
    let r = match a.method {
        Method::Auto => eval(&p, z, b)?,
        Method::Series => eval_series(&p, z, b)?,
        Method::Kummer => kummer_route(&p, z, b)?,
        Method::Asymptotic => eval_asymptotic(&p, z, Truncation::Auto, Truncation::Auto)?,
        Method::Integral => eval_integral(&p, z, a.quad_nodes)?,
    };
    Ok(out.single(
        &Record::new()
            .with("value_re", r.value.re)
            .with("value_im", r.value.im)
            .with("abs_error_est", r.abs_error_est)
            .with("regime", r.regime.to_string())
            .with("terms", r.terms_used),
    ))
}

pub fn cmd_identity(a: &IdentityArgs, tol: Option<f64>, out: &OutputFormat) -> Result<String> {
    let p = a.params.params()?;
    let z = a.point.z();
    let residual = match a.which.to_ascii_lowercase().as_str() {
        "kummer" => kummer_residual(&p, z)?,
        "diff" => {
            let h = a.step.unwrap_or_else(|| default_fd_step(a.order));
            differentiation_residual_with_step(&p, z, a.order, h)?
        }
        other => contiguous_residual(other.parse()?, &p, z)?,
    };
    let tol = tol.unwrap_or(DEFAULT_IDENTITY_TOL);
    let status = if residual <= tol { "PASS" } else { "FAIL" };
    Ok(out.single(
        &Record::new()
            .with("identity", a.which.to_ascii_uppercase())
            .with("residual", residual)
            .with("tol", tol)
            .with("status", status),
    ))
}

pub fn cmd_laguerre(a: &LaguerreArgs, out: &OutputFormat) -> Result<String> {
    let mu = if a.mu_im == 0.0 {
        Mu::from_f64(a.mu)
    } else {
        Mu::from_complex(Complex64::new(a.mu, a.mu_im))
    };
    let s = LaguerreSpec::new(a.n, mu)?;
    let v = laguerre_eval(&s, Complex64::new(a.z, a.z_im))?;
    Ok(out.single(
        &Record::new()
            .with("n", a.n)
            .with("mu", s.mu().to_string())
            .with("value_re", v.re)
            .with("value_im", v.im),
    ))
}

pub fn cmd_characteristic(
    a: &CharacteristicArgs,
    b: &SeriesBudget,
    out: &OutputFormat,
) -> Result<String> {
    let p = a.params.params()?;
    let grid = geometric_grid(a.rmin, a.rmax, a.points)?;
    let rows = characteristic_table(&p, &grid, a.samples, a.zero_guard, b)?;
    let records: Vec<Record> = rows
        .iter()
        .map(|r| {
            Record::new()
                .with("r", r.r)
                .with("m", r.m)
                .with("N", r.counting)
                .with("T", r.characteristic)
                .with("logM", r.log_max_modulus)
                .with("nu", r.nu)
                .with("n", r.zeros)
        })
        .collect();
    Ok(out.table(&records))
}

pub fn cmd_order(a: &OrderArgs, b: &SeriesBudget, out: &OutputFormat) -> Result<String> {
    let p = a.params.params()?;
    let grid = geometric_grid(a.rmin, a.rmax, a.points)?;
    Ok(out.single(
        &Record::new()
            .with("rmin", a.rmin)
            .with("rmax", a.rmax)
            .with("points", a.points)
            .with("order", order_estimate(&p, &grid, b)?)
            .with("central_index_slope", central_index_slope(&p, &grid)?),
    ))
}

pub fn cmd_zeros(a: &ZerosArgs, b: &SeriesBudget, out: &OutputFormat) -> Result<String> {
    let p = Params::real(a.alpha, a.gamma)?;
    let rec = Record::new().with("alpha", a.alpha).with("gamma", a.gamma);
    if a.real {
        let counts = real_zero_count(a.alpha, a.gamma)?;
        let pos = find_real_zeros(&p, None, b)?;
        let neg = find_negative_real_zeros(&p, None, b)?;
        return Ok(out.single(
            &rec.with("n_plus", counts.n_plus)
                .with("n_minus", counts.n_minus)
                .with("positive_zeros", Field::List(pos))
                .with("negative_zeros", Field::List(neg)),
        ));
    }
    let r =
        a.r.ok_or_else(|| Error::Domain("zeros needs --real or --r".into()))?;
    let c = CircleSpec::with_options(r, a.samples, kummer::valuedist::DEFAULT_ZERO_GUARD)?;
    let n = zero_count_argument_principle(&p, &c, b)?;
    Ok(out.single(&rec.with("r", r).with("n", n)))
}

pub fn cmd_app(f: &AppFunction, out: &OutputFormat) -> Result<String> {
    let rec = match *f {
        AppFunction::Erf { x } => Record::new().with("x", x).with("erf", erf_via_kummer(x)?),
        AppFunction::Erfc { x } => Record::new().with("x", x).with("erfc", erfc(x)?),
        AppFunction::Gammainc { n, x } => Record::new()
            .with("n", n)
            .with("x", x)
            .with("gammainc", incomplete_gamma(n, x)?),
        AppFunction::Normcdf { m, sigma, x } => Record::new()
            .with("m", m)
            .with("sigma", sigma)
            .with("x", x)
            .with("cdf", normal_cdf(m, sigma, x)?),
        AppFunction::Whittaker {
            k_re,
            k_im,
            m_re,
            m_im,
            point,
        } => {
            let s = WhittakerSpec::new(
                Complex64::new(k_re, k_im),
                Complex64::new(m_re, m_im),
                point.z(),
            )?;
            let v = whittaker_m(&s)?;
            Record::new().with("value_re", v.re).with("value_im", v.im)
        }
    };
    Ok(out.single(&rec))
}
