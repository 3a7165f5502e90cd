use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "kummer",
    version,
    about = "Confluent hypergeometric function 1F1(α;γ;z)"
)]
pub struct Cli {
    /// Print JSON instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,

    /// Significant digits of printed numbers.
    #[arg(long, global = true, default_value_t = 17,
          value_parser = clap::value_parser!(u8).range(6..=17))]
    pub precision: u8,

    /// Series stopping tolerance; for `identity`, the PASS threshold (default 1e-9).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Maximum number of series terms.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_terms: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate 1F1(α;γ;z).
    Eval(EvalArgs),
    /// Residual of a contiguous relation, the Kummer transformation or the
    /// differentiation formula.
    Identity(IdentityArgs),
    /// Generalized Laguerre polynomial L_n^μ(z).
    Laguerre(LaguerreArgs),
    /// Table of m, N, T, log M, ν and n(r) on a geometric radius grid.
    Characteristic(CharacteristicArgs),
    /// Growth-order estimate from log log M(r) and from ν(r).
    Order(OrderArgs),
    /// Real-zero counts, or the number of zeros inside |z| < r.
    Zeros(ZerosArgs),
    /// Classical functions through 1F1.
    App(AppArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha_im: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma_im: f64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PointArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Series,
    Kummer,
    Asymptotic,
    Integral,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Gauss nodes for `--method integral`.
    #[arg(long, default_value_t = 128)]
    pub quad_nodes: usize,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// R1..R6, kummer or diff.
    #[arg(long)]
    pub which: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub point: PointArgs,
    /// Derivative order for `diff`.
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// Finite-difference step for `diff`.
    #[arg(long)]
    pub step: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LaguerreArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu_im: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_im: f64,
}

#[derive(Debug, Args)]
pub struct CharacteristicArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub rmin: f64,
    #[arg(long)]
    pub rmax: f64,
    #[arg(long)]
    pub points: usize,
    #[arg(long, default_value_t = kummer::valuedist::DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = kummer::valuedist::DEFAULT_ZERO_GUARD)]
    pub zero_guard: f64,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10.0)]
    pub rmin: f64,
    #[arg(long, default_value_t = 1e6)]
    pub rmax: f64,
    #[arg(long, default_value_t = 16)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// Count and locate zeros on the real axis.
    #[arg(long)]
    pub real: bool,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Radius for the argument-principle count (without `--real`).
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = kummer::valuedist::DEFAULT_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct AppArgs {
    #[command(subcommand)]
    pub function: AppFunction,
}

#[derive(Debug, Subcommand)]
pub enum AppFunction {
    /// Error function erf(x).
    Erf {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Complementary error function erfc(x).
    Erfc {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Lower incomplete gamma function γ(n, x).
    Gammainc {
        #[arg(long)]
        n: f64,
        #[arg(long)]
        x: f64,
    },
    /// Normal distribution function Φ((x - m)/σ).
    Normcdf {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Whittaker function M_{k,m}(z).
    Whittaker {
        #[arg(long, allow_negative_numbers = true)]
        k_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        k_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        m_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m_im: f64,
        #[command(flatten)]
        point: PointArgs,
    },
}
