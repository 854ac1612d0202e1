//! `euler-pencil`: command-line access to every library operation.

mod args;
mod cmd;
mod output;

use clap::{Parser, Subcommand};

use args::{BranchArg, CliError, CurveArgs};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "euler-pencil", version, about = "Euler factors of elliptic curves as operator-pencil resolvents")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Numeric tolerance; each command documents its default.
    #[arg(long, global = true, allow_hyphen_values = true)]
    tol: Option<f64>,
    /// Worker threads for prime sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius traces a_p by point counting.
    Ap {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 50)]
        max_p: u64,
        /// Include bad primes, counted on the singular reduction.
        #[arg(long)]
        force: bool,
    },
    /// Primes of good reduction up to a bound.
    GoodPrimes {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 100)]
        max_p: u64,
    },
    /// Hasse bound a_p^2 <= 4p.
    Hasse {
        #[arg(long, allow_hyphen_values = true)]
        ap: i64,
        #[arg(long)]
        p: u64,
    },
    /// Traces {+-2a, +-2b} with a^2 + b^2 = p.
    Cornacchia {
        #[arg(long)]
        p: u64,
    },
    /// Invariants and Jacobian of a binary quartic.
    Quartic {
        /// Coefficients a,b,c,d,e of aX^4 + bX^3 + cX^2 + dX + e.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// j from a Legendre cross-ratio (rational, or re,im for complex).
    LegendreJ {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Invariants and j of a curve.
    CurveJ {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Pencil entries from (tau, delta, Delta).
    Pencil {
        #[arg(long, allow_hyphen_values = true)]
        pencil: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        e: String,
    },
    /// Spectral polynomial P(u, lambda).
    SpectralPoly {
        #[arg(long, allow_hyphen_values = true)]
        pencil: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        e: String,
    },
    /// eta-Gram matrix.
    EtaGram {
        #[command(flatten)]
        gram: cmd::pencil::GramInput,
    },
    /// Whether the eta-Gram is even in lambda.
    Evenness {
        #[command(flatten)]
        gram: cmd::pencil::GramInput,
    },
    /// Negative diagonal count of the eta-Gram at lambda = 0.
    Pontryagin {
        #[command(flatten)]
        gram: cmd::pencil::GramInput,
    },
    /// 8x8 monomial Gram matrix, rank and reduced spectrum.
    MonomialGram {
        /// Signs eps1,eps2.
        #[arg(long, allow_hyphen_values = true, default_value = "1,-1")]
        eps: String,
    },
    /// Exact j-invariant of the pencil family.
    J {
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// tau^2 directly, for loci with irrational tau.
        #[arg(long, allow_hyphen_values = true)]
        tau_sq: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long = "Delta", allow_hyphen_values = true)]
        big_delta: String,
    },
    /// Q(tau^2, delta, Delta), whose zero set is a j = 1728 component.
    #[command(name = "j1728-q")]
    J1728Q {
        #[arg(long, allow_hyphen_values = true)]
        tau_sq: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long = "Delta", allow_hyphen_values = true)]
        big_delta: String,
    },
    /// Basepoint from the master quadratic.
    Basepoint {
        #[arg(long, allow_hyphen_values = true)]
        pencil: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ap: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// Euler-factor matching tr R = a_p, det R = p.
    Match {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        pencil: Option<String>,
        /// Single prime (with --ap, or a_p counted on --curve).
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        ap: Option<i64>,
        /// Sweep all good primes up to this bound.
        #[arg(long)]
        max_p: Option<u64>,
        #[arg(long, value_enum, default_value_t = BranchArg::Both)]
        branch: BranchArg,
    },
    /// Exact reduction of P - u^2/p to the master quadratic.
    ReduceCheck {
        #[arg(long, allow_hyphen_values = true)]
        pencil: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ap: i64,
        #[arg(long)]
        p: u64,
    },
    /// Delta_p + D_p = 4p^2.
    DiscIdentity {
        #[arg(long, allow_hyphen_values = true)]
        ap: i64,
        #[arg(long)]
        p: u64,
    },
    /// Off-shell distance w/(p(w + 1)).
    DOff {
        /// Rational w; omit to use the canonical basepoint of --ap.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ap: Option<i64>,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// C/D matching ratio R_A and Delta_CD.
    CdRatio {
        #[arg(long, allow_hyphen_values = true)]
        ap: i64,
        #[arg(long)]
        p: u64,
    },
    /// Cyclic-operator basepoint Y = (a_p - p)/(2p).
    Tco {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        ap: Option<i64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        max_p: Option<u64>,
    },
    /// Zeta operator at its basepoint.
    Zco {
        /// Euler-factor variable t (re or re,im).
        #[arg(long, allow_hyphen_values = true, default_value = "0.5")]
        t: String,
    },
    /// Trace invariance of the DC-shifted zeta pencil.
    ZcoC {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// Eigenvalues (1 +- sqrt 5)/2 of the golden block.
    Golden,
    /// Two good primes with different traces.
    Obstruction {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 10)]
        k: usize,
    },
    /// Continuum universality integral.
    Universality {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = cmd::continuum::DispersionArg::Both)]
        dispersion: cmd::continuum::DispersionArg,
    },
    /// Arcsine density and distribution function.
    Arcsine {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Dirichlet L(s, chi_-4).
    #[command(name = "chi4-L")]
    Chi4L {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
    },
    /// Residual of the eta functional equation.
    EtaFeq {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
    },
    /// Per-prime canonical basepoint observables.
    DeltaSeries {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 1000)]
        x: u64,
    },
    /// Inert fraction, KS distance and histogram.
    SatoTate {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 10_000)]
        x: u64,
    },
    /// Fraction of primes with |delta_p| < eps.
    Bulk {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 10_000)]
        x: u64,
        #[arg(long, default_value_t = 0.3)]
        eps: f64,
    },
    /// Log-weighted means of u_p and lambda_p.
    Accumulate {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value = "1000,10000")]
        xs: String,
    },
    /// Catalogue entries.
    Catalogue {
        #[arg(long)]
        label: Option<String>,
    },
    /// Every acceptance criterion.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        /// Cutoff for the statistics criterion.
        #[arg(long, default_value_t = 10_000)]
        x: u64,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> args::CliResult<output::Out> {
    use cmd::{arith, continuum, matching, meta, pencil, stats};
    let tol = cli.tol;
    match &cli.command {
        Command::Ap { curve, max_p, force } => arith::ap(curve, *max_p, *force),
        Command::GoodPrimes { curve, max_p } => arith::good_primes(curve, *max_p),
        Command::Hasse { ap, p } => arith::hasse(*ap, *p),
        Command::Cornacchia { p } => arith::cornacchia(*p),
        Command::Quartic { coeffs } => arith::quartic(coeffs),
        Command::LegendreJ { lambda } => arith::legendre(lambda),
        Command::CurveJ { curve } => arith::curve_j(curve),
        Command::Pencil { pencil: p, e } => pencil::pencil(p.as_deref(), e),
        Command::SpectralPoly { pencil: p, e } => pencil::spectral_poly(p.as_deref(), e),
        Command::EtaGram { gram } => pencil::eta_gram(gram),
        Command::Evenness { gram } => pencil::evenness(gram),
        Command::Pontryagin { gram } => pencil::pontryagin(gram),
        Command::MonomialGram { eps } => pencil::monomial(eps),
        Command::J { tau, tau_sq, delta, big_delta } => pencil::j(tau.as_deref(), tau_sq.as_deref(), delta, big_delta),
        Command::J1728Q { tau_sq, delta, big_delta } => pencil::j1728_q(tau_sq, delta, big_delta),
        Command::Basepoint { pencil: p, ap, p: prime, branch } => matching::basepoint(p.as_deref(), *ap, *prime, *branch),
        Command::Match { curve, pencil: p, p: prime, ap, max_p, branch } => {
            matching::match_cmd(curve, p.as_deref(), *prime, *ap, *max_p, *branch, tol)
        }
        Command::ReduceCheck { pencil: p, ap, p: prime } => matching::reduce_check(p.as_deref(), *ap, *prime),
        Command::DiscIdentity { ap, p } => matching::disc_identity(*ap, *p),
        Command::DOff { w, ap, p, branch } => matching::d_off(w.as_deref(), *ap, *p, *branch),
        Command::CdRatio { ap, p } => matching::cd_ratio(*ap, *p),
        Command::Tco { curve, ap, p, max_p } => matching::tco(curve, *ap, *p, *max_p),
        Command::Zco { t } => matching::zco(t, tol),
        Command::ZcoC { c, u } => matching::zco_c(c, u),
        Command::Golden => matching::golden(),
        Command::Obstruction { curve, k } => matching::obstruction(curve, *k),
        Command::Universality { z, dispersion } => continuum::universality(z, *dispersion, tol),
        Command::Arcsine { t } => continuum::arcsine(*t),
        Command::Chi4L { s } => continuum::chi4_l(*s, tol),
        Command::EtaFeq { s } => continuum::eta_feq(*s, tol),
        Command::DeltaSeries { curve, x } => stats::delta_series(curve, *x),
        Command::SatoTate { curve, x } => stats::sato_tate(curve, *x),
        Command::Bulk { curve, x, eps } => stats::bulk(curve, *x, *eps),
        Command::Accumulate { curve, xs } => stats::accumulate(curve, xs),
        Command::Catalogue { label } => meta::catalogue(label.as_deref()),
        Command::VerifyAll { only, x, seed } => meta::verify_all(*only, *x, *seed),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: invalid value for --threads: must be at least 1");
            std::process::exit(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            std::process::exit(2);
        }
    }
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            eprintln!("error: invalid value for --tol: must be a positive finite number, got {t}");
            std::process::exit(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            output::emit(&out, cli.format);
            std::process::exit(out.status().exit_code());
        }
        Err(e @ CliError::Usage { .. }) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
