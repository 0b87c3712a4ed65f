//! Command-line front end. `run` returns the process exit code:
//! 0 success, 1 counterexample, 2 malformed input, 3 unsupported range,
//! 4 I/O failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::text::{parse_rational, render_num_den, render_ratfun};
use crate::arith::Rational;
use crate::error::Error;
use crate::interp::{
    binomial, extra_vanishing_check, interp_linear, interp_tableau, monotonicity_check, positivity_check,
    BinomialTable, Normalization,
};
use crate::partitions::Partition;
use crate::positivity::{
    difference_expansion, shifted_expansion, verify_binomial_formula, verify_cgs, verify_conj_cgs,
    verify_conj_kt, verify_cor_kt, verify_kt, verify_powersum, verify_thm1, TauValue, DEFAULT_GRID_VALUES,
};
use crate::report::VerificationReport;
use crate::symfunc::{jack, schur, SymPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_RANGE: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Largest supported degree bound and variable count.
pub const MAX_D: usize = 8;
pub const MAX_N: usize = 4;

/// Overrides the directory that relative `-o` paths resolve against.
pub const OUT_DIR_ENV: &str = "JACKPOS_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "jackpos", version, about = "Exact Jack, interpolation and binomial computations over Q(t)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a single object.
    Compute(ComputeArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Export the binomial coefficient table.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    Schur,
    Jack,
    Interp,
    Binomial,
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
pub struct ComputeArgs {
    pub kind: ComputeKind,
    /// Partition for schur, jack and interp, e.g. `3,2`.
    #[arg(long, allow_hyphen_values = true)]
    pub shape: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(short = 'n', default_value_t = 2)]
    pub n: usize,
    /// Monic instead of unital interpolation polynomial.
    #[arg(long)]
    pub monic: bool,
    /// Interpolation polynomial from the tableau sum instead of the linear solve.
    #[arg(long)]
    pub tableau: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Thm1,
    Thm2,
    ExtraVanishing,
    Positivity,
    BinomialFormula,
    Powersum,
    Cgs,
    Kt,
    CorKt,
    ConjCgs,
    ConjKt,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    pub claim: Claim,
    #[arg(short = 'd', default_value_t = 4)]
    pub d: usize,
    #[arg(short = 'n', default_value_t = 2)]
    pub n: usize,
    /// Comma-separated parameter values; `inf` allowed.
    #[arg(long, default_value = "0,1/2,1,2,inf")]
    pub tau: String,
    /// Comma-separated nonnegative grid coordinates.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub serial: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct TableArgs {
    #[arg(short = 'd')]
    pub d: usize,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Range(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_MALFORMED,
            Failure::Range(_) => EXIT_RANGE,
            Failure::Io(_) => EXIT_IO,
            Failure::Lib(e) => match e {
                Error::InvalidPartition(_) | Error::Parse(_) => EXIT_MALFORMED,
                Error::TooLong { .. } | Error::UnsupportedRange(_) => EXIT_RANGE,
                _ => EXIT_RANGE,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Usage(m) | Failure::Range(m) | Failure::Io(m) => m.clone(),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// to the given sinks.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a),
        Command::Verify(a) => verify(&a),
        Command::Table(a) => table(&a),
    };
    match result {
        Ok((text, code)) => match out.write_all(text.as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_IO
            }
        },
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

fn partition_arg(name: &str, v: &Option<String>) -> Res<Partition> {
    let s = v.as_deref().ok_or_else(|| Failure::Usage(format!("--{name} is required")))?;
    Ok(s.parse::<Partition>()?)
}

fn check_range(d: usize, n: usize) -> Res<()> {
    if d > MAX_D || n > MAX_N || n == 0 {
        return Err(Failure::Range(format!(
            "bounds d={d}, n={n} outside the supported range d <= {MAX_D}, 1 <= n <= {MAX_N}"
        )));
    }
    Ok(())
}

fn sympoly_out(p: &SymPoly, format: Format) -> Res<String> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(p).map_err(|e| Failure::Io(e.to_string()))?),
        Format::Csv => {
            let mut s = String::from("partition,num,den\n");
            for (k, c) in p.coeffs() {
                let (num, den) = render_num_den(c);
                writeln!(s, "{k},{num},{den}").unwrap();
            }
            s
        }
    })
}

fn compute(a: &ComputeArgs) -> Res<(String, i32)> {
    check_range(0, a.n)?;
    let text = match a.kind {
        ComputeKind::Schur => sympoly_out(&schur(&partition_arg("shape", &a.shape)?, a.n)?, a.format)?,
        ComputeKind::Jack => sympoly_out(&jack(&partition_arg("shape", &a.shape)?, a.n)?, a.format)?,
        ComputeKind::Interp => {
            let mu = partition_arg("shape", &a.shape)?;
            if mu.size() > MAX_D {
                return Err(Failure::Range(format!("|{mu}| exceeds {MAX_D}")));
            }
            let p = if a.tableau {
                let monic = interp_tableau(&mu, a.n)?;
                if a.monic {
                    monic
                } else {
                    interp_linear(&mu, a.n, Normalization::Unital)?
                }
            } else {
                let norm = if a.monic { Normalization::Monic } else { Normalization::Unital };
                interp_linear(&mu, a.n, norm)?
            };
            sympoly_out(&p.poly, a.format)?
        }
        ComputeKind::Binomial => {
            let lambda = partition_arg("lambda", &a.lambda)?;
            let mu = partition_arg("mu", &a.mu)?;
            if lambda.size().max(mu.size()) > MAX_D {
                return Err(Failure::Range(format!("degree exceeds {MAX_D}")));
            }
            let v = binomial(&lambda, &mu, a.n)?;
            match a.format {
                Format::Text => format!("{}\n", render_ratfun(&v)),
                Format::Json => format!(
                    "{}\n",
                    json!({"lambda": lambda, "mu": mu, "n": a.n, "value": render_ratfun(&v)})
                ),
                Format::Csv => {
                    let (num, den) = render_num_den(&v);
                    format!("lambda,nu,num,den\n{lambda},{mu},{num},{den}\n")
                }
            }
        }
        ComputeKind::Expansion => {
            let lambda = partition_arg("lambda", &a.lambda)?;
            let mu = a.mu.as_ref().map(|_| partition_arg("mu", &a.mu)).transpose()?;
            let coeffs = match &mu {
                Some(mu) => difference_expansion(&lambda, mu, a.n)?,
                None => shifted_expansion(&lambda, a.n)?.coeffs,
            };
            match a.format {
                Format::Text => {
                    let mut s = String::new();
                    for (nu, c) in coeffs.iter().rev() {
                        writeln!(s, "{nu}: {}", render_ratfun(c)).unwrap();
                    }
                    s
                }
                Format::Json => {
                    let terms: Vec<_> = coeffs
                        .iter()
                        .rev()
                        .map(|(nu, c)| json!({"partition": nu, "coeff": render_ratfun(c)}))
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&json!({"lambda": lambda, "mu": mu, "n": a.n, "terms": terms})).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("nu,num,den\n");
                    for (nu, c) in coeffs.iter().rev() {
                        let (num, den) = render_num_den(c);
                        writeln!(s, "{nu},{num},{den}").unwrap();
                    }
                    s
                }
            }
        }
    };
    Ok((text, EXIT_OK))
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> crate::Result<T>) -> Res<Vec<T>> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(|p| Ok(f(p.trim())?)).collect()
}

fn grid_values(spec: &Option<String>) -> Res<Vec<Rational>> {
    let values = match spec {
        Some(s) => parse_list(s, parse_rational)?,
        None => DEFAULT_GRID_VALUES.iter().map(|s| parse_rational(s).unwrap()).collect(),
    };
    if values.is_empty() || values.iter().any(|v| v < &Rational::from_integer(0.into())) {
        return Err(Failure::Usage("grid values must be nonnegative and nonempty".into()));
    }
    Ok(values)
}

fn run_claim(a: &VerifyArgs) -> Res<VerificationReport> {
    let (d, n) = (a.d, a.n);
    Ok(match a.claim {
        Claim::Thm1 => verify_thm1(d, n)?,
        Claim::Thm2 => monotonicity_check(d, n)?,
        Claim::ExtraVanishing => extra_vanishing_check(d, n)?,
        Claim::Positivity => positivity_check(d, n)?,
        Claim::BinomialFormula => verify_binomial_formula(d, n)?,
        Claim::Powersum => verify_powersum(d, n)?,
        Claim::Cgs => verify_cgs(d, n, &grid_values(&a.grid)?)?,
        Claim::Kt => verify_kt(d, n, &grid_values(&a.grid)?)?,
        Claim::CorKt => verify_cor_kt(d, n, &grid_values(&a.grid)?)?,
        Claim::ConjCgs | Claim::ConjKt => {
            let taus = parse_list(&a.tau, |s| s.parse::<TauValue>())?;
            let values = grid_values(&a.grid)?;
            if a.claim == Claim::ConjCgs {
                verify_conj_cgs(d, n, &taus, &values)?
            } else {
                verify_conj_kt(d, n, &taus, &values)?
            }
        }
    })
}

/// Deterministic text rendering (wall time omitted).
pub fn render_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let status = if r.pass { "pass" } else { "FAIL" };
    let mut bounds = Vec::new();
    if let Some(d) = r.bounds.d {
        bounds.push(format!("d={d}"));
    }
    if let Some(n) = r.bounds.n {
        bounds.push(format!("n={n}"));
    }
    if !r.bounds.tau.is_empty() {
        bounds.push(format!("tau={}", r.bounds.tau.join(",")));
    }
    if let Some(g) = &r.bounds.grid {
        bounds.push(format!("grid={g}"));
    }
    writeln!(s, "{}: {status} ({})", r.claim, bounds.join(", ")).unwrap();
    for note in &r.notes {
        writeln!(s, "  note: {note}").unwrap();
    }
    for (k, v) in &r.stats {
        writeln!(s, "  {k}: {v}").unwrap();
    }
    for c in &r.counterexamples {
        writeln!(s, "  counterexample: {c}").unwrap();
    }
    s
}

fn resolve_output(path: &PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.clone(),
    }
}

fn emit(text: String, output: &Option<PathBuf>) -> Res<String> {
    match output {
        None => Ok(text),
        Some(p) => {
            let path = resolve_output(p);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
    }
}

fn verify(a: &VerifyArgs) -> Res<(String, i32)> {
    check_range(a.d, a.n)?;
    let threads = if a.serial { Some(1) } else { a.threads };
    let report = match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Failure::Io(e.to_string()))?;
            pool.install(|| run_claim(a))?
        }
        None => run_claim(a)?,
    };
    let text = match a.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
        _ => render_report(&report),
    };
    let code = if report.pass { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let summary = if a.output.is_some() { render_report(&report) } else { String::new() };
    let printed = emit(text, &a.output)?;
    Ok((printed + &summary, code))
}

fn table(a: &TableArgs) -> Res<(String, i32)> {
    check_range(a.d, a.n)?;
    let t = BinomialTable::compute(a.d, a.n)?;
    let text = match a.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&t.to_json()).unwrap()),
        _ => t.to_csv(),
    };
    Ok((emit(text, &a.output)?, EXIT_OK))
}
