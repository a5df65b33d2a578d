//! Command-line front end: `analyze`, `square`, `sweep` and `verify`.
//!
//! Exit codes: 0 success, 1 a check failed or an internal inconsistency surfaced,
//! 2 invalid input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::constacyclic::{dual_defining_set, square_defining_set, ConstaSpec, ExplicitSpec, Family, FamilySpec};
use crate::detector::{detect, sweep, DetectReport, SweepOptions};
use crate::error::Error;
use crate::gf::build_field;
use crate::verify::{self, SquareFormulaConfig, SuiteReport};

#[derive(Debug, Parser)]
#[command(name = "cgrs", version, about = "Constacyclic codes, Schur squares and GRS detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code, print its defining sets and square dimension, and run the detector.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the square dimension from the defining set with the direct rank.
    Square {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Census of all Galois-stable defining sets of one length over one field.
    Sweep {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long)]
        n: usize,
        /// Comma-separated exponents t for lambda = w^t; default all classes.
        #[arg(long = "lambda-exp", value_delimiter = ',')]
        lambda_exp: Option<Vec<u64>>,
        /// Include every 0 < k < n instead of 2 < k < n - 2.
        #[arg(long)]
        full_k: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a property suite.
    Verify {
        #[command(flatten)]
        args: VerifyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Option<Suite>,
    #[arg(long = "suite", value_enum)]
    pub suite_flag: Option<Suite>,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// Largest splitting field order for square-formula and duality.
    #[arg(long, default_value_t = 4096)]
    pub max_field: u64,
    /// Prime for vosper and cauchy-davenport, or field characteristic for prime-iff.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    /// Code length for prime-iff.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "lambda-exp", value_delimiter = ',')]
    pub lambda_exp: Option<Vec<u64>>,
    #[arg(long)]
    pub full_k: bool,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Examples,
    SquareFormula,
    Duality,
    Vosper,
    CauchyDavenport,
    PrimeIff,
    Grs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Constacyclic spec as inline JSON or a path to a JSON file.
    #[arg(long, conflicts_with_all = ["p", "family"])]
    pub spec: Option<String>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub e: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "lambda-exp", allow_negative_numbers = true)]
    pub lambda_exp: Option<i64>,
    /// Defining set, comma separated; negative entries are reduced mod n.
    #[arg(long = "I", allow_hyphen_values = true)]
    pub defining_set: Option<String>,
    #[arg(long, conflicts_with = "p")]
    pub family: Option<String>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub s: Option<usize>,
}

/// Why a command failed, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Check(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Inconsistent(_) => Failure::Check(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Output of `analyze`; accepted back as `--spec` input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Analysis {
    pub spec: ConstaSpec,
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub lambda_exp: u64,
    pub splitting_degree: u32,
    pub splitting_field: String,
    pub beta: String,
    pub alpha: String,
    pub generator_poly: Vec<String>,
    pub defining_set: Vec<usize>,
    pub dual_defining_set: Vec<usize>,
    pub square_defining_set: Vec<usize>,
    pub dim_square: usize,
    pub report: DetectReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareSummary {
    pub spec: ConstaSpec,
    pub n: usize,
    pub k: usize,
    pub lambda_exp: u64,
    pub lambda_square_exp: u64,
    pub square_defining_set: Vec<usize>,
    pub dim_square_from_defining_set: usize,
    pub dim_square_by_rank: usize,
    pub square_codes_equal: bool,
}

impl CodeArgs {
    fn spec(&self) -> Result<ConstaSpec, Failure> {
        if let Some(raw) = &self.spec {
            return parse_spec_input(raw);
        }
        if let Some(fam) = &self.family {
            let family: Family = fam.parse()?;
            let q = self.q.ok_or_else(|| Failure::Input("--family needs --q".into()))?;
            let s = self.s.ok_or_else(|| Failure::Input("--family needs --s".into()))?;
            return Ok(ConstaSpec::Family(FamilySpec { family, q, s }));
        }
        let missing = |f: &str| Failure::Input(format!("missing --{f} (or give --family / --spec)"));
        let p = self.p.ok_or_else(|| missing("p"))?;
        let n = self.n.ok_or_else(|| missing("n"))?;
        Ok(ConstaSpec::Explicit(ExplicitSpec {
            p,
            e: self.e.unwrap_or(1),
            n,
            lambda_exp: self.lambda_exp.unwrap_or(0),
            defining_set: parse_set(self.defining_set.as_deref().unwrap_or(""))?,
        }))
    }
}

fn parse_set(raw: &str) -> Result<Vec<i64>, Failure> {
    raw.trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Input(format!("bad defining set entry {t:?}"))))
        .collect()
}

/// Accepts a spec, or a full `analyze` JSON output, inline or from a file.
pub fn parse_spec_input(raw: &str) -> Result<ConstaSpec, Failure> {
    let text = if raw.trim_start().starts_with('{') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw).map_err(|e| Failure::Input(format!("cannot read {raw}: {e}")))?
    };
    if let Ok(spec) = serde_json::from_str::<ConstaSpec>(&text) {
        return Ok(spec);
    }
    match serde_json::from_str::<Analysis>(&text) {
        Ok(a) => Ok(a.spec),
        Err(e) => Err(Failure::Input(format!("invalid spec JSON: {e}"))),
    }
}

pub fn analyze(spec: &ConstaSpec) -> Result<Analysis, Failure> {
    let spec = spec.normalized();
    let code = spec.build()?;
    let report = detect(&code)?;
    let split = code.split();
    let set = code.defining_set();
    Ok(Analysis {
        field: code.q_field().id().to_string(),
        n: code.n(),
        k: code.dim(),
        lambda_exp: split.lambda_exp(),
        splitting_degree: split.degree(),
        splitting_field: split.big_field().id().to_string(),
        beta: split.beta().to_string(),
        alpha: split.alpha().to_string(),
        generator_poly: code.generator_poly().coeff_elems().iter().map(|c| c.to_string()).collect(),
        defining_set: set.members().to_vec(),
        dual_defining_set: dual_defining_set(set).members().to_vec(),
        square_defining_set: square_defining_set(set).members().to_vec(),
        dim_square: report.dim_square,
        report,
        spec,
    })
}

pub fn square(spec: &ConstaSpec) -> Result<SquareSummary, Failure> {
    let spec = spec.normalized();
    let code = spec.build()?;
    let q1 = code.q_field().order() as u64 - 1;
    let lambda_exp = code.split().lambda_exp();
    let sq_set = square_defining_set(code.defining_set());
    let by_rank = code.code().square().dim();
    let sq_code = code.square_code()?;
    let square_codes_equal = sq_code.code() == &code.code().square();
    Ok(SquareSummary {
        n: code.n(),
        k: code.dim(),
        lambda_exp,
        lambda_square_exp: (2 * lambda_exp) % q1.max(1),
        dim_square_from_defining_set: code.n() - sq_set.len(),
        square_defining_set: sq_set.members().to_vec(),
        dim_square_by_rank: by_rank,
        square_codes_equal,
        spec,
    })
}

fn fmt_set(members: &[usize]) -> String {
    let parts: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn analysis_text(a: &Analysis) -> String {
    let mut s = String::new();
    let r = &a.report;
    let _ = writeln!(s, "code:            [{}, {}] over {}, lambda = w^{}", a.n, a.k, a.field, a.lambda_exp);
    let _ = writeln!(s, "splitting field: {} (d = {}), beta = {}, alpha = {}", a.splitting_field, a.splitting_degree, a.beta, a.alpha);
    let _ = writeln!(s, "g(x):            [{}]", a.generator_poly.join(", "));
    let _ = writeln!(s, "I:               {}", fmt_set(&a.defining_set));
    let _ = writeln!(s, "-I^c (dual):     {}", fmt_set(&a.dual_defining_set));
    let _ = writeln!(s, "(I^c+I^c)^c:     {}", fmt_set(&a.square_defining_set));
    let _ = writeln!(s, "dim C^2:         {}", a.dim_square);
    let _ = writeln!(s, "dim (C^perp)^2:  {}", r.dual_dim_square);
    match &r.ap {
        Some(w) => {
            let inv = if r.ap_invertible.is_some() { "invertible" } else { "non-invertible" };
            let _ = writeln!(s, "AP:              yes, {w} ({inv} difference)");
        }
        None => {
            let _ = writeln!(s, "AP:              no");
        }
    }
    let _ = writeln!(s, "MDS witness:     {:?}", r.mds);
    let _ = writeln!(s, "verdict:         {}", r.verdict);
    for rule in &r.rules_fired {
        let _ = writeln!(s, "  {rule}: {}", rule.citation());
    }
    s
}

fn square_text(q: &SquareSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "code:                   [{}, {}], lambda = w^{}", q.n, q.k, q.lambda_exp);
    let _ = writeln!(s, "square constant:        lambda^2 = w^{}", q.lambda_square_exp);
    let _ = writeln!(s, "square defining set:    {}", fmt_set(&q.square_defining_set));
    let _ = writeln!(s, "dim C^2 (sumset):       {}", q.dim_square_from_defining_set);
    let _ = writeln!(s, "dim C^2 (rank):         {}", q.dim_square_by_rank);
    let _ = writeln!(s, "square codes equal:     {}", q.square_codes_equal);
    s
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "{status} {}: {} checks, {} failures", r.suite, r.checks, r.failures.len());
    for n in &r.notes {
        let _ = writeln!(s, "  {n}");
    }
    for f in r.failures.iter().take(20) {
        let _ = writeln!(s, "  failure: {f}");
    }
    if r.failures.len() > 20 {
        let _ = writeln!(s, "  ... {} more", r.failures.len() - 20);
    }
    s
}

fn emit(output: &OutputArgs, body: &[u8]) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body).and_then(|_| stdout.flush()).map_err(|e| Failure::Input(e.to_string()))
        }
    }
}

fn json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Input(format!("{cmd} has no CSV output; use --format text or json"))
}

fn run_verify(suite: Suite, a: &VerifyArgs) -> Result<SuiteReport, Failure> {
    let VerifyArgs { max_n, max_field, p, e, n, full_k, workers, seed, trials, .. } = *a;
    let lambda_exp = a.lambda_exp.clone();
    let opts = SweepOptions { full_k_range: full_k, workers };
    let rep = match suite {
        Suite::Examples => verify::examples()?,
        Suite::SquareFormula => verify::square_formula(&SquareFormulaConfig { max_n, max_field, workers })?,
        Suite::Duality => verify::duality(&SquareFormulaConfig { max_n, max_field, workers })?,
        Suite::Vosper => verify::vosper(&p.map(|p| vec![p as usize]).unwrap_or_else(|| vec![5, 7]))?,
        Suite::CauchyDavenport => verify::cauchy_davenport(&p.map(|p| vec![p as usize]).unwrap_or_else(|| vec![3, 5, 7]))?,
        Suite::PrimeIff => match (n, p) {
            (Some(n), Some(p)) => {
                let f = build_field(p, e)?;
                verify::prime_iff(n, &f, lambda_exp.as_deref(), &opts)?
            }
            (None, None) => {
                let mut all = SuiteReport { suite: "prime-iff".into(), ..SuiteReport::default() };
                for (n, p, e, lambdas) in [(5, 11, 1, None), (7, 2, 3, None), (7, 29, 1, Some(vec![0])), (11, 23, 1, Some(vec![0]))] {
                    let f = build_field(p, e)?;
                    let opts = SweepOptions { full_k_range: true, workers };
                    let r = verify::prime_iff(n, &f, lambdas.as_deref(), &opts)?;
                    all.checks += r.checks;
                    all.failures.extend(r.failures);
                    all.notes.extend(r.notes);
                }
                all
            }
            _ => return Err(Failure::Input("prime-iff needs both --n and --p, or neither".into())),
        },
        Suite::Grs => verify::random_grs(seed, trials)?,
    };
    Ok(rep)
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { code, output } => {
            let a = analyze(&code.spec()?)?;
            let body = match output.format {
                Format::Json => json(&a),
                Format::Text => analysis_text(&a).into_bytes(),
                Format::Csv => return Err(no_csv("analyze")),
            };
            emit(&output, &body)
        }
        Command::Square { code, output } => {
            let q = square(&code.spec()?)?;
            let body = match output.format {
                Format::Json => json(&q),
                Format::Text => square_text(&q).into_bytes(),
                Format::Csv => return Err(no_csv("square")),
            };
            emit(&output, &body)?;
            if q.dim_square_by_rank != q.dim_square_from_defining_set || !q.square_codes_equal {
                return Err(Failure::Check("square dimension from the defining set disagrees with the rank".into()));
            }
            Ok(())
        }
        Command::Sweep { p, e, n, lambda_exp, full_k, workers, output } => {
            let f = build_field(p, e)?;
            let opts = SweepOptions { full_k_range: full_k, workers };
            let census = sweep(n, &f, lambda_exp.as_deref(), &opts)?;
            let body = match output.format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    census.write_csv(&mut buf)?;
                    buf
                }
                Format::Json => json(&census),
                Format::Text => format!(
                    "n={} q={}: {} codes, {} MDS, {} GRS, {} AP, {} mismatches, {} errors, R2 fired {} ({} disagreements), {} unstable sets skipped\n",
                    census.n, census.q, census.total, census.mds, census.grs, census.ap, census.mismatches,
                    census.errors, census.r2_fired, census.r2_square_disagreements, census.skipped
                )
                .into_bytes(),
            };
            emit(&output, &body)?;
            if census.mismatches + census.errors + census.r2_square_disagreements > 0 {
                return Err(Failure::Check("sweep found mismatches".into()));
            }
            Ok(())
        }
        Command::Verify { args, output } => {
            let suite = match (args.suite, args.suite_flag) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Input("conflicting suite names".into())),
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => return Err(Failure::Input("missing suite name".into())),
            };
            if args.max_n == 0 || args.max_field < 2 || args.trials == 0 {
                return Err(Failure::Input("bounds must be positive".into()));
            }
            let rep = run_verify(suite, &args)?;
            let body = match output.format {
                Format::Json => json(&rep),
                Format::Text => suite_text(&rep).into_bytes(),
                Format::Csv => return Err(no_csv("verify")),
            };
            emit(&output, &body)?;
            if rep.passed() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} failures", rep.failures.len())))
            }
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(f) => {
            let msg = match &f {
                Failure::Input(m) | Failure::Check(m) => m,
            };
            eprintln!("error: {msg}");
            f.code()
        }
    }
}
