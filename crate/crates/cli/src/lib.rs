//! The `sigma` command-line verifier.
//!
//! Each subcommand calls exactly one certificate operation from
//! `sigma-core` and writes the resulting report. The exit code follows the
//! report status: 0 verified, 1 refuted, 3 evidence or unchecked, 2 for
//! usage and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigma_core::algebras::{
    centrality_check, evidence_search, inverse_identity_check, model_relations_check,
    remark38_consistency, Predicate, SearchConfig, TensorSpec,
};
use sigma_core::expr::parse_poly;
use sigma_core::groupfix::{
    basis_check, character_decomposition_check, commutation_check, cyclic_counterexample_check,
    paired_charpoly_check, sn_fixed_point_certificate, thm3_certificate,
    thm3a_root_condition_check, AbelianGroup, DEFAULT_TUPLE_CAP,
};
use sigma_core::octonion::{
    automorphism_check, character_table_check, composition_check, quadratic_identity_check,
    thm_oct_certificate, OctExpr, Octonion, OctonionSpec,
};
use sigma_core::symfun::{high_powers_check, table_deg};
use sigma_core::{Error, Format, VerificationReport};

#[derive(Parser, Debug)]
#[command(
    name = "sigma",
    version,
    about = "Exact verifier for characteristic-polynomial coefficient identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a single certificate.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        params: Params,
    },
    /// Reproduce the degree 5 or degree 6 nonexistence table.
    Table {
        #[arg(value_enum)]
        degree: TableDegree,
    },
    /// Seeded randomized search.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableDegree {
    Deg5,
    Deg6,
}

#[derive(Subcommand, Debug)]
enum SearchKind {
    /// Look for an element satisfying a predicate on its σ-coefficients.
    Counterexample {
        /// Algebra, e.g. `symbol 2 z w` or `symbol 2 z1 w1, symbol 3 z2 w2`.
        #[arg(long)]
        algebra: String,
        /// `trace0-norm1` or `sigma<i>-zero`.
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        degree_bound: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Charpoly,
    Commutation,
    Basis,
    Thm3,
    Thm3a,
    Thm1,
    Characters,
    CyclicRemark,
    HighPowers,
    Octonion,
    Automorphism,
    OctCharacters,
    Quadratic,
    Composition,
    Relations,
    Centrality,
    InverseIdentity,
    Remark38,
}

#[derive(Args, Debug, Default)]
struct Params {
    /// Abelian group as a list of cyclic orders, e.g. `2x3`.
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    n1: Option<u32>,
    #[arg(long)]
    n2: Option<u32>,
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    u: Option<u64>,
    #[arg(long)]
    n: Option<u32>,
    /// Polynomial, octonion expression or octonion literal, depending on the target.
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Skip the constant-term checks of the high-powers certificate.
    #[arg(long)]
    no_c_term: bool,
}

/// A failure before any report exists.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Core { err: Error, source: Option<String> },
    Io(std::io::Error),
}

impl CliError {
    fn render(&self) -> String {
        match self {
            CliError::Usage(msg) => format!("error: {msg}\n"),
            CliError::Io(e) => format!("error: {e}\n"),
            CliError::Core { err, source } => match (err, source) {
                (Error::Parse { pos, .. }, Some(src)) => {
                    let col = src.char_indices().take_while(|(b, _)| b < pos).count();
                    format!("error: {err}\n  {src}\n  {}^\n", " ".repeat(col))
                }
                _ => format!("error: {err}\n"),
            },
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core { err, source: None }
    }
}

/// Attaches the offending input so parse errors can point into it.
fn parsed<T>(src: &str, r: sigma_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|err| CliError::Core {
        err,
        source: Some(src.to_string()),
    })
}

fn need<T: Copy>(v: Option<T>, flag: &str, target: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("verify {target} requires --{flag}")))
}

fn need_str<'a>(v: &'a Option<String>, flag: &str, target: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::Usage(format!("verify {target} requires --{flag}")))
}

fn group_arg(p: &Params, target: &str) -> Result<AbelianGroup, CliError> {
    let src = need_str(&p.group, "group", target)?;
    parsed(src, AbelianGroup::parse(src))
}

fn algebra_arg(src: &str) -> Result<TensorSpec, CliError> {
    parsed(src, TensorSpec::parse(src))
}

fn verify(target: Target, p: &Params) -> Result<VerificationReport, CliError> {
    let name = target
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let name = name.as_str();
    let report = match target {
        Target::Charpoly => paired_charpoly_check(&group_arg(p, name)?),
        Target::Commutation => commutation_check(&group_arg(p, name)?),
        Target::Basis => basis_check(&group_arg(p, name)?),
        Target::Thm3 => {
            let g = group_arg(p, name)?;
            thm3_certificate(
                &g,
                need(p.m, "m", name)?,
                need(p.i, "i", name)?,
                need(p.j, "j", name)?,
            )?
        }
        Target::Thm3a => {
            let g = group_arg(p, name)?;
            let src = need_str(&p.poly, "poly", name)?;
            let poly = parsed(src, parse_poly(src))?;
            thm3a_root_condition_check(
                &poly,
                need(p.i, "i", name)?,
                need(p.j, "j", name)?,
                need(p.u, "u", name)?,
                &g,
                DEFAULT_TUPLE_CAP,
            )?
        }
        Target::Thm1 => sn_fixed_point_certificate(
            need(p.n1, "n1", name)?,
            need(p.n2, "n2", name)?,
            need(p.m1, "m1", name)?,
            need(p.m2, "m2", name)?,
        )?,
        Target::Characters => {
            character_decomposition_check(need(p.n1, "n1", name)?, need(p.n2, "n2", name)?)?
        }
        Target::CyclicRemark => cyclic_counterexample_check(),
        Target::HighPowers => high_powers_check(need(p.n, "n", name)?, !p.no_c_term)?,
        Target::Octonion => {
            let m = need(p.m, "m", name)? as usize;
            let src = need_str(&p.poly, "poly", name)?;
            let q = parsed(src, OctExpr::parse(src, m))?;
            thm_oct_certificate(m, need(p.s, "s", name)?, &q)?
        }
        Target::Automorphism => automorphism_check(),
        Target::OctCharacters => character_table_check(),
        Target::Quadratic => {
            let x = match &p.poly {
                Some(src) => parsed(src, Octonion::parse(src))?,
                None => Octonion::generic("x"),
            };
            quadratic_identity_check(&OctonionSpec::generic(), &x)?
        }
        Target::Composition => composition_check(
            &OctonionSpec::generic(),
            p.trials.unwrap_or(50),
            need(p.seed, "seed", name)?,
        )?,
        Target::Relations => {
            model_relations_check(&algebra_arg(need_str(&p.algebra, "algebra", name)?)?)
        }
        Target::Centrality => centrality_check(
            &algebra_arg(need_str(&p.algebra, "algebra", name)?)?,
            p.trials.unwrap_or(50),
            need(p.seed, "seed", name)?,
        )?,
        Target::InverseIdentity | Target::Remark38 => {
            let n = need(p.n, "n", name)? as usize;
            let src = need_str(&p.poly, "poly", name)?;
            let g = parsed(src, parse_poly(src))?;
            if target == Target::InverseIdentity {
                inverse_identity_check(n, &g)?
            } else {
                remark38_consistency(n, &g)?
            }
        }
    };
    Ok(report)
}

fn execute(cmd: &Command) -> Result<VerificationReport, CliError> {
    match cmd {
        Command::Verify { target, params } => verify(*target, params),
        Command::Table { degree } => Ok(table_deg(match degree {
            TableDegree::Deg5 => 5,
            TableDegree::Deg6 => 6,
        })?),
        Command::Search {
            kind:
                SearchKind::Counterexample {
                    algebra,
                    predicate,
                    trials,
                    seed,
                    degree_bound,
                },
        } => {
            let spec = algebra_arg(algebra)?;
            let pred: Predicate = parsed(predicate, predicate.parse())?;
            let config = SearchConfig::new(*trials, *seed, *degree_bound);
            Ok(evidence_search(&spec, pred, &config)?)
        }
    }
}

fn write_report(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(CliError::Io)?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n").map_err(CliError::Io)?;
            }
            Ok(())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let outcome = execute(&cli.command).and_then(|mut report| {
        report.duration_ms = start.elapsed().as_millis() as u64;
        write_report(&report.emit(cli.format.into()), cli.out.as_ref())?;
        Ok(report.status.exit_code())
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprint!("{}", e.render());
            2
        }
    }
}
