//! `hallq`: Hall numbers, Hall polynomials and Lie brackets from the command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hallq::hall::{HallConfig, HallEngine};
use hallq::hom::decompose;
use hallq::lie::{build_bracket_table_with, verify_lie_axioms};
use hallq::poly::{verify_prop_table_with, verify_thm_identities_with, DegreeBound, PolyEngine, Verdict, DEFAULT_PRIMES};
use hallq::{AlgebraContext, Error, IndecLabel, Multiset, Representation};

/// Exit codes.
const OK: u8 = 0;
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;
const CEILING: u8 = 4;
const BAD_FILE: u8 = 5;
const RELATION: u8 = 6;

#[derive(Parser)]
#[command(name = "hallq", version, about = "Hall algebra computations for the quiver 1 -> ... -> n with a loop a at n, a^2 = 0")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest total dimension of a module to enumerate [env: HALLQ_DIM_CEILING, default 12]
    #[arg(long, global = true)]
    dim_ceiling: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Log progress to stderr
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Latex,
}

#[derive(Args)]
struct PrimeArgs {
    /// Number of vertices
    #[arg(long)]
    n: usize,
    /// Comma-separated primes for interpolation
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Degree bound: `hom`, `total`, or a fixed number
    #[arg(long, default_value = "hom")]
    degree_bound: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposables with their dimension vectors
    IndecList {
        #[arg(long)]
        n: usize,
    },
    /// Hall number F^M_{X,Y} over F_p
    HallNumber {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        x: String,
        y: String,
        /// Label, multiset, or path to a representation JSON file
        m: String,
    },
    /// Hall polynomial of (X, Y, M) by interpolation
    HallPoly {
        #[command(flatten)]
        primes: PrimeArgs,
        x: String,
        y: String,
        m: String,
    },
    /// Reconcile every indecomposable triple with the closed-form table
    VerifyProp {
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Check the product expansions used in the existence proof at q = p
    VerifyIdentities {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Lie bracket table on the indecomposables
    LieTable {
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Check the bracket formulas, antisymmetry and Jacobi
    LieVerify {
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Krull-Schmidt decomposition of a representation JSON file
    Decompose { file: PathBuf },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimCeiling { .. } => CEILING,
            Error::Json(_) | Error::Shape(_) => BAD_FILE,
            Error::Relation => RELATION,
            Error::Invariant(_) | Error::Interpolation(_) | Error::Witness(_) => INTERNAL,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.global.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok((text, code)) => match emit(&cli.global, &text) {
            Ok(()) => ExitCode::from(code),
            Err(f) => fail(f),
        },
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("error: {}", f.message);
    ExitCode::from(f.code)
}

fn emit(global: &Global, text: &str) -> Result<(), Failure> {
    match &global.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| usage(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    rayon::ThreadPoolBuilder::new()
        .num_threads(g.threads)
        .build_global()
        .map_err(|e| usage(format!("thread pool: {e}")))?;
    let cfg = HallConfig {
        dim_ceiling: g.dim_ceiling.unwrap_or_else(hallq::hall::dim_ceiling_from_env),
        hom_filter: true,
    };
    if g.format == Format::Latex && !matches!(cli.command, Command::LieTable { .. }) {
        return Err(usage("latex output is only available for lie-table"));
    }
    match &cli.command {
        Command::IndecList { n } => indec_list(*n, g.format),
        Command::HallNumber { n, p, x, y, m } => hall_number(*n, *p, x, y, m, cfg),
        Command::HallPoly { primes, x, y, m } => hall_poly(primes, x, y, m, cfg),
        Command::VerifyProp { primes } => verify_prop(primes, cfg, g.format),
        Command::VerifyIdentities { n, p } => verify_identities(*n, *p, cfg, g.format),
        Command::LieTable { primes } => lie_table(primes, cfg, g.format),
        Command::LieVerify { primes } => lie_verify(primes, cfg, g.format),
        Command::Decompose { file } => decompose_file(file, g.format),
    }
}

fn parse_multiset(s: &str, n: usize) -> Result<Multiset, Failure> {
    let m: Multiset = s.parse()?;
    m.validate(n)?;
    Ok(m)
}

fn read_representation(path: &Path) -> Result<Representation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Representation::from_json(&text)?)
}

fn poly_engine(args: &PrimeArgs, cfg: HallConfig) -> Result<PolyEngine, Failure> {
    let bound = match args.degree_bound.as_str() {
        "hom" => DegreeBound::HomEstimate,
        "total" => DegreeBound::TotalDimension,
        k => DegreeBound::Fixed(
            k.parse()
                .map_err(|_| usage(format!("degree bound must be hom, total or a number, got {k}")))?,
        ),
    };
    let primes = if args.primes.is_empty() { DEFAULT_PRIMES.to_vec() } else { args.primes.clone() };
    Ok(PolyEngine::new(args.n, &primes, cfg, bound)?)
}

fn records_to_text(header: &str, rows: Vec<Vec<(&'static str, String)>>, format: Format) -> String {
    match format {
        Format::Json => {
            let arr: Vec<Value> = rows
                .into_iter()
                .map(|r| Value::Object(r.into_iter().map(|(k, v)| (k.to_string(), Value::String(v))).collect::<Map<_, _>>()))
                .collect();
            serde_json::to_string_pretty(&arr).expect("strings serialize") + "\n"
        }
        _ => {
            let mut s = format!("{header}\n");
            for r in rows {
                s.push_str(&r.into_iter().map(|(_, v)| v).collect::<Vec<_>>().join("\t"));
                s.push('\n');
            }
            s
        }
    }
}

fn indec_list(n: usize, format: Format) -> Outcome {
    AlgebraContext::new(n, 2)?;
    let rows = IndecLabel::all(n)
        .into_iter()
        .map(|l| {
            let dims: Vec<String> = l.dims(n).iter().map(|d| d.to_string()).collect();
            vec![("label", l.to_string()), ("dims", dims.join(","))]
        })
        .collect();
    Ok((records_to_text("label\tdims", rows, format), OK))
}

fn hall_number(n: usize, p: u64, x: &str, y: &str, m: &str, cfg: HallConfig) -> Outcome {
    let ctx = AlgebraContext::new(n, p)?;
    let engine = HallEngine::new(ctx, cfg)?;
    let (x, y) = (parse_multiset(x, n)?, parse_multiset(y, n)?);
    let path = Path::new(m);
    let value = if path.is_file() {
        let rep = read_representation(path)?;
        if rep.ctx() != ctx {
            return Err(usage(format!("{m} is over n={}, p={}, not n={n}, p={p}", rep.ctx().n(), rep.ctx().p())));
        }
        let mset = decompose(&rep)?;
        engine.hall_number(&x, &y, &mset)?
    } else {
        engine.hall_number(&x, &y, &parse_multiset(m, n)?)?
    };
    Ok((format!("{value}\n"), OK))
}

fn hall_poly(args: &PrimeArgs, x: &str, y: &str, m: &str, cfg: HallConfig) -> Outcome {
    let engine = poly_engine(args, cfg)?;
    let n = args.n;
    let poly = engine.hall_poly(&parse_multiset(x, n)?, &parse_multiset(y, n)?, &parse_multiset(m, n)?)?;
    Ok((format!("{poly}\n"), OK))
}

fn verify_prop(args: &PrimeArgs, cfg: HallConfig, format: Format) -> Outcome {
    let engine = poly_engine(args, cfg)?;
    let rows = verify_prop_table_with(&engine)?;
    let code = if rows.iter().any(|r| r.verdict == Verdict::Mismatch) { MISMATCH } else { OK };
    let header = hallq::poly::ReconciliationReport::tsv_header();
    Ok((records_to_text(header, rows.iter().map(|r| r.record()).collect(), format), code))
}

fn verify_identities(n: usize, p: u64, cfg: HallConfig, format: Format) -> Outcome {
    let engine = HallEngine::new(AlgebraContext::new(n, p)?, cfg)?;
    let checks = verify_thm_identities_with(&engine)?;
    let code = if checks.iter().all(|c| c.holds) { OK } else { MISMATCH };
    let header = hallq::poly::IdentityCheck::tsv_header();
    Ok((records_to_text(header, checks.iter().map(|c| c.record()).collect(), format), code))
}

fn lie_table(args: &PrimeArgs, cfg: HallConfig, format: Format) -> Outcome {
    let engine = poly_engine(args, cfg)?;
    let report = build_bracket_table_with(&engine)?;
    let code = if report.mismatches.is_empty() { OK } else { MISMATCH };
    let text = match format {
        Format::Tsv => report.table.tsv(),
        Format::Json => report.table.json() + "\n",
        Format::Latex => report.table.latex(),
    };
    for m in &report.mismatches {
        log::warn!("[{}, {}] computed {} but the formula gives {}", m.x, m.y, m.computed, m.expected);
    }
    Ok((text, code))
}

fn lie_verify(args: &PrimeArgs, cfg: HallConfig, format: Format) -> Outcome {
    let engine = poly_engine(args, cfg)?;
    let report = build_bracket_table_with(&engine)?;
    let axioms = verify_lie_axioms(&report.table);
    let code = if report.mismatches.is_empty() && axioms.holds() { OK } else { MISMATCH };
    let text = match format {
        Format::Json => {
            let v = json!({
                "n": args.n,
                "pairs": axioms.pairs_checked,
                "triples": axioms.triples_checked,
                "formula_mismatches": report.mismatches,
                "axiom_violations": axioms.violations,
            });
            serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
        }
        _ => {
            let mut s = format!(
                "pairs\t{}\ntriples\t{}\nformula_mismatches\t{}\naxiom_violations\t{}\n",
                axioms.pairs_checked,
                axioms.triples_checked,
                report.mismatches.len(),
                axioms.violations.len()
            );
            for m in &report.mismatches {
                s.push_str(&format!("mismatch\t{}\t{}\t{}\t{}\n", m.x, m.y, m.computed, m.expected));
            }
            for v in &axioms.violations {
                s.push_str(&format!("violation\t{}\n", serde_json::to_string(v).expect("violation serializes")));
            }
            s
        }
    };
    Ok((text, code))
}

fn decompose_file(file: &Path, format: Format) -> Outcome {
    let rep = read_representation(file)?;
    let m = decompose(&rep)?;
    let text = match format {
        Format::Json => serde_json::to_string(&json!({ "decomposition": m.to_string() })).expect("string serializes") + "\n",
        _ => format!("{m}\n"),
    };
    Ok((text, OK))
}
