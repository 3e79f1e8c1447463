//! `specred`: exact complementarity spectra, pineapple coincidence searches
//! and redundancy curves from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource guard exceeded.

mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use specred::coincidence::{enumerate_two_common, search_one_common_parallel, CoincidenceKind};
use specred::graph::graph6::parse_graph6;
use specred::graph::{build_pineapple, PineappleParams};
use specred::pineapple::{b_count, limit_curve, tail_start, FamilyRadii, PineappleSpectrum, Sweep};
use specred::report::{LimitRecord, PairRecord, PineappleRecord, SpectrumRecord};
use specred::spectrum::complementarity_spectrum;
use specred::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "specred",
    version,
    about = "Exact complementarity spectra and spectral redundancy"
)]
struct Cli {
    /// Decimal places shown next to exact values (display only).
    #[arg(long, global = true, default_value_t = 6)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complementarity spectrum of a graph6 graph or a pineapple P(α,β).
    Spectrum(SpectrumArgs),
    /// Catalogue pineapple pairs sharing eigenvalues, as JSON lines.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Redundancy along a row or column of the pineapple family, as CSV.
    Limits(LimitsArgs),
    /// Run a bundled check suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// graph6 string; read from --file or stdin when absent.
    graph6: Option<String>,
    #[arg(long, conflicts_with = "graph6")]
    file: Option<PathBuf>,
    #[arg(long, requires = "beta", conflicts_with_all = ["graph6", "file"])]
    alpha: Option<u64>,
    #[arg(long, requires = "alpha")]
    beta: Option<u64>,
    /// With --alpha/--beta: also enumerate subgraphs and compare.
    #[arg(long, requires = "alpha")]
    oracle: bool,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Pairs sharing their two largest cubic roots, 3 ≤ k ≤ max-k.
    TwoCommon {
        #[arg(long)]
        max_k: i64,
    },
    /// Pairs sharing exactly one integer root ρ ≤ max-rho.
    OneCommon {
        #[arg(long)]
        max_rho: i64,
        /// Worker threads; output does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, requires_all = ["beta_from", "beta_to"], conflicts_with = "beta")]
    alpha: Option<u64>,
    #[arg(long)]
    beta_from: Option<u64>,
    #[arg(long)]
    beta_to: Option<u64>,
    #[arg(long, requires_all = ["alpha_from", "alpha_to"])]
    beta: Option<u64>,
    #[arg(long)]
    alpha_from: Option<u64>,
    #[arg(long)]
    alpha_to: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Examples,
    Lemmas,
    Oracle,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Seed for the randomized lemma checks.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verification(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type Outcome = Result<(), Failure>;

#[derive(Serialize)]
struct Report<'a, I: Serialize, R: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    input: I,
    result: R,
}

fn emit<I: Serialize, R: Serialize>(
    out: &mut impl Write,
    command: &str,
    input: I,
    result: R,
) -> Outcome {
    let report = Report {
        tool: "specred",
        version: VERSION,
        command,
        input,
        result,
    };
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(())
}

fn read_graph6(args: &SpectrumArgs) -> Result<String, Failure> {
    let text = match (&args.graph6, &args.file) {
        (Some(g), _) => g.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .map(str::to_string)
        .ok_or_else(|| Failure::Usage("no graph6 input".into()))
}

#[derive(Serialize)]
struct PineappleResult {
    #[serde(flatten)]
    fast: PineappleRecord,
    collisions: Vec<[PineappleParams; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<SpectrumRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

fn cmd_spectrum(args: &SpectrumArgs, digits: usize, out: &mut impl Write) -> Outcome {
    if let (Some(alpha), Some(beta)) = (args.alpha, args.beta) {
        let p = PineappleParams::new(alpha, beta)?;
        let cache = FamilyRadii::for_params(p)?;
        let c = cache.c_count(p)?;
        let collisions = cache
            .collisions(p)?
            .into_iter()
            .map(|(a, b)| [a, b])
            .collect();
        let fast = PineappleRecord::new(&PineappleSpectrum::new(p), b_count(p), c, digits);
        let (oracle, agrees) = if args.oracle {
            let report = complementarity_spectrum(&build_pineapple(p)?)?;
            let agrees = report.b as u64 == b_count(p) && report.c as u64 == c;
            (Some(SpectrumRecord::new(&report, digits)), Some(agrees))
        } else {
            (None, None)
        };
        let result = PineappleResult {
            fast,
            collisions,
            oracle,
            oracle_agrees: agrees,
        };
        emit(out, "spectrum", p, result)?;
        if agrees == Some(false) {
            return Err(Failure::Verification(format!(
                "fast path and oracle disagree on {p}"
            )));
        }
        return Ok(());
    }
    let text = read_graph6(args)?;
    let g = parse_graph6(&text)?;
    let report = complementarity_spectrum(&g)?;
    #[derive(Serialize)]
    struct Input<'a> {
        graph6: &'a str,
    }
    emit(
        out,
        "spectrum",
        Input { graph6: &text },
        SpectrumRecord::new(&report, digits),
    )
}

fn cmd_search(cmd: &SearchCommand, digits: usize, out: &mut impl Write) -> Outcome {
    let pairs = match *cmd {
        SearchCommand::TwoCommon { max_k } => {
            if max_k < 3 {
                return Err(Failure::Usage(format!(
                    "--max-k must be at least 3, got {max_k}"
                )));
            }
            enumerate_two_common(max_k)?
        }
        SearchCommand::OneCommon { max_rho, jobs } => {
            if max_rho < 1 {
                return Err(Failure::Usage(format!(
                    "--max-rho must be at least 1, got {max_rho}"
                )));
            }
            let pairs = search_one_common_parallel(max_rho, jobs)?;
            for p in &pairs {
                if let specred::coincidence::Witness::OneCommon(w) = &p.witness {
                    if w.certificates.iter().any(|c| c.disagreement()) {
                        eprintln!(
                            "note: sign test and exact ordering disagree for {} / {}",
                            p.p1, p.p2
                        );
                    }
                }
            }
            pairs
        }
    };
    for pair in &pairs {
        debug_assert!(pair.sign_condition_holds());
        debug_assert_eq!(
            pair.kind == CoincidenceKind::TwoCommonLargest,
            pair.a_scaled == 0
        );
        serde_json::to_writer(&mut *out, &PairRecord::new(pair, digits))?;
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_limits(args: &LimitsArgs, digits: usize, out: &mut impl Write) -> Outcome {
    let sweep =
        match (args, args.alpha, args.beta) {
            (
                LimitsArgs {
                    beta_from: Some(from),
                    beta_to: Some(to),
                    ..
                },
                Some(alpha),
                None,
            ) => Sweep::Beta {
                alpha,
                from: *from,
                to: *to,
            },
            (
                LimitsArgs {
                    alpha_from: Some(from),
                    alpha_to: Some(to),
                    ..
                },
                None,
                Some(beta),
            ) => Sweep::Alpha {
                beta,
                from: *from,
                to: *to,
            },
            _ => return Err(Failure::Usage(
                "give --alpha with --beta-from/--beta-to, or --beta with --alpha-from/--alpha-to"
                    .into(),
            )),
        };
    let (from, to) = match sweep {
        Sweep::Beta { from, to, .. } | Sweep::Alpha { from, to, .. } => (from, to),
    };
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..{to}")));
    }
    let rows = limit_curve(sweep)?;
    let mut writer = csv::Writer::from_writer(&mut *out);
    for row in &rows {
        writer.serialize(LimitRecord::new(row, digits))?;
    }
    writer.flush()?;
    if let Some(start) = tail_start(&rows, sweep) {
        eprintln!("b - c constant from {start} to {to}");
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let checks = match args.suite {
        Suite::Examples => verify::examples(),
        Suite::Lemmas => verify::lemmas(args.seed),
        Suite::Oracle => verify::oracle(),
    };
    let mut first_failure = None;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", check.name, check.detail)?;
        if !check.passed && first_failure.is_none() {
            first_failure = Some(check.name.clone());
        }
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    match first_failure {
        Some(name) => Err(Failure::Verification(format!("check failed: {name}"))),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Spectrum(args) => cmd_spectrum(args, cli.digits, &mut out),
        Command::Search(cmd) => cmd_search(cmd, cli.digits, &mut out),
        Command::Limits(args) => cmd_limits(args, cli.digits, &mut out),
        Command::Verify(args) => cmd_verify(args, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_resource_guard() {
                ExitCode::from(3)
            } else if matches!(e, Error::Inconsistent(_)) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
