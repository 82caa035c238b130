//! Command-line front end for `coverchain`.
//!
//! Subcommands: `chain` scores anchors read from TSV or generated from a
//! sequence file, `anchors` writes generated anchors as TSV, `verify` runs
//! the randomized self-check, `bench` measures scaling.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

pub mod bench;
pub mod report;
pub mod synth;
pub mod verify;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coverchain::{
    best_chain, chain_brute_strict, chain_brute_weak, chain_one_sided, chain_two_sided_strict,
    chain_two_sided_weak, io, kmer_matches, maximal_exact_matches, unit_matches, AnchorSet,
    ChainingResult,
};
use thiserror::Error;

pub use report::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Input(#[from] coverchain::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Mode {
    OneSided,
    Strict,
    Weak,
    BruteStrict,
    BruteWeak,
}

impl Mode {
    pub fn run(self, set: &AnchorSet) -> coverchain::Result<ChainingResult> {
        match self {
            Mode::OneSided => chain_one_sided(set),
            Mode::Strict => chain_two_sided_strict(set),
            Mode::Weak => chain_two_sided_weak(set),
            Mode::BruteStrict => Ok(chain_brute_strict(set)),
            Mode::BruteWeak => Ok(chain_brute_weak(set)),
        }
    }

    pub fn is_brute(self) -> bool {
        matches!(self, Mode::BruteStrict | Mode::BruteWeak)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "coverchain",
    version,
    about = "Chain overlapping anchors under symmetric ordered coverage"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score every anchor and report the best chain.
    Chain(ChainArgs),
    /// Generate anchors and write them as TSV.
    Anchors(AnchorsArgs),
    /// Run the randomized self-check.
    Verify(VerifyArgs),
    /// Measure running time over a doubling schedule of synthetic inputs.
    Bench(BenchArgs),
}

/// Where the anchors come from: exactly one of `--anchors` and `--seqs`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Anchor TSV file (`a b c d` per line, 1-based inclusive).
    #[arg(long, value_name = "PATH")]
    pub anchors: Option<PathBuf>,
    /// Sequence file: two plain lines (text, pattern) or two FASTA records.
    #[arg(long, value_name = "PATH")]
    pub seqs: Option<PathBuf>,
}

/// Anchor generator for `--seqs`; maximal exact matches of length 1 when none is given.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Generator {
    /// Use k-mer matches.
    #[arg(long, value_name = "INT")]
    pub k: Option<usize>,
    /// Use maximal exact matches of at least this length.
    #[arg(long, value_name = "INT")]
    pub minlen: Option<usize>,
    /// Use single-character matches.
    #[arg(long)]
    pub unit: bool,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long, value_enum, default_value_t = Mode::Strict)]
    pub mode: Mode,
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub generator: Generator,
    /// Append the anchors of the best chain.
    #[arg(long)]
    pub traceback: bool,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AnchorsArgs {
    /// Sequence file to generate anchors from.
    #[arg(long, value_name = "PATH", conflicts_with = "synthetic")]
    pub seqs: Option<PathBuf>,
    #[command(flatten)]
    pub generator: Generator,
    /// Emit this many synthetic equal-length anchors instead.
    #[arg(long, value_name = "N")]
    pub synthetic: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 30)]
    pub max_len: i64,
    #[arg(long, default_value_t = 16)]
    pub span_factor: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    #[arg(long, default_value_t = 60)]
    pub max_n: usize,
    #[arg(long, hide = true)]
    pub corrupt_comparator: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub bench_min_log2: u32,
    #[arg(long, default_value_t = 17)]
    pub bench_max_log2: u32,
    #[arg(long, default_value_t = 13)]
    pub brute_max_log2: u32,
    #[arg(long, default_value_t = 30)]
    pub max_len: i64,
    #[arg(long, default_value_t = 16)]
    pub span_factor: i64,
    /// Timing rounds over all sizes; the median per size is reported.
    #[arg(long, default_value_t = 7)]
    pub repetitions: usize,
    /// Shortest sample; faster sizes are averaged over several runs.
    #[arg(long, default_value_t = 0.05)]
    pub min_sample_seconds: f64,
    /// Solvers to time; all but brute-weak by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub mode: Vec<Mode>,
}

fn read(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn generate(path: &PathBuf, generator: &Generator) -> Result<AnchorSet, CliError> {
    let sp = io::parse_sequences(&read(path)?)?;
    Ok(match (generator.k, generator.minlen, generator.unit) {
        (Some(k), _, _) => kmer_matches(&sp, k)?,
        (_, _, true) => unit_matches(&sp),
        (_, minlen, _) => maximal_exact_matches(&sp, minlen.unwrap_or(1))?,
    })
}

fn load(args: &ChainArgs) -> Result<AnchorSet, CliError> {
    match (&args.source.anchors, &args.source.seqs) {
        (Some(path), _) => {
            let g = &args.generator;
            if g.k.is_some() || g.minlen.is_some() || g.unit {
                return Err(CliError::Usage(
                    "--k/--minlen/--unit only apply to --seqs".into(),
                ));
            }
            let bytes = read(path)?;
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Usage(format!("{}: not UTF-8", path.display())))?;
            Ok(io::read_anchor_set(&text)?)
        }
        (None, Some(path)) => generate(path, &args.generator),
        (None, None) => Err(CliError::Usage(
            "one of --anchors or --seqs is required".into(),
        )),
    }
}

pub fn cmd_chain(args: &ChainArgs) -> Result<String, CliError> {
    let set = load(args)?;
    let result = args.mode.run(&set)?;
    let chain = if args.traceback {
        Some(best_chain(&result, &set)?)
    } else {
        None
    };
    Ok(report::render(
        set.anchors(),
        &result,
        chain.as_ref(),
        args.format,
    ))
}

pub fn cmd_anchors(args: &AnchorsArgs) -> Result<String, CliError> {
    let set = match (&args.seqs, args.synthetic) {
        (Some(path), None) => generate(path, &args.generator)?,
        (None, Some(n)) => {
            synth::Workload::scaled(n, args.max_len, args.span_factor).generate(args.seed)
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --seqs or --synthetic".into(),
            ))
        }
    };
    Ok(io::write_anchors(set.anchors()))
}

pub fn cmd_verify(args: &VerifyArgs) -> verify::VerifyReport {
    verify::verify(&verify::VerifyOptions {
        instances: args.instances,
        seed: args.seed,
        max_n: args.max_n,
        corrupt_comparator: args.corrupt_comparator,
    })
}

pub fn cmd_bench(args: &BenchArgs) -> String {
    let defaults = bench::BenchOptions::default();
    let opts = bench::BenchOptions {
        seed: args.seed,
        min_log2: args.bench_min_log2,
        max_log2: args.bench_max_log2,
        brute_max_log2: args.brute_max_log2,
        max_len: args.max_len,
        span_factor: args.span_factor,
        repetitions: args.repetitions,
        min_sample_seconds: args.min_sample_seconds,
        modes: if args.mode.is_empty() {
            defaults.modes
        } else {
            args.mode.clone()
        },
    };
    bench::render(&bench::bench(&opts))
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(
                if e.use_stderr() {
                    err as &mut dyn Write
                } else {
                    out
                },
                "{}",
                e.render()
            );
            return code;
        }
    };
    let result = match &cli.command {
        Command::Chain(args) => cmd_chain(args),
        Command::Anchors(args) => cmd_anchors(args),
        Command::Bench(args) => Ok(cmd_bench(args)),
        Command::Verify(args) => {
            let report = cmd_verify(args);
            return match report.failure {
                None => {
                    let _ = writeln!(
                        out,
                        "verify: {} instances, {} checks passed",
                        report.instances, report.checks
                    );
                    0
                }
                Some(failure) => {
                    let _ = write!(err, "verify: FAILED\n{failure}");
                    2
                }
            };
        }
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
