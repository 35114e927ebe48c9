//! `kred`: command-line access to k-red spanning trees.
//!
//! Exit codes: 0 success or feasible, 1 infeasible k or failed verification,
//! 2 invalid input, 3 internal error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kred_bench::{parse_sizes, run_bench, BenchConfig, BenchError, KRule, DEFAULT_EXCHANGE_CAP};
use kred_core::io::{parse_graph, parse_tree_edges, verify_tree, write_graph, write_tree};
use kred_core::oracle::{enumerate_feasible, exchange_construct};
use kred_core::{
    binary_mst, construct_k_red, feasible_interval, gen_random, BicoloredGraph, EdgeColor, Error,
    Sense,
};

#[derive(Debug, Parser)]
#[command(
    name = "kred",
    version,
    about = "Spanning trees with exactly k red edges"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a spanning tree with exactly k red edges exists.
    Check {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Print the feasible range "k_min k_max".
    Range { file: PathBuf },
    /// Print a spanning tree with exactly k red edges, one "u v c" per line.
    Build {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Algo::Linear)]
        algo: Algo,
    },
    /// Minimum or maximum spanning tree under 0/1 weights.
    Mst {
        file: PathBuf,
        #[arg(long, value_enum)]
        sense: SenseArg,
        #[arg(long, value_enum, default_value_t = ColorArg::Red)]
        zero_color: ColorArg,
    },
    /// Check that a tree file is a spanning tree with exactly k red edges.
    Verify {
        file: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Write a random connected instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        red_prob: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Print every achievable red count by brute force (at most 24 edges).
    OracleFeasible { file: PathBuf },
    /// Time the linear and exchange constructions; writes CSV.
    Bench {
        /// Comma-separated n:m pairs, e.g. 1000:10000,10000:100000.
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0.5)]
        red_prob: f64,
        #[arg(long, value_enum, default_value_t = KRuleArg::Mid)]
        k_rule: KRuleArg,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EXCHANGE_CAP)]
        exchange_cap: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Linear,
    Exchange,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ColorArg {
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KRuleArg {
    Mid,
    Min,
    Max,
}

/// A message plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InfeasibleK { .. } => 1,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Core(e) => e.into(),
            BenchError::BadParams(_) => Failure::new(2, e.to_string()),
            _ => Failure::new(3, e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(3, e.to_string())
    }
}

fn open(path: &Path) -> Result<Box<dyn BufRead>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    File::open(path)
        .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<BicoloredGraph, Failure> {
    parse_graph(open(path)?).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::new(2, format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Negative k is never feasible.
fn nonnegative(k: i64) -> Option<usize> {
    usize::try_from(k).ok()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Check { file, k } => {
            let g = load(&file)?;
            let iv = feasible_interval(&g)?;
            let feasible = nonnegative(k).is_some_and(|k| iv.contains(k));
            writeln!(out, "{}", if feasible { "feasible" } else { "infeasible" })?;
            return Ok(if feasible { 0 } else { 1 });
        }
        Command::Range { file } => {
            let iv = feasible_interval(&load(&file)?)?;
            writeln!(out, "{} {}", iv.k_min, iv.k_max)?;
        }
        Command::Build { file, k, algo } => {
            let g = load(&file)?;
            let k =
                nonnegative(k).ok_or_else(|| Failure::new(1, format!("k = {k} is negative")))?;
            let tree = match algo {
                Algo::Linear => construct_k_red(&g, k)?,
                Algo::Exchange => exchange_construct(&g, k)?.0,
            };
            write_tree(&g, &tree.edge_ids, &mut out)?;
        }
        Command::Mst {
            file,
            sense,
            zero_color,
        } => {
            let g = load(&file)?;
            let sense = match sense {
                SenseArg::Min => Sense::Minimize,
                SenseArg::Max => Sense::Maximize,
            };
            let zero = match zero_color {
                ColorArg::Red => EdgeColor::Red,
                ColorArg::Blue => EdgeColor::Blue,
            };
            let (tree, weight) = binary_mst(&g, sense, zero)?;
            write_tree(&g, &tree.edge_ids, &mut out)?;
            writeln!(out, "# weight {weight}")?;
        }
        Command::Verify { file, tree, k } => {
            let g = load(&file)?;
            let ids = parse_tree_edges(&g, open(&tree)?)
                .map_err(|e| Failure::new(2, format!("{}: {e}", tree.display())))?;
            let Some(k) = nonnegative(k) else {
                writeln!(out, "invalid: WrongRedCount: k = {k} is negative")?;
                return Ok(1);
            };
            match verify_tree(&g, &ids, k) {
                Ok(()) => writeln!(out, "ok")?,
                Err(defect) => {
                    writeln!(out, "invalid: {defect}")?;
                    return Ok(1);
                }
            }
        }
        Command::Gen {
            n,
            m,
            red_prob,
            seed,
            output: path,
        } => {
            let g = gen_random(n, m, red_prob, seed)?;
            let mut w = output(path.as_deref())?;
            write_graph(&g, &mut w)?;
            w.flush()?;
        }
        Command::OracleFeasible { file } => {
            let set = enumerate_feasible(&load(&file)?)?;
            let line: Vec<String> = set.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Command::Bench {
            sizes,
            red_prob,
            k_rule,
            trials,
            seed,
            exchange_cap,
            output: path,
        } => {
            let cfg = BenchConfig {
                sizes: parse_sizes(&sizes)?,
                red_prob,
                k_rule: match k_rule {
                    KRuleArg::Mid => KRule::Midpoint,
                    KRuleArg::Min => KRule::KMin,
                    KRuleArg::Max => KRule::KMax,
                },
                trials,
                seed,
                exchange_cap,
            };
            let report = run_bench(&cfg)?;
            let mut w = output(path.as_deref())?;
            report.write_csv(&mut w)?;
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("kred: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
