//! Batch command-line front end.
//!
//! Data goes to `out`, diagnostics to `err`. Exit status is 0 on success,
//! 1 for domain errors (malformed input, size guards, sizes below 4) and 2
//! for usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::dps::{dps_sample, DpsConfig};
use crate::enumeration::{
    census_text, enumerate_difficult_pairs, enumerate_trees, parse_pair_lines,
};
use crate::error::Error;
use crate::growth::growth_neighbors;
use crate::rng::Rng;
use crate::rotation::{
    difficulty_witness, exact_distance_bounded, reduce, rotation_neighbors, TreePair,
    DEFAULT_DISTANCE_GUARD,
};
use crate::stats::coverage_report;
use crate::word::TreeWord;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(
    name = "dps",
    about = "Sample and analyse difficult pairs of binary trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample difficult pairs; draw i uses seed S + i.
    Sample {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Words)]
        format: SampleFormat,
    },
    /// Report whether pairs are difficult, or a witness that they are not.
    Check {
        pair: Option<String>,
        #[arg(long, conflicts_with = "pair")]
        file: Option<PathBuf>,
    },
    /// Exact rotation distance by bidirectional search.
    Distance {
        pair: String,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_GUARD)]
        max_size: usize,
    },
    /// Apply the reduction rules and list the difficult components.
    Reduce { pair: String },
    /// List all trees (or difficult pairs) of a size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        difficult: bool,
    },
    /// List rotation or growth neighbors of a tree.
    Neighbors {
        word: String,
        #[command(flatten)]
        kind: NeighborKind,
    },
    /// Coverage and dispersion of DPS samples.
    Coverage {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct NeighborKind {
    #[arg(long)]
    rotation: bool,
    #[arg(long)]
    growth: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleFormat {
    Words,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct SampleRecord<'a> {
    n: usize,
    s: &'a TreeWord,
    t: &'a TreeWord,
    seed: u64,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Sample {
            size,
            count,
            seed,
            format,
        } => {
            DpsConfig::new(size, seed)?;
            let pairs = (0..count as u64)
                .into_par_iter()
                .map(|i| {
                    let seed = seed.wrapping_add(i);
                    dps_sample(DpsConfig { n: size, seed }).map(|p| (seed, p))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            for (seed, pair) in &pairs {
                match format {
                    SampleFormat::Words => writeln!(out, "{pair}")?,
                    SampleFormat::Jsonl => {
                        let record = SampleRecord {
                            n: size,
                            s: &pair.s,
                            t: &pair.t,
                            seed: *seed,
                        };
                        let line = serde_json::to_string(&record).expect("record serializes");
                        writeln!(out, "{line}")?;
                    }
                }
            }
        }
        Command::Check { pair, file } => match (pair, file) {
            (Some(text), _) => {
                let pair = TreePair::parse(&text)?;
                writeln!(out, "{}", verdict(&pair))?;
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                for pair in parse_pair_lines(&text)? {
                    writeln!(out, "{pair}\t{}", verdict(&pair))?;
                }
            }
            (None, None) => {
                let text = std::io::read_to_string(std::io::stdin())?;
                for pair in parse_pair_lines(&text)? {
                    writeln!(out, "{pair}\t{}", verdict(&pair))?;
                }
            }
        },
        Command::Distance { pair, max_size } => {
            let pair = TreePair::parse(&pair)?;
            writeln!(out, "{}", exact_distance_bounded(&pair, max_size)?)?;
        }
        Command::Reduce { pair } => {
            let result = reduce(&TreePair::parse(&pair)?);
            writeln!(out, "forced_moves = {}", result.forced_moves)?;
            writeln!(out, "components = {}", result.components.len())?;
            for c in &result.components {
                writeln!(out, "{c}")?;
            }
        }
        Command::Enumerate { size, difficult } => {
            if difficult {
                let pairs = enumerate_difficult_pairs(size)?;
                write!(out, "{}", census_text(size, &pairs))?;
            } else {
                let trees = enumerate_trees(size)?;
                writeln!(out, "# n={} count={}", size, trees.len())?;
                for t in &trees {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Command::Neighbors { word, kind } => {
            let word = TreeWord::parse(&word)?;
            let mut neighbors = if kind.growth {
                growth_neighbors(&word)
            } else {
                rotation_neighbors(&word)
            };
            neighbors.sort();
            for n in &neighbors {
                writeln!(out, "{n}")?;
            }
        }
        Command::Coverage {
            size,
            samples,
            seed,
            format,
        } => {
            let report = coverage_report(size, samples, &mut Rng::new(seed))?;
            match format {
                ReportFormat::Text => write!(out, "{}", report.to_text())?,
                ReportFormat::Json => writeln!(out, "{}", report.to_json())?,
            }
        }
    }
    Ok(())
}

fn verdict(pair: &TreePair) -> String {
    match difficulty_witness(pair) {
        None => "difficult".to_string(),
        Some(w) => format!("not difficult: {w}"),
    }
}
