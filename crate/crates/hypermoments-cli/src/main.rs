//! Command-line front end for the hypermoments library: build family
//! instances, print exact moment tables and subhypergraph counts,
//! compare S-orders, enumerate bicyclic classes, and check the extremal
//! claims. Artifacts go to stdout; cost-guard usage goes to stderr.
//!
//! Exit status: 0 on success (for `verify`, only on MATCH with all
//! stated counts confirmed), 1 for an unconfirmed verification, 2 for
//! input errors, 3 for an exhausted cost guard.

mod io;
mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use verbs::Format;

#[derive(Parser)]
#[command(
    name = "hypermoments",
    version,
    about = "Exact spectral moments of uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance from a JSON description and print it.
    Build {
        /// Inline family JSON, e.g. '{"kind":"B","i":3,"k":3,"p":3,"q":3,"l":0}'.
        #[arg(long, value_name = "JSON")]
        family: String,
    },
    /// Print the exact moment table S_0..S_d of one hypergraph.
    Moments {
        /// Hypergraph JSON file.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Inline family JSON instead of a file.
        #[arg(long, value_name = "JSON", conflicts_with = "input")]
        family: Option<String>,
        /// Largest moment order to compute.
        #[arg(long, value_name = "D")]
        d_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Cost-guard budget override (else HYPERMOMENTS_MAX_UNITS, else default).
        #[arg(long, value_name = "UNITS")]
        max_units: Option<u64>,
    },
    /// Count pattern subhypergraphs in one hypergraph.
    Count {
        /// Hypergraph JSON file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Pattern selector NAME:T with NAME one of path, cycle, star, q, w;
        /// repeatable. Defaults to path:1..3, star:3, cycle:3.
        #[arg(long = "pattern", value_name = "NAME:T")]
        patterns: Vec<String>,
        /// Pattern given as a hypergraph JSON file; repeatable.
        #[arg(long = "pattern-file", value_name = "FILE")]
        pattern_files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare two hypergraphs in the S-order up to a cutoff.
    Compare {
        /// Hypergraph JSON file; give exactly twice.
        #[arg(long = "in", value_name = "FILE")]
        inputs: Vec<PathBuf>,
        /// Largest moment order to compare.
        #[arg(long, value_name = "D")]
        d_max: usize,
        /// Cost-guard budget override (else HYPERMOMENTS_MAX_UNITS, else default).
        #[arg(long, value_name = "UNITS")]
        max_units: Option<u64>,
    },
    /// List every linear bicyclic isomorphism class at the given size.
    Enumerate {
        /// Edge size.
        #[arg(long)]
        k: usize,
        /// Edge count.
        #[arg(long)]
        m: usize,
        /// Keep only classes with this girth.
        #[arg(long)]
        girth: Option<usize>,
        /// Also compute each class's moment table up to this order (JSON only).
        #[arg(long, value_name = "D")]
        d_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads for the per-class moment tables.
        #[arg(long, value_name = "N", default_value_t = 1)]
        threads: usize,
        /// Cost-guard budget override (else HYPERMOMENTS_MAX_UNITS, else default).
        #[arg(long, value_name = "UNITS")]
        max_units: Option<u64>,
    },
    /// Check one extremal claim by exhaustive enumeration.
    Verify {
        /// Claim token: T1 (last overall), T2 (first cycle join),
        /// T3 (first theta), or T4 (first overall).
        #[arg(long, value_name = "TOKEN")]
        theorem: String,
        /// Edge size.
        #[arg(long)]
        k: usize,
        /// Edge count.
        #[arg(long)]
        m: usize,
        /// Girth of the class.
        #[arg(long)]
        girth: usize,
        /// Largest moment order used to separate ties.
        #[arg(long, value_name = "D", default_value_t = 12)]
        d_max: usize,
        /// Cost-guard budget override (else HYPERMOMENTS_MAX_UNITS, else default).
        #[arg(long, value_name = "UNITS")]
        max_units: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build { family } => verbs::build(family),
        Command::Moments {
            input,
            family,
            d_max,
            format,
            max_units,
        } => verbs::moments(input, family, d_max, format, max_units),
        Command::Count {
            input,
            patterns,
            pattern_files,
            format,
        } => verbs::count(input, patterns, pattern_files, format),
        Command::Compare {
            inputs,
            d_max,
            max_units,
        } => verbs::compare(inputs, d_max, max_units),
        Command::Enumerate {
            k,
            m,
            girth,
            d_max,
            format,
            threads,
            max_units,
        } => verbs::enumerate(k, m, girth, d_max, format, threads, max_units),
        Command::Verify {
            theorem,
            k,
            m,
            girth,
            d_max,
            max_units,
        } => verbs::verify(theorem, k, m, girth, d_max, max_units),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
