//! Thin argument-parsing shim over [`desargues::cli`]; all behavior,
//! including exit-code semantics, lives in the library.

use clap::{Parser, Subcommand};
use desargues::cli::{self, CommonOpts, Invocation};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "desargues",
    version,
    about = "Desargues configurations over GF(q): counting, verification, section/lift, and the PG(3,2) 2-block census"
)]
struct Args {
    /// Seed for the randomized property suite
    #[arg(long, global = true, default_value_t = cli::DEFAULT_SEED)]
    seed: u64,

    /// Worker threads for the exhaustive scans (0 = library default)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Omit elapsed-time fields for byte-reproducible output
    #[arg(long, global = true)]
    no_timing: bool,

    /// Field modulus override, e.g. "3^2/1,0,1" (degree-high coefficients)
    #[arg(long, global = true)]
    field_poly: Option<String>,

    /// key=value file overriding the exhaustive-scan envelopes
    #[arg(long, global = true)]
    limits: Option<PathBuf>,

    /// Write the emitted document here instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate closed-form counts
    Count {
        /// Quantity tag, e.g. TOTAL_PLANAR (omit for all seven)
        #[arg(long)]
        quantity: Option<String>,
        /// Field order
        #[arg(long)]
        q: Option<u64>,
        /// Evaluate at every prime power up to this bound instead
        #[arg(long)]
        q_max: Option<u64>,
        /// json or tsv
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run the exhaustive oracle for a quantity and compare with the formula
    Oracle {
        /// Quantity tag, e.g. TOTAL_PLANAR
        #[arg(long)]
        quantity: String,
        /// Field order
        #[arg(long)]
        q: u64,
        /// Fix the scanned point (coordinates like "0,1,2") for the
        /// through-point quantities
        #[arg(long)]
        through_point: Option<String>,
    },
    /// Run a named verification suite
    Verify {
        /// desargues-theorem, lift-uniqueness, blockline-injectivity,
        /// sc-bounds, or identities
        #[arg(long)]
        suite: String,
        /// Field order (for identities: the scan bound)
        #[arg(long)]
        q: u64,
        /// Sample count for the randomized suite
        #[arg(long, default_value_t = cli::DEFAULT_SAMPLES)]
        samples: u64,
    },
    /// Section a 5-compressor by a hyperplane
    Section {
        /// Field order
        #[arg(long)]
        q: u64,
        /// The five points, e.g. --compressor 0,0,0,1 1,0,0,1 ...
        #[arg(long, num_args = 5)]
        compressor: Vec<String>,
        /// Hyperplane as semicolon-separated basis rows
        #[arg(long)]
        hyperplane: String,
    },
    /// Lift a configuration document through an apex pair
    Lift {
        /// Path to a configuration JSON document
        #[arg(long)]
        config: PathBuf,
        /// Vertex pair label, e.g. 12
        #[arg(long)]
        vertex: String,
        /// Two apex points in the host space (default: a canonical pair)
        #[arg(long, num_args = 2)]
        apex: Option<Vec<String>>,
    },
    /// Summarize a configuration document
    Inspect {
        /// Path to a configuration JSON document
        #[arg(long)]
        config: PathBuf,
    },
    /// Classify all tangential 2-blocks of PG(3,2)
    Twoblock,
}

fn main() {
    let args = Args::parse();
    let common = CommonOpts {
        seed: args.seed,
        jobs: args.jobs,
        no_timing: args.no_timing,
        field_poly: args.field_poly,
        limits_file: args.limits,
    };
    let invocation = match args.command {
        Command::Count { quantity, q, q_max, format } => {
            Invocation::Count { quantity, q, q_max, format }
        }
        Command::Oracle { quantity, q, through_point } => {
            Invocation::Oracle { quantity, q, through_point }
        }
        Command::Verify { suite, q, samples } => Invocation::Verify { suite, q, samples },
        Command::Section { q, compressor, hyperplane } => {
            Invocation::Section { q, compressor, hyperplane }
        }
        Command::Lift { config, vertex, apex } => Invocation::Lift { config, vertex, apex },
        Command::Inspect { config } => Invocation::Inspect { config },
        Command::Twoblock => Invocation::TwoBlock,
    };
    let code = match args.output {
        Some(path) => match std::fs::File::create(&path) {
            Ok(mut file) => cli::run(invocation, &common, &mut file),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                2
            }
        },
        None => cli::run(invocation, &common, &mut std::io::stdout().lock()),
    };
    std::process::exit(code);
}
