//! `dlab` — a command-line laboratory for distinction of representations
//! in quadratic symmetric pairs: finite general-linear pairs with exact
//! character tables on one side, symbolic tame parameters on the other.
//!
//! Exit codes: 0 on success, 2 when a mathematical verification failed
//! (the artifact is still written), 1 for usage and resource errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use distinction_cli::commands::finite::MethodArg;
use distinction_cli::commands::tame::OrientArg;
use distinction_cli::commands::{self, Shared};
use distinction_cli::errors::{CliError, EXIT_MATH, EXIT_OK, EXIT_USAGE};
use distinction_cli::output::{CommandOutput, Format};

#[derive(Parser)]
#[command(
    name = "dlab",
    version,
    about = "Distinction laboratory for quadratic symmetric pairs",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Artifact format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the artifact to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Character-table cache directory (falls back to DLAB_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads for streamed scans.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Override the group-order ceiling for full enumeration.
    #[arg(long, global = true)]
    ceiling: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the quadratic extension tower and verify its arithmetic.
    #[command(name = "tower")]
    Tower {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
    },
    /// Compute (or load from cache) a verified character table.
    #[command(name = "chartab")]
    Chartab {
        /// Group family: gl, sl, u, glplus.
        #[arg(long)]
        group: String,
        /// Matrix rank (1 to 3).
        #[arg(long)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
        /// Field of entries: 'base' (size q) or 'ext' (size q^2).
        #[arg(long, default_value = "ext")]
        side: String,
    },
    /// Decompose the Galois pair into double cosets and verify the
    /// twisted-involution matching.
    #[command(name = "double-cosets")]
    DoubleCosets {
        /// Matrix rank (2 or 3).
        #[arg(long)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
        /// Decomposition strategy.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Scan every irreducible of a symmetric pair for distinction.
    #[command(name = "pair-scan")]
    PairScan {
        /// Pair token: GL:GL, GL:U, SL:SL, GL:SLF, GL:SLE or GL:GL+.
        #[arg(long)]
        pair: String,
        /// Matrix rank (1 to 3).
        #[arg(long)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
    },
    /// Decompose packets over the determinant-restricted and special
    /// linear subgroups and check the twist bookkeeping.
    #[command(name = "packet")]
    Packet {
        /// Matrix rank.
        #[arg(long, default_value_t = 2)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
        /// Irreducible to process: an index or 'all'.
        #[arg(long, default_value = "all")]
        rep: String,
    },
    /// Compare the closed-form distinction multiplicity with brute force
    /// on every packet constituent.
    #[command(name = "theorem43")]
    Theorem43 {
        /// Matrix rank.
        #[arg(long, default_value_t = 2)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
        /// Irreducible to process: an index or 'all'.
        #[arg(long, default_value = "all")]
        rep: String,
    },
    /// Compare unitary distinction with twisted split distinction for
    /// irreducibles whose central character descends through the norm.
    #[command(name = "unitary")]
    Unitary {
        /// Matrix rank.
        #[arg(long, default_value_t = 2)]
        n: u8,
        /// Characteristic (a prime).
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Base field is the degree-f extension of the prime field.
        #[arg(long, default_value_t = 1)]
        f: u32,
    },
    /// Run the worked quadratic-twist example in the tame parameter model.
    #[command(name = "padic-example")]
    PadicExample {
        /// Residue field size (an odd prime power).
        #[arg(long, default_value_t = 11)]
        q: u64,
        /// Smallest acceptable order for the inducing character.
        #[arg(long, default_value_t = 12)]
        min_order: u64,
        /// Character-lattice modulus override.
        #[arg(long)]
        modulus: Option<u64>,
        /// Which quadratic floor is ramified.
        #[arg(long, value_enum, default_value_t = OrientArg::Ramified)]
        orientation: OrientArg,
        /// Force a specific inducing character, as 'u,r'.
        #[arg(long)]
        eta: Option<String>,
    },
    /// Check the twist bound (injective transfer, trivial meet, zero-or-one
    /// multiplicity) on random regular dihedral parameters.
    #[command(name = "thm11")]
    Thm11 {
        /// Residue field size (an odd prime power).
        #[arg(long, default_value_t = 11)]
        q: u64,
        /// Twisting degree.
        #[arg(long, default_value_t = 3)]
        n: u64,
        /// Number of random parameters to sample.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Sampling seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Character-lattice modulus override.
        #[arg(long)]
        modulus: Option<u64>,
        /// Which quadratic floor is ramified.
        #[arg(long, value_enum, default_value_t = OrientArg::Ramified)]
        orientation: OrientArg,
        /// Check one explicit inducing character 'u,r' instead of sampling.
        #[arg(long)]
        eta: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    let shared = Shared {
        cache_dir: cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("DLAB_CACHE_DIR").map(PathBuf::from)),
        threads: cli.threads,
        ceiling: cli.ceiling,
    };
    match &cli.cmd {
        Cmd::Tower { p, f } => commands::finite::tower_cmd(*p, *f),
        Cmd::Chartab { group, n, p, f, side } => {
            commands::finite::chartab_cmd(&shared, group, *n, *p, *f, side)
        }
        Cmd::DoubleCosets { n, p, f, method } => {
            commands::finite::double_cosets_cmd(&shared, *n, *p, *f, *method)
        }
        Cmd::PairScan { pair, n, p, f } => {
            commands::finite::pair_scan_cmd(&shared, pair, *n, *p, *f)
        }
        Cmd::Packet { n, p, f, rep } => commands::packets::packet_cmd(&shared, *n, *p, *f, rep),
        Cmd::Theorem43 { n, p, f, rep } => {
            commands::packets::theorem43_cmd(&shared, *n, *p, *f, rep)
        }
        Cmd::Unitary { n, p, f } => commands::packets::unitary_cmd(&shared, *n, *p, *f),
        Cmd::PadicExample { q, min_order, modulus, orientation, eta } => {
            commands::tame::padic_example_cmd(*q, *min_order, *modulus, *orientation, eta.as_deref())
        }
        Cmd::Thm11 { q, n, count, seed, modulus, orientation, eta } => commands::tame::thm11_cmd(
            *q,
            *n,
            *count,
            *seed,
            *modulus,
            *orientation,
            eta.as_deref(),
        ),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                std::process::exit(EXIT_OK);
            }
            // Parameter validation happens before any computation; the
            // contract is a single-line reason on stderr and exit code 1.
            let line = err
                .to_string()
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .to_string();
            eprintln!("{line}");
            std::process::exit(EXIT_USAGE);
        }
    };

    let format = cli.format;
    let out = cli.out.clone();
    match run(&cli) {
        Ok(result) => {
            if let Err(msg) = result.emit(format, out.as_deref()) {
                eprintln!("error: {msg}");
                std::process::exit(EXIT_USAGE);
            }
            if !result.math_ok {
                eprintln!("error: a mathematical verification failed; inspect the artifact");
                std::process::exit(EXIT_MATH);
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
