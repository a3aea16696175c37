//! `mosaic`: command-line front end for knot mosaics and quantum knot systems.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "mosaic", version, about = "Knot mosaics, mosaic moves and quantum knot systems")]
#[command(after_help = "Mosaics are given as t-codes (rows of tile indices joined by '-', \
indices above 9 in parentheses, e.g. 0210-29(10)1-6394-3540) or as a path to a file holding one.\n\
Exit codes: 0 success, 1 negative or failed answer, 2 usage or input error, 3 size cap exceeded.\n\
Set MOSAIC_CACHE_DIR to keep orbit partitions between runs.")]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Allow exhaustive work up to n = 5 instead of 4.
    #[arg(long, global = true)]
    extended: bool,
    /// Use this move-table file instead of the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    move_table: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check whether a mosaic is a knot mosaic.
    Validate {
        mosaic: String,
        /// Read the mosaic as an oriented mosaic (tiles 0-28).
        #[arg(long)]
        oriented: bool,
    },
    /// Draw a mosaic with box-drawing characters, three columns and rows per tile.
    ///
    /// Arcs use rounded corners, double arcs draw both corners, and a crossing
    /// shows the under strand broken: tile 9 has the vertical strand on top,
    /// tile 10 the horizontal one.
    Render { mosaic: String },
    /// List all knot n-mosaics in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tcode)]
        format: Format,
    },
    /// Count the knot n-mosaics.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Print the orbits of the knot n-mosaics under the mosaic moves.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Decide whether two knot mosaics have the same knot mosaic type.
    Equiv {
        a: String,
        b: String,
        /// Extra blank rows and columns to try beyond the common size.
        #[arg(long, default_value_t = 0)]
        max_pad: usize,
    },
    /// Smallest n at which the mosaic's type has a representative.
    MosaicNumber {
        mosaic: String,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Evolve a quantum knot under the Hamiltonian of one move.
    ///
    /// MOVE is `tunnel@i,j`, `hyperbolic@i,j`, `elliptic@i,j`, `mirror`,
    /// `NAME[#v]@i,j` (variant v of a move-table template, rotations included)
    /// or `A/B@i,j` for an explicit pair of patterns.
    Evolve {
        #[arg(long)]
        state: PathBuf,
        #[arg(long = "move", value_name = "MOVE")]
        mv: String,
        #[arg(long)]
        t: f64,
    },
    /// Measure an observable on a quantum knot.
    Measure {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        obs: PathBuf,
        /// Draw this many samples instead of printing probabilities.
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check whether an observable commutes with every mosaic move.
    InvariantCheck {
        #[arg(long)]
        obs: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Sum an observable over its conjugates under the mosaic moves.
    Average {
        #[arg(long)]
        obs: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tcode,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(cli) {
        Ok(outcome) => {
            if json {
                println!("{}", outcome.json);
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            if json {
                println!("{}", failure.to_json());
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

impl Failure {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "schema": 1, "error": { "code": self.exit_code(), "message": self.to_string() } })
    }
}
