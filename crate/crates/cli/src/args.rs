use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exact computations with Macaulay inverse systems of Artinian local algebras.
///
/// Polynomials use the grammar `3/2*y1^2*y2 - y3 + 1`: `y` variables for dual
/// generators, `x` variables for ideal generators.
#[derive(Debug, Parser)]
#[command(name = "macaulay", version, propagate_version = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "MACAULAY_FORMAT", default_value = "text")]
    pub format: Format,

    /// Number of variables; by default the highest variable index that occurs.
    #[arg(long, global = true)]
    pub nvars: Option<usize>,

    /// Seed for randomized steps (singular point counting, selftest).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Annihilator ideal of a dual generator: minimal generators and sizes.
    Ann {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Truncation degree; defaults to deg F.
        #[arg(long)]
        socle: Option<u32>,
    },
    /// Hilbert function of the algebra defined by a dual generator.
    Hf {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Inverse system of the ideal (g1, g2, ...) + M^(s+1).
    ///
    /// Put generators that start with a minus sign after `--`.
    Perp {
        #[arg(required = true)]
        generators: Vec<String>,
        #[arg(long)]
        socle: u32,
    },
    /// Gorenstein test for a dual generator or for ideal generators (with --socle).
    Gorenstein {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        socle: Option<u32>,
    },
    /// The quotient by the annihilator of the top-degree form.
    Q0 {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Second-derivative matrix of a cubic form and its rank.
    Delta {
        #[arg(allow_hyphen_values = true)]
        f3: String,
    },
    /// Witness that F3 + F2 defines the same algebra as F3.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Also write the witness as JSON to this file.
        #[arg(long)]
        save_witness: Option<PathBuf>,
    },
    /// Normal form F3 + sum of squares for socle degree three.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        save_witness: Option<PathBuf>,
    },
    /// Decide whether two socle-degree-three dual generators define isomorphic algebras.
    Iso {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        save_witness: Option<PathBuf>,
    },
    /// Check a stored witness for A_F being isomorphic to A_G.
    VerifyIso {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Projective type of a binary or ternary cubic form.
    Classify {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// j-invariant of a smooth plane cubic or of the Legendre cubic.
    Jinv {
        #[arg(required_unless_present = "lambda", conflicts_with = "lambda", allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Tabulated model algebras.
    Models {
        /// Keep rows whose class contains this text (case-insensitive).
        #[arg(long)]
        class: Option<String>,
        /// Keep rows with this Hilbert function, e.g. "1,3,3,1".
        #[arg(long)]
        hf: Option<String>,
        /// Use this parameter for the Legendre row.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Run the fixture corpus and seeded property checks.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ann { .. } => "ann",
            Command::Hf { .. } => "hf",
            Command::Perp { .. } => "perp",
            Command::Gorenstein { .. } => "gorenstein",
            Command::Q0 { .. } => "q0",
            Command::Delta { .. } => "delta",
            Command::Canonical { .. } => "canonical",
            Command::Normalize { .. } => "normalize",
            Command::Iso { .. } => "iso",
            Command::VerifyIso { .. } => "verify-iso",
            Command::Classify { .. } => "classify",
            Command::Jinv { .. } => "jinv",
            Command::Models { .. } => "models",
            Command::Selftest => "selftest",
        }
    }
}
