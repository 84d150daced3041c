//! Command-line argument surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "dlcf",
    version,
    about = "Exact class-function computations on GL_n(F_q) and SL_2(F_q)",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
pub struct Cli {
    /// Group family.
    #[arg(long, value_enum, default_value_t = FamilyArg::Gln)]
    pub family: FamilyArg,

    /// Rank n for GL_n (ignored for SL_2).
    #[arg(long, default_value_t = 2)]
    pub n: u32,

    /// Field size q (a prime power; odd for SL_2).
    #[arg(long, short, default_value_t = 3)]
    pub q: u64,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    pub format: FormatArg,

    /// Green-polynomial cache directory (overrides DLCF_CACHE_DIR).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,

    /// Allow brute-force computations on groups of order above 1000.
    #[arg(long)]
    pub big: bool,

    /// Diagnostics on stderr.
    #[arg(short, long)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gln,
    Sl2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the conjugacy classes with sizes and centralizer orders.
    Classes,
    /// List the strata with their dimensions and class counts.
    Strata,
    /// List the maximal torus types with orders and character-orbit counts.
    Tori,
    /// List the lines of the class-function space.
    Lines,
    /// Evaluate the Deligne-Lusztig character of a torus character.
    Dlchar {
        /// Torus type: a partition like "2,1" (GL) or "split"/"coxeter" (SL_2).
        #[arg(long)]
        torus: String,
        /// Character exponents, one per torus factor, like "1,0".
        #[arg(long)]
        theta: String,
    },
    /// Induce a torus line from a block Levi to the group.
    Induce {
        /// Levi block sizes, like "2,1".
        #[arg(long)]
        levi: String,
        /// Per-block torus partitions separated by '|', like "1,1|1".
        #[arg(long)]
        torus: String,
        /// Per-block character exponents separated by '|', like "0,1|0".
        #[arg(long)]
        theta: String,
    },
    /// Expand a class indicator over the induced torus characters.
    Indicator {
        /// Class label as printed by `classes` (a geometric class, or a
        /// single SL_2 square class like "u+1" for the documented
        /// non-uniform case).
        #[arg(long)]
        class: String,
    },
    /// Check all inner products of induced characters against the
    /// combinatorial Weyl counts.
    Mackey,
    /// Brute-force character table (Dixon-Schneider).
    Table,
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Decomposition,
    Transitivity,
    Mackey,
    Oracle,
    All,
}
