use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "dualroots",
    version,
    about = "Exact orthogonal polynomial families in (x, z): generation, certified roots, verification"
)]
pub struct Cli {
    /// Output format (default: csv for `trace`, json otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Permit degrees above 24.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump a family member exactly, optionally specialized or differentiated in z.
    Gen(GenArgs),
    /// Isolate the real roots of a univariate specialization.
    Roots(RootsArgs),
    /// Run a theorem checker (or the whole suite) and report verdicts.
    Verify(VerifyArgs),
    /// Nonreal-deficit table of z-specializations over an x grid.
    Scan(ScanArgs),
    /// Trace the moving roots γ_i(x) of the reduced Gegenbauer family.
    Trace(TraceArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// laguerre, gegenbauer, gegenbauer-modified, gegenbauer-tilde, charlier
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: u32,
    /// Charlier parameter (rational, > 0).
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// Differentiate k times in z first.
    #[arg(long, default_value_t = 0)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Specialize x to this value (polynomial in z).
    #[arg(long, conflicts_with = "at_z", allow_hyphen_values = true)]
    pub at_x: Option<String>,
    /// Specialize z to this value (polynomial in x).
    #[arg(long, allow_hyphen_values = true)]
    pub at_z: Option<String>,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, conflicts_with = "at_z", allow_hyphen_values = true)]
    pub at_x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub at_z: Option<String>,
    /// Enclosure width target.
    #[arg(long, default_value = "1e-30")]
    pub tol: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem id, e.g. thm-laguerreD.
    #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
    pub theorem: Option<String>,
    /// `paper` is the only suite: every checker at its default desk-scale grid.
    #[arg(long, value_parser = ["paper"])]
    pub suite: Option<String>,
    /// Degree(s): `4`, `2..=8`, `1,3`.
    #[arg(long)]
    pub n: Option<String>,
    /// Second degree(s), for orthogonality.
    #[arg(long)]
    pub m: Option<String>,
    /// z values (grid syntax).
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// x values (grid syntax).
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// The checker's primary grid: x for z-realrootedness, interlacing in z
    /// and orthogonality; z otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Comma-separated families, where the checker takes several.
    #[arg(long)]
    pub families: Option<String>,
    #[arg(long)]
    pub tol: Option<String>,
    /// Largest default degree.
    #[arg(long, default_value_t = 8)]
    pub max_n: u32,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value = "gegenbauer")]
    pub family: String,
    #[arg(long, default_value = "1..=24")]
    pub n: String,
    #[arg(long, default_value = "5/4,3/2,2,3", allow_hyphen_values = true)]
    pub grid: String,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub n: u32,
    /// End point x_end < 0.
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, default_value_t = 64)]
    pub steps: u32,
}
