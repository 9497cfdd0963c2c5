use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact generation and verification for the third-order shape-invariant
/// Hamiltonians built from rational Painlevé IV solutions.
#[derive(Debug, Parser)]
#[command(name = "tsi", version)]
struct Cli {
    /// Emit machine-readable JSON where a command would otherwise print text.
    #[arg(long, global = true)]
    json: bool,
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Print only failures and summaries.
    #[arg(long, global = true)]
    quiet: bool,
    /// Worker threads for parallel work.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generalized Okamoto polynomial Q_{m,n}.
    Okamoto(OkamotoIndex),
    /// Rational solution of PIV, optionally mapped by a Bäcklund transformation.
    Piv(PivArgs),
    /// Potential V^(k) in one of its representations.
    Potential(PotentialArgs),
    /// Eigenfunction polynomial P_{n;j}^(k) with its energy.
    Modes(ModeIndex),
    /// Polynomials P_{0;j} .. P_{N;j} from the three-term recurrence.
    Ttrr(TtrrArgs),
    /// Exceptional Hermite polynomial attached to a mode.
    Xhermite(XhermiteArgs),
    /// Real zero counts against their predictions.
    Zeros(ZerosArgs),
    /// Exact spectrum next to finite-difference eigenvalues.
    Spectrum(SpectrumArgs),
    /// CSV samples of a potential or an eigenfunction.
    PlotData(PlotArgs),
    /// Run verification suites; exits with status 1 if any check fails.
    Verify(VerifyArgs),
    /// Write an exact object as JSON or as CSV plot data.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
struct OkamotoIndex {
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
}

#[derive(Debug, Args)]
struct ModeIndex {
    #[arg(long)]
    k: u32,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    j: u8,
    #[arg(long)]
    n: u32,
}

#[derive(Debug, Args)]
struct PivArgs {
    /// Solution family, 1 to 3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    family: u8,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Include the simplified residual numerator.
    #[arg(long)]
    residual: bool,
    /// Bäcklund map to apply, `w1+` through `w4-`.
    #[arg(long, value_name = "MAP")]
    backlund: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PotentialVia {
    Rational,
    Deleting,
    Adding,
    Susy,
}

#[derive(Debug, Args)]
struct PotentialArgs {
    #[arg(long)]
    k: u32,
    /// Evaluation point, `p/q` or a decimal; may be repeated.
    #[arg(long, value_name = "X", allow_hyphen_values = true)]
    eval: Vec<String>,
    /// Emit `x,value` rows instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long, value_enum, default_value = "rational")]
    via: PotentialVia,
}

#[derive(Debug, Args)]
struct TtrrArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    j: u8,
    #[arg(long)]
    max_n: u32,
    /// Check each entry against the eigenvalue ODE.
    #[arg(long)]
    check_ode: bool,
    /// Check each entry against the Wronskian representation.
    #[arg(long)]
    check_wronskian: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum XhermiteVia {
    Ttrr,
    Wronskian,
    Definition,
}

#[derive(Debug, Args)]
struct XhermiteArgs {
    #[command(flatten)]
    index: ModeIndex,
    #[arg(long, value_enum, default_value = "ttrr")]
    via: XhermiteVia,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolySource {
    Okamoto,
    Mode,
    Xhermite,
}

#[derive(Debug, Args)]
struct PolyIndices {
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    j: Option<u8>,
}

#[derive(Debug, Args)]
struct ZerosArgs {
    #[arg(long, value_enum)]
    poly_from: PolySource,
    #[command(flatten)]
    index: PolyIndices,
    /// Report only the predicted count.
    #[arg(long, conflicts_with_all = ["count", "both"])]
    predict: bool,
    /// Report only the Sturm count.
    #[arg(long, conflicts_with = "both")]
    count: bool,
    /// Report both and whether they agree (default).
    #[arg(long)]
    both: bool,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    count: usize,
    /// Half-width of the truncated domain.
    #[arg(long = "L", value_name = "L")]
    half_width: Option<f64>,
    /// Points of the coarsest grid (odd).
    #[arg(long = "N", value_name = "N")]
    points: Option<usize>,
    /// Allowed eigenvalue change under refinement.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotWhat {
    Potential,
    Mode,
}

#[derive(Debug, Args)]
struct SampleRange {
    /// Interval endpoints.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true, default_values_t = [-5.0, 5.0])]
    range: Vec<f64>,
    #[arg(long, default_value_t = 101)]
    samples: usize,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    what: PlotWhat,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    j: Option<u8>,
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    range: SampleRange,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suites to run, repeated or comma separated; all when omitted.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    #[arg(long, default_value_t = 2)]
    k_max: i64,
    #[arg(long, default_value_t = 3)]
    n_max: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Okamoto,
    Mode,
    Xhermite,
    Potential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(value_enum)]
    kind: ExportKind,
    #[command(flatten)]
    index: PolyIndices,
    #[arg(long, value_enum, default_value = "json")]
    format: ExportFormat,
    #[command(flatten)]
    range: SampleRange,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
