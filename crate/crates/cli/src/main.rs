//! `zetalab` command line.

mod commands;
mod config;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "zetalab", version, about = "Zeta zeros, explicit prime formulas and RH criteria", arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Working precision in decimal digits (15 is double, up to 31 uses double-double).
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u32).range(15..))]
    pub digits: u32,
    /// Directory for every output file.
    #[arg(long, global = true, env = "ZETALAB_OUTPUT_DIR", default_value = ".")]
    pub output_dir: PathBuf,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// `compute`, `cache` (reuse --zero-cache, default OUTPUT_DIR/zeros.bin) or a zero table path.
    #[arg(long, global = true, default_value = "compute")]
    pub zeros: String,
    /// Zero table reused between runs; written after a fresh computation.
    #[arg(long, global = true)]
    pub zero_cache: Option<PathBuf>,
    /// File of `key=value` lines naming long flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find and certify zeros on the critical line up to a height.
    ZerosFind(ZerosFindArgs),
    /// Validate a zero table and store it in binary form.
    ZerosImport(ZerosImportArgs),
    /// Reconstruct pi(x) from zeros, or sample the spike derivative.
    PiExplicit(PiExplicitArgs),
    /// Scan the arithmetic RH criteria and the integral criteria.
    CriteriaScan(CriteriaArgs),
    /// Nearest-neighbour spacing histogram against the GUE surmise.
    StatsSpacings(SpacingArgs),
    /// Pair correlation of zeros against Montgomery's density.
    StatsPaircorr(PairArgs),
    /// Moments of |zeta| on the critical line against the random-matrix prediction.
    StatsMoments(MomentArgs),
    /// Newton fractal of zeta as a PGM or PPM image.
    FractalRender(FractalArgs),
    /// Profile whose dips sit at the zero heights.
    Vanderpol(VanderpolArgs),
    /// Zero-count residuals against the Riemann-von Mangoldt formula.
    Report(ReportArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Binary,
}

#[derive(Args, Debug)]
pub struct ZerosFindArgs {
    #[arg(long)]
    pub t_max: f64,
    /// Defaults to binary for .bin files, text otherwise.
    #[arg(long, value_enum)]
    pub format: Option<TableFormat>,
    #[arg(long, default_value = "zeros.txt")]
    pub out: PathBuf,
    /// Zeros echoed to stdout.
    #[arg(long, default_value_t = 20)]
    pub show: usize,
}

#[derive(Args, Debug)]
pub struct ZerosImportArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "zeros.bin")]
    pub out: PathBuf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Full,
    Wave,
}

#[derive(Args, Debug)]
pub struct PiExplicitArgs {
    /// Single evaluation point.
    #[arg(long, conflicts_with_all = ["x_min", "x_max"])]
    pub x: Option<f64>,
    #[arg(long, requires = "x_max")]
    pub x_min: Option<f64>,
    #[arg(long, requires = "x_min")]
    pub x_max: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    pub x_step: f64,
    #[arg(long, default_value_t = 1000)]
    pub num_zeros: usize,
    /// Moebius cutoff; defaults to floor(log2 x) per point.
    #[arg(long)]
    pub mobius_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    pub mode: ModeArg,
    /// Compare against pi(x) itself rather than the jump midpoint.
    #[arg(long)]
    pub right_continuous: bool,
    /// Sample the derivative of the reconstruction instead.
    #[arg(long)]
    pub spike: bool,
}

#[derive(Args, Debug)]
pub struct CriteriaArgs {
    /// Comma list from lagarias, robin, schoenfeld, mertens, balazard, volchkov.
    #[arg(long, value_delimiter = ',', default_value = "lagarias,robin,schoenfeld,mertens")]
    pub which: Vec<String>,
    #[arg(long, default_value_t = 1_000_000)]
    pub n_max: u64,
    #[arg(long, default_value_t = 10_000_000)]
    pub mertens_max: u64,
    /// Upper end of the Schoenfeld grid; defaults to n-max.
    #[arg(long)]
    pub schoenfeld_max: Option<f64>,
    #[arg(long, default_value_t = 400)]
    pub schoenfeld_points: usize,
    #[arg(long, default_value_t = 0.10)]
    pub near_miss: f64,
    /// Keep every k-th row in the per-point CSV files.
    #[arg(long, default_value_t = 100)]
    pub csv_stride: u64,
    #[arg(long, default_value_t = 1000.0)]
    pub balazard_t: f64,
    #[arg(long, default_value_t = 200.0)]
    pub volchkov_t: f64,
    #[arg(long, default_value_t = 20.0)]
    pub volchkov_sigma: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnfoldArg {
    Density,
    Log,
}

#[derive(Args, Debug)]
pub struct SpacingArgs {
    #[arg(long, default_value_t = 100_000)]
    pub num_zeros: usize,
    #[arg(long, default_value_t = 0.05)]
    pub bin_width: f64,
    #[arg(long, default_value_t = 100.0)]
    pub min_height: f64,
    #[arg(long, value_enum, default_value_t = UnfoldArg::Density)]
    pub unfold: UnfoldArg,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, default_value_t = 100_000)]
    pub num_zeros: usize,
    #[arg(long, default_value_t = 0.05)]
    pub du: f64,
    #[arg(long, default_value_t = 3.0)]
    pub u_max: f64,
    #[arg(long, default_value_t = 100.0)]
    pub min_height: f64,
}

#[derive(Args, Debug)]
pub struct MomentArgs {
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub k: Vec<u32>,
    #[arg(long, default_value_t = 10_000.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 100_000)]
    pub prime_cutoff: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaletteArg {
    Gray,
    Color,
}

#[derive(Args, Debug)]
pub struct FractalArgs {
    #[arg(long, default_value_t = 400)]
    pub width: usize,
    #[arg(long, default_value_t = 1000)]
    pub height: usize,
    #[arg(long, default_value_t = 64)]
    pub max_iter: u32,
    #[arg(long, default_value_t = 1e-6)]
    pub eps: f64,
    /// re_min,re_max,im_min,im_max
    #[arg(long, value_delimiter = ',', num_args = 4, allow_hyphen_values = true, default_value = "-9,9,-25,25")]
    pub window: Vec<f64>,
    #[arg(long, value_enum, default_value_t = PaletteArg::Gray)]
    pub palette: PaletteArg,
    /// Defaults to fractal.pgm or fractal.ppm by palette.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VanderpolArgs {
    #[arg(long, default_value_t = 100.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub t_step: f64,
    #[arg(long, default_value_t = 20.0)]
    pub x_cut: f64,
    /// Largest profile value counted as a dip.
    #[arg(long, default_value_t = 1e-2)]
    pub depth: f64,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 10_000.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let argv = match config::merge(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
