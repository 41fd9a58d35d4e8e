use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdirac::poly::parse_rational;
use rdirac::{Rational, Subcase};

#[derive(Debug, Parser)]
#[command(name = "rdirac", version, about = "Exact integrability analysis for the 1D Dirac equation with rational potentials")]
pub struct Cli {
    /// Read `key=value` defaults from a file; command-line flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the positive m-roots of the condition polynomial at fixed alpha.
    Classify(ClassifyArgs),
    /// Scan the condition curve over m-slices.
    Curve(CurveArgs),
    /// Liouvillian spectrum and table cell for the Whittaker family.
    Whittaker(WhittakerArgs),
    /// Rebuild the potential with a polynomial r(z) from its poles.
    Reconstruct(ReconstructArgs),
    /// Recheck the residual of a descriptor file.
    Verify(VerifyArgs),
    /// Universal E = 0 solution for V = alpha/z + m + lambda z.
    Ezero(EzeroArgs),
    /// Case-1 solution at a point of the condition curve.
    Case1(Case1Args),
    /// m = 0 solutions through the Laguerre equation.
    Laguerre(LaguerreArgs),
    /// Why Kovacic cases 2 and 3 cannot apply.
    Kovacic(KovacicArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to a file instead of stdout.
    #[arg(long, short = 'o', value_name = "PATH")]
    pub output: Option<PathBuf>,
}

pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn subcase(s: &str) -> Result<Subcase, String> {
    let i: u8 = s.trim().trim_start_matches(['S', 's']).parse().map_err(|_| format!("bad subcase {s:?}"))?;
    Subcase::from_index(i).map_err(|e| e.to_string())
}

fn lambda(s: &str) -> Result<i32, String> {
    match s.trim() {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("lambda must be 1 or -1, got {s:?}")),
    }
}

/// `lo:hi:step` over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct Range {
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
}

pub fn range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(format!("expected lo:hi:step, got {s:?}"));
    };
    let step = rational(step)?;
    if step <= Rational::from_integer(0.into()) {
        return Err("step must be positive".into());
    }
    Ok(Range { lo: rational(lo)?, hi: rational(hi)?, step })
}

/// `lo:hi` over the rationals.
pub fn window(s: &str) -> Result<(Rational, Rational), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    Ok((rational(lo)?, rational(hi)?))
}

/// `lo:hi` over the integers.
pub fn int_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad integer {x:?}"));
    Ok((p(lo)?, p(hi)?))
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = subcase)]
    pub subcase: Subcase,
    #[arg(short = 'd', long = "degree")]
    pub degree: u32,
    #[arg(long, value_parser = lambda, allow_hyphen_values = true)]
    pub lambda: i32,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    /// Width of the printed root boxes.
    #[arg(long, value_parser = rational, default_value = "1e-20")]
    pub eps: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// fig1-left, fig1-right, fig2-left or fig2-right.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long, value_parser = subcase)]
    pub subcase: Option<Subcase>,
    #[arg(short = 'd', long = "degree")]
    pub degree: Option<u32>,
    #[arg(long, value_parser = lambda, allow_hyphen_values = true)]
    pub lambda: Option<i32>,
    /// m-slices as lo:hi:step; presets default to -4:4:0.04.
    #[arg(long, value_parser = range, allow_hyphen_values = true)]
    pub m: Option<Range>,
    /// Only alpha-roots in (lo, hi].
    #[arg(long, value_parser = window, allow_hyphen_values = true)]
    pub alpha_window: Option<(Rational, Rational)>,
    #[arg(long, value_parser = rational, default_value = "1e-10")]
    pub eps: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct WhittakerArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub m: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    #[arg(short = 'd', long = "degree")]
    pub degree: u32,
    /// Level window lo:hi in l.
    #[arg(long, value_parser = int_window, allow_hyphen_values = true, default_value = "-10:10")]
    pub levels: (i64, i64),
    /// Also classify this energy.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub e2: Option<Rational>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub poles: Vec<Rational>,
    /// Coefficients of R2 from the constant term up.
    #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    pub r2: Vec<Rational>,
    /// Energy used for the printed r(z).
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    pub e2: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Descriptor JSON file.
    #[arg(long)]
    pub descriptor: PathBuf,
    /// Largest accepted bound for boxed roots.
    #[arg(long, value_parser = rational, default_value = "1e-20")]
    pub eps: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct EzeroArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    pub m: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct Case1Args {
    #[arg(long, value_parser = subcase)]
    pub subcase: Subcase,
    #[arg(short = 'd', long = "degree")]
    pub degree: u32,
    #[arg(long, value_parser = lambda, allow_hyphen_values = true)]
    pub lambda: i32,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub m: Option<Rational>,
    /// Which real root of the slice, in increasing order.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    #[arg(long, value_parser = rational, default_value = "1e-30")]
    pub eps: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct LaguerreArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub e2: Rational,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct KovacicArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    #[command(flatten)]
    pub out: Output,
}
