use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::parse::{self, Cycle, FloatList, Grid, IntList};

/// Exact spectral analysis of self-similar measures μ_{N,D}.
#[derive(Debug, Parser)]
#[command(name = "spectral", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compatible pairs (D/N, S).
    #[command(subcommand)]
    Compat(CompatCommand),
    /// Spectrality of Λ(N, S).
    #[command(subcommand)]
    Spectrum(SpectrumCommand),
    /// Numeric diagnostics: μ̂, Q and slices of Λ(N, S).
    #[command(subcommand)]
    Measure(MeasureCommand),
    /// Complementing digit sets and the spectra they induce.
    #[command(subcommand)]
    Tiling(TilingCommand),
}

#[derive(Debug, Subcommand)]
pub enum CompatCommand {
    /// Decide whether (D/N, S) is a compatible pair.
    Check(PairArgs),
    /// List every compatible S in the reduced window.
    Search(SystemArgs),
    /// Move each element of S into the window [2-|N|, |N|-2].
    Reduce(ReduceArgs),
    /// The k-fold power of a compatible pair.
    Power(PowerArgs),
}

#[derive(Debug, Subcommand)]
pub enum SpectrumCommand {
    /// Decide whether Λ(N, S) is a spectrum of μ_{N,D}.
    Decide(PairArgs),
    /// Check a witness cycle produced by `spectrum decide`.
    Verify(VerifyArgs),
    /// Canonicalize D and look for a certified spectrum.
    Report(SystemArgs),
}

#[derive(Debug, Subcommand)]
pub enum MeasureCommand {
    /// Evaluate the Fourier transform μ̂.
    Fourier(FourierArgs),
    /// Tabulate the completeness function Q over a grid.
    Qgrid(QgridArgs),
    /// Enumerate the depth slice of Λ(N, S).
    Lambda(LambdaArgs),
}

#[derive(Debug, Subcommand)]
pub enum TilingCommand {
    /// Decide whether D is complementing modulo |N|.
    Check(SystemArgs),
    /// Build a compatible S from a complementing D.
    Construct(SystemArgs),
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Scale N, with |N| ≥ 2.
    #[arg(long = "n", allow_hyphen_values = true)]
    pub n: i64,
    /// Digit set D as a comma-separated list.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::int_list)]
    pub digits: IntList,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Candidate set S as a comma-separated list.
    #[arg(long = "s", allow_hyphen_values = true, value_parser = parse::int_list)]
    pub s: IntList,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long = "n", allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long = "s", allow_hyphen_values = true, value_parser = parse::int_list)]
    pub s: IntList,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Power k ≥ 1.
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Cycle as JSON pairs [eta, digit], e.g. '[[2,6]]'.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::cycle)]
    pub cycle: Cycle,
}

#[derive(Debug, Args)]
pub struct PolicyArgs {
    /// Depth of the Λ slice used by Q.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    /// Tail tolerance for the infinite product.
    #[arg(long, default_value_t = 1e-12)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct FourierArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Frequencies ξ as a comma-separated list.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::float_list)]
    pub xi: FloatList,
    /// Tail tolerance for the infinite product.
    #[arg(long, default_value_t = 1e-12)]
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct QgridArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    /// Grid "lo,hi,count"; hi is excluded.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::grid, default_value = "0,1,101")]
    pub grid: Grid,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    #[arg(long = "n", allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long = "s", allow_hyphen_values = true, value_parser = parse::int_list)]
    pub s: IntList,
    /// Number of digits in each element.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
}
