use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "brb",
    version,
    about = "Exact Birkhoff decompositions of characters on connected Hopf algebras"
)]
pub struct Cli {
    /// TOML run configuration; command-line flags take precedence.
    #[arg(long, short, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a map into its regular and polar factors, phi_- * phi = phi_+.
    Decompose(DecomposeArgs),
    /// Convolution inverse of a map.
    Inverse(MapArgs),
    /// Factorize a formal diffeomorphism as f_- o f = f_+.
    Diffeo(DiffeoArgs),
    /// Run named verification suites.
    Verify(VerifyArgs),
    /// Print the reduced coproducts of the generators.
    Table(HopfArgs),
}

#[derive(Debug, Args, Default)]
pub struct HopfArgs {
    /// Hopf algebra instance: ladder or faadibruno.
    #[arg(long)]
    pub hopf: Option<String>,

    /// Truncation degree.
    #[arg(long)]
    pub degree: Option<u32>,
}

#[derive(Debug, Args, Default)]
pub struct MapArgs {
    #[command(flatten)]
    pub hopf: HopfArgs,

    /// Value of the character on a generator, e.g. `l2=e^-2`.
    #[arg(long = "value", value_name = "NAME=EXPR")]
    pub values: Vec<String>,

    /// Read `--value` names as arbitrary monomials of a linear map; unlisted
    /// monomials map to zero.
    #[arg(long)]
    pub map: bool,

    /// Sample a random map from the seed instead of reading values.
    #[arg(long)]
    pub random: bool,

    /// PRNG seed (default 7).
    #[arg(long)]
    pub seed: Option<u64>,

    /// Also run the recursive construction and report agreement.
    #[arg(long)]
    pub check_oracle: bool,
}

#[derive(Debug, Args, Default)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub map: MapArgs,

    /// Rota-Baxter split: pole-part or trivial-plus.
    #[arg(long)]
    pub split: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct DiffeoArgs {
    /// Truncation order of the series.
    #[arg(long)]
    pub order: Option<usize>,

    /// Coefficient of x^N, e.g. `2=e^-1`.
    #[arg(long = "coeff", value_name = "N=EXPR")]
    pub coefficients: Vec<String>,

    /// Rota-Baxter split: pole-part or trivial-plus.
    #[arg(long)]
    pub split: Option<String>,

    /// Decomposition route: closed or recursive.
    #[arg(long)]
    pub route: Option<String>,

    /// Sample a random diffeomorphism from the seed.
    #[arg(long)]
    pub random: bool,

    /// PRNG seed (default 7).
    #[arg(long)]
    pub seed: Option<u64>,

    /// Also factorize through the recursive construction and compare.
    #[arg(long)]
    pub check_oracle: bool,
}

#[derive(Debug, Args, Default)]
pub struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long)]
    pub suite: Option<String>,

    /// PRNG seed (default 7).
    #[arg(long)]
    pub seed: Option<u64>,
}
