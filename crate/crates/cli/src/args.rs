//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "qchar",
    version,
    about = "Exact combinatorics and characters of simple q(n)-modules"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Do not descend more than this many levels below the highest weight when
    /// enumerating blocks and `Θ^λ_μ`.
    #[arg(long, global = true)]
    pub level_cap: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum RouteChoice {
    /// The closed formula over `S^λ` and `P^{⪯σ(λ)}`.
    Closed,
    /// The cone formula over `TC(λ)` with `b^λ_μ`.
    Cone,
    /// Both closed and cone, which must agree.
    Both,
    /// The reference `Σ b_λμ ch E(μ)`.
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CharacterKind {
    /// `ch L(λ)`.
    Simple,
    /// `ch E(λ)`.
    Euler,
}

#[derive(Args, Debug)]
pub struct WeightArg {
    /// Comma-separated integer entries, e.g. `2,1,-1,-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Render the weight diagram of a dominant weight.
    Diagram(WeightArg),
    /// Statistics, atypical roots and frame of a weight.
    Stats(WeightArg),
    /// Right moves with their targets and all legal left moves.
    Moves(WeightArg),
    /// Left paths and the weights they reach.
    Paths(WeightArg),
    /// Composition factors `[E(λ) : L(μ)]`.
    Factors {
        #[command(flatten)]
        weight: WeightArg,
        /// Also print the `A`, `B` block generated by the weight and check `A·B = I`.
        #[arg(long)]
        block: bool,
    },
    /// The character of `L(λ)` or `E(λ)`.
    Character {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = CharacterKind::Simple)]
        kind: CharacterKind,
        #[arg(long, value_enum, default_value_t = RouteChoice::Both)]
        route: RouteChoice,
    },
    /// `dim L(λ)` by the closed dimension formula and by specializing the character.
    Dimension {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = RouteChoice::Both)]
        route: RouteChoice,
    },
    /// Run every property suite over a sweep of dominant weights.
    Verify {
        /// `n<=N,max=B`: all ranks up to `N`, entries in `[-B, B]`.
        #[arg(long, default_value = "n<=3,max=2")]
        sweep: String,
        /// Which character routes to compare against the reference.
        #[arg(long, value_enum, default_value_t = RouteChoice::Both)]
        route: RouteChoice,
    },
}
