use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "phang",
    version,
    about = "Picture-hanging puzzles as free-group words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a solution with one of the construction families.
    Construct(ConstructArgs),
    /// Check whether a word solves a puzzle. Reads JSON records from stdin
    /// when no --word is given.
    Check(CheckArgs),
    /// Print the canonical representative of a word's symmetry class.
    Canon(CanonArgs),
    /// Exhaustive search for solutions of a given or minimal length.
    Search(SearchArgs),
    /// Binary-splitting lengths L_k(2^i) with successive ratios.
    Table(TableArgs),
    /// Known 2-of-4 solutions.
    Catalog(CatalogArgs),
    /// Draw a word as an SVG wire diagram.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Demaine,
    Wastlund,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Binary splitting with Huffman-ordered disjuncts (any k).
    Split,
    /// Co-rank-2 recursion: (n-2)-of-n, n a power of two.
    Wastlund,
    /// 1+2+...+n: n-of-n.
    Chain,
    /// Chain up then down: (n-1)-of-n.
    Updown,
    /// Balanced commutator tree: 1-of-n.
    Balanced,
    /// Greedy one-nail extension, small n.
    Extension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Essential,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Puzzle as K-of-N, optionally suffixed @demaine or @wastlund.
    #[arg(long)]
    pub puzzle: String,
    /// Convention for a puzzle given without a suffix.
    #[arg(long, value_enum, default_value = "demaine")]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value = "split")]
    pub method: Method,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Required with --word; for stdin records it overrides their k and n.
    #[arg(long)]
    pub puzzle: Option<String>,
    #[arg(long, value_enum, default_value = "demaine")]
    pub convention: ConventionArg,
    /// Defaults to full up to 10 nails, essential beyond.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CanonArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("len").required(true).args(["exact_len", "max_len"])))]
pub struct SearchArgs {
    #[arg(long)]
    pub puzzle: String,
    #[arg(long, value_enum, default_value = "demaine")]
    pub convention: ConventionArg,
    /// Search exactly this length.
    #[arg(long)]
    pub exact_len: Option<usize>,
    /// Find the minimum length up to this bound.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Total prefix-partition cells; run only --shard-id.
    #[arg(long, requires = "shard_id", conflicts_with = "threads")]
    pub shards: Option<u32>,
    #[arg(long, requires = "shards")]
    pub shard_id: Option<u32>,
    /// Run every shard, spread over this many threads.
    #[arg(long)]
    pub threads: Option<u32>,
    /// Allow lengths of 14 and above.
    #[arg(long)]
    pub long: bool,
    /// Abort after this many nodes per shard.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Report progress on stderr every this many nodes.
    #[arg(long)]
    pub progress_every: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub max_i: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
