use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddcolor::decomposition::{CarveVariant, CenterRule};

#[derive(Debug, Parser)]
#[command(
    name = "oddcolor",
    version,
    about = "Graphs without short odd cycles: checks, colorings, carving, bounds"
)]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of lower and upper bounds on f(n, k).
    Bounds(BoundsArgs),
    /// Write a generated graph in DIMACS format.
    Gen(GenArgs),
    /// Check that every sphere S_r(v), 1 <= r < k, is independent.
    Check(CheckArgs),
    /// Color a graph.
    Color(ColorArgs),
    /// Carve a graph into bipartite balls and a boundary.
    Decompose(DecomposeArgs),
    /// Search small graphs for the exact value of f(n, k).
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Number of colors: a single value or an inclusive range `lo..hi`.
    #[arg(long)]
    pub n: String,
    /// Odd-cycle parameter: a single value or an inclusive range `lo..hi`.
    #[arg(long)]
    pub k: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Schrijver graph on stable m-subsets of {1, ..., 2m+d}.
    Schrijver {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        /// Refuse graphs with more vertices than this.
        #[arg(long, env = "ODDCOLOR_SCHRIJVER_CAP")]
        cap: Option<usize>,
    },
    /// Cycle on `len` vertices.
    Cycle {
        #[arg(long)]
        len: usize,
    },
    /// Mycielskian of an input graph.
    Mycielski {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Erdős–Rényi random graph.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// DIMACS for `.col` files, edge list otherwise.
    Auto,
    Dimacs,
    Edges,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file; `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorMethod {
    /// Branch and bound for an n-coloring.
    Exact,
    /// Recursive ball carving.
    Carve,
    /// Distance-parity coloring from a center vertex.
    Layer,
    /// Two-coloring by breadth-first search.
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    First,
    MinBall,
}

impl From<Rule> for CenterRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::First => CenterRule::First,
            Rule::MinBall => CenterRule::MinBall,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Threshold d^(1/(k-1)) over radii 1..k-1.
    Standard,
    /// Threshold |V|^(1/k) over radii 1..k.
    VertexCountRoot,
}

impl From<Variant> for CarveVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Standard => CarveVariant::Standard,
            Variant::VertexCountRoot => CarveVariant::VertexCountRoot,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorFormat {
    Json,
    Dimacs,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Number of colors available.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = ColorMethod::Exact)]
    pub method: ColorMethod,
    /// Node budget for the exact method.
    #[arg(long, env = "ODDCOLOR_BUDGET")]
    pub budget: Option<u64>,
    /// Center vertex for the layer method.
    #[arg(long, default_value_t = 0)]
    pub center: usize,
    #[arg(long, value_enum, default_value_t = Rule::First)]
    pub rule: Rule,
    #[arg(long, value_enum, default_value_t = Variant::Standard)]
    pub variant: Variant,
    #[arg(long, value_enum, default_value_t = ColorFormat::Json)]
    pub format: ColorFormat,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Rule::First)]
    pub rule: Rule,
    #[arg(long, value_enum, default_value_t = Variant::Standard)]
    pub variant: Variant,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Largest vertex count to search.
    #[arg(long)]
    pub vmax: usize,
    /// Largest permitted `--vmax`.
    #[arg(long, env = "ODDCOLOR_VMAX_CAP")]
    pub cap: Option<usize>,
    /// Write the witness graph here in DIMACS format.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
    /// Disable the connectivity, minimum-degree and ball-size prunes.
    #[arg(long)]
    pub no_prune: bool,
    /// Also require every sphere S_r(v), r <= k, to be nonempty.
    #[arg(long)]
    pub prune_spheres: bool,
}
