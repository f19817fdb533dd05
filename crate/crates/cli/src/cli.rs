use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Bounds and exact small-case computations for Berge hypergraph thresholds.
///
/// Graphs are given as graph6 strings, family specs (`fan:2`, `book:3`,
/// `wheel:6`, `genbook:p,q,m`, `complete:n`, `cycle:k`, `path:k`) or files
/// holding a graph6 line. Hypergraphs are files in the line format (`n m`
/// header, one hyperedge per line) or `-` for stdin.
#[derive(Debug, Parser)]
#[command(name = "bergeth", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Node budget for exhaustive searches (deterministic cap).
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub budget_nodes: u64,
    /// Wall-clock cap in seconds; results that hit it are not reproducible.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Emit a plain-text table (the default for `bounds`).
    #[arg(long, global = true)]
    pub table: bool,
    /// How to read graph arguments.
    #[arg(long = "as", global = true, value_enum, default_value_t = GraphFormat::Auto)]
    pub input_as: GraphFormat,
    /// Lift the size guards of the extremal searches.
    #[arg(long, global = true)]
    pub i_know: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Family spec if it parses as one, else an existing file, else graph6.
    Auto,
    Graph6,
    File,
    Family,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named family and print its graph6.
    Gen { family: String },
    /// Order, size, chromatic and clique numbers.
    Info { graph: String },
    /// Berge-copy search.
    #[command(subcommand)]
    Berge(BergeCommand),
    /// Shadow graph of a hypergraph.
    Shadow { hypergraph: String },
    /// Multiplicities and t-heavy/t-light classes of the shadow edges.
    Heavy {
        hypergraph: String,
        #[arg(long)]
        t: usize,
    },
    /// Minimum quotient chromatic number over t-admissible partitions.
    Ct {
        graph: String,
        #[arg(long)]
        t: usize,
    },
    /// Partition lower bound on the threshold, with its witness.
    Lower { graph: String },
    /// Two-colour Ramsey number R(H, G).
    Ramsey { h: String, g: String },
    /// Whether R(K_p, G) = (p-1)(|V(G)|-1)+1.
    Pgood {
        g: String,
        #[arg(long)]
        p: usize,
    },
    /// ex(n, F).
    Turan { n: usize, f: String },
    /// ex(n, H, F).
    Genturan { n: usize, h: String, f: String },
    /// ex_r(n, Berge-F) over simple r-uniform hypergraphs.
    Bergeturan { r: usize, n: usize, f: String },
    /// Most copies of H in the shadow of a Berge-F-free r-graph.
    Bergeshadow { r: usize, n: usize, h: String, f: String },
    /// Largest cover number C(H, shadow) over Berge-F-free r-graphs.
    Bergecover { r: usize, n: usize, h: String, f: String },
    /// Cover number C(H, G).
    Cover { h: String, g: String },
    /// x(n, H, F): largest C(H, G) over F-free G.
    Coverturan { n: usize, h: String, f: String },
    /// Check ex(n,K_r,F) <= ex_r(n,Berge-F) <= ex(n,K_r,F) + ex(n,F).
    Sandwich { r: usize, n: usize, f: String },
    /// Best lower and upper bounds on the threshold.
    Bounds {
        graph: String,
        /// Evaluate every Ramsey bound even when already tight.
        #[arg(long)]
        thorough: bool,
        /// Extra blow-up host H for the R(H, F\e) bound (repeatable).
        #[arg(long = "host")]
        hosts: Vec<String>,
        /// Accept ex(n, K3, F) = o(n^2) for this graph.
        #[arg(long)]
        assert_sparse_triangles: bool,
    },
    /// Keep one random pair from every hyperedge.
    Sample { hypergraph: String },
}

#[derive(Debug, Subcommand)]
pub enum BergeCommand {
    /// Find a Berge copy of F and print the witness.
    Find { f: String, hypergraph: String },
    /// Whether the hypergraph is Berge-F-free.
    Free { f: String, hypergraph: String },
}
