use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;

use intdim::decomposition::ColoringMode;
use intdim::Family;

#[derive(Parser)]
#[command(
    name = "intdim",
    version,
    about = "Cograph and threshold intersection dimension toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RecognizeFamily {
    Cograph,
    Threshold,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Cograph,
    Threshold,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Cograph => Family::Cograph,
            FamilyArg::Threshold => Family::Threshold,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Forest,
    Path,
    Cycle,
    Treewidth,
    Pathwidth,
    BoxChromatic,
    Star,
    Acyclic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Forest => "forest",
            Method::Path => "path",
            Method::Cycle => "cycle",
            Method::Treewidth => "treewidth",
            Method::Pathwidth => "pathwidth",
            Method::BoxChromatic => "box-chromatic",
            Method::Star => "star",
            Method::Acyclic => "acyclic",
        }
    }

    pub fn coloring_mode(self) -> ColoringMode {
        match self {
            Method::Star => ColoringMode::Star,
            Method::Acyclic => ColoringMode::Acyclic,
            _ => ColoringMode::Proper,
        }
    }
}

#[derive(clap::Args)]
pub struct Witnesses {
    /// Tree decomposition JSON ({"bags", "skeleton_edges"}).
    #[arg(long)]
    pub tree_decomposition: Option<PathBuf>,
    /// Path decomposition JSON ({"bags"}).
    #[arg(long)]
    pub path_decomposition: Option<PathBuf>,
    /// Box representation JSON ({"k", "intervals"}).
    #[arg(long)]
    pub boxes: Option<PathBuf>,
    /// Colouring JSON ({"mode", "colors"}).
    #[arg(long)]
    pub coloring: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership in a graph class, with a certificate.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: RecognizeFamily,
    },
    /// Build a representation from a witness (derived when not supplied).
    Construct {
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Target family for --method cycle.
        #[arg(long, value_enum, default_value = "cograph")]
        family: FamilyArg,
        /// Root bag for --method treewidth.
        #[arg(long, default_value_t = 0)]
        root_bag: usize,
        /// Component roots for --method forest.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<usize>,
        #[command(flatten)]
        witnesses: Witnesses,
    },
    /// Check a representation against a graph.
    Verify {
        graph: PathBuf,
        representation: PathBuf,
    },
    /// Exact dimension by search, up to --kmax factors.
    Dim {
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Search node limit per factor count.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide whether the graph is an intersection of two threshold graphs.
    Th2 { graph: PathBuf },
    /// Upper bounds implied by derivable witnesses.
    Bound {
        graph: PathBuf,
        #[arg(long)]
        boxes: Option<PathBuf>,
    },
    /// Generate a named graph.
    Gen {
        family: String,
        params: Vec<i64>,
        /// Also write the graph as an edge list.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the search encoding as DIMACS CNF.
    Cnf {
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
        /// Add the factor-permutation unit clause.
        #[arg(long)]
        break_symmetry: bool,
    },
    /// Export the auxiliary conflict graph of the graph's edges.
    Aux {
        graph: PathBuf,
        /// Edge list output; the vertex mapping goes to <OUTPUT>.map.json.
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Reject,
    Unsat,
    Undecided,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Reject => "reject",
            Status::Unsat => "unsat",
            Status::Undecided => "undecided",
            Status::Error => "error",
        }
    }

    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Reject | Status::Unsat => 1,
            Status::Undecided => 2,
            Status::Error => 3,
        }
    }
}

/// A status plus the JSON payload fields for standard output.
pub struct Reply {
    pub status: Status,
    pub body: Value,
}

impl Reply {
    pub fn new(status: Status, body: Value) -> Self {
        Reply { status, body }
    }
}

/// Failure that ends a command with status "error".
#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn run(cli: Cli) -> Result<Reply, CliError> {
    match cli.command {
        Command::Recognize { graph, family } => commands::recognize(&graph, family),
        Command::Construct {
            graph,
            method,
            family,
            root_bag,
            roots,
            witnesses,
        } => commands::construct(&graph, method, family.into(), root_bag, &roots, &witnesses),
        Command::Verify {
            graph,
            representation,
        } => commands::verify(&graph, &representation),
        Command::Dim {
            graph,
            family,
            kmax,
            budget,
        } => commands::dim(&graph, family.into(), kmax, budget),
        Command::Th2 { graph } => commands::th2(&graph),
        Command::Bound { graph, boxes } => commands::bound(&graph, boxes.as_deref()),
        Command::Gen {
            family,
            params,
            output,
        } => commands::gen(&family, &params, output.as_deref()),
        Command::Cnf {
            graph,
            family,
            k,
            output,
            break_symmetry,
        } => commands::cnf(&graph, family.into(), k, &output, break_symmetry),
        Command::Aux { graph, output } => commands::aux(&graph, &output),
    }
}

fn main() -> ExitCode {
    let reply = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            Err(CliError(e.kind().to_string()))
        }
    };
    let reply = reply.unwrap_or_else(|e| {
        eprintln!("error: {}", e.0);
        Reply::new(Status::Error, json!({ "error": e.0 }))
    });
    let mut doc = reply.body;
    if let Value::Object(map) = &mut doc {
        map.insert("status".into(), Value::from(reply.status.name()));
    }
    let text = serde_json::to_string_pretty(&doc).expect("plain data");
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(reply.status.code())
}
