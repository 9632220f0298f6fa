mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "heawood", version, about = "Desk-scale checks for list colouring of graphs on surfaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for every randomized generator and suite.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest vertex count for enumerations.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Isomorphism classes taken per vertex count.
    #[arg(long, global = true)]
    pub max_classes: Option<usize>,
    /// Most colours a searched list assignment may use.
    #[arg(long, global = true)]
    pub palette_bound: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Fan,
    Snake,
    Random,
}

#[derive(Args, Debug, Clone)]
pub struct GlueArgs {
    /// Polygon order.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Shape::Snake)]
    pub shape: Shape,
    /// Start of the first boundary edge.
    #[arg(long)]
    pub first: Option<usize>,
    /// Start of the second boundary edge.
    #[arg(long)]
    pub second: Option<usize>,
    /// Glue with a twist (nonorientable).
    #[arg(long)]
    pub twist: bool,
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// A triangulated polygon with two boundary edges glued; with --all,
    /// every polygon and gluing up to --max-n vertices.
    GluedPolygon {
        #[command(flatten)]
        glue: GlueArgs,
        #[arg(long)]
        all: bool,
    },
    /// K_{H-5} + C_5 for the Special Case with parameter i.
    SpecialFamily {
        #[arg(long, default_value_t = 2)]
        i: i64,
    },
    /// Gallai's critical join K_{k-3} + C_5.
    Gallai {
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Generate {
    /// Triangulated polygon: graph and planar embedding.
    Polygon {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Shape::Snake)]
        shape: Shape,
    },
    /// Glued polygon: quotient graph and its embedding.
    Glued(GlueArgs),
    Gallai {
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    SpecialFamily {
        #[arg(long, default_value_t = 2)]
        i: i64,
    },
    /// K_n minus the listed edges, given as u-v pairs.
    CompleteMinus {
        n: usize,
        #[arg(value_delimiter = ',')]
        missing: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Heawood numbers, genus windows and Special Cases for 1..=EPS_MAX.
    HeawoodTable { eps_max: i64 },
    /// Graphs on at most H(ε) vertices with face lists H-2 and other lists H.
    VerifySmallOrders { epsilon: i64 },
    /// Random instances for the greedy degree-order colouring.
    VerifyGreedy {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        max_k: usize,
    },
    /// Degree-choosability against the Gallai tree characterization.
    VerifyDegreeChoosable,
    /// Edge counts of small critical graphs without K_k.
    VerifyCriticalBound {
        #[arg(long, value_delimiter = ',', default_value = "4,5")]
        k: Vec<usize>,
    },
    /// Face tracing on random rotation systems and planar drawings.
    VerifyEmbeddings {
        #[arg(long, default_value_t = 500)]
        count: usize,
    },
    /// Build a named construction and check its claimed properties.
    VerifyConstruction {
        #[command(subcommand)]
        which: Construction,
    },
    /// Euler-bound arithmetic for a critical subgraph in a Special Case.
    SpecialCaseBound { epsilon: i64, nprime: i64 },
    /// Whether K_{H+1} minus an edge can embed by Euler's formula.
    Feasibility { epsilon: i64 },
    /// Validate an embedded instance with lists, then colour it.
    CheckInstance {
        graph: PathBuf,
        embedding: PathBuf,
        face: usize,
        lists: PathBuf,
        /// Expected digest of the face's vertex set.
        #[arg(long)]
        face_digest: Option<String>,
    },
    /// Colour a graph from lists.
    Solve { graph: PathBuf, lists: PathBuf },
    /// Faces and Euler genus of an embedding.
    TraceFaces { embedding: PathBuf },
    /// Write a construction in the text formats.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(mut report) => {
            report.wall_clock_ms = start.elapsed().as_millis();
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable report")),
            }
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
