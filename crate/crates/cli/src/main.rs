use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use indpoly::identity::IdentityId;
use indpoly_cli::commands::{
    self, cmd_certify, cmd_corpus, cmd_poly, cmd_verify, load_graph, parse_anchors,
    parse_rational, CmdError, PolyKind,
};
use indpoly_cli::corpus_run::{CorpusAction, CorpusModel, CorpusSpec, Filters};
use indpoly_cli::formats::GraphFormat;

/// Exact independence/matching polynomials of small graphs, symbolic
/// verification of their product-difference identities, and Sturm-based
/// real-rootedness certification for claw-free graphs.
#[derive(Parser)]
#[command(name = "indpoly", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Independence,
    Matching,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "lower")]
enum IdentityArg {
    T1,
    T2,
    T3,
    C1a,
    C1b,
    M1,
    M2,
    Ms,
}

impl From<IdentityArg> for IdentityId {
    fn from(a: IdentityArg) -> IdentityId {
        match a {
            IdentityArg::T1 => IdentityId::T1,
            IdentityArg::T2 => IdentityId::T2,
            IdentityArg::T3 => IdentityId::T3,
            IdentityArg::C1a => IdentityId::C1a,
            IdentityArg::C1b => IdentityId::C1b,
            IdentityArg::M1 => IdentityId::M1,
            IdentityArg::M2 => IdentityId::M2,
            IdentityArg::Ms => IdentityId::Ms,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    Exhaustive,
    Linegraphs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    VerifyAll,
    CertifyAll,
}

#[derive(Subcommand)]
enum Command {
    /// Print the independence or matching polynomial of a graph.
    Poly {
        /// Input graph file.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = KindArg::Independence)]
        kind: KindArg,
        /// Cross-check against the brute-force oracle (exit 3 on mismatch).
        #[arg(long)]
        oracle: bool,
        /// Emit a JSON document instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Verify one identity on a graph and print the report as JSON.
    Verify {
        /// Input graph file.
        file: PathBuf,
        #[arg(long, value_enum)]
        identity: IdentityArg,
        /// Anchor vertices, e.g. "3" or "0,2".
        #[arg(long)]
        anchors: Option<String>,
        /// Evaluation point for the MS sign rule, e.g. "1/2".
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// Certify claw-freeness and real-rootedness of the independence
    /// polynomial.
    Certify {
        /// Input graph file.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// Run verification or certification across a generated corpus.
    Corpus {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_enum)]
        action: ActionArg,
        /// Vertex count (gnp: exact; exhaustive: maximum).
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for gnp, e.g. "1/2".
        #[arg(long)]
        p: Option<String>,
        /// Number of gnp samples.
        #[arg(long)]
        count: Option<usize>,
        /// Maximum root edges for the linegraphs model.
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated stream filters: claw-free, bipartite, connected.
        #[arg(long)]
        filter: Option<String>,
        /// Comma-separated identity subset for verify-all (default: all).
        #[arg(long)]
        identities: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Directory for per-graph JSON reports and the TSV summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn build_spec(
    model: ModelArg,
    n: Option<usize>,
    p: Option<String>,
    count: Option<usize>,
    max_edges: Option<usize>,
    seed: u64,
    filter: Option<String>,
) -> Result<CorpusSpec, CmdError> {
    let usage = |m: &str| CmdError {
        code: commands::EXIT_USAGE,
        message: m.to_string(),
    };
    let model = match model {
        ModelArg::Gnp => {
            let n = n.ok_or_else(|| usage("gnp model requires --n"))?;
            let p = p.ok_or_else(|| usage("gnp model requires --p"))?;
            let ratio = parse_rational(&p)?;
            let (p_num, p_den): (u64, u64) = (
                ratio
                    .numer()
                    .try_into()
                    .map_err(|_| usage("probability must be in [0, 1]"))?,
                ratio
                    .denom()
                    .try_into()
                    .map_err(|_| usage("probability must be in [0, 1]"))?,
            );
            if p_num > p_den {
                return Err(usage("probability must be in [0, 1]"));
            }
            CorpusModel::Gnp {
                n,
                p_num,
                p_den,
                count: count.unwrap_or(1),
            }
        }
        ModelArg::Exhaustive => {
            let n = n.ok_or_else(|| usage("exhaustive model requires --n"))?;
            CorpusModel::Exhaustive { n }
        }
        ModelArg::Linegraphs => {
            let max_edges = max_edges.ok_or_else(|| usage("linegraphs model requires --max-edges"))?;
            CorpusModel::LineGraphs { max_edges }
        }
    };
    let mut filters = Filters::default();
    if let Some(list) = filter {
        for name in list.split(',') {
            match name.trim() {
                "claw-free" | "claw_free" => filters.claw_free = true,
                "bipartite" => filters.bipartite = true,
                "connected" => filters.connected = true,
                other => return Err(usage(&format!("unknown filter: {other}"))),
            }
        }
    }
    Ok(CorpusSpec {
        model,
        seed,
        filters,
    })
}

fn parse_identities(text: Option<String>) -> Result<Vec<IdentityId>, CmdError> {
    match text {
        None => Ok(IdentityId::ALL.to_vec()),
        Some(list) => list
            .split(',')
            .map(|name| match name.trim().to_lowercase().as_str() {
                "t1" => Ok(IdentityId::T1),
                "t2" => Ok(IdentityId::T2),
                "t3" => Ok(IdentityId::T3),
                "c1a" => Ok(IdentityId::C1a),
                "c1b" => Ok(IdentityId::C1b),
                "m1" => Ok(IdentityId::M1),
                "m2" => Ok(IdentityId::M2),
                "ms" => Ok(IdentityId::Ms),
                other => Err(CmdError {
                    code: commands::EXIT_USAGE,
                    message: format!("unknown identity: {other}"),
                }),
            })
            .collect(),
    }
}

fn run() -> Result<commands::CmdOutput, CmdError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Poly {
            file,
            format,
            kind,
            oracle,
            json,
        } => {
            let g = load_graph(&file, format.into())?;
            let kind = match kind {
                KindArg::Independence => PolyKind::Independence,
                KindArg::Matching => PolyKind::Matching,
            };
            cmd_poly(&g, kind, oracle, json)
        }
        Command::Verify {
            file,
            identity,
            anchors,
            x,
            format,
        } => {
            let g = load_graph(&file, format.into())?;
            let anchors = match anchors {
                Some(text) => parse_anchors(&text)?,
                None => Vec::new(),
            };
            let x = parse_rational(&x)?;
            cmd_verify(&g, identity.into(), &anchors, &x)
        }
        Command::Certify { file, format } => {
            let g = load_graph(&file, format.into())?;
            cmd_certify(&g)
        }
        Command::Corpus {
            model,
            action,
            n,
            p,
            count,
            max_edges,
            seed,
            filter,
            identities,
            workers,
            out,
        } => {
            let spec = build_spec(model, n, p, count, max_edges, seed, filter)?;
            let action = match action {
                ActionArg::VerifyAll => CorpusAction::VerifyAll {
                    identities: parse_identities(identities)?,
                },
                ActionArg::CertifyAll => CorpusAction::CertifyAll,
            };
            cmd_corpus(&spec, &action, workers, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
