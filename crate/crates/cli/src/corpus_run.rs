//! Batch verification and certification over generated graph corpora.
//!
//! A [`CorpusSpec`] (model + seed + filters) expands to a deterministic
//! list of graphs: the same spec and seed produce the same graphs on any
//! platform. Actions fan out over a worker pool; per-graph work is
//! independent and the summary is assembled in generation order, so the
//! TSV output is byte-identical across runs regardless of scheduling.
//! Timing is reported only in the per-graph JSON documents, which keeps
//! the TSV deterministic.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use indpoly::corpus::{all_graphs_up_to_iso, gnp, line_graphs_up_to_iso, Lcg64};
use indpoly::graph::Graph;
use indpoly::identity::{IdentityId, IdentityReport, Verifier};
use indpoly::roots::certify_claw_free;

use crate::formats::render_graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusModel {
    /// `count` Erdos-Renyi samples on `n` vertices with edge probability
    /// `p_num/p_den`.
    Gnp {
        n: usize,
        p_num: u64,
        p_den: u64,
        count: usize,
    },
    /// Every graph with `1..=n` vertices, one per isomorphism class.
    Exhaustive { n: usize },
    /// Every line graph of a graph with at most `max_edges` edges, one per
    /// isomorphism class.
    LineGraphs { max_edges: usize },
}

/// Stream filters: a generated graph is processed only if it satisfies
/// every enabled predicate. Filtered-out graphs do not appear in the
/// summary.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub claw_free: bool,
    pub bipartite: bool,
    pub connected: bool,
}

impl Filters {
    fn admits(&self, g: &Graph) -> bool {
        (!self.claw_free || g.is_claw_free())
            && (!self.bipartite || g.is_bipartite())
            && (!self.connected || g.is_connected(g.full_set()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub model: CorpusModel,
    pub seed: u64,
    pub filters: Filters,
}

impl CorpusSpec {
    /// Expands the spec into `(id, graph)` pairs, deterministically.
    pub fn generate(&self) -> Vec<(String, Graph)> {
        let raw: Vec<(String, Graph)> = match &self.model {
            CorpusModel::Gnp {
                n,
                p_num,
                p_den,
                count,
            } => {
                let mut rng = Lcg64::new(self.seed);
                (0..*count)
                    .map(|i| {
                        (
                            format!("gnp-n{n}-p{p_num}of{p_den}-s{}-{i:05}", self.seed),
                            gnp(*n, *p_num, *p_den, &mut rng),
                        )
                    })
                    .collect()
            }
            CorpusModel::Exhaustive { n } => all_graphs_up_to_iso(*n)
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("exh-n{n}-{i:06}"), g))
                .collect(),
            CorpusModel::LineGraphs { max_edges } => line_graphs_up_to_iso(*max_edges)
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("lg-m{max_edges}-{i:05}"), g))
                .collect(),
        };
        raw.into_iter()
            .filter(|(_, g)| self.filters.admits(g))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusAction {
    /// Run the selected identities over every valid anchor choice.
    VerifyAll { identities: Vec<IdentityId> },
    /// Claw-free certification.
    CertifyAll,
}

/// Cell value in the summary: passed, failed, or not applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Pass,
    Fail,
    Skip,
}

impl From<bool> for Cell {
    fn from(ok: bool) -> Cell {
        if ok {
            Cell::Pass
        } else {
            Cell::Fail
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cell::Pass => "pass",
            Cell::Fail => "FAIL",
            Cell::Skip => "-",
        })
    }
}

/// Result of processing one graph.
pub struct GraphOutcome {
    pub id: String,
    /// TSV cells after id, n, m.
    cells: Vec<Cell>,
    /// True when some identity check failed.
    pub identity_failure: bool,
    /// True when a claw-free graph was certified not real-rooted.
    pub falsification: bool,
    /// Per-graph JSON document (includes timing).
    pub json: serde_json::Value,
}

pub struct CorpusOutcome {
    pub tsv: String,
    pub graphs: Vec<GraphOutcome>,
    pub identity_failures: usize,
    pub falsifications: usize,
}

/// Runs the action over the corpus on `workers` threads. Output order is
/// generation order regardless of scheduling.
pub fn run_corpus(spec: &CorpusSpec, action: &CorpusAction, workers: usize) -> CorpusOutcome {
    let graphs = spec.generate();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("worker pool");
    let outcomes: Vec<GraphOutcome> = pool.install(|| {
        use rayon::prelude::*;
        graphs
            .par_iter()
            .map(|(id, g)| process_graph(id, g, action))
            .collect()
    });

    let mut tsv = header_line(action);
    let mut identity_failures = 0;
    let mut falsifications = 0;
    for (outcome, (_, g)) in outcomes.iter().zip(&graphs) {
        tsv.push_str(&outcome.id);
        tsv.push_str(&format!("\t{}\t{}", g.n(), g.edge_count()));
        for cell in &outcome.cells {
            tsv.push_str(&format!("\t{cell}"));
        }
        tsv.push('\n');
        identity_failures += outcome.identity_failure as usize;
        falsifications += outcome.falsification as usize;
    }
    CorpusOutcome {
        tsv,
        graphs: outcomes,
        identity_failures,
        falsifications,
    }
}

fn header_line(action: &CorpusAction) -> String {
    match action {
        CorpusAction::VerifyAll { identities } => {
            let mut line = String::from("id\tn\tm");
            for id in identities {
                line.push('\t');
                line.push_str(&id.as_str().to_lowercase());
            }
            line.push('\n');
            line
        }
        CorpusAction::CertifyAll => "id\tn\tm\tclaw_free\tall_real\ttheorem_holds\n".into(),
    }
}

fn process_graph(id: &str, g: &Graph, action: &CorpusAction) -> GraphOutcome {
    let start = Instant::now();
    match action {
        CorpusAction::VerifyAll { identities } => {
            let mut verifier = Verifier::new(g);
            let mut cells = Vec::with_capacity(identities.len());
            let mut reports: Vec<IdentityReport> = Vec::new();
            let mut failed = false;
            for &identity in identities {
                let cell = run_identity(&mut verifier, identity, &mut reports);
                if cell == Cell::Fail {
                    failed = true;
                }
                cells.push(cell);
            }
            let json = json!({
                "schema": 1,
                "id": id,
                "n": g.n(),
                "m": g.edge_count(),
                "graph6": render_graph6(g),
                "reports": reports,
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            GraphOutcome {
                id: id.to_string(),
                cells,
                identity_failure: failed,
                falsification: false,
                json,
            }
        }
        CorpusAction::CertifyAll => {
            let report = certify_claw_free(g);
            let cert = report.certificate.as_ref().unwrap();
            let cells = vec![
                Cell::from(report.claw_free),
                Cell::from(cert.all_real),
                report.theorem_holds.map_or(Cell::Skip, Cell::from),
            ];
            let falsification = report.theorem_holds == Some(false);
            let json = json!({
                "schema": 1,
                "id": id,
                "n": g.n(),
                "m": g.edge_count(),
                "graph6": render_graph6(g),
                "certificate": report,
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            GraphOutcome {
                id: id.to_string(),
                cells,
                identity_failure: false,
                falsification,
                json,
            }
        }
    }
}

/// Runs one identity over every valid anchor choice, appending reports.
/// Returns the aggregate cell (skip when the identity has no valid inputs,
/// e.g. MS on a non-bipartite graph).
fn run_identity(
    verifier: &mut Verifier<'_>,
    identity: IdentityId,
    reports: &mut Vec<IdentityReport>,
) -> Cell {
    let g = verifier.graph();
    let n = g.n();
    let mut all = true;
    let mut any = false;
    let mut push = |r: IdentityReport, all: &mut bool, any: &mut bool| {
        *any = true;
        *all &= r.holds;
        reports.push(r);
    };
    match identity {
        IdentityId::T3 => push(verifier.verify_t3(), &mut all, &mut any),
        IdentityId::C1b => push(verifier.verify_c1b(), &mut all, &mut any),
        IdentityId::T2 => {
            for u in 0..n {
                push(verifier.verify_t2(u).unwrap(), &mut all, &mut any);
            }
        }
        IdentityId::C1a => {
            for u in 0..n {
                push(verifier.verify_c1a(u).unwrap(), &mut all, &mut any);
            }
        }
        IdentityId::M2 => {
            for u in 0..n {
                push(verifier.verify_m2(u).unwrap(), &mut all, &mut any);
            }
        }
        IdentityId::T1 => {
            for u in 0..n {
                for v in u + 1..n {
                    push(verifier.verify_t1(u, v).unwrap(), &mut all, &mut any);
                }
            }
        }
        IdentityId::M1 => {
            for u in 0..n {
                for v in u + 1..n {
                    push(verifier.verify_m1(u, v).unwrap(), &mut all, &mut any);
                }
            }
        }
        IdentityId::Ms => {
            if g.is_bipartite() {
                let one = BigRational::from_integer(BigInt::from(1));
                for u in 0..n {
                    for v in u + 1..n {
                        let report = verifier.ms_sign(u, v, &one).unwrap();
                        push(report.to_identity_report(), &mut all, &mut any);
                    }
                }
            }
        }
    }
    if !any {
        Cell::Skip
    } else {
        Cell::from(all)
    }
}
