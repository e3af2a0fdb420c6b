//! Command implementations shared by the binary and the test suite.
//!
//! Every command returns the text it would print plus a process exit code,
//! so tests can drive them in-process. Exit codes:
//!
//! | code | meaning                                         |
//! |------|-------------------------------------------------|
//! | 0    | success (polynomials printed, identity holds,   |
//! |      | claw-free graph certified real-rooted)          |
//! | 1    | certify: graph is not claw-free (informational) |
//! | 2    | usage, file, or parse error                     |
//! | 3    | oracle cross-check mismatch                     |
//! | 4    | identity verification failure                   |
//! | 5    | claw-free graph NOT real-rooted (falsification) |

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use indpoly::graph::Graph;
use indpoly::graph_poly::{
    independence_poly_of, independence_poly_oracle, matching_poly, matching_poly_oracle,
};
use indpoly::identity::{IdentityId, Verifier};
use indpoly::roots::certify_claw_free;

use crate::corpus_run::{run_corpus, CorpusAction, CorpusSpec};
use crate::formats::{parse, FormatError, GraphFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CLAW_FREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE_MISMATCH: i32 = 3;
pub const EXIT_IDENTITY_FAILED: i32 = 4;
pub const EXIT_NOT_REAL_ROOTED: i32 = 5;

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CmdError {}

impl From<FormatError> for CmdError {
    fn from(e: FormatError) -> CmdError {
        CmdError {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CmdError {
    CmdError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Successful command output: text for stdout plus the exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> CmdOutput {
        CmdOutput {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph, CmdError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!(
        "cannot read {}: {e}",
        path.display()
    )))?;
    Ok(parse(&text, format)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Independence,
    Matching,
}

pub fn cmd_poly(
    g: &Graph,
    kind: PolyKind,
    oracle: bool,
    as_json: bool,
) -> Result<CmdOutput, CmdError> {
    let poly = match kind {
        PolyKind::Independence => independence_poly_of(g),
        PolyKind::Matching => matching_poly(g, g.full_set()),
    };
    if oracle {
        let reference = match kind {
            PolyKind::Independence => independence_poly_oracle(g, g.full_set()),
            PolyKind::Matching => matching_poly_oracle(g, g.full_set()),
        }
        .map_err(|e| usage(format!("oracle unavailable: {e}")))?;
        if reference != poly {
            return Err(CmdError {
                code: EXIT_ORACLE_MISMATCH,
                message: format!(
                    "oracle mismatch: engine computed {poly}, oracle computed {reference}"
                ),
            });
        }
    }
    let stdout = if as_json {
        let value = json!({
            "schema": 1,
            "kind": match kind {
                PolyKind::Independence => "independence",
                PolyKind::Matching => "matching",
            },
            "n": g.n(),
            "m": g.edge_count(),
            "text": poly.to_string(),
            "coeffs": poly.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "oracle_checked": oracle,
        });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        format!("{poly}\n")
    };
    Ok(CmdOutput::ok(stdout))
}

fn anchors_for(identity: IdentityId, anchors: &[usize]) -> Result<(), CmdError> {
    let want = identity.arity();
    if anchors.len() != want {
        return Err(usage(format!(
            "identity {identity} takes {want} anchor(s), got {}",
            anchors.len()
        )));
    }
    Ok(())
}

pub fn cmd_verify(
    g: &Graph,
    identity: IdentityId,
    anchors: &[usize],
    x: &BigRational,
) -> Result<CmdOutput, CmdError> {
    anchors_for(identity, anchors)?;
    let mut verifier = Verifier::new(g);
    let report = match identity {
        IdentityId::T1 => verifier.verify_t1(anchors[0], anchors[1]),
        IdentityId::T2 => verifier.verify_t2(anchors[0]),
        IdentityId::T3 => Ok(verifier.verify_t3()),
        IdentityId::C1a => verifier.verify_c1a(anchors[0]),
        IdentityId::C1b => Ok(verifier.verify_c1b()),
        IdentityId::M1 => verifier.verify_m1(anchors[0], anchors[1]),
        IdentityId::M2 => verifier.verify_m2(anchors[0]),
        IdentityId::Ms => verifier
            .ms_sign(anchors[0], anchors[1], x)
            .map(|r| r.to_identity_report()),
    }
    .map_err(|e| usage(e.to_string()))?;

    let mut value = serde_json::to_value(&report).unwrap();
    value["schema"] = json!(1);
    let stdout = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
    if report.holds {
        Ok(CmdOutput::ok(stdout))
    } else {
        Ok(CmdOutput {
            stdout,
            code: EXIT_IDENTITY_FAILED,
        })
    }
}

pub fn cmd_certify(g: &Graph) -> Result<CmdOutput, CmdError> {
    let report = certify_claw_free(g);
    let mut value = serde_json::to_value(&report).unwrap();
    value["schema"] = json!(1);
    let stdout = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
    let code = match report.theorem_holds {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_NOT_REAL_ROOTED,
        None => EXIT_NOT_CLAW_FREE,
    };
    Ok(CmdOutput { stdout, code })
}

pub fn cmd_corpus(
    spec: &CorpusSpec,
    action: &CorpusAction,
    workers: usize,
    out_dir: Option<&Path>,
) -> Result<CmdOutput, CmdError> {
    let outcome = run_corpus(spec, action, workers);
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
        std::fs::write(dir.join("summary.tsv"), &outcome.tsv)
            .map_err(|e| usage(format!("cannot write summary: {e}")))?;
        for g in &outcome.graphs {
            let path = dir.join(format!("{}.json", g.id));
            let text = serde_json::to_string_pretty(&g.json).unwrap();
            std::fs::write(&path, text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let code = if outcome.falsifications > 0 {
        EXIT_NOT_REAL_ROOTED
    } else if outcome.identity_failures > 0 {
        EXIT_IDENTITY_FAILED
    } else {
        EXIT_OK
    };
    Ok(CmdOutput {
        stdout: outcome.tsv,
        code,
    })
}

/// Parses "num/den" or a plain integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, CmdError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| usage(format!("invalid rational: {text}")))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| usage(format!("invalid rational: {text}")))?;
    if den == BigInt::from(0) {
        return Err(usage("rational denominator must be nonzero"));
    }
    Ok(BigRational::new(num, den))
}

/// Parses "u" or "u,v" into anchor indices.
pub fn parse_anchors(text: &str) -> Result<Vec<usize>, CmdError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("invalid anchor list: {text}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_text_output() {
        let out = cmd_poly(&Graph::complete(2), PolyKind::Independence, true, false).unwrap();
        assert_eq!(out.stdout, "1 + 2x\n");
        assert_eq!(out.code, 0);
        let out = cmd_poly(&Graph::complete(2), PolyKind::Matching, true, false).unwrap();
        assert_eq!(out.stdout, "-1 + x^2\n");
        let out = cmd_poly(&Graph::star(3), PolyKind::Independence, true, false).unwrap();
        assert_eq!(out.stdout, "1 + 4x + 3x^2 + x^3\n");
    }

    #[test]
    fn poly_oracle_cap_is_usage_error() {
        let g = Graph::complete(7); // 21 edges, over the matching oracle cap
        let err = cmd_poly(&g, PolyKind::Matching, true, false).unwrap_err();
        assert_eq!(err.code, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let out = cmd_verify(
            &Graph::complete(2),
            IdentityId::T1,
            &[0, 1],
            &BigRational::from_integer(BigInt::from(1)),
        )
        .unwrap();
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("\"schema\": 1"));
        let err = cmd_verify(
            &Graph::complete(2),
            IdentityId::T1,
            &[0],
            &BigRational::from_integer(BigInt::from(1)),
        )
        .unwrap_err();
        assert_eq!(err.code, EXIT_USAGE);
    }

    #[test]
    fn certify_exit_codes() {
        assert_eq!(cmd_certify(&Graph::cycle(5)).unwrap().code, EXIT_OK);
        assert_eq!(
            cmd_certify(&Graph::star(3)).unwrap().code,
            EXIT_NOT_CLAW_FREE
        );
    }

    #[test]
    fn rational_and_anchor_parsing() {
        assert_eq!(
            parse_rational("1/2").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("3").unwrap(),
            BigRational::from_integer(BigInt::from(3))
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_anchors("0,3").unwrap(), vec![0, 3]);
        assert_eq!(parse_anchors("5").unwrap(), vec![5]);
        assert!(parse_anchors("a,b").is_err());
    }
}
