//! Enumeration of the index sets behind the polynomial identities:
//! induced connected bipartite subgraphs (optionally anchored at one or two
//! vertices) and simple paths (from a vertex, between two vertices, or with
//! an odd number of vertices).
//!
//! Subgraph enumeration grows a connected set from a root by adding
//! neighbors, with a forbidden set to make every subgraph appear exactly
//! once and incremental 2-coloring to prune odd cycles as soon as they
//! form. Unanchored enumeration roots each subgraph at its lowest vertex.
//!
//! For dense graphs the number of simple paths explodes while the number of
//! distinct path vertex *sets* stays below `2^n`, so the identity verifiers
//! consume [`path_set_counts`] (a subset dynamic program over path
//! endpoints) instead of walking paths one by one. The two views are
//! checked against each other in the test suite.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Distance, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("anchor vertices must be distinct")]
    EqualAnchors,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Anchor requirement for bipartite-subgraph enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchors {
    /// Every induced connected bipartite subgraph.
    None,
    /// Only subgraphs containing the vertex; its class is `class_a`.
    One(usize),
    /// Only subgraphs containing both vertices, with the first vertex's
    /// class as `class_a` and the inner distance recorded.
    Two(usize, usize),
}

/// An induced connected bipartite subgraph together with its 2-coloring
/// and anchor data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSubgraph {
    pub vertices: VertexSet,
    pub class_a: VertexSet,
    pub class_b: VertexSet,
    pub anchored_u: Option<usize>,
    pub anchored_v: Option<usize>,
    /// Distance between the two anchors inside the subgraph (two-anchor
    /// enumeration only).
    pub dist_uv: Option<Distance>,
}

impl BipartiteSubgraph {
    pub fn class_sizes(&self) -> (usize, usize) {
        (self.class_a.len(), self.class_b.len())
    }
}

/// A simple path as its ordered vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePath {
    pub vertices: Vec<usize>,
}

impl SimplePath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), EnumError> {
    if v < g.n() {
        Ok(())
    } else {
        Err(EnumError::VertexOutOfRange { vertex: v, n: g.n() })
    }
}

/// Enumerates induced connected bipartite subgraphs of `g` subject to the
/// anchor requirement, each exactly once, sorted by vertex bitset.
///
/// Coloring convention: with an anchor, the anchor's class is `class_a`;
/// without, the class containing the subgraph's lowest vertex is `class_a`.
pub fn enum_bipartite(g: &Graph, anchors: Anchors) -> Result<Vec<BipartiteSubgraph>, EnumError> {
    let mut out = Vec::new();
    match anchors {
        Anchors::None => {
            for root in g.vertices() {
                // Root at the minimum vertex: only larger vertices allowed.
                let allowed = g.full_set() - VertexSet::full(root);
                grow(g, root, allowed, &mut |vs, a, b| {
                    out.push(BipartiteSubgraph {
                        vertices: vs,
                        class_a: a,
                        class_b: b,
                        anchored_u: None,
                        anchored_v: None,
                        dist_uv: None,
                    });
                });
            }
        }
        Anchors::One(u) => {
            check_vertex(g, u)?;
            grow(g, u, g.full_set(), &mut |vs, a, b| {
                out.push(BipartiteSubgraph {
                    vertices: vs,
                    class_a: a,
                    class_b: b,
                    anchored_u: Some(u),
                    anchored_v: None,
                    dist_uv: None,
                });
            });
        }
        Anchors::Two(u, v) => {
            check_vertex(g, u)?;
            check_vertex(g, v)?;
            if u == v {
                return Err(EnumError::EqualAnchors);
            }
            grow(g, u, g.full_set(), &mut |vs, a, b| {
                if vs.contains(v) {
                    out.push(BipartiteSubgraph {
                        vertices: vs,
                        class_a: a,
                        class_b: b,
                        anchored_u: Some(u),
                        anchored_v: Some(v),
                        dist_uv: Some(g.distance_within(vs, u, v)),
                    });
                }
            });
        }
    }
    out.sort_by_key(|h| h.vertices);
    Ok(out)
}

/// Connected-subgraph extension from `root` within `allowed`, yielding each
/// connected bipartite vertex set exactly once along with its 2-coloring
/// (root in class A). Branches die as soon as the coloring breaks, since a
/// superset of a non-bipartite induced subgraph stays non-bipartite.
fn grow(
    g: &Graph,
    root: usize,
    allowed: VertexSet,
    yield_fn: &mut impl FnMut(VertexSet, VertexSet, VertexSet),
) {
    let set = VertexSet::singleton(root);
    let cand = (g.neighbors(root) & allowed) - set;
    step(g, allowed, set, set, VertexSet::EMPTY, cand, VertexSet::EMPTY, yield_fn);
}

#[allow(clippy::too_many_arguments)]
fn step(
    g: &Graph,
    allowed: VertexSet,
    set: VertexSet,
    class_a: VertexSet,
    class_b: VertexSet,
    cand: VertexSet,
    forbidden: VertexSet,
    yield_fn: &mut impl FnMut(VertexSet, VertexSet, VertexSet),
) {
    yield_fn(set, class_a, class_b);
    let mut blocked = forbidden;
    for v in cand.iter() {
        let nbrs = g.neighbors(v);
        let touches_a = nbrs.intersects(class_a);
        let touches_b = nbrs.intersects(class_b);
        if !(touches_a && touches_b) {
            // v joins the class opposite its neighbors.
            let (na, nb) = if touches_a {
                (class_a, class_b.with(v))
            } else {
                (class_a.with(v), class_b)
            };
            let next_set = set.with(v);
            let next_cand = ((cand | (nbrs & allowed)) - next_set) - blocked;
            step(g, allowed, next_set, na, nb, next_cand, blocked, yield_fn);
        }
        // Whether v extended the coloring or broke it, later branches must
        // not re-add it.
        blocked.insert(v);
    }
}

/// Enumerates simple paths starting at `from`. With `to` absent, every
/// simple path from `from` including the one-vertex path; with `to`
/// present, every path from `from` to `to` (at least one edge). Paths come
/// out in lexicographic order of their vertex sequences.
pub fn enum_paths(g: &Graph, from: usize, to: Option<usize>) -> Result<Vec<SimplePath>, EnumError> {
    check_vertex(g, from)?;
    if let Some(t) = to {
        check_vertex(g, t)?;
        if t == from {
            return Err(EnumError::EqualAnchors);
        }
    }
    let mut out = Vec::new();
    let mut current = vec![from];
    path_dfs(g, &mut current, VertexSet::singleton(from), to, &mut out);
    Ok(out)
}

fn path_dfs(
    g: &Graph,
    current: &mut Vec<usize>,
    visited: VertexSet,
    to: Option<usize>,
    out: &mut Vec<SimplePath>,
) {
    let last = *current.last().unwrap();
    match to {
        None => out.push(SimplePath {
            vertices: current.clone(),
        }),
        Some(t) if t == last => {
            out.push(SimplePath {
                vertices: current.clone(),
            });
            return; // extensions would revisit t
        }
        _ => {}
    }
    for v in (g.neighbors(last) - visited).iter() {
        current.push(v);
        path_dfs(g, current, visited.with(v), to, out);
        current.pop();
    }
}

/// Enumerates simple paths with an odd number of vertices, one orientation
/// per undirected path: the endpoint with the smaller index comes first.
/// One-vertex paths are included.
pub fn enum_odd_paths(g: &Graph) -> Vec<SimplePath> {
    let mut out = Vec::new();
    for start in g.vertices() {
        for path in enum_paths(g, start, None).unwrap() {
            if path.len() % 2 == 1 && (path.len() == 1 || path.first() < path.last()) {
                out.push(path);
            }
        }
    }
    out
}

/// Number of simple paths from `from`, grouped by the path's vertex set.
///
/// `counts[set][w]` is the number of simple paths from `from` to `w` whose
/// vertex set is exactly `set`; the one-vertex path contributes
/// `counts[{from}][from] = 1`.
pub struct PathSetCounts {
    pub from: usize,
    counts: HashMap<VertexSet, Vec<u64>>,
}

impl PathSetCounts {
    /// Total path count per vertex set (for sums over all paths from `u`).
    pub fn totals(&self) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
        self.counts
            .iter()
            .map(|(&s, ends)| (s, ends.iter().sum()))
    }

    /// Count of paths from `from` to `to` per vertex set (for sums over
    /// paths between two vertices). Excludes the one-vertex path.
    pub fn totals_to(&self, to: usize) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
        self.counts.iter().filter_map(move |(&s, ends)| {
            let c = ends[to];
            (c > 0 && to != self.from).then_some((s, c))
        })
    }
}

/// Subset dynamic program over (vertex set, endpoint): extending any
/// counted path by an unvisited neighbor of its endpoint.
pub fn path_set_counts(g: &Graph, from: usize) -> PathSetCounts {
    let n = g.n();
    assert!(from < n);
    let mut counts: HashMap<VertexSet, Vec<u64>> = HashMap::new();
    let mut frontier: Vec<VertexSet> = vec![VertexSet::singleton(from)];
    let mut start = vec![0u64; n];
    start[from] = 1;
    counts.insert(VertexSet::singleton(from), start);
    while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for s in frontier {
            let ends = counts[&s].clone();
            for (w, &c) in ends.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for v in (g.neighbors(w) - s).iter() {
                    let ns = s.with(v);
                    let entry = counts.entry(ns).or_insert_with(|| {
                        next_frontier.push(ns);
                        vec![0u64; n]
                    });
                    entry[v] += c;
                }
            }
        }
        frontier = next_frontier;
    }
    PathSetCounts { from, counts }
}
