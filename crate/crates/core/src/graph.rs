//! Immutable simple graphs on at most 128 vertices with bitset adjacency.
//!
//! A [`Graph`] stores one neighbor bitset per vertex. Subgraphs are never
//! re-materialized during computation: every algorithm in this crate works
//! on a [`VertexSet`] relative to one fixed parent graph, so memo tables
//! keyed by vertex sets can be shared across an entire verification
//! session. [`Graph::induced`] exists for the places that do need a
//! standalone graph (reports, line graphs, corpus output).

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count so a vertex set packs into one `u128`.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, maximum is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSubset,
}

/// A set of vertices of a particular parent graph, packed into a `u128`.
///
/// The parent association is by convention only; all bits must be below the
/// parent's vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u128 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest-index member, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES);
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

/// Set difference.
impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Distance between two vertices: a hop count, or infinite across
/// components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// True for finite odd values.
    pub fn is_odd(self) -> bool {
        matches!(self, Distance::Finite(d) if d % 2 == 1)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An immutable simple graph: symmetric loop-free adjacency bitsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "vertex cap is {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Path on `n` vertices: 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// Star with center 0 and `k` leaves (`K_{1,k}`).
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    fn check_subset(&self, s: VertexSet) {
        assert!(
            s.is_subset_of(self.full_set()),
            "vertex set {s} not valid for graph on {} vertices",
            self.n
        );
    }

    /// Materializes the induced subgraph on `s`, returning it together with
    /// the parent index of each new vertex (new vertex `i` corresponds to
    /// the `i`-th smallest member of `s`).
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.check_subset(s);
        let parents: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(parents.len());
        for (i, &pu) in parents.iter().enumerate() {
            for (j, &pv) in parents.iter().enumerate().skip(i + 1) {
                if self.has_edge(pu, pv) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        (g, parents)
    }

    /// `h` together with every vertex adjacent to `h`.
    pub fn closed_neighborhood(&self, h: VertexSet) -> VertexSet {
        self.check_subset(h);
        let mut out = h;
        for v in h.iter() {
            out = out | self.adj[v];
        }
        out
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.check_subset(s);
        for v in s.iter() {
            if self.adj[v].intersects(s) {
                return false;
            }
        }
        true
    }

    /// Searches for an induced `K_{1,3}`: a vertex with three pairwise
    /// nonadjacent neighbors. Returns the four vertices if found.
    pub fn find_claw(&self) -> Option<VertexSet> {
        for u in 0..self.n {
            let nbrs: Vec<usize> = self.adj[u].iter().collect();
            if nbrs.len() < 3 {
                continue;
            }
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if self.has_edge(nbrs[i], nbrs[j]) {
                        continue;
                    }
                    for k in j + 1..nbrs.len() {
                        if !self.has_edge(nbrs[i], nbrs[k]) && !self.has_edge(nbrs[j], nbrs[k]) {
                            return Some(
                                [u, nbrs[i], nbrs[j], nbrs[k]].into_iter().collect(),
                            );
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// BFS distance between `u` and `v` inside the whole graph.
    pub fn distance(&self, u: usize, v: usize) -> Distance {
        self.distance_within(self.full_set(), u, v)
    }

    /// BFS distance between `u` and `v` inside the subgraph induced by `s`.
    /// Both endpoints must belong to `s`.
    pub fn distance_within(&self, s: VertexSet, u: usize, v: usize) -> Distance {
        self.check_subset(s);
        assert!(s.contains(u) && s.contains(v), "endpoints must lie in the subset");
        if u == v {
            return Distance::Finite(0);
        }
        let mut dist = vec![u32::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for x in (self.adj[w] & s).iter() {
                if dist[x] == u32::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Distance::Finite(dist[x]);
                    }
                    queue.push_back(x);
                }
            }
        }
        Distance::Infinite
    }

    /// True iff `induced(self, h)` has exactly one component. The empty set
    /// is not connected.
    pub fn is_connected(&self, h: VertexSet) -> bool {
        self.check_subset(h);
        let Some(start) = h.min_vertex() else {
            return false;
        };
        self.reach_within(h, start) == h
    }

    /// Vertices of `h` reachable from `start` walking only inside `h`.
    fn reach_within(&self, h: VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | (self.adj[v] & h);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    /// The unique 2-coloring of the connected subgraph induced by `h`, or
    /// `None` if that subgraph is not bipartite. The class containing the
    /// lowest-index vertex of `h` comes first. Rejects disconnected `h`.
    pub fn bipartition(
        &self,
        h: VertexSet,
    ) -> Result<Option<(VertexSet, VertexSet)>, GraphError> {
        self.check_subset(h);
        if !self.is_connected(h) {
            return Err(GraphError::DisconnectedSubset);
        }
        let start = h.min_vertex().unwrap();
        let mut class_a = VertexSet::singleton(start);
        let mut class_b = VertexSet::EMPTY;
        let mut frontier = class_a;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | (self.adj[v] & h);
            }
            let colored = class_a | class_b;
            // Vertices at the next BFS level alternate color.
            let next_new = next - colored;
            if frontier.is_subset_of(class_a) {
                class_b = class_b | next_new;
            } else {
                class_a = class_a | next_new;
            }
            frontier = next_new;
        }
        // Reject odd cycles: each class must be independent.
        if self.is_independent(class_a) && self.is_independent(class_b) {
            Ok(Some((class_a, class_b)))
        } else {
            Ok(None)
        }
    }

    /// Whole-graph bipartiteness, component by component.
    pub fn is_bipartite(&self) -> bool {
        let mut remaining = self.full_set();
        while let Some(start) = remaining.min_vertex() {
            let comp = self.reach_within(remaining, start);
            if self.bipartition(comp).unwrap().is_none() {
                return false;
            }
            remaining = remaining - comp;
        }
        true
    }

    /// Line graph: one vertex per edge of `self` (edges indexed in the
    /// order of [`Graph::edges`]), adjacent when the edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut g = Graph::empty(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }
}
