//! Deterministic graph corpus generation.
//!
//! Randomness comes from a fixed 64-bit linear congruential generator
//! (Knuth's MMIX multiplier), so a seed identifies the same corpus on any
//! platform. Exhaustive families are generated up to isomorphism by
//! incremental vertex extension with canonical-form deduplication; the
//! canonical form is the lexicographically smallest upper-triangle
//! adjacency encoding over all vertex orderings, computed by backtracking.

use crate::graph::{Graph, VertexSet};

/// 64-bit linear congruential generator:
/// `state <- state * 6364136223846793005 + 1442695040888963407`.
///
/// The high 32 bits of each state are the output word (the low bits of an
/// LCG have short periods).
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Lcg64 {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    pub fn next_u64(&mut self) -> u64 {
        (self.next_u32() as u64) << 32 | self.next_u32() as u64
    }

    /// Uniform value in `0..bound` by modulo reduction. The slight modulo
    /// bias is irrelevant for corpus sampling and keeps the scheme trivially
    /// reproducible.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Bernoulli trial with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        assert!(den > 0 && num <= den);
        self.below(den) < num
    }
}

/// Erdos-Renyi sample: each of the `n(n-1)/2` edges present independently
/// with probability `p_num/p_den`. Edge slots are visited in lexicographic
/// order, one LCG draw each.
pub fn gnp(n: usize, p_num: u64, p_den: u64, rng: &mut Lcg64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random bipartite graph: every vertex is assigned a side by a coin flip,
/// then each cross pair becomes an edge with probability `p_num/p_den`.
pub fn random_bipartite(n: usize, p_num: u64, p_den: u64, rng: &mut Lcg64) -> Graph {
    let mut side = VertexSet::EMPTY;
    for v in 0..n {
        if rng.chance(1, 2) {
            side.insert(v);
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side.contains(u) != side.contains(v) && rng.chance(p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Canonical form of a graph on at most 16 vertices: the minimum, over all
/// vertex orderings, of the upper-triangle adjacency bits packed so that
/// the pair `(i, k)` with `i < k` occupies bit `k(k-1)/2 + i`. Earlier
/// positions are more significant in the minimization, so the form is found
/// by placing vertices one position at a time and pruning any prefix that
/// exceeds the best complete ordering seen.
///
/// Two graphs have equal canonical forms iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "canonical_form supports up to 16 vertices");
    if n <= 1 {
        return 0;
    }
    // best[k] = adjacency chunk of position k (bit i = edge to position i).
    // During the search the vector may be truncated while a strictly better
    // prefix is being extended; any leaf restores full length.
    let mut best: Vec<u16> = Vec::with_capacity(n);
    best.push(0); // position 0 contributes no bits
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut used = VertexSet::EMPTY;
    search(g, &mut placed, &mut used, &mut best);
    let mut packed = 0u128;
    let mut offset = 0;
    for (k, &chunk) in best.iter().enumerate() {
        packed |= (chunk as u128) << offset;
        offset += k;
    }
    packed
}

fn search(g: &Graph, placed: &mut Vec<usize>, used: &mut VertexSet, best: &mut Vec<u16>) {
    let n = g.n();
    let k = placed.len();
    if k == n {
        return;
    }
    // Candidates with their adjacency chunk toward already-placed vertices,
    // ascending so the most promising branch is explored first.
    let mut cands: Vec<(u16, usize)> = Vec::new();
    for v in 0..n {
        if used.contains(v) {
            continue;
        }
        let mut chunk = 0u16;
        for (i, &p) in placed.iter().enumerate() {
            if g.has_edge(v, p) {
                chunk |= 1 << i;
            }
        }
        cands.push((chunk, v));
    }
    cands.sort_unstable();

    // Vertices with identical open or closed neighborhoods are
    // interchangeable; exploring one representative suffices.
    let mut seen_open: Vec<u128> = Vec::new();
    let mut seen_closed: Vec<u128> = Vec::new();

    for (chunk, v) in cands {
        let open = g.neighbors(v).bits();
        let closed = open | 1u128 << v;
        if seen_open.contains(&open) || seen_closed.contains(&closed) {
            continue;
        }
        seen_open.push(open);
        seen_closed.push(closed);

        if k < best.len() {
            if chunk > best[k] {
                // Candidates are ascending; nothing later can match either.
                break;
            }
            if chunk < best[k] {
                best[k] = chunk;
                best.truncate(k + 1);
            }
        } else {
            best.push(chunk);
        }
        placed.push(v);
        used.insert(v);
        search(g, placed, used, best);
        placed.pop();
        used.remove(v);
    }
}

/// Rebuilds the canonical representative graph from a packed canonical form.
pub fn graph_from_packed(n: usize, packed: u128) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for k in 1..n {
        for i in 0..k {
            if packed >> (offset + i) & 1 == 1 {
                edges.push((i, k));
            }
        }
        offset += k;
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All graphs on exactly `1..=max_n` vertices, one representative per
/// isomorphism class, by extending each (n-1)-vertex representative with
/// every possible neighborhood for a new vertex and deduplicating on
/// canonical form. Within one vertex count the output is sorted by packed
/// canonical form.
pub fn all_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    generate_by_extension(max_n, |_| true)
}

/// One representative per isomorphism class of claw-free graphs with
/// `1..=max_n` vertices. Claw-freeness is hereditary under vertex deletion,
/// so pruning non-claw-free graphs at every level loses nothing.
pub fn claw_free_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    generate_by_extension(max_n, Graph::is_claw_free)
}

fn generate_by_extension(max_n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level: Vec<Graph> = Vec::new();
    if max_n >= 1 {
        level.push(Graph::empty(1));
        out.extend(level.iter().cloned());
    }
    for n in 2..=max_n {
        let mut forms: Vec<u128> = Vec::new();
        let mut set = std::collections::HashSet::new();
        for parent in &level {
            let parent_edges = parent.edges();
            for nb_bits in 0u128..1 << (n - 1) {
                let nb = VertexSet::from_bits(nb_bits);
                let mut edges = parent_edges.clone();
                edges.extend(nb.iter().map(|v| (v, n - 1)));
                let cand = Graph::from_edges(n, &edges).unwrap();
                if !keep(&cand) {
                    continue;
                }
                let form = canonical_form(&cand);
                if set.insert(form) {
                    forms.push(form);
                }
            }
        }
        forms.sort_unstable();
        level = forms
            .into_iter()
            .map(|f| graph_from_packed(n, f))
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// The distinct line graphs of all graphs with at most `max_edges` edges
/// (and no isolated vertices; isolated vertices do not affect the line
/// graph). Root graphs are enumerated as lexicographically sorted edge
/// sequences whose prefixes use an initial segment of the vertex labels;
/// every isolated-free graph admits such a labeling (label the vertices in
/// BFS discovery order, component by component). Line graphs are
/// deduplicated by canonical form and sorted by (order, form).
pub fn line_graphs_up_to_iso(max_edges: usize) -> Vec<Graph> {
    assert!(max_edges <= 16, "line graph roots are capped at 16 edges");
    let mut forms: Vec<(usize, u128)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    collect_roots(&mut edges, 0, max_edges, &mut |root_edges| {
        let n_root = root_edges
            .iter()
            .map(|&(_, v)| v + 1)
            .max()
            .unwrap_or(0);
        let root = Graph::from_edges(n_root, root_edges).unwrap();
        let lg = root.line_graph();
        let form = canonical_form(&lg);
        if seen.insert((lg.n(), form)) {
            forms.push((lg.n(), form));
        }
    });
    forms.sort_unstable();
    forms
        .into_iter()
        .map(|(n, f)| graph_from_packed(n, f))
        .collect()
}

/// Extends a lexicographically sorted edge sequence. A new edge `(a, b)`
/// must be lexicographically larger than the previous edge, and any new
/// vertices must be the next unused labels.
fn collect_roots(
    edges: &mut Vec<(usize, usize)>,
    used: usize,
    max_edges: usize,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    visit(edges);
    if edges.len() == max_edges {
        return;
    }
    let last = edges.last().copied();
    let high = (used + 2).min(crate::graph::MAX_VERTICES);
    for a in 0..high {
        for b in a + 1..high {
            // Fresh labels must be taken consecutively: either both
            // endpoints are used, or b is the next label, or the edge is
            // (used, used+1) opening a new component.
            let fresh_ok = b < used || (b == used && a < used) || (b == used + 1 && a == used);
            if !fresh_ok {
                continue;
            }
            if let Some(prev) = last {
                if (a, b) <= prev {
                    continue;
                }
            }
            edges.push((a, b));
            collect_roots(edges, used.max(b + 1), max_edges, visit);
            edges.pop();
        }
    }
}
