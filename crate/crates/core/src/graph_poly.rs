//! Independence and matching polynomials of induced subgraphs.
//!
//! The production path computes `I` by the deletion recurrence
//! `I(G) = I(G - u) + x * I(G - N[u])` and `mu` by
//! `mu(G) = x * mu(G - u) - sum_{v ~ u} mu(G - u - v)`, both memoized on
//! the vertex set within one fixed parent graph. Brute-force subset
//! enumerators serve as independent oracles; they share nothing with the
//! recurrences beyond the graph representation itself.

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::poly::UniPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle limited to {limit} vertices, got {got}")]
    TooManyVertices { got: usize, limit: usize },
    #[error("oracle limited to {limit} edges, got {got}")]
    TooManyEdges { got: usize, limit: usize },
}

/// Memo table from a vertex subset of one fixed parent graph to the
/// polynomial of the subgraph it induces. One table must never be shared
/// between different parent graphs or different polynomial kinds.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    map: HashMap<VertexSet, UniPoly>,
}

impl MemoTable {
    pub fn new() -> MemoTable {
        MemoTable::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, s: VertexSet) -> Option<&UniPoly> {
        self.map.get(&s)
    }

    /// Iterates over memoized entries (arbitrary order).
    pub fn entries(&self) -> impl Iterator<Item = (&VertexSet, &UniPoly)> {
        self.map.iter()
    }
}

/// Pivot rule: vertex of maximum degree inside `s`, lowest index on ties.
fn pivot(g: &Graph, s: VertexSet) -> usize {
    let mut best = usize::MAX;
    let mut best_deg = 0;
    for v in s.iter() {
        let deg = (g.neighbors(v) & s).len();
        if best == usize::MAX || deg > best_deg {
            best = v;
            best_deg = deg;
        }
    }
    best
}

/// Independence polynomial of the subgraph of `g` induced by `s`,
/// memoized in `memo`.
pub fn independence_poly(g: &Graph, s: VertexSet, memo: &mut MemoTable) -> UniPoly {
    if s.is_empty() {
        return UniPoly::one();
    }
    if let Some(p) = memo.map.get(&s) {
        return p.clone();
    }
    let u = pivot(g, s);
    let without_u = independence_poly(g, s.without(u), memo);
    let without_closed = independence_poly(g, s - g.closed_neighborhood(VertexSet::singleton(u)), memo);
    let result = &without_u + &without_closed.mul_xpow(1);
    memo.map.insert(s, result.clone());
    result
}

/// Independence polynomial of the whole graph, with a throwaway memo.
pub fn independence_poly_of(g: &Graph) -> UniPoly {
    independence_poly(g, g.full_set(), &mut MemoTable::new())
}

/// Oracle: counts independent subsets of `s` by exhaustive enumeration.
/// Capped at 25 vertices.
pub fn independence_poly_oracle(g: &Graph, s: VertexSet) -> Result<UniPoly, OracleError> {
    const LIMIT: usize = 25;
    let members: Vec<usize> = s.iter().collect();
    if members.len() > LIMIT {
        return Err(OracleError::TooManyVertices {
            got: members.len(),
            limit: LIMIT,
        });
    }
    let mut counts = vec![BigInt::from(0); members.len() + 1];
    for mask in 0u32..1 << members.len() {
        let subset: VertexSet = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if g.is_independent(subset) {
            counts[subset.len()] += 1;
        }
    }
    Ok(UniPoly::from_coeffs(counts))
}

/// Signed matching polynomial of the subgraph induced by `s`:
/// `sum_k (-1)^k m_k x^{n-2k}` with `n = |s|`.
pub fn matching_poly(g: &Graph, s: VertexSet) -> UniPoly {
    matching_poly_memo(g, s, &mut MemoTable::new())
}

/// Matching polynomial with a caller-provided memo table (keyed by vertex
/// set, like the independence memo but holding matching polynomials).
pub fn matching_poly_memo(g: &Graph, s: VertexSet, memo: &mut MemoTable) -> UniPoly {
    if s.is_empty() {
        return UniPoly::one();
    }
    if let Some(p) = memo.map.get(&s) {
        return p.clone();
    }
    let u = pivot(g, s);
    let rest = s.without(u);
    let mut result = matching_poly_memo(g, rest, memo).mul_xpow(1);
    for v in (g.neighbors(u) & s).iter() {
        result = &result - &matching_poly_memo(g, rest.without(v), memo);
    }
    memo.map.insert(s, result.clone());
    result
}

/// Oracle: enumerates all edge subsets of the subgraph induced by `s` and
/// tallies matchings by size. Capped at 20 edges.
pub fn matching_poly_oracle(g: &Graph, s: VertexSet) -> Result<UniPoly, OracleError> {
    const LIMIT: usize = 20;
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| s.contains(u) && s.contains(v))
        .collect();
    if edges.len() > LIMIT {
        return Err(OracleError::TooManyEdges {
            got: edges.len(),
            limit: LIMIT,
        });
    }
    let n = s.len();
    let mut counts = vec![BigInt::from(0); n / 2 + 1];
    for mask in 0u32..1 << edges.len() {
        let mut covered = VertexSet::EMPTY;
        let mut ok = true;
        let mut size = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            if covered.contains(u) || covered.contains(v) {
                ok = false;
                break;
            }
            covered.insert(u);
            covered.insert(v);
            size += 1;
        }
        if ok {
            counts[size] += 1;
        }
    }
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, c) in counts.into_iter().enumerate() {
        if 2 * k <= n {
            let signed = if k % 2 == 0 { c } else { -c };
            coeffs[n - 2 * k] = signed;
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Checks the derivative identity `I'(G) = sum_u I(G - N[u])` by computing
/// both sides independently.
pub fn independence_derivative_check(g: &Graph) -> bool {
    let mut memo = MemoTable::new();
    let full = g.full_set();
    let derivative = independence_poly(g, full, &mut memo).derivative();
    let mut sum = UniPoly::zero();
    for u in g.vertices() {
        let rest = full - g.closed_neighborhood(VertexSet::singleton(u));
        sum = &sum + &independence_poly(g, rest, &mut memo);
    }
    derivative == sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{gnp, Lcg64};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(coeffs)
    }

    fn ipoly(g: &Graph) -> UniPoly {
        independence_poly_of(g)
    }

    #[test]
    fn independence_base_cases() {
        assert_eq!(ipoly(&Graph::empty(0)), UniPoly::one());
        assert_eq!(
            independence_poly(&Graph::complete(3), VertexSet::EMPTY, &mut MemoTable::new()),
            UniPoly::one()
        );
        for n in 1..8 {
            assert_eq!(ipoly(&Graph::complete(n)), p(&[1, n as i64]));
        }
    }

    #[test]
    fn independence_examples_match_oracle() {
        // Frozen values, each re-derived by the subset-scan oracle.
        let cases: Vec<(Graph, UniPoly)> = vec![
            (Graph::star(3), p(&[1, 4, 3, 1])),
            (Graph::cycle(4), p(&[1, 4, 2])),
            (Graph::path(3), p(&[1, 3, 1])),
            (Graph::complete(2), p(&[1, 2])),
            (Graph::empty(1), p(&[1, 1])),
            (Graph::cycle(5), p(&[1, 5, 5])),
        ];
        for (g, expected) in cases {
            assert_eq!(
                independence_poly_oracle(&g, g.full_set()).unwrap(),
                expected,
                "oracle disagrees on frozen value for {g:?}"
            );
            assert_eq!(ipoly(&g), expected);
        }
    }

    #[test]
    fn independence_recurrence_matches_oracle_on_random_graphs() {
        let mut rng = Lcg64::new(2024);
        for trial in 0..120 {
            let n = 1 + trial % 10;
            let g = gnp(n, 1, 2, &mut rng);
            assert_eq!(
                ipoly(&g),
                independence_poly_oracle(&g, g.full_set()).unwrap()
            );
        }
    }

    #[test]
    fn independence_on_subsets_matches_oracle() {
        let mut rng = Lcg64::new(55);
        let g = gnp(9, 1, 2, &mut rng);
        let mut memo = MemoTable::new();
        for bits in 0u128..1 << 9 {
            let s = VertexSet::from_bits(bits);
            assert_eq!(
                independence_poly(&g, s, &mut memo),
                independence_poly_oracle(&g, s).unwrap()
            );
        }
    }

    #[test]
    fn memo_entries_are_audited_by_oracle() {
        let g = Graph::cycle(7);
        let mut memo = MemoTable::new();
        independence_poly(&g, g.full_set(), &mut memo);
        assert!(!memo.is_empty());
        for (&s, poly) in memo.entries() {
            assert_eq!(poly, &independence_poly_oracle(&g, s).unwrap());
        }
    }

    #[test]
    fn recurrence_holds_for_every_pivot() {
        let mut rng = Lcg64::new(77);
        for _ in 0..40 {
            let g = gnp(8, 1, 2, &mut rng);
            let full = g.full_set();
            let mut memo = MemoTable::new();
            let whole = independence_poly(&g, full, &mut memo);
            for u in g.vertices() {
                let minus_u = independence_poly(&g, full.without(u), &mut memo);
                let minus_nu = independence_poly(
                    &g,
                    full - g.closed_neighborhood(VertexSet::singleton(u)),
                    &mut memo,
                );
                assert_eq!(whole, &minus_u + &minus_nu.mul_xpow(1));
            }
        }
    }

    #[test]
    fn independence_degree_is_independence_number() {
        let mut rng = Lcg64::new(31);
        for trial in 0..60 {
            let n = 1 + trial % 9;
            let g = gnp(n, 2, 5, &mut rng);
            let alpha = (0u128..1 << n)
                .filter(|&bits| g.is_independent(VertexSet::from_bits(bits)))
                .map(|bits| VertexSet::from_bits(bits).len())
                .max()
                .unwrap();
            assert_eq!(ipoly(&g).degree(), Some(alpha));
        }
    }

    #[test]
    fn oracle_cap_is_a_hard_error() {
        let g = Graph::empty(26);
        assert_eq!(
            independence_poly_oracle(&g, g.full_set()),
            Err(OracleError::TooManyVertices { got: 26, limit: 25 })
        );
        let big = Graph::complete(7); // 21 edges
        assert_eq!(
            matching_poly_oracle(&big, big.full_set()),
            Err(OracleError::TooManyEdges { got: 21, limit: 20 })
        );
    }

    #[test]
    fn matching_examples_match_oracle() {
        let cases: Vec<(Graph, UniPoly)> = vec![
            (Graph::empty(1), p(&[0, 1])),
            (Graph::complete(2), p(&[-1, 0, 1])),
            (Graph::path(3), p(&[0, -2, 0, 1])),
            (Graph::complete(3), p(&[0, -3, 0, 1])),
            (Graph::cycle(4), p(&[2, 0, -4, 0, 1])),
            (Graph::empty(4), p(&[0, 0, 0, 0, 1])),
            (Graph::empty(0), p(&[1])),
        ];
        for (g, expected) in cases {
            assert_eq!(
                matching_poly_oracle(&g, g.full_set()).unwrap(),
                expected,
                "oracle disagrees on frozen value for {g:?}"
            );
            assert_eq!(matching_poly(&g, g.full_set()), expected);
        }
    }

    #[test]
    fn matching_recurrence_matches_oracle_on_random_graphs() {
        let mut rng = Lcg64::new(909);
        let mut checked = 0;
        for trial in 0..120 {
            let n = 1 + trial % 8;
            let g = gnp(n, 1, 2, &mut rng);
            if g.edge_count() > 20 {
                continue;
            }
            checked += 1;
            assert_eq!(
                matching_poly(&g, g.full_set()),
                matching_poly_oracle(&g, g.full_set()).unwrap()
            );
        }
        assert!(checked > 100);
    }

    #[test]
    fn polynomials_multiply_over_disjoint_components() {
        let mut rng = Lcg64::new(4242);
        for _ in 0..30 {
            let a = gnp(4, 1, 2, &mut rng);
            let b = gnp(5, 1, 2, &mut rng);
            // Disjoint union: b's vertices shifted by 4.
            let mut edges = a.edges();
            edges.extend(b.edges().iter().map(|&(u, v)| (u + 4, v + 4)));
            let ab = Graph::from_edges(9, &edges).unwrap();
            assert_eq!(ipoly(&ab), &ipoly(&a) * &ipoly(&b));
            assert_eq!(
                matching_poly(&ab, ab.full_set()),
                &matching_poly(&a, a.full_set()) * &matching_poly(&b, b.full_set())
            );
        }
    }

    /// Coefficients of I(L(H)) are the matching counts of H.
    #[test]
    fn line_graph_bridge() {
        let mut rng = Lcg64::new(60);
        for _ in 0..40 {
            let h = gnp(6, 1, 2, &mut rng);
            let lg = h.line_graph();
            let ind = ipoly(&lg);
            // m_k from the signed matching polynomial of H.
            let mu = matching_poly(&h, h.full_set());
            let n = h.n();
            let alpha = ind.degree().unwrap_or(0);
            for k in 0..=n / 2 {
                let from_matching = {
                    let c = mu.coeff(n - 2 * k);
                    if k % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                };
                let from_independence = if k <= alpha {
                    ind.coeff(k)
                } else {
                    BigInt::from(0)
                };
                assert_eq!(from_independence, from_matching, "m_{k} mismatch");
            }
        }
    }

    #[test]
    fn derivative_identity() {
        assert!(independence_derivative_check(&Graph::empty(1)));
        assert!(independence_derivative_check(&Graph::cycle(4)));
        // C_4 by hand: I' = 4 + 4x and each G - N[u] is a single vertex.
        let c4 = Graph::cycle(4);
        assert_eq!(ipoly(&c4).derivative(), p(&[4, 4]));
        let mut rng = Lcg64::new(8);
        for _ in 0..25 {
            assert!(independence_derivative_check(&gnp(8, 1, 2, &mut rng)));
        }
    }
}
