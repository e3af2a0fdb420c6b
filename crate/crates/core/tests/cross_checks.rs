//! Cross-module consistency: the verifiers' optimized right-hand-side
//! accumulators must coincide with literal term-by-term constructions
//! driven by the public enumeration API and plain polynomial arithmetic.

use num_bigint::BigInt;

use indpoly::corpus::{gnp, Lcg64};
use indpoly::enumerate::{enum_bipartite, enum_paths, Anchors};
use indpoly::graph::Graph;
use indpoly::graph_poly::{independence_poly, matching_poly, MemoTable};
use indpoly::identity::{verify_c1b, verify_m1, verify_m2, verify_t1, verify_t2, verify_t3, SidePoly};
use indpoly::poly::{BiPoly, UniPoly};

fn small_corpus() -> Vec<Graph> {
    let mut graphs = vec![
        Graph::empty(1),
        Graph::empty(3),
        Graph::complete(2),
        Graph::path(4),
        Graph::cycle(5),
        Graph::cycle(6),
        Graph::star(3),
        Graph::complete(4),
        Graph::complete_bipartite(2, 3),
    ];
    let mut rng = Lcg64::new(0xCAFE);
    for trial in 0..12 {
        graphs.push(gnp(5 + trial % 3, 1, 2, &mut rng));
    }
    graphs
}

/// `I(G - N[H])` by direct recurrence over the surviving set.
fn poly_minus_closure(g: &Graph, h: indpoly::VertexSet, memo: &mut MemoTable) -> UniPoly {
    independence_poly(g, g.full_set() - g.closed_neighborhood(h), memo)
}

#[test]
fn t1_rhs_matches_literal_sum_over_anchored_enumeration() {
    for g in small_corpus() {
        let mut memo = MemoTable::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let mut rhs = UniPoly::zero();
                for h in enum_bipartite(&g, Anchors::Two(u, v)).unwrap() {
                    let d = h.dist_uv.unwrap();
                    let sign = if d.is_odd() { 1 } else { -1 };
                    let p = poly_minus_closure(&g, h.vertices, &mut memo);
                    let term = (&p * &p)
                        .mul_xpow(h.vertices.len())
                        .scale(&BigInt::from(sign));
                    rhs = &rhs + &term;
                }
                let report = verify_t1(&g, u, v).unwrap();
                assert!(report.holds);
                assert_eq!(report.rhs, Some(SidePoly::Uni(rhs)));
            }
        }
    }
}

#[test]
fn t2_rhs_matches_literal_sum_over_anchored_enumeration() {
    for g in small_corpus() {
        let mut memo = MemoTable::new();
        for u in 0..g.n() {
            let mut rhs = BiPoly::zero();
            for h in enum_bipartite(&g, Anchors::One(u)).unwrap() {
                assert!(h.class_a.contains(u));
                let (a, b) = h.class_sizes();
                let p = poly_minus_closure(&g, h.vertices, &mut memo);
                let antisym = BiPoly::monomial(BigInt::from(1), a as u32, b as u32)
                    - BiPoly::monomial(BigInt::from(1), b as u32, a as u32);
                rhs = &rhs + &(&(&p.embed_x() * &p.embed_y()) * &antisym);
            }
            let report = verify_t2(&g, u).unwrap();
            assert!(report.holds);
            assert_eq!(report.rhs, Some(SidePoly::Bi(rhs)));
        }
    }
}

#[test]
fn t3_and_c1b_rhs_match_literal_unanchored_sums() {
    for g in small_corpus() {
        let mut memo = MemoTable::new();
        let mut t3_rhs = BiPoly::zero();
        let mut c1b_rhs = UniPoly::zero();
        for h in enum_bipartite(&g, Anchors::None).unwrap() {
            let (p_size, r_size) = h.class_sizes();
            let diff = p_size as i64 - r_size as i64;
            let p = poly_minus_closure(&g, h.vertices, &mut memo);
            let antisym = BiPoly::monomial(BigInt::from(1), p_size as u32, r_size as u32)
                - BiPoly::monomial(BigInt::from(1), r_size as u32, p_size as u32);
            let pair = &p.embed_x() * &p.embed_y();
            t3_rhs = &t3_rhs + &(&pair * &antisym).scale(&BigInt::from(diff));
            c1b_rhs = &c1b_rhs
                + &(&p * &p)
                    .mul_xpow(h.vertices.len())
                    .scale(&BigInt::from(-diff * diff));
        }
        let t3 = verify_t3(&g);
        assert!(t3.holds);
        assert_eq!(t3.rhs, Some(SidePoly::Bi(t3_rhs)));
        let c1b = verify_c1b(&g);
        assert!(c1b.holds);
        assert_eq!(c1b.rhs, Some(SidePoly::Uni(c1b_rhs)));
    }
}

/// Literal path-by-path sums versus the grouped subset-count construction
/// inside the M1/M2 verifiers.
#[test]
fn matching_identities_match_literal_path_sums() {
    for g in small_corpus() {
        for u in 0..g.n() {
            let mut m2_inner = BiPoly::zero();
            for path in enum_paths(&g, u, None).unwrap() {
                let rest = g.full_set() - path.vertex_set();
                let mu = matching_poly(&g, rest);
                m2_inner = &m2_inner + &(&mu.embed_x() * &mu.embed_y());
            }
            let m2_rhs = &BiPoly::x_minus_y() * &m2_inner;
            let report = verify_m2(&g, u).unwrap();
            assert!(report.holds);
            assert_eq!(report.rhs, Some(SidePoly::Bi(m2_rhs)));

            for v in u + 1..g.n() {
                let mut m1_rhs = UniPoly::zero();
                for path in enum_paths(&g, u, Some(v)).unwrap() {
                    let rest = g.full_set() - path.vertex_set();
                    let mu = matching_poly(&g, rest);
                    m1_rhs = &m1_rhs + &(&mu * &mu);
                }
                let report = verify_m1(&g, u, v).unwrap();
                assert!(report.holds);
                assert_eq!(report.rhs, Some(SidePoly::Uni(m1_rhs)));
            }
        }
    }
}

/// The enumeration contract: streams sorted by vertex bitset, no
/// duplicates, and anchored streams equal the filtered unanchored stream
/// as vertex sets.
#[test]
fn enumeration_order_and_anchored_filtering() {
    for g in small_corpus() {
        let unanchored = enum_bipartite(&g, Anchors::None).unwrap();
        let bits: Vec<u128> = unanchored.iter().map(|h| h.vertices.bits()).collect();
        let mut sorted = bits.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(bits, sorted, "unanchored stream must be sorted and duplicate-free");
        for u in 0..g.n() {
            let anchored: Vec<u128> = enum_bipartite(&g, Anchors::One(u))
                .unwrap()
                .iter()
                .map(|h| h.vertices.bits())
                .collect();
            let filtered: Vec<u128> = unanchored
                .iter()
                .filter(|h| h.vertices.contains(u))
                .map(|h| h.vertices.bits())
                .collect();
            assert_eq!(anchored, filtered);
        }
    }
}
