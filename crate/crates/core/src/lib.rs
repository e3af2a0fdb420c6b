//! Exact algebraic toolkit for independence and matching polynomials of
//! small simple graphs.
//!
//! The crate computes `I(G,x)` and `mu(G,x)` over arbitrary-precision
//! integers, enumerates the combinatorial index sets (induced connected
//! bipartite subgraphs and simple paths) behind their product-difference
//! identities, verifies each identity symbolically by constructing both
//! sides independently, and certifies real-rootedness of independence
//! polynomials with exact Sturm sequences.
//!
//! Everything is exact: no floating point appears anywhere in a decision
//! path. Graphs are capped at 128 vertices so vertex sets fit in a single
//! `u128` bitset.

pub mod corpus;
pub mod enumerate;
pub mod graph;
pub mod graph_poly;
pub mod identity;
pub mod poly;
pub mod roots;

pub use graph::{Distance, Graph, GraphError, VertexSet};
pub use poly::{BiPoly, PolyError, RatPoly, UniPoly};
