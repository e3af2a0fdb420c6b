//! Symbolic verification of the product-difference identities linking
//! independence and matching polynomials to sums over induced connected
//! bipartite subgraphs and simple paths.
//!
//! Each verifier constructs the left side from whole-graph polynomials and
//! the right side by summing enumerated terms; the two constructions share
//! nothing but the memoized subgraph polynomials. A [`Verifier`] holds the
//! per-graph caches (memo tables, the unanchored subgraph list, squared
//! polynomials) so a batch run over many anchors reuses work; the free
//! functions are one-shot conveniences.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enumerate::{path_set_counts, Anchors, BipartiteSubgraph, PathSetCounts};
use crate::enumerate::enum_bipartite;
use crate::graph::{Distance, Graph, VertexSet};
use crate::graph_poly::{independence_poly, matching_poly_memo, MemoTable};
use crate::poly::{BiPoly, UniPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("anchor vertices must be distinct")]
    EqualAnchors,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the sign rule requires a bipartite graph")]
    NotBipartite,
    #[error("the evaluation point must be positive")]
    NonPositivePoint,
}

/// Which identity a report describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    T1,
    T2,
    T3,
    C1a,
    C1b,
    M1,
    M2,
    Ms,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::T3,
        IdentityId::C1a,
        IdentityId::C1b,
        IdentityId::M1,
        IdentityId::M2,
        IdentityId::Ms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1 => "T1",
            IdentityId::T2 => "T2",
            IdentityId::T3 => "T3",
            IdentityId::C1a => "C1a",
            IdentityId::C1b => "C1b",
            IdentityId::M1 => "M1",
            IdentityId::M2 => "M2",
            IdentityId::Ms => "MS",
        }
    }

    /// Number of anchor vertices the identity takes.
    pub fn arity(self) -> usize {
        match self {
            IdentityId::T3 | IdentityId::C1b => 0,
            IdentityId::T2 | IdentityId::C1a | IdentityId::M2 => 1,
            IdentityId::T1 | IdentityId::M1 | IdentityId::Ms => 2,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of an identity: univariate or bivariate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SidePoly {
    Uni(UniPoly),
    Bi(BiPoly),
}

impl SidePoly {
    pub fn text(&self) -> String {
        match self {
            SidePoly::Uni(p) => p.to_string(),
            SidePoly::Bi(p) => p.to_string(),
        }
    }
}

impl Serialize for SidePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            SidePoly::Uni(p) => {
                let mut s = serializer.serialize_struct("SidePoly", 3)?;
                s.serialize_field("kind", "univariate")?;
                s.serialize_field("text", &p.to_string())?;
                let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                s.serialize_field("coeffs", &coeffs)?;
                s.end()
            }
            SidePoly::Bi(p) => {
                let mut s = serializer.serialize_struct("SidePoly", 3)?;
                s.serialize_field("kind", "bivariate")?;
                s.serialize_field("text", &p.to_string())?;
                let terms: Vec<(u32, u32, String)> = p
                    .terms()
                    .map(|(&(i, j), c)| (i, j, c.to_string()))
                    .collect();
                s.serialize_field("terms", &terms)?;
                s.end()
            }
        }
    }
}

/// Outcome of one identity check: both sides in canonical form, whether
/// they agree, and how many summands the right side ranged over.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub anchors: Vec<usize>,
    pub lhs: SidePoly,
    /// Absent for the evaluation-based MS sign check, which has no
    /// symbolic right side.
    pub rhs: Option<SidePoly>,
    pub holds: bool,
    pub term_count: u64,
    pub notes: String,
}

/// Sign of an exact rational quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "POSITIVE")]
    Positive,
    #[serde(rename = "ZERO")]
    Zero,
    #[serde(rename = "NEGATIVE")]
    Negative,
}

impl Sign {
    fn of(value: &BigRational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Positive => "POSITIVE",
            Sign::Zero => "ZERO",
            Sign::Negative => "NEGATIVE",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the bipartite sign rule: the exact sign of
/// `I(G-u,x)I(G-v,x) - I(G,x)I(G-u-v,x)` at a positive rational point
/// against the parity of `d_G(u,v)`.
#[derive(Clone, Debug)]
pub struct MsSignReport {
    pub anchors: (usize, usize),
    pub x: BigRational,
    pub value: BigRational,
    pub actual: Sign,
    pub predicted: Sign,
    pub distance: Distance,
    pub matches: bool,
    /// The difference polynomial itself, for reporting.
    pub difference: UniPoly,
}

impl MsSignReport {
    pub fn to_identity_report(&self) -> IdentityReport {
        IdentityReport {
            identity_id: IdentityId::Ms.as_str().to_string(),
            anchors: vec![self.anchors.0, self.anchors.1],
            lhs: SidePoly::Uni(self.difference.clone()),
            rhs: None,
            holds: self.matches,
            term_count: 0,
            notes: format!(
                "x = {}; value = {}; actual sign {}; predicted {} from d_G(u,v) = {}",
                self.x, self.value, self.actual, self.predicted, self.distance
            ),
        }
    }
}

/// Dense accumulator for univariate right-hand sides.
struct UniAcc {
    coeffs: Vec<BigInt>,
}

impl UniAcc {
    fn new(capacity: usize) -> UniAcc {
        UniAcc {
            coeffs: vec![BigInt::zero(); capacity],
        }
    }

    fn add_scaled(&mut self, p: &UniPoly, scale: &BigInt, shift: usize) {
        for (k, c) in p.coeffs().iter().enumerate() {
            self.coeffs[k + shift] += c * scale;
        }
    }

    fn into_poly(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs)
    }
}

/// Dense accumulator for bivariate right-hand sides.
struct BiAcc {
    grid: Vec<Vec<BigInt>>,
}

impl BiAcc {
    fn new(capacity: usize) -> BiAcc {
        BiAcc {
            grid: vec![vec![BigInt::zero(); capacity]; capacity],
        }
    }

    /// Adds `scale * (x^a y^b - x^b y^a) * p(x) * p(y)`.
    fn add_antisymmetric(&mut self, p: &UniPoly, scale: &BigInt, a: usize, b: usize) {
        for (i, ci) in p.coeffs().iter().enumerate() {
            for (j, cj) in p.coeffs().iter().enumerate() {
                let prod = ci * cj * scale;
                self.grid[i + a][j + b] += &prod;
                self.grid[i + b][j + a] -= &prod;
            }
        }
    }

    /// Adds `scale * p(x) * p(y)`.
    fn add_product(&mut self, p: &UniPoly, scale: &BigInt) {
        for (i, ci) in p.coeffs().iter().enumerate() {
            for (j, cj) in p.coeffs().iter().enumerate() {
                self.grid[i][j] += ci * cj * scale;
            }
        }
    }

    fn into_poly(self) -> BiPoly {
        BiPoly::from_terms(self.grid.into_iter().enumerate().flat_map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(move |(j, c)| ((i as u32, j as u32), c))
        }))
    }
}

/// Per-graph verification session: shared memo tables and enumeration
/// caches across any number of identity checks on one graph.
pub struct Verifier<'g> {
    g: &'g Graph,
    ind_memo: MemoTable,
    mat_memo: MemoTable,
    bip: Option<Rc<Vec<BipartiteSubgraph>>>,
    paths: HashMap<usize, Rc<PathSetCounts>>,
    ind_squares: HashMap<VertexSet, Rc<UniPoly>>,
    mat_squares: HashMap<VertexSet, Rc<UniPoly>>,
}

impl<'g> Verifier<'g> {
    pub fn new(g: &'g Graph) -> Verifier<'g> {
        Verifier {
            g,
            ind_memo: MemoTable::new(),
            mat_memo: MemoTable::new(),
            bip: None,
            paths: HashMap::new(),
            ind_squares: HashMap::new(),
            mat_squares: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    fn check_anchor(&self, v: usize) -> Result<(), IdentityError> {
        if v < self.g.n() {
            Ok(())
        } else {
            Err(IdentityError::VertexOutOfRange { vertex: v, n: self.g.n() })
        }
    }

    fn ipoly(&mut self, s: VertexSet) -> UniPoly {
        independence_poly(self.g, s, &mut self.ind_memo)
    }

    fn mpoly(&mut self, s: VertexSet) -> UniPoly {
        matching_poly_memo(self.g, s, &mut self.mat_memo)
    }

    /// `I(G - N[H])` squared, cached by the surviving vertex set.
    fn ind_square(&mut self, rest: VertexSet) -> Rc<UniPoly> {
        if let Some(sq) = self.ind_squares.get(&rest) {
            return Rc::clone(sq);
        }
        let p = self.ipoly(rest);
        let sq = Rc::new(&p * &p);
        self.ind_squares.insert(rest, Rc::clone(&sq));
        sq
    }

    fn mat_square(&mut self, rest: VertexSet) -> Rc<UniPoly> {
        if let Some(sq) = self.mat_squares.get(&rest) {
            return Rc::clone(sq);
        }
        let p = self.mpoly(rest);
        let sq = Rc::new(&p * &p);
        self.mat_squares.insert(rest, Rc::clone(&sq));
        sq
    }

    /// The unanchored list of induced connected bipartite subgraphs,
    /// computed once per session. Anchored verifications filter it; the
    /// equivalence with anchored enumeration is covered by tests.
    fn bip_list(&mut self) -> Rc<Vec<BipartiteSubgraph>> {
        if let Some(list) = &self.bip {
            return Rc::clone(list);
        }
        let list = Rc::new(enum_bipartite(self.g, Anchors::None).expect("unanchored"));
        self.bip = Some(Rc::clone(&list));
        list
    }

    fn path_counts(&mut self, from: usize) -> Rc<PathSetCounts> {
        if let Some(c) = self.paths.get(&from) {
            return Rc::clone(c);
        }
        let c = Rc::new(path_set_counts(self.g, from));
        self.paths.insert(from, Rc::clone(&c));
        c
    }

    /// `I(G-u)I(G-v) - I(G)I(G-u-v) =
    ///  sum over induced connected bipartite H containing u and v of
    ///  (-1)^{d_H(u,v)+1} x^{|V(H)|} I(G-N[H])^2`.
    pub fn verify_t1(&mut self, u: usize, v: usize) -> Result<IdentityReport, IdentityError> {
        self.check_anchor(u)?;
        self.check_anchor(v)?;
        if u == v {
            return Err(IdentityError::EqualAnchors);
        }
        let full = self.g.full_set();
        let lhs = &(&self.ipoly(full.without(u)) * &self.ipoly(full.without(v)))
            - &(&self.ipoly(full) * &self.ipoly(full.without(u).without(v)));

        let mut acc = UniAcc::new(2 * self.g.n() + 2);
        let mut term_count = 0u64;
        let list = self.bip_list();
        for h in list.iter() {
            if !(h.vertices.contains(u) && h.vertices.contains(v)) {
                continue;
            }
            term_count += 1;
            let d = self.g.distance_within(h.vertices, u, v);
            let sign = if d.is_odd() { 1 } else { -1 };
            let rest = full - self.g.closed_neighborhood(h.vertices);
            let sq = self.ind_square(rest);
            acc.add_scaled(&sq, &BigInt::from(sign), h.vertices.len());
        }
        let rhs = acc.into_poly();
        Ok(IdentityReport {
            identity_id: IdentityId::T1.as_str().to_string(),
            anchors: vec![u, v],
            holds: lhs == rhs,
            lhs: SidePoly::Uni(lhs),
            rhs: Some(SidePoly::Uni(rhs)),
            term_count,
            notes: String::new(),
        })
    }

    /// `I(G,x)I(G-u,y) - I(G-u,x)I(G,y) =
    ///  sum over H containing u of
    ///  I(G-N[H],x)I(G-N[H],y)(x^{a}y^{b} - x^{b}y^{a})`
    /// where `a`/`b` are the sizes of u's class and the other class.
    pub fn verify_t2(&mut self, u: usize) -> Result<IdentityReport, IdentityError> {
        self.check_anchor(u)?;
        let full = self.g.full_set();
        let whole = self.ipoly(full);
        let minus_u = self.ipoly(full.without(u));
        let lhs = &(&whole.embed_x() * &minus_u.embed_y())
            - &(&minus_u.embed_x() * &whole.embed_y());

        let mut acc = BiAcc::new(self.g.n() + 2);
        let mut term_count = 0u64;
        let list = self.bip_list();
        for h in list.iter() {
            if !h.vertices.contains(u) {
                continue;
            }
            term_count += 1;
            let (a, b) = if h.class_a.contains(u) {
                (h.class_a.len(), h.class_b.len())
            } else {
                (h.class_b.len(), h.class_a.len())
            };
            if a == b {
                continue; // antisymmetric factor vanishes
            }
            let rest = full - self.g.closed_neighborhood(h.vertices);
            let p = self.ipoly(rest);
            acc.add_antisymmetric(&p, &BigInt::from(1), a, b);
        }
        let rhs = acc.into_poly();
        Ok(IdentityReport {
            identity_id: IdentityId::T2.as_str().to_string(),
            anchors: vec![u],
            holds: lhs == rhs,
            lhs: SidePoly::Bi(lhs),
            rhs: Some(SidePoly::Bi(rhs)),
            term_count,
            notes: String::new(),
        })
    }

    /// Two-variable identity summed over every induced connected bipartite
    /// subgraph, with class sizes `p`/`r`:
    /// `x I'(G,x) I(G,y) - y I(G,x) I'(G,y) =
    ///  sum (p-r) I(G-N[H],x) I(G-N[H],y) (x^p y^r - x^r y^p)`.
    ///
    /// Both sign orientations of the left side are computed; the report
    /// records which one matches.
    pub fn verify_t3(&mut self) -> IdentityReport {
        let full = self.g.full_set();
        let whole = self.ipoly(full);
        let x_der = whole.derivative().mul_xpow(1);
        // x I'(G,x) I(G,y) - y I(G,x) I'(G,y)
        let proof_lhs = &(&x_der.embed_x() * &whole.embed_y())
            - &(&whole.embed_x() * &x_der.embed_y());

        let mut acc = BiAcc::new(self.g.n() + 2);
        let mut term_count = 0u64;
        let list = self.bip_list();
        for h in list.iter() {
            term_count += 1;
            let (p_size, r_size) = h.class_sizes();
            if p_size == r_size {
                continue;
            }
            let factor = BigInt::from(p_size as i64 - r_size as i64);
            let rest = full - self.g.closed_neighborhood(h.vertices);
            let p = self.ipoly(rest);
            acc.add_antisymmetric(&p, &factor, p_size, r_size);
        }
        let rhs = acc.into_poly();

        let proof_holds = proof_lhs == rhs;
        let statement_holds = -&proof_lhs == rhs;
        let notes = if rhs.is_zero() {
            "RHS is zero; both orientations hold".to_string()
        } else if proof_holds {
            "orientation x*I'(G,x)*I(G,y) - y*I(G,x)*I'(G,y) matches the RHS; \
             the reversed orientation y*I(G,x)*I'(G,y) - x*I'(G,x)*I(G,y) does not"
                .to_string()
        } else if statement_holds {
            "unexpected: only the reversed orientation y*I(G,x)*I'(G,y) - x*I'(G,x)*I(G,y) \
             matches the RHS"
                .to_string()
        } else {
            "neither orientation matches the RHS".to_string()
        };
        IdentityReport {
            identity_id: IdentityId::T3.as_str().to_string(),
            anchors: vec![],
            holds: proof_holds,
            lhs: SidePoly::Bi(proof_lhs),
            rhs: Some(SidePoly::Bi(rhs)),
            term_count,
            notes,
        }
    }

    /// `x I'(G-u,x) I(G,x) - x I(G-u,x) I'(G,x) =
    ///  sum over H containing u of (b - a) x^{|V(H)|} I(G-N[H])^2`.
    pub fn verify_c1a(&mut self, u: usize) -> Result<IdentityReport, IdentityError> {
        self.check_anchor(u)?;
        let full = self.g.full_set();
        let whole = self.ipoly(full);
        let minus_u = self.ipoly(full.without(u));
        let lhs = (&(&minus_u.derivative() * &whole) - &(&minus_u * &whole.derivative()))
            .mul_xpow(1);

        let mut acc = UniAcc::new(2 * self.g.n() + 2);
        let mut term_count = 0u64;
        let list = self.bip_list();
        for h in list.iter() {
            if !h.vertices.contains(u) {
                continue;
            }
            term_count += 1;
            let (a, b) = if h.class_a.contains(u) {
                (h.class_a.len(), h.class_b.len())
            } else {
                (h.class_b.len(), h.class_a.len())
            };
            if a == b {
                continue;
            }
            let rest = full - self.g.closed_neighborhood(h.vertices);
            let sq = self.ind_square(rest);
            acc.add_scaled(&sq, &BigInt::from(b as i64 - a as i64), h.vertices.len());
        }
        let rhs = acc.into_poly();
        Ok(IdentityReport {
            identity_id: IdentityId::C1a.as_str().to_string(),
            anchors: vec![u],
            holds: lhs == rhs,
            lhs: SidePoly::Uni(lhs),
            rhs: Some(SidePoly::Uni(rhs)),
            term_count,
            notes: String::new(),
        })
    }

    /// `x^2 I'(G)^2 - x^2 I''(G) I(G) - x I'(G) I(G) =
    ///  -sum over all H of (p-r)^2 x^{|V(H)|} I(G-N[H])^2`.
    pub fn verify_c1b(&mut self) -> IdentityReport {
        let full = self.g.full_set();
        let whole = self.ipoly(full);
        let d1 = whole.derivative();
        let d2 = d1.derivative();
        let lhs = &(&(&d1 * &d1).mul_xpow(2) - &(&d2 * &whole).mul_xpow(2))
            - &(&d1 * &whole).mul_xpow(1);

        let mut acc = UniAcc::new(2 * self.g.n() + 2);
        let mut term_count = 0u64;
        let list = self.bip_list();
        for h in list.iter() {
            term_count += 1;
            let (p_size, r_size) = h.class_sizes();
            if p_size == r_size {
                continue;
            }
            let diff = BigInt::from(p_size as i64 - r_size as i64);
            let factor = -(&diff * &diff);
            let rest = full - self.g.closed_neighborhood(h.vertices);
            let sq = self.ind_square(rest);
            acc.add_scaled(&sq, &factor, h.vertices.len());
        }
        let rhs = acc.into_poly();
        IdentityReport {
            identity_id: IdentityId::C1b.as_str().to_string(),
            anchors: vec![],
            holds: lhs == rhs,
            lhs: SidePoly::Uni(lhs),
            rhs: Some(SidePoly::Uni(rhs)),
            term_count,
            notes: String::new(),
        }
    }

    /// `mu(G-u)mu(G-v) - mu(G)mu(G-u-v) =
    ///  sum over simple paths P from u to v of mu(G-P)^2`.
    pub fn verify_m1(&mut self, u: usize, v: usize) -> Result<IdentityReport, IdentityError> {
        self.check_anchor(u)?;
        self.check_anchor(v)?;
        if u == v {
            return Err(IdentityError::EqualAnchors);
        }
        let full = self.g.full_set();
        let lhs = &(&self.mpoly(full.without(u)) * &self.mpoly(full.without(v)))
            - &(&self.mpoly(full) * &self.mpoly(full.without(u).without(v)));

        let mut acc = UniAcc::new(2 * self.g.n() + 2);
        let mut term_count = 0u64;
        let counts = self.path_counts(u);
        let groups: Vec<(VertexSet, u64)> = counts.totals_to(v).collect();
        for (set, count) in groups {
            term_count += count;
            let sq = self.mat_square(full - set);
            acc.add_scaled(&sq, &BigInt::from(count), 0);
        }
        let rhs = acc.into_poly();
        Ok(IdentityReport {
            identity_id: IdentityId::M1.as_str().to_string(),
            anchors: vec![u, v],
            holds: lhs == rhs,
            lhs: SidePoly::Uni(lhs),
            rhs: Some(SidePoly::Uni(rhs)),
            term_count,
            notes: String::new(),
        })
    }

    /// `mu(G,x)mu(G-u,y) - mu(G-u,x)mu(G,y) =
    ///  (x-y) * sum over simple paths P starting at u (including the
    ///  one-vertex path) of mu(G-P,x)mu(G-P,y)`.
    pub fn verify_m2(&mut self, u: usize) -> Result<IdentityReport, IdentityError> {
        self.check_anchor(u)?;
        let full = self.g.full_set();
        let whole = self.mpoly(full);
        let minus_u = self.mpoly(full.without(u));
        let lhs = &(&whole.embed_x() * &minus_u.embed_y())
            - &(&minus_u.embed_x() * &whole.embed_y());

        let mut acc = BiAcc::new(self.g.n() + 2);
        let mut term_count = 0u64;
        let counts = self.path_counts(u);
        let groups: Vec<(VertexSet, u64)> = counts.totals().collect();
        for (set, count) in groups {
            term_count += count;
            let p = self.mpoly(full - set);
            acc.add_product(&p, &BigInt::from(count));
        }
        let rhs = &BiPoly::x_minus_y() * &acc.into_poly();
        Ok(IdentityReport {
            identity_id: IdentityId::M2.as_str().to_string(),
            anchors: vec![u],
            holds: lhs == rhs,
            lhs: SidePoly::Bi(lhs),
            rhs: Some(SidePoly::Bi(rhs)),
            term_count,
            notes: String::new(),
        })
    }

    /// Exact sign of `I(G-u,x)I(G-v,x) - I(G,x)I(G-u-v,x)` at a positive
    /// rational point, compared with the prediction from the parity of
    /// `d_G(u,v)` (odd: positive, even: negative, infinite: zero). Only
    /// valid on bipartite graphs.
    pub fn ms_sign(
        &mut self,
        u: usize,
        v: usize,
        x: &BigRational,
    ) -> Result<MsSignReport, IdentityError> {
        self.check_anchor(u)?;
        self.check_anchor(v)?;
        if u == v {
            return Err(IdentityError::EqualAnchors);
        }
        if !x.is_positive() {
            return Err(IdentityError::NonPositivePoint);
        }
        if !self.g.is_bipartite() {
            return Err(IdentityError::NotBipartite);
        }
        let full = self.g.full_set();
        let difference = &(&self.ipoly(full.without(u)) * &self.ipoly(full.without(v)))
            - &(&self.ipoly(full) * &self.ipoly(full.without(u).without(v)));
        let value = difference.eval_rational(x);
        let actual = Sign::of(&value);
        let distance = self.g.distance(u, v);
        let predicted = match distance {
            Distance::Infinite => Sign::Zero,
            Distance::Finite(d) if d % 2 == 1 => Sign::Positive,
            Distance::Finite(_) => Sign::Negative,
        };
        Ok(MsSignReport {
            anchors: (u, v),
            x: x.clone(),
            value,
            matches: actual == predicted,
            actual,
            predicted,
            distance,
            difference,
        })
    }
}

pub fn verify_t1(g: &Graph, u: usize, v: usize) -> Result<IdentityReport, IdentityError> {
    Verifier::new(g).verify_t1(u, v)
}

pub fn verify_t2(g: &Graph, u: usize) -> Result<IdentityReport, IdentityError> {
    Verifier::new(g).verify_t2(u)
}

pub fn verify_t3(g: &Graph) -> IdentityReport {
    Verifier::new(g).verify_t3()
}

pub fn verify_c1a(g: &Graph, u: usize) -> Result<IdentityReport, IdentityError> {
    Verifier::new(g).verify_c1a(u)
}

pub fn verify_c1b(g: &Graph) -> IdentityReport {
    Verifier::new(g).verify_c1b()
}

pub fn verify_m1(g: &Graph, u: usize, v: usize) -> Result<IdentityReport, IdentityError> {
    Verifier::new(g).verify_m1(u, v)
}

pub fn verify_m2(g: &Graph, u: usize) -> Result<IdentityReport, IdentityError> {
    Verifier::new(g).verify_m2(u)
}

pub fn ms_sign(
    g: &Graph,
    u: usize,
    v: usize,
    x: &BigRational,
) -> Result<MsSignReport, IdentityError> {
    Verifier::new(g).ms_sign(u, v, x)
}

/// Runs every applicable identity on every valid anchor choice, returning
/// all reports. The MS sign rule is included (at `x = 1`) only when the
/// graph is bipartite.
pub fn verify_all(g: &Graph) -> Vec<IdentityReport> {
    let mut verifier = Verifier::new(g);
    let mut reports = Vec::new();
    reports.push(verifier.verify_t3());
    reports.push(verifier.verify_c1b());
    for u in g.vertices() {
        reports.push(verifier.verify_t2(u).unwrap());
        reports.push(verifier.verify_c1a(u).unwrap());
        reports.push(verifier.verify_m2(u).unwrap());
    }
    let bipartite = g.is_bipartite();
    let one = BigRational::from_integer(BigInt::from(1));
    for u in g.vertices() {
        for v in u + 1..g.n() {
            reports.push(verifier.verify_t1(u, v).unwrap());
            reports.push(verifier.verify_m1(u, v).unwrap());
            if bipartite {
                reports.push(verifier.ms_sign(u, v, &one).unwrap().to_identity_report());
            }
        }
    }
    reports
}
