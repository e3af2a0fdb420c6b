//! Exact real-rootedness certification via Sturm sequences.
//!
//! A polynomial is real-rooted (counting multiplicity) iff its squarefree
//! part has as many distinct real roots as its degree; the Sturm chain of
//! the squarefree part counts distinct real roots exactly. Every decision
//! is made over exact rationals; signs at infinity come from leading
//! coefficients. Isolating intervals are an optional reporting aid, never
//! part of the boolean answer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::graph_poly::independence_poly_of;
use crate::poly::{PolyError, RatPoly, UniPoly};

/// Exact root-count certificate for a univariate integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmCertificate {
    pub poly: UniPoly,
    pub squarefree_part: RatPoly,
    pub sturm_chain_length: usize,
    pub distinct_real_roots: usize,
    pub degree_squarefree: usize,
    pub all_real: bool,
    /// Disjoint rational intervals, one per distinct real root, ascending.
    pub isolating_intervals: Option<Vec<(BigRational, BigRational)>>,
    chain: Vec<RatPoly>,
}

impl Serialize for SturmCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        fn ratio(r: &BigRational) -> String {
            format!("{}/{}", r.numer(), r.denom())
        }
        let mut s = serializer.serialize_struct("SturmCertificate", 7)?;
        s.serialize_field("poly", &self.poly.to_string())?;
        let sf: Vec<String> = self.squarefree_part.coeffs().iter().map(ratio).collect();
        s.serialize_field("squarefree_part", &sf)?;
        s.serialize_field("sturm_chain_length", &self.sturm_chain_length)?;
        s.serialize_field("distinct_real_roots", &self.distinct_real_roots)?;
        s.serialize_field("degree_squarefree", &self.degree_squarefree)?;
        s.serialize_field("all_real", &self.all_real)?;
        let intervals: Option<Vec<(String, String)>> = self
            .isolating_intervals
            .as_ref()
            .map(|iv| iv.iter().map(|(a, b)| (ratio(a), ratio(b))).collect());
        s.serialize_field("isolating_intervals", &intervals)?;
        s.end()
    }
}

/// Number of sign variations in a sequence, zeros skipped.
fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Builds the certificate: squarefree reduction, Sturm chain by negated
/// remainders, and the variation difference between the two infinities.
pub fn sturm_count(p: &UniPoly) -> Result<SturmCertificate, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let squarefree = RatPoly::from_unipoly(p).squarefree_part()?;
    let degree_squarefree = squarefree.degree().unwrap_or(0);
    let mut chain = vec![squarefree.clone()];
    if degree_squarefree >= 1 {
        chain.push(squarefree.derivative());
        loop {
            let len = chain.len();
            let (_, r) = chain[len - 2].div_rem(&chain[len - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
    }
    let at_neg = variations(chain.iter().map(RatPoly::sign_at_neg_inf));
    let at_pos = variations(chain.iter().map(RatPoly::sign_at_pos_inf));
    let distinct_real_roots = at_neg - at_pos;
    Ok(SturmCertificate {
        poly: p.clone(),
        sturm_chain_length: chain.len(),
        distinct_real_roots,
        degree_squarefree,
        all_real: distinct_real_roots == degree_squarefree,
        isolating_intervals: None,
        squarefree_part: squarefree,
        chain,
    })
}

impl SturmCertificate {
    /// Sign variations of the chain at a point.
    fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.chain.iter().map(|f| sign_of(&f.eval(x))))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    fn roots_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Cauchy bound: every real root lies in `(-M, M)` for
    /// `M = 1 + max |a_i| / |a_d|` over the squarefree part.
    fn root_bound(&self) -> BigRational {
        let lead = self.squarefree_part.leading_coeff().unwrap().clone();
        let max_ratio = self
            .squarefree_part
            .coeffs()
            .iter()
            .map(|c| (c / &lead).abs())
            .max()
            .unwrap();
        max_ratio + BigRational::one()
    }
}

/// Refines the certificate with isolating intervals: Sturm-count bisection
/// from the Cauchy bound, each interval holding exactly one root and
/// narrowed to at most `2^-20` times the initial width.
pub fn isolate_roots(cert: &SturmCertificate) -> SturmCertificate {
    let mut refined = cert.clone();
    if cert.distinct_real_roots == 0 || cert.degree_squarefree == 0 {
        refined.isolating_intervals = Some(Vec::new());
        return refined;
    }
    let bound = cert.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let initial_width = &hi - &lo;
    let tolerance = initial_width.clone() / BigRational::from_integer(BigInt::from(1 << 20));
    let two = BigRational::from_integer(BigInt::from(2));

    let mut intervals = Vec::new();
    let mut stack = vec![(lo, hi, cert.distinct_real_roots)];
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        let width = &hi - &lo;
        if count == 1 && width <= tolerance {
            intervals.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        let left = cert.roots_in(&lo, &mid);
        // Right child pushed first so the stack pops intervals left to
        // right, keeping the output ascending.
        stack.push((mid.clone(), hi, count - left));
        stack.push((lo, mid, left));
    }
    // Popping order above is not a strict guarantee with mixed counts;
    // sort by the left endpoint to pin the contract.
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    refined.isolating_intervals = Some(intervals);
    refined
}

/// Claw-free certification: claw detection plus an exact real-rootedness
/// certificate for the independence polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct ClawFreeCertificate {
    pub claw_free: bool,
    /// Four vertices inducing a claw, when one exists.
    pub witness: Option<Vec<usize>>,
    pub certificate: Option<SturmCertificate>,
    /// `Some(all_real)` when the graph is claw-free: the expectation is
    /// `Some(true)`, and `Some(false)` would falsify the theorem under
    /// test. `None` when a claw is present (no claim either way).
    pub theorem_holds: Option<bool>,
}

/// Checks claw-freeness and certifies the independence polynomial's roots.
/// Graphs with claws are still certified (their root status is reported
/// without any claim).
pub fn certify_claw_free(g: &Graph) -> ClawFreeCertificate {
    let witness: Option<VertexSet> = g.find_claw();
    let ipoly = independence_poly_of(g);
    let cert = sturm_count(&ipoly).expect("independence polynomial is never zero");
    let cert = isolate_roots(&cert);
    let claw_free = witness.is_none();
    ClawFreeCertificate {
        claw_free,
        witness: witness.map(|w| w.iter().collect()),
        theorem_holds: claw_free.then_some(cert.all_real),
        certificate: Some(cert),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{gnp, Lcg64};
    use crate::graph_poly::matching_poly;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn linear_poly_has_one_real_root() {
        let cert = sturm_count(&up(&[1, 2])).unwrap();
        assert_eq!(cert.distinct_real_roots, 1);
        assert_eq!(cert.degree_squarefree, 1);
        assert!(cert.all_real);
    }

    #[test]
    fn x_squared_plus_one_has_none() {
        let cert = sturm_count(&up(&[1, 0, 1])).unwrap();
        assert_eq!(cert.distinct_real_roots, 0);
        assert!(!cert.all_real);
        let refined = isolate_roots(&cert);
        assert_eq!(refined.isolating_intervals, Some(vec![]));
    }

    #[test]
    fn star_independence_poly_is_not_real_rooted() {
        // I(K_{1,3}) = 1 + 4x + 3x^2 + x^3: squarefree cubic with exactly
        // one real root (its discriminant is negative).
        let cert = sturm_count(&up(&[1, 4, 3, 1])).unwrap();
        assert_eq!(cert.degree_squarefree, 3);
        assert_eq!(cert.distinct_real_roots, 1);
        assert!(!cert.all_real);
        let refined = isolate_roots(&cert);
        assert_eq!(refined.isolating_intervals.as_ref().unwrap().len(), 1);
    }

    #[test]
    fn cycle_independence_poly_is_real_rooted() {
        // I(C_4) = 1 + 4x + 2x^2: discriminant 16 - 8 > 0.
        let cert = sturm_count(&up(&[1, 4, 2])).unwrap();
        assert_eq!(cert.distinct_real_roots, 2);
        assert!(cert.all_real);
        // Both roots are negative.
        let refined = isolate_roots(&cert);
        let intervals = refined.isolating_intervals.unwrap();
        assert_eq!(intervals.len(), 2);
        for (_, hi) in &intervals {
            assert!(hi < &BigRational::zero());
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            sturm_count(&UniPoly::zero()),
            Err(PolyError::ZeroPolynomial)
        ));
    }

    #[test]
    fn constants_are_vacuously_real_rooted() {
        let cert = sturm_count(&UniPoly::one()).unwrap();
        assert_eq!(cert.degree_squarefree, 0);
        assert_eq!(cert.distinct_real_roots, 0);
        assert!(cert.all_real);
    }

    #[test]
    fn multiplicity_is_handled_through_squarefree_part() {
        // (1+x)^3 is real-rooted with a single distinct root.
        let p = &(&up(&[1, 1]) * &up(&[1, 1])) * &up(&[1, 1]);
        let cert = sturm_count(&p).unwrap();
        assert_eq!(cert.degree_squarefree, 1);
        assert_eq!(cert.distinct_real_roots, 1);
        assert!(cert.all_real);
        // (1+x^2)^2 is not.
        let q = &up(&[1, 0, 1]) * &up(&[1, 0, 1]);
        let cert = sturm_count(&q).unwrap();
        assert_eq!(cert.degree_squarefree, 2);
        assert_eq!(cert.distinct_real_roots, 0);
        assert!(!cert.all_real);
    }

    #[test]
    fn intervals_isolate_roots() {
        let half = rat(-1, 2);
        let cert = isolate_roots(&sturm_count(&up(&[1, 2])).unwrap());
        let intervals = cert.isolating_intervals.unwrap();
        assert_eq!(intervals.len(), 1);
        let (lo, hi) = &intervals[0];
        assert!(lo < &half && &half <= hi);
    }

    #[test]
    fn interval_count_matches_sturm_and_signs_change() {
        let mut rng = Lcg64::new(2718);
        for _ in 0..60 {
            let n = 1 + (rng.below(6) as usize);
            let coeffs: Vec<i64> = (0..=n).map(|_| rng.below(19) as i64 - 9).collect();
            let p = up(&coeffs);
            if p.is_zero() {
                continue;
            }
            let cert = isolate_roots(&sturm_count(&p).unwrap());
            let intervals = cert.isolating_intervals.as_ref().unwrap();
            assert_eq!(intervals.len(), cert.distinct_real_roots);
            // Naive confirmation: the squarefree part changes sign over
            // each interval or vanishes at its right endpoint, and
            // intervals are disjoint and ascending.
            for window in intervals.windows(2) {
                assert!(window[0].1 <= window[1].0);
            }
            for (lo, hi) in intervals {
                let f_lo = cert.squarefree_part.eval(lo);
                let f_hi = cert.squarefree_part.eval(hi);
                // A root in (lo, hi] shows up as a sign change, or as a
                // zero at an endpoint (endpoints are bisection midpoints
                // and can land on rational roots).
                assert!(
                    f_hi.is_zero() || f_lo.is_zero() || sign_of(&f_lo) != sign_of(&f_hi),
                    "no root caught in ({lo}, {hi}]"
                );
            }
        }
    }

    #[test]
    fn certify_star_reports_claw_and_root_count() {
        let report = certify_claw_free(&Graph::star(3));
        assert!(!report.claw_free);
        assert_eq!(report.witness, Some(vec![0, 1, 2, 3]));
        assert!(report.theorem_holds.is_none());
        let cert = report.certificate.unwrap();
        assert_eq!(cert.degree_squarefree, 3);
        assert_eq!(cert.distinct_real_roots, 1);
        assert!(!cert.all_real);
    }

    #[test]
    fn certify_small_claw_free_graphs() {
        // I(C_5) = 1 + 5x + 5x^2: discriminant 25 - 20 > 0.
        let report = certify_claw_free(&Graph::cycle(5));
        assert!(report.claw_free);
        assert_eq!(report.theorem_holds, Some(true));
        let report = certify_claw_free(&Graph::cycle(4));
        assert_eq!(report.theorem_holds, Some(true));
        let report = certify_claw_free(&Graph::empty(0));
        assert_eq!(report.theorem_holds, Some(true));
    }

    #[test]
    fn line_graphs_are_claw_free_and_real_rooted() {
        let mut rng = Lcg64::new(11);
        for _ in 0..20 {
            let h = gnp(6, 1, 2, &mut rng);
            let report = certify_claw_free(&h.line_graph());
            assert!(report.claw_free);
            assert_eq!(report.theorem_holds, Some(true));
        }
    }

    #[test]
    fn matching_polynomials_are_real_rooted_small() {
        let mut rng = Lcg64::new(5);
        for trial in 0..40 {
            let n = 1 + trial % 7;
            let g = gnp(n, 1, 2, &mut rng);
            let mu = matching_poly(&g, g.full_set());
            assert!(sturm_count(&mu).unwrap().all_real, "mu of {:?}", g.edges());
        }
    }

    #[test]
    fn certificate_serializes_intervals_as_fractions() {
        let cert = isolate_roots(&sturm_count(&up(&[1, 2])).unwrap());
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["all_real"], true);
        assert_eq!(json["distinct_real_roots"], 1);
        let iv = json["isolating_intervals"][0].as_array().unwrap();
        assert!(iv[0].as_str().unwrap().contains('/'));
    }
}
