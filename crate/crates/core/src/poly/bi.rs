//! Sparse two-variable polynomials with `BigInt` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::uni::forward_owned_binop;

/// A polynomial in `x` and `y`: map from exponent pair `(i, j)` to the
/// nonzero coefficient of `x^i y^j`. The map never stores zeros, so equal
/// polynomials have identical term maps, and iteration is lexicographic in
/// `(i, j)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    /// `c * x^i y^j`.
    pub fn monomial(c: BigInt, i: u32, j: u32) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// The polynomial `x - y`.
    pub fn x_minus_y() -> BiPoly {
        BiPoly::monomial(BigInt::one(), 1, 0) - BiPoly::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(terms: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * x^i y^j`, removing the slot if it cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    #[must_use]
    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Exchanges the two variables.
    #[must_use]
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for _ in 0..i {
                term *= x;
            }
            for _ in 0..j {
                term *= y;
            }
            acc += term;
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

forward_owned_binop!(Add, add, BiPoly);
forward_owned_binop!(Sub, sub, BiPoly);
forward_owned_binop!(Mul, mul, BiPoly);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// Canonical rendering: terms in lexicographic `(i, j)` order, e.g.
/// `-y + x` or `2xy - x^2y^3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 && j == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let x = BiPoly::monomial(BigInt::one(), 1, 0);
        let y = BiPoly::monomial(BigInt::one(), 0, 1);
        let product = (&x - &y) * (&x + &y);
        let expected = BiPoly::monomial(BigInt::one(), 2, 0) - BiPoly::monomial(BigInt::one(), 0, 2);
        assert_eq!(product, expected);
    }

    #[test]
    fn embeddings_and_swap() {
        let p = UniPoly::from_i64s(&[1, 1]);
        assert_eq!(
            p.embed_y(),
            BiPoly::from_terms([((0, 0), BigInt::one()), ((0, 1), BigInt::one())])
        );
        let xxy = BiPoly::monomial(BigInt::one(), 2, 1);
        assert_eq!(xxy.swap_vars(), BiPoly::monomial(BigInt::one(), 1, 2));
        let q = BiPoly::from_terms([((3, 0), BigInt::from(1)), ((1, 1), BigInt::from(-2))]);
        assert_eq!(q.swap_vars().swap_vars(), q);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = BiPoly::monomial(BigInt::from(3), 1, 2);
        let q = BiPoly::monomial(BigInt::from(-3), 1, 2);
        assert!((&p + &q).is_zero());
        assert_eq!((&p + &q).term_count(), 0);
    }

    #[test]
    fn rendering() {
        assert_eq!(BiPoly::x_minus_y().to_string(), "-y + x");
        assert_eq!(BiPoly::zero().to_string(), "0");
        let p = BiPoly::from_terms([
            ((0, 0), BigInt::from(1)),
            ((1, 1), BigInt::from(2)),
            ((2, 3), BigInt::from(-1)),
        ]);
        assert_eq!(p.to_string(), "1 + 2xy - x^2y^3");
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec(((0u32..4, 0u32..4), -9i64..10), 0..6).prop_map(|terms| {
            BiPoly::from_terms(
                terms
                    .into_iter()
                    .map(|((i, j), c)| ((i, j), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, BiPoly::zero());
        }

        #[test]
        fn swap_is_multiplicative_involution(a in arb_bipoly(), b in arb_bipoly()) {
            prop_assert_eq!(a.swap_vars().swap_vars(), a.clone());
            prop_assert_eq!((&a * &b).swap_vars(), a.swap_vars() * b.swap_vars());
        }

        #[test]
        fn embed_respects_products(a in proptest::collection::vec(-9i64..10, 0..5),
                                   b in proptest::collection::vec(-9i64..10, 0..5)) {
            let (a, b) = (UniPoly::from_i64s(&a), UniPoly::from_i64s(&b));
            prop_assert_eq!((&a * &b).embed_x(), a.embed_x() * b.embed_x());
            prop_assert_eq!((&a * &b).embed_y(), a.embed_y() * b.embed_y());
            prop_assert_eq!(a.embed_x().swap_vars(), a.embed_y());
        }
    }
}
