//! Dense univariate polynomials with `BigInt` coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bi::BiPoly;

/// A univariate polynomial, coefficient of `x^k` at index `k`.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient list and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> UniPoly {
        UniPoly::monomial(BigInt::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// Builds from a coefficient list (index = exponent), normalizing.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Multiplies by `x^k`.
    #[must_use]
    pub fn mul_xpow(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    #[must_use]
    pub fn scale(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Lifts to a two-variable polynomial in the `x` variable.
    pub fn embed_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    /// Lifts to a two-variable polynomial in the `y` variable.
    pub fn embed_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident, $ty:ty) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Add, add, UniPoly);
forward_owned_binop!(Sub, sub, UniPoly);
forward_owned_binop!(Mul, mul, UniPoly);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Canonical rendering: ascending exponents, unit coefficients elided, e.g.
/// `1 + 4x + 3x^2 + x^3` or `-1 + x^2`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
