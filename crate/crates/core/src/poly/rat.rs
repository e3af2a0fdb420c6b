//! Dense univariate polynomials over exact rationals.
//!
//! Supports the Euclidean arithmetic the Sturm machinery needs: division
//! with remainder, monic gcd, and squarefree reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::uni::forward_owned_binop;
use super::{PolyError, UniPoly};

/// Coefficient of `x^k` at index `k`; rationals are kept reduced with
/// positive denominators by `BigRational` itself. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_unipoly(p: &UniPoly) -> RatPoly {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divides by the leading coefficient.
    #[must_use]
    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            None => RatPoly::zero(),
            Some(lc) => {
                let lc = lc.clone();
                RatPoly {
                    coeffs: self.coeffs.iter().map(|c| c / &lc).collect(),
                }
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let d_lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d_deg + 1 {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        while rem.len() > d_deg {
            let k = rem.len() - 1 - d_deg;
            let factor = rem.last().unwrap() / &d_lc;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem[k + i] -= sub;
            }
            quot[k] = factor;
            rem.pop(); // leading term cancelled exactly
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor by Euclidean remainders. Rejects two
    /// zero inputs; `gcd(p, 0)` is `p` made monic.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> Result<RatPoly, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let (mut f, mut g) = (a.clone(), b.clone());
        while !g.is_zero() {
            let (_, r) = f.div_rem(&g)?;
            f = g;
            g = r;
        }
        Ok(f.monic())
    }

    /// `self / gcd(self, self')`: same roots, all simple. Rejects zero.
    pub fn squarefree_part(&self) -> Result<RatPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = RatPoly::gcd(self, &self.derivative())?;
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        Ok(q)
    }

    /// Sign of the polynomial as `x -> +inf` (`1`, `0`, or `-1`).
    pub fn sign_at_pos_inf(&self) -> i8 {
        match self.leading_coeff() {
            None => 0,
            Some(lc) => {
                if lc.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Sign of the polynomial as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        match self.degree() {
            Some(d) if d % 2 == 1 => -s,
            _ => s,
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(Add, add, RatPoly);
forward_owned_binop!(Sub, sub, RatPoly);
forward_owned_binop!(Mul, mul, RatPoly);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})x^{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_i64s(coeffs)
    }

    #[test]
    fn div_rem_exact_and_with_remainder() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        // x^3 + 2 divided by x^2: q = x, r = 2
        let (q, r) = p(&[2, 0, 0, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[2]));
        assert_eq!(
            p(&[1]).div_rem(&RatPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            RatPoly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        // gcd(p, 0) = p made monic: 3 + 6x becomes 1/2 + x.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            RatPoly::gcd(&p(&[3, 6]), &RatPoly::zero()).unwrap(),
            RatPoly::from_coeffs(vec![half, BigRational::one()])
        );
        // (x+1)^2 and (x+1)(x+2) share exactly (x+1).
        let a = &p(&[1, 1]) * &p(&[1, 1]);
        let b = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(RatPoly::gcd(&a, &b).unwrap(), p(&[1, 1]));
        assert_eq!(
            RatPoly::gcd(&RatPoly::zero(), &RatPoly::zero()),
            Err(PolyError::GcdOfZeros)
        );
    }

    #[test]
    fn squarefree_reduction() {
        // (x+1)^3 reduces to x+1.
        let cube = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 1]);
        assert_eq!(cube.squarefree_part().unwrap(), p(&[1, 1]));
        // Already squarefree stays put up to normalization.
        let sf = p(&[-2, 0, 1]);
        assert_eq!(sf.squarefree_part().unwrap(), sf);
        assert_eq!(
            RatPoly::zero().squarefree_part(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn signs_at_infinity() {
        let cubic = p(&[0, 0, 0, 2]);
        assert_eq!(cubic.sign_at_pos_inf(), 1);
        assert_eq!(cubic.sign_at_neg_inf(), -1);
        let quad = p(&[1, 0, -3]);
        assert_eq!(quad.sign_at_pos_inf(), -1);
        assert_eq!(quad.sign_at_neg_inf(), -1);
        assert_eq!(RatPoly::zero().sign_at_pos_inf(), 0);
    }
}
