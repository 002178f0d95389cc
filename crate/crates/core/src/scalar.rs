//! Exact rational scalars.
//!
//! Every coefficient in this crate is an arbitrary-precision rational
//! number.  Floating point is never used: the verification suites decide
//! equality of algebra elements coefficient by coefficient, and a single
//! rounded bit would turn a structural identity into noise.  All
//! arithmetic goes through [`Scalar`], a thin newtype over
//! `num_rational::BigRational` that keeps values canonical (reduced, with
//! positive denominator) by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An exact rational coefficient.
///
/// `BigRational` already reduces fractions and normalises the sign of the
/// denominator on construction, so two `Scalar`s are equal iff they
/// represent the same rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// The integer `n` as a scalar.
    pub fn int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// The fraction `num/den`.  Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be nonzero");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `(-1)^k` for a signed exponent; only the parity of `k` matters.
    pub fn neg_one_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        Scalar(self.0.recip())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Renders `p` for integers and `p/q` otherwise, e.g. `-3`, `1/2`.
    pub fn render(&self) -> String {
        if self.0.is_integer() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    /// True if the scalar is negative (used when rendering sums).
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar(self.0 + &rhs.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        self.0 += &rhs.0;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        Scalar(self.0 * &rhs.0)
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        Scalar(&self.0 * &rhs.0)
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        self.0 *= rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_fraction_arithmetic() {
        let third = Scalar::frac(1, 3);
        let sum = third.clone() + third.clone() + third;
        assert_eq!(sum, Scalar::one());
    }

    #[test]
    fn reduction_is_canonical() {
        assert_eq!(Scalar::frac(2, 4), Scalar::frac(1, 2));
        assert_eq!(Scalar::frac(1, -2), Scalar::frac(-1, 2));
        assert_eq!(Scalar::frac(-3, -6), Scalar::frac(1, 2));
    }

    #[test]
    fn neg_one_pow_parity() {
        assert_eq!(Scalar::neg_one_pow(0), Scalar::one());
        assert_eq!(Scalar::neg_one_pow(1), Scalar::int(-1));
        assert_eq!(Scalar::neg_one_pow(-1), Scalar::int(-1));
        assert_eq!(Scalar::neg_one_pow(-4), Scalar::one());
        assert_eq!(Scalar::neg_one_pow(7), Scalar::int(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let x = Scalar::frac(-7, 12);
        assert_eq!(x.clone() * x.inv(), Scalar::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(Scalar::int(5).render(), "5");
        assert_eq!(Scalar::int(-5).render(), "-5");
        assert_eq!(Scalar::frac(1, 2).render(), "1/2");
        assert_eq!(Scalar::frac(-9, 6).render(), "-3/2");
    }
}
