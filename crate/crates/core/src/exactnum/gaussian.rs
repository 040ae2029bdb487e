use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use super::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element `re + im·i` of the field Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(Rational::from(re), Rational::from(im))
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    /// `i^k`, for any integer `k`.
    pub fn pow_i(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianRational::from_ints(1, 0),
            1 => GaussianRational::from_ints(0, 1),
            2 => GaussianRational::from_ints(-1, 0),
            _ => GaussianRational::from_ints(0, -1),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when both components are integers, i.e. the value lies in Z[i].
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// True for the four units `±1, ±i`.
    pub fn is_unit(&self) -> bool {
        self.is_gaussian_integer() && self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm().recip().ok_or(ArithError::DivisionByZero)?;
        Ok(self.conj().scale(&n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn apply(&self, op: ArithOp, rhs: &Self) -> Result<Self, ArithError> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// Integer components, if this is a Gaussian integer.
    pub fn to_gaussian_int(&self) -> Option<(BigInt, BigInt)> {
        if self.is_gaussian_integer() {
            Some((self.re.numer().clone(), self.im.numer().clone()))
        } else {
            None
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::new(r, Rational::zero())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // skip the cross terms for the common real-only operands
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! owned_variants {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
        impl $assign_tr<&GaussianRational> for GaussianRational {
            fn $assign_method(&mut self, rhs: &GaussianRational) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_tr<GaussianRational> for GaussianRational {
            fn $assign_method(&mut self, rhs: GaussianRational) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

owned_variants!(Add, add, AddAssign, add_assign);
owned_variants!(Sub, sub, SubAssign, sub_assign);
owned_variants!(Mul, mul, MulAssign, mul_assign);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |acc, x| acc + x)
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GaussianRational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a GaussianRational> for GaussianRational {
    fn product<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(GaussianRational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(g(1, 1).apply(ArithOp::Mul, &g(1, -1)).unwrap(), g(2, 0));
    }

    #[test]
    fn one_over_i_minus_one() {
        let half = Rational::new(-1, 2).unwrap();
        let q = g(1, 0).apply(ArithOp::Div, &g(-1, 1)).unwrap();
        assert_eq!(q, GaussianRational::new(half.clone(), half));
    }

    #[test]
    fn i_squared() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), g(-1, 0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            g(3, 1).apply(ArithOp::Div, &GaussianRational::zero()),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(
            GaussianRational::zero().inv(),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(GaussianRational::pow_i(0), g(1, 0));
        assert_eq!(GaussianRational::pow_i(2), g(-1, 0));
        assert_eq!(GaussianRational::pow_i(7), g(0, -1));
        assert_eq!(GaussianRational::pow_i(-1), g(0, -1));
        for k in -8..=8 {
            for m in -8..=8 {
                assert_eq!(
                    GaussianRational::pow_i(k) * GaussianRational::pow_i(m),
                    GaussianRational::pow_i(k + m)
                );
            }
        }
    }

    #[test]
    fn gaussian_integer_predicate() {
        assert!(g(3, -4).is_gaussian_integer());
        let half = GaussianRational::new(Rational::new(1, 2).unwrap(), Rational::zero());
        assert!(!half.is_gaussian_integer());
        assert!(g(0, -1).is_unit());
        assert!(!g(1, 1).is_unit());
    }
}
