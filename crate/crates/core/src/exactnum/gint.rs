use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{GaussianRational, Rational};

/// An element of Z[i]; used by fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn one() -> Self {
        GaussianInt::new(BigInt::from(1), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    pub fn sub(&self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    pub fn neg(&self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }

    /// `self / rhs` when the quotient is known to lie in Z[i].
    ///
    /// Panics if `rhs` is zero or the division is inexact.
    pub fn div_exact(&self, rhs: &GaussianInt) -> GaussianInt {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        assert!(!norm.is_zero(), "exact division by zero");
        // self * conj(rhs)
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        let (qr, rr) = re.div_rem(&norm);
        let (qi, ri) = im.div_rem(&norm);
        assert!(rr.is_zero() && ri.is_zero(), "inexact Gaussian division");
        GaussianInt::new(qr, qi)
    }

    pub fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(self.re.clone()),
            Rational::from_integer(self.im.clone()),
        )
    }
}

impl TryFrom<&GaussianRational> for GaussianInt {
    type Error = ();

    fn try_from(x: &GaussianRational) -> Result<Self, ()> {
        x.to_gaussian_int()
            .map(|(re, im)| GaussianInt::new(re, im))
            .ok_or(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re.into(), im.into())
    }

    #[test]
    fn exact_division() {
        let a = gi(3, 2).mul(&gi(1, -1));
        assert_eq!(a.div_exact(&gi(1, -1)), gi(3, 2));
        assert_eq!(gi(2, 0).div_exact(&gi(1, 1)), gi(1, -1));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        gi(1, 0).div_exact(&gi(1, 1));
    }
}
