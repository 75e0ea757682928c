//! Exact scalars in ℚ(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Gaussian rational `re + im·i` with both parts stored as reduced
/// fractions (positive denominators).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        // BigRational normalizes on construction, so both parts are already
        // in lowest terms with a positive denominator.
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussianRational::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussianRational::new(BigRational::new(re.0.into(), re.1.into()), BigRational::new(im.0.into(), im.1.into()))
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `iⁿ` for any integer `n`.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => GaussianRational::one(),
            1 => GaussianRational::i(),
            2 => -GaussianRational::one(),
            _ => -GaussianRational::i(),
        }
    }

    /// Returns the value as an integer when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Real values print as `a` or `a/b`; everything else as
    /// `(a/b + c/d i)` / `(a/b - c/d i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        write!(f, "(")?;
        fmt_rational(&self.re, f)?;
        if self.im.is_negative() {
            write!(f, " - ")?;
            fmt_rational(&-self.im.clone(), f)?;
        } else {
            write!(f, " + ")?;
            fmt_rational(&self.im, f)?;
        }
        write!(f, " i)")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        GaussianRational::new(q, BigRational::zero())
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        GaussianRational::new(BigRational::from_integer(n), BigRational::zero())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero in ℚ(i)")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, -GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn fractions_reduce() {
        let a = GaussianRational::from_parts((2, 4), (-3, -6));
        assert_eq!(a, GaussianRational::from_parts((1, 2), (1, 2)));
        assert_eq!(a.re().denom(), &BigInt::from(2));
        let neg_den = GaussianRational::from_ratio(1, -3);
        assert_eq!(neg_den.re().denom(), &BigInt::from(3));
        assert_eq!(neg_den.re().numer(), &BigInt::from(-1));
    }

    #[test]
    fn inverse_round_trips() {
        let z = GaussianRational::from_parts((3, 2), (-5, 7));
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(GaussianRational::from_parts((1, 2), (1, 1)).to_string(), "(1/2 + 1 i)");
        assert_eq!(GaussianRational::from_parts((0, 1), (-2, 3)).to_string(), "(0 - 2/3 i)");
    }
}
