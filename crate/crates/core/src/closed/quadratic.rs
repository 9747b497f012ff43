use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact element `p + q*sqrt(2)` of Q(sqrt 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    pub p: BigRational,
    pub q: BigRational,
}

impl QuadraticNumber {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        QuadraticNumber { p, q }
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        Self::new(BigRational::from_integer(p.into()), BigRational::from_integer(q.into()))
    }

    pub fn rational(p: BigRational) -> Self {
        Self::new(p, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    /// `1 + sqrt 2`.
    pub fn silver() -> Self {
        Self::from_ints(1, 1)
    }

    /// `1 - sqrt 2`, the conjugate of [`QuadraticNumber::silver`].
    pub fn silver_conjugate() -> Self {
        Self::from_ints(1, -1)
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.p.clone(), -&self.q)
    }

    /// `p^2 - 2 q^2`.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * BigRational::from_integer(2.into())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// The value as an integer, if the irrational part vanishes and the
    /// rational part is whole.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.q.is_zero() && self.p.is_integer()).then(|| self.p.to_integer())
    }

    pub fn recip(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self::new(c.p / &norm, c.q / norm))
    }

    /// Square-and-multiply.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

pub fn quad_pow(x: &QuadraticNumber, n: u32) -> QuadraticNumber {
    x.pow(n)
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: Self) -> QuadraticNumber {
        QuadraticNumber::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: Self) -> QuadraticNumber {
        QuadraticNumber::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        let two = BigRational::from_integer(2.into());
        QuadraticNumber::new(
            &self.p * &rhs.p + &self.q * &rhs.q * two,
            &self.p * &rhs.q + &rhs.p * &self.q,
        )
    }
}

/// Panics on division by zero, like the integer operators.
impl Div for &QuadraticNumber {
    type Output = QuadraticNumber;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> QuadraticNumber {
        self * &rhs.recip().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new(-&self.p, -&self.q)
    }
}

impl Mul<&QuadraticNumber> for &BigRational {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber::new(self * &rhs.p, self * &rhs.q)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}*sqrt2", self.q),
            (false, false) if self.q.is_negative() => {
                write!(f, "{} - {}*sqrt2", self.p, self.q.abs())
            }
            (false, false) => write!(f, "{} + {}*sqrt2", self.p, self.q),
        }
    }
}

impl Default for QuadraticNumber {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_sanity() {
        let a = QuadraticNumber::silver();
        let b = QuadraticNumber::silver_conjugate();
        assert_eq!(&a * &b, QuadraticNumber::from_ints(-1, 0));
        assert_eq!(&a + &b, QuadraticNumber::from_ints(2, 0));
        assert_eq!(a.pow(1), QuadraticNumber::from_ints(1, 1));
        assert_eq!(a.pow(2), QuadraticNumber::from_ints(3, 2));
        assert_eq!(b.pow(2), QuadraticNumber::from_ints(3, -2));
        assert_eq!(a.pow(0), QuadraticNumber::one());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = QuadraticNumber::sqrt2();
        assert_eq!((&r * &r).to_integer(), Some(BigInt::from(2)));
    }

    #[test]
    fn division_and_inverse() {
        let a = QuadraticNumber::silver();
        assert_eq!(a.recip(), Some(QuadraticNumber::from_ints(-1, 1)));
        let x = QuadraticNumber::from_ints(3, 5);
        assert_eq!(&(&x / &a) * &a, x);
        assert_eq!(QuadraticNumber::zero().recip(), None);
    }

    #[test]
    fn display() {
        assert_eq!(QuadraticNumber::from_ints(1, -1).to_string(), "1 - 1*sqrt2");
        assert_eq!(QuadraticNumber::from_ints(0, 3).to_string(), "3*sqrt2");
        assert_eq!(QuadraticNumber::from_ints(7, 0).to_string(), "7");
    }
}
