//! Coefficient fields: exact rationals and, via [`crate::parampoly::RatFunc`],
//! the rational-function field ℚ(n).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Arbitrary-precision rational. Always canonical: reduced, positive denominator.
pub type Rat = BigRational;

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "a" or "a/b" with optional sign, exact.
pub fn rat_parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().ok()?;
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(num))
        }
    }
}

/// Coefficient field of a polynomial ring. All operations are exact.
pub trait Field:
    Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None for zero.
    fn inv(&self) -> Option<Self>;
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero coefficient"))
    }
    fn from_int(v: i64) -> Self;

    /// Content of a nonempty coefficient list whose first entry is the leading
    /// coefficient. Dividing every entry by the content yields the canonical
    /// primitive list (leading entry sign-normalized positive where signs exist).
    fn content(coeffs: &[Self]) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(v: i64) -> Self {
        rat(v)
    }

    fn content(coeffs: &[Self]) -> Self {
        assert!(!coeffs.is_empty());
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return <Rat as One>::one();
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if coeffs[0].is_negative() {
            content = -content;
        }
        content
    }
}
