//! Rational expressions `num/den` over multivariate polynomials. No gcd
//! reduction is attempted; equality is decided by cross-multiplication, which
//! is exact and cheap enough for the expression sizes involved.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::poly::{Ctx, MultiPoly};

#[derive(Clone, Debug)]
pub struct Ratio<K: Field> {
    pub num: MultiPoly<K>,
    pub den: MultiPoly<K>,
}

impl<K: Field> Ratio<K> {
    pub fn new(num: MultiPoly<K>, den: MultiPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput("zero denominator in ratio".into()));
        }
        Ok(Ratio { num, den })
    }

    pub fn from_poly(num: MultiPoly<K>) -> Self {
        let den = MultiPoly::one(num.ctx.clone());
        Ratio { num, den }
    }

    pub fn zero(ctx: Ctx) -> Self {
        Self::from_poly(MultiPoly::zero(ctx))
    }

    pub fn constant(ctx: Ctx, c: K) -> Self {
        Self::from_poly(MultiPoly::constant(ctx, c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ratio::new(
            self.num
                .mul(&rhs.den)?
                .add(&rhs.num.mul(&self.den)?)?,
            self.den.mul(&rhs.den)?,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Ratio {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Ratio::new(self.num.mul(&rhs.num)?, self.den.mul(&rhs.den)?)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroInput("division by zero ratio".into()));
        }
        Ratio::new(self.num.mul(&rhs.den)?, self.den.mul(&rhs.num)?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("inverse of zero ratio".into()));
        }
        Ratio::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        Ratio {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// a/b == c/d iff a*d == c*b.
    pub fn equal(&self, rhs: &Self) -> Result<bool> {
        Ok(self.num.mul(&rhs.den)? == rhs.num.mul(&self.den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rat;
    use crate::monomial::MonomialOrder;
    use crate::poly::ctx;

    fn setup() -> (Ctx, Ratio<Rat>, Ratio<Rat>) {
        let c = ctx(&["x", "y"], MonomialOrder::Lex);
        let x = MultiPoly::var(c.clone(), 0);
        let y = MultiPoly::var(c.clone(), 1);
        (
            c.clone(),
            Ratio::new(MultiPoly::one(c.clone()), x).unwrap(),
            Ratio::new(MultiPoly::one(c), y).unwrap(),
        )
    }

    #[test]
    fn common_denominator_addition() {
        // 1/x + 1/y = (x + y)/(x*y)
        let (c, rx, ry) = setup();
        let x = MultiPoly::<Rat>::var(c.clone(), 0);
        let y = MultiPoly::var(c, 1);
        let expect = Ratio::new(x.add(&y).unwrap(), x.mul(&y).unwrap()).unwrap();
        assert!(rx.add(&ry).unwrap().equal(&expect).unwrap());
    }

    #[test]
    fn cross_multiplied_equality() {
        // x/x^2 == 1/x even though no reduction happens
        let (c, rx, _) = setup();
        let x = MultiPoly::<Rat>::var(c, 0);
        let unreduced = Ratio::new(x.clone(), x.pow(2).unwrap()).unwrap();
        assert!(unreduced.equal(&rx).unwrap());
        assert_ne!(unreduced.num, rx.num);
    }

    #[test]
    fn division_inverts() {
        let (_, rx, ry) = setup();
        let q = rx.div(&ry).unwrap();
        assert!(q.mul(&ry).unwrap().equal(&rx).unwrap());
        assert!(rx.div(&rx).unwrap().equal(&Ratio::from_poly(MultiPoly::one(rx.num.ctx.clone()))).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        let (c, _, _) = setup();
        assert!(Ratio::new(MultiPoly::<Rat>::one(c.clone()), MultiPoly::zero(c)).is_err());
    }
}
