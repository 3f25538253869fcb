//! Closed rational intervals and interval evaluation of polynomials; the
//! inclusion property is what certifies residual signs in solution records.

use crate::coeff::Rat;
use crate::error::Result;
use crate::poly::MultiPoly;
use num::Zero;

#[derive(Clone, PartialEq, Debug)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(v: Rat) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo > Rat::zero()
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi < Rat::zero()
    }

    pub fn disjoint(&self, rhs: &Self) -> bool {
        self.hi < rhs.lo || rhs.hi < self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        Interval {
            lo: products.iter().min().unwrap().clone(),
            hi: products.iter().max().unwrap().clone(),
        }
    }

    /// None when the divisor interval contains zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let inv = Interval {
            lo: rhs.hi.recip(),
            hi: rhs.lo.recip(),
        };
        Some(self.mul(&inv))
    }

    /// Largest absolute value attained on the interval.
    pub fn mag(&self) -> Rat {
        let a = self.lo.clone();
        let b = self.hi.clone();
        let (a, b) = (if a < Rat::zero() { -a } else { a }, if b < Rat::zero() { -b } else { b });
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Interval::point(Rat::from_integer(1.into()));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Interval enclosure of `p` over the box (one interval per variable).
/// Inclusion-sound: the true range over the box lies inside the result.
pub fn evaluate_box(p: &MultiPoly<Rat>, box_: &[Interval]) -> Result<Interval> {
    let mut acc = Interval::point(Rat::zero());
    for (m, c) in p.terms() {
        let mut t = Interval::point(c.clone());
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                t = t.mul(&box_[i].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_frac};
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_poly;
    use crate::poly::ctx;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(rat(a), rat(b))
    }

    #[test]
    fn signed_multiplication() {
        assert_eq!(iv(-2, 3).mul(&iv(-1, 4)), iv(-8, 12));
        assert_eq!(iv(-2, -1).mul(&iv(-3, -2)), iv(2, 6));
    }

    #[test]
    fn enclosure_contains_sample_values() {
        let c = ctx(&["x", "y"], MonomialOrder::Lex);
        let p = parse_poly(&"x^2*y - 3*x + 1", &c, &[]).unwrap();
        let box_ = [
            Interval::new(rat_frac(1, 2), rat_frac(3, 2)),
            Interval::new(rat(-1), rat(1)),
        ];
        let enc = evaluate_box(&p, &box_).unwrap();
        for (x, y) in [(rat_frac(1, 2), rat(-1)), (rat(1), rat(0)), (rat_frac(3, 2), rat(1))] {
            let v = p.evaluate(&[x, y]).unwrap();
            assert!(enc.contains(&v));
        }
    }

    #[test]
    fn sign_certificates() {
        assert!(iv(1, 5).strictly_positive());
        assert!(iv(-5, -1).strictly_negative());
        assert!(iv(-1, 1).contains_zero());
        assert!(iv(1, 2).disjoint(&iv(3, 4)));
        assert!(!iv(1, 3).disjoint(&iv(2, 4)));
    }
}
