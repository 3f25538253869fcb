//! Dense univariate polynomials in the parameter `n` over ℚ, and the
//! fraction field ℚ(n) built from them.

use crate::coeff::{rat, Field, Rat};
use num::bigint::BigInt;
use num::{Integer, Signed};

/// Polynomial in the parameter `n`; `coeffs[i]` is the coefficient of `n^i`.
/// Trailing zeros are stripped; the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ParamPoly {
    coeffs: Vec<Rat>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    pub fn zero() -> Self {
        ParamPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(rat(v))
    }

    /// The monomial `n`.
    pub fn n() -> Self {
        Self::new(vec![rat(0), rat(1)])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, n0: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * n0 + c;
        }
        acc
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let dl = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![rat(0); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let rl = rem.last().unwrap().clone();
            if rl.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dd;
            let q = &rl / &dl;
            quot[shift] = q.clone();
            for (j, c) in div.coeffs.iter().enumerate() {
                let t = c * &q;
                rem[shift + j] -= t;
            }
            // leading term cancels exactly
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// Rational content: gcd of numerators over lcm of denominators, with
    /// the sign of the leading coefficient.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return rat(1);
        }
        Rat::content(&self.coeffs.iter().rev().cloned().collect::<Vec<_>>())
    }

    /// Integer-primitive form with positive leading coefficient: returns
    /// `(c, p)` with `self = c * p`, `p` having coprime integer coefficients.
    pub fn primitive(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (rat(1), Self::zero());
        }
        let c = self.content();
        (c.clone(), self.scale(&c.recip()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }
}

impl std::fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a == rat(1) {
                if i == 1 {
                    write!(f, "n")?;
                } else {
                    write!(f, "n^{i}")?;
                }
            } else if i == 1 {
                write!(f, "{a}*n")?;
            } else {
                write!(f, "{a}*n^{i}")?;
            }
        }
        Ok(())
    }
}

/// Element of ℚ(n): a ratio of polynomials in `n`. Canonical form has a
/// gcd-reduced pair with an integer-primitive denominator of positive
/// leading coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFunc {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in RatFunc");
        let mut out = RatFunc { num, den };
        out.canonicalize();
        out
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = ParamPoly::constant(rat(1));
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let (c, prim_den) = self.den.primitive();
        self.den = prim_den;
        self.num = self.num.scale(&c.recip());
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        Self::new(p, ParamPoly::constant(rat(1)))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(ParamPoly::constant(r))
    }

    pub fn n() -> Self {
        Self::from_poly(ParamPoly::n())
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Exact evaluation at `n0`; None if the denominator vanishes there.
    pub fn eval(&self, n0: &Rat) -> Option<Rat> {
        let d = self.den.eval(n0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(n0) / d)
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() && self.den.coeff(0) == rat(1) {
            if self.num.is_constant() || self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
            {
                write!(f, "{}", self.num)
            } else {
                write!(f, "({})", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }
    fn one() -> Self {
        Self::from_rat(rat(1))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_int(v: i64) -> Self {
        Self::from_rat(rat(v))
    }

    fn content(coeffs: &[Self]) -> Self {
        assert!(!coeffs.is_empty());
        // Clear all denominators, then extract the common polynomial and
        // rational factor of the numerators.
        let mut den_lcm = ParamPoly::constant(rat(1));
        for c in coeffs {
            let g = den_lcm.gcd(&c.den);
            den_lcm = den_lcm.div_rem(&g).0.mul(&c.den);
        }
        let cleared: Vec<ParamPoly> = coeffs
            .iter()
            .map(|c| c.num.mul(&den_lcm.div_rem(&c.den).0))
            .collect();
        let mut poly_gcd = ParamPoly::zero();
        for p in &cleared {
            poly_gcd = poly_gcd.gcd(p);
        }
        if poly_gcd.is_zero() {
            return Self::one();
        }
        let mut rats: Vec<Rat> = Vec::new();
        for p in &cleared {
            let reduced = p.div_rem(&poly_gcd).0;
            rats.extend(reduced.coeffs().iter().cloned());
        }
        let mut rc = Rat::content(&rats);
        // Sign convention: the leading entry of the primitive list has a
        // positive leading coefficient in n.
        let lead = cleared[0]
            .div_rem(&poly_gcd)
            .0
            .leading()
            .cloned()
            .unwrap_or_else(Rat::one);
        if (&lead / &rc).is_negative() {
            rc = -rc;
        }
        Self::new(poly_gcd.scale(&rc), den_lcm)
    }
}

/// Integer-coefficient presentation `(num, den)` of a RatFunc after scaling
/// both sides by the numerator's content. Used by the JSON format.
pub fn ratfunc_integer_parts(f: &RatFunc) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut den_lcm = BigInt::from(1);
    for c in f.num().coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let num: Vec<BigInt> = f
        .num()
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    // Canonical denominators are integer-primitive; scale to match num.
    let den: Vec<BigInt> = f
        .den()
        .coeffs()
        .iter()
        .map(|c| c.numer() * &den_lcm)
        .collect();
    let mut g = BigInt::from(0);
    for c in num.iter().chain(den.iter()) {
        g = g.gcd(&c.abs());
    }
    if g == BigInt::from(0) {
        g = BigInt::from(1);
    }
    (
        num.iter().map(|c| c / &g).collect(),
        den.iter().map(|c| c / &g).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_frac;

    fn p(coeffs: &[i64]) -> ParamPoly {
        ParamPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trailing_zeros_stripped() {
        let q = ParamPoly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(ParamPoly::new(vec![rat(0)]).is_zero());
    }

    #[test]
    fn div_rem_exact() {
        // (n^2 - 1) = (n - 1)(n + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1]));
    }

    #[test]
    fn gcd_monic() {
        let a = p(&[-1, 0, 1]); // n^2-1
        let b = p(&[2, 2]); // 2n+2
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn ratfunc_canonical() {
        // (n^2-1)/(2n+2) = (n-1)/2
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[2, 2]));
        assert_eq!(f.num(), &ParamPoly::new(vec![rat_frac(-1, 2), rat_frac(1, 2)]));
        assert_eq!(f.den(), &p(&[1]));
        assert_eq!(f.eval(&rat(7)), Some(rat(3)));
    }

    #[test]
    fn ratfunc_field_ops() {
        let n = RatFunc::n();
        let one = RatFunc::one();
        // n/(n-1) - 1/(n-1) = 1 ... (n-1)/(n-1)
        let nm1 = n.sub(&one);
        let lhs = n.div(&nm1).sub(&one.div(&nm1));
        assert_eq!(lhs, one);
        assert!(n.mul(&n.inv().unwrap()) == one);
    }

    #[test]
    fn eval_pole() {
        let f = RatFunc::new(p(&[1]), p(&[-7, 1]));
        assert_eq!(f.eval(&rat(7)), None);
    }

    #[test]
    fn content_of_ratfunc_list() {
        // [2(n-1), 4(n-1)^2] -> content 2(n-1)
        let a = RatFunc::from_poly(p(&[-2, 2]));
        let b = RatFunc::from_poly(p(&[4, -8, 4]));
        let c = RatFunc::content(&[a.clone(), b.clone()]);
        assert_eq!(c, RatFunc::from_poly(p(&[-2, 2])));
        assert_eq!(a.div(&c), RatFunc::one());
        assert_eq!(b.div(&c), RatFunc::from_poly(p(&[-2, 2])));
    }
}
