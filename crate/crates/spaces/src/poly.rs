//! Sparse multivariate polynomials over a coefficient field, with a declared
//! variable sequence and monomial order. Terms are kept in strictly
//! descending monomial order with no zero coefficients.

use crate::coeff::{Field, Rat};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parampoly::RatFunc;
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Context {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

pub type Ctx = Arc<Context>;

pub fn ctx(vars: &[&str], order: MonomialOrder) -> Ctx {
    Arc::new(Context {
        vars: vars.iter().map(|s| s.to_string()).collect(),
        order,
    })
}

impl Context {
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<K: Field> {
    pub ctx: Ctx,
    /// (monomial, coefficient) in strictly descending monomial order.
    terms: Vec<(Monomial, K)>,
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(ctx: Ctx) -> Self {
        MultiPoly { ctx, terms: vec![] }
    }

    pub fn constant(ctx: Ctx, c: K) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        let m = Monomial::one(ctx.vars.len());
        MultiPoly {
            ctx,
            terms: vec![(m, c)],
        }
    }

    pub fn one(ctx: Ctx) -> Self {
        Self::constant(ctx, K::one())
    }

    pub fn var(ctx: Ctx, idx: usize) -> Self {
        let m = Monomial::var(ctx.vars.len(), idx);
        MultiPoly {
            ctx,
            terms: vec![(m, K::one())],
        }
    }

    pub fn var_named(ctx: Ctx, name: &str) -> Result<Self> {
        let idx = ctx
            .var_index(name)
            .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        Ok(Self::var(ctx, idx))
    }

    /// Build from arbitrary terms: sorts, merges, drops zeros.
    pub fn from_terms(ctx: Ctx, mut terms: Vec<(Monomial, K)>) -> Self {
        let order = ctx.order;
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, order));
        let mut out: Vec<(Monomial, K)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { ctx, terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<K> {
        if self.is_zero() {
            Some(K::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps[var]).max().unwrap_or(0)
    }

    /// Variables appearing with nonzero exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ctx.vars.len();
        let mut seen = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// Some(var) if at most one variable occurs (constants report None).
    pub fn univariate_in(&self) -> Option<usize> {
        let sup = self.support_vars();
        if sup.len() == 1 {
            Some(sup[0])
        } else {
            None
        }
    }

    fn check_ctx(&self, rhs: &Self) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ctx.vars, rhs.ctx.vars
            )))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_ctx(rhs)?;
        let order = self.ctx.order;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp_under(mb, order) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(rhs.terms[j..].iter().cloned());
        Ok(MultiPoly {
            ctx: self.ctx.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx.clone());
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.mul_term(&Monomial::one(self.ctx.vars.len()), c)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ctx(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.ctx.clone()));
        }
        // Accumulate via repeated merged addition of term-shifted copies.
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = Self::zero(self.ctx.clone());
        for (m, c) in &small.terms {
            acc = acc.add(&large.mul_term(m, c))?;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.ctx.clone());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact evaluation with a full assignment (one value per variable).
    pub fn evaluate(&self, values: &[K]) -> Result<K> {
        if values.len() != self.ctx.vars.len() {
            return Err(Error::ContextMismatch(format!(
                "assignment of length {} for {} variables",
                values.len(),
                self.ctx.vars.len()
            )));
        }
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&values[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Evaluation from a named partial assignment; every variable with a
    /// nonzero exponent must be covered.
    pub fn evaluate_named(&self, assignment: &[(&str, K)]) -> Result<K> {
        let mut values = vec![None; self.ctx.vars.len()];
        for (name, v) in assignment {
            let idx = self
                .ctx
                .var_index(name)
                .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
            values[idx] = Some(v.clone());
        }
        for i in self.support_vars() {
            if values[i].is_none() {
                return Err(Error::MissingVariable(self.ctx.vars[i].clone()));
            }
        }
        let full: Vec<K> = values
            .into_iter()
            .map(|v| v.unwrap_or_else(K::zero))
            .collect();
        self.evaluate(&full)
    }

    /// Substitute polynomials for variables; unbound variables map to themselves.
    pub fn substitute(&self, bindings: &[(usize, MultiPoly<K>)]) -> Result<Self> {
        for (_, p) in bindings {
            self.check_ctx(p)?;
        }
        let nvars = self.ctx.vars.len();
        let mut images: Vec<MultiPoly<K>> = (0..nvars)
            .map(|i| Self::var(self.ctx.clone(), i))
            .collect();
        for (i, p) in bindings {
            images[*i] = p.clone();
        }
        let mut acc = Self::zero(self.ctx.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.ctx.clone(), c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e)?)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    pub fn substitute_named(&self, bindings: &[(&str, MultiPoly<K>)]) -> Result<Self> {
        let mut by_index = Vec::with_capacity(bindings.len());
        for (name, p) in bindings {
            let idx = self
                .ctx
                .var_index(name)
                .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
            by_index.push((idx, p.clone()));
        }
        self.substitute(&by_index)
    }

    /// Formal derivative with respect to one variable.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[var] > 0)
            .map(|(m, c)| {
                let e = m.exps[var];
                let mut m2 = m.clone();
                m2.exps[var] = e - 1;
                (m2, c.mul(&K::from_int(e as i64)))
            })
            .collect();
        MultiPoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Content and primitive part: `self = content * primitive`, the primitive
    /// part canonical with positive leading coefficient. Zero input is an error.
    pub fn content_primitive(&self) -> Result<(K, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("content of zero polynomial".into()));
        }
        let coeffs: Vec<K> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let content = K::content(&coeffs);
        let inv = content.inv().expect("content is nonzero");
        Ok((content.clone(), self.scale(&inv)))
    }

    /// Primitive part only; zero maps to zero.
    pub fn primitive(&self) -> Self {
        match self.content_primitive() {
            Ok((_, p)) => p,
            Err(_) => self.clone(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient nonzero")),
        }
    }

    pub fn map_coeffs<L: Field>(&self, ctx: Ctx, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        MultiPoly {
            ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Reinterpret under a context with the same variables in the same
    /// sequence but a different order; re-sorts terms.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let ctx = Arc::new(Context {
            vars: self.ctx.vars.clone(),
            order,
        });
        Self::from_terms(ctx, self.terms.clone())
    }

    /// Extend the variable sequence with a fresh variable placed first.
    pub fn extend_var_front(&self, name: &str) -> Result<Self> {
        if self.ctx.vars.iter().any(|v| v == name) {
            return Err(Error::ContextMismatch(format!(
                "variable `{name}` already present"
            )));
        }
        let mut vars = vec![name.to_string()];
        vars.extend(self.ctx.vars.iter().cloned());
        let ctx = Arc::new(Context {
            vars,
            order: self.ctx.order,
        });
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32];
                exps.extend_from_slice(&m.exps);
                (Monomial { exps }, c.clone())
            })
            .collect();
        Ok(Self::from_terms(ctx, terms))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Re-express under another context, matching variables by name. Fails if
    /// a variable with a nonzero exponent is absent from the target context.
    pub fn project(&self, target: &Ctx) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.vars.len()];
            for (i, e) in m.exps.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let name = &self.ctx.vars[i];
                let j = target
                    .var_index(name)
                    .ok_or_else(|| Error::MissingVariable(name.clone()))?;
                exps[j] = *e;
            }
            terms.push((Monomial { exps }, c.clone()));
        }
        Ok(Self::from_terms(target.clone(), terms))
    }
}

impl MultiPoly<RatFunc> {
    /// Coefficient-wise exact evaluation of the parameter n.
    pub fn specialize(&self, n0: &Rat) -> Result<MultiPoly<Rat>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = c
                .eval(n0)
                .ok_or_else(|| Error::Pole(format!("{n0}")))?;
            if !v.is_zero() {
                terms.push((m.clone(), v));
            }
        }
        Ok(MultiPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }
}

impl MultiPoly<Rat> {
    pub fn lift(&self) -> MultiPoly<RatFunc> {
        self.map_coeffs(self.ctx.clone(), |c| RatFunc::from_rat(c.clone()))
    }
}

impl<K: Field> std::fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.ctx.vars[v])?,
                    _ => write!(f, "*{}^{}", self.ctx.vars[v], e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn xy() -> Ctx {
        ctx(&["x", "y"], MonomialOrder::Lex)
    }

    fn x(c: &Ctx) -> MultiPoly<Rat> {
        MultiPoly::var(c.clone(), 0)
    }

    fn y(c: &Ctx) -> MultiPoly<Rat> {
        MultiPoly::var(c.clone(), 1)
    }

    fn one(c: &Ctx) -> MultiPoly<Rat> {
        MultiPoly::one(c.clone())
    }

    #[test]
    fn difference_of_squares() {
        let c = xy();
        let p = x(&c).sub(&one(&c)).unwrap();
        let q = x(&c).add(&one(&c)).unwrap();
        let expect = x(&c).pow(2).unwrap().sub(&one(&c)).unwrap();
        assert_eq!(p.mul(&q).unwrap(), expect);
    }

    #[test]
    fn additive_identity() {
        let c = xy();
        let p = x(&c).mul(&y(&c)).unwrap();
        assert_eq!(p.add(&MultiPoly::zero(c.clone())).unwrap(), p);
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = x(&xy());
        let other = ctx(&["u", "v"], MonomialOrder::Lex);
        let b = MultiPoly::<Rat>::var(other, 0);
        assert!(matches!(a.add(&b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn evaluate_at_root() {
        let c = xy();
        let p = x(&c).pow(2).unwrap().sub(&one(&c)).unwrap();
        assert_eq!(p.evaluate_named(&[("x", rat(1))]).unwrap(), rat(0));
    }

    #[test]
    fn evaluate_missing_variable() {
        let c = xy();
        let p = x(&c).mul(&y(&c)).unwrap();
        assert!(matches!(
            p.evaluate_named(&[("x", rat(1))]),
            Err(Error::MissingVariable(_))
        ));
    }

    #[test]
    fn substitute_collapses() {
        let c = xy();
        let p = x(&c).sub(&y(&c)).unwrap();
        let r = p.substitute_named(&[("x", y(&c))]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn substitution_evaluation_compatible() {
        // evaluate(substitute(p, x->q), s) == evaluate(p, s[x := evaluate(q, s)])
        let c = xy();
        let p = x(&c)
            .pow(2)
            .unwrap()
            .add(&x(&c).mul(&y(&c)).unwrap())
            .unwrap();
        let q = y(&c).pow(2).unwrap().add(&one(&c)).unwrap();
        let s = [rat(3), rat(5)];
        let qv = q.evaluate(&s).unwrap();
        let lhs = p.substitute_named(&[("x", q)]).unwrap().evaluate(&s).unwrap();
        let rhs = p.evaluate(&[qv, rat(5)]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn content_primitive_reconstructs() {
        let c = xy();
        let p = x(&c).scale(&rat(2)).add(&one(&c).scale(&rat(2))).unwrap();
        let (content, prim) = p.content_primitive().unwrap();
        assert_eq!(content, rat(2));
        assert_eq!(prim, x(&c).add(&one(&c)).unwrap());
        assert_eq!(prim.scale(&content), p);
        // sign goes into the content
        let q = x(&c)
            .pow(2)
            .unwrap()
            .scale(&rat(-3))
            .add(&one(&c).scale(&rat(3)))
            .unwrap();
        let (content, prim) = q.content_primitive().unwrap();
        assert_eq!(content, rat(-3));
        assert_eq!(prim, x(&c).pow(2).unwrap().sub(&one(&c)).unwrap());
        assert!(prim.content_primitive().unwrap().0 == rat(1));
    }

    #[test]
    fn zero_content_is_error() {
        let c = xy();
        assert!(MultiPoly::<Rat>::zero(c).content_primitive().is_err());
    }

    #[test]
    fn derivative_basics() {
        let c = xy();
        // d/dx (x^2 - 2) = 2x
        let p = x(&c)
            .pow(2)
            .unwrap()
            .sub(&one(&c).scale(&rat(2)))
            .unwrap();
        assert_eq!(p.derivative(0), x(&c).scale(&rat(2)));
        assert!(one(&c).derivative(0).is_zero());
    }

    #[test]
    fn extend_var_front_shifts() {
        let c = xy();
        let p = x(&c).mul(&y(&c)).unwrap();
        let q = p.extend_var_front("z").unwrap();
        assert_eq!(q.ctx.vars, vec!["z", "x", "y"]);
        assert_eq!(q.terms()[0].0.exps, vec![0, 1, 1]);
    }

    #[test]
    fn specialize_commutes_with_arith() {
        use crate::parampoly::ParamPoly;
        let c = xy();
        let n = MultiPoly::constant(c.clone(), RatFunc::n());
        let xx: MultiPoly<RatFunc> = MultiPoly::var(c.clone(), 0);
        let a = xx.mul(&n).unwrap().add(&MultiPoly::one(c.clone())).unwrap();
        let b = xx.sub(&n).unwrap();
        let n0 = rat(7);
        let lhs = a.mul(&b).unwrap().specialize(&n0).unwrap();
        let rhs = a
            .specialize(&n0)
            .unwrap()
            .mul(&b.specialize(&n0).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // pole detection
        let bad = MultiPoly::constant(
            c,
            RatFunc::new(ParamPoly::from_int(1), ParamPoly::new(vec![rat(-7), rat(1)])),
        );
        assert!(matches!(bad.specialize(&n0), Err(Error::Pole(_))));
    }
}
