//! Certified real-root machinery for univariate polynomials over ℚ: Sturm
//! chains, exact root counting, isolation, bisection refinement, and the
//! coefficient-sign positivity certificate.

use crate::coeff::Rat;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::json::rat_to_string;
use crate::parampoly::ParamPoly;
use crate::poly::MultiPoly;
use num::{One, Signed, Zero};
use serde_json::{json, Value};

/// Dense univariate polynomial over ℚ; shares the parameter-polynomial
/// representation.
pub type UniPoly = ParamPoly;

/// Extract a `UniPoly` from a multivariate polynomial supported on a single
/// variable; returns the variable index alongside the coefficients.
/// Constants are rejected.
pub fn to_unipoly(p: &MultiPoly<Rat>) -> Result<(usize, UniPoly)> {
    let var = p
        .univariate_in()
        .ok_or_else(|| Error::NotUnivariate(format!("{p}")))?;
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exps[var] as usize] = c.clone();
    }
    Ok((var, UniPoly::new(coeffs)))
}

/// `(squarefree part, gcd(p, p'))`; the second component is nontrivial only
/// when p has repeated roots.
pub fn squarefree_part(p: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroInput("squarefree part of zero".into()));
    }
    let g = p.gcd(&p.derivative());
    if g.degree() == Some(0) || g.is_zero() {
        return Ok((p.clone(), UniPoly::constant(Rat::one())));
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    Ok((q, g))
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    pub polys: Vec<UniPoly>,
}

impl SturmChain {
    /// Chain of the squarefree part of `p`.
    pub fn new(p: &UniPoly) -> Result<Self> {
        let (sf, _) = squarefree_part(p)?;
        let mut polys = vec![sf.clone()];
        if sf.degree().unwrap_or(0) >= 1 {
            polys.push(sf.derivative());
            loop {
                let len = polys.len();
                let (_, r) = polys[len - 2].div_rem(&polys[len - 1]);
                if r.is_zero() {
                    break;
                }
                polys.push(r.neg());
            }
        }
        Ok(SturmChain { polys })
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None; // sign as "is positive"
        for p in &self.polys {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(l) = last {
                if l != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Distinct real roots of the (squarefree) polynomial in `(a, b]`.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn check_endpoints(p: &UniPoly, a: &Rat, b: &Rat) -> Result<()> {
    if a >= b {
        return Err(Error::ZeroInput(format!(
            "empty interval ({}, {})",
            rat_to_string(a),
            rat_to_string(b)
        )));
    }
    for e in [a, b] {
        if p.eval(e).is_zero() {
            return Err(Error::EndpointRoot(rat_to_string(e)));
        }
    }
    Ok(())
}

/// Exact number of distinct real roots of `p` in `(a, b]`; endpoint roots
/// are an explicit error.
pub fn sturm_count(p: &UniPoly, a: &Rat, b: &Rat) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    check_endpoints(&chain.polys[0], a, b)?;
    Ok(chain.count(a, b))
}

/// 1 + max |a_i / a_d|: every real root has absolute value below this.
pub fn cauchy_bound(p: &UniPoly) -> Result<Rat> {
    let lead = p
        .leading()
        .ok_or_else(|| Error::ZeroInput("root bound of zero".into()))?;
    let mut m = Rat::zero();
    let deg = p.degree().unwrap();
    for i in 0..deg {
        let q = (p.coeff(i) / lead).abs();
        if q > m {
            m = q;
        }
    }
    Ok(m + Rat::one())
}

#[derive(Clone, Debug)]
pub struct IsolatingInterval {
    pub low: Rat,
    pub high: Rat,
    /// Squarefree polynomial the interval is certified against.
    pub poly: UniPoly,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rat {
        &self.high - &self.low
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.low < v && v <= &self.high
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.low.clone(), self.high.clone())
    }

    /// Bisect until `high - low <= width`; already-narrow intervals return
    /// unchanged. The sign change across the interval is preserved at every
    /// step, so the root is never lost.
    pub fn refine(&self, width: &Rat) -> Self {
        let mut lo = self.low.clone();
        let mut hi = self.high.clone();
        let sign_lo = self.poly.eval(&lo).is_positive();
        debug_assert!(self.poly.eval(&lo).is_positive() != self.poly.eval(&hi).is_positive());
        let mut s_lo = sign_lo;
        while &(&hi - &lo) > width {
            let mid = non_root_point(&self.poly, &lo, &hi);
            let v = self.poly.eval(&mid);
            if v.is_positive() == s_lo {
                lo = mid;
                s_lo = v.is_positive();
            } else {
                hi = mid;
            }
        }
        IsolatingInterval {
            low: lo,
            high: hi,
            poly: self.poly.clone(),
        }
    }
}

/// A point strictly inside `(lo, hi)` that is not a root: the midpoint,
/// nudged toward `lo` while it lands on a root (finitely many roots, so this
/// terminates).
fn non_root_point(p: &UniPoly, lo: &Rat, hi: &Rat) -> Rat {
    let two = Rat::from_integer(2.into());
    let mut mid = (lo + hi) / &two;
    while p.eval(&mid).is_zero() {
        mid = (lo + &mid) / &two;
    }
    mid
}

/// Pairwise-disjoint intervals, each holding exactly one distinct root of
/// `p`, jointly covering all roots in `(a, b)`. Multiplicities are dropped
/// (the squarefree part is certified).
pub fn isolate_roots(p: &UniPoly, a: &Rat, b: &Rat) -> Result<Vec<IsolatingInterval>> {
    let chain = SturmChain::new(p)?;
    let sf = chain.polys[0].clone();
    check_endpoints(&sf, a, b)?;
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => {
                // ensure a sign change so bisection refinement works
                let (mut lo, mut hi) = (lo, hi);
                while sf.eval(&lo).is_positive() == sf.eval(&hi).is_positive() {
                    let mid = non_root_point(&sf, &lo, &hi);
                    if chain.count(&lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push(IsolatingInterval {
                    low: lo,
                    high: hi,
                    poly: sf.clone(),
                });
            }
            _ => {
                let mid = non_root_point(&sf, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|x, y| x.low.cmp(&y.low));
    Ok(out)
}

/// Isolate over the full real line, using the Cauchy bound (nudged off any
/// root) as the window.
pub fn isolate_all_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>> {
    let mut m = cauchy_bound(p)?;
    while p.eval(&m).is_zero() || p.eval(&(-m.clone())).is_zero() {
        m += Rat::one();
    }
    isolate_roots(p, &(-m.clone()), &m)
}

/// True iff every even-degree coefficient is > 0 and every odd-degree
/// coefficient is < 0 (no zero coefficients allowed). True implies every
/// real root is strictly positive.
pub fn positivity_certificate(p: &UniPoly) -> bool {
    match p.degree() {
        None => false,
        Some(deg) => (0..=deg).all(|i| {
            let c = p.coeff(i);
            if i % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        }),
    }
}

/// JSON root report: interval endpoints as exact rationals, the Sturm count
/// (always 1), and the achieved width.
pub fn root_report(label: &str, iv: &IsolatingInterval) -> Value {
    json!({
        "poly": label,
        "low": rat_to_string(&iv.low),
        "high": rat_to_string(&iv.high),
        "sturm_count": 1,
        "width": rat_to_string(&iv.width()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_frac};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn counts_match_known_roots() {
        // x^2 - 2: one root in (0, 2)
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &rat(0), &rat(2)).unwrap(), 1);
        // x^2 + 1: no real roots
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &rat(-10), &rat(10)).unwrap(), 0);
        // (x-1)(x-2)(x+3)
        let q = p(&[6, -7, 0, 1]);
        assert_eq!(sturm_count(&q, &rat(-10), &rat(10)).unwrap(), 3);
        assert_eq!(sturm_count(&q, &rat(0), &rat(10)).unwrap(), 2);
    }

    #[test]
    fn endpoint_root_is_error() {
        assert!(matches!(
            sturm_count(&p(&[-1, 1]), &rat(1), &rat(2)),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn squarefree_handles_multiplicity() {
        // (x-1)^2 = x^2 - 2x + 1
        let q = p(&[1, -2, 1]);
        let (sf, g) = squarefree_part(&q).unwrap();
        assert_eq!(sf.degree(), Some(1));
        assert_eq!(g.degree(), Some(1));
        assert_eq!(sturm_count(&q, &rat(0), &rat(2)).unwrap(), 1);
    }

    #[test]
    fn isolation_separates_roots() {
        // x^2 - 3x + 2: roots 1 and 2
        let q = p(&[2, -3, 1]);
        let ivs = isolate_roots(&q, &rat(0), &rat(3)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat(1)));
        assert!(ivs[1].contains(&rat(2)));
        assert!(ivs[0].as_interval().disjoint(&ivs[1].as_interval()) || ivs[0].high <= ivs[1].low);
        for iv in &ivs {
            assert_eq!(sturm_count(&q, &iv.low, &iv.high).unwrap(), 1);
        }
    }

    #[test]
    fn refinement_narrows_and_keeps_root() {
        let q = p(&[-2, 0, 1]); // root √2 in (1, 2)
        let ivs = isolate_roots(&q, &rat(1), &rat(2)).unwrap();
        let target = rat_frac(1, 1024);
        let fine = ivs[0].refine(&target);
        assert!(fine.width() <= target);
        assert_eq!(sturm_count(&q, &fine.low, &fine.high).unwrap(), 1);
        // idempotent once narrow enough
        let again = fine.refine(&rat(1));
        assert_eq!(again.low, fine.low);
        assert_eq!(again.high, fine.high);
        // 12-digit refinement still certified
        let tiny = Rat::new(1.into(), num::BigInt::from(10u64.pow(12)));
        let very = ivs[0].refine(&tiny);
        assert!(very.width() <= tiny);
        assert_eq!(sturm_count(&q, &very.low, &very.high).unwrap(), 1);
    }

    #[test]
    fn sign_certificate() {
        // x^2 - 3x + 2: certificate holds, roots 1 and 2 both positive
        assert!(positivity_certificate(&p(&[2, -3, 1])));
        assert!(!positivity_certificate(&p(&[1, 1, 1])));
        assert!(!positivity_certificate(&p(&[2, 0, 1]))); // zero coefficient fails
        // certificate implies no roots at or below zero
        let q = p(&[2, -3, 1]);
        let m = cauchy_bound(&q).unwrap();
        assert_eq!(sturm_count(&q, &(-m), &rat(0)).unwrap(), 0);
    }

    #[test]
    fn brute_force_cross_check() {
        // products of linear factors with known integer roots
        let cases: &[(&[i64], &[i64])] = &[
            (&[0, 1], &[0]),                 // x
            (&[-6, 11, -6, 1], &[1, 2, 3]),  // (x-1)(x-2)(x-3)
            (&[0, -4, 0, 1], &[-2, 0, 2]),   // x(x-2)(x+2)
        ];
        for (coeffs, roots) in cases {
            let q = p(coeffs);
            let ivs = isolate_all_roots(&q).unwrap();
            assert_eq!(ivs.len(), roots.len());
            for (iv, r) in ivs.iter().zip(roots.iter()) {
                assert!(iv.contains(&rat(*r)) || iv.low == rat(*r));
            }
        }
    }
}
