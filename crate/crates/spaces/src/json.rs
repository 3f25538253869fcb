//! Canonical JSON polynomial format:
//! `{ "vars": [..], "order": "lex", "terms": [ { "exp": [..], "num": .., "den": .. } ] }`
//! with terms in descending monomial order and integers as decimal strings.
//! Coefficients over ℚ use plain strings; coefficients over ℚ(n) use
//! `{ "n_poly": ["c0", "c1", ..] }` for either side of the fraction.

use crate::coeff::{Field, Rat};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parampoly::{ratfunc_integer_parts, ParamPoly, RatFunc};
use crate::poly::{Context, Ctx, MultiPoly};
use num::bigint::BigInt;
use num::One;
use serde_json::{json, Value};
use std::sync::Arc;

pub trait JsonCoeff: Field {
    /// (num, den) JSON values of the canonical fraction.
    fn coeff_to_json(&self) -> (Value, Value);
    fn coeff_from_json(num: &Value, den: &Value) -> Result<Self>;
}

impl JsonCoeff for Rat {
    fn coeff_to_json(&self) -> (Value, Value) {
        (
            Value::String(self.numer().to_string()),
            Value::String(self.denom().to_string()),
        )
    }

    fn coeff_from_json(num: &Value, den: &Value) -> Result<Self> {
        let n = parse_bigint(num)?;
        let d = parse_bigint(den)?;
        if d == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rat::new(n, d))
    }
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse("expected decimal string".into()))?;
    s.parse()
        .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn npoly_to_json(coeffs: &[BigInt]) -> Value {
    if coeffs.len() <= 1 {
        return Value::String(
            coeffs
                .first()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "0".into()),
        );
    }
    json!({ "n_poly": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>() })
}

fn npoly_from_json(v: &Value) -> Result<ParamPoly> {
    if let Some(obj) = v.as_object() {
        let arr = obj
            .get("n_poly")
            .and_then(|a| a.as_array())
            .ok_or_else(|| Error::Parse("expected n_poly array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| parse_bigint(c).map(Rat::from_integer))
            .collect::<Result<Vec<_>>>()?;
        return Ok(ParamPoly::new(coeffs));
    }
    Ok(ParamPoly::constant(Rat::from_integer(parse_bigint(v)?)))
}

impl JsonCoeff for RatFunc {
    fn coeff_to_json(&self) -> (Value, Value) {
        let (num, den) = ratfunc_integer_parts(self);
        (npoly_to_json(&num), npoly_to_json(&den))
    }

    fn coeff_from_json(num: &Value, den: &Value) -> Result<Self> {
        let n = npoly_from_json(num)?;
        let d = npoly_from_json(den)?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator polynomial".into()));
        }
        Ok(RatFunc::new(n, d))
    }
}

pub fn poly_to_json<K: JsonCoeff>(p: &MultiPoly<K>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let (num, den) = c.coeff_to_json();
            json!({ "exp": m.exps, "num": num, "den": den })
        })
        .collect();
    json!({
        "vars": p.ctx.vars,
        "order": p.ctx.order.name(),
        "terms": terms,
    })
}

pub fn poly_from_json<K: JsonCoeff>(v: &Value) -> Result<MultiPoly<K>> {
    let vars: Vec<String> = v
        .get("vars")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("missing vars".into()))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(|s| s.to_string())
                .ok_or_else(|| Error::Parse("vars must be strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let order = v
        .get("order")
        .and_then(|x| x.as_str())
        .and_then(MonomialOrder::parse)
        .ok_or_else(|| Error::Parse("missing or bad order".into()))?;
    let ctx: Ctx = Arc::new(Context { vars, order });
    let nvars = ctx.vars.len();
    let mut terms = Vec::new();
    for t in v
        .get("terms")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("missing terms".into()))?
    {
        let exps: Vec<u32> = t
            .get("exp")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing exp".into()))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| Error::Parse("bad exponent".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        if exps.len() != nvars {
            return Err(Error::Parse("exponent length mismatch".into()));
        }
        let num = t.get("num").ok_or_else(|| Error::Parse("missing num".into()))?;
        let den = t
            .get("den")
            .cloned()
            .unwrap_or_else(|| Value::String("1".into()));
        let c = K::coeff_from_json(num, &den)?;
        terms.push((Monomial { exps }, c));
    }
    Ok(MultiPoly::from_terms(ctx, terms))
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion of a rational to `digits` fractional digits, truncated
/// toward zero. Used for human-readable reports only.
pub fn rat_to_decimal(r: &Rat, digits: u32) -> String {
    let neg = r < &Rat::from_integer(BigInt::from(0));
    let a = if neg { -r.clone() } else { r.clone() };
    let scale = BigInt::from(10).pow(digits);
    let scaled = (a.numer() * &scale) / a.denom();
    let int = &scaled / &scale;
    let frac = &scaled % &scale;
    let mut s = format!("{int}.{:0>width$}", frac.to_string(), width = digits as usize);
    if neg {
        s = format!("-{s}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_frac};
    use crate::parse::parse_poly;
    use crate::poly::ctx;

    #[test]
    fn rational_roundtrip_bit_exact() {
        let c = ctx(&["x", "y"], MonomialOrder::Lex);
        let p = parse_poly::<Rat>("3*x^2*y - 7*y + 1", &c, &[])
            .unwrap()
            .scale(&rat_frac(1, 6));
        let v = poly_to_json(&p);
        let q: MultiPoly<Rat> = poly_from_json(&v).unwrap();
        assert_eq!(p, q);
        assert_eq!(serde_json::to_string(&v).unwrap(), {
            let v2 = poly_to_json(&q);
            serde_json::to_string(&v2).unwrap()
        });
    }

    #[test]
    fn parametric_roundtrip() {
        let c = ctx(&["x"], MonomialOrder::Lex);
        let p = parse_poly::<RatFunc>("(n-1)*x^2 - 2*(n-2)*x + 3", &c, &[("n", RatFunc::n())])
            .unwrap();
        let half = MultiPoly::constant(c.clone(), RatFunc::from_rat(rat_frac(1, 2)));
        let p = p.mul(&half).unwrap();
        let v = poly_to_json(&p);
        let q: MultiPoly<RatFunc> = poly_from_json(&v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn terms_descend() {
        let c = ctx(&["x"], MonomialOrder::Lex);
        let p = parse_poly::<Rat>("1 + x^3 + x", &c, &[]).unwrap();
        let v = poly_to_json(&p);
        let exps: Vec<u64> = v["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["exp"][0].as_u64().unwrap())
            .collect();
        assert_eq!(exps, vec![3, 1, 0]);
    }

    #[test]
    fn decimal_printing() {
        assert_eq!(rat_to_decimal(&rat_frac(1, 3), 5), "0.33333");
        assert_eq!(rat_to_decimal(&rat(-2), 2), "-2.00");
    }
}
