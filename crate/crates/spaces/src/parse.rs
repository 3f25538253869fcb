//! Small polynomial expression parser: integers, named variables and
//! constants, `+ - * ^` and parentheses. Used for fixture transcription and
//! CLI arguments.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::poly::{Ctx, MultiPoly};

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    ctx: Ctx,
    consts: &'a [(&'a str, K)],
}

impl<'a, K: Field> Parser<'a, K> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                self.term()?.neg()
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly<K>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::Parse("exponent out of range".into()))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<K>> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(MultiPoly::constant(self.ctx.clone(), K::from_int(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                if let Some(idx) = self.ctx.var_index(&name) {
                    return Ok(MultiPoly::var(self.ctx.clone(), idx));
                }
                if let Some((_, v)) = self.consts.iter().find(|(n, _)| *n == name) {
                    return Ok(MultiPoly::constant(self.ctx.clone(), v.clone()));
                }
                Err(Error::Parse(format!("unknown symbol `{name}`")))
            }
            other => Err(Error::Parse(format!("unexpected input: {other:?}"))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("integer literal too large".into()))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

/// Parse an expression over `ctx`; identifiers not in the variable sequence
/// are looked up in `consts`.
pub fn parse_poly<K: Field>(src: &str, ctx: &Ctx, consts: &[(&str, K)]) -> Result<MultiPoly<K>> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ctx: ctx.clone(),
        consts,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse(format!(
            "trailing input at byte {}: `{}`",
            p.pos,
            &src[p.pos.min(src.len())..]
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Rat};
    use crate::monomial::MonomialOrder;
    use crate::parampoly::RatFunc;
    use crate::poly::ctx;

    #[test]
    fn parses_expanded_products() {
        let c = ctx(&["x", "y"], MonomialOrder::Lex);
        let p = parse_poly::<Rat>("(x-1)*(x+1) - x^2 + 1", &c, &[]).unwrap();
        assert!(p.is_zero());
        let q = parse_poly::<Rat>("-3*x*y^2 + 2", &c, &[]).unwrap();
        assert_eq!(q.evaluate(&[rat(1), rat(2)]).unwrap(), rat(-10));
    }

    #[test]
    fn parses_parameter_constants() {
        let c = ctx(&["x"], MonomialOrder::Lex);
        let p = parse_poly::<RatFunc>("(n-1)*x^2 - 2*(n-2)*x + 3", &c, &[("n", RatFunc::n())])
            .unwrap();
        let s = p.specialize(&rat(7)).unwrap();
        let expect = parse_poly::<Rat>("6*x^2 - 10*x + 3", &c, &[]).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn rejects_unknown_symbols() {
        let c = ctx(&["x"], MonomialOrder::Lex);
        assert!(parse_poly::<Rat>("x + q", &c, &[]).is_err());
        assert!(parse_poly::<Rat>("x + ", &c, &[]).is_err());
    }
}
