//! Text syntax `3*x^2*y - 1/2*z + 5`, with parentheses and explicit `*`.

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::lexer::{tokenize, Cursor, Tok};

use super::{Polynomial, Ring};

const MAX_EXPONENT: u32 = 10_000;

impl Polynomial {
    /// Parses a polynomial over `ring`. Terms may come in any order; the
    /// result is in canonical ring order.
    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        let mut cur = Cursor::new(&toks, text);
        let p = parse_expr(ring, &mut cur)?;
        if !cur.at_end() {
            return Err(cur.error_here("unexpected trailing input"));
        }
        Ok(p)
    }
}

pub(crate) fn parse_expr(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let mut acc = parse_term(ring, cur)?;
    loop {
        if cur.eat_sym('+') {
            acc = &acc + &parse_term(ring, cur)?;
        } else if cur.eat_sym('-') {
            acc = &acc - &parse_term(ring, cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let mut acc = parse_unary(ring, cur)?;
    loop {
        if cur.eat_sym('*') {
            acc = &acc * &parse_unary(ring, cur)?;
        } else if cur.peek().is_some_and(|t| t.is_sym('/')) {
            let tok = cur.next().expect("peeked");
            let d = parse_unary(ring, cur)?;
            if !d.is_constant() || d.is_zero() {
                return Err(tok.error("division only by non-zero constants"));
            }
            let inv = d.terms()[0].1.inv().map_err(|_| tok.error("division by zero"))?;
            acc = acc.scale(&inv);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_unary(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    if cur.eat_sym('-') {
        return Ok(-&parse_unary(ring, cur)?);
    }
    if cur.eat_sym('+') {
        return parse_unary(ring, cur);
    }
    parse_power(ring, cur)
}

fn parse_power(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let base = parse_atom(ring, cur)?;
    if cur.eat_sym('^') {
        let (e, tok) = cur.expect_int()?;
        let e = e
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| tok.error("exponent too large"))?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn parse_atom(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let Some(tok) = cur.peek() else {
        return Err(cur.error_here("expected a polynomial"));
    };
    match &tok.tok {
        Tok::Int(v) => {
            cur.next();
            Ok(Polynomial::constant(ring, ring.field().from_bigint(v)))
        }
        Tok::Ident(name) => {
            cur.next();
            match ring.var_index(name) {
                Some(i) => Ok(ring.var(i)),
                None => Err(tok.error(format!("unknown variable {name}"))),
            }
        }
        Tok::Sym('(') => {
            cur.next();
            let p = parse_expr(ring, cur)?;
            cur.expect_sym(')')?;
            Ok(p)
        }
        Tok::Sym(c) => Err(tok.error(format!("unexpected `{c}`"))),
    }
}
