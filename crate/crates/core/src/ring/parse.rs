use crate::scalar::{is_prime_u64, Poly};
use crate::text::{Cursor, ParseError};

use super::RingSpec;

pub(super) fn parse_ring(text: &str) -> Result<RingSpec, ParseError> {
    let mut c = Cursor::new(text);
    let spec = parse_ring_at(&mut c)?;
    c.expect_end()?;
    Ok(spec)
}

fn prime(c: &mut Cursor<'_>) -> Result<u64, ParseError> {
    let start = c.pos();
    let p: u64 = c.number("prime")?;
    if !is_prime_u64(p) || p >= 1 << 31 {
        return Err(ParseError { pos: start, message: format!("{p} is not a supported prime") });
    }
    Ok(p)
}

fn count(c: &mut Cursor<'_>, what: &str) -> Result<usize, ParseError> {
    let start = c.pos();
    let n: usize = c.number(what)?;
    if n == 0 {
        return Err(ParseError { pos: start, message: format!("{what} must be at least 1") });
    }
    Ok(n)
}

fn modulus(c: &mut Cursor<'_>, p: u64) -> Result<Poly, ParseError> {
    let start = c.pos();
    let f = Poly::parse_at(c, p)?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(ParseError { pos: start, message: "modulus polynomial must be nonconstant".into() });
    }
    Ok(f.monic())
}

pub(super) fn parse_ring_at(c: &mut Cursor<'_>) -> Result<RingSpec, ParseError> {
    c.peek();
    let start = c.pos();
    let name = c
        .ident()
        .ok_or_else(|| c.error("expected a ring constructor"))?;
    c.expect('(')?;
    let spec = match name {
        "Zn" => {
            let n: u64 = c.number("modulus")?;
            if n < 2 {
                return Err(ParseError { pos: start, message: format!("Zn needs n >= 2, got {n}") });
            }
            RingSpec::Zn(n)
        }
        "GF" => {
            let p = prime(c)?;
            if c.eat(',') {
                let f = modulus(c, p)?;
                if !f.ben_or_irreducible() {
                    return Err(ParseError {
                        pos: start,
                        message: format!("GF({p},{f}) needs an irreducible modulus"),
                    });
                }
                RingSpec::QuotPoly(f)
            } else {
                RingSpec::gf(p)
            }
        }
        "QuotPoly" => {
            let p = prime(c)?;
            c.expect(',')?;
            RingSpec::QuotPoly(modulus(c, p)?)
        }
        "Trunc" => {
            let p = prime(c)?;
            c.expect(',')?;
            RingSpec::Trunc { p, vars: count(c, "variable count")? }
        }
        "Prod" => {
            let mut factors = vec![parse_ring_at(c)?];
            while c.eat(',') {
                factors.push(parse_ring_at(c)?);
            }
            if factors.len() < 2 {
                return Err(c.error("Prod needs at least two factors"));
            }
            let last = factors.pop().unwrap();
            factors.into_iter().rev().fold(last, |acc, f| RingSpec::prod(f, acc))
        }
        "Ideal" | "Idealize" => {
            let base = parse_ring_at(c)?;
            c.expect(',')?;
            RingSpec::idealize(base, count(c, "idealization rank")?)
        }
        other => {
            return Err(ParseError { pos: start, message: format!("unknown ring constructor `{other}`") })
        }
    };
    c.expect(')')?;
    Ok(spec)
}
