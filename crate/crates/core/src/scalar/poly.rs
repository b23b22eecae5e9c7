use std::fmt;

use crate::text::{Cursor, ParseError};

/// Univariate polynomial over the prime field F_p, coefficients low-to-high
/// with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    result
}

impl Poly {
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut poly = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, [c])
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: u64, coeff: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Nonzero constants are the units of F_p[x].
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.p, (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| (self.p - c) % self.p))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        let inv_lead = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + dd], inv_lead, p);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(c, d, p)) % p;
            }
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Monic gcd (zero when both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut result = Self::one(self.p).rem(modulus);
        let mut base = self.rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        result
    }

    /// Ben-Or test: f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1
    /// for every 1 <= i <= n/2. Caller guarantees degree >= 1.
    pub(crate) fn ben_or_irreducible(&self) -> bool {
        let f = self.monic();
        let n = f.degree().unwrap_or(0);
        let x = Self::x(self.p);
        let mut h = x.rem(&f);
        for _ in 1..=n / 2 {
            h = h.pow_mod(self.p, &f);
            if !h.sub(&x).gcd(&f).is_unit() {
                return false;
            }
        }
        true
    }

    /// Parses `c0+c1*x+...`, `x^3+x+1`, `2x^2-1` with coefficients reduced mod p.
    pub fn parse_at(cursor: &mut Cursor<'_>, p: u64) -> Result<Self, ParseError> {
        let mut acc = Self::zero(p);
        let mut negate = cursor.eat('-');
        let mut first = true;
        loop {
            let term = Self::parse_term(cursor, p, first)?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            first = false;
            match cursor.peek() {
                Some('+') => {
                    cursor.bump();
                    negate = false;
                }
                Some('-') => {
                    cursor.bump();
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(cursor: &mut Cursor<'_>, p: u64, first: bool) -> Result<Self, ParseError> {
        let coeff = cursor.digits().map(|text| reduce_decimal(text, p));
        if coeff.is_some() {
            cursor.eat('*');
        }
        if cursor.peek() == Some('x') {
            cursor.bump();
            let degree = if cursor.eat('^') {
                cursor.number::<usize>("exponent")?
            } else {
                1
            };
            if degree > 4096 {
                return Err(cursor.error("exponent too large"));
            }
            Ok(Self::monomial(p, coeff.unwrap_or(1), degree))
        } else if let Some(c) = coeff {
            Ok(Self::constant(p, c))
        } else {
            Err(cursor.error(if first {
                "expected polynomial term"
            } else {
                "expected polynomial term after sign"
            }))
        }
    }
}

pub(crate) fn reduce_decimal(text: &str, p: u64) -> u64 {
    text.bytes()
        .fold(0u64, |acc, d| (mul_mod(acc, 10, p) + (d - b'0') as u64) % p)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, c) => write!(f, "{c}*x^{d}")?,
            }
        }
        Ok(())
    }
}
