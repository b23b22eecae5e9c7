//! Exact arithmetic in the acting domains: the integers and F_p[x].

mod poly;

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::text::{Cursor, ParseError};

pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("scalars from different domains: {0} and {1}")]
    DomainMismatch(ScalarDomain, ScalarDomain),
    #[error("gcd of two zeros is undefined")]
    BothZero,
    #[error("zero is not allowed here")]
    Zero,
    #[error("{0} is a unit")]
    Unit(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("primality of {0} is outside the supported range")]
    TooLarge(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// One of the two supported integral domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarDomain {
    Integers,
    PolyOverPrimeField { p: u64 },
}

impl ScalarDomain {
    pub fn poly_over(p: u64) -> Result<Self, ScalarError> {
        // Coefficient products must fit in u64 arithmetic.
        if p >= 1 << 31 || !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Self::PolyOverPrimeField { p })
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Self::Integers => None,
            Self::PolyOverPrimeField { p } => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Self::Integers => Scalar::Int(BigInt::zero()),
            Self::PolyOverPrimeField { p } => Scalar::Poly(Poly::zero(p)),
        }
    }

    pub fn one(&self) -> Scalar {
        match *self {
            Self::Integers => Scalar::Int(BigInt::one()),
            Self::PolyOverPrimeField { p } => Scalar::Poly(Poly::one(p)),
        }
    }

    /// Integer literal with optional sign, or a polynomial literal.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, ScalarError> {
        let mut cursor = Cursor::new(text);
        let s = self.parse_scalar_at(&mut cursor)?;
        cursor.expect_end()?;
        Ok(s)
    }

    pub(crate) fn parse_scalar_at(&self, cursor: &mut Cursor<'_>) -> Result<Scalar, ParseError> {
        match *self {
            Self::Integers => {
                let negative = if cursor.eat('-') {
                    true
                } else {
                    cursor.eat('+');
                    false
                };
                let digits = cursor
                    .digits()
                    .ok_or_else(|| cursor.error("expected integer"))?;
                let mut value: BigInt = digits.parse().expect("digits parse");
                if negative {
                    value = -value;
                }
                Ok(Scalar::Int(value))
            }
            Self::PolyOverPrimeField { p } => Ok(Scalar::Poly(Poly::parse_at(cursor, p)?)),
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integers => f.write_str("Z"),
            Self::PolyOverPrimeField { p } => write!(f, "F{p}[x]"),
        }
    }
}

/// An element of the acting domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Poly(Poly),
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::Poly(p)
    }
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Int(_) => ScalarDomain::Integers,
            Scalar::Poly(f) => ScalarDomain::PolyOverPrimeField {
                p: f.characteristic(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Poly(f) => f.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(n) => n.abs().is_one(),
            Scalar::Poly(f) => f.is_unit(),
        }
    }

    /// Canonical associate: |n| for integers, the monic associate for polynomials.
    pub fn normalized(&self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(n.abs()),
            Scalar::Poly(f) => Scalar::Poly(f.monic()),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(n) => Some(n),
            Scalar::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Scalar::Poly(f) => Some(f),
            Scalar::Int(_) => None,
        }
    }

    fn same_domain(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(ScalarError::DomainMismatch(self.domain(), other.domain()))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.mul(b)),
            _ => unreachable!(),
        })
    }

    /// Whether `self` divides `other` in the domain (0 divides only 0).
    pub fn divides(&self, other: &Scalar) -> Result<bool, ScalarError> {
        self.same_domain(other)?;
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => (b % a).is_zero(),
            (Scalar::Poly(a), Scalar::Poly(b)) => b.rem(a).is_zero(),
            _ => unreachable!(),
        })
    }

    /// Small nonnegative integer value, if this is one.
    pub fn to_u64(&self) -> Option<u64> {
        self.as_int().and_then(|n| n.to_u64())
    }

    /// Size of the residue ring A/(self) when it fits in `usize`.
    pub fn residue_count(&self) -> Option<usize> {
        match self {
            Scalar::Int(n) => n.abs().to_usize(),
            Scalar::Poly(f) => {
                let d = f.degree()? as u32;
                (f.characteristic() as usize).checked_pow(d)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Canonical gcd: a nonnegative integer or a monic polynomial.
pub fn scalar_gcd(a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
    a.same_domain(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(ScalarError::BothZero);
    }
    Ok(match (a, b) {
        (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x.gcd(y)),
        (Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(x.gcd(y)),
        _ => unreachable!(),
    })
}

/// Canonical lcm of two nonzero scalars.
pub fn scalar_lcm(a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
    a.same_domain(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(ScalarError::Zero);
    }
    Ok(match (a, b) {
        (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x.lcm(y)),
        (Scalar::Poly(x), Scalar::Poly(y)) => {
            let g = x.gcd(y);
            Scalar::Poly(x.mul(y).div_rem(&g).0.monic())
        }
        _ => unreachable!(),
    })
}

/// Whether a nonzero nonunit has no proper nonunit divisor.
pub fn is_irreducible(a: &Scalar) -> Result<bool, ScalarError> {
    if a.is_zero() {
        return Err(ScalarError::Zero);
    }
    if a.is_unit() {
        return Err(ScalarError::Unit(a.to_string()));
    }
    match a {
        Scalar::Int(n) => is_prime_big(&n.abs()),
        Scalar::Poly(f) => Ok(f.ben_or_irreducible()),
    }
}

/// Canonical representative of `a + (m)`: an integer in `[0, |m|)` or the
/// remainder of degree below `deg m`.
pub fn reduce_mod(a: &Scalar, m: &Scalar) -> Result<Scalar, ScalarError> {
    a.same_domain(m)?;
    if m.is_zero() {
        return Err(ScalarError::Zero);
    }
    if m.is_unit() {
        return Err(ScalarError::Unit(m.to_string()));
    }
    Ok(match (a, m) {
        (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x.mod_floor(&y.abs())),
        (Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(x.rem(y)),
        _ => unreachable!(),
    })
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    is_prime_big(&BigInt::from(n)).unwrap_or(false)
}

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with the first 13 prime bases, deterministic below 3.3e24.
fn is_prime_big(n: &BigInt) -> Result<bool, ScalarError> {
    if n.sign() != Sign::Plus || n.is_one() {
        return Ok(false);
    }
    if n.bits() > 81 {
        return Err(ScalarError::TooLarge(n.to_string()));
    }
    for &w in &WITNESSES {
        let w = BigInt::from(w);
        if *n == w {
            return Ok(true);
        }
        if (n % &w).is_zero() {
            return Ok(false);
        }
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}
