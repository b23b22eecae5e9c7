//! Finite commutative unital rings built from a small constructor catalog.
//!
//! Elements are canonical coordinate vectors: one residue for `Zn`, the
//! coefficients from the highest power down to the constant for `QuotPoly`,
//! `[ck, .., c1, c0]` for `Trunc` (coefficient of `xi` then the constant last),
//! the concatenation of both factors for `Prod`, and the base coordinates
//! followed by `d` module blocks for `Idealize`. Elements are also numbered
//! `0..order` in lexicographic order of their coordinates, with index 0 the
//! zero element, so polynomial residues count 0, 1, x, x+1, x^2, ...

mod analysis;
mod parse;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::scalar::{is_prime_u64, Poly, Scalar, ScalarDomain};
use crate::text::ParseError;

pub use analysis::QuasiSecondClass;

/// Largest ring the constructors will build.
pub const MAX_RING_ORDER: usize = 4096;
/// Rings up to this order get cached operation tables.
const TABLE_ORDER: usize = 256;
/// Rings up to this order have their ring laws checked exhaustively on build.
const LAW_CHECK_ORDER: usize = 64;
const MAX_COORDS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("Zn needs n >= 2, got {0}")]
    TooSmall(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus polynomial must be nonconstant")]
    ConstantModulus,
    #[error("GF({0},{1}) needs an irreducible modulus")]
    NotIrreducible(u64, String),
    #[error("{what} must be at least 1")]
    ZeroCount { what: &'static str },
    #[error("ring order exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("element {0} does not belong to {1}")]
    ForeignElement(String, String),
    #[error("ring law violated: {0}")]
    LawViolation(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Construction tree of a catalog ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Zn(u64),
    /// F_p[x]/(f) with f monic of positive degree.
    QuotPoly(Poly),
    /// F_p[x1..xk]/(x1..xk)^2.
    Trunc { p: u64, vars: usize },
    Prod(Box<RingSpec>, Box<RingSpec>),
    /// R(+)R^d with the idealization product.
    Idealize(Box<RingSpec>, usize),
}

impl RingSpec {
    /// The prime field F_p, realized as F_p[x]/(x).
    pub fn gf(p: u64) -> Self {
        RingSpec::QuotPoly(Poly::x(p))
    }

    pub fn prod(a: RingSpec, b: RingSpec) -> Self {
        RingSpec::Prod(Box::new(a), Box::new(b))
    }

    pub fn idealize(base: RingSpec, d: usize) -> Self {
        RingSpec::Idealize(Box::new(base), d)
    }

    pub fn quot_poly(f: Poly) -> Self {
        RingSpec::QuotPoly(f.monic())
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse::parse_ring(text)
    }

    pub(crate) fn parse_at(cursor: &mut crate::text::Cursor<'_>) -> Result<Self, ParseError> {
        parse::parse_ring_at(cursor)
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            RingSpec::Zn(n) => Some(*n as u128),
            RingSpec::QuotPoly(f) => {
                (f.characteristic() as u128).checked_pow(f.degree()? as u32)
            }
            RingSpec::Trunc { p, vars } => (*p as u128).checked_pow(*vars as u32 + 1),
            RingSpec::Prod(a, b) => a.order()?.checked_mul(b.order()?),
            RingSpec::Idealize(r, d) => r.order()?.checked_pow(*d as u32 + 1),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Zn({n})"),
            RingSpec::QuotPoly(m) => {
                let p = m.characteristic();
                if *m == Poly::x(p) {
                    write!(f, "GF({p})")
                } else if m.ben_or_irreducible() {
                    write!(f, "GF({p},{m})")
                } else {
                    write!(f, "QuotPoly({p},{m})")
                }
            }
            RingSpec::Trunc { p, vars } => write!(f, "Trunc({p},{vars})"),
            RingSpec::Prod(a, b) => write!(f, "Prod({a},{b})"),
            RingSpec::Idealize(r, d) => write!(f, "Ideal({r},{d})"),
        }
    }
}

/// A ring element as its canonical coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem(pub Vec<u32>);

impl RingElem {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
}

#[derive(Debug, Clone)]
enum Layout {
    Zn(u32),
    QuotPoly { p: u32, modulus: Vec<u32> },
    Trunc { p: u32, vars: usize },
    Prod { left: Box<Layout>, right: Box<Layout> },
    Idealize { base: Box<Layout>, copies: usize },
}

impl Layout {
    fn width(&self) -> usize {
        match self {
            Layout::Zn(_) => 1,
            Layout::QuotPoly { modulus, .. } => modulus.len() - 1,
            Layout::Trunc { vars, .. } => vars + 1,
            Layout::Prod { left, right } => left.width() + right.width(),
            Layout::Idealize { base, copies } => base.width() * (copies + 1),
        }
    }

    fn radices(&self, out: &mut Vec<u32>) {
        match self {
            Layout::Zn(n) => out.push(*n),
            Layout::QuotPoly { p, modulus } => out.extend(std::iter::repeat_n(*p, modulus.len() - 1)),
            Layout::Trunc { p, vars } => out.extend(std::iter::repeat_n(*p, vars + 1)),
            Layout::Prod { left, right } => {
                left.radices(out);
                right.radices(out);
            }
            Layout::Idealize { base, copies } => {
                for _ in 0..=*copies {
                    base.radices(out);
                }
            }
        }
    }

    fn one(&self, out: &mut [u32]) {
        out.fill(0);
        match self {
            Layout::Zn(_) | Layout::QuotPoly { .. } | Layout::Trunc { .. } => {
                let last = out.len() - 1;
                out[last] = 1
            }
            Layout::Prod { left, right } => {
                let split = left.width();
                left.one(&mut out[..split]);
                right.one(&mut out[split..]);
            }
            Layout::Idealize { base, .. } => {
                let w = base.width();
                base.one(&mut out[..w]);
            }
        }
    }

    fn mul(&self, a: &[u32], b: &[u32], out: &mut [u32]) {
        match self {
            Layout::Zn(n) => out[0] = ((a[0] as u64 * b[0] as u64) % *n as u64) as u32,
            Layout::QuotPoly { p, modulus } => {
                let p = *p as u64;
                let deg = modulus.len() - 1;
                let mut prod = [0u64; 2 * MAX_COORDS];
                for (i, &x) in a.iter().rev().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().rev().enumerate() {
                        prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
                    }
                }
                // Reduce by the monic modulus from the top degree down.
                for k in (deg..(2 * deg).saturating_sub(1)).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (j, &m) in modulus[..deg].iter().enumerate() {
                        let t = k - deg + j;
                        prod[t] = (prod[t] + (p - c) * m as u64 % p) % p;
                    }
                    prod[k] = 0;
                }
                for (o, &c) in out.iter_mut().rev().zip(prod.iter()) {
                    *o = c as u32;
                }
            }
            Layout::Trunc { p, .. } => {
                let p = *p as u64;
                let c = a.len() - 1;
                let (a0, b0) = (a[c] as u64, b[c] as u64);
                out[c] = ((a0 * b0) % p) as u32;
                for i in 0..c {
                    out[i] = ((a0 * b[i] as u64 + a[i] as u64 * b0) % p) as u32;
                }
            }
            Layout::Prod { left, right } => {
                let split = left.width();
                left.mul(&a[..split], &b[..split], &mut out[..split]);
                right.mul(&a[split..], &b[split..], &mut out[split..]);
            }
            Layout::Idealize { base, copies } => {
                let w = base.width();
                let mut radix = Vec::with_capacity(w);
                base.radices(&mut radix);
                let (a0, b0) = (&a[..w], &b[..w]);
                base.mul(a0, b0, &mut out[..w]);
                let mut t1 = [0u32; MAX_COORDS];
                let mut t2 = [0u32; MAX_COORDS];
                for c in 1..=*copies {
                    let block = c * w..(c + 1) * w;
                    base.mul(a0, &b[block.clone()], &mut t1[..w]);
                    base.mul(b0, &a[block.clone()], &mut t2[..w]);
                    for (k, o) in out[block].iter_mut().enumerate() {
                        *o = ((t1[k] as u64 + t2[k] as u64) % radix[k] as u64) as u32;
                    }
                }
            }
        }
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

/// A validated finite commutative ring with identity.
#[derive(Debug)]
pub struct FiniteRing {
    spec: RingSpec,
    layout: Layout,
    radices: Vec<u32>,
    weights: Vec<usize>,
    order: usize,
    one: usize,
    tables: Option<Tables>,
    units: OnceLock<Vec<bool>>,
}

fn build_layout(spec: &RingSpec) -> Result<Layout, RingError> {
    Ok(match spec {
        RingSpec::Zn(n) => {
            if *n < 2 {
                return Err(RingError::TooSmall(*n));
            }
            if *n as usize > MAX_RING_ORDER {
                return Err(RingError::CapExceeded { cap: MAX_RING_ORDER });
            }
            Layout::Zn(*n as u32)
        }
        RingSpec::QuotPoly(f) => {
            let p = f.characteristic();
            if !is_prime_u64(p) {
                return Err(RingError::NotPrime(p));
            }
            if f.degree().unwrap_or(0) == 0 {
                return Err(RingError::ConstantModulus);
            }
            let f = f.monic();
            Layout::QuotPoly {
                p: p as u32,
                modulus: f.coeffs().iter().map(|&c| c as u32).collect(),
            }
        }
        RingSpec::Trunc { p, vars } => {
            if !is_prime_u64(*p) {
                return Err(RingError::NotPrime(*p));
            }
            if *vars == 0 {
                return Err(RingError::ZeroCount { what: "variable count" });
            }
            Layout::Trunc { p: *p as u32, vars: *vars }
        }
        RingSpec::Prod(a, b) => Layout::Prod {
            left: Box::new(build_layout(a)?),
            right: Box::new(build_layout(b)?),
        },
        RingSpec::Idealize(r, d) => {
            if *d == 0 {
                return Err(RingError::ZeroCount { what: "idealization rank" });
            }
            Layout::Idealize {
                base: Box::new(build_layout(r)?),
                copies: *d,
            }
        }
    })
}

impl FiniteRing {
    pub fn build(spec: &RingSpec) -> Result<Self, RingError> {
        match spec.order() {
            Some(o) if o <= MAX_RING_ORDER as u128 => {}
            _ => return Err(RingError::CapExceeded { cap: MAX_RING_ORDER }),
        }
        let layout = build_layout(spec)?;
        let mut radices = Vec::new();
        layout.radices(&mut radices);
        debug_assert_eq!(radices.len(), layout.width());
        let mut weights = vec![1usize; radices.len()];
        for i in (0..radices.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * radices[i + 1] as usize;
        }
        let order = weights[0] * radices[0] as usize;
        let mut ring = FiniteRing {
            spec: spec.clone(),
            layout,
            radices,
            weights,
            order,
            one: 0,
            tables: None,
            units: OnceLock::new(),
        };
        let mut one = [0u32; MAX_COORDS];
        ring.layout.one(&mut one[..ring.width()]);
        ring.one = ring.encode(&one[..ring.width()]);
        if order <= TABLE_ORDER {
            ring.tables = Some(ring.compute_tables());
        }
        if order <= LAW_CHECK_ORDER {
            ring.check_laws()?;
        }
        Ok(ring)
    }

    pub fn parse(text: &str) -> Result<Self, RingError> {
        Self::build(&RingSpec::parse(text)?)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn width(&self) -> usize {
        self.radices.len()
    }

    pub fn zero_idx(&self) -> usize {
        0
    }

    pub fn one_idx(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn decode_into(&self, idx: usize, out: &mut [u32]) {
        for (k, o) in out.iter_mut().enumerate() {
            *o = ((idx / self.weights[k]) % self.radices[k] as usize) as u32;
        }
    }

    fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.weights)
            .map(|(&c, &w)| c as usize * w)
            .sum()
    }

    pub fn elem(&self, idx: usize) -> RingElem {
        let mut out = vec![0u32; self.width()];
        self.decode_into(idx, &mut out);
        RingElem(out)
    }

    pub fn index_of(&self, e: &RingElem) -> Result<usize, RingError> {
        if e.0.len() != self.width() || e.0.iter().zip(&self.radices).any(|(c, r)| c >= r) {
            return Err(RingError::ForeignElement(
                format!("{:?}", e.0),
                self.spec.to_string(),
            ));
        }
        Ok(self.encode(&e.0))
    }

    fn compute_tables(&self) -> Tables {
        let n = self.order;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        for a in 0..n {
            neg[a] = self.neg_slow(a) as u16;
            for b in a..n {
                let s = self.add_slow(a, b) as u16;
                let m = self.mul_slow(a, b) as u16;
                add[a * n + b] = s;
                add[b * n + a] = s;
                mul[a * n + b] = m;
                mul[b * n + a] = m;
            }
        }
        Tables { add, mul, neg }
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let w = self.width();
        let (mut x, mut y) = ([0u32; MAX_COORDS], [0u32; MAX_COORDS]);
        self.decode_into(a, &mut x[..w]);
        self.decode_into(b, &mut y[..w]);
        for k in 0..w {
            x[k] = ((x[k] as u64 + y[k] as u64) % self.radices[k] as u64) as u32;
        }
        self.encode(&x[..w])
    }

    fn neg_slow(&self, a: usize) -> usize {
        let w = self.width();
        let mut x = [0u32; MAX_COORDS];
        self.decode_into(a, &mut x[..w]);
        for k in 0..w {
            x[k] = (self.radices[k] - x[k]) % self.radices[k];
        }
        self.encode(&x[..w])
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let w = self.width();
        let (mut x, mut y, mut z) = ([0u32; MAX_COORDS], [0u32; MAX_COORDS], [0u32; MAX_COORDS]);
        self.decode_into(a, &mut x[..w]);
        self.decode_into(b, &mut y[..w]);
        self.layout.mul(&x[..w], &y[..w], &mut z[..w]);
        self.encode(&z[..w])
    }

    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.add[a * self.order + b] as usize,
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.mul[a * self.order + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn neg_idx(&self, a: usize) -> usize {
        match &self.tables {
            Some(t) => t.neg[a] as usize,
            None => self.neg_slow(a),
        }
    }

    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    /// Element-level arithmetic; `y` is ignored for `Neg`.
    pub fn apply(&self, op: RingOp, x: &RingElem, y: &RingElem) -> Result<RingElem, RingError> {
        let a = self.index_of(x)?;
        let b = self.index_of(y)?;
        Ok(self.elem(match op {
            RingOp::Add => self.add_idx(a, b),
            RingOp::Mul => self.mul_idx(a, b),
            RingOp::Neg => self.neg_idx(a),
        }))
    }

    pub fn add(&self, x: &RingElem, y: &RingElem) -> Result<RingElem, RingError> {
        self.apply(RingOp::Add, x, y)
    }

    pub fn mul(&self, x: &RingElem, y: &RingElem) -> Result<RingElem, RingError> {
        self.apply(RingOp::Mul, x, y)
    }

    pub fn neg(&self, x: &RingElem) -> Result<RingElem, RingError> {
        self.apply(RingOp::Neg, x, x)
    }

    /// Exhaustive check of the commutative ring axioms.
    pub fn check_laws(&self) -> Result<(), RingError> {
        let n = self.order;
        let fail = |what: &str, a: usize, b: usize, c: usize| {
            Err(RingError::LawViolation(format!(
                "{what} at ({}, {}, {}) in {}",
                self.format_elem(a),
                self.format_elem(b),
                self.format_elem(c),
                self.spec
            )))
        };
        for a in 0..n {
            if self.mul_idx(a, self.one) != a {
                return fail("multiplicative identity", a, self.one, 0);
            }
            if self.add_idx(a, self.neg_idx(a)) != 0 {
                return fail("additive inverse", a, 0, 0);
            }
            for b in 0..n {
                if self.mul_idx(a, b) != self.mul_idx(b, a) {
                    return fail("commutativity", a, b, 0);
                }
                for c in 0..n {
                    self.check_triple(a, b, c).or_else(|what| fail(what, a, b, c))?;
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_triple(&self, a: usize, b: usize, c: usize) -> Result<(), &'static str> {
        let ab = self.mul_idx(a, b);
        if self.mul_idx(ab, c) != self.mul_idx(a, self.mul_idx(b, c)) {
            return Err("multiplicative associativity");
        }
        if self.add_idx(self.add_idx(a, b), c) != self.add_idx(a, self.add_idx(b, c)) {
            return Err("additive associativity");
        }
        if self.mul_idx(a, self.add_idx(b, c)) != self.add_idx(ab, self.mul_idx(a, c)) {
            return Err("distributivity");
        }
        Ok(())
    }

    /// The domain this ring is a residue ring of, for `Zn` and `QuotPoly`.
    pub fn scalar_domain(&self) -> Option<ScalarDomain> {
        match &self.layout {
            Layout::Zn(_) => Some(ScalarDomain::Integers),
            Layout::QuotPoly { p, .. } => Some(ScalarDomain::PolyOverPrimeField { p: *p as u64 }),
            _ => None,
        }
    }

    /// `n` for `Zn(n)`, `f` for `QuotPoly(p, f)`.
    pub fn defining_modulus(&self) -> Option<Scalar> {
        match &self.spec {
            RingSpec::Zn(n) => Some(Scalar::Int(BigInt::from(*n))),
            RingSpec::QuotPoly(f) => Some(Scalar::Poly(f.monic())),
            _ => None,
        }
    }

    /// Canonical lift of a residue: an integer in `[0, n)` or a polynomial of
    /// degree below `deg f`.
    pub fn lift(&self, idx: usize) -> Option<Scalar> {
        let e = self.elem(idx);
        match &self.layout {
            Layout::Zn(_) => Some(Scalar::Int(BigInt::from(e.0[0]))),
            Layout::QuotPoly { p, .. } => Some(Scalar::Poly(Poly::new(
                *p as u64,
                e.0.iter().rev().map(|&c| c as u64),
            ))),
            _ => None,
        }
    }

    /// Residue of a scalar of the matching domain.
    pub fn reduce(&self, a: &Scalar) -> Option<usize> {
        match (&self.layout, a) {
            (Layout::Zn(n), Scalar::Int(x)) => x.mod_floor(&BigInt::from(*n)).to_usize(),
            (Layout::QuotPoly { p, modulus }, Scalar::Poly(f)) if f.characteristic() == *p as u64 => {
                let m = Poly::new(*p as u64, modulus.iter().map(|&c| c as u64));
                let r = f.rem(&m);
                let deg = modulus.len() - 1;
                let coords: Vec<u32> = (0..deg).rev().map(|i| r.coeff(i) as u32).collect();
                Some(self.encode(&coords))
            }
            _ => None,
        }
    }

    /// Human-readable element, e.g. `3`, `x^2+1`, `x1+x3`, `(1,(1,0))`.
    pub fn format_elem(&self, idx: usize) -> String {
        let e = self.elem(idx);
        let mut out = String::new();
        format_coords(&self.layout, &e.0, &mut out);
        out
    }
}

fn format_coords(layout: &Layout, c: &[u32], out: &mut String) {
    use std::fmt::Write;
    match layout {
        Layout::Zn(_) => write!(out, "{}", c[0]).unwrap(),
        Layout::QuotPoly { p, .. } => {
            write!(out, "{}", Poly::new(*p as u64, c.iter().rev().map(|&x| x as u64))).unwrap()
        }
        Layout::Trunc { vars, .. } => {
            let mut terms = Vec::new();
            for i in 1..=*vars {
                let name = if *vars == 1 { "x".to_string() } else { format!("x{i}") };
                match c[vars - i] {
                    0 => {}
                    1 => terms.push(name),
                    k => terms.push(format!("{k}*{name}")),
                }
            }
            if c[*vars] != 0 {
                terms.push(c[*vars].to_string());
            }
            if terms.is_empty() {
                out.push('0');
            } else {
                out.push_str(&terms.join("+"));
            }
        }
        Layout::Prod { left, right } => {
            let split = left.width();
            out.push('(');
            format_coords(left, &c[..split], out);
            out.push(',');
            format_coords(right, &c[split..], out);
            out.push(')');
        }
        Layout::Idealize { base, copies } => {
            let w = base.width();
            out.push('(');
            format_coords(base, &c[..w], out);
            out.push_str(",(");
            for k in 1..=*copies {
                if k > 1 {
                    out.push(',');
                }
                format_coords(base, &c[k * w..(k + 1) * w], out);
            }
            out.push_str("))");
        }
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s).unwrap()
    }

    fn idx(r: &FiniteRing, coords: &[u32]) -> usize {
        r.index_of(&RingElem(coords.to_vec())).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(ring("Zn(8)").order(), 8);
        assert_eq!(ring("Trunc(2,3)").order(), 16);
        assert_eq!(ring("Prod(GF(2),Zn(3))").order(), 6);
        assert_eq!(ring("Ideal(Zn(4),1)").order(), 16);
        assert_eq!(ring("GF(2,x^2+x+1)").order(), 4);
    }

    #[test]
    fn arithmetic_examples() {
        let z8 = ring("Zn(8)");
        assert_eq!(z8.mul_idx(6, 6), 4);
        let t = ring("Trunc(2,2)");
        let (x1, x2) = (idx(&t, &[0, 1, 0]), idx(&t, &[1, 0, 0]));
        assert_eq!(t.mul_idx(x1, x2), 0);
        let id = ring("Ideal(GF(2),2)");
        let a = RingElem(vec![1, 1, 0]);
        let b = RingElem(vec![1, 0, 1]);
        assert_eq!(id.mul(&a, &b).unwrap(), RingElem(vec![1, 1, 1]));
        assert_eq!(id.format_elem(id.index_of(&a).unwrap()), "(1,(1,0))");
    }

    #[test]
    fn quot_poly_reduces_by_modulus() {
        let f4 = ring("GF(2,x^2+x+1)");
        let x = idx(&f4, &[1, 0]);
        assert_eq!(x, 2);
        // x * x = x + 1
        assert_eq!(f4.mul_idx(x, x), idx(&f4, &[1, 1]));
        let r = ring("QuotPoly(3,x^3+2*x+1)");
        let x2 = idx(&r, &[1, 0, 0]);
        // x^4 = x * x^3 = x(-2x - 1) = x^2 + 2x
        assert_eq!(r.mul_idx(x2, x2), idx(&r, &[1, 2, 0]));
        assert_eq!(r.format_elem(r.mul_idx(x2, x2)), "x^2+2*x");
    }

    #[test]
    fn build_errors() {
        assert_eq!(FiniteRing::build(&RingSpec::Zn(1)).unwrap_err(), RingError::TooSmall(1));
        assert_eq!(
            FiniteRing::build(&RingSpec::Trunc { p: 4, vars: 1 }).unwrap_err(),
            RingError::NotPrime(4)
        );
        assert_eq!(
            FiniteRing::build(&RingSpec::QuotPoly(Poly::one(2))).unwrap_err(),
            RingError::ConstantModulus
        );
        assert!(matches!(
            FiniteRing::build(&RingSpec::Zn(5000)),
            Err(RingError::CapExceeded { .. })
        ));
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let z8 = ring("Zn(8)");
        assert!(matches!(
            z8.add(&RingElem(vec![9]), &RingElem(vec![1])),
            Err(RingError::ForeignElement(..))
        ));
        assert!(z8.add(&RingElem(vec![1, 0]), &RingElem(vec![1])).is_err());
    }

    #[test]
    fn large_rings_use_coordinate_arithmetic() {
        let r = ring("Trunc(2,9)");
        assert_eq!(r.order(), 1024);
        let x1 = idx(&r, &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
        let u = idx(&r, &[1, 0, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(r.format_elem(u), "x1+x9+1");
        assert_eq!(r.mul_idx(x1, x1), 0);
        assert_eq!(r.mul_idx(x1, u), x1);
        assert_eq!(r.add_idx(x1, x1), 0);
    }
}
