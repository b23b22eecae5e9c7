use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::module::ModuleSpec;
use crate::ring::{RingSpec, MAX_RING_ORDER};
use crate::scalar::{Poly, Scalar, ScalarDomain};
use crate::text::{Cursor, ParseError};

/// Largest corpus the generator will produce.
pub const MAX_INSTANCES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("invalid bound: {0}")]
    InvalidBound(String),
    #[error("corpus exceeds {MAX_INSTANCES} instances")]
    TooLarge,
}

/// Bounds for the generated corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub int_min_modulus: u64,
    pub int_max_modulus: u64,
    /// Summands per generated module; pairwise sums of those may have twice as many.
    pub max_summands: usize,
    pub poly_characteristic: u64,
    pub poly_max_degree: usize,
    pub ring_max_order: usize,
    pub max_elements: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            int_min_modulus: 2,
            int_max_modulus: 9,
            max_summands: 2,
            poly_characteristic: 2,
            poly_max_degree: 3,
            ring_max_order: 64,
            max_elements: 81,
        }
    }
}

/// One corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Module(ModuleSpec),
    /// A ring examined as a quasi second ring candidate.
    Ring(RingSpec),
}

impl Instance {
    /// A module spec, or a bare ring expression for a ring instance.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(text);
        c.peek();
        let start = c.pos();
        let head = c.ident();
        let mut c = Cursor::with_offset(text, start);
        let inst = match head {
            Some("Z" | "ring") => Instance::Module(ModuleSpec::parse_at(&mut c)?),
            Some(h) if h.starts_with('F') && h.len() > 1 && h[1..].bytes().all(|b| b.is_ascii_digit()) => {
                Instance::Module(ModuleSpec::parse_at(&mut c)?)
            }
            _ => Instance::Ring(RingSpec::parse_at(&mut c)?),
        };
        c.expect_end()?;
        Ok(inst)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Module(m) => m.fmt(f),
            Instance::Ring(r) => r.fmt(f),
        }
    }
}

/// Nondecreasing sequences of `1..=max_len` items (by index) whose sizes
/// multiply to at most `cap`.
fn multisets(sizes: &[usize], max_len: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(sizes: &[usize], start: usize, max_len: usize, cap: usize, cur: &mut Vec<usize>, prod: usize, out: &mut Vec<Vec<usize>>) {
        for i in start..sizes.len() {
            let p = prod.saturating_mul(sizes[i]);
            if p > cap {
                continue;
            }
            cur.push(i);
            out.push(cur.clone());
            if cur.len() < max_len {
                go(sizes, i, max_len, cap, cur, p, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(sizes, 0, max_len, cap, &mut Vec::new(), 1, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Monic polynomials over F_p of exact degree `d`, in counting order.
pub fn monic_polys(p: u64, d: usize) -> Vec<Poly> {
    let count = (p as usize).pow(d as u32);
    (0..count)
        .map(|mut k| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((k % p as usize) as u64);
                k /= p as usize;
            }
            coeffs.push(1);
            Poly::new(p, coeffs)
        })
        .collect()
}

fn first_irreducible(p: u64, d: usize) -> Poly {
    monic_polys(p, d)
        .into_iter()
        .find(|f| f.ben_or_irreducible())
        .expect("irreducibles exist in every degree")
}

fn primes_upto(n: usize) -> Vec<u64> {
    (2..=n as u64).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

fn order(r: &RingSpec) -> usize {
    r.order().map_or(usize::MAX, |o| o.min(usize::MAX as u128) as usize)
}

/// The catalog rings up to `cap` elements, deduplicated by canonical text.
pub fn ring_catalog(cap: usize) -> Vec<RingSpec> {
    let cap = cap.min(MAX_RING_ORDER);
    let mut rings: Vec<RingSpec> = Vec::new();
    rings.extend((2..=cap as u64).map(RingSpec::Zn));
    let primes = primes_upto(cap);
    let mut fields: Vec<RingSpec> = primes.iter().map(|&p| RingSpec::gf(p)).collect();
    for &p in &primes {
        let mut d = 2;
        while (p as usize).checked_pow(d as u32).is_some_and(|q| q <= cap) {
            fields.push(RingSpec::QuotPoly(first_irreducible(p, d)));
            d += 1;
        }
    }
    fields.sort_by_key(|f| (order(f), f.to_string()));
    rings.extend(fields.iter().cloned());
    for p in [2u64, 3] {
        for d in 2..=3 {
            if (p as usize).pow(d as u32) <= cap {
                rings.extend(monic_polys(p, d).into_iter().map(RingSpec::QuotPoly));
            }
        }
    }
    for &p in &primes {
        let mut k = 1;
        while (p as usize).checked_pow(k as u32 + 1).is_some_and(|q| q <= cap) {
            rings.push(RingSpec::Trunc { p, vars: k });
            k += 1;
        }
    }
    for f in &fields {
        let mut d = 1;
        while order(f).checked_pow(d as u32 + 1).is_some_and(|q| q <= cap) {
            rings.push(RingSpec::idealize(f.clone(), d));
            d += 1;
        }
    }
    let small_local = [
        RingSpec::Zn(4),
        RingSpec::Zn(8),
        RingSpec::Zn(9),
        RingSpec::Trunc { p: 2, vars: 1 },
        RingSpec::Trunc { p: 2, vars: 2 },
    ];
    let non_fields = [
        RingSpec::Zn(4),
        RingSpec::Zn(6),
        RingSpec::Zn(8),
        RingSpec::Trunc { p: 2, vars: 1 },
        RingSpec::prod(RingSpec::gf(2), RingSpec::gf(2)),
        RingSpec::QuotPoly(Poly::new(2, [0, 1, 1])),
    ];
    for r in &non_fields {
        if order(r).pow(2) <= cap {
            rings.push(RingSpec::idealize(r.clone(), 1));
        }
    }
    for (i, a) in fields.iter().enumerate() {
        for b in &fields[i..] {
            if order(a) * order(b) <= cap {
                rings.push(RingSpec::prod(a.clone(), b.clone()));
            }
        }
    }
    for r in &small_local {
        for f in &fields {
            if order(r) * order(f) <= cap {
                rings.push(RingSpec::prod(r.clone(), f.clone()));
            }
        }
    }
    let extra = [
        RingSpec::prod(RingSpec::Zn(4), RingSpec::Zn(4)),
        RingSpec::prod(RingSpec::gf(2), RingSpec::prod(RingSpec::gf(2), RingSpec::gf(2))),
        RingSpec::prod(RingSpec::gf(2), RingSpec::prod(RingSpec::gf(2), RingSpec::gf(3))),
        RingSpec::prod(RingSpec::gf(2), RingSpec::prod(RingSpec::gf(3), RingSpec::gf(5))),
    ];
    rings.extend(extra.into_iter().filter(|r| order(r) <= cap));
    let mut seen = BTreeSet::new();
    rings.retain(|r| order(r) <= cap && seen.insert(r.to_string()));
    rings
}

/// The deterministic instance list for `spec`.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>, CorpusError> {
    if spec.int_min_modulus < 2 && spec.int_max_modulus >= spec.int_min_modulus {
        return Err(CorpusError::InvalidBound("integer moduli start at 2".into()));
    }
    if spec.max_elements == 0 {
        return Err(CorpusError::InvalidBound("element cap must be positive".into()));
    }
    if spec.poly_max_degree > 0 && ScalarDomain::poly_over(spec.poly_characteristic).is_err() {
        return Err(CorpusError::InvalidBound(format!(
            "{} is not a prime characteristic",
            spec.poly_characteristic
        )));
    }
    let cap = spec.max_elements.min(crate::module::MAX_MODULE_ORDER);
    let mut out = Vec::new();
    let max_len = spec.max_summands * 2;

    let ints: Vec<u64> = (spec.int_min_modulus..=spec.int_max_modulus).collect();
    let sizes: Vec<usize> = ints.iter().map(|&n| n as usize).collect();
    for set in multisets(&sizes, max_len, cap) {
        out.push(Instance::Module(ModuleSpec::DirectSumCyclic {
            domain: ScalarDomain::Integers,
            moduli: set.iter().map(|&i| Scalar::from(ints[i] as i64)).collect(),
        }));
    }

    if spec.poly_max_degree > 0 {
        let p = spec.poly_characteristic;
        let polys: Vec<Poly> = (1..=spec.poly_max_degree)
            .flat_map(|d| monic_polys(p, d))
            .filter(|f| f.degree().is_some_and(|d| (p as usize).checked_pow(d as u32).is_some_and(|q| q <= cap)))
            .collect();
        let sizes: Vec<usize> = polys.iter().map(|f| (p as usize).pow(f.degree().unwrap() as u32)).collect();
        for set in multisets(&sizes, max_len, cap) {
            out.push(Instance::Module(ModuleSpec::DirectSumCyclic {
                domain: ScalarDomain::PolyOverPrimeField { p },
                moduli: set.iter().map(|&i| Scalar::Poly(polys[i].clone())).collect(),
            }));
        }
    }

    for ring in ring_catalog(spec.ring_max_order) {
        out.push(Instance::Ring(ring.clone()));
        if order(&ring) <= cap {
            out.push(Instance::Module(ModuleSpec::CyclicOverRing { ring }));
        }
    }
    if out.len() > MAX_INSTANCES {
        return Err(CorpusError::TooLarge);
    }
    Ok(out)
}
