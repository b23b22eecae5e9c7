//! Finite modules over Z, F_p[x], or a catalog ring acting on itself.
//!
//! Every module is a subquotient `N/K` of an ambient direct sum of cyclic
//! components. The acting scalars are the finite ring `S = A/ann(ambient)`,
//! so every `a` in `A` acts through its residue in `S`. Elements are numbered
//! by their smallest ambient representative.

mod derived;
mod predicates;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::ring::{FiniteRing, RingError, RingSpec};
use crate::scalar::{scalar_lcm, Scalar, ScalarDomain, ScalarError};
use crate::text::{Cursor, ParseError};

pub use predicates::{AnnihilatorInfo, StructuralPredicates, WeakIdempotentSplit};

/// Largest module the constructors will build.
pub const MAX_MODULE_ORDER: usize = 4096;
/// Largest module whose full submodule lattice may be enumerated.
pub const MAX_LATTICE_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modulus {0} is a unit")]
    UnitModulus(String),
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("a module needs at least one modulus")]
    NoModuli,
    #[error("modulus {modulus} is not in {domain}")]
    DomainMismatch { modulus: String, domain: ScalarDomain },
    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A module presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleSpec {
    /// `A/(d1) ⊕ .. ⊕ A/(dk)` over `Z` or `F_p[x]`.
    DirectSumCyclic {
        domain: ScalarDomain,
        moduli: Vec<Scalar>,
    },
    /// A catalog ring acting on itself.
    CyclicOverRing { ring: RingSpec },
}

impl ModuleSpec {
    pub fn integers(moduli: &[i64]) -> Self {
        ModuleSpec::DirectSumCyclic {
            domain: ScalarDomain::Integers,
            moduli: moduli.iter().map(|&m| Scalar::from(m).normalized()).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(text);
        let spec = Self::parse_at(&mut c)?;
        c.expect_end()?;
        Ok(spec)
    }

    pub(crate) fn parse_at(c: &mut Cursor<'_>) -> Result<Self, ParseError> {
        c.peek();
        let start = c.pos();
        let head = c.ident().ok_or_else(|| c.error("expected `Z`, `F<p>[x]` or `ring`"))?;
        let domain = match head {
            "ring" => {
                c.expect(':')?;
                return Ok(ModuleSpec::CyclicOverRing { ring: RingSpec::parse_at(c)? });
            }
            "Z" => ScalarDomain::Integers,
            _ if head.starts_with('F') && head.len() > 1 => {
                let p: u64 = head[1..]
                    .parse()
                    .map_err(|_| ParseError::new(start, format!("unknown domain `{head}`")))?;
                let domain = ScalarDomain::poly_over(p)
                    .map_err(|e| ParseError::new(start, e.to_string()))?;
                c.expect('[')?;
                if c.ident() != Some("x") {
                    return Err(c.error("expected the variable `x`"));
                }
                c.expect(']')?;
                domain
            }
            _ => return Err(ParseError::new(start, format!("unknown domain `{head}`"))),
        };
        c.expect(':')?;
        let mut moduli = Vec::new();
        loop {
            c.peek();
            let at = c.pos();
            let m = domain.parse_scalar_at(c)?;
            if m.is_zero() {
                return Err(ParseError::new(at, "modulus must be nonzero"));
            }
            if m.is_unit() {
                return Err(ParseError::new(at, format!("modulus {m} is a unit")));
            }
            moduli.push(m.normalized());
            if !c.eat(',') {
                break;
            }
        }
        Ok(ModuleSpec::DirectSumCyclic { domain, moduli })
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            ModuleSpec::DirectSumCyclic { moduli, .. } => moduli.iter().try_fold(1u128, |acc, m| {
                acc.checked_mul(m.residue_count()? as u128)
            }),
            ModuleSpec::CyclicOverRing { ring } => ring.order(),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::DirectSumCyclic { domain, moduli } => {
                write!(f, "{domain}:")?;
                for (i, m) in moduli.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
            ModuleSpec::CyclicOverRing { ring } => write!(f, "ring:{ring}"),
        }
    }
}

/// A submodule as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    elems: Vec<usize>,
}

impl Submodule {
    pub(crate) fn from_sorted(elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Submodule { elems }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Submodule {
            elems: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Whether this is the zero submodule.
    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Inclusion by merging the sorted lists.
    pub fn is_subset(&self, other: &Submodule) -> bool {
        if self.elems.len() > other.elems.len() {
            return false;
        }
        let mut it = other.elems.iter();
        'outer: for x in &self.elems {
            for y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elems {
            m[x] = true;
        }
        m
    }
}

/// One equivalence class of `W(E)^#` under `a ~ b  iff  aE = bE`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarClass {
    /// Smallest residue in the class (index into the scalar ring).
    pub rep: usize,
    /// All residues in the class, ascending.
    pub members: Vec<usize>,
    /// The common image `aE`.
    pub image: Submodule,
}

#[derive(Debug)]
pub(crate) struct Component {
    pub(crate) ring: Arc<FiniteRing>,
    /// Residue of each scalar in this component.
    proj: Vec<u32>,
}

#[derive(Debug)]
struct Ambient {
    comps: Vec<Component>,
    weights: Vec<usize>,
    size: usize,
}

impl Ambient {
    fn decode(&self, x: usize, out: &mut [usize]) {
        for (k, c) in self.comps.iter().enumerate() {
            out[k] = (x / self.weights[k]) % c.ring.order();
        }
    }

    fn encode(&self, xs: &[usize]) -> usize {
        xs.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (mut a, mut b) = ([0usize; 16], [0usize; 16]);
        let n = self.comps.len();
        self.decode(x, &mut a[..n]);
        self.decode(y, &mut b[..n]);
        for (k, c) in self.comps.iter().enumerate() {
            a[k] = c.ring.add_idx(a[k], b[k]);
        }
        self.encode(&a[..n])
    }

    fn neg(&self, x: usize) -> usize {
        let mut a = [0usize; 16];
        let n = self.comps.len();
        self.decode(x, &mut a[..n]);
        for (k, c) in self.comps.iter().enumerate() {
            a[k] = c.ring.neg_idx(a[k]);
        }
        self.encode(&a[..n])
    }

    fn act(&self, s: usize, x: usize) -> usize {
        let mut a = [0usize; 16];
        let n = self.comps.len();
        self.decode(x, &mut a[..n]);
        for (k, c) in self.comps.iter().enumerate() {
            a[k] = c.ring.mul_idx(c.proj[s] as usize, a[k]);
        }
        self.encode(&a[..n])
    }
}

#[derive(Debug)]
struct ImageTable {
    of_scalar: Vec<u32>,
    images: Vec<Submodule>,
}

/// A validated finite module.
#[derive(Debug)]
pub struct FiniteModule {
    label: String,
    spec: Option<ModuleSpec>,
    acting: String,
    scalars: Arc<FiniteRing>,
    ambient: Arc<Ambient>,
    /// Ambient index of each element, ascending.
    reps: Vec<usize>,
    /// Ambient index to element index; `None` when `E` is the whole ambient.
    canon: Option<Vec<u32>>,
    images: OnceLock<ImageTable>,
    lattice: OnceLock<Result<Vec<Submodule>, ModuleError>>,
}

const NOT_IN_MODULE: u32 = u32::MAX;

impl FiniteModule {
    pub fn build(spec: &ModuleSpec) -> Result<Self, ModuleError> {
        match spec.order() {
            Some(n) if n <= MAX_MODULE_ORDER as u128 => {}
            _ => {
                return Err(ModuleError::CapExceeded {
                    what: "module order",
                    cap: MAX_MODULE_ORDER,
                })
            }
        }
        let (acting, scalars, comps) = match spec {
            ModuleSpec::DirectSumCyclic { domain, moduli } => {
                if moduli.is_empty() {
                    return Err(ModuleError::NoModuli);
                }
                let mut lcm = domain.one();
                for m in moduli {
                    if m.domain() != *domain {
                        return Err(ModuleError::DomainMismatch {
                            modulus: m.to_string(),
                            domain: *domain,
                        });
                    }
                    if m.is_zero() {
                        return Err(ModuleError::ZeroModulus);
                    }
                    if m.is_unit() {
                        return Err(ModuleError::UnitModulus(m.to_string()));
                    }
                    lcm = scalar_lcm(&lcm, m)?;
                }
                let scalars = Arc::new(FiniteRing::build(&residue_ring(&lcm)?)?);
                let mut comps = Vec::with_capacity(moduli.len());
                for m in moduli {
                    let ring = Arc::new(FiniteRing::build(&residue_ring(&m.normalized())?)?);
                    let proj = scalars
                        .elements()
                        .map(|s| {
                            let lifted = scalars.lift(s).expect("residue ring lifts");
                            ring.reduce(&lifted).expect("matching domain") as u32
                        })
                        .collect();
                    comps.push(Component { ring, proj });
                }
                (domain.to_string(), scalars, comps)
            }
            ModuleSpec::CyclicOverRing { ring } => {
                let r = Arc::new(FiniteRing::build(ring)?);
                let proj = r.elements().map(|s| s as u32).collect();
                let acting = r.acting_domain_tag();
                (acting, r.clone(), vec![Component { ring: r, proj }])
            }
        };
        Ok(Self::from_ambient(spec.to_string(), Some(spec.clone()), acting, scalars, comps))
    }

    pub fn parse(text: &str) -> Result<Self, ModuleError> {
        Self::build(&ModuleSpec::parse(text)?)
    }

    fn from_ambient(
        label: String,
        spec: Option<ModuleSpec>,
        acting: String,
        scalars: Arc<FiniteRing>,
        comps: Vec<Component>,
    ) -> Self {
        let mut weights = vec![1usize; comps.len()];
        for k in (0..comps.len().saturating_sub(1)).rev() {
            weights[k] = weights[k + 1] * comps[k + 1].ring.order();
        }
        let size = weights[0] * comps[0].ring.order();
        FiniteModule {
            label,
            spec,
            acting,
            scalars,
            ambient: Arc::new(Ambient { comps, weights, size }),
            reps: (0..size).collect(),
            canon: None,
            images: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    /// The subquotient `top/kernel` of this module's ambient, given as
    /// ambient-level membership masks with `kernel ⊆ top`.
    fn subquotient(&self, label: String, top: &[bool], kernel: &[usize]) -> Self {
        let mut canon = vec![NOT_IN_MODULE; self.ambient.size];
        let mut reps = Vec::new();
        for x in 0..self.ambient.size {
            if !top[x] || canon[x] != NOT_IN_MODULE {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &k in kernel {
                canon[self.ambient.add(x, k)] = id;
            }
        }
        FiniteModule {
            label,
            spec: None,
            acting: self.acting.clone(),
            scalars: self.scalars.clone(),
            ambient: self.ambient.clone(),
            reps,
            canon: Some(canon),
            images: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The presentation this module was built from; `None` for derived modules.
    pub fn spec(&self) -> Option<&ModuleSpec> {
        self.spec.as_ref()
    }

    /// The acting domain, e.g. `Z`, `F2[x]` or `F2[x1,x2,x3]`.
    pub fn acting_domain(&self) -> &str {
        &self.acting
    }

    /// The finite ring `A/ann` through which scalars act.
    pub fn scalars(&self) -> &FiniteRing {
        &self.scalars
    }

    /// The ring a `ring:` module was built from.
    pub fn base_ring(&self) -> Option<&FiniteRing> {
        match self.spec {
            Some(ModuleSpec::CyclicOverRing { .. }) => Some(&self.scalars),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    fn canon(&self, ambient: usize) -> usize {
        match &self.canon {
            None => ambient,
            Some(c) => c[ambient] as usize,
        }
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.canon(self.ambient.add(self.reps[x], self.reps[y]))
    }

    pub fn neg(&self, x: usize) -> usize {
        self.canon(self.ambient.neg(self.reps[x]))
    }

    /// Action of the scalar residue `s`.
    pub fn act(&self, s: usize, x: usize) -> usize {
        self.canon(self.ambient.act(s, self.reps[x]))
    }

    /// Action of an arbitrary domain element, reduced separately into each
    /// cyclic component.
    pub fn act_scalar(&self, a: &Scalar, x: usize) -> Result<usize, ModuleError> {
        let amb = &self.ambient;
        let n = amb.comps.len();
        let mut coords = [0usize; 16];
        amb.decode(self.reps[x], &mut coords[..n]);
        for (k, c) in amb.comps.iter().enumerate() {
            let r = c.ring.reduce(a).ok_or_else(|| {
                ModuleError::Unsupported(format!("{a} does not act on {}", self.label))
            })?;
            coords[k] = c.ring.mul_idx(r, coords[k]);
        }
        Ok(self.canon(amb.encode(&coords[..n])))
    }

    /// `aE` for a domain element `a`, computed without the scalar ring.
    pub fn image_of_scalar(&self, a: &Scalar) -> Result<Submodule, ModuleError> {
        let mut mask = vec![false; self.size()];
        for m in self.elements() {
            mask[self.act_scalar(a, m)?] = true;
        }
        Ok(Submodule::from_mask(&mask))
    }

    pub fn format_elem(&self, x: usize) -> String {
        let amb = &self.ambient;
        let n = amb.comps.len();
        let mut coords = [0usize; 16];
        amb.decode(self.reps[x], &mut coords[..n]);
        let parts: Vec<String> = amb
            .comps
            .iter()
            .zip(&coords[..n])
            .map(|(c, &i)| c.ring.format_elem(i))
            .collect();
        if n == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }

    pub fn format_scalar(&self, s: usize) -> String {
        self.scalars.format_elem(s)
    }

    pub fn class_label(&self, class: &ScalarClass) -> String {
        format!("[{}]", self.format_scalar(class.rep))
    }

    pub fn format_submodule(&self, n: &Submodule) -> Vec<String> {
        n.elements().iter().map(|&x| self.format_elem(x)).collect()
    }

    fn compute_image(&self, s: usize) -> Submodule {
        let mut mask = vec![false; self.size()];
        for m in self.elements() {
            mask[self.act(s, m)] = true;
        }
        Submodule::from_mask(&mask)
    }

    fn image_table(&self) -> &ImageTable {
        self.images.get_or_init(|| {
            let mut index: HashMap<Submodule, u32> = HashMap::new();
            let mut images = Vec::new();
            let of_scalar = self
                .scalars
                .elements()
                .map(|s| {
                    let img = self.compute_image(s);
                    *index.entry(img).or_insert_with_key(|img| {
                        images.push(img.clone());
                        (images.len() - 1) as u32
                    })
                })
                .collect();
            ImageTable { of_scalar, images }
        })
    }

    /// `sE` for a scalar residue.
    pub fn cyclic_image(&self, s: usize) -> &Submodule {
        let t = self.image_table();
        &t.images[t.of_scalar[s] as usize]
    }

    /// The distinct submodules `sE` over all residues, in order of first occurrence.
    pub fn distinct_images(&self) -> &[Submodule] {
        &self.image_table().images
    }

    /// Whether `0 != sE != E`.
    pub fn in_w_sharp(&self, s: usize) -> bool {
        let img = self.cyclic_image(s);
        !img.is_zero() && img.len() != self.size()
    }

    /// The classes of `W(E)^#`, sorted by representative.
    pub fn scalar_classes(&self) -> Vec<ScalarClass> {
        let t = self.image_table();
        let mut by_image: Vec<Option<ScalarClass>> = vec![None; t.images.len()];
        for s in self.scalars.elements() {
            if !self.in_w_sharp(s) {
                continue;
            }
            let id = t.of_scalar[s] as usize;
            by_image[id]
                .get_or_insert_with(|| ScalarClass {
                    rep: s,
                    members: Vec::new(),
                    image: t.images[id].clone(),
                })
                .members
                .push(s);
        }
        let mut classes: Vec<ScalarClass> = by_image.into_iter().flatten().collect();
        classes.sort_by_key(|c| c.rep);
        classes
    }

    /// Whether a sorted element set is closed under addition and the action.
    pub fn is_submodule(&self, elems: &[usize]) -> bool {
        let n = Submodule::from_sorted(elems.to_vec());
        let mask = n.mask(self.size());
        mask.first() == Some(&true)
            && elems.iter().all(|&x| {
                elems.iter().all(|&y| mask[self.add(x, y)])
                    && self.scalars.elements().all(|s| mask[self.act(s, x)])
            })
    }

    /// Checks closure and wraps the set.
    pub fn submodule(&self, mut elems: Vec<usize>) -> Result<Submodule, ModuleError> {
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&x| x >= self.size()) || !self.is_submodule(&elems) {
            return Err(ModuleError::NotSubmodule(format!("{elems:?} in {}", self.label)));
        }
        Ok(Submodule::from_sorted(elems))
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::from_sorted(vec![0])
    }

    pub fn whole(&self) -> Submodule {
        Submodule::from_sorted(self.elements().collect())
    }

    /// `Sm`, the cyclic submodule generated by `m`.
    pub fn generated_by(&self, m: usize) -> Submodule {
        let mut mask = vec![false; self.size()];
        for s in self.scalars.elements() {
            mask[self.act(s, m)] = true;
        }
        Submodule::from_mask(&mask)
    }

    /// `N + K`.
    pub fn sum(&self, n: &Submodule, k: &Submodule) -> Submodule {
        let mut mask = vec![false; self.size()];
        for &x in n.elements() {
            for &y in k.elements() {
                mask[self.add(x, y)] = true;
            }
        }
        Submodule::from_mask(&mask)
    }

    /// Number of cyclic components in the ambient presentation.
    pub fn component_count(&self) -> usize {
        self.ambient.comps.len()
    }

    /// Elements supported on the listed components; only for modules that
    /// are their whole ambient.
    pub fn component_submodule(&self, comps: &[usize]) -> Option<Submodule> {
        if self.canon.is_some() {
            return None;
        }
        let amb = &self.ambient;
        let n = amb.comps.len();
        let mut coords = [0usize; 16];
        let elems = self
            .elements()
            .filter(|&x| {
                amb.decode(x, &mut coords[..n]);
                (0..n).all(|k| comps.contains(&k) || coords[k] == 0)
            })
            .collect();
        Some(Submodule::from_sorted(elems))
    }

    /// `sN`.
    pub fn scale(&self, s: usize, n: &Submodule) -> Submodule {
        let mut mask = vec![false; self.size()];
        for &x in n.elements() {
            mask[self.act(s, x)] = true;
        }
        Submodule::from_mask(&mask)
    }
}

impl fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// `A/(m)` as a catalog ring.
fn residue_ring(m: &Scalar) -> Result<RingSpec, ModuleError> {
    Ok(match m {
        Scalar::Int(n) => {
            let n = n
                .magnitude()
                .try_into()
                .ok()
                .filter(|&n: &u64| n as usize <= MAX_MODULE_ORDER)
                .ok_or(ModuleError::CapExceeded { what: "modulus", cap: MAX_MODULE_ORDER })?;
            RingSpec::Zn(n)
        }
        Scalar::Poly(f) => RingSpec::quot_poly(f.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(s: &str) -> FiniteModule {
        FiniteModule::parse(s).unwrap()
    }

    fn labels(e: &FiniteModule) -> Vec<String> {
        e.scalar_classes().iter().map(|c| e.class_label(c)).collect()
    }

    #[test]
    fn orders() {
        assert_eq!(module("Z:8").size(), 8);
        assert_eq!(module("Z:2,4").size(), 8);
        assert_eq!(module("ring:Trunc(2,3)").size(), 16);
        assert_eq!(module("F3[x]:x^2+1,x").size(), 27);
    }

    #[test]
    fn spec_grammar() {
        for (text, shown) in [
            ("Z:8", "Z:8"),
            ("Z: 2 , 4", "Z:2,4"),
            ("Z:-6", "Z:6"),
            ("F2[x]:x^3", "F2[x]:x^3"),
            ("F3[x]:2*x^2+2,x", "F3[x]:x^2+1,x"),
            ("ring:Trunc(2,3)", "ring:Trunc(2,3)"),
            ("ring:Zn(8)", "ring:Zn(8)"),
        ] {
            let spec = ModuleSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), shown);
            assert_eq!(ModuleSpec::parse(shown).unwrap(), spec);
        }
        for bad in ["Z:1", "Z:0", "Z:-1", "F4[x]:x", "F2[x]:1", "F2[y]:x", "Q:3", "Z:", "Z:8,", "ring:Zn(1)"] {
            assert!(ModuleSpec::parse(bad).is_err(), "{bad}");
        }
        let err = ModuleSpec::parse("Z:8,1").unwrap_err();
        assert_eq!(err.pos, 4);
        assert!(err.message.contains("unit"));
    }

    #[test]
    fn build_errors() {
        let unit = ModuleSpec::DirectSumCyclic { domain: ScalarDomain::Integers, moduli: vec![Scalar::from(-1)] };
        assert_eq!(FiniteModule::build(&unit).unwrap_err(), ModuleError::UnitModulus("-1".into()));
        let zero = ModuleSpec::integers(&[0]);
        assert_eq!(FiniteModule::build(&zero).unwrap_err(), ModuleError::ZeroModulus);
        assert!(matches!(
            FiniteModule::build(&ModuleSpec::integers(&[64, 128])),
            Err(ModuleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn classes_of_small_modules() {
        let z8 = module("Z:8");
        assert_eq!(labels(&z8), ["[2]", "[4]"]);
        let classes = z8.scalar_classes();
        assert_eq!(classes[0].members, vec![2, 6]);
        assert_eq!(classes[1].members, vec![4]);
        let z6 = module("Z:6");
        assert_eq!(labels(&z6), ["[2]", "[3]"]);
        assert_eq!(z6.scalar_classes()[0].members, vec![2, 4]);
        assert!(module("Z:5").scalar_classes().is_empty());
        assert_eq!(labels(&module("F2[x]:x^3")), ["[x]", "[x^2]"]);
    }

    #[test]
    fn cyclic_images() {
        let z8 = module("Z:8");
        assert_eq!(z8.cyclic_image(2).elements(), &[0, 2, 4, 6]);
        assert_eq!(z8.cyclic_image(4).elements(), &[0, 4]);
        let t = module("ring:Trunc(2,3)");
        let x1 = 2;
        assert_eq!(t.format_scalar(x1), "x1");
        assert_eq!(t.format_submodule(t.cyclic_image(x1)), ["0", "x1"]);
        assert_eq!(t.acting_domain(), "F2[x1,x2,x3]");
    }

    #[test]
    fn definitional_action_matches_residues() {
        let e = module("Z:2,4");
        for a in -10i64..10 {
            let s = e.scalars().reduce(&Scalar::from(a)).unwrap();
            assert_eq!(&e.image_of_scalar(&Scalar::from(a)).unwrap(), e.cyclic_image(s));
        }
    }

    #[test]
    fn submodule_checks() {
        let z6 = module("Z:6");
        assert!(z6.submodule(vec![0, 3]).is_ok());
        assert!(z6.submodule(vec![0, 2]).is_err());
        assert!(z6.submodule(vec![3]).is_err());
        let a = z6.submodule(vec![0, 2, 4]).unwrap();
        assert!(z6.zero_submodule().is_subset(&a));
        assert!(!a.is_subset(&z6.submodule(vec![0, 3]).unwrap()));
        assert!(a.is_subset(&z6.whole()));
    }
}
