use std::collections::HashSet;

use serde::Serialize;

use super::{FiniteModule, ModuleError, Submodule, MAX_LATTICE_ORDER};
use crate::scalar::{scalar_gcd, Scalar};

/// Most submodules a lattice enumeration will produce.
pub const MAX_LATTICE_SIZE: usize = 20_000;

/// An annihilator ideal inside the scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorInfo {
    /// Canonical generator in `A`, when scalars are residues of `Z` or `F_p[x]`.
    pub generator: Option<Scalar>,
    /// Members of the ideal as scalar residues.
    pub ideal: Vec<usize>,
    pub maximal: bool,
    pub prime: bool,
    pub semiprime: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructuralPredicates {
    pub divisible: bool,
    pub simple: bool,
    pub uniserial: bool,
    pub multiplication: bool,
    pub comultiplication: bool,
    pub semiprime_ann: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakIdempotentSplit {
    Simple,
    /// `E = eE ⊕ (1-e)E` with both parts minimal.
    Split { e: usize, first: Submodule, second: Submodule },
    None,
}

impl FiniteModule {
    /// `{s : sN = 0}` as a mask over scalar residues.
    pub fn annihilator_mask(&self, n: &Submodule) -> Vec<bool> {
        self.scalars
            .elements()
            .map(|s| n.elements().iter().all(|&x| self.act(s, x) == 0))
            .collect()
    }

    /// gcd of the ring modulus and the lifts of every member.
    fn ideal_generator(&self, mask: &[bool]) -> Option<Scalar> {
        let mut g = self.scalars.defining_modulus()?;
        for s in self.scalars.elements().filter(|&s| mask[s]) {
            g = scalar_gcd(&g, &self.scalars.lift(s)?).ok()?;
        }
        Some(g.normalized())
    }

    /// `ann(N)` with its generator and ideal-theoretic flags.
    pub fn submodule_annihilator(&self, n: &Submodule) -> AnnihilatorInfo {
        let mask = self.annihilator_mask(n);
        AnnihilatorInfo {
            generator: self.ideal_generator(&mask),
            ideal: Submodule::from_mask(&mask).elems,
            maximal: self.scalars.ideal_is_maximal(&mask),
            prime: self.scalars.ideal_is_prime(&mask),
            semiprime: self.scalars.ideal_is_semiprime(&mask),
        }
    }

    /// `ann(E)`.
    pub fn annihilator(&self) -> AnnihilatorInfo {
        self.submodule_annihilator(&self.whole())
    }

    /// Every scalar maps `N` onto itself or to zero.
    pub fn is_second_submodule(&self, n: &Submodule) -> bool {
        !n.is_zero()
            && self.scalars.elements().all(|s| {
                let sn = self.scale(s, n);
                sn.is_zero() || sn.len() == n.len()
            })
    }

    pub fn is_second_module(&self) -> bool {
        self.is_second_submodule(&self.whole())
    }

    /// A pair of residues `(a, b)` with `0 != bE ⊊ aE != E`, if any.
    pub fn quasi_second_witness(&self) -> Option<(usize, usize)> {
        let images = self.distinct_images();
        let full = self.size();
        for (i, big) in images.iter().enumerate() {
            if big.len() == full {
                continue;
            }
            for (j, small) in images.iter().enumerate() {
                if i != j && !small.is_zero() && small.is_subset(big) {
                    let a = self.scalars.elements().find(|&s| self.cyclic_image(s) == big)?;
                    let b = self.scalars.elements().find(|&s| self.cyclic_image(s) == small)?;
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `0 != bE ⊆ aE != E` implies `bE = aE`, over all residue pairs.
    pub fn is_quasi_second(&self) -> bool {
        self.quasi_second_witness().is_none()
    }

    pub fn is_simple(&self) -> bool {
        self.size() > 1 && self.elements().skip(1).all(|m| self.generated_by(m).len() == self.size())
    }

    /// Every submodule, ordered by size then elements.
    pub fn submodules(&self) -> Result<&[Submodule], ModuleError> {
        self.lattice
            .get_or_init(|| self.enumerate_submodules())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn enumerate_submodules(&self) -> Result<Vec<Submodule>, ModuleError> {
        if self.size() > MAX_LATTICE_ORDER {
            return Err(ModuleError::CapExceeded {
                what: "module order for lattice enumeration",
                cap: MAX_LATTICE_ORDER,
            });
        }
        let mut cyclic: Vec<Submodule> = self.elements().map(|m| self.generated_by(m)).collect();
        cyclic.sort();
        cyclic.dedup();
        let zero = self.zero_submodule();
        let mut seen: HashSet<Submodule> = HashSet::from([zero.clone()]);
        let mut queue = vec![zero];
        let mut all = Vec::new();
        while let Some(n) = queue.pop() {
            for c in &cyclic {
                if c.is_subset(&n) {
                    continue;
                }
                let bigger = self.sum(&n, c);
                if seen.insert(bigger.clone()) {
                    if seen.len() > MAX_LATTICE_SIZE {
                        return Err(ModuleError::CapExceeded {
                            what: "submodule count",
                            cap: MAX_LATTICE_SIZE,
                        });
                    }
                    queue.push(bigger);
                }
            }
            all.push(n);
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all)
    }

    /// `(N:E) = {s : sE ⊆ N}`.
    pub fn colon_mask(&self, n: &Submodule) -> Vec<bool> {
        self.scalars.elements().map(|s| self.cyclic_image(s).is_subset(n)).collect()
    }

    /// `IE` for an ideal given as a mask.
    pub fn ideal_times_module(&self, ideal: &[bool]) -> Submodule {
        let mut images: Vec<&Submodule> = self
            .scalars
            .elements()
            .filter(|&s| ideal[s])
            .map(|s| self.cyclic_image(s))
            .collect();
        images.sort();
        images.dedup();
        images
            .into_iter()
            .fold(self.zero_submodule(), |acc, img| self.sum(&acc, img))
    }

    /// `ann_E(I) = {m : sm = 0 for all s in I}`.
    pub fn module_annihilated_by(&self, ideal: &[bool]) -> Submodule {
        let members: Vec<usize> = self.scalars.elements().filter(|&s| ideal[s]).collect();
        Submodule::from_sorted(
            self.elements()
                .filter(|&m| members.iter().all(|&s| self.act(s, m) == 0))
                .collect(),
        )
    }

    /// `N = (N:E)E` for every submodule.
    pub fn is_multiplication(&self) -> Result<bool, ModuleError> {
        Ok(self
            .submodules()?
            .iter()
            .all(|n| &self.ideal_times_module(&self.colon_mask(n)) == n))
    }

    /// `N = ann_E(ann_A(N))` for every submodule.
    pub fn is_comultiplication(&self) -> Result<bool, ModuleError> {
        Ok(self
            .submodules()?
            .iter()
            .all(|n| &self.module_annihilated_by(&self.annihilator_mask(n)) == n))
    }

    /// Submodules form a chain.
    pub fn is_uniserial(&self) -> Result<bool, ModuleError> {
        let subs = self.submodules()?;
        Ok(subs.windows(2).all(|w| w[0].is_subset(&w[1])))
    }

    pub fn structural_predicates(&self) -> Result<StructuralPredicates, ModuleError> {
        Ok(StructuralPredicates {
            divisible: self.size() == 1,
            simple: self.is_simple(),
            uniserial: self.is_uniserial()?,
            multiplication: self.is_multiplication()?,
            comultiplication: self.is_comultiplication()?,
            semiprime_ann: self.annihilator().semiprime,
        })
    }

    /// For all `a, b` in `W(E)^#` some `x` in `W(E)^#` has `aE + bE ⊆ xE`.
    pub fn hyperconnected_criterion(&self) -> bool {
        let classes = self.scalar_classes();
        classes.iter().all(|a| {
            classes.iter().all(|b| {
                let s = self.sum(&a.image, &b.image);
                classes.iter().any(|x| s.is_subset(&x.image))
            })
        })
    }

    /// No nonzero submodule strictly inside `n`.
    fn is_minimal(&self, n: &Submodule) -> bool {
        !n.is_zero()
            && n.elements()
                .iter()
                .skip(1)
                .all(|&m| self.generated_by(m).len() == n.len())
    }

    /// Searches weak idempotents `e` (`e^2 - e` kills `E`) giving
    /// `E = eE ⊕ (1-e)E` with both parts minimal.
    pub fn weak_idempotent_split(&self) -> WeakIdempotentSplit {
        if self.is_simple() {
            return WeakIdempotentSplit::Simple;
        }
        let s = &self.scalars;
        for e in s.elements() {
            let e2_minus_e = s.sub_idx(s.mul_idx(e, e), e);
            if !self.cyclic_image(e2_minus_e).is_zero() {
                continue;
            }
            let first = self.cyclic_image(e);
            let second = self.cyclic_image(s.sub_idx(s.one_idx(), e));
            let meet_zero = first.elements().iter().filter(|&&x| second.contains(x)).count() == 1;
            if self.is_minimal(first)
                && self.is_minimal(second)
                && meet_zero
                && self.sum(first, second).len() == self.size()
            {
                return WeakIdempotentSplit::Split {
                    e,
                    first: first.clone(),
                    second: second.clone(),
                };
            }
        }
        WeakIdempotentSplit::None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Poly;

    fn module(s: &str) -> FiniteModule {
        FiniteModule::parse(s).unwrap()
    }

    #[test]
    fn annihilators() {
        assert_eq!(module("Z:2,4").annihilator().generator, Some(Scalar::from(4)));
        assert_eq!(module("Z:6").annihilator().generator, Some(Scalar::from(6)));
        let f = module("F2[x]:x,x^2");
        assert_eq!(
            f.annihilator().generator,
            Some(Scalar::Poly(Poly::monomial(2, 1, 2)))
        );
        let t = module("ring:Trunc(2,3)");
        let ann = t.annihilator();
        assert_eq!(ann.generator, None);
        assert_eq!(ann.ideal, vec![0]);
    }

    #[test]
    fn submodule_annihilators() {
        let z4 = module("Z:4");
        let a = z4.submodule_annihilator(z4.cyclic_image(2));
        assert_eq!((a.generator, a.maximal), (Some(Scalar::from(2)), true));
        let z8 = module("Z:8");
        let a = z8.submodule_annihilator(z8.cyclic_image(2));
        assert_eq!((a.generator, a.maximal), (Some(Scalar::from(4)), false));
        let a = z8.submodule_annihilator(&z8.zero_submodule());
        assert_eq!((a.generator, a.maximal), (Some(Scalar::from(1)), false));
    }

    #[test]
    fn second_and_quasi_second() {
        assert!(module("Z:5").is_second_module());
        let z4 = module("Z:4");
        assert!(!z4.is_second_module());
        assert!(z4.is_second_submodule(z4.cyclic_image(2)));
        assert!(z4.is_quasi_second());
        let z8 = module("Z:8");
        assert!(!z8.is_quasi_second());
        assert_eq!(z8.quasi_second_witness(), Some((2, 4)));
        assert!(module("Z:6").is_quasi_second());
    }

    #[test]
    fn lattices() {
        let z6 = module("Z:6");
        let subs: Vec<Vec<String>> = z6.submodules().unwrap().iter().map(|n| z6.format_submodule(n)).collect();
        assert_eq!(subs, vec![vec!["0"], vec!["0", "3"], vec!["0", "2", "4"], vec!["0", "1", "2", "3", "4", "5"]]);
        assert_eq!(module("Z:8").submodules().unwrap().len(), 4);
        assert_eq!(module("Z:2,2").submodules().unwrap().len(), 5);
        assert!(matches!(
            module("Z:2,2,2,2,2,2,2,2,2").submodules(),
            Err(ModuleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn structural_flags() {
        let p = module("Z:8").structural_predicates().unwrap();
        assert!(p.uniserial && p.multiplication && p.comultiplication && !p.semiprime_ann);
        let p = module("Z:6").structural_predicates().unwrap();
        assert!(!p.uniserial && p.multiplication && p.comultiplication && p.semiprime_ann);
        assert!(!module("Z:2,4").is_uniserial().unwrap());
        let p = module("Z:2,2").structural_predicates().unwrap();
        assert!(!p.multiplication && !p.comultiplication && p.semiprime_ann);
        assert!(!p.divisible && !p.simple);
        assert!(module("Z:7").is_simple());
    }

    #[test]
    fn hyperconnected_criteria() {
        assert!(module("Z:8").hyperconnected_criterion());
        assert!(!module("Z:12").hyperconnected_criterion());
        assert!(module("Z:5").hyperconnected_criterion());
    }

    #[test]
    fn component_supports() {
        let e = module("Z:2,4");
        let first = e.component_submodule(&[0]).unwrap();
        assert_eq!(e.format_submodule(&first), ["(0,0)", "(1,0)"]);
        assert_eq!(e.component_submodule(&[1]).unwrap().len(), 4);
        let q = e.quotient(&first).unwrap();
        assert!(q.component_submodule(&[0]).is_none());
    }

    #[test]
    fn weak_idempotents() {
        let z6 = module("Z:6");
        match z6.weak_idempotent_split() {
            WeakIdempotentSplit::Split { e, first, second } => {
                assert_eq!(e, 3);
                assert_eq!(first.elements(), &[0, 3]);
                assert_eq!(second.elements(), &[0, 2, 4]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(module("Z:5").weak_idempotent_split(), WeakIdempotentSplit::Simple);
        assert_eq!(module("Z:4").weak_idempotent_split(), WeakIdempotentSplit::None);
    }
}
