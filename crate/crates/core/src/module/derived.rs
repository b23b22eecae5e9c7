use super::{FiniteModule, ModuleError, ModuleSpec, Submodule};

impl FiniteModule {
    /// Ambient-level mask of every representative of elements in `n`.
    fn lift_mask(&self, n: &Submodule) -> Vec<bool> {
        let mut mask = vec![false; self.ambient.size];
        for x in 0..self.ambient.size {
            let c = self.canon.as_ref().map_or(x as u32, |c| c[x]);
            if c != super::NOT_IN_MODULE && n.contains(c as usize) {
                mask[x] = true;
            }
        }
        mask
    }

    fn checked(&self, n: &Submodule) -> Result<(), ModuleError> {
        if n.elements().last().is_some_and(|&x| x >= self.size()) || !self.is_submodule(n.elements()) {
            return Err(ModuleError::NotSubmodule(format!("{:?} in {}", n.elements(), self.label)));
        }
        Ok(())
    }

    /// `E/N`.
    pub fn quotient(&self, n: &Submodule) -> Result<FiniteModule, ModuleError> {
        self.checked(n)?;
        let top: Vec<bool> = (0..self.ambient.size)
            .map(|x| self.canon.as_ref().is_none_or(|c| c[x] != super::NOT_IN_MODULE))
            .collect();
        let kernel: Vec<usize> = (0..self.ambient.size).filter(|&x| self.lift_mask(n)[x]).collect();
        let label = format!("({})/{{{}}}", self.label, self.format_submodule(n).join(","));
        Ok(self.subquotient(label, &top, &kernel))
    }

    /// `N` as a module in its own right.
    pub fn submodule_as_module(&self, n: &Submodule) -> Result<FiniteModule, ModuleError> {
        self.checked(n)?;
        let top = self.lift_mask(n);
        let kernel: Vec<usize> = (0..self.ambient.size)
            .filter(|&x| self.canon.as_ref().map_or(x == 0, |c| c[x] == 0))
            .collect();
        let label = format!("{{{}}} in {}", self.format_submodule(n).join(","), self.label);
        Ok(self.subquotient(label, &top, &kernel))
    }

    /// `E1 ⊕ E2` for two direct sums of cyclic modules over the same domain.
    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule, ModuleError> {
        match (&self.spec, &other.spec) {
            (
                Some(ModuleSpec::DirectSumCyclic { domain: d1, moduli: m1 }),
                Some(ModuleSpec::DirectSumCyclic { domain: d2, moduli: m2 }),
            ) => {
                if d1 != d2 {
                    return Err(ModuleError::DomainMismatch {
                        modulus: other.label.clone(),
                        domain: *d1,
                    });
                }
                let moduli = m1.iter().chain(m2).cloned().collect();
                FiniteModule::build(&ModuleSpec::DirectSumCyclic { domain: *d1, moduli })
            }
            _ => Err(ModuleError::Unsupported(format!(
                "direct sums are built from Z or F_p[x] presentations, not {} and {}",
                self.label, other.label
            ))),
        }
    }

    /// The `i`-th cyclic summand of a direct-sum presentation.
    pub fn summand(&self, i: usize) -> Option<FiniteModule> {
        match &self.spec {
            Some(ModuleSpec::DirectSumCyclic { domain, moduli }) if i < moduli.len() => {
                FiniteModule::build(&ModuleSpec::DirectSumCyclic {
                    domain: *domain,
                    moduli: vec![moduli[i].clone()],
                })
                .ok()
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(s: &str) -> FiniteModule {
        FiniteModule::parse(s).unwrap()
    }

    #[test]
    fn quotient_of_z8_by_2e() {
        let z8 = module("Z:8");
        let q = z8.quotient(z8.cyclic_image(2)).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.is_quasi_second());
        assert!(q.scalar_classes().is_empty());
    }

    #[test]
    fn submodule_2e_of_z8() {
        let z8 = module("Z:8");
        let n = z8.submodule_as_module(z8.cyclic_image(2)).unwrap();
        assert_eq!(n.size(), 4);
        assert!(n.is_quasi_second());
        assert_eq!(n.scalar_classes().len(), 1);
        assert_eq!(n.format_elem(1), "2");
    }

    #[test]
    fn direct_sum_of_z2_and_z3() {
        let s = module("Z:2").direct_sum(&module("Z:3")).unwrap();
        assert_eq!(s.size(), 6);
        let labels: Vec<String> = s.scalar_classes().iter().map(|c| s.class_label(c)).collect();
        assert_eq!(labels, ["[2]", "[3]"]);
        assert!(module("Z:2").direct_sum(&module("F2[x]:x")).is_err());
    }

    #[test]
    fn iterated_derivations_compose() {
        let e = module("Z:2,8");
        let n = e.cyclic_image(2).clone();
        let q = e.quotient(&n).unwrap();
        assert_eq!(q.size(), 16 / n.len());
        let inner = q.submodule_as_module(q.cyclic_image(1)).unwrap();
        assert_eq!(inner.size(), q.size());
        assert!(q.quotient(&q.whole()).unwrap().size() == 1);
    }
}
