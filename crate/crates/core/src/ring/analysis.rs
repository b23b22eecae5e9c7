use serde::Serialize;

use super::{FiniteRing, RingError, RingSpec};

/// Structural verdict on whether a ring is a quasi second ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuasiSecondClass {
    LocalSquareZeroMax,
    ProductOfTwoFields,
    NotQuasiSecond,
}

/// Membership mask to sorted element list.
fn members(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
}

impl FiniteRing {
    fn unit_mask(&self) -> &[bool] {
        // a is a unit iff some power of a equals 1; walk powers until a repeat
        self.units.get_or_init(|| {
            let mut mask = vec![false; self.order];
            let mut seen = vec![usize::MAX; self.order];
            for a in 0..self.order {
                let mut x = a;
                while seen[x] != a {
                    seen[x] = a;
                    if x == self.one {
                        mask[a] = true;
                        break;
                    }
                    x = self.mul_idx(x, a);
                }
            }
            mask
        })
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.unit_mask()[a]
    }

    /// All invertible elements, ascending.
    pub fn units(&self) -> Vec<usize> {
        members(self.unit_mask())
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        if !self.is_unit(a) {
            return None;
        }
        (0..self.order).find(|&b| self.mul_idx(a, b) == self.one)
    }

    pub fn is_field(&self) -> bool {
        (1..self.order).all(|a| self.is_unit(a))
    }

    /// `{ra : r in R}` as a membership mask.
    pub fn principal_ideal_mask(&self, a: usize) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        for r in 0..self.order {
            mask[self.mul_idx(r, a)] = true;
        }
        mask
    }

    /// `{ra : r in R}`, ascending.
    pub fn principal_ideal(&self, a: usize) -> Vec<usize> {
        members(&self.principal_ideal_mask(a))
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..=self.order {
            if x == 0 {
                return true;
            }
            x = self.mul_idx(x, a);
        }
        false
    }

    pub fn nilradical(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_nilpotent(a)).collect()
    }

    /// Equal to the nilradical for finite commutative rings.
    pub fn jacobson_radical(&self) -> Vec<usize> {
        self.nilradical()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul_idx(e, e) == e).collect()
    }

    /// `(nilradical, jacobson radical, idempotents)`.
    pub fn radical_and_idempotents(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let nil = self.nilradical();
        (nil.clone(), nil, self.idempotents())
    }

    /// The maximal ideal when the nonunits form an ideal.
    pub fn is_local(&self) -> Option<Vec<usize>> {
        let nonunits: Vec<usize> = (0..self.order).filter(|&a| !self.is_unit(a)).collect();
        let units = self.unit_mask();
        for (i, &a) in nonunits.iter().enumerate() {
            for &b in &nonunits[i..] {
                if units[self.add_idx(a, b)] {
                    return None;
                }
            }
        }
        Some(nonunits)
    }

    /// Exhaustive check of `0 != (b) ⊆ (a) != R  =>  (a) = (b)`.
    pub fn is_quasi_second_ring_brute(&self) -> bool {
        let units = self.unit_mask();
        // (a) = R exactly for units, and (b) ⊆ (a) != R forces b to be a nonunit
        let mut size = vec![0usize; self.order];
        let ideals: Vec<(usize, Vec<bool>)> = (0..self.order)
            .filter(|&a| !units[a])
            .map(|a| {
                let m = self.principal_ideal_mask(a);
                size[a] = m.iter().filter(|&&x| x).count();
                (a, m)
            })
            .collect();
        ideals
            .iter()
            .all(|(a, ideal)| (1..self.order).all(|b| !ideal[b] || size[b] == size[*a]))
    }

    /// Whether `set` is a ring with identity `e` in which every nonzero element is invertible.
    fn is_field_with_identity(&self, set: &[usize], e: usize) -> bool {
        set.len() >= 2
            && set
                .iter()
                .filter(|&&x| x != 0)
                .all(|&x| set.iter().any(|&y| self.mul_idx(x, y) == e))
    }

    /// Splits `R = eR × (1-e)R` for an idempotent `e`.
    pub fn idempotent_split(&self, e: usize) -> (Vec<usize>, Vec<usize>) {
        let f = self.sub_idx(self.one, e);
        (self.principal_ideal(e), self.principal_ideal(f))
    }

    pub fn classify_quasi_second(&self) -> QuasiSecondClass {
        if let Some(m) = self.is_local() {
            let square_zero = m
                .iter()
                .all(|&a| m.iter().all(|&b| self.mul_idx(a, b) == 0));
            return if square_zero {
                QuasiSecondClass::LocalSquareZeroMax
            } else {
                QuasiSecondClass::NotQuasiSecond
            };
        }
        for e in self.idempotents() {
            if e == 0 || e == self.one {
                continue;
            }
            let f = self.sub_idx(self.one, e);
            let (left, right) = self.idempotent_split(e);
            if self.is_field_with_identity(&left, e) && self.is_field_with_identity(&right, f) {
                return QuasiSecondClass::ProductOfTwoFields;
            }
        }
        QuasiSecondClass::NotQuasiSecond
    }

    /// The ring `R(+)R^d`.
    pub fn idealize(&self, d: usize) -> Result<FiniteRing, RingError> {
        FiniteRing::build(&RingSpec::idealize(self.spec.clone(), d))
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut x = self.one;
        let mut n = 1;
        while x != 0 {
            x = self.add_idx(x, self.one);
            n += 1;
        }
        n
    }

    /// Smallest subring containing `seed` and 1, as a membership mask.
    fn subring_closure(&self, mask: &mut [bool], seed: usize) {
        if mask[seed] {
            return;
        }
        let mut members: Vec<usize> = (0..self.order).filter(|&x| mask[x]).collect();
        let mut queue = vec![seed];
        mask[seed] = true;
        while let Some(y) = queue.pop() {
            members.push(y);
            for i in 0..members.len() {
                let z = members[i];
                for w in [self.add_idx(y, z), self.mul_idx(y, z)] {
                    if !mask[w] {
                        mask[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
    }

    /// Size of a generating set found greedily: each step adjoins the first
    /// element outside the subring generated so far.
    pub fn generator_count(&self) -> usize {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        self.subring_closure(&mut mask, self.one);
        let mut count = 0;
        while let Some(g) = mask.iter().position(|&m| !m) {
            self.subring_closure(&mut mask, g);
            count += 1;
        }
        count
    }

    /// A domain that surjects onto this ring: `Z`, `F_p[x1..xk]` or `Z[x1..xk]`.
    pub fn acting_domain_tag(&self) -> String {
        let k = self.generator_count();
        let vars = match k {
            0 => return "Z".to_string(),
            1 => "x".to_string(),
            _ => (1..=k).map(|i| format!("x{i}")).collect::<Vec<_>>().join(","),
        };
        let c = self.characteristic();
        if c < 1 << 31 && crate::scalar::is_prime_u64(c as u64) {
            format!("F{c}[{vars}]")
        } else {
            format!("Z[{vars}]")
        }
    }

    /// Ideal membership mask is closed under addition and multiplication by R.
    pub fn is_ideal(&self, mask: &[bool]) -> bool {
        let set = members(mask);
        mask[0]
            && set.iter().all(|&a| {
                set.iter().all(|&b| mask[self.add_idx(a, b)])
                    && (0..self.order).all(|r| mask[self.mul_idx(r, a)])
            })
    }

    /// A proper ideal `I` is maximal iff every `x ∉ I` has `r` with `1 - rx ∈ I`.
    pub fn ideal_is_maximal(&self, mask: &[bool]) -> bool {
        !mask[self.one]
            && (0..self.order).filter(|&x| !mask[x]).all(|x| {
                (0..self.order).any(|r| mask[self.sub_idx(self.one, self.mul_idx(r, x))])
            })
    }

    pub fn ideal_is_prime(&self, mask: &[bool]) -> bool {
        let outside: Vec<usize> = (0..self.order).filter(|&x| !mask[x]).collect();
        !mask[self.one]
            && outside
                .iter()
                .enumerate()
                .all(|(i, &a)| outside[i..].iter().all(|&b| !mask[self.mul_idx(a, b)]))
    }

    /// `a^2 ∈ I  =>  a ∈ I`.
    pub fn ideal_is_semiprime(&self, mask: &[bool]) -> bool {
        (0..self.order).all(|a| mask[a] || !mask[self.mul_idx(a, a)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s).unwrap()
    }

    fn fmt(r: &FiniteRing, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| r.format_elem(x)).collect()
    }

    #[test]
    fn units() {
        assert_eq!(ring("Zn(8)").units(), vec![1, 3, 5, 7]);
        let r = ring("QuotPoly(2,x^2)");
        assert_eq!(fmt(&r, &r.units()), ["1", "x+1"]);
        let r = ring("Prod(GF(2),GF(3))");
        assert_eq!(fmt(&r, &r.units()), ["(1,1)", "(1,2)"]);
    }

    #[test]
    fn principal_ideals() {
        let z8 = ring("Zn(8)");
        assert_eq!(z8.principal_ideal(2), vec![0, 2, 4, 6]);
        assert_eq!(z8.principal_ideal(4), vec![0, 4]);
        let t = ring("Trunc(2,1)");
        let x = t.index_of(&super::super::RingElem(vec![1, 0])).unwrap();
        assert_eq!(fmt(&t, &t.principal_ideal(x)), ["0", "x"]);
    }

    #[test]
    fn radicals_and_idempotents() {
        let (nil, jac, idem) = ring("Zn(8)").radical_and_idempotents();
        assert_eq!((nil.as_slice(), jac.as_slice(), idem.as_slice()), (&[0, 2, 4, 6][..], &[0, 2, 4, 6][..], &[0, 1][..]));
        let (nil, _, idem) = ring("Zn(6)").radical_and_idempotents();
        assert_eq!(nil, vec![0]);
        assert_eq!(idem, vec![0, 1, 3, 4]);
        let t = ring("Trunc(2,2)");
        let (nil, _, idem) = t.radical_and_idempotents();
        assert_eq!(fmt(&t, &nil), ["0", "x1", "x2", "x1+x2"]);
        assert_eq!(fmt(&t, &idem), ["0", "1"]);
    }

    #[test]
    fn locality() {
        assert_eq!(ring("Zn(8)").is_local(), Some(vec![0, 2, 4, 6]));
        assert_eq!(ring("Zn(6)").is_local(), None);
        assert_eq!(ring("GF(2)").is_local(), Some(vec![0]));
    }

    #[test]
    fn quasi_second_rings() {
        assert!(ring("Zn(4)").is_quasi_second_ring_brute());
        assert!(!ring("Zn(8)").is_quasi_second_ring_brute());
        assert!(ring("Zn(6)").is_quasi_second_ring_brute());
        assert_eq!(ring("Zn(4)").classify_quasi_second(), QuasiSecondClass::LocalSquareZeroMax);
        assert_eq!(ring("Zn(6)").classify_quasi_second(), QuasiSecondClass::ProductOfTwoFields);
        assert_eq!(ring("Zn(8)").classify_quasi_second(), QuasiSecondClass::NotQuasiSecond);
    }

    #[test]
    fn idealizations() {
        let r = ring("GF(2)").idealize(2).unwrap();
        assert_eq!(r.order(), 8);
        assert!(r.is_quasi_second_ring_brute());
        let r = ring("Zn(4)").idealize(1).unwrap();
        assert_eq!(r.order(), 16);
        assert!(!r.is_quasi_second_ring_brute());
        assert!(ring("Zn(4)").idealize(0).is_err());
    }

    #[test]
    fn zn6_splits_at_three() {
        let r = ring("Zn(6)");
        let (a, b) = r.idempotent_split(3);
        assert_eq!(a, vec![0, 3]);
        assert_eq!(b, vec![0, 2, 4]);
        assert_eq!(a.len() * b.len(), 6);
    }

    #[test]
    fn ideal_tests() {
        let z12 = ring("Zn(12)");
        let i = z12.principal_ideal_mask(2);
        assert!(z12.is_ideal(&i));
        assert!(z12.ideal_is_maximal(&i));
        assert!(z12.ideal_is_prime(&i));
        let j = z12.principal_ideal_mask(4);
        assert!(!z12.ideal_is_prime(&j));
        assert!(!z12.ideal_is_semiprime(&j));
        assert!(z12.ideal_is_semiprime(&z12.principal_ideal_mask(6)));
        assert_eq!(z12.characteristic(), 12);
    }

    #[test]
    fn acting_domains() {
        assert_eq!(ring("Trunc(2,3)").acting_domain_tag(), "F2[x1,x2,x3]");
        assert_eq!(ring("Zn(8)").acting_domain_tag(), "Z");
        assert_eq!(ring("Prod(GF(2),GF(3))").acting_domain_tag(), "Z");
        assert_eq!(ring("GF(2,x^2+x+1)").acting_domain_tag(), "F2[x]");
        assert_eq!(ring("Ideal(Zn(4),1)").acting_domain_tag(), "Z[x]");
    }

    #[test]
    fn lift_and_reduce() {
        let r = ring("QuotPoly(2,x^3)");
        for i in r.elements() {
            assert_eq!(r.reduce(&r.lift(i).unwrap()), Some(i));
        }
        let z = ring("Zn(8)");
        assert_eq!(z.reduce(&crate::scalar::Scalar::from(-3)), Some(5));
        assert!(ring("Trunc(2,1)").lift(1).is_none());
    }
}
