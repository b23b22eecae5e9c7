//! The quasi divisor space: classes of `W(E)^#` ordered by `aE ⊆ bE`.
//!
//! The topology has the principal up-sets `U_a` as a basis, so it is decided
//! entirely by the order: open sets are up-sets, closures are down-sets.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::module::{FiniteModule, ScalarClass, Submodule};

pub type PointSet = BTreeSet<usize>;

/// Largest space the isomorphism search accepts.
pub const MAX_HOMEOMORPHISM_POINTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("no point {0} in a space of {1} points")]
    UnknownPoint(usize, usize),
    #[error("homeomorphism search is capped at {cap} points, got {got}")]
    CapExceeded { cap: usize, got: usize },
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub discrete: bool,
    pub metrizable: bool,
    pub empty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub hyperconnected: bool,
    pub ultraconnected: bool,
    pub nested: bool,
    /// Always true for a finite space.
    pub noetherian: bool,
    /// Set when the space is empty and the flags hold vacuously.
    pub vacuous: bool,
}

#[derive(Debug, Clone)]
pub struct QuasiDivisorSpace {
    provenance: String,
    labels: Vec<String>,
    classes: Vec<ScalarClass>,
    images: Vec<Submodule>,
    n: usize,
    le: Vec<bool>,
}

impl QuasiDivisorSpace {
    pub fn build(e: &FiniteModule) -> Self {
        let classes = e.scalar_classes();
        let labels = classes.iter().map(|c| e.class_label(c)).collect();
        let images: Vec<Submodule> = classes.iter().map(|c| c.image.clone()).collect();
        let n = classes.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                le[i * n + j] = images[i].is_subset(&images[j]);
            }
        }
        QuasiDivisorSpace {
            provenance: e.label().to_string(),
            labels,
            classes,
            images,
            n,
            le,
        }
    }

    /// A space given directly by a partial order, `le[i][j]` meaning `i ≤ j`.
    pub fn from_order(labels: Vec<String>, le: &[Vec<bool>]) -> Result<Self, TopologyError> {
        let n = labels.len();
        if le.len() != n || le.iter().any(|row| row.len() != n) {
            return Err(TopologyError::NotPartialOrder("matrix shape".into()));
        }
        for i in 0..n {
            if !le[i][i] {
                return Err(TopologyError::NotPartialOrder(format!("{} not reflexive", labels[i])));
            }
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(TopologyError::NotPartialOrder(format!(
                        "{} and {} below each other",
                        labels[i], labels[j]
                    )));
                }
                for k in 0..n {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        return Err(TopologyError::NotPartialOrder("not transitive".into()));
                    }
                }
            }
        }
        Ok(QuasiDivisorSpace {
            provenance: "order".into(),
            labels,
            classes: Vec::new(),
            images: Vec::new(),
            n,
            le: le.concat(),
        })
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn point(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The classes behind the points; empty for spaces built from an order.
    pub fn classes(&self) -> &[ScalarClass] {
        &self.classes
    }

    /// `aE` for each point; empty for spaces built from an order.
    pub fn images(&self) -> &[Submodule] {
        &self.images
    }

    pub fn all_points(&self) -> PointSet {
        (0..self.n).collect()
    }

    /// `i ≤ j`, i.e. `a_i E ⊆ a_j E`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.n + j]
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    fn check(&self, p: usize) -> Result<(), TopologyError> {
        if p < self.n {
            Ok(())
        } else {
            Err(TopologyError::UnknownPoint(p, self.n))
        }
    }

    pub fn up_set(&self, p: usize) -> PointSet {
        (0..self.n).filter(|&j| self.le(p, j)).collect()
    }

    pub fn down_set(&self, p: usize) -> PointSet {
        (0..self.n).filter(|&j| self.le(j, p)).collect()
    }

    /// `U_a`, the smallest open set containing `p`.
    pub fn basis_set(&self, p: usize) -> Result<PointSet, TopologyError> {
        self.check(p)?;
        Ok(self.up_set(p))
    }

    pub fn closure(&self, xs: &PointSet) -> PointSet {
        xs.iter().flat_map(|&x| self.down_set(x)).collect()
    }

    pub fn interior(&self, xs: &PointSet) -> PointSet {
        xs.iter()
            .copied()
            .filter(|&p| self.up_set(p).is_subset(xs))
            .collect()
    }

    pub fn is_dense(&self, xs: &PointSet) -> bool {
        self.closure(xs).len() == self.n
    }

    pub fn is_open(&self, xs: &PointSet) -> bool {
        xs.iter().all(|&p| self.up_set(p).is_subset(xs))
    }

    /// Points whose basis set is a singleton.
    pub fn isolated_points(&self) -> PointSet {
        (0..self.n).filter(|&p| (0..self.n).all(|j| !self.lt(p, j))).collect()
    }

    /// Points whose submodule `aE` is maximal among all `bE`.
    pub fn maximal_classes(&self) -> PointSet {
        if self.images.is_empty() {
            return self.isolated_points();
        }
        let maximal: PointSet = (0..self.n)
            .filter(|&p| {
                self.images
                    .iter()
                    .all(|other| other == &self.images[p] || !self.images[p].is_subset(other))
            })
            .collect();
        assert_eq!(maximal, self.isolated_points(), "isolated points must be the maximal classes");
        maximal
    }

    pub fn minimal_classes(&self) -> PointSet {
        (0..self.n).filter(|&p| (0..self.n).all(|j| !self.lt(j, p))).collect()
    }

    fn is_antichain(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| !self.lt(i, j)))
    }

    pub fn separation_report(&self) -> SeparationReport {
        let t0 = (0..self.n).all(|i| (0..self.n).all(|j| i == j || !(self.le(i, j) && self.le(j, i))));
        let discrete = self.is_antichain();
        let t3 = (0..self.n).all(|p| {
            let up = self.up_set(p);
            self.closure(&up) == up
        });
        SeparationReport {
            t0,
            t1: discrete,
            t2: discrete,
            t3,
            discrete,
            metrizable: discrete,
            empty: self.n == 0,
        }
    }

    pub fn connectivity_report(&self) -> ConnectivityReport {
        let n = self.n;
        let pairs = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|i| (0..n).all(|j| f(i, j)));
        let hyperconnected = pairs(&|i, j| (0..n).any(|k| self.le(i, k) && self.le(j, k)));
        let ultraconnected = pairs(&|i, j| (0..n).any(|k| self.le(k, i) && self.le(k, j)));
        let nested = pairs(&|i, j| self.le(i, j) || self.le(j, i));
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        if n > 0 {
            seen[0] = true;
            stack.push(0);
        }
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (self.le(i, j) || self.le(j, i)) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        ConnectivityReport {
            connected: seen.iter().all(|&s| s),
            hyperconnected,
            ultraconnected,
            nested,
            noetherian: true,
            vacuous: n == 0,
        }
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) && !(0..self.n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    fn signature(&self, p: usize, edges: &[(usize, usize)]) -> (usize, usize, usize, usize) {
        (
            edges.iter().filter(|e| e.1 == p).count(),
            edges.iter().filter(|e| e.0 == p).count(),
            self.up_set(p).len(),
            self.down_set(p).len(),
        )
    }

    /// Order isomorphism, which is homeomorphism for these spaces.
    pub fn is_homeomorphic(&self, other: &QuasiDivisorSpace) -> Result<bool, TopologyError> {
        for s in [self, other] {
            if s.n > MAX_HOMEOMORPHISM_POINTS {
                return Err(TopologyError::CapExceeded { cap: MAX_HOMEOMORPHISM_POINTS, got: s.n });
            }
        }
        Ok(self.isomorphism(other).is_some())
    }

    /// An order isomorphism as the image of each point, if one exists.
    pub fn isomorphism(&self, other: &QuasiDivisorSpace) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let (e1, e2) = (self.hasse_edges(), other.hasse_edges());
        if e1.len() != e2.len() {
            return None;
        }
        let s1: Vec<_> = (0..self.n).map(|p| self.signature(p, &e1)).collect();
        let s2: Vec<_> = (0..other.n).map(|p| other.signature(p, &e2)).collect();
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; other.n];
        self.extend(other, &s1, &s2, 0, &mut map, &mut used).then_some(map)
    }

    fn extend(
        &self,
        other: &QuasiDivisorSpace,
        s1: &[(usize, usize, usize, usize)],
        s2: &[(usize, usize, usize, usize)],
        p: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if p == self.n {
            return true;
        }
        for q in 0..other.n {
            if used[q] || s1[p] != s2[q] {
                continue;
            }
            let consistent = (0..p).all(|r| {
                self.le(p, r) == other.le(q, map[r]) && self.le(r, p) == other.le(map[r], q)
            });
            if !consistent {
                continue;
            }
            map[p] = q;
            used[q] = true;
            if self.extend(other, s1, s2, p + 1, map, used) {
                return true;
            }
            used[q] = false;
        }
        map[p] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(s: &str) -> QuasiDivisorSpace {
        QuasiDivisorSpace::build(&FiniteModule::parse(s).unwrap())
    }

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn z8_is_a_two_chain() {
        let s = space("Z:8");
        assert_eq!(s.labels(), ["[2]", "[4]"]);
        let (two, four) = (s.point("[2]").unwrap(), s.point("[4]").unwrap());
        assert!(s.le(four, two) && !s.le(two, four));
        assert_eq!(s.basis_set(four).unwrap(), set(&[two, four]));
        assert_eq!(s.basis_set(two).unwrap(), set(&[two]));
        assert_eq!(s.closure(&set(&[two])), set(&[two, four]));
        assert_eq!(s.interior(&set(&[four])), set(&[]));
        assert_eq!(s.isolated_points(), set(&[two]));
        assert_eq!(s.minimal_classes(), set(&[four]));
        let sep = s.separation_report();
        assert!(sep.t0 && !sep.t1 && !sep.discrete);
        let c = s.connectivity_report();
        assert!(c.connected && c.hyperconnected && c.ultraconnected && c.nested && c.noetherian);
        assert_eq!(s.hasse_edges(), vec![(four, two)]);
        assert!(s.basis_set(5).is_err());
    }

    #[test]
    fn z6_is_a_two_point_antichain() {
        let s = space("Z:6");
        assert_eq!(s.len(), 2);
        assert_eq!(s.basis_set(1).unwrap(), set(&[1]));
        assert_eq!(s.maximal_classes(), set(&[0, 1]));
        assert!(s.separation_report().discrete);
        let c = s.connectivity_report();
        assert!(!c.connected && !c.hyperconnected && !c.ultraconnected && !c.nested && c.noetherian);
        assert!(s.hasse_edges().is_empty());
    }

    #[test]
    fn z12_and_z16() {
        let s = space("Z:12");
        assert_eq!(s.labels(), ["[2]", "[3]", "[4]", "[6]"]);
        assert_eq!(s.hasse_edges(), vec![(2, 0), (3, 0), (3, 1)]);
        assert_eq!(s.minimal_classes(), set(&[2, 3]));
        let c = s.connectivity_report();
        assert!(c.connected && !c.hyperconnected);
        assert_eq!(space("Z:16").isolated_points(), set(&[0]));
    }

    #[test]
    fn trunc_2_3_is_discrete_with_seven_points() {
        let s = space("ring:Trunc(2,3)");
        assert_eq!(s.len(), 7);
        assert!(s.separation_report().t1);
        assert!(s.images().iter().all(|img| img.len() == 2));
    }

    #[test]
    fn empty_spaces() {
        let s = space("Z:5");
        assert!(s.is_empty());
        let sep = s.separation_report();
        assert!(sep.empty && sep.t0 && sep.t1 && sep.t3);
        let c = s.connectivity_report();
        assert!(c.connected && c.vacuous);
        assert_eq!(s.closure(&PointSet::new()), PointSet::new());
        assert!(s.is_homeomorphic(&space("Z:7")).unwrap());
    }

    #[test]
    fn homeomorphisms() {
        assert!(space("Z:8").is_homeomorphic(&space("F2[x]:x^3")).unwrap());
        assert!(!space("Z:8").is_homeomorphic(&space("Z:6")).unwrap());
        assert_eq!(space("Z:8").isomorphism(&space("F2[x]:x^3")), Some(vec![0, 1]));
        let big = space("ring:Trunc(2,4)");
        assert!(matches!(big.is_homeomorphic(&big), Err(TopologyError::CapExceeded { .. })));
    }

    #[test]
    fn from_order_validates() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(QuasiDivisorSpace::from_order(labels.clone(), &[vec![true, true], vec![true, true]]).is_err());
        let s = QuasiDivisorSpace::from_order(labels, &[vec![true, true], vec![false, true]]).unwrap();
        assert_eq!(s.hasse_edges(), vec![(0, 1)]);
    }
}
