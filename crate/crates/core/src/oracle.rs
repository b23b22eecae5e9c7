//! Definitional finite-topology engine.
//!
//! Opens are bitmasks over points. Every axiom quantifies over the open
//! family itself; nothing here consults the specialization order.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::topology::{PointSet, QuasiDivisorSpace};

pub const MAX_ORACLE_POINTS: usize = 14;
pub const MAX_T5_POINTS: usize = 12;
/// Spaces up to this size get an exhaustive closure-of-unions sweep.
const EXHAUSTIVE_UNION_POINTS: usize = 10;
const SAMPLED_SUBSETS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is capped at {cap} points, got {got}")]
    CapExceeded { what: &'static str, cap: usize, got: usize },
    #[error("generated family is not a topology: {0}")]
    NotATopology(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    T0,
    T1,
    T2,
    T3,
    T4,
    T5,
    Discrete,
    Connected,
    Hyperconnected,
    Ultraconnected,
    Alexandrov,
    Noetherian,
    Baire,
}

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::T2,
        Axiom::T3,
        Axiom::T4,
        Axiom::T5,
        Axiom::Discrete,
        Axiom::Connected,
        Axiom::Hyperconnected,
        Axiom::Ultraconnected,
        Axiom::Alexandrov,
        Axiom::Noetherian,
        Axiom::Baire,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureChecks {
    pub minimal_neighborhoods_ok: bool,
    pub closure_union_ok: bool,
    pub open_dense_contains_maximal_ok: bool,
}

/// A topology on `n` points given by its full list of open sets.
#[derive(Debug, Clone)]
pub struct FiniteTopology {
    n: usize,
    full: u32,
    opens: Vec<u32>,
    is_open: Vec<bool>,
    basis: Vec<u32>,
}

pub fn to_mask(xs: &PointSet) -> u32 {
    xs.iter().fold(0, |m, &p| m | 1 << p)
}

pub fn to_set(mask: u32) -> PointSet {
    (0..32).filter(|&p| mask >> p & 1 == 1).collect()
}

fn disjoint(a: u32, b: u32) -> bool {
    a & b == 0
}

impl FiniteTopology {
    /// All unions of the basis sets `U_a`, computed from the class
    /// submodules when the space has them.
    pub fn enumerate(space: &QuasiDivisorSpace) -> Result<Self, OracleError> {
        let n = space.len();
        if n > MAX_ORACLE_POINTS {
            return Err(OracleError::CapExceeded { what: "open-set enumeration", cap: MAX_ORACLE_POINTS, got: n });
        }
        let images = space.images();
        let basis: Vec<u32> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| {
                        if images.is_empty() {
                            space.le(i, j)
                        } else {
                            images[i].is_subset(&images[j])
                        }
                    })
                    .fold(0u32, |m, j| m | 1 << j)
            })
            .collect();
        Self::from_basis(n, basis)
    }

    pub fn from_basis(n: usize, basis: Vec<u32>) -> Result<Self, OracleError> {
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let mut is_open = vec![false; 1 << n];
        is_open[0] = true;
        let mut opens = vec![0u32];
        for &b in &basis {
            let count = opens.len();
            for k in 0..count {
                let u = opens[k] | b;
                if !is_open[u as usize] {
                    is_open[u as usize] = true;
                    opens.push(u);
                }
            }
        }
        opens.sort_unstable();
        let t = FiniteTopology { n, full, opens, is_open, basis };
        t.verify_family()?;
        Ok(t)
    }

    fn verify_family(&self) -> Result<(), OracleError> {
        if !self.is_open[self.full as usize] {
            return Err(OracleError::NotATopology("whole space is not open".into()));
        }
        for &u in &self.opens {
            for &v in &self.opens {
                if !self.is_open[(u | v) as usize] || !self.is_open[(u & v) as usize] {
                    return Err(OracleError::NotATopology(format!("{u:#b} and {v:#b}")));
                }
            }
        }
        Ok(())
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn is_open(&self, mask: u32) -> bool {
        self.is_open[mask as usize]
    }

    pub fn is_closed(&self, mask: u32) -> bool {
        self.is_open(self.full & !mask)
    }

    pub fn closed_sets(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.opens.iter().map(|&u| self.full & !u).collect();
        c.sort_unstable();
        c
    }

    /// Intersection of every closed set containing `x`.
    pub fn closure(&self, x: u32) -> u32 {
        self.opens
            .iter()
            .map(|&u| self.full & !u)
            .filter(|&c| c & x == x)
            .fold(self.full, |acc, c| acc & c)
    }

    /// Union of every open set inside `x`.
    pub fn interior(&self, x: u32) -> u32 {
        self.opens.iter().filter(|&&u| u & x == u).fold(0, |acc, &u| acc | u)
    }

    /// Intersection of every open set containing `x`.
    fn neighborhood(&self, x: u32) -> u32 {
        self.opens.iter().filter(|&&u| u & x == x).fold(self.full, |acc, &u| acc & u)
    }

    fn is_dense(&self, x: u32) -> bool {
        self.closure(x) == self.full
    }

    fn distinct_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| (0..self.n).filter(move |&y| y != x).map(move |y| (x, y)))
    }

    pub fn axiom(&self, axiom: Axiom) -> Result<bool, OracleError> {
        let bit = |p: usize| 1u32 << p;
        Ok(match axiom {
            Axiom::T0 => self.distinct_pairs().all(|(x, y)| {
                self.opens.iter().any(|&u| (u & bit(x) != 0) != (u & bit(y) != 0))
            }),
            Axiom::T1 => self
                .distinct_pairs()
                .all(|(x, y)| self.opens.iter().any(|&u| u & bit(x) != 0 && u & bit(y) == 0)),
            Axiom::T2 => self.distinct_pairs().all(|(x, y)| {
                self.opens.iter().filter(|&&u| u & bit(x) != 0).any(|&u| {
                    self.opens.iter().any(|&v| v & bit(y) != 0 && disjoint(u, v))
                })
            }),
            Axiom::T3 => self.closed_sets().iter().all(|&f| {
                let nf = self.neighborhood(f);
                (0..self.n)
                    .filter(|&x| f & bit(x) == 0)
                    .all(|x| disjoint(self.neighborhood(bit(x)), nf))
            }),
            Axiom::T4 => {
                let closed: Vec<(u32, u32)> =
                    self.closed_sets().into_iter().map(|f| (f, self.neighborhood(f))).collect();
                closed.iter().all(|&(f, nf)| {
                    closed.iter().all(|&(g, ng)| !disjoint_nonempty(f, g) || disjoint(nf, ng))
                })
            }
            Axiom::T5 => self.completely_normal()?,
            Axiom::Discrete => (0..self.n).all(|x| self.is_open(bit(x))),
            Axiom::Connected => self.opens.iter().all(|&u| u == 0 || u == self.full || !self.is_closed(u)),
            Axiom::Hyperconnected => self
                .opens
                .iter()
                .all(|&u| self.opens.iter().all(|&v| u == 0 || v == 0 || !disjoint(u, v))),
            Axiom::Ultraconnected => {
                let closed = self.closed_sets();
                closed
                    .iter()
                    .all(|&f| closed.iter().all(|&g| f == 0 || g == 0 || !disjoint(f, g)))
            }
            Axiom::Alexandrov => {
                let all = self.opens.iter().fold(self.full, |acc, &u| acc & u);
                self.is_open(all)
                    && self.opens.iter().all(|&u| self.opens.iter().all(|&v| self.is_open(u & v)))
            }
            // A finite family of opens has no strictly increasing infinite chain.
            Axiom::Noetherian => true,
            Axiom::Baire => {
                // Any intersection of dense opens contains the intersection of all of them.
                let all = self
                    .opens
                    .iter()
                    .filter(|&&u| self.is_dense(u))
                    .fold(self.full, |acc, &u| acc & u);
                self.is_dense(all)
            }
        })
    }

    /// Separated sets `A`, `B` (each disjoint from the other's closure) have
    /// disjoint open neighborhoods.
    fn completely_normal(&self) -> Result<bool, OracleError> {
        if self.n > MAX_T5_POINTS {
            return Err(OracleError::CapExceeded { what: "T5 check", cap: MAX_T5_POINTS, got: self.n });
        }
        let size = 1usize << self.n;
        let closures: Vec<u32> = (0..size as u32).map(|x| self.closure(x)).collect();
        let nbhds: Vec<u32> = (0..size as u32).map(|x| self.neighborhood(x)).collect();
        for a in 1..size as u32 {
            let rest = self.full & !a;
            // Nonempty submasks of the complement.
            let mut b = rest;
            while b != 0 {
                let separated = disjoint(a, closures[b as usize]) && disjoint(closures[a as usize], b);
                if separated && !disjoint(nbhds[a as usize], nbhds[b as usize]) {
                    return Ok(false);
                }
                b = (b - 1) & rest;
            }
        }
        Ok(true)
    }

    /// Structural facts checked against the space's own formulas.
    pub fn structure_checks(&self, space: &QuasiDivisorSpace) -> StructureChecks {
        let minimal_neighborhoods_ok = (0..self.n).all(|p| {
            let basis = space.basis_set(p).map(|b| to_mask(&b)).unwrap_or(0);
            self.is_open(basis)
                && basis & 1 << p != 0
                && !self
                    .opens
                    .iter()
                    .any(|&u| u & 1 << p != 0 && u & basis == u && u != basis)
        });
        let union_ok = |x: u32| {
            let pointwise = (0..self.n)
                .filter(|&p| x >> p & 1 == 1)
                .fold(0, |acc, p| acc | self.closure(1 << p));
            self.closure(x) == pointwise
        };
        let closure_union_ok = if self.n <= EXHAUSTIVE_UNION_POINTS {
            (0..1u32 << self.n).all(union_ok)
        } else {
            let mut all: Vec<u32> = (0..1u32 << self.n).collect();
            all.shuffle(&mut ChaCha8Rng::seed_from_u64(self.n as u64));
            all.into_iter().take(SAMPLED_SUBSETS).all(union_ok)
        };
        let maximal = to_mask(&space.maximal_classes());
        let open_dense_contains_maximal_ok = self
            .opens
            .iter()
            .filter(|&&u| self.is_dense(u))
            .all(|&u| u & maximal == maximal);
        StructureChecks {
            minimal_neighborhoods_ok,
            closure_union_ok,
            open_dense_contains_maximal_ok,
        }
    }

    /// Open sets are linearly ordered by inclusion.
    pub fn is_nested(&self) -> bool {
        self.opens.windows(2).all(|w| w[0] & w[1] == w[0])
            && self.opens.iter().all(|&u| self.opens.iter().all(|&v| u & v == u || u & v == v))
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }
}

fn disjoint_nonempty(f: u32, g: u32) -> bool {
    f != 0 && g != 0 && disjoint(f, g)
}

/// A disagreement between an order-theoretic answer and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub subset: Vec<usize>,
    pub fast: Vec<usize>,
    pub oracle: Vec<usize>,
}

/// Compares every fast predicate with its definitional counterpart, and the
/// closure/interior formulas over all subsets (up to 8 points) or a seeded
/// sample of 100 subsets.
pub fn cross_check(space: &QuasiDivisorSpace, t: &FiniteTopology) -> Result<Vec<Mismatch>, OracleError> {
    let mut out = Vec::new();
    let sep = space.separation_report();
    let con = space.connectivity_report();
    let pairs = [
        ("T0", sep.t0, Axiom::T0),
        ("T1", sep.t1, Axiom::T1),
        ("T2", sep.t2, Axiom::T2),
        ("T3", sep.t3, Axiom::T3),
        ("discrete", sep.discrete, Axiom::Discrete),
        ("connected", con.connected, Axiom::Connected),
        ("hyperconnected", con.hyperconnected, Axiom::Hyperconnected),
        ("ultraconnected", con.ultraconnected, Axiom::Ultraconnected),
    ];
    for (name, fast, axiom) in pairs {
        let oracle = t.axiom(axiom)?;
        if fast != oracle {
            out.push(Mismatch {
                check: name.to_string(),
                subset: Vec::new(),
                fast: vec![fast as usize],
                oracle: vec![oracle as usize],
            });
        }
    }
    let subsets: Vec<u32> = if t.n <= 8 {
        (0..1u32 << t.n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut all: Vec<u32> = (0..1u32 << t.n).collect();
        all.shuffle(&mut rng);
        all.truncate(100);
        all.sort_unstable();
        all
    };
    for x in subsets {
        let xs = to_set(x);
        let checks = [
            ("closure", space.closure(&xs), to_set(t.closure(x))),
            ("interior", space.interior(&xs), to_set(t.interior(x))),
        ];
        for (name, fast, oracle) in checks {
            if fast != oracle {
                out.push(Mismatch {
                    check: name.to_string(),
                    subset: xs.iter().copied().collect(),
                    fast: fast.into_iter().collect(),
                    oracle: oracle.into_iter().collect(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;

    fn topology(s: &str) -> (QuasiDivisorSpace, FiniteTopology) {
        let space = QuasiDivisorSpace::build(&FiniteModule::parse(s).unwrap());
        let t = FiniteTopology::enumerate(&space).unwrap();
        (space, t)
    }

    #[test]
    fn opens_of_small_spaces() {
        let (s, t) = topology("Z:8");
        let (two, four) = (s.point("[2]").unwrap(), s.point("[4]").unwrap());
        assert_eq!(t.opens(), &[0, 1 << two, 1 << two | 1 << four]);
        let (_, t) = topology("Z:6");
        assert_eq!(t.opens(), &[0, 1, 2, 3]);
        let (_, t) = topology("Z:5");
        assert_eq!(t.opens(), &[0]);
    }

    #[test]
    fn axioms_of_small_spaces() {
        let (_, t) = topology("Z:8");
        assert!(!t.axiom(Axiom::T1).unwrap());
        assert!(t.axiom(Axiom::T0).unwrap());
        assert!(t.axiom(Axiom::T5).unwrap());
        let (_, t) = topology("Z:6");
        assert!(t.axiom(Axiom::T5).unwrap());
        assert!(t.axiom(Axiom::T2).unwrap());
        assert!(!t.axiom(Axiom::Connected).unwrap());
        let (_, t) = topology("Z:5");
        for a in Axiom::ALL {
            assert!(t.axiom(a).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn oracle_closures() {
        let (s, t) = topology("Z:8");
        let two = s.point("[2]").unwrap();
        assert_eq!(t.closure(1 << two), 0b11);
        let (_, t) = topology("Z:6");
        assert_eq!(t.closure(1), 1);
        assert_eq!(t.closure(0b11), 0b11);
    }

    #[test]
    fn structure_checks_hold() {
        for spec in ["Z:8", "Z:12", "Z:5", "Z:2,4"] {
            let (s, t) = topology(spec);
            let c = t.structure_checks(&s);
            assert!(c.minimal_neighborhoods_ok && c.closure_union_ok && c.open_dense_contains_maximal_ok, "{spec}");
            assert!(cross_check(&s, &t).unwrap().is_empty(), "{spec}");
        }
    }

    #[test]
    fn chains_have_one_more_open_than_points() {
        for k in 2..=6 {
            let (s, t) = topology(&format!("Z:{}", 1 << k));
            assert!(s.connectivity_report().nested);
            assert_eq!(t.opens().len(), s.len() + 1);
        }
    }

    #[test]
    fn caps() {
        let big = QuasiDivisorSpace::build(&FiniteModule::parse("ring:Trunc(2,4)").unwrap());
        assert!(matches!(FiniteTopology::enumerate(&big), Err(OracleError::CapExceeded { .. })));
        let sierpinski = FiniteTopology::from_basis(2, vec![0b01, 0b11]).unwrap();
        assert!(!sierpinski.axiom(Axiom::T1).unwrap());
        assert!(FiniteTopology::from_basis(2, vec![0b01]).is_err());
    }
}
