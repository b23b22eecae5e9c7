use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdtop_core::module::{FiniteModule, ModuleSpec};
use qdtop_core::oracle::{cross_check, to_mask, Axiom, FiniteTopology};
use qdtop_core::topology::{PointSet, QuasiDivisorSpace};
use qdtop_core::verify::{generate_corpus, CorpusSpec, Instance};

fn space(s: &str) -> QuasiDivisorSpace {
    QuasiDivisorSpace::build(&FiniteModule::parse(s).unwrap())
}

fn corpus_spaces() -> Vec<(String, QuasiDivisorSpace)> {
    generate_corpus(&CorpusSpec::default())
        .unwrap()
        .into_iter()
        .filter_map(|i| match i {
            Instance::Module(m) => Some((m.to_string(), QuasiDivisorSpace::build(&FiniteModule::build(&m).unwrap()))),
            Instance::Ring(_) => None,
        })
        .collect()
}

#[test]
fn fast_predicates_match_oracle_on_corpus() {
    let mut checked = 0;
    for (name, sp) in corpus_spaces() {
        if sp.len() > 12 {
            continue;
        }
        let t = FiniteTopology::enumerate(&sp).unwrap();
        let mismatches = cross_check(&sp, &t).unwrap();
        assert!(mismatches.is_empty(), "{name}: {mismatches:?}");
        checked += 1;
    }
    assert!(checked > 500);
}

/// Random partial order on `n` points: a random relation below a random
/// permutation, closed transitively.
fn random_order(n: usize, seed: u64) -> Vec<Vec<bool>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
        for j in 0..n {
            if perm[i] < perm[j] && rng.gen_bool(0.3) {
                le[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    le
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_orders_agree_with_oracle(n in 1usize..9, seed in any::<u64>()) {
        let le = random_order(n, seed);
        let sp = QuasiDivisorSpace::from_order(labels(n), &le).unwrap();
        let t = FiniteTopology::from_basis(n, (0..n).map(|p| to_mask(&sp.up_set(p))).collect()).unwrap();
        let sep = sp.separation_report();
        prop_assert_eq!(sep.t1, t.axiom(Axiom::T1).unwrap());
        prop_assert_eq!(sep.t2, t.axiom(Axiom::T2).unwrap());
        prop_assert_eq!(sep.t3, t.axiom(Axiom::T3).unwrap());
        let con = sp.connectivity_report();
        prop_assert_eq!(con.connected, t.axiom(Axiom::Connected).unwrap());
        prop_assert_eq!(con.hyperconnected, t.axiom(Axiom::Hyperconnected).unwrap());
        prop_assert_eq!(con.ultraconnected, t.axiom(Axiom::Ultraconnected).unwrap());
        prop_assert!(t.axiom(Axiom::T0).unwrap());
    }

    #[test]
    fn closure_is_a_kuratowski_operator(n in 1usize..10, seed in any::<u64>(), a in any::<u16>(), b in any::<u16>()) {
        let sp = QuasiDivisorSpace::from_order(labels(n), &random_order(n, seed)).unwrap();
        let pick = |m: u16| -> PointSet { (0..n).filter(|i| m >> i & 1 == 1).collect() };
        let (x, y) = (pick(a), pick(b));
        let union: PointSet = x.union(&y).copied().collect();
        let joined: PointSet = sp.closure(&x).union(&sp.closure(&y)).copied().collect();
        prop_assert_eq!(sp.closure(&union), joined);
        prop_assert!(x.is_subset(&sp.closure(&x)));
        prop_assert_eq!(sp.closure(&sp.closure(&x)), sp.closure(&x));
        let all = sp.all_points();
        let complement: PointSet = all.difference(&x).copied().collect();
        let via_closure: PointSet = all.difference(&sp.closure(&complement)).copied().collect();
        prop_assert_eq!(sp.interior(&x), via_closure);
    }
}

#[test]
fn homeomorphism_examples() {
    assert!(space("Z:8").is_homeomorphic(&space("F2[x]:x^3")).unwrap());
    assert!(!space("Z:8").is_homeomorphic(&space("Z:6")).unwrap());
    assert!(space("Z:6").is_homeomorphic(&space("F2[x]:x^2+x")).unwrap());
    assert!(space("Z:7").is_homeomorphic(&space("Z:2")).unwrap());
}

#[test]
fn small_examples() {
    let z8 = space("Z:8");
    let (two, four) = (z8.point("[2]").unwrap(), z8.point("[4]").unwrap());
    assert_eq!(z8.basis_set(two).unwrap(), BTreeSet::from([two]));
    assert_eq!(z8.basis_set(four).unwrap(), BTreeSet::from([two, four]));
    let z12 = space("Z:12");
    assert_eq!(z12.len(), 4);
    assert_eq!(z12.hasse_edges().len(), 3);
    let trunc = space("ring:Trunc(2,3)");
    assert_eq!(trunc.len(), 7);
    assert!(trunc.separation_report().discrete);
    assert!(space("Z:7").is_empty());
    let sp = QuasiDivisorSpace::build(&FiniteModule::build(&ModuleSpec::integers(&[2, 8])).unwrap());
    assert!(!sp.separation_report().t1);
}
