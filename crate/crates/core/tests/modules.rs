use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use qdtop_core::module::{FiniteModule, ModuleSpec};
use qdtop_core::scalar::{Poly, Scalar, ScalarDomain};
use qdtop_core::verify::{generate_corpus, CorpusSpec, Instance};

fn module(s: &str) -> FiniteModule {
    FiniteModule::parse(s).unwrap()
}

/// Classes of W(E)# straight from the definition: images of every residue,
/// keeping the nonzero proper ones and grouping equal images.
fn classes_by_definition(e: &FiniteModule) -> Vec<(usize, BTreeSet<usize>)> {
    let mut groups: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    for s in e.scalars().elements() {
        let image: BTreeSet<usize> = e.elements().map(|x| e.act(s, x)).collect();
        if image.len() > 1 && image.len() < e.size() {
            groups.entry(image).or_insert(s);
        }
    }
    let mut out: Vec<(usize, BTreeSet<usize>)> = groups.into_iter().map(|(img, rep)| (rep, img)).collect();
    out.sort();
    out
}

#[test]
fn classes_match_definition_on_corpus() {
    let corpus = generate_corpus(&CorpusSpec::default()).unwrap();
    for inst in corpus {
        let Instance::Module(spec) = inst else { continue };
        let e = FiniteModule::build(&spec).unwrap();
        let fast: Vec<(usize, BTreeSet<usize>)> = e
            .scalar_classes()
            .into_iter()
            .map(|c| (c.rep, c.image.elements().iter().copied().collect()))
            .collect();
        assert_eq!(fast, classes_by_definition(&e), "{spec}");
    }
}

/// Subgroup count of a finite abelian group by brute closure of every subset
/// of generators of size at most two.
fn brute_submodule_count(e: &FiniteModule) -> usize {
    let mut seen = BTreeSet::new();
    for a in e.elements() {
        for b in e.elements() {
            let n = e.sum(&e.generated_by(a), &e.generated_by(b));
            seen.insert(n.elements().to_vec());
        }
    }
    seen.len()
}

#[test]
fn lattice_sizes() {
    assert_eq!(module("Z:2,2").submodules().unwrap().len(), 5);
    assert_eq!(module("Z:4,2").submodules().unwrap().len(), 8);
    assert_eq!(module("Z:2,2,2").submodules().unwrap().len(), 16);
    assert_eq!(module("Z:12").submodules().unwrap().len(), 6);
    for s in ["Z:4,2", "Z:6,2", "Z:3,9", "F2[x]:x,x^2", "ring:Trunc(2,2)"] {
        let e = module(s);
        assert_eq!(e.submodules().unwrap().len(), brute_submodule_count(&e), "{s}");
    }
}

#[test]
fn quasi_second_examples() {
    let z8 = module("Z:8");
    assert!(!z8.is_quasi_second());
    let (a, b) = z8.quasi_second_witness().unwrap();
    assert_eq!((z8.format_scalar(a), z8.format_scalar(b)), ("2".into(), "4".into()));
    let z4 = module("Z:4");
    assert!(z4.is_quasi_second() && !z4.is_second_module());
    assert!(module("Z:7").is_second_module());
    assert!(module("Z:6").is_quasi_second());
    assert!(module("ring:Trunc(2,3)").is_quasi_second());
    assert!(!module("Z:12").is_quasi_second());
}

#[test]
fn residue_membership_matches_definition() {
    // a in W(E)# iff a is a nonzero nonunit modulo ann(E)
    for s in ["Z:12", "Z:2,4", "Z:9", "Z:6,10"] {
        let e = module(s);
        let n = e.annihilator().generator.unwrap().to_u64().unwrap() as i64;
        for a in -30i64..30 {
            let img = e.image_of_scalar(&Scalar::from(a)).unwrap();
            let member = !img.is_zero() && img.len() != e.size();
            let r = a.rem_euclid(n);
            let unit = num_integer::Integer::gcd(&r, &n) == 1;
            assert_eq!(member, r != 0 && !unit, "{s} at {a}");
        }
    }
}

fn int_module() -> impl Strategy<Value = ModuleSpec> {
    proptest::collection::vec(2i64..30, 1..4).prop_map(|m| ModuleSpec::integers(&m))
}

fn poly_module() -> impl Strategy<Value = ModuleSpec> {
    let poly = proptest::collection::vec(0u64..3, 1..4).prop_map(|mut c| {
        c.push(1);
        Scalar::Poly(Poly::new(3, c))
    });
    proptest::collection::vec(poly, 1..3).prop_map(|moduli| ModuleSpec::DirectSumCyclic {
        domain: ScalarDomain::PolyOverPrimeField { p: 3 },
        moduli,
    })
}

proptest! {
    #[test]
    fn spec_round_trip(spec in prop_oneof![int_module(), poly_module()]) {
        let text = spec.to_string();
        let back = ModuleSpec::parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn spacing_is_ignored(spec in int_module()) {
        let text = spec.to_string().replace(',', " , ").replace(':', " : ");
        prop_assert_eq!(ModuleSpec::parse(&text).unwrap(), spec);
    }
}
