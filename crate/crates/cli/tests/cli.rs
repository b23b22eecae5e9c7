use std::process::{Command, Output};

use proptest::prelude::*;

use qdtop::{cmd_analyze, cmd_export_dot, parse_spec, CliError};
use qdtop_core::module::ModuleSpec;
use qdtop_core::verify::Instance;

fn qdtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdtop")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spec_parsing() {
    let z8 = parse_spec("Z:8").unwrap();
    assert_eq!(z8.parsed, Instance::Module(ModuleSpec::integers(&[8])));
    let t = parse_spec("ring:Trunc(2,3)").unwrap();
    assert!(matches!(t.parsed, Instance::Module(ModuleSpec::CyclicOverRing { .. })));
    let err = parse_spec("Z:1").unwrap_err();
    assert!(err.to_string().contains("unit"), "{err}");
    assert_eq!(err.exit_code(), 2);
    for bad in ["F4[x]:x", "F2[x]:x^", "Zn(", "Q:3", ""] {
        assert!(matches!(parse_spec(bad), Err(CliError::Parse { .. })), "{bad}");
    }
    let err = parse_spec("Z:8,,2").unwrap_err();
    assert!(err.to_string().contains("offset 4"), "{err}");
}

#[test]
fn analyze_reports() {
    let z7 = cmd_analyze(&parse_spec("Z:7").unwrap(), false).unwrap();
    assert_eq!(z7.points, 0);
    assert!(z7.notes.iter().any(|n| n.contains("second module")));
    let z8 = cmd_analyze(&parse_spec("Z:8").unwrap(), true).unwrap();
    let oracle = z8.oracle.unwrap();
    assert!(oracle.agrees);
    assert_eq!(oracle.axioms["T1"], Some(false));
    assert!(!z8.quasi_second.value);
    assert_eq!(z8.quasi_second.witness, Some(["2".to_string(), "4".to_string()]));
    let bare = cmd_analyze(&parse_spec("Zn(4)").unwrap(), false).unwrap();
    assert_eq!(bare.instance, "ring:Zn(4)");
}

#[test]
fn dot_export() {
    let z8 = cmd_export_dot(&parse_spec("Z:8").unwrap()).unwrap();
    assert!(z8.starts_with("digraph qdtop {"));
    assert!(z8.contains("n1 [label=\"[4] |aE|=2\"]"));
    assert!(z8.contains("n1 -> n0;"));
    let z12 = cmd_export_dot(&parse_spec("Z:12").unwrap()).unwrap();
    assert_eq!(z12.matches("[label=").count(), 4);
    assert_eq!(z12.matches(" -> ").count(), 3);
    let z7 = cmd_export_dot(&parse_spec("Z:7").unwrap()).unwrap();
    assert!(z7.contains("//") && !z7.contains("->"));
}

#[test]
fn binary_exit_codes() {
    let ok = qdtop(&["analyze", "Z:8"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("separation T0 true T1 false"));
    assert_eq!(qdtop(&["analyze", "Z:1"]).status.code(), Some(2));
    assert_eq!(qdtop(&["analyze", "Z:5000"]).status.code(), Some(3));
    assert_eq!(qdtop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qdtop(&["verify", "--rules", "R40"]).status.code(), Some(2));
    assert_eq!(qdtop(&["verify", "--min-modulus", "1"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["verify", "--rules", "R2,R14", "--max-modulus", "9", "--summands", "1", "--max-order", "16"];
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let o = qdtop(&with_out);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    let ids: Vec<&str> = json["rules"].as_array().unwrap().iter().map(|r| r["rule_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["R2", "R14"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("total failures 0"));
    // byte-identical on rerun
    assert_eq!(stdout(&qdtop(&args)), text);
}

#[test]
fn empty_corpus_is_all_zero() {
    let o = qdtop(&["verify", "--max-modulus", "1", "--poly-degree", "0", "--max-order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rules = json["rules"].as_array().unwrap();
    assert_eq!(rules.len(), 22);
    assert!(rules.iter().all(|r| r["pass"] == 0 && r["fail"] == 0 && r["vacuous"] == 0));
}

#[test]
fn corpus_listing() {
    let o = qdtop(&["corpus", "--max-order", "8"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    for want in ["Z:6", "Z:8", "Z:2,4", "F2[x]:x^2+x", "Zn(8)", "Trunc(2,2)"] {
        assert!(lines.iter().any(|l| l == want), "{want}");
    }
    assert!(!lines.iter().any(|l| l == "Zn(9)"));
}

proptest! {
    #[test]
    fn instance_text_round_trips(moduli in proptest::collection::vec(2u64..40, 1..4), ring in 0usize..5) {
        let rings = ["Zn(12)", "GF(2,x^2+x+1)", "Trunc(3,1)", "Prod(GF(2),Zn(4))", "Ideal(GF(3),2)"];
        let texts = [
            format!("Z:{}", moduli.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
            format!("ring:{}", rings[ring]),
            rings[ring].to_string(),
        ];
        for t in texts {
            let spec = parse_spec(&t).unwrap();
            let canonical = spec.to_string();
            prop_assert_eq!(parse_spec(&canonical).unwrap().parsed, spec.parsed);
        }
    }
}
