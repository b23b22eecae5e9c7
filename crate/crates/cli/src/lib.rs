//! Front end shared by the `qdtop` binary and its tests.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use qdtop_core::module::{FiniteModule, ModuleError, StructuralPredicates};
use qdtop_core::oracle::{cross_check, Axiom, FiniteTopology, Mismatch, OracleError, StructureChecks};
use qdtop_core::ring::{FiniteRing, QuasiSecondClass, RingError};
use qdtop_core::text::ParseError;
use qdtop_core::topology::{ConnectivityReport, QuasiDivisorSpace, SeparationReport, TopologyError};
use qdtop_core::verify::{
    generate_corpus, CorpusError, CorpusSpec, Instance, RuleId, TheoremReport, UnknownRule, Verdict, Verifier,
    Witness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RULE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse '{text}' {source}")]
    Parse { text: String, source: ParseError },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Rule(#[from] UnknownRule),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Module(ModuleError::CapExceeded { .. })
            | CliError::Module(ModuleError::Ring(RingError::CapExceeded { .. }))
            | CliError::Ring(RingError::CapExceeded { .. })
            | CliError::Topology(TopologyError::CapExceeded { .. })
            | CliError::Oracle(OracleError::CapExceeded { .. })
            | CliError::Corpus(CorpusError::TooLarge) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

/// A parsed command-line instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    pub raw: String,
    pub parsed: Instance,
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.parsed.fmt(f)
    }
}

pub fn parse_spec(text: &str) -> Result<InstanceSpec, CliError> {
    let parsed = Instance::parse(text).map_err(|source| CliError::Parse {
        text: text.to_string(),
        source,
    })?;
    Ok(InstanceSpec {
        raw: text.to_string(),
        parsed,
    })
}

/// A boolean tied to the rule that relates it to the rest of the report.
#[derive(Debug, Clone, Serialize)]
pub struct Stated {
    pub value: bool,
    pub rule: RuleId,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub label: String,
    pub representative: String,
    pub members: Vec<String>,
    pub image: Vec<String>,
    pub image_size: usize,
    /// The basic open set `U_a`.
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingSummary {
    pub ring: String,
    pub order: usize,
    pub field: bool,
    pub local: bool,
    pub quasi_second_brute: Stated,
    pub classification: QuasiSecondClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnnihilatorSummary {
    pub generator: Option<String>,
    pub size: usize,
    pub maximal: bool,
    pub prime: bool,
    pub semiprime: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiSecondVerdict {
    pub value: bool,
    pub rule: RuleId,
    pub witness: Option<[String; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleLine {
    pub rule: RuleId,
    pub anchor: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSection {
    pub axioms: BTreeMap<String, Option<bool>>,
    pub mismatches: Vec<Mismatch>,
    pub agrees: bool,
    pub structure: StructureChecks,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub instance: String,
    pub acting_domain: String,
    pub module_order: usize,
    pub scalar_ring: String,
    pub scalar_ring_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_ring: Option<RingSummary>,
    pub points: usize,
    pub classes: Vec<ClassEntry>,
    pub hasse_edges: Vec<[String; 2]>,
    pub separation: SeparationReport,
    pub connectivity: ConnectivityReport,
    pub minimal_classes: Vec<String>,
    pub maximal_classes: Vec<String>,
    pub discrete: Stated,
    pub t1: Stated,
    pub hyperconnected: Stated,
    pub annihilator: AnnihilatorSummary,
    pub predicates: StructuralPredicates,
    pub second_module: bool,
    pub quasi_second: QuasiSecondVerdict,
    pub rules: Vec<RuleLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

fn ring_summary(r: &FiniteRing) -> RingSummary {
    RingSummary {
        ring: r.spec().to_string(),
        order: r.order(),
        field: r.is_field(),
        local: r.is_local().is_some(),
        quasi_second_brute: Stated {
            value: r.is_quasi_second_ring_brute(),
            rule: RuleId::R14,
        },
        classification: r.classify_quasi_second(),
    }
}

fn point_labels(space: &QuasiDivisorSpace, points: impl IntoIterator<Item = usize>) -> Vec<String> {
    points.into_iter().map(|p| space.label(p).to_string()).collect()
}

fn oracle_section(space: &QuasiDivisorSpace) -> Result<OracleSection, CliError> {
    let t = FiniteTopology::enumerate(space)?;
    let mut axioms = BTreeMap::new();
    for a in Axiom::ALL {
        let v = match t.axiom(a) {
            Ok(v) => Some(v),
            Err(OracleError::CapExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        axioms.insert(format!("{a:?}"), v);
    }
    let mismatches = cross_check(space, &t)?;
    Ok(OracleSection {
        axioms,
        agrees: mismatches.is_empty(),
        mismatches,
        structure: t.structure_checks(space),
    })
}

/// Builds the full analysis document for one instance. A bare ring is
/// analyzed as the cyclic module over itself.
pub fn cmd_analyze(spec: &InstanceSpec, with_oracle: bool) -> Result<AnalyzeReport, CliError> {
    let (module, instance) = match &spec.parsed {
        Instance::Module(m) => (FiniteModule::build(m)?, spec.parsed.clone()),
        Instance::Ring(r) => {
            let m = qdtop_core::module::ModuleSpec::CyclicOverRing { ring: r.clone() };
            (FiniteModule::build(&m)?, Instance::Module(m))
        }
    };
    let space = QuasiDivisorSpace::build(&module);
    let classes = space
        .classes()
        .iter()
        .enumerate()
        .map(|(p, c)| {
            Ok(ClassEntry {
                label: space.label(p).to_string(),
                representative: module.format_scalar(c.rep),
                members: c.members.iter().map(|&m| module.format_scalar(m)).collect(),
                image: module.format_submodule(&c.image),
                image_size: c.image.len(),
                basis: point_labels(&space, space.basis_set(p)?),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let sep = space.separation_report();
    let con = space.connectivity_report();
    let ann = module.annihilator();
    let verifier = Verifier::default();
    let rules = RuleId::ALL
        .iter()
        .filter_map(|&r| verifier.run_rule(r, &instance))
        .map(|o| RuleLine {
            rule: o.rule_id,
            anchor: o.rule_id.anchor(),
            verdict: o.verdict,
            witness: o.witness,
        })
        .collect();
    let qs = module.is_quasi_second();
    let witness = module
        .quasi_second_witness()
        .map(|(a, b)| [module.format_scalar(a), module.format_scalar(b)]);
    let second = module.is_second_module();
    let mut notes = Vec::new();
    if space.is_empty() {
        notes.push(if second {
            "empty space: second module".to_string()
        } else {
            "empty space".to_string()
        });
    }
    Ok(AnalyzeReport {
        instance: instance.to_string(),
        acting_domain: module.acting_domain().to_string(),
        module_order: module.size(),
        scalar_ring: module.scalars().spec().to_string(),
        scalar_ring_order: module.scalars().order(),
        base_ring: module.base_ring().map(ring_summary),
        points: space.len(),
        classes,
        hasse_edges: space
            .hasse_edges()
            .into_iter()
            .map(|(lo, hi)| [space.label(lo).to_string(), space.label(hi).to_string()])
            .collect(),
        separation: sep,
        connectivity: con,
        minimal_classes: point_labels(&space, space.minimal_classes()),
        maximal_classes: point_labels(&space, space.maximal_classes()),
        discrete: Stated {
            value: sep.discrete,
            rule: RuleId::R3,
        },
        t1: Stated {
            value: sep.t1,
            rule: RuleId::R2,
        },
        hyperconnected: Stated {
            value: con.hyperconnected,
            rule: RuleId::R5,
        },
        annihilator: AnnihilatorSummary {
            generator: ann.generator.as_ref().map(|g| g.to_string()),
            size: ann.ideal.len(),
            maximal: ann.maximal,
            prime: ann.prime,
            semiprime: ann.semiprime,
        },
        predicates: module.structural_predicates()?,
        second_module: second,
        quasi_second: QuasiSecondVerdict {
            value: qs,
            rule: RuleId::R2,
            witness,
        },
        rules,
        notes,
        oracle: if with_oracle {
            Some(oracle_section(&space)?)
        } else {
            None
        },
    })
}

fn braces(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(","))
}

/// Plain-text rendering of an analysis.
pub fn render_analyze_text(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "instance {}", r.instance);
    let _ = writeln!(
        s,
        "acting domain {}, |E| = {}, scalars {} ({} elements)",
        r.acting_domain, r.module_order, r.scalar_ring, r.scalar_ring_order
    );
    if let Some(b) = &r.base_ring {
        let _ = writeln!(
            s,
            "ring {} order {}: field {}, local {}, quasi second ring {} [{}], classification {:?}",
            b.ring, b.order, b.field, b.local, b.quasi_second_brute.value, b.quasi_second_brute.rule, b.classification
        );
    }
    let _ = writeln!(s, "points {}", r.points);
    for c in &r.classes {
        let _ = writeln!(
            s,
            "class {} rep {} members {}: aE = {} |aE|={} U = {}",
            c.label,
            c.representative,
            braces(&c.members),
            braces(&c.image),
            c.image_size,
            braces(&c.basis)
        );
    }
    for [lo, hi] in &r.hasse_edges {
        let _ = writeln!(s, "hasse {lo} -> {hi}");
    }
    let sp = &r.separation;
    let _ = writeln!(
        s,
        "separation T0 {} T1 {} [{}] T2 {} T3 {} discrete {} [{}] metrizable {}",
        sp.t0, r.t1.value, r.t1.rule, sp.t2, sp.t3, r.discrete.value, r.discrete.rule, sp.metrizable
    );
    let c = &r.connectivity;
    let _ = writeln!(
        s,
        "connectivity connected {} hyperconnected {} [{}] ultraconnected {} nested {} noetherian {}",
        c.connected, r.hyperconnected.value, r.hyperconnected.rule, c.ultraconnected, c.nested, c.noetherian
    );
    let _ = writeln!(s, "minimal {}", braces(&r.minimal_classes));
    let _ = writeln!(s, "maximal {}", braces(&r.maximal_classes));
    let a = &r.annihilator;
    let _ = writeln!(
        s,
        "annihilator {} ({} residues): maximal {} prime {} semiprime {}",
        a.generator.as_deref().unwrap_or("-"),
        a.size,
        a.maximal,
        a.prime,
        a.semiprime
    );
    let p = &r.predicates;
    let _ = writeln!(
        s,
        "predicates divisible {} simple {} uniserial {} multiplication {} comultiplication {} second {}",
        p.divisible, p.simple, p.uniserial, p.multiplication, p.comultiplication, r.second_module
    );
    let q = &r.quasi_second;
    match &q.witness {
        Some([x, y]) => {
            let _ = writeln!(s, "quasi second {} [{}] witness a={x} b={y}", q.value, q.rule);
        }
        None => {
            let _ = writeln!(s, "quasi second {} [{}]", q.value, q.rule);
        }
    }
    for l in &r.rules {
        let v = match l.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "vacuous",
        };
        let _ = writeln!(s, "rule {} {v}: {}", l.rule, l.anchor);
    }
    for n in &r.notes {
        let _ = writeln!(s, "note {n}");
    }
    if let Some(o) = &r.oracle {
        let ax: Vec<String> = o
            .axioms
            .iter()
            .map(|(k, v)| match v {
                Some(v) => format!("{k} {v}"),
                None => format!("{k} skipped"),
            })
            .collect();
        let _ = writeln!(s, "oracle {}", ax.join(", "));
        let _ = writeln!(
            s,
            "oracle agreement {} ({} mismatches), least neighborhoods {}, closure of unions {}, dense opens {}",
            o.agrees,
            o.mismatches.len(),
            o.structure.minimal_neighborhoods_ok,
            o.structure.closure_union_ok,
            o.structure.open_dense_contains_maximal_ok
        );
    }
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram in DOT; edges run from the smaller image to the larger.
pub fn cmd_export_dot(spec: &InstanceSpec) -> Result<String, CliError> {
    let module = match &spec.parsed {
        Instance::Module(m) => FiniteModule::build(m)?,
        Instance::Ring(r) => FiniteModule::build(&qdtop_core::module::ModuleSpec::CyclicOverRing { ring: r.clone() })?,
    };
    let space = QuasiDivisorSpace::build(&module);
    let mut s = String::from("digraph qdtop {\n");
    let _ = writeln!(s, "  label=\"{}\";", dot_escape(&spec.to_string()));
    if space.is_empty() {
        s.push_str("  // empty space: no nonzero proper images aE\n");
    }
    for (p, c) in space.classes().iter().enumerate() {
        let _ = writeln!(
            s,
            "  n{p} [label=\"{} |aE|={}\"];",
            dot_escape(space.label(p)),
            c.image.len()
        );
    }
    for (lo, hi) in space.hasse_edges() {
        let _ = writeln!(s, "  n{lo} -> n{hi};");
    }
    s.push_str("}\n");
    Ok(s)
}

/// Corpus bounds as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFlags {
    pub max_order: usize,
    pub summands: usize,
    pub min_modulus: u64,
    pub max_modulus: u64,
    pub poly_char: u64,
    pub poly_degree: usize,
    pub max_elements: usize,
}

impl Default for CorpusFlags {
    fn default() -> Self {
        let d = CorpusSpec::default();
        CorpusFlags {
            max_order: d.ring_max_order,
            summands: d.max_summands,
            min_modulus: d.int_min_modulus,
            max_modulus: d.int_max_modulus,
            poly_char: d.poly_characteristic,
            poly_degree: d.poly_max_degree,
            max_elements: d.max_elements,
        }
    }
}

impl CorpusFlags {
    pub fn spec(&self) -> CorpusSpec {
        CorpusSpec {
            int_min_modulus: self.min_modulus,
            int_max_modulus: self.max_modulus,
            max_summands: self.summands,
            poly_characteristic: self.poly_char,
            poly_max_degree: self.poly_degree,
            ring_max_order: self.max_order,
            max_elements: self.max_elements,
        }
    }

    fn label(&self) -> String {
        format!(
            "Z moduli {}..{}, F{}[x] degree <= {}, summands <= {}, |E| <= {}, rings <= {}",
            self.min_modulus, self.max_modulus, self.poly_char, self.poly_degree, self.summands, self.max_elements, self.max_order
        )
    }
}

pub fn cmd_corpus(flags: &CorpusFlags) -> Result<Vec<String>, CliError> {
    Ok(generate_corpus(&flags.spec())?.iter().map(|i| i.to_string()).collect())
}

/// Runs the verifier; `rules` of `None` means all 22.
pub fn cmd_verify(flags: &CorpusFlags, rules: Option<&str>) -> Result<TheoremReport, CliError> {
    run_verify(flags, rules, Verifier::default())
}

pub fn run_verify(flags: &CorpusFlags, rules: Option<&str>, verifier: Verifier) -> Result<TheoremReport, CliError> {
    let rules = match rules {
        Some(list) => RuleId::parse_list(list)?,
        None => RuleId::ALL.to_vec(),
    };
    let corpus = generate_corpus(&flags.spec())?;
    Ok(verifier.run_all(&corpus, &rules, &flags.label()))
}

pub fn report_json(report: &TheoremReport) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

/// One line per rule, for standard error.
pub fn render_verify_summary(report: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} {} corpus {} instances, fingerprint {}",
        report.meta.tool, report.meta.version, report.meta.instances, report.meta.fingerprint
    );
    for r in &report.rules {
        let _ = writeln!(
            s,
            "{:<4} pass {:>4} fail {:>3} vacuous {:>4}  {}",
            r.rule_id.to_string(),
            r.pass,
            r.fail,
            r.vacuous,
            r.rule_id.anchor()
        );
        for f in &r.failures {
            let summary = f.witness.as_ref().map_or("", |w| w.summary.as_str());
            let _ = writeln!(s, "     {} {}", f.instance, summary);
        }
    }
    let _ = writeln!(s, "total failures {}", report.total_failures());
    s
}
