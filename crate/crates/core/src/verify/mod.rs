//! Corpus generation and rule execution with counterexample capture.

mod corpus;
mod report;
mod rules;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use corpus::{generate_corpus, monic_polys, ring_catalog, CorpusError, CorpusSpec, Instance, MAX_INSTANCES};
pub use report::{fingerprint, ReportMeta, RuleReport, TheoremReport};

use crate::module::FiniteModule;
use rules::Context;

/// A quasi-second predicate; swappable so the harness can be tested against
/// a deliberately broken one.
pub type QuasiSecondFn = fn(&FiniteModule) -> bool;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
    R15,
    R16,
    R17,
    R18,
    R19,
    R20,
    R21,
    R22,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule id '{0}'")]
pub struct UnknownRule(pub String);

impl RuleId {
    pub const ALL: [RuleId; 22] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R12,
        RuleId::R13,
        RuleId::R14,
        RuleId::R15,
        RuleId::R16,
        RuleId::R17,
        RuleId::R18,
        RuleId::R19,
        RuleId::R20,
        RuleId::R21,
        RuleId::R22,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// What the rule asserts.
    pub fn anchor(self) -> &'static str {
        match self {
            RuleId::R1 => "the space is T0",
            RuleId::R2 => "T1 iff quasi second",
            RuleId::R3 => "quasi second, all aE maximal, discrete, metrizable, T2 and T1 agree",
            RuleId::R4 => "multiplication module: uniserial iff nested",
            RuleId::R5 => "hyperconnected iff aE+bE lies in some xE != E",
            RuleId::R6 => "per point: U_a = {[a]} iff [a] isolated iff aE maximal",
            RuleId::R7 => "closure and interior formulas match the topology",
            RuleId::R8 => "open dense sets contain every maximal class; U_a is the least open neighborhood",
            RuleId::R9 => "quasi second implies every aE second; converse under semiprime annihilator",
            RuleId::R10 => "quasi second implies every ann(aE) maximal",
            RuleId::R11 => "comultiplication: quasi second iff all aE second iff all ann(aE) maximal",
            RuleId::R12 => "comultiplication, semiprime annihilator: quasi second iff simple or weak idempotent split",
            RuleId::R13 => "comultiplication, semiprime annihilator: T1 iff empty or two-point discrete",
            RuleId::R14 => "quasi second ring iff local with m^2 = 0 or a product of two fields",
            RuleId::R15 => "idealization of a field is a quasi second ring",
            RuleId::R16 => "submodules, quotients and summands of quasi second modules are quasi second",
            RuleId::R17 => "T3 iff every basic open set is closed",
            RuleId::R18 => "prime annihilator implies ultraconnected and T4",
            RuleId::R19 => "two-summand quasi second criterion",
            RuleId::R20 => "divisibility, gcd and lcm identities for basic open sets",
            RuleId::R21 => "a in W(E)# iff a is a nonzero nonunit modulo ann(E)",
            RuleId::R22 => "cyclic with prime annihilator: homeomorphic to the divisor topology of A/ann(E)",
        }
    }

    /// Ring instances feed R14 and R15; every other rule takes modules.
    pub fn applies_to(self, inst: &Instance) -> bool {
        matches!(
            (self, inst),
            (RuleId::R14 | RuleId::R15, Instance::Ring(_))
        ) || !matches!(self, RuleId::R14 | RuleId::R15) && matches!(inst, Instance::Module(_))
    }

    /// Parses a comma-separated list such as `R2,R14`.
    pub fn parse_list(text: &str) -> Result<Vec<RuleId>, UnknownRule> {
        let mut out: Vec<RuleId> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.number())
    }
}

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix(['R', 'r'])
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|n| (1..=22).contains(n) && !s[1..].starts_with('0'))
            .map(|n| RuleId::ALL[n - 1])
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedSet {
    pub name: String,
    pub elements: Vec<String>,
}

/// Data sufficient to recheck a violation by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub summary: String,
    pub scalars: Vec<String>,
    pub sets: Vec<NamedSet>,
}

impl Witness {
    pub fn new(summary: impl Into<String>) -> Self {
        Witness {
            summary: summary.into(),
            scalars: Vec::new(),
            sets: Vec::new(),
        }
    }

    pub fn scalar(mut self, s: impl Into<String>) -> Self {
        self.scalars.push(s.into());
        self
    }

    pub fn set(mut self, name: impl Into<String>, elements: Vec<String>) -> Self {
        self.sets.push(NamedSet {
            name: name.into(),
            elements,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub rule_id: RuleId,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Runs rules against instances.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    quasi_second: QuasiSecondFn,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            quasi_second: FiniteModule::is_quasi_second,
        }
    }
}

impl Verifier {
    pub fn with_quasi_second(quasi_second: QuasiSecondFn) -> Self {
        Verifier { quasi_second }
    }

    /// `None` when the rule does not take this kind of instance.
    pub fn run_rule(&self, rule: RuleId, inst: &Instance) -> Option<RuleOutcome> {
        let cx = Context::new(inst, self.quasi_second);
        self.run_in(&cx, rule, inst)
    }

    fn run_in(&self, cx: &Context, rule: RuleId, inst: &Instance) -> Option<RuleOutcome> {
        if !rule.applies_to(inst) {
            return None;
        }
        let (verdict, witness) = match cx.check(rule) {
            rules::Check::Pass => (Verdict::Pass, None),
            rules::Check::Vacuous => (Verdict::Vacuous, None),
            rules::Check::Fail(w) => (Verdict::Fail, Some(w)),
        };
        Some(RuleOutcome {
            rule_id: rule,
            instance: inst.to_string(),
            verdict,
            witness,
        })
    }

    /// Evaluates `rules` over `corpus` in parallel; output order follows the
    /// corpus order.
    pub fn run_all(&self, corpus: &[Instance], rules: &[RuleId], corpus_label: &str) -> TheoremReport {
        let per_instance: Vec<Vec<RuleOutcome>> = corpus
            .par_iter()
            .map(|inst| {
                let cx = Context::new(inst, self.quasi_second);
                rules.iter().filter_map(|&r| self.run_in(&cx, r, inst)).collect()
            })
            .collect();
        TheoremReport::assemble(corpus, rules, corpus_label, per_instance)
    }
}
