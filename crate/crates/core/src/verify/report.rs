use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{Instance, RuleId, RuleOutcome, Verdict};

/// Hex SHA-256 over the instance texts, one per line.
pub fn fingerprint(corpus: &[Instance]) -> String {
    let mut h = Sha256::new();
    for inst in corpus {
        h.update(inst.to_string().as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportMeta {
    pub tool: String,
    pub version: String,
    pub corpus: String,
    pub fingerprint: String,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleReport {
    pub rule_id: RuleId,
    pub anchors: Vec<String>,
    /// Instances the rule applies to.
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub failures: Vec<RuleOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub meta: ReportMeta,
    pub rules: Vec<RuleReport>,
}

impl TheoremReport {
    pub(crate) fn assemble(
        corpus: &[Instance],
        rules: &[RuleId],
        corpus_label: &str,
        per_instance: Vec<Vec<RuleOutcome>>,
    ) -> Self {
        let mut reports: Vec<RuleReport> = rules
            .iter()
            .map(|&r| RuleReport {
                rule_id: r,
                anchors: vec![r.anchor().to_string()],
                instances: 0,
                pass: 0,
                fail: 0,
                vacuous: 0,
                failures: Vec::new(),
            })
            .collect();
        for outcome in per_instance.into_iter().flatten() {
            let Some(rep) = reports.iter_mut().find(|r| r.rule_id == outcome.rule_id) else {
                continue;
            };
            rep.instances += 1;
            match outcome.verdict {
                Verdict::Pass => rep.pass += 1,
                Verdict::Vacuous => rep.vacuous += 1,
                Verdict::Fail => {
                    rep.fail += 1;
                    rep.failures.push(outcome);
                }
            }
        }
        TheoremReport {
            meta: ReportMeta {
                tool: "qdtop".into(),
                version: env!("CARGO_PKG_VERSION").into(),
                corpus: corpus_label.into(),
                fingerprint: fingerprint(corpus),
                instances: corpus.len(),
            },
            rules: reports,
        }
    }

    pub fn total_failures(&self) -> usize {
        self.rules.iter().map(|r| r.fail).sum()
    }

    pub fn rule(&self, id: RuleId) -> Option<&RuleReport> {
        self.rules.iter().find(|r| r.rule_id == id)
    }
}
