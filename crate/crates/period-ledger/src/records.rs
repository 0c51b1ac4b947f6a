//! Serializable verification records.

use serde::Serialize;

use period_ledger_core::proof_engine::{Step, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub member: bool,
    /// (axiom, multiplicity) with the multiplicity printed exactly.
    pub combination: Vec<(String, String)>,
    pub unit_part: String,
    pub residual: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unusable: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub label: String,
    pub claim: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub claim_id: String,
    pub params: Vec<(String, i64)>,
    pub passed: bool,
    pub anchor: String,
    pub steps: Vec<StepRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl From<&Step> for StepRecord {
    fn from(s: &Step) -> Self {
        StepRecord {
            label: s.label.clone(),
            claim: s.claim.clone(),
            anchor: s.anchor.clone(),
            passed: s.passed,
            detail: s.detail.clone(),
            certificate: s.certificate.as_ref().map(|c| Certificate {
                member: c.member,
                combination: c
                    .combination
                    .iter()
                    .map(|(n, k)| (n.clone(), k.to_string()))
                    .collect(),
                unit_part: c.unit_part.to_string(),
                residual: c.residual.to_string(),
                unusable: c.unusable.clone(),
            }),
        }
    }
}

impl Record {
    pub fn from_verdict(v: &Verdict, wall_time_ms: Option<f64>) -> Record {
        Record {
            claim_id: v.claim_id.clone(),
            params: v.params.clone(),
            passed: v.passed(),
            anchor: v.anchor.clone(),
            steps: v.steps.iter().map(StepRecord::from).collect(),
            wall_time_ms,
        }
    }

    /// Record for a run that was refused before any step.
    pub fn refused(claim_id: &str, params: &[(&str, i64)], reason: &str) -> Record {
        Record {
            claim_id: claim_id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            passed: false,
            anchor: String::new(),
            steps: vec![StepRecord {
                label: "precondition".into(),
                claim: "inputs are admissible".into(),
                anchor: String::new(),
                passed: false,
                detail: reason.to_string(),
                certificate: None,
            }],
            wall_time_ms: None,
        }
    }

    pub fn header(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, x)| format!("{k}={x}"))
            .collect();
        let mut s = format!(
            "{} {} [{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim_id,
            params.join(",")
        );
        if let Some(t) = self.wall_time_ms {
            s.push_str(&format!(" {t:.1}ms"));
        }
        s
    }

    /// One header line, then one line per step when `steps` is set or the
    /// record failed.
    pub fn render(&self, steps: bool) -> String {
        let mut out = self.header();
        out.push('\n');
        if steps || !self.passed {
            for st in &self.steps {
                out.push_str(&format!(
                    "  {} {}: {} [{}] {}\n",
                    if st.passed { "ok " } else { "BAD" },
                    st.label,
                    st.claim,
                    st.anchor,
                    st.detail
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use period_ledger_core::proof_engine::verify_thmfact;

    #[test]
    fn thmfact_record_round_trip() {
        let v = verify_thmfact(3, 2, 2).unwrap();
        let r = Record::from_verdict(&v, None);
        assert!(r.passed);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json.get("wall_time_ms").is_none());
        let last = r.steps.last().unwrap();
        assert_eq!(last.label, "thmfact");
        assert!(last.certificate.as_ref().unwrap().member);
        assert!(r.render(true).lines().count() == r.steps.len() + 1);
        assert_eq!(r.render(false).lines().count(), 1);
    }

    #[test]
    fn refused_record_fails() {
        let r = Record::refused("thmfact", &[("d", 3)], "bad");
        assert!(!r.passed);
        assert!(r.render(false).contains("bad"));
    }
}
