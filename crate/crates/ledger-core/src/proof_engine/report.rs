//! Step-labelled verification records.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ledger::LatticeOutcome;
use crate::symlaurent::{LaurentPoly, Monomial, Rat, SymbolTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub label: String,
    pub claim: String,
    pub anchor: String,
    pub passed: bool,
    /// Quotient monomial, residual or a short note.
    pub detail: String,
    pub certificate: Option<LatticeOutcome>,
}

impl Step {
    pub fn note(label: &str, claim: &str, anchor: &str, passed: bool, detail: String) -> Step {
        Step {
            label: label.to_string(),
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            passed,
            detail,
            certificate: None,
        }
    }

    /// Records a proportionality test `lhs = c·u·rhs`.
    pub fn proportional(
        label: &str,
        claim: &str,
        anchor: &str,
        found: Option<(Rat, Monomial)>,
        table: &SymbolTable,
    ) -> Step {
        let (passed, detail) = match found {
            Some((c, u)) => {
                let q = LaurentPoly::monomial(u).scale(&c);
                (true, alloc::format!("quotient {}", q.to_canonical(table)))
            }
            None => (false, "not proportional up to units".to_string()),
        };
        Step::note(label, claim, anchor, passed, detail)
    }

    /// Records an exact polynomial identity; on failure the difference is kept.
    pub fn identity(
        label: &str,
        claim: &str,
        anchor: &str,
        lhs: &LaurentPoly,
        rhs: &LaurentPoly,
        table: &SymbolTable,
    ) -> Step {
        let diff = lhs - rhs;
        let passed = diff.is_zero();
        let detail = if passed {
            "exact".to_string()
        } else {
            alloc::format!("lhs - rhs = {}", diff.to_canonical(table))
        };
        Step::note(label, claim, anchor, passed, detail)
    }

    /// A lattice membership that is expected to hold (`expect_member`) or to
    /// fail, as for negative controls.
    pub fn lattice(
        label: &str,
        claim: &str,
        anchor: &str,
        outcome: LatticeOutcome,
        expect_member: bool,
    ) -> Step {
        let passed = outcome.member == expect_member;
        let detail = if outcome.member {
            alloc::format!("member; {}", CombinationDisplay(&outcome))
        } else {
            alloc::format!("residual {}", outcome.residual)
        };
        Step {
            label: label.to_string(),
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            passed,
            detail,
            certificate: Some(outcome),
        }
    }
}

struct CombinationDisplay<'a>(&'a LatticeOutcome);

impl fmt::Display for CombinationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.combination.is_empty() {
            f.write_str("units only")?;
        }
        for (i, (name, k)) in self.0.combination.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{k}*{name}")?;
        }
        if !self.0.unit_part.is_one() {
            write!(f, " (units {})", self.0.unit_part)?;
        }
        Ok(())
    }
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim_id: String,
    pub params: Vec<(String, i64)>,
    pub anchor: String,
    pub steps: Vec<Step>,
}

impl Verdict {
    pub fn new(claim_id: &str, params: &[(&str, i64)], anchor: &str) -> Verdict {
        Verdict {
            claim_id: claim_id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            anchor: anchor.to_string(),
            steps: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.steps.is_empty() && self.steps.iter().all(|s| s.passed)
    }

    pub fn first_failure(&self) -> Option<&Step> {
        self.steps.iter().find(|s| !s.passed)
    }

    pub fn step(&self, label: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.label == label)
    }

    pub fn push(&mut self, step: Step) -> bool {
        let ok = step.passed;
        self.steps.push(step);
        ok
    }
}
