//! JSON scenario files.

use serde::{Deserialize, Serialize};

use period_ledger_core::hecke_cm::{is_critical_character, HeckeCharacterData};
use period_ledger_core::weights::{CompactShape, WeightVector};

/// Problems with a scenario file. They map to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioOptions {
    /// Seed for randomized sweeps; `PERIOD_LEDGER_SEED` overrides it.
    #[serde(default)]
    pub seed: Option<u64>,
    /// Include Deligne's conjecture as an axiom (default on).
    #[serde(default)]
    pub deligne: Option<bool>,
    /// Critical point used by `verify prediction` and `verify maintheorem`.
    #[serde(default)]
    pub m: Option<i64>,
    /// Largest rank in `verify` sweeps.
    #[serde(default)]
    pub dmax: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub n: usize,
    /// Number of places; defaults to the number of weight rows.
    #[serde(default)]
    pub e: Option<usize>,
    /// a_{τ,1} ≥ … ≥ a_{τ,n}, one row per place.
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub a0: i64,
    /// Infinity type (m_τ, m_τ̄) of ψ, one pair per place.
    pub psi: Vec<(i64, i64)>,
    /// Explicit signatures (r_τ, s_τ); otherwise derived from ψ.
    #[serde(default)]
    pub shape: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub options: ScenarioOptions,
}

/// A scenario after validation.
#[derive(Clone, Debug)]
pub struct Checked {
    pub scenario: Scenario,
    pub e: usize,
    pub mu: WeightVector,
    pub psi: HeckeCharacterData,
    pub shape: Option<CompactShape>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario, InputError> {
        serde_json::from_str(text).map_err(|err| {
            InputError(format!(
                "scenario line {}, column {}: {err}",
                err.line(),
                err.column()
            ))
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Scenario, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|err| InputError(format!("cannot read {}: {err}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn check(&self) -> Result<Checked, InputError> {
        let bad = |field: &str, msg: String| InputError(format!("field `{field}`: {msg}"));
        if self.n == 0 {
            return Err(bad("n", "must be at least 1".into()));
        }
        let e = self.e.unwrap_or(self.weights.len());
        if e == 0 {
            return Err(bad("e", "must be at least 1".into()));
        }
        if self.weights.len() != e {
            return Err(bad(
                "weights",
                format!("{} rows for e = {e}", self.weights.len()),
            ));
        }
        for (k, row) in self.weights.iter().enumerate() {
            if row.len() != self.n {
                return Err(bad(
                    &format!("weights[{k}]"),
                    format!("length {} differs from n = {}", row.len(), self.n),
                ));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad(
                    &format!("weights[{k}]"),
                    format!("{row:?} is not weakly decreasing"),
                ));
            }
        }
        if self.psi.len() != e {
            return Err(bad("psi", format!("{} pairs for e = {e}", self.psi.len())));
        }
        let psi = HeckeCharacterData::from_pairs("psi", &self.psi)
            .map_err(|err| bad("psi", err.to_string()))?;
        if !is_critical_character(&psi) {
            let k = self.psi.iter().position(|&(a, b)| a == b).unwrap_or(0);
            return Err(bad(
                "psi",
                format!(
                    "not critical: m_tau = m_taubar at place {} (pair {:?})",
                    k + 1,
                    self.psi[k]
                ),
            ));
        }
        let mu = WeightVector::new(self.weights.clone(), self.a0)
            .map_err(|err| bad("weights", err.to_string()))?;
        let shape = match &self.shape {
            None => None,
            Some(places) => {
                if places.len() != e {
                    return Err(bad(
                        "shape",
                        format!("{} signatures for e = {e}", places.len()),
                    ));
                }
                Some(
                    CompactShape::new(self.n, places.clone())
                        .map_err(|err| bad("shape", err.to_string()))?,
                )
            }
        };
        Ok(Checked {
            scenario: self.clone(),
            e,
            mu,
            psi,
            shape,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[1, 0]]}"#;

    #[test]
    fn parses_minimal() {
        let s = Scenario::from_json(WORKED).unwrap();
        let c = s.check().unwrap();
        assert_eq!(c.e, 1);
        assert!(c.shape.is_none());
        assert_eq!(c.psi.weight, 1);
    }

    #[test]
    fn reports_position_of_syntax_errors() {
        let err = Scenario::from_json("{\n  \"n\": 3,\n  \"wieghts\": []\n}").unwrap_err();
        assert!(err.0.contains("line 3"), "{err}");
        assert!(err.0.contains("wieghts"), "{err}");
    }

    #[test]
    fn rejects_bad_fields() {
        let s =
            Scenario::from_json(r#"{"n": 3, "weights": [[0, 1, -1]], "psi": [[1, 0]]}"#).unwrap();
        assert!(s.check().unwrap_err().0.contains("weights[0]"));
        let s =
            Scenario::from_json(r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[1, 1]]}"#).unwrap();
        assert!(s.check().unwrap_err().0.contains("not critical"));
        let s = Scenario::from_json(
            r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[1, 0]], "shape": [[2, 2]]}"#,
        )
        .unwrap();
        assert!(s.check().unwrap_err().0.contains("shape"));
    }
}
