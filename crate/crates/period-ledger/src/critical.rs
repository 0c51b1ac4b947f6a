//! Critical-value report for a scenario.

use serde::Serialize;

use period_ledger_core::critical_values::{
    admissible_m_range, assign_signatures, critical_set, critical_set_oracle, gamma_factor,
    profile_from_gl_weights,
};
use period_ledger_core::hecke_cm::{chi_from_psi, rm_hodge_types};
use period_ledger_core::weights::CompactShape;

use crate::scenario::{Checked, InputError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaceReport {
    pub place: usize,
    pub hodge: Vec<i64>,
    pub rm_types: (i64, i64),
    pub t: i64,
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub n: usize,
    pub e: usize,
    pub motive_weight: i64,
    pub psi_weight: i64,
    pub chi_weight: i64,
    pub places: Vec<PlaceReport>,
    pub definite: bool,
    pub upsilon1: i64,
    pub upsilon2: i64,
    pub critical_set: Vec<i64>,
    /// Critical points s = m + w written as m.
    pub motivic_set: Vec<i64>,
    pub gamma_shifts: Vec<i64>,
    pub oracle_agrees: bool,
    pub admissible_lower: i64,
    pub admissible_upper: Option<i64>,
    pub admissible: Option<Vec<i64>>,
    pub theorem_grade: Option<Vec<i64>>,
    /// Upper end of the admissible range equals υ⁽²⁾ − w.
    pub upper_bound_matches: Option<bool>,
    pub notes: Vec<String>,
}

fn input(field: &str, err: impl std::fmt::Display) -> InputError {
    InputError(format!("{field}: {err}"))
}

pub fn critical_report(c: &Checked) -> Result<CriticalReport, InputError> {
    let n = c.scenario.n;
    let profile = profile_from_gl_weights(&c.mu.rows, n).map_err(|e| input("weights", e))?;
    let chi = chi_from_psi(&c.psi).map_err(|e| input("psi", e))?;
    let types = (0..c.e)
        .map(|k| rm_hodge_types(&chi, k))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| input("psi", e))?;
    let asg = assign_signatures(&profile, &types).map_err(|e| input("psi", e))?;
    let assigned: Vec<(usize, usize)> = asg.r.iter().map(|&r| (r, n - r)).collect();
    if let Some(shape) = &c.shape {
        if shape.places != assigned {
            return Err(InputError(format!(
                "field `shape`: {:?} differs from the signatures {:?} forced by psi",
                shape.places, assigned
            )));
        }
    }
    let shape = CompactShape::new(n, assigned.clone()).map_err(|e| input("shape", e))?;
    let range = critical_set(&profile, &types, &asg).map_err(|e| input("weights", e))?;
    let gamma = gamma_factor(&profile, &types, &asg).map_err(|e| input("weights", e))?;
    let oracle = critical_set_oracle(&profile, &types).map_err(|e| input("weights", e))?;
    let w = c.psi.weight;
    let adm = admissible_m_range(&c.mu, &c.psi.infinity, &shape).map_err(|e| input("psi", e))?;
    let mut notes = Vec::new();
    if asg.is_definite() {
        notes.push("definite signature".to_string());
    }
    if range.is_empty() {
        notes.push("no critical values".to_string());
    }
    let places = (0..c.e)
        .map(|k| PlaceReport {
            place: k + 1,
            hodge: profile.p[k].clone(),
            rm_types: (types[k].p1, types[k].p2),
            t: types[k].t,
            r: assigned[k].0,
            s: assigned[k].1,
        })
        .collect();
    Ok(CriticalReport {
        n,
        e: c.e,
        motive_weight: profile.w,
        psi_weight: w,
        chi_weight: chi.weight,
        places,
        definite: asg.is_definite(),
        upsilon1: range.upsilon1,
        upsilon2: range.upsilon2,
        critical_set: range.values(),
        motivic_set: range.shift(-w).values(),
        gamma_shifts: gamma,
        oracle_agrees: oracle == range.values(),
        admissible_lower: adm.lower,
        admissible_upper: adm.upper,
        admissible: adm.values(),
        theorem_grade: adm.theorem_values(),
        upper_bound_matches: adm.upper.map(|u| u == range.upsilon2 - w),
        notes,
    })
}

fn set(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl CriticalReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!(
            "scenario n={} e={} w(M)={} w(psi)={} w(chi)={}",
            self.n, self.e, self.motive_weight, self.psi_weight, self.chi_weight
        ));
        for p in &self.places {
            let hodge: Vec<String> = p.hodge.iter().map(|x| x.to_string()).collect();
            line(format!(
                "place {}: p=({}) RM(chi)=({},{}) t={} r={} s={}",
                p.place,
                hodge.join(","),
                p.rm_types.0,
                p.rm_types.1,
                p.t,
                p.r,
                p.s
            ));
        }
        line(format!(
            "upsilon1={} upsilon2={}",
            self.upsilon1, self.upsilon2
        ));
        line(format!("critical set {}", set(&self.critical_set)));
        line(format!("motivic critical set {}", set(&self.motivic_set)));
        line(format!("gamma shifts {:?}", self.gamma_shifts));
        line(format!("oracle agrees: {}", yes(self.oracle_agrees)));
        match &self.admissible {
            Some(v) => line(format!(
                "admissible m {} ({} <= m <= {})",
                set(v),
                self.admissible_lower,
                self.admissible_upper.unwrap_or_default()
            )),
            None => line(format!(
                "admissible m >= {} (no upper bound)",
                self.admissible_lower
            )),
        }
        if let Some(v) = &self.theorem_grade {
            line(format!("theorem-grade m {}", set(v)));
        }
        if let Some(b) = self.upper_bound_matches {
            line(format!("upper bound = upsilon2 - w: {}", yes(b)));
        }
        for note in &self.notes {
            line(format!("note: {note}"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::Scenario;

    fn report(json: &str) -> Result<CriticalReport, InputError> {
        critical_report(&Scenario::from_json(json).unwrap().check().unwrap())
    }

    #[test]
    fn worked_scenario() {
        let r = report(r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[1, 0]]}"#).unwrap();
        assert_eq!((r.places[0].r, r.places[0].s), (2, 1));
        assert_eq!(r.motivic_set, vec![1, 2]);
        assert_eq!(r.admissible, Some(vec![2]));
        assert_eq!(r.upper_bound_matches, Some(true));
        assert!(r.oracle_agrees && !r.definite);
    }

    #[test]
    fn definite_scenario() {
        let r = report(r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[4, 0]]}"#).unwrap();
        assert_eq!((r.places[0].r, r.places[0].s), (3, 0));
        assert!(r.notes.iter().any(|x| x == "definite signature"));
    }

    #[test]
    fn shape_must_match() {
        let err =
            report(r#"{"n": 3, "weights": [[1, 0, -1]], "psi": [[1, 0]], "shape": [[3, 0]]}"#)
                .unwrap_err();
        assert!(err.0.contains("shape"));
    }
}
