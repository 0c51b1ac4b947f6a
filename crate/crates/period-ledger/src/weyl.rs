//! W¹ listing for `period-ledger weyl`.

use serde::Serialize;

use period_ledger_core::weights::{
    dot_action, enumerate_w1, flat, hodge_decomposition_indices, hodge_pq, is_dominant,
    lambda_flat, length, xi, CompactShape, Dominance, WeightVector,
};

use crate::scenario::InputError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylRow {
    /// One-based permutation per place.
    pub w: Vec<Vec<usize>>,
    pub length: usize,
    pub w_flat: Vec<Vec<usize>>,
    pub w_mu: (Vec<Vec<i64>>, i64),
    pub lambda_flat: (Vec<Vec<i64>>, i64),
    /// (p, q) of w*μ.
    pub pq: (i64, i64),
    /// Hodge index (p, d − ξ(μ) − p) in top degree.
    pub hodge: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylReport {
    pub shape: Vec<(usize, usize)>,
    pub mu: (Vec<Vec<i64>>, i64),
    pub xi: i64,
    pub d: usize,
    pub rows: Vec<WeylRow>,
}

fn pair(w: &WeightVector) -> (Vec<Vec<i64>>, i64) {
    (w.rows.clone(), w.a0)
}

fn input(err: impl std::fmt::Display) -> InputError {
    InputError(err.to_string())
}

pub fn weyl_report(shape: &CompactShape, mu: &WeightVector) -> Result<WeylReport, InputError> {
    if mu.rows.len() != shape.e() || mu.rows.iter().any(|r| r.len() != shape.n) {
        return Err(InputError(format!(
            "mu has {} rows, the shape needs {} rows of length {}",
            mu.rows.len(),
            shape.e(),
            shape.n
        )));
    }
    if !is_dominant(mu, shape, Dominance::Full) {
        return Err(InputError(format!(
            "mu {:?} is not dominant: rows must be weakly decreasing",
            mu.rows
        )));
    }
    let d = shape.d();
    let hodge = hodge_decomposition_indices(mu, shape, d as i64).map_err(input)?;
    let mut rows = Vec::new();
    for (w, h) in enumerate_w1(shape).into_iter().zip(hodge) {
        let lambda = dot_action(&w, mu, shape).map_err(input)?;
        rows.push(WeylRow {
            w: w.one_based(),
            length: length(&w),
            w_flat: flat(&w, shape).one_based(),
            lambda_flat: pair(&lambda_flat(&lambda, shape).map_err(input)?),
            pq: hodge_pq(&lambda, shape).map_err(input)?,
            w_mu: pair(&lambda),
            hodge: (h.p, h.q),
        });
    }
    Ok(WeylReport {
        shape: shape.places.clone(),
        mu: pair(mu),
        xi: xi(mu),
        d,
        rows,
    })
}

fn rows_str(v: &(Vec<Vec<i64>>, i64)) -> String {
    let rows: Vec<String> =
        v.0.iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
    format!("(({});{})", rows.join(")("), v.1)
}

fn perm_str(p: &[Vec<usize>]) -> String {
    p.iter()
        .map(|q| q.iter().map(|x| x.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("|")
}

impl WeylReport {
    pub fn render(&self) -> String {
        let shape: Vec<String> = self
            .shape
            .iter()
            .map(|(r, s)| format!("({r},{s})"))
            .collect();
        let mut out = format!(
            "shape {} mu={} xi={} d={} |W1|={}\n",
            shape.join(""),
            rows_str(&self.mu),
            self.xi,
            self.d,
            self.rows.len()
        );
        for r in &self.rows {
            out.push_str(&format!(
                "w={} l={} flat={} w*mu={} lambda_flat={} (p,q)=({},{}) hodge=({},{})\n",
                perm_str(&r.w),
                r.length,
                perm_str(&r.w_flat),
                rows_str(&r.w_mu),
                rows_str(&r.lambda_flat),
                r.pq.0,
                r.pq.1,
                r.hodge.0,
                r.hodge.1
            ));
        }
        out
    }
}

/// Places written `r,s` and separated by `;`, e.g. `2,1;3,0`.
pub fn parse_shape(text: &str) -> Result<CompactShape, InputError> {
    let mut places = Vec::new();
    for part in text.split(';') {
        let nums: Vec<usize> = part
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| InputError(format!("shape: cannot read {part:?} as r,s")))?;
        let [r, s] = nums[..] else {
            return Err(InputError(format!(
                "shape: {part:?} needs exactly two entries r,s"
            )));
        };
        places.push((r, s));
    }
    let n = places[0].0 + places[0].1;
    CompactShape::new(n, places).map_err(|e| InputError(format!("shape: {e}")))
}

/// Rows written `a1,...,an` and separated by `;`.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, InputError> {
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| InputError(format!("mu: cannot read {part:?} as integers")))
        })
        .collect()
}
