//! Weights and Weyl-group combinatorics for unitary similitude groups with
//! signatures (r_τ, s_τ), one factor S_n per τ ∈ Φ.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke_cm::{cm_type_of, InfinityType};

/// Signatures (r_τ, s_τ) with r_τ + s_τ = n at every place τ ∈ Φ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompactShape {
    pub n: usize,
    pub places: Vec<(usize, usize)>,
}

impl CompactShape {
    pub fn new(n: usize, places: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(r, s)) = places.iter().find(|&&(r, s)| r + s != n) {
            return Err(Error::Domain(alloc::format!(
                "signature ({r},{s}) does not add up to {n}"
            )));
        }
        Ok(CompactShape { n, places })
    }

    pub fn uniform(n: usize, r: usize, e: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Domain(alloc::format!("r = {r} exceeds n = {n}")));
        }
        Ok(CompactShape {
            n,
            places: vec![(r, n - r); e],
        })
    }

    pub fn e(&self) -> usize {
        self.places.len()
    }

    /// d = Σ r_τ s_τ.
    pub fn d(&self) -> usize {
        self.places.iter().map(|&(r, s)| r * s).sum()
    }
}

/// μ = ((a_{τ,1}, …, a_{τ,n})_τ; a₀).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub rows: Vec<Vec<i64>>,
    pub a0: i64,
}

impl WeightVector {
    pub fn new(rows: Vec<Vec<i64>>, a0: i64) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::Dimension("weight rows differ in length".into()));
            }
        }
        Ok(WeightVector { rows, a0 })
    }

    /// μ_a = ((0,…,0); a).
    pub fn multiplier(n: usize, e: usize, a: i64) -> Self {
        WeightVector {
            rows: vec![vec![0; n]; e],
            a0: a,
        }
    }

    fn check(&self, shape: &CompactShape) -> Result<()> {
        if self.rows.len() != shape.e() || self.rows.iter().any(|r| r.len() != shape.n) {
            return Err(Error::Dimension(alloc::format!(
                "weight has shape {}x{}, expected {}x{}",
                self.rows.len(),
                self.rows.first().map_or(0, |r| r.len()),
                shape.e(),
                shape.n
            )));
        }
        Ok(())
    }
}

/// Element of ∏_τ S_n; `perms[τ][i]` is the image of i (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem {
    pub perms: Vec<Vec<usize>>,
}

fn perm_inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

fn perm_compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

impl WeylElem {
    pub fn new(perms: Vec<Vec<usize>>) -> Result<Self> {
        for p in &perms {
            let mut seen = vec![false; p.len()];
            for &x in p {
                if x >= p.len() || core::mem::replace(&mut seen[x], true) {
                    return Err(Error::Domain("component is not a permutation".into()));
                }
            }
        }
        Ok(WeylElem { perms })
    }

    pub fn identity(shape: &CompactShape) -> Self {
        WeylElem {
            perms: vec![(0..shape.n).collect(); shape.e()],
        }
    }

    /// Order reversal at every place.
    pub fn w0(shape: &CompactShape) -> Self {
        WeylElem {
            perms: vec![(0..shape.n).rev().collect(); shape.e()],
        }
    }

    /// Longest element of the compact Weyl group: reversal inside each block.
    pub fn w0_compact(shape: &CompactShape) -> Self {
        WeylElem {
            perms: shape
                .places
                .iter()
                .map(|&(r, _)| {
                    (0..shape.n)
                        .map(|i| {
                            if i < r {
                                r - 1 - i
                            } else {
                                shape.n - 1 - (i - r)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// w₀¹ = w_{0,c}·w₀, the longest element of W¹.
    pub fn w0_1(shape: &CompactShape) -> Self {
        Self::w0_compact(shape).compose(&Self::w0(shape))
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem {
            perms: self
                .perms
                .iter()
                .zip(&other.perms)
                .map(|(a, b)| perm_compose(a, b))
                .collect(),
        }
    }

    pub fn inverse(&self) -> WeylElem {
        WeylElem {
            perms: self.perms.iter().map(|p| perm_inverse(p)).collect(),
        }
    }

    /// 1-based images, for display.
    pub fn one_based(&self) -> Vec<Vec<usize>> {
        self.perms
            .iter()
            .map(|p| p.iter().map(|x| x + 1).collect())
            .collect()
    }
}

/// ξ(μ) = 2a₀ + Σ a_{τ,i}.
pub fn xi(mu: &WeightVector) -> i64 {
    2 * mu.a0 + mu.rows.iter().flatten().sum::<i64>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Full,
    Compact,
}

fn weakly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

pub fn is_dominant(mu: &WeightVector, shape: &CompactShape, kind: Dominance) -> bool {
    if mu.check(shape).is_err() {
        return false;
    }
    mu.rows
        .iter()
        .zip(&shape.places)
        .all(|(row, &(r, _))| match kind {
            Dominance::Full => weakly_decreasing(row),
            Dominance::Compact => weakly_decreasing(&row[..r]) && weakly_decreasing(&row[r..]),
        })
}

/// c(μ) = ((−a_{τ,n}, …, −a_{τ,1}); a₀ + Σ a).
pub fn conj_weight(mu: &WeightVector) -> WeightVector {
    WeightVector {
        rows: mu
            .rows
            .iter()
            .map(|r| r.iter().rev().map(|a| -a).collect())
            .collect(),
        a0: mu.a0 + mu.rows.iter().flatten().sum::<i64>(),
    }
}

/// μ^∨ = ((−a_{τ,n}, …, −a_{τ,1}); −a₀).
pub fn dual_weight(mu: &WeightVector) -> WeightVector {
    WeightVector {
        rows: mu
            .rows
            .iter()
            .map(|r| r.iter().rev().map(|a| -a).collect())
            .collect(),
        a0: -mu.a0,
    }
}

/// r-subsets of 0..n in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Minimal-length representatives: w⁻¹ increasing on {1..r_τ} and on
/// {r_τ+1..n}. Ordered lexicographically by the subsets w_τ⁻¹({1..r_τ}),
/// first place most significant.
pub fn enumerate_w1(shape: &CompactShape) -> Vec<WeylElem> {
    let n = shape.n;
    let per_place: Vec<Vec<Vec<usize>>> = shape
        .places
        .iter()
        .map(|&(r, _)| {
            combinations(n, r)
                .into_iter()
                .map(|sub| {
                    let mut inv = sub.clone();
                    inv.extend((0..n).filter(|i| !sub.contains(i)));
                    perm_inverse(&inv)
                })
                .collect()
        })
        .collect();
    let mut out = vec![WeylElem { perms: Vec::new() }];
    for choices in &per_place {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for w in &out {
            for c in choices {
                let mut perms = w.perms.clone();
                perms.push(c.clone());
                next.push(WeylElem { perms });
            }
        }
        out = next;
    }
    out
}

pub fn in_w1(w: &WeylElem, shape: &CompactShape) -> bool {
    w.perms.iter().zip(&shape.places).all(|(p, &(r, _))| {
        let inv = perm_inverse(p);
        inv[..r].windows(2).all(|x| x[0] < x[1]) && inv[r..].windows(2).all(|x| x[0] < x[1])
    })
}

/// Sum over places of inversion counts.
pub fn length(w: &WeylElem) -> usize {
    w.perms
        .iter()
        .map(|p| {
            let mut c = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        c += 1;
                    }
                }
            }
            c
        })
        .sum()
}

/// w♭ = w_{0,c}·w·w₀.
pub fn flat(w: &WeylElem, shape: &CompactShape) -> WeylElem {
    WeylElem::w0_compact(shape)
        .compose(w)
        .compose(&WeylElem::w0(shape))
}

/// Permutation action (σa)_i = a_{σ⁻¹(i)}.
fn act(p: &[usize], a: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len()];
    for (j, &x) in a.iter().enumerate() {
        out[p[j]] = x;
    }
    out
}

/// w*μ = w(μ+ρ) − ρ, computed in doubled coordinates.
pub fn dot_action(w: &WeylElem, mu: &WeightVector, shape: &CompactShape) -> Result<WeightVector> {
    mu.check(shape)?;
    if w.perms.len() != shape.e() || w.perms.iter().any(|p| p.len() != shape.n) {
        return Err(Error::Dimension(
            "Weyl element does not match the shape".into(),
        ));
    }
    let n = shape.n as i64;
    let rho2: Vec<i64> = (0..n).map(|i| n - 1 - 2 * i).collect();
    let rows = mu
        .rows
        .iter()
        .zip(&w.perms)
        .map(|(row, p)| {
            let shifted: Vec<i64> = row.iter().zip(&rho2).map(|(a, r)| 2 * a + r).collect();
            act(p, &shifted)
                .iter()
                .zip(&rho2)
                .map(|(x, r)| {
                    let v = x - r;
                    debug_assert!(v % 2 == 0);
                    v / 2
                })
                .collect()
        })
        .collect();
    Ok(WeightVector { rows, a0: mu.a0 })
}

/// λ♭ for compact-dominant λ.
pub fn lambda_flat(lambda: &WeightVector, shape: &CompactShape) -> Result<WeightVector> {
    lambda.check(shape)?;
    if !is_dominant(lambda, shape, Dominance::Compact) {
        return Err(Error::Domain("λ♭ needs a compact-dominant weight".into()));
    }
    let rows = lambda
        .rows
        .iter()
        .zip(&shape.places)
        .map(|(a, &(r, s))| {
            let (r_i, s_i) = (r as i64, s as i64);
            let mut out: Vec<i64> = a[..r].iter().rev().map(|x| -x - s_i).collect();
            out.extend(a[r..].iter().rev().map(|x| -x + r_i));
            out
        })
        .collect();
    Ok(WeightVector {
        rows,
        a0: xi(lambda) - lambda.a0,
    })
}

/// (p_λ, q_λ).
pub fn hodge_pq(lambda: &WeightVector, shape: &CompactShape) -> Result<(i64, i64)> {
    lambda.check(shape)?;
    let mut p = -lambda.a0;
    let mut q = -lambda.a0;
    for (row, &(r, _)) in lambda.rows.iter().zip(&shape.places) {
        p -= row[..r].iter().sum::<i64>();
        q -= row[r..].iter().sum::<i64>();
    }
    Ok((p, q))
}

/// μ(η) = ((n_τ − n_τ̄, …)_{τ∈Φ_η}; n Σ_{τ∈Φ_η} n_τ̄). A zero type gives the
/// zero weight on one row per conjugate pair.
pub fn mu_of_eta(eta: &InfinityType, n: usize) -> Result<WeightVector> {
    if eta
        .pairs()
        .iter()
        .all(|&(a, b)| eta.value(a) == 0 && eta.value(b) == 0)
    {
        return Ok(WeightVector::multiplier(n, eta.pairs().len(), 0));
    }
    let phi = cm_type_of(eta)?;
    let mut rows = Vec::new();
    let mut a0 = 0;
    for &t in &phi.phi {
        let bar = eta.value(eta.conj(t));
        rows.push(vec![eta.value(t) - bar; n]);
        a0 += n as i64 * bar;
    }
    Ok(WeightVector { rows, a0 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeIndex {
    pub w: WeylElem,
    pub length: usize,
    pub p: i64,
    pub q: i64,
}

/// For each w ∈ W¹ the pair (p_{w*μ}, i − ξ(μ) − p_{w*μ}). In top degree
/// i = d and for self-conjugate μ the relation q = p_{w♭*μ} is checked too;
/// it fails for general μ (e.g. ((2,1,0);1) on signature (3,0)).
pub fn hodge_decomposition_indices(
    mu: &WeightVector,
    shape: &CompactShape,
    i: i64,
) -> Result<Vec<HodgeIndex>> {
    if !is_dominant(mu, shape, Dominance::Full) {
        return Err(Error::Domain("μ must be dominant".into()));
    }
    let x = xi(mu);
    let d = shape.d() as i64;
    let self_conj = conj_weight(mu) == *mu;
    let mut out = Vec::new();
    for w in enumerate_w1(shape) {
        let (p, _) = hodge_pq(&dot_action(&w, mu, shape)?, shape)?;
        let q = i - x - p;
        if i == d && self_conj {
            let (pf, _) = hodge_pq(&dot_action(&flat(&w, shape), mu, shape)?, shape)?;
            if pf != q {
                return Err(Error::Domain(alloc::format!(
                    "q = {q} differs from p of the flat partner ({pf})"
                )));
            }
        }
        out.push(HodgeIndex {
            length: length(&w),
            w,
            p,
            q,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
