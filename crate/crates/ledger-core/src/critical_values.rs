//! Hodge combinatorics of M ⊗ RM(χ): signatures, critical integers, Γ-factor
//! shifts and the admissible twist range on the automorphic side.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke_cm::{cm_type_of, InfinityType, RmTypes};
use crate::hodge_periods::HodgeProfile;
use crate::weights::{CompactShape, WeightVector};

/// p_i with the sentinels p_0 = +∞ and p_{d+1} = −∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extended {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Extended {
    fn add(self, k: i64) -> Extended {
        match self {
            Extended::Finite(x) => Extended::Finite(x + k),
            other => other,
        }
    }
}

/// 1-based p_i(σ) extended by the sentinels.
pub fn p_ext(p: &[i64], i: usize) -> Extended {
    if i == 0 {
        Extended::PosInf
    } else if i > p.len() {
        Extended::NegInf
    } else {
        Extended::Finite(p[i - 1])
    }
}

pub fn profile_from_gl_weights(a: &[Vec<i64>], n: usize) -> Result<HodgeProfile> {
    let mut rows = Vec::with_capacity(a.len());
    for row in a {
        if row.len() != n {
            return Err(Error::Dimension(alloc::format!(
                "weight row {row:?} has length ≠ {n}"
            )));
        }
        if !row.windows(2).all(|x| x[0] >= x[1]) {
            return Err(Error::Domain(alloc::format!(
                "weight row {row:?} is not weakly decreasing"
            )));
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(i, &x)| x + (n - 1 - i) as i64)
                .collect(),
        );
    }
    HodgeProfile::new(n as i64 - 1, rows)
}

/// True when p_i + p_{d+1−i} = w at every embedding, as forced by a
/// polarization.
pub fn is_hodge_symmetric(profile: &HodgeProfile) -> bool {
    let d = profile.d;
    profile
        .p
        .iter()
        .all(|p| (0..d).all(|i| p[i] + p[d - 1 - i] == profile.w))
}

fn check_keys(profile: &HodgeProfile, chi: &[RmTypes]) -> Result<()> {
    if chi.len() != profile.e() {
        return Err(Error::Dimension(alloc::format!(
            "{} character places for {} embeddings",
            chi.len(),
            profile.e()
        )));
    }
    if profile.d == 0 {
        return Err(Error::Dimension("rank 0 profile".into()));
    }
    Ok(())
}

pub fn has_critical_values(profile: &HodgeProfile, chi: &[RmTypes]) -> bool {
    chi.len() == profile.e()
        && profile
            .p
            .iter()
            .zip(chi)
            .all(|(p, c)| p.iter().all(|&pi| profile.w - 2 * pi != c.t))
}

/// r_σ with t_σ(χ) ∈ I_{r_σ}; s_σ = d − r_σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureAssignment {
    pub d: usize,
    pub r: Vec<usize>,
}

impl SignatureAssignment {
    pub fn s(&self) -> Vec<usize> {
        self.r.iter().map(|r| self.d - r).collect()
    }

    pub fn is_definite(&self) -> bool {
        self.r.iter().all(|&r| r == self.d || r == 0)
    }
}

pub fn assign_signatures(profile: &HodgeProfile, chi: &[RmTypes]) -> Result<SignatureAssignment> {
    check_keys(profile, chi)?;
    let mut r = Vec::with_capacity(chi.len());
    for (sigma, (p, c)) in profile.p.iter().zip(chi).enumerate() {
        if let Some(i) = p.iter().position(|&pi| profile.w - 2 * pi == c.t) {
            return Err(Error::Criticality(alloc::format!(
                "t = {} equals w − 2p_{} at embedding {}",
                c.t,
                i + 1,
                sigma + 1
            )));
        }
        r.push(p.iter().filter(|&&pi| profile.w - 2 * pi < c.t).count());
    }
    Ok(SignatureAssignment { d: profile.d, r })
}

/// The integers m with υ⁽¹⁾ < m ≤ υ⁽²⁾.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalRange {
    pub upsilon1: i64,
    pub upsilon2: i64,
}

impl CriticalRange {
    pub fn is_empty(&self) -> bool {
        self.upsilon1 >= self.upsilon2
    }

    pub fn contains(&self, m: i64) -> bool {
        self.upsilon1 < m && m <= self.upsilon2
    }

    pub fn values(&self) -> Vec<i64> {
        (self.upsilon1 + 1..=self.upsilon2).collect()
    }

    pub fn shift(&self, k: i64) -> CriticalRange {
        CriticalRange {
            upsilon1: self.upsilon1 + k,
            upsilon2: self.upsilon2 + k,
        }
    }
}

fn require_symmetric(profile: &HodgeProfile) -> Result<()> {
    if is_hodge_symmetric(profile) {
        Ok(())
    } else {
        Err(Error::Precondition(alloc::format!(
            "profile {:?} of weight {} is not Hodge-symmetric",
            profile.p,
            profile.w
        )))
    }
}

fn check_assignment(
    profile: &HodgeProfile,
    chi: &[RmTypes],
    asg: &SignatureAssignment,
) -> Result<()> {
    check_keys(profile, chi)?;
    require_symmetric(profile)?;
    if asg.r.len() != chi.len() || asg.d != profile.d || asg.r.iter().any(|&r| r > asg.d) {
        return Err(Error::Dimension(
            "assignment does not match the profile".into(),
        ));
    }
    Ok(())
}

pub fn critical_set(
    profile: &HodgeProfile,
    chi: &[RmTypes],
    asg: &SignatureAssignment,
) -> Result<CriticalRange> {
    check_assignment(profile, chi, asg)?;
    let d = profile.d;
    let mut lo = Extended::NegInf;
    let mut hi = Extended::PosInf;
    for ((p, c), &r) in profile.p.iter().zip(chi).zip(&asg.r) {
        lo = lo
            .max(p_ext(p, r + 1).add(c.p1))
            .max(p_ext(p, d + 1 - r).add(c.p2));
        hi = hi.min(p_ext(p, r).add(c.p1)).min(p_ext(p, d - r).add(c.p2));
    }
    match (lo, hi) {
        (Extended::Finite(a), Extended::Finite(b)) => Ok(CriticalRange {
            upsilon1: a,
            upsilon2: b,
        }),
        _ => Err(Error::Degenerate("unbounded critical range".into())),
    }
}

/// Shifts k of ∏Γ_ℂ(s − k) in L_∞(M ⊗ RM(χ), s), over all embeddings.
pub fn gamma_factor(
    profile: &HodgeProfile,
    chi: &[RmTypes],
    asg: &SignatureAssignment,
) -> Result<Vec<i64>> {
    check_assignment(profile, chi, asg)?;
    let d = profile.d;
    let mut out = Vec::new();
    for ((p, c), &r) in profile.p.iter().zip(chi).zip(&asg.r) {
        out.extend(p[r..].iter().map(|x| x + c.p1));
        out.extend(p[d - r..].iter().map(|x| x + c.p2));
    }
    Ok(out)
}

/// Hodge numbers (p, q) ↦ h^{pq} of M ⊗ RM(χ) per embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorHodgeProfile {
    pub weight: i64,
    pub per_sigma: Vec<Vec<(i64, i64, u32)>>,
}

impl TensorHodgeProfile {
    pub fn has_pp(&self) -> bool {
        self.per_sigma.iter().flatten().any(|&(p, q, _)| p == q)
    }
}

pub fn tensor_hodge_profile(profile: &HodgeProfile, chi: &[RmTypes]) -> Result<TensorHodgeProfile> {
    check_keys(profile, chi)?;
    let per_sigma = profile
        .p
        .iter()
        .zip(chi)
        .map(|(p, c)| {
            let mut h: BTreeMap<(i64, i64), u32> = BTreeMap::new();
            for &pi in p {
                let qi = profile.w - pi;
                *h.entry((pi + c.p1, qi + c.p2)).or_default() += 1;
                *h.entry((pi + c.p2, qi + c.p1)).or_default() += 1;
            }
            h.into_iter().rev().map(|((p, q), k)| (p, q, k)).collect()
        })
        .collect();
    Ok(TensorHodgeProfile {
        weight: profile.w + chi.first().map_or(0, |c| c.p1 + c.p2),
        per_sigma,
    })
}

/// Critical integers scanned one by one from the Γ_ℂ pole sets of
/// L_∞(M ⊗ RM(χ), s) and L_∞((M ⊗ RM(χ))^∨, 1 − s), with Γ_ℂ having poles
/// at the non-positive integers.
pub fn critical_set_oracle(profile: &HodgeProfile, chi: &[RmTypes]) -> Result<Vec<i64>> {
    let tensor = tensor_hodge_profile(profile, chi)?;
    if tensor.has_pp() {
        return Ok(Vec::new());
    }
    // one Γ_ℂ(s − p) per pair p < q, and for the dual (types (−q, −p)) one
    // Γ_ℂ(1 − s + q) per pair p < q
    let mut poles_left = Vec::new();
    let mut poles_right = Vec::new();
    for &(p, q, _) in tensor.per_sigma.iter().flatten() {
        if p < q {
            poles_left.push(p);
            poles_right.push(q);
        }
    }
    let all: Vec<i64> = tensor
        .per_sigma
        .iter()
        .flatten()
        .flat_map(|&(p, q, _)| [p, q])
        .collect();
    let (Some(&min), Some(&max)) = (all.iter().min(), all.iter().max()) else {
        return Ok(Vec::new());
    };
    Ok((min - 2..=max + 2)
        .filter(|&m| {
            let left_pole = poles_left.iter().any(|&k| m - k <= 0);
            let right_pole = poles_right.iter().any(|&k| 1 - m + k <= 0);
            !left_pole && !right_pole
        })
        .collect())
}

/// ⌈n/2⌉ ≤ m ≤ upper; `theorem_lower` = n + 1 marks where the convergence
/// argument applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleRange {
    pub lower: i64,
    /// `None` when no place constrains m from above.
    pub upper: Option<i64>,
    pub theorem_lower: i64,
}

impl AdmissibleRange {
    pub fn contains(&self, m: i64) -> bool {
        m >= self.lower && self.upper.is_none_or(|u| m <= u)
    }

    pub fn is_theorem_grade(&self, m: i64) -> bool {
        self.contains(m) && m >= self.theorem_lower
    }

    pub fn values(&self) -> Option<Vec<i64>> {
        self.upper.map(|u| (self.lower..=u).collect())
    }

    pub fn theorem_values(&self) -> Option<Vec<i64>> {
        self.upper
            .map(|u| (self.lower.max(self.theorem_lower)..=u).collect())
    }
}

/// Range of m from the two inequalities −a_{τ,s+1} + s + δ_τ and
/// a_{τ,s} + r − δ_τ with δ_τ = m_τ − m_τ̄ for τ in the CM type of ψ. A bound
/// whose index falls outside 1..n is absent.
pub fn admissible_m_range(
    mu: &WeightVector,
    eta: &InfinityType,
    shape: &CompactShape,
) -> Result<AdmissibleRange> {
    let n = shape.n;
    let phi = cm_type_of(eta)?;
    if mu.rows.len() != shape.e() || phi.phi.len() != shape.e() {
        return Err(Error::Dimension(alloc::format!(
            "{} weight rows, {} places of ψ, {} shape places",
            mu.rows.len(),
            phi.phi.len(),
            shape.e()
        )));
    }
    let mut upper: Option<i64> = None;
    for (k, &(r, s)) in shape.places.iter().enumerate() {
        let a = &mu.rows[k];
        if a.len() != n {
            return Err(Error::Dimension(alloc::format!(
                "row {k} has length {}",
                a.len()
            )));
        }
        let tau = phi.phi[k];
        let diff = eta.value(tau) - eta.value(eta.conj(tau));
        let mut bounds = Vec::new();
        if s < n {
            bounds.push(-a[s] + s as i64 + diff);
        }
        if s >= 1 {
            bounds.push(a[s - 1] + r as i64 - diff);
        }
        for b in bounds {
            upper = Some(upper.map_or(b, |u| u.min(b)));
        }
    }
    Ok(AdmissibleRange {
        lower: n.div_ceil(2) as i64,
        upper,
        theorem_lower: n as i64 + 1,
    })
}
