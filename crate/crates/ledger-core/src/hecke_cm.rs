//! Algebraic Hecke characters through their infinity types, CM types, the
//! character χ = ψ²(ψ₀∘N)⁻¹, Hodge types of RM(χ) and the CM-period axioms.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::proof_engine::ledger::{Axiom, Grade, PeriodExpr, PeriodSym, Sign};
use crate::symlaurent::ClassId;
use crate::weights::CompactShape;

/// Integers n_τ on a finite label set with a fixed-point-free involution τ ↔ τ̄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityType {
    labels: Vec<String>,
    values: Vec<i64>,
    conj: Vec<usize>,
}

impl InfinityType {
    pub fn new(labels: Vec<String>, values: Vec<i64>, conj: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if values.len() != n || conj.len() != n {
            return Err(Error::Dimension(
                "labels, values and involution differ in length".into(),
            ));
        }
        for i in 0..n {
            let j = conj[i];
            if j >= n || j == i || conj[j] != i {
                return Err(Error::Domain(alloc::format!(
                    "involution is not a fixed-point-free pairing at {}",
                    labels[i]
                )));
            }
        }
        Ok(InfinityType {
            labels,
            values,
            conj,
        })
    }

    /// One pair (n_τ, n_τ̄) per place; labels `tau{k}` and `tau{k}bar`.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut labels = Vec::new();
        let mut values = Vec::new();
        let mut conj = Vec::new();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            labels.push(alloc::format!("tau{}", k + 1));
            labels.push(alloc::format!("tau{}bar", k + 1));
            values.extend([a, b]);
            conj.extend([2 * k + 1, 2 * k]);
        }
        InfinityType {
            labels,
            values,
            conj,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn value(&self, i: usize) -> i64 {
        self.values[i]
    }

    pub fn conj(&self, i: usize) -> usize {
        self.conj[i]
    }

    /// Pairs (τ, τ̄) ordered by the position of their first member.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| i < self.conj[i])
            .map(|i| (i, self.conj[i]))
            .collect()
    }

    pub fn map_values(&self, f: impl Fn(i64) -> i64) -> InfinityType {
        InfinityType {
            labels: self.labels.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
            conj: self.conj.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeCharacterData {
    pub name: String,
    pub infinity: InfinityType,
    pub weight: i64,
    /// Name of the finite-order restriction, or `"trivial"`.
    pub restriction_finite_order: String,
    pub coeff_class: ClassId,
}

impl HeckeCharacterData {
    pub fn new(name: &str, infinity: InfinityType, weight: i64) -> Result<Self> {
        for (a, b) in infinity.pairs() {
            if infinity.value(a) + infinity.value(b) != weight {
                return Err(Error::Domain(alloc::format!(
                    "n_{} + n_{} = {} differs from the weight {weight}",
                    infinity.label(a),
                    infinity.label(b),
                    infinity.value(a) + infinity.value(b)
                )));
            }
        }
        Ok(HeckeCharacterData {
            name: name.to_string(),
            infinity,
            weight,
            restriction_finite_order: "trivial".to_string(),
            coeff_class: ClassId::E_TENSOR_K,
        })
    }

    /// Character of type (m_τ, m_τ̄) per place, weight read off the first pair.
    pub fn from_pairs(name: &str, pairs: &[(i64, i64)]) -> Result<Self> {
        let w = pairs.first().map(|&(a, b)| a + b).unwrap_or(0);
        Self::new(name, InfinityType::from_pairs(pairs), w)
    }
}

/// One member of every conjugate pair, in pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmTypeData {
    pub phi: Vec<usize>,
}

pub fn is_critical_character(chi: &HeckeCharacterData) -> bool {
    let eta = &chi.infinity;
    eta.pairs()
        .iter()
        .all(|&(a, b)| eta.value(a) != eta.value(b))
}

fn ensure_critical(eta: &InfinityType) -> Result<()> {
    for (a, b) in eta.pairs() {
        if eta.value(a) == eta.value(b) {
            return Err(Error::Criticality(alloc::format!(
                "n_{} = n_{}: the character is not critical",
                eta.label(a),
                eta.label(b)
            )));
        }
    }
    Ok(())
}

/// Φ_η = {τ : n_τ > n_τ̄}.
pub fn cm_type_of(eta: &InfinityType) -> Result<CmTypeData> {
    ensure_critical(eta)?;
    Ok(CmTypeData {
        phi: eta
            .pairs()
            .into_iter()
            .map(|(a, b)| if eta.value(a) > eta.value(b) { a } else { b })
            .collect(),
    })
}

/// χ with n_τ = 2m_τ, weight 2w and trivial finite-order part.
pub fn chi_from_psi(psi: &HeckeCharacterData) -> Result<HeckeCharacterData> {
    ensure_critical(&psi.infinity)?;
    Ok(HeckeCharacterData {
        name: alloc::format!("chi[{}]", psi.name),
        infinity: psi.infinity.map_values(|v| 2 * v),
        weight: 2 * psi.weight,
        restriction_finite_order: "trivial".to_string(),
        coeff_class: psi.coeff_class,
    })
}

/// Sorted Hodge numbers p₁^χ > p₂^χ of RM(χ) at a place and t = p₁^χ − p₂^χ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RmTypes {
    pub p1: i64,
    pub p2: i64,
    pub t: i64,
}

/// Hodge numbers of RM(χ) at the place `sigma` (index of the conjugate pair).
/// The unordered pair is the same for both coefficient embeddings ρ, ρ̄.
pub fn rm_hodge_types(chi: &HeckeCharacterData, sigma: usize) -> Result<RmTypes> {
    let pairs = chi.infinity.pairs();
    let &(a, b) = pairs
        .get(sigma)
        .ok_or_else(|| Error::Dimension(alloc::format!("no place {sigma}")))?;
    let (x, y) = (chi.infinity.value(a), chi.infinity.value(b));
    if x == y {
        return Err(Error::Criticality(alloc::format!(
            "n_{} = n_{}",
            chi.infinity.label(a),
            chi.infinity.label(b)
        )));
    }
    let (p1, p2) = if x > y { (x, y) } else { (y, x) };
    Ok(RmTypes { p1, p2, t: p1 - p2 })
}

/// e_τ = +1 when n_τ > n_τ̄, else −1.
pub fn e_sign(chi: &HeckeCharacterData, tau: usize) -> Result<i8> {
    let eta = &chi.infinity;
    if tau >= eta.len() {
        return Err(Error::Dimension(alloc::format!("no embedding {tau}")));
    }
    let (x, y) = (eta.value(tau), eta.value(eta.conj(tau)));
    if x == y {
        return Err(Error::Criticality(alloc::format!(
            "n_{} = n_{}",
            eta.label(tau),
            eta.label(eta.conj(tau))
        )));
    }
    Ok(if x > y { 1 } else { -1 })
}

/// Name of the CM period p(χ̌; τ_σ) for τ_σ ∈ Φ over the place σ.
pub fn cm_chi_check(phi_label: &str) -> PeriodSym {
    PeriodSym::CM {
        character: "chi^v".to_string(),
        at: phi_label.to_string(),
    }
}

pub fn cm_psi_det() -> PeriodSym {
    PeriodSym::CM {
        character: "psi".to_string(),
        at: "det x".to_string(),
    }
}

pub fn cm_psi_inv_det_bar() -> PeriodSym {
    PeriodSym::CM {
        character: "psi^-1".to_string(),
        at: "det xbar".to_string(),
    }
}

/// c^±_σ(χ) of the rank-one motive M(χ).
pub fn c_chi(sigma: u32, sign: Sign) -> PeriodSym {
    PeriodSym::c("M(chi)", Some(sigma), sign)
}

/// The CM-period relations attached to χ = χ(ψ) and a signature.
pub fn cm_axioms(
    chi: &HeckeCharacterData,
    psi: &HeckeCharacterData,
    shape: &CompactShape,
) -> Result<Vec<Axiom>> {
    let phi = cm_type_of(&chi.infinity)?;
    let psi_phi = cm_type_of(&psi.infinity)?;
    if phi != psi_phi || chi.weight != 2 * psi.weight {
        return Err(Error::Precondition("chi must be chi_from_psi(psi)".into()));
    }
    if shape.places.len() != phi.phi.len() {
        return Err(Error::Dimension(alloc::format!(
            "shape has {} places, the character {}",
            shape.places.len(),
            phi.phi.len()
        )));
    }
    let wchi = chi.weight;
    let two_pi_i = || PeriodSym::TwoPiI;
    let mut out = Vec::new();
    for (k, &tau) in phi.phi.iter().enumerate() {
        let s = k as u32;
        let label = chi.infinity.label(tau).to_string();
        let e_tau = PeriodSym::ETau(label.clone());
        let delta = PeriodSym::DeltaEpsLAt(s);
        let cp = PeriodExpr::sym(c_chi(s, Sign::Plus));
        let cm = PeriodExpr::sym(c_chi(s, Sign::Minus));
        let ap = PeriodExpr::sym(PeriodSym::APM {
            sigma: s,
            sign: Sign::Plus,
        });
        let am = PeriodExpr::sym(PeriodSym::APM {
            sigma: s,
            sign: Sign::Minus,
        });
        out.push(Axiom::equiv(
            &alloc::format!("blasius[{}]", k + 1),
            cp.clone(),
            PeriodExpr::sym(cm_chi_check(&label)),
            ClassId::E_TENSOR_K,
            "refined Blasius relation c+_sigma(chi) ~ p(chi^v; tau)",
            Grade::Assumption,
        ));
        out.push(Axiom::equiv(
            &alloc::format!("Q(chi)-via-c+[{}]", k + 1),
            PeriodExpr::sym(PeriodSym::QChi(s)),
            PeriodExpr::one()
                .times(two_pi_i(), wchi)
                .times(delta.clone(), -2)
                .times(e_tau.clone(), 1)
                .mul(&cp.pow(2)),
            ClassId::E_TENSOR_K,
            "Q_sigma(chi) ~ (2pi i)^w(chi) delta_sigma[chi0 eps_L]^-2 e_tau c+_sigma(chi)^2",
            Grade::Cited,
        ));
        for (c, a, tag) in [(&cp, &am, '+'), (&cm, &ap, '-')] {
            out.push(Axiom::equiv(
                &alloc::format!("c-vs-a[{},{tag}]", k + 1),
                c.clone(),
                PeriodExpr::one()
                    .times(two_pi_i(), -wchi)
                    .times(delta.clone(), 1)
                    .mul(a),
                ClassId::E_TENSOR_K,
                "c^pm_sigma(chi) ~ (2pi i)^-w(chi) delta[chi0 eps_L] a^mp_sigma(chi)",
                Grade::Cited,
            ));
        }
        out.push(Axiom::equiv(
            &alloc::format!("a-sign[{}]", k + 1),
            am.clone(),
            ap.clone().times(e_tau.clone(), 1),
            ClassId::E_TENSOR_K,
            "a-_sigma(chi) ~ e_tau a+_sigma(chi)",
            Grade::Cited,
        ));
        out.push(Axiom::new(
            &alloc::format!("delta-epsL-unit[{}]", k + 1),
            PeriodExpr::sym(delta.clone()),
            ClassId::L_GALOIS,
            "delta_sigma[eps_L] lies in L'",
            Grade::Cited,
        ));
        out.push(Axiom::equiv(
            &alloc::format!("c-sign[{}]", k + 1),
            cm.clone(),
            cp.clone().times(e_tau, 1),
            ClassId::E_TENSOR_K,
            "c-_sigma(chi) ~ e_tau c+_sigma(chi)",
            Grade::Cited,
        ));
    }
    // p(ψ; det∘x) as a product over Φ of CM periods of ψ^r (ψ^ι)^s.
    let mut fact = PeriodExpr::one();
    for (k, &tau) in phi.phi.iter().enumerate() {
        let (r, s) = shape.places[k];
        fact = fact.times(
            PeriodSym::CM {
                character: alloc::format!("psi^{r}(psi^iota)^{s}"),
                at: psi.infinity.label(tau).to_string(),
            },
            1,
        );
    }
    out.push(Axiom::equiv(
        "p(psi;det x)-factorization",
        PeriodExpr::sym(cm_psi_det()),
        fact,
        ClassId::E_PSI_E,
        "p(psi; det x) ~ prod_tau p(psi^r_tau (psi^iota)^s_tau; tau)",
        Grade::Cited,
    ));
    let mut rhs = PeriodExpr::one();
    let mut exp2pi = 0;
    for (k, &tau) in phi.phi.iter().enumerate() {
        let (r, s) = shape.places[k];
        let diff = r as i64 - s as i64;
        exp2pi += psi.weight * diff;
        rhs = rhs.times(cm_chi_check(chi.infinity.label(tau)), diff);
    }
    out.push(Axiom::equiv(
        "p(psi;det)p(psi^-1;det bar)",
        PeriodExpr::sym(cm_psi_det()).times(cm_psi_inv_det_bar(), 1),
        rhs.times(PeriodSym::TwoPiI, exp2pi),
        ClassId::E_PSI_E,
        "p(psi;det x) p(psi^-1;det xbar) ~ (2pi i)^(w sum (r-s)) prod p(chi^v;tau)^(r-s)",
        Grade::Cited,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn psi(pairs: &[(i64, i64)]) -> HeckeCharacterData {
        HeckeCharacterData::from_pairs("psi", pairs).unwrap()
    }

    #[test]
    fn criticality() {
        assert!(is_critical_character(&psi(&[(2, 0), (2, 0)])));
        assert!(!is_critical_character(&psi(&[(1, 1)])));
        let mixed = HeckeCharacterData::new("x", InfinityType::from_pairs(&[(3, -1), (0, 0)]), 2);
        // weight differs between pairs, so only the criticality test applies
        assert!(mixed.is_err());
        let eta = InfinityType::from_pairs(&[(3, -1), (1, 1)]);
        assert!(cm_type_of(&eta).is_err());
    }

    #[test]
    fn cm_types() {
        let eta = InfinityType::from_pairs(&[(2, 0)]);
        assert_eq!(cm_type_of(&eta).unwrap().phi, vec![0]);
        let eta = InfinityType::from_pairs(&[(1, 0), (0, 3)]);
        assert_eq!(cm_type_of(&eta).unwrap().phi, vec![0, 3]);
        let eta = InfinityType::from_pairs(&[(4, -4), (4, -4), (4, -4)]);
        assert_eq!(cm_type_of(&eta).unwrap().phi, vec![0, 2, 4]);
    }

    #[test]
    fn chi_doubles() {
        let chi = chi_from_psi(&psi(&[(1, 0)])).unwrap();
        assert_eq!(
            (chi.infinity.value(0), chi.infinity.value(1), chi.weight),
            (2, 0, 2)
        );
        let chi = chi_from_psi(&psi(&[(2, -2)])).unwrap();
        assert_eq!(
            (chi.infinity.value(0), chi.infinity.value(1), chi.weight),
            (4, -4, 0)
        );
        assert!(chi_from_psi(&psi(&[(1, 1)])).is_err());
    }

    #[test]
    fn rm_types_and_signs() {
        let chi = chi_from_psi(&psi(&[(1, 0)])).unwrap();
        assert_eq!(
            rm_hodge_types(&chi, 0).unwrap(),
            RmTypes { p1: 2, p2: 0, t: 2 }
        );
        let chi = chi_from_psi(&psi(&[(2, -2)])).unwrap();
        assert_eq!(
            rm_hodge_types(&chi, 0).unwrap(),
            RmTypes {
                p1: 4,
                p2: -4,
                t: 8
            }
        );
        assert_eq!(e_sign(&chi, 0).unwrap(), 1);
        assert_eq!(e_sign(&chi, 1).unwrap(), -1);
    }

    #[test]
    fn formpsidet_example() {
        let p = psi(&[(1, 0)]);
        let chi = chi_from_psi(&p).unwrap();
        let shape = CompactShape::new(3, vec![(2, 1)]).unwrap();
        let ax = cm_axioms(&chi, &p, &shape).unwrap();
        let f = ax
            .iter()
            .find(|a| a.name == "p(psi;det)p(psi^-1;det bar)")
            .unwrap();
        let expect = PeriodExpr::sym(cm_psi_det())
            .times(cm_psi_inv_det_bar(), 1)
            .times(PeriodSym::TwoPiI, -1)
            .times(cm_chi_check("tau1"), -1);
        assert_eq!(f.relation, expect);
        let b = ax.iter().find(|a| a.name == "Q(chi)-via-c+[1]").unwrap();
        assert_eq!(b.relation.exponent(&PeriodSym::TwoPiI), -2);
        assert_eq!(b.relation.exponent(&PeriodSym::DeltaEpsLAt(0)), 2);
        assert_eq!(b.relation.exponent(&PeriodSym::ETau("tau1".into())), -1);
        assert_eq!(b.relation.exponent(&c_chi(0, Sign::Plus)), -2);
        assert!(ax.iter().all(|a| !a.anchor.is_empty()));
    }
}
