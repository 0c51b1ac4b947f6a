//! Polynomial-level verification of the period factorizations on generic
//! instances, closed out by lattice derivations in the period ledger.

use alloc::string::String;
use alloc::vec::Vec;

use super::ledger::{lattice_check, Axiom, Grade, PeriodExpr, PeriodSym, Sign};
use super::report::{Step, Verdict};
use crate::error::{Error, Result};
use crate::hodge_periods::{
    artin_twisted, build_generic_instance, c_dual_pm, is_admissible, pm_one, tate_twisted,
    twist_rules, ArtinTwist, PolarizedInstance,
};
use crate::symlaurent::{det, proportional_up_to_units, ClassId, LaurentPoly, Matrix, Monomial};

const M: &str = "M";
const M_DUAL: &str = "M^v";

fn qmot(j: usize, sigma: u32) -> PeriodSym {
    PeriodSym::QMot { j: j as u32, sigma }
}

fn qprod(range: impl IntoIterator<Item = usize>, sigma: u32) -> PeriodExpr {
    range
        .into_iter()
        .fold(PeriodExpr::one(), |acc, j| acc.times(qmot(j, sigma), 1))
}

fn delta_a_sym(trivial: bool, sigma: u32) -> PeriodSym {
    PeriodSym::DeltaA {
        name: "A".into(),
        sigma,
        trivial,
    }
}

fn poly_product(polys: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
    polys
        .into_iter()
        .fold(LaurentPoly::one(), |acc, p| &acc * &p)
}

/// Signature with ε = +1 when d is odd.
pub fn default_signature(d: usize) -> (usize, i8) {
    if d % 2 == 0 {
        (d / 2, 1)
    } else {
        ((d + 1) / 2, 1)
    }
}

/// ε forced by (d, d⁺); `None` when the pair is not admissible.
pub fn epsilon_for(d: usize, d_plus: usize) -> Option<i8> {
    [1i8, -1].into_iter().find(|&e| is_admissible(d, d_plus, e))
}

/// Every admissible (d, d⁺, ε, A trivial?) with 1 ≤ d ≤ dmax.
pub fn admissible_cases(dmax: usize) -> Vec<(usize, usize, i8, bool)> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        for d_plus in 0..=d {
            for eps in [1i8, -1] {
                if is_admissible(d, d_plus, eps) {
                    for a_trivial in [true, false] {
                        out.push((d, d_plus, eps, a_trivial));
                    }
                }
            }
        }
    }
    out
}

/// The relations Q_j Q_{d+1−j} ∼ δ(A)⁻² and, for odd d, Q_{(d+1)/2} ∼ δ(A)⁻¹,
/// each checked on the instance before it is admitted.
pub fn quadratic_axioms(inst: &PolarizedInstance, sigma: u32) -> Result<(Vec<Axiom>, Vec<Step>)> {
    let d = inst.d;
    let da = LaurentPoly::var(inst.delta_a);
    let mut axioms = Vec::new();
    let mut steps = Vec::new();
    let dsym = delta_a_sym(inst.a_trivial, sigma);
    for j in 1..=d / 2 {
        let k = d + 1 - j;
        let lhs = &inst.q(j)? * &inst.q(k)?;
        let found = proportional_up_to_units(&lhs, &da.pow(-2)?, ClassId::E_TENSOR_K, &inst.table)?;
        let ok = found.is_some();
        steps.push(Step::proportional(
            &alloc::format!("pairing[{j},{k}]"),
            &alloc::format!("Q_{j} Q_{k} ~ delta(A)^-2"),
            "Q_j Q_(d+1-j) ~ delta(A)^-2",
            found,
            &inst.table,
        ));
        if ok {
            axioms.push(Axiom::equiv(
                &alloc::format!("pairing[{j},{k}]"),
                PeriodExpr::one()
                    .times(qmot(j, sigma), 1)
                    .times(qmot(k, sigma), 1),
                PeriodExpr::one().times(dsym.clone(), -2),
                ClassId::E_TENSOR_K,
                "Q_j Q_(d+1-j) ~ delta(A)^-2",
                Grade::Verified,
            ));
        }
    }
    if d % 2 == 1 {
        let k = d / 2 + 1;
        let found =
            proportional_up_to_units(&inst.q(k)?, &da.pow(-1)?, ClassId::E_TENSOR_K, &inst.table)?;
        let ok = found.is_some();
        steps.push(Step::proportional(
            "middle",
            &alloc::format!("Q_{k} ~ delta(A)^-1"),
            "Q_((d+1)/2) = eps mu delta(A)^-1",
            found,
            &inst.table,
        ));
        if ok {
            axioms.push(Axiom::equiv(
                "middle",
                PeriodExpr::sym(qmot(k, sigma)),
                PeriodExpr::one().times(dsym, -1),
                ClassId::E_TENSOR_K,
                "Q_((d+1)/2) = eps mu delta(A)^-1",
                Grade::Verified,
            ));
        }
    }
    Ok((axioms, steps))
}

/// ∏_{j≤r} Q_j ∼ ∏_{j≤s} Q_j for r + s = d and trivial A.
pub fn verify_duality_lemma(d: usize, r: usize, s: usize) -> Result<Verdict> {
    if r + s != d || r >= s {
        return Err(Error::Precondition(alloc::format!(
            "need r + s = d and r < s, got d={d}, r={r}, s={s}"
        )));
    }
    let (d_plus, eps) = default_signature(d);
    let inst = build_generic_instance(d, d_plus, eps, true)?;
    let mut v = Verdict::new(
        "duality",
        &[("d", d as i64), ("r", r as i64), ("s", s as i64)],
        "prod_(j<=r) Q_j ~ prod_(j<=s) Q_j, r + s = d",
    );
    let (axioms, steps) = quadratic_axioms(&inst, 0)?;
    for st in steps {
        v.push(st);
    }
    let target = qprod(1..=r, 0).div(&qprod(1..=s, 0));
    let out = lattice_check(&target, &axioms, ClassId::E_TENSOR_K, inst.table.lattice());
    v.push(Step::lattice(
        "duality",
        "prod_(j<=r) Q_j ~ prod_(j<=s) Q_j",
        "prod_(j<=r) Q_j ~ prod_(j<=s) Q_j, r + s = d",
        out,
        true,
    ));
    Ok(v)
}

/// The Deligne-period minors det P̃^± and the full determinant det P̃.
fn minors(inst: &PolarizedInstance) -> Result<(LaurentPoly, LaurentPoly, LaurentPoly)> {
    let full = det(&inst.p_tilde())?;
    if full.is_zero() {
        return Err(Error::Degenerate(alloc::format!(
            "det P~ vanishes for d={}, d_plus={}",
            inst.d,
            inst.d_plus
        )));
    }
    Ok((
        full,
        c_dual_pm(inst, Sign::Plus)?,
        c_dual_pm(inst, Sign::Minus)?,
    ))
}

fn aux(name: &str) -> PeriodExpr {
    PeriodExpr::sym(PeriodSym::aux(name))
}

/// δ(A)^{-⌊d/2⌋} ∏_{j≤⌊d/2⌋} Q_j^{-1} det P̃⁺ det P̃⁻ on the instance.
fn expr_delta_q_rhs(
    inst: &PolarizedInstance,
    dp: &LaurentPoly,
    dm: &LaurentPoly,
) -> Result<LaurentPoly> {
    let h = inst.d / 2;
    let mut rhs = (dp * dm).mul_monomial(&Monomial::from_pairs([(inst.delta_a, -(h as i32))]));
    for j in 1..=h {
        rhs = &rhs * &inst.q(j)?.pow(-1)?;
    }
    Ok(rhs)
}

/// Ledger axioms tying Deligne periods of M^∨ and δ(M) to the instance minors,
/// plus the verified relation between det P̃ and the minors.
fn instance_period_axioms(inst: &PolarizedInstance, expr_ok: bool, sigma: u32) -> Vec<Axiom> {
    let h = inst.d / 2;
    let mut axioms = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        axioms.push(Axiom::equiv(
            &alloc::format!("c-det[M^v,{}]", sign.as_char()),
            PeriodExpr::sym(PeriodSym::c(M_DUAL, Some(sigma), sign)),
            aux(&alloc::format!("det P~{}", sign.as_char())),
            ClassId::E_TENSOR_K,
            "c^pm_sigma(M^v) ~ det P~^pm",
            Grade::Cited,
        ));
    }
    axioms.push(Axiom::equiv(
        "delta-det[M]",
        PeriodExpr::sym(PeriodSym::delta(M, Some(sigma))),
        aux("det P~").inv(),
        ClassId::E_TENSOR_K,
        "delta_sigma(M) ~ det(P~)^-1",
        Grade::Cited,
    ));
    if expr_ok {
        axioms.push(Axiom::equiv(
            "exprdeltaQ",
            aux("det P~"),
            aux("det P~+")
                .mul(&aux("det P~-"))
                .times(delta_a_sym(inst.a_trivial, sigma), -(h as i64))
                .div(&qprod(1..=h, sigma)),
            ClassId::E_TENSOR_K,
            "det P~ ~ delta(A)^-[d/2] prod_(j<=[d/2]) Q_j^-1 det P~+ det P~-",
            Grade::Verified,
        ));
    }
    axioms
}

/// c⁺(M) c⁻(M) ∼ (2πi)^{−dw} δ(M)⁻¹ δ(A)^{d+⌊d/2⌋} ∏_{j≤⌊d/2⌋} Q_j with the
/// default weight and ε_A.
pub fn verify_cplus_cminus(d: usize, d_plus: usize, eps: i8, a_trivial: bool) -> Result<Verdict> {
    let w = d as i64 - 1;
    let eps_a = if a_trivial || d % 2 == 1 { 1 } else { -1 };
    verify_cplus_cminus_with(d, d_plus, eps, a_trivial, w, eps_a)
}

/// As [`verify_cplus_cminus`] for a chosen weight `w` and Frobenius sign
/// `eps_a` of A. For odd d the polarization forces ε_A (−1)^w = 1.
pub fn verify_cplus_cminus_with(
    d: usize,
    d_plus: usize,
    eps: i8,
    a_trivial: bool,
    w: i64,
    eps_a: i8,
) -> Result<Verdict> {
    if eps_a != 1 && eps_a != -1 {
        return Err(Error::Domain("eps_A must be +-1".into()));
    }
    if a_trivial && eps_a != 1 {
        return Err(Error::Precondition("trivial A has eps_A = +1".into()));
    }
    if d % 2 == 1 && eps_a as i64 * if w % 2 == 0 { 1 } else { -1 } != 1 {
        return Err(Error::Precondition(alloc::format!(
            "odd d={d} needs eps_A (-1)^w = 1, got eps_A={eps_a}, w={w}"
        )));
    }
    let inst = build_generic_instance(d, d_plus, eps, a_trivial)?;
    let h = d / 2;
    let mut v = Verdict::new(
        "cplusminus",
        &[
            ("d", d as i64),
            ("d_plus", d_plus as i64),
            ("eps", eps as i64),
            ("A_trivial", a_trivial as i64),
            ("w", w),
            ("eps_A", eps_a as i64),
        ],
        "c+(M) c-(M) ~ (2pi i)^(-dw) delta(M)^-1 delta(A)^(d+[d/2]) prod_(j<=[d/2]) Q_j",
    );
    v.push(Step::note(
        "relations",
        "column relations of P~",
        "a~_(i,j) = +-lambda_j a~_(i,d+1-j)",
        true,
        "checked at construction".into(),
    ));
    let (full, dp, dm) = minors(&inst)?;
    let rhs = expr_delta_q_rhs(&inst, &dp, &dm)?;
    let found = proportional_up_to_units(&full, &rhs, ClassId::E_TENSOR_K, &inst.table)?;
    let expr_ok = found.is_some();
    v.push(Step::proportional(
        "exprdeltaQ",
        "det P~ ~ delta(A)^-[d/2] prod Q_j^-1 det P~+ det P~-",
        "det P~ ~ delta(A)^-[d/2] prod_(j<=[d/2]) Q_j^-1 det P~+ det P~-",
        found,
        &inst.table,
    ));

    let sigma = 0;
    let artin = ArtinTwist {
        name: "A".into(),
        eps: eps_a,
        trivial: a_trivial,
    };
    let mva = artin_twisted(M_DUAL, "A");
    let d_plus_va = if eps_a == 1 { d_plus } else { d - d_plus };
    let mut axioms = instance_period_axioms(&inst, expr_ok, sigma);
    axioms.extend(twist_rules(M_DUAL, d, d_plus, 0, Some(&artin), sigma));
    axioms.extend(twist_rules(&mva, d, d_plus_va, -w, None, sigma));
    let polar = tate_twisted(&mva, -w);
    for sign in [Sign::Plus, Sign::Minus] {
        axioms.push(Axiom::equiv(
            &alloc::format!("polarization[{}]", sign.as_char()),
            PeriodExpr::sym(PeriodSym::c(M, Some(sigma), sign)),
            PeriodExpr::sym(PeriodSym::c(&polar, Some(sigma), sign)),
            ClassId::E_TENSOR_K,
            "M ~= M^v (x) A(-w)",
            Grade::Cited,
        ));
    }
    let lhs = PeriodExpr::one()
        .times(PeriodSym::c(M, Some(sigma), Sign::Plus), 1)
        .times(PeriodSym::c(M, Some(sigma), Sign::Minus), 1);
    let rhs = PeriodExpr::one()
        .times(PeriodSym::TwoPiI, -(d as i64) * w)
        .times(PeriodSym::delta(M, Some(sigma)), -1)
        .times(delta_a_sym(a_trivial, sigma), (d + h) as i64)
        .mul(&qprod(1..=h, sigma));
    let out = lattice_check(
        &lhs.div(&rhs),
        &axioms,
        ClassId::E_TENSOR_K,
        inst.table.lattice(),
    );
    let anchor = v.anchor.clone();
    v.push(Step::lattice(
        "cplusminus",
        "c+(M) c-(M) ~ (2pi i)^(-dw) delta(M)^-1 delta(A)^(d+[d/2]) prod Q_j",
        &anchor,
        out,
        true,
    ));
    Ok(v)
}

/// Names used by the factorization of c⁺ of M ⊗ RM(χ).
pub const N_MOTIVE: &str = "M(x)RM(chi)";
const N_DUAL: &str = "(M(x)RM(chi))^v";
const RM_DUAL: &str = "RM(chi)^v";

/// δ_σ[χ₀ ε_L], the discriminant entering c^±_σ(RM(χ)).
pub fn delta_chi(sigma: u32) -> PeriodSym {
    PeriodSym::DeltaA {
        name: "chi0.epsL".into(),
        sigma,
        trivial: false,
    }
}

/// The factorization of c⁺_σ(M ⊗ RM(χ)) for signature (r, s) at σ:
/// (2πi)^{−⌈d/2⌉w(χ)} δ_σ[χ₀ε_L]^r δ_σ(M) a* Q_σ(χ)^{r−⌈d/2⌉} ∏_{j≤s} Q_{j,σ}.
pub fn thmfact_statement(d: usize, d_plus: usize, r: usize, w_chi: i64, sigma: u32) -> Axiom {
    let s = d - r;
    let up = (d + 1) / 2;
    let mut rhs = PeriodExpr::one()
        .times(PeriodSym::TwoPiI, -(up as i64) * w_chi)
        .times(delta_chi(sigma), r as i64)
        .times(PeriodSym::delta(M, Some(sigma)), 1)
        .times(PeriodSym::QChi(sigma), r as i64 - up as i64)
        .mul(&qprod(1..=s, sigma));
    if d % 2 == 1 {
        let sign = if 2 * d_plus > d {
            Sign::Minus
        } else {
            Sign::Plus
        };
        rhs = rhs.times(PeriodSym::APM { sigma, sign }, 1);
    }
    Axiom::equiv(
        &alloc::format!("thmfact[{}]", sigma + 1),
        PeriodExpr::sym(PeriodSym::c(N_MOTIVE, Some(sigma), Sign::Plus)),
        rhs,
        ClassId::E_TENSOR_K,
        "c+_sigma(M (x) RM(chi)) ~ (2pi i)^(-[(d+1)/2] w(chi)) delta_sigma[chi0 eps_L]^r delta_sigma(M) a* Q_sigma(chi)^(r-[(d+1)/2]) prod_(j<=s) Q_j",
        Grade::Verified,
    )
}

/// thmfact with weights w(M) = d − 1 and w(χ) = 2.
pub fn verify_thmfact(d: usize, d_plus: usize, r: usize) -> Result<Verdict> {
    verify_thmfact_with(d, d_plus, r, d as i64 - 1, 2)
}

pub fn verify_thmfact_with(
    d: usize,
    d_plus: usize,
    r: usize,
    w: i64,
    w_chi: i64,
) -> Result<Verdict> {
    thmfact_with_axioms(d, d_plus, r, w, w_chi).map(|(v, _)| v)
}

pub(crate) fn thmfact_with_axioms(
    d: usize,
    d_plus: usize,
    r: usize,
    w: i64,
    w_chi: i64,
) -> Result<(Verdict, Vec<Axiom>)> {
    if !(d / 2 < r && r <= d) {
        return Err(Error::Precondition(alloc::format!(
            "need [d/2] < r <= d, got d={d}, r={r}"
        )));
    }
    if d % 2 == 1 && w % 2 != 0 {
        return Err(Error::Precondition(alloc::format!(
            "odd d={d} needs even weight, got w={w}"
        )));
    }
    let eps = epsilon_for(d, d_plus).ok_or_else(|| {
        Error::Domain(alloc::format!(
            "d_plus={d_plus} is not admissible for d={d}"
        ))
    })?;
    let mut inst = build_generic_instance(d, d_plus, eps, true)?;
    let s = d - r;
    let sigma = 0u32;
    let mut v = Verdict::new(
        "thmfact",
        &[("d", d as i64), ("d_plus", d_plus as i64), ("r", r as i64), ("w", w), ("w_chi", w_chi)],
        "c+_sigma(M (x) RM(chi)) ~ (2pi i)^(-[(d+1)/2] w(chi)) delta_sigma[chi0 eps_L]^r delta_sigma(M) a* Q_sigma(chi)^(r-[(d+1)/2]) prod_(j<=s) Q_j",
    );

    let t = &mut inst.table;
    let a_chi_p = t.register("a+chi", &[ClassId::TRANSCENDENTAL])?;
    let a_chi_m = t.register("a-chi", &[ClassId::TRANSCENDENTAL])?;
    let lam_chi = t.register("lambdachi", &[ClassId::TRANSCENDENTAL])?;
    let mu_chi = t.register("muchi", &[ClassId::E_TENSOR_K])?;
    let del_chi = t.register("deltachi", &[ClassId::TRANSCENDENTAL])?;
    let a_chi = |sg: Sign| LaurentPoly::var(if sg == Sign::Plus { a_chi_p } else { a_chi_m });
    let lam_inv = LaurentPoly::monomial(Monomial::from_pairs([(lam_chi, -1)]));
    let b_chi = |sg: Sign| &(&pm_one(sg) * &lam_inv) * &a_chi(sg);

    let first: Vec<(usize, LaurentPoly)> = (1..=r).map(|j| (j, LaurentPoly::one())).collect();
    let build = |rows_sign: Sign, lead: LaurentPoly, tail: LaurentPoly| -> Matrix {
        let mut cols = first
            .iter()
            .map(|(j, _)| (*j, lead.clone()))
            .collect::<Vec<_>>();
        cols.extend((1..=s).map(|j| (j, tail.clone())));
        inst.columns(rows_sign, &cols)
    };
    let mut det_v = Vec::new();
    for sg in [Sign::Plus, Sign::Minus] {
        let mut tmat = build(Sign::Plus, a_chi(sg), b_chi(sg));
        tmat.extend(build(Sign::Minus, a_chi(sg.flip()), b_chi(sg.flip())));
        let mut vmat = build(Sign::Plus, LaurentPoly::one(), pm_one(sg));
        vmat.extend(build(Sign::Minus, LaurentPoly::one(), pm_one(sg.flip())));
        let det_t = det(&tmat)?;
        let dv = det(&vmat)?;
        let q_chi = Monomial::from_pairs([(lam_chi, 1), (mu_chi, 1), (del_chi, -1)]);
        let k = (d - r) as i32;
        let factor = Monomial::from_pairs([(mu_chi, k), (del_chi, -k)])
            .mul(&q_chi.pow(-k))
            .mul(&Monomial::from_pairs([(
                if sg == Sign::Plus { a_chi_p } else { a_chi_m },
                d_plus as i32,
            )]))
            .mul(&Monomial::from_pairs([(
                if sg == Sign::Plus { a_chi_m } else { a_chi_p },
                (d - d_plus) as i32,
            )]));
        v.push(Step::identity(
            &alloc::format!("detT{}", sg.as_char()),
            "det T = mu^(d-r) delta^(r-d) Q(chi)^(r-d) (a~)^d+ (a~')^d- det V",
            "det T^pm = mu(chi)^(d-r) delta(chi)^(r-d) Q(chi)^(r-d) a~^pm(chi)^(d+) a~^mp(chi)^(d-) det V^pm",
            &det_t,
            &dv.mul_monomial(&factor),
            &inst.table,
        ));
        det_v.push(dv);
    }
    let sign_flip = if (d - r) % 2 == 0 {
        LaurentPoly::one()
    } else {
        LaurentPoly::int(-1)
    };
    v.push(Step::identity(
        "detV-",
        "det V- = (-1)^(d-r) det V+",
        "det V^- = (-1)^(d-r) det V^+",
        &det_v[1],
        &(&sign_flip * &det_v[0]),
        &inst.table,
    ));
    let (full, dp, dm) = minors(&inst)?;
    let upper = poly_product(((d_plus + 1)..=r).map(|j| inst.q(j).expect("j in range")));
    let found = proportional_up_to_units(
        &det_v[0],
        &(&(&dp * &dm) * &upper),
        ClassId::E_TENSOR_K,
        &inst.table,
    )?;
    let v_ok = found.is_some();
    v.push(Step::proportional(
        "detV+",
        "det V+ ~ det P~+ det P~- prod_(j=d++1..r) Q_j",
        "det V^+ ~ det P~+ det P~- prod_(d+ < j <= r) Q_j",
        found,
        &inst.table,
    ));
    let found = proportional_up_to_units(
        &full,
        &expr_delta_q_rhs(&inst, &dp, &dm)?,
        ClassId::E_TENSOR_K,
        &inst.table,
    )?;
    let expr_ok = found.is_some();
    v.push(Step::proportional(
        "exprdeltaQ",
        "det P~ ~ prod Q_j^-1 det P~+ det P~-",
        "det P~ ~ delta(A)^-[d/2] prod_(j<=[d/2]) Q_j^-1 det P~+ det P~-",
        found,
        &inst.table,
    ));

    let (mut axioms, qsteps) = quadratic_axioms(&inst, sigma)?;
    for st in qsteps {
        v.push(st);
    }
    axioms.extend(instance_period_axioms(&inst, expr_ok, sigma));
    if v_ok {
        axioms.push(Axiom::equiv(
            "detV+",
            aux("det V+"),
            aux("det P~+")
                .mul(&aux("det P~-"))
                .mul(&qprod((d_plus + 1)..=r, sigma)),
            ClassId::E_TENSOR_K,
            "det V^+ ~ det P~+ det P~- prod_(d+ < j <= r) Q_j",
            Grade::Verified,
        ));
    }
    let lattice = inst.table.lattice().clone();
    let target = aux("det V+").div(
        &PeriodExpr::one()
            .times(PeriodSym::delta(M, Some(sigma)), -1)
            .mul(&qprod(1..=s, sigma)),
    );
    let out = lattice_check(&target, &axioms, ClassId::E_TENSOR_K, &lattice);
    v.push(Step::lattice(
        "detV-delta",
        "det V+ ~ delta(M)^-1 prod_(j<=s) Q_j",
        "det V^+ ~ delta_sigma(M)^-1 prod_(j<=s) Q_j",
        out,
        true,
    ));

    // Period-level closing argument.
    let apm = |sg: Sign| PeriodSym::APM { sigma, sign: sg };
    let k = (d - r) as i64;
    for (idx, sg) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
        if v.steps
            .iter()
            .any(|st| st.label == alloc::format!("detT{}", sg.as_char()) && st.passed)
        {
            axioms.push(Axiom::equiv(
                &alloc::format!("detT{}", sg.as_char()),
                aux(&alloc::format!("det T{}", sg.as_char())),
                PeriodExpr::one()
                    .times(delta_chi(sigma), -k)
                    .times(PeriodSym::QChi(sigma), -k)
                    .times(apm(sg), d_plus as i64)
                    .times(apm(sg.flip()), (d - d_plus) as i64)
                    .mul(&aux(&alloc::format!("det V{}", sg.as_char()))),
                ClassId::E_TENSOR_K,
                "det T^pm ~ delta(chi)^(r-d) Q(chi)^(r-d) a^pm(chi)^(d+) a^mp(chi)^(d-) det V^pm",
                Grade::Verified,
            ));
        }
        if idx == 1 && v.step("detV-").is_some_and(|st| st.passed) {
            axioms.push(Axiom::equiv(
                "detV-",
                aux("det V-"),
                aux("det V+"),
                ClassId::E_TENSOR_K,
                "det V^- = (-1)^(d-r) det V^+",
                Grade::Verified,
            ));
        }
        axioms.push(Axiom::equiv(
            &alloc::format!("c-det[N^v,{}]", sg.as_char()),
            PeriodExpr::sym(PeriodSym::c(N_DUAL, Some(sigma), sg)),
            aux(&alloc::format!("det T{}", sg.as_char())),
            ClassId::E_TENSOR_K,
            "c^pm_sigma((M (x) RM(chi))^v) ~ det T^pm",
            Grade::Cited,
        ));
        axioms.push(Axiom::equiv(
            &alloc::format!("a-vs-c[RM^v,{}]", sg.as_char()),
            PeriodExpr::sym(apm(sg)),
            PeriodExpr::sym(PeriodSym::c(RM_DUAL, Some(sigma), sg)),
            ClassId::E_TENSOR_K,
            "a^pm_sigma(chi) ~ c^pm_sigma(RM(chi)^v)",
            Grade::Cited,
        ));
    }
    let dual_sign = if (w + 1) % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    axioms.push(Axiom::equiv(
        "exprper",
        PeriodExpr::sym(PeriodSym::c(N_MOTIVE, Some(sigma), Sign::Plus)),
        PeriodExpr::one()
            .times(PeriodSym::TwoPiI, -(w + w_chi) * d as i64)
            .times(delta_chi(sigma), d as i64)
            .times(PeriodSym::c(N_DUAL, Some(sigma), dual_sign), 1),
        ClassId::E_TENSOR_K,
        "c+_sigma(N) ~ (2pi i)^(-(w+w(chi))d) delta_sigma[chi0 eps_L]^d c^((-1)^(w+1))_sigma(N^v)",
        Grade::Cited,
    ));
    axioms.push(Axiom::equiv(
        "c+c-[RM^v]",
        PeriodExpr::one()
            .times(PeriodSym::c(RM_DUAL, Some(sigma), Sign::Plus), 1)
            .times(PeriodSym::c(RM_DUAL, Some(sigma), Sign::Minus), 1),
        PeriodExpr::one()
            .times(PeriodSym::TwoPiI, w_chi)
            .times(PeriodSym::QChi(sigma), 1),
        ClassId::E_TENSOR_K,
        "c+_sigma(RM(chi)^v) c-_sigma(RM(chi)^v) ~ (2pi i)^w(chi) Q_sigma(chi)",
        Grade::Cited,
    ));
    axioms.push(Axiom::equiv(
        "delta-squared[M]",
        PeriodExpr::one().times(PeriodSym::delta(M, Some(sigma)), 2),
        PeriodExpr::one().times(PeriodSym::TwoPiI, -w * d as i64),
        ClassId::E_TENSOR_K,
        "delta_sigma(M)^2 ~ (2pi i)^(-wd)",
        Grade::Cited,
    ));
    let stmt = thmfact_statement(d, d_plus, r, w_chi, sigma);
    let out = lattice_check(&stmt.relation, &axioms, ClassId::E_TENSOR_K, &lattice);
    v.push(Step::lattice(
        "thmfact",
        "c+_sigma(M (x) RM(chi)) factorization",
        &stmt.anchor,
        out,
        true,
    ));
    Ok((v, axioms))
}

/// Short human-readable summary of a verdict.
pub fn summary(v: &Verdict) -> String {
    let params: Vec<String> = v
        .params
        .iter()
        .map(|(k, x)| alloc::format!("{k}={x}"))
        .collect();
    alloc::format!(
        "{} [{}] {}",
        v.claim_id,
        params.join(","),
        if v.passed() { "ok" } else { "FAILED" }
    )
}
