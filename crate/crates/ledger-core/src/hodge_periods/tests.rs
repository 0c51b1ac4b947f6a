use super::*;
use crate::proof_engine::ledger::lattice_check;
use crate::symlaurent::{proportional_up_to_units, Rat};
use num_traits::Zero;

fn admissible_triples(max_d: usize) -> Vec<(usize, usize, i8)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        if d % 2 == 0 {
            out.push((d, d / 2, 1));
            out.push((d, d / 2, -1));
        } else {
            let m = (d + 1) / 2;
            out.push((d, m, 1));
            out.push((d, m - 1, -1));
        }
    }
    out
}

#[test]
fn rejects_inconsistent_signature() {
    assert!(matches!(
        build_generic_instance(3, 2, -1, true),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        build_generic_instance(3, 3, 1, true),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        build_generic_instance(2, 3, 1, true),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        build_generic_instance(0, 0, 1, true),
        Err(Error::Domain(_))
    ));
    assert!(build_generic_instance(3, 1, -1, true).is_ok());
    assert!(!is_admissible(4, 3, 1));
    assert!(is_admissible(5, 2, -1));
}

#[test]
fn d2_matrix_by_hand() {
    let inst = build_generic_instance(2, 1, 1, true).unwrap();
    let t = &inst.table;
    let a = LaurentPoly::var(t.get("a+[1,1]").unwrap());
    let b = LaurentPoly::var(t.get("a-[1,1]").unwrap());
    let lam_inv = LaurentPoly::monomial(Monomial::from_pairs([(t.get("lambda1").unwrap(), -1)]));
    assert_eq!(inst.plus[0][1], &lam_inv * &a);
    assert_eq!(inst.minus[0][1], &(&LaurentPoly::int(-1) * &lam_inv) * &b);
    // det P̃ = -2 λ₁⁻¹ a b
    let expected = &(&(&LaurentPoly::int(-2) * &lam_inv) * &a) * &b;
    assert_eq!(det(&inst.p_tilde()).unwrap(), expected);
}

#[test]
fn relations_hold_up_to_rank_seven() {
    for (d, dp, eps) in admissible_triples(7) {
        for trivial in [true, false] {
            let inst = build_generic_instance(d, dp, eps, trivial).unwrap();
            inst.check_relations().unwrap();
            assert_eq!(inst.plus.len() + inst.minus.len(), d);
        }
    }
}

#[test]
fn middle_column_follows_epsilon() {
    let inst = build_generic_instance(5, 3, 1, true).unwrap();
    assert!(inst.minus.iter().all(|r| r[2].is_zero()));
    assert!(inst.plus.iter().all(|r| !r[2].is_zero()));
    let inst = build_generic_instance(5, 2, -1, true).unwrap();
    assert!(inst.plus.iter().all(|r| r[2].is_zero()));
}

#[test]
fn det_factors_through_deligne_minors() {
    // det P̃ = c · ∏_{j ≤ ⌊d/2⌋} λ_j⁻¹ · c⁺(M^∨) c⁻(M^∨) with c ∈ ℚ^×
    for (d, dp, eps) in admissible_triples(6) {
        let inst = build_generic_instance(d, dp, eps, false).unwrap();
        let dt = det(&inst.p_tilde()).unwrap();
        let mut rhs =
            &c_dual_pm(&inst, Sign::Plus).unwrap() * &c_dual_pm(&inst, Sign::Minus).unwrap();
        for j in 1..=d / 2 {
            rhs = &rhs * &inst.frobenius.lambda[d - j];
        }
        let found = proportional_up_to_units(&dt, &rhs, ClassId::RATIONAL, &inst.table).unwrap();
        let (c, u) = found.unwrap_or_else(|| panic!("d={d} d+={dp}"));
        assert!(u.is_one());
        assert!(!c.is_zero());
    }
}

#[test]
fn degenerate_signature_for_even_rank() {
    let inst = build_generic_instance(4, 3, 1, true).unwrap();
    assert!(matches!(delta_of(&inst), Err(Error::Degenerate(_))));
    let inst = build_generic_instance(4, 2, 1, true).unwrap();
    let delta = delta_of(&inst).unwrap();
    assert_eq!(
        delta.inverse().unwrap().as_laurent().cloned(),
        Some(det(&inst.p_tilde()).unwrap())
    );
}

#[test]
fn quadratic_period_is_pairwise_product() {
    // Q_j Q_{d+1-j} = μ_j μ_{d+1-j} δ(A)^{-2}
    let inst = build_generic_instance(5, 3, 1, false).unwrap();
    for j in 1..=5 {
        let prod = &inst.q(j).unwrap() * &inst.q(6 - j).unwrap();
        let expected = LaurentPoly::monomial(Monomial::from_pairs([
            (inst.mu[j - 1], 1),
            (inst.mu[5 - j], 1),
            (inst.delta_a, -2),
        ]));
        assert_eq!(prod, expected);
    }
    // the middle one is ε μ δ(A)⁻¹
    let mid = quadratic_period(&inst, 3).unwrap();
    assert_eq!(
        mid.as_term().map(|(m, c)| (m.clone(), c.clone())),
        Some((
            Monomial::from_pairs([(inst.mu[2], 1), (inst.delta_a, -1)]),
            Rat::from_integer(1.into())
        ))
    );
    assert!(inst.q(0).is_err());
    assert!(inst.q(6).is_err());
}

#[test]
fn hodge_riemann_support() {
    let p = [3, 1, -1];
    let w = 2;
    assert!(check_hodge_riemann(&p, w, &[(1, 3), (2, 2), (3, 1)]));
    assert!(check_hodge_riemann(
        &p,
        w,
        &[(1, 3), (2, 2), (3, 1), (2, 3)]
    ));
    // p_1 + p_2 = 4 > w
    assert!(!check_hodge_riemann(
        &p,
        w,
        &[(1, 3), (2, 2), (3, 1), (1, 2)]
    ));
    assert!(!check_hodge_riemann(&p, w, &[(1, 3), (3, 1)]));
    assert!(!check_hodge_riemann(&p, w, &[(0, 3)]));
}

#[test]
fn twist_rules_compose() {
    // two odd twists give c⁺(M(1)(1)) ∼ (2πi)^{2d⁺} c⁺(M), as for an even twist by 2
    let lat = ClassLattice::standard();
    let m = "M";
    let m1 = tate_twisted(m, 1);
    let mut axioms = twist_rules(m, 3, 2, 1, None, 0);
    axioms.extend(twist_rules(&m1, 3, 1, 1, None, 0));
    let target = PeriodExpr::sym(PeriodSym::c(&tate_twisted(&m1, 1), Some(0), Sign::Plus))
        .div(&PeriodExpr::sym(PeriodSym::c(m, Some(0), Sign::Plus)).times(PeriodSym::TwoPiI, 4));
    let out = lattice_check(&target, &axioms, ClassId::E_TENSOR_K, &lat);
    assert!(out.member, "{}", out.residual);
    let wrong = target.times(PeriodSym::TwoPiI, 1);
    assert!(!lattice_check(&wrong, &axioms, ClassId::E_TENSOR_K, &lat).member);
}

#[test]
fn artin_twist_swaps_for_odd_character() {
    let a = ArtinTwist {
        name: "A".into(),
        eps: -1,
        trivial: false,
    };
    let rules = twist_rules("M", 4, 2, 0, Some(&a), 1);
    let lat = ClassLattice::standard();
    let target = PeriodExpr::sym(PeriodSym::c("M(x)A", Some(1), Sign::Plus)).div(
        &PeriodExpr::sym(PeriodSym::c("M", Some(1), Sign::Minus)).times(
            PeriodSym::DeltaA {
                name: "A".into(),
                sigma: 1,
                trivial: false,
            },
            2,
        ),
    );
    assert!(lattice_check(&target, &rules, ClassId::E_TENSOR_K, &lat).member);
}

#[test]
fn yoshida_needs_k_galois() {
    let ax = yoshida_axioms("M", 3, 2, 2);
    assert_eq!(ax.len(), 3);
    let target = PeriodExpr::sym(PeriodSym::delta("M", None))
        .div(
            &PeriodExpr::one()
                .times(PeriodSym::delta("M", Some(0)), 1)
                .times(PeriodSym::delta("M", Some(1)), 1),
        )
        .times(PeriodSym::DiscKHalf, -3);
    let lat = ClassLattice::standard();
    assert!(lattice_check(&target, &ax, ClassId::K_GALOIS, &lat).member);
    let out = lattice_check(&target, &ax, ClassId::E_TENSOR_K, &lat);
    assert!(!out.member);
    assert_eq!(out.unusable.len(), 3);
}
