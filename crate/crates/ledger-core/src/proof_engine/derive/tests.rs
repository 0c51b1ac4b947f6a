use super::*;
use alloc::string::String;
use alloc::vec;

fn explain(v: &Verdict) -> String {
    v.first_failure()
        .map(|s| alloc::format!("{}: {}", s.label, s.detail))
        .unwrap_or_default()
}

fn shape(n: usize, places: &[(usize, usize)]) -> CompactShape {
    CompactShape::new(n, places.to_vec()).unwrap()
}

#[test]
fn ds_examples() {
    let ev = evaluate_ds(3, 4, 1).unwrap();
    assert_eq!(ev.exponents(), (2, 1, 21));
    assert_eq!(
        ev.factors,
        vec![(8, Parity::Even), (7, Parity::Odd), (6, Parity::Even)]
    );
    assert!(ev.convergent);
    assert_eq!(evaluate_ds(1, 2, 1).unwrap().exponents(), (1, 0, 4));
    assert_eq!(evaluate_ds(2, 3, 2).unwrap().exponents(), (1, 1, 22));
    assert!(!evaluate_ds(3, 3, 1).unwrap().convergent);
    assert!(evaluate_ds(0, 3, 1).is_err());
}

#[test]
fn ds_closed_form_matches_factors() {
    for n in 1..=7 {
        for m in -3..10 {
            for e in 1..=3 {
                assert_eq!(
                    evaluate_ds(n, m, e).unwrap().value,
                    ds_closed_form(n, m, e),
                    "n={n} m={m} e={e}"
                );
            }
        }
    }
}

#[test]
fn maintheorem_example() {
    let v = derive_maintheorem(3, 1, 4, 0, &shape(3, &[(2, 1)])).unwrap();
    assert!(v.passed(), "{}", explain(&v));
    assert_eq!(
        maintheorem_target(3, 1, 4, 0).exponent(&PeriodSym::TwoPiI),
        -9
    );
    assert_eq!(
        maintheorem_target(3, 1, 4, 4).exponent(&PeriodSym::TwoPiI),
        -5
    );
    assert!(matches!(
        derive_maintheorem(3, 1, 3, 0, &shape(3, &[(2, 1)])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn maintheorem_controls_fail() {
    for st in maintheorem_controls(4, 2, 6, 2).unwrap() {
        assert!(st.passed, "{}", st.label);
        assert!(!st.certificate.unwrap().member);
    }
}

#[test]
fn prediction_example() {
    let v = derive_prediction(3, 1, 1, 4, &shape(3, &[(2, 1)])).unwrap();
    assert!(v.passed(), "{}", explain(&v));
    assert!(v.step("formulacritica").unwrap().certificate.is_some());
    let off = derive_prediction_with(
        3,
        1,
        1,
        4,
        &shape(3, &[(2, 1)]),
        PredictionOptions {
            deligne: false,
            verify_local: true,
        },
    )
    .unwrap();
    let st = off.step("predictionsimple").unwrap();
    assert!(!st.passed);
    // the residual carries L(M (x) RM(chi)) against c+
    assert!(!st.certificate.as_ref().unwrap().residual.is_one());
}

#[test]
fn prediction_cited_branch() {
    // r = 1 <= [3/2] at the second place: the global c+ formula is cited
    let v = derive_prediction(3, 2, 2, 5, &shape(3, &[(3, 0), (1, 2)])).unwrap();
    assert!(v.passed(), "{}", explain(&v));
    assert!(v
        .step("formulacritica")
        .unwrap()
        .detail
        .starts_with("cited"));
}

#[test]
fn prediction_even_rank() {
    let v = derive_prediction(4, 2, 0, 5, &shape(4, &[(3, 1), (4, 0)])).unwrap();
    assert!(v.passed(), "{}", explain(&v));
    assert!(v.step("partial~1[root]").unwrap().passed);
}

#[test]
fn discriminant_control() {
    let v = derive_prediction(2, 1, 1, 3, &shape(2, &[(2, 0)])).unwrap();
    assert!(v.step("control:drop-D[E(psi)EL']").unwrap().passed);
    assert!(v.step("control:drop-D[absorbed]").unwrap().passed);
}

#[test]
fn tate_equivalence() {
    for sh in [
        shape(2, &[(1, 1)]),
        shape(2, &[(2, 0)]),
        shape(3, &[(2, 1), (0, 3)]),
    ] {
        let v = check_tate_equivalence(sh.n, sh.e(), &sh).unwrap();
        assert!(v.passed(), "{}", explain(&v));
        assert_eq!(v.steps.len(), 5);
    }
}

#[test]
fn exponent_routes_agree() {
    for n in 1..=6usize {
        for sh in all_signature_splits(n, 2) {
            let s = shape(n, &sh);
            for w in -3..4 {
                for m in -2..8 {
                    assert_eq!(
                        formulacritica_exponent(n, 2, w, m, &s),
                        direct_exponent(n, 2, w, m, &s)
                    );
                }
            }
        }
    }
    let (a, b) = reconcile_a0_form(3, 2, 5, 1, 0);
    assert_eq!(a, b);
    let (a, b) = reconcile_a0_form(3, 2, 5, 1, 2);
    assert_eq!(a - b, 2);
}

#[test]
fn splits_are_exhaustive() {
    assert_eq!(all_signature_splits(3, 2).len(), 16);
    assert_eq!(
        all_signature_splits(2, 1),
        vec![vec![(0, 2)], vec![(1, 1)], vec![(2, 0)]]
    );
}
