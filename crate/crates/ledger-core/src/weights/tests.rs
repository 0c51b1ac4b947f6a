use super::*;
use alloc::vec;
use proptest::prelude::*;

fn one(n: usize, r: usize) -> CompactShape {
    CompactShape::uniform(n, r, 1).unwrap()
}

fn wv(row: &[i64], a0: i64) -> WeightVector {
    WeightVector::new(vec![row.to_vec()], a0).unwrap()
}

/// All permutations of 0..n, used as an independent enumeration.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn xi_examples() {
    assert_eq!(xi(&wv(&[0, 0, 0], 5)), 10);
    assert_eq!(xi(&wv(&[1, 0, -1], 0)), 0);
    assert_eq!(xi(&wv(&[2, 1], 3)), 9);
}

#[test]
fn dominance_examples() {
    assert!(is_dominant(&wv(&[3, 1, 0], 0), &one(3, 2), Dominance::Full));
    assert!(!is_dominant(
        &wv(&[1, 3, 0], 0),
        &one(3, 2),
        Dominance::Full
    ));
    assert!(!is_dominant(
        &wv(&[1, 3, 0], 0),
        &one(3, 2),
        Dominance::Compact
    ));
    assert!(is_dominant(&wv(&[1, 3], 0), &one(2, 1), Dominance::Compact));
}

#[test]
fn conj_and_dual() {
    assert_eq!(conj_weight(&wv(&[1, -1], 0)), wv(&[1, -1], 0));
    assert_eq!(conj_weight(&wv(&[2, 1], 0)), wv(&[-1, -2], 3));
    assert_eq!(conj_weight(&wv(&[0, 0, 0], 4)), wv(&[0, 0, 0], 4));
    let mu = wv(&[4, 2, -1], 3);
    let c = conj_weight(&mu);
    let d = dual_weight(&mu);
    assert_eq!(c.rows, d.rows);
    assert_eq!(c.a0, d.a0 + xi(&mu));
}

#[test]
fn w1_examples() {
    let s = one(3, 3);
    assert_eq!(enumerate_w1(&s), vec![WeylElem::identity(&s)]);
    let s = one(3, 2);
    let w1 = enumerate_w1(&s);
    let mut lens: Vec<usize> = w1.iter().map(length).collect();
    lens.sort();
    assert_eq!(lens, vec![0, 1, 2]);
    // w_j sends j to n and keeps the order elsewhere; its length is n − j
    for j in 0..3 {
        let mut img: Vec<usize> = (0..3).filter(|&x| x != 2).collect();
        img.insert(j, 2);
        // img lists w(0..n) with w(j) = n−1
        let mut p = vec![0; 3];
        let mut rest = (0..2).collect::<Vec<_>>().into_iter();
        for (i, slot) in p.iter_mut().enumerate() {
            *slot = if i == j { 2 } else { rest.next().unwrap() };
        }
        let w = WeylElem::new(vec![p]).unwrap();
        assert!(w1.contains(&w));
        assert_eq!(length(&w), 3 - (j + 1));
        let _ = img;
    }
    assert_eq!(enumerate_w1(&one(4, 2)).len(), 6);
}

#[test]
fn longest_elements() {
    let s = one(3, 3);
    assert_eq!(length(&WeylElem::w0(&s)), 3);
    let s = one(3, 2);
    let w01 = WeylElem::w0_1(&s);
    assert_eq!(length(&w01), s.d());
    // w_0^1(i) = i + r for i ≤ s, i − s otherwise (1-based)
    assert_eq!(w01.one_based(), vec![vec![3, 1, 2]]);
    assert_eq!(flat(&WeylElem::identity(&s), &s), w01);
    assert_eq!(flat(&WeylElem::w0(&s), &s), WeylElem::w0_compact(&s));
}

#[test]
fn dot_action_examples() {
    let s = one(2, 1);
    let w = WeylElem::new(vec![vec![1, 0]]).unwrap();
    let mu = wv(&[1, -1], 0);
    assert_eq!(dot_action(&w, &mu, &s).unwrap(), wv(&[-2, 2], 0));
    assert_eq!(dot_action(&WeylElem::identity(&s), &mu, &s).unwrap(), mu);
    let s = one(3, 2);
    let mu = wv(&[1, 0, -1], 0);
    let w = WeylElem::new(vec![vec![2, 0, 1]]).unwrap();
    let l = dot_action(&w, &mu, &s).unwrap();
    assert_eq!(l, wv(&[-1, -2, 3], 0));
    assert!(is_dominant(&l, &s, Dominance::Compact));
}

#[test]
fn lambda_flat_examples() {
    assert_eq!(
        lambda_flat(&wv(&[1, -1], 0), &one(2, 1)).unwrap(),
        wv(&[-2, 2], 0)
    );
    assert_eq!(
        lambda_flat(&wv(&[0, 0, 0, 0], 0), &one(4, 3)).unwrap(),
        wv(&[-1, -1, -1, 3], 0)
    );
    assert!(lambda_flat(&wv(&[1, 3, 0], 0), &one(3, 2)).is_err());
}

#[test]
fn hodge_pq_examples() {
    assert_eq!(hodge_pq(&wv(&[1, -1], 0), &one(2, 1)).unwrap(), (-1, 1));
    assert_eq!(hodge_pq(&wv(&[0, 0], 0), &one(2, 1)).unwrap(), (0, 0));
    assert_eq!(hodge_pq(&wv(&[0, 0, 0], 4), &one(3, 2)).unwrap(), (-4, -4));
}

#[test]
fn mu_of_eta_examples() {
    let eta = InfinityType::from_pairs(&[(1, 0)]);
    assert_eq!(mu_of_eta(&eta, 2).unwrap(), wv(&[1, 1], 0));
    let eta = InfinityType::from_pairs(&[(0, 0)]);
    assert_eq!(mu_of_eta(&eta, 3).unwrap(), wv(&[0, 0, 0], 0));
    let eta = InfinityType::from_pairs(&[(2, -2)]);
    assert_eq!(mu_of_eta(&eta, 3).unwrap(), wv(&[4, 4, 4], -6));
}

#[test]
fn hodge_decomposition_examples() {
    let s = one(3, 3);
    let mu = wv(&[2, 1, 0], 1);
    let h = hodge_decomposition_indices(&mu, &s, 0).unwrap();
    assert_eq!(h.len(), 1);
    let (p, _) = hodge_pq(&mu, &s).unwrap();
    assert_eq!((h[0].p, h[0].q), (p, -xi(&mu) - p));

    let s = one(3, 2);
    let h = hodge_decomposition_indices(&wv(&[1, 0, -1], 0), &s, 2).unwrap();
    assert_eq!(h.len(), 3);
    let mut ps: Vec<i64> = h.iter().map(|x| x.p).collect();
    ps.sort();
    ps.dedup();
    assert_eq!(ps.len(), 3);
    assert!(h.iter().all(|x| x.p + x.q == 2));
}

/// W¹ cardinality and membership against a brute-force filter of ∏ S_n.
#[test]
fn w1_matches_bruteforce() {
    for n in 1..=5 {
        for e in 1..=2 {
            let shapes: Vec<CompactShape> = if e == 1 {
                (0..=n).map(|r| one(n, r)).collect()
            } else {
                (0..=n)
                    .flat_map(|r1| (0..=n).map(move |r2| (r1, r2)))
                    .map(|(r1, r2)| CompactShape::new(n, vec![(r1, n - r1), (r2, n - r2)]).unwrap())
                    .collect()
            };
            for s in shapes {
                let w1 = enumerate_w1(&s);
                let expect: usize = s.places.iter().map(|&(r, _)| binom(n, r)).product();
                assert_eq!(w1.len(), expect);
                let perms = all_perms(n);
                let mut brute = 0;
                let mut stack = vec![Vec::<Vec<usize>>::new()];
                while let Some(partial) = stack.pop() {
                    if partial.len() == s.e() {
                        let w = WeylElem { perms: partial };
                        if in_w1(&w, &s) {
                            brute += 1;
                            assert!(w1.contains(&w));
                        }
                        continue;
                    }
                    for p in &perms {
                        let mut q = partial.clone();
                        q.push(p.clone());
                        stack.push(q);
                    }
                }
                assert_eq!(brute, expect);
                for w in &w1 {
                    let f = flat(w, &s);
                    assert!(in_w1(&f, &s));
                    assert_eq!(flat(&f, &s), *w);
                    assert_eq!(length(&f), s.d() - length(w));
                }
            }
        }
    }
}

fn arb_dominant(n: usize, e: usize) -> impl Strategy<Value = WeightVector> {
    (
        prop::collection::vec(prop::collection::vec(-5i64..=5, n), e),
        -4i64..=4,
    )
        .prop_map(|(mut rows, a0)| {
            for r in rows.iter_mut() {
                r.sort_by(|a, b| b.cmp(a));
            }
            WeightVector { rows, a0 }
        })
}

/// Self-conjugate μ: rows with a_i = −a_{n+1−i} + c and a₀ fixed by c(μ) = μ.
fn arb_self_conjugate(n: usize, e: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(prop::collection::vec(0i64..=4, n / 2), e).prop_map(move |halves| {
        let rows: Vec<Vec<i64>> = halves
            .into_iter()
            .map(|h| {
                let mut top: Vec<i64> = h.clone();
                top.sort_by(|a, b| b.cmp(a));
                let mut row = top.clone();
                if n % 2 == 1 {
                    row.push(0);
                }
                row.extend(top.iter().rev().map(|x| -x));
                row
            })
            .collect();
        WeightVector { rows, a0: 0 }
    })
}

fn arb_shape(n: usize, e: usize) -> impl Strategy<Value = CompactShape> {
    prop::collection::vec(0..=n, e).prop_map(move |rs| {
        CompactShape::new(n, rs.into_iter().map(|r| (r, n - r)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dot_action_lands_in_compact_chamber(
        (shape, mu) in (1usize..=4, 1usize..=2).prop_flat_map(|(n, e)| (arb_shape(n, e), arb_dominant(n, e)))
    ) {
        for w in enumerate_w1(&shape) {
            let l = dot_action(&w, &mu, &shape).unwrap();
            prop_assert!(is_dominant(&l, &shape, Dominance::Compact));
            prop_assert_eq!(xi(&l), xi(&mu));
        }
    }

    #[test]
    fn flat_commutes_with_dot_action(
        (shape, mu) in (1usize..=5, 1usize..=2).prop_flat_map(|(n, e)| (arb_shape(n, e), arb_self_conjugate(n, e)))
    ) {
        prop_assert_eq!(conj_weight(&mu), mu.clone());
        for w in enumerate_w1(&shape) {
            let lhs = lambda_flat(&dot_action(&w, &mu, &shape).unwrap(), &shape).unwrap();
            let rhs = dot_action(&flat(&w, &shape), &mu, &shape).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let d = shape.d() as i64;
        prop_assert!(hodge_decomposition_indices(&mu, &shape, d).is_ok());
    }

    #[test]
    fn lambda_flat_preserves_xi(
        (shape, mu) in (1usize..=4, 1usize..=2).prop_flat_map(|(n, e)| (arb_shape(n, e), arb_dominant(n, e)))
    ) {
        for w in enumerate_w1(&shape) {
            let l = dot_action(&w, &mu, &shape).unwrap();
            let f = lambda_flat(&l, &shape).unwrap();
            prop_assert_eq!(xi(&f), xi(&l));
            let (p, q) = hodge_pq(&l, &shape).unwrap();
            prop_assert_eq!(p + q, -xi(&l));
        }
    }
}
