//! Schur elements, generalized hooks, `f_λ` and `g_λ`.

use grpn_core::combin::{Composition, Multipartition, Partition};
use grpn_core::elements::{flam_eigen_oracle, symmetric_group, trace_vbtb};
use grpn_core::exactnum::cyclo::rat;
use grpn_core::exactnum::{generic_field, specialize, Mat, Mono, ParamField, Scalar, SpecPoint};
use grpn_core::scalars::{
    f_lambda_closed, f_lambda_via_schur, f_shift_factor, factorization_exponent, g_lambda, gamma_b, hook_datum,
    root_data, scalar_bundle, schur_element, schur_element_b, schur_element_params, verify_factorization,
};
use grpn_core::seminormal::{SeminormalRep, Token, Word};
use grpn_core::Error;
use proptest::prelude::*;

fn mp(v: &[&[u32]]) -> Multipartition {
    Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec())
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// The Ariki–Koike basis words `L_1^{a_1} ⋯ L_n^{a_n} T_w`.
fn ak_basis(r: usize, n: usize) -> Vec<(bool, Word)> {
    let mut exps = vec![vec![]];
    for _ in 0..n {
        exps = exps
            .into_iter()
            .flat_map(|e: Vec<usize>| {
                (0..r).map(move |a| {
                    let mut e2 = e.clone();
                    e2.push(a);
                    e2
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for e in &exps {
        for w in symmetric_group(n) {
            let mut word = Word::one();
            for (k, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    word.0.push(Token::L(k + 1));
                }
            }
            let red = w.reduced_word();
            let is_one = e.iter().all(|&a| a == 0) && red.is_empty();
            out.push((is_one, word.then(&Word::t_word(&red))));
        }
    }
    out
}

/// Recover `1/s_λ` by solving `Σ_λ χ^λ(h) x_λ = τ(h)` over the Ariki–Koike
/// basis, where `τ` is 1 on the identity and 0 on every other basis element.
fn schur_by_linear_solve<F: ParamField>(f: &F, n: usize) -> Vec<(Multipartition, F::E)> {
    let shapes = Multipartition::all(f.p() * f.d(), n);
    let reps: Vec<_> = shapes.iter().map(|l| SeminormalRep::build(l, f).unwrap()).collect();
    let basis = ak_basis(f.p() * f.d(), n);
    let rows: Vec<Vec<F::E>> = basis
        .iter()
        .map(|(_, w)| reps.iter().map(|r| r.character(w).unwrap()).collect())
        .collect();
    let rhs: Vec<F::E> = basis.iter().map(|(one, _)| if *one { f.one() } else { f.zero() }).collect();
    let m = Mat::from_rows(rows).unwrap();
    let (x, unique) = m.solve_general(&rhs).unwrap().expect("consistent");
    assert!(unique);
    shapes.into_iter().zip(x).map(|(l, v)| (l, v.inv().unwrap())).collect()
}

fn eps_mono(d: usize, e: i64) -> Mono {
    let mut m = Mono::one(d);
    m.eps = e;
    m
}

#[test]
fn hook_datum_values() {
    let lam = mp(&[&[2], &[1]]);
    // h_{11}((2),(1)) = 2 − 1 + 1 − 1 + 1 = 2, components in blocks 1, 2
    let h = hook_datum(&lam, 1, 1, 1, 2, 1).unwrap();
    assert_eq!((h.value.eps, h.value.q, h.value.qs.clone()), (-1, 2, vec![0]));
    let lam = mp(&[&[1], &[], &[], &[1]]);
    let h = hook_datum(&lam, 1, 1, 4, 1, 2).unwrap();
    // s = 4 = (p_s, d_s) = (2, 2), t = 1 = (1, 1)
    assert_eq!((h.value.eps, h.value.qs.clone()), (1, vec![-1, 1]));
    assert!(hook_datum(&lam, 1, 1, 5, 1, 2).is_err());
    assert!(hook_datum(&lam, 2, 1, 4, 1, 2).is_err());
}

#[test]
fn rank_one_schur_elements() {
    let f = generic_field(2, 1).unwrap();
    let one_param = [Mono::big_q(1, 1)];
    let q = f.q();
    let s1 = schur_element_params(&[part(&[1])], &one_param, &f).unwrap();
    assert!(s1.is_one());
    let s2 = schur_element_params(&[part(&[2])], &one_param, &f).unwrap();
    assert_eq!(s2, q.add(&f.one()));
    let s11 = schur_element_params(&[part(&[1, 1])], &one_param, &f).unwrap();
    assert_eq!(s11, q.add(&f.one()).div(&q).unwrap());
    assert!(matches!(
        schur_element_params(&[part(&[1])], &[], &f),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn schur_elements_match_the_trace_form() {
    for (p, d, n) in [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 1, 3), (4, 1, 2)] {
        let pt = SpecPoint::sample(p, d, n, 13).unwrap();
        for (lam, s) in schur_by_linear_solve(&pt, n) {
            assert_eq!(schur_element(&lam, &pt).unwrap(), s, "λ = {:?}", lam);
        }
    }
    // symbolically on the smallest case
    let f = generic_field(2, 1).unwrap();
    for (lam, s) in schur_by_linear_solve(&f, 2) {
        assert_eq!(schur_element(&lam, &f).unwrap(), s, "λ = {:?}", lam);
    }
}

#[test]
fn trace_consistency_on_spanning_words() {
    for r_pd in [(2, 1), (3, 1), (4, 1), (2, 2)] {
        let (p, d) = r_pd;
        for n in 1..=3 {
            let pt = SpecPoint::sample(p, d, n, 3).unwrap();
            let shapes = Multipartition::all(p * d, n);
            let mut words = vec![(true, Word::one())];
            for i in 1..n {
                words.push((false, Word::token(Token::T(i))));
            }
            for a in 1..(p * d) {
                words.push((false, Word((0..a).map(|_| Token::L(1)).collect())));
            }
            for (is_one, w) in words {
                let mut acc = pt.zero();
                for lam in &shapes {
                    let chi = SeminormalRep::build(lam, &pt).unwrap().character(&w).unwrap();
                    acc = acc.add(&chi.div(&schur_element(lam, &pt).unwrap()).unwrap());
                }
                assert_eq!(acc.is_one(), is_one);
                assert_eq!(acc.is_zero(), !is_one);
            }
        }
    }
}

#[test]
fn schur_element_b_examples() {
    let f = generic_field(2, 1).unwrap();
    assert!(schur_element_b(&mp(&[&[1], &[1]]), &comp(&[1, 1]), &f).unwrap().is_one());
    let s = schur_element_b(&mp(&[&[2], &[]]), &comp(&[2, 0]), &f).unwrap();
    assert_eq!(s, f.q().add(&f.one()));
    // a single nonempty block is a single factor at parameters εQ
    let g = generic_field(3, 1).unwrap();
    let lam = mp(&[&[], &[1, 1], &[]]);
    let mut e2 = Mono::big_q(1, 1);
    e2.eps = 2;
    let want = schur_element_params(&[part(&[1, 1])], &[e2], &g).unwrap();
    assert_eq!(schur_element_b(&lam, &comp(&[0, 2, 0]), &g).unwrap(), want);
    assert!(matches!(
        schur_element_b(&lam, &comp(&[2, 0, 0]), &g),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn f_lambda_example() {
    let f = generic_field(2, 1).unwrap();
    let lam = mp(&[&[1], &[1]]);
    let b = comp(&[1, 1]);
    let mut eq = Mono::q(1, 1);
    eq.eps = 1;
    let eqm1 = f.monomial(&eq).sub(&f.one());
    let mut lead = Mono::big_q(1, 1);
    lead.qs[0] = 2;
    lead.eps = 1;
    let want = f.monomial(&lead).mul(&eqm1).mul(&eqm1);
    assert_eq!(f_lambda_closed(&lam, &b, &f).unwrap(), want);
    assert_eq!(f_lambda_via_schur(&lam, &b, &f).unwrap(), want);
    // g_λ = Q_1 (εq − 1), α = 0, γ = 0
    let g = g_lambda(&lam, &b, &f).unwrap();
    assert_eq!(g, f.monomial(&Mono::big_q(1, 1)).mul(&eqm1));
    let rd = root_data(&lam, &b, 2, 1).unwrap();
    assert_eq!((rd.o, rd.l, rd.n_lam, rd.alpha, rd.gamma), (1, 2, 1, 0, 0));
    // g^2 = ε f
    assert_eq!(g.mul(&g), f.monomial(&eps_mono(1, 1)).mul(&want));
}

#[test]
fn g_equals_f_when_not_shift_symmetric() {
    let f = generic_field(2, 1).unwrap();
    for b in Composition::all(2, 3) {
        for lam in Multipartition::enumerate_pdb(1, &b) {
            let rd = root_data(&lam, &b, 2, 1).unwrap();
            if rd.l == 1 {
                assert_eq!(g_lambda(&lam, &b, &f).unwrap(), f_lambda_closed(&lam, &b, &f).unwrap());
                assert_eq!(f_shift_factor(&lam, &b, 1, &f).unwrap(), f_lambda_closed(&lam, &b, &f).unwrap());
                assert!(f_shift_factor(&lam, &b, 2, &f).is_err());
            }
        }
    }
}

#[test]
fn f_lambda_two_ways_on_grid() {
    // f_λ = (s_λ / s_λ^b) Tr(v_b T_b), with Tr(v_b T_b) also checked against
    // its character expansion.
    for (p, d) in [(2, 1), (3, 1), (2, 2)] {
        let f = generic_field(p, d).unwrap();
        for b in Composition::all(p, 3) {
            for lam in Multipartition::enumerate_pdb(d, &b) {
                let closed = f_lambda_closed(&lam, &b, &f).unwrap();
                assert_eq!(closed, f_lambda_via_schur(&lam, &b, &f).unwrap(), "{:?}", lam);
                assert!(closed.is_laurent_polynomial());
                assert!(g_lambda(&lam, &b, &f).unwrap().is_laurent_polynomial());
            }
        }
    }
    let f = generic_field(2, 1).unwrap();
    for b in Composition::all(2, 2) {
        let chk = trace_vbtb(&f, &b).unwrap();
        assert!(chk.passed());
        for lam in Multipartition::enumerate_pdb(1, &b) {
            let via = schur_element(&lam, &f)
                .unwrap()
                .div(&schur_element_b(&lam, &b, &f).unwrap())
                .unwrap()
                .mul(&chk.expansion);
            assert_eq!(via, f_lambda_closed(&lam, &b, &f).unwrap());
        }
    }
}

#[test]
fn f_lambda_matches_eigenvalues() {
    for (p, d) in [(2, 1), (3, 1), (2, 2)] {
        let f = generic_field(p, d).unwrap();
        for b in Composition::all(p, 3) {
            for pt in SpecPoint::sample_many(p, d, 3, 77, 2).unwrap() {
                for (lam, v) in flam_eigen_oracle(&pt, &b).unwrap() {
                    let closed = f_lambda_closed(&lam, &b, &f).unwrap();
                    assert_eq!(specialize(&closed, &pt).unwrap(), v, "{:?}", lam);
                    assert_eq!(f_lambda_closed(&lam, &b, &pt).unwrap(), v);
                    assert!(!g_lambda(&lam, &b, &pt).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn factorization_on_grid() {
    for p in 2..=4 {
        for d in 1..=2 {
            let f = generic_field(p, d).unwrap();
            for n in 0..=4 {
                for lam in Multipartition::all(p * d, n) {
                    let (_, l) = lam.orbit_order(p, d).unwrap();
                    if l == 1 {
                        continue;
                    }
                    let b = lam.block_sizes(p, d).unwrap();
                    let chk = verify_factorization(&lam, &b, &f).unwrap();
                    assert!(chk.passed(), "p = {}, d = {}, λ = {:?}", p, d, lam);
                    let rd = root_data(&lam, &b, p, d).unwrap();
                    let e = factorization_exponent(&rd, d);
                    assert_eq!(e as usize, d * rd.o * (n / l) * (l * (l - 1) / 2));
                }
            }
        }
    }
}

#[test]
fn integrality_of_root_data() {
    for (p, d) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)] {
        for n in 0..=4 {
            for lam in Multipartition::all(p * d, n) {
                let b = lam.block_sizes(p, d).unwrap();
                let rd = root_data(&lam, &b, p, d).unwrap();
                assert_eq!(rd.o * rd.l, p);
                assert_eq!(rd.n_lam * rd.l, n);
                assert_eq!(rd.gamma * rd.l as i64, gamma_b(&lam, &b, p, d).unwrap());
            }
        }
    }
}

#[test]
fn bundle_is_consistent() {
    let f = generic_field(2, 1).unwrap();
    let lam = mp(&[&[1], &[1]]);
    let b = comp(&[1, 1]);
    let bundle = scalar_bundle(&lam, &b, &f).unwrap();
    assert_eq!(bundle.f, f_lambda_closed(&lam, &b, &f).unwrap());
    assert_eq!(bundle.g, g_lambda(&lam, &b, &f).unwrap());
    assert_eq!(bundle.schur, schur_element(&lam, &f).unwrap());
    assert_eq!(bundle.root.l, 2);
    assert_eq!(bundle.schur_b.as_constant().unwrap().to_rational(), Some(rat(1, 1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Closed formulas evaluated directly at a point agree with the
    /// specialization of their symbolic values.
    #[test]
    fn closed_formulas_commute_with_specialization(idx in 0usize..64, seed in 0u64..5000) {
        let (p, d) = (3, 1);
        let all = Multipartition::all(p * d, 3);
        let lam = all[idx % all.len()].clone();
        let b = lam.block_sizes(p, d).unwrap();
        let f = generic_field(p, d).unwrap();
        let pt = SpecPoint::sample(p, d, 3, seed).unwrap();
        let s = schur_element(&lam, &f).unwrap();
        prop_assert_eq!(specialize(&s, &pt).unwrap(), schur_element(&lam, &pt).unwrap());
        let g = g_lambda(&lam, &b, &f).unwrap();
        prop_assert_eq!(specialize(&g, &pt).unwrap(), g_lambda(&lam, &b, &pt).unwrap());
        prop_assert!(!schur_element(&lam, &pt).unwrap().is_zero());
    }
}
