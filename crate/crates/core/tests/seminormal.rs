//! Seminormal representations, words and the faithful representation.

use grpn_core::combin::Multipartition;
use grpn_core::exactnum::{generic_field, Mat, Mono, ParamField, SpecPoint};
use grpn_core::seminormal::{
    character, check_relations, element_equal, Faithful, Mode, SeminormalRep, Token, Word,
};
use grpn_core::tableau::{content, enumerate_std};
use proptest::prelude::*;

fn mp(v: &[&[u32]]) -> Multipartition {
    Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn t(i: usize) -> Word {
    Word::token(Token::T(i))
}

fn l(k: usize) -> Word {
    Word::token(Token::L(k))
}

fn scal(m: Mono) -> Word {
    Word::scalar(m)
}

fn q_pow(d: usize, a: i64) -> Mono {
    let mut m = Mono::one(d);
    m.q = a;
    m
}

fn constant(d: usize, c: i64) -> Mono {
    let mut m = Mono::one(d);
    m.coef = grpn_core::exactnum::cyclo::rat(c, 1);
    m
}

fn prod(ws: &[Word]) -> Word {
    Word::product(ws.iter())
}

/// Check a family of relations on every Specht module of `H_{pd,n}`.
fn all_relations_pass<F: ParamField>(f: &F, n: usize) {
    for lam in Multipartition::all(f.p() * f.d(), n) {
        let rep = SeminormalRep::build(&lam, f).unwrap();
        let report = check_relations(&rep);
        assert!(report.passed(), "{:?}: {:?}", lam, report.failures);
        if n > 0 {
            assert!(report.checked > 0);
        }
    }
}

#[test]
fn one_dimensional_examples() {
    let f = generic_field(2, 1).unwrap();
    let row = SeminormalRep::build(&mp(&[&[2], &[]]), &f).unwrap();
    assert_eq!(row.dim(), 1);
    assert_eq!(*row.t_matrix(1).get(0, 0), f.q());
    let col = SeminormalRep::build(&mp(&[&[1, 1], &[]]), &f).unwrap();
    assert_eq!(*col.t_matrix(1).get(0, 0), f.from_int(-1));
}

#[test]
fn l1_on_two_one_box_components() {
    let f = generic_field(2, 1).unwrap();
    let rep = SeminormalRep::build(&mp(&[&[1], &[1]]), &f).unwrap();
    let l1 = rep.l_matrix(1);
    let mut e1 = Mono::big_q(1, 1);
    e1.eps = 1;
    let mut e2 = Mono::big_q(1, 1);
    e2.eps = 2;
    let want = Mat::diagonal(&[f.monomial(&e1), f.monomial(&e2)], &f.zero());
    assert_eq!(l1, want);
}

#[test]
fn jucys_murphy_matrices_match_contents() {
    let f = generic_field(2, 1).unwrap();
    for lam in Multipartition::all(2, 3) {
        let rep = SeminormalRep::build(&lam, &f).unwrap();
        let basis = enumerate_std(&lam);
        assert_eq!(rep.basis(), &basis[..]);
        let qinv = f.q().inv().unwrap();
        let mut lk = rep.t_matrix(0);
        for k in 1..=3 {
            let diag: Vec<_> = basis.iter().map(|s| content(s, k, &f).unwrap()).collect();
            assert_eq!(rep.l_matrix(k), Mat::diagonal(&diag, &f.zero()));
            // recursion L_{k+1} = q^{-1} T_k L_k T_k computed from the T's only
            assert_eq!(lk, rep.l_matrix(k));
            if k < 3 {
                lk = rep.t_matrix(k).mul(&lk).mul(&rep.t_matrix(k)).scale(&qinv);
            }
        }
    }
}

#[test]
fn check_relations_examples() {
    let f = generic_field(2, 1).unwrap();
    let rep = SeminormalRep::build(&mp(&[&[1], &[1]]), &f).unwrap();
    assert!(check_relations(&rep).passed());
    let broken = rep.with_t0_perturbed(&f.one());
    let report = check_relations(&broken);
    assert!(!report.passed());
    assert!(report.failures.iter().any(|s| s.contains("cyclotomic")));
}

#[test]
fn presentation_holds_symbolically() {
    for (p, d, n) in [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2)] {
        all_relations_pass(&generic_field(p, d).unwrap(), n);
    }
}

#[test]
fn presentation_holds_at_separated_points() {
    for (p, d, n) in [(3, 1, 3), (4, 1, 3), (2, 2, 3), (2, 1, 4)] {
        for pt in SpecPoint::sample_many(p, d, n, 7, 3).unwrap() {
            all_relations_pass(&pt, n);
        }
    }
}

#[test]
fn word_evaluation_examples() {
    let f = generic_field(2, 1).unwrap();
    let lam = mp(&[&[2], &[1]]);
    let rep = SeminormalRep::build(&lam, &f).unwrap();
    assert_eq!(rep.eval(&Word::one()).unwrap(), Mat::identity(rep.dim(), &f.zero()));
    let rec = prod(&[scal(q_pow(1, -1)), t(1), l(1), t(1)]);
    assert_eq!(rep.eval(&l(2)).unwrap(), rep.eval(&rec).unwrap());
    // T_1^2 = (q − 1) T_1 + q
    let lhs = prod(&[t(1), t(1)]);
    let rhs = Word::sum(vec![
        prod(&[scal(q_pow(1, 1)), t(1)]),
        prod(&[scal(constant(1, -1)), t(1)]),
        scal(q_pow(1, 1)),
    ]);
    assert_eq!(rep.eval(&lhs).unwrap(), rep.eval(&rhs).unwrap());
    // inverses
    for i in 0..3 {
        let w = prod(&[t(i), Word::token(Token::Tinv(i))]);
        assert_eq!(rep.eval(&w).unwrap(), Mat::identity(rep.dim(), &f.zero()));
    }
    assert!(rep.eval(&t(3)).is_err());
    assert!(rep.eval(&l(4)).is_err());
}

#[test]
fn character_examples() {
    let f = generic_field(2, 1).unwrap();
    for lam in Multipartition::all(2, 3) {
        let dim = enumerate_std(&lam).len() as i64;
        assert_eq!(character(&lam, &Word::one(), &f).unwrap(), f.from_int(dim));
        let sum = enumerate_std(&lam)
            .iter()
            .fold(f.zero(), |acc, s| acc.add(&content(s, 1, &f).unwrap()));
        assert_eq!(character(&lam, &l(1), &f).unwrap(), sum);
    }
    let g = generic_field(2, 1).unwrap();
    assert_eq!(character(&mp(&[&[2], &[]]), &t(1), &g).unwrap(), g.q());
    assert_eq!(character(&mp(&[&[1, 1], &[]]), &t(1), &g).unwrap(), g.from_int(-1));
}

#[test]
fn element_equal_examples() {
    let sym = Mode::Symbolic;
    let lhs = prod(&[t(1), l(1), t(1)]);
    let rhs = prod(&[scal(q_pow(1, 1)), l(2)]);
    assert!(element_equal(2, 1, 2, &lhs, &rhs, sym).unwrap());
    let a = prod(&[l(1), l(2), t(1)]);
    let b = prod(&[t(1), l(1), l(2)]);
    assert!(element_equal(2, 1, 2, &a, &b, sym).unwrap());
    let c = Word::t_word(&[0, 1, 0, 1]);
    let e = Word::t_word(&[1, 0, 1, 0]);
    assert!(element_equal(2, 1, 2, &c, &e, sym).unwrap());
    // and a genuine inequality
    assert!(!element_equal(2, 1, 2, &Word::t_word(&[0, 1]), &Word::t_word(&[1, 0]), sym).unwrap());
    let spec = Mode::Specialize { trials: 3, seed: 11 };
    assert!(element_equal(3, 1, 3, &c, &e, spec).unwrap());
    assert!(!element_equal(3, 1, 3, &Word::t_word(&[0, 1]), &Word::t_word(&[1, 0]), spec).unwrap());
}

#[test]
fn mode_defaults() {
    assert_eq!(Mode::default_for(2, 2, 0), Mode::Symbolic);
    assert_eq!(Mode::default_for(2, 3, 5), Mode::Specialize { trials: 3, seed: 5 });
}

#[test]
fn jucys_murphy_identities_and_symmetric_functions() {
    let pts = SpecPoint::sample_many(3, 1, 4, 3, 3).unwrap();
    for pt in &pts {
        let fa = Faithful::build(pt, 4).unwrap();
        assert_eq!(fa.algebra_dim(), 81 * 24);
        let qw = scal(q_pow(1, 1));
        let one_m_q = Word::sum(vec![Word::one(), prod(&[scal(constant(1, -1)), qw.clone()])]);
        for k in 1..4 {
            // T_k L_k = L_{k+1} (T_k − q + 1)
            let lhs = prod(&[t(k), l(k)]);
            let rhs = prod(&[l(k + 1), Word::sum(vec![t(k), one_m_q.clone()])]);
            assert!(fa.equal(&lhs, &rhs).unwrap());
            // T_k L_{k+1} = L_k T_k + (q − 1) L_{k+1}
            let lhs = prod(&[t(k), l(k + 1)]);
            let rhs = Word::sum(vec![
                prod(&[l(k), t(k)]),
                prod(&[qw.clone(), l(k + 1)]),
                prod(&[scal(constant(1, -1)), l(k + 1)]),
            ]);
            assert!(fa.equal(&lhs, &rhs).unwrap());
        }
        for a in 1..=4 {
            for b in 1..=4 {
                assert!(fa.equal(&prod(&[l(a), l(b)]), &prod(&[l(b), l(a)])).unwrap());
            }
        }
        let e1 = Word::sum((1..=4).map(l).collect());
        let mut e2_terms = Vec::new();
        for a in 1..=4 {
            for b in (a + 1)..=4 {
                e2_terms.push(prod(&[l(a), l(b)]));
            }
        }
        let e2 = Word::sum(e2_terms);
        for i in 0..4 {
            for e in [&e1, &e2] {
                assert!(fa.equal(&prod(&[t(i), e.clone()]), &prod(&[e.clone(), t(i)])).unwrap());
            }
        }
    }
}

#[test]
fn faithful_dimension_is_algebra_dimension() {
    for (p, d, n) in [(2, 1, 2), (2, 1, 3), (3, 1, 3), (4, 1, 3), (2, 1, 4), (2, 2, 2)] {
        let pt = SpecPoint::sample(p, d, n, 1).unwrap();
        let fa = Faithful::build(&pt, n).unwrap();
        let r = (p * d) as usize;
        let fact: usize = (1..=n).product();
        assert_eq!(fa.algebra_dim(), r.pow(n as u32) * fact);
    }
}

fn arb_t_word(n: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The representation is a homomorphism on words: concatenation maps
    /// to matrix products, and the inverse word evaluates to the inverse.
    #[test]
    fn words_multiply(a in arb_t_word(3, 5), b in arb_t_word(3, 5), seed in 0u64..1000) {
        let pt = SpecPoint::sample(2, 1, 3, seed).unwrap();
        let rep = SeminormalRep::build(&mp(&[&[2], &[1]]), &pt).unwrap();
        let wa = Word::t_word(&a);
        let wb = Word::t_word(&b);
        let ab = rep.eval(&wa.clone().then(&wb)).unwrap();
        prop_assert_eq!(ab, rep.eval(&wa).unwrap().mul(&rep.eval(&wb).unwrap()));
        let inv = Word(a.iter().rev().map(|&i| Token::Tinv(i)).collect());
        let id = rep.eval(&wa.then(&inv)).unwrap();
        prop_assert_eq!(id, Mat::identity(rep.dim(), &pt.zero()));
    }

    /// Characters are class functions: χ(xy) = χ(yx).
    #[test]
    fn characters_are_traces(a in arb_t_word(3, 4), b in arb_t_word(3, 4), seed in 0u64..1000) {
        let pt = SpecPoint::sample(3, 1, 3, seed).unwrap();
        for lam in [mp(&[&[1], &[1], &[1]]), mp(&[&[2], &[], &[1]]), mp(&[&[1, 1], &[1], &[]])] {
            let wa = Word::t_word(&a);
            let wb = Word::t_word(&b);
            let x = character(&lam, &wa.clone().then(&wb), &pt).unwrap();
            let y = character(&lam, &wb.then(&wa), &pt).unwrap();
            prop_assert_eq!(x, y);
        }
    }
}
