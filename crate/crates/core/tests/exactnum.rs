//! Exact arithmetic: cyclotomic numbers, rational functions, specialization
//! and the separation test.

use grpn_core::exactnum::cyclo::rat;
use grpn_core::exactnum::{
    eps_pow, generic_field, separation_product, specialize, CycField, CycRat, GenericField, Mono, ParamField,
    Scalar, SpecPoint,
};
use grpn_core::Error;
use proptest::prelude::*;

fn gq(f: &GenericField) -> grpn_core::exactnum::RatFunc {
    f.q()
}

#[test]
fn eps_pow_examples() {
    assert_eq!(eps_pow(2, -1).unwrap().to_rational(), Some(rat(-1, 1)));
    assert_eq!(eps_pow(4, 2).unwrap().to_rational(), Some(rat(-1, 1)));
    assert!(eps_pow(3, 3).unwrap().is_one());
    assert_eq!(eps_pow(1, 0), Err(Error::InvalidOrder(1)));
}

#[test]
fn eps_is_primitive() {
    for p in 2..=12i64 {
        for k in 1..p {
            assert!(!eps_pow(p, k).unwrap().is_one(), "ε^{} = 1 for p = {}", k, p);
        }
        assert!(eps_pow(p, p).unwrap().is_one());
        let field = CycField::new(p as u64).unwrap();
        assert_eq!(eps_pow(p, 1).unwrap().coeffs().len(), field.degree());
    }
}

#[test]
fn field_ops_examples() {
    let f = generic_field(2, 1).unwrap();
    let one = f.one();
    let q = gq(&f);
    let qm1 = q.sub(&one);
    let qp1 = q.add(&one);
    assert!(qm1.div(&qm1).unwrap().is_one());
    let q2m1 = q.mul(&q).sub(&one);
    assert_eq!(qp1.mul(&qm1), q2m1);
    assert_eq!(q2m1.div(&qm1).unwrap(), qp1);
    assert_eq!(f.zero().inv(), Err(Error::ZeroDivisor));
    assert_eq!(one.div(&f.zero()), Err(Error::ZeroDivisor));
}

#[test]
fn sums_with_distinct_denominators() {
    // Two fractions whose denominators share some, but not all, factors;
    // the symbolic sum is checked against exact values at many points.
    let f = generic_field(2, 1).unwrap();
    let q = gq(&f);
    let one = f.one();
    let half = f.from_rat(&rat(1, 2));
    let qp1 = q.add(&one);
    let q2m1 = q.mul(&q).sub(&one);
    let a = half
        .mul(&q.mul(&q).add(&q.mul(&f.from_int(4))).add(&one))
        .div(&qp1.pow(2).unwrap())
        .unwrap();
    let b = half.mul(&q.mul(&q)).mul(&q.sub(&one)).div(&q2m1.mul(&qp1)).unwrap();
    let s = a.add(&b);
    for qv in 2..30i64 {
        let pt = SpecPoint::integers(2, qv, &[7]).unwrap();
        let direct = specialize(&a, &pt).unwrap().add(&specialize(&b, &pt).unwrap());
        assert_eq!(specialize(&s, &pt).unwrap(), direct, "q = {}", qv);
    }
}

#[test]
fn specialize_examples() {
    let f = generic_field(2, 1).unwrap();
    let pt = SpecPoint::integers(2, 2, &[3]).unwrap();
    assert_eq!(specialize(&gq(&f), &pt).unwrap().to_rational(), Some(rat(2, 1)));

    let q1 = f.monomial(&Mono::big_q(1, 1));
    let mut eq1 = Mono::big_q(1, 1);
    eq1.eps = 1;
    let g = q1.sub(&f.monomial(&eq1));
    assert_eq!(specialize(&g, &pt).unwrap().to_rational(), Some(rat(6, 1)));

    let pole = f.one().div(&gq(&f).sub(&f.one())).unwrap();
    let at_one = SpecPoint::integers(2, 1, &[3]).unwrap();
    assert!(matches!(specialize(&pole, &at_one), Err(Error::SpecializationPole(_))));
}

#[test]
fn is_separated_examples() {
    assert!(SpecPoint::integers(2, 2, &[1]).unwrap().is_separated(3));
    assert!(!SpecPoint::integers(2, -1, &[1]).unwrap().is_separated(2));
    // d = 1, ⟨ε⟩ ∩ ⟨q⟩ = {1}: q = 3 has infinite order, ε = ζ_3.
    assert!(SpecPoint::integers(3, 3, &[5]).unwrap().is_separated(4));
}

#[test]
fn separated_points_do_not_annihilate_the_separation_product() {
    for (p, d, n) in [(2, 1, 3), (3, 2, 2), (4, 1, 3), (2, 2, 3)] {
        for seed in 0..3 {
            let pt = SpecPoint::sample(p, d, n, seed).unwrap();
            assert!(pt.is_separated(n));
            assert!(!separation_product(&pt, n).is_zero());
            // Cross-check the sampled point against the symbolic product.
            let f = generic_field(p, d).unwrap();
            let sym = separation_product(&f, n);
            assert_eq!(specialize(&sym, &pt).unwrap(), separation_product(&pt, n));
        }
    }
    // A point that fails the test makes some factor vanish.
    let bad = SpecPoint::integers(2, -1, &[1]).unwrap();
    assert!(separation_product(&bad, 2).is_zero());
}

#[test]
fn generic_field_examples() {
    assert_eq!(generic_field(2, 1).unwrap().nvars(), 2);
    assert_eq!(generic_field(3, 2).unwrap().nvars(), 3);
    assert!(matches!(generic_field(1, 1), Err(Error::InvalidOrder(1))));
}

#[test]
fn cyclotomic_field_ops() {
    let field = CycField::new(5).unwrap();
    let z = CycRat::zeta_pow(&field, 1);
    // 1 + ζ + … + ζ^4 = 0
    let mut s = CycRat::zero(&field);
    for k in 0..5 {
        s = s.add(&z.pow(k).unwrap());
    }
    assert!(s.is_zero());
    let x = z.add(&CycRat::from_int(&field, 3));
    assert!(x.mul(&x.inv().unwrap()).is_one());
}

/// A small polynomial `Σ c ε^e q^a Q_1^b` described by integer data.
type Terms = Vec<(i8, i8, i8, i8)>;

fn build<F: ParamField>(f: &F, terms: &Terms) -> F::E {
    let mut acc = f.zero();
    for &(c, e, a, b) in terms {
        let mut m = Mono::one(f.d());
        m.coef = rat(c as i64, 1);
        m.eps = e as i64;
        m.q = a as i64;
        m.qs[0] = b as i64;
        acc = acc.add(&f.monomial(&m));
    }
    acc
}

/// Fold `x_0 op_1 x_1 op_2 …`; `None` when a division by zero occurs.
fn evaluate<F: ParamField>(f: &F, first: &Terms, rest: &[(u8, Terms)]) -> Option<F::E> {
    let mut acc = build(f, first);
    for (op, t) in rest {
        let x = build(f, t);
        acc = match op % 4 {
            0 => acc.add(&x),
            1 => acc.sub(&x),
            2 => acc.mul(&x),
            _ => acc.div(&x).ok()?,
        };
    }
    Some(acc)
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-3i8..=3, 0i8..3, -2i8..=2, -1i8..=2), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn eps_pow_inverse_pairs(p in 2i64..=12, k in -30i64..30) {
        let prod = eps_pow(p, k).unwrap().mul(&eps_pow(p, p - k).unwrap());
        prop_assert!(prod.is_one());
    }

    #[test]
    fn field_axioms(a in terms(), b in terms(), c in terms()) {
        let f = generic_field(3, 1).unwrap();
        let (x, y, z) = (build(&f, &a), build(&f, &b), build(&f, &c));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !y.is_zero() {
            prop_assert_eq!(x.div(&y).unwrap().mul(&y), x.clone());
        }
    }

    /// Generic rational-function arithmetic followed by specialization
    /// agrees with the same computation carried out at the point.
    #[test]
    fn specialization_is_a_homomorphism(
        first in terms(),
        rest in prop::collection::vec((0u8..4, terms()), 1..6),
        qv in 2i64..40,
        big_q in 2i64..40,
    ) {
        let f = generic_field(3, 1).unwrap();
        let pt = SpecPoint::integers(3, qv, &[big_q]).unwrap();
        let generic = evaluate(&f, &first, &rest);
        let direct = evaluate(&pt, &first, &rest);
        if let (Some(g), Some(d)) = (generic, direct) {
            match specialize(&g, &pt) {
                Ok(v) => prop_assert_eq!(v, d),
                Err(Error::SpecializationPole(_)) => {}
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }
    }
}
