//! Standard tableaux, contents and seminormal coefficients.

use std::collections::{BTreeMap, HashSet};

use grpn_core::combin::{Multipartition, Partition};
use grpn_core::exactnum::{generic_field, specialize, Mono, ParamField, SpecPoint};
use grpn_core::tableau::{
    beta_coeff, content, content_mono, content_vector, count_std, enumerate_std, superstandard, StandardTableau,
};
use grpn_core::Error;
use proptest::prelude::*;

fn mp(v: &[&[u32]]) -> Multipartition {
    Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn tab(v: &[&[&[usize]]]) -> StandardTableau {
    StandardTableau::new(v.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect()).unwrap()
}

/// `|Std(λ)|` by removing the box holding `n` in every admissible way.
fn branching_count(lam: &Multipartition, memo: &mut BTreeMap<Vec<Vec<u32>>, u64>) -> u64 {
    let key: Vec<Vec<u32>> = lam.comps().iter().map(|c| c.parts().to_vec()).collect();
    if lam.size() == 0 {
        return 1;
    }
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for s in 0..key.len() {
        for i in 0..key[s].len() {
            // a removable box ends row i and the next row is strictly shorter
            let next = key[s].get(i + 1).copied().unwrap_or(0);
            if key[s][i] > next {
                let mut smaller = key.clone();
                smaller[s][i] -= 1;
                let m = Multipartition::from_parts(smaller).unwrap();
                total += branching_count(&m, memo);
            }
        }
    }
    memo.insert(key, total);
    total
}

fn content_key(m: &Mono, p: i64) -> (i64, i64, Vec<i64>) {
    (m.eps.rem_euclid(p), m.q, m.qs.clone())
}

#[test]
fn enumerate_examples() {
    assert_eq!(enumerate_std(&mp(&[&[1], &[1]])).len(), 2);
    assert_eq!(enumerate_std(&mp(&[&[2]])).len(), 1);
    assert_eq!(enumerate_std(&mp(&[&[1, 1], &[]])).len(), 1);
}

#[test]
fn superstandard_examples() {
    assert_eq!(superstandard(&mp(&[&[2], &[1]])), tab(&[&[&[1, 2]], &[&[3]]]));
    assert_eq!(superstandard(&mp(&[&[1], &[1]])), tab(&[&[&[1]], &[&[2]]]));
    assert_eq!(superstandard(&mp(&[&[], &[2]])), tab(&[&[], &[&[1, 2]]]));
}

#[test]
fn non_standard_fillings_are_rejected() {
    let bad = StandardTableau::new(vec![vec![vec![2, 1]]]);
    assert!(bad.is_err());
    let bad_col = StandardTableau::new(vec![vec![vec![2], vec![1]]]);
    assert!(bad_col.is_err());
}

#[test]
fn content_examples() {
    let f = generic_field(2, 1).unwrap();
    let t = superstandard(&mp(&[&[2, 1], &[]]));
    // k = 1 at (1,1) of component 1: ε Q_1
    let mut eq = Mono::big_q(1, 1);
    eq.eps = 1;
    assert_eq!(content(&t, 1, &f).unwrap(), f.monomial(&eq));
    // next column: times q
    assert_eq!(content(&t, 2, &f).unwrap(), content(&t, 1, &f).unwrap().mul(&f.q()));
    // next row: times q^{-1}
    assert_eq!(
        content(&t, 3, &f).unwrap(),
        content(&t, 1, &f).unwrap().div(&f.q()).unwrap()
    );
    assert!(matches!(content(&t, 4, &f), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn cyclotomic_relation_fixes_the_content_convention() {
    // The L_1-eigenvalues must be roots of Π_{s,i} (x − ε^s Q_i).
    for (p, d) in [(2, 1), (3, 1), (2, 2)] {
        let f = generic_field(p, d).unwrap();
        for lam in Multipartition::all(p * d, 1) {
            let t = superstandard(&lam);
            let c = content(&t, 1, &f).unwrap();
            let mut prod = f.one();
            for s in 1..=p {
                for i in 1..=d {
                    let mut m = Mono::big_q(d, i);
                    m.eps = s as i64;
                    prod = prod.mul(&c.sub(&f.monomial(&m)));
                }
            }
            assert!(prod.is_zero());
        }
    }
}

#[test]
fn beta_examples() {
    let f = generic_field(2, 1).unwrap();
    let q = f.q();
    let row = superstandard(&mp(&[&[2], &[]]));
    assert_eq!(beta_coeff(&row, 1, &f).unwrap(), q);
    let col = superstandard(&mp(&[&[1, 1], &[]]));
    assert_eq!(beta_coeff(&col, 1, &f).unwrap(), f.from_int(-1));
    let two = superstandard(&mp(&[&[1], &[1]]));
    let mut e1 = Mono::big_q(1, 1);
    e1.eps = 1;
    let mut e2 = Mono::big_q(1, 1);
    e2.eps = 2;
    let (c1, c2) = (f.monomial(&e1), f.monomial(&e2));
    let want = q.sub(&f.one()).mul(&c2).div(&c2.sub(&c1)).unwrap();
    assert_eq!(beta_coeff(&two, 1, &f).unwrap(), want);
}

#[test]
fn beta_degenerates_at_colliding_contents() {
    // The row ((2),()) has contents εQ and εqQ, which coincide at q = 1.
    let at_one = SpecPoint::integers(2, 1, &[1]).unwrap();
    let row = superstandard(&mp(&[&[2], &[]]));
    assert!(matches!(beta_coeff(&row, 1, &at_one), Err(Error::DegenerateSpecialization(_))));
    // At q = −1, Q = 1 the two one-box components still have distinct contents.
    let pt = SpecPoint::integers(2, -1, &[1]).unwrap();
    let t = superstandard(&mp(&[&[1], &[1]]));
    assert!(beta_coeff(&t, 1, &pt).is_ok());
}

#[test]
fn shift_examples() {
    let t = superstandard(&mp(&[&[1], &[1]]));
    assert_eq!(t.shift(2, 2, 1).unwrap(), t);
    assert_eq!(t.shift(0, 2, 1).unwrap(), t);
    assert_eq!(t.shift(1, 2, 1).unwrap(), tab(&[&[&[2]], &[&[1]]]));
    assert_eq!(t.shift(1, 2, 1).unwrap().shape(), mp(&[&[1], &[1]]).shift(1, 2, 1).unwrap());
}

#[test]
fn contents_separate_tableaux() {
    for r in 1..=4usize {
        for d in (1..=r).filter(|d| r % d == 0) {
            let p = (r / d) as i64;
            for n in 0..=4 {
                let mut seen = HashSet::new();
                let mut count = 0;
                for lam in Multipartition::all(r, n) {
                    for s in enumerate_std(&lam) {
                        let key: Vec<_> = content_vector(&s, d).iter().map(|m| content_key(m, p)).collect();
                        assert!(seen.insert(key), "content collision at {:?}", s);
                        count += 1;
                    }
                }
                assert_eq!(seen.len(), count);
            }
        }
    }
}

#[test]
fn contents_agree_with_content_mono() {
    let f = generic_field(3, 1).unwrap();
    let pt = SpecPoint::integers(3, 5, &[7]).unwrap();
    for lam in Multipartition::all(3, 3) {
        for s in enumerate_std(&lam) {
            for k in 1..=3 {
                let m = content_mono(&s, k, 1).unwrap();
                let g = content(&s, k, &f).unwrap();
                assert_eq!(g, f.monomial(&m));
                assert_eq!(specialize(&g, &pt).unwrap(), content(&s, k, &pt).unwrap());
            }
        }
    }
}

#[test]
fn counts_match_branching_rule() {
    let mut memo = BTreeMap::new();
    for r in 1..=4 {
        for n in 0..=5 {
            for lam in Multipartition::all(r, n) {
                let e = enumerate_std(&lam).len() as u64;
                assert_eq!(e, branching_count(&lam, &mut memo), "{:?}", lam);
                assert_eq!(e as u128, count_std(&lam));
            }
        }
    }
}

#[test]
fn sum_of_squares_is_algebra_dimension() {
    for r in 1..=4u64 {
        for n in 0..=4u64 {
            let total: u64 = Multipartition::all(r as usize, n as usize)
                .iter()
                .map(|l| {
                    let c = enumerate_std(l).len() as u64;
                    c * c
                })
                .sum();
            let fact: u64 = (1..=n).product();
            assert_eq!(total, r.pow(n as u32) * fact, "r = {}, n = {}", r, n);
        }
    }
}

#[test]
fn enumeration_is_sorted_and_standard() {
    for lam in Multipartition::all(2, 4) {
        let list = enumerate_std(&lam);
        assert!(list.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
        for s in &list {
            assert_eq!(s.shape(), lam);
            assert!(StandardTableau::new(s.entries().to_vec()).is_ok());
        }
    }
}

fn arb_multipartition(r: usize, max_part: u32, max_rows: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(
        prop::collection::vec(1u32..=max_part, 0..=max_rows).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        }),
        r,
    )
    .prop_map(Multipartition::new)
}

proptest! {
    #[test]
    fn tableau_count_equals_branching(lam in arb_multipartition(3, 3, 2)) {
        let mut memo = BTreeMap::new();
        prop_assert_eq!(count_std(&lam) as u64, branching_count(&lam, &mut memo));
    }

    #[test]
    fn shifted_tableaux_stay_standard(lam in arb_multipartition(4, 2, 1), z in -5i64..5) {
        for s in enumerate_std(&lam).into_iter().take(8) {
            let t = s.shift(z, 2, 2).unwrap();
            prop_assert!(StandardTableau::new(t.entries().to_vec()).is_ok());
            prop_assert_eq!(t.shape(), lam.shift(z, 2, 2).unwrap());
            prop_assert_eq!(t.shift(-z, 2, 2).unwrap(), s);
        }
    }

    #[test]
    fn adjacent_boxes_give_q_or_minus_one(lam in arb_multipartition(2, 3, 2)) {
        let f = generic_field(2, 1).unwrap();
        for s in enumerate_std(&lam).into_iter().take(6) {
            for i in 1..s.size() {
                let (ci, ri, ki) = s.position(i).unwrap();
                let (cj, rj, kj) = s.position(i + 1).unwrap();
                let b = beta_coeff(&s, i, &f).unwrap();
                if ci == cj && ri == rj && kj == ki + 1 {
                    prop_assert_eq!(b, f.q());
                } else if ci == cj && ki == kj && rj == ri + 1 {
                    prop_assert_eq!(b, f.from_int(-1));
                }
            }
        }
    }
}
