//! Partitions, multipartitions, compositions and their statistics.

use grpn_core::combin::{
    class_reps, comp_stats, count_multipartitions, hook, wab_perm, wb_perm, wb_two_line, ComponentIndex, Composition,
    Multipartition, Partition, Perm,
};
use grpn_core::Error;
use proptest::prelude::*;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn mp(v: &[&[u32]]) -> Multipartition {
    Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec())
}

/// Transpose through the set of boxes, independently of `conjugate`.
fn transpose_by_boxes(l: &Partition) -> Partition {
    let mut cols: Vec<u32> = Vec::new();
    for (_, j) in l.nodes() {
        if cols.len() < j {
            cols.resize(j, 0);
        }
        cols[j - 1] += 1;
    }
    Partition::new(cols).unwrap()
}

/// Number of partitions of `m` with parts at most `k`.
fn partitions_bounded(m: usize, k: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    (1..=k.min(m)).map(|x| partitions_bounded(m - x, x)).sum()
}

/// Number of d-multipartitions of m by summing over size splittings.
fn multipartitions_count(d: usize, m: usize) -> u64 {
    if d == 0 {
        return u64::from(m == 0);
    }
    (0..=m).map(|a| partitions_bounded(a, a) * multipartitions_count(d - 1, m - a)).sum()
}

#[test]
fn conjugate_examples() {
    assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    assert_eq!(Partition::empty().conjugate(), Partition::empty());
    assert_eq!(mp(&[&[2], &[1]]).conjugate(), mp(&[&[1], &[1, 1]]));
}

#[test]
fn beta_examples() {
    assert_eq!(part(&[2]).beta(), 0);
    assert_eq!(part(&[1, 1]).beta(), 1);
    assert_eq!(part(&[3, 2, 1]).beta(), 4);
}

#[test]
fn arrow_examples() {
    assert_eq!(mp(&[&[2, 1, 1], &[3, 2, 1]]).arrow(), part(&[3, 2, 2, 1, 1, 1]));
    assert_eq!(mp(&[&[1], &[1]]).arrow(), part(&[1, 1]));
    assert_eq!(mp(&[&[3], &[2, 2]]).arrow(), part(&[3, 2, 2]));
}

#[test]
fn dominance_examples() {
    let a = mp(&[&[2], &[]]);
    assert!(a.dominates(&a).unwrap());
    assert!(a.dominates(&mp(&[&[1], &[1]])).unwrap());
    assert!(!mp(&[&[1, 1], &[]]).dominates(&mp(&[&[2], &[]])).unwrap());
    assert!(matches!(a.dominates(&mp(&[&[1], &[]])), Err(Error::ShapeMismatch(_))));
    assert!(matches!(a.dominates(&mp(&[&[2]])), Err(Error::ShapeMismatch(_))));
}

#[test]
fn shift_examples() {
    let l = mp(&[&[1], &[2]]);
    assert_eq!(l.shift(2, 2, 1).unwrap(), l);
    assert_eq!(l.shift(1, 2, 1).unwrap(), mp(&[&[2], &[1]]));
    assert_eq!(comp(&[1, 2, 0]).shift(2), comp(&[0, 1, 2]));
    assert!(matches!(l.shift(1, 3, 1), Err(Error::ShapeMismatch(_))));
}

#[test]
fn orbit_order_examples() {
    assert_eq!(mp(&[&[1], &[1], &[1]]).orbit_order(3, 1).unwrap(), (1, 3));
    assert_eq!(mp(&[&[1], &[], &[1], &[]]).orbit_order(4, 1).unwrap(), (2, 2));
    assert_eq!(mp(&[&[2], &[1]]).orbit_order(2, 1).unwrap(), (2, 1));
    assert_eq!(comp(&[1, 0, 1, 0]).orbit_order(), (2, 2));
}

#[test]
fn enumerate_pdb_examples() {
    assert_eq!(Multipartition::enumerate_pdb(1, &comp(&[1, 1])), vec![mp(&[&[1], &[1]])]);
    let two = Multipartition::enumerate_pdb(2, &comp(&[1, 0]));
    assert_eq!(two.len(), 2);
    assert!(two.contains(&mp(&[&[1], &[], &[], &[]])));
    assert!(two.contains(&mp(&[&[], &[1], &[], &[]])));
    assert_eq!(Multipartition::enumerate_pdb(1, &comp(&[0, 0])), vec![mp(&[&[], &[]])]);
}

#[test]
fn wb_examples() {
    assert_eq!(wb_perm(&comp(&[3])), Perm::identity(3));
    let w21 = wab_perm(3, 2, 1, 0).unwrap();
    assert_eq!(w21.images(), &[2, 3, 1]);
    assert_eq!(wb_perm(&comp(&[1, 1])), Perm::simple(2, 1));
    assert!(matches!(wab_perm(3, 2, 2, 0), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn comp_stats_examples() {
    assert_eq!(comp_stats(&comp(&[4, 0, 0])), (4, 0));
    assert_eq!(comp_stats(&comp(&[1, 2])), (5, 2));
    assert_eq!(comp_stats(&comp(&[2, 1])).1, 2);
    assert_eq!(wb_perm(&comp(&[1, 2])).inversions(), 2);
}

#[test]
fn class_reps_examples() {
    let items = vec![mp(&[&[1], &[2]]), mp(&[&[2], &[1]])];
    assert_eq!(class_reps(&items, 2, 1, 1).unwrap().len(), 1);
    let fixed = mp(&[&[1], &[1]]);
    assert_eq!(class_reps(&[fixed.clone()], 2, 1, 1).unwrap(), vec![fixed]);
    // ∼_b with o_b = p: no shifts allowed.
    let b = comp(&[2, 1]);
    let pdb = Multipartition::enumerate_pdb(1, &b);
    let (ob, _) = b.orbit_order();
    assert_eq!(ob, 2);
    assert_eq!(class_reps(&pdb, 2, 1, ob).unwrap(), pdb);
}

#[test]
fn component_index_decomposition() {
    for d in 1..=3 {
        for s in 1..=4 * d {
            let c = ComponentIndex::new(s, d);
            assert_eq!(d * (c.p_s - 1) + c.d_s, s);
            assert!((1..=d).contains(&c.d_s));
        }
    }
}

#[test]
fn hook_examples() {
    assert_eq!(hook(&part(&[2]), &part(&[2]), 1, 1).unwrap(), 2);
    assert_eq!(hook(&part(&[2]), &part(&[2]), 1, 2).unwrap(), 1);
    assert_eq!(hook(&part(&[1]), &part(&[1]), 1, 1).unwrap(), 1);
}

#[test]
fn beta_is_sum_of_column_binomials() {
    for n in 0..=12 {
        for l in Partition::all(n) {
            let c = transpose_by_boxes(&l);
            let sum: u64 = c.parts().iter().map(|&x| (x as u64) * (x as u64).saturating_sub(1) / 2).sum();
            assert_eq!(l.beta(), sum, "{:?}", l);
        }
    }
}

#[test]
fn conjugate_matches_box_transpose() {
    for n in 0..=10 {
        for l in Partition::all(n) {
            assert_eq!(l.conjugate(), transpose_by_boxes(&l));
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for d in 1..=2 {
        for p in 1..=2 {
            for n in 0..=5 {
                let all = Multipartition::all(p * d, n);
                for a in &all {
                    assert!(a.dominates(a).unwrap());
                    for b in &all {
                        let ab = a.dominates(b).unwrap();
                        if ab && b.dominates(a).unwrap() {
                            assert_eq!(a, b);
                        }
                        if !ab {
                            continue;
                        }
                        for c in &all {
                            if b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumerate_pdb_counts() {
    for d in 1..=2 {
        for p in 1..=3 {
            for n in 0..=4 {
                for b in Composition::all(p, n) {
                    let list = Multipartition::enumerate_pdb(d, &b);
                    let want: u64 = b.parts().iter().map(|&m| multipartitions_count(d, m)).product();
                    assert_eq!(list.len() as u64, want);
                    let gf: u64 = b.parts().iter().map(|&m| count_multipartitions(d, m)).product();
                    assert_eq!(gf, want);
                    for l in &list {
                        assert_eq!(l.block_sizes(p, d).unwrap(), b);
                    }
                    // sorted and duplicate-free
                    assert!(list.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }
}

#[test]
fn wb_length_equals_inversions() {
    for p in 1..=4 {
        for n in 0..=6 {
            for b in Composition::all(p, n) {
                let w = wb_perm(&b);
                assert_eq!(w.inversions() as u64, comp_stats(&b).1, "{:?}", b);
                // the defining product agrees with the two-line description
                assert_eq!(w, wb_two_line(&b), "{:?}", b);
            }
        }
    }
}

#[test]
fn orbit_order_properties() {
    for (p, d) in [(2, 1), (3, 1), (4, 1), (2, 2)] {
        for n in 0..=4 {
            for l in Multipartition::all(p * d, n) {
                let (o, pq) = l.orbit_order(p, d).unwrap();
                assert_eq!(o * pq, p);
                assert_eq!(l.shift(o as i64, p, d).unwrap(), l);
                for k in 1..o {
                    assert_ne!(l.shift(k as i64, p, d).unwrap(), l);
                }
            }
        }
    }
}

fn arb_partition(max: u32, len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn arb_multipartition(r: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(arb_partition(4, 3), r).prop_map(Multipartition::new)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in arb_multipartition(4)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn arrow_preserves_parts(l in arb_multipartition(3)) {
        let a = l.arrow();
        let mut all: Vec<u32> = l.comps().iter().flat_map(|c| c.parts().to_vec()).collect();
        all.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(a.parts(), &all[..]);
    }

    #[test]
    fn shifts_compose(l in arb_multipartition(6), j in -7i64..7, k in -7i64..7) {
        for (p, d) in [(2usize, 3usize), (3, 2), (6, 1)] {
            let a = l.shift(j, p, d).unwrap().shift(k, p, d).unwrap();
            prop_assert_eq!(a, l.shift(j + k, p, d).unwrap());
            prop_assert_eq!(l.shift(p as i64, p, d).unwrap(), l.clone());
        }
    }

    #[test]
    fn composition_statistics(v in prop::collection::vec(0usize..4, 1..5)) {
        let b = Composition::new(v.clone());
        let alpha: u64 = v.iter().enumerate().map(|(i, &x)| ((i + 1) * x) as u64).sum();
        let mut ell = 0u64;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                ell += (v[i] * v[j]) as u64;
            }
        }
        prop_assert_eq!(comp_stats(&b), (alpha, ell));
        let (o, pq) = b.orbit_order();
        prop_assert_eq!(o * pq, v.len());
        prop_assert_eq!(b.shift(o as i64), b.clone());
    }
}
