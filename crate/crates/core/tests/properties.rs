use proptest::prelude::*;

use octachar_core::hyperoctahedral::{basechange, basechange_preimage};
use octachar_core::partitions::{
    beta_set, p_core, p_quotient, p_quotient_padded, sign_odd_parts, sign_shuffle, CoreQuotient,
};
use octachar_core::symfunc::schur_eval;
use octachar_core::verify::Report;
use octachar_core::{BiPartition, Partition, PointSpec, Rat, Target};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn report() -> impl Strategy<Value = Report> {
    (0usize..5, prop::collection::vec("[a-z]{1,3}", 0..3)).prop_map(|(ok, failures)| Report {
        checked: ok + failures.len(),
        failures,
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition(12, 12)) {
        let c = l.conjugate();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn core_quotient_roundtrip(l in partition(14, 10), p in 2usize..=7) {
        let cq = CoreQuotient::of(&l, p).unwrap();
        prop_assert_eq!(cq.quotient.len(), p);
        prop_assert_eq!(cq.core.size() + p * cq.weight(), l.size());
        prop_assert_eq!(cq.reconstruct().unwrap(), l);
    }

    #[test]
    fn quotient_is_stable_under_padding_by_p(l in partition(10, 10), p in 2usize..=5, k in 0usize..3) {
        let base = p_quotient(&l, p).unwrap();
        let len = l.len().div_ceil(p) * p + k * p;
        prop_assert_eq!(p_quotient_padded(&l, p, len).unwrap(), base);
    }

    #[test]
    fn beta_set_shifts_with_length(l in partition(10, 10), extra in 0usize..4) {
        let short = beta_set(&l, l.len()).unwrap();
        let long = beta_set(&l, l.len() + extra).unwrap();
        let shifted: Vec<usize> = short.entries().iter().map(|b| b + extra).collect();
        prop_assert_eq!(&long.entries()[..l.len()], shifted.as_slice());
        let tail: Vec<usize> = (0..extra).rev().collect();
        prop_assert_eq!(&long.entries()[l.len()..], tail.as_slice());
    }

    #[test]
    fn sign_recipes_agree(l in partition(12, 12)) {
        match sign_shuffle(&l) {
            Ok(s) => prop_assert_eq!(s, sign_odd_parts(&l)),
            Err(_) => {
                let core = p_core(&l, 2).unwrap();
                prop_assert!(!(core.is_empty() || core == Partition::row(1)));
            }
        }
    }

    #[test]
    fn basechange_roundtrip(p0 in partition(5, 5), p1 in partition(5, 5), odd in any::<bool>()) {
        let target = if odd { Target::Odd } else { Target::Even };
        let pi = BiPartition::new(p0, p1);
        let lambda = basechange(&pi, target);
        prop_assert_eq!(basechange_preimage(&lambda), Some((pi, target)));
    }

    #[test]
    fn schur_is_symmetric(l in partition(3, 3), nums in prop::collection::btree_set(1i64..=30, 4), rot in 0usize..4) {
        let values: Vec<Rat> = nums.iter().map(|&n| Rat::new(n, 7).unwrap()).collect();
        let mut rotated = values.clone();
        rotated.rotate_left(rot);
        rotated.swap(0, 1);
        prop_assert_eq!(
            schur_eval(&l, &PointSpec::plain(values)).unwrap(),
            schur_eval(&l, &PointSpec::plain(rotated)).unwrap()
        );
    }

    #[test]
    fn report_merge_is_associative(a in report(), b in report(), c in report()) {
        let left = a.clone().merge(b.clone()).merge(c.clone());
        let right = a.merge(b.merge(c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn report_merge_is_commutative_up_to_order(a in report(), b in report()) {
        let mut ab = a.clone().merge(b.clone());
        let mut ba = b.merge(a);
        ab.failures.sort();
        ba.failures.sort();
        prop_assert_eq!(ab, ba);
    }
}
