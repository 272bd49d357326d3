use octachar_core::hyperoctahedral::{
    basechange, basechange_preimage, bipartitions_of, bn_character_bruteforce,
    bn_character_positive, bn_classes_of, bn_dimension, embed_class, norm, SignedPermutation,
    BRUTE_FORCE_MAX_N,
};
use octachar_core::partitions::{p_core, partitions_of, two_quotient};
use octachar_core::{BnClass, Error, MnEvaluator, Target};

mod common;
use common::p;

#[test]
fn positive_classes_agree_with_bruteforce() {
    let mut eval = MnEvaluator::new();
    for n in 1..=4 {
        for pi in bipartitions_of(n) {
            for c in bn_classes_of(n)
                .into_iter()
                .filter(|c| c.negative_cycles.is_empty())
            {
                assert_eq!(
                    bn_character_positive(&pi, &c, &mut eval).unwrap(),
                    bn_character_bruteforce(&pi, &c).unwrap(),
                    "{pi} at {c}"
                );
            }
        }
    }
}

/// First and second orthogonality of the full brute-force table of `B_n`.
#[test]
fn bruteforce_tables_are_orthogonal() {
    for n in 1..=4 {
        let pis = bipartitions_of(n);
        let classes = bn_classes_of(n);
        assert_eq!(pis.len(), classes.len());
        let table: Vec<Vec<i128>> = pis
            .iter()
            .map(|pi| {
                classes
                    .iter()
                    .map(|c| bn_character_bruteforce(pi, c).unwrap())
                    .collect()
            })
            .collect();
        let order: i128 = (1..=n as i128).product::<i128>() << n;
        let z: Vec<i128> = classes
            .iter()
            .map(|c| c.centralizer_order() as i128)
            .collect();
        for a in 0..pis.len() {
            for b in 0..pis.len() {
                let rows: i128 = (0..classes.len())
                    .map(|k| table[a][k] * table[b][k] * (order / z[k]))
                    .sum();
                assert_eq!(rows, if a == b { order } else { 0 });
                let cols: i128 = (0..pis.len()).map(|k| table[k][a] * table[k][b]).sum();
                assert_eq!(cols, if a == b { z[a] } else { 0 });
            }
        }
    }
}

#[test]
fn class_of_every_signed_permutation_is_counted_correctly() {
    for n in 1..=4 {
        let all = SignedPermutation::all(n);
        assert_eq!(all.len() as u128, (1..=n as u128).product::<u128>() << n);
        for c in bn_classes_of(n) {
            let size = all.iter().filter(|g| g.class() == c).count() as u128;
            assert_eq!(size * c.centralizer_order(), all.len() as u128, "{c}");
        }
    }
}

#[test]
fn dimensions_match_bruteforce_identity_value() {
    let mut eval = MnEvaluator::new();
    for n in 0..=BRUTE_FORCE_MAX_N.min(5) {
        for pi in bipartitions_of(n) {
            assert_eq!(
                bn_dimension(&pi, &mut eval),
                bn_character_bruteforce(&pi, &BnClass::identity(n)).unwrap()
            );
        }
    }
}

#[test]
fn oracle_scale_is_capped() {
    let pi = bipartitions_of(7).remove(0);
    assert_eq!(
        bn_character_bruteforce(&pi, &BnClass::identity(7)),
        Err(Error::OracleScaleExceeded(7))
    );
}

#[test]
fn basechange_is_the_core_quotient_inverse() {
    for n in 0..=8 {
        for target in Target::BOTH {
            for pi in bipartitions_of(n) {
                let lambda = basechange(&pi, target);
                assert_eq!(lambda.size(), target.degree(n));
                assert_eq!(p_core(&lambda, 2).unwrap(), target.core());
                assert_eq!(two_quotient(&lambda), (pi.p0.clone(), pi.p1.clone()));
                assert_eq!(basechange_preimage(&lambda), Some((pi.clone(), target)));
            }
        }
    }
    for m in 0..=14 {
        for lambda in partitions_of(m) {
            let core = p_core(&lambda, 2).unwrap();
            let expected = core.is_empty() || core == p(&[1]);
            assert_eq!(basechange_preimage(&lambda).is_some(), expected, "{lambda}");
        }
    }
}

#[test]
fn norm_of_embedded_negative_class_is_its_positive_twin() {
    for n in 1..=8 {
        for c in bn_classes_of(n)
            .into_iter()
            .filter(|c| c.positive_cycles.is_empty())
        {
            let w = embed_class(&c);
            let twin = BnClass::positive(c.negative_cycles.clone());
            assert_eq!(norm(&w, Target::Even).unwrap(), twin);
            let mut with_fixed = w.cycle_type().parts().to_vec();
            with_fixed.push(1);
            let w_odd = octachar_core::ConjClass::new(p(&with_fixed));
            assert_eq!(norm(&w_odd, Target::Odd).unwrap(), twin);
        }
    }
    assert_eq!(
        norm(&octachar_core::ConjClass::new(p(&[8])), Target::Even).unwrap(),
        BnClass::positive(p(&[4]))
    );
    assert_eq!(
        norm(&octachar_core::ConjClass::new(p(&[3, 1])), Target::Even),
        Err(Error::NormUndefined)
    );
}
