use octachar_core::characters::{centralizer_order, CharacterTable};
use octachar_core::partitions::partitions_of;
use octachar_core::{ConjClass, MnEvaluator, Partition};

mod common;
use common::{
    alternant_character, compose, cycle_type, inverse, p, permutations, representative,
    young_symmetrizer_character,
};

#[test]
fn mn_matches_young_symmetrizer_for_s4_and_s5() {
    let mut eval = MnEvaluator::new();
    for m in [4, 5] {
        let table = CharacterTable::compute(m, &mut eval);
        for (i, lambda) in table.irreducibles.iter().enumerate() {
            for (j, class) in table.classes.iter().enumerate() {
                let g = representative(class.cycle_type().parts());
                assert_eq!(
                    young_symmetrizer_character(lambda, &g),
                    table.values[i][j],
                    "{lambda} at {class}"
                );
            }
        }
    }
}

#[test]
fn mn_matches_alternant_expansion_up_to_s8() {
    let mut eval = MnEvaluator::new();
    for m in 1..=8 {
        for lambda in partitions_of(m) {
            for rho in partitions_of(m) {
                let expected = alternant_character(lambda.parts(), rho.parts());
                assert_eq!(
                    eval.character(&lambda, &ConjClass::new(rho.clone()))
                        .unwrap(),
                    expected
                );
            }
        }
    }
}

#[test]
fn centralizer_orders_by_counting_in_s5() {
    let all = permutations(5);
    for rho in partitions_of(5) {
        let g = representative(rho.parts());
        let count = all
            .iter()
            .filter(|x| compose(x, &g) == compose(&g, x))
            .count();
        assert_eq!(centralizer_order(&rho) as usize, count, "{rho}");
        let class_size = all.iter().filter(|x| cycle_type(x) == rho.parts()).count();
        assert_eq!(ConjClass::new(rho.clone()).size() as usize, class_size);
    }
}

/// `Ind_{S_a×S_b}^{S_{a+b}}(θ₀ ⊠ θ₁)(g) = |H|⁻¹ Σ_{x : x g x⁻¹ ∈ H} θ₀ ⊠ θ₁(x g x⁻¹)`.
fn induced_bruteforce(p0: &Partition, p1: &Partition, g: &[usize], eval: &mut MnEvaluator) -> i128 {
    let a = p0.size();
    let n = g.len();
    let mut total = 0i128;
    let mut h_order = 0i128;
    for x in permutations(n) {
        if x.iter().take(a).all(|&i| i < a) {
            h_order += 1;
        }
        let y = compose(&x, &compose(g, &inverse(&x)));
        if !y.iter().take(a).all(|&i| i < a) {
            continue;
        }
        let left: Vec<usize> = y[..a].to_vec();
        let right: Vec<usize> = y[a..].iter().map(|&i| i - a).collect();
        let c0 = ConjClass::new(Partition::new(cycle_type(&left)).unwrap());
        let c1 = ConjClass::new(Partition::new(cycle_type(&right)).unwrap());
        total += eval.character(p0, &c0).unwrap() * eval.character(p1, &c1).unwrap();
    }
    assert_eq!(total % h_order, 0);
    total / h_order
}

#[test]
fn product_character_matches_bruteforce_induction() {
    let mut eval = MnEvaluator::new();
    for n in 1..=6 {
        for a in 0..=n {
            for p0 in partitions_of(a) {
                for p1 in partitions_of(n - a) {
                    for rho in partitions_of(n) {
                        let g = representative(rho.parts());
                        let expected = induced_bruteforce(&p0, &p1, &g, &mut eval);
                        let got = eval
                            .product_character(&p0, &p1, &ConjClass::new(rho.clone()))
                            .unwrap();
                        assert_eq!(got, expected, "{p0} x {p1} at {rho}");
                    }
                }
            }
        }
    }
}

/// Class-fusion sum in exact rationals, `|Z(ρ)| Σ Θ₀(ρ')Θ₁(ρ'') / (|Z(ρ')||Z(ρ'')|)`,
/// over ordered splittings of the parts; the denominators must clear.
#[test]
fn product_character_integer_closure() {
    use num_rational::Ratio;
    let mut eval = MnEvaluator::new();
    for n in 1..=8 {
        for a in 0..=n {
            for rho in partitions_of(n) {
                let parts = rho.parts();
                let mut splits = std::collections::BTreeSet::new();
                for mask in 0u32..(1 << parts.len()) {
                    let pick = |want: bool| -> Vec<usize> {
                        (0..parts.len())
                            .filter(|&i| (mask >> i & 1 == 1) == want)
                            .map(|i| parts[i])
                            .collect()
                    };
                    let (l, r) = (pick(true), pick(false));
                    if l.iter().sum::<usize>() == a {
                        splits.insert((l, r));
                    }
                }
                for p0 in partitions_of(a) {
                    for p1 in partitions_of(n - a) {
                        let mut sum = Ratio::from_integer(0i128);
                        for (l, r) in &splits {
                            let (l, r) = (p(l), p(r));
                            let t0 = eval.character(&p0, &ConjClass::new(l.clone())).unwrap();
                            let t1 = eval.character(&p1, &ConjClass::new(r.clone())).unwrap();
                            let z = (centralizer_order(&l) * centralizer_order(&r)) as i128;
                            sum += Ratio::new(t0 * t1, z);
                        }
                        sum *= Ratio::from_integer(centralizer_order(&rho) as i128);
                        assert!(sum.is_integer(), "{p0} x {p1} at {rho}: {sum}");
                        let got = eval
                            .product_character(&p0, &p1, &ConjClass::new(rho.clone()))
                            .unwrap();
                        assert_eq!(*sum.numer(), got);
                    }
                }
            }
        }
    }
}

#[test]
fn concurrent_evaluators_agree() {
    let lambdas = partitions_of(12);
    let w = octachar_core::characters::w0_class(12);
    let serial: Vec<i128> = {
        let mut eval = MnEvaluator::new();
        lambdas
            .iter()
            .map(|l| eval.character(l, &w).unwrap())
            .collect()
    };
    let handles: Vec<_> = (0..4)
        .map(|k| {
            let lambdas = lambdas.clone();
            let w = w.clone();
            std::thread::spawn(move || {
                let mut eval = MnEvaluator::new();
                lambdas
                    .iter()
                    .skip(k)
                    .map(|l| eval.character(l, &w).unwrap())
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    for (k, h) in handles.into_iter().enumerate() {
        assert_eq!(h.join().unwrap(), serial[k..].to_vec());
    }
}
