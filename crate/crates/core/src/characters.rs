//! Symmetric group conjugacy classes and exact character values.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{partitions_of, Partition, Sign};
use crate::{Error, Result};

/// Exact character value.
pub type CharValue = i128;

/// A conjugacy class of `S_m`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass {
    cycle_type: Partition,
}

impl ConjClass {
    pub fn new(cycle_type: Partition) -> Self {
        ConjClass { cycle_type }
    }

    pub fn identity(m: usize) -> Self {
        ConjClass::new(Partition::column(m))
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    /// Degree of the symmetric group the class lives in.
    pub fn degree(&self) -> usize {
        self.cycle_type.size()
    }

    /// Sign of any permutation in the class.
    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.cycle_type.parts().iter().map(|&c| c - 1).sum())
    }

    /// Order of the centralizer: `Π k^{i_k} · i_k!` over cycle lengths `k`
    /// occurring `i_k` times.
    pub fn centralizer_order(&self) -> u128 {
        centralizer_order(&self.cycle_type)
    }

    /// Every cycle doubled: the class `2ρ` in `S_2m`.
    pub fn doubled(&self) -> ConjClass {
        ConjClass::new(self.cycle_type.scaled(2))
    }

    /// Number of elements in the class.
    pub fn size(&self) -> u128 {
        factorial(self.degree()) / self.centralizer_order()
    }
}

impl From<Partition> for ConjClass {
    fn from(cycle_type: Partition) -> Self {
        ConjClass::new(cycle_type)
    }
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle_type.fmt(f)
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn centralizer_order(cycle_type: &Partition) -> u128 {
    cycle_type
        .multiplicities()
        .into_iter()
        .map(|(k, i)| (k as u128).pow(i as u32) * factorial(i))
        .product()
}

pub fn double_class(rho: &ConjClass) -> ConjClass {
    rho.doubled()
}

/// Classes of `S_m` made of disjoint even cycles plus at most one fixed
/// point: all-even cycle types for even `m`, all-even plus a single `1` for
/// odd `m`. Ordered by the halved class.
pub fn admissible_classes(m: usize) -> Vec<ConjClass> {
    partitions_of(m / 2)
        .into_iter()
        .map(|half| {
            let doubled = half.scaled(2);
            if m % 2 == 1 {
                ConjClass::new(doubled.union(&Partition::row(1)))
            } else {
                ConjClass::new(doubled)
            }
        })
        .collect()
}

/// The class of the fixed-point-free involution `w₀`: `[2^{⌊m/2⌋}]`, with a
/// fixed point appended for odd `m`.
pub fn w0_class(m: usize) -> ConjClass {
    let mut parts = alloc::vec![2; m / 2];
    if m % 2 == 1 {
        parts.push(1);
    }
    ConjClass::new(Partition::new(parts).expect("decreasing"))
}

/// Murnaghan–Nakayama evaluator with a memo table keyed on
/// `(partition, remaining cycle lengths)`.
///
/// The memo is owned; run one evaluator per worker thread.
#[derive(Debug, Default, Clone)]
pub struct MnEvaluator {
    memo: BTreeMap<(Vec<usize>, Vec<usize>), CharValue>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized entries.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `Θ_λ(c_ρ)`.
    pub fn character(&mut self, lambda: &Partition, rho: &ConjClass) -> Result<CharValue> {
        if lambda.size() != rho.degree() {
            return Err(Error::SizeMismatch {
                expected: lambda.size(),
                got: rho.degree(),
            });
        }
        Ok(self.eval(lambda.parts(), rho.cycle_type().parts()))
    }

    /// Dimension of the irreducible representation `π(λ)`.
    pub fn dimension(&mut self, lambda: &Partition) -> CharValue {
        self.eval(lambda.parts(), &alloc::vec![1; lambda.size()])
    }

    fn eval(&mut self, parts: &[usize], cycles: &[usize]) -> CharValue {
        let Some((&hook, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (parts.to_vec(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = parts.len();
        let beta: Vec<usize> = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (r - 1 - i))
            .collect();
        let mut total: CharValue = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < hook {
                continue;
            }
            let target = b - hook;
            if beta.contains(&target) {
                continue;
            }
            // beads strictly between target and b give the leg length
            let leg = beta.iter().filter(|&&e| e > target && e < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let mut new_parts: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &e)| e - (r - 1 - i))
                .collect();
            while new_parts.last() == Some(&0) {
                new_parts.pop();
            }
            let value = self.eval(&new_parts, rest);
            total += Sign::from_parity(leg).apply(value);
        }
        self.memo.insert(key, total);
        total
    }

    /// Character of `Ind_{S_a × S_b}^{S_{a+b}} (π(p₀) ⊠ π(p₁))` at `c_ρ`.
    ///
    /// The class-fusion sum runs over sub-multisets `ρ'` of the cycles of `ρ`
    /// with `|ρ'| = a`; each contributes `|Z(ρ)| / (|Z(ρ')| |Z(ρ'')|)`, which
    /// is the product of binomials `C(i_k, i'_k)` over cycle lengths `k`.
    pub fn product_character(
        &mut self,
        p0: &Partition,
        p1: &Partition,
        rho: &ConjClass,
    ) -> Result<CharValue> {
        let n = p0.size() + p1.size();
        if rho.degree() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: rho.degree(),
            });
        }
        let mult = rho.cycle_type().multiplicities();
        let mut total = 0;
        for (chosen, weight) in split_multiset(&mult, p0.size()) {
            let (left, right) = split_parts(&mult, &chosen);
            let a = self.eval(p0.parts(), left.parts());
            if a == 0 {
                continue;
            }
            let b = self.eval(p1.parts(), right.parts());
            total += weight as CharValue * a * b;
        }
        Ok(total)
    }
}

/// All ways to pick `chosen[i] ≤ mult[i].1` cycles of each length so that the
/// chosen lengths sum to `target`, with weight `Π C(mult, chosen)`.
pub(crate) fn split_multiset(mult: &[(usize, usize)], target: usize) -> Vec<(Vec<usize>, u128)> {
    fn go(
        mult: &[(usize, usize)],
        idx: usize,
        rest: usize,
        chosen: &mut Vec<usize>,
        weight: u128,
        out: &mut Vec<(Vec<usize>, u128)>,
    ) {
        if idx == mult.len() {
            if rest == 0 {
                out.push((chosen.clone(), weight));
            }
            return;
        }
        let (len, count) = mult[idx];
        for take in 0..=count {
            if take * len > rest {
                break;
            }
            chosen.push(take);
            go(
                mult,
                idx + 1,
                rest - take * len,
                chosen,
                weight * binomial(count, take),
                out,
            );
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    go(mult, 0, target, &mut Vec::new(), 1, &mut out);
    out
}

pub(crate) fn split_parts(mult: &[(usize, usize)], chosen: &[usize]) -> (Partition, Partition) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (&(len, count), &take) in mult.iter().zip(chosen) {
        left.extend(core::iter::repeat_n(len, take));
        right.extend(core::iter::repeat_n(len, count - take));
    }
    (
        Partition::new(left).expect("descending lengths"),
        Partition::new(right).expect("descending lengths"),
    )
}

/// `Θ_λ(c_ρ)` with a throwaway memo.
pub fn mn_character(lambda: &Partition, rho: &ConjClass) -> Result<CharValue> {
    MnEvaluator::new().character(lambda, rho)
}

/// Induced product character with a throwaway memo.
pub fn product_character(p0: &Partition, p1: &Partition, rho: &ConjClass) -> Result<CharValue> {
    MnEvaluator::new().product_character(p0, p1, rho)
}

/// Full character table of `S_m`: rows are irreducibles, columns classes,
/// both in ascending lexicographic order of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub m: usize,
    pub irreducibles: Vec<Partition>,
    pub classes: Vec<ConjClass>,
    pub values: Vec<Vec<CharValue>>,
}

impl CharacterTable {
    pub fn compute(m: usize, eval: &mut MnEvaluator) -> Self {
        let irreducibles = partitions_of(m);
        let classes: Vec<ConjClass> = irreducibles.iter().cloned().map(ConjClass::new).collect();
        let values = irreducibles
            .iter()
            .map(|lambda| {
                classes
                    .iter()
                    .map(|rho| eval.character(lambda, rho).expect("sizes agree"))
                    .collect()
            })
            .collect();
        CharacterTable {
            m,
            irreducibles,
            classes,
            values,
        }
    }
}
