//! `B_n = (Z/2)^n ⋊ S_n` combinatorics: classes and irreducibles indexed by
//! bipartitions, the embedding `B_n ⊂ S_2n`, the norm map and basechange.

mod oracle;

use alloc::vec::Vec;
use core::fmt;

use crate::characters::{binomial, CharValue, ConjClass, MnEvaluator};
use crate::partitions::{p_core, partitions_of, two_quotient, BetaSet, Partition};
use crate::{Error, Result};

pub use oracle::{bn_character_bruteforce, SignedPermutation, BRUTE_FORCE_MAX_N};

/// Ordered pair `(p₀, p₁)` of partitions; indexes the irreducible
/// `π(p₀, p₁)` of `B_n` with `n = |p₀| + |p₁|`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    pub p0: Partition,
    pub p1: Partition,
}

impl BiPartition {
    pub fn new(p0: Partition, p1: Partition) -> Self {
        BiPartition { p0, p1 }
    }

    pub fn n(&self) -> usize {
        self.p0.size() + self.p1.size()
    }
}

impl fmt::Display for BiPartition {
    /// `([2,1]|[1])`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.p0, self.p1)
    }
}

/// A conjugacy class of `B_n`: cycle lengths of the underlying permutation,
/// split by whether the sign product around the cycle is trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BnClass {
    pub positive_cycles: Partition,
    pub negative_cycles: Partition,
}

impl BnClass {
    pub fn new(positive_cycles: Partition, negative_cycles: Partition) -> Self {
        BnClass {
            positive_cycles,
            negative_cycles,
        }
    }

    pub fn positive(cycles: Partition) -> Self {
        BnClass::new(cycles, Partition::empty())
    }

    pub fn identity(n: usize) -> Self {
        BnClass::positive(Partition::column(n))
    }

    pub fn n(&self) -> usize {
        self.positive_cycles.size() + self.negative_cycles.size()
    }

    /// Order of the centralizer in `B_n`: each cycle length `k` occurring `i`
    /// times (with a fixed sign type) contributes `(2k)^i · i!`.
    pub fn centralizer_order(&self) -> u128 {
        [&self.positive_cycles, &self.negative_cycles]
            .into_iter()
            .flat_map(|p| p.multiplicities())
            .map(|(k, i)| (2 * k as u128).pow(i as u32) * (1..=i as u128).product::<u128>())
            .product()
    }
}

impl fmt::Display for BnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.positive_cycles, self.negative_cycles)
    }
}

/// Which symmetric group a basechange or norm refers to: `S_2n` or `S_2n+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Even,
    Odd,
}

impl Target {
    pub const BOTH: [Target; 2] = [Target::Even, Target::Odd];

    /// `2n` or `2n + 1`.
    pub fn degree(self, n: usize) -> usize {
        match self {
            Target::Even => 2 * n,
            Target::Odd => 2 * n + 1,
        }
    }

    /// The 2-core that partitions in the basechange image carry.
    pub fn core(self) -> Partition {
        match self {
            Target::Even => Partition::empty(),
            Target::Odd => Partition::row(1),
        }
    }

    pub fn of_degree(m: usize) -> Target {
        if m.is_multiple_of(2) {
            Target::Even
        } else {
            Target::Odd
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Even => "even",
            Target::Odd => "odd",
        })
    }
}

/// All bipartitions of `n`, grouped by `|p₀|` ascending, each factor in
/// ascending lexicographic order.
pub fn bipartitions_of(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for a in 0..=n {
        let firsts = partitions_of(a);
        let seconds = partitions_of(n - a);
        for p0 in &firsts {
            for p1 in &seconds {
                out.push(BiPartition::new(p0.clone(), p1.clone()));
            }
        }
    }
    out
}

/// All conjugacy classes of `B_n`.
pub fn bn_classes_of(n: usize) -> Vec<BnClass> {
    bipartitions_of(n)
        .into_iter()
        .map(|b| BnClass::new(b.p0, b.p1))
        .collect()
}

/// Cycle type in `S_2n` of a `B_n` class: `{p₀, p₀, 2p₁}`.
pub fn embed_class(c: &BnClass) -> ConjClass {
    let doubled_negative = c.negative_cycles.scaled(2);
    ConjClass::new(
        c.positive_cycles
            .union(&c.positive_cycles)
            .union(&doubled_negative),
    )
}

/// Norm map: halves an all-even cycle type into a class of positive cycles.
/// For the odd target the class must have exactly one fixed point, which is
/// dropped first.
pub fn norm(w: &ConjClass, target: Target) -> Result<BnClass> {
    let parts = w.cycle_type().parts();
    let fixed = parts.iter().filter(|&&c| c == 1).count();
    let expected_fixed = match target {
        Target::Even => 0,
        Target::Odd => 1,
    };
    if fixed != expected_fixed || parts.iter().any(|&c| c != 1 && c % 2 == 1) {
        return Err(Error::NormUndefined);
    }
    let halved = parts.iter().filter(|&&c| c != 1).map(|&c| c / 2).collect();
    Ok(BnClass::positive(
        Partition::new(halved).expect("halving keeps order"),
    ))
}

/// The partition of `2n` (even target) with empty 2-core, or of `2n+1` (odd
/// target) with 2-core `(1)`, whose 2-quotient is `(p₀, p₁)`.
///
/// Quotients follow [`two_quotient`]: the β-set has even length for the even
/// target and odd length for the odd target; even β-numbers carry `p₀` and
/// odd ones `p₁`. Zero-character lists and the correspondence table depend
/// on this slot convention for the odd target.
pub fn basechange(pi: &BiPartition, target: Target) -> Partition {
    // evens: t beads, odds: t (even target) or t + 1 (odd target)
    let extra = usize::from(target == Target::Odd);
    let t = pi.p0.len().max(pi.p1.len().saturating_sub(extra));
    let evens = crate::partitions::beta_set(&pi.p0, t).expect("t covers p0");
    let odds = crate::partitions::beta_set(&pi.p1, t + extra).expect("t covers p1");
    let entries = evens
        .entries()
        .iter()
        .map(|&b| 2 * b)
        .chain(odds.entries().iter().map(|&b| 2 * b + 1))
        .collect();
    BetaSet::from_unsorted(entries)
        .expect("distinct parities never collide")
        .to_partition()
}

/// Inverse of [`basechange`] on its image: the bipartition and target for a
/// partition whose 2-core is empty or `(1)`, `None` otherwise.
pub fn basechange_preimage(lambda: &Partition) -> Option<(BiPartition, Target)> {
    let target = Target::of_degree(lambda.size());
    if p_core(lambda, 2).expect("modulus 2") != target.core() {
        return None;
    }
    let (p0, p1) = two_quotient(lambda);
    Some((BiPartition::new(p0, p1), target))
}

/// `C(n, |p₀|) · dim π(p₀) · dim π(p₁)`.
pub fn bn_dimension(pi: &BiPartition, eval: &mut MnEvaluator) -> CharValue {
    binomial(pi.n(), pi.p0.size()) as CharValue * eval.dimension(&pi.p0) * eval.dimension(&pi.p1)
}

/// Character of `π(p₀, p₁)` at a class with only positive cycles.
///
/// Such classes meet `S_n ⊂ B_n`, and the restriction of `π(p₀, p₁)` to
/// `S_n` is `Ind_{S_a × S_b}^{S_n}(π(p₀) ⊠ π(p₁))`.
pub fn bn_character_positive(
    pi: &BiPartition,
    c: &BnClass,
    eval: &mut MnEvaluator,
) -> Result<CharValue> {
    if !c.negative_cycles.is_empty() {
        return Err(Error::NegativeCycles);
    }
    eval.product_character(&pi.p0, &pi.p1, &ConjClass::new(c.positive_cycles.clone()))
}
