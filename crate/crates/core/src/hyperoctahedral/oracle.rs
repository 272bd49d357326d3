//! Brute-force `B_n` characters by explicit induction over signed
//! permutations. Small `n` only.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{BiPartition, BnClass};
use crate::characters::{binomial, CharValue, ConjClass, MnEvaluator};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Largest `n` accepted by [`bn_character_bruteforce`] (`2^6 · 6! = 46080`
/// group elements).
pub const BRUTE_FORCE_MAX_N: usize = 6;

/// A signed permutation of `{±1, …, ±n}` stored 0-based: point `i` goes to
/// `±(perm[i] + 1)`, negative when `flips[i]` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            flips: alloc::vec![false; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let flips = other
            .perm
            .iter()
            .zip(&other.flips)
            .map(|(&j, &f)| f ^ self.flips[j])
            .collect();
        SignedPermutation { perm, flips }
    }

    /// Class in `B_n`: each cycle of the underlying permutation is positive
    /// or negative according to the parity of flips along it.
    pub fn class(&self) -> BnClass {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut parity, mut i) = (0, false, start);
            while !seen[i] {
                seen[i] = true;
                parity ^= self.flips[i];
                i = self.perm[i];
                len += 1;
            }
            if parity {
                negative.push(len);
            } else {
                positive.push(len);
            }
        }
        BnClass::new(
            Partition::from_unsorted(positive),
            Partition::from_unsorted(negative),
        )
    }

    /// Cycle type of the underlying permutation restricted to `range`, which
    /// must be invariant.
    fn cycle_type_on(&self, range: core::ops::Range<usize>) -> Partition {
        let mut seen = alloc::vec![false; self.n()];
        let mut lengths = Vec::new();
        for start in range {
            if seen[start] {
                continue;
            }
            let (mut len, mut i) = (0, start);
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Every element of `B_n`.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0u32..(1 << n) {
                let flips = (0..n).map(|i| mask >> i & 1 == 1).collect();
                out.push(SignedPermutation {
                    perm: perm.clone(),
                    flips,
                });
            }
        }
        out
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = alloc::vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Character of `π(p₀, p₁) = Ind_A^{B_n}(V)` at `c`, summed over elements.
///
/// `A = (Z/2)^n ⋊ (S_a × S_b)` stabilizes the blocks `{1..a}` and
/// `{a+1..n}`; `V` is trivial on the sign flips of the first block, the
/// nontrivial character on each flip of the second, and `π(p₀) ⊠ π(p₁)` on
/// `S_a × S_b`. The induced value is
/// `[B_n : A] / |c| · Σ_{h ∈ A ∩ c} χ_V(h)`.
pub fn bn_character_bruteforce(pi: &BiPartition, c: &BnClass) -> Result<CharValue> {
    let n = pi.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::OracleScaleExceeded(n));
    }
    if c.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: c.n(),
        });
    }
    let a = pi.p0.size();
    let mut eval = MnEvaluator::new();
    let mut class_sizes: BTreeMap<BnClass, i128> = BTreeMap::new();
    let mut restricted_sum: i128 = 0;
    for h in SignedPermutation::all(n) {
        let class = h.class();
        let in_class = &class == c;
        *class_sizes.entry(class).or_insert(0) += 1;
        if !in_class || h.perm[..a].iter().any(|&j| j >= a) {
            continue;
        }
        let flips_on_second = h.flips[a..].iter().filter(|&&f| f).count();
        let left = ConjClass::new(h.cycle_type_on(0..a));
        let right = ConjClass::new(h.cycle_type_on(a..n));
        let value = eval.character(&pi.p0, &left)? * eval.character(&pi.p1, &right)?;
        restricted_sum += if flips_on_second % 2 == 0 {
            value
        } else {
            -value
        };
    }
    let class_size = class_sizes[c];
    let numerator = binomial(n, a) as i128 * restricted_sum;
    debug_assert_eq!(numerator % class_size, 0, "induced character is integral");
    Ok(numerator / class_size)
}
