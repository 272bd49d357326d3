//! Integer partitions and the β-number machinery built on them.

mod beta;
mod core_quotient;
mod sign;

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use beta::{beta_set, partition_from_beta, BetaSet};
pub use core_quotient::{
    from_core_and_quotient, hook_lengths, is_p_core, p_core, p_quotient, p_quotient_padded,
    parity_padded_length, two_quotient, CoreQuotient,
};
pub use sign::{sign_odd_parts, sign_shuffle, Sign};

/// A partition stored as its positive parts in weakly decreasing order.
///
/// Trailing zeros are never stored; zero padding only exists in the views
/// produced by [`beta_set`] and friends. Ordering is lexicographic on the
/// parts, which for partitions of a fixed size puts `[1^m]` first and `[m]`
/// last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts the given parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts).expect("sorted parts")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `[m]` (empty for `m = 0`).
    pub fn row(m: usize) -> Self {
        Self::new(alloc::vec![m]).expect("single part")
    }

    /// The one-column partition `[1^m]`.
    pub fn column(m: usize) -> Self {
        Self::new(alloc::vec![1; m]).expect("constant parts")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition::new(parts).expect("conjugate is decreasing")
    }

    /// Multiplicity of each part size as `(part, count)`, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of odd parts.
    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Multiset union of the parts of both partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p * k).collect()).expect("scaling keeps order")
    }

    /// Dimension of the irreducible `S_m` representation via the hook length
    /// formula. Exact for `m <= 34`.
    pub fn hook_dimension(&self) -> u128 {
        let mut num: u128 = (1..=self.size as u128).product();
        for row in hook_lengths(self) {
            for h in row {
                num /= h as u128;
            }
        }
        num
    }
}

impl fmt::Display for Partition {
    /// Exponent notation, e.g. `[3,2,1^4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (part, count)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if count == 1 {
                write!(f, "{}", part)?;
            } else {
                write!(f, "{}^{}", part, count)?;
            }
        }
        f.write_str("]")
    }
}

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    ascending(n, n, &mut stack, &mut out);
    out
}

fn ascending(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(stack.clone()).expect("generated in decreasing order"));
        return;
    }
    for first in 1..=max.min(rest) {
        stack.push(first);
        ascending(rest - first, first, stack, out);
        stack.pop();
    }
}

/// Number of partitions of `n`, by the standard dynamic program.
pub fn partition_count(n: usize) -> u128 {
    let mut table = alloc::vec![0u128; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}
