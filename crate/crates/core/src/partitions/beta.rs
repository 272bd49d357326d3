use alloc::vec::Vec;

use super::Partition;
use crate::{Error, Result};

/// A strictly decreasing sequence of non-negative integers.
///
/// A β-set of length `r` built from `λ` has entries `λ_i + r - i`
/// (1-based `i`, `λ` padded with zeros). Different lengths encode the same
/// partition; decoding ignores the padding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing);
        }
        Ok(BetaSet { entries })
    }

    /// Sorts and deduplicates check: fails if the input has repeats.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.binary_search_by(|e| value.cmp(e)).is_ok()
    }

    /// Number of even entries (`k`).
    pub fn even_count(&self) -> usize {
        self.entries.iter().filter(|&&b| b % 2 == 0).count()
    }

    /// Number of odd entries (`ℓ`).
    pub fn odd_count(&self) -> usize {
        self.entries.len() - self.even_count()
    }

    pub fn to_partition(&self) -> Partition {
        partition_from_beta(self)
    }
}

/// `{λ_1 + (r-1), λ_2 + (r-2), …, λ_r}` with `r = length`.
pub fn beta_set(lambda: &Partition, length: usize) -> Result<BetaSet> {
    if length < lambda.len() {
        return Err(Error::InsufficientBetaLength {
            needed: lambda.len(),
            got: length,
        });
    }
    let entries = (0..length)
        .map(|i| lambda.part(i) + (length - 1 - i))
        .collect();
    Ok(BetaSet { entries })
}

/// Inverse of [`beta_set`] up to zero padding.
pub fn partition_from_beta(beta: &BetaSet) -> Partition {
    let r = beta.len();
    let parts = beta
        .entries
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (r - 1 - i))
        .collect();
    Partition::new(parts).expect("strictly decreasing β-set decodes to a partition")
}
