use alloc::vec;
use alloc::vec::Vec;

use super::{beta_set, BetaSet, Partition};
use crate::{Error, Result};

/// The p-core of a partition together with its p-quotient.
///
/// Invariant: `|λ| = |core| + p · Σ |quotient_i|`, and `core` has no hook
/// length divisible by `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreQuotient {
    pub p: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    pub fn of(lambda: &Partition, p: usize) -> Result<Self> {
        Ok(CoreQuotient {
            p,
            core: p_core(lambda, p)?,
            quotient: p_quotient(lambda, p)?,
        })
    }

    pub fn reconstruct(&self) -> Result<Partition> {
        from_core_and_quotient(&self.core, &self.quotient, self.p)
    }

    /// Number of `p`-hooks removed to reach the core, `Σ |quotient_i|`.
    pub fn weight(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }
}

/// Hook length of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row)
                .map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1)
                .collect()
        })
        .collect()
}

fn check_modulus(p: usize) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidModulus(p))
    } else {
        Ok(())
    }
}

/// True when no hook length of `lambda` is divisible by `p`.
pub fn is_p_core(lambda: &Partition, p: usize) -> Result<bool> {
    check_modulus(p)?;
    Ok(hook_lengths(lambda).iter().flatten().all(|&h| h % p != 0))
}

fn runner_counts(beta: &BetaSet, p: usize) -> Vec<usize> {
    let mut counts = vec![0; p];
    for &b in beta.entries() {
        counts[b % p] += 1;
    }
    counts
}

/// Removes rim p-hooks until none remain.
///
/// On the abacus this slides every bead on each runner as far up as it goes,
/// so the result only depends on how many beads each runner carries.
pub fn p_core(lambda: &Partition, p: usize) -> Result<Partition> {
    check_modulus(p)?;
    let beta = beta_set(lambda, lambda.len())?;
    let counts = runner_counts(&beta, p);
    let entries = counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| (0..c).map(move |t| i + p * t))
        .collect();
    Ok(BetaSet::from_unsorted(entries)?.to_partition())
}

/// The p-quotient read from a β-set of the given length.
///
/// Slot `i` collects the entries congruent to `i` mod `p`. Changing the
/// length by a multiple of `p` leaves the result unchanged; other shifts
/// rotate the slots.
pub fn p_quotient_padded(lambda: &Partition, p: usize, length: usize) -> Result<Vec<Partition>> {
    check_modulus(p)?;
    let beta = beta_set(lambda, length)?;
    Ok((0..p)
        .map(|i| {
            let runner: Vec<usize> = beta
                .entries()
                .iter()
                .filter(|&&b| b % p == i)
                .map(|&b| (b - i) / p)
                .collect();
            BetaSet::new(runner)
                .expect("runner entries stay strictly decreasing")
                .to_partition()
        })
        .collect())
}

/// The p-quotient with the β-set length padded to a multiple of `p`.
pub fn p_quotient(lambda: &Partition, p: usize) -> Result<Vec<Partition>> {
    check_modulus(p)?;
    let length = lambda.len().div_ceil(p) * p;
    p_quotient_padded(lambda, p, length)
}

/// Smallest β length `≥ len(λ)` whose parity matches `|λ|`.
pub fn parity_padded_length(lambda: &Partition) -> usize {
    let len = lambda.len();
    if len % 2 == lambda.size() % 2 {
        len
    } else {
        len + 1
    }
}

/// 2-quotient `(λ⁰, λ¹)` with an even number of β-numbers for even `|λ|`
/// and an odd number for odd `|λ|`.
///
/// This is the convention under which a partition of `2n` with empty 2-core
/// and a partition of `2n+1` with 2-core `(1)` correspond when their
/// quotients agree. For even `|λ|` it coincides with [`p_quotient`] at
/// `p = 2`; for odd `|λ|` the two slots are swapped relative to it.
pub fn two_quotient(lambda: &Partition) -> (Partition, Partition) {
    let mut q = p_quotient_padded(lambda, 2, parity_padded_length(lambda))
        .expect("padded length covers every part");
    let one = q.pop().expect("two slots");
    let zero = q.pop().expect("two slots");
    (zero, one)
}

/// Rebuilds the partition with the given p-core and p-quotient, using the
/// slot convention of [`p_quotient`].
pub fn from_core_and_quotient(
    core: &Partition,
    quotient: &[Partition],
    p: usize,
) -> Result<Partition> {
    check_modulus(p)?;
    if quotient.len() != p {
        return Err(Error::QuotientArity {
            expected: p,
            got: quotient.len(),
        });
    }
    if !is_p_core(core, p)? {
        return Err(Error::NotACore(p));
    }
    let mut length = core.len().div_ceil(p) * p;
    let counts = loop {
        let counts = runner_counts(&beta_set(core, length)?, p);
        if counts.iter().zip(quotient).all(|(&c, q)| c >= q.len()) {
            break counts;
        }
        length += p;
    };
    let mut entries = Vec::with_capacity(length);
    for (i, (q, &c)) in quotient.iter().zip(&counts).enumerate() {
        let runner = beta_set(q, c)?;
        entries.extend(runner.entries().iter().map(|&b| i + p * b));
    }
    Ok(BetaSet::from_unsorted(entries)?.to_partition())
}
