use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use super::{beta_set, p_core, parity_padded_length, Partition};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, x: i128) -> i128 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Sign of a permutation of `0..n` given as its image list.
pub(crate) fn permutation_sign(image: &[usize]) -> Sign {
    let mut seen = alloc::vec![false; image.len()];
    let mut transpositions = 0;
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = image[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    Sign::from_parity(transpositions)
}

/// Sign of the parity-sorting shuffle of the β-numbers.
///
/// The β-set is padded to an even length for even `|λ|` and an odd length
/// for odd `|λ|`. Listing it in increasing order `β_0 < β_1 < …`, position
/// `i` is sent to the slot that `β_i` occupies when evens are matched in
/// order with the even targets and odds with the odd targets. The targets
/// are `{0, …, 2m-1}` in the even case; in the odd case they are
/// `{1, …, 2m+1}` and the result carries an extra `(-1)^m`.
///
/// Defined only when the 2-core is empty (even size) or `(1)` (odd size).
pub fn sign_shuffle(lambda: &Partition) -> Result<Sign> {
    let odd_size = lambda.size() % 2 == 1;
    let expected_core = if odd_size {
        Partition::row(1)
    } else {
        Partition::empty()
    };
    if p_core(lambda, 2)? != expected_core {
        return Err(Error::SignUndefined);
    }
    let length = parity_padded_length(lambda);
    let mut beta: Vec<usize> = beta_set(lambda, length)?.entries().to_vec();
    beta.reverse();

    // 0-based target slots: in the odd case the target set starts at 1, so
    // odd β-numbers land on even slots and vice versa.
    let (even_base, odd_base) = if odd_size { (1, 0) } else { (0, 1) };
    let (mut evens, mut odds) = (0, 0);
    let mut image = Vec::with_capacity(length);
    for &b in &beta {
        let slot = if b % 2 == 0 {
            evens += 1;
            2 * (evens - 1) + even_base
        } else {
            odds += 1;
            2 * (odds - 1) + odd_base
        };
        image.push(slot);
    }
    if image.iter().any(|&t| t >= length) {
        return Err(Error::SignUndefined);
    }
    let shuffle = permutation_sign(&image);
    if odd_size {
        Ok(Sign::from_parity((length - 1) / 2) * shuffle)
    } else {
        Ok(shuffle)
    }
}

/// `(-1)^k` where `λ` has `2k` or `2k+1` odd parts.
pub fn sign_odd_parts(lambda: &Partition) -> Sign {
    Sign::from_parity(lambda.odd_part_count() / 2)
}
