//! Exact character computations relating the symmetric groups `S_2n` and
//! `S_2n+1` to the hyperoctahedral group `B_n = (Z/2)^n ⋊ S_n`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; the only mutable state is the
//! Murnaghan–Nakayama memo table held by [`characters::MnEvaluator`], which is
//! owned by whoever drives a computation (one per worker).
//!
//! Layout:
//! - [`partitions`]: partitions, β-sets, hooks, p-cores, p-quotients, signs.
//! - [`characters`]: symmetric group classes, centralizers, character values.
//! - [`hyperoctahedral`]: bipartitions, `B_n` classes, embedding, norm map,
//!   basechange and `B_n` character values.
//! - [`symfunc`]: exact rational Schur polynomial evaluation and the
//!   factorization identities at mirrored points.
//! - [`verify`]: harnesses reproducing the correspondence table, sign
//!   censuses and the theorem sweeps.

#![no_std]

extern crate alloc;

mod error;

pub mod characters;
pub mod hyperoctahedral;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};

pub use characters::{CharValue, ConjClass, MnEvaluator};
pub use hyperoctahedral::{BiPartition, BnClass, Target};
pub use partitions::{BetaSet, CoreQuotient, Partition, Sign};
pub use symfunc::{PointSpec, Rat};
