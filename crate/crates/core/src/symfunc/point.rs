use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Rat;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointShape {
    /// `(x₁, …, x_d)`
    Plain,
    /// `(X, −X)`
    Mirrored,
    /// `(X, −X, x)`
    MirroredPlusOne,
}

/// A specialization point for symmetric polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSpec {
    base: Vec<Rat>,
    extra: Option<Rat>,
    shape: PointShape,
}

impl PointSpec {
    pub fn plain(values: Vec<Rat>) -> Self {
        PointSpec {
            base: values,
            extra: None,
            shape: PointShape::Plain,
        }
    }

    /// `(X, −X)`; the entries of `X` must be nonzero with distinct absolute
    /// values so that all `2m` coordinates are distinct.
    pub fn mirrored(xs: Vec<Rat>) -> Result<Self> {
        check_mirrored(&xs, None)?;
        Ok(PointSpec {
            base: xs,
            extra: None,
            shape: PointShape::Mirrored,
        })
    }

    /// `(X, −X, x)` with all `2m + 1` coordinates distinct and nonzero.
    pub fn mirrored_plus_one(xs: Vec<Rat>, x: Rat) -> Result<Self> {
        check_mirrored(&xs, Some(&x))?;
        Ok(PointSpec {
            base: xs,
            extra: Some(x),
            shape: PointShape::MirroredPlusOne,
        })
    }

    pub fn shape(&self) -> PointShape {
        self.shape
    }

    /// `X` for mirrored shapes, the full point for plain ones.
    pub fn base(&self) -> &[Rat] {
        &self.base
    }

    pub fn extra(&self) -> Option<&Rat> {
        self.extra.as_ref()
    }

    /// Number of coordinates.
    pub fn arity(&self) -> usize {
        match self.shape {
            PointShape::Plain => self.base.len(),
            PointShape::Mirrored => 2 * self.base.len(),
            PointShape::MirroredPlusOne => 2 * self.base.len() + 1,
        }
    }

    /// The coordinates in order.
    pub fn values(&self) -> Vec<Rat> {
        let mut out = self.base.clone();
        if self.shape != PointShape::Plain {
            out.extend(self.base.iter().map(|v| -v));
        }
        out.extend(self.extra.iter().cloned());
        out
    }
}

fn check_mirrored(xs: &[Rat], x: Option<&Rat>) -> Result<()> {
    let abs: Vec<Rat> = xs.iter().chain(x).map(Rat::abs).collect();
    let zero = abs.iter().any(Rat::is_zero);
    let repeated = abs.iter().enumerate().any(|(i, a)| abs[..i].contains(a));
    if zero || repeated {
        Err(Error::DegenerateMirroredPoint)
    } else {
        Ok(())
    }
}

/// Seeded generator of small-height rational points. Numerators and
/// denominators are drawn from `1..=max_height`, signs at random, and
/// absolute values are kept pairwise distinct so that every shape is valid.
#[derive(Clone, Debug)]
pub struct PointSampler {
    rng: ChaCha8Rng,
    max_height: i64,
}

impl PointSampler {
    pub const DEFAULT_HEIGHT: i64 = 20;

    pub fn new(seed: u64) -> Self {
        Self::with_height(seed, Self::DEFAULT_HEIGHT)
    }

    pub fn with_height(seed: u64, max_height: i64) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_height: max_height.max(2),
        }
    }

    /// Independent stream `stream` of the generator seeded by `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut sampler = Self::new(seed);
        sampler.rng.set_stream(stream);
        sampler
    }

    pub fn rational(&mut self) -> Rat {
        let num = self.rng.gen_range(1..=self.max_height);
        let den = self.rng.gen_range(1..=self.max_height);
        let r = Rat::new(num, den).expect("positive denominator");
        if self.rng.gen_bool(0.5) {
            -r
        } else {
            r
        }
    }

    /// `count` rationals with pairwise distinct nonzero absolute values.
    pub fn distinct(&mut self, count: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(count);
        while out.len() < count {
            let r = self.rational();
            if out.iter().all(|o| o.abs() != r.abs()) {
                out.push(r);
            }
        }
        out
    }

    pub fn plain(&mut self, arity: usize) -> PointSpec {
        PointSpec::plain(self.distinct(arity))
    }

    pub fn mirrored(&mut self, m: usize) -> PointSpec {
        PointSpec::mirrored(self.distinct(m)).expect("distinct absolute values")
    }

    pub fn mirrored_plus_one(&mut self, m: usize) -> PointSpec {
        let mut all = self.distinct(m + 1);
        let x = all.pop().expect("m + 1 values");
        PointSpec::mirrored_plus_one(all, x).expect("distinct absolute values")
    }
}
