use alloc::vec::Vec;

use super::{PointShape, PointSpec, Rat, RatMatrix};
use crate::characters::{centralizer_order, ConjClass, MnEvaluator};
use crate::partitions::{
    beta_set, p_core, p_quotient_padded, partitions_of, sign_shuffle, Partition,
};
use crate::{Error, Result};

/// `Σ v^r` over the coordinates of the point.
pub fn power_sum(r: usize, pt: &PointSpec) -> Result<Rat> {
    if r < 1 {
        return Err(Error::InvalidPowerSumDegree);
    }
    Ok(pt.values().iter().map(|v| v.pow(r)).sum())
}

/// `s_λ(v₁, …, v_d)` as the bialternant `det(v_i^{λ_j + d - j}) / det(v_i^{d - j})`.
pub fn schur_eval(lambda: &Partition, pt: &PointSpec) -> Result<Rat> {
    let values = pt.values();
    schur_at(lambda, &values)
}

fn schur_at(lambda: &Partition, values: &[Rat]) -> Result<Rat> {
    let d = values.len();
    if lambda.len() > d {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            arity: d,
        });
    }
    if values
        .iter()
        .enumerate()
        .any(|(i, v)| values[..i].contains(v))
    {
        return Err(Error::WeylDenominatorVanishes);
    }
    let exponents = beta_set(lambda, d)?;
    let alternant = |exps: &[usize]| {
        RatMatrix::new(
            values
                .iter()
                .map(|v| exps.iter().map(|&e| v.pow(e)).collect())
                .collect(),
        )
        .determinant()
    };
    let staircase: Vec<usize> = (0..d).rev().collect();
    let numerator = alternant(exponents.entries());
    let denominator = alternant(&staircase);
    Ok(numerator / denominator)
}

/// Checks `s_λ = Σ_ρ Θ_λ(c_ρ) / |Z(c_ρ)| · p_ρ` at the point.
pub fn verify_frobenius(
    lambda: &Partition,
    pt: &PointSpec,
    eval: &mut MnEvaluator,
) -> Result<bool> {
    let lhs = schur_eval(lambda, pt)?;
    let m = lambda.size();
    let sums: Vec<Rat> = (1..=m.max(1))
        .map(|r| power_sum(r, pt))
        .collect::<Result<_>>()?;
    let mut rhs = Rat::zero();
    for rho in partitions_of(m) {
        let theta = eval.character(lambda, &ConjClass::new(rho.clone()))?;
        if theta == 0 {
            continue;
        }
        let p_rho: Rat = rho.parts().iter().map(|&r| sums[r - 1].clone()).product();
        let coeff = Rat::new(theta, centralizer_order(&rho)).expect("positive order");
        rhs = rhs + coeff * p_rho;
    }
    Ok(lhs == rhs)
}

fn squares(xs: &[Rat]) -> Vec<Rat> {
    xs.iter().map(|x| x.pow(2)).collect()
}

/// Factorization at `(X, −X)`: zero when the 2-core is nonempty, otherwise
/// `ε(λ) · s_{λ⁰}(X²) · s_{λ¹}(X²)` with `(λ⁰, λ¹)` read from a β-set of
/// length `2m`.
pub fn verify_factorization_even(lambda: &Partition, xs: &[Rat]) -> Result<bool> {
    let m = xs.len();
    let pt = PointSpec::mirrored(xs.to_vec())?;
    let lhs = schur_eval(lambda, &pt)?;
    if !p_core(lambda, 2)?.is_empty() {
        return Ok(lhs.is_zero());
    }
    let q = p_quotient_padded(lambda, 2, 2 * m)?;
    let sq = squares(xs);
    let rhs =
        Rat::integer(sign_shuffle(lambda)?.value()) * schur_at(&q[0], &sq)? * schur_at(&q[1], &sq)?;
    Ok(lhs == rhs)
}

/// Which shape the factorization at `(X, −X, x)` takes, read off the parity
/// counts of a β-set of length `2m + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddCase {
    /// One more odd β-number than even: 2-core `(1)`.
    CoreOne,
    /// One more even β-number than odd: empty 2-core.
    EmptyCore,
    /// Parity counts differ by more than one: the value vanishes.
    Vanishing,
}

impl OddCase {
    pub fn classify(lambda: &Partition, m: usize) -> Result<OddCase> {
        let beta = beta_set(lambda, 2 * m + 1)?;
        let (evens, odds) = (beta.even_count(), beta.odd_count());
        Ok(if odds == evens + 1 {
            OddCase::CoreOne
        } else if evens == odds + 1 {
            OddCase::EmptyCore
        } else {
            OddCase::Vanishing
        })
    }
}

/// Factorization at `(X, −X, x)` with `(λ⁰, λ¹)` read from a β-set of
/// length `2m + 1`:
/// - `CoreOne`: `ε(λ) · x · s_{λ⁰}(X²) · s_{λ¹}(X², x²)`
/// - `EmptyCore`: `ε(λ) · s_{λ¹}(X²) · s_{λ⁰}(X², x²)`
/// - `Vanishing`: zero.
pub fn verify_factorization_odd(lambda: &Partition, xs: &[Rat], x: &Rat) -> Result<bool> {
    let m = xs.len();
    let pt = PointSpec::mirrored_plus_one(xs.to_vec(), x.clone())?;
    debug_assert_eq!(pt.shape(), PointShape::MirroredPlusOne);
    let lhs = schur_eval(lambda, &pt)?;
    let case = OddCase::classify(lambda, m)?;
    if case == OddCase::Vanishing {
        return Ok(lhs.is_zero());
    }
    let q = p_quotient_padded(lambda, 2, 2 * m + 1)?;
    let sq = squares(xs);
    let mut sq_plus = sq.clone();
    sq_plus.push(x.pow(2));
    let sign = Rat::integer(sign_shuffle(lambda)?.value());
    let rhs = match case {
        OddCase::CoreOne => sign * x * schur_at(&q[0], &sq)? * schur_at(&q[1], &sq_plus)?,
        OddCase::EmptyCore => sign * schur_at(&q[1], &sq)? * schur_at(&q[0], &sq_plus)?,
        OddCase::Vanishing => unreachable!(),
    };
    Ok(lhs == rhs)
}

/// Coefficients (constant term first) of the polynomial through the given
/// nodes, by Newton divided differences.
pub fn interpolate(nodes: &[(Rat, Rat)]) -> Result<Vec<Rat>> {
    let n = nodes.len();
    let xs: Vec<&Rat> = nodes.iter().map(|(x, _)| x).collect();
    if xs.iter().enumerate().any(|(i, x)| xs[..i].contains(x)) {
        return Err(Error::RepeatedNodes);
    }
    let mut diffs: Vec<Rat> = nodes.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form
    let mut coeffs: Vec<Rat> = Vec::new();
    for i in (0..n).rev() {
        // coeffs := coeffs * (t - xs[i]) + diffs[i]
        let mut next = alloc::vec![Rat::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * xs[i]);
        }
        next[0] = &next[0] + &diffs[i];
        coeffs = next;
    }
    Ok(coeffs)
}

/// `s_λ(X, −X, t)` as a polynomial in `t`, recovered from `|λ| + 1`
/// evaluations at integer nodes that avoid `0` and `±X`.
pub fn coefficients_in_last_variable(lambda: &Partition, xs: &[Rat]) -> Result<Vec<Rat>> {
    let needed = lambda.size() + 1;
    let mut nodes = Vec::with_capacity(needed);
    let mut k: i64 = 1;
    while nodes.len() < needed {
        for t in [Rat::integer(k), Rat::integer(-k)] {
            if nodes.len() < needed && xs.iter().all(|x| x.abs() != t.abs()) {
                let pt = PointSpec::mirrored_plus_one(xs.to_vec(), t.clone())?;
                let y = schur_eval(lambda, &pt)?;
                nodes.push((t, y));
            }
        }
        k += 1;
    }
    interpolate(&nodes)
}
