//! Harnesses that rebuild the S_2n ↔ S_2n+1 correspondence table, count
//! signs of `Θ(w₀)`, and sweep the character identities over small ranges.
//!
//! Each sweep returns a [`Report`]; per-item entry points are public so that
//! callers can split the work across threads and [`Report::merge`] the parts.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::characters::{
    admissible_classes, w0_class, CharValue, CharacterTable, ConjClass, MnEvaluator,
};
use crate::hyperoctahedral::{
    basechange, basechange_preimage, bipartitions_of, bn_character_bruteforce,
    bn_character_positive, bn_classes_of, bn_dimension, embed_class, norm, BiPartition, BnClass,
    Target,
};
use crate::partitions::{
    from_core_and_quotient, p_core, p_quotient, partition_count, partitions_of, sign_odd_parts,
    sign_shuffle, Partition, Sign,
};
use crate::symfunc::{
    verify_factorization_even, verify_factorization_odd, verify_frobenius, OddCase, PointSampler,
    Rat,
};
use crate::Result;

/// Outcome of a batch of exact checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn record_error(&mut self, context: impl core::fmt::Display, err: crate::Error) {
        self.checked += 1;
        self.failures.push(format!("{context}: {err}"));
    }

    /// Associative, commutative up to failure order.
    pub fn merge(mut self, other: Report) -> Report {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

/// One line of the correspondence between partitions of `2n` with empty
/// 2-core and partitions of `2n+1` with 2-core `(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceRow {
    pub bipartition: BiPartition,
    pub lambda_even: Partition,
    pub lambda_odd: Partition,
    /// `Θ(w₀)` in `S_2n`.
    pub theta_even: CharValue,
    /// `Θ'(w₀)` in `S_2n+1`.
    pub theta_odd: CharValue,
    pub sign_even: Sign,
    pub sign_odd: Sign,
    pub bn_dim: CharValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceTable {
    pub n: usize,
    /// Sorted by `lambda_even`.
    pub rows: Vec<CorrespondenceRow>,
    /// Partitions of `2n` with `Θ(w₀) = 0`, ascending.
    pub excluded_even: Vec<Partition>,
    /// Partitions of `2n+1` with `Θ'(w₀) = 0`, ascending.
    pub excluded_odd: Vec<Partition>,
}

pub fn build_table(n: usize, eval: &mut MnEvaluator) -> CorrespondenceTable {
    let w_even = w0_class(2 * n);
    let w_odd = w0_class(2 * n + 1);
    let mut rows: Vec<CorrespondenceRow> = bipartitions_of(n)
        .into_iter()
        .map(|pi| {
            let lambda_even = basechange(&pi, Target::Even);
            let lambda_odd = basechange(&pi, Target::Odd);
            CorrespondenceRow {
                theta_even: eval.character(&lambda_even, &w_even).expect("degree 2n"),
                theta_odd: eval.character(&lambda_odd, &w_odd).expect("degree 2n+1"),
                sign_even: sign_shuffle(&lambda_even).expect("empty 2-core"),
                sign_odd: sign_shuffle(&lambda_odd).expect("2-core (1)"),
                bn_dim: bn_dimension(&pi, eval),
                bipartition: pi,
                lambda_even,
                lambda_odd,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.lambda_even.cmp(&b.lambda_even));
    let zeros = |m: usize, w: &ConjClass, eval: &mut MnEvaluator| -> Vec<Partition> {
        partitions_of(m)
            .into_iter()
            .filter(|l| eval.character(l, w).expect("degree m") == 0)
            .collect()
    };
    let excluded_even = zeros(2 * n, &w_even, eval);
    let excluded_odd = zeros(2 * n + 1, &w_odd, eval);
    CorrespondenceTable {
        n,
        rows,
        excluded_even,
        excluded_odd,
    }
}

/// How the values `Θ_λ(w₀)` over all `λ ⊢ m` split by sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignCensus {
    pub m: usize,
    pub num_positive: usize,
    pub num_negative: usize,
    pub num_zero: usize,
}

impl SignCensus {
    pub fn total(&self) -> usize {
        self.num_positive + self.num_negative + self.num_zero
    }

    pub fn record(&mut self, value: CharValue) {
        match value.signum() {
            1 => self.num_positive += 1,
            -1 => self.num_negative += 1,
            _ => self.num_zero += 1,
        }
    }
}

pub fn sign_census(m: usize, eval: &mut MnEvaluator) -> SignCensus {
    let w0 = w0_class(m);
    let mut census = SignCensus {
        m,
        num_positive: 0,
        num_negative: 0,
        num_zero: 0,
    };
    for lambda in partitions_of(m) {
        census.record(eval.character(&lambda, &w0).expect("degree m"));
    }
    census
}

/// Multisets compared by [`dimension_match`], both sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionMatch {
    pub n: usize,
    pub target: Target,
    pub bn_dimensions: Vec<CharValue>,
    pub w0_magnitudes: Vec<CharValue>,
}

impl DimensionMatch {
    pub fn holds(&self) -> bool {
        self.bn_dimensions == self.w0_magnitudes
    }
}

/// Compares `{dim π : π ∈ Irr(B_n)}` with `{|Θ_λ(w₀)| : λ ∈ image of basechange}`.
pub fn dimension_match(n: usize, target: Target, eval: &mut MnEvaluator) -> DimensionMatch {
    let w0 = w0_class(target.degree(n));
    let pis = bipartitions_of(n);
    let mut bn_dimensions: Vec<CharValue> = pis.iter().map(|pi| bn_dimension(pi, eval)).collect();
    let mut w0_magnitudes: Vec<CharValue> = pis
        .iter()
        .map(|pi| {
            eval.character(&basechange(pi, target), &w0)
                .expect("degree matches")
                .abs()
        })
        .collect();
    bn_dimensions.sort_unstable();
    w0_magnitudes.sort_unstable();
    DimensionMatch {
        n,
        target,
        bn_dimensions,
        w0_magnitudes,
    }
}

/// Result of the main-theorem checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub identities: Report,
    /// Product-character values against the brute-force `B_n` oracle.
    pub oracle: Report,
    /// Basechange injective on each `n` and target.
    pub injectivity: Report,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.identities.passed() && self.oracle.passed() && self.injectivity.passed()
    }

    pub fn merge(self, other: MainTheoremReport) -> MainTheoremReport {
        MainTheoremReport {
            identities: self.identities.merge(other.identities),
            oracle: self.oracle.merge(other.oracle),
            injectivity: self.injectivity.merge(other.injectivity),
        }
    }
}

/// Largest `n` at which the main theorem is also checked against the
/// brute-force oracle.
pub const ORACLE_CROSS_CHECK_MAX_N: usize = 4;

/// Every bipartition of every `1 ≤ n ≤ n_max`.
pub fn main_theorem_items(n_max: usize) -> Vec<BiPartition> {
    (1..=n_max).flat_map(bipartitions_of).collect()
}

/// `Θ(BC(π))(w) = ε(BC(π)) · Θ(π)(Nm w)` for both targets and every
/// admissible `w`, plus the oracle cross-check when `n` is small.
pub fn main_theorem_check(pi: &BiPartition, eval: &mut MnEvaluator) -> MainTheoremReport {
    let mut out = MainTheoremReport::default();
    let cross_check = pi.n() <= ORACLE_CROSS_CHECK_MAX_N;
    for target in Target::BOTH {
        let lambda = basechange(pi, target);
        let sign = match sign_shuffle(&lambda) {
            Ok(s) => s,
            Err(e) => {
                out.identities
                    .record_error(format_args!("{pi} {target}"), e);
                continue;
            }
        };
        for w in admissible_classes(target.degree(pi.n())) {
            let outcome: Result<(CharValue, CharValue, BnClass)> = (|| {
                let nm = norm(&w, target)?;
                let lhs = eval.character(&lambda, &w)?;
                let rhs = sign.apply(bn_character_positive(pi, &nm, eval)?);
                Ok((lhs, rhs, nm))
            })();
            let (lhs, rhs, nm) = match outcome {
                Ok(v) => v,
                Err(e) => {
                    out.identities
                        .record_error(format_args!("{pi} {target} at {w}"), e);
                    continue;
                }
            };
            out.identities.check(lhs == rhs, || {
                format!("{pi} {target}: Θ({lambda})({w}) = {lhs} but ε·Θ(π)(Nm w) = {rhs}")
            });
            if cross_check && target == Target::Even {
                let direct = bn_character_positive(pi, &nm, eval);
                let brute = bn_character_bruteforce(pi, &nm);
                out.oracle.check(direct.is_ok() && direct == brute, || {
                    format!("{pi} at {nm}: product {direct:?} vs brute force {brute:?}")
                });
            }
        }
    }
    out
}

/// Basechange injectivity for every `1 ≤ n ≤ n_max` and both targets.
pub fn main_theorem_injectivity(n_max: usize) -> Report {
    (1..=n_max)
        .flat_map(|n| Target::BOTH.map(|t| basechange_injectivity(n, t)))
        .fold(Report::new(), Report::merge)
}

pub fn main_theorem_sweep(n_max: usize, eval: &mut MnEvaluator) -> MainTheoremReport {
    let mut out = MainTheoremReport {
        injectivity: main_theorem_injectivity(n_max),
        ..Default::default()
    };
    for pi in main_theorem_items(n_max) {
        out = out.merge(main_theorem_check(&pi, eval));
    }
    out
}

pub fn basechange_injectivity(n: usize, target: Target) -> Report {
    let mut images: Vec<Partition> = bipartitions_of(n)
        .iter()
        .map(|pi| basechange(pi, target))
        .collect();
    let total = images.len();
    images.sort();
    images.dedup();
    let mut report = Report::new();
    report.check(images.len() == total, || {
        format!("basechange to {target} not injective at n = {n}")
    });
    report
}

/// All `λ` with `|λ| ≤ max_size`.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// For `λ` with the 2-core matching its size parity: `Θ_λ(w) = ε(λ) ·
/// Θ(π(λ⁰) × π(λ¹))(w')` on admissible `w`. For every other `λ`:
/// `Θ_λ(w) = 0`.
pub fn littlewood_check(lambda: &Partition, eval: &mut MnEvaluator) -> Report {
    let mut report = Report::new();
    let m = lambda.size();
    let quotient = basechange_preimage(lambda).map(|(pi, _)| pi);
    for w in admissible_classes(m) {
        let theta = match eval.character(lambda, &w) {
            Ok(t) => t,
            Err(e) => {
                report.record_error(lambda, e);
                continue;
            }
        };
        match &quotient {
            None => report.check(theta == 0, || {
                format!("{lambda} has wrong 2-core but Θ({w}) = {theta}")
            }),
            Some(pi) => {
                let halved = halve_class(&w);
                let expected = sign_shuffle(lambda)
                    .and_then(|s| Ok(s.apply(eval.product_character(&pi.p0, &pi.p1, &halved)?)));
                report.check(expected == Ok(theta), || {
                    format!("{lambda} at {w}: Θ = {theta}, ε·product = {expected:?}")
                });
            }
        }
    }
    report
}

/// `w'`: every even cycle halved, a fixed point dropped.
fn halve_class(w: &ConjClass) -> ConjClass {
    ConjClass::new(
        Partition::new(
            w.cycle_type()
                .parts()
                .iter()
                .filter(|&&c| c != 1)
                .map(|&c| c / 2)
                .collect(),
        )
        .expect("halving keeps order"),
    )
}

pub fn littlewood_sweep(max_size: usize, eval: &mut MnEvaluator) -> Report {
    partitions_up_to(max_size)
        .iter()
        .fold(Report::new(), |acc, l| acc.merge(littlewood_check(l, eval)))
}

/// `ε(λ) = ε'(λ)` when `ε(λ)` is defined.
pub fn sign_agreement_check(lambda: &Partition) -> Report {
    let mut report = Report::new();
    if let Ok(shuffle) = sign_shuffle(lambda) {
        let odd = sign_odd_parts(lambda);
        report.check(shuffle == odd, || {
            format!("{lambda}: ε = {shuffle}, ε' = {odd}")
        });
    }
    report
}

pub fn sign_agreement_sweep(max_size: usize) -> Report {
    partitions_up_to(max_size)
        .iter()
        .fold(Report::new(), |acc, l| acc.merge(sign_agreement_check(l)))
}

/// Items of the Frobenius sweep: every `λ ⊢ m` with `1 ≤ m ≤ max_m`.
pub fn frobenius_items(max_m: usize) -> Vec<Partition> {
    (1..=max_m).flat_map(partitions_of).collect()
}

/// Frobenius expansion for `λ ⊢ m` at `points` rational points of arity `m`,
/// drawn from stream `stream` of the generator seeded by `seed`.
pub fn frobenius_check(
    lambda: &Partition,
    points: usize,
    seed: u64,
    stream: u64,
    eval: &mut MnEvaluator,
) -> Report {
    let mut sampler = PointSampler::with_stream(seed, stream);
    let mut report = Report::new();
    for _ in 0..points {
        let pt = sampler.plain(lambda.size().max(1));
        match verify_frobenius(lambda, &pt, eval) {
            Ok(ok) => report.check(ok, || {
                format!(
                    "Frobenius fails for {lambda} at {}",
                    join_values(&pt.values())
                )
            }),
            Err(e) => report.record_error(lambda, e),
        }
    }
    report
}

pub fn frobenius_sweep(max_m: usize, points: usize, seed: u64, eval: &mut MnEvaluator) -> Report {
    frobenius_items(max_m)
        .iter()
        .enumerate()
        .fold(Report::new(), |acc, (i, l)| {
            acc.merge(frobenius_check(l, points, seed, i as u64, eval))
        })
}

fn join_values(values: &[Rat]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{v}"));
    }
    out
}

/// Items of the even factorization sweep: every `λ ⊢ 2n`, `1 ≤ n ≤ max_n`.
pub fn even_factorization_items(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(|n| partitions_of(2 * n)).collect()
}

/// Factorization of `s_λ` at `(X, −X)` with `|X| = |λ| / 2`.
pub fn even_factorization_check(lambda: &Partition, seed: u64, stream: u64) -> Report {
    let xs = PointSampler::with_stream(seed, stream).distinct(lambda.size() / 2);
    let mut report = Report::new();
    match verify_factorization_even(lambda, &xs) {
        Ok(ok) => report.check(ok, || {
            format!(
                "even factorization fails for {lambda} at X = {}",
                join_values(&xs)
            )
        }),
        Err(e) => report.record_error(lambda, e),
    }
    report
}

pub fn even_factorization_sweep(max_n: usize, seed: u64) -> Report {
    even_factorization_items(max_n)
        .iter()
        .enumerate()
        .fold(Report::new(), |acc, (i, l)| {
            acc.merge(even_factorization_check(l, seed, i as u64))
        })
}

/// Odd-arity factorization results with counts per [`OddCase`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OddFactorizationReport {
    pub report: Report,
    pub core_one: usize,
    pub empty_core: usize,
    pub vanishing: usize,
}

impl OddFactorizationReport {
    pub fn merge(self, other: OddFactorizationReport) -> OddFactorizationReport {
        OddFactorizationReport {
            report: self.report.merge(other.report),
            core_one: self.core_one + other.core_one,
            empty_core: self.empty_core + other.empty_core,
            vanishing: self.vanishing + other.vanishing,
        }
    }

    /// Every branch of the factorization was reached at least once.
    pub fn covers_all_cases(&self) -> bool {
        self.core_one > 0 && self.empty_core > 0 && self.vanishing > 0
    }
}

/// Items of the odd factorization sweep: every `λ` with `|λ| ≤ 2 max_n + 1`.
/// Odd sizes exercise the 2-core `(1)` branch; the empty-core branch needs
/// even sizes.
pub fn odd_factorization_items(max_n: usize) -> Vec<Partition> {
    partitions_up_to(2 * max_n + 1)
}

/// Factorization of `s_λ` at `(X, −X, x)` with `|X| = ⌊|λ| / 2⌋`.
pub fn odd_factorization_check(
    lambda: &Partition,
    seed: u64,
    stream: u64,
) -> OddFactorizationReport {
    let n = lambda.size() / 2;
    let mut values = PointSampler::with_stream(seed, stream).distinct(n + 1);
    let x = values.pop().expect("n + 1 values");
    let mut out = OddFactorizationReport::default();
    match OddCase::classify(lambda, n) {
        Ok(OddCase::CoreOne) => out.core_one += 1,
        Ok(OddCase::EmptyCore) => out.empty_core += 1,
        Ok(OddCase::Vanishing) => out.vanishing += 1,
        Err(_) => {}
    }
    match verify_factorization_odd(lambda, &values, &x) {
        Ok(ok) => out.report.check(ok, || {
            format!(
                "odd factorization fails for {lambda} at X = {}, x = {x}",
                join_values(&values)
            )
        }),
        Err(e) => out.report.record_error(lambda, e),
    }
    out
}

pub fn odd_factorization_sweep(max_n: usize, seed: u64) -> OddFactorizationReport {
    odd_factorization_items(max_n)
        .iter()
        .enumerate()
        .fold(OddFactorizationReport::default(), |acc, (i, l)| {
            acc.merge(odd_factorization_check(l, seed, i as u64))
        })
}

/// `{λ ⊢ 2n : Θ_λ(w₀) ≠ 0}` (resp. `2n+1`) equals the basechange image.
pub fn image_characterization(n: usize, target: Target, eval: &mut MnEvaluator) -> Report {
    let w0 = w0_class(target.degree(n));
    let mut nonzero: Vec<Partition> = partitions_of(target.degree(n))
        .into_iter()
        .filter(|l| eval.character(l, &w0).expect("degree matches") != 0)
        .collect();
    let mut image: Vec<Partition> = bipartitions_of(n)
        .iter()
        .map(|pi| basechange(pi, target))
        .collect();
    nonzero.sort();
    image.sort();
    let mut report = Report::new();
    report.check(nonzero == image, || {
        format!(
            "n = {n} {target}: {} nonzero vs {} in image",
            nonzero.len(),
            image.len()
        )
    });
    report
}

/// `from_core_and_quotient(core, quotient) = λ` and the size identity, for
/// all `|λ| ≤ max_size` and each modulus.
pub fn core_quotient_roundtrip(max_size: usize, moduli: &[usize]) -> Report {
    let mut report = Report::new();
    for m in 0..=max_size {
        for lambda in partitions_of(m) {
            for &p in moduli {
                let outcome = (|| {
                    let core = p_core(&lambda, p)?;
                    let quotient = p_quotient(&lambda, p)?;
                    let weight =
                        core.size() + p * quotient.iter().map(Partition::size).sum::<usize>();
                    let back = from_core_and_quotient(&core, &quotient, p)?;
                    Ok::<_, crate::Error>((weight, back))
                })();
                match outcome {
                    Ok((weight, back)) => report.check(weight == m && back == lambda, || {
                        format!("{lambda} mod {p}: weight {weight}, rebuilt {back}")
                    }),
                    Err(e) => report.record_error(&lambda, e),
                }
            }
        }
    }
    report
}

/// `#bipartitions(n) = #{λ ⊢ 2n, empty 2-core} = #{λ ⊢ 2n+1, 2-core (1)}`.
pub fn count_identity(n_max: usize) -> Report {
    let mut report = Report::new();
    for n in 0..=n_max {
        let bip = bipartitions_of(n).len();
        let count_core = |m: usize, core: Partition| {
            partitions_of(m)
                .iter()
                .filter(|l| p_core(l, 2).expect("modulus 2") == core)
                .count()
        };
        let even = count_core(2 * n, Target::Even.core());
        let odd = count_core(2 * n + 1, Target::Odd.core());
        let formula: u128 = (0..=n)
            .map(|a| partition_count(a) * partition_count(n - a))
            .sum();
        report.check(bip == even && bip == odd && bip as u128 == formula, || {
            format!("n = {n}: {bip} bipartitions, {even} even, {odd} odd")
        });
    }
    report
}

/// Row and column orthogonality of the character table of `S_m`.
pub fn orthogonality(m: usize, eval: &mut MnEvaluator) -> Report {
    let table = CharacterTable::compute(m, eval);
    let z: Vec<i128> = table
        .classes
        .iter()
        .map(|c| c.centralizer_order() as i128)
        .collect();
    let order: i128 = (1..=m as i128).product();
    let k = table.irreducibles.len();
    let mut report = Report::new();
    for a in 0..k {
        for b in 0..k {
            // Σ_ρ Θ_a Θ_b / |Z(ρ)| = δ, scaled by m!
            let rows: i128 = (0..k)
                .map(|c| table.values[a][c] * table.values[b][c] * (order / z[c]))
                .sum();
            report.check(rows == if a == b { order } else { 0 }, || {
                format!(
                    "S_{m} rows {} {}: {rows}",
                    table.irreducibles[a], table.irreducibles[b]
                )
            });
            let cols: i128 = (0..k)
                .map(|r| table.values[r][a] * table.values[r][b])
                .sum();
            report.check(cols == if a == b { z[a] } else { 0 }, || {
                format!(
                    "S_{m} columns {} {}: {cols}",
                    table.classes[a], table.classes[b]
                )
            });
        }
    }
    report
}

/// Number of `B_n` classes whose image in `S_2n` is the class of `w₀`.
pub fn w0_fiber_size(n: usize) -> usize {
    let w0 = w0_class(2 * n);
    bn_classes_of(n)
        .iter()
        .filter(|c| embed_class(c) == w0)
        .count()
}
