use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("beta numbers must be strictly decreasing")]
    NotStrictlyDecreasing,
    #[error("insufficient beta length: need at least {needed}, got {got}")]
    InsufficientBetaLength { needed: usize, got: usize },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("expected {expected} quotient partitions, got {got}")]
    QuotientArity { expected: usize, got: usize },
    #[error("not a {0}-core")]
    NotACore(usize),
    #[error("sign undefined: 2-core is neither empty nor (1)")]
    SignUndefined,
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("norm undefined on this class")]
    NormUndefined,
    #[error("class has negative cycles; only the brute-force oracle covers them")]
    NegativeCycles,
    #[error("oracle scale exceeded: n = {0} > 6")]
    OracleScaleExceeded(usize),
    #[error("power sum degree must be at least 1")]
    InvalidPowerSumDegree,
    #[error("Weyl denominator vanishes")]
    WeylDenominatorVanishes,
    #[error("partition has {parts} parts but only {arity} variables")]
    TooManyParts { parts: usize, arity: usize },
    #[error("mirrored point values must be nonzero with distinct absolute values")]
    DegenerateMirroredPoint,
    #[error("interpolation nodes must be distinct")]
    RepeatedNodes,
    #[error("not a rational number")]
    InvalidRational,
}
