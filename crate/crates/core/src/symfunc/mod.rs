//! Exact evaluation of Schur polynomials and power sums at rational points.

mod matrix;
mod point;
mod rat;
mod schur;

pub use matrix::{det_bareiss, RatMatrix};
pub use point::{PointSampler, PointShape, PointSpec};
pub use rat::Rat;
pub use schur::{
    coefficients_in_last_variable, interpolate, power_sum, schur_eval, verify_factorization_even,
    verify_factorization_odd, verify_frobenius, OddCase,
};
