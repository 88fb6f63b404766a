//! Real-axis special functions: the dilogarithm, the Rogers dilogarithm and
//! the principal branch of the Lambert W function.
//!
//! Every evaluator returns an [`EvalResult`] carrying an a-posteriori bound on
//! the absolute error, so callers can propagate accuracy instead of guessing.

mod dilog;
mod lambert;

pub use dilog::{li2, li2_over_x, rogers_l};
pub use lambert::{lambert_w0, lambert_w0_asymptotic};

/// A function value together with an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub est_abs_error: f64,
}

impl EvalResult {
    pub(crate) fn new(value: f64, est_abs_error: f64) -> Self {
        debug_assert!(est_abs_error >= 0.0);
        Self {
            value,
            est_abs_error,
        }
    }

    /// Value known to within rounding.
    pub(crate) fn exact(value: f64) -> Self {
        Self::new(value, f64::EPSILON * value.abs())
    }
}

/// π²/6 = Li₂(1) = ζ(2).
pub const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
