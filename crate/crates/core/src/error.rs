use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside domain ({expected})")]
    Domain {
        function: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{0}: NaN argument")]
    NaN(&'static str),

    #[error("{name} must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("{function} did not converge after {iterations} iterations")]
    NoConvergence {
        function: &'static str,
        iterations: usize,
    },

    #[error("root not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    NotBracketed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("inconsistent constants: alpha = {alpha} but e^2/(hbar c) = {derived}")]
    InconsistentConstants { alpha: f64, derived: f64 },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown particle `{0}`")]
    UnknownParticle(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects NaN and returns the argument unchanged.
pub(crate) fn not_nan(function: &'static str, x: f64) -> Result<f64> {
    if x.is_nan() {
        Err(Error::NaN(function))
    } else {
        Ok(x)
    }
}

/// Accepts strictly positive finite values.
pub(crate) fn positive_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            requirement: "positive and finite",
            value,
        })
    }
}
