//! Pair creation from the vacuum by a static, uniform electric field.
//!
//! * [`specfun`]: dilogarithm, Rogers dilogarithm and Lambert W₀.
//! * [`constants`]: CODATA constants, particle species, critical field and
//!   rate scale.
//! * [`physics`]: rate densities, series ratio, linear and unitarized
//!   probabilities, critical reduced field and volume trade-off.
//! * [`roots`]: a bracketing root finder.

pub mod constants;
pub mod error;
pub mod physics;
pub mod roots;
pub mod specfun;

pub use constants::{derive_scales, DerivedScales, Particle, PhysicalConstants, Spin};
pub use error::{Error, Result};
pub use physics::{
    beta_critical, beta_for_probability, exp_factor, prob_linear, prob_pair, rate_full,
    rate_leading, series_ratio, volume_tradeoff, CriticalField, Probability, RateDensity,
    ReducedField, SpacetimeVolume,
};
pub use specfun::EvalResult;
