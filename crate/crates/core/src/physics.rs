//! Pair-creation observables for a static, uniform electric field.
//!
//! Rates are evaluated in the log domain alongside the linear value, so the
//! whole physically interesting range β ~ 0.005–0.1 (where e^(−π/β) sits
//! between 10⁻²⁷⁰ and 10⁻¹⁴) keeps full relative precision, and rates that
//! underflow still order correctly through [`RateDensity::ln`].

use crate::constants::{DerivedScales, Spin};
use crate::error::{positive_finite, Error, Result};
use crate::roots::bisect;
use crate::specfun::{lambert_w0, li2_over_x};
use std::f64::consts::{LN_10, PI};

/// β = E/E_cr.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedField(f64);

impl ReducedField {
    pub fn new(beta: f64) -> Result<Self> {
        positive_finite("beta", beta).map(Self)
    }

    /// Field strength in V/cm relative to the species' critical field.
    pub fn from_field(e_vpercm: f64, scales: &DerivedScales) -> Result<Self> {
        let e = positive_finite("field", e_vpercm)?;
        Self::new(e / scales.e_cr)
    }

    pub fn beta(self) -> f64 {
        self.0
    }

    /// The field in V/cm.
    pub fn field(self, scales: &DerivedScales) -> f64 {
        self.0 * scales.e_cr
    }
}

/// ΔV·ΔT in cm³·s.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SpacetimeVolume(f64);

impl SpacetimeVolume {
    pub fn new(vt: f64) -> Result<Self> {
        positive_finite("vt", vt).map(Self)
    }

    pub fn unit() -> Self {
        Self(1.0)
    }

    pub fn vt(self) -> f64 {
        self.0
    }
}

/// Pairs per cm³ per s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateDensity {
    value: f64,
    ln_value: f64,
}

impl RateDensity {
    pub fn value(self) -> f64 {
        self.value
    }

    /// Natural log of the rate; finite even where `value` underflows to 0.
    pub fn ln(self) -> f64 {
        self.ln_value
    }
}

/// Unitarized pair-creation probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probability {
    value: f64,
    ln_expected_pairs: f64,
}

impl Probability {
    /// W_p ∈ [0, 1]. Rounds to exactly 1.0 once the expected pair count
    /// exceeds ~37 and to 0 when it underflows.
    pub fn value(self) -> f64 {
        self.value
    }

    /// ln(w̄·ΔVΔT), the log of the exponent in 1 − exp(−w̄·ΔVΔT).
    pub fn ln_expected_pairs(self) -> f64 {
        self.ln_expected_pairs
    }

    /// Vacuum persistence probability 1 − W_p.
    pub fn vacuum_persistence(self) -> f64 {
        (-self.ln_expected_pairs.exp()).exp()
    }
}

/// x = e^(−π/β).
pub fn exp_factor(f: ReducedField) -> f64 {
    (-PI / f.beta()).exp()
}

fn ln_leading(f: ReducedField, scales: &DerivedScales) -> f64 {
    scales.w0.ln() + 2.0 * f.beta().ln() - PI / f.beta()
}

/// w₀β²e^(−π/β): the first term of the fermion series.
pub fn rate_leading(f: ReducedField, scales: &DerivedScales) -> RateDensity {
    let ln_value = ln_leading(f, scales);
    let beta = f.beta();
    let x = exp_factor(f);
    let direct = scales.w0 * beta * beta * x;
    let value = if x.is_normal() && direct.is_normal() {
        direct
    } else {
        ln_value.exp()
    };
    RateDensity { value, ln_value }
}

/// Li₂(±x)/(±x) for the sign belonging to `spin`.
fn summed_ratio(x: f64, spin: Spin) -> f64 {
    let signed = match spin {
        Spin::Half => x,
        Spin::Zero => -x,
    };
    li2_over_x(signed).expect("argument lies in [-1, 1]").value
}

/// Exactly summed rate density.
///
/// Fermions: w₀β²Li₂(x). Bosons: ½w₀β²(−Li₂(−x)). Both are computed as the
/// leading term times Li₂(±x)/(±x), which never forms x on its own when it
/// would underflow.
pub fn rate_full(f: ReducedField, spin: Spin, scales: &DerivedScales) -> RateDensity {
    let leading = rate_leading(f, scales);
    let spin_factor = spin.multiplicity() / 2.0;
    let ratio = summed_ratio(exp_factor(f), spin);
    RateDensity {
        value: leading.value * spin_factor * ratio,
        ln_value: leading.ln_value + spin_factor.ln() + ratio.ln(),
    }
}

/// R(β) = Li₂(x)/x: full fermion series over its first term.
pub fn series_ratio(f: ReducedField) -> f64 {
    summed_ratio(exp_factor(f), Spin::Half)
}

/// w̄·ΔVΔT: the first-order expansion of the probability. Not bounded by 1.
pub fn prob_linear(f: ReducedField, spin: Spin, scales: &DerivedScales, v: SpacetimeVolume) -> f64 {
    rate_full(f, spin, scales).value * v.vt()
}

/// W_p = 1 − exp(−w̄·ΔVΔT) with the exactly summed rate.
pub fn prob_pair(
    f: ReducedField,
    spin: Spin,
    scales: &DerivedScales,
    v: SpacetimeVolume,
) -> Probability {
    let rate = rate_full(f, spin, scales);
    let ln_expected_pairs = rate.ln_value + v.vt().ln();
    let expected = if rate.value > 0.0 {
        rate.value * v.vt()
    } else {
        ln_expected_pairs.exp()
    };
    Probability {
        value: -(-expected).exp_m1(),
        ln_expected_pairs,
    }
}

/// Result of [`beta_critical`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalField {
    pub beta: f64,
    /// A = (π/2)√(w₀ΔVΔT)
    pub a: f64,
    /// W₀(A)
    pub w: f64,
    /// w₀β²e^(−π/β)·ΔVΔT − 1 at the returned β
    pub residual: f64,
}

/// w₀β²e^(−π/β)·vt − 1, evaluated without forming the tiny exponential.
pub fn critical_residual(beta: f64, scales: &DerivedScales, v: SpacetimeVolume) -> f64 {
    (scales.w0.ln() + v.vt().ln() + 2.0 * beta.ln() - PI / beta).exp_m1()
}

/// Reduced field at which the leading-term linear probability reaches 1.
///
/// With s = √(w₀ΔVΔT) and z = sβ the condition becomes ln z = A/z, whose
/// solution is z = e^(W(A)) with A = πs/2.
pub fn beta_critical(scales: &DerivedScales, v: SpacetimeVolume) -> Result<CriticalField> {
    let ln_s = 0.5 * (scales.w0.ln() + v.vt().ln());
    let a = 0.5 * PI * ln_s.exp();
    let w = lambert_w0(a)?.value;
    let beta = (w - ln_s).exp();
    Ok(CriticalField {
        beta,
        a,
        w,
        residual: critical_residual(beta, scales, v),
    })
}

/// log₁₀ of the factor k²·e^((k−1)π/β) by which ΔVΔT must grow to keep the
/// leading-order expected pair count when the field drops from β to β/k.
pub fn volume_tradeoff(f: ReducedField, field_reduction: f64) -> Result<f64> {
    let k = field_reduction;
    if !(k.is_finite() && k >= 1.0) {
        return Err(Error::InvalidParameter {
            name: "field_reduction",
            requirement: "finite and >= 1",
            value: k,
        });
    }
    Ok(2.0 * k.log10() + (k - 1.0) * PI / (f.beta() * LN_10))
}

/// Reduced field at which [`prob_pair`] equals `target`, by bisection in ln β.
pub fn beta_for_probability(
    target: f64,
    spin: Spin,
    scales: &DerivedScales,
    v: SpacetimeVolume,
) -> Result<ReducedField> {
    if !(target > 0.0 && target < 1.0) {
        return Err(Error::InvalidParameter {
            name: "probability",
            requirement: "strictly between 0 and 1",
            value: target,
        });
    }
    // W_p = p  ⇔  ln(expected pairs) = ln(−ln(1 − p))
    let ln_needed = (-(-target).ln_1p()).ln();
    let g = |ln_beta: f64| {
        let f = ReducedField(ln_beta.exp());
        prob_pair(f, spin, scales, v).ln_expected_pairs - ln_needed
    };
    let ln_beta = bisect(g, (1e-6f64).ln(), (1e6f64).ln(), 1e-15)?;
    ReducedField::new(ln_beta.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(b: f64) -> ReducedField {
        ReducedField::new(b).unwrap()
    }

    #[test]
    fn field_invariants() {
        assert!(ReducedField::new(0.0).is_err());
        assert!(ReducedField::new(-1.0).is_err());
        assert!(ReducedField::new(f64::INFINITY).is_err());
        assert!(ReducedField::new(f64::NAN).is_err());
        assert!(SpacetimeVolume::new(0.0).is_err());
    }

    #[test]
    fn exp_factor_values() {
        let half = exp_factor(beta(PI / 2f64.ln()));
        assert!((half - 0.5).abs() < 1e-15);
        assert!((exp_factor(beta(2.0)) - 0.207_879_576_350_761_9).abs() < 1e-15);
        assert!(exp_factor(beta(1e12)) > 1.0 - 1e-11);
        assert_eq!(exp_factor(beta(1e-3)), 0.0);
    }

    #[test]
    fn leading_rate_at_critical_field() {
        let s = DerivedScales::electron();
        let r = rate_leading(beta(1.0), &s).value();
        assert!((r / (s.w0 * (-PI).exp()) - 1.0).abs() < 1e-14);
        assert!((r / 4.698e48 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn underflowed_rates_stay_ordered() {
        let s = DerivedScales::electron();
        let a = rate_full(beta(1e-3), Spin::Half, &s);
        let b = rate_full(beta(1.1e-3), Spin::Half, &s);
        assert_eq!(a.value(), 0.0);
        assert!(a.ln().is_finite() && a.ln() < b.ln());
    }

    #[test]
    fn log_domain_matches_direct_near_boundary() {
        // β = 0.0042 puts x below f64::MIN_POSITIVE, 0.0045 above
        let s = DerivedScales::electron();
        for b in [0.0042, 0.0045] {
            let r = rate_leading(beta(b), &s);
            assert!((r.value().ln() - r.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn ratio_limits() {
        assert_eq!(series_ratio(beta(1e-3)), 1.0);
        assert!((series_ratio(beta(1e15)) - PI * PI / 6.0).abs() < 1e-12);
        assert!((series_ratio(beta(2.0)) - 1.057_420_338_245_457_5).abs() < 1e-14);
    }

    #[test]
    fn small_field_spin_ratio() {
        let s = DerivedScales::electron();
        let f = beta(0.01);
        let ratio = rate_full(f, Spin::Half, &s).value() / rate_full(f, Spin::Zero, &s).value();
        assert!((ratio - 2.0).abs() < 1e-12);
        let lead = rate_full(f, Spin::Half, &s).value() / rate_leading(f, &s).value();
        assert!((lead - 1.0).abs() < 1e-14);
    }

    #[test]
    fn linear_probability_above_one() {
        let s = DerivedScales::electron();
        assert!(prob_linear(beta(0.05), Spin::Half, &s, SpacetimeVolume::unit()) > 1e20);
        assert_eq!(
            prob_linear(beta(1e-4), Spin::Half, &s, SpacetimeVolume::unit()),
            0.0
        );
    }

    #[test]
    fn small_exposure_probability_is_linear() {
        let s = DerivedScales::electron();
        let v = SpacetimeVolume::new(1e-30).unwrap();
        let f = beta(0.02);
        let p = prob_pair(f, Spin::Half, &s, v).value();
        let lin = prob_linear(f, Spin::Half, &s, v);
        assert!(lin > 0.0 && lin < 1e-10);
        assert!(((p - lin) / lin).abs() < 1e-15);
    }

    #[test]
    fn critical_field_electron() {
        let s = DerivedScales::electron();
        let c = beta_critical(&s, SpacetimeVolume::unit()).unwrap();
        assert!((c.beta - 0.02905).abs() < 1e-4);
        assert!(c.residual.abs() < 1e-10);
        assert!((c.w - 54.068).abs() < 1e-3);
        let lin = prob_linear(beta(c.beta), Spin::Half, &s, SpacetimeVolume::unit());
        // the full-series correction at this β is e^(−π/β)/4 ~ 10⁻⁴⁸
        assert!((lin - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tradeoff_values() {
        assert_eq!(volume_tradeoff(beta(0.3), 1.0).unwrap(), 0.0);
        let f = volume_tradeoff(beta(1.0), 2.0).unwrap();
        assert!((10f64.powf(f) - 4.0 * PI.exp()).abs() < 1e-11);
        assert!(volume_tradeoff(beta(1.0), 0.5).is_err());
        assert!(volume_tradeoff(beta(1.0), f64::NAN).is_err());
    }

    #[test]
    fn probability_inversion() {
        let s = DerivedScales::electron();
        let v = SpacetimeVolume::unit();
        let f = beta_for_probability(0.5, Spin::Half, &s, v).unwrap();
        assert!((prob_pair(f, Spin::Half, &s, v).value() - 0.5).abs() < 1e-12);
        assert!(beta_for_probability(1.0, Spin::Half, &s, v).is_err());
    }
}
