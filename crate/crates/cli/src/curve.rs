//! Sampled observables along a β grid.

use crate::output::Record;
use vacuumpair::{
    prob_linear, prob_pair, rate_full, rate_leading, series_ratio, DerivedScales, ReducedField,
    SpacetimeVolume, Spin,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Observable {
    Ratio,
    ProbLinear,
    ProbPair,
    RateLeading,
    RateFull,
}

impl Observable {
    /// Column name in the emitted table.
    pub fn column(self) -> &'static str {
        match self {
            Observable::Ratio => "ratio",
            Observable::ProbLinear => "prob_linear",
            Observable::ProbPair => "prob_pair",
            Observable::RateLeading => "rate_leading",
            Observable::RateFull => "rate_full",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// Series ratio R(β) for β in [0.1, 2].
    Fig1,
    /// Unitarized electron probability for β in [0.02, 0.04] at ΔVΔT = 1 cm³·s.
    Fig2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub observable: Observable,
    pub beta_min: f64,
    pub beta_max: f64,
    pub points: usize,
    pub scale: Scale,
    pub spin: Spin,
    pub vt: f64,
}

impl CurveSpec {
    pub fn preset(p: Preset) -> Self {
        match p {
            Preset::Fig1 => Self {
                observable: Observable::Ratio,
                beta_min: 0.1,
                beta_max: 2.0,
                points: 39,
                scale: Scale::Linear,
                spin: Spin::Half,
                vt: 1.0,
            },
            Preset::Fig2 => Self {
                observable: Observable::ProbPair,
                beta_min: 0.02,
                beta_max: 0.04,
                points: 41,
                scale: Scale::Linear,
                spin: Spin::Half,
                vt: 1.0,
            },
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [("beta-min", self.beta_min), ("beta-max", self.beta_max)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{name} must be positive, got {v}"));
            }
        }
        if self.beta_min >= self.beta_max {
            return Err(format!(
                "beta-min ({}) must be below beta-max ({})",
                self.beta_min, self.beta_max
            ));
        }
        if self.points < 2 {
            return Err(format!("points must be at least 2, got {}", self.points));
        }
        if !(self.vt.is_finite() && self.vt > 0.0) {
            return Err(format!("vt must be positive, got {}", self.vt));
        }
        Ok(())
    }

    /// Ascending β values; both endpoints are reproduced exactly.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.beta_min;
                }
                if i == last {
                    return self.beta_max;
                }
                let t = i as f64 / last as f64;
                match self.scale {
                    Scale::Linear => self.beta_min + (self.beta_max - self.beta_min) * t,
                    Scale::Log => {
                        let (a, b) = (self.beta_min.ln(), self.beta_max.ln());
                        (a + (b - a) * t).exp()
                    }
                }
            })
            .collect()
    }
}

pub fn evaluate(
    f: ReducedField,
    observable: Observable,
    spin: Spin,
    scales: &DerivedScales,
    v: SpacetimeVolume,
) -> f64 {
    match observable {
        Observable::Ratio => series_ratio(f),
        Observable::ProbLinear => prob_linear(f, spin, scales, v),
        Observable::ProbPair => prob_pair(f, spin, scales, v).value(),
        Observable::RateLeading => rate_leading(f, scales).value(),
        Observable::RateFull => rate_full(f, spin, scales).value(),
    }
}

/// One `beta,<observable>` record per grid point.
pub fn curve(spec: &CurveSpec, scales: &DerivedScales) -> Result<Vec<Record>, String> {
    spec.validate()?;
    let v = SpacetimeVolume::new(spec.vt).map_err(|e| e.to_string())?;
    spec.grid()
        .into_iter()
        .map(|b| {
            let f = ReducedField::new(b).map_err(|e| e.to_string())?;
            Ok(Record::new().with("beta", b).with(
                spec.observable.column(),
                evaluate(f, spec.observable, spec.spin, scales, v),
            ))
        })
        .collect()
}
