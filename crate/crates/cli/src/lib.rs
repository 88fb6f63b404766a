//! Record builders behind the `vacuumpair` command-line tool.

pub mod curve;
pub mod output;
pub mod selftest;

use output::Record;
use vacuumpair::{
    beta_critical, exp_factor, prob_linear, prob_pair, rate_full, rate_leading, series_ratio,
    DerivedScales, Particle, ReducedField, SpacetimeVolume, Spin,
};

/// Every observable at one field strength.
///
/// Columns: particle, spin, beta, field_vpercm (V/cm), x, rate_leading and
/// rate_full (cm⁻³·s⁻¹), ratio, vt (cm³·s), prob_linear, prob_pair.
pub fn eval_record(
    particle: &Particle,
    spin: Spin,
    scales: &DerivedScales,
    f: ReducedField,
    v: SpacetimeVolume,
) -> Record {
    Record::new()
        .with("particle", particle.label.as_str())
        .with("spin", spin.to_string())
        .with("beta", f.beta())
        .with("field_vpercm", f.field(scales))
        .with("x", exp_factor(f))
        .with("rate_leading", rate_leading(f, scales).value())
        .with("rate_full", rate_full(f, spin, scales).value())
        .with("ratio", series_ratio(f))
        .with("vt", v.vt())
        .with("prob_linear", prob_linear(f, spin, scales, v))
        .with("prob_pair", prob_pair(f, spin, scales, v).value())
}

/// Critical reduced field and the quantities of its Lambert-W solution.
pub fn critical_record(
    particle: &Particle,
    scales: &DerivedScales,
    v: SpacetimeVolume,
) -> vacuumpair::Result<Record> {
    let c = beta_critical(scales, v)?;
    Ok(Record::new()
        .with("particle", particle.label.as_str())
        .with("vt", v.vt())
        .with("beta_c", c.beta)
        .with("field_vpercm", c.beta * scales.e_cr)
        .with("a", c.a)
        .with("w", c.w)
        .with("residual", c.residual))
}
