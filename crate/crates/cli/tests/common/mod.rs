//! Golden data from the reference path: quadrature Li₂ instead of the series.
#![allow(dead_code)]

#[path = "../../../core/tests/support/mod.rs"]
pub mod oracle;

use std::f64::consts::PI;
use std::path::PathBuf;
use vacuumpair::DerivedScales;
use vacuumpair_cli::curve::{CurveSpec, Observable, Preset};
use vacuumpair_cli::output::{to_csv, Record};

pub fn golden_path(preset: Preset) -> PathBuf {
    let name = match preset {
        Preset::Fig1 => "fig1.csv",
        Preset::Fig2 => "fig2.csv",
    };
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

fn oracle_value(spec: &CurveSpec, beta: f64, scales: &DerivedScales) -> f64 {
    let x = (-PI / beta).exp();
    let li2 = oracle::li2_quadrature(x);
    match spec.observable {
        Observable::Ratio => li2 / x,
        Observable::ProbPair => {
            let expected = scales.w0 * beta * beta * li2 * spec.vt;
            -(-expected).exp_m1()
        }
        other => panic!("no oracle for {other:?}"),
    }
}

/// CSV for a preset, computed on the same grid without the library's Li₂.
pub fn oracle_csv(preset: Preset) -> String {
    let spec = CurveSpec::preset(preset);
    let scales = DerivedScales::electron();
    let rows: Vec<Record> = spec
        .grid()
        .into_iter()
        .map(|b| {
            Record::new()
                .with("beta", b)
                .with(spec.observable.column(), oracle_value(&spec, b, &scales))
        })
        .collect();
    to_csv(&rows)
}
