use super::EvalResult;
use crate::error::{not_nan, Error, Result};
use std::f64::consts::E;

const MAX_ITERATIONS: usize = 20;
const STEP_TOLERANCE: f64 = 1e-15;
const POLISH_STEPS: usize = 8;

/// Five-term large-argument expansion of W₀:
///
/// W ≈ L₁ − L₂ + L₂/L₁ + L₂(L₂−2)/(2L₁²) + L₂(2L₂²−9L₂+6)/(6L₁³),
/// with L₁ = ln a and L₂ = ln ln a.
///
/// Valid for a ≥ e, where L₂ ≥ 0; at a = e every correction vanishes and the
/// result is exactly 1.
pub fn lambert_w0_asymptotic(a: f64) -> Result<f64> {
    let a = not_nan("lambert_w0_asymptotic", a)?;
    if a < E {
        return Err(Error::Domain {
            function: "lambert_w0_asymptotic",
            value: a,
            expected: "a >= e",
        });
    }
    let l1 = a.ln();
    let l2 = l1.ln();
    Ok(l1 - l2
        + l2 / l1
        + l2 * (l2 - 2.0) / (2.0 * l1 * l1)
        + l2 * (2.0 * l2 * l2 - 9.0 * l2 + 6.0) / (6.0 * l1 * l1 * l1))
}

/// Starting point for a < e.
fn small_seed(a: f64) -> f64 {
    let l = a.ln_1p();
    l * (1.0 - l.ln_1p() / (2.0 + l))
}

/// Relative residual (w eʷ − a)/a; falls back to log form only when w eʷ
/// overflows, since ln w + w − ln a loses several ulps to cancellation.
fn relative_residual(w: f64, a: f64) -> f64 {
    let direct = w * w.exp();
    if direct.is_finite() {
        (direct - a) / a
    } else {
        (w.ln() + w - a.ln()).exp_m1()
    }
}

/// Principal branch W₀(a) for a ≥ 0, the solution of w eʷ = a.
///
/// Seeded with [`lambert_w0_asymptotic`] for a ≥ e, then refined with Halley
/// steps until the relative step drops below 10⁻¹⁵. For w > 1 the iteration
/// runs on g(w) = w + ln w − ln a, which never overflows.
pub fn lambert_w0(a: f64) -> Result<EvalResult> {
    let a = not_nan("lambert_w0", a)?;
    if a < 0.0 {
        return Err(Error::Domain {
            function: "lambert_w0",
            value: a,
            expected: "a >= 0",
        });
    }
    if a == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0));
    }
    if a.is_infinite() {
        return Ok(EvalResult::new(f64::INFINITY, 0.0));
    }

    let log_form = a > E;
    let ln_a = a.ln();
    let mut w = if log_form {
        lambert_w0_asymptotic(a)?
    } else {
        small_seed(a)
    };

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let step = if log_form {
            let g = w + w.ln() - ln_a;
            let g1 = 1.0 + 1.0 / w;
            let g2 = -1.0 / (w * w);
            g / (g1 - 0.5 * g * g2 / g1)
        } else {
            let ew = w.exp();
            let f = w * ew - a;
            let f1 = ew * (w + 1.0);
            let f2 = ew * (w + 2.0);
            f / (f1 - 0.5 * f * f2 / f1)
        };
        if !step.is_finite() {
            break;
        }
        w -= step;
        if step.abs() <= STEP_TOLERANCE * w.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            function: "lambert_w0",
            iterations: MAX_ITERATIONS,
        });
    }

    // Walk to the nearby double with the smallest residual.
    let mut best = (w, relative_residual(w, a).abs());
    for _ in 0..POLISH_STEPS {
        let down = (
            best.0.next_down(),
            relative_residual(best.0.next_down(), a).abs(),
        );
        let up = (
            best.0.next_up(),
            relative_residual(best.0.next_up(), a).abs(),
        );
        let candidate = if down.1 < up.1 { down } else { up };
        if candidate.1 >= best.1 {
            break;
        }
        best = candidate;
    }
    let (w, residual) = best;
    // dw ≈ (relative residual) · w/(1+w)
    let err = residual * w / (1.0 + w) + f64::EPSILON * w;
    Ok(EvalResult::new(w, err))
}
