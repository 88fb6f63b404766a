use super::{EvalResult, ZETA2};
use crate::error::{not_nan, Error, Result};

const EPS: f64 = f64::EPSILON;

/// Relative size of the next term at which a power series is cut.
const SERIES_CUTOFF: f64 = 1e-16;

/// Sum of Σ_{n≥1} xⁿ⁻¹/n² for |x| ≤ ½, i.e. Li₂(x)/x.
///
/// Returns the sum and a bound on the truncated tail. The leading term is 1,
/// so the relative accuracy does not degrade for tiny |x|.
fn scaled_series(x: f64) -> (f64, f64) {
    debug_assert!(x.abs() <= 0.5);
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut n = 1.0_f64;
    loop {
        sum += power / (n * n);
        power *= x;
        let next = power / ((n + 1.0) * (n + 1.0));
        if next.abs() < SERIES_CUTOFF * sum.abs() || next == 0.0 {
            // geometric majorant of the omitted terms
            let tail = next.abs() / (1.0 - x.abs());
            return (sum, tail);
        }
        n += 1.0;
    }
}

/// Li₂(x) for 0 ≤ x ≤ 1 and for negative arguments via the identities below.
fn li2_unchecked(x: f64) -> EvalResult {
    if x == 0.0 {
        return EvalResult::new(0.0, 0.0);
    }
    if x == 1.0 {
        return EvalResult::exact(ZETA2);
    }
    if x.abs() <= 0.5 {
        let (s, tail) = scaled_series(x);
        let value = x * s;
        return EvalResult::new(value, x.abs() * tail + 2.0 * EPS * value.abs());
    }
    if x > 0.5 {
        // Euler reflection; 1 - x is exact here.
        let y = 1.0 - x;
        let (s, tail) = scaled_series(y);
        let li2_y = y * s;
        let log_product = x.ln() * (-x).ln_1p();
        let value = ZETA2 - log_product - li2_y;
        let err = y * tail + 2.0 * EPS * (ZETA2 + log_product.abs() + li2_y.abs());
        return EvalResult::new(value, err);
    }
    if x >= -1.0 {
        // square identity: Li₂(x) = ½Li₂(x²) − Li₂(−x)
        let sq = li2_unchecked(x * x);
        let neg = li2_unchecked(-x);
        let value = 0.5 * sq.value - neg.value;
        let err = 0.5 * sq.est_abs_error + neg.est_abs_error + EPS * value.abs();
        return EvalResult::new(value, err);
    }
    // inversion for x < −1: Li₂(x) = −π²/6 − ½ln²(−x) − Li₂(1/x)
    let l = (-x).ln();
    let inv = li2_unchecked(1.0 / x);
    let value = -ZETA2 - 0.5 * l * l - inv.value;
    let err = inv.est_abs_error + 2.0 * EPS * (ZETA2 + 0.5 * l * l + inv.value.abs());
    EvalResult::new(value, err)
}

/// The dilogarithm Li₂(x) = Σ xⁿ/n² = −∫₀ˣ ln(1−t)/t dt on the real branch x ≤ 1.
///
/// Arguments with |x| ≤ ½ use the power series directly; (½, 1] is mapped by
/// Euler reflection, [−1, −½) by the square identity and x < −1 by inversion,
/// so every series that is actually summed has ratio at most ½.
pub fn li2(x: f64) -> Result<EvalResult> {
    let x = not_nan("li2", x)?;
    if x > 1.0 {
        return Err(Error::Domain {
            function: "li2",
            value: x,
            expected: "x <= 1",
        });
    }
    if x == f64::NEG_INFINITY {
        return Err(Error::Domain {
            function: "li2",
            value: x,
            expected: "finite x",
        });
    }
    Ok(li2_unchecked(x))
}

/// Li₂(x)/x, with the removable singularity at 0 filled in as 1.
///
/// For |x| ≤ ½ this is summed directly, so it keeps full relative precision
/// even when x itself is near the bottom of the floating point range.
pub fn li2_over_x(x: f64) -> Result<EvalResult> {
    let x = not_nan("li2_over_x", x)?;
    if x.abs() <= 0.5 {
        let (s, tail) = scaled_series(x);
        return Ok(EvalResult::new(s, tail + 2.0 * EPS * s));
    }
    let r = li2(x)?;
    Ok(EvalResult::new(
        r.value / x,
        r.est_abs_error / x.abs() + EPS * (r.value / x).abs(),
    ))
}

/// The Rogers dilogarithm L(x) = Li₂(x) + ½ ln(x) ln(1−x) on [0, 1].
///
/// The endpoints return the limits 0 and π²/6 directly; the defining product
/// is a 0·∞ form there.
pub fn rogers_l(x: f64) -> Result<EvalResult> {
    let x = not_nan("rogers_l", x)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            function: "rogers_l",
            value: x,
            expected: "0 <= x <= 1",
        });
    }
    if x == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0));
    }
    if x == 1.0 {
        return Ok(EvalResult::exact(ZETA2));
    }
    let li = li2_unchecked(x);
    let half_log = 0.5 * x.ln() * (-x).ln_1p();
    let value = li.value + half_log;
    Ok(EvalResult::new(
        value,
        li.est_abs_error + 2.0 * EPS * (half_log.abs() + value.abs()),
    ))
}
