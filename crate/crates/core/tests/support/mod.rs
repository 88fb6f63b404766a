//! Reference evaluations that share no code path with the library.
#![allow(dead_code)]

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        k += WGK[i] * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    (k * half, ((k - g) * half).abs())
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel: f64, depth: u32) -> f64 {
    let (k, err) = kronrod(f, a, b);
    if err <= rel * k.abs() || err < 1e-300 || depth == 0 {
        return k;
    }
    let m = 0.5 * (a + b);
    adaptive(f, a, m, rel, depth - 1) + adaptive(f, m, b, rel, depth - 1)
}

/// Adaptive Gauss–Kronrod (7/15) quadrature.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel: f64) -> f64 {
    adaptive(&f, a, b, rel, 40)
}

/// Li₂(x) = −∫₀ˣ ln(1−t)/t dt, after substituting u = −ln(1−t):
/// ∫₀^U u/(eᵘ−1) du with U = −ln(1−x). x = 1 integrates to U = 40, where the
/// tail is below 2·10⁻¹⁶.
pub fn li2_quadrature(x: f64) -> f64 {
    assert!(x <= 1.0);
    let upper = if x == 1.0 { 40.0 } else { -(-x).ln_1p() };
    let f = |u: f64| if u == 0.0 { 1.0 } else { u / u.exp_m1() };
    if upper >= 0.0 {
        integrate(f, 0.0, upper, 1e-15)
    } else {
        -integrate(f, upper, 0.0, 1e-15)
    }
}

/// Σ_{n=1}^{terms} (±1)ⁿ⁺¹xⁿ/n², summed smallest term first.
pub fn schwinger_partial_sum(x: f64, fermion: bool, terms: u32) -> f64 {
    let step = if fermion { x } else { -x };
    let mut power = 1.0;
    let mut terms_vec = Vec::with_capacity(terms as usize);
    for n in 1..=terms {
        power *= step;
        let nf = n as f64;
        terms_vec.push(power / (nf * nf));
    }
    let sum: f64 = terms_vec.iter().rev().sum();
    if fermion {
        sum
    } else {
        -sum
    }
}

/// Plain bisection on [lo, hi] to the last representable bracket.
pub fn bisection_root<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    assert!(f_lo.signum() != f(hi).signum(), "root not bracketed");
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if f(mid).signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}
