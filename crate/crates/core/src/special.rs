//! Scalar special functions with exact behaviour at the integers.

use std::f64::consts::PI;

/// `sin(πu)`, reduced to `[-1/2, 1/2]` first so integer arguments give exact zeros.
pub fn sin_pi(u: f64) -> f64 {
    let m = u.round();
    let r = u - m;
    let s = (PI * r).sin();
    if m.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// `cos(πu)` with the same reduction.
pub fn cos_pi(u: f64) -> f64 {
    sin_pi(u + 0.5)
}

/// Normalized sinc, `sin(πu) / (πu)` with `sinc(0) = 1`.
pub fn sinc(u: f64) -> f64 {
    if u.abs() < 1e-8 {
        // series: 1 - (πu)²/6
        let z = PI * u;
        1.0 - z * z / 6.0
    } else {
        sin_pi(u) / (PI * u)
    }
}

/// Trigamma ψ'(x) for x > 0: upward recurrence then the asymptotic series.
pub fn trigamma(mut x: f64) -> f64 {
    assert!(x > 0.0, "trigamma needs a positive argument");
    let mut acc = 0.0;
    while x < 12.0 {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    // 1/x + 1/(2x²) + Σ B_{2k}/x^{2k+1}
    let series = 1.0 / x
        + x2 / 2.0
        + (x2 / x)
            * (1.0 / 6.0
                + x2 * (-1.0 / 30.0 + x2 * (1.0 / 42.0 + x2 * (-1.0 / 30.0 + x2 * (5.0 / 66.0)))));
    acc + series
}

/// Σ_{i=lo}^{hi} 1/i for positive integers, zero when `hi < lo`.
pub fn harmonic_range(lo: i64, hi: i64) -> f64 {
    // summed from the small end up for accuracy
    (lo..=hi).rev().map(|i| 1.0 / i as f64).sum()
}
