//! Adaptive Gauss–Legendre quadrature for complex-valued integrands on
//! bounded intervals, with optional geometric grading toward endpoint
//! singularities of the form `|x - a|^β`, `β > -1`.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

const ORDER: usize = 20;
const MAX_DEPTH: u32 = 48;

/// Gauss–Legendre nodes and weights on [-1, 1], computed once by Newton
/// iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let (nodes, weights) = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights) {
        acc += f(mid + half * x) * *w;
    }
    acc * half
}

fn adapt<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, whole: Complex64, tol: f64, depth: u32) -> Complex64 {
    let m = 0.5 * (a + b);
    let left = panel(f, a, m);
    let right = panel(f, m, b);
    let refined = left + right;
    let err = (refined - whole).norm();
    // below the rounding floor further bisection cannot help
    if err <= tol || err <= 8.0 * f64::EPSILON * refined.norm() || depth >= MAX_DEPTH {
        return refined;
    }
    adapt(f, a, m, left, 0.5 * tol, depth + 1) + adapt(f, m, b, right, 0.5 * tol, depth + 1)
}

/// Adaptive bisection with 20-point Gauss–Legendre panels to absolute
/// tolerance `tol`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    if a == b {
        return Complex64::new(0.0, 0.0);
    }
    let whole = panel(&f, a, b);
    adapt(&f, a, b, whole, tol, 0)
}

/// Like [`integrate`], but splits `[a, b]` into `panels` uniform pieces
/// before adapting; useful for oscillatory integrands.
pub fn integrate_panels<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, panels: usize, tol: f64) -> Complex64 {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let tol = tol / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + h * i as f64;
            let hi = if i + 1 == panels { b } else { lo + h };
            integrate(&f, lo, hi, tol)
        })
        .sum()
}

/// Integrand singular (but integrable) at `a`: `[a, b]` is cut into dyadic
/// panels shrinking toward `a`, `levels` deep, each integrated adaptively,
/// plus `oscillation_panels` uniform panels over the far half. The innermost
/// panel gets a single rule, so nodes never touch `a`. Works for `b < a`
/// with the usual orientation sign.
pub fn integrate_graded_at<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    levels: u32,
    oscillation_panels: usize,
    tol: f64,
) -> Complex64 {
    let len = b - a;
    let mut cuts: Vec<(f64, f64)> = Vec::new();
    let inner = oscillation_panels.max(1);
    let h = 0.5 * len / inner as f64;
    for i in 0..inner {
        cuts.push((a + 0.5 * len + h * i as f64, a + 0.5 * len + h * (i + 1) as f64));
    }
    let mut width = 0.5 * len;
    for _ in 0..levels {
        let next = 0.5 * width;
        cuts.push((a + next, a + width));
        width = next;
    }
    let tol = tol / (cuts.len() + 1) as f64;
    let graded: Complex64 = cuts.into_iter().map(|(lo, hi)| integrate(&f, lo, hi, tol)).sum();
    graded + panel(&f, a, a + width)
}

/// [`integrate_graded_at`] toward both endpoints, split at the midpoint.
pub fn integrate_graded<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    levels: u32,
    oscillation_panels: usize,
    tol: f64,
) -> Complex64 {
    let mid = 0.5 * (a + b);
    let panels = oscillation_panels.div_ceil(2);
    integrate_graded_at(&f, a, mid, levels, panels, 0.5 * tol) - integrate_graded_at(&f, b, mid, levels, panels, 0.5 * tol)
}
