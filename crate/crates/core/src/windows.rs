//! Window functions `g` on `[-1/2, 1/2]` with closed-form Fourier
//! coefficients `b_n = ∫ g(x) e^{-2πinx} dx`.
//!
//! Only kinds whose coefficients are known exactly are supported:
//! trigonometric polynomials, piecewise polynomials, pure modulations
//! `e^{2πiξx}` and constants. Every downstream tail bound depends on the
//! coefficient decay of these kinds, see [`WindowSpec::decay`].

use crate::error::{Error, Result};
use crate::special::sinc;
use num_complex::Complex64;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Modulation frequency. Rationals are exact, so half-integer boundary
/// cases can be requested explicitly; floats are never promoted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Xi {
    Exact(Rational64),
    Float(f64),
}

impl Xi {
    pub fn exact(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidXi(format!("{num}/{den} has zero denominator")));
        }
        Ok(Xi::Exact(Rational64::new(num, den)))
    }

    pub fn float(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidXi(format!("{x} is not finite")));
        }
        Ok(Xi::Float(x))
    }

    /// Parses `"p/q"` as an exact rational, anything else as a float.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| Error::InvalidXi(s.to_string()))?;
            let q: i64 = q.trim().parse().map_err(|_| Error::InvalidXi(s.to_string()))?;
            Xi::exact(p, q)
        } else {
            let x: f64 = s.parse().map_err(|_| Error::InvalidXi(s.to_string()))?;
            Xi::float(x)
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Xi::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Xi::Float(x) => x,
        }
    }

    /// `ξ ∈ Z + 1/2`. Exact for rationals; for floats only when `2ξ` is an
    /// odd integer in floating point, i.e. bit-exact.
    pub fn is_half_integer(&self) -> bool {
        match *self {
            Xi::Exact(r) => *r.denom() == 2,
            Xi::Float(x) => {
                let d = 2.0 * x;
                d.is_finite() && d.fract() == 0.0 && d.rem_euclid(2.0) == 1.0
            }
        }
    }

    /// Sign of `ξ - 1/2 · k` for integer `k`, exactly for rationals.
    pub fn cmp_half(&self, k: i64) -> std::cmp::Ordering {
        match *self {
            Xi::Exact(r) => r.cmp(&Rational64::new(k, 2)),
            Xi::Float(x) => x.partial_cmp(&(k as f64 / 2.0)).unwrap_or(std::cmp::Ordering::Equal),
        }
    }
}

impl fmt::Display for Xi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Xi::Exact(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Xi::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Xi::Float(x) => write!(f, "{x}"),
        }
    }
}

/// One polynomial piece on `[a, b]`; `poly[k]` multiplies `x^k` in the
/// global coordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub a: f64,
    pub b: f64,
    pub poly: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WindowKind {
    TrigPoly(BTreeMap<i64, Complex64>),
    PiecewisePoly(Vec<Piece>),
    Modulated(Xi),
    Constant(Complex64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalHull {
    pub lo: f64,
    pub hi: f64,
}

impl IntervalHull {
    pub fn contains(&self, y: f64) -> bool {
        self.lo <= y && y <= self.hi
    }

    pub fn widened(&self, eps: f64) -> IntervalHull {
        IntervalHull { lo: self.lo - eps, hi: self.hi + eps }
    }
}

/// Decay of `|b_m|`, used for rigorous truncation tails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoeffDecay {
    /// `b_m = 0` for `|m| > degree`.
    Finite { degree: i64 },
    /// `|b_m| ≤ scale / |m - center|` whenever `m ≠ center`.
    Harmonic { scale: f64, center: f64 },
}

/// A window `g ∈ L^∞[-1/2, 1/2]` with cached metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSpec {
    kind: WindowKind,
    is_real: bool,
    sup_norm: f64,
}

impl WindowSpec {
    pub fn trig_poly<I: IntoIterator<Item = (i64, Complex64)>>(coeffs: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, c) in coeffs {
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::InvalidWindow(format!("coefficient {n} is not finite")));
            }
            *map.entry(n).or_insert(ZERO) += c;
        }
        map.retain(|_, c| *c != ZERO);
        Ok(Self::with_metadata(WindowKind::TrigPoly(map)))
    }

    /// Real trigonometric polynomial from `(n, b_n)` pairs given for `n ≥ 0`;
    /// negative coefficients are filled in by conjugate symmetry.
    pub fn real_trig_poly<I: IntoIterator<Item = (i64, Complex64)>>(half: I) -> Result<Self> {
        let mut all = Vec::new();
        for (n, c) in half {
            if n < 0 {
                return Err(Error::InvalidWindow("real_trig_poly takes n >= 0".into()));
            }
            if n == 0 {
                all.push((0, Complex64::new(c.re, 0.0)));
            } else {
                all.push((n, c));
                all.push((-n, c.conj()));
            }
        }
        Self::trig_poly(all)
    }

    pub fn piecewise(mut pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidWindow("no pieces".into()));
        }
        pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
        const EPS: f64 = 1e-12;
        let mut cursor = -0.5;
        for p in &pieces {
            if !(p.a.is_finite() && p.b.is_finite()) || p.b <= p.a {
                return Err(Error::InvalidWindow(format!("bad piece [{}, {}]", p.a, p.b)));
            }
            if (p.a - cursor).abs() > EPS {
                return Err(Error::InvalidWindow(format!(
                    "pieces must tile [-1/2, 1/2]: gap or overlap at {cursor}"
                )));
            }
            if p.poly.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidWindow("polynomial coefficient is not finite".into()));
            }
            cursor = p.b;
        }
        if (cursor - 0.5).abs() > EPS {
            return Err(Error::InvalidWindow("pieces must end at 1/2".into()));
        }
        for p in &mut pieces {
            while p.poly.last() == Some(&0.0) {
                p.poly.pop();
            }
        }
        Ok(Self::with_metadata(WindowKind::PiecewisePoly(pieces)))
    }

    pub fn modulated(xi: Xi) -> Self {
        Self::with_metadata(WindowKind::Modulated(xi))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::with_metadata(WindowKind::Constant(c))
    }

    /// `g(x) = x`.
    pub fn sawtooth() -> Self {
        Self::piecewise(vec![Piece { a: -0.5, b: 0.5, poly: vec![0.0, 1.0] }]).expect("valid")
    }

    /// `g = -1` on `[-1/2, 0)`, `+1` on `[0, 1/2]`.
    pub fn sign() -> Self {
        Self::piecewise(vec![
            Piece { a: -0.5, b: 0.0, poly: vec![-1.0] },
            Piece { a: 0.0, b: 0.5, poly: vec![1.0] },
        ])
        .expect("valid")
    }

    fn with_metadata(kind: WindowKind) -> Self {
        let is_real = match &kind {
            WindowKind::TrigPoly(map) => {
                let defect: f64 = map
                    .iter()
                    .map(|(n, c)| (map.get(&-n).copied().unwrap_or(ZERO) - c.conj()).norm())
                    .sum();
                defect <= 1e-13
            }
            WindowKind::PiecewisePoly(_) => true,
            WindowKind::Modulated(xi) => xi.value() == 0.0,
            WindowKind::Constant(c) => c.im == 0.0,
        };
        let mut w = WindowSpec { kind, is_real, sup_norm: 0.0 };
        w.sup_norm = w.compute_sup_norm();
        w
    }

    pub fn kind(&self) -> &WindowKind {
        &self.kind
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn sup_norm(&self) -> f64 {
        self.sup_norm
    }

    /// `g = 0` almost everywhere.
    pub fn is_zero(&self) -> bool {
        match &self.kind {
            WindowKind::TrigPoly(map) => map.is_empty(),
            WindowKind::PiecewisePoly(pieces) => pieces.iter().all(|p| p.poly.is_empty()),
            WindowKind::Modulated(_) => false,
            WindowKind::Constant(c) => *c == ZERO,
        }
    }

    /// `b_n = ∫ g(x) e^{-2πinx} dx` in closed form.
    pub fn fourier_coeff(&self, n: i64) -> Complex64 {
        match &self.kind {
            WindowKind::TrigPoly(map) => map.get(&n).copied().unwrap_or(ZERO),
            WindowKind::Constant(c) => {
                if n == 0 {
                    *c
                } else {
                    ZERO
                }
            }
            WindowKind::Modulated(xi) => Complex64::new(sinc(xi.value() - n as f64), 0.0),
            WindowKind::PiecewisePoly(pieces) => piecewise_coeff(pieces, n),
        }
    }

    pub fn evaluate(&self, x: f64) -> Result<Complex64> {
        if !(-0.5..=0.5).contains(&x) {
            return Err(Error::DomainViolation(x));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: f64) -> Complex64 {
        match &self.kind {
            WindowKind::TrigPoly(map) => trig_eval(map, x),
            WindowKind::Constant(c) => *c,
            WindowKind::Modulated(xi) => Complex64::from_polar(1.0, 2.0 * PI * xi.value() * x),
            WindowKind::PiecewisePoly(pieces) => {
                let last = pieces.len() - 1;
                let piece = pieces
                    .iter()
                    .enumerate()
                    .find(|(i, p)| p.a <= x && (x < p.b || (*i == last && x <= p.b)))
                    .map(|(_, p)| p)
                    .unwrap_or(&pieces[last]);
                Complex64::new(horner(&piece.poly, x), 0.0)
            }
        }
    }

    /// `g̃(x) = conj(g(-x))`, whose coefficients are `conj(b_n)`.
    pub fn reflect_conj(&self) -> WindowSpec {
        let kind = match &self.kind {
            WindowKind::TrigPoly(map) => WindowKind::TrigPoly(map.iter().map(|(n, c)| (*n, c.conj())).collect()),
            WindowKind::Constant(c) => WindowKind::Constant(c.conj()),
            WindowKind::Modulated(xi) => WindowKind::Modulated(*xi),
            WindowKind::PiecewisePoly(pieces) => {
                let mut out: Vec<Piece> = pieces
                    .iter()
                    .map(|p| Piece {
                        a: -p.b,
                        b: -p.a,
                        poly: p
                            .poly
                            .iter()
                            .enumerate()
                            .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
                            .collect(),
                    })
                    .collect();
                out.reverse();
                WindowKind::PiecewisePoly(out)
            }
        };
        WindowSpec { kind, is_real: self.is_real, sup_norm: self.sup_norm }
    }

    /// `[essinf g, esssup g]` for real windows.
    pub fn real_hull(&self) -> Result<IntervalHull> {
        if !self.is_real {
            return Err(Error::NotRealValued);
        }
        Ok(match &self.kind {
            WindowKind::Constant(c) => IntervalHull { lo: c.re, hi: c.re },
            WindowKind::Modulated(_) => IntervalHull { lo: 1.0, hi: 1.0 },
            WindowKind::TrigPoly(map) => trig_hull(map),
            WindowKind::PiecewisePoly(pieces) => {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for p in pieces {
                    let (l, h) = poly_range(&p.poly, p.a, p.b);
                    lo = lo.min(l);
                    hi = hi.max(h);
                }
                IntervalHull { lo, hi }
            }
        })
    }

    pub fn decay(&self) -> CoeffDecay {
        match &self.kind {
            WindowKind::TrigPoly(map) => CoeffDecay::Finite {
                degree: map.keys().map(|n| n.abs()).max().unwrap_or(0),
            },
            WindowKind::Constant(_) => CoeffDecay::Finite { degree: 0 },
            WindowKind::Modulated(xi) => CoeffDecay::Harmonic { scale: 1.0 / PI, center: xi.value() },
            WindowKind::PiecewisePoly(pieces) => {
                // |∫_a^b p e^{αx}| ≤ Σ_j (|p^(j)(a)| + |p^(j)(b)|) / |α|^{j+1}, |α| = 2π|m| ≥ 2π
                let mut scale = 0.0;
                for p in pieces {
                    let mut d = p.poly.clone();
                    let mut j = 0;
                    while !d.is_empty() {
                        scale += (horner(&d, p.a).abs() + horner(&d, p.b).abs()) / (2.0 * PI).powi(j + 1);
                        d = derivative(&d);
                        j += 1;
                    }
                }
                CoeffDecay::Harmonic { scale, center: 0.0 }
            }
        }
    }

    fn compute_sup_norm(&self) -> f64 {
        match &self.kind {
            WindowKind::Constant(c) => c.norm(),
            WindowKind::Modulated(_) => 1.0,
            WindowKind::PiecewisePoly(pieces) => pieces
                .iter()
                .map(|p| {
                    let (l, h) = poly_range(&p.poly, p.a, p.b);
                    l.abs().max(h.abs())
                })
                .fold(0.0, f64::max),
            WindowKind::TrigPoly(map) => {
                if map.is_empty() {
                    return 0.0;
                }
                if self.is_real {
                    let h = trig_hull(map);
                    h.lo.abs().max(h.hi.abs())
                } else {
                    // |p|² is a real trigonometric polynomial with autocorrelation coefficients
                    let mut sq: BTreeMap<i64, Complex64> = BTreeMap::new();
                    for (n, bn) in map {
                        for (k, bk) in map {
                            *sq.entry(n - k).or_insert(ZERO) += bn * bk.conj();
                        }
                    }
                    trig_hull(&sq).hi.max(0.0).sqrt()
                }
            }
        }
    }
}

/// Pieces are summed by increasing `|midpoint|`, mirror pairs first, so that
/// the reflected window yields exactly the conjugate coefficients.
fn piecewise_coeff(pieces: &[Piece], n: i64) -> Complex64 {
    let mut terms: Vec<(f64, Complex64)> = pieces.iter().map(|p| (((p.a + p.b) / 2.0).abs(), piece_coeff(p, n))).collect();
    terms.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut acc = ZERO;
    let mut i = 0;
    while i < terms.len() {
        if i + 1 < terms.len() && terms[i + 1].0 == terms[i].0 {
            acc += terms[i].1 + terms[i + 1].1;
            i += 2;
        } else {
            acc += terms[i].1;
            i += 1;
        }
    }
    acc
}

fn piece_coeff(p: &Piece, n: i64) -> Complex64 {
    if p.poly.is_empty() {
        return ZERO;
    }
    if n == 0 {
        let v: f64 = p
            .poly
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let e = k as i32 + 1;
                c * (p.b.powi(e) - p.a.powi(e)) / e as f64
            })
            .sum();
        return Complex64::new(v, 0.0);
    }
    // ∫ p e^{αx} = e^{αx} Σ_j (-1)^j p^(j)(x) / α^{j+1},  α = -2πin
    let alpha = Complex64::new(0.0, -2.0 * PI * n as f64);
    let antideriv = |x: f64| {
        let mut d = p.poly.clone();
        let mut acc = ZERO;
        let mut denom = alpha;
        let mut sign = 1.0;
        while !d.is_empty() {
            acc += sign * horner(&d, x) / denom;
            denom *= alpha;
            sign = -sign;
            d = derivative(&d);
        }
        acc * (alpha * x).exp()
    };
    antideriv(p.b) - antideriv(p.a)
}

pub(crate) fn horner(poly: &[f64], x: f64) -> f64 {
    poly.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn derivative(poly: &[f64]) -> Vec<f64> {
    poly.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect()
}

fn trig_eval(map: &BTreeMap<i64, Complex64>, x: f64) -> Complex64 {
    map.iter()
        .map(|(n, c)| c * Complex64::from_polar(1.0, 2.0 * PI * *n as f64 * x))
        .sum()
}

/// Derivative of a real trigonometric polynomial, `Σ 2πin b_n e_n(x)`.
fn trig_derivative(map: &BTreeMap<i64, Complex64>, x: f64) -> f64 {
    map.iter()
        .map(|(n, c)| c * Complex64::new(0.0, 2.0 * PI * *n as f64) * Complex64::from_polar(1.0, 2.0 * PI * *n as f64 * x))
        .sum::<Complex64>()
        .re
}

/// Range of a real trigonometric polynomial: grid with step `1/(64(deg+1))`,
/// then bisection on every sign change of the derivative.
fn trig_hull(map: &BTreeMap<i64, Complex64>) -> IntervalHull {
    let degree = map.keys().map(|n| n.abs()).max().unwrap_or(0);
    let steps = 64 * (degree as usize + 1);
    let h = 1.0 / steps as f64;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut visit = |x: f64| {
        let v = trig_eval(map, x).re;
        lo = lo.min(v);
        hi = hi.max(v);
    };
    let mut prev_x = -0.5;
    let mut prev_d = trig_derivative(map, prev_x);
    visit(prev_x);
    for i in 1..=steps {
        let x = -0.5 + i as f64 * h;
        let d = trig_derivative(map, x);
        visit(x);
        if prev_d * d < 0.0 {
            let root = bisect(|t| trig_derivative(map, t), prev_x, x, prev_d);
            visit(root);
        }
        prev_x = x;
        prev_d = d;
    }
    IntervalHull { lo, hi }
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, fa: f64) -> f64 {
    let sa = fa.signum();
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Real roots of a polynomial inside `[a, b]`, isolated between the
/// critical points (found recursively), where the polynomial is monotone.
fn poly_roots(poly: &[f64], a: f64, b: f64) -> Vec<f64> {
    let mut p = poly.to_vec();
    while p.last() == Some(&0.0) {
        p.pop();
    }
    match p.len() {
        0 | 1 => return Vec::new(),
        2 => {
            let r = -p[0] / p[1];
            return if a <= r && r <= b { vec![r] } else { Vec::new() };
        }
        _ => {}
    }
    let mut knots = vec![a];
    knots.extend(poly_roots(&derivative(&p), a, b));
    knots.push(b);
    let mut roots = Vec::new();
    for w in knots.windows(2) {
        let (l, r) = (w[0], w[1]);
        let (fl, fr) = (horner(&p, l), horner(&p, r));
        if fl == 0.0 {
            roots.push(l);
        } else if fl * fr < 0.0 {
            roots.push(bisect(|t| horner(&p, t), l, r, fl));
        }
    }
    if horner(&p, b) == 0.0 {
        roots.push(b);
    }
    roots.dedup();
    roots
}

fn poly_range(poly: &[f64], a: f64, b: f64) -> (f64, f64) {
    let mut candidates = vec![a, b];
    candidates.extend(poly_roots(&derivative(poly), a, b));
    candidates.iter().map(|&x| horner(poly, x)).fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), v| {
        (l.min(v), h.max(v))
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum XiJson {
    Number(f64),
    Text(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WindowJson {
    Trigpoly { coeffs: Vec<(i64, f64, f64)> },
    PiecewisePoly { pieces: Vec<Piece> },
    Modulated { xi: XiJson },
    Constant { re: f64, #[serde(default)] im: f64 },
    Sawtooth,
    Sign,
}

impl WindowSpec {
    /// Parses the JSON window format, e.g. `{"kind":"modulated","xi":"3/2"}`.
    pub fn from_json(s: &str) -> Result<Self> {
        let j: WindowJson = serde_json::from_str(s).map_err(|e| Error::InvalidWindow(e.to_string()))?;
        match j {
            WindowJson::Trigpoly { coeffs } => {
                WindowSpec::trig_poly(coeffs.into_iter().map(|(n, re, im)| (n, Complex64::new(re, im))))
            }
            WindowJson::PiecewisePoly { pieces } => WindowSpec::piecewise(pieces),
            WindowJson::Modulated { xi } => {
                let xi = match xi {
                    XiJson::Number(x) => Xi::float(x)?,
                    XiJson::Text(s) => Xi::parse(&s)?,
                };
                Ok(WindowSpec::modulated(xi))
            }
            WindowJson::Constant { re, im } => {
                if !(re.is_finite() && im.is_finite()) {
                    return Err(Error::InvalidWindow("constant is not finite".into()));
                }
                Ok(WindowSpec::constant(Complex64::new(re, im)))
            }
            WindowJson::Sawtooth => Ok(WindowSpec::sawtooth()),
            WindowJson::Sign => Ok(WindowSpec::sign()),
        }
    }

    pub fn to_json(&self) -> String {
        let j = match &self.kind {
            WindowKind::TrigPoly(map) => WindowJson::Trigpoly {
                coeffs: map.iter().map(|(n, c)| (*n, c.re, c.im)).collect(),
            },
            WindowKind::PiecewisePoly(pieces) => WindowJson::PiecewisePoly { pieces: pieces.clone() },
            WindowKind::Modulated(xi) => WindowJson::Modulated {
                xi: match xi {
                    Xi::Exact(_) => XiJson::Text(xi.to_string()),
                    Xi::Float(x) => XiJson::Number(*x),
                },
            },
            WindowKind::Constant(c) => WindowJson::Constant { re: c.re, im: c.im },
        };
        serde_json::to_string(&j).expect("window serializes")
    }
}

/// The built-in windows used by sweeps and tests, by name.
pub fn builtin(name: &str) -> Option<WindowSpec> {
    let c = |re: f64| Complex64::new(re, 0.0);
    Some(match name {
        "sawtooth" => WindowSpec::sawtooth(),
        "sign" => WindowSpec::sign(),
        "constant2" => WindowSpec::constant(c(2.0)),
        "one" => WindowSpec::constant(c(1.0)),
        "cosine" => WindowSpec::trig_poly([(0, c(2.0)), (1, c(0.5)), (-1, c(0.5))]).ok()?,
        "ramp" => WindowSpec::piecewise(vec![Piece { a: -0.5, b: 0.5, poly: vec![0.6, 1.0] }]).ok()?,
        "modulated" => WindowSpec::modulated(Xi::Float(0.25)),
        _ => return None,
    })
}

/// Names of the six built-in windows exercised by the sweep checks.
pub const BUILTIN_NAMES: [&str; 6] = ["sawtooth", "sign", "constant2", "cosine", "ramp", "modulated"];
