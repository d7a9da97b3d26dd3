//! Dynamical sampling on truncations of ℓ²(Z) and one-sided derivative
//! sampling of Paley-Wiener functions.
//!
//! Dynamical sampling observes `G_i ∗ F` on sample sets `Ω_i`. With
//! `f = Σ F(-k) e_k`, the scheme `Ω_1 = N⁻, G_1 = δ_0` and `Ω_2 = N₀` with
//! kernel symbol `ĝ` becomes the system `e_1 · F(conj ĝ)`, so its stability
//! matches the frame property of `F(conj ĝ)`.
//!
//! Derivative sampling observes `F(n)` for `n ≥ 0` and `-F'(n)/(2πi)` for
//! `n < 0`; on the Fourier side these are `f̂(n)` and `(xf)^(n)`, i.e. the
//! analysis of `f` against `F(x)`, the sawtooth system.

use crate::error::{Error, Result};
use crate::frame_bounds::FrequencySet;
use crate::linalg::{hermitian_eigenvalues, max_dimension, singular_values, CMatrix};
use crate::special::{harmonic_range, trigamma};
use crate::windows::{WindowKind, WindowSpec};
use nalgebra::DVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// A kernel symbol `ĝ(x) = Σ G(n) e^{-2πinx}` and the set where `G ∗ F` is
/// observed.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    pub ghat: WindowSpec,
    pub samples: FrequencySet,
}

impl Kernel {
    /// `G(m) = ∫ ĝ(x) e^{2πimx} dx`.
    pub fn tap(&self, m: i64) -> Complex64 {
        self.ghat.fourier_coeff(-m)
    }
}

/// A sequence supported on `[-N, N]` (index `k + N`) and the sampling scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceWindowPair {
    pub n: usize,
    pub f: Vec<Complex64>,
    pub kernels: Vec<Kernel>,
}

impl SequenceWindowPair {
    pub fn new(n: usize, f: Vec<Complex64>, kernels: Vec<Kernel>) -> Result<Self> {
        if f.len() != 2 * n + 1 {
            return Err(Error::InvalidArgument {
                field: "F".into(),
                msg: format!("expected {} entries for N = {n}, got {}", 2 * n + 1, f.len()),
            });
        }
        for k in &kernels {
            if !k.ghat.sup_norm().is_finite() {
                return Err(Error::UnboundedWindow);
            }
        }
        Ok(SequenceWindowPair { n, f, kernels })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecoveryReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub relative_error: f64,
    pub condition_number: f64,
    /// `‖A F_rec - y‖`.
    pub residual: f64,
    #[serde(skip)]
    pub recovered: Vec<Complex64>,
}

fn sample_indices(set: &FrequencySet, n: usize) -> Result<Vec<i64>> {
    let ni = n as f64;
    set.points_in(-ni, ni)
        .into_iter()
        .map(|x| {
            if x.fract() == 0.0 {
                Ok(x as i64)
            } else {
                Err(Error::InvalidArgument { field: "samples".into(), msg: format!("non-integer sample point {x}") })
            }
        })
        .collect()
}

/// The truncated forward map: one row per sample `(G_i ∗ F)(j)`,
/// `j ∈ Ω_i ∩ [-N, N]`, with `F` zero outside `[-N, N]` and taps `|m| ≤ N`.
pub fn forward_matrix(kernels: &[Kernel], n: usize) -> Result<CMatrix> {
    let ni = n as i64;
    let dim = 2 * n + 1;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for (i, kernel) in kernels.iter().enumerate() {
        let idx = sample_indices(&kernel.samples, n)?;
        if idx.is_empty() {
            return Err(Error::EmptySampleSet(i));
        }
        let taps: Vec<Complex64> = (-2 * ni..=2 * ni)
            .map(|m| if m.abs() <= ni { kernel.tap(m) } else { Complex64::new(0.0, 0.0) })
            .collect();
        for j in idx {
            rows.push((-ni..=ni).map(|k| taps[(j - k + 2 * ni) as usize]).collect());
        }
    }
    let cap = max_dimension();
    if rows.len() > cap || dim > cap {
        return Err(Error::TooLarge { size: rows.len().max(dim), cap });
    }
    Ok(CMatrix::from_fn(rows.len(), dim, |r, c| rows[r][c]))
}

/// `(G_i ∗ F)` restricted to `Ω_i ∩ [-N, N]`, one vector per kernel.
pub fn dynamical_forward(pair: &SequenceWindowPair) -> Result<Vec<Vec<Complex64>>> {
    let a = forward_matrix(&pair.kernels, pair.n)?;
    let y = &a * DVector::from_column_slice(&pair.f);
    let mut out = Vec::new();
    let mut offset = 0;
    for kernel in &pair.kernels {
        let len = sample_indices(&kernel.samples, pair.n)?.len();
        out.push(y.as_slice()[offset..offset + len].to_vec());
        offset += len;
    }
    Ok(out)
}

/// Least-squares recovery of `F` from stacked samples, compared against
/// `pair.f`.
pub fn dynamical_recover(pair: &SequenceWindowPair, samples: &[Vec<Complex64>]) -> Result<RecoveryReport> {
    let a = forward_matrix(&pair.kernels, pair.n)?;
    let needed = 2 * pair.n + 1;
    let y: Vec<Complex64> = samples.iter().flatten().copied().collect();
    if y.len() != a.nrows() {
        return Err(Error::InvalidArgument {
            field: "samples".into(),
            msg: format!("expected {} samples, got {}", a.nrows(), y.len()),
        });
    }
    if a.nrows() < needed {
        return Err(Error::InsufficientSamples { got: a.nrows(), needed });
    }
    let svd = a.clone().svd(true, true);
    let (smax, smin) = svd
        .singular_values
        .iter()
        .fold((0.0f64, f64::INFINITY), |(hi, lo), &s| (hi.max(s), lo.min(s)));
    if smin <= smax * f64::EPSILON * needed as f64 {
        return Err(Error::RankDeficient(smin));
    }
    let y = DVector::from_vec(y);
    let x = svd.solve(&y, 0.0).map_err(|e| Error::InvalidArgument { field: "svd".into(), msg: e.into() })?;
    let truth = DVector::from_column_slice(&pair.f);
    let scale = truth.norm();
    let err = (&x - &truth).norm();
    Ok(RecoveryReport {
        n: pair.n,
        relative_error: if scale > 0.0 { err / scale } else { err },
        condition_number: smax / smin,
        residual: (&a * &x - y).norm(),
        recovered: x.as_slice().to_vec(),
    })
}

/// Condition number of the truncated forward map.
pub fn forward_condition(kernels: &[Kernel], n: usize) -> Result<f64> {
    let s = singular_values(&forward_matrix(kernels, n)?);
    let smin = *s.last().unwrap_or(&0.0);
    if smin <= s[0] * f64::EPSILON * s.len() as f64 {
        return Err(Error::RankDeficient(smin));
    }
    Ok(s[0] / smin)
}

/// Complex Gaussian sequence on `[-N, N]` with unit expected energy per
/// entry.
pub fn random_sequence(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..2 * n + 1)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        })
        .collect()
}

/// Adds complex Gaussian noise of standard deviation `sigma` to every sample.
pub fn add_noise(samples: &mut [Vec<Complex64>], sigma: f64, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let s = sigma * std::f64::consts::FRAC_1_SQRT_2;
    for v in samples.iter_mut().flat_map(|v| v.iter_mut()) {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        *v += Complex64::new(re, im) * s;
    }
}

/// The two-kernel scheme `Ω_1 = N⁻` with `δ_0` and `Ω_2 = N₀` with `ĝ`.
pub fn split_scheme(ghat: WindowSpec) -> Vec<Kernel> {
    vec![
        Kernel { ghat: WindowSpec::constant(Complex64::new(1.0, 0.0)), samples: FrequencySet::negative() },
        Kernel { ghat, samples: FrequencySet::nonnegative() },
    ]
}

/// Named dynamical-sampling experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DynExperiment {
    Delta,
    Cosine,
    Sawtooth,
}

impl DynExperiment {
    pub const ALL: [DynExperiment; 3] = [DynExperiment::Delta, DynExperiment::Cosine, DynExperiment::Sawtooth];

    pub fn name(&self) -> &'static str {
        match self {
            DynExperiment::Delta => "delta",
            DynExperiment::Cosine => "cosine",
            DynExperiment::Sawtooth => "sawtooth",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.name() == s)
    }

    pub fn kernel_symbol(&self) -> WindowSpec {
        match self {
            DynExperiment::Delta => WindowSpec::constant(Complex64::new(1.0, 0.0)),
            DynExperiment::Cosine => crate::windows::builtin("cosine").expect("builtin"),
            DynExperiment::Sawtooth => WindowSpec::sawtooth(),
        }
    }
}

/// Forward then recover a seeded random `F` on `[-N, N]`.
pub fn run_dynamical(exp: DynExperiment, n: usize, seed: u64, noise: f64) -> Result<RecoveryReport> {
    let pair = SequenceWindowPair::new(n, random_sequence(n, seed), split_scheme(exp.kernel_symbol()))?;
    let mut y = dynamical_forward(&pair)?;
    if noise > 0.0 {
        add_noise(&mut y, noise, seed);
    }
    dynamical_recover(&pair, &y)
}

fn trig_coeffs(f: &WindowSpec) -> Result<&std::collections::BTreeMap<i64, Complex64>> {
    match f.kind() {
        WindowKind::TrigPoly(c) => Ok(c),
        _ => Err(Error::InvalidWindow("derivative sampling needs a trigonometric polynomial".into())),
    }
}

/// `(F(n))_{0 ≤ n ≤ n_max}` and `(-F'(n)/(2πi))_{n_min ≤ n ≤ -1}` for
/// `F = f̂`, the latter as `Σ_k f̂(k) s_{n-k}` with `s` the sawtooth
/// coefficients.
pub fn derivative_samples(f: &WindowSpec, n_min: i64, n_max: i64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let c = trig_coeffs(f)?;
    let saw = WindowSpec::sawtooth();
    let zero = Complex64::new(0.0, 0.0);
    let plain = (0..=n_max).map(|n| c.get(&n).copied().unwrap_or(zero)).collect();
    let deriv = (n_min..=-1).map(|n| c.iter().map(|(&k, &v)| v * saw.fourier_coeff(n - k)).sum()).collect();
    Ok((plain, deriv))
}

/// The derivative-sampling form `Σ_{n≥0} |f̂(n)|² + Σ_{n<0} |(xf)^(n)|²` on
/// `span{e_k : |k| ≤ M}`, with the negative-index sum in closed form.
pub fn derivative_form(m: usize) -> Result<CMatrix> {
    let dim = 2 * m + 1;
    let cap = max_dimension();
    if dim > cap {
        return Err(Error::TooLarge { size: dim, cap });
    }
    let mi = m as i64;
    let saw = WindowSpec::sawtooth();
    // n = -1 … -L summed directly; for n = -j, j > L ≥ M, the entries are
    // (-1)^{k-k'} / (4π²(j+k)(j+k')).
    let l = mi;
    let a = CMatrix::from_fn(l as usize, dim, |r, c| saw.fourier_coeff(-(r as i64) - 1 - (c as i64 - mi)));
    let mut q = a.adjoint() * a;
    for r in 0..dim {
        for c in r..dim {
            let (k, kp) = (r as i64 - mi, c as i64 - mi);
            let s = if k == kp { trigamma((l + 1 + k) as f64) } else { harmonic_range(l + 1 + k, l + kp) / (kp - k) as f64 };
            let sign = if (k - kp).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let t = sign * s / (4.0 * PI * PI);
            q[(r, c)] += t;
            if r != c {
                q[(c, r)] += t;
            }
        }
    }
    for k in 0..=m {
        q[(m + k, m + k)] += 1.0;
    }
    Ok(q)
}

/// Minimal Rayleigh quotient of the derivative-sampling form over all
/// trigonometric polynomials of degree at most `M`.
pub fn full_space_min_rayleigh(m: usize) -> Result<f64> {
    Ok(hermitian_eigenvalues(&derivative_form(m)?)[0])
}

/// Minimal Rayleigh quotient over even real trigonometric polynomials of
/// degree at most `M`, in the orthonormal basis `{1, √2 cos 2πkx}`.
pub fn even_subspace_bound(m: usize) -> Result<f64> {
    let q = derivative_form(m)?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let u = CMatrix::from_fn(2 * m + 1, m + 1, |r, c| {
        let k = r as i64 - m as i64;
        match (c, k.unsigned_abs() as usize) {
            (0, 0) => Complex64::new(1.0, 0.0),
            (c, a) if c > 0 && a == c => Complex64::new(h, 0.0),
            _ => Complex64::new(0.0, 0.0),
        }
    });
    let r = u.adjoint() * q * u;
    Ok(hermitian_eigenvalues(&r)[0])
}

/// Least-squares recovery of a seeded random trigonometric polynomial of
/// degree at most `M` from `F(n)`, `0 ≤ n ≤ M`, and `-F'(n)/(2πi)`,
/// `-n_neg ≤ n ≤ -1`; `even` restricts to the basis `{1, √2 cos 2πkx}`.
pub fn derivative_recovery(m: usize, n_neg: usize, seed: u64, even: bool) -> Result<RecoveryReport> {
    let mi = m as i64;
    let saw = WindowSpec::sawtooth();
    let dim = 2 * m + 1;
    let rows = m + 1 + n_neg;
    let cap = max_dimension();
    if rows > cap {
        return Err(Error::TooLarge { size: rows, cap });
    }
    let mut a = CMatrix::from_fn(rows, dim, |r, c| {
        let k = c as i64 - mi;
        if r <= m {
            if k == r as i64 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
        } else {
            let n = m as i64 - r as i64;
            saw.fourier_coeff(n - k)
        }
    });
    if even {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = CMatrix::from_fn(dim, m + 1, |r, c| {
            let k = (r as i64 - mi).unsigned_abs() as usize;
            match (c, k) {
                (0, 0) => Complex64::new(1.0, 0.0),
                (c, k) if c > 0 && c == k => Complex64::new(h, 0.0),
                _ => Complex64::new(0.0, 0.0),
            }
        });
        a = a * u;
    }
    let unknowns = a.ncols();
    let truth = random_sequence(unknowns / 2, seed);
    let truth = DVector::from_column_slice(&truth[..unknowns]);
    let y = &a * &truth;
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if smin <= smax * f64::EPSILON * unknowns as f64 {
        return Err(Error::RankDeficient(smin));
    }
    let x = svd.solve(&y, 0.0).map_err(|e| Error::InvalidArgument { field: "svd".into(), msg: e.into() })?;
    Ok(RecoveryReport {
        n: n_neg,
        relative_error: (&x - &truth).norm() / truth.norm(),
        condition_number: smax / smin,
        residual: (&a * &x - y).norm(),
        recovered: x.as_slice().to_vec(),
    })
}
