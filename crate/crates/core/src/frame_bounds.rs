//! Frame-bound estimates on trigonometric-polynomial subspaces.
//!
//! For `f = Σ_{|k|≤M} c_k e_k` the frame quadratic form of a system is a
//! Hermitian `(2M+1)×(2M+1)` matrix; its extreme eigenvalues `A_M ≥ A` and
//! `B_M ≤ B` bracket the true frame bounds from inside and converge as `M`
//! grows. When the system is infinite on the subspace (non-polynomial
//! windows, exponential systems) the sum is truncated and the neglected
//! part, a positive semidefinite matrix, is bounded in norm by `tail`:
//! the exact subspace extremes lie in `[A_M, A_M + tail]` and
//! `[B_M, B_M + tail]`.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_extremes, max_dimension, symmetric_extremes, CMatrix};
use crate::quadrature::integrate_graded_at;
use crate::special::{cos_pi, sin_pi, sinc};
use crate::windows::{CoeffDecay, WindowSpec};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Frequencies closer than this are the same frequency.
const MERGE_TOL: f64 = 1e-12;

/// `{offset + direction·k : k ≥ start}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    pub offset: f64,
    pub direction: i8,
    pub start: i64,
}

impl Ray {
    pub fn new(offset: f64, direction: i8, start: i64) -> Result<Self> {
        if direction != 1 && direction != -1 {
            return Err(Error::InvalidArgument { field: "direction".into(), msg: "must be +1 or -1".into() });
        }
        if !offset.is_finite() {
            return Err(Error::InvalidArgument { field: "offset".into(), msg: "must be finite".into() });
        }
        Ok(Ray { offset, direction, start })
    }

    pub fn element(&self, k: i64) -> f64 {
        self.offset + self.direction as f64 * k as f64
    }

    fn dir(&self) -> f64 {
        self.direction as f64
    }

    /// Elements at ray positions `0..len` that point backwards (toward the
    /// origin) before the ray heads outward.
    fn inward_count(&self) -> usize {
        let v0 = self.dir() * self.element(self.start);
        if v0 >= 0.0 {
            0
        } else {
            (-v0).ceil() as usize
        }
    }

    /// The `count` elements of smallest modulus (ties broken by ray order),
    /// together with the remaining elements of the scanned window and the
    /// first ray position past that window.
    fn split(&self, count: usize) -> (Vec<f64>, Vec<f64>, i64) {
        let len = count + self.inward_count();
        let mut window: Vec<(usize, f64)> = (0..len).map(|j| (j, self.element(self.start + j as i64))).collect();
        window.sort_by(|a, b| a.1.abs().total_cmp(&b.1.abs()).then(a.0.cmp(&b.0)));
        let kept = window[..count].iter().map(|p| p.1).collect();
        let rest = window[count..].iter().map(|p| p.1).collect();
        (kept, rest, self.start + len as i64)
    }
}

/// A countable frequency set: finitely many unit-step rays plus finitely
/// many extra points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencySet {
    pub rays: Vec<Ray>,
    #[serde(default)]
    pub extra: Vec<f64>,
}

impl FrequencySet {
    /// `N₀ = {0, 1, 2, …}`.
    pub fn nonnegative() -> Self {
        FrequencySet { rays: vec![Ray { offset: 0.0, direction: 1, start: 0 }], extra: Vec::new() }
    }

    /// `N⁻ = {-1, -2, …}`.
    pub fn negative() -> Self {
        FrequencySet { rays: vec![Ray { offset: 0.0, direction: -1, start: 1 }], extra: Vec::new() }
    }

    pub fn integers() -> Self {
        let mut z = Self::nonnegative();
        z.rays.extend(Self::negative().rays);
        z
    }

    /// Merged, sorted elements: the `cutoff` smallest-modulus elements of
    /// each ray plus the extra points, duplicates removed.
    pub fn enumerate(&self, cutoff: usize) -> Vec<f64> {
        let mut all: Vec<f64> = self.rays.iter().flat_map(|r| r.split(cutoff).0).collect();
        all.extend(self.extra.iter().copied());
        merge_sorted(all)
    }

    /// Elements inside the closed interval `[lo, hi]`, exact for rays.
    pub fn points_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut all = Vec::new();
        for r in &self.rays {
            // k ≥ start with lo ≤ offset + dir·k ≤ hi
            let (a, b) = if r.direction == 1 { (lo - r.offset, hi - r.offset) } else { (r.offset - hi, r.offset - lo) };
            let k0 = (a - MERGE_TOL).ceil().max(r.start as f64) as i64;
            let k1 = (b + MERGE_TOL).floor() as i64;
            all.extend((k0..=k1).map(|k| r.element(k)));
        }
        all.extend(self.extra.iter().copied().filter(|x| (lo..=hi).contains(x)));
        merge_sorted(all)
    }
}

fn merge_sorted(mut all: Vec<f64>) -> Vec<f64> {
    all.sort_by(f64::total_cmp);
    all.dedup_by(|a, b| (*a - *b).abs() <= MERGE_TOL);
    all
}

/// `Γ_ξ = {n - ξ/2 : n ≥ 0} ∪ {n + ξ/2 : n ≤ -1}`, the frequency set of
/// `e^{-πiξx} F(g_ξ)`.
pub fn gamma_of_xi(xi: f64) -> FrequencySet {
    FrequencySet {
        rays: vec![
            Ray { offset: -xi / 2.0, direction: 1, start: 0 },
            Ray { offset: xi / 2.0, direction: -1, start: 1 },
        ],
        extra: Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameBoundEstimate {
    pub m: usize,
    pub a_m: f64,
    pub b_m: f64,
    pub tail: f64,
    pub rigorous: bool,
}

impl FrameBoundEstimate {
    /// Certified lower bound for the exact subspace value `A_M`... and only
    /// for it: the global bound `A` can be smaller.
    pub fn lower_certified(&self) -> f64 {
        self.a_m
    }
}

/// Truncation of the infinite sums in [`frame_bounds_subspace`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubspaceOptions {
    /// Negative indices `n ≥ -truncation` are summed exactly.
    pub truncation: usize,
}

impl Default for SubspaceOptions {
    fn default() -> Self {
        SubspaceOptions { truncation: 4096 }
    }
}

/// `Σ_{j≥0} min(1, 1/(π²(d+j)²))`, bounded above.
fn sinc_square_tail(d: f64) -> f64 {
    let j0 = if d >= 1.0 { 0.0 } else { (1.0 - d).ceil() };
    let d1 = d + j0;
    j0 + (1.0 / (d1 * d1) + 1.0 / d1) / (PI * PI)
}

fn check_dim(m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::InvalidArgument { field: "M".into(), msg: "must be at least 1".into() });
    }
    let dim = 2 * m + 1;
    let cap = max_dimension();
    if dim > cap {
        return Err(Error::TooLarge { size: dim, cap });
    }
    Ok(dim)
}

/// Matrix of `f ↦ Σ_{n≥0} |f̂(n)|² + Σ_{n<0} |⟨f, g e_n⟩|²` on
/// `span{e_k : |k| ≤ M}` (index `k + M`), plus the tail bound.
pub fn frame_form(w: &WindowSpec, m: usize, opts: SubspaceOptions) -> Result<(CMatrix, f64)> {
    let dim = check_dim(m)?;
    let mi = m as i64;
    let (n_lo, tail) = match w.decay() {
        CoeffDecay::Finite { degree } => (-(mi + degree), 0.0),
        CoeffDecay::Harmonic { scale, center } => {
            let nt = opts.truncation as i64;
            if (nt as f64) < mi as f64 + center.abs() + 2.0 {
                return Err(Error::InvalidArgument {
                    field: "cutoff".into(),
                    msg: format!("truncation {nt} must exceed M + |center| + 2"),
                });
            }
            // neglected n < -nt: m = k - n ≥ k + nt + 1
            let tail: f64 = (-mi..=mi)
                .map(|k| {
                    let d = (k + nt + 1) as f64 - center;
                    scale * scale * (1.0 / (d * d) + 1.0 / d)
                })
                .sum();
            (-nt, tail)
        }
    };
    let rows = (-n_lo) as usize;
    // b_j for j = k - n ∈ [-M + 1, M - n_lo]
    let j_lo = -mi + 1;
    let coeffs: Vec<Complex64> = (j_lo..=mi - n_lo).map(|j| w.fourier_coeff(j)).collect();
    // V[n, k] = conj(b_{k-n}), n = -1, -2, …, n_lo
    let v = CMatrix::from_fn(rows, dim, |r, c| {
        let n = -(r as i64) - 1;
        let k = c as i64 - mi;
        coeffs[(k - n - j_lo) as usize].conj()
    });
    let mut q = v.adjoint() * v;
    for k in 0..=m {
        q[(m + k, m + k)] += 1.0;
    }
    Ok((q, tail))
}

/// Subspace frame bounds of `F(g)` on trigonometric polynomials of degree
/// at most `M`.
pub fn frame_bounds_subspace(w: &WindowSpec, m: usize, opts: SubspaceOptions) -> Result<FrameBoundEstimate> {
    if !w.sup_norm().is_finite() {
        return Err(Error::UnboundedWindow);
    }
    let (q, tail) = frame_form(w, m, opts)?;
    let (a_m, b_m) = hermitian_extremes(&q);
    Ok(FrameBoundEstimate { m, a_m: a_m.max(0.0), b_m, tail, rigorous: tail.is_finite() })
}

/// Subspace frame bounds of the exponential system `E(Γ)`:
/// `Q_{k,k'} = Σ_λ sinc(k - λ) sinc(k' - λ)` with each ray enumerated to
/// `cutoff` elements; the neglected elements are bounded through
/// `|sinc(u)| ≤ min(1, 1/(π|u|))`.
pub fn exp_system_bounds(gamma: &FrequencySet, m: usize, cutoff: usize) -> Result<FrameBoundEstimate> {
    let dim = check_dim(m)?;
    let mi = m as i64;
    let mut points: Vec<f64> = gamma.extra.clone();
    let mut tail = 0.0;
    let row_energy = |lambda: f64| -> f64 { (-mi..=mi).map(|k| sinc(k as f64 - lambda).powi(2)).sum() };
    for ray in &gamma.rays {
        let (kept, rest, next) = ray.split(cutoff);
        points.extend(kept);
        tail += rest.iter().map(|&l| row_energy(l)).sum::<f64>();
        let lead = ray.dir() * ray.element(next);
        tail += (-mi..=mi).map(|k| sinc_square_tail(lead - ray.dir() * k as f64)).sum::<f64>();
    }
    let points = merge_sorted(points);
    let s = DMatrix::from_fn(dim, points.len(), |r, c| sinc((r as i64 - mi) as f64 - points[c]));
    let q = &s * s.transpose();
    let (a_m, b_m) = symmetric_extremes(&q);
    Ok(FrameBoundEstimate { m, a_m: a_m.max(0.0), b_m, tail, rigorous: tail.is_finite() })
}

/// Classical Kadec Riesz bounds for `|λ_n - n| ≤ δ < 1/4`:
/// `((cos πδ - sin πδ)², (2 - cos πδ + sin πδ)²)`.
pub fn kadec_envelope(delta: f64) -> Result<(f64, f64)> {
    if !(0.0..0.25).contains(&delta) {
        return Err(Error::DeltaTooLarge(delta));
    }
    let (c, s) = (cos_pi(delta), sin_pi(delta));
    Ok(((c - s).powi(2), (2.0 - c + s).powi(2)))
}

/// `F_t(x) = sin(πx) cos^{2t-1}(πx)`.
pub fn witness_function(t: f64, x: f64) -> f64 {
    sin_pi(x) * cos_pi(x).powf(2.0 * t - 1.0)
}

/// `F_t(1/2 - s) = -F_t(s - 1/2)` from the distance `s` to the endpoint,
/// exact in relative precision as `s → 0`.
fn witness_from_edge(t: f64, s: f64) -> f64 {
    cos_pi(s) * sin_pi(s).powf(2.0 * t - 1.0)
}

/// `∫ F_t(x) e^{-2πiνx} dx` for `ν = n + t` (`n ≥ 0`) and
/// `ν = -(|n| + t)` (`n < 0`).
pub fn witness_values(t: f64, n_lo: i64, n_hi: i64) -> Result<Vec<(i64, Complex64)>> {
    if !(t > 0.25) || !t.is_finite() {
        return Err(Error::TNotAdmissible(t));
    }
    Ok((n_lo..=n_hi)
        .map(|n| {
            let nu = if n >= 0 { n as f64 + t } else { -((-n) as f64 + t) };
            // x = 1/2 - s on the right half, x = s - 1/2 on the left
            let f = |s: f64| {
                let x = 0.5 - s;
                let e = Complex64::from_polar(1.0, -2.0 * PI * nu * x);
                witness_from_edge(t, s) * (e - e.conj())
            };
            let panels = (nu.abs().ceil() as usize).max(1);
            (n, integrate_graded_at(f, 0.0, 0.5, 96, panels, 1e-13))
        })
        .collect())
}

/// Upper Beurling density of a finite union of unit-step rays: the number of
/// distinct residues mod 1 among rays heading the same way, maximised over
/// the two directions. Extra points have density zero.
pub fn upper_beurling_density(gamma: &FrequencySet) -> f64 {
    let mut best = 0usize;
    for dir in [1i8, -1] {
        let mut residues: Vec<f64> = gamma
            .rays
            .iter()
            .filter(|r| r.direction == dir)
            .map(|r| {
                let x = r.offset.rem_euclid(1.0);
                if 1.0 - x <= MERGE_TOL {
                    0.0
                } else {
                    x
                }
            })
            .collect();
        residues = merge_sorted(residues);
        best = best.max(residues.len());
    }
    best as f64
}

/// Direct count `max_x #(Λ ∩ [x, x + L]) / L` over a window of length `L`
/// placed at the lattice of candidate left ends; a finite-window check of
/// [`upper_beurling_density`].
pub fn windowed_density(gamma: &FrequencySet, length: f64, span: f64) -> f64 {
    let pts = gamma.points_in(-span - length, span + length);
    let mut best = 0usize;
    let mut hi = 0usize;
    for lo in 0..pts.len() {
        if pts[lo] < -span {
            continue;
        }
        while hi < pts.len() && pts[hi] <= pts[lo] + length {
            hi += 1;
        }
        best = best.max(hi - lo);
    }
    best as f64 / length
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::windows::{builtin, Xi};

    fn opts() -> SubspaceOptions {
        SubspaceOptions::default()
    }

    #[test]
    fn gamma_examples() {
        let z = gamma_of_xi(0.0).enumerate(5);
        assert_eq!(z, vec![-5.0, -4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0]);
        let g = gamma_of_xi(-1.0).enumerate(3);
        assert_eq!(g, vec![-3.5, -2.5, -1.5, 0.5, 1.5, 2.5]);
        // -1/2 appears on both rays
        let g = gamma_of_xi(1.0).enumerate(3);
        assert_eq!(g, vec![-2.5, -1.5, -0.5, 0.5, 1.5]);
    }

    #[test]
    fn enumeration_takes_smallest_moduli() {
        // {n - 3/2 : n ≥ 0} = -1.5, -0.5, 0.5, 1.5, 2.5 …
        let r = Ray { offset: -1.5, direction: 1, start: 0 };
        let (kept, _, _) = r.split(2);
        assert_eq!(kept, vec![-0.5, 0.5]);
        let set = FrequencySet { rays: vec![Ray { offset: -10.0, direction: 1, start: 0 }], extra: vec![] };
        assert_eq!(set.enumerate(3), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn points_in_window() {
        let z = FrequencySet::integers();
        assert_eq!(z.points_in(-2.0, 2.0), vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        let n = FrequencySet::negative();
        assert_eq!(n.points_in(-3.0, 3.0), vec![-3.0, -2.0, -1.0]);
    }

    #[test]
    fn constant_windows_are_exact() {
        let e = frame_bounds_subspace(&builtin("constant2").unwrap(), 4, opts()).unwrap();
        assert!((e.a_m - 1.0).abs() < 1e-12 && (e.b_m - 4.0).abs() < 1e-12);
        assert_eq!(e.tail, 0.0);
        assert!(e.rigorous);
        let e = frame_bounds_subspace(&builtin("one").unwrap(), 8, opts()).unwrap();
        assert!((e.a_m - 1.0).abs() < 1e-12 && (e.b_m - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sawtooth_lower_bound_decays() {
        let w = WindowSpec::sawtooth();
        let est: Vec<_> = [4, 8, 16, 32].iter().map(|&m| frame_bounds_subspace(&w, m, opts()).unwrap()).collect();
        for p in est.windows(2) {
            assert!(p[1].a_m < p[0].a_m);
        }
        assert!(est[3].a_m < est[0].a_m / 2.0);
        assert!(est.iter().all(|e| e.b_m <= 1.25));
    }

    #[test]
    fn integers_have_unit_bounds() {
        let e = exp_system_bounds(&FrequencySet::integers(), 4, 9).unwrap();
        assert!((e.a_m - 1.0).abs() < 1e-14 && (e.b_m - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kadec_values() {
        assert_eq!(kadec_envelope(0.0).unwrap(), (1.0, 1.0));
        let (a, b) = kadec_envelope(0.2).unwrap();
        assert!((a - 0.048943).abs() < 1e-6, "{a}");
        assert!((b - 3.16402).abs() < 1e-5, "{b}");
        assert_eq!(kadec_envelope(0.25), Err(Error::DeltaTooLarge(0.25)));
        assert!(kadec_envelope(-0.1).is_err());
    }

    #[test]
    fn kadec_bound_holds_for_gamma() {
        let e = exp_system_bounds(&gamma_of_xi(0.4), 8, 4096).unwrap();
        let (a, _) = kadec_envelope(0.2).unwrap();
        assert!(e.a_m >= a - e.tail);
    }

    #[test]
    fn gamma_minus_one_decays() {
        let a: Vec<f64> = [4, 8, 16].iter().map(|&m| exp_system_bounds(&gamma_of_xi(-1.0), m, 2048).unwrap().a_m).collect();
        assert!(a[0] > a[1] && a[1] > a[2], "{a:?}");
    }

    #[test]
    fn density_examples() {
        assert_eq!(upper_beurling_density(&FrequencySet::negative()), 1.0);
        assert_eq!(upper_beurling_density(&FrequencySet::integers()), 1.0);
        let two = FrequencySet {
            rays: vec![Ray { offset: 0.0, direction: 1, start: 0 }, Ray { offset: 0.5, direction: 1, start: 0 }],
            extra: vec![],
        };
        assert_eq!(upper_beurling_density(&two), 2.0);
        assert!((windowed_density(&two, 200.0, 400.0) - 2.0).abs() < 0.02);
        let same = FrequencySet {
            rays: vec![Ray { offset: 0.0, direction: 1, start: 0 }, Ray { offset: 3.0, direction: 1, start: 0 }],
            extra: vec![0.25],
        };
        assert_eq!(upper_beurling_density(&same), 1.0);
    }

    #[test]
    fn witness_examples() {
        for (n, v) in witness_values(0.75, 2, 12).unwrap() {
            assert!(v.norm() < 1e-8, "n={n}: {v}");
        }
        let v = witness_values(0.5, 5, 5).unwrap()[0].1;
        assert!(v.norm() < 1e-10);
        let v0 = witness_values(0.75, 0, 0).unwrap()[0].1;
        assert!(v0.norm() > 0.1);
        // head term 2^{-2t}/i
        assert!((v0 - Complex64::new(0.0, -(2f64).powf(-1.5))).norm() < 1e-8, "{v0}");
        assert_eq!(witness_values(0.25, 0, 1), Err(Error::TNotAdmissible(0.25)));
    }

    #[test]
    fn edge_form_matches_direct_evaluation() {
        for &t in &[0.3, 0.75, 1.4] {
            for &s in &[0.01, 0.2, 0.37] {
                let direct = witness_function(t, 0.5 - s);
                assert!((witness_from_edge(t, s) - direct).abs() < 1e-12);
                assert!((witness_function(t, s - 0.5) + direct).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn witness_singular_exponent_head() {
        // t < 1/2 makes F_t unbounded at the endpoints; the head term is
        // still 2^{-2t}/i
        let v = witness_values(0.3, 0, 0).unwrap()[0].1;
        assert!((v - Complex64::new(0.0, -(2f64).powf(-0.6))).norm() < 1e-9, "{v}");
    }

    #[test]
    fn witness_is_odd() {
        let pos = witness_values(0.6, 0, 6).unwrap();
        let neg = witness_values(0.6, -6, 0).unwrap();
        for n in 1..=6usize {
            let p = pos[n].1;
            let q = neg[6 - n].1;
            assert!((q + p).norm() < 1e-8 && (q - p.conj()).norm() < 1e-8);
        }
    }

    #[test]
    fn modulated_tail_shrinks_with_truncation() {
        let w = WindowSpec::modulated(Xi::Float(0.25));
        let a = frame_bounds_subspace(&w, 8, SubspaceOptions { truncation: 256 }).unwrap();
        let b = frame_bounds_subspace(&w, 8, SubspaceOptions { truncation: 4096 }).unwrap();
        assert!(b.tail < a.tail);
        assert!(b.a_m >= a.a_m - 1e-12 && b.a_m <= a.a_m + a.tail);
        assert!(frame_bounds_subspace(&w, 8, SubspaceOptions { truncation: 5 }).is_err());
    }
}
