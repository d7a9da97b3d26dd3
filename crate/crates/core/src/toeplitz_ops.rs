//! Finite sections of the Toeplitz operator `T_g`, the Hankel operator
//! `H_ḡ` and the block analysis operator
//!
//! ```text
//! Φ_g = [ T_g̃  H_ḡ ]
//!       [  0    I  ]
//! ```
//!
//! acting on `ℓ²(N⁻) ⊕ ℓ²(N₀)`. Index convention: `entry(i, j) = b_{i-j}`
//! for Toeplitz sections, rows are output frequencies.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_defect, hermitian_eigenvalues, max_dimension, singular_values, CMatrix};
use crate::windows::WindowSpec;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum SectionRecipe {
    Toeplitz(WindowSpec, usize),
    Hankel(WindowSpec, usize),
    AnalysisBlock(WindowSpec, usize),
}

impl SectionRecipe {
    pub fn name(&self) -> &'static str {
        match self {
            SectionRecipe::Toeplitz(..) => "toeplitz",
            SectionRecipe::Hankel(..) => "hankel",
            SectionRecipe::AnalysisBlock(..) => "analysis",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteSection {
    pub data: CMatrix,
    pub recipe: SectionRecipe,
}

impl FiniteSection {
    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    /// Matrix dump, row-major, header `i,j,re,im`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,re,im\n");
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let z = self.data[(i, j)];
                let _ = writeln!(out, "{i},{j},{:e},{:e}", z.re, z.im);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub hermitian_eigs: Option<Vec<f64>>,
}

fn check_size(n: usize) -> Result<()> {
    let cap = max_dimension();
    if n == 0 {
        return Err(Error::InvalidArgument { field: "N".into(), msg: "must be at least 1".into() });
    }
    if n > cap {
        return Err(Error::TooLarge { size: n, cap });
    }
    Ok(())
}

/// `N×N` section of `T_g`: `entry(i, j) = b_{i-j}`.
pub fn toeplitz_section(w: &WindowSpec, n: usize) -> Result<FiniteSection> {
    check_size(n)?;
    let n_i = n as i64;
    let coeffs: Vec<Complex64> = (-(n_i - 1)..n_i).map(|k| w.fourier_coeff(k)).collect();
    let data = CMatrix::from_fn(n, n, |i, j| coeffs[i + n - 1 - j]);
    Ok(FiniteSection { data, recipe: SectionRecipe::Toeplitz(w.clone(), n) })
}

/// `N×N` section of `H_ḡ`: `entry(i, j) = conj(b_{i+j+1})`.
pub fn hankel_section(w: &WindowSpec, n: usize) -> Result<FiniteSection> {
    check_size(n)?;
    let coeffs: Vec<Complex64> = (1..=2 * n as i64).map(|k| w.fourier_coeff(k).conj()).collect();
    let data = CMatrix::from_fn(n, n, |i, j| coeffs[i + j]);
    Ok(FiniteSection { data, recipe: SectionRecipe::Hankel(w.clone(), n) })
}

/// `2N×2N` section of `Φ_g = [[T_g̃, H_ḡ], [0, I]]`. The `T_g̃` block is the
/// entrywise conjugate of the `T_g` section.
pub fn analysis_section(w: &WindowSpec, n: usize) -> Result<FiniteSection> {
    check_size(2 * n)?;
    let t = toeplitz_section(w, n)?.data;
    let h = hankel_section(w, n)?.data;
    let mut data = CMatrix::zeros(2 * n, 2 * n);
    data.view_mut((0, 0), (n, n)).copy_from(&t.map(|z| z.conj()));
    data.view_mut((0, n), (n, n)).copy_from(&h);
    data.view_mut((n, n), (n, n)).fill_with_identity();
    Ok(FiniteSection { data, recipe: SectionRecipe::AnalysisBlock(w.clone(), n) })
}

pub fn spectral_summary(s: &FiniteSection) -> Result<SpectralSummary> {
    let (rows, cols) = (s.rows(), s.cols());
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    let sv = singular_values(&s.data);
    let hermitian_eigs = (hermitian_defect(&s.data) <= 1e-12).then(|| hermitian_eigenvalues(&s.data));
    Ok(SpectralSummary {
        sigma_min: sv.last().copied().unwrap_or(0.0),
        sigma_max: sv.first().copied().unwrap_or(0.0),
        hermitian_eigs,
    })
}

/// Lower bound for `σ_min([[A, B], [0, I]])²` given `σ_min(A) ≥ c1` and
/// `‖B‖ ≤ c2`: `min(c1²/2, c1²/(4 c2²), 1/2)`.
///
/// From `‖f⁺‖² ≥ ‖B f⁺‖² / c2²` and `a² + b² ≥ (a + b)²/2`.
pub fn block_lower_bound(c1: f64, c2: f64) -> Result<f64> {
    if !(c1 > 0.0) {
        return Err(Error::NonPositiveC1(c1));
    }
    if !(c2 >= 0.0) {
        return Err(Error::NegativeC2(c2));
    }
    let a = c1 * c1 / 2.0;
    let b = if c2 == 0.0 { f64::INFINITY } else { c1 * c1 / (4.0 * c2 * c2) };
    Ok(a.min(b).min(0.5))
}
