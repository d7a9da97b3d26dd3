//! Classification and numerical evidence for the split windowed-exponential
//! system
//!
//! ```text
//! F(g) = { e^{2πinx} : n ≥ 0 } ∪ { g(x) e^{2πinx} : n < 0 }   on L²[-1/2, 1/2].
//! ```
//!
//! The crate decides symbolically whether `F(g)` is incomplete, complete only,
//! a frame, or a Riesz basis (for real windows and pure modulations), and backs
//! each verdict with finite-dimensional evidence: Toeplitz/Hankel finite
//! sections of the analysis operator, quadratic-form frame-bound estimates on
//! trigonometric-polynomial subspaces with rigorous truncation tails, and the
//! dynamical- and derivative-sampling experiments built on the same system.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod frame_bounds;
pub mod linalg;
pub mod quadrature;
pub mod sampling_lab;
pub mod special;
pub mod toeplitz_ops;
pub mod windows;

pub use classifier::{classify, classify_modulated, toeplitz_verdict_modulated, Status, ToeplitzVerdict, Verdict};
pub use error::{Error, Result};
pub use frame_bounds::{FrameBoundEstimate, FrequencySet, Ray};
pub use toeplitz_ops::{FiniteSection, SectionRecipe, SpectralSummary};
pub use windows::{IntervalHull, Piece, WindowKind, WindowSpec, Xi};

pub use num_complex::Complex64;
