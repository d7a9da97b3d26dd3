//! Symbolic classification of `F(g)`.
//!
//! `F(g)` is complete iff `T_g` is injective, a frame iff `T_g` is bounded
//! and bounded below, and a Riesz basis iff `T_g` is bounded and
//! invertible. For real `g`, Coburn's alternative gives injectivity and the
//! spectrum of `T_g` is `[essinf g, esssup g]`. For `g_ξ = e^{2πiξx}` the
//! system is a shifted exponential system decided by Levinson, Kadec and
//! Redheffer–Young. Anything else is `Unknown`.

use crate::error::{Error, Result};
use crate::windows::{WindowKind, WindowSpec, Xi};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    NotBessel,
    Incomplete,
    CompleteOnly,
    FrameNotRiesz,
    RieszBasis,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::NotBessel => "NotBessel",
            Status::Incomplete => "Incomplete",
            Status::CompleteOnly => "CompleteOnly",
            Status::FrameNotRiesz => "FrameNotRiesz",
            Status::RieszBasis => "RieszBasis",
            Status::Unknown => "Unknown",
        }
    }
}

/// Properties of `T_g`; `None` means undecided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToeplitzVerdict {
    pub injective: Option<bool>,
    pub bounded_below: Option<bool>,
    pub invertible: Option<bool>,
}

impl ToeplitzVerdict {
    pub const INVERTIBLE: Self = Self::known(true, true, true);
    pub const BOUNDED_BELOW_ONLY: Self = Self::known(true, true, false);
    pub const INJECTIVE_ONLY: Self = Self::known(true, false, false);
    pub const NOT_INJECTIVE: Self = Self::known(false, false, false);
    pub const UNKNOWN: Self = Self { injective: None, bounded_below: None, invertible: None };

    const fn known(injective: bool, bounded_below: bool, invertible: bool) -> Self {
        Self { injective: Some(injective), bounded_below: Some(bounded_below), invertible: Some(invertible) }
    }

    /// `invertible ⇒ bounded_below ⇒ injective` among known flags.
    pub fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InconsistentFlags(m.to_string()));
        if self.invertible == Some(true) && self.bounded_below == Some(false) {
            return bad("invertible but not bounded below");
        }
        if self.bounded_below == Some(true) && self.injective == Some(false) {
            return bad("bounded below but not injective");
        }
        if self.invertible == Some(true) && self.injective == Some(false) {
            return bad("invertible but not injective");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub toeplitz: ToeplitzVerdict,
    pub citation: String,
}

impl Verdict {
    fn new(status: Status, toeplitz: ToeplitzVerdict, citation: &str) -> Self {
        Verdict { status, toeplitz, citation: citation.to_string() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

const CITE_REAL_HULL_IN: &str =
    "Coburn alternative (real symbol => T_g injective) and sigma(T_g) = [essinf g, esssup g] containing 0";
const CITE_REAL_HULL_OUT: &str = "sigma(T_g) = [essinf g, esssup g] excludes 0, so T_g is invertible";
const CITE_ZERO: &str = "g = 0 a.e.: T_0 = 0 has full kernel";
const CITE_CONST: &str = "T_c = c I is invertible for c != 0";
const CITE_HELSON_SZEGO: &str =
    "Widom-Devinatz / Helson-Szego invertibility criterion: no checkable test for general complex windows";
const CITE_LEVINSON: &str = "Levinson gap theorem: E(Gamma_xi) incomplete for xi < -1/2";
const CITE_KADEC: &str = "Kadec 1/4 theorem: |lambda_n - n| = |xi|/2 < 1/4";
const CITE_EXCESS: &str = "Kadec 1/4 theorem for xi - n in (-1/2, 1/2) plus n excess elements";
const CITE_REDHEFFER_YOUNG: &str = "Redheffer-Young: E(Gamma_{-1/2}) exact but not a Riesz basis; finite excess keeps it a non-frame";

/// Theorem table for `T_{g_ξ}`, `g_ξ = e^{2πiξx}`.
pub fn toeplitz_verdict_modulated(xi: Xi) -> ToeplitzVerdict {
    modulated_case(xi).0
}

fn modulated_case(xi: Xi) -> (ToeplitzVerdict, Status, &'static str) {
    if xi.is_half_integer() && xi.cmp_half(-1) != Ordering::Less {
        return (ToeplitzVerdict::INJECTIVE_ONLY, Status::CompleteOnly, CITE_REDHEFFER_YOUNG);
    }
    if xi.cmp_half(-1) == Ordering::Less {
        return (ToeplitzVerdict::NOT_INJECTIVE, Status::Incomplete, CITE_LEVINSON);
    }
    if xi.cmp_half(1) == Ordering::Less {
        return (ToeplitzVerdict::INVERTIBLE, Status::RieszBasis, CITE_KADEC);
    }
    (ToeplitzVerdict::BOUNDED_BELOW_ONLY, Status::FrameNotRiesz, CITE_EXCESS)
}

pub fn classify_modulated(xi: Xi) -> Verdict {
    let (tv, status, cite) = modulated_case(xi);
    Verdict::new(status, tv, cite)
}

pub fn classify(w: &WindowSpec) -> Verdict {
    if w.is_zero() {
        return Verdict::new(Status::Incomplete, ToeplitzVerdict::NOT_INJECTIVE, CITE_ZERO);
    }
    match w.kind() {
        WindowKind::Modulated(xi) => classify_modulated(*xi),
        WindowKind::Constant(c) if c.im != 0.0 => Verdict::new(Status::RieszBasis, ToeplitzVerdict::INVERTIBLE, CITE_CONST),
        _ if w.is_real() => {
            let hull = w.real_hull().expect("real window has a hull");
            if hull.contains(0.0) {
                Verdict::new(Status::CompleteOnly, ToeplitzVerdict::INJECTIVE_ONLY, CITE_REAL_HULL_IN)
            } else {
                Verdict::new(Status::RieszBasis, ToeplitzVerdict::INVERTIBLE, CITE_REAL_HULL_OUT)
            }
        }
        _ => Verdict::new(Status::Unknown, ToeplitzVerdict::UNKNOWN, CITE_HELSON_SZEGO),
    }
}

/// Reads the frame status off the properties of `T_g`.
pub fn verdict_from_toeplitz(tv: ToeplitzVerdict, bounded_symbol: bool) -> Result<Status> {
    tv.check()?;
    if !bounded_symbol {
        return Ok(Status::NotBessel);
    }
    Ok(match (tv.injective, tv.bounded_below, tv.invertible) {
        (Some(false), _, _) => Status::Incomplete,
        (_, _, Some(true)) => Status::RieszBasis,
        (_, Some(true), Some(false)) => Status::FrameNotRiesz,
        (Some(true), Some(false), _) => Status::CompleteOnly,
        _ => Status::Unknown,
    })
}
