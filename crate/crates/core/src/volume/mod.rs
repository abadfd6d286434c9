//! Volumes of regular truncated hyperbolic tetrahedra and of the manifolds
//! glued from them.
//!
//! `T*(theta)` has all six dihedral angles `theta`, `0 < theta < pi/3`; at
//! `theta = 0` it becomes the regular ideal octahedron, of volume `8 L(pi/4)`. Two independent formulas are provided:
//!
//! ```text
//! vol = 8 L(pi/4) - 3 integral_0^theta arccosh(cos t / (2 cos t - 1)) dt
//! vol = 6 [L(pi/3 + p) - L(pi/3 - p) + L(5pi/6 - p) + L(pi/6 - p)
//!          + L(theta/2 + p) - L(theta/2 - p) + 2 L(pi/2 - p)]
//! ```
//!
//! with `p = arctan(sqrt(1 - 3 sin^2(theta/2)) / cos(theta/2))`.

pub mod lobachevsky;
pub mod quadrature;

use std::f64::consts::PI;
use std::fmt;

pub use lobachevsky::{lobachevsky, lobachevsky_fourier, NonFiniteArgument};
pub use quadrature::{integrate, Quadrature, QuadratureError};

use crate::triangulate::{edge_classes, IdealTriangulation};

/// Largest allowed gap between the two volume formulas.
pub const AGREEMENT_TOLERANCE: f64 = 1e-9;

/// Absolute target for the quadrature in the integral formula.
const INTEGRAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VolumeError {
    #[error("angle {0} is outside [0, pi/3)")]
    AngleOutOfRange(f64),
    #[error(transparent)]
    NonFinite(#[from] NonFiniteArgument),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("{family} is defined for {expected}, got n = {n}")]
    BadIndex { family: &'static str, expected: &'static str, n: u64 },
    #[error("volume formulas disagree at theta = {theta}: {via_integral} vs {via_lobachevsky}")]
    Disagreement { theta: f64, via_integral: f64, via_lobachevsky: f64 },
}

/// A dihedral angle `0 <= theta < pi/3`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn new(theta: f64) -> Result<Self, VolumeError> {
        if theta.is_finite() && (0.0..PI / 3.0).contains(&theta) {
            Ok(Angle(theta))
        } else {
            Err(VolumeError::AngleOutOfRange(theta))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `8 L(pi/4)`, the volume at `theta = 0`.
pub fn ideal_limit() -> f64 {
    8.0 * lobachevsky(PI / 4.0).expect("finite")
}

/// `arccosh(cos t / (2 cos t - 1))`, written as `ln(1 + u + sqrt(u (u + 2)))`
/// with `u = 2 sin^2(t/2) / (2 cos t - 1)` so that nothing cancels near 0.
fn integrand(t: f64) -> f64 {
    let s = (0.5 * t).sin();
    let u = 2.0 * s * s / (2.0 * t.cos() - 1.0);
    (u + (u * (u + 2.0)).sqrt()).ln_1p()
}

pub fn vol_regular_truncated_integral(theta: Angle) -> Result<f64, VolumeError> {
    let q = integrate(integrand, 0.0, theta.0, INTEGRAL_TOLERANCE / 3.0)?;
    Ok(ideal_limit() - 3.0 * q.value)
}

pub fn vol_regular_truncated_closed(theta: Angle) -> Result<f64, VolumeError> {
    let half = 0.5 * theta.0;
    let radicand = 1.0 - 3.0 * half.sin().powi(2);
    assert!(radicand > 0.0, "theta < pi/3 keeps the radicand positive");
    let p = (radicand.sqrt() / half.cos()).atan();
    let l = |x: f64| lobachevsky(x);
    let sum = l(PI / 3.0 + p)? - l(PI / 3.0 - p)? + l(5.0 * PI / 6.0 - p)? + l(PI / 6.0 - p)?
        + l(half + p)?
        - l(half - p)?
        + 2.0 * l(PI / 2.0 - p)?;
    Ok(6.0 * sum)
}

/// Both volume formulas at one angle, possibly scaled by a tetrahedron count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeResult {
    pub theta: f64,
    pub via_integral: f64,
    pub via_lobachevsky: f64,
    pub agreed: bool,
}

impl VolumeResult {
    pub fn discrepancy(&self) -> f64 {
        (self.via_integral - self.via_lobachevsky).abs()
    }
}

/// `count` copies of `T*(theta)`, by both formulas.
pub fn volume_both(theta: Angle, count: u64) -> Result<VolumeResult, VolumeError> {
    let n = count as f64;
    let via_integral = n * vol_regular_truncated_integral(theta)?;
    let via_lobachevsky = n * vol_regular_truncated_closed(theta)?;
    Ok(VolumeResult {
        theta: theta.0,
        via_integral,
        via_lobachevsky,
        agreed: (via_integral - via_lobachevsky).abs() <= AGREEMENT_TOLERANCE * n.max(1.0),
    })
}

fn mn_angle(n: u64) -> Result<Angle, VolumeError> {
    if n < 2 {
        return Err(VolumeError::BadIndex { family: "M_n", expected: "n >= 2", n });
    }
    Angle::new(PI / (3.0 * n as f64))
}

fn wn_angle(n: u64) -> Result<Angle, VolumeError> {
    if n < 5 || !(n - 5).is_multiple_of(4) {
        return Err(VolumeError::BadIndex { family: "W_n", expected: "n = 5 + 4s", n });
    }
    Angle::new(2.0 * PI / (3.0 * n as f64))
}

/// `n` copies of `T*(pi / 3n)`, from the integral formula.
pub fn vol_mn(n: u64) -> Result<f64, VolumeError> {
    Ok(n as f64 * vol_regular_truncated_integral(mn_angle(n)?)?)
}

/// `n` copies of `T*(2pi / 3n)`, from the Lobachevsky formula and checked
/// against the integral formula.
pub fn vol_wn(n: u64) -> Result<f64, VolumeError> {
    let r = volume_both(wn_angle(n)?, n)?;
    if !r.agreed {
        return Err(VolumeError::Disagreement {
            theta: r.theta,
            via_integral: r.via_integral,
            via_lobachevsky: r.via_lobachevsky,
        });
    }
    Ok(r.via_lobachevsky)
}

/// Both formulas for a family member.
pub fn family_volume(family: Family, n: u64) -> Result<VolumeResult, VolumeError> {
    let theta = match family {
        Family::Mn => mn_angle(n)?,
        Family::Wn => wn_angle(n)?,
    };
    volume_both(theta, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `n` tetrahedra with angle `pi / 3n`.
    Mn,
    /// `n = 5 + 4s` tetrahedra with angle `2pi / 3n`.
    Wn,
}

/// If every edge class has the same size `m > 6`, the angle `2pi / m`
/// makes the angle sum around every edge `2pi`.
pub fn regular_angle(t: &IdealTriangulation) -> Option<Angle> {
    let ec = edge_classes(t);
    let m = *ec.sizes().first()?;
    if m <= 6 || ec.sizes().iter().any(|&s| s != m) {
        return None;
    }
    Angle::new(2.0 * PI / m as f64).ok()
}
