//! Real unimodular 2x2 matrices acting by fractional-linear maps.
//!
//! Points of the circle are carried as angles in `(-pi, pi]`. The real-line
//! picture is `x = tan(theta / 2)`, so the point `-1` of the circle (angle `pi`)
//! is the point at infinity. In homogeneous coordinates an angle becomes the
//! vector `(sin(theta/2), cos(theta/2))`, on which matrices act linearly.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use nalgebra::Matrix2;

use crate::error::{Error, Result};

/// Reduces an angle into `(-pi, pi]`.
pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Counterclockwise angular distance from `from` to `to`, in `[0, 2 pi)`.
pub fn ccw_offset(from: f64, to: f64) -> f64 {
    let d = (to - from).rem_euclid(2.0 * PI);
    // rem_euclid can round up to exactly 2 pi for tiny negative inputs
    if d >= 2.0 * PI {
        0.0
    } else {
        d
    }
}

/// Circle angle to real-line coordinate; the angle `pi` maps to `+inf`.
pub fn angle_to_line(theta: f64) -> f64 {
    let theta = reduce_angle(theta);
    if theta == PI {
        f64::INFINITY
    } else {
        (theta / 2.0).tan()
    }
}

/// Real-line coordinate to circle angle; either infinity maps to `pi`.
pub fn line_to_angle(x: f64) -> f64 {
    if x.is_infinite() {
        PI
    } else {
        2.0 * x.atan()
    }
}

/// An orientation-preserving Moebius transformation, stored with determinant one.
///
/// `m` and `-m` describe the same transformation; [`MoebiusElement::projective_distance`]
/// compares elements up to that sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoebiusElement {
    m: Matrix2<f64>,
}

impl MoebiusElement {
    /// Builds an element from a real matrix with positive determinant, rescaling
    /// it to determinant one.
    pub fn new(m: Matrix2<f64>) -> Result<Self> {
        let det = m.determinant();
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::InvalidInterval(format!(
                "Moebius matrix needs positive determinant, got {det}"
            )));
        }
        Ok(Self { m: m / det.sqrt() })
    }

    pub fn from_entries(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(Matrix2::new(a, b, c, d))
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix2::identity(),
        }
    }

    /// `x -> x + t`.
    pub fn translation(t: f64) -> Self {
        Self {
            m: Matrix2::new(1.0, t, 0.0, 1.0),
        }
    }

    /// `x -> x / (1 - t x)`, the translations conjugated by the ray inversion `x -> -1/x`.
    pub fn conjugate_translation(t: f64) -> Self {
        Self {
            m: Matrix2::new(1.0, 0.0, -t, 1.0),
        }
    }

    /// `x -> e^s x`.
    pub fn dilation(s: f64) -> Self {
        Self {
            m: Matrix2::new((s / 2.0).exp(), 0.0, 0.0, (-s / 2.0).exp()),
        }
    }

    /// Rotation of the circle by the angle `theta` (counterclockwise).
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self {
            m: Matrix2::new(c, s, -s, c),
        }
    }

    pub fn matrix(&self) -> &Matrix2<f64> {
        &self.m
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }

    /// Divides by `sqrt(det)` to undo drift accumulated over long products.
    pub fn renormalized(self) -> Self {
        let det = self.det();
        Self {
            m: self.m / det.sqrt(),
        }
    }

    pub fn inverse(&self) -> Self {
        let m = &self.m;
        Self {
            m: Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]),
        }
    }

    /// Acts on the real-line picture. Infinity is a single point.
    pub fn apply_line(&self, x: f64) -> f64 {
        let m = &self.m;
        let (num, den) = if x.is_infinite() {
            (m[(0, 0)], m[(1, 0)])
        } else {
            (m[(0, 0)] * x + m[(0, 1)], m[(1, 0)] * x + m[(1, 1)])
        };
        if den == 0.0 {
            f64::INFINITY
        } else {
            num / den
        }
    }

    /// Acts on circle angles through homogeneous coordinates.
    pub fn apply_angle(&self, theta: f64) -> f64 {
        let (s, c) = (theta / 2.0).sin_cos();
        let m = &self.m;
        let u = m[(0, 0)] * s + m[(0, 1)] * c;
        let v = m[(1, 0)] * s + m[(1, 1)] * c;
        reduce_angle(2.0 * u.atan2(v))
    }

    /// Max-abs distance up to the overall sign.
    pub fn projective_distance(&self, other: &Self) -> f64 {
        projective_residual(&self.m, &other.m)
    }
}

impl Mul for MoebiusElement {
    type Output = MoebiusElement;

    fn mul(self, rhs: Self) -> Self {
        Self { m: self.m * rhs.m }
    }
}

impl fmt::Display for MoebiusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[(0, 0)],
            m[(0, 1)],
            m[(1, 0)],
            m[(1, 1)]
        )
    }
}

/// `min(|A - B|_max, |A + B|_max)`.
pub fn projective_residual(a: &Matrix2<f64>, b: &Matrix2<f64>) -> f64 {
    let minus = (a - b).abs().max();
    let plus = (a + b).abs().max();
    minus.min(plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_act_geometrically() {
        for &x in &[-3.0, -0.5, 0.0, 0.25, 2.0] {
            assert!((MoebiusElement::translation(0.7).apply_line(x) - (x + 0.7)).abs() < 1e-14);
            assert!(
                (MoebiusElement::conjugate_translation(-0.3).apply_line(x) - x / (1.0 + 0.3 * x))
                    .abs()
                    < 1e-14
            );
            assert!((MoebiusElement::dilation(2f64.ln()).apply_line(x) - 2.0 * x).abs() < 1e-14);
        }
    }

    #[test]
    fn rotation_by_two_pi_is_trivial() {
        let r = MoebiusElement::rotation(2.0 * PI);
        assert!(r.projective_distance(&MoebiusElement::identity()) < 1e-15);
        let q = MoebiusElement::rotation(0.4);
        assert!((q.apply_angle(0.3) - 0.7).abs() < 1e-14);
    }

    #[test]
    fn line_angle_round_trip() {
        for &x in &[-100.0, -1.0, 0.0, 0.3, 7.5] {
            assert!((angle_to_line(line_to_angle(x)) - x).abs() < 1e-12 * (1.0 + x.abs()));
        }
        assert_eq!(angle_to_line(PI), f64::INFINITY);
        assert_eq!(line_to_angle(f64::NEG_INFINITY), PI);
    }

    #[test]
    fn rejects_orientation_reversing() {
        assert!(MoebiusElement::from_entries(0.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn long_products_stay_unimodular() {
        let g = MoebiusElement::from_entries(1.3, 0.4, -0.2, 0.9).unwrap();
        let mut acc = MoebiusElement::identity();
        for _ in 0..1000 {
            acc = (acc * g).renormalized();
            acc = (acc * g.inverse()).renormalized();
        }
        assert!((acc.det() - 1.0).abs() <= 1e-12);
    }
}
