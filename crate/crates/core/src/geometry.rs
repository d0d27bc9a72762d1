//! Intervals of the circle, their dilation flows and the two inner distances.
//!
//! An [`Interval`] is the counterclockwise arc from `start` to `end`. The upper
//! semicircle is `(0, inf)` in the line picture and the right semicircle is
//! `(-1, 1)`.
//!
//! For an inclusion `inner ⋐ outer` the inner distance `ell` is computed by
//! normalizing `outer` to the upper semicircle with `inner` symmetric under the
//! reflection `x -> 1/x`, and then solving for the time at which the dilation
//! flow of `(-1, 1)` carries `0` onto the lower endpoint of `inner`. The second
//! inner distance `ell_prime` is computed independently from the decomposition
//! `inner = tau'_{-a'} tau_a (0, inf)`. The two are related by
//! `ell_prime = sinh(ell / 2)`.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::Matrix2;
use serde::Serialize;

use crate::error::{require_positive, Error, Result};
use crate::moebius::{angle_to_line, ccw_offset, line_to_angle, reduce_angle, MoebiusElement};

/// A proper open arc of the unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    start: f64,
    end: f64,
}

impl Interval {
    pub fn from_angles(start: f64, end: f64) -> Result<Self> {
        if !start.is_finite() || !end.is_finite() {
            return Err(Error::InvalidInterval(format!(
                "non-finite angle in ({start}, {end})"
            )));
        }
        let (start, end) = (reduce_angle(start), reduce_angle(end));
        if start == end {
            return Err(Error::InvalidInterval(format!(
                "endpoints coincide at angle {start}"
            )));
        }
        Ok(Self { start, end })
    }

    /// Builds the interval `(x1, x2)` of the real line; `±inf` denotes the
    /// point `-1` of the circle. With `x1 > x2` the interval passes through infinity.
    pub fn from_line(x1: f64, x2: f64) -> Result<Self> {
        if x1.is_nan() || x2.is_nan() || x1 == x2 || (x1.is_infinite() && x2.is_infinite()) {
            return Err(Error::InvalidInterval(format!("({x1}, {x2})")));
        }
        Self::from_angles(line_to_angle(x1), line_to_angle(x2))
    }

    /// The upper semicircle, `(0, inf)`.
    pub fn upper_half() -> Self {
        Self {
            start: 0.0,
            end: PI,
        }
    }

    /// The right semicircle, `(-1, 1)`.
    pub fn right_half() -> Self {
        Self {
            start: -PI / 2.0,
            end: PI / 2.0,
        }
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    /// Arc length in `(0, 2 pi)`.
    pub fn arc_length(&self) -> f64 {
        ccw_offset(self.start, self.end)
    }

    /// Endpoints in the real-line picture. A start at the point at infinity is
    /// reported as `-inf`, an end there as `+inf`.
    pub fn line_endpoints(&self) -> (f64, f64) {
        let a = angle_to_line(self.start);
        let b = angle_to_line(self.end);
        let a = if a.is_infinite() {
            f64::NEG_INFINITY
        } else {
            a
        };
        (a, b)
    }

    /// True when the closure avoids the point at infinity.
    pub fn is_bounded_on_line(&self) -> bool {
        self.start != PI && self.end != PI && self.start < self.end
    }

    /// Euclidean length in the real-line picture.
    pub fn line_length(&self) -> Result<f64> {
        if !self.is_bounded_on_line() {
            return Err(Error::UnboundedInterval(self.to_string()));
        }
        let (a, b) = self.line_endpoints();
        Ok(b - a)
    }

    pub fn contains_angle(&self, theta: f64) -> bool {
        let off = ccw_offset(self.start, theta);
        off > 0.0 && off < self.arc_length()
    }

    /// `self ⋐ outer`: the closure of `self` lies in the interior of `outer`.
    pub fn is_compactly_inside(&self, outer: &Interval) -> bool {
        Inclusion::offsets(outer, self).is_some()
    }

    /// Image under a Moebius transformation (orientation is preserved).
    pub fn transformed(&self, g: &MoebiusElement) -> Result<Self> {
        Self::from_angles(g.apply_angle(self.start), g.apply_angle(self.end))
    }

    /// Image of `self` under the dilation by `factor` about the origin of the line.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        self.transformed(&MoebiusElement::dilation(factor.ln()))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.line_endpoints();
        write!(f, "({a}, {b})")
    }
}

/// Angular data of an inclusion `inner ⋐ outer`, measured counterclockwise
/// from the start of `outer`. Each field is a half-angle sine.
#[derive(Clone, Copy, Debug)]
struct Inclusion {
    /// outer start -> inner end
    sa: f64,
    /// inner start -> outer end
    sb: f64,
    /// outer start -> inner start
    sc: f64,
    /// inner end -> outer end
    sd: f64,
    /// whole outer arc
    sw: f64,
    /// whole inner arc
    sz: f64,
}

impl Inclusion {
    fn offsets(outer: &Interval, inner: &Interval) -> Option<(f64, f64, f64)> {
        let len = outer.arc_length();
        let u1 = ccw_offset(outer.start, inner.start);
        let u2 = u1 + inner.arc_length();
        (u1 > 0.0 && u2 < len).then_some((len, u1, u2))
    }

    fn new(outer: &Interval, inner: &Interval) -> Result<Self> {
        let (len, u1, u2) = Self::offsets(outer, inner).ok_or(Error::NotCompactInclusion)?;
        let half_sin = |x: f64| (x / 2.0).sin();
        Ok(Self {
            sa: half_sin(u2),
            sb: half_sin(len - u1),
            sc: half_sin(u1),
            sd: half_sin(len - u2),
            sw: half_sin(len),
            sz: half_sin(u2 - u1),
        })
    }

    /// Endpoints of the inner interval after mapping the outer one onto
    /// `(0, inf)` with start -> 0 and end -> inf.
    fn normalized_endpoints(&self) -> (f64, f64) {
        (self.sc / self.sb, self.sa / self.sd)
    }

    /// `x2 - x1` for the normalized endpoints, without cancellation.
    fn normalized_gap(&self) -> f64 {
        self.sw * self.sz / (self.sb * self.sd)
    }
}

/// Homogeneous half-angle coordinates `(sin(theta/2), cos(theta/2))`.
fn half_angle_vector(theta: f64) -> (f64, f64) {
    (theta / 2.0).sin_cos()
}

/// A Moebius map `g` with `g(upper half) = interval`: `0 -> start`, `inf -> end`.
pub fn standard_map(interval: &Interval) -> MoebiusElement {
    let w1 = interval.start;
    let w2 = w1 + interval.arc_length();
    let (s1, c1) = half_angle_vector(w1);
    let (s2, c2) = half_angle_vector(w2);
    MoebiusElement::new(Matrix2::new(s2, s1, c2, c1))
        .expect("determinant sin(arc/2) is positive for a proper interval")
}

/// Builds a map taking `outer` onto the upper semicircle and `inner` onto an
/// interval symmetric under `x -> 1/x`. It is the standard map of `outer`,
/// inverted, followed by the dilation that fixes the symmetry.
pub fn normalizing_map(outer: &Interval, inner: &Interval) -> Result<MoebiusElement> {
    let inc = Inclusion::new(outer, inner)?;
    let (x1, x2) = inc.normalized_endpoints();
    let scale = -0.5 * (x1 * x2).ln();
    Ok((MoebiusElement::dilation(scale) * standard_map(outer).inverse()).renormalized())
}

/// The one-parameter dilation group of `interval` at time `s`.
///
/// For the upper semicircle this is `x -> e^s x`; for a general interval it is
/// conjugated by [`standard_map`]. Both endpoints are fixed.
pub fn dilation_flow(interval: &Interval, s: f64) -> MoebiusElement {
    let g = standard_map(interval);
    (g * MoebiusElement::dilation(s) * g.inverse()).renormalized()
}

/// First inner distance `ell(outer, inner)`.
pub fn inner_distance(outer: &Interval, inner: &Interval) -> Result<f64> {
    let inc = Inclusion::new(outer, inner)?;
    let (x1, x2) = inc.normalized_endpoints();
    // After the symmetrizing dilation the inner interval is (y, 1/y), and the
    // dilation flow of (-1, 1) sends 0 to tanh(s/2); solve tanh(s/2) = y.
    let y = (x1 / x2).sqrt();
    // 1 - y^2 = (x2 - x1) / x2 computed without cancellation
    let one_minus_y2 = inc.normalized_gap() / x2;
    let one_minus_y = one_minus_y2 / (1.0 + y);
    Ok(((1.0 + y) / one_minus_y).ln())
}

/// Decomposition `inner = tau'_{-a'} tau_a (0, inf)` once `outer` is mapped onto
/// `(0, inf)` by the inverse of [`standard_map`]. Returns `(a, a')`.
pub fn translation_decomposition(outer: &Interval, inner: &Interval) -> Result<(f64, f64)> {
    let inc = Inclusion::new(outer, inner)?;
    let (x1, x2) = inc.normalized_endpoints();
    // tau_a (0, inf) = (a, inf); tau'_{-a'} maps it to (a / (1 + a a'), 1 / a')
    let a_prime = 1.0 / x2;
    let a = x1 * x2 / inc.normalized_gap();
    Ok((a, a_prime))
}

/// Second inner distance `ell'(outer, inner) = sqrt(a a')`.
pub fn second_inner_distance(outer: &Interval, inner: &Interval) -> Result<f64> {
    let (a, a_prime) = translation_decomposition(outer, inner)?;
    Ok((a * a_prime).sqrt())
}

/// Both inner distances of one inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InnerDistances {
    pub ell: f64,
    pub ell_prime: f64,
}

impl InnerDistances {
    pub fn of(outer: &Interval, inner: &Interval) -> Result<Self> {
        Ok(Self {
            ell: inner_distance(outer, inner)?,
            ell_prime: second_inner_distance(outer, inner)?,
        })
    }
}

/// The interval `(tanh(s/2), coth(s/2)) ⋐ (0, inf)` at inner distance `s`, together
/// with the translation parameters `a = tanh(s/2)`, `a' = sinh(s)/2` of the
/// factorization `e^{-2s L0} = e^{-aH} e^{-2a'H'} e^{-aH}`.
///
/// Note that the interval itself decomposes as `tau'_{-tanh(s/2)} tau_{sinh(s)/2}`;
/// the returned pair is the one entering the factorization, and both pairs have
/// the product `sinh(s/2)^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetricSubinterval {
    pub interval: Interval,
    pub a: f64,
    pub a_prime: f64,
}

pub fn symmetric_subinterval(s: f64) -> Result<SymmetricSubinterval> {
    let s = require_positive("s", s)?;
    let t = (s / 2.0).tanh();
    Ok(SymmetricSubinterval {
        interval: Interval::from_line(t, 1.0 / t)?,
        a: t,
        a_prime: s.sinh() / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dilation_of_positive_half_line() {
        let g = dilation_flow(&Interval::upper_half(), 2f64.ln());
        let m = g.matrix();
        let r2 = 2f64.sqrt();
        let expected = Matrix2::new(r2, 0.0, 0.0, 1.0 / r2);
        assert!(crate::moebius::projective_residual(m, &expected) < 1e-14);
    }

    #[test]
    fn dilation_at_zero_time_is_identity() {
        let i = Interval::from_line(-0.3, 4.0).unwrap();
        let g = dilation_flow(&i, 0.0);
        assert!(g.projective_distance(&MoebiusElement::identity()) < 1e-14);
    }

    #[test]
    fn dilation_of_right_half_moves_zero() {
        let g = dilation_flow(&Interval::right_half(), 1.0);
        assert_abs_diff_eq!(g.apply_line(0.0), 0.5f64.tanh(), epsilon = 1e-14);
        assert_abs_diff_eq!(g.apply_line(0.0), 0.46211715726000974, epsilon = 1e-14);
        // closed form x -> (x + 1 + e^{-s}(x - 1)) / (x + 1 - e^{-s}(x - 1))
        let e = (-1.0f64).exp();
        for &x in &[-0.9, -0.2, 0.4, 0.95] {
            let closed = (x + 1.0 + e * (x - 1.0)) / (x + 1.0 - e * (x - 1.0));
            assert_abs_diff_eq!(g.apply_line(x), closed, epsilon = 1e-13);
        }
    }

    #[test]
    fn dilation_fixes_endpoints() {
        let i = Interval::from_line(-2.0, 0.5).unwrap();
        let g = dilation_flow(&i, 0.8);
        assert_abs_diff_eq!(g.apply_line(-2.0), -2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(g.apply_line(0.5), 0.5, epsilon = 1e-12);
        let mid = g.apply_line(-0.7);
        assert!(mid > -2.0 && mid < 0.5);
    }

    #[test]
    fn concentric_intervals() {
        let outer = Interval::from_line(-2.0, 2.0).unwrap();
        let inner = Interval::from_line(-1.0, 1.0).unwrap();
        assert_abs_diff_eq!(
            inner_distance(&outer, &inner).unwrap(),
            2f64.ln(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn symmetric_interval_at_unit_distance() {
        let sub = symmetric_subinterval(1.0).unwrap();
        let d = InnerDistances::of(&Interval::upper_half(), &sub.interval).unwrap();
        assert_abs_diff_eq!(d.ell, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.ell_prime, 0.5f64.sinh(), epsilon = 1e-14);
        assert_abs_diff_eq!(sub.a, 0.46211715726000974, epsilon = 1e-15);
        assert_abs_diff_eq!(sub.a_prime, 0.5876005968219007, epsilon = 1e-15);
    }

    #[test]
    fn symmetric_subinterval_small_s() {
        let s = 1e-6;
        let sub = symmetric_subinterval(s).unwrap();
        assert_abs_diff_eq!(sub.a / (s / 2.0), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(sub.a_prime / (s / 2.0), 1.0, epsilon = 1e-10);
        assert!(symmetric_subinterval(0.0).is_err());
        assert!(symmetric_subinterval(-1.0).is_err());
    }

    #[test]
    fn symmetric_subinterval_product_identity() {
        for i in 1..=50 {
            let s = i as f64 * 0.1;
            let sub = symmetric_subinterval(s).unwrap();
            assert_abs_diff_eq!(
                (sub.a * sub.a_prime).sqrt(),
                (s / 2.0).sinh(),
                epsilon = 1e-13 * (s / 2.0).sinh()
            );
        }
    }

    #[test]
    fn second_distance_of_translated_half_line() {
        let t = 3.0;
        let g = MoebiusElement::conjugate_translation(-t) * MoebiusElement::translation(t);
        let inner = Interval::upper_half().transformed(&g).unwrap();
        assert_abs_diff_eq!(
            second_inner_distance(&Interval::upper_half(), &inner).unwrap(),
            3.0,
            epsilon = 1e-12
        );
        let (a, ap) = translation_decomposition(&Interval::upper_half(), &inner).unwrap();
        assert_abs_diff_eq!(a, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ap, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn second_distance_inversion_symmetric_interval() {
        let t: f64 = 1.0;
        let r = (1.0 + t * t).sqrt();
        let inner = Interval::from_line(t / r, r / t).unwrap();
        assert_abs_diff_eq!(
            second_inner_distance(&Interval::upper_half(), &inner).unwrap(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn touching_closures_rejected() {
        let outer = Interval::from_line(-1.0, 1.0).unwrap();
        assert_eq!(
            inner_distance(&outer, &outer),
            Err(Error::NotCompactInclusion)
        );
        let inner = Interval::from_line(-1.0, 0.5).unwrap();
        assert_eq!(
            second_inner_distance(&outer, &inner),
            Err(Error::NotCompactInclusion)
        );
        let outside = Interval::from_line(0.5, 3.0).unwrap();
        assert!(inner_distance(&outer, &outside).is_err());
    }

    #[test]
    fn normalizing_map_normalizes() {
        let outer = Interval::from_line(-3.0, 1.5).unwrap();
        let inner = Interval::from_line(-1.0, 0.2).unwrap();
        let g = normalizing_map(&outer, &inner).unwrap();
        let (o1, o2) = outer.transformed(&g).unwrap().line_endpoints();
        assert_abs_diff_eq!(o1, 0.0, epsilon = 1e-12);
        assert!(o2.is_infinite() || o2 > 1e12);
        let (i1, i2) = inner.transformed(&g).unwrap().line_endpoints();
        assert_abs_diff_eq!(i1 * i2, 1.0, epsilon = 1e-12);
        // the dilation flow of (-1, 1) carries 0 onto the lower endpoint at time ell
        let ell = inner_distance(&outer, &inner).unwrap();
        let flow = dilation_flow(&Interval::right_half(), ell);
        assert_abs_diff_eq!(flow.apply_line(0.0), i1, epsilon = 1e-12);
    }

    #[test]
    fn intervals_through_infinity() {
        let outer = Interval::from_line(1.0, -1.0).unwrap();
        assert!(!outer.is_bounded_on_line());
        let inner = Interval::from_line(2.0, -2.0).unwrap();
        // the complement picture of (-2, 2) ⊃ (-1, 1) with roles swapped
        assert_abs_diff_eq!(
            inner_distance(&outer, &inner).unwrap(),
            2f64.ln(),
            epsilon = 1e-13
        );
        assert!(outer.line_length().is_err());
    }

    #[test]
    fn degenerate_intervals() {
        assert!(Interval::from_line(1.0, 1.0).is_err());
        assert!(Interval::from_angles(-PI, PI).is_err());
        assert!(Interval::from_line(f64::NAN, 1.0).is_err());
    }
}
