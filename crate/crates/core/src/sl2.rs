//! The Lie algebra sl(2, R) in the line picture and the group identities that
//! fix the sign conventions for the truncated representations.
//!
//! Conventions, anchored by geometric action on `x`:
//!
//! * `exp(t h)` is the translation `x -> x + t`,
//! * `exp(-t h')` is `x -> x / (1 + t x)`,
//! * `l0 = (h + h') / 2` generates counterclockwise rotations,
//! * `k2 = (h - h') / 2` generates the dilations of `(-1, 1)`,
//! * `k1 = diag(1/2, -1/2)` generates the dilations of `(0, inf)`.
//!
//! A self-adjoint generator `X` of a unitary representation corresponds to the
//! real matrix `x` through `U(exp(t x)) = e^{itX}`; a contraction `e^{-aX}` is
//! therefore the complex group element `exp(i a x)`.

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::VerificationReport;

pub type CMatrix2 = Matrix2<Complex64>;

/// Closed-form exponential of a real 2x2 matrix.
///
/// The traceless part `X` satisfies `X^2 = -det(X)`, so `exp(X)` is
/// `cos(w) + sin(w)/w X` (elliptic), `1 + X` (parabolic) or
/// `cosh(w) + sinh(w)/w X` (hyperbolic).
pub fn expm2(m: &Matrix2<f64>) -> Matrix2<f64> {
    let half_tr = m.trace() / 2.0;
    let x = m - Matrix2::identity() * half_tr;
    let det = x.determinant();
    let (c, s) = if det > 0.0 {
        let w = det.sqrt();
        (w.cos(), sinc(w))
    } else {
        let w = (-det).sqrt();
        (w.cosh(), sinhc(w))
    };
    (Matrix2::identity() * c + x * s) * half_tr.exp()
}

/// Closed-form exponential of a complex 2x2 matrix: `cosh(mu) + sinh(mu)/mu X`
/// with `mu^2 = -det(X)` for the traceless part `X`.
pub fn expm2_complex(m: &CMatrix2) -> CMatrix2 {
    let half_tr = m.trace() / 2.0;
    let x = m - CMatrix2::identity() * half_tr;
    let mu = (-x.determinant()).sqrt();
    let (c, s) = if mu.norm() < 1e-4 {
        // Taylor: cosh(mu) = 1 + mu^2/2 + mu^4/24, sinh(mu)/mu = 1 + mu^2/6 + mu^4/120
        let m2 = mu * mu;
        (
            Complex64::new(1.0, 0.0) + m2 / 2.0 + m2 * m2 / 24.0,
            Complex64::new(1.0, 0.0) + m2 / 6.0 + m2 * m2 / 120.0,
        )
    } else {
        (mu.cosh(), mu.sinh() / mu)
    };
    (CMatrix2::identity() * c + x * s) * half_tr.exp()
}

fn sinc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        1.0 - w * w / 6.0
    } else {
        w.sin() / w
    }
}

fn sinhc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        1.0 + w * w / 6.0
    } else {
        w.sinh() / w
    }
}

pub fn complexify(m: &Matrix2<f64>) -> CMatrix2 {
    m.map(|v| Complex64::new(v, 0.0))
}

/// `min(|A - B|_max, |A + B|_max)` for complex matrices.
pub fn projective_residual_complex(a: &CMatrix2, b: &CMatrix2) -> f64 {
    let max_abs = |m: CMatrix2| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    max_abs(a - b).min(max_abs(a + b))
}

/// The five distinguished generators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LieBasis {
    pub h: Matrix2<f64>,
    pub hprime: Matrix2<f64>,
    pub l0: Matrix2<f64>,
    pub k1: Matrix2<f64>,
    pub k2: Matrix2<f64>,
}

impl Default for LieBasis {
    fn default() -> Self {
        Self::standard()
    }
}

impl LieBasis {
    pub fn standard() -> Self {
        let h = Matrix2::new(0.0, 1.0, 0.0, 0.0);
        let hprime = Matrix2::new(0.0, 0.0, -1.0, 0.0);
        Self {
            h,
            hprime,
            l0: (h + hprime) / 2.0,
            k1: Matrix2::new(0.5, 0.0, 0.0, -0.5),
            k2: (h - hprime) / 2.0,
        }
    }
}

/// Real bracket `[a, b] = ab - ba`.
pub fn bracket(a: &Matrix2<f64>, b: &Matrix2<f64>) -> Matrix2<f64> {
    a * b - b * a
}

/// `<e_0, U(g) e_0>` in the lowest-weight representation of weight `alpha`, for
/// `g` in a neighbourhood of the identity of SL(2, C).
///
/// In the disc model the lowest-weight vector is the constant function and
/// `U(g)` multiplies it by `c(g)^{-2 alpha}`, where `c(g)` is the lower-right
/// entry of `g` conjugated by the Cayley transform.
pub fn vacuum_coefficient(g: &CMatrix2, alpha: f64) -> Complex64 {
    let i = Complex64::i();
    let c = ((g[(0, 0)] + g[(1, 1)]) - i * (g[(0, 1)] - g[(1, 0)])) / 2.0;
    c.powf(-2.0 * alpha)
}

fn two_by_two_report(name: &str, params: &[(&str, f64)], residual: f64) -> VerificationReport {
    let mut r = VerificationReport::new(name, 2, GROUP_TOLERANCE);
    for (k, v) in params {
        r.set_parameter(k, *v);
    }
    r.push_residual(2, residual);
    r.finish()
}

/// Tolerance for all 2x2 identity checks.
pub const GROUP_TOLERANCE: f64 = 1e-10;

/// Conjugating the `k2`-flow by the `k1`-flow:
/// `exp(-2 pi t k1) exp(2 pi s k2) exp(2 pi t k1) = exp(2 pi s (cosh(2 pi t) k2 - sinh(2 pi t) l0))`.
pub fn verify_bch_identity(s: f64, t: f64) -> VerificationReport {
    let b = LieBasis::standard();
    let tau = 2.0 * std::f64::consts::PI * t;
    let sigma = 2.0 * std::f64::consts::PI * s;
    let lhs = expm2(&(-tau * b.k1)) * expm2(&(sigma * b.k2)) * expm2(&(tau * b.k1));
    // cosh k2 - sinh l0, regrouped so the large-t cancellation never happens
    let generator = 0.5 * ((-tau).exp() * (b.k2 + b.l0) + tau.exp() * (b.k2 - b.l0));
    let rhs = expm2(&(sigma * generator));
    // entries grow like e^{2 pi (|s| + 2|t|)}, so the residual is taken relative to that scale
    let scale = lhs.abs().max().max(1.0);
    two_by_two_report(
        "bch",
        &[("s", s), ("t", t)],
        crate::moebius::projective_residual(&lhs, &rhs) / scale,
    )
}

/// Infinitesimal form: `Ad(exp(-2 pi t k1)) k2 = cosh(2 pi t) k2 - sinh(2 pi t) l0`.
pub fn verify_adjoint_action(t: f64) -> VerificationReport {
    let b = LieBasis::standard();
    let tau = 2.0 * std::f64::consts::PI * t;
    let g = expm2(&(-tau * b.k1));
    let ginv = expm2(&(tau * b.k1));
    let lhs = g * b.k2 * ginv;
    let rhs = tau.cosh() * b.k2 - tau.sinh() * b.l0;
    two_by_two_report("adjoint_action", &[("t", t)], (lhs - rhs).abs().max())
}

/// Rotation by `2s` as a product of three unipotents:
/// `exp(2s l0) = exp(tan(s/2) h) exp(sin(s) h') exp(tan(s/2) h)`.
///
/// Fails with [`Error::ParameterAtSingularity`] at odd multiples of `pi`,
/// where `tan(s/2)` has a pole.
pub fn verify_rotation_factorization(s: f64) -> Result<VerificationReport> {
    let half = s / 2.0;
    if half.cos().abs() < 1e-8 {
        return Err(Error::ParameterAtSingularity { value: s });
    }
    let b = LieBasis::standard();
    let tau = half.tan();
    let lhs = expm2(&(2.0 * s * b.l0));
    let rhs = expm2(&(tau * b.h)) * expm2(&(s.sin() * b.hprime)) * expm2(&(tau * b.h));
    Ok(two_by_two_report(
        "rotation",
        &[("s", s)],
        crate::moebius::projective_residual(&lhs, &rhs),
    ))
}

/// Group form of `e^{-i pi L0} = e^{iH} e^{iH'} e^{iH}`:
/// `exp(-pi l0) = ± exp(h) exp(h') exp(h)`.
pub fn verify_half_turn() -> VerificationReport {
    let b = LieBasis::standard();
    let lhs = expm2(&(-std::f64::consts::PI * b.l0));
    let rhs = expm2(&b.h) * expm2(&b.hprime) * expm2(&b.h);
    two_by_two_report(
        "half_turn",
        &[],
        crate::moebius::projective_residual(&lhs, &rhs),
    )
}

/// `e^{-2sL0} = e^{-tanh(s/2) H} e^{-sinh(s) H'} e^{-tanh(s/2) H}` in SL(2, C),
/// with `e^{-aX}` read as `exp(i a x)`.
pub fn verify_euclidean_factorization(s: f64) -> VerificationReport {
    let b = LieBasis::standard();
    let i = Complex64::i();
    let tau = (s / 2.0).tanh();
    let lhs = expm2_complex(&(complexify(&b.l0) * (i * 2.0 * s)));
    let eh = expm2_complex(&(complexify(&b.h) * (i * tau)));
    let ehp = expm2_complex(&(complexify(&b.hprime) * (i * s.sinh())));
    let rhs = eh * ehp * eh;
    two_by_two_report(
        "euclidean",
        &[("s", s)],
        projective_residual_complex(&lhs, &rhs),
    )
}
