//! Truncated matrices of the lowest-weight representations `U^(alpha)` and the
//! operator identities, inequalities and deformations checked on them.
//!
//! The basis is `e_n`, `n = 0..N-1`, with `L0 e_n = (alpha + n) e_n`. Truncation
//! corrupts only the last rows and columns, so every check compares a leading
//! block and reports how the residual behaves as `N` grows.
//!
//! `K1` has purely imaginary matrix elements. It is stored as the real
//! antisymmetric matrix `A` with `K1 = iA`, and the real Lie algebra acts by
//! `rho(k1) = -A`, `rho(x) = iX` for `x` in `{l0, k2, h, h'}`.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::geometry::symmetric_subinterval;
use crate::linalg::{
    block_min_eigenvalue, commutator, expm_sym, leading_block, max_abs, root_trace, SymEig,
};
use crate::report::VerificationReport;

pub const MIN_DIM: usize = 8;

/// Generators of `U^(alpha)` truncated to `N x N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub alpha: f64,
    pub dim: usize,
    pub l0: DMatrix<f64>,
    pub lplus: DMatrix<f64>,
    pub lminus: DMatrix<f64>,
    pub h: DMatrix<f64>,
    pub hprime: DMatrix<f64>,
    /// Antisymmetric representative `A = (L- - L+) / 2` of `K1 = iA`.
    pub k1: DMatrix<f64>,
    pub k2: DMatrix<f64>,
}

impl GeneratorSet {
    pub fn build(alpha: f64, n: usize) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::BadWeight(alpha));
        }
        if n < MIN_DIM {
            return Err(Error::TooSmall {
                dim: n,
                min: MIN_DIM,
            });
        }
        let l0 = DMatrix::from_diagonal(&DVector::from_fn(n, |i, _| alpha + i as f64));
        let mut lplus = DMatrix::zeros(n, n);
        for k in 0..n - 1 {
            let kf = k as f64;
            lplus[(k + 1, k)] = ((kf + 1.0) * (kf + 2.0 * alpha)).sqrt();
        }
        let lminus = lplus.transpose();
        let k2 = -(&lplus + &lminus) * 0.5;
        let h = &l0 + &k2;
        let hprime = &l0 - &k2;
        let k1 = (&lminus - &lplus) * 0.5;
        Ok(Self {
            alpha,
            dim: n,
            l0,
            lplus,
            lminus,
            h,
            hprime,
            k1,
            k2,
        })
    }

    /// Max-abs commutator defects on the leading `m x m` block:
    /// `[L0, L+] - L+` and `[L+, L-] + 2 L0`.
    pub fn commutator_residuals(&self, m: usize) -> (f64, f64) {
        let c1 = commutator(&self.l0, &self.lplus) - &self.lplus;
        let c2 = commutator(&self.lplus, &self.lminus) + &self.l0 * 2.0;
        (
            max_abs(&leading_block(&c1, m)),
            max_abs(&leading_block(&c2, m)),
        )
    }
}

/// Truncation sizes, observed block and pass tolerance for a convergence check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TruncationGrid {
    pub dims: Vec<usize>,
    pub block: usize,
    pub tolerance: f64,
}

impl TruncationGrid {
    pub fn new(mut dims: Vec<usize>, block: usize, tolerance: f64) -> Result<Self> {
        dims.sort_unstable();
        dims.dedup();
        let smallest = *dims.first().ok_or(Error::TooSmall {
            dim: 0,
            min: MIN_DIM,
        })?;
        if smallest < MIN_DIM {
            return Err(Error::TooSmall {
                dim: smallest,
                min: MIN_DIM,
            });
        }
        if block == 0 || 4 * block > smallest {
            return Err(Error::ParameterOutOfRange {
                name: "block",
                value: block as f64,
                range: "[1, min(dims)/4]",
            });
        }
        Ok(Self {
            dims,
            block,
            tolerance,
        })
    }
}

/// Runs `f` for each dimension of the grid in parallel, keeping the order.
fn sweep<T: Send>(
    grid: &TruncationGrid,
    f: impl Fn(usize) -> Result<T> + Sync,
) -> Result<Vec<(usize, T)>> {
    grid.dims
        .par_iter()
        .map(|&n| f(n).map(|v| (n, v)))
        .collect()
}

/// `e^{-aH} e^{-2a'H'} e^{-aH}` on the truncated space.
fn sandwich(g: &GeneratorSet, a: f64, a_prime: f64) -> DMatrix<f64> {
    let eh = expm_sym(&g.h, -a);
    let ehp = expm_sym(&g.hprime, -2.0 * a_prime);
    &eh * ehp * &eh
}

fn diag_exp(g: &GeneratorSet, t: f64) -> DMatrix<f64> {
    DMatrix::from_diagonal(&g.l0.map_diagonal(|x| (t * x).exp()))
}

pub const DEFAULT_IDENTITY_TOLERANCE: f64 = 1e-6;

/// `e^{-2sL0} = e^{-tanh(s/2) H} e^{-sinh(s) H'} e^{-tanh(s/2) H}` on the leading block.
pub fn verify_m1_truncated(
    alpha: f64,
    s: f64,
    grid: &TruncationGrid,
) -> Result<VerificationReport> {
    let s = require_positive("s", s)?;
    let a = (s / 2.0).tanh();
    let a_prime = s.sinh() / 2.0;
    let rows = sweep(grid, |n| {
        let g = GeneratorSet::build(alpha, n)?;
        let diff = sandwich(&g, a, a_prime) - diag_exp(&g, -2.0 * s);
        Ok(max_abs(&leading_block(&diff, grid.block)))
    })?;
    let mut r = VerificationReport::new("m1", grid.block, grid.tolerance);
    r.set_parameter("alpha", alpha);
    r.set_parameter("s", s);
    for (n, res) in rows {
        r.push_residual(n, res);
    }
    Ok(r.finish())
}

/// Golden-Thompson slack `Tr(e^{-aH} e^{-2a'H'} e^{-aH}) - Tr(e^{-2aH - 2a'H'})`,
/// on the leading block and on the whole truncated space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenThompsonSlack {
    pub block: f64,
    pub full: f64,
}

pub fn golden_thompson_slack(
    g: &GeneratorSet,
    a: f64,
    a_prime: f64,
    block: usize,
) -> GoldenThompsonSlack {
    let p = sandwich(g, a, a_prime);
    let q = expm_sym(&(&g.h * (2.0 * a) + &g.hprime * (2.0 * a_prime)), -1.0);
    GoldenThompsonSlack {
        block: leading_block(&p, block).trace() - leading_block(&q, block).trace(),
        full: p.trace() - q.trace(),
    }
}

/// The two T-factorizations agree: with `(a, a')` from the symmetric
/// subinterval at inner distance `s`, `e^{-aH} e^{-2a'H'} e^{-aH} = e^{-2sL0}`.
/// The Golden-Thompson slack of every instance is attached as a diagnostic.
pub fn verify_t2_equals_t1(
    alpha: f64,
    s: f64,
    grid: &TruncationGrid,
) -> Result<VerificationReport> {
    let sub = symmetric_subinterval(s)?;
    let rows = sweep(grid, |n| {
        let g = GeneratorSet::build(alpha, n)?;
        let diff = sandwich(&g, sub.a, sub.a_prime) - diag_exp(&g, -2.0 * s);
        let gt = golden_thompson_slack(&g, sub.a, sub.a_prime, grid.block);
        Ok((max_abs(&leading_block(&diff, grid.block)), gt))
    })?;
    let mut r = VerificationReport::new("t2", grid.block, grid.tolerance);
    r.set_parameter("alpha", alpha);
    r.set_parameter("s", s);
    r.set_parameter("a", sub.a);
    r.set_parameter("a_prime", sub.a_prime);
    let mut slacks = Vec::new();
    for (n, (res, gt)) in rows {
        r.push_residual(n, res);
        slacks.push(gt);
    }
    r.set_diagnostic("golden_thompson_slack", &slacks);
    Ok(r.finish())
}

/// Trace norm of the truncated `T` with `a = a' = t`, and its closed-form limit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NuclearNorm {
    pub alpha: f64,
    pub t: f64,
    pub dim: usize,
    pub value: f64,
    /// `sum_n e^{-2 asinh(t) (alpha + n)}`
    pub target: f64,
    pub relative_error: f64,
    pub dropped_count: usize,
    pub dropped_mass: f64,
}

/// `Tr sqrt(e^{-tH} e^{-2tH'} e^{-tH})`.
pub fn nuclear_norm_of_t(alpha: f64, t: f64, n: usize) -> Result<NuclearNorm> {
    let t = require_positive("t", t)?;
    let g = GeneratorSet::build(alpha, n)?;
    let rt = root_trace(&sandwich(&g, t, t));
    let s = 2.0 * t.asinh();
    let target = (-s * alpha).exp() / -(-s).exp_m1();
    Ok(NuclearNorm {
        alpha,
        t,
        dim: n,
        value: rt.value,
        target,
        relative_error: (rt.value - target).abs() / target,
        dropped_count: rt.dropped_count,
        dropped_mass: rt.dropped_mass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// `e^{-2sL0} <= e^{-2 tanh(s/2) H}`
    M2,
    /// `|e^{-tan(2 pi lambda) d H} e^{2 pi lambda K2} xi| <= |xi|` for `I = (-1, 1)`, `d = 2`
    KdcVector,
    /// `K2 <= 2 H`
    KoBound,
}

impl Inequality {
    pub fn name(self) -> &'static str {
        match self {
            Inequality::M2 => "m2",
            Inequality::KdcVector => "kdc",
            Inequality::KoBound => "ko",
        }
    }
}

/// Length of `(-1, 1)`, the interval whose modular group is generated by `K2`.
const D_RIGHT_HALF: f64 = 2.0;

/// Checks one of the operator inequalities. The residual is the size of the
/// violation (zero when the inequality holds); the signed margins are kept as
/// a diagnostic. `param` is `s` for `M2`, `lambda` for `KdcVector`, and unused
/// for `KoBound`.
pub fn verify_operator_inequality(
    alpha: f64,
    param: f64,
    grid: &TruncationGrid,
    which: Inequality,
) -> Result<VerificationReport> {
    match which {
        Inequality::M2 => {
            require_positive("s", param)?;
        }
        Inequality::KdcVector => {
            if !(param > 0.0 && param < 0.25) {
                return Err(Error::ParameterOutOfRange {
                    name: "lambda",
                    value: param,
                    range: "(0, 1/4)",
                });
            }
        }
        Inequality::KoBound => {}
    }
    let block = grid.block;
    let rows = sweep(grid, |n| {
        let g = GeneratorSet::build(alpha, n)?;
        match which {
            Inequality::M2 => {
                let d = expm_sym(&g.h, -2.0 * (param / 2.0).tanh()) - diag_exp(&g, -2.0 * param);
                Ok(block_min_eigenvalue(&d, block))
            }
            Inequality::KoBound => {
                let d = &g.h * D_RIGHT_HALF - &g.k2;
                Ok(block_min_eigenvalue(&d, block))
            }
            Inequality::KdcVector => kdc_margin(&g, param, block),
        }
    })?;
    let mut r = VerificationReport::new(which.name(), block, grid.tolerance);
    r.set_parameter("alpha", alpha);
    match which {
        Inequality::M2 => r.set_parameter("s", param),
        Inequality::KdcVector => r.set_parameter("lambda", param),
        Inequality::KoBound => r.set_parameter("d", D_RIGHT_HALF),
    }
    let mut margins = Vec::new();
    for (n, margin) in rows {
        r.push_residual(n, (-margin).max(0.0));
        margins.push(margin);
    }
    r.set_diagnostic("margins", &margins);
    Ok(r.finish())
}

/// `1 - max_j |e^{-tan(2 pi lambda) d H} e^{2 pi lambda K2} e_j|` over `j < block`.
fn kdc_margin(g: &GeneratorSet, lambda: f64, block: usize) -> Result<f64> {
    let theta = 2.0 * std::f64::consts::PI * lambda;
    let damp = expm_sym(&g.h, -(theta.tan() * D_RIGHT_HALF));
    let mut worst: f64 = 0.0;
    for j in 0..block {
        let mut xi = DVector::zeros(g.dim);
        xi[j] = 1.0;
        let v = exp_action_series(&g.k2, &xi, theta)?;
        worst = worst.max((&damp * v).norm());
    }
    Ok(1.0 - worst)
}

/// `e^{theta A} xi` by its Taylor series.
///
/// `e^{theta K2}` is unbounded, and exponentiating the truncated `K2` through
/// its spectrum is dominated by the boundary eigenvalues. On vectors of low
/// weight the series instead converges like the analytic continuation.
pub fn exp_action_series(a: &DMatrix<f64>, xi: &DVector<f64>, theta: f64) -> Result<DVector<f64>> {
    const MAX_TERMS: usize = 50_000;
    let mut term = xi.clone();
    let mut sum = xi.clone();
    for k in 1..MAX_TERMS {
        term = (a * &term) * (theta / k as f64);
        sum += &term;
        if !sum.iter().all(|x| x.is_finite()) {
            break;
        }
        if term.norm() <= 1e-17 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence("exp(theta A) xi".into()))
}

/// Result of the deformation `L0 + lambda H^{-1}` of the weight-one representation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlwSpectrum {
    pub alpha_target: f64,
    pub lambda: f64,
    pub dim: usize,
    /// Size of the compression of `H` that is inverted (`N / 2`).
    pub compressed_dim: usize,
    pub eigenvalues: Vec<f64>,
    /// Largest `|mu_i - (alpha + i)|` over the returned eigenvalues.
    pub max_deviation: f64,
    /// Eigenvalues of the compressed `H` below the inversion threshold.
    pub discarded_count: usize,
    pub smallest_retained_h_eigenvalue: f64,
    /// Max-abs of `[L0 + lambda H^-1, K2 - lambda H^-1] - [L0, K2]` on the leading quarter.
    pub commutator_residual: f64,
    /// `<e_0, (L0 - lambda H^-1) e_0>`: with the opposite sign of the
    /// deformation the operator is not bounded below.
    pub opposite_sign_ground_expectation: f64,
}

pub const GLW_INVERSION_THRESHOLD: f64 = 1e-8;

/// Lowest `n_eigs` eigenvalues of `L0 + lambda H^{-1}` built on the `alpha = 1`
/// representation, `lambda = alpha_target (alpha_target - 1) / 2`. They approach
/// `alpha_target, alpha_target + 1, ...`.
///
/// `H^{-1}` is the spectrally regularized inverse of the `N/2` compression of
/// `H`: eigenvalues above [`GLW_INVERSION_THRESHOLD`] are inverted, the rest dropped.
pub fn glw_spectrum(alpha_target: f64, n: usize, n_eigs: usize) -> Result<GlwSpectrum> {
    if !(alpha_target >= 1.0) || !alpha_target.is_finite() {
        return Err(Error::ParameterOutOfRange {
            name: "alpha_target",
            value: alpha_target,
            range: "[1, inf)",
        });
    }
    let g = GeneratorSet::build(1.0, n)?;
    let m = n / 2;
    if n_eigs == 0 || n_eigs > m {
        return Err(Error::ParameterOutOfRange {
            name: "n_eigs",
            value: n_eigs as f64,
            range: "[1, N/2]",
        });
    }
    let lambda = alpha_target * (alpha_target - 1.0) / 2.0;
    let hc = SymEig::new(&leading_block(&g.h, m));
    let discarded_count = hc
        .values
        .iter()
        .filter(|&&w| w <= GLW_INVERSION_THRESHOLD)
        .count();
    if discarded_count == m {
        return Err(Error::SingularH("every eigenvalue below threshold".into()));
    }
    let smallest_retained = hc
        .values
        .iter()
        .copied()
        .filter(|&w| w > GLW_INVERSION_THRESHOLD)
        .fold(f64::INFINITY, f64::min);
    let h_inv = hc.apply_fn(|w| {
        if w > GLW_INVERSION_THRESHOLD {
            1.0 / w
        } else {
            0.0
        }
    });
    if !h_inv.iter().all(|x| x.is_finite()) {
        return Err(Error::SingularH("non-finite regularized inverse".into()));
    }
    let l0c = leading_block(&g.l0, m);
    let k2c = leading_block(&g.k2, m);
    let deformed = &l0c + &h_inv * lambda;
    let deformed_k2 = &k2c - &h_inv * lambda;
    let quarter = m / 2;
    let comm = commutator(&deformed, &deformed_k2) - commutator(&l0c, &k2c);
    let commutator_residual = max_abs(&leading_block(&comm, quarter));

    let eigenvalues: Vec<f64> = SymEig::new(&deformed)
        .sorted_values()
        .into_iter()
        .take(n_eigs)
        .collect();
    let max_deviation = eigenvalues
        .iter()
        .enumerate()
        .map(|(i, mu)| (mu - (alpha_target + i as f64)).abs())
        .fold(0.0, f64::max);
    Ok(GlwSpectrum {
        alpha_target,
        lambda,
        dim: n,
        compressed_dim: m,
        eigenvalues,
        max_deviation,
        discarded_count,
        smallest_retained_h_eigenvalue: smallest_retained,
        commutator_residual,
        opposite_sign_ground_expectation: l0c[(0, 0)] - lambda * h_inv[(0, 0)],
    })
}

/// Convergence report for [`glw_spectrum`] over a grid of `N`.
pub fn verify_glw(
    alpha_target: f64,
    n_eigs: usize,
    grid: &TruncationGrid,
) -> Result<VerificationReport> {
    let rows = sweep(grid, |n| glw_spectrum(alpha_target, n, n_eigs))?;
    let mut r = VerificationReport::new("glw", n_eigs, grid.tolerance);
    r.set_parameter("alpha", alpha_target);
    r.set_parameter("lambda", alpha_target * (alpha_target - 1.0) / 2.0);
    let mut eigs = Vec::new();
    let mut comm = Vec::new();
    for (n, spec) in rows {
        r.push_residual(n, spec.max_deviation);
        comm.push(spec.commutator_residual);
        eigs.push(spec.eigenvalues);
    }
    r.set_diagnostic("eigenvalues", &eigs);
    r.set_diagnostic("commutator_residuals", &comm);
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::{complexify, expm2_complex, vacuum_coefficient, LieBasis};
    use approx::assert_abs_diff_eq;
    use nalgebra::Complex;
    use num_complex::Complex64;

    #[test]
    fn matrix_elements() {
        let g = GeneratorSet::build(1.0, 8).unwrap();
        for i in 0..8 {
            assert_eq!(g.l0[(i, i)], 1.0 + i as f64);
        }
        assert_eq!(g.lplus[(1, 0)], 2f64.sqrt());
        assert_eq!(g.lminus, g.lplus.transpose());
        assert_eq!(&g.h + &g.hprime, &g.l0 * 2.0);
        assert_eq!(&g.h - &g.hprime, &g.k2 * 2.0);
    }

    #[test]
    fn exact_symmetry() {
        let g = GeneratorSet::build(2.5, 40).unwrap();
        for m in [&g.l0, &g.h, &g.hprime, &g.k2] {
            assert_eq!(*m, m.transpose());
        }
        assert_eq!(g.k1, -g.k1.transpose());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            GeneratorSet::build(0.0, 10).unwrap_err(),
            Error::BadWeight(0.0)
        );
        assert_eq!(
            GeneratorSet::build(1.0, 7).unwrap_err(),
            Error::TooSmall { dim: 7, min: 8 }
        );
    }

    #[test]
    fn commutators_on_leading_block() {
        let g = GeneratorSet::build(1.3, 30).unwrap();
        let (a, b) = g.commutator_residuals(28);
        assert!(a <= 1e-10 && b <= 1e-10, "{a} {b}");
        // the truncated corner is where the defect lives
        let c = commutator(&g.lplus, &g.lminus) + &g.l0 * 2.0;
        assert!(c[(29, 29)].abs() > 1.0);
    }

    #[test]
    fn k1_k2_bracket_is_minus_i_l0() {
        // [K1, K2] = i [A, K2] should equal -i L0, i.e. [A, K2] = -L0
        let g = GeneratorSet::build(1.0, 30).unwrap();
        let c = commutator(&g.k1, &g.k2) + &g.l0;
        assert!(max_abs(&leading_block(&c, 28)) < 1e-10);
    }

    fn rho(g: &GeneratorSet) -> [(nalgebra::Matrix2<f64>, DMatrix<Complex64>); 4] {
        let b = LieBasis::standard();
        let i = Complex64::i();
        let c = |m: &DMatrix<f64>| m.map(|x| Complex::new(x, 0.0));
        [
            (b.k1, -c(&g.k1)),
            (b.k2, c(&g.k2) * i),
            (b.l0, c(&g.l0) * i),
            (b.h, c(&g.h) * i),
        ]
    }

    #[test]
    fn lie_homomorphism_with_group_conventions() {
        // rho([x, y]) = [rho(x), rho(y)] on the leading block, where the
        // bracket on the left is expanded in the basis (k1, k2, l0)
        let g = GeneratorSet::build(1.7, 40).unwrap();
        let reps = rho(&g);
        let basis: Vec<_> = reps[..3].iter().collect();
        for (x, rx) in &reps {
            for (y, ry) in &reps {
                let br = crate::sl2::bracket(x, y);
                // br = p k1 + q k2 + r l0 with k1 diagonal, k2 symmetric, l0 antisymmetric
                let p = br[(0, 0)] * 2.0;
                let q = br[(0, 1)] + br[(1, 0)];
                let r = br[(0, 1)] - br[(1, 0)];
                let lhs = &basis[0].1 * Complex::new(p, 0.0)
                    + &basis[1].1 * Complex::new(q, 0.0)
                    + &basis[2].1 * Complex::new(r, 0.0);
                let rhs = rx * ry - ry * rx;
                let d = (lhs - rhs).view((0, 0), (38, 38)).map(|z| z.norm()).max();
                assert!(d < 1e-9, "{d}");
            }
        }
    }

    #[test]
    fn vacuum_matrix_elements_match_group() {
        let alpha = 1.0;
        let g = GeneratorSet::build(alpha, 120).unwrap();
        let b = LieBasis::standard();
        let i = Complex64::i();
        for &phi in &[0.02, 0.05, 0.1] {
            // e^{phi K2} is U(exp(-i phi k2))
            let m = expm_sym(&g.k2, phi)[(0, 0)];
            let z = vacuum_coefficient(&expm2_complex(&(complexify(&b.k2) * (-i * phi))), alpha);
            assert_abs_diff_eq!(m, z.re, epsilon = 1e-6);
            assert_abs_diff_eq!(z.re, (phi / 2.0).cos().powf(-2.0 * alpha), epsilon = 1e-14);
            // e^{-aH} is U(exp(i a h))
            let m = expm_sym(&g.h, -phi)[(0, 0)];
            let z = vacuum_coefficient(&expm2_complex(&(complexify(&b.h) * (i * phi))), alpha);
            assert_abs_diff_eq!(m, z.re, epsilon = 1e-6);
        }
    }

    #[test]
    fn h_is_positive_on_half_block() {
        let g = GeneratorSet::build(1.0, 8).unwrap();
        assert!(block_min_eigenvalue(&g.h, 4) >= -1e-8);
        let g = GeneratorSet::build(1.0, 200).unwrap();
        assert!(block_min_eigenvalue(&g.h, 100) >= -1e-8);
    }

    fn grid(dims: &[usize], block: usize) -> TruncationGrid {
        TruncationGrid::new(dims.to_vec(), block, 1e-6).unwrap()
    }

    #[test]
    fn m1_small_s_and_diagonal_entry() {
        let r = verify_m1_truncated(1.0, 1e-8, &grid(&[40, 60], 10)).unwrap();
        assert!(r.final_residual() <= 1e-12);
        let g = GeneratorSet::build(1.0, 20).unwrap();
        // e^{-2 s alpha} at alpha = 1, s = ln 2
        assert_eq!(diag_exp(&g, -2.0 * 2f64.ln())[(0, 0)], 0.25);
    }

    #[test]
    fn m1_converges() {
        let r = verify_m1_truncated(1.0, 1.0, &grid(&[50, 100], 10)).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn t2_and_golden_thompson() {
        let r = verify_t2_equals_t1(1.0, 0.5, &grid(&[60, 120], 10)).unwrap();
        assert!(r.passed(), "{r:?}");
        let slack: Vec<GoldenThompsonSlack> =
            serde_json::from_value(r.diagnostics["golden_thompson_slack"].clone()).unwrap();
        for s in slack {
            assert!(s.block >= -1e-10 && s.full >= -1e-10);
        }
    }

    #[test]
    fn nuclear_norm_unit_distance() {
        let nn = nuclear_norm_of_t(1.0, 0.5f64.sinh(), 150).unwrap();
        assert_abs_diff_eq!(nn.target, 0.5819767068693265, epsilon = 1e-15);
        assert!(nn.relative_error < 1e-4, "{nn:?}");
        let far = nuclear_norm_of_t(1.0, 20.0, 40).unwrap();
        assert!(far.value < 1e-3);
        assert!(nuclear_norm_of_t(1.0, 0.0, 40).is_err());
    }

    #[test]
    fn inequalities_hold() {
        for (which, p) in [
            (Inequality::M2, 1e-8),
            (Inequality::M2, 1.0),
            (Inequality::KoBound, 0.0),
            (Inequality::KdcVector, 0.125),
        ] {
            let r = verify_operator_inequality(1.0, p, &grid(&[50, 100], 10), which).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(
            verify_operator_inequality(1.0, 0.25, &grid(&[50], 10), Inequality::KdcVector).is_err()
        );
    }

    #[test]
    fn series_exponential_matches_group_on_vacuum() {
        // |e^{theta K2} e_0|^2 = <e_0, e^{2 theta K2} e_0> = cos(theta)^{-2 alpha}
        let g = GeneratorSet::build(1.0, 200).unwrap();
        let mut e0 = DVector::zeros(200);
        e0[0] = 1.0;
        let v = exp_action_series(&g.k2, &e0, 0.6).unwrap();
        assert_abs_diff_eq!(v.norm(), 1.0 / 0.6f64.cos(), epsilon = 1e-10);
    }

    #[test]
    fn glw_trivial_deformation() {
        let s = glw_spectrum(1.0, 40, 5).unwrap();
        assert_eq!(s.lambda, 0.0);
        for (i, mu) in s.eigenvalues.iter().enumerate() {
            assert_abs_diff_eq!(*mu, 1.0 + i as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn glw_weight_two() {
        let s = glw_spectrum(2.0, 200, 5).unwrap();
        assert!(s.max_deviation < 1e-2, "{s:?}");
        assert!(s.commutator_residual < 1e-8, "{s:?}");
        assert!(s.opposite_sign_ground_expectation < 0.0);
        assert!(glw_spectrum(0.5, 100, 5).is_err());
    }
}
