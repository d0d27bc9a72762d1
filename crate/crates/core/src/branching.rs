//! Restriction of the massless scalar field's conformal representation to the
//! Moebius group: monomial counts, branching multiplicities and the resulting
//! partition functions.
//!
//! In `d` odd space dimensions the one-particle space splits into lowest-weight
//! representations of weight `j + (d-1)/2`, `j >= 0`, the weight-`j` summand
//! appearing `m_{d-1}(j-1) + m_{d-1}(j)` times, where `m_d(k)` counts
//! monomials of degree `k` in `d` variables. This is the dimension of the
//! degree-`j` spherical harmonics on the `(d-1)`-sphere.

use serde::Serialize;

use crate::characters::{
    character_series, fock_log_trace, MultiplicitySpectrum, SeriesSum, SpectrumEntry, TailRule,
};
use crate::error::{require_positive, Error, Result};

fn check_dimension(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::BadDimension(d))
    } else if d.is_multiple_of(2) {
        Err(Error::EvenDimensionUnsupported(d))
    } else {
        Ok(())
    }
}

/// Rows `m_1, ..., m_d` of monomial counts for degrees `0..=kmax`, by the
/// prefix-sum recursion `m_d(k) = sum_{h <= k} m_{d-1}(h)`, `m_1 = 1`.
pub fn monomial_table(d: u32, kmax: u64) -> Result<Vec<Vec<u128>>> {
    if d == 0 {
        return Err(Error::BadDimension(d));
    }
    let len = kmax as usize + 1;
    let mut rows = vec![vec![1u128; len]];
    for dim in 2..=d {
        let prev = rows.last().expect("at least one row");
        let mut row = Vec::with_capacity(len);
        let mut acc: u128 = 0;
        for &v in prev {
            acc = acc
                .checked_add(v)
                .ok_or_else(|| Error::Overflow(format!("m_{dim}")))?;
            row.push(acc);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `m_d(k)`, the number of monomials of degree `k` in `d` variables.
pub fn monomial_count(d: u32, k: u64) -> Result<u128> {
    Ok(monomial_table(d, k)?[d as usize - 1][k as usize])
}

/// `binomial(n, k)` with overflow checking.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::Overflow(format!("binomial({n}, {k})")))?
            / (i + 1) as u128;
    }
    Ok(acc)
}

/// Multiplicity of the weight-`weight` summand in dimension `d`.
///
/// Weights not of the form `j + (d-1)/2` with `j >= 0` have multiplicity zero.
/// For `d = 1` the spectrum is two copies of weight one.
pub fn branching_multiplicity(d: u32, weight: f64) -> Result<u128> {
    check_dimension(d)?;
    if d == 1 {
        return Ok(if weight == 1.0 { 2 } else { 0 });
    }
    let j = weight - (d as f64 - 1.0) / 2.0;
    if j < 0.0 || j.fract() != 0.0 {
        return Ok(0);
    }
    multiplicity_at(d, j as u64)
}

/// `m_{d-1}(j-1) + m_{d-1}(j)` for odd `d >= 3`.
fn multiplicity_at(d: u32, j: u64) -> Result<u128> {
    let m = |k: u64| binomial(k + d as u64 - 2, d as u64 - 2);
    let below = if j == 0 { 0 } else { m(j - 1)? };
    below
        .checked_add(m(j)?)
        .ok_or_else(|| Error::Overflow(format!("N_{d}")))
}

/// The one-particle spectrum as a [`MultiplicitySpectrum`].
pub fn free_field_spectrum(d: u32) -> Result<MultiplicitySpectrum> {
    check_dimension(d)?;
    if d == 1 {
        return Ok(MultiplicitySpectrum {
            entries: vec![SpectrumEntry {
                weight: 1.0,
                multiplicity: 2,
            }],
            tail_rule: None,
        });
    }
    Ok(MultiplicitySpectrum::with_tail(TailRule::FreeField { d }))
}

/// One row of the branching table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BranchRow {
    pub d: u32,
    pub k: u64,
    pub weight: u64,
    pub monomials: u128,
    pub multiplicity: u128,
}

/// `(d, k, m_d(k), N_d(k + (d-1)/2))` for `k = 0..=kmax`; weights are
/// integers because `d` is odd.
pub fn branching_table(d: u32, kmax: u64) -> Result<Vec<BranchRow>> {
    check_dimension(d)?;
    let m = monomial_table(d, kmax)?;
    (0..=kmax)
        .map(|k| {
            let multiplicity = if d == 1 {
                if k == 0 {
                    2
                } else {
                    0
                }
            } else {
                multiplicity_at(d, k)?
            };
            let weight = if d == 1 {
                1 + k
            } else {
                k + (d as u64 - 1) / 2
            };
            Ok(BranchRow {
                d,
                k,
                weight,
                monomials: m[d as usize - 1][k as usize],
                multiplicity,
            })
        })
        .collect()
}

/// `cosh(s/2) / (4 sinh(s/2)^3)`, the `d = 3` partition function.
pub fn d3_closed_form(s: f64) -> f64 {
    let h = s / 2.0;
    h.cosh() / (4.0 * h.sinh().powi(3))
}

/// `e^{-s(d-1)/2} (1 + e^{-s}) / (1 - e^{-s})^d` for odd `d >= 3`, `2 e^{-s} / (1 - e^{-s})` for `d = 1`.
pub fn free_field_closed_form(d: u32, s: f64) -> Result<f64> {
    check_dimension(d)?;
    let s = require_positive("s", s)?;
    let x = (-s).exp();
    let om = -(-s).exp_m1();
    Ok(if d == 1 {
        2.0 * x / om
    } else {
        (-s * (d as f64 - 1.0) / 2.0).exp() * (1.0 + x) / om.powi(d as i32)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartitionValue {
    pub d: u32,
    pub s: f64,
    /// Term-wise sum with certified tail.
    pub series: SeriesSum,
    pub closed_form: f64,
    pub relative_difference: f64,
}

/// `Tr(e^{-s L0})` on the one-particle space, summed term by term and
/// cross-checked against the closed form.
pub fn free_field_partition(d: u32, s: f64) -> Result<PartitionValue> {
    let spec = free_field_spectrum(d)?;
    let series = character_series(&spec, s)?;
    let closed_form = free_field_closed_form(d, s)?;
    Ok(PartitionValue {
        d,
        s,
        series,
        closed_form,
        relative_difference: (series.value - closed_form).abs() / closed_form,
    })
}

/// Riemann zeta at an integer `n >= 2`, by partial sum plus Euler-Maclaurin tail.
pub fn zeta(n: u32) -> f64 {
    const K: u32 = 1000;
    let nf = n as f64;
    let head: f64 = (1..K).rev().map(|k| (k as f64).powf(-nf)).sum();
    let kf = K as f64;
    head + kf.powf(1.0 - nf) / (nf - 1.0) + 0.5 * kf.powf(-nf) + nf / 12.0 * kf.powf(-nf - 1.0)
}

/// Trace-norm data for the concentric double cones `O_1 ⋐ O_r`, which sit at
/// inner distance `log r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DoubleConeNorm {
    pub d: u32,
    pub r: f64,
    pub s: f64,
    /// `Tr(e^{-s L0})` on the one-particle space.
    pub one_particle_trace: f64,
    /// `2 / s^d`
    pub one_particle_asymptotic: f64,
    /// `log Tr(e^{-s L0})` on the Fock space.
    pub fock_log_trace: f64,
    /// `2 zeta(d + 1) / s^d`
    pub fock_log_asymptotic: f64,
}

pub fn l2_nuclearity_double_cone(r: f64, d: u32) -> Result<DoubleConeNorm> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(Error::RadiusNotGreaterThanOne(r));
    }
    check_dimension(d)?;
    let s = r.ln();
    let spec = free_field_spectrum(d)?;
    let one_particle_trace = free_field_closed_form(d, s)?;
    let sd = s.powi(d as i32);
    Ok(DoubleConeNorm {
        d,
        r,
        s,
        one_particle_trace,
        one_particle_asymptotic: 2.0 / sd,
        fock_log_trace: fock_log_trace(&spec, s)?,
        fock_log_asymptotic: 2.0 * zeta(d + 1) / sd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_monomial_counts() {
        for k in 0..=10 {
            assert_eq!(monomial_count(1, k).unwrap(), 1);
            assert_eq!(monomial_count(2, k).unwrap(), k as u128 + 1);
        }
        assert_eq!(monomial_count(3, 5).unwrap(), 21);
        assert_eq!(monomial_count(0, 1), Err(Error::BadDimension(0)));
    }

    #[test]
    fn monomials_are_binomials() {
        for d in 1..=8u32 {
            let table = monomial_table(d, 1000).unwrap();
            for k in 0..=1000u64 {
                assert_eq!(
                    table[d as usize - 1][k as usize],
                    binomial(k + d as u64 - 1, d as u64 - 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn harmonic_dimension_identity() {
        for d in 2..=8u32 {
            let t = monomial_table(d, 1000).unwrap();
            let (md, mdm1) = (&t[d as usize - 1], &t[d as usize - 2]);
            for k in 0..=1000usize {
                let lhs = md[k] - if k >= 2 { md[k - 2] } else { 0 };
                let rhs = mdm1[k] + if k >= 1 { mdm1[k - 1] } else { 0 };
                assert_eq!(lhs, rhs, "d={d} k={k}");
            }
        }
    }

    #[test]
    fn three_dimensional_multiplicities() {
        for k in 1..=1000u64 {
            assert_eq!(
                branching_multiplicity(3, k as f64).unwrap(),
                2 * k as u128 - 1
            );
        }
        assert_eq!(branching_multiplicity(3, 0.5).unwrap(), 0);
        assert_eq!(branching_multiplicity(5, 5.0).unwrap(), 30);
        assert_eq!(
            branching_multiplicity(4, 2.0),
            Err(Error::EvenDimensionUnsupported(4))
        );
        assert_eq!(branching_multiplicity(1, 1.0).unwrap(), 2);
    }

    #[test]
    fn growth_in_five_dimensions() {
        let k = 10_000u64;
        let n = branching_multiplicity(5, (k + 2) as f64).unwrap() as f64;
        let asym = 2.0 * (k as f64).powi(3) / 6.0;
        assert!((n / asym - 1.0).abs() < 0.01);
    }

    #[test]
    fn spectra() {
        let s = free_field_spectrum(1).unwrap();
        assert_eq!(
            s.entries,
            vec![SpectrumEntry {
                weight: 1.0,
                multiplicity: 2
            }]
        );
        assert!(free_field_spectrum(2).is_err());
        let t = branching_table(3, 3).unwrap();
        let mults: Vec<u128> = t.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![1, 3, 5, 7]);
    }

    #[test]
    fn d3_partition_closed_form() {
        let p = free_field_partition(3, 1.0).unwrap();
        assert_relative_eq!(p.closed_form, d3_closed_form(1.0), max_relative = 1e-14);
        assert_relative_eq!(p.closed_form, 1.9922947671249869, max_relative = 1e-14);
        assert!(p.relative_difference < 1e-12);
        let small = free_field_closed_form(3, 1e-3).unwrap();
        assert!((small / 2e9 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn zeta_values() {
        assert_relative_eq!(
            zeta(2),
            std::f64::consts::PI.powi(2) / 6.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            zeta(4),
            std::f64::consts::PI.powi(4) / 90.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn double_cone() {
        let e = l2_nuclearity_double_cone(std::f64::consts::E, 3).unwrap();
        assert_relative_eq!(
            e.one_particle_trace,
            d3_closed_form(1.0),
            max_relative = 1e-14
        );
        let near = l2_nuclearity_double_cone(1.01, 3).unwrap();
        assert!((near.one_particle_trace / near.one_particle_asymptotic - 1.0).abs() < 0.01);
        assert!(
            l2_nuclearity_double_cone(1e6, 3)
                .unwrap()
                .one_particle_trace
                < 1e-5
        );
        assert_eq!(
            l2_nuclearity_double_cone(1.0, 3),
            Err(Error::RadiusNotGreaterThanOne(1.0))
        );
    }
}
