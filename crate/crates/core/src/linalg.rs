//! Dense symmetric helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// `(A + A^T) / 2`, to wash out round-off asymmetry before an eigensolve.
pub fn symmetrize(a: &DMatrix<f64>) -> DMatrix<f64> {
    (a + a.transpose()) * 0.5
}

/// Eigen-decomposition of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymEig {
    pub values: DVector<f64>,
    pub vectors: DMatrix<f64>,
}

impl SymEig {
    pub fn new(a: &DMatrix<f64>) -> Self {
        let e = SymmetricEigen::new(symmetrize(a));
        Self {
            values: e.eigenvalues,
            vectors: e.eigenvectors,
        }
    }

    /// `V f(D) V^T`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        let mut scaled = self.vectors.clone();
        for (j, &w) in self.values.iter().enumerate() {
            let fw = f(w);
            scaled.column_mut(j).scale_mut(fw);
        }
        &scaled * self.vectors.transpose()
    }

    /// `exp(t A)`.
    pub fn exp(&self, t: f64) -> DMatrix<f64> {
        self.apply_fn(|w| (t * w).exp())
    }

    pub fn min(&self) -> f64 {
        self.values.min()
    }

    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }
}

/// `exp(t A)` for symmetric `A`.
pub fn expm_sym(a: &DMatrix<f64>, t: f64) -> DMatrix<f64> {
    SymEig::new(a).exp(t)
}

/// Leading `m x m` block.
pub fn leading_block(a: &DMatrix<f64>, m: usize) -> DMatrix<f64> {
    a.view((0, 0), (m, m)).into_owned()
}

pub fn max_abs(a: &DMatrix<f64>) -> f64 {
    a.iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Smallest eigenvalue of the (symmetrized) leading block.
pub fn block_min_eigenvalue(a: &DMatrix<f64>, m: usize) -> f64 {
    SymEig::new(&leading_block(a, m)).min()
}

pub fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

/// `Tr sqrt(P)` of a positive semidefinite matrix, dropping eigenvalues below
/// `10 eps |P|` that round-off may have pushed negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootTrace {
    pub value: f64,
    pub dropped_count: usize,
    /// Sum of `sqrt(|w|)` over the dropped eigenvalues.
    pub dropped_mass: f64,
}

pub fn root_trace(p: &DMatrix<f64>) -> RootTrace {
    let eig = SymEig::new(p);
    let scale = eig.values.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    let threshold = 10.0 * f64::EPSILON * scale;
    let mut value = 0.0;
    let mut dropped_count = 0;
    let mut dropped_mass = 0.0;
    for &w in eig.values.iter() {
        if w > threshold {
            value += w.sqrt();
        } else {
            dropped_count += 1;
            dropped_mass += w.abs().sqrt();
        }
    }
    RootTrace {
        value,
        dropped_count,
        dropped_mass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_diagonal() {
        let a = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, -2.0, 0.5]));
        let e = expm_sym(&a, 0.5);
        assert!((e[(0, 0)] - 0.5f64.exp()).abs() < 1e-15);
        assert!((e[(1, 1)] - (-1.0f64).exp()).abs() < 1e-15);
        assert!(e[(0, 1)].abs() < 1e-15);
    }

    #[test]
    fn exp_matches_series_for_rotation_generator_square() {
        // A = [[0,1],[1,0]] has exp(tA) = cosh t + sinh t A
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let e = expm_sym(&a, 0.7);
        assert!((e[(0, 0)] - 0.7f64.cosh()).abs() < 1e-14);
        assert!((e[(0, 1)] - 0.7f64.sinh()).abs() < 1e-14);
    }

    #[test]
    fn root_trace_of_square() {
        let b = DMatrix::from_row_slice(3, 3, &[2.0, 1.0, 0.0, 1.0, 3.0, 0.5, 0.0, 0.5, 1.0]);
        let p = &b * &b;
        let rt = root_trace(&p);
        assert!((rt.value - b.trace()).abs() < 1e-12);
        assert_eq!(rt.dropped_count, 0);
    }

    #[test]
    fn root_trace_drops_round_off_negatives() {
        let p = DMatrix::from_diagonal(&DVector::from_vec(vec![4.0, -1e-17, 1.0]));
        let rt = root_trace(&p);
        assert_eq!(rt.value, 3.0);
        assert_eq!(rt.dropped_count, 1);
    }
}
