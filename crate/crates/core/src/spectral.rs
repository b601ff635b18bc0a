//! Floating-point eigenvalue helpers.
//!
//! Used only for cross-checks; every certified quantity flows through the
//! exact rational paths instead.

use nalgebra::DMatrix;
use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;

pub fn to_dmatrix(m: &RationalMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.dim(), m.dim(), |i, j| {
        m.get(i, j).to_f64().expect("entry convertible to f64")
    })
}

/// Eigenvalues of a symmetric rational matrix, sorted ascending.
pub fn symmetric_eigenvalues(m: &RationalMatrix) -> Result<Vec<f64>> {
    let dim = m.dim();
    let eigen = nalgebra::SymmetricEigen::try_new(to_dmatrix(m), 1e-13, 10_000)
        .ok_or(Error::EigenSolveFailed(dim))?;
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Laplacian spectrum of the cycle C_m: {2 − 2cos(2πi/m) | 1 ≤ i ≤ m},
/// sorted ascending.
pub fn cycle_spectrum(m: usize) -> Vec<f64> {
    let mut values: Vec<f64> = (1..=m)
        .map(|i| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * i as f64 / m as f64).cos())
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

/// Max absolute elementwise difference between two sorted spectra.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra must have equal length");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
