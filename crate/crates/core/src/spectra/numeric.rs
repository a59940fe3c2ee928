use std::fmt;

use super::multiset::{format_decimal, SpectrumRecord};
use super::Spectrum;
use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::verdict::Verdict;

pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are treated as one repeated eigenvalue.
pub const CLUSTER_WIDTH: f64 = 1e-6;

/// Eigenvalues computed in floating point, clustered into `(value, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NumericSpectrum {
    entries: Vec<(f64, u64)>,
}

impl NumericSpectrum {
    pub fn entries(&self) -> &[(f64, u64)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn records(&self) -> Vec<SpectrumRecord> {
        self.entries
            .iter()
            .map(|&(v, m)| SpectrumRecord { z: None, s: None, value: format_decimal(v), multiplicity: m })
            .collect()
    }
}

impl fmt::Display for NumericSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v:.9}^({m})")?;
        }
        write!(f, "}}")
    }
}

/// Eigenvalues of a symmetric row-major `n×n` matrix by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below `tol`. The
/// result is sorted ascending.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    assert_eq!(matrix.len(), n * n, "matrix has wrong size");
    for i in 0..n {
        for j in (i + 1)..n {
            if matrix[i * n + j] != matrix[j * n + i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a = matrix.to_vec();
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation applied on both sides.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let (app, aqq) = (a[p * n + p], a[q * n + q]);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// Groups sorted values into runs whose consecutive gaps are at most `width`.
///
/// Each run becomes one entry: its mean and its length.
pub fn cluster(sorted: &[f64], width: f64) -> NumericSpectrum {
    let mut entries = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > width {
            if i > start {
                let run = &sorted[start..i];
                entries.push((run.iter().sum::<f64>() / run.len() as f64, run.len() as u64));
            }
            start = i;
        }
    }
    NumericSpectrum { entries }
}

/// Numeric adjacency spectrum of `graph`, clustered at [`CLUSTER_WIDTH`].
pub fn numeric_spectrum<L>(graph: &RegularGraph<L>, tol: f64) -> Result<NumericSpectrum> {
    let n = graph.vertex_count();
    let values = symmetric_eigenvalues(&graph.adjacency_f64(), n, tol)?;
    Ok(cluster(&values, CLUSTER_WIDTH))
}

/// Entry-by-entry comparison in ascending order: multiplicities must agree
/// exactly and values to within `tol`.
pub fn compare_spectra(exact: &Spectrum, numeric: &NumericSpectrum, tol: f64) -> Verdict {
    let mut lhs = exact.iter();
    let mut rhs = numeric.entries.iter();
    for i in 0.. {
        match (lhs.next(), rhs.next()) {
            (None, None) => return Verdict::Pass,
            (Some((v, m)), None) => {
                return Verdict::fail(format!("entry {i}: exact {v}^({m}) has no numeric counterpart"))
            }
            (None, Some((x, l))) => {
                return Verdict::fail(format!("entry {i}: numeric {x:.9}^({l}) has no exact counterpart"))
            }
            (Some((v, m)), Some(&(x, l))) => {
                if m != l {
                    return Verdict::fail(format!(
                        "entry {i}: multiplicity mismatch, exact {v}^({m}) vs numeric {x:.9}^({l})"
                    ));
                }
                let diff = (v.value() - x).abs();
                if !(diff <= tol) {
                    return Verdict::fail(format!(
                        "entry {i}: value mismatch, exact {v} = {:.12} vs numeric {x:.12} (|diff| = {diff:.3e})",
                        v.value()
                    ));
                }
            }
        }
    }
    unreachable!()
}
