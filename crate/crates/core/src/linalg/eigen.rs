//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair (p, q) once and applies the plane
//! rotation that annihilates `a[p][q]`. Iteration stops once the off-diagonal
//! Frobenius norm falls below `OFF_DIAGONAL_TOL * max(‖M‖_F, f64::MIN_POSITIVE)`;
//! by Weyl's inequality the diagonal then matches the eigenvalues to within
//! that norm, well inside the 1e-10·max(1, ‖M‖_F) accuracy contract.

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;

/// Relative off-diagonal threshold for convergence.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Sweeps before the solver gives up with [`Error::NonConvergence`].
pub const MAX_SWEEPS: usize = 100;

pub(crate) struct Decomposition {
    /// Unsorted eigenvalues.
    pub values: Vec<f64>,
    /// Column-major eigenvectors, `vectors[j]` pairs with `values[j]`.
    pub vectors: Option<Vec<Vec<f64>>>,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

pub(crate) fn jacobi(m: &SymMatrix, want_vectors: bool) -> Result<Decomposition> {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    let scale = m.frobenius().max(f64::MIN_POSITIVE);
    let threshold = OFF_DIAGONAL_TOL * scale;

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    let vectors = v.map(|v| (0..n).map(|j| (0..n).map(|k| v[k * n + j]).collect()).collect());
    Ok(Decomposition { values, vectors })
}
