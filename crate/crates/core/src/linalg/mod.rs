//! Dense symmetric-matrix kernel.
//!
//! Sign convention: with det(xI − M) = Σ c_k x^k, the elementary symmetric
//! sums of the eigenvalues are Υ_k(M) = (−1)^k c_{n−k}.

mod eigen;
pub mod exact;
mod matrix;
mod spectrum;

use num_bigint::BigInt;
use serde::Serialize;

pub use eigen::{MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use matrix::SymMatrix;
pub use spectrum::Spectrum;

use crate::error::{Error, Result};

/// Relative zero tolerance: |λ| ≤ ZERO_TOL_REL · max(1, ‖M‖_F) counts as zero.
pub const ZERO_TOL_REL: f64 = 1e-8;

/// Largest order accepted by [`principal_minor_sum_oracle`].
pub const ORACLE_MAX_ORDER: usize = 20;

/// A value that is exact on the integer path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Scalar {
    Exact(i128),
    Approx(f64),
}

impl Scalar {
    pub fn to_f64(self) -> f64 {
        match self {
            Scalar::Exact(v) => v as f64,
            Scalar::Approx(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn exact(self) -> Option<i128> {
        match self {
            Scalar::Exact(v) => Some(v),
            Scalar::Approx(_) => None,
        }
    }
}

/// Characteristic polynomial det(xI − M), coefficients ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum CharPoly {
    Exact(Vec<i128>),
    /// Expanded from computed eigenvalues; coefficient `c_{n−k}` carries an
    /// absolute error of order n·ε_eig·Υ_k(|λ|), where ε_eig is the eigenvalue error.
    Approx(Vec<f64>),
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        match self {
            CharPoly::Exact(c) => c.len() - 1,
            CharPoly::Approx(c) => c.len() - 1,
        }
    }

    pub fn coefficient(&self, k: usize) -> Scalar {
        match self {
            CharPoly::Exact(c) => Scalar::Exact(c[k]),
            CharPoly::Approx(c) => Scalar::Approx(c[k]),
        }
    }

    /// Υ_k = (−1)^k c_{n−k}.
    pub fn upsilon(&self, k: usize) -> Result<Scalar> {
        let n = self.degree();
        if k > n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
            });
        }
        let negate = k % 2 == 1;
        Ok(match self.coefficient(n - k) {
            Scalar::Exact(c) => Scalar::Exact(if negate { -c } else { c }),
            Scalar::Approx(c) => Scalar::Approx(if negate { -c } else { c }),
        })
    }
}

pub fn default_zero_tol(m: &SymMatrix) -> f64 {
    ZERO_TOL_REL * m.frobenius().max(1.0)
}

/// All eigenvalues, zero-classified at the default tolerance.
pub fn eigen_symmetric(m: &SymMatrix) -> Result<Spectrum> {
    eigen_with_tol(m, default_zero_tol(m))
}

fn eigen_with_tol(m: &SymMatrix, zero_tol: f64) -> Result<Spectrum> {
    let d = eigen::jacobi(m, false)?;
    let frob_sq = m.frobenius_sq();
    let s = Spectrum::new(d.values, zero_tol, frob_sq);
    let sum_sq: f64 = s.values().iter().map(|v| v * v).sum();
    if (sum_sq - frob_sq).abs() > 1e-8 * frob_sq.max(1.0) {
        return Err(Error::Inconsistent(format!(
            "Σλ² = {sum_sq} differs from ‖M‖²_F = {frob_sq}"
        )));
    }
    Ok(s)
}

/// Eigenvalues with eigenvectors, nonincreasing.
pub fn eigen_pairs(m: &SymMatrix) -> Result<Vec<(f64, Vec<f64>)>> {
    let d = eigen::jacobi(m, true)?;
    let mut pairs: Vec<(f64, Vec<f64>)> = d.values.into_iter().zip(d.vectors.unwrap_or_default()).collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    Ok(pairs)
}

pub fn frobenius_sq(m: &SymMatrix) -> f64 {
    m.frobenius_sq()
}

pub fn rayleigh(m: &SymMatrix, x: &[f64]) -> Result<f64> {
    m.rayleigh(x)
}

pub fn char_poly(m: &SymMatrix) -> Result<CharPoly> {
    match m.integer_entries() {
        Some(ints) => Ok(CharPoly::Exact(exact::char_poly_i128(m.order(), ints)?)),
        None => {
            let spec = eigen_symmetric(m)?;
            Ok(CharPoly::Approx(poly_from_roots(spec.values())))
        }
    }
}

/// Coefficients of ∏ (x − r), ascending.
pub(crate) fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= r * ci;
        }
        c = next;
    }
    c
}

/// k-th elementary symmetric sum of the eigenvalues of `m`.
pub fn upsilon(m: &SymMatrix, k: usize) -> Result<Scalar> {
    if k > m.order() {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    char_poly(m)?.upsilon(k)
}

/// Σ of all k×k principal minors, by enumeration of the C(n, k) index sets.
pub fn principal_minor_sum_oracle(m: &SymMatrix, k: usize) -> Result<Scalar> {
    let n = m.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleTooLarge { n });
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut exact_sum = BigInt::from(0);
    let mut float_sum = 0.0;
    loop {
        let sub = m.principal_submatrix(&idx);
        match sub.integer_entries() {
            Some(ints) => exact_sum += exact::rank_det(k, ints).det,
            None => float_sum += det_partial_pivot(&sub),
        }
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(if m.is_integer_exact() {
                    match exact::big_to_i128(&exact_sum) {
                        Some(v) => Scalar::Exact(v),
                        None => Scalar::Approx(exact::big_abs_f64(&exact_sum) * sign_of(&exact_sum)),
                    }
                } else {
                    Scalar::Approx(float_sum)
                });
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn sign_of(v: &BigInt) -> f64 {
    use num_bigint::Sign;
    if v.sign() == Sign::Minus {
        -1.0
    } else {
        1.0
    }
}

/// Determinant by LU with partial pivoting.
fn det_partial_pivot(m: &SymMatrix) -> f64 {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        if a[piv * n + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for i in (col + 1)..n {
            let f = a[i * n + col] / p;
            for j in col..n {
                a[i * n + j] -= f * a[col * n + j];
            }
        }
    }
    det
}

/// Nullity κ and the tolerance used for the floating count.
///
/// Integer matrices take κ = n − rank from Bareiss elimination, cross-checked
/// against the eigenvalue count at the default tolerance; a caller tolerance
/// is ignored on that path. Other matrices count |λ| ≤ `zero_tol`.
pub fn nullity(m: &SymMatrix, zero_tol: Option<f64>) -> Result<(usize, f64)> {
    match m.integer_entries() {
        Some(ints) => {
            let tol = default_zero_tol(m);
            let exact = m.order() - exact::rank_det(m.order(), ints).rank;
            let float = eigen_with_tol(m, tol)?.nullity();
            if exact != float {
                return Err(Error::NullityMismatch { exact, float, tol });
            }
            Ok((exact, tol))
        }
        None => {
            let tol = zero_tol.unwrap_or_else(|| default_zero_tol(m));
            Ok((eigen_with_tol(m, tol)?.nullity(), tol))
        }
    }
}

/// Spectrum whose zero mask agrees with [`nullity`].
pub fn spectrum(m: &SymMatrix, zero_tol: Option<f64>) -> Result<Spectrum> {
    match m.integer_entries() {
        Some(ints) => {
            let tol = default_zero_tol(m);
            let mut s = eigen_with_tol(m, tol)?;
            let exact = m.order() - exact::rank_det(m.order(), ints).rank;
            if exact != s.nullity() {
                return Err(Error::NullityMismatch {
                    exact,
                    float: s.nullity(),
                    tol,
                });
            }
            s.reconcile_nullity(exact);
            Ok(s)
        }
        None => eigen_with_tol(m, zero_tol.unwrap_or_else(|| default_zero_tol(m))),
    }
}

/// Product of the nonzero eigenvalues, Υ_{n−κ}.
pub fn upsilon_rank(s: &Spectrum) -> Result<f64> {
    s.upsilon_rank()
}
