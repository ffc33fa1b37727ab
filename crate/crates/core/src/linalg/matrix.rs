use crate::error::{Error, Result};

/// Largest magnitude accepted on the integer-exact path (2^53, the f64 integer range).
const EXACT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// Dense real symmetric matrix.
///
/// Entries are stored row-major. When every entry is an integer of magnitude
/// below 2^53 the matrix also carries an `i64` copy, and the exact kernels
/// (rank, determinant, characteristic polynomial) run on that payload.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<f64>,
    exact: Option<Vec<i64>>,
}

impl SymMatrix {
    pub fn from_row_major(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let v = entries[i * n + j];
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if j > i && v != entries[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let exact = if entries.iter().all(|v| v.fract() == 0.0 && v.abs() < EXACT_LIMIT) {
            Some(entries.iter().map(|&v| v as i64).collect())
        } else {
            None
        };
        Ok(SymMatrix { n, entries, exact })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(n, entries)
    }

    pub fn from_integers(n: usize, entries: Vec<i64>) -> Result<Self> {
        Self::from_row_major(n, entries.into_iter().map(|v| v as f64).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut e = vec![0.0; n * n];
        for i in 0..n {
            e[i * n + i] = 1.0;
        }
        Self::from_row_major(n, e)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_row_major(n, vec![0.0; n * n])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn is_integer_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Integer payload, present iff the matrix is integer-exact.
    pub fn integer_entries(&self) -> Option<&[i64]> {
        self.exact.as_deref()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0.0)
    }

    /// Squared Frobenius norm, the sum of all squared entries.
    pub fn frobenius_sq(&self) -> f64 {
        match &self.exact {
            // exact for adjacency matrices and anything below 2^53 in total
            Some(ints) => ints.iter().map(|&v| (v as i128) * (v as i128)).sum::<i128>() as f64,
            None => self.entries.iter().map(|v| v * v).sum(),
        }
    }

    pub fn frobenius(&self) -> f64 {
        self.frobenius_sq().sqrt()
    }

    /// x^T M x / x^T x.
    pub fn rayleigh(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let norm_sq: f64 = x.iter().map(|v| v * v).sum();
        if norm_sq == 0.0 {
            return Err(Error::ZeroVector);
        }
        let mut quad = 0.0;
        for i in 0..self.n {
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            let mx: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
            quad += x[i] * mx;
        }
        Ok(quad / norm_sq)
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j));
            }
        }
        let exact = self
            .exact
            .as_ref()
            .map(|ints| idx.iter().flat_map(|&i| idx.iter().map(move |&j| ints[i * self.n + j])).collect());
        SymMatrix { n: k, entries, exact }
    }

    /// Connected components of the off-diagonal support pattern.
    pub(crate) fn support_components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                let row = &self.entries[v * n..(v + 1) * n];
                for (w, &x) in row.iter().enumerate() {
                    if w != v && !seen[w] && x != 0.0 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.support_components().len() == 1
    }
}
