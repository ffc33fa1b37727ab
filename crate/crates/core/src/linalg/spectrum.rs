use serde::Serialize;

use crate::error::{Error, Result};

/// Eigenvalues sorted nonincreasing, with the zero classification used for nullity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_mask: Vec<bool>,
    zero_tol: f64,
    source_frobenius_sq: f64,
}

impl Spectrum {
    /// Sorts `values` (stable, nonincreasing) and masks entries with |λ| ≤ `zero_tol`.
    pub fn new(mut values: Vec<f64>, zero_tol: f64, source_frobenius_sq: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let zero_mask = values.iter().map(|v| v.abs() <= zero_tol).collect();
        Spectrum {
            values,
            zero_mask,
            zero_tol,
            source_frobenius_sq,
        }
    }

    /// Replace the tolerance decision by an exact nullity: the `kappa`
    /// eigenvalues of smallest modulus are the zeros.
    pub(crate) fn reconcile_nullity(&mut self, kappa: usize) {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| self.values[a].abs().total_cmp(&self.values[b].abs()));
        self.zero_mask.iter_mut().for_each(|z| *z = false);
        for &i in order.iter().take(kappa) {
            self.zero_mask[i] = true;
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn zero_mask(&self) -> &[bool] {
        &self.zero_mask
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }

    pub fn source_frobenius_sq(&self) -> f64 {
        self.source_frobenius_sq
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nullity(&self) -> usize {
        self.zero_mask.iter().filter(|&&z| z).count()
    }

    /// Eigenvalues not classified as zero, in spectrum order.
    pub fn nonzero(&self) -> impl Iterator<Item = f64> + '_ {
        self.values
            .iter()
            .zip(&self.zero_mask)
            .filter(|(_, &z)| !z)
            .map(|(&v, _)| v)
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Σ |λ|.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Product of the nonzero eigenvalues, Υ_{n−κ}.
    pub fn upsilon_rank(&self) -> Result<f64> {
        if self.nullity() == self.values.len() {
            return Err(Error::ZeroMatrix);
        }
        Ok(self.nonzero().product())
    }
}
