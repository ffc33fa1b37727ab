//! Walk-ratio lower bounds for λ₁: γ^(k) = √(Σ d_{k+1}² / Σ d_k²).
//!
//! The ratio is invariant under scaling of d_k, so each step rescales the
//! walk vector to unit max-entry instead of carrying exact walk counts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Stop the convergence run once successive terms differ by less than this.
pub const GAMMA_STEP_TOL: f64 = 1e-10;
/// Hard cap on the index of the last computed term in a convergence run.
pub const GAMMA_MAX_K: usize = 200;

fn check_input(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::inapplicable("γ sequence needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

struct Walker<'a> {
    g: &'a Graph,
    x: Vec<f64>,
    y: Vec<f64>,
}

impl<'a> Walker<'a> {
    fn new(g: &'a Graph) -> Self {
        Walker {
            g,
            x: vec![1.0; g.order()],
            y: vec![0.0; g.order()],
        }
    }

    /// Returns the current γ term and advances d_k → d_{k+1} (normalised).
    fn step(&mut self) -> f64 {
        self.g.apply(&self.x, &mut self.y);
        let num: f64 = self.y.iter().map(|v| v * v).sum();
        let den: f64 = self.x.iter().map(|v| v * v).sum();
        let gamma = (num / den).sqrt();
        let max = self.y.iter().cloned().fold(0.0, f64::max);
        for (x, y) in self.x.iter_mut().zip(&self.y) {
            *x = y / max;
        }
        gamma
    }
}

/// γ^(0), …, γ^(k_max) for a connected graph.
pub fn gamma_sequence(g: &Graph, k_max: usize) -> Result<Vec<f64>> {
    check_input(g)?;
    let mut w = Walker::new(g);
    Ok((0..=k_max).map(|_| w.step()).collect())
}

/// γ^(k) for a single k.
pub fn gamma_term(g: &Graph, k: usize) -> Result<f64> {
    Ok(*gamma_sequence(g, k)?.last().expect("k_max + 1 terms"))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaRun {
    pub values: Vec<f64>,
    /// First k with |γ^(k) − γ^(k−1)| < [`GAMMA_STEP_TOL`], if reached before [`GAMMA_MAX_K`].
    pub converged_at: Option<usize>,
}

impl GammaRun {
    pub fn last(&self) -> f64 {
        *self.values.last().expect("non-empty run")
    }

    pub fn last_k(&self) -> usize {
        self.values.len() - 1
    }
}

/// Runs the sequence until two successive terms agree to [`GAMMA_STEP_TOL`]
/// or k reaches [`GAMMA_MAX_K`].
pub fn gamma_until_converged(g: &Graph) -> Result<GammaRun> {
    check_input(g)?;
    let mut w = Walker::new(g);
    let mut values = vec![w.step()];
    for k in 1..=GAMMA_MAX_K {
        let v = w.step();
        let prev = values[k - 1];
        values.push(v);
        if (v - prev).abs() < GAMMA_STEP_TOL {
            return Ok(GammaRun {
                values,
                converged_at: Some(k),
            });
        }
    }
    Ok(GammaRun {
        values,
        converged_at: None,
    })
}
