use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// d_k(i): the number of walks of length k starting at vertex i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVector {
    pub k: usize,
    pub values: Vec<u128>,
}

/// Exact k-degrees via d_{k+1}(i) = Σ_{j ~ i} d_k(j).
pub fn k_degree(g: &Graph, k: usize) -> Result<DegreeVector> {
    let n = g.order();
    let mut d = vec![1u128; n];
    for step in 1..=k {
        let mut next = vec![0u128; n];
        for (v, out) in next.iter_mut().enumerate() {
            for &w in g.neighbors(v) {
                *out = out.checked_add(d[w]).ok_or(Error::WalkOverflow { k: step })?;
            }
        }
        d = next;
    }
    Ok(DegreeVector { k, values: d })
}
