//! Order-3 principal submatrices that force strictness of the log bound.
//!
//! If a zero-diagonal 3×3 principal block has smallest eigenvalue below −1,
//! interlacing puts an eigenvalue of the whole matrix below −1, so some
//! nonzero eigenvalue other than λ₁ has modulus ≠ 1. The path pattern
//! [[0,a,0],[a,0,b],[0,b,0]] is the special case with spectrum {0, ±√(a²+b²)}.

use serde::Serialize;

use crate::linalg::{eigen_pairs, SymMatrix};

/// Above this order only the first `probes` triples are examined.
pub const WITNESS_FULL_SCAN_MAX_ORDER: usize = 60;

/// Margin below −1 required of the block's smallest eigenvalue.
const MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    PathSubmatrix,
    RayleighTriple,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::PathSubmatrix => "path-submatrix",
            WitnessKind::RayleighTriple => "rayleigh-triple",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrictnessWitness {
    pub kind: WitnessKind,
    /// 0-based indices; for a path submatrix the middle index is second.
    pub indices: [usize; 3],
    /// Block entries a = M[i₀,i₁], b = M[i₁,i₂], c = M[i₀,i₂].
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Unit vector (α, β, γ) attaining the block's smallest Rayleigh quotient.
    pub vector: Option<[f64; 3]>,
    /// √(a² + b²) for a path submatrix, otherwise the Rayleigh quotient
    /// (the block's smallest eigenvalue).
    pub value: f64,
    pub interpretation: &'static str,
}

fn path_witness(m: &SymMatrix, ends: (usize, usize), mid: usize) -> Option<StrictnessWitness> {
    let (x, z) = ends;
    let a = m.get(x, mid);
    let b = m.get(mid, z);
    if m.get(x, z) != 0.0 || a == 0.0 || b == 0.0 {
        return None;
    }
    let norm = (a * a + b * b).sqrt();
    (norm > 1.0 + MARGIN).then_some(StrictnessWitness {
        kind: WitnessKind::PathSubmatrix,
        indices: [x, mid, z],
        a,
        b,
        c: 0.0,
        vector: None,
        value: norm,
        interpretation: "block spectrum is {0, ±√(a²+b²)}",
    })
}

fn triple_witness(m: &SymMatrix, i: usize, j: usize, k: usize) -> Option<StrictnessWitness> {
    if m.get(i, i) != 0.0 || m.get(j, j) != 0.0 || m.get(k, k) != 0.0 {
        return None;
    }
    for (ends, mid) in [((j, k), i), ((i, k), j), ((i, j), k)] {
        if let Some(w) = path_witness(m, ends, mid) {
            return Some(w);
        }
    }
    let block = m.principal_submatrix(&[i, j, k]);
    let pairs = eigen_pairs(&block).ok()?;
    let (lambda, v) = pairs.last()?;
    (*lambda < -1.0 - MARGIN).then(|| StrictnessWitness {
        kind: WitnessKind::RayleighTriple,
        indices: [i, j, k],
        a: m.get(i, j),
        b: m.get(j, k),
        c: m.get(i, k),
        vector: Some([v[0], v[1], v[2]]),
        value: *lambda,
        interpretation: "smallest eigenvalue of the zero-diagonal 3×3 block is < −1",
    })
}

/// First witness in lexicographic triple order, if any.
///
/// For n ≤ [`WITNESS_FULL_SCAN_MAX_ORDER`] every triple is scanned; above
/// that, at most `probes` triples are examined when a cap is given.
pub fn find_strictness_witness(m: &SymMatrix, probes: Option<usize>) -> Option<StrictnessWitness> {
    let n = m.order();
    if n < 3 {
        return None;
    }
    let cap = if n > WITNESS_FULL_SCAN_MAX_ORDER {
        probes.unwrap_or(usize::MAX)
    } else {
        usize::MAX
    };
    let mut examined = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if examined == cap {
                    return None;
                }
                examined += 1;
                if let Some(w) = triple_witness(m, i, j, k) {
                    return Some(w);
                }
            }
        }
    }
    None
}
