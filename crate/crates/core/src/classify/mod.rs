//! Equality certificates and strictness witnesses for the energy bounds.

mod witness;

pub use witness::{find_strictness_witness, StrictnessWitness, WitnessKind, WITNESS_FULL_SCAN_MAX_ORDER};

use serde::Serialize;

use crate::bounds::{frobenius_form, log_form, BoundName, GraphProfile};
use crate::linalg::{Spectrum, SymMatrix};

/// Relative tolerance when comparing eigenvalue moduli.
pub const MODULUS_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    EqualModuli,
    UnitModuli,
    BipartiteUnion,
    CliqueMatchingUnion,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::EqualModuli => "equal-moduli",
            CertificateKind::UnitModuli => "unit-moduli",
            CertificateKind::BipartiteUnion => "bipartite-union",
            CertificateKind::CliqueMatchingUnion => "clique-matching-union",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CertificateParams {
    EqualModuli {
        modulus: f64,
        nonzero: usize,
        /// For non-negative irreducible input: whether the matrix permutes to
        /// [[0, S], [Sᵀ, 0]] with S of rank one. `None` when not checked.
        rank_one_block: Option<bool>,
    },
    UnitModuli {
        rho: f64,
        minus_one: usize,
        plus_one: usize,
    },
    BipartiteUnion {
        /// (a_j, b_j) with a_j ≤ b_j, one per non-trivial component.
        parts: Vec<(usize, usize)>,
        isolated: usize,
    },
    CliqueMatchingUnion {
        n: usize,
        /// n minus the clique order; `None` for the clique-free ρ = 1 family.
        ell: Option<usize>,
        kappa: usize,
        clique: Option<usize>,
        edges: usize,
    },
}

/// Evidence that a bound equals the energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityCertificate {
    pub bound: BoundName,
    pub kind: CertificateKind,
    pub params: CertificateParams,
    /// Energy minus the certified bound.
    pub residual: f64,
}

fn nonzero_product(s: &Spectrum) -> f64 {
    s.nonzero().product()
}

fn rank(s: &Spectrum) -> usize {
    s.len() - s.nullity()
}

/// All nonzero eigenvalues share one modulus (Frobenius-form equality).
pub fn certify_equal_moduli(s: &Spectrum) -> Option<EqualityCertificate> {
    let r = rank(s);
    if r == 0 {
        return None;
    }
    let modulus = s.nonzero().map(f64::abs).fold(0.0, f64::max);
    if s.nonzero().any(|v| (v.abs() - modulus).abs() > MODULUS_TOL * modulus) {
        return None;
    }
    let sum_sq: f64 = s.values().iter().map(|v| v * v).sum();
    let bound = frobenius_form(sum_sq, r, nonzero_product(s).abs());
    Some(EqualityCertificate {
        bound: BoundName::NullityFrobenius,
        kind: CertificateKind::EqualModuli,
        params: CertificateParams::EqualModuli {
            modulus,
            nonzero: r,
            rank_one_block: None,
        },
        residual: s.energy() - bound,
    })
}

/// [`certify_equal_moduli`], plus the block-structure consequence for
/// non-negative irreducible matrices: exactly two nonzero eigenvalues ±ρ,
/// κ = n − 2, and a bipartite support whose off-diagonal block has rank one.
pub fn certify_equal_moduli_matrix(m: &SymMatrix, s: &Spectrum) -> Option<EqualityCertificate> {
    let mut cert = certify_equal_moduli(s)?;
    if m.is_nonnegative() && m.is_irreducible() && m.order() >= 2 {
        let structural = s.nullity() + 2 == m.order() && rank_one_bipartite_block(m);
        if !structural {
            return None;
        }
        if let CertificateParams::EqualModuli { rank_one_block, .. } = &mut cert.params {
            *rank_one_block = Some(true);
        }
    }
    Some(cert)
}

fn rank_one_bipartite_block(m: &SymMatrix) -> bool {
    let n = m.order();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if m.get(v, v) != 0.0 {
            return false;
        }
        for w in 0..n {
            if w == v || m.get(v, w) == 0.0 {
                continue;
            }
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                stack.push(w);
            } else if color[w] == color[v] {
                return false;
            }
        }
    }
    let left: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let right: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    let scale = m.frobenius().max(1.0);
    for (x, &i) in left.iter().enumerate() {
        for &i2 in &left[x + 1..] {
            for (y, &j) in right.iter().enumerate() {
                for &j2 in &right[y + 1..] {
                    let minor = m.get(i, j) * m.get(i2, j2) - m.get(i, j2) * m.get(i2, j);
                    if minor.abs() > 1e-12 * scale * scale {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every nonzero eigenvalue other than λ₁ has modulus 1 (log-form equality).
pub fn certify_unit_moduli(s: &Spectrum) -> Option<EqualityCertificate> {
    let r = rank(s);
    let rho = s.largest();
    if r == 0 || rho <= 0.0 {
        return None;
    }
    let mut minus_one = 0;
    let mut plus_one = 0;
    for (i, (&v, &zero)) in s.values().iter().zip(s.zero_mask()).enumerate() {
        if i == 0 || zero {
            continue;
        }
        if (v.abs() - 1.0).abs() > MODULUS_TOL {
            return None;
        }
        if v < 0.0 {
            minus_one += 1;
        } else {
            plus_one += 1;
        }
    }
    let bound = log_form(rho, r, nonzero_product(s).abs());
    Some(EqualityCertificate {
        bound: BoundName::NullityLog,
        kind: CertificateKind::UnitModuli,
        params: CertificateParams::UnitModuli {
            rho,
            minus_one,
            plus_one,
        },
        residual: s.energy() - bound,
    })
}

/// Part sizes if `g` is complete bipartite (2-colouring plus edge count).
fn complete_bipartite_parts(g: &crate::graphs::Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                stack.push(w);
            } else if color[w] == color[v] {
                return None;
            }
        }
    }
    let a = color.iter().filter(|&&c| c == 0).count();
    let b = n - a;
    (a * b == g.size()).then_some((a.min(b), a.max(b)))
}

/// Structural match for the Frobenius-form equality family: every
/// non-trivial component is some K_{a_j,b_j} and all products a_j·b_j agree.
/// Isolated vertices are allowed; they only add to κ.
pub fn match_bipartite_union(gp: &GraphProfile) -> Option<EqualityCertificate> {
    let g = gp.graph();
    if g.size() == 0 {
        return None;
    }
    let mut parts = Vec::new();
    for c in gp.components() {
        if c.graph.order() == 1 {
            continue;
        }
        parts.push(complete_bipartite_parts(&c.graph)?);
    }
    let product = parts[0].0 * parts[0].1;
    if parts.iter().any(|(a, b)| a * b != product) {
        return None;
    }
    let p = gp.profile();
    if 2 * parts.len() != p.rank() {
        return None;
    }
    let bound = crate::bounds::bound_nullity_frobenius(p).ok()?;
    Some(EqualityCertificate {
        bound: BoundName::NullityFrobenius,
        kind: CertificateKind::BipartiteUnion,
        params: CertificateParams::BipartiteUnion {
            parts,
            isolated: g.isolated_vertices(),
        },
        residual: p.energy() - bound,
    })
}

/// Structural match for the log-form equality family: at most one clique
/// K_{n−ℓ} of order ≥ 3, plus isolated edges and isolated vertices, with
/// κ ≤ ℓ ≤ n − 3 and (ℓ − κ)/2 isolated edges; or, without a clique, the
/// ρ = 1 family ⌊(n−κ)/2⌋K₂ ∪ κK₁. Issued only when the spectrum also
/// certifies unit moduli.
pub fn match_clique_matching_union(gp: &GraphProfile) -> Option<EqualityCertificate> {
    let g = gp.graph();
    let n = g.order();
    if g.size() == 0 {
        return None;
    }
    let mut isolated = 0;
    let mut edges = 0;
    let mut clique = None;
    for c in gp.components() {
        let k = c.graph.order();
        match k {
            1 => isolated += 1,
            2 => edges += 1,
            _ => {
                if clique.is_some() || c.graph.size() != k * (k - 1) / 2 {
                    return None;
                }
                clique = Some(k);
            }
        }
    }
    let p = gp.profile();
    if p.nullity() != isolated {
        return None;
    }
    let ell = match clique {
        Some(k) => {
            let ell = n - k;
            if !(isolated <= ell && ell + 3 <= n && ell - isolated == 2 * edges) {
                return None;
            }
            Some(ell)
        }
        None => None,
    };
    certify_unit_moduli(p.spectrum())?;
    let bound = crate::bounds::bound_nullity_log(p).ok()?;
    Some(EqualityCertificate {
        bound: BoundName::NullityLog,
        kind: CertificateKind::CliqueMatchingUnion,
        params: CertificateParams::CliqueMatchingUnion {
            n,
            ell,
            kappa: isolated,
            clique,
            edges,
        },
        residual: p.energy() - bound,
    })
}
