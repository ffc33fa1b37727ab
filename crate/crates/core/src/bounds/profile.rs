use crate::error::{Error, Result};
use crate::graphs::{components, Component, Graph};
use crate::linalg::{self, poly_from_roots, CharPoly, Scalar, Spectrum, SymMatrix};

/// Relative agreement required between the exact Υ_{n−κ} and the product of
/// the computed nonzero eigenvalues.
const UPSILON_CROSS_CHECK: f64 = 1e-6;

/// Everything the bounds read from a matrix, computed once.
#[derive(Debug, Clone)]
pub struct Profile {
    matrix: SymMatrix,
    spectrum: Spectrum,
    char_poly: Option<CharPoly>,
    upsilon_rank: Option<Scalar>,
    det: Scalar,
}

impl Profile {
    /// `zero_tol` only affects matrices without an integer payload.
    pub fn new(matrix: SymMatrix, zero_tol: Option<f64>) -> Result<Self> {
        let spectrum = linalg::spectrum(&matrix, zero_tol)?;
        let n = matrix.order();
        let char_poly = if matrix.is_integer_exact() {
            match linalg::char_poly(&matrix) {
                Ok(cp) => Some(cp),
                Err(Error::CharPolyOverflow { .. }) => None,
                Err(e) => return Err(e),
            }
        } else {
            Some(CharPoly::Approx(poly_from_roots(spectrum.values())))
        };

        let kappa = spectrum.nullity();
        let upsilon_rank = if kappa == n {
            None
        } else {
            let product = spectrum.upsilon_rank()?;
            match &char_poly {
                Some(cp @ CharPoly::Exact(_)) => {
                    let exact = cp.upsilon(n - kappa)?;
                    let e = exact.to_f64();
                    if (e - product).abs() > UPSILON_CROSS_CHECK * e.abs().max(1.0) {
                        return Err(Error::Inconsistent(format!(
                            "exact Υ_{} = {e} but nonzero eigenvalues multiply to {product}",
                            n - kappa
                        )));
                    }
                    Some(exact)
                }
                _ => Some(Scalar::Approx(product)),
            }
        };
        let det = match &char_poly {
            Some(cp @ CharPoly::Exact(_)) => cp.upsilon(n)?,
            _ => Scalar::Approx(spectrum.values().iter().product()),
        };
        Ok(Profile {
            matrix,
            spectrum,
            char_poly,
            upsilon_rank,
            det,
        })
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// `None` when the exact integer recurrence overflowed.
    pub fn char_poly(&self) -> Option<&CharPoly> {
        self.char_poly.as_ref()
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn nullity(&self) -> usize {
        self.spectrum.nullity()
    }

    /// n − κ.
    pub fn rank(&self) -> usize {
        self.order() - self.nullity()
    }

    /// Largest eigenvalue λ₁ (the spectral radius for non-negative input).
    pub fn rho(&self) -> f64 {
        self.spectrum.largest()
    }

    pub fn energy(&self) -> f64 {
        self.spectrum.energy()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.matrix.frobenius_sq()
    }

    /// Υ_{n−κ}, exact on the integer path.
    pub fn upsilon_rank(&self) -> Result<Scalar> {
        self.upsilon_rank.ok_or(Error::ZeroMatrix)
    }

    /// Υ_n = det.
    pub fn det(&self) -> Scalar {
        self.det
    }
}

/// A graph with its adjacency profile and components.
#[derive(Debug, Clone)]
pub struct GraphProfile {
    graph: Graph,
    profile: Profile,
    components: Vec<Component>,
    component_rho: Vec<f64>,
}

impl GraphProfile {
    pub fn new(graph: Graph) -> Result<Self> {
        Self::with_zero_tol(graph, None)
    }

    /// `zero_tol` is threaded to [`Profile::new`]; adjacency matrices are
    /// integer-exact, so it only matters for callers that bypass that path.
    pub fn with_zero_tol(graph: Graph, zero_tol: Option<f64>) -> Result<Self> {
        if graph.order() == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let profile = Profile::new(graph.adjacency()?, zero_tol)?;
        let components = components(&graph);
        let component_rho = components
            .iter()
            .map(|c| {
                if c.graph.size() == 0 {
                    Ok(0.0)
                } else {
                    linalg::eigen_symmetric(&c.graph.adjacency()?).map(|s| s.largest())
                }
            })
            .collect::<Result<_>>()?;
        Ok(GraphProfile {
            graph,
            profile,
            components,
            component_rho,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, idx: usize) -> Result<&Component> {
        self.components.get(idx).ok_or(Error::OutOfRange {
            what: "component index",
            value: idx as i64,
        })
    }

    /// Largest adjacency eigenvalue of each component.
    pub fn component_rho(&self) -> &[f64] {
        &self.component_rho
    }

    /// Whether component `idx` attains the largest eigenvalue of the whole graph.
    pub fn carries_rho(&self, idx: usize) -> bool {
        let rho = self.profile.rho();
        (self.component_rho[idx] - rho).abs() <= 1e-9 * rho.max(1.0)
    }
}
