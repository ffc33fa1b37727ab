//! Lower bounds on the energy E = Σ|λᵢ|.
//!
//! Two shapes recur. With r = n − κ nonzero eigenvalues whose product is Υ_r,
//!
//! * the Frobenius form `√(‖M‖²_F + r(r−1)|Υ_r|^{2/r})` (AM–GM on the
//!   off-diagonal terms of (Σ|λ|)²), and
//! * the log form `h(x) = x + r − 1 + ln|Υ_r| − ln x`, from |λ| ≥ 1 + ln|λ|
//!   applied to every nonzero eigenvalue but λ₁. `h` is increasing on
//!   [1, ∞), so any x in [1, λ₁] also gives a bound.
//!
//! Natural logarithms throughout.

mod gamma;
mod profile;
mod report;

pub use gamma::{gamma_sequence, gamma_term, gamma_until_converged, GammaRun, GAMMA_MAX_K, GAMMA_STEP_TOL};
pub use profile::{GraphProfile, Profile};
pub use report::{survey, survey_matrix, survey_profile, BoundEntry, BoundName, BoundReport, SurveyOptions, TIE_TOL};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::linalg::Spectrum;

/// Relative slack allowed when checking a bound against the energy.
pub const SOUNDNESS_TOL: f64 = 1e-9;

/// Modulus tolerance for "equal to ±1" in the spectral-count cross-check.
const UNIT_TOL: f64 = 1e-8;

pub fn energy(s: &Spectrum) -> f64 {
    s.energy()
}

/// √(frob_sq + r(r−1)|Υ_r|^{2/r}).
pub fn frobenius_form(frob_sq: f64, r: usize, upsilon_abs: f64) -> f64 {
    let rf = r as f64;
    (frob_sq + rf * (rf - 1.0) * upsilon_abs.powf(2.0 / rf)).sqrt()
}

/// x + r − 1 + ln|Υ_r| − ln x.
pub fn log_form(x: f64, r: usize, upsilon_abs: f64) -> f64 {
    x + (r as f64 - 1.0) + (upsilon_abs.ln() - x.ln())
}

/// 2√m.
pub fn bound_caporossi(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Err(Error::inapplicable("graph has no edges"));
    }
    Ok(2.0 * (g.size() as f64).sqrt())
}

/// √(‖M‖²_F + n(n−1)|det M|^{2/n}); for graphs ‖A‖²_F = 2m.
pub fn bound_mcclelland(p: &Profile) -> Result<f64> {
    Ok(frobenius_form(p.frobenius_sq(), p.order(), p.det().to_f64().abs()))
}

/// √(‖M‖²_F + (n−κ)(n−κ−1)|Υ_{n−κ}|^{2/(n−κ)}).
///
/// With κ = 0 this is the McClelland expression evaluated on the same inputs.
pub fn bound_nullity_frobenius(p: &Profile) -> Result<f64> {
    let ups = p
        .upsilon_rank()
        .map_err(|_| Error::inapplicable("all eigenvalues are zero"))?;
    Ok(frobenius_form(p.frobenius_sq(), p.rank(), ups.to_f64().abs()))
}

fn log_inputs(p: &Profile) -> Result<(usize, f64)> {
    let ups = p
        .upsilon_rank()
        .map_err(|_| Error::inapplicable("all eigenvalues are zero"))?;
    Ok((p.rank(), ups.to_f64().abs()))
}

/// h(ρ) = ρ + n − κ − 1 + ln|Υ_{n−κ}| − ln ρ, with ρ = λ₁.
pub fn bound_nullity_log(p: &Profile) -> Result<f64> {
    let rho = p.rho();
    if rho <= 0.0 {
        return Err(Error::inapplicable("largest eigenvalue is not positive"));
    }
    let (r, ups) = log_inputs(p)?;
    Ok(log_form(rho, r, ups))
}

/// h(μ) with μ = xᵀMx / xᵀx for a non-negative x; requires μ ≥ 1.
pub fn bound_rayleigh_log(p: &Profile, x: &[f64]) -> Result<f64> {
    if x.iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidParameter("Rayleigh vector must be non-negative".into()));
    }
    let mu = p.matrix().rayleigh(x)?;
    if mu < 1.0 {
        return Err(Error::inapplicable(format!("Rayleigh quotient {mu} < 1")));
    }
    let (r, ups) = log_inputs(p)?;
    Ok(log_form(mu, r, ups))
}

/// h(2m₁/n₁) for a connected component G₁ with n₁ ≥ 2; κ and Υ are those of
/// the whole graph.
pub fn bound_component_log(gp: &GraphProfile, comp: usize) -> Result<f64> {
    let c = gp.component(comp)?;
    let n1 = c.graph.order();
    if n1 < 2 {
        return Err(Error::inapplicable("component has fewer than two vertices"));
    }
    let mu = 2.0 * c.graph.size() as f64 / n1 as f64;
    let (r, ups) = log_inputs(gp.profile())?;
    Ok(log_form(mu, r, ups))
}

/// h(γ₁^(k)) with γ₁ the walk-ratio sequence of component `comp`.
pub fn bound_gamma_log(gp: &GraphProfile, comp: usize, k: usize) -> Result<f64> {
    let c = gp.component(comp)?;
    let n1 = c.graph.order();
    if n1 < 2 || 2 * c.graph.size() < n1 {
        return Err(Error::inapplicable("component needs n₁ ≥ 2 and 2m₁/n₁ ≥ 1"));
    }
    let gamma = gamma_term(&c.graph, k)?;
    let (r, ups) = log_inputs(gp.profile())?;
    Ok(log_form(gamma, r, ups))
}

/// Counts of eigenvalues equal to −1 (c), to +1 other than λ₁ (f), and to 0 (κ).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCounts {
    /// (‖M‖² − ρ² + ρ)/2.
    pub c: f64,
    /// (‖M‖² − ρ² − ρ)/2.
    pub f: f64,
    /// n − 1 + ρ² − ‖M‖².
    pub kappa: f64,
    /// Counts read directly off the spectrum, as (c, f, κ).
    pub counted: (usize, usize, usize),
    /// True when the matrix is traceless, all nonzero eigenvalues except λ₁
    /// are ±1, and the formulas return the counted integers.
    pub applicable: bool,
    pub note: Option<String>,
}

/// Spectral counts for the unit-moduli equality profile of the log bound.
pub fn spectral_counts(p: &Profile) -> Result<SpectralCounts> {
    let rho = p.rho();
    if p.rank() == 0 {
        return Err(Error::ZeroMatrix);
    }
    let frob = p.frobenius_sq();
    let c = (frob - rho * rho + rho) / 2.0;
    let f = (frob - rho * rho - rho) / 2.0;
    let kappa = p.order() as f64 - 1.0 + rho * rho - frob;

    let s = p.spectrum();
    let mut minus = 0;
    let mut plus = 0;
    let mut unit_profile = true;
    for (i, (&v, &zero)) in s.values().iter().zip(s.zero_mask()).enumerate() {
        if i == 0 || zero {
            continue;
        }
        if (v + 1.0).abs() <= UNIT_TOL {
            minus += 1;
        } else if (v - 1.0).abs() <= UNIT_TOL {
            plus += 1;
        } else {
            unit_profile = false;
        }
    }
    let counted = (minus, plus, p.nullity());

    let traceless = p.matrix().trace().abs() <= UNIT_TOL;
    let integral = |x: f64| (x - x.round()).abs() <= 1e-6;
    let matches = integral(c)
        && integral(f)
        && integral(kappa)
        && c.round() as i64 == minus as i64
        && f.round() as i64 == plus as i64
        && kappa.round() as i64 == p.nullity() as i64;

    let note = if !traceless {
        Some("matrix has nonzero trace".to_string())
    } else if !unit_profile {
        Some("a nonzero eigenvalue other than λ₁ has modulus ≠ 1".to_string())
    } else if !matches {
        return Err(Error::Inconsistent(format!(
            "unit-moduli spectrum but counts (c, f, κ) = ({c}, {f}, {kappa}) disagree with {counted:?}"
        )));
    } else {
        None
    };
    Ok(SpectralCounts {
        c,
        f,
        kappa,
        counted,
        applicable: note.is_none(),
        note,
    })
}
