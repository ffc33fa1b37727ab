use std::fmt;

use serde::Serialize;

use super::{
    bound_caporossi, bound_component_log, bound_mcclelland, bound_nullity_frobenius, bound_nullity_log,
    bound_rayleigh_log, gamma_until_converged, log_form, GraphProfile, Profile, SOUNDNESS_TOL,
};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::linalg::SymMatrix;

/// Values within this relative distance count as tied when picking a winner.
pub const TIE_TOL: f64 = 1e-12;

/// Bound identifiers, in report order. Ties go to the earliest name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Caporossi,
    Mcclelland,
    NullityFrobenius,
    NullityLog,
    RayleighLog,
    ComponentLog,
    GammaLog,
}

impl BoundName {
    pub const ALL: [BoundName; 7] = [
        BoundName::Caporossi,
        BoundName::Mcclelland,
        BoundName::NullityFrobenius,
        BoundName::NullityLog,
        BoundName::RayleighLog,
        BoundName::ComponentLog,
        BoundName::GammaLog,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Caporossi => "caporossi",
            BoundName::Mcclelland => "mcclelland",
            BoundName::NullityFrobenius => "nullity_frobenius",
            BoundName::NullityLog => "nullity_log",
            BoundName::RayleighLog => "rayleigh_log",
            BoundName::ComponentLog => "component_log",
            BoundName::GammaLog => "gamma_log",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: BoundName,
    pub value: Option<f64>,
    pub applicable: bool,
    /// Energy minus value.
    pub gap: Option<f64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub id: String,
    pub n: usize,
    pub m: Option<usize>,
    pub kappa: usize,
    pub rho: f64,
    pub energy: f64,
    pub bounds: Vec<BoundEntry>,
    pub winner: Option<BoundName>,
}

impl BoundReport {
    pub fn entry(&self, name: BoundName) -> &BoundEntry {
        self.bounds.iter().find(|e| e.name == name).expect("every bound has an entry")
    }

    pub fn value(&self, name: BoundName) -> Option<f64> {
        self.entry(name).value
    }

    /// Every applicable bound must stay below the energy (relative slack 1e-9).
    pub fn check_soundness(&self) -> Result<()> {
        let slack = SOUNDNESS_TOL * self.energy.max(1.0);
        for e in &self.bounds {
            if let Some(v) = e.value {
                if v > self.energy + slack {
                    return Err(Error::Inconsistent(format!(
                        "{}: bound {} = {v} exceeds energy {}",
                        self.id, e.name, self.energy
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SurveyOptions {
    /// Fixed γ depth; `None` runs the sequence to its convergence rule.
    pub k_max: Option<usize>,
    /// Zero tolerance for non-integer input; integer matrices use exact rank.
    pub zero_tol: Option<f64>,
}

fn entry(name: BoundName, energy: f64, result: Result<f64>) -> Result<BoundEntry> {
    match result {
        Ok(v) => Ok(BoundEntry {
            name,
            value: Some(v),
            applicable: true,
            gap: Some(energy - v),
            note: None,
        }),
        Err(Error::Inapplicable(reason)) => Ok(BoundEntry {
            name,
            value: None,
            applicable: false,
            gap: None,
            note: Some(reason),
        }),
        Err(e) => Err(e),
    }
}

fn pick_winner(bounds: &[BoundEntry]) -> Option<BoundName> {
    let mut best: Option<(BoundName, f64)> = None;
    for name in BoundName::ALL {
        let Some(v) = bounds.iter().find(|e| e.name == name).and_then(|e| e.value) else {
            continue;
        };
        match best {
            Some((_, b)) if v <= b + TIE_TOL * b.abs().max(1.0) => {}
            _ => best = Some((name, v)),
        }
    }
    best.map(|(n, _)| n)
}

/// Best component-based value over the eligible components.
fn best_over_components(
    gp: &GraphProfile,
    f: impl Fn(usize) -> Result<f64>,
) -> Result<f64> {
    let mut best: Option<f64> = None;
    let mut last_err = None;
    for idx in 0..gp.components().len() {
        match f(idx) {
            Ok(v) => best = Some(best.map_or(v, |b: f64| b.max(v))),
            Err(e @ Error::Inapplicable(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    best.ok_or_else(|| last_err.unwrap_or_else(|| Error::inapplicable("no eligible component")))
}

fn gamma_value(gp: &GraphProfile, idx: usize, k_max: Option<usize>) -> Result<f64> {
    let c = gp.component(idx)?;
    let n1 = c.graph.order();
    if n1 < 2 || 2 * c.graph.size() < n1 {
        return Err(Error::inapplicable("no component with n₁ ≥ 2"));
    }
    let gamma = match k_max {
        Some(k) => super::gamma_term(&c.graph, k)?,
        None => gamma_until_converged(&c.graph)?.last(),
    };
    let p = gp.profile();
    let ups = p.upsilon_rank().map_err(|_| Error::inapplicable("all eigenvalues are zero"))?;
    Ok(log_form(gamma, p.rank(), ups.to_f64().abs()))
}

/// Evaluates every bound on a graph.
pub fn survey(g: &Graph, opts: &SurveyOptions) -> Result<BoundReport> {
    let gp = GraphProfile::with_zero_tol(g.clone(), opts.zero_tol)?;
    survey_profile(&gp, opts, crate::graphs::write_graph6(g))
}

pub fn survey_profile(gp: &GraphProfile, opts: &SurveyOptions, id: String) -> Result<BoundReport> {
    let g = gp.graph();
    let p = gp.profile();
    let energy = p.energy();
    let n = g.order();

    let mut frob = entry(BoundName::NullityFrobenius, energy, bound_nullity_frobenius(p))?;
    if frob.applicable && g.isolated_vertices() > 0 {
        frob.note = Some(format!(
            "{} isolated vertices: hypothesis excludes them, value counts them in κ",
            g.isolated_vertices()
        ));
    }

    let component_log = best_over_components(gp, |idx| bound_component_log(gp, idx));
    let mut gamma_note = None;
    let gamma_log = best_over_components(gp, |idx| gamma_value(gp, idx, opts.k_max));
    if gamma_log.is_ok() {
        let carrier = (0..gp.components().len()).find(|&i| gp.carries_rho(i));
        if let Some(i) = carrier {
            if gp.components()[i].graph.order() >= 2 {
                gamma_note = Some(format!("component {i} carries ρ; sequence converges to the nullity_log value"));
            }
        }
    }

    let mut bounds = vec![
        entry(BoundName::Caporossi, energy, bound_caporossi(g))?,
        entry(BoundName::Mcclelland, energy, bound_mcclelland(p))?,
        frob,
        entry(BoundName::NullityLog, energy, bound_nullity_log(p))?,
        entry(BoundName::RayleighLog, energy, bound_rayleigh_log(p, &vec![1.0; n]))?,
        entry(BoundName::ComponentLog, energy, component_log)?,
        entry(BoundName::GammaLog, energy, gamma_log)?,
    ];
    if let Some(note) = gamma_note {
        bounds[6].note = Some(note);
    }
    let report = BoundReport {
        id,
        n,
        m: Some(g.size()),
        kappa: p.nullity(),
        rho: p.rho(),
        energy,
        winner: pick_winner(&bounds),
        bounds,
    };
    report.check_soundness()?;
    Ok(report)
}

/// Matrix-level survey; graph-only bounds are reported inapplicable.
pub fn survey_matrix(m: &SymMatrix, zero_tol: Option<f64>, id: impl Into<String>) -> Result<BoundReport> {
    let p = Profile::new(m.clone(), zero_tol)?;
    let energy = p.energy();
    let graph_only = |name| BoundEntry {
        name,
        value: None,
        applicable: false,
        gap: None,
        note: Some("defined for graphs only".into()),
    };
    let bounds = vec![
        graph_only(BoundName::Caporossi),
        entry(BoundName::Mcclelland, energy, bound_mcclelland(&p))?,
        entry(BoundName::NullityFrobenius, energy, bound_nullity_frobenius(&p))?,
        entry(BoundName::NullityLog, energy, bound_nullity_log(&p))?,
        if m.is_nonnegative() {
            entry(BoundName::RayleighLog, energy, bound_rayleigh_log(&p, &vec![1.0; m.order()]))?
        } else {
            graph_only(BoundName::RayleighLog)
        },
        graph_only(BoundName::ComponentLog),
        graph_only(BoundName::GammaLog),
    ];
    let report = BoundReport {
        id: id.into(),
        n: m.order(),
        m: None,
        kappa: p.nullity(),
        rho: p.rho(),
        energy,
        winner: pick_winner(&bounds),
        bounds,
    };
    report.check_soundness()?;
    Ok(report)
}
