//! Full single-graph analysis: bound report, spectral counts, certificates
//! and strictness witness.

use serde::Serialize;

use crate::bounds::{survey_profile, spectral_counts, BoundReport, GraphProfile, SpectralCounts, SurveyOptions};
use crate::classify::{
    certify_equal_moduli, certify_unit_moduli, find_strictness_witness, match_bipartite_union,
    match_clique_matching_union, EqualityCertificate, StrictnessWitness,
};
use crate::error::{Error, Result};
use crate::graphs::{write_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub report: BoundReport,
    pub spectrum: Vec<f64>,
    pub counts: Option<SpectralCounts>,
    pub certificates: Vec<EqualityCertificate>,
    pub witness: Option<StrictnessWitness>,
}

impl Analysis {
    /// The structural certificate if one was issued, else the spectral one.
    pub fn primary_certificate(&self) -> Option<&EqualityCertificate> {
        use crate::classify::CertificateKind::*;
        [BipartiteUnion, CliqueMatchingUnion, EqualModuli, UnitModuli]
            .into_iter()
            .find_map(|k| self.certificates.iter().find(|c| c.kind == k))
    }
}

pub fn analyze(g: &Graph, opts: &SurveyOptions, probes: Option<usize>) -> Result<Analysis> {
    let graph6 = write_graph6(g);
    let gp = GraphProfile::with_zero_tol(g.clone(), opts.zero_tol)?;
    let report = survey_profile(&gp, opts, graph6.clone())?;
    let p = gp.profile();
    let counts = match spectral_counts(p) {
        Ok(c) => Some(c),
        Err(Error::ZeroMatrix) => None,
        Err(e) => return Err(e),
    };

    let equal = certify_equal_moduli(p.spectrum());
    let unit = certify_unit_moduli(p.spectrum());
    let bip = match_bipartite_union(&gp);
    let clique = match_clique_matching_union(&gp);
    if bip.is_some() && equal.is_none() {
        return Err(Error::Inconsistent(format!("{graph6}: bipartite union without equal moduli")));
    }
    let witness = find_strictness_witness(p.matrix(), probes);
    if witness.is_some() && unit.is_some() {
        return Err(Error::Inconsistent(format!("{graph6}: strictness witness alongside unit moduli")));
    }
    let certificates = [bip, clique, equal, unit].into_iter().flatten().collect();

    Ok(Analysis {
        graph6,
        report,
        spectrum: p.spectrum().values().to_vec(),
        counts,
        certificates,
        witness,
    })
}
