//! Three families where the nullity-aware Frobenius bound is compared with 2√m.

use serde::Serialize;

use crate::bounds::{bound_caporossi, bound_nullity_frobenius, GraphProfile};
use crate::error::{Error, Result};
use crate::graphs::{blowup, broom, complete_bipartite, join, write_graph6, Graph};
use crate::linalg::{CharPoly, Scalar};

pub const TREE_MIN: usize = 4;
pub const TREE_MAX: usize = 60;
pub const JOIN_MAX: usize = 10;
pub const BLOWUP_MAX_T: usize = 4;

/// Pairs closer than this to the join predictor boundary may tie either way.
pub const JOIN_BOUNDARY_TOL: f64 = 1e-6;
/// Tolerance for the join spectrum against its block formula.
pub const JOIN_SPECTRUM_TOL: f64 = 1e-7;
/// Relative tolerance for E(H) = t·E(G).
pub const BLOWUP_ENERGY_TOL: f64 = 1e-7;
/// Absolute tolerance for the Frobenius bound of the blow-up against t× that of G.
pub const BLOWUP_FROBENIUS_TOL: f64 = 1e-9;

fn range_err(what: &'static str, value: usize) -> Error {
    Error::OutOfRange {
        what,
        value: value as i64,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeRow {
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub upsilon: f64,
    pub frobenius: f64,
    pub caporossi: f64,
    /// (n−1)² ≤ 36(n−3).
    pub predicted: bool,
    /// Frobenius bound > 2√m.
    pub observed: bool,
    /// Exact characteristic polynomial equals x^{n−4}(x⁴ − (n−1)x² + (n−3)).
    pub char_poly_matches: bool,
}

/// x^{n−4}(x⁴ − (n−1)x² + (n−3)), ascending coefficients.
pub fn broom_char_poly(n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    c[n - 2] = -(n as i128 - 1);
    c[n - 4] = n as i128 - 3;
    c
}

pub fn tree_case(from: usize, to: usize) -> Result<Vec<TreeRow>> {
    if !(TREE_MIN..=TREE_MAX).contains(&from) {
        return Err(range_err("tree n", from));
    }
    if to < from || to > TREE_MAX {
        return Err(range_err("tree n", to));
    }
    (from..=to)
        .map(|n| {
            let g = broom(n)?;
            let gp = GraphProfile::new(g.clone())?;
            let p = gp.profile();
            let frobenius = bound_nullity_frobenius(p)?;
            let caporossi = bound_caporossi(&g)?;
            let char_poly_matches = matches!(p.char_poly(), Some(CharPoly::Exact(c)) if *c == broom_char_poly(n));
            let nn = n as i64;
            Ok(TreeRow {
                n,
                m: g.size(),
                kappa: p.nullity(),
                upsilon: p.upsilon_rank()?.to_f64(),
                frobenius,
                caporossi,
                predicted: (nn - 1) * (nn - 1) <= 36 * (nn - 3),
                observed: frobenius > caporossi,
                char_poly_matches,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinRow {
    pub r1: usize,
    pub r2: usize,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub upsilon: f64,
    pub frobenius: f64,
    pub caporossi: f64,
    /// r₁² + r₂².
    pub lhs: f64,
    /// r₁r₂(6√3 − 4).
    pub rhs: f64,
    pub predicted: bool,
    /// Frobenius bound ≥ 2√m.
    pub observed: bool,
    pub boundary: bool,
    /// Largest deviation of the computed spectrum from the block formula.
    pub spectrum_error: f64,
    /// Υ₄ equals −3r₁²r₂² exactly.
    pub upsilon_matches: bool,
}

impl JoinRow {
    pub fn agrees(&self) -> bool {
        self.boundary || self.predicted == self.observed
    }
}

/// {0^{2r₁−2+2r₂−2}, −r₁, −r₂} ∪ σ(F), F = [[r₁, 2√(r₁r₂)], [2√(r₁r₂), r₂]], sorted nonincreasing.
pub fn join_spectrum_formula(r1: usize, r2: usize) -> Vec<f64> {
    let (a, b) = (r1 as f64, r2 as f64);
    let mid = (a + b) / 2.0;
    let rad = (((a - b) / 2.0).powi(2) + 4.0 * a * b).sqrt();
    let mut v = vec![0.0; 2 * r1 + 2 * r2 - 4];
    v.extend([-a, -b, mid + rad, mid - rad]);
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

pub fn join_graph(r1: usize, r2: usize) -> Result<Graph> {
    Ok(join(&complete_bipartite(r1, r1)?, &complete_bipartite(r2, r2)?))
}

pub fn join_case(r1: usize, r2: usize) -> Result<JoinRow> {
    for r in [r1, r2] {
        if r == 0 || r > JOIN_MAX {
            return Err(range_err("join r", r));
        }
    }
    let g = join_graph(r1, r2)?;
    let gp = GraphProfile::new(g.clone())?;
    let p = gp.profile();
    let frobenius = bound_nullity_frobenius(p)?;
    let caporossi = bound_caporossi(&g)?;
    let (a, b) = (r1 as f64, r2 as f64);
    let lhs = a * a + b * b;
    let rhs = a * b * (6.0 * 3f64.sqrt() - 4.0);
    let spectrum_error = p
        .spectrum()
        .values()
        .iter()
        .zip(join_spectrum_formula(r1, r2))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let ups = p.upsilon_rank()?;
    let expected = -3 * (r1 * r1 * r2 * r2) as i128;
    Ok(JoinRow {
        r1,
        r2,
        n: g.order(),
        m: g.size(),
        kappa: p.nullity(),
        upsilon: ups.to_f64(),
        frobenius,
        caporossi,
        lhs,
        rhs,
        predicted: lhs <= rhs,
        observed: frobenius >= caporossi,
        boundary: (lhs - rhs).abs() < JOIN_BOUNDARY_TOL,
        spectrum_error,
        upsilon_matches: p.rank() == 4 && ups == Scalar::Exact(expected),
    })
}

/// Row-major grid r₁ ∈ 1..=r1_max, r₂ ∈ 1..=r2_max.
pub fn join_grid(r1_max: usize, r2_max: usize) -> Result<Vec<JoinRow>> {
    let mut rows = Vec::new();
    for r1 in 1..=r1_max {
        for r2 in 1..=r2_max {
            rows.push(join_case(r1, r2)?);
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlowupRow {
    pub graph6: String,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub n_bar: usize,
    pub m_bar: usize,
    pub kappa_bar: usize,
    pub energy: f64,
    pub energy_bar: f64,
    pub upsilon: Scalar,
    pub upsilon_bar: Scalar,
    pub frobenius: f64,
    pub frobenius_bar: f64,
    pub caporossi: f64,
    pub caporossi_bar: f64,
    pub energy_ok: bool,
    /// κ̄ = n(t−1) + κ.
    pub kappa_ok: bool,
    /// Υ_{n̄−κ̄}(H) = t^{n−κ}·Υ_{n−κ}(G), exactly on the integer path.
    pub upsilon_ok: bool,
    pub frobenius_ok: bool,
    /// Whether 2√m ≤ Frobenius bound, for G and for H.
    pub improves: bool,
    pub improves_bar: bool,
}

impl BlowupRow {
    pub fn all_ok(&self) -> bool {
        self.energy_ok
            && self.kappa_ok
            && self.upsilon_ok
            && self.frobenius_ok
            && self.n_bar == self.n * self.t
            && self.m_bar == self.m * self.t * self.t
            && (!self.improves || self.improves_bar)
    }
}

pub fn blowup_case(g: &Graph, t: usize) -> Result<BlowupRow> {
    if t == 0 || t > BLOWUP_MAX_T {
        return Err(range_err("blow-up t", t));
    }
    if g.size() == 0 {
        return Err(Error::InvalidParameter("blow-up base graph needs an edge".into()));
    }
    let h = blowup(g, t)?;
    let gp = GraphProfile::new(g.clone())?;
    let hp = GraphProfile::new(h.clone())?;
    let (p, q) = (gp.profile(), hp.profile());

    let energy = p.energy();
    let energy_bar = q.energy();
    let upsilon = p.upsilon_rank()?;
    let upsilon_bar = q.upsilon_rank()?;
    let upsilon_ok = match (upsilon, upsilon_bar) {
        (Scalar::Exact(u), Scalar::Exact(v)) => (t as i128)
            .checked_pow(p.rank() as u32)
            .and_then(|s| s.checked_mul(u))
            .is_some_and(|w| w == v),
        (u, v) => {
            let w = (t as f64).powi(p.rank() as i32) * u.to_f64();
            (w - v.to_f64()).abs() <= 1e-9 * w.abs().max(1.0)
        }
    };
    let frobenius = bound_nullity_frobenius(p)?;
    let frobenius_bar = bound_nullity_frobenius(q)?;
    let caporossi = bound_caporossi(g)?;
    let caporossi_bar = bound_caporossi(&h)?;
    let tf = t as f64;
    Ok(BlowupRow {
        graph6: write_graph6(g),
        t,
        n: g.order(),
        m: g.size(),
        kappa: p.nullity(),
        n_bar: h.order(),
        m_bar: h.size(),
        kappa_bar: q.nullity(),
        energy,
        energy_bar,
        upsilon,
        upsilon_bar,
        frobenius,
        frobenius_bar,
        caporossi,
        caporossi_bar,
        energy_ok: (energy_bar - tf * energy).abs() <= BLOWUP_ENERGY_TOL * tf * energy,
        kappa_ok: q.nullity() == g.order() * (t - 1) + p.nullity(),
        upsilon_ok,
        frobenius_ok: (frobenius_bar - tf * frobenius).abs() <= BLOWUP_FROBENIUS_TOL,
        improves: caporossi <= frobenius,
        improves_bar: caporossi_bar <= frobenius_bar,
    })
}
