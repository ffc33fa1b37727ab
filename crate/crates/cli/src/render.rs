//! Fixed-format output: floats at 12 significant digits, "NA" for missing values.

use serde::Serialize;
use spectral_energy::bounds::{BoundName, BoundReport};
use spectral_energy::Analysis;

pub const NA: &str = "NA";

/// `%.12g`-style rendering: 12 significant digits, trailing zeros trimmed,
/// scientific notation outside [1e-4, 1e12).
pub fn fmt_float(v: f64) -> String {
    if !v.is_finite() {
        return NA.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.11e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (11 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| NA.to_string(), fmt_float)
}

/// Quotes a CSV field when it contains a delimiter, quote or line break.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    fields.into_iter().map(|f| csv_field(f.as_ref())).collect::<Vec<_>>().join(",")
}

/// Survey row columns, in output order.
pub fn survey_header() -> Vec<&'static str> {
    let mut h = vec!["id", "graph6", "n", "m", "kappa", "rho", "energy"];
    h.extend(BoundName::ALL.iter().map(|b| b.as_str()));
    h.extend(["winner", "certificate", "witness", "error"]);
    h
}

/// One survey row, with every value already rendered.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyRow {
    pub id: usize,
    pub graph6: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub kappa: Option<usize>,
    pub rho: Option<f64>,
    pub energy: Option<f64>,
    pub bounds: Vec<(BoundName, Option<f64>)>,
    pub winner: Option<BoundName>,
    pub certificate: Option<&'static str>,
    pub witness: Option<&'static str>,
    pub error: Option<String>,
}

impl SurveyRow {
    pub fn from_analysis(id: usize, a: &Analysis) -> Self {
        let r: &BoundReport = &a.report;
        SurveyRow {
            id,
            graph6: a.graph6.clone(),
            n: Some(r.n),
            m: r.m,
            kappa: Some(r.kappa),
            rho: Some(r.rho),
            energy: Some(r.energy),
            bounds: BoundName::ALL.iter().map(|&b| (b, r.value(b))).collect(),
            winner: r.winner,
            certificate: a.primary_certificate().map(|c| c.kind.as_str()),
            witness: a.witness.as_ref().map(|w| w.kind.as_str()),
            error: None,
        }
    }

    pub fn failed(id: usize, graph6: &str, error: String) -> Self {
        SurveyRow {
            id,
            graph6: graph6.to_string(),
            n: None,
            m: None,
            kappa: None,
            rho: None,
            energy: None,
            bounds: BoundName::ALL.iter().map(|&b| (b, None)).collect(),
            winner: None,
            certificate: None,
            witness: None,
            error: Some(error),
        }
    }

    pub fn csv(&self) -> String {
        let int = |v: Option<usize>| v.map_or_else(|| NA.to_string(), |v| v.to_string());
        let mut f = vec![
            self.id.to_string(),
            self.graph6.clone(),
            int(self.n),
            int(self.m),
            int(self.kappa),
            fmt_opt(self.rho),
            fmt_opt(self.energy),
        ];
        f.extend(self.bounds.iter().map(|(_, v)| fmt_opt(*v)));
        f.push(self.winner.map_or(NA, |w| w.as_str()).to_string());
        f.push(self.certificate.unwrap_or("none").to_string());
        f.push(self.witness.unwrap_or("none").to_string());
        f.push(self.error.clone().unwrap_or_else(|| NA.to_string()));
        csv_line(f)
    }

    /// Key-ordered JSON object matching the CSV columns.
    pub fn json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("id".into(), self.id.into());
        map.insert("graph6".into(), self.graph6.clone().into());
        map.insert("n".into(), self.n.into());
        map.insert("m".into(), self.m.into());
        map.insert("kappa".into(), self.kappa.into());
        map.insert("rho".into(), self.rho.into());
        map.insert("energy".into(), self.energy.into());
        for (b, v) in &self.bounds {
            map.insert(b.as_str().into(), (*v).into());
        }
        map.insert("winner".into(), self.winner.map(|w| w.as_str()).into());
        map.insert("certificate".into(), self.certificate.into());
        map.insert("witness".into(), self.witness.into());
        map.insert("error".into(), self.error.clone().into());
        serde_json::Value::Object(map)
    }
}
