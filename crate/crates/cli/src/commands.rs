use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use spectral_energy::bounds::{BoundName, SurveyOptions};
use spectral_energy::case_study::{blowup_case, join_case, join_grid, tree_case};
use spectral_energy::graphs::{make_family, parse_graph6, Graph};
use spectral_energy::{analyze as analyze_graph, Error};

use crate::render::{csv_line, fmt_float, survey_header, SurveyRow};
use crate::{CaseStudy, Common, Format, GraphInput, EXIT_INCONSISTENT, EXIT_PARSE, EXIT_USAGE, ZERO_TOL_ENV};

pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6 { .. } => EXIT_PARSE,
            Error::Inconsistent(_) | Error::NullityMismatch { .. } | Error::NonConvergence { .. } => {
                EXIT_INCONSISTENT
            }
            _ => EXIT_USAGE,
        };
        Failure::new(code, e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_USAGE, e)
    }
}

type CmdResult = Result<(), Failure>;

fn options(common: &Common) -> Result<SurveyOptions, Failure> {
    let zero_tol = match common.tol {
        Some(t) => Some(t),
        None => match std::env::var(ZERO_TOL_ENV) {
            Ok(s) => Some(s.trim().parse::<f64>().map_err(|_| {
                Failure::new(EXIT_USAGE, anyhow::anyhow!("{ZERO_TOL_ENV}={s:?} is not a number"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = zero_tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Failure::new(EXIT_USAGE, anyhow::anyhow!("zero tolerance must be finite and >= 0")));
        }
    }
    Ok(SurveyOptions {
        k_max: common.kmax,
        zero_tol,
    })
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(s) = &input.g6 {
        return Ok(parse_graph6(s)?);
    }
    let spec = input.family.as_deref().unwrap_or_default();
    let (name, args) = spec
        .split_first()
        .ok_or_else(|| Failure::new(EXIT_USAGE, anyhow::anyhow!("--family needs a name")))?;
    let params = args
        .iter()
        .map(|a| a.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new(EXIT_USAGE, anyhow::anyhow!("family parameter: {e}")))?;
    Ok(make_family(name, &params)?)
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn analyze(input: &GraphInput, format: Format, common: &Common) -> CmdResult {
    let opts = options(common)?;
    let g = read_graph(input)?;
    let a = analyze_graph(&g, &opts, None)?;
    let text = match format {
        Format::Json => to_json(&a),
        Format::Csv => {
            let row = SurveyRow::from_analysis(1, &a);
            format!("{}\n{}\n", csv_line(survey_header()), row.csv())
        }
    };
    emit(common.out.as_deref(), &text)
}

pub fn survey(file: &Path, format: Format, strict: bool, common: &Common) -> CmdResult {
    let opts = options(common)?;
    let content = fs::read_to_string(file)?;
    let lines: Vec<(usize, &str)> = content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let results: Vec<Result<SurveyRow, (usize, Error)>> = lines
        .par_iter()
        .map(|&(id, line)| {
            let g = match parse_graph6(line) {
                Ok(g) => g,
                Err(e) => return Ok(SurveyRow::failed(id, line, e.to_string())).and_then(|r| {
                    if strict {
                        Err((id, e))
                    } else {
                        Ok(r)
                    }
                }),
            };
            match analyze_graph(&g, &opts, None) {
                Ok(a) => Ok(SurveyRow::from_analysis(id, &a)),
                Err(e) => Err((id, e)),
            }
        })
        .collect();

    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err((id, e)) => {
                let f = Failure::from(e);
                return Err(Failure::new(f.code, f.error.context(format!("line {id}"))));
            }
        }
    }

    let text = match format {
        Format::Csv => {
            let mut s = csv_line(survey_header());
            s.push('\n');
            for row in &rows {
                s.push_str(&row.csv());
                s.push('\n');
            }
            s
        }
        Format::Json => to_json(&rows.iter().map(SurveyRow::json).collect::<Vec<_>>()),
    };
    emit(common.out.as_deref(), &text)?;

    let mut footer = String::from("winners:");
    for name in BoundName::ALL {
        let count = rows.iter().filter(|r| r.winner == Some(name)).count();
        footer.push_str(&format!(" {name}={count}"));
    }
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    footer.push_str(&format!(" errors={errors} rows={}", rows.len()));
    eprintln!("{footer}");
    Ok(())
}

fn b(v: bool) -> &'static str {
    if v {
        "true"
    } else {
        "false"
    }
}

pub fn case_study(which: &CaseStudy, common: &Common) -> CmdResult {
    let (text, mismatches) = match which {
        CaseStudy::Tree { from, to } => {
            let rows = tree_case(*from, *to)?;
            let mut s = csv_line([
                "n", "m", "kappa", "upsilon", "nullity_frobenius", "caporossi", "predicted", "observed", "char_poly_ok",
            ]);
            s.push('\n');
            for r in &rows {
                s.push_str(&csv_line([
                    r.n.to_string(),
                    r.m.to_string(),
                    r.kappa.to_string(),
                    fmt_float(r.upsilon),
                    fmt_float(r.frobenius),
                    fmt_float(r.caporossi),
                    b(r.predicted).into(),
                    b(r.observed).into(),
                    b(r.char_poly_matches).into(),
                ]));
                s.push('\n');
            }
            let bad = rows.iter().filter(|r| r.predicted != r.observed || !r.char_poly_matches).count();
            (s, bad)
        }
        CaseStudy::Join { r1_max, r2_max, r1, r2 } => {
            let rows = match (r1, r2) {
                (Some(a), Some(c)) => vec![join_case(*a, *c)?],
                _ => join_grid(*r1_max, *r2_max)?,
            };
            let mut s = csv_line([
                "r1", "r2", "n", "m", "kappa", "upsilon", "nullity_frobenius", "caporossi", "lhs", "rhs", "predicted",
                "observed", "boundary", "spectrum_error",
            ]);
            s.push('\n');
            for r in &rows {
                s.push_str(&csv_line([
                    r.r1.to_string(),
                    r.r2.to_string(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.kappa.to_string(),
                    fmt_float(r.upsilon),
                    fmt_float(r.frobenius),
                    fmt_float(r.caporossi),
                    fmt_float(r.lhs),
                    fmt_float(r.rhs),
                    b(r.predicted).into(),
                    b(r.observed).into(),
                    b(r.boundary).into(),
                    fmt_float(r.spectrum_error),
                ]));
                s.push('\n');
            }
            let bad = rows
                .iter()
                .filter(|r| !r.agrees() || r.spectrum_error >= spectral_energy::case_study::JOIN_SPECTRUM_TOL || !r.upsilon_matches)
                .count();
            (s, bad)
        }
        CaseStudy::Blowup { input, t } => {
            let g = read_graph(input)?;
            let mut s = csv_line([
                "graph6", "t", "n", "m", "kappa", "n_bar", "m_bar", "kappa_bar", "energy", "energy_bar", "upsilon",
                "upsilon_bar", "nullity_frobenius", "nullity_frobenius_bar", "caporossi", "caporossi_bar", "improves",
                "improves_bar", "checks_ok",
            ]);
            s.push('\n');
            let mut bad = 0;
            for &t in t {
                let r = blowup_case(&g, t)?;
                if !r.all_ok() {
                    bad += 1;
                }
                s.push_str(&csv_line([
                    r.graph6.clone(),
                    r.t.to_string(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.kappa.to_string(),
                    r.n_bar.to_string(),
                    r.m_bar.to_string(),
                    r.kappa_bar.to_string(),
                    fmt_float(r.energy),
                    fmt_float(r.energy_bar),
                    scalar(r.upsilon),
                    scalar(r.upsilon_bar),
                    fmt_float(r.frobenius),
                    fmt_float(r.frobenius_bar),
                    fmt_float(r.caporossi),
                    fmt_float(r.caporossi_bar),
                    b(r.improves).into(),
                    b(r.improves_bar).into(),
                    b(r.all_ok()).into(),
                ]));
                s.push('\n');
            }
            (s, bad)
        }
    };
    emit(common.out.as_deref(), &text)?;
    eprintln!("mismatches: {mismatches}");
    if mismatches > 0 {
        return Err(Failure::new(
            EXIT_INCONSISTENT,
            anyhow::anyhow!("{mismatches} case-study rows disagree with their prediction"),
        ));
    }
    Ok(())
}

fn scalar(v: spectral_energy::Scalar) -> String {
    match v {
        spectral_energy::Scalar::Exact(i) => i.to_string(),
        spectral_energy::Scalar::Approx(f) => fmt_float(f),
    }
}
