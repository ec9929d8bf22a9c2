//! Serializable reports and their json/csv/text renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use ghzprobe_core::{
    fourier, max_radius, BellOperator, GhzPair, MerminReport, OptimalCertificate, SignVector,
    SpectralAnalysis,
};
use serde::Serialize;

use crate::error::AppResult;
use crate::geometry_file::GeometryJson;
use crate::json::{self, format_f64_text as num, OrderedMap};
use crate::verify::VerifyReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

pub trait Render: Serialize {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
    fn text(&self) -> String;

    fn render(&self, format: Format) -> AppResult<String> {
        match format {
            Format::Json => Ok(json::to_string(self)?),
            Format::Text => Ok(self.text()),
            Format::Csv => {
                let (header, rows) = self.csv_rows();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header)?;
                for row in rows {
                    w.write_record(&row)?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| csv::Error::from(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub optimal: bool,
    pub cbar_min: f64,
    pub cbar_max: f64,
    pub lambda_max: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalEntry {
    pub f: String,
    pub tuple: String,
    pub fourier: String,
    pub certificate: Option<CertificateJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalReport {
    pub n: usize,
    pub expected_radius: f64,
    pub vectors: Vec<OptimalEntry>,
}

impl OptimalReport {
    pub fn new(n: usize, found: &[(SignVector, Option<OptimalCertificate>)]) -> Self {
        let vectors = found
            .iter()
            .map(|(f, cert)| OptimalEntry {
                f: f.to_string(),
                tuple: f.to_tuple_string(),
                fourier: fourier(f).to_scaled_string(),
                certificate: cert.as_ref().map(|c| CertificateJson {
                    optimal: true,
                    cbar_min: c
                        .cbar
                        .values()
                        .iter()
                        .copied()
                        .fold(f64::INFINITY, f64::min),
                    cbar_max: c
                        .cbar
                        .values()
                        .iter()
                        .copied()
                        .fold(f64::NEG_INFINITY, f64::max),
                    lambda_max: c.lambda_max,
                }),
            })
            .collect();
        OptimalReport {
            n,
            expected_radius: max_radius(n),
            vectors,
        }
    }

    pub fn all_certified(&self) -> bool {
        self.vectors.iter().all(|v| v.certificate.is_some())
    }
}

impl Render for OptimalReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                vec![
                    i.to_string(),
                    v.tuple.clone(),
                    v.fourier.clone(),
                    v.certificate
                        .as_ref()
                        .map_or(String::new(), |c| num(c.lambda_max)),
                ]
            })
            .collect();
        (vec!["index", "f", "fourier", "lambda_max"], rows)
    }

    fn text(&self) -> String {
        let mut s = format!(
            "n = {}: {} optimal vectors, expected radius {}\n",
            self.n,
            self.vectors.len(),
            num(self.expected_radius)
        );
        for (i, v) in self.vectors.iter().enumerate() {
            let _ = writeln!(s, "[{i}] f    = {}", v.tuple);
            let _ = writeln!(s, "    fhat = {}", v.fourier);
            match &v.certificate {
                Some(c) => {
                    let _ = writeln!(
                        s,
                        "    certified: all cbar = 1, lambda_max = {}",
                        num(c.lambda_max)
                    );
                }
                None => s.push_str("    NOT certified\n"),
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub f: String,
    pub geometry: GeometryJson,
    pub coefficients: OrderedMap<f64>,
    pub spectrum: OrderedMap<f64>,
    pub spectral_radius: f64,
    pub aligned_bound: f64,
    pub sum_rule_residual: f64,
}

impl SpectrumReport {
    pub fn new(f: &SignVector, geometry: GeometryJson, analysis: &SpectralAnalysis) -> Self {
        SpectrumReport {
            n: f.n(),
            f: f.to_string(),
            geometry,
            coefficients: OrderedMap(
                analysis
                    .coefficients
                    .iter()
                    .map(|(p, c)| (p.to_string(), c))
                    .collect(),
            ),
            spectrum: OrderedMap(
                analysis
                    .spectrum
                    .iter()
                    .map(|(w, v)| (w.to_string(), v))
                    .collect(),
            ),
            spectral_radius: analysis.spectral_radius,
            aligned_bound: analysis.aligned_bound,
            sum_rule_residual: analysis.sum_rule_residual,
        }
    }
}

impl Render for SpectrumReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let mut rows: Vec<Vec<String>> = Vec::new();
        for (p, c) in &self.coefficients.0 {
            rows.push(vec!["coefficient".into(), p.clone(), num(*c)]);
        }
        for (w, v) in &self.spectrum.0 {
            rows.push(vec!["lambda_sq".into(), w.clone(), num(*v)]);
        }
        for (name, v) in [
            ("spectral_radius", self.spectral_radius),
            ("aligned_bound", self.aligned_bound),
            ("sum_rule_residual", self.sum_rule_residual),
        ] {
            rows.push(vec![name.into(), String::new(), num(v)]);
        }
        (vec!["kind", "key", "value"], rows)
    }

    fn text(&self) -> String {
        let mut s = format!("n = {}, f = {}\ncoefficients C_p:\n", self.n, self.f);
        for (p, c) in &self.coefficients.0 {
            let _ = writeln!(s, "  {p}  {}", num(*c));
        }
        s.push_str("lambda^2(w):\n");
        for (w, v) in &self.spectrum.0 {
            let _ = writeln!(s, "  {w}  {}", num(*v));
        }
        let _ = writeln!(s, "spectral radius   {}", num(self.spectral_radius));
        let _ = writeln!(s, "aligned bound     {}", num(self.aligned_bound));
        let _ = writeln!(s, "sum rule residual {}", num(self.sum_rule_residual));
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairJson {
    pub w: String,
    pub lambda: f64,
    pub phase_re: f64,
    pub phase_im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigensystemReport {
    pub n: usize,
    pub f: String,
    pub geometry: GeometryJson,
    pub pairs: Vec<PairJson>,
}

impl EigensystemReport {
    pub fn new(op: &BellOperator, pairs: &[GhzPair]) -> Self {
        EigensystemReport {
            n: op.n(),
            f: op.sign_vector().to_string(),
            geometry: GeometryJson::from(op.geometry()),
            pairs: pairs
                .iter()
                .map(|p| PairJson {
                    w: p.config.to_string(),
                    lambda: p.lambda,
                    phase_re: p.phase.re,
                    phase_im: p.phase.im,
                })
                .collect(),
        }
    }
}

impl Render for EigensystemReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .pairs
            .iter()
            .map(|p| vec![p.w.clone(), num(p.lambda), num(p.phase_re), num(p.phase_im)])
            .collect();
        (vec!["w", "lambda", "phase_re", "phase_im"], rows)
    }

    fn text(&self) -> String {
        let mut s = format!("n = {}, f = {}\n", self.n, self.f);
        for p in &self.pairs {
            let _ = writeln!(
                s,
                "  {}  ±{}  phase ({}, {})",
                p.w,
                num(p.lambda),
                num(p.phase_re),
                num(p.phase_im)
            );
        }
        s
    }
}

impl Render for VerifyReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .results
            .iter()
            .map(|r| {
                vec![
                    r.trial.to_string(),
                    r.f.clone(),
                    num(r.spectrum_residual),
                    num(r.pairing_residual),
                    num(r.sum_rule_residual),
                    num(r.max_abs_coefficient),
                    num(r.permutation_residual),
                    num(r.projection_residual),
                    num(r.separable_max),
                    r.failure.clone().unwrap_or_default(),
                ]
            })
            .collect();
        (
            vec![
                "trial",
                "f",
                "spectrum_residual",
                "pairing_residual",
                "sum_rule_residual",
                "max_abs_coefficient",
                "permutation_residual",
                "projection_residual",
                "separable_max",
                "failure",
            ],
            rows,
        )
    }

    fn text(&self) -> String {
        let m = &self.max;
        let mut s = format!(
            "verify n = {}, trials = {}, seed = {}: {}\n",
            self.n,
            self.trials,
            self.seed,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for (name, v) in [
            ("spectrum residual", m.spectrum_residual),
            ("pairing residual", m.pairing_residual),
            ("sum rule residual", m.sum_rule_residual),
            ("max |C_p|", m.max_abs_coefficient),
            ("permutation residual", m.permutation_residual),
            ("projection residual", m.projection_residual),
            ("max separable |<B>|", m.separable_max),
        ] {
            let _ = writeln!(s, "  {name:<22}{}", num(v));
        }
        if let Some(r) = &self.first_failure {
            let _ = writeln!(s, "first failure: trial {} f = {}", r.trial, r.f);
            let _ = writeln!(s, "  {}", r.failure.as_deref().unwrap_or(""));
            for (k, site) in r.geometry.sites.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  site {k}: phi0 = {}, phi1 = {}",
                    num(site.phi0),
                    num(site.phi1)
                );
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MerminEntryJson {
    pub f: String,
    pub min_abs_coefficient: f64,
    pub max_abs_coefficient: f64,
    pub spectral_radius: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MerminReportJson {
    pub n: usize,
    pub expected_radius: f64,
    pub passed: bool,
    pub entries: Vec<MerminEntryJson>,
}

impl From<&MerminReport> for MerminReportJson {
    fn from(r: &MerminReport) -> Self {
        MerminReportJson {
            n: r.n,
            expected_radius: r.expected_radius,
            passed: r.passed(),
            entries: r
                .entries
                .iter()
                .map(|e| MerminEntryJson {
                    f: e.f.to_string(),
                    min_abs_coefficient: e.min_abs_coefficient,
                    max_abs_coefficient: e.max_abs_coefficient,
                    spectral_radius: e.spectral_radius,
                    passed: e.passed,
                })
                .collect(),
        }
    }
}

impl Render for MerminReportJson {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .entries
            .iter()
            .map(|e| {
                vec![
                    e.f.clone(),
                    num(e.min_abs_coefficient),
                    num(e.max_abs_coefficient),
                    num(e.spectral_radius),
                    e.passed.to_string(),
                ]
            })
            .collect();
        (
            vec![
                "f",
                "min_abs_coefficient",
                "max_abs_coefficient",
                "spectral_radius",
                "passed",
            ],
            rows,
        )
    }

    fn text(&self) -> String {
        let mut s = format!(
            "n = {}: expected radius {}, {}\n",
            self.n,
            num(self.expected_radius),
            if self.passed { "PASS" } else { "FAIL" }
        );
        for e in &self.entries {
            let _ = writeln!(
                s,
                "  {}  |C_p| in [{}, {}]  radius {}",
                e.f,
                num(e.min_abs_coefficient),
                num(e.max_abs_coefficient),
                num(e.spectral_radius)
            );
        }
        s
    }
}
