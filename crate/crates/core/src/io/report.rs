//! JSON verification reports and the shared number formatting.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::eigen::Spectrum;

const SIGNIFICANT_DIGITS: usize = 12;

/// Entries this far below the largest magnitude in a spectrum are solver
/// noise and print as 0.
const NOISE_FLOOR: f64 = 1e-12;

/// Formula-versus-oracle outcome for one matrix family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub family: String,
    pub formula: Vec<f64>,
    pub oracle: Vec<f64>,
    #[serde(serialize_with = "finite_or_null", deserialize_with = "null_as_infinity")]
    pub max_deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph_id: String,
    pub n: usize,
    pub t: usize,
    pub tol: f64,
    pub families: Vec<FamilyRecord>,
    /// Largest relative residual over every constructed eigenvector.
    #[serde(serialize_with = "finite_or_null", deserialize_with = "null_as_infinity")]
    pub eigenvector_residuals: f64,
    pub overall_pass: bool,
}

impl VerificationReport {
    /// Assembles a report, deriving `overall_pass` from the family flags and
    /// the residual bound.
    pub fn new(
        graph_id: impl Into<String>,
        n: usize,
        t: usize,
        tol: f64,
        families: Vec<FamilyRecord>,
        eigenvector_residuals: f64,
    ) -> Self {
        let overall_pass = families.iter().all(|f| f.pass) && eigenvector_residuals <= tol;
        Self {
            graph_id: graph_id.into(),
            n,
            t,
            tol,
            families,
            eigenvector_residuals,
            overall_pass,
        }
    }

    pub fn family(&self, name: &str) -> Option<&FamilyRecord> {
        self.families.iter().find(|f| f.family == name)
    }
}

fn finite_or_null<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_none()
    }
}

fn null_as_infinity<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap();
    r + 0.0
}

fn snap_noise(values: &[f64]) -> Vec<f64> {
    let scale = values.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    values
        .iter()
        .map(|&x| if x.abs() <= NOISE_FLOOR * scale { 0.0 } else { round_sig(x) })
        .collect()
}

/// Twelve significant digits, trailing zeros trimmed; `-0` prints as `0`.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// The values of `s` as they appear in output: twelve significant digits,
/// solver noise snapped to 0.
pub fn rounded_values(s: &Spectrum) -> Vec<f64> {
    snap_noise(s.values())
}

/// Space-separated, non-increasing, noise snapped to 0.
pub fn format_spectrum(s: &Spectrum) -> String {
    rounded_values(s)
        .into_iter()
        .map(format_value)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serialises a report as pretty JSON. Keys follow field order, spectra
/// are sorted arrays, and floats carry twelve significant digits, so equal
/// inputs give byte-identical output.
pub fn write_report(r: &VerificationReport) -> String {
    let mut rounded = r.clone();
    rounded.tol = round_sig(r.tol);
    rounded.eigenvector_residuals = round_sig(r.eigenvector_residuals);
    for f in &mut rounded.families {
        f.formula = rounded_values(&Spectrum::new(std::mem::take(&mut f.formula)));
        f.oracle = rounded_values(&Spectrum::new(std::mem::take(&mut f.oracle)));
        f.max_deviation = round_sig(f.max_deviation);
    }
    serde_json::to_string_pretty(&rounded).expect("report serialisation cannot fail")
}

pub fn parse_report(json: &str) -> serde_json::Result<VerificationReport> {
    serde_json::from_str(json)
}
