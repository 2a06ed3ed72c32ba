use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use symalg::oscillator::NumericQuadraticSpec;
use symalg::rational::{parse_rational, Rational};

use crate::CliError;

pub(crate) fn parse<T: DeserializeOwned>(text: &str, path: &Path) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub(crate) enum FamilyChoice {
    #[default]
    All,
    #[serde(rename = "eps+")]
    EpsPlus,
    #[serde(rename = "eps-")]
    EpsMinus,
    Second,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct SpectrumJob {
    pub a: f64,
    pub p: usize,
    #[serde(default)]
    pub family: FamilyChoice,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct Darboux2Job {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub energy: f64,
    pub p: usize,
    pub b_shift: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct QuadraticJob {
    pub spec: NumericQuadraticSpec,
    pub p: usize,
    #[serde(default)]
    pub b_shift: f64,
}

/// Exactly one source for the structure function.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct FockJob {
    pub p: Option<usize>,
    /// Coefficients of `Φ` in ascending degree.
    pub phi: Option<Vec<f64>>,
    pub roots: Option<Vec<f64>>,
    pub scale: Option<f64>,
    pub spectrum: Option<SpectrumJob>,
    pub darboux2: Option<Darboux2Job>,
    pub quadratic: Option<QuadraticJob>,
}

/// A rational given as a JSON number or as a `"num/den"` string.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Exact(pub Rational);

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(serde_json::Number),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Text(s) => s,
            Raw::Number(n) => n.to_string(),
        };
        parse_rational(&text)
            .map(Exact)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct VermaJob {
    #[serde(rename = "M")]
    pub order: usize,
    #[serde(rename = "E")]
    pub e: Exact,
    pub lambda: Exact,
    pub u: Exact,
    pub u1: Option<Exact>,
    pub u2: Option<Exact>,
    pub u3: Option<Exact>,
    pub v1: Option<Exact>,
    pub v2: Option<Exact>,
    pub v3: Option<Exact>,
    pub v: Option<Exact>,
    pub band: Option<Vec<i64>>,
    /// Report the least-squares band even when the relations cannot hold.
    #[serde(default)]
    pub accept_least_squares: bool,
}
