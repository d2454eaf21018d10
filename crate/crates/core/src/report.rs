//! Identity reports and their JSON/CSV emission.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{BiPoly, CycRat, Rat, UniPoly};
use crate::error::{Error, Result};

/// A report parameter: integers stay integers, rationals are written `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Rat(Rat),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(n) => write!(f, "{n}"),
            Param::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl From<i64> for Param {
    fn from(n: i64) -> Self {
        Param::Int(n)
    }
}

impl From<usize> for Param {
    fn from(n: usize) -> Self {
        Param::Int(n as i64)
    }
}

impl From<u64> for Param {
    fn from(n: u64) -> Self {
        Param::Int(n as i64)
    }
}

impl From<u32> for Param {
    fn from(n: u32) -> Self {
        Param::Int(n.into())
    }
}

impl From<Rat> for Param {
    fn from(r: Rat) -> Self {
        Param::Rat(r)
    }
}

pub type Params = BTreeMap<String, Param>;

/// Builds a [`Params`] map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, Param); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Something that can stand on the difference side of an identity.
pub trait Residual {
    fn is_zero_residual(&self) -> bool;
    fn render_residual(&self) -> String;
}

impl Residual for BiPoly {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn render_residual(&self) -> String {
        self.to_string()
    }
}

impl Residual for UniPoly<Rat> {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn render_residual(&self) -> String {
        self.render("l")
    }
}

impl Residual for UniPoly<CycRat> {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn render_residual(&self) -> String {
        self.render("l")
    }
}

impl Residual for Rat {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn render_residual(&self) -> String {
        self.to_string()
    }
}

impl Residual for CycRat {
    fn is_zero_residual(&self) -> bool {
        crate::arith::Ring::is_zero(self)
    }
    fn render_residual(&self) -> String {
        self.to_string()
    }
}

/// Outcome of checking one identity at one parameter point.
///
/// `pass` is true exactly when the residual is zero; `residual` is empty on
/// pass and the canonical rendering of the difference otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub pass: bool,
    pub residual: String,
}

impl IdentityReport {
    pub fn check(identity: &str, params: Params, residual: &dyn Residual) -> Self {
        let pass = residual.is_zero_residual();
        IdentityReport {
            identity: identity.to_string(),
            params,
            pass,
            residual: if pass { String::new() } else { residual.render_residual() },
        }
    }

    /// A failure that has no polynomial residual (e.g. an invalid table).
    pub fn failure(identity: &str, params: Params, message: String) -> Self {
        IdentityReport { identity: identity.to_string(), params, pass: false, residual: message }
    }

    /// `k=v;k=v` in key order.
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown format {other:?} (expected json or csv)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Serializes reports. JSON is a pretty-printed array of report objects;
/// CSV has the header `identity,params,pass,residual`.
pub fn emit(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("identity,params,pass,residual\n");
            for r in reports {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_field(&r.identity),
                    csv_field(&r.params_string()),
                    r.pass,
                    csv_field(&r.residual)
                ));
            }
            s
        }
    }
}

/// Inverse of [`emit`] for the JSON format.
pub fn parse_json(s: &str) -> Result<Vec<IdentityReport>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
