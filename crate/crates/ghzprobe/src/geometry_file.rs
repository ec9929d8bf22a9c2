//! Geometry files and named presets.
//!
//! A geometry file is `{"sites": [{"phi0": 1.57, "phi1": 0.0}, ...]}`, one
//! entry per particle.

use std::fs;
use std::path::Path;

use ghzprobe_core::{optimal_geometry, Configuration, Geometry, SiteGeometry};
use serde::{Deserialize, Serialize};

use crate::error::{AppError, AppResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteJson {
    pub phi0: f64,
    pub phi1: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryJson {
    pub sites: Vec<SiteJson>,
}

impl GeometryJson {
    pub fn to_geometry(&self) -> AppResult<Geometry> {
        let sites = self
            .sites
            .iter()
            .map(|s| SiteGeometry::new(s.phi0, s.phi1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Geometry::new(sites)?)
    }
}

impl From<&Geometry> for GeometryJson {
    fn from(g: &Geometry) -> Self {
        GeometryJson {
            sites: g
                .sites()
                .iter()
                .map(|s| SiteJson {
                    phi0: s.phi0(),
                    phi1: s.phi1(),
                })
                .collect(),
        }
    }
}

pub fn parse_geometry(text: &str) -> serde_json::Result<GeometryJson> {
    serde_json::from_str(text)
}

pub fn load_geometry(path: &Path) -> AppResult<Geometry> {
    let text = fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let json = parse_geometry(&text).map_err(|source| AppError::GeometryFile {
        path: path.to_path_buf(),
        source,
    })?;
    json.to_geometry()
}

/// `orthogonal`, `aligned` or `optimal:<w>` with `w` a `+`/`-` string of
/// length `n`.
pub fn preset_geometry(name: &str, n: usize) -> AppResult<Geometry> {
    match name {
        "orthogonal" => Ok(Geometry::orthogonal(n)?),
        "aligned" => Ok(Geometry::aligned(n)?),
        _ => {
            let w = name.strip_prefix("optimal:").ok_or_else(|| {
                AppError::Usage(format!(
                    "unknown preset {name:?}; expected orthogonal, aligned or optimal:<w>"
                ))
            })?;
            let w: Configuration = w.parse()?;
            if w.n() != n {
                return Err(AppError::Usage(format!(
                    "preset configuration has {} signs but n = {n}",
                    w.n()
                )));
            }
            Ok(optimal_geometry(&w))
        }
    }
}
