//! On-disk formats: curves and pole lists as JSON documents.

use std::fs;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sphere_search::{PolylineCurve, UnitDirection, Vector};

use crate::error::CliError;

/// A polyline as `{"dim": d, "closed": bool, "vertices": [[x1, …, xd], …]}`.
///
/// Floats are written in shortest round-trip form, so reading a written
/// file gives back bit-identical coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub dim: usize,
    pub closed: bool,
    pub vertices: Vec<Vec<f64>>,
}

impl CurveFile {
    pub fn from_curve(curve: &PolylineCurve) -> Self {
        CurveFile {
            dim: curve.dim(),
            closed: curve.is_closed(),
            vertices: curve
                .vertices()
                .iter()
                .map(|v| v.coords().to_vec())
                .collect(),
        }
    }

    pub fn to_curve(&self) -> Result<PolylineCurve, String> {
        let vertices = vectors(self.dim, &self.vertices)?;
        PolylineCurve::new(vertices, self.closed).map_err(|e| e.to_string())
    }

    pub fn read(path: &Path) -> Result<PolylineCurve, CliError> {
        let file: CurveFile = read_json(path)?;
        file.to_curve().map_err(|message| CliError::Format {
            path: path.to_owned(),
            message,
        })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        write_json(path, self)
    }
}

/// Hemisphere poles as `{"dim": d, "poles": [[…], …]}`. Poles need not be
/// unit length; they are normalized on load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleFile {
    pub dim: usize,
    pub poles: Vec<Vec<f64>>,
}

impl PoleFile {
    pub fn from_poles(dim: usize, poles: &[UnitDirection]) -> Self {
        PoleFile {
            dim,
            poles: poles.iter().map(|p| p.coords().to_vec()).collect(),
        }
    }

    pub fn to_poles(&self) -> Result<Vec<UnitDirection>, String> {
        if self.poles.is_empty() {
            return Err("no poles".into());
        }
        vectors(self.dim, &self.poles)?
            .iter()
            .enumerate()
            .map(|(i, v)| UnitDirection::normalize(v).map_err(|e| format!("pole {i}: {e}")))
            .collect()
    }

    pub fn read(path: &Path) -> Result<Vec<UnitDirection>, CliError> {
        let file: PoleFile = read_json(path)?;
        file.to_poles().map_err(|message| CliError::Format {
            path: path.to_owned(),
            message,
        })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        write_json(path, self)
    }
}

fn vectors(dim: usize, rows: &[Vec<f64>]) -> Result<Vec<Vector>, String> {
    if dim == 0 {
        return Err("dim must be positive".into());
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != dim {
                return Err(format!(
                    "row {i} has {} coordinates, expected {dim}",
                    row.len()
                ));
            }
            Vector::new(row.clone()).map_err(|e| format!("row {i}: {e}"))
        })
        .collect()
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Format {
        path: path.to_owned(),
        message: e.to_string(),
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sphere_search::build_inspection_tour;

    #[test]
    fn curve_round_trips_bit_exactly() {
        let tour = build_inspection_tour(7).unwrap().scaled(1.0 / 3.0);
        let text = serde_json::to_string(&CurveFile::from_curve(&tour)).unwrap();
        let back: CurveFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_curve().unwrap(), tour);
    }

    #[test]
    fn rejects_ragged_rows() {
        let file = CurveFile {
            dim: 2,
            closed: true,
            vertices: vec![vec![1.0, 0.0], vec![0.0]],
        };
        assert!(file.to_curve().unwrap_err().contains("row 1"));
    }

    #[test]
    fn poles_are_normalized() {
        let file = PoleFile {
            dim: 2,
            poles: vec![vec![3.0, 4.0]],
        };
        let poles = file.to_poles().unwrap();
        assert!((poles[0][0] - 0.6).abs() < 1e-15 && (poles[0][1] - 0.8).abs() < 1e-15);
        let zero = PoleFile {
            dim: 2,
            poles: vec![vec![0.0, 0.0]],
        };
        assert!(zero.to_poles().is_err());
    }
}
