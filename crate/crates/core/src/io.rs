//! JSON instance and committee files.
//!
//! Instances are either `{"format":"matrix","k":..,"matrix":[[..]]}` or
//! `{"format":"points","k":..,"dim":..,"points":[[..]],"norm":"l2"}`.
//! Committees are `{"members":[..]}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{Committee, MetricInstance, Norm};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum InstanceFile {
    Matrix {
        k: usize,
        matrix: Vec<Vec<f64>>,
    },
    Points {
        k: usize,
        dim: usize,
        points: Vec<Vec<f64>>,
        #[serde(default)]
        norm: Norm,
    },
}

impl InstanceFile {
    pub fn from_instance(inst: &MetricInstance) -> Self {
        InstanceFile::Matrix {
            k: inst.k(),
            matrix: inst.to_matrix(),
        }
    }

    pub fn into_instance(self) -> Result<MetricInstance> {
        match self {
            InstanceFile::Matrix { k, matrix } => MetricInstance::validate(matrix, k),
            InstanceFile::Points {
                k,
                dim,
                points,
                norm,
            } => {
                if let Some(i) = points.iter().position(|p| p.len() != dim) {
                    return Err(Error::Format(format!(
                        "point {i} has dimension {}, expected {dim}",
                        points[i].len()
                    )));
                }
                MetricInstance::from_points(&points, k, norm)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommitteeFile {
    pub members: Vec<usize>,
}

pub fn parse_instance(text: &str) -> Result<MetricInstance> {
    serde_json::from_str::<InstanceFile>(text)?.into_instance()
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<MetricInstance> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn instance_to_json(inst: &MetricInstance) -> Result<String> {
    Ok(serde_json::to_string(&InstanceFile::from_instance(inst))?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &MetricInstance) -> Result<()> {
    fs::write(path, instance_to_json(inst)?)?;
    Ok(())
}

/// Parses a committee and validates it against `inst`.
pub fn parse_committee(text: &str, inst: &MetricInstance) -> Result<Committee> {
    let file: CommitteeFile = serde_json::from_str(text)?;
    Committee::new(inst, file.members)
}

pub fn read_committee(path: impl AsRef<Path>, inst: &MetricInstance) -> Result<Committee> {
    parse_committee(&fs::read_to_string(path)?, inst)
}

pub fn write_committee(path: impl AsRef<Path>, committee: &Committee) -> Result<()> {
    fs::write(path, serde_json::to_string(committee)?)?;
    Ok(())
}
