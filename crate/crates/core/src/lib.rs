//! Pr-diagrams and colored chord diagrams of Morse flows on 3-manifolds with
//! boundary: surfaces as labeled combinatorial maps, chord-diagram enumeration
//! for handlebodies, and catalogs of classification results.

pub mod catalog;
pub mod chord;
pub mod combmap;
pub mod export;
pub mod fixtures;
pub mod prdiag;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which circle/surface symmetries identify two diagrams.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    /// Rotations only; orientation-reversing maps are not equivalences.
    RotationOnly,
    /// Rotations and reflections. This convention reproduces the base counts
    /// 1, 4, 82 for genus 1, 2, 3 and is the default.
    #[default]
    Dihedral,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::RotationOnly => "rotation_only",
            Symmetry::Dihedral => "dihedral",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown symmetry {0:?} (expected rotation or dihedral)")]
pub struct ParseSymmetryError(String);

impl FromStr for Symmetry {
    type Err = ParseSymmetryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rotation" | "rotation_only" | "rotation-only" => Ok(Symmetry::RotationOnly),
            "dihedral" => Ok(Symmetry::Dihedral),
            other => Err(ParseSymmetryError(other.to_string())),
        }
    }
}
