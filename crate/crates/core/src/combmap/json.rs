//! JSON form of a map: `{"darts", "alpha", "sigma", "labels", "holes"}`.

use serde::{Deserialize, Serialize};

use super::{build_map, build_multi, CombMap, CurveLabel, EdgeLabel, LabelKind, MapError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub edge: usize,
    pub kind: String,
    #[serde(default)]
    pub index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    #[serde(default)]
    pub labels: Vec<LabelJson>,
    #[serde(default)]
    pub holes: Vec<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub multi: bool,
}

impl MapJson {
    pub fn edge_labels(&self) -> Result<Vec<EdgeLabel>, MapError> {
        self.labels
            .iter()
            .map(|l| {
                let kind = LabelKind::parse(&l.kind).ok_or_else(|| MapError::LabelMismatch {
                    dart: 2 * l.edge,
                    reason: format!("unknown label kind {:?}", l.kind),
                })?;
                Ok(EdgeLabel { edge: l.edge, label: CurveLabel::new(kind, if kind.is_curve() { l.index } else { 0 }) })
            })
            .collect()
    }

    pub fn to_map(&self) -> Result<CombMap, MapError> {
        let labels = self.edge_labels()?;
        let build = if self.multi { build_multi } else { build_map };
        build(self.darts, self.alpha.clone(), self.sigma.clone(), &labels, &self.holes)
    }
}

impl From<&CombMap> for MapJson {
    fn from(m: &CombMap) -> Self {
        let labels = m
            .edge_labels()
            .into_iter()
            .enumerate()
            .map(|(edge, l)| LabelJson { edge, kind: l.kind.as_str().to_string(), index: l.index })
            .collect();
        MapJson {
            darts: m.dart_count(),
            alpha: m.alpha_slice().to_vec(),
            sigma: m.sigma_slice().to_vec(),
            labels,
            holes: m.holes().iter().copied().collect(),
            multi: m.is_multi_component(),
        }
    }
}
