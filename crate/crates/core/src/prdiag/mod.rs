//! Pr-diagrams: a surface `F` with boundary carrying four curve systems
//! `u`, `U` (green) and `v`, `V` (red).
//!
//! Conventions used throughout:
//! - `u`/`v` arcs run through the interior of `F` and end on its boundary.
//! - `U`/`V` curves are carried along the boundary of `F`: their edges bound
//!   hole faces. `U`/`V` arcs run between endpoints of `u`/`v` arcs, and
//!   closed `U`/`V` curves are whole boundary circles.
//! - Auxiliary interior edges are labeled `PLAIN`.

mod boundary;
mod convert;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chord::ChordError;
use crate::combmap::{
    canonical_code, CanonicalCode, CombMap, CurveLabel, Dart, EmbeddedCurve, LabelKind, MapError, MapJson,
};
use crate::Symmetry;

pub use boundary::{boundary_restriction, BoundaryFlowGraph, FlowEdge, FlowNode, Role};
pub use convert::{from_colored_chord, to_colored_chord, to_colored_chord_with};
pub use validate::{census, is_optimal, morse_checks, validate, Census, MorseReport, ValidityReport, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("malformed curve registry: {0}")]
    Structure(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram is not optimal: {0}")]
    NotOptimal(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(#[from] ChordError),
}

/// The six fixed-point types, indexed by `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FixedPointType(u8);

impl FixedPointType {
    pub const ALL: [FixedPointType; 6] = [
        FixedPointType(1),
        FixedPointType(2),
        FixedPointType(3),
        FixedPointType(4),
        FixedPointType(5),
        FixedPointType(6),
    ];

    pub fn new(type_id: u8) -> Option<Self> {
        (1..=6).contains(&type_id).then_some(Self(type_id))
    }

    pub fn type_id(self) -> u8 {
        self.0
    }

    /// `(p, q)`: `p + q` is the dimension of the stable manifold, `p` its
    /// dimension inside the boundary.
    pub fn index_pair(self) -> (u8, u8) {
        let i = self.0 - 1;
        (i / 2, i % 2)
    }

    /// Role in the restricted flow on the boundary.
    pub fn role(self) -> Role {
        match self.index_pair().0 {
            0 => Role::Source,
            1 => Role::Saddle,
            _ => Role::Sink,
        }
    }
}

/// The four curve systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `u`
    GreenArc,
    /// `U`
    GreenCycle,
    /// `v`
    RedArc,
    /// `V`
    RedCycle,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::GreenArc, Family::GreenCycle, Family::RedArc, Family::RedCycle];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::GreenArc => "u",
            Family::GreenCycle => "U",
            Family::RedArc => "v",
            Family::RedCycle => "V",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.symbol() == s)
    }

    pub fn kind(self) -> LabelKind {
        match self {
            Family::GreenArc => LabelKind::GreenArc,
            Family::GreenCycle => LabelKind::GreenCycle,
            Family::RedArc => LabelKind::RedArc,
            Family::RedCycle => LabelKind::RedCycle,
        }
    }

    pub fn from_kind(kind: LabelKind) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.kind() == kind)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrCurve {
    pub family: Family,
    pub index: u32,
    pub edges: Vec<usize>,
    pub closed: bool,
}

impl PrCurve {
    pub fn label(&self) -> CurveLabel {
        CurveLabel::new(self.family.kind(), self.index)
    }

    pub fn embedded(&self) -> EmbeddedCurve {
        EmbeddedCurve { edges: self.edges.clone(), closed: self.closed, label: self.label() }
    }
}

/// A surface with its curve registry. Every curve edge carries the label of
/// its curve, and every curve-labeled edge belongs to a registered curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrDiagram {
    surface: CombMap,
    curves: Vec<PrCurve>,
    paths: Vec<Vec<Dart>>,
}

impl PrDiagram {
    pub fn new(surface: CombMap, mut curves: Vec<PrCurve>) -> Result<Self, PrError> {
        curves.sort_by_key(|c| (c.family, c.index));
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        let mut paths = Vec::with_capacity(curves.len());
        for (k, c) in curves.iter().enumerate() {
            if !seen.insert((c.family, c.index)) {
                return Err(PrError::Structure(format!("curve {}{} listed twice", c.family, c.index)));
            }
            for &e in &c.edges {
                if e >= surface.edge_count() {
                    return Err(PrError::Structure(format!("curve {}{} uses missing edge {e}", c.family, c.index)));
                }
                if surface.edge_label(e) != c.label() {
                    return Err(PrError::Structure(format!(
                        "edge {e} of curve {}{} is labeled {}",
                        c.family,
                        c.index,
                        surface.edge_label(e)
                    )));
                }
                if owner.insert(e, k).is_some() {
                    return Err(PrError::Structure(format!("edge {e} belongs to two curves")));
                }
            }
            paths.push(surface.curve_darts(&c.embedded())?);
        }
        for e in 0..surface.edge_count() {
            if surface.edge_label(e).kind.is_curve() && !owner.contains_key(&e) {
                return Err(PrError::Structure(format!(
                    "edge {e} is labeled {} but belongs to no curve",
                    surface.edge_label(e)
                )));
            }
        }
        Ok(Self { surface, curves, paths })
    }

    /// Reads the curve registry off the edge labels: each label names one
    /// curve, whose edges must form a simple path or cycle.
    pub fn from_labeled_map(surface: CombMap) -> Result<Self, PrError> {
        let mut groups: BTreeMap<CurveLabel, Vec<usize>> = BTreeMap::new();
        for e in 0..surface.edge_count() {
            let l = surface.edge_label(e);
            if l.kind.is_curve() {
                groups.entry(l).or_default().push(e);
            }
        }
        let mut curves = Vec::new();
        for (label, edges) in groups {
            let (edges, closed) = order_edges(&surface, &edges).ok_or_else(|| {
                PrError::Structure(format!("edges labeled {label} do not form a simple path or cycle"))
            })?;
            let family = Family::from_kind(label.kind).expect("curve kind");
            curves.push(PrCurve { family, index: label.index, edges, closed });
        }
        Self::new(surface, curves)
    }

    /// A diagram with no curves: the two-point flow on the ball when `F` is a disk.
    pub fn bare(surface: CombMap) -> Self {
        Self::new(surface, Vec::new()).expect("no curves")
    }

    pub fn surface(&self) -> &CombMap {
        &self.surface
    }

    pub fn curves(&self) -> &[PrCurve] {
        &self.curves
    }

    pub fn curves_of(&self, family: Family) -> impl Iterator<Item = &PrCurve> {
        self.curves.iter().filter(move |c| c.family == family)
    }

    /// Dart paths of the curves that belong to `family`, in registry order.
    pub(crate) fn paths_of(&self, family: Family) -> Vec<(&PrCurve, &[Dart])> {
        self.curves
            .iter()
            .zip(&self.paths)
            .filter(|(c, _)| c.family == family)
            .map(|(c, p)| (c, p.as_slice()))
            .collect()
    }

    pub fn count(&self, family: Family) -> usize {
        self.curves_of(family).count()
    }

    pub fn code(&self, sym: Symmetry) -> CanonicalCode {
        canonical_code(&self.surface, sym)
    }

    /// Renames darts by `perm`, keeping the curve registry.
    pub fn relabel(&self, perm: &[Dart]) -> Result<PrDiagram, PrError> {
        PrDiagram::from_labeled_map(self.surface.relabel(perm)?)
    }

    /// The diagram with green and red swapped.
    pub fn color_swapped(&self) -> PrDiagram {
        let mut j = MapJson::from(&self.surface);
        for l in &mut j.labels {
            let swapped = match LabelKind::parse(&l.kind) {
                Some(LabelKind::GreenArc) => LabelKind::RedArc,
                Some(LabelKind::RedArc) => LabelKind::GreenArc,
                Some(LabelKind::GreenCycle) => LabelKind::RedCycle,
                Some(LabelKind::RedCycle) => LabelKind::GreenCycle,
                Some(k) => k,
                None => unreachable!(),
            };
            l.kind = swapped.as_str().to_string();
        }
        PrDiagram::from_labeled_map(j.to_map().expect("relabeling keeps the map valid"))
            .expect("relabeling keeps the curves valid")
    }
}

/// Orders an edge set into a simple path or cycle; `None` if impossible.
fn order_edges(m: &CombMap, edges: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in edges {
        let (a, b) = m.edge_darts(e);
        at.entry(m.vertex_of(a)).or_default().push(e);
        at.entry(m.vertex_of(b)).or_default().push(e);
    }
    if at.values().any(|v| v.len() > 2) {
        return None;
    }
    let ends: Vec<usize> = at.iter().filter(|(_, v)| v.len() == 1).map(|(&x, _)| x).collect();
    let closed = ends.is_empty();
    if !closed && ends.len() != 2 {
        return None;
    }
    let mut v = if closed { *at.keys().next()? } else { ends[0] };
    let mut out = Vec::new();
    let mut used = BTreeSet::new();
    while let Some(&e) = at[&v].iter().find(|e| !used.contains(*e)) {
        used.insert(e);
        out.push(e);
        let (a, b) = m.edge_darts(e);
        v = if m.vertex_of(a) == v { m.vertex_of(b) } else { m.vertex_of(a) };
    }
    (out.len() == edges.len()).then_some((out, closed))
}

/// Whether two diagrams are isomorphic (label-preserving homeomorphism, with
/// orientation reversal allowed under [`Symmetry::Dihedral`]).
pub fn equivalent(a: &PrDiagram, b: &PrDiagram) -> bool {
    equivalent_with(a, b, Symmetry::default())
}

pub fn equivalent_with(a: &PrDiagram, b: &PrDiagram, sym: Symmetry) -> bool {
    a.code(sym) == b.code(sym)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub family: String,
    pub index: u32,
    pub edges: Vec<usize>,
    #[serde(default)]
    pub closed: bool,
}

/// The map format plus a `curves` list. When `curves` is absent the registry is
/// read off the labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrJson {
    #[serde(flatten)]
    pub map: MapJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curves: Option<Vec<CurveJson>>,
}

impl PrJson {
    pub fn to_diagram(&self) -> Result<PrDiagram, PrError> {
        let surface = self.map.to_map()?;
        match &self.curves {
            None => PrDiagram::from_labeled_map(surface),
            Some(cs) => {
                let curves = cs
                    .iter()
                    .map(|c| {
                        let family = Family::parse(&c.family)
                            .ok_or_else(|| PrError::Structure(format!("unknown family {:?}", c.family)))?;
                        Ok(PrCurve { family, index: c.index, edges: c.edges.clone(), closed: c.closed })
                    })
                    .collect::<Result<Vec<_>, PrError>>()?;
                PrDiagram::new(surface, curves)
            }
        }
    }
}

impl From<&PrDiagram> for PrJson {
    fn from(d: &PrDiagram) -> Self {
        PrJson {
            map: MapJson::from(&d.surface),
            curves: Some(
                d.curves
                    .iter()
                    .map(|c| CurveJson {
                        family: c.family.symbol().to_string(),
                        index: c.index,
                        edges: c.edges.clone(),
                        closed: c.closed,
                    })
                    .collect(),
            ),
        }
    }
}
