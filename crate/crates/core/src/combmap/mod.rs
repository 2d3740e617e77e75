//! Labeled combinatorial maps encoding compact oriented surfaces with boundary.
//!
//! A map is a set of darts with two permutations: `alpha`, the edge involution,
//! and `sigma`, the counterclockwise rotation of darts around their vertex.
//! Faces are the orbits of `phi = sigma ∘ alpha`. A face orbit traverses its
//! face with the face on the right, so for a hole face the surface lies on the
//! left of the walk.
//!
//! Surfaces with boundary are stored as closed maps in which every boundary
//! circle bounds a face that is marked as a hole. Edges carry a [`CurveLabel`]
//! naming the curve system they belong to.

mod canon;
mod cut;
mod json;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_code, CanonicalCode};
pub use cut::{Cut, Origin, Side};
pub use json::{LabelJson, MapJson};

/// Dart index in `0..dart_count`.
pub type Dart = usize;

const UNSET: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("inconsistent sizes: {0}")]
    SizeMismatch(String),
    #[error("alpha is not a fixed-point-free involution at dart {dart}")]
    NonInvolution { dart: Dart },
    #[error("sigma is not a permutation at dart {dart}")]
    NotPermutation { dart: Dart },
    #[error("map is disconnected: dart {dart} is unreachable from dart 0")]
    DisconnectedUnlessFlagged { dart: Dart },
    #[error("label mismatch at dart {dart}: {reason}")]
    LabelMismatch { dart: Dart, reason: String },
    #[error("{face} is not a face id (smallest dart of a face orbit)")]
    UnknownFace { face: usize },
    #[error("chi = {chi} with {holes} boundary circles gives no integer genus")]
    NonIntegerGenus { chi: i64, holes: usize },
    #[error("operation needs a connected map")]
    Disconnected,
    #[error("curve is not embedded: {0}")]
    CurveNotEmbedded(String),
    #[error("arc endpoint at vertex {vertex} is not on the boundary")]
    ArcEndpointNotOnBoundary { vertex: usize },
    #[error("curve is not closed")]
    CurveNotClosed,
}

/// Which curve system an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    /// Segment of the boundary of the surface.
    Bdy,
    /// Unlabeled interior edge, used to keep faces cellular.
    Plain,
    /// Edge of an arc `u_i`.
    GreenArc,
    /// Edge of a curve `U_j`.
    GreenCycle,
    /// Edge of an arc `v_i`.
    RedArc,
    /// Edge of a curve `V_j`.
    RedCycle,
}

impl LabelKind {
    pub const ALL: [LabelKind; 6] = [
        LabelKind::Bdy,
        LabelKind::Plain,
        LabelKind::GreenArc,
        LabelKind::GreenCycle,
        LabelKind::RedArc,
        LabelKind::RedCycle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LabelKind::Bdy => "BDY",
            LabelKind::Plain => "PLAIN",
            LabelKind::GreenArc => "U_GREEN_ARC",
            LabelKind::GreenCycle => "U_GREEN_CYCLE",
            LabelKind::RedArc => "V_RED_ARC",
            LabelKind::RedCycle => "V_RED_CYCLE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// True for the four curve families.
    pub fn is_curve(self) -> bool {
        !matches!(self, LabelKind::Bdy | LabelKind::Plain)
    }

    /// Labels allowed on edges that bound a hole face. `U`/`V` curves are
    /// carried along the boundary, so their edges may bound holes too.
    pub fn may_bound_hole(self) -> bool {
        matches!(self, LabelKind::Bdy | LabelKind::GreenCycle | LabelKind::RedCycle)
    }

    pub(crate) fn from_tag(t: u32) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == t)
    }

    pub(crate) fn tag(self) -> u32 {
        match self {
            LabelKind::Bdy => 0,
            LabelKind::Plain => 1,
            LabelKind::GreenArc => 2,
            LabelKind::GreenCycle => 3,
            LabelKind::RedArc => 4,
            LabelKind::RedCycle => 5,
        }
    }
}

impl fmt::Display for LabelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveLabel {
    pub kind: LabelKind,
    pub index: u32,
}

impl CurveLabel {
    pub const BDY: CurveLabel = CurveLabel { kind: LabelKind::Bdy, index: 0 };
    pub const PLAIN: CurveLabel = CurveLabel { kind: LabelKind::Plain, index: 0 };

    pub fn new(kind: LabelKind, index: u32) -> Self {
        Self { kind, index }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_curve() {
            write!(f, "{}({})", self.kind, self.index)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

/// Label assignment for one edge, as accepted by [`build_map`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub edge: usize,
    pub label: CurveLabel,
}

/// A curve drawn on the edges of a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCurve {
    /// Edge ids in traversal order.
    pub edges: Vec<usize>,
    pub closed: bool,
    pub label: CurveLabel,
}

/// `(chi, genus, boundary_count)` of a connected surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerData {
    pub chi: i64,
    pub genus: u32,
    pub boundary_count: usize,
}

impl EulerData {
    pub fn is_disk(&self) -> bool {
        self.chi == 1 && self.genus == 0 && self.boundary_count == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombMap {
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    labels: Vec<CurveLabel>,
    holes: BTreeSet<usize>,
    multi_component: bool,
    face_of: Vec<usize>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    edge_first: Vec<Dart>,
}

/// Builds a connected map. Edges are numbered by their smallest dart; edges
/// missing from `labels` are [`LabelKind::Plain`].
pub fn build_map(
    dart_count: usize,
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    labels: &[EdgeLabel],
    hole_faces: &[usize],
) -> Result<CombMap, MapError> {
    build_with(dart_count, alpha, sigma, labels, hole_faces, false)
}

/// Same as [`build_map`] but accepts several connected components.
pub fn build_multi(
    dart_count: usize,
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    labels: &[EdgeLabel],
    hole_faces: &[usize],
) -> Result<CombMap, MapError> {
    build_with(dart_count, alpha, sigma, labels, hole_faces, true)
}

fn build_with(
    dart_count: usize,
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    labels: &[EdgeLabel],
    hole_faces: &[usize],
    allow_multi: bool,
) -> Result<CombMap, MapError> {
    if alpha.len() != dart_count || sigma.len() != dart_count {
        return Err(MapError::SizeMismatch(format!(
            "darts = {dart_count}, alpha has {}, sigma has {}",
            alpha.len(),
            sigma.len()
        )));
    }
    check_involution(&alpha)?;
    let edge_first: Vec<Dart> = (0..dart_count).filter(|&d| d < alpha[d]).collect();
    let mut dart_labels = vec![CurveLabel::PLAIN; dart_count];
    let mut seen = vec![false; edge_first.len()];
    for l in labels {
        let Some(&d) = edge_first.get(l.edge) else {
            return Err(MapError::SizeMismatch(format!(
                "label for edge {} but the map has {} edges",
                l.edge,
                edge_first.len()
            )));
        };
        if seen[l.edge] {
            return Err(MapError::LabelMismatch { dart: d, reason: format!("edge {} is labeled twice", l.edge) });
        }
        seen[l.edge] = true;
        dart_labels[d] = l.label;
        dart_labels[alpha[d]] = l.label;
    }
    let map = CombMap::from_parts(alpha, sigma, dart_labels, BTreeSet::new(), allow_multi)?;
    let mut holes = BTreeSet::new();
    for &h in hole_faces {
        if h >= map.dart_count() || map.face_of[h] != h {
            return Err(MapError::UnknownFace { face: h });
        }
        holes.insert(h);
    }
    map.with_holes(holes)
}

fn check_involution(alpha: &[Dart]) -> Result<(), MapError> {
    for (d, &a) in alpha.iter().enumerate() {
        if a >= alpha.len() || a == d || alpha[a] != d {
            return Err(MapError::NonInvolution { dart: d });
        }
    }
    Ok(())
}

fn check_permutation(sigma: &[Dart]) -> Result<(), MapError> {
    let mut hit = vec![false; sigma.len()];
    for (d, &s) in sigma.iter().enumerate() {
        if s >= sigma.len() || hit[s] {
            return Err(MapError::NotPermutation { dart: d });
        }
        hit[s] = true;
    }
    Ok(())
}

/// Labels each element with the smallest member of its orbit under `step`.
fn orbit_ids(n: usize, step: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut id = vec![UNSET; n];
    for start in 0..n {
        if id[start] != UNSET {
            continue;
        }
        let mut d = start;
        while id[d] == UNSET {
            id[d] = start;
            d = step(d);
        }
    }
    id
}

impl CombMap {
    pub(crate) fn from_parts(
        alpha: Vec<Dart>,
        sigma: Vec<Dart>,
        labels: Vec<CurveLabel>,
        holes: BTreeSet<usize>,
        allow_multi: bool,
    ) -> Result<Self, MapError> {
        let n = alpha.len();
        if sigma.len() != n || labels.len() != n {
            return Err(MapError::SizeMismatch(format!("alpha {n}, sigma {}, labels {}", sigma.len(), labels.len())));
        }
        if n == 0 || !n.is_multiple_of(2) {
            return Err(MapError::SizeMismatch(format!("dart count {n} must be positive and even")));
        }
        check_involution(&alpha)?;
        check_permutation(&sigma)?;
        for d in 0..n {
            if labels[d] != labels[alpha[d]] {
                return Err(MapError::LabelMismatch {
                    dart: d,
                    reason: format!("darts {d} and {} carry different labels", alpha[d]),
                });
            }
        }
        let face_of = orbit_ids(n, |d| sigma[alpha[d]]);
        let vertex_of = orbit_ids(n, |d| sigma[d]);
        let edge_first: Vec<Dart> = (0..n).filter(|&d| d < alpha[d]).collect();
        let mut edge_of = vec![0; n];
        for (e, &d) in edge_first.iter().enumerate() {
            edge_of[d] = e;
            edge_of[alpha[d]] = e;
        }
        let mut map = CombMap {
            alpha,
            sigma,
            labels,
            holes: BTreeSet::new(),
            multi_component: false,
            face_of,
            vertex_of,
            edge_of,
            edge_first,
        };
        let reach = map.reachable_from(0);
        if let Some(d) = reach.iter().position(|&r| !r) {
            if !allow_multi {
                return Err(MapError::DisconnectedUnlessFlagged { dart: d });
            }
            map.multi_component = true;
        }
        map.with_holes(holes)
    }

    fn with_holes(mut self, holes: BTreeSet<usize>) -> Result<Self, MapError> {
        for &h in &holes {
            if h >= self.dart_count() || self.face_of[h] != h {
                return Err(MapError::UnknownFace { face: h });
            }
        }
        for d in 0..self.dart_count() {
            if holes.contains(&self.face_of[d]) && !self.labels[d].kind.may_bound_hole() {
                return Err(MapError::LabelMismatch {
                    dart: d,
                    reason: format!("edge bounds a hole but is labeled {}", self.labels[d]),
                });
            }
        }
        self.holes = holes;
        Ok(self)
    }

    fn reachable_from(&self, root: Dart) -> Vec<bool> {
        let mut seen = vec![false; self.dart_count()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(d) = stack.pop() {
            for nb in [self.alpha[d], self.sigma[d]] {
                if !seen[nb] {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        seen
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_first.len()
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    /// Face successor `sigma(alpha(d))`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.alpha[d]]
    }

    pub fn alpha_slice(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn sigma_slice(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0; self.dart_count()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inv[s] = d;
        }
        inv
    }

    pub fn label(&self, d: Dart) -> CurveLabel {
        self.labels[d]
    }

    pub fn edge_label(&self, e: usize) -> CurveLabel {
        self.labels[self.edge_first[e]]
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    /// The two darts of edge `e`, smallest first.
    pub fn edge_darts(&self, e: usize) -> (Dart, Dart) {
        let d = self.edge_first[e];
        (d, self.alpha[d])
    }

    /// Vertex id (smallest dart of the rotation orbit) of the tail of `d`.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Vertex id of the head of `d`.
    pub fn head(&self, d: Dart) -> usize {
        self.vertex_of[self.alpha[d]]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn holes(&self) -> &BTreeSet<usize> {
        &self.holes
    }

    pub fn is_hole_dart(&self, d: Dart) -> bool {
        self.holes.contains(&self.face_of[d])
    }

    pub fn is_multi_component(&self) -> bool {
        self.multi_component
    }

    /// An edge lies on the boundary when one of its darts is in a hole face.
    pub fn is_boundary_edge(&self, e: usize) -> bool {
        let (a, b) = self.edge_darts(e);
        self.is_hole_dart(a) || self.is_hole_dart(b)
    }

    /// Darts around vertex `v` in counterclockwise order, starting at `v`.
    pub fn rotation(&self, v: Dart) -> Vec<Dart> {
        let mut out = vec![v];
        let mut d = self.sigma[v];
        while d != v {
            out.push(d);
            d = self.sigma[d];
        }
        out
    }

    /// Number of hole corners at the vertex of `d`. Zero for interior vertices.
    pub fn hole_corners(&self, d: Dart) -> usize {
        self.rotation(self.vertex_of[d]).into_iter().filter(|&x| self.is_hole_dart(x)).count()
    }

    pub fn is_boundary_vertex(&self, d: Dart) -> bool {
        self.hole_corners(d) > 0
    }

    fn orbits(&self, ids: &[usize], step: impl Fn(Dart) -> Dart) -> Vec<Vec<Dart>> {
        let mut out = Vec::new();
        for (d, &id) in ids.iter().enumerate() {
            if id == d {
                let mut cyc = vec![d];
                let mut x = step(d);
                while x != d {
                    cyc.push(x);
                    x = step(x);
                }
                out.push(cyc);
            }
        }
        out
    }

    /// Face orbits, each starting at its smallest dart, sorted by that dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        self.orbits(&self.face_of, |d| self.phi(d))
    }

    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        self.orbits(&self.vertex_of, |d| self.sigma[d])
    }

    pub fn vertex_count(&self) -> usize {
        (0..self.dart_count()).filter(|&d| self.vertex_of[d] == d).count()
    }

    pub fn face_count(&self) -> usize {
        (0..self.dart_count()).filter(|&d| self.face_of[d] == d).count()
    }

    /// `V - E + (interior faces)`, defined for any map.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64 - self.holes.len() as i64
    }

    pub fn euler_genus(&self) -> Result<EulerData, MapError> {
        if self.multi_component {
            return Err(MapError::Disconnected);
        }
        let chi = self.euler_characteristic();
        let b = self.holes.len();
        let twice_genus = 2 - chi - b as i64;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(MapError::NonIntegerGenus { chi, holes: b });
        }
        Ok(EulerData { chi, genus: (twice_genus / 2) as u32, boundary_count: b })
    }

    /// Splits into connected components, each renumbered in increasing dart
    /// order. Components are listed by their smallest original dart.
    pub fn components(&self) -> Vec<CombMap> {
        self.component_darts().into_iter().map(|darts| self.restrict(&darts)).collect()
    }

    /// Original darts of each component, ascending.
    pub fn component_darts(&self) -> Vec<Vec<Dart>> {
        let n = self.dart_count();
        let mut comp = vec![UNSET; n];
        let mut out: Vec<Vec<Dart>> = Vec::new();
        for root in 0..n {
            if comp[root] != UNSET {
                continue;
            }
            let seen = self.reachable_from(root);
            let darts: Vec<Dart> = (0..n).filter(|&d| seen[d]).collect();
            for &d in &darts {
                comp[d] = out.len();
            }
            out.push(darts);
        }
        out
    }

    fn restrict(&self, darts: &[Dart]) -> CombMap {
        let mut new_id = vec![UNSET; self.dart_count()];
        for (i, &d) in darts.iter().enumerate() {
            new_id[d] = i;
        }
        let alpha = darts.iter().map(|&d| new_id[self.alpha[d]]).collect();
        let sigma = darts.iter().map(|&d| new_id[self.sigma[d]]).collect();
        let labels = darts.iter().map(|&d| self.labels[d]).collect();
        let hole_darts: Vec<Dart> = darts.iter().filter(|&&d| self.is_hole_dart(d)).map(|&d| new_id[d]).collect();
        Self::assemble(alpha, sigma, labels, &hole_darts, false)
            .expect("restriction of a valid map to a component is valid")
    }

    /// Builds a map whose holes are the faces containing any of `hole_darts`.
    pub(crate) fn assemble(
        alpha: Vec<Dart>,
        sigma: Vec<Dart>,
        labels: Vec<CurveLabel>,
        hole_darts: &[Dart],
        allow_multi: bool,
    ) -> Result<CombMap, MapError> {
        let face_of = orbit_ids(alpha.len(), |d| sigma[alpha[d]]);
        let holes = hole_darts.iter().map(|&d| face_of[d]).collect();
        CombMap::from_parts(alpha, sigma, labels, holes, allow_multi)
    }

    /// Renames dart `d` to `perm[d]`.
    pub fn relabel(&self, perm: &[Dart]) -> Result<CombMap, MapError> {
        let n = self.dart_count();
        if perm.len() != n {
            return Err(MapError::SizeMismatch(format!("permutation of length {} for {n} darts", perm.len())));
        }
        check_permutation(perm)?;
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        let mut labels = vec![CurveLabel::PLAIN; n];
        for d in 0..n {
            alpha[perm[d]] = perm[self.alpha[d]];
            sigma[perm[d]] = perm[self.sigma[d]];
            labels[perm[d]] = self.labels[d];
        }
        let hole_darts: Vec<Dart> = self.holes.iter().map(|&h| perm[h]).collect();
        Self::assemble(alpha, sigma, labels, &hole_darts, self.multi_component)
    }

    /// The same surface with the opposite orientation (rotation inverted).
    pub fn mirror(&self) -> CombMap {
        let sigma = self.sigma_inverse();
        // the mirrored face through d is the reversed original face through alpha(d)
        let hole_darts: Vec<Dart> = (0..self.dart_count()).filter(|&d| self.is_hole_dart(self.alpha[d])).collect();
        Self::assemble(self.alpha.clone(), sigma, self.labels.clone(), &hole_darts, self.multi_component)
            .expect("mirror of a valid map is valid")
    }

    /// Caps hole `face` with a disk.
    pub fn cap(&self, face: usize) -> Result<CombMap, MapError> {
        if !self.holes.contains(&face) {
            return Err(MapError::UnknownFace { face });
        }
        let mut out = self.clone();
        out.holes.remove(&face);
        Ok(out)
    }

    /// Per-edge labels in edge order.
    pub fn edge_labels(&self) -> Vec<CurveLabel> {
        self.edge_first.iter().map(|&d| self.labels[d]).collect()
    }
}
