//! The five well-formedness properties, the fixed-point census and the
//! necessary conditions derived from it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Family, PrDiagram, PrError};
use crate::chord::Color;
use crate::combmap::{CombMap, Cut, Dart, MapError, Origin};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: u8,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub properties: Vec<Verdict>,
}

impl ValidityReport {
    pub fn first_failure(&self) -> Option<&Verdict> {
        self.properties.iter().find(|v| !v.pass)
    }
}

/// Fixed-point counts `n1..n6` by type, and the genus of the boundary surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Census {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
    pub n5: u32,
    pub n6: u32,
    pub g_boundary: i64,
}

impl Census {
    pub fn from_counts(n: [u32; 6], g_boundary: i64) -> Self {
        Census { n1: n[0], n2: n[1], n3: n[2], n4: n[3], n5: n[4], n6: n[5], g_boundary }
    }

    pub fn counts(&self) -> [u32; 6] {
        [self.n1, self.n2, self.n3, self.n4, self.n5, self.n6]
    }

    /// Sources and sinks exist, and sources + sinks - saddles of the boundary
    /// flow equals the Euler characteristic of the boundary.
    pub fn morse_checks(&self) -> MorseReport {
        let lhs = (self.n1 + self.n2 + self.n5 + self.n6) as i64 - (self.n3 + self.n4) as i64;
        let rhs = 2 - 2 * self.g_boundary;
        let has_source = self.n1 >= 1;
        let has_sink = self.n6 >= 1;
        MorseReport {
            has_source,
            has_sink,
            euler_lhs: lhs,
            euler_rhs: rhs,
            euler_holds: lhs == rhs,
            pass: has_source && has_sink && lhs == rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseReport {
    pub has_source: bool,
    pub has_sink: bool,
    pub euler_lhs: i64,
    pub euler_rhs: i64,
    pub euler_holds: bool,
    pub pass: bool,
}

/// `F` cut along all arcs of one color, with the cycle faces capped.
pub(crate) struct ColorCut {
    pub cut: Cut,
    /// face ids (in `cut.map`) of the `U`- or `V`-cycles
    pub cycles: BTreeSet<usize>,
    /// component index of every dart of `cut.map`
    pub comp: Vec<usize>,
    pub components: usize,
}

impl ColorCut {
    /// Current id of an original dart that survived the cut.
    pub fn current(&self, original: Dart) -> Option<Dart> {
        self.cut.origin.iter().position(|o| *o == Origin::Kept(original))
    }
}

fn families(color: Color) -> (Family, Family) {
    match color {
        Color::Green => (Family::GreenArc, Family::GreenCycle),
        Color::Red => (Family::RedArc, Family::RedCycle),
    }
}

/// Cuts `m` along several vertex-disjoint arcs, tracking provenance.
pub(crate) fn cut_all(m: &CombMap, paths: &[&[Dart]]) -> Result<Cut, MapError> {
    let mut acc = Cut::identity(m.clone());
    for p in paths {
        let mut cur = vec![usize::MAX; m.dart_count()];
        for (d, o) in acc.origin.iter().enumerate() {
            if let Origin::Kept(x) = *o {
                cur[x] = d;
            }
        }
        let q: Vec<Dart> = p.iter().map(|&d| cur[d]).collect();
        if q.contains(&usize::MAX) {
            return Err(MapError::CurveNotEmbedded("arcs of one family overlap".into()));
        }
        let next = acc.map.cut_path_open(&q, false)?;
        acc = acc.then(next);
    }
    Ok(acc)
}

/// Properties 4 and 5 for one color. Errors carry the failing property.
pub(crate) fn color_cut(d: &PrDiagram, color: Color) -> Result<ColorCut, (u8, String)> {
    let (arc_family, cycle_family) = families(color);
    let cycle_kind = cycle_family.kind();
    let paths: Vec<&[Dart]> = d.paths_of(arc_family).into_iter().map(|(_, p)| p).collect();
    let cut = cut_all(d.surface(), &paths).map_err(|e| (1, format!("cannot cut along the {arc_family}-arcs: {e}")))?;
    let m = &cut.map;
    let mut cycles = BTreeSet::new();
    for face in m.faces() {
        if !m.is_hole_dart(face[0]) || !face.iter().any(|&x| m.label(x).kind == cycle_kind) {
            continue;
        }
        let stray =
            face.iter().find(|&&x| m.label(x).kind != cycle_kind && !matches!(cut.origin[x], Origin::Copy { .. }));
        if let Some(&x) = stray {
            return Err((
                4,
                format!(
                    "{cycle_family}-curve does not close up into a cycle: boundary through dart {} \
                     continues along {}",
                    cut.source_dart(x),
                    m.label(x)
                ),
            ));
        }
        cycles.insert(face[0]);
    }
    let mut capped = m.clone();
    for &f in &cycles {
        capped = capped.cap(f).expect("cycle face is a hole");
    }
    let parts = capped.component_darts();
    let mut comp = vec![0; m.dart_count()];
    for (k, (darts, piece)) in parts.iter().zip(capped.components()).enumerate() {
        for &x in darts {
            comp[x] = k;
        }
        let e = piece.euler_genus().map_err(|e| (5, e.to_string()))?;
        if !e.is_disk() {
            return Err((
                5,
                format!(
                    "after cutting along {arc_family} and capping {cycle_family}-cycles, the piece \
                     through dart {} has (chi, genus, boundary) = ({}, {}, {})",
                    cut.source_dart(darts[0]),
                    e.chi,
                    e.genus,
                    e.boundary_count
                ),
            ));
        }
    }
    Ok(ColorCut { components: parts.len(), cut, cycles, comp })
}

fn endpoints(m: &CombMap, path: &[Dart]) -> (usize, usize) {
    (m.vertex_of(path[0]), m.head(path[path.len() - 1]))
}

fn vertices(m: &CombMap, path: &[Dart], closed: bool) -> Vec<usize> {
    let mut v: Vec<usize> = path.iter().map(|&d| m.vertex_of(d)).collect();
    if !closed {
        v.push(m.head(path[path.len() - 1]));
    }
    v
}

fn property1(d: &PrDiagram) -> Result<(), String> {
    let m = d.surface();
    for fam in [Family::GreenArc, Family::RedArc] {
        for (c, path) in d.paths_of(fam) {
            let name = format!("{}{}", c.family, c.index);
            if c.closed {
                return Err(format!("{name} is closed, expected an arc"));
            }
            for &x in path {
                if m.is_boundary_edge(m.edge_of(x)) {
                    return Err(format!("{name} runs along the boundary at edge {}", m.edge_of(x)));
                }
            }
            for &x in &path[1..] {
                if m.is_boundary_vertex(x) {
                    return Err(format!("{name} touches the boundary at vertex {}", m.vertex_of(x)));
                }
            }
            for end in [path[0], m.alpha(path[path.len() - 1])] {
                match m.hole_corners(end) {
                    1 => {}
                    0 => return Err(format!("{name} ends at interior vertex {}", m.vertex_of(end))),
                    _ => {
                        return Err(format!("{name} ends at vertex {} where the boundary is pinched", m.vertex_of(end)))
                    }
                }
            }
        }
    }
    Ok(())
}

fn property2(d: &PrDiagram) -> Result<(), String> {
    let m = d.surface();
    for (arc, cyc) in [(Family::GreenArc, Family::GreenCycle), (Family::RedArc, Family::RedCycle)] {
        let arc_ends: BTreeSet<usize> = d
            .paths_of(arc)
            .into_iter()
            .flat_map(|(_, p)| {
                let (a, b) = endpoints(m, p);
                [a, b]
            })
            .collect();
        for (c, path) in d.paths_of(cyc) {
            let name = format!("{}{}", c.family, c.index);
            for &x in path {
                if !m.is_boundary_edge(m.edge_of(x)) {
                    return Err(format!("{name} leaves the boundary at edge {}", m.edge_of(x)));
                }
            }
            if !c.closed {
                let (a, b) = endpoints(m, path);
                for v in [a, b] {
                    if !arc_ends.contains(&v) {
                        return Err(format!("{name} ends at vertex {v}, which is not an end of a {arc}-arc"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn property3(d: &PrDiagram) -> Result<(), String> {
    let m = d.surface();
    for fam in Family::ALL {
        let mut owner = std::collections::BTreeMap::new();
        for (c, path) in d.paths_of(fam) {
            for v in vertices(m, path, c.closed) {
                if let Some(other) = owner.insert(v, c.index) {
                    return Err(format!("{fam}{other} and {fam}{} meet at vertex {v}", c.index));
                }
            }
        }
    }
    for (arc, cyc) in [(Family::GreenArc, Family::GreenCycle), (Family::RedArc, Family::RedCycle)] {
        let arc_vertices: BTreeSet<usize> =
            d.paths_of(arc).into_iter().flat_map(|(c, p)| vertices(m, p, c.closed)).collect();
        for (c, path) in d.paths_of(cyc) {
            let inner =
                if c.closed { vertices(m, path, true) } else { vertices(m, path, false)[1..path.len()].to_vec() };
            if let Some(v) = inner.iter().find(|v| arc_vertices.contains(v)) {
                return Err(format!("{cyc}{} meets a {arc}-arc inside, at vertex {v}", c.index));
            }
        }
    }
    let ends = |fam| -> BTreeSet<usize> {
        d.paths_of(fam)
            .into_iter()
            .flat_map(|(_, p)| {
                let (a, b) = endpoints(m, p);
                [a, b]
            })
            .collect()
    };
    if let Some(v) = ends(Family::GreenArc).intersection(&ends(Family::RedArc)).next() {
        return Err(format!("a u-arc and a v-arc share the endpoint {v}"));
    }
    Ok(())
}

pub fn validate(d: &PrDiagram) -> ValidityReport {
    let mut fails: [Option<String>; 5] = Default::default();
    for (k, r) in [property1(d), property2(d), property3(d)].into_iter().enumerate() {
        fails[k] = r.err();
    }
    for color in [Color::Green, Color::Red] {
        if let Err((p, w)) = color_cut(d, color) {
            let slot = &mut fails[p as usize - 1];
            if slot.is_none() {
                *slot = Some(w);
            }
            if p == 4 && fails[4].is_none() {
                fails[4] = Some("not checked: property 4 fails".into());
            }
        }
    }
    let properties: Vec<Verdict> = fails
        .into_iter()
        .enumerate()
        .map(|(k, w)| Verdict { property: k as u8 + 1, pass: w.is_none(), witness: w })
        .collect();
    ValidityReport { valid: properties.iter().all(|v| v.pass), properties }
}

pub(crate) fn require_valid(d: &PrDiagram) -> Result<(ColorCut, ColorCut), PrError> {
    let report = validate(d);
    if let Some(v) = report.first_failure() {
        return Err(PrError::InvalidDiagram(format!(
            "property {} fails: {}",
            v.property,
            v.witness.clone().unwrap_or_default()
        )));
    }
    let green = color_cut(d, Color::Green).expect("validated");
    let red = color_cut(d, Color::Red).expect("validated");
    Ok((green, red))
}

pub(crate) fn census_of(d: &PrDiagram, green: &ColorCut, red: &ColorCut) -> Census {
    let n2 = green.cycles.len() as u32;
    let n5 = red.cycles.len() as u32;
    let chi = d.surface().euler_characteristic();
    Census {
        n1: green.components as u32,
        n2,
        n3: d.count(Family::GreenArc) as u32,
        n4: d.count(Family::RedArc) as u32,
        n5,
        n6: red.components as u32,
        // chi(boundary) = chi(F_u) + chi(F_v) = 2 chi(F) + 2 (n2 + n5)
        g_boundary: 1 - chi - n2 as i64 - n5 as i64,
    }
}

pub fn census(d: &PrDiagram) -> Result<Census, PrError> {
    let (green, red) = require_valid(d)?;
    Ok(census_of(d, &green, &red))
}

pub fn morse_checks(d: &PrDiagram) -> Result<MorseReport, PrError> {
    Ok(census(d)?.morse_checks())
}

/// Optimal handlebody flow: one source, one sink, `g` arcs of each color,
/// no `U`/`V` curves and no `u`-arc meeting a `v`-arc.
pub fn is_optimal(d: &PrDiagram, g: u32) -> Result<bool, PrError> {
    let c = census(d)?;
    if c.counts() != [1, 0, g, g, 0, 1] || c.g_boundary != g as i64 {
        return Ok(false);
    }
    if d.count(Family::GreenCycle) + d.count(Family::RedCycle) > 0 {
        return Ok(false);
    }
    let m = d.surface();
    let verts =
        |fam| -> BTreeSet<usize> { d.paths_of(fam).into_iter().flat_map(|(c, p)| vertices(m, p, c.closed)).collect() };
    Ok(verts(Family::GreenArc).is_disjoint(&verts(Family::RedArc)))
}
