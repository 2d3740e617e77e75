//! DOT, SVG and JSON renderings of chord diagrams, maps and Pr-diagrams.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chord::{ChordDiagram, ChordError, ChordJson, Color, ColoredChordDiagram};
use crate::combmap::{CombMap, LabelKind};
use crate::prdiag::{PrDiagram, PrError, PrJson};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Pr(#[from] PrError),
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error("no planar layout: {0}; use DOT export instead")]
    NotPlanar(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dot,
    Svg,
    Json,
}

/// Any of the JSON input formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Chord(ChordJson),
    Pr(PrJson),
}

pub enum Parsed {
    Chord(ChordDiagram),
    Colored(ColoredChordDiagram),
    Pr(PrDiagram),
}

impl Document {
    pub fn parse(s: &str) -> Result<Document, ExportError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn resolve(&self) -> Result<Parsed, ExportError> {
        Ok(match self {
            Document::Chord(j) if j.colors.is_some() => Parsed::Colored(j.to_colored()?),
            Document::Chord(j) => Parsed::Chord(j.to_diagram()?),
            Document::Pr(j) => Parsed::Pr(j.to_diagram()?),
        })
    }
}

pub fn export(doc: &Document, format: Format) -> Result<String, ExportError> {
    let parsed = doc.resolve()?;
    Ok(match (format, &parsed) {
        (Format::Json, Parsed::Chord(c)) => json(&ChordJson::from(c)),
        (Format::Json, Parsed::Colored(c)) => json(&ChordJson::from(c)),
        (Format::Json, Parsed::Pr(d)) => json(&PrJson::from(d)),
        (Format::Dot, Parsed::Chord(c)) => chord_dot(c, None),
        (Format::Dot, Parsed::Colored(c)) => chord_dot(c.base(), Some(c.colors())),
        (Format::Dot, Parsed::Pr(d)) => map_dot(d.surface()),
        (Format::Svg, Parsed::Chord(c)) => chord_svg(c, None),
        (Format::Svg, Parsed::Colored(c)) => chord_svg(c.base(), Some(c.colors())),
        (Format::Svg, Parsed::Pr(d)) => pr_svg(d)?,
    })
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn color_name(c: Option<Color>) -> &'static str {
    match c {
        None => "black",
        Some(Color::Green) => "forestgreen",
        Some(Color::Red) => "firebrick",
    }
}

fn label_style(kind: LabelKind) -> (&'static str, &'static str) {
    match kind {
        LabelKind::Bdy => ("black", "solid"),
        LabelKind::Plain => ("gray60", "dotted"),
        LabelKind::GreenArc => ("forestgreen", "solid"),
        LabelKind::GreenCycle => ("forestgreen", "dashed"),
        LabelKind::RedArc => ("firebrick", "solid"),
        LabelKind::RedCycle => ("firebrick", "dashed"),
    }
}

/// Points on a circle joined in order, plus one edge per chord.
pub fn chord_dot(cd: &ChordDiagram, colors: Option<&[Color]>) -> String {
    let n = cd.points();
    let mut s = String::from("graph chord {\n  layout=circo;\n  node [shape=point];\n");
    for i in 0..n {
        let _ = writeln!(s, "  p{i} [xlabel=\"{i}\"];");
    }
    for i in 0..n {
        let _ = writeln!(s, "  p{i} -- p{} [color=gray60];", (i + 1) % n);
    }
    for (a, b) in cd.chords() {
        let c = color_name(colors.map(|c| c[a]));
        let _ = writeln!(s, "  p{a} -- p{b} [color={c}, penwidth=2];");
    }
    s.push_str("}\n");
    s
}

/// Vertices as nodes (boundary vertices doubled), edges colored by label.
pub fn map_dot(m: &CombMap) -> String {
    let mut s = String::from("graph map {\n  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n");
    for v in m.vertices() {
        let tag = if m.is_boundary_vertex(v[0]) { "doublecircle" } else { "circle" };
        let _ = writeln!(s, "  v{} [shape={tag}];", v[0]);
    }
    for e in 0..m.edge_count() {
        let (a, b) = m.edge_darts(e);
        let l = m.edge_label(e);
        let (color, style) = label_style(l.kind);
        let text = match l.kind {
            LabelKind::Bdy | LabelKind::Plain => format!("e{e}"),
            _ => l.to_string(),
        };
        let _ = writeln!(
            s,
            "  v{} -- v{} [label=\"{text}\", color={color}, style={style}, fontsize=8];",
            m.vertex_of(a),
            m.vertex_of(b)
        );
    }
    s.push_str("}\n");
    s
}

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;

fn svg_open(s: &mut String) {
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
}

fn on_circle(r: f64, k: usize, n: usize, cx: f64, cy: f64, sign: f64) -> (f64, f64) {
    let t = 2.0 * PI * k as f64 / n.max(1) as f64;
    (cx + r * t.cos(), cy - sign * r * t.sin())
}

pub fn chord_svg(cd: &ChordDiagram, colors: Option<&[Color]>) -> String {
    let n = cd.points();
    let r = SIZE * 0.4;
    let mut s = String::new();
    svg_open(&mut s);
    let _ = writeln!(s, "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{r}\" fill=\"none\" stroke=\"black\"/>");
    let pos: Vec<(f64, f64)> = (0..n).map(|k| on_circle(r, k, n, CENTER, CENTER, 1.0)).collect();
    for (a, b) in cd.chords() {
        let c = color_name(colors.map(|c| c[a]));
        // bend each chord toward the center
        let _ = writeln!(
            s,
            "  <path d=\"M {:.2} {:.2} Q {CENTER} {CENTER} {:.2} {:.2}\" fill=\"none\" stroke=\"{c}\" stroke-width=\"2\"/>",
            pos[a].0, pos[a].1, pos[b].0, pos[b].1
        );
    }
    for (k, (x, y)) in pos.iter().enumerate() {
        let (lx, ly) = on_circle(r + 14.0, k, n, CENTER, CENTER, 1.0);
        let _ = writeln!(s, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"black\"/>");
        let _ = writeln!(
            s,
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">{k}</text>"
        );
    }
    s.push_str("</svg>\n");
    s
}

/// A disk with holes: the longest boundary circle is drawn outside, the other
/// circles inside on a ring, every vertex placed on its boundary circle in walk
/// order, and curve edges drawn as straight segments. Requires a connected
/// planar `F` with all vertices on the boundary.
pub fn pr_svg(d: &PrDiagram) -> Result<String, ExportError> {
    let m = d.surface();
    if m.is_multi_component() {
        return Err(ExportError::NotPlanar("the surface is disconnected".into()));
    }
    let e = m.euler_genus().map_err(PrError::from)?;
    if e.genus != 0 {
        return Err(ExportError::NotPlanar(format!("the surface has genus {}", e.genus)));
    }
    if let Some(v) = m.vertices().into_iter().find(|v| !m.is_boundary_vertex(v[0])) {
        return Err(ExportError::NotPlanar(format!("vertex {} is interior", v[0])));
    }
    let mut holes: Vec<Vec<usize>> = m.faces().into_iter().filter(|f| m.is_hole_dart(f[0])).collect();
    holes.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let outer_r = SIZE * 0.42;
    // (vertex, ring, slot, slots) for each vertex at its first boundary circle
    let mut slots: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut circles = Vec::new();
    let inner = holes.len().saturating_sub(1);
    for (h, face) in holes.iter().enumerate() {
        let (cx, cy, r, sign) = if h == 0 {
            (CENTER, CENTER, outer_r, 1.0)
        } else {
            let ring = if inner == 1 { 0.0 } else { outer_r * 0.5 };
            let (x, y) = on_circle(ring, h - 1, inner, CENTER, CENTER, 1.0);
            let r = (outer_r * 0.8 / inner.max(2) as f64).min(outer_r * 0.3);
            // the surface lies on the left, so inner circles run clockwise
            (x, y, r, -1.0)
        };
        let mut verts = Vec::new();
        for &x in face {
            let v = m.vertex_of(x);
            if !verts.contains(&v) {
                verts.push(v);
            }
        }
        for (k, &v) in verts.iter().enumerate() {
            if !slots.iter().any(|s| s.0 == v) {
                slots.push((v, h, k, verts.len()));
            }
        }
        let kinds: Vec<LabelKind> = face.iter().map(|&x| m.label(x).kind).collect();
        let kind = if kinds.iter().all(|&k| k == kinds[0]) { kinds[0] } else { LabelKind::Bdy };
        circles.push((cx, cy, r, kind, h == 0, sign));
    }
    let segments: Vec<(usize, usize)> = (0..m.edge_count())
        .filter(|&e| matches!(m.edge_label(e).kind, LabelKind::GreenArc | LabelKind::RedArc | LabelKind::Plain))
        .map(|e| {
            let (a, b) = m.edge_darts(e);
            (m.vertex_of(a), m.vertex_of(b))
        })
        .collect();
    let place = |offsets: &[f64]| -> BTreeMap<usize, (f64, f64)> {
        slots
            .iter()
            .map(|&(v, h, k, n)| {
                let (cx, cy, r, _, _, sign) = circles[h];
                let t = offsets[h] + 2.0 * PI * k as f64 / n as f64;
                (v, (cx + r * t.cos(), cy - sign * r * t.sin()))
            })
            .collect()
    };
    let cost = |pos: &BTreeMap<usize, (f64, f64)>| -> f64 {
        segments.iter().map(|(a, b)| (pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1)).sum()
    };
    // turn each circle so that the curve segments come out short
    const STEPS: usize = 48;
    let mut offsets = vec![0.0; circles.len()];
    for _ in 0..3 {
        for h in 0..circles.len() {
            let mut best = (cost(&place(&offsets)), offsets[h]);
            for j in 0..STEPS {
                let mut trial = offsets.clone();
                trial[h] = 2.0 * PI * j as f64 / STEPS as f64;
                let c = cost(&place(&trial));
                if c < best.0 - 1e-9 {
                    best = (c, trial[h]);
                }
            }
            offsets[h] = best.1;
        }
    }
    let pos = place(&offsets);
    let mut s = String::new();
    svg_open(&mut s);
    for &(cx, cy, r, kind, outer, _) in &circles {
        let fill = if outer { "#eeeeee" } else { "white" };
        let (stroke, dash) = match kind {
            LabelKind::GreenCycle => ("forestgreen", " stroke-dasharray=\"6 3\""),
            LabelKind::RedCycle => ("firebrick", " stroke-dasharray=\"6 3\""),
            _ => ("black", ""),
        };
        let _ = writeln!(
            s,
            "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r:.2}\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"1.5\"{dash}/>"
        );
    }
    for e in 0..m.edge_count() {
        let l = m.edge_label(e);
        let color = match l.kind {
            LabelKind::GreenArc => "forestgreen",
            LabelKind::RedArc => "firebrick",
            LabelKind::Plain => "gray",
            _ => continue,
        };
        let (a, b) = m.edge_darts(e);
        let (p, q) = (pos[&m.vertex_of(a)], pos[&m.vertex_of(b)]);
        let _ = writeln!(
            s,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\"><title>{l}</title></line>",
            p.0, p.1, q.0, q.1
        );
    }
    for (v, (x, y)) in &pos {
        let _ =
            writeln!(s, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"black\"><title>v{v}</title></circle>");
    }
    s.push_str("</svg>\n");
    Ok(s)
}
