//! Conversion between optimal handlebody diagrams and colored chord diagrams.
//!
//! Cutting `F` along its `v`-arcs leaves a disk `D` whose boundary alternates
//! between boundary pieces, endpoints of `u`-arcs (green points) and the two
//! copies of each `v`-arc (red points, paired by the arc).

use std::collections::BTreeMap;

use super::validate::{census, color_cut, is_optimal};
use super::{Family, PrCurve, PrDiagram, PrError};
use crate::chord::{ChordDiagram, Color, ColoredChordDiagram};
use crate::combmap::{CombMap, CurveLabel, Dart, LabelKind, Origin, Side};
use crate::Symmetry;

/// Rebuilds `F` from the disk `D`: point `i` of the circle becomes a vertex
/// (green) or a side to be glued (red), consecutive points are joined by
/// boundary pieces, and the red sides are glued in pairs along the red chords.
pub fn from_colored_chord(ccd: &ColoredChordDiagram) -> Result<PrDiagram, PrError> {
    ccd.check_optimal()?;
    let base = ccd.base();
    let n = base.points();
    let greens = ccd.chords_of(Color::Green);
    let reds = ccd.chords_of(Color::Red);
    // piece i runs from point i to point i+1: out-dart 2i, in-dart 2i+1
    let out = |i: usize| 2 * i;
    let inn = |i: usize| 2 * ((i + n - 1) % n) + 1;
    let green_base = 2 * n;
    let red_base = green_base + 2 * greens.len();
    let total = red_base + 2 * reds.len();
    let alpha: Vec<Dart> = (0..total).map(|d| d ^ 1).collect();
    let mut sigma = vec![usize::MAX; total];
    let mut link = |cycle: [Dart; 3]| {
        for k in 0..3 {
            sigma[cycle[k]] = cycle[(k + 1) % 3];
        }
    };
    for (k, &(a, b)) in greens.iter().enumerate() {
        link([out(a), green_base + 2 * k, inn(a)]);
        link([out(b), green_base + 2 * k + 1, inn(b)]);
    }
    for (k, &(p, q)) in reds.iter().enumerate() {
        // start of side p meets end of side q, and vice versa
        link([out(q), red_base + 2 * k, inn(p)]);
        link([out(p), red_base + 2 * k + 1, inn(q)]);
    }
    let mut labels = vec![CurveLabel::BDY; total];
    for k in 0..greens.len() {
        let l = CurveLabel::new(LabelKind::GreenArc, k as u32);
        labels[green_base + 2 * k] = l;
        labels[green_base + 2 * k + 1] = l;
    }
    for k in 0..reds.len() {
        let l = CurveLabel::new(LabelKind::RedArc, k as u32);
        labels[red_base + 2 * k] = l;
        labels[red_base + 2 * k + 1] = l;
    }
    let holes: Vec<Dart> = (0..n).map(out).collect();
    let surface = CombMap::assemble(alpha, sigma, labels, &holes, false)?;
    let mut curves = Vec::new();
    for k in 0..greens.len() {
        curves.push(PrCurve { family: Family::GreenArc, index: k as u32, edges: vec![n + k], closed: false });
    }
    for k in 0..reds.len() {
        curves.push(PrCurve {
            family: Family::RedArc,
            index: k as u32,
            edges: vec![n + greens.len() + k],
            closed: false,
        });
    }
    PrDiagram::new(surface, curves)
}

/// The colored chord diagram of an optimal diagram, in canonical form.
pub fn to_colored_chord(d: &PrDiagram) -> Result<ColoredChordDiagram, PrError> {
    to_colored_chord_with(d, Symmetry::default())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Point {
    Green(u32, bool),
    Red(u32, bool),
}

pub fn to_colored_chord_with(d: &PrDiagram, sym: Symmetry) -> Result<ColoredChordDiagram, PrError> {
    let g = d.count(Family::GreenArc) as u32;
    if !is_optimal(d, g)? {
        let c = census(d)?;
        return Err(PrError::NotOptimal(format!("census {:?} with boundary genus {}", c.counts(), c.g_boundary)));
    }
    let red = color_cut(d, Color::Red).expect("validated");
    let m = d.surface();
    let mut u_end: BTreeMap<usize, Point> = BTreeMap::new();
    for (c, p) in d.paths_of(Family::GreenArc) {
        u_end.insert(m.vertex_of(p[0]), Point::Green(c.index, false));
        u_end.insert(m.head(p[p.len() - 1]), Point::Green(c.index, true));
    }
    let mut v_of: BTreeMap<Dart, u32> = BTreeMap::new();
    for (c, p) in d.paths_of(Family::RedArc) {
        for &x in p {
            v_of.insert(x, c.index);
            v_of.insert(m.alpha(x), c.index);
        }
    }
    let cm = &red.cut.map;
    let holes: Vec<Vec<Dart>> = cm.faces().into_iter().filter(|f| cm.is_hole_dart(f[0])).collect();
    let [walk] = holes.as_slice() else {
        return Err(PrError::NotOptimal(format!("cutting along v leaves {} boundary circles", holes.len())));
    };
    let mut points: Vec<Point> = Vec::new();
    for &x in walk {
        let p = match red.cut.origin[x] {
            Origin::Kept(o) => match u_end.get(&m.vertex_of(o)) {
                Some(&p) => p,
                None => continue,
            },
            Origin::Copy { of, side } => Point::Red(v_of[&of], side == Side::Left),
        };
        if !points.contains(&p) {
            points.push(p);
        }
    }
    if points.len() != 4 * g as usize {
        return Err(PrError::NotOptimal(format!(
            "found {} chord ends on the cut disk, expected {}",
            points.len(),
            4 * g
        )));
    }
    let partner = |p: Point| match p {
        Point::Green(k, e) => Point::Green(k, !e),
        Point::Red(k, s) => Point::Red(k, !s),
    };
    let mut matching = vec![usize::MAX; points.len()];
    let mut colors = Vec::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        let j = points
            .iter()
            .position(|&q| q == partner(p))
            .ok_or_else(|| PrError::NotOptimal("a chord end has no partner on the cut disk".into()))?;
        matching[i] = j;
        colors.push(if matches!(p, Point::Green(..)) { Color::Green } else { Color::Red });
    }
    let base = ChordDiagram::new(matching)?;
    Ok(ColoredChordDiagram::new(base, colors)?.canonical(sym))
}
