//! Chord diagrams: perfect matchings of `2n` points on an oriented circle,
//! optionally with red/green chords.

mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combmap::{build_map, CombMap};
use crate::Symmetry;

pub use enumerate::{classify, enumerate_bases, enumerate_colorings, Classification};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordError {
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid colors: {0}")]
    InvalidColors(String),
    #[error("base diagram is not one-face")]
    NotOneFace,
    #[error("expected {expected} chords, found {found}")]
    WrongChordCount { expected: usize, found: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid code {0:?}")]
    InvalidCode(String),
    #[error("genus {0} is outside the supported range 1..=4")]
    GenusOutOfRange(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Red,
}

impl Color {
    fn letter(self) -> char {
        match self {
            Color::Green => 'g',
            Color::Red => 'r',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    m: Vec<usize>,
}

impl ChordDiagram {
    /// `m[i]` is the partner of point `i`.
    pub fn new(m: Vec<usize>) -> Result<Self, ChordError> {
        if !m.len().is_multiple_of(2) {
            return Err(ChordError::InvalidMatching(format!("odd point count {}", m.len())));
        }
        for (i, &p) in m.iter().enumerate() {
            if p >= m.len() || p == i || m[p] != i {
                return Err(ChordError::InvalidMatching(format!("point {i} is not matched properly")));
            }
        }
        Ok(Self { m })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, ChordError> {
        let n = 2 * pairs.len();
        let mut m = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || m[a] != usize::MAX || m[b] != usize::MAX {
                return Err(ChordError::InvalidMatching(format!("bad chord ({a}, {b})")));
            }
            m[a] = b;
            m[b] = a;
        }
        Self::new(m)
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.m.len() / 2
    }

    pub fn points(&self) -> usize {
        self.m.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.m[i]
    }

    pub fn matching(&self) -> &[usize] {
        &self.m
    }

    /// Chords as `(a, b)` with `a < b`, ordered by `a`. A chord's index is its
    /// position in this list.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.points()).filter(|&i| i < self.m[i]).map(|i| (i, self.m[i])).collect()
    }

    /// Index of the chord through point `p`.
    pub fn chord_of(&self, p: usize) -> usize {
        let a = p.min(self.m[p]);
        (0..a).filter(|&i| i < self.m[i]).count()
    }

    /// True iff chords `a` and `b` (indices into [`Self::chords`]) interleave.
    pub fn crossing(&self, a: usize, b: usize) -> bool {
        let ch = self.chords();
        chords_cross(ch[a], ch[b])
    }

    /// Boundary cycles of the one-vertex ribbon graph.
    pub fn face_count(&self) -> usize {
        let n = self.points();
        let mut seen = vec![false; n];
        let mut faces = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = (self.m[d] + 1) % n;
            }
        }
        faces
    }

    pub fn is_one_face(&self) -> bool {
        self.face_count() == 1
    }

    /// Genus of the closed surface presented by the diagram: `1 - n + f = 2 - 2g`.
    pub fn genus(&self) -> u32 {
        ((1 + self.n() - self.face_count()) / 2) as u32
    }

    pub fn rotate(&self, k: usize) -> ChordDiagram {
        let n = self.points();
        let mut r = vec![0; n];
        for i in 0..n {
            r[(i + k) % n] = (self.m[i] + k) % n;
        }
        ChordDiagram { m: r }
    }

    pub fn reflect(&self) -> ChordDiagram {
        let n = self.points();
        let mut r = vec![0; n];
        for i in 0..n {
            r[n - 1 - i] = n - 1 - self.m[i];
        }
        ChordDiagram { m: r }
    }

    /// Least matching in the orbit under rotations (and reflections when dihedral).
    pub fn canonical(&self, sym: Symmetry) -> ChordDiagram {
        let mut best = self.clone();
        for t in circle_maps(self.points(), sym) {
            let c = ChordDiagram { m: t.apply_matching(&self.m) };
            if c < best {
                best = c;
            }
        }
        best
    }

    /// Hex digit per point (comma-separated decimals beyond 16 points).
    pub fn code(&self) -> String {
        encode_matching(&self.m)
    }

    pub fn parse_code(s: &str) -> Result<Self, ChordError> {
        Self::new(decode_matching(s)?)
    }

    /// The one-vertex map: darts are the points, `alpha` the matching and the
    /// rotation runs around the circle.
    pub fn to_ribbon_map(&self) -> CombMap {
        let n = self.points();
        let sigma = (0..n).map(|i| (i + 1) % n).collect();
        build_map(n, self.m.clone(), sigma, &[], &[]).expect("ribbon graph of a matching")
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

/// Free-function form of [`ChordDiagram::crossing`].
pub fn crossing(cd: &ChordDiagram, a: usize, b: usize) -> bool {
    cd.crossing(a, b)
}

pub fn face_count(cd: &ChordDiagram) -> usize {
    cd.face_count()
}

pub fn is_one_face(cd: &ChordDiagram) -> bool {
    cd.is_one_face()
}

pub fn canonical_chord(cd: &ChordDiagram, sym: Symmetry) -> String {
    cd.canonical(sym).code()
}

pub(crate) fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    (a < c && c < b) != (a < d && d < b)
}

/// A symmetry of the circle with `n` points: `i -> (s * i + k) mod n` with s = ±1.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CircleMap {
    n: usize,
    shift: usize,
    flip: bool,
}

impl CircleMap {
    fn point(&self, i: usize) -> usize {
        let i = if self.flip { self.n - 1 - i } else { i };
        (i + self.shift) % self.n
    }

    fn apply_matching(&self, m: &[usize]) -> Vec<usize> {
        let mut r = vec![0; self.n];
        for i in 0..self.n {
            r[self.point(i)] = self.point(m[i]);
        }
        r
    }

    fn apply_colors(&self, c: &[Color]) -> Vec<Color> {
        let mut r = vec![Color::Green; self.n];
        for i in 0..self.n {
            r[self.point(i)] = c[i];
        }
        r
    }
}

pub(crate) fn circle_maps(n: usize, sym: Symmetry) -> impl Iterator<Item = CircleMap> {
    let flips: &[bool] = match sym {
        Symmetry::RotationOnly => &[false],
        Symmetry::Dihedral => &[false, true],
    };
    flips.iter().flat_map(move |&flip| (0..n).map(move |shift| CircleMap { n, shift, flip }))
}

fn encode_matching(m: &[usize]) -> String {
    if m.len() <= 16 {
        m.iter().map(|&p| char::from_digit(p as u32, 16).unwrap()).collect()
    } else {
        m.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn decode_matching(s: &str) -> Result<Vec<usize>, ChordError> {
    let bad = || ChordError::InvalidCode(s.to_string());
    if s.contains(',') {
        s.split(',').map(|t| t.parse().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(16).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

/// A chord diagram whose chords are colored red or green.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredChordDiagram {
    base: ChordDiagram,
    colors: Vec<Color>,
}

impl ColoredChordDiagram {
    /// `colors` is per point; both ends of a chord must agree.
    pub fn new(base: ChordDiagram, colors: Vec<Color>) -> Result<Self, ChordError> {
        if colors.len() != base.points() {
            return Err(ChordError::InvalidColors(format!("{} colors for {} points", colors.len(), base.points())));
        }
        for i in 0..base.points() {
            if colors[i] != colors[base.partner(i)] {
                return Err(ChordError::InvalidColors(format!("ends of the chord at point {i} have different colors")));
            }
        }
        Ok(Self { base, colors })
    }

    /// Colors given per chord, in the order of [`ChordDiagram::chords`].
    pub fn from_chord_colors(base: ChordDiagram, chord_colors: &[Color]) -> Result<Self, ChordError> {
        let chords = base.chords();
        if chord_colors.len() != chords.len() {
            return Err(ChordError::InvalidColors(format!(
                "{} colors for {} chords",
                chord_colors.len(),
                chords.len()
            )));
        }
        let mut colors = vec![Color::Green; base.points()];
        for (&(a, b), &c) in chords.iter().zip(chord_colors) {
            colors[a] = c;
            colors[b] = c;
        }
        Self::new(base, colors)
    }

    pub fn base(&self) -> &ChordDiagram {
        &self.base
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, point: usize) -> Color {
        self.colors[point]
    }

    pub fn chords_of(&self, color: Color) -> Vec<(usize, usize)> {
        self.base.chords().into_iter().filter(|&(a, _)| self.colors[a] == color).collect()
    }

    /// Genus `g` of a diagram with `2g` chords.
    pub fn genus(&self) -> u32 {
        (self.base.n() / 2) as u32
    }

    /// True iff chords of `color` are pairwise non-crossing.
    pub fn non_crossing(&self, color: Color) -> bool {
        let ch = self.chords_of(color);
        (0..ch.len()).all(|i| (i + 1..ch.len()).all(|j| !chords_cross(ch[i], ch[j])))
    }

    /// Checks the preconditions of an optimal-flow coloring: one-face base with
    /// `2g` chords, `g` of them green and pairwise non-crossing.
    pub fn check_optimal(&self) -> Result<(), ChordError> {
        if self.base.n() == 0 || !self.base.n().is_multiple_of(2) {
            return Err(ChordError::InvalidColoring(format!("{} chords is not 2g for a genus g >= 1", self.base.n())));
        }
        if !self.base.is_one_face() {
            return Err(ChordError::NotOneFace);
        }
        let g = self.base.n() / 2;
        let greens = self.chords_of(Color::Green).len();
        if greens != g {
            return Err(ChordError::InvalidColoring(format!("{greens} green chords, expected {g}")));
        }
        if !self.non_crossing(Color::Green) {
            return Err(ChordError::InvalidColoring("green chords cross".into()));
        }
        Ok(())
    }

    pub fn canonical(&self, sym: Symmetry) -> ColoredChordDiagram {
        let mut best = self.clone();
        for t in circle_maps(self.base.points(), sym) {
            let c = ColoredChordDiagram {
                base: ChordDiagram { m: t.apply_matching(&self.base.m) },
                colors: t.apply_colors(&self.colors),
            };
            if c < best {
                best = c;
            }
        }
        best
    }

    /// `<matching>-<g|r per point>`.
    pub fn code(&self) -> String {
        let letters: String = self.colors.iter().map(|c| c.letter()).collect();
        format!("{}-{}", self.base.code(), letters)
    }

    pub fn parse_code(s: &str) -> Result<Self, ChordError> {
        let (m, c) = s.split_once('-').ok_or_else(|| ChordError::InvalidCode(s.to_string()))?;
        let colors = c
            .chars()
            .map(|ch| match ch {
                'g' => Ok(Color::Green),
                'r' => Ok(Color::Red),
                _ => Err(ChordError::InvalidCode(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ChordDiagram::parse_code(m)?, colors)
    }
}

impl fmt::Display for ColoredChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

/// River predicate: `g` chords of each color, same-colored chords pairwise
/// non-crossing, and one end of every red chord can be chosen so that the
/// chosen ends fill `g` consecutive points of the circle.
pub fn is_river(ccd: &ColoredChordDiagram) -> bool {
    let n = ccd.base.n();
    if !n.is_multiple_of(2) {
        return false;
    }
    let g = n / 2;
    if ccd.chords_of(Color::Red).len() != g || ccd.chords_of(Color::Green).len() != g {
        return false;
    }
    if !ccd.non_crossing(Color::Red) || !ccd.non_crossing(Color::Green) {
        return false;
    }
    let pts = ccd.base.points();
    // a window of g consecutive red points hitting g distinct red chords
    (0..pts).any(|s| {
        let mut used = vec![false; n];
        (0..g).all(|j| {
            let p = (s + j) % pts;
            if ccd.colors[p] != Color::Red {
                return false;
            }
            let c = ccd.base.chord_of(p);
            !std::mem::replace(&mut used[c], true)
        })
    })
}

/// JSON form: `{"n": chords, "match": [...], "colors": [...]}`. Colors may be
/// given per point or per chord.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordJson {
    pub n: usize,
    #[serde(rename = "match")]
    pub matching: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<Color>>,
}

impl ChordJson {
    pub fn to_diagram(&self) -> Result<ChordDiagram, ChordError> {
        let cd = ChordDiagram::new(self.matching.clone())?;
        if cd.n() != self.n {
            return Err(ChordError::WrongChordCount { expected: self.n, found: cd.n() });
        }
        Ok(cd)
    }

    pub fn to_colored(&self) -> Result<ColoredChordDiagram, ChordError> {
        let cd = self.to_diagram()?;
        match &self.colors {
            None => Err(ChordError::InvalidColors("no colors given".into())),
            Some(c) if c.len() == cd.points() => ColoredChordDiagram::new(cd, c.clone()),
            Some(c) => ColoredChordDiagram::from_chord_colors(cd, c),
        }
    }
}

impl From<&ChordDiagram> for ChordJson {
    fn from(cd: &ChordDiagram) -> Self {
        ChordJson { n: cd.n(), matching: cd.m.clone(), colors: None }
    }
}

impl From<&ColoredChordDiagram> for ChordJson {
    fn from(c: &ColoredChordDiagram) -> Self {
        ChordJson { n: c.base.n(), matching: c.base.m.clone(), colors: Some(c.colors.clone()) }
    }
}

#[cfg(test)]
mod tests;
