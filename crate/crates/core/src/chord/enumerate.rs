//! Exhaustive enumeration of one-face diagrams and their optimal colorings.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{chords_cross, is_river, ChordDiagram, ChordError, Color, ColoredChordDiagram};
use crate::Symmetry;

pub const MAX_GENUS: u32 = 4;

fn check_genus(g: u32) -> Result<(), ChordError> {
    if g == 0 || g > MAX_GENUS {
        return Err(ChordError::GenusOutOfRange(g));
    }
    Ok(())
}

/// Calls `f` on every perfect matching of `0..n`.
pub(crate) fn for_each_matching(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(m: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        let Some(a) = m.iter().position(|&p| p == usize::MAX) else {
            f(m);
            return;
        };
        for b in a + 1..m.len() {
            if m[b] == usize::MAX {
                m[a] = b;
                m[b] = a;
                rec(m, f);
                m[a] = usize::MAX;
                m[b] = usize::MAX;
            }
        }
    }
    let mut m = vec![usize::MAX; n];
    rec(&mut m, f);
}

/// Classes of one-face diagrams with `2g` chords, one canonical
/// representative each, sorted by code.
pub fn enumerate_bases(g: u32, sym: Symmetry) -> Result<Vec<ChordDiagram>, ChordError> {
    check_genus(g)?;
    let mut classes = BTreeSet::new();
    for_each_matching(4 * g as usize, &mut |m| {
        let cd = ChordDiagram { m: m.to_vec() };
        if cd.is_one_face() {
            let c = cd.canonical(sym);
            // keep orbit minima only
            if c == cd {
                classes.insert(c);
            }
        }
    });
    let mut out: Vec<ChordDiagram> = classes.into_iter().collect();
    out.sort_by_key(|c| c.code());
    Ok(out)
}

/// Colorings of `base` with `g` pairwise non-crossing green chords, up to the
/// symmetries of the base. Sorted by code.
pub fn enumerate_colorings(base: &ChordDiagram, g: u32, sym: Symmetry) -> Result<Vec<ColoredChordDiagram>, ChordError> {
    let g = g as usize;
    if base.n() != 2 * g {
        return Err(ChordError::WrongChordCount { expected: 2 * g, found: base.n() });
    }
    if !base.is_one_face() {
        return Err(ChordError::NotOneFace);
    }
    let chords = base.chords();
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1 << chords.len()) {
        if mask.count_ones() as usize != g {
            continue;
        }
        let greens: Vec<(usize, usize)> =
            (0..chords.len()).filter(|&i| mask & (1 << i) != 0).map(|i| chords[i]).collect();
        let crossing = (0..greens.len()).any(|i| (i + 1..greens.len()).any(|j| chords_cross(greens[i], greens[j])));
        if crossing {
            continue;
        }
        let colors =
            (0..chords.len()).map(|i| if mask & (1 << i) != 0 { Color::Green } else { Color::Red }).collect::<Vec<_>>();
        let ccd = ColoredChordDiagram::from_chord_colors(base.clone(), &colors)?;
        classes.insert(ccd.canonical(sym));
    }
    let mut out: Vec<ColoredChordDiagram> = classes.into_iter().collect();
    out.sort_by_key(|c| c.code());
    Ok(out)
}

/// Counts and codes for one genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub genus: u32,
    pub symmetry: Symmetry,
    pub bases: Vec<ChordDiagramCode>,
    pub colored: Vec<ColoredEntry>,
}

pub type ChordDiagramCode = String;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEntry {
    pub code: String,
    pub base: String,
    pub river: bool,
}

impl Classification {
    pub fn base_count(&self) -> usize {
        self.bases.len()
    }

    pub fn colored_count(&self) -> usize {
        self.colored.len()
    }

    pub fn river_colored(&self) -> usize {
        self.colored.iter().filter(|c| c.river).count()
    }

    /// Bases admitting at least one river coloring.
    pub fn river_bases(&self) -> usize {
        self.colored.iter().filter(|c| c.river).map(|c| c.base.as_str()).collect::<BTreeSet<_>>().len()
    }
}

/// Enumerates bases and colorings for genus `g`, spreading the per-base work
/// over `workers` threads. The result does not depend on `workers`.
pub fn classify(g: u32, sym: Symmetry, workers: usize) -> Result<Classification, ChordError> {
    let bases = enumerate_bases(g, sym)?;
    let workers = workers.max(1).min(bases.len().max(1));
    let per_base = |b: &ChordDiagram| -> Result<Vec<ColoredEntry>, ChordError> {
        Ok(enumerate_colorings(b, g, sym)?
            .into_iter()
            .map(|c| ColoredEntry { code: c.code(), base: b.code(), river: is_river(&c) })
            .collect())
    };
    let mut colored = Vec::new();
    if workers == 1 {
        for b in &bases {
            colored.extend(per_base(b)?);
        }
    } else {
        let chunk = bases.len().div_ceil(workers);
        let parts: Vec<Result<Vec<ColoredEntry>, ChordError>> = std::thread::scope(|s| {
            let handles: Vec<_> = bases
                .chunks(chunk)
                .map(|part| {
                    s.spawn(move || {
                        let mut out = Vec::new();
                        for b in part {
                            out.extend(per_base(b)?);
                        }
                        Ok(out)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for p in parts {
            colored.extend(p?);
        }
    }
    colored.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(Classification { genus: g, symmetry: sym, bases: bases.iter().map(|b| b.code()).collect(), colored })
}
