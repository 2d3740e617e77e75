//! Canonical codes: breadth-first relabeling from every root dart, keeping the
//! lexicographically least trace.

use std::collections::HashMap;
use std::fmt;

use super::{CombMap, CurveLabel, Dart, LabelKind, MapError};
use crate::Symmetry;

/// Relabeling-invariant code of a labeled map. Displayed as lowercase hex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self, MapError> {
        let bad = || MapError::SizeMismatch(format!("not a canonical code: {s:?}"));
        if !s.len().is_multiple_of(8) || !s.is_ascii() {
            return Err(bad());
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| bad()))
            .collect::<Result<Vec<u8>, MapError>>()?;
        Ok(CanonicalCode(bytes))
    }

    /// Rebuilds a map with this code (the mirror image may be returned when the
    /// code was taken up to reflection). Curve indices are renumbered.
    pub fn decode(&self) -> Result<CombMap, MapError> {
        let words: Vec<u32> = self.0.chunks_exact(4).map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]])).collect();
        let bad = |why: &str| MapError::SizeMismatch(format!("malformed canonical code: {why}"));
        let mut alpha = Vec::new();
        let mut sigma = Vec::new();
        let mut labels = Vec::new();
        let mut holes = Vec::new();
        let mut components = 0;
        for comp in words.split(|&w| w == COMPONENT_BREAK) {
            components += 1;
            let (&n, body) = comp.split_first().ok_or_else(|| bad("empty component"))?;
            let n = n as usize;
            if body.len() != 5 * n {
                return Err(bad("length does not match the dart count"));
            }
            let base = alpha.len();
            let rank_base = labels.iter().map(|l: &CurveLabel| l.index + 1).max().unwrap_or(0);
            for w in body.chunks_exact(5) {
                let (a, r) = (w[0] as usize, w[1] as usize);
                if a >= n || r >= n {
                    return Err(bad("dart out of range"));
                }
                alpha.push(base + a);
                sigma.push(base + r);
                let kind = LabelKind::from_tag(w[2]).ok_or_else(|| bad("unknown label tag"))?;
                let index = if kind.is_curve() { rank_base + w[3] } else { 0 };
                labels.push(CurveLabel::new(kind, index));
                if w[4] > 1 {
                    return Err(bad("hole flag"));
                }
                if w[4] == 1 {
                    holes.push(alpha.len() - 1);
                }
            }
        }
        CombMap::assemble(alpha, sigma, labels, &holes, components > 1)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

const COMPONENT_BREAK: u32 = u32::MAX;

/// Canonical code of `m`. With [`Symmetry::Dihedral`] a map and its mirror
/// image get the same code. Multi-component maps are coded as the sorted
/// multiset of their component codes.
pub fn canonical_code(m: &CombMap, sym: Symmetry) -> CanonicalCode {
    let mut words: Vec<Vec<u32>> = m.components().iter().map(|c| component_word(c, sym)).collect();
    words.sort();
    let mut bytes = Vec::new();
    for (k, w) in words.iter().enumerate() {
        if k > 0 {
            bytes.extend_from_slice(&COMPONENT_BREAK.to_be_bytes());
        }
        for x in w {
            bytes.extend_from_slice(&x.to_be_bytes());
        }
    }
    CanonicalCode(bytes)
}

fn component_word(m: &CombMap, sym: Symmetry) -> Vec<u32> {
    let n = m.dart_count();
    let sigma = m.sigma_slice().to_vec();
    let sigma_inv = m.sigma_inverse();
    let hole: Vec<bool> = (0..n).map(|d| m.is_hole_dart(d)).collect();
    // in the mirror, the face through d is the reversed face through alpha(d)
    let mirror_hole: Vec<bool> = (0..n).map(|d| hole[m.alpha(d)]).collect();
    let mut views = vec![(&sigma, &hole)];
    if sym == Symmetry::Dihedral {
        views.push((&sigma_inv, &mirror_hole));
    }
    let mut best: Option<Vec<u32>> = None;
    let mut scratch = Scratch::new(n);
    for (rot, holes) in views {
        for root in 0..n {
            let w = trace(m, rot, holes, root, &mut scratch, best.as_deref());
            if let Some(w) = w {
                best = Some(w);
            }
        }
    }
    best.expect("non-empty map")
}

struct Scratch {
    num: Vec<u32>,
    order: Vec<Dart>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self { num: vec![u32::MAX; n], order: Vec::with_capacity(n) }
    }
}

fn label_parts(l: CurveLabel, ranks: &mut HashMap<CurveLabel, u32>) -> (u32, u32) {
    let rank = if l.kind.is_curve() {
        let next = ranks.len() as u32;
        *ranks.entry(l).or_insert(next)
    } else {
        0
    };
    (l.kind.tag(), rank)
}

/// Trace from `root`; returns it only if it is strictly less than `bound`.
fn trace(
    m: &CombMap,
    rot: &[Dart],
    hole: &[bool],
    root: Dart,
    s: &mut Scratch,
    bound: Option<&[u32]>,
) -> Option<Vec<u32>> {
    s.num.fill(u32::MAX);
    s.order.clear();
    s.num[root] = 0;
    s.order.push(root);
    let mut word = Vec::with_capacity(1 + 5 * m.dart_count());
    word.push(m.dart_count() as u32);
    let mut ranks = HashMap::new();
    // while equal to the bound prefix we must keep comparing
    let mut tied = bound.is_some();
    let mut i = 0;
    while i < s.order.len() {
        let d = s.order[i];
        for nb in [m.alpha(d), rot[d]] {
            if s.num[nb] == u32::MAX {
                s.num[nb] = s.order.len() as u32;
                s.order.push(nb);
            }
        }
        let (tag, rank) = label_parts(m.label(d), &mut ranks);
        let start = word.len();
        word.extend_from_slice(&[s.num[m.alpha(d)], s.num[rot[d]], tag, rank, hole[d] as u32]);
        if tied {
            let b = bound.unwrap();
            let end = word.len();
            match word[start..end].cmp(&b[start..end]) {
                std::cmp::Ordering::Less => tied = false,
                std::cmp::Ordering::Greater => return None,
                std::cmp::Ordering::Equal => {}
            }
        }
        i += 1;
    }
    if tied {
        // equal to the bound: nothing new
        return None;
    }
    Some(word)
}
