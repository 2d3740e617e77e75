//! The embedded fixture corpus: hand-encoded and generated diagrams together
//! with their expected invariants.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::chord::classify;
use crate::prdiag::{census, equivalent_with, is_optimal, to_colored_chord_with, PrDiagram, PrError, PrJson};
use crate::Symmetry;

pub const MANIFEST: &str = include_str!("../../../fixtures/manifest.json");

const FILES: &[(&str, &str)] = &[
    ("trivial_d3.json", include_str!("../../../fixtures/trivial_d3.json")),
    ("d3_four_a.json", include_str!("../../../fixtures/d3_four_a.json")),
    ("d3_four_b.json", include_str!("../../../fixtures/d3_four_b.json")),
    ("d3_six_cross.json", include_str!("../../../fixtures/d3_six_cross.json")),
    ("d3_six_cycle.json", include_str!("../../../fixtures/d3_six_cycle.json")),
    ("d3_six_chords.json", include_str!("../../../fixtures/d3_six_chords.json")),
    ("solid_torus.json", include_str!("../../../fixtures/solid_torus.json")),
    ("handlebody2_a.json", include_str!("../../../fixtures/handlebody2_a.json")),
    ("handlebody2_b.json", include_str!("../../../fixtures/handlebody2_b.json")),
    ("handlebody2_c.json", include_str!("../../../fixtures/handlebody2_c.json")),
    ("handlebody2_d.json", include_str!("../../../fixtures/handlebody2_d.json")),
    ("handlebody2_e.json", include_str!("../../../fixtures/handlebody2_e.json")),
    ("parallel_pairs2.json", include_str!("../../../fixtures/parallel_pairs2.json")),
    ("parallel_pairs2_extra_u.json", include_str!("../../../fixtures/parallel_pairs2_extra_u.json")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureSpec {
    pub name: String,
    pub file: String,
    pub census: [u32; 6],
    pub g_boundary: i64,
    /// genus at which the diagram is optimal, if any
    pub optimal_genus: Option<u32>,
    /// canonical colored chord code, for optimal diagrams
    pub colored: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub fixtures: Vec<FixtureSpec>,
    /// groups whose members must be pairwise non-equivalent
    pub distinct: Vec<Vec<String>>,
    /// groups whose members must be equivalent
    pub equivalent: Vec<Vec<String>>,
    /// fixture sets in bijection with the enumerated colored classes of a genus
    pub class_sets: Vec<ClassSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSet {
    pub genus: u32,
    pub fixtures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn manifest() -> Manifest {
    serde_json::from_str(MANIFEST).expect("embedded manifest parses")
}

pub fn names() -> Vec<String> {
    manifest().fixtures.into_iter().map(|f| f.name).collect()
}

pub fn source(name: &str) -> Option<&'static str> {
    let spec = manifest().fixtures.into_iter().find(|f| f.name == name)?;
    FILES.iter().find(|(f, _)| *f == spec.file).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Result<PrDiagram, PrError> {
    let src = source(name).ok_or_else(|| PrError::Structure(format!("no fixture named {name:?}")))?;
    let j: PrJson = serde_json::from_str(src).map_err(|e| PrError::Structure(format!("{name}: {e}")))?;
    j.to_diagram()
}

fn check_one(spec: &FixtureSpec, d: &PrDiagram, sym: Symmetry) -> Result<(), String> {
    let c = census(d).map_err(|e| e.to_string())?;
    if c.counts() != spec.census || c.g_boundary != spec.g_boundary {
        return Err(format!(
            "census {:?} with boundary genus {}, expected {:?} with {}",
            c.counts(),
            c.g_boundary,
            spec.census,
            spec.g_boundary
        ));
    }
    if !c.morse_checks().pass {
        return Err("necessary conditions fail".into());
    }
    let g = spec.optimal_genus.unwrap_or(c.n3);
    let optimal = is_optimal(d, g).map_err(|e| e.to_string())?;
    if optimal != spec.optimal_genus.is_some() {
        return Err(format!("optimal at genus {g}: {optimal}"));
    }
    if let Some(code) = &spec.colored {
        let got = to_colored_chord_with(d, sym).map_err(|e| e.to_string())?.code();
        if sym == Symmetry::Dihedral && &got != code {
            return Err(format!("colored chord code {got}, expected {code}"));
        }
    }
    Ok(())
}

/// Checks every fixture against the manifest, then the equivalence groups.
pub fn verify(sym: Symmetry) -> Vec<FixtureCheck> {
    let man = manifest();
    let mut out = Vec::new();
    let mut loaded = BTreeMap::new();
    for spec in &man.fixtures {
        let r = load(&spec.name).map_err(|e| e.to_string()).and_then(|d| {
            let r = check_one(spec, &d, sym);
            loaded.insert(spec.name.clone(), d);
            r
        });
        out.push(FixtureCheck { name: spec.name.clone(), pass: r.is_ok(), detail: r.err() });
    }
    let mut group = |names: &Vec<String>, want_equal: bool| {
        let label = format!("{}({})", if want_equal { "equivalent" } else { "distinct" }, names.join(","));
        let mut detail = None;
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                let (Some(x), Some(y)) = (loaded.get(a), loaded.get(b)) else {
                    detail = Some(format!("{a} or {b} failed to load"));
                    continue;
                };
                if equivalent_with(x, y, sym) != want_equal {
                    detail.get_or_insert(format!("{a} vs {b}"));
                }
            }
        }
        out.push(FixtureCheck { name: label, pass: detail.is_none(), detail });
    };
    for g in &man.distinct {
        group(g, false);
    }
    for g in &man.equivalent {
        group(g, true);
    }
    for set in &man.class_sets {
        let r = class_bijection(set, &loaded, sym);
        out.push(FixtureCheck { name: format!("classes(genus {})", set.genus), pass: r.is_ok(), detail: r.err() });
    }
    out
}

/// The fixtures' colored chord codes are exactly the enumerated classes.
fn class_bijection(set: &ClassSet, loaded: &BTreeMap<String, PrDiagram>, sym: Symmetry) -> Result<(), String> {
    let want: BTreeSet<String> =
        classify(set.genus, sym, 1).map_err(|e| e.to_string())?.colored.into_iter().map(|e| e.code).collect();
    let mut got = BTreeSet::new();
    for name in &set.fixtures {
        let d = loaded.get(name).ok_or_else(|| format!("{name} failed to load"))?;
        let code = to_colored_chord_with(d, sym).map_err(|e| format!("{name}: {e}"))?.code();
        if !got.insert(code.clone()) {
            return Err(format!("{name} repeats class {code}"));
        }
    }
    if got != want {
        let missing: Vec<_> = want.difference(&got).collect();
        let extra: Vec<_> = got.difference(&want).collect();
        return Err(format!("missing classes {missing:?}, unexpected {extra:?}"));
    }
    Ok(())
}
