//! Classification catalogs as line-delimited JSON, and count reports.

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chord::{classify, is_river, ChordDiagram, ChordError, ColoredChordDiagram};
use crate::combmap::{CanonicalCode, MapError};
use crate::fixtures::{self, FixtureCheck};
use crate::prdiag::{census, from_colored_chord, is_optimal, to_colored_chord_with, Family, PrDiagram, PrError};
use crate::{Symmetry, TOOL_VERSION};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: field `{field}`: {reason}")]
    SchemaViolation { line: usize, field: String, reason: String },
    #[error("fixture {fixture} fails: {check}")]
    FixtureRegression { fixture: String, check: String },
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error(transparent)]
    Pr(#[from] PrError),
}

impl From<MapError> for CatalogError {
    fn from(e: MapError) -> Self {
        CatalogError::Pr(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    BaseChord,
    ColoredChord,
    PrDiagram,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub one_face: bool,
    pub optimal: bool,
    pub river: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub schema: u32,
    pub code: String,
    pub kind: EntryKind,
    pub genus: u32,
    pub flags: Flags,
    /// `enumerated` or `fixture:<name>`
    pub source: String,
    pub tool_version: String,
}

impl CatalogEntry {
    /// An entry whose genus and flags are computed from `code`.
    pub fn new(kind: EntryKind, code: &str, source: &str, sym: Symmetry) -> Result<Self, CatalogError> {
        let (genus, flags) = recompute(kind, code, sym)?;
        Ok(CatalogEntry {
            schema: SCHEMA_VERSION,
            code: code.to_string(),
            kind,
            genus,
            flags,
            source: source.to_string(),
            tool_version: TOOL_VERSION.to_string(),
        })
    }

    /// Whether the stored genus and flags agree with the code.
    pub fn is_consistent(&self, sym: Symmetry) -> Result<bool, CatalogError> {
        Ok(recompute(self.kind, &self.code, sym)? == (self.genus, self.flags))
    }
}

/// Genus and flags from a code alone. For Pr-diagrams the code is decoded and
/// the flags describe its colored chord diagram, when it is optimal.
pub fn recompute(kind: EntryKind, code: &str, sym: Symmetry) -> Result<(u32, Flags), CatalogError> {
    Ok(match kind {
        EntryKind::BaseChord => {
            let cd = ChordDiagram::parse_code(code)?;
            let one_face = cd.is_one_face();
            (cd.genus(), Flags { one_face, optimal: false, river: false })
        }
        EntryKind::ColoredChord => {
            let c = ColoredChordDiagram::parse_code(code)?;
            let optimal = c.check_optimal().is_ok();
            let flags = Flags { one_face: c.base().is_one_face(), optimal, river: optimal && is_river(&c) };
            (c.genus(), flags)
        }
        EntryKind::PrDiagram => {
            let d = pr_from_code(code)?;
            let g = census(&d)?.g_boundary.max(0) as u32;
            if is_optimal(&d, d.count(Family::GreenArc) as u32)? {
                let c = to_colored_chord_with(&d, sym)?;
                (g, Flags { one_face: true, optimal: true, river: is_river(&c) })
            } else {
                (g, Flags::default())
            }
        }
    })
}

pub fn pr_from_code(code: &str) -> Result<PrDiagram, CatalogError> {
    let map = CanonicalCode::from_hex(code)?.decode()?;
    Ok(PrDiagram::from_labeled_map(map)?)
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CatalogError + '_ {
    move |source| CatalogError::IoFailure { path: path.to_path_buf(), source }
}

/// Writes one entry per line, sorted by code. Codes must be unique per kind.
pub fn save_catalog(entries: &[CatalogEntry], path: &Path) -> Result<(), CatalogError> {
    let mut sorted: Vec<&CatalogEntry> = entries.iter().collect();
    sorted.sort_by(|a, b| (&a.code, a.kind).cmp(&(&b.code, b.kind)));
    for (k, w) in sorted.windows(2).enumerate() {
        if w[0].code == w[1].code && w[0].kind == w[1].kind {
            return Err(CatalogError::SchemaViolation {
                line: k + 2,
                field: "code".into(),
                reason: format!("duplicate code {}", w[1].code),
            });
        }
    }
    let file = fs::File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    for e in sorted {
        let line = serde_json::to_string(e).expect("entries serialize");
        writeln!(out, "{line}").map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

const FIELDS: [&str; 7] = ["schema", "code", "kind", "genus", "flags", "source", "tool_version"];

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let violation =
            |field: &str, reason: String| CatalogError::SchemaViolation { line, field: field.to_string(), reason };
        let value: serde_json::Value = serde_json::from_str(raw).map_err(|e| violation("<line>", e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| violation("<line>", "not a JSON object".into()))?;
        if let Some(f) = FIELDS.iter().find(|f| !obj.contains_key(**f)) {
            return Err(violation(f, "missing".into()));
        }
        if let Some(f) = obj.keys().find(|f| !FIELDS.contains(&f.as_str())) {
            return Err(violation(f, "unknown field".into()));
        }
        let e: CatalogEntry = serde_json::from_value(value.clone()).map_err(|err| {
            let field = FIELDS
                .iter()
                .find(|f| serde_json::from_value::<CatalogEntry>(without(&value, f)).is_ok())
                .copied()
                .unwrap_or("<line>");
            violation(field, err.to_string())
        })?;
        if e.schema != SCHEMA_VERSION {
            return Err(violation("schema", format!("version {} is not supported", e.schema)));
        }
        if !seen.insert((e.code.clone(), e.kind)) {
            return Err(violation("code", format!("duplicate code {}", e.code)));
        }
        entries.push(e);
    }
    Ok(entries)
}

/// `value` with `field` replaced by a well-typed placeholder, to find which
/// field a deserialization error belongs to.
fn without(value: &serde_json::Value, field: &str) -> serde_json::Value {
    let placeholder = match field {
        "schema" | "genus" => serde_json::json!(0),
        "kind" => serde_json::json!("base_chord"),
        "flags" => serde_json::json!({"one_face": false, "optimal": false, "river": false}),
        _ => serde_json::json!(""),
    };
    let mut v = value.clone();
    v[field] = placeholder;
    v
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_catalog(&text)
}

/// Counts for one genus. `runtime_ms` is left out of files so that they are
/// reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub genus: u32,
    pub symmetry: Symmetry,
    pub bases: usize,
    pub colored: usize,
    pub river_colored: usize,
    pub river_bases: usize,
    pub pr_diagrams: usize,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub report: CatalogReport,
    pub bases: Vec<CatalogEntry>,
    pub colored: Vec<CatalogEntry>,
    pub pr: Vec<CatalogEntry>,
}

/// Runs `f` over `items` on `workers` threads; results keep the input order.
fn par_map<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = workers.clamp(1, items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Enumerates genus `g` and builds the three catalogs: base chord diagrams,
/// colored chord diagrams and the Pr-diagrams of the colored classes.
pub fn build_catalog(g: u32, sym: Symmetry, workers: usize) -> Result<Catalog, CatalogError> {
    let cls = classify(g, sym, workers)?;
    let river_bases: BTreeSet<&str> = cls.colored.iter().filter(|e| e.river).map(|e| e.base.as_str()).collect();
    let bases = cls
        .bases
        .iter()
        .map(|code| {
            let cd = ChordDiagram::parse_code(code)?;
            Ok(CatalogEntry {
                schema: SCHEMA_VERSION,
                code: code.clone(),
                kind: EntryKind::BaseChord,
                genus: g,
                flags: Flags { one_face: cd.is_one_face(), optimal: false, river: false },
                source: "enumerated".into(),
                tool_version: TOOL_VERSION.into(),
            })
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    let colored: Vec<CatalogEntry> = cls
        .colored
        .iter()
        .map(|e| CatalogEntry {
            schema: SCHEMA_VERSION,
            code: e.code.clone(),
            kind: EntryKind::ColoredChord,
            genus: g,
            flags: Flags { one_face: true, optimal: true, river: e.river },
            source: "enumerated".into(),
            tool_version: TOOL_VERSION.into(),
        })
        .collect();
    let pr = par_map(&cls.colored, workers, |e| -> Result<CatalogEntry, CatalogError> {
        let d = from_colored_chord(&ColoredChordDiagram::parse_code(&e.code)?)?;
        Ok(CatalogEntry {
            schema: SCHEMA_VERSION,
            code: d.code(sym).to_hex(),
            kind: EntryKind::PrDiagram,
            genus: g,
            flags: Flags { one_face: true, optimal: true, river: e.river },
            source: "enumerated".into(),
            tool_version: TOOL_VERSION.into(),
        })
    });
    let mut pr = pr.into_iter().collect::<Result<Vec<_>, _>>()?;
    pr.sort_by(|a, b| a.code.cmp(&b.code));
    let report = CatalogReport {
        genus: g,
        symmetry: sym,
        bases: bases.len(),
        colored: colored.len(),
        river_colored: cls.river_colored(),
        river_bases: river_bases.len(),
        pr_diagrams: pr.iter().map(|e| &e.code).collect::<BTreeSet<_>>().len(),
        tool_version: TOOL_VERSION.into(),
        runtime_ms: None,
    };
    Ok(Catalog { report, bases, colored, pr })
}

/// Writes `bases.jsonl`, `colored.jsonl`, `pr.jsonl` and `report.json`.
pub fn write_catalog(c: &Catalog, dir: &Path) -> Result<(), CatalogError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    save_catalog(&c.bases, &dir.join("bases.jsonl"))?;
    save_catalog(&c.colored, &dir.join("colored.jsonl"))?;
    save_catalog(&c.pr, &dir.join("pr.jsonl"))?;
    let report = CatalogReport { runtime_ms: None, ..c.report.clone() };
    let path = dir.join("report.json");
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    fs::write(&path, text).map_err(io_err(&path))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub manifest_version: u32,
    pub pass: bool,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn first_regression(&self) -> Result<(), CatalogError> {
        match self.checks.iter().find(|c| !c.pass) {
            None => Ok(()),
            Some(c) => Err(CatalogError::FixtureRegression {
                fixture: c.name.clone(),
                check: c.detail.clone().unwrap_or_default(),
            }),
        }
    }
}

pub fn verify_fixtures(sym: Symmetry) -> FixtureReport {
    let checks = fixtures::verify(sym);
    FixtureReport { manifest_version: fixtures::manifest().version, pass: checks.iter().all(|c| c.pass), checks }
}

/// Catalog entries for the shipped fixtures.
pub fn fixture_entries(sym: Symmetry) -> Result<Vec<CatalogEntry>, CatalogError> {
    fixtures::names()
        .into_iter()
        .map(|name| {
            let d = fixtures::load(&name)?;
            CatalogEntry::new(EntryKind::PrDiagram, &d.code(sym).to_hex(), &format!("fixture:{name}"), sym)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let c = build_catalog(2, Symmetry::Dihedral, 2).unwrap();
        assert_eq!(c.colored.len(), 5);
        let path = dir.path().join("colored.jsonl");
        save_catalog(&c.colored, &path).unwrap();
        assert_eq!(load_catalog(&path).unwrap(), c.colored);
    }

    #[test]
    fn empty_catalog() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        save_catalog(&[], &path).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "");
        assert!(load_catalog(&path).unwrap().is_empty());
    }

    #[test]
    fn schema_violations() {
        let c = build_catalog(1, Symmetry::Dihedral, 1).unwrap();
        let line = serde_json::to_string(&c.colored[0]).unwrap();
        let dup = format!("{line}\n{line}\n");
        match parse_catalog(&dup) {
            Err(CatalogError::SchemaViolation { line: 2, field, .. }) => assert_eq!(field, "code"),
            other => panic!("{other:?}"),
        }
        let missing = line.replace("\"genus\":1,", "");
        match parse_catalog(&missing) {
            Err(CatalogError::SchemaViolation { line: 1, field, .. }) => assert_eq!(field, "genus"),
            other => panic!("{other:?}"),
        }
        let mistyped = line.replace("\"genus\":1", "\"genus\":\"one\"");
        match parse_catalog(&format!("\n{mistyped}")) {
            Err(CatalogError::SchemaViolation { line: 2, field, .. }) => assert_eq!(field, "genus"),
            other => panic!("{other:?}"),
        }
        let version = line.replace("\"schema\":1", "\"schema\":9");
        assert!(
            matches!(parse_catalog(&version), Err(CatalogError::SchemaViolation { field, .. }) if field == "schema")
        );
        assert!(matches!(parse_catalog("[1]"), Err(CatalogError::SchemaViolation { line: 1, .. })));
        assert!(save_catalog(&[c.colored[0].clone(), c.colored[0].clone()], Path::new("/nonexistent/x")).is_err());
        assert!(matches!(load_catalog(Path::new("/nonexistent/x")), Err(CatalogError::IoFailure { .. })));
    }

    #[test]
    fn flags_are_recomputable() {
        for g in 1..=2 {
            let c = build_catalog(g, Symmetry::Dihedral, 1).unwrap();
            for e in c.bases.iter().chain(&c.colored).chain(&c.pr) {
                assert!(e.is_consistent(Symmetry::Dihedral).unwrap(), "{e:?}");
            }
            assert_eq!(c.report.pr_diagrams, c.report.colored);
        }
        let mut e = build_catalog(2, Symmetry::Dihedral, 1).unwrap().colored[0].clone();
        e.flags.river = !e.flags.river;
        assert!(!e.is_consistent(Symmetry::Dihedral).unwrap());
    }

    #[test]
    fn catalog_is_deterministic() {
        let a = build_catalog(3, Symmetry::Dihedral, 1).unwrap();
        let b = build_catalog(3, Symmetry::Dihedral, 4).unwrap();
        assert_eq!(a, b);
        let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        write_catalog(&a, d1.path()).unwrap();
        write_catalog(&b, d2.path()).unwrap();
        for f in ["bases.jsonl", "colored.jsonl", "pr.jsonl", "report.json"] {
            assert_eq!(fs::read(d1.path().join(f)).unwrap(), fs::read(d2.path().join(f)).unwrap(), "{f}");
        }
    }

    #[test]
    fn fixture_catalog() {
        let report = verify_fixtures(Symmetry::Dihedral);
        assert!(report.pass, "{report:?}");
        report.first_regression().unwrap();
        let entries = fixture_entries(Symmetry::Dihedral).unwrap();
        let torus = entries.iter().find(|e| e.source == "fixture:solid_torus").unwrap();
        assert_eq!(torus.genus, 1);
        assert_eq!(torus.flags, Flags { one_face: true, optimal: true, river: true });
        let extra = entries.iter().find(|e| e.source == "fixture:parallel_pairs2_extra_u").unwrap();
        assert!(!extra.flags.optimal);
    }

    #[test]
    fn regression_names_the_fixture() {
        let bad = FixtureReport {
            manifest_version: 1,
            pass: false,
            checks: vec![FixtureCheck { name: "x".into(), pass: false, detail: Some("census".into()) }],
        };
        assert!(
            matches!(bad.first_regression(), Err(CatalogError::FixtureRegression { fixture, .. }) if fixture == "x")
        );
    }
}
