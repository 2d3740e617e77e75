//! Helpers shared by the integration tests: a brute-force isomorphism search
//! that does not use canonical codes, and diagram sources.
#![allow(dead_code)]

use std::collections::BTreeMap;

use morse_pr::chord::{classify, ColoredChordDiagram};
use morse_pr::combmap::{CombMap, CurveLabel};
use morse_pr::fixtures;
use morse_pr::prdiag::{from_colored_chord, PrDiagram};
use morse_pr::Symmetry;

/// Whether some dart bijection carries `a` onto `b` (or onto the mirror image
/// of `b` when reflections are allowed), preserving edges, rotations, holes and
/// labels up to renaming curves within a family.
pub fn brute_force_isomorphic(a: &CombMap, b: &CombMap, sym: Symmetry) -> bool {
    let n = a.dart_count();
    if n != b.dart_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let orientations: &[bool] = match sym {
        Symmetry::RotationOnly => &[false],
        Symmetry::Dihedral => &[false, true],
    };
    let b_sigma_inv = b.sigma_inverse();
    for &reverse in orientations {
        // in a connected map the image of dart 0 determines the rest
        for target in 0..n {
            if extend(a, b, &b_sigma_inv, reverse, target).is_some() {
                return true;
            }
        }
    }
    false
}

fn extend(a: &CombMap, b: &CombMap, b_sigma_inv: &[usize], reverse: bool, target: usize) -> Option<Vec<usize>> {
    let n = a.dart_count();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut labels: BTreeMap<CurveLabel, CurveLabel> = BTreeMap::new();
    let mut back: BTreeMap<CurveLabel, CurveLabel> = BTreeMap::new();
    let mut stack = Vec::new();
    let mut assign = |d: usize, t: usize, f: &mut Vec<usize>, stack: &mut Vec<usize>| -> bool {
        if f[d] != usize::MAX {
            return f[d] == t;
        }
        if used[t] {
            return false;
        }
        f[d] = t;
        used[t] = true;
        stack.push(d);
        true
    };
    assert!(!a.is_multi_component(), "the search handles connected maps");
    assign(0, target, &mut f, &mut stack);
    {
        while let Some(d) = stack.pop() {
            let t = f[d];
            let la = a.label(d);
            let lb = b.label(t);
            if la.kind != lb.kind {
                return None;
            }
            if la.kind.is_curve() && (*labels.entry(la).or_insert(lb) != lb || *back.entry(lb).or_insert(la) != la) {
                return None;
            }
            let hole_b = if reverse { b.is_hole_dart(b.alpha(t)) } else { b.is_hole_dart(t) };
            if a.is_hole_dart(d) != hole_b {
                return None;
            }
            let sigma_t = if reverse { b_sigma_inv[t] } else { b.sigma(t) };
            if !assign(a.alpha(d), b.alpha(t), &mut f, &mut stack) || !assign(a.sigma(d), sigma_t, &mut f, &mut stack) {
                return None;
            }
        }
    }
    Some(f)
}

/// Fixtures with at most `max_darts` darts.
pub fn small_fixtures(max_darts: usize) -> Vec<(String, PrDiagram)> {
    fixtures::names()
        .into_iter()
        .map(|n| {
            let d = fixtures::load(&n).unwrap();
            (n, d)
        })
        .filter(|(_, d)| d.surface().dart_count() <= max_darts)
        .collect()
}

/// Every colored class of genus `g` under the default convention.
pub fn colored_classes(g: u32) -> Vec<ColoredChordDiagram> {
    classify(g, Symmetry::Dihedral, 1)
        .unwrap()
        .colored
        .iter()
        .map(|e| ColoredChordDiagram::parse_code(&e.code).unwrap())
        .collect()
}

/// The Pr-diagrams of every colored class up to genus `max_g`.
pub fn handlebody_diagrams(max_g: u32) -> Vec<(String, PrDiagram)> {
    (1..=max_g).flat_map(colored_classes).map(|c| (c.code(), from_colored_chord(&c).unwrap())).collect()
}

/// A diagram with its darts renamed by a seeded shuffle.
pub fn shuffled(d: &PrDiagram, seed: u64) -> PrDiagram {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..d.surface().dart_count()).collect();
    perm.shuffle(&mut rng);
    d.relabel(&perm).unwrap()
}

pub fn mirrored(d: &PrDiagram) -> PrDiagram {
    PrDiagram::from_labeled_map(d.surface().mirror()).unwrap()
}
