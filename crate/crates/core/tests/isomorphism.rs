mod common;

use common::*;
use morse_pr::prdiag::{census, equivalent_with, PrDiagram};
use morse_pr::Symmetry;

fn variants(max_darts: usize) -> Vec<(String, PrDiagram)> {
    let mut out = Vec::new();
    for (name, d) in small_fixtures(max_darts) {
        out.push((format!("{name}~shuffled"), shuffled(&d, 7)));
        out.push((format!("{name}~mirror"), mirrored(&d)));
        out.push((format!("{name}~swapped"), d.color_swapped()));
        out.push((name, d));
    }
    out
}

#[test]
fn oracle_agrees_with_codes_on_small_diagrams() {
    let all = variants(16);
    assert!(all.len() >= 28);
    for sym in [Symmetry::RotationOnly, Symmetry::Dihedral] {
        let mut positives = 0;
        for (i, (na, a)) in all.iter().enumerate() {
            for (nb, b) in &all[i..] {
                let oracle = brute_force_isomorphic(a.surface(), b.surface(), sym);
                assert_eq!(oracle, equivalent_with(a, b, sym), "{na} vs {nb} under {sym}");
                positives += oracle as usize;
            }
        }
        assert!(positives > all.len());
    }
}

#[test]
fn oracle_agrees_on_genus_two_handlebodies() {
    let diagrams: Vec<_> = handlebody_diagrams(2).into_iter().map(|(_, d)| d).collect();
    for a in &diagrams {
        let m = mirrored(a);
        assert!(brute_force_isomorphic(a.surface(), m.surface(), Symmetry::Dihedral));
        for b in &diagrams {
            let sym = Symmetry::Dihedral;
            assert_eq!(brute_force_isomorphic(a.surface(), b.surface(), sym), equivalent_with(a, b, sym));
        }
    }
}

#[test]
fn equivalent_diagrams_have_equal_census() {
    for (name, d) in small_fixtures(usize::MAX) {
        let c = census(&d).unwrap();
        assert_eq!(census(&shuffled(&d, 3)).unwrap(), c, "{name}");
        assert_eq!(census(&mirrored(&d)).unwrap(), c, "{name}");
    }
}
