use std::collections::BTreeSet;

use super::*;
use proptest::prelude::*;

fn cd(pairs: &[(usize, usize)]) -> ChordDiagram {
    ChordDiagram::from_pairs(pairs).unwrap()
}

fn all_crossing(n: usize) -> ChordDiagram {
    let pairs: Vec<_> = (0..n).map(|i| (i, i + n)).collect();
    cd(&pairs)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn crossing_examples() {
    assert!(cd(&[(0, 2), (1, 3)]).crossing(0, 1));
    assert!(!cd(&[(0, 1), (2, 3)]).crossing(0, 1));
    let d = all_crossing(4);
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                assert!(d.crossing(a, b));
            }
        }
    }
}

#[test]
fn face_count_examples() {
    assert_eq!(cd(&[(0, 2), (1, 3)]).face_count(), 1);
    assert_eq!(cd(&[(0, 1), (2, 3)]).face_count(), 3);
    let d = all_crossing(4);
    assert_eq!(d.face_count(), 1);
    assert_eq!(d.genus(), 2);
}

#[test]
fn canonical_examples() {
    let x = cd(&[(0, 2), (1, 3)]);
    for sym in [Symmetry::RotationOnly, Symmetry::Dihedral] {
        assert_eq!(canonical_chord(&x.rotate(1), sym), canonical_chord(&x, sym));
        assert_eq!(canonical_chord(&cd(&[(0, 1), (2, 3)]), sym), canonical_chord(&cd(&[(1, 2), (3, 0)]), sym));
    }
    let mut codes = BTreeSet::new();
    for_all_matchings(4, |m| {
        codes.insert(ChordDiagram::new(m.to_vec()).unwrap().canonical(Symmetry::Dihedral));
    });
    assert_eq!(codes.len(), 2);
}

fn for_all_matchings(n: usize, mut f: impl FnMut(&[usize])) {
    super::enumerate::for_each_matching(n, &mut f)
}

#[test]
fn invalid_matchings_are_rejected() {
    assert!(ChordDiagram::new(vec![1, 0, 2]).is_err());
    assert!(ChordDiagram::new(vec![0, 1]).is_err());
    assert!(ChordDiagram::new(vec![1, 2, 0, 3]).is_err());
}

#[test]
fn codes_round_trip() {
    let d = all_crossing(4);
    assert_eq!(d.code(), "45670123");
    assert_eq!(ChordDiagram::parse_code(&d.code()).unwrap(), d);
    let big = all_crossing(10);
    assert_eq!(ChordDiagram::parse_code(&big.code()).unwrap(), big);
    let c = ColoredChordDiagram::from_chord_colors(cd(&[(0, 2), (1, 3)]), &[Color::Green, Color::Red]).unwrap();
    assert_eq!(c.code(), "2301-grgr");
    assert_eq!(ColoredChordDiagram::parse_code("2301-grgr").unwrap(), c);
    assert!(ColoredChordDiagram::parse_code("2301-ggrr").is_err());
}

// Counts below were computed once by a separate brute-force script that
// enumerates matchings, canonicalizes by explicit rotation/reflection tables and
// deduplicates colorings by brute force over the same group.
const DIHEDRAL_BASES: [usize; 3] = [1, 4, 82];
const ROTATION_BASES: [usize; 3] = [1, 4, 131];
const DIHEDRAL_COLORED: [usize; 3] = [1, 5, 179];
const ROTATION_COLORED: [usize; 3] = [1, 8, 342];

#[test]
fn base_counts() {
    for g in 1..=3u32 {
        let i = g as usize - 1;
        assert_eq!(enumerate_bases(g, Symmetry::Dihedral).unwrap().len(), DIHEDRAL_BASES[i]);
        assert_eq!(enumerate_bases(g, Symmetry::RotationOnly).unwrap().len(), ROTATION_BASES[i]);
    }
}

#[test]
fn orbit_sizes_sum_to_the_unicellular_count() {
    // one-face matchings of 4g labeled points: (4g)! / (4^g (2g+1)!)
    for g in 1..=3u32 {
        let expected = factorial(4 * g as u64) / (4u64.pow(g) * factorial(2 * g as u64 + 1));
        for sym in [Symmetry::RotationOnly, Symmetry::Dihedral] {
            let total: usize = enumerate_bases(g, sym)
                .unwrap()
                .iter()
                .map(|b| {
                    circle_maps(b.points(), sym).map(|t| t.apply_matching(b.matching())).collect::<BTreeSet<_>>().len()
                })
                .sum();
            assert_eq!(total as u64, expected, "g = {g}, {sym}");
        }
    }
}

#[test]
fn bases_are_closed_under_the_symmetry() {
    for sym in [Symmetry::RotationOnly, Symmetry::Dihedral] {
        let bases = enumerate_bases(3, sym).unwrap();
        let codes: BTreeSet<String> = bases.iter().map(|b| b.code()).collect();
        for b in &bases {
            for t in circle_maps(b.points(), sym) {
                let img = ChordDiagram::new(t.apply_matching(b.matching())).unwrap();
                assert!(codes.contains(&img.canonical(sym).code()));
            }
        }
        let mut sorted = codes.iter().cloned().collect::<Vec<_>>();
        sorted.sort();
        assert_eq!(sorted, bases.iter().map(|b| b.code()).collect::<Vec<_>>());
    }
}

#[test]
fn genus_four_bases_are_one_face() {
    let bases = enumerate_bases(4, Symmetry::Dihedral).unwrap();
    assert!(bases.iter().all(|b| b.is_one_face() && b.n() == 8));
    assert!(enumerate_bases(5, Symmetry::Dihedral).is_err());
    assert!(enumerate_bases(0, Symmetry::Dihedral).is_err());
}

#[test]
fn coloring_counts() {
    for g in 1..=3u32 {
        let i = g as usize - 1;
        for (sym, want) in [(Symmetry::Dihedral, DIHEDRAL_COLORED[i]), (Symmetry::RotationOnly, ROTATION_COLORED[i])] {
            let total: usize =
                enumerate_bases(g, sym).unwrap().iter().map(|b| enumerate_colorings(b, g, sym).unwrap().len()).sum();
            assert_eq!(total, want, "g = {g}, {sym}");
        }
    }
}

#[test]
fn genus_one_has_one_coloring() {
    let base = cd(&[(0, 2), (1, 3)]);
    let cols = enumerate_colorings(&base, 1, Symmetry::Dihedral).unwrap();
    assert_eq!(cols.len(), 1);
    assert!(is_river(&cols[0]));
}

#[test]
fn all_crossing_genus_two_admits_no_coloring() {
    let cols = enumerate_colorings(&all_crossing(4), 2, Symmetry::Dihedral).unwrap();
    assert!(cols.is_empty());
}

#[test]
fn coloring_preconditions() {
    assert_eq!(enumerate_colorings(&cd(&[(0, 1), (2, 3)]), 1, Symmetry::Dihedral).unwrap_err(), ChordError::NotOneFace);
    assert_eq!(
        enumerate_colorings(&cd(&[(0, 2), (1, 3)]), 2, Symmetry::Dihedral).unwrap_err(),
        ChordError::WrongChordCount { expected: 4, found: 2 }
    );
}

#[test]
fn river_examples() {
    let c = ColoredChordDiagram::from_chord_colors(cd(&[(0, 2), (1, 3)]), &[Color::Green, Color::Red]).unwrap();
    assert!(is_river(&c));
    // two crossing reds
    let c = ColoredChordDiagram::from_chord_colors(
        cd(&[(0, 1), (2, 4), (3, 6), (5, 7)]),
        &[Color::Green, Color::Red, Color::Red, Color::Green],
    )
    .unwrap();
    assert!(!c.non_crossing(Color::Red));
    assert!(!is_river(&c));
}

#[test]
fn classification_counts() {
    let c1 = classify(1, Symmetry::Dihedral, 1).unwrap();
    assert_eq!((c1.base_count(), c1.colored_count(), c1.river_colored()), (1, 1, 1));
    let c2 = classify(2, Symmetry::Dihedral, 1).unwrap();
    assert_eq!((c2.base_count(), c2.colored_count(), c2.river_colored()), (4, 5, 2));
    let c3 = classify(3, Symmetry::Dihedral, 1).unwrap();
    assert_eq!((c3.base_count(), c3.colored_count(), c3.river_bases()), (82, 179, 7));
    assert_eq!(classify(3, Symmetry::Dihedral, 4).unwrap(), c3);
}

/// One end per red chord, all chosen ends forming a run of consecutive points.
fn river_brute_force(c: &ColoredChordDiagram) -> bool {
    let reds = c.chords_of(Color::Red);
    let greens = c.chords_of(Color::Green);
    let g = reds.len();
    if g != greens.len() || !c.non_crossing(Color::Red) || !c.non_crossing(Color::Green) {
        return false;
    }
    let pts = c.base().points();
    (0u32..1 << g).any(|sel| {
        let chosen: BTreeSet<usize> =
            reds.iter().enumerate().map(|(i, &(a, b))| if sel & (1 << i) != 0 { b } else { a }).collect();
        (0..pts).any(|s| (0..g).map(|j| (s + j) % pts).collect::<BTreeSet<_>>() == chosen)
    })
}

#[test]
fn river_agrees_with_brute_force_on_all_colored_classes() {
    for g in 1..=3u32 {
        for b in enumerate_bases(g, Symmetry::Dihedral).unwrap() {
            for c in enumerate_colorings(&b, g, Symmetry::Dihedral).unwrap() {
                assert_eq!(is_river(&c), river_brute_force(&c), "{c}");
            }
        }
    }
}

/// Boundary of the thickened diagram walked explicitly: the circle is cut into
/// arcs `[i, i+1]`; leaving arc `i` at its end point `i+1` we cross the band of
/// that chord and continue on the arc that starts at the partner.
fn thickened_boundary_cycles(m: &[usize]) -> usize {
    let n = m.len();
    let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut used = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if used[start] {
            continue;
        }
        cycles += 1;
        let mut a = start;
        while !used[a] {
            used[a] = true;
            let end = arcs[a].1;
            a = arcs.iter().position(|&(s, _)| s == m[end]).unwrap();
        }
    }
    cycles
}

fn matching_strategy() -> impl Strategy<Value = ChordDiagram> {
    (1usize..=5).prop_flat_map(|n| {
        Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|order| {
            let mut m = vec![0; order.len()];
            for k in (0..order.len()).step_by(2) {
                m[order[k]] = order[k + 1];
                m[order[k + 1]] = order[k];
            }
            ChordDiagram::new(m).unwrap()
        })
    })
}

fn colored_strategy() -> impl Strategy<Value = ColoredChordDiagram> {
    (1usize..=4).prop_flat_map(|g| {
        (Just((0..4 * g).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), 2 * g))
            .prop_map(|(order, greens)| {
                let mut m = vec![0; order.len()];
                for k in (0..order.len()).step_by(2) {
                    m[order[k]] = order[k + 1];
                    m[order[k + 1]] = order[k];
                }
                let base = ChordDiagram::new(m).unwrap();
                let colors: Vec<Color> = greens.iter().map(|&x| if x { Color::Green } else { Color::Red }).collect();
                ColoredChordDiagram::from_chord_colors(base, &colors).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn face_count_matches_thickened_walk(d in matching_strategy()) {
        prop_assert_eq!(d.face_count(), thickened_boundary_cycles(d.matching()));
        let map = d.to_ribbon_map();
        prop_assert_eq!(map.faces().len(), d.face_count());
        let chi = 1 - d.n() as i64 + d.face_count() as i64;
        prop_assert_eq!(chi.rem_euclid(2), 0);
        prop_assert_eq!(map.euler_genus().unwrap().genus, d.genus());
    }

    #[test]
    fn canonical_is_a_class_invariant(d in matching_strategy(), k in 0usize..10, flip in any::<bool>()) {
        let k = k % d.points();
        let img = if flip { d.reflect().rotate(k) } else { d.rotate(k) };
        prop_assert_eq!(img.canonical(Symmetry::Dihedral), d.canonical(Symmetry::Dihedral));
        prop_assert_eq!(d.rotate(k).canonical(Symmetry::RotationOnly), d.canonical(Symmetry::RotationOnly));
    }

    #[test]
    fn river_matches_brute_force(c in colored_strategy()) {
        prop_assert_eq!(is_river(&c), river_brute_force(&c));
    }

    #[test]
    fn json_round_trip(c in colored_strategy()) {
        let j = ChordJson::from(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: ChordJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_colored().unwrap(), c);
    }
}
