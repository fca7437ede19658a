mod common;

use std::collections::HashSet;

use common::{orient, FINITE_UP_TO_4};
use schur_scope::curves::{mutation_word_map, root_of_curve, CurveWord, MutationSide};
use schur_scope::schur::*;
use schur_scope::{Certainty, Limits, RootVector};

#[test]
fn fast_paths_agree_with_generic_route() {
    let limits = Limits::default();
    for name in FINITE_UP_TO_4.iter().chain(&["universal:2:2", "universal:2:3"]) {
        let o = orient(name);
        for beta in o.group().positive_real_roots(15) {
            let fast = is_schur_root(&beta, &o, &limits, SchurMethod::Auto).unwrap();
            let slow = is_schur_root(&beta, &o, &limits, SchurMethod::Generic).unwrap();
            assert_eq!(fast.answer, slow.answer, "{name} {beta}");
            assert_eq!(fast.answer, Certainty::Yes);
            assert!(fast.validates(&beta, &o) && slow.validates(&beta, &o));
        }
    }
}

#[test]
fn schur_sets_move_with_mutation() {
    let limits = Limits::default();
    for name in ["A3", "universal:3:2"] {
        let o = orient(name);
        let m = mutate(&o, MutationSide::Source);
        let s = mutation_reflection(&o, MutationSide::Source);
        let roots = o.group().positive_real_roots(8);
        let schur = |o: &schur_scope::Orientation, r: &RootVector| {
            is_schur_root(r, o, &limits, SchurMethod::Generic).unwrap().answer == Certainty::Yes
        };
        let moved: HashSet<RootVector> = roots.iter().filter(|r| schur(&o, r)).map(|r| s.apply(r).abs()).collect();
        let target: HashSet<RootVector> = moved.iter().filter(|r| schur(&m, r)).cloned().collect();
        assert_eq!(moved, target, "{name}");
        if name == "A3" {
            let all: HashSet<RootVector> = roots.iter().filter(|r| schur(&m, r)).cloned().collect();
            assert_eq!(moved, all);
        }
    }
}

#[test]
fn mutation_agreement_universal() {
    let limits = Limits::default();
    let o = orient("universal:3:2");
    for beta in o.group().positive_real_roots(6) {
        for side in [MutationSide::Source, MutationSide::Sink] {
            let chk = mutation_equivalence_check(&beta, &o, side, &limits, SchurMethod::Generic).unwrap();
            assert_eq!(chk.agreement(), Certainty::Yes, "{beta}");
        }
    }
}

#[test]
fn affine_transversal_census() {
    let limits = Limits::default();
    let o = orient("affine-A2");
    let t = schur_transversal_affine(&o).unwrap();
    let mut orbits = Vec::new();
    for r in &t {
        assert!(r.root.height() <= 15);
        let v = is_schur_root(&r.root, &o, &limits, SchurMethod::Generic).unwrap();
        assert_eq!(v.answer, Certainty::Yes, "{}", r.label);
        assert_eq!(root_of_curve(&r.word, o.group()).unwrap(), r.root);
        let orb = c_orbit(&r.root, &o, 6).unwrap();
        assert!(!orb.closed);
        orbits.push(orb.root_set());
    }
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            assert!(orbits[i].is_disjoint(&orbits[j]), "{} {}", t[i].label, t[j].label);
        }
    }
    assert!(orbits.len() >= 2 * o.rank());
}

#[test]
fn example_rank_three_mutations() {
    let limits = Limits::default();
    let o = orient("universal:3:2");
    let beta_word: CurveWord = "2,3|2".parse().unwrap();
    let beta = root_of_curve(&beta_word, o.group()).unwrap();
    assert_eq!(beta, RootVector(vec![0, 3, 2]));
    let source = mutation_word_map(&beta_word, MutationSide::Source, &o);
    let sink = mutation_word_map(&beta_word, MutationSide::Sink, &o);
    assert_eq!(source.to_string(), "1,2,3|2");
    assert_eq!(sink.to_string(), "3,2,3|2");
    let ms = mutate(&o, MutationSide::Source);
    let mt = mutate(&o, MutationSide::Sink);
    assert_eq!(ms.order(), &[1, 2, 0]);
    assert_eq!(mt.order(), &[2, 0, 1]);
    assert_eq!(root_of_curve(&source, o.group()).unwrap(), RootVector(vec![10, 3, 2]));
    assert_eq!(root_of_curve(&sink, o.group()).unwrap(), RootVector(vec![0, 3, 4]));
    for (root, orientation) in [(&beta, &o), (&RootVector(vec![10, 3, 2]), &ms), (&RootVector(vec![0, 3, 4]), &mt)] {
        let v = is_schur_root(root, orientation, &limits, SchurMethod::Generic).unwrap();
        assert_eq!(v.answer, Certainty::Yes, "{root}");
        assert!(v.validates(root, orientation));
    }
}

#[test]
fn census_matches_orbit_sizes() {
    for name in ["A2", "A3", "B2", "B3", "D4", "G2", "A4", "F4"] {
        let o = orient(name);
        let census = c_orbit_census_finite(&o).unwrap();
        assert!(census.is_as_predicted(o.rank()), "{name}");
        for orbit in &census.orbits {
            let c = c_orbit(&orbit[0], &o, 100).unwrap();
            assert!(c.closed);
            assert_eq!(c.len() as u64, census.coxeter_number);
        }
    }
}
