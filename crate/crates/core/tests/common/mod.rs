#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use schur_scope::{preset, BraidLetter, BraidWord, Exec, Orientation, WeylElement, WeylGroup};

pub const FINITE_UP_TO_4: &[&str] = &["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"];

pub fn orient(name: &str) -> Orientation {
    Orientation::standard(preset(name).unwrap())
}

/// Every conjugate of a simple reflection, by closing the group under
/// multiplication from scratch.
pub fn conjugate_reflections(group: &WeylGroup) -> HashSet<WeylElement> {
    let n = group.rank();
    let gens: Vec<WeylElement> = (0..n).map(|i| group.simple_element(i).unwrap().clone()).collect();
    let mut elements: HashSet<WeylElement> = HashSet::from([WeylElement::identity(n)]);
    let mut queue = VecDeque::from([WeylElement::identity(n)]);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let x = w.compose(s);
            if elements.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    elements
        .iter()
        .flat_map(|w| gens.iter().map(move |s| w.compose(s).compose(&w.inverse())))
        .collect()
}

/// Absolute length of every element, by breadth-first search over the
/// Cayley graph with all reflections as generators.
pub fn bfs_lengths(group: &WeylGroup) -> HashMap<WeylElement, usize> {
    let refl: Vec<WeylElement> = conjugate_reflections(group).into_iter().collect();
    let id = WeylElement::identity(group.rank());
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for t in &refl {
            let x = w.compose(t);
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Turns proptest output into a braid word on `n` strands.
pub fn braid_from(n: usize, raw: &[(usize, bool)]) -> BraidWord {
    BraidWord::new(
        raw.iter()
            .map(|&(i, inverse)| BraidLetter { strand: i % (n - 1), inverse })
            .collect(),
    )
}

pub fn exec_modes() -> [Exec; 2] {
    [Exec::Sequential, Exec::Parallel]
}

/// Random walks in infinite types stay short: root heights can grow
/// doubly exponentially under Hurwitz moves.
pub fn walk_limit(o: &Orientation, raw: &[(usize, bool)]) -> usize {
    if o.group().is_finite() {
        raw.len()
    } else {
        raw.len().min(4)
    }
}
