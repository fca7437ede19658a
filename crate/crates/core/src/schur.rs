//! Real Schur roots: certification, transversals, c-orbits, mutation and
//! the set-level comparison of prefix roots with roots of simple curves.

use std::collections::{BTreeMap, HashMap, HashSet};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::curves::{braid_move_curves, canonicalize, fan, root_of_curve, CurveWord, MutationSide};
use crate::error::{Error, Result};
use crate::hurwitz::{is_prefix_of_coxeter, BraidLetter, Factorization, PrefixRoutes};
use crate::orientation::Orientation;
use crate::verdict::{Certainty, Limits};
use crate::weyl::{AbsoluteLength, RootVector, WeylElement};
use crate::TypeClass;

/// Which certification routes to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchurMethod {
    /// Finite and rank-2 shortcuts, generic route otherwise.
    #[default]
    Auto,
    /// Always the prefix test with both routes.
    Generic,
}

/// A Schur verdict; `Yes` carries a factorization of c starting with r_β.
#[derive(Debug, Clone)]
pub struct SchurVerdict {
    pub answer: Certainty,
    pub certificate: Option<Factorization>,
}

impl SchurVerdict {
    /// Re-checks the certificate against β and c.
    pub fn validates(&self, beta: &RootVector, o: &Orientation) -> bool {
        match (&self.answer, &self.certificate) {
            (Certainty::Yes, Some(f)) => {
                f.len() == o.rank() && f.parts[0].root == beta.abs() && f.product() == *o.coxeter()
            }
            (Certainty::Yes, None) => false,
            _ => true,
        }
    }
}

/// Is β a real Schur root for the orientation? Decided on r_β, so β and
/// -β get the same answer.
pub fn is_schur_root(beta: &RootVector, o: &Orientation, limits: &Limits, method: SchurMethod) -> Result<SchurVerdict> {
    let group = o.group();
    let t = group.reflection_for_root(&beta.abs())?;
    let n = o.rank();
    if method == SchurMethod::Auto {
        if group.is_finite() {
            let rest = t.element.compose(o.coxeter());
            let cert = group.reflection_factorization(&rest, n);
            if let (AbsoluteLength::Exact(k), Some(factors)) = (cert.length, cert.factors) {
                if k + 1 == n {
                    let mut parts = vec![t];
                    parts.extend(factors);
                    return Ok(SchurVerdict { answer: Certainty::Yes, certificate: Some(Factorization::new(parts)) });
                }
            }
        } else if n == 2 {
            let second = t.element.compose(o.coxeter());
            if let Ok(r) = group.reflection_from_element(&second) {
                let certificate = Factorization::new(vec![t, r]);
                return Ok(SchurVerdict { answer: Certainty::Yes, certificate: Some(certificate) });
            }
        }
    }
    let report = is_prefix_of_coxeter(&t.element, o, limits, PrefixRoutes::default())?;
    if report.conflict {
        return Err(Error::Precondition(format!("prefix routes disagree on root {beta}")));
    }
    Ok(SchurVerdict { answer: report.verdict, certificate: report.certificate })
}

/// A transversal root with its defining curve word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalRoot {
    pub label: String,
    pub word: CurveWord,
    pub root: RootVector,
}

fn prefix_root(o: &Orientation, label: String, letters: Vec<usize>, end: usize) -> Result<TransversalRoot> {
    let word = canonicalize(&letters, end);
    let root = root_of_curve(&word, o.group())?;
    Ok(TransversalRoot { label, word, root })
}

/// β_k = s_{o_1} ··· s_{o_{k-1}} α_{o_k}, k = 1..n.
fn beta_roots(o: &Orientation) -> Result<Vec<TransversalRoot>> {
    let ord = o.order();
    (0..ord.len())
        .map(|k| prefix_root(o, format!("beta_{}", k + 1), ord[..k].to_vec(), ord[k]))
        .collect()
}

/// The n roots β_k, one per c-orbit.
pub fn schur_transversal_finite(o: &Orientation) -> Result<Vec<TransversalRoot>> {
    if !o.group().is_finite() {
        return Err(Error::WrongType { expected: "finite" });
    }
    beta_roots(o)
}

/// The 2n roots β_k and δ_k = s_{o_n} ··· s_{o_{k+1}} α_{o_k}.
pub fn schur_transversal_affine(o: &Orientation) -> Result<Vec<TransversalRoot>> {
    if o.group().type_class() != TypeClass::Affine {
        return Err(Error::WrongType { expected: "affine" });
    }
    let ord = o.order();
    let mut out = beta_roots(o)?;
    for k in 0..ord.len() {
        let letters: Vec<usize> = ord[k + 1..].iter().rev().copied().collect();
        out.push(prefix_root(o, format!("delta_{}", k + 1), letters, ord[k])?);
    }
    Ok(out)
}

/// A c-orbit, possibly truncated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct COrbit {
    /// (k, c^k β), ascending in k, without repeats.
    pub roots: Vec<(i64, RootVector)>,
    /// A cycle was found, so the orbit is complete.
    pub closed: bool,
}

impl COrbit {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &RootVector) -> bool {
        self.roots.iter().any(|(_, r)| r == root)
    }

    pub fn root_set(&self) -> HashSet<RootVector> {
        self.roots.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// c^k β for |k| ≤ step_bound, stopping early when the orbit closes.
pub fn c_orbit(beta: &RootVector, o: &Orientation, step_bound: u64) -> Result<COrbit> {
    let group = o.group();
    if !group.is_real_root(beta) {
        return Err(Error::NotRealRoot(beta.to_string()));
    }
    let c = o.coxeter();
    let mut forward = vec![(0, beta.clone())];
    let mut cur = beta.clone();
    for k in 1..=step_bound as i64 {
        cur = c.apply(&cur);
        if cur == *beta {
            return Ok(COrbit { roots: forward, closed: true });
        }
        forward.push((k, cur.clone()));
    }
    let c_inv = c.inverse();
    let mut backward = Vec::new();
    let mut cur = beta.clone();
    for k in 1..=step_bound as i64 {
        cur = c_inv.apply(&cur);
        backward.push((-k, cur.clone()));
    }
    backward.reverse();
    backward.extend(forward);
    Ok(COrbit { roots: backward, closed: false })
}

/// Partition of all roots of a finite type into c-orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub coxeter_number: u64,
    pub orbits: Vec<Vec<RootVector>>,
    /// Index of the orbit holding each β_k.
    pub representative_orbit: Vec<usize>,
}

impl Census {
    /// n orbits of size h, with the β_k in distinct orbits.
    pub fn is_as_predicted(&self, n: usize) -> bool {
        let distinct: HashSet<usize> = self.representative_orbit.iter().copied().collect();
        self.orbits.len() == n
            && self.orbits.iter().all(|o| o.len() as u64 == self.coxeter_number)
            && distinct.len() == n
    }
}

/// Splits every root (both signs) into c-orbits.
pub fn c_orbit_census_finite(o: &Orientation) -> Result<Census> {
    let group = o.group();
    if !group.is_finite() {
        return Err(Error::WrongType { expected: "finite" });
    }
    let h = group.cartan().coxeter_number()?;
    let c = o.coxeter();
    let mut orbit_of: HashMap<RootVector, usize> = HashMap::new();
    let mut orbits: Vec<Vec<RootVector>> = Vec::new();
    for root in group.enumerate_real_roots(i64::MAX) {
        if orbit_of.contains_key(&root) {
            continue;
        }
        let idx = orbits.len();
        let mut orbit = Vec::new();
        let mut cur = root.clone();
        loop {
            orbit_of.insert(cur.clone(), idx);
            orbit.push(cur.clone());
            cur = c.apply(&cur);
            if cur == root {
                break;
            }
        }
        orbits.push(orbit);
    }
    let representative_orbit = schur_transversal_finite(o)?
        .iter()
        .map(|t| orbit_of[&t.root])
        .collect();
    Ok(Census { coxeter_number: h, orbits, representative_orbit })
}

/// Checks the rank-2 orbit formulas for σ_1^{±m} on the canonical pair and
/// the two conjugation identities, for exponents up to `range`.
pub fn rank2_closed_forms_check(o: &Orientation, range: u32) -> Result<bool> {
    if o.rank() != 2 {
        return Err(Error::WrongType { expected: "rank 2" });
    }
    let g = o.group();
    let (a, b) = (o.order()[0], o.order()[1]);
    let s1 = g.simple_element(a)?.clone();
    let s2 = g.simple_element(b)?.clone();
    let c = o.coxeter().clone();
    let conj = |k: i64, x: &WeylElement| c.pow(k).compose(x).compose(&c.pow(-k));
    let s121 = s1.compose(&s2).compose(&s1);
    let s212 = s2.compose(&s1).compose(&s2);
    if s121 != conj(1, &s2) || s212 != conj(-1, &s1) {
        return Ok(false);
    }
    let start = Factorization::canonical(o);
    let elements = |f: &Factorization| -> Vec<WeylElement> { f.parts.iter().map(|r| r.element.clone()).collect() };
    let power = |m: i64| -> Result<Vec<WeylElement>> {
        let letter = if m >= 0 { BraidLetter::sigma(0) } else { BraidLetter::sigma_inv(0) };
        let word = crate::hurwitz::BraidWord::new(vec![letter; m.unsigned_abs() as usize]);
        Ok(elements(&start.apply_braid_word(&word)?))
    };
    let range = i64::from(range);
    for h in -range..=range {
        if power(2 * h)? != vec![conj(h, &s1), conj(h, &s2)] {
            return Ok(false);
        }
    }
    for k in 0..=range {
        if power(2 * k + 1)? != vec![conj(k, &s121), conj(k, &s1)] {
            return Ok(false);
        }
        if power(-(2 * k + 1))? != vec![conj(-k, &s2), conj(-k, &s212)] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Source mutation rotates the order left; sink mutation rotates it right.
pub fn mutate(o: &Orientation, side: MutationSide) -> Orientation {
    let mut order = o.order().to_vec();
    match side {
        MutationSide::Source => order.rotate_left(1),
        MutationSide::Sink => order.rotate_right(1),
    }
    o.reordered(order).expect("rotation of a permutation")
}

/// s(c) or t(c) as a group element.
pub fn mutation_reflection(o: &Orientation, side: MutationSide) -> &WeylElement {
    let i = match side {
        MutationSide::Source => o.source(),
        MutationSide::Sink => o.sink(),
    };
    o.group().simple_element(i).expect("order index in range")
}

/// Schur verdicts of β in Q and of the mutated root in the mutated
/// orientation.
#[derive(Debug, Clone)]
pub struct MutationCheck {
    pub root: RootVector,
    pub mutated_root: RootVector,
    pub before: Certainty,
    pub after: Certainty,
}

impl MutationCheck {
    /// Yes if both sides agree, No if they contradict, Unknown otherwise.
    pub fn agreement(&self) -> Certainty {
        if self.before.is_definite() && self.after.is_definite() {
            Certainty::from_bool(self.before == self.after)
        } else {
            Certainty::Unknown
        }
    }
}

pub fn mutation_equivalence_check(
    beta: &RootVector,
    o: &Orientation,
    side: MutationSide,
    limits: &Limits,
    method: SchurMethod,
) -> Result<MutationCheck> {
    let before = is_schur_root(beta, o, limits, method)?.answer;
    let mutated_root = mutation_reflection(o, side).apply(beta);
    let after = is_schur_root(&mutated_root, &mutate(o, side), limits, method)?.answer;
    Ok(MutationCheck { root: beta.clone(), mutated_root, before, after })
}

/// A root missing from one side of the comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Straggler {
    pub root: RootVector,
    pub reason: String,
}

/// Positive roots up to a height bound, compared across the prefix test
/// (P), curves harvested from the braid orbit of the fan (S) and, for
/// finite types, all positive roots (F).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub height_bound: i64,
    pub sets: RootSets,
    pub prefix_equals_curves: bool,
    pub prefix_equals_all: Option<bool>,
    pub unknowns: Vec<Straggler>,
    /// The curve harvest hit the node cap.
    pub truncated: bool,
    /// The curve harvest dropped tuples above the pruning height; roots of
    /// P it missed are reported as unknowns.
    pub pruned: bool,
    pub tuples_visited: usize,
    /// One curve word per root of S.
    pub curve_words: BTreeMap<String, CurveWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSets {
    pub prefix: Vec<RootVector>,
    pub curves: Vec<RootVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_positive: Option<Vec<RootVector>>,
}

impl ConjectureReport {
    /// Every computed set agrees and nothing is left undecided.
    pub fn holds(&self) -> bool {
        self.prefix_equals_curves && self.prefix_equals_all.unwrap_or(true) && self.unknowns.is_empty()
    }
}

/// Result of harvesting curves from the braid orbit of the fan.
#[derive(Debug, Clone)]
pub struct CurveHarvest {
    /// Positive root to the first curve word found for it.
    pub curves: IndexMap<RootVector, CurveWord>,
    /// The node cap stopped the search.
    pub truncated: bool,
    /// Some tuple exceeded the pruning height.
    pub pruned: bool,
    pub visited: usize,
}

/// Breadth-first braid orbit of the fan, tracked as curve tuples and
/// deduplicated by the factorization they present. Infinite types drop
/// tuples with a root above `prune_height`.
pub fn harvest_curves(o: &Orientation, prune_height: Option<i64>, limits: &Limits) -> Result<CurveHarvest> {
    let group = o.group();
    let n = o.rank();
    let start: Vec<CurveWord> = o.order().iter().map(|&i| fan(n)[i].clone()).collect();
    let start_f = Factorization::canonical(o);
    let mut seen: HashSet<Factorization> = HashSet::new();
    seen.insert(start_f.clone());
    let mut curves: IndexMap<RootVector, CurveWord> = IndexMap::new();
    let record = |tuple: &[CurveWord], f: &Factorization, curves: &mut IndexMap<RootVector, CurveWord>| {
        for (cw, r) in tuple.iter().zip(&f.parts) {
            curves.entry(r.root.clone()).or_insert_with(|| cw.clone());
        }
    };
    record(&start, &start_f, &mut curves);
    let mut frontier = vec![(start, start_f)];
    let mut truncated = false;
    let mut pruned = false;
    let letters: Vec<BraidLetter> = (0..n.saturating_sub(1))
        .flat_map(|i| [BraidLetter::sigma(i), BraidLetter::sigma_inv(i)])
        .collect();
    'search: while !frontier.is_empty() {
        let expanded = limits.exec.map(&frontier, |(tuple, f)| {
            letters
                .iter()
                .map(|&l| {
                    let t = braid_move_curves(tuple, l).expect("strand in range");
                    let g = f.braid_move(l).expect("strand in range");
                    (t, g)
                })
                .collect::<Vec<_>>()
        });
        let mut next = Vec::new();
        for (tuple, f) in expanded.into_iter().flatten() {
            if prune_height.is_some_and(|h| f.max_height() > h) {
                pruned = true;
                continue;
            }
            if seen.contains(&f) {
                continue;
            }
            if seen.len() >= limits.orbit_cap {
                truncated = true;
                break 'search;
            }
            debug_assert!(tuple
                .iter()
                .zip(&f.parts)
                .all(|(cw, r)| root_of_curve(cw, group).map(|x| x.abs() == r.root).unwrap_or(false)));
            seen.insert(f.clone());
            record(&tuple, &f, &mut curves);
            next.push((tuple, f));
        }
        frontier = next;
    }
    Ok(CurveHarvest { curves, truncated, pruned, visited: seen.len() })
}

/// Computes P, S and (finite types) F up to `height_bound`.
pub fn verify_conjecture(o: &Orientation, height_bound: i64, limits: &Limits) -> Result<ConjectureReport> {
    let group = o.group();
    let candidates: Vec<RootVector> = group
        .positive_real_roots(height_bound)
        .into_iter()
        .filter(|r| r.height() <= height_bound)
        .collect();

    let verdicts = limits.exec.map(&candidates, |beta| {
        is_schur_root(beta, o, &Limits { exec: crate::Exec::Sequential, ..*limits }, SchurMethod::Generic)
    });
    let mut prefix = Vec::new();
    let mut unknowns = Vec::new();
    for (beta, v) in candidates.iter().zip(verdicts) {
        let v = v?;
        if !v.validates(beta, o) {
            return Err(Error::Precondition(format!("certificate for {beta} failed to re-validate")));
        }
        match v.answer {
            Certainty::Yes => prefix.push(beta.clone()),
            Certainty::No => {}
            Certainty::Unknown => unknowns.push(Straggler { root: beta.clone(), reason: "prefix test undecided".into() }),
        }
    }

    let prune = (!group.is_finite()).then(|| limits.prune_multiple * height_bound);
    let harvest = harvest_curves(o, prune, limits)?;
    let mut curves: Vec<RootVector> = harvest.curves.keys().filter(|r| r.height() <= height_bound).cloned().collect();
    curves.sort_by_key(RootVector::order_key);
    let curve_words = curves
        .iter()
        .map(|r| (r.to_string(), harvest.curves[r].clone()))
        .collect();

    let p: HashSet<&RootVector> = prefix.iter().collect();
    let s: HashSet<&RootVector> = curves.iter().collect();
    if harvest.truncated || harvest.pruned {
        for r in prefix.iter().filter(|r| !s.contains(r)) {
            unknowns.push(Straggler { root: r.clone(), reason: "no curve found within the harvest bound".into() });
        }
    }
    let all_positive = group.is_finite().then(|| candidates.clone());
    let prefix_equals_all = all_positive.as_ref().map(|f| f.iter().collect::<HashSet<_>>() == p);
    unknowns.sort_by_key(|u| u.root.order_key());
    Ok(ConjectureReport {
        height_bound,
        prefix_equals_curves: p == s,
        prefix_equals_all,
        sets: RootSets { prefix, curves, all_positive },
        unknowns,
        truncated: harvest.truncated,
        pruned: harvest.pruned,
        tuples_visited: harvest.visited,
        curve_words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::preset;

    fn orient(name: &str) -> Orientation {
        Orientation::standard(preset(name).unwrap())
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn schur_examples() {
        let limits = Limits::default();
        for method in [SchurMethod::Auto, SchurMethod::Generic] {
            let o = orient("A3");
            let v = is_schur_root(&rv(&[1, 1, 1]), &o, &limits, method).unwrap();
            assert_eq!(v.answer, Certainty::Yes);
            assert!(v.validates(&rv(&[1, 1, 1]), &o));
            let beta = o.group().apply_word(&[1, 2], &RootVector::simple(3, 1)).unwrap();
            assert_eq!(is_schur_root(&beta, &o, &limits, method).unwrap().answer, Certainty::Yes);
            let o = orient("universal:2:2");
            let v = is_schur_root(&rv(&[3, 2]), &o, &limits, method).unwrap();
            assert_eq!(v.answer, Certainty::Yes);
            assert!(v.validates(&rv(&[3, 2]), &o));
        }
        assert!(is_schur_root(&rv(&[1, 1]), &orient("universal:2:2"), &limits, SchurMethod::Auto).is_err());
    }

    #[test]
    fn non_schur_root_in_universal_rank_three() {
        let o = orient("universal:3:2");
        let beta = o.group().apply_word(&[1, 0], &RootVector::simple(3, 2)).unwrap();
        let v = is_schur_root(&beta, &o, &Limits::default(), SchurMethod::Generic).unwrap();
        assert_eq!(v.answer, Certainty::No);
    }

    #[test]
    fn transversals() {
        let t = schur_transversal_finite(&orient("A2")).unwrap();
        assert_eq!(t[0].root, rv(&[1, 0]));
        assert_eq!(t[1].root, rv(&[1, 1]));
        let t = schur_transversal_finite(&orient("A3")).unwrap();
        assert_eq!(t[2].root, rv(&[1, 1, 1]));
        assert!(schur_transversal_finite(&orient("affine-A2")).is_err());
        let o = orient("affine-A2");
        let t = schur_transversal_affine(&o).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t[5].root, rv(&[0, 0, 1]));
        let delta1 = o.group().apply_word(&[2, 1], &RootVector::simple(3, 0)).unwrap();
        assert_eq!(t[3].root, delta1);
        assert_eq!(t[3].label, "delta_1");
        let t = schur_transversal_affine(&orient("affine-A1")).unwrap();
        assert_eq!(t[1].root, rv(&[2, 1]));
    }

    #[test]
    fn orbits() {
        let o = orient("A2");
        let orb = c_orbit(&rv(&[1, 0]), &o, 10).unwrap();
        assert!(orb.closed);
        assert_eq!(orb.root_set(), [rv(&[1, 0]), rv(&[0, 1]), rv(&[-1, -1])].into_iter().collect());
        let o = orient("universal:2:2");
        let orb = c_orbit(&rv(&[1, 0]), &o, 3).unwrap();
        assert!(!orb.closed);
        assert_eq!(orb.len(), 7);
        let around: Vec<RootVector> = orb.roots[2..6].iter().map(|(_, r)| r.clone()).collect();
        assert_eq!(around, vec![rv(&[-1, -2]), rv(&[1, 0]), rv(&[3, 2]), rv(&[5, 4])]);
    }

    #[test]
    fn finite_census() {
        for (name, n, h) in [("A2", 2, 3), ("A3", 3, 4), ("B2", 2, 4), ("B3", 3, 6), ("D4", 4, 6)] {
            let c = c_orbit_census_finite(&orient(name)).unwrap();
            assert_eq!(c.coxeter_number, h);
            assert!(c.is_as_predicted(n), "{name}");
        }
    }

    #[test]
    fn rank2_forms() {
        assert!(rank2_closed_forms_check(&orient("A2"), 3).unwrap());
        assert!(rank2_closed_forms_check(&orient("G2"), 3).unwrap());
        assert!(rank2_closed_forms_check(&orient("universal:2:2"), 5).unwrap());
        let swapped = orient("B2").reordered(vec![1, 0]).unwrap();
        assert!(rank2_closed_forms_check(&swapped, 4).unwrap());
        assert!(rank2_closed_forms_check(&orient("A3"), 1).is_err());
    }

    #[test]
    fn mutations() {
        let o = orient("A3");
        let m = mutate(&o, MutationSide::Source);
        assert_eq!(m.order(), &[1, 2, 0]);
        let s = mutation_reflection(&o, MutationSide::Source);
        assert_eq!(*m.coxeter(), s.compose(o.coxeter()).compose(s));
        assert_eq!(mutate(&m, MutationSide::Sink).order(), o.order());
        let mut cycled = o.clone();
        for _ in 0..3 {
            cycled = mutate(&cycled, MutationSide::Source);
        }
        assert_eq!(cycled.order(), o.order());
        let limits = Limits::default();
        for beta in o.group().positive_real_roots(0) {
            let chk = mutation_equivalence_check(&beta, &o, MutationSide::Source, &limits, SchurMethod::Generic).unwrap();
            assert_eq!(chk.agreement(), Certainty::Yes);
        }
    }

    #[test]
    fn small_conjecture_reports() {
        let limits = Limits::default();
        let r = verify_conjecture(&orient("A2"), 10, &limits).unwrap();
        assert_eq!(r.sets.prefix, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]);
        assert!(r.holds());
        assert!(!r.truncated && !r.pruned);
        let r = verify_conjecture(&orient("A3"), 10, &limits).unwrap();
        assert_eq!(r.sets.prefix.len(), 6);
        assert!(r.holds());
        let r = verify_conjecture(&orient("universal:2:2"), 12, &limits).unwrap();
        let all = orient("universal:2:2").group().positive_real_roots(12);
        assert_eq!(r.sets.prefix, all);
        assert!(r.holds(), "{:?}", r.unknowns);
        assert!(r.pruned && !r.truncated);
    }
}
