//! The Hurwitz action of the braid group on reflection factorizations of
//! a Coxeter element.
//!
//! σ_i sends (.., g_i, g_{i+1}, ..) to (.., g_i g_{i+1} g_i⁻¹, g_i, ..) and
//! σ_i⁻¹ sends it to (.., g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1}, ..). A braid word
//! applies its letters left to right.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{IntMatrix, OVERFLOW};
use crate::orientation::Orientation;
use crate::verdict::{Certainty, Limits};
use crate::weyl::{AbsoluteLength, Reflection, RootVector, WeylElement, WeylGroup};

/// σ_{strand+1}, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// 0-based: the letter acts on slots `strand` and `strand + 1`.
    pub strand: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn sigma(strand: usize) -> Self {
        BraidLetter { strand, inverse: false }
    }

    pub fn sigma_inv(strand: usize) -> Self {
        BraidLetter { strand, inverse: true }
    }

    pub fn inverted(self) -> Self {
        BraidLetter { strand: self.strand, inverse: !self.inverse }
    }

    /// Signed 1-based form: +i for σ_i, -i for σ_i⁻¹.
    pub fn signed(self) -> i64 {
        let i = self.strand as i64 + 1;
        if self.inverse {
            -i
        } else {
            i
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord(pub Vec<BraidLetter>);

impl BraidWord {
    pub fn new(letters: Vec<BraidLetter>) -> Self {
        BraidWord(letters)
    }

    /// Builds a word from signed 1-based letters; zero is rejected.
    pub fn from_signed(letters: &[i64]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                if l == 0 {
                    Err(Error::Parse("braid letter 0 is not allowed".into()))
                } else {
                    Ok(BraidLetter { strand: l.unsigned_abs() as usize - 1, inverse: l < 0 })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(BraidWord)
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn then(&self, other: &BraidWord) -> BraidWord {
        BraidWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// k-fold repetition; negative k repeats the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        BraidWord(base.0.iter().copied().cycle().take(base.len() * k.unsigned_abs() as usize).collect())
    }

    /// σ_{hi} σ_{hi-1} ··· σ_{lo} (0-based strands, hi >= lo).
    pub fn descending(hi: usize, lo: usize) -> BraidWord {
        BraidWord((lo..=hi).rev().map(BraidLetter::sigma).collect())
    }

    pub fn check_strands(&self, n: usize) -> Result<()> {
        for l in &self.0 {
            if l.strand + 1 >= n {
                return Err(Error::IndexOutOfRange { index: l.strand + 1, rank: n.saturating_sub(1) });
            }
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.signed().to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{self}]")
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(BraidWord::default());
        }
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad braid letter '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_signed(&letters)
    }
}

/// An ordered tuple of reflections; equality and hashing go through the
/// roots.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub parts: Vec<Reflection>,
}

impl Factorization {
    pub fn new(parts: Vec<Reflection>) -> Self {
        Factorization { parts }
    }

    /// (s_{order[0]}, ..., s_{order[n-1]}).
    pub fn canonical(o: &Orientation) -> Self {
        let parts = o
            .order()
            .iter()
            .map(|&i| o.group().simple_reflection(i).expect("order indices are in range"))
            .collect();
        Factorization { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn roots(&self) -> Vec<RootVector> {
        self.parts.iter().map(|r| r.root.clone()).collect()
    }

    /// Left-to-right product of the parts.
    pub fn product(&self) -> WeylElement {
        let n = self.parts.first().map_or(0, |r| r.element.rank());
        self.parts
            .iter()
            .fold(WeylElement::identity(n), |acc, r| acc.compose(&r.element))
    }

    pub fn max_height(&self) -> i64 {
        self.parts.iter().map(|r| r.root.height()).max().unwrap_or(0)
    }

    pub fn position_of(&self, root: &RootVector) -> Option<usize> {
        self.parts.iter().position(|r| &r.root == root)
    }

    /// One Hurwitz move.
    pub fn braid_move(&self, letter: BraidLetter) -> Result<Factorization> {
        let n = self.parts.len();
        let i = letter.strand;
        if i + 1 >= n {
            return Err(Error::IndexOutOfRange { index: i + 1, rank: n.saturating_sub(1) });
        }
        let mut parts = self.parts.clone();
        let (a, b) = (&self.parts[i], &self.parts[i + 1]);
        if letter.inverse {
            parts[i] = b.clone();
            parts[i + 1] = conjugate_reflection(b, a);
        } else {
            parts[i] = conjugate_reflection(a, b);
            parts[i + 1] = a.clone();
        }
        Ok(Factorization { parts })
    }

    pub fn apply_braid_word(&self, word: &BraidWord) -> Result<Factorization> {
        word.check_strands(self.parts.len())?;
        let mut f = self.clone();
        for &l in word.letters() {
            f = f.braid_move(l)?;
        }
        Ok(f)
    }

    /// All 2(n-1) neighbours under single letters, in a fixed order.
    pub fn neighbours(&self) -> Vec<Factorization> {
        let n = self.parts.len();
        let mut out = Vec::with_capacity(2 * n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            for inverse in [false, true] {
                out.push(self.braid_move(BraidLetter { strand: i, inverse }).expect("in range"));
            }
        }
        out
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.parts.iter()).finish()
    }
}

/// g r_β g⁻¹ = r_{gβ} for a reflection g, built as id - gβ ⊗ (β^∨ g) so
/// that no product of two large matrices is formed.
fn conjugate_reflection(g: &Reflection, t: &Reflection) -> Reflection {
    let n = t.root.dim();
    let beta = t.root.coords();
    let k = beta.iter().position(|&x| x != 0).expect("roots are nonzero");
    let tm = t.element.matrix();
    // t - id = -β ⊗ β^∨, so row k of (id - t) is β_k β^∨
    let coroot: Vec<i64> = (0..n)
        .map(|j| (i64::from(j == k) - tm.get(k, j)) / beta[k])
        .collect();
    let gm = g.element.matrix();
    let moved_coroot: Vec<i64> = (0..n)
        .map(|j| {
            (0..n).fold(0i64, |acc, i| {
                acc.checked_add(coroot[i].checked_mul(gm.get(i, j)).expect(OVERFLOW)).expect(OVERFLOW)
            })
        })
        .collect();
    let gamma = g.element.apply(&t.root);
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let entry = gamma.coords()[i].checked_mul(moved_coroot[j]).expect(OVERFLOW);
            m.set(i, j, m.get(i, j).checked_sub(entry).expect(OVERFLOW));
        }
    }
    let element = WeylElement::from_matrix(m);
    Reflection { element, root: gamma.abs() }
}

/// Result of a breadth-first orbit search.
#[derive(Debug, Clone)]
pub struct Orbit {
    /// Tuples in breadth-first discovery order.
    pub factorizations: Vec<Factorization>,
    /// True iff the closure terminated with nothing pruned or capped.
    pub complete: bool,
    /// Some tuple exceeded the height bound and was not expanded.
    pub pruned: bool,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }
}

/// Bounds for orbit searches.
#[derive(Debug, Clone, Copy)]
pub struct OrbitBounds {
    pub node_cap: usize,
    /// Tuples whose largest root height exceeds this are dropped.
    pub max_height: Option<i64>,
    pub exec: Exec,
}

impl OrbitBounds {
    pub fn capped(node_cap: usize) -> Self {
        OrbitBounds { node_cap, max_height: None, exec: Exec::default() }
    }
}

/// Breadth-first closure of `start` under all σ_i^{±1}.
pub fn hurwitz_orbit(start: &Factorization, bounds: OrbitBounds) -> Orbit {
    orbit_search(start, bounds, |_| false).0
}

/// Breadth-first search that stops at the first tuple satisfying `goal`.
fn orbit_search<F>(start: &Factorization, bounds: OrbitBounds, goal: F) -> (Orbit, Option<Factorization>)
where
    F: Fn(&Factorization) -> bool,
{
    let product = start.product();
    let within = |f: &Factorization| bounds.max_height.is_none_or(|h| f.max_height() <= h);
    let mut seen: IndexSet<Factorization> = IndexSet::new();
    seen.insert(start.clone());
    if goal(start) {
        return (Orbit { factorizations: vec![start.clone()], complete: false, pruned: false }, Some(start.clone()));
    }
    let mut frontier = vec![start.clone()];
    let mut pruned = false;
    let mut capped = false;
    'search: while !frontier.is_empty() {
        let expanded = bounds.exec.map(&frontier, Factorization::neighbours);
        let mut next = Vec::new();
        for f in expanded.into_iter().flatten() {
            if !within(&f) {
                pruned = true;
                continue;
            }
            if seen.contains(&f) {
                continue;
            }
            debug_assert_eq!(f.product(), product, "Hurwitz moves preserve the product");
            if seen.len() >= bounds.node_cap {
                capped = true;
                break 'search;
            }
            seen.insert(f.clone());
            if goal(&f) {
                let found = f.clone();
                let orbit = Orbit { factorizations: seen.into_iter().collect(), complete: false, pruned };
                return (orbit, Some(found));
            }
            next.push(f);
        }
        frontier = next;
    }
    let orbit = Orbit { factorizations: seen.into_iter().collect(), complete: !capped && !pruned, pruned };
    (orbit, None)
}

/// n! hⁿ / |G| for a finite type, with exact division checked.
pub fn factorization_count_formula(group: &WeylGroup, exec: Exec) -> Result<u128> {
    let h = u128::from(group.cartan().coxeter_number()?);
    let n = group.rank() as u32;
    let order = group.group_order(exec)?;
    let factorial: u128 = (1..=u128::from(n)).product();
    let num = factorial * h.pow(n);
    if !num.is_multiple_of(order) {
        return Err(Error::InexactDivision { num, den: order });
    }
    Ok(num / order)
}

/// Braid word moving slot `j` to the front (σ_j⁻¹ ··· σ_1⁻¹ read left to
/// right, 1-based).
pub fn move_to_front(j: usize) -> BraidWord {
    BraidWord((0..j).rev().map(BraidLetter::sigma_inv).collect())
}

/// How the Hurwitz route of the prefix test ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found,
    /// The full (finite) orbit was exhausted: a definite no.
    Exhausted,
    /// Every tuple below the height bound was visited without success.
    ExhaustedWithinBound,
    /// The node cap stopped the search.
    CapReached,
    Skipped,
}

/// Outcome of the prefix test with both routes recorded.
#[derive(Debug, Clone)]
pub struct PrefixReport {
    pub verdict: Certainty,
    /// Absolute-order route: l(t c) = n - 1.
    pub length_route: Certainty,
    pub orbit_route: SearchOutcome,
    /// A factorization of c whose first part is the queried reflection.
    pub certificate: Option<Factorization>,
    /// The two routes gave contradictory definite answers.
    pub conflict: bool,
}

/// Which routes the prefix test runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixRoutes {
    pub length: bool,
    pub orbit: bool,
}

impl Default for PrefixRoutes {
    fn default() -> Self {
        PrefixRoutes { length: true, orbit: true }
    }
}

/// Is `t` the first factor of some length-n reflection factorization of c?
pub fn is_prefix_of_coxeter(t: &WeylElement, o: &Orientation, limits: &Limits, routes: PrefixRoutes) -> Result<PrefixReport> {
    let group = o.group();
    let t = group.reflection_from_element(t)?;
    let n = o.rank();
    let c = o.coxeter();

    let mut length_route = Certainty::Unknown;
    let mut certificate = None;
    if routes.length {
        let rest = t.element.compose(c);
        let cap = limits.length_cap_for(n);
        if group.is_finite() || group.cartan().is_universal() {
            let cert = group.reflection_factorization(&rest, cap);
            match cert.length {
                AbsoluteLength::Exact(k) if k + 1 == n => {
                    length_route = Certainty::Yes;
                    let mut parts = vec![t.clone()];
                    parts.extend(cert.factors.expect("exact lengths carry factors"));
                    certificate = Some(Factorization::new(parts));
                }
                AbsoluteLength::Exact(_) => length_route = Certainty::No,
                AbsoluteLength::Unknown => {}
            }
        } else if group.length_lower_bound(&rest) + 1 > n {
            length_route = Certainty::No;
        } else if let Some(factors) = group.factor_into(&rest, n - 1) {
            length_route = Certainty::Yes;
            let mut parts = vec![t.clone()];
            parts.extend(factors);
            certificate = Some(Factorization::new(parts));
        }
    }

    let mut orbit_route = SearchOutcome::Skipped;
    if routes.orbit {
        let bounds = OrbitBounds {
            node_cap: limits.orbit_cap,
            max_height: (!group.is_finite()).then(|| limits.prune_multiple * t.root.height().max(1)),
            exec: limits.exec,
        };
        let start = Factorization::canonical(o);
        let (orbit, found) = orbit_search(&start, bounds, |f| f.position_of(&t.root).is_some());
        orbit_route = match found {
            Some(f) => {
                let j = f.position_of(&t.root).expect("goal tuple contains the root");
                let moved = f.apply_braid_word(&move_to_front(j))?;
                debug_assert_eq!(moved.parts[0].root, t.root);
                if certificate.is_none() {
                    certificate = Some(moved);
                }
                SearchOutcome::Found
            }
            None if orbit.complete => SearchOutcome::Exhausted,
            None if orbit.pruned && orbit.len() < limits.orbit_cap => SearchOutcome::ExhaustedWithinBound,
            None => SearchOutcome::CapReached,
        };
    }

    let orbit_certainty = match orbit_route {
        SearchOutcome::Found => Certainty::Yes,
        SearchOutcome::Exhausted => Certainty::No,
        _ => Certainty::Unknown,
    };
    let conflict = length_route.is_definite() && orbit_certainty.is_definite() && length_route != orbit_certainty;
    let verdict = if length_route == Certainty::Yes || orbit_certainty == Certainty::Yes {
        Certainty::Yes
    } else if length_route == Certainty::No || orbit_certainty == Certainty::No {
        Certainty::No
    } else {
        Certainty::Unknown
    };
    if let Some(cert) = &certificate {
        if cert.product() != *c || cert.len() != n || cert.parts[0].root != t.root {
            return Err(Error::Precondition("prefix certificate failed to re-validate".into()));
        }
    }
    Ok(PrefixReport { verdict, length_route, orbit_route, certificate, conflict })
}

/// Does `word` fix the canonical factorization?
pub fn stabilizer_check(word: &BraidWord, o: &Orientation) -> Result<bool> {
    let start = Factorization::canonical(o);
    Ok(start.apply_braid_word(word)? == start)
}

/// (σ_{n-1} ··· σ_1)^{nk} sends the canonical tuple to its conjugate by c^k.
pub fn full_twist_identity_check(o: &Orientation, k: i64) -> bool {
    let n = o.rank();
    let start = Factorization::canonical(o);
    if n < 2 {
        return true;
    }
    let word = BraidWord::descending(n - 2, 0).pow(n as i64 * k);
    let twisted = start.apply_braid_word(&word).expect("strands in range");
    let ck = o.coxeter().pow(k);
    let ck_inv = ck.inverse();
    twisted
        .parts
        .iter()
        .zip(&start.parts)
        .all(|(a, s)| a.element == ck.compose(&s.element).compose(&ck_inv))
}

/// A stabilizer element predicted from a subdiagram, with its provenance.
#[derive(Debug, Clone)]
pub struct StabilizerWord {
    pub label: String,
    pub word: BraidWord,
}

/// Stabilizer elements built from the slots of the canonical tuple:
/// σ_i^{m} for adjacent slots with finite m, and
/// (σ_{j-1} ··· σ_i)^{(j-i+1) h_ij} for every slot range i < j whose
/// Coxeter element c_ij has finite order h_ij. Ranges with infinite order
/// are returned as diagnostics instead.
pub fn lemma_stabilizer_words(o: &Orientation) -> (Vec<StabilizerWord>, Vec<String>) {
    let n = o.rank();
    let group = o.group();
    let mut words = Vec::new();
    let mut skipped = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let (a, b) = (o.order()[i], o.order()[i + 1]);
        if let Ok(crate::CoxeterExponent::Finite(m)) = group.cartan().coxeter_exponent(a, b) {
            words.push(StabilizerWord {
                label: format!("sigma_{}^{}", i + 1, m),
                word: BraidWord(vec![BraidLetter::sigma(i)]).pow(i64::from(m)),
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let vertices = &o.order()[i..=j];
            match sub_coxeter_order(group, vertices) {
                Some(h) => {
                    let exp = (j - i + 1) as i64 * h as i64;
                    let label = if j == i + 1 {
                        format!("sigma_{}^{}", j, exp)
                    } else {
                        format!("(sigma_{}..sigma_{})^{}", j, i + 1, exp)
                    };
                    words.push(StabilizerWord {
                        label,
                        word: BraidWord::descending(j - 1, i).pow(exp),
                    });
                }
                None => skipped.push(format!("slots {}..{}: subdiagram is not of finite type", i + 1, j + 1)),
            }
        }
    }
    (words, skipped)
}

/// Order of s_{v_1} ··· s_{v_k} when the vertices span a finite-type
/// (possibly disconnected) subdiagram.
pub fn sub_coxeter_order(group: &WeylGroup, vertices: &[usize]) -> Option<u64> {
    let s = group.cartan().symmetrized();
    let positive_definite = (1..=vertices.len()).all(|k| s.principal_minor(&vertices[..k]) > 0);
    if !positive_definite {
        return None;
    }
    let c = group.word_element(vertices).ok()?;
    let mut power = c.clone();
    let mut h = 1;
    while !power.is_identity() {
        power = power.compose(&c);
        h += 1;
    }
    Some(h)
}

/// Searches for τ in the predicted stabilizer and a word σ with
/// σ τ σ⁻¹ outside it, σ ranging over generator words of length up to
/// `depth`. The conjugate is read as a left action, so σ⁻¹ is applied
/// first. `None` means nothing was found within the search.
pub fn normality_probe(o: &Orientation, depth: usize) -> Result<Option<(BraidWord, BraidWord)>> {
    let n = o.rank();
    let (taus, _) = lemma_stabilizer_words(o);
    let letters: Vec<BraidLetter> = (0..n.saturating_sub(1))
        .flat_map(|i| [BraidLetter::sigma(i), BraidLetter::sigma_inv(i)])
        .collect();
    let mut sigmas: Vec<BraidWord> = vec![];
    let mut layer: Vec<BraidWord> = vec![BraidWord::default()];
    for _ in 0..depth {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().filter_map(move |&l| {
                    if w.0.last() == Some(&l.inverted()) {
                        return None;
                    }
                    let mut next = w.clone();
                    next.0.push(l);
                    Some(next)
                })
            })
            .collect();
        sigmas.extend(layer.iter().cloned());
    }
    for tau in &taus {
        if !stabilizer_check(&tau.word, o)? {
            continue;
        }
        for sigma in &sigmas {
            let conj = sigma.inverse().then(&tau.word).then(sigma);
            if !stabilizer_check(&conj, o)? {
                return Ok(Some((tau.word.clone(), sigma.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::preset;

    fn orient(name: &str) -> Orientation {
        Orientation::standard(preset(name).unwrap())
    }

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn single_move_formula() {
        let o = orient("A2");
        let g = o.group();
        let f = Factorization::canonical(&o);
        let moved = f.braid_move(BraidLetter::sigma(0)).unwrap();
        assert_eq!(moved.parts[0].element, g.word_element(&[0, 1, 0]).unwrap());
        assert_eq!(moved.parts[1].element, g.word_element(&[0]).unwrap());
        assert_eq!(moved.parts[0].root, g.root_of_reflection(&moved.parts[0].element).unwrap());
        let back = moved.braid_move(BraidLetter::sigma_inv(0)).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.apply_braid_word(&word("1,1,1")).unwrap(), f);
        assert!(f.braid_move(BraidLetter::sigma(1)).is_err());
        assert!(f.apply_braid_word(&word("2")).is_err());
    }

    #[test]
    fn braid_relations_on_a4() {
        let o = orient("A4");
        let f = Factorization::canonical(&o);
        assert_eq!(f.apply_braid_word(&BraidWord::default()).unwrap(), f);
        assert_eq!(f.apply_braid_word(&word("1,2,1")).unwrap(), f.apply_braid_word(&word("2,1,2")).unwrap());
        assert_eq!(f.apply_braid_word(&word("2,3,2")).unwrap(), f.apply_braid_word(&word("3,2,3")).unwrap());
        assert_eq!(f.apply_braid_word(&word("1,3")).unwrap(), f.apply_braid_word(&word("3,1")).unwrap());
        assert_eq!(f.apply_braid_word(&word("-1,3")).unwrap(), f.apply_braid_word(&word("3,-1")).unwrap());
    }

    #[test]
    fn word_parsing() {
        assert_eq!(word("1,-2,1").to_string(), "1,-2,1");
        assert!("1,0".parse::<BraidWord>().is_err());
        assert!("1,x".parse::<BraidWord>().is_err());
        assert!(word("").is_empty());
        assert_eq!(word("1,-2").inverse(), word("2,-1"));
        assert_eq!(word("2,1").pow(2), word("2,1,2,1"));
        assert_eq!(word("2,1").pow(-1), word("-1,-2"));
    }

    #[test]
    fn small_orbits() {
        for (name, size) in [("A2", 3), ("G2", 6), ("A3", 16)] {
            let o = orient(name);
            let orbit = hurwitz_orbit(&Factorization::canonical(&o), OrbitBounds::capped(1_000_000));
            assert!(orbit.complete);
            assert_eq!(orbit.len(), size, "{name}");
        }
        let o = orient("universal:3:2");
        let orbit = hurwitz_orbit(&Factorization::canonical(&o), OrbitBounds::capped(50));
        assert!(!orbit.complete);
        assert_eq!(orbit.len(), 50);
    }

    #[test]
    fn count_formula_matches_table() {
        for (name, count) in [("B3", 27), ("D4", 162), ("F4", 432), ("A2", 3), ("G2", 6)] {
            let g = WeylGroup::new(preset(name).unwrap());
            assert_eq!(factorization_count_formula(&g, Exec::default()).unwrap(), count, "{name}");
        }
        let affine = WeylGroup::new(preset("affine-A2").unwrap());
        assert!(factorization_count_formula(&affine, Exec::default()).is_err());
    }

    #[test]
    fn prefix_examples() {
        let limits = Limits::default();
        for name in ["A2", "B3", "affine-A2", "universal:3:2"] {
            let o = orient(name);
            let s1 = o.group().simple_element(0).unwrap().clone();
            let r = is_prefix_of_coxeter(&s1, &o, &limits, PrefixRoutes::default()).unwrap();
            assert_eq!(r.verdict, Certainty::Yes, "{name}");
            assert!(!r.conflict);
        }
        let o = orient("A3");
        let t = o.group().word_element(&[1, 2, 1]).unwrap();
        let r = is_prefix_of_coxeter(&t, &o, &limits, PrefixRoutes::default()).unwrap();
        assert_eq!(r.verdict, Certainty::Yes);
        assert_eq!(r.orbit_route, SearchOutcome::Found);
        let o = orient("universal:2:2");
        let t = o.group().word_element(&[0, 1, 0]).unwrap();
        let r = is_prefix_of_coxeter(&t, &o, &limits, PrefixRoutes::default()).unwrap();
        assert_eq!(r.verdict, Certainty::Yes);
        assert_eq!(r.length_route, Certainty::Yes);
        let s1s2 = o.group().word_element(&[0, 1]).unwrap();
        assert_eq!(
            is_prefix_of_coxeter(&s1s2, &o, &limits, PrefixRoutes::default()).unwrap_err(),
            Error::NotReflection
        );
    }

    #[test]
    fn named_stabilizers() {
        assert!(stabilizer_check(&word("1,1,1"), &orient("A2")).unwrap());
        assert!(!stabilizer_check(&word("1,1"), &orient("A2")).unwrap());
        assert!(stabilizer_check(&word("1").pow(6), &orient("G2")).unwrap());
        assert!(!stabilizer_check(&word("1").pow(3), &orient("G2")).unwrap());
        assert!(stabilizer_check(&word("2,1").pow(12), &orient("A3")).unwrap());
    }

    #[test]
    fn full_twist() {
        let a3 = orient("A3");
        assert!(full_twist_identity_check(&a3, 1));
        assert!(full_twist_identity_check(&a3, 0));
        assert!(full_twist_identity_check(&orient("universal:3:2"), -1));
    }

    #[test]
    fn normality() {
        let (tau, sigma) = normality_probe(&orient("A3"), 1).unwrap().unwrap();
        assert_eq!(tau, word("1,1,1"));
        assert_eq!(sigma, word("2"));
        assert!(normality_probe(&orient("A2"), 3).unwrap().is_none());
        assert!(normality_probe(&orient("B3"), 2).unwrap().is_some());
    }
}
