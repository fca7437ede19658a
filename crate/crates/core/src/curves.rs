//! Curves and loops in the punctured disc, modelled as words in the ray
//! crossings. Letters are 0-based simple indices; text forms are 1-based.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::preset;
use crate::error::{Error, Result};
use crate::hurwitz::{is_prefix_of_coxeter, BraidLetter, Factorization, PrefixRoutes, SearchOutcome};
use crate::orientation::Orientation;
use crate::verdict::{Certainty, Limits};
use crate::weyl::{Reflection, RootVector, WeylGroup};

/// A curve from the basepoint to puncture `end`, with the sign of the root
/// it presents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CurveWord {
    letters: Vec<usize>,
    end: usize,
    negative: bool,
}

/// A freely reduced loop word.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LoopWord(pub Vec<usize>);

fn free_reduce(letters: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for l in letters {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Freely reduces, then strips trailing endpoint letters, flipping the
/// sign once per stripped letter.
pub fn canonicalize(raw: &[usize], end: usize) -> CurveWord {
    let mut letters = free_reduce(raw.iter().copied());
    let mut negative = false;
    while letters.last() == Some(&end) {
        letters.pop();
        negative = !negative;
    }
    CurveWord { letters, end, negative }
}

impl CurveWord {
    /// Fan curve straight to puncture `end`.
    pub fn straight(end: usize) -> Self {
        CurveWord { letters: Vec::new(), end, negative: false }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn negated(&self) -> Self {
        CurveWord { negative: !self.negative, ..self.clone() }
    }

    pub fn is_canonical(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1]) && self.letters.last() != Some(&self.end)
    }

    /// Largest index used, for range checks.
    pub fn max_index(&self) -> usize {
        self.letters.iter().copied().chain([self.end]).max().unwrap_or(0)
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        let m = self.max_index();
        if m >= n {
            return Err(Error::IndexOutOfRange { index: m + 1, rank: n });
        }
        Ok(())
    }

    /// Prepends letters and re-canonicalizes, carrying the sign.
    pub fn prepend(&self, prefix: &[usize]) -> CurveWord {
        let raw: Vec<usize> = prefix.iter().chain(&self.letters).copied().collect();
        let mut out = canonicalize(&raw, self.end);
        out.negative ^= self.negative;
        out
    }

    /// Text form such as `2,3|3` or `-2|3` (1-based).
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Root expression such as `s_2s_3α_2` or `-α_1`.
    pub fn root_expression(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        let word: String = self.letters.iter().map(|l| format!("s_{}", l + 1)).collect();
        format!("{sign}{word}α_{}", self.end + 1)
    }
}

impl fmt::Display for CurveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(|l| (l + 1).to_string()).collect();
        let sign = if self.negative { "-" } else { "" };
        write!(f, "{sign}{}|{}", letters.join(","), self.end + 1)
    }
}

impl fmt::Debug for CurveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CurveWord({self})")
    }
}

/// Parses a comma-separated list of 1-based indices into 0-based letters.
pub fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::Parse(format!("bad index '{t}'"))),
        })
        .collect()
}

impl FromStr for CurveWord {
    type Err = Error;

    /// Accepts the `letters|end` form, optionally prefixed by `-`; the
    /// result is canonicalized.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (letters, end) = body
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("curve '{s}' needs the form letters|end")))?;
        let end = parse_letters(end)?;
        let [end] = end[..] else {
            return Err(Error::Parse(format!("curve '{s}' needs exactly one endpoint")));
        };
        let mut cw = canonicalize(&parse_letters(letters)?, end);
        cw.negative ^= negative;
        Ok(cw)
    }
}

impl From<CurveWord> for String {
    fn from(cw: CurveWord) -> String {
        cw.to_string()
    }
}

impl TryFrom<String> for CurveWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        let cw: CurveWord = s.parse()?;
        if cw.to_string() != s.trim() {
            return Err(Error::Parse(format!("curve '{s}' is not in canonical form")));
        }
        Ok(cw)
    }
}

impl From<LoopWord> for String {
    fn from(w: LoopWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for LoopWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Ok(LoopWord(parse_letters(&s)?))
    }
}

impl LoopWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> LoopWord {
        LoopWord(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
        f.write_str(&letters.join(","))
    }
}

impl fmt::Debug for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopWord({self})")
    }
}

/// letters ++ end ++ reverse(letters), freely reduced.
pub fn loop_of_curve(cw: &CurveWord) -> LoopWord {
    let raw = cw.letters.iter().copied().chain([cw.end]).chain(cw.letters.iter().rev().copied());
    LoopWord(free_reduce(raw))
}

/// sign · s_{j1} ··· s_{jk} α_end.
pub fn root_of_curve(cw: &CurveWord, group: &WeylGroup) -> Result<RootVector> {
    cw.check_rank(group.rank())?;
    let root = group.apply_word(&cw.letters, &RootVector::simple(group.rank(), cw.end))?;
    Ok(if cw.negative { root.neg() } else { root })
}

/// Evaluates the loop word.
pub fn reflection_of_curve(cw: &CurveWord, group: &WeylGroup) -> Result<Reflection> {
    cw.check_rank(group.rank())?;
    let element = group.word_element(&loop_of_curve(cw).0)?;
    let root = root_of_curve(cw, group)?.abs();
    Ok(Reflection { element, root })
}

/// Pairwise disjoint straight curves to each puncture.
pub fn fan(n: usize) -> Vec<CurveWord> {
    (0..n).map(CurveWord::straight).collect()
}

/// Applies one braid letter to a tuple of curves.
pub fn braid_move_curves(tuple: &[CurveWord], letter: BraidLetter) -> Result<Vec<CurveWord>> {
    let n = tuple.len();
    let i = letter.strand;
    if i + 1 >= n {
        return Err(Error::IndexOutOfRange { index: i + 1, rank: n.saturating_sub(1) });
    }
    let mut out = tuple.to_vec();
    let (a, b) = (&tuple[i], &tuple[i + 1]);
    if letter.inverse {
        out[i] = b.clone();
        out[i + 1] = a.prepend(&loop_of_curve(b).reversed().0);
    } else {
        out[i] = b.prepend(&loop_of_curve(a).0);
        out[i + 1] = a.clone();
    }
    Ok(out)
}

/// Applies a braid word, letters left to right.
pub fn apply_braid_word_curves(tuple: &[CurveWord], word: &crate::hurwitz::BraidWord) -> Result<Vec<CurveWord>> {
    word.check_strands(tuple.len())?;
    let mut t = tuple.to_vec();
    for &l in word.letters() {
        t = braid_move_curves(&t, l)?;
    }
    Ok(t)
}

/// Evaluates every loop of a tuple, giving the factorization it presents.
pub fn factorization_of_curves(tuple: &[CurveWord], group: &WeylGroup) -> Result<Factorization> {
    tuple
        .iter()
        .map(|cw| reflection_of_curve(cw, group))
        .collect::<Result<Vec<_>>>()
        .map(Factorization::new)
}

/// Prepends the Coxeter word |k| times (its reverse for negative k).
pub fn spiral(cw: &CurveWord, o: &Orientation, k: i64) -> CurveWord {
    let unit: Vec<usize> = if k >= 0 {
        o.order().to_vec()
    } else {
        o.order().iter().rev().copied().collect()
    };
    let prefix: Vec<usize> = unit.iter().copied().cycle().take(unit.len() * k.unsigned_abs() as usize).collect();
    cw.prepend(&prefix)
}

/// Outcome of the simplicity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Simplicity {
    /// An explicit factorization of c starting with the curve's loop exists.
    Yes,
    /// The exact absolute-length test rules it out.
    No,
    /// The bounded orbit search failed below its pruning bound.
    NoWithinBound,
    Unknown,
}

impl fmt::Display for Simplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Simplicity::Yes => "yes",
            Simplicity::No => "no",
            Simplicity::NoWithinBound => "no-within-bound",
            Simplicity::Unknown => "unknown",
        })
    }
}

/// Simplicity verdict with its certificate.
#[derive(Debug, Clone)]
pub struct SimplicityReport {
    pub verdict: Simplicity,
    pub certificate: Option<Factorization>,
}

/// Simplicity oracle in the universal Coxeter group of rank n with the
/// standard order.
#[derive(Debug, Clone)]
pub struct SimplicityOracle {
    universal: Orientation,
}

impl SimplicityOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition("simplicity needs at least two punctures".into()));
        }
        let cartan = preset(&format!("universal:{n}:2"))?;
        Ok(SimplicityOracle { universal: Orientation::standard(cartan) })
    }

    pub fn orientation(&self) -> &Orientation {
        &self.universal
    }

    pub fn group(&self) -> Arc<WeylGroup> {
        self.universal.shared_group()
    }

    pub fn check(&self, cw: &CurveWord, limits: &Limits) -> Result<SimplicityReport> {
        let group = self.universal.group();
        let t = reflection_of_curve(cw, group)?;
        let report = is_prefix_of_coxeter(&t.element, &self.universal, limits, PrefixRoutes::default())?;
        let verdict = match report.verdict {
            Certainty::Yes => Simplicity::Yes,
            Certainty::No if report.length_route == Certainty::No => Simplicity::No,
            Certainty::No => Simplicity::NoWithinBound,
            Certainty::Unknown if report.orbit_route == SearchOutcome::ExhaustedWithinBound => Simplicity::NoWithinBound,
            Certainty::Unknown => Simplicity::Unknown,
        };
        Ok(SimplicityReport { verdict, certificate: report.certificate })
    }

    /// Orbit route only, as a bounded search.
    pub fn check_by_orbit(&self, cw: &CurveWord, limits: &Limits) -> Result<Simplicity> {
        let group = self.universal.group();
        let t = reflection_of_curve(cw, group)?;
        let routes = PrefixRoutes { length: false, orbit: true };
        let report = is_prefix_of_coxeter(&t.element, &self.universal, limits, routes)?;
        Ok(match report.orbit_route {
            SearchOutcome::Found => Simplicity::Yes,
            SearchOutcome::Exhausted | SearchOutcome::ExhaustedWithinBound => Simplicity::NoWithinBound,
            _ => Simplicity::Unknown,
        })
    }
}

/// Simplicity of a curve on `n` punctures.
pub fn is_simple(cw: &CurveWord, n: usize, limits: &Limits) -> Result<Simplicity> {
    Ok(SimplicityOracle::new(n)?.check(cw, limits)?.verdict)
}

/// Which end of the Coxeter order a mutation rotates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MutationSide {
    Source,
    Sink,
}

impl FromStr for MutationSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "source" | "s" => Ok(MutationSide::Source),
            "sink" | "t" => Ok(MutationSide::Sink),
            _ => Err(Error::Parse(format!("expected source or sink, got '{s}'"))),
        }
    }
}

/// Prepends s(c) (source) or t(c) (sink).
pub fn mutation_word_map(cw: &CurveWord, side: MutationSide, o: &Orientation) -> CurveWord {
    let letter = match side {
        MutationSide::Source => o.source(),
        MutationSide::Sink => o.sink(),
    };
    cw.prepend(&[letter])
}

/// All canonical positive curve words on `n` punctures with at most
/// `max_len` letters, shortest first.
pub fn canonical_words(n: usize, max_len: usize) -> Vec<CurveWord> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_len {
        for letters in &layer {
            for end in 0..n {
                if letters.last() != Some(&end) {
                    out.push(CurveWord { letters: letters.clone(), end, negative: false });
                }
            }
        }
        if len == max_len {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..n).filter(move |&l| w.last() != Some(&l)).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::BraidWord;

    fn cw(s: &str) -> CurveWord {
        s.parse().unwrap()
    }

    fn a3() -> WeylGroup {
        WeylGroup::new(preset("A3").unwrap())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&[1, 2], 2), cw("-2|3"));
        assert_eq!(canonicalize(&[0, 0, 1], 2), cw("2|3"));
        assert_eq!(canonicalize(&[2], 2), cw("-|3"));
        assert_eq!(cw("2,3,3|2").to_string(), "-|2");
        assert!(cw("1,2|3").is_canonical());
        assert!("1,2".parse::<CurveWord>().is_err());
        assert!("1|2,3".parse::<CurveWord>().is_err());
        assert!("0|1".parse::<CurveWord>().is_err());
    }

    #[test]
    fn loops() {
        assert_eq!(loop_of_curve(&cw("|2")).to_string(), "2");
        assert_eq!(loop_of_curve(&cw("2|3")).to_string(), "2,3,2");
        assert_eq!(loop_of_curve(&cw("1,2|3")).to_string(), "1,2,3,2,1");
        assert!(loop_of_curve(&cw("1,3,2|1")).is_palindrome());
    }

    #[test]
    fn roots_and_reflections() {
        let g = a3();
        assert_eq!(root_of_curve(&cw("2|3"), &g).unwrap(), RootVector(vec![0, 1, 1]));
        assert_eq!(root_of_curve(&cw("|1"), &g).unwrap(), RootVector(vec![1, 0, 0]));
        assert_eq!(root_of_curve(&cw("-2|3"), &g).unwrap(), RootVector(vec![0, -1, -1]));
        assert_eq!(root_of_curve(&cw("2,3|3"), &g).unwrap(), RootVector(vec![0, -1, -1]));
        let r = reflection_of_curve(&cw("2|3"), &g).unwrap();
        assert_eq!(r.element, g.word_element(&[1, 2, 1]).unwrap());
        assert_eq!(r, g.reflection_for_root(&RootVector(vec![0, 1, 1])).unwrap());
        assert_eq!(reflection_of_curve(&cw("|2"), &g).unwrap().element, *g.simple_element(1).unwrap());
        assert!(root_of_curve(&cw("4|1"), &g).is_err());
    }

    #[test]
    fn fan_and_moves() {
        let f2 = fan(2);
        assert_eq!(f2, vec![cw("|1"), cw("|2")]);
        let moved = braid_move_curves(&f2, BraidLetter::sigma(0)).unwrap();
        assert_eq!(moved, vec![cw("1|2"), cw("|1")]);
        let back = braid_move_curves(&moved, BraidLetter::sigma_inv(0)).unwrap();
        assert_eq!(back, f2);
        let o = Orientation::standard(preset("A3").unwrap());
        let f3 = fan(3);
        let fact = factorization_of_curves(&f3, o.group()).unwrap();
        assert_eq!(fact, Factorization::canonical(&o));
        assert_eq!(fact.product(), *o.coxeter());
        let w: BraidWord = "1,-2,2,2,-1".parse().unwrap();
        let t = apply_braid_word_curves(&f3, &w).unwrap();
        let ft = factorization_of_curves(&t, o.group()).unwrap();
        assert_eq!(ft, fact.apply_braid_word(&w).unwrap());
        assert!(braid_move_curves(&f3, BraidLetter::sigma(2)).is_err());
    }

    #[test]
    fn spirals() {
        let o = Orientation::standard(preset("A2").unwrap());
        let s = spiral(&cw("|1"), &o, 1);
        assert_eq!(s, cw("1,2|1"));
        assert_eq!(root_of_curve(&s, o.group()).unwrap(), RootVector(vec![0, 1]));
        let c = cw("2,1|2");
        assert_eq!(spiral(&c, &o, 0), c);
        assert_eq!(spiral(&spiral(&c, &o, 1), &o, -1), c);
    }

    #[test]
    fn mutation_words() {
        let o = Orientation::standard(preset("A3").unwrap());
        let beta = cw("2,3|2");
        assert_eq!(mutation_word_map(&beta, MutationSide::Source, &o), cw("1,2,3|2"));
        assert_eq!(mutation_word_map(&beta, MutationSide::Sink, &o), cw("3,2,3|2"));
        let twice = mutation_word_map(&mutation_word_map(&beta, MutationSide::Source, &o), MutationSide::Source, &o);
        assert_eq!(twice, beta);
    }

    #[test]
    fn simplicity() {
        let limits = Limits::default();
        for k in 1..=3 {
            assert_eq!(is_simple(&cw(&format!("|{k}")), 3, &limits).unwrap(), Simplicity::Yes);
        }
        let oracle = SimplicityOracle::new(3).unwrap();
        let r = oracle.check(&cw("2|3"), &limits).unwrap();
        assert_eq!(r.verdict, Simplicity::Yes);
        assert_eq!(r.certificate.unwrap().product(), *oracle.orientation().coxeter());
        assert_eq!(oracle.check_by_orbit(&cw("2|3"), &limits).unwrap(), Simplicity::Yes);
    }

    #[test]
    fn shortest_non_simple_word() {
        let limits = Limits::default();
        let oracle = SimplicityOracle::new(3).unwrap();
        let first = canonical_words(3, 4)
            .into_iter()
            .find(|w| oracle.check(w, &limits).unwrap().verdict != Simplicity::Yes)
            .unwrap();
        assert_eq!(first, cw("2,1|3"));
        assert_eq!(oracle.check(&first, &limits).unwrap().verdict, Simplicity::No);
        assert_eq!(oracle.check_by_orbit(&first, &limits).unwrap(), Simplicity::NoWithinBound);
    }

    #[test]
    fn word_enumeration() {
        let words = canonical_words(3, 2);
        // lengths 0, 1, 2: 3 + 3*2 + 6*2
        assert_eq!(words.len(), 3 + 6 + 12);
        assert!(words.iter().all(CurveWord::is_canonical));
    }
}
