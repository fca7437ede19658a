//! Faithful integer-matrix model of the Weyl group acting on the root
//! lattice in the simple-root basis.
//!
//! All indices are 0-based internally; text forms are 1-based.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, TypeClass};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{gcd, IntMatrix};

/// Coefficients of a lattice vector in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// L1 norm of the coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|x| -x).collect())
    }

    /// The positive representative of ±self.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Sort key: height first, then lexicographic coordinates.
    pub fn order_key(&self) -> (i64, Vec<i64>) {
        (self.height(), self.0.clone())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for RootVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad root coordinate '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootVector(coords))
    }
}

/// Group element as a matrix whose column j is the image of α_j.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<i64>>", try_from = "Vec<Vec<i64>>")]
pub struct WeylElement(IntMatrix);

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement(IntMatrix::identity(n))
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        WeylElement(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement(self.0.mul(&other.0))
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        RootVector(self.0.mul_vec(&v.0))
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement(self.0.inverse().expect("Weyl group elements are unimodular"))
    }

    pub fn pow(&self, k: i64) -> WeylElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = WeylElement::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &WeylElement) -> WeylElement {
        self.compose(other).compose(&self.inverse())
    }

    /// Determinant, always ±1 for group elements; equals (-1)^l(w).
    pub fn sign(&self) -> i64 {
        self.0.determinant() as i64
    }

    /// Largest height among the columns of (w - id).
    pub fn moved_height(&self) -> i64 {
        let m = self.0.minus_identity();
        (0..m.dim())
            .map(|j| m.column(j).iter().map(|x| x.abs()).sum())
            .max()
            .unwrap_or(0)
    }
}

impl From<WeylElement> for Vec<Vec<i64>> {
    fn from(w: WeylElement) -> Self {
        w.0.rows()
    }
}

impl TryFrom<Vec<Vec<i64>>> for WeylElement {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Ok(WeylElement(IntMatrix::from_rows(&rows)?))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.0)
    }
}

/// True iff w² = id and w - id has rank one.
pub fn is_reflection(w: &WeylElement) -> bool {
    w.compose(w).is_identity() && w.matrix().minus_identity().rank() == 1
}

/// A reflection together with its positive root.
///
/// Equality and hashing use the root alone: the positive real root
/// determines the reflection.
#[derive(Clone, Serialize, Deserialize)]
pub struct Reflection {
    pub element: WeylElement,
    pub root: RootVector,
}

impl PartialEq for Reflection {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root
    }
}

impl Eq for Reflection {}

impl std::hash::Hash for Reflection {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.root.hash(state);
    }
}

impl fmt::Debug for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{:?}", self.root)
    }
}

/// Absolute (reflection) length, or `Unknown` when no bounded search could
/// certify it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AbsoluteLength {
    Exact(usize),
    Unknown,
}

/// Absolute length with an explicit witness when one was found.
///
/// `factors` multiply (left to right) to the queried element. When the
/// length is `Unknown`, `factors` may still hold a non-minimal
/// factorization, whose size is an upper bound.
#[derive(Debug, Clone)]
pub struct LengthCertificate {
    pub length: AbsoluteLength,
    pub factors: Option<Vec<Reflection>>,
}

/// Tuning for searches over reflection pools in non-finite,
/// non-universal types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoolBounds {
    /// Height ceiling for the adaptive reflection pool.
    pub height_ceiling: i64,
}

impl Default for PoolBounds {
    fn default() -> Self {
        PoolBounds { height_ceiling: 64 }
    }
}

/// The matrix of s_i for a Cartan matrix (0-based `i`).
pub(crate) fn simple_matrix(cartan: &CartanMatrix, i: usize) -> IntMatrix {
    let n = cartan.rank();
    let mut m = IntMatrix::identity(n);
    for j in 0..n {
        m.set(i, j, m.get(i, j) - cartan.get(i, j));
    }
    m
}

/// Weyl group of a Cartan matrix with cached derived data.
pub struct WeylGroup {
    cartan: CartanMatrix,
    type_class: TypeClass,
    simple: Vec<WeylElement>,
    finite_reflections: OnceLock<Vec<Reflection>>,
    elements: OnceLock<Vec<WeylElement>>,
    pools: Mutex<BTreeMap<i64, Arc<Vec<Reflection>>>>,
    pool_bounds: PoolBounds,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("cartan", &self.cartan)
            .field("type_class", &self.type_class)
            .finish()
    }
}

impl WeylGroup {
    pub fn new(cartan: CartanMatrix) -> Self {
        Self::with_pool_bounds(cartan, PoolBounds::default())
    }

    pub fn with_pool_bounds(cartan: CartanMatrix, pool_bounds: PoolBounds) -> Self {
        let simple = (0..cartan.rank())
            .map(|i| WeylElement(simple_matrix(&cartan, i)))
            .collect();
        WeylGroup {
            type_class: cartan.classify(),
            cartan,
            simple,
            finite_reflections: OnceLock::new(),
            elements: OnceLock::new(),
            pools: Mutex::new(BTreeMap::new()),
            pool_bounds,
        }
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn type_class(&self) -> TypeClass {
        self.type_class
    }

    pub fn is_finite(&self) -> bool {
        self.type_class == TypeClass::Finite
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i + 1, rank: self.rank() });
        }
        Ok(())
    }

    fn check_rank(&self, dim: usize) -> Result<()> {
        if dim != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: dim });
        }
        Ok(())
    }

    pub fn simple_element(&self, i: usize) -> Result<&WeylElement> {
        self.check_index(i)?;
        Ok(&self.simple[i])
    }

    pub fn simple_reflection(&self, i: usize) -> Result<Reflection> {
        self.check_index(i)?;
        Ok(Reflection {
            element: self.simple[i].clone(),
            root: RootVector::simple(self.rank(), i),
        })
    }

    /// s_i applied to a vector: only coordinate i changes.
    pub fn reflect_simple(&self, i: usize, v: &mut [i64]) {
        let n = self.rank();
        let pairing: i64 = (0..n).map(|j| self.cartan.get(i, j) * v[j]).sum();
        v[i] -= pairing;
    }

    /// Evaluates s_{w_1} ... s_{w_k} (v): rightmost letter acts first.
    pub fn apply_word(&self, word: &[usize], v: &RootVector) -> Result<RootVector> {
        self.check_rank(v.dim())?;
        let mut out = v.0.clone();
        for &i in word.iter().rev() {
            self.check_index(i)?;
            self.reflect_simple(i, &mut out);
        }
        Ok(RootVector(out))
    }

    /// Product s_{w_1} ... s_{w_k}.
    pub fn word_element(&self, word: &[usize]) -> Result<WeylElement> {
        let mut out = self.identity();
        for &i in word {
            self.check_index(i)?;
            out = out.compose(&self.simple[i]);
        }
        Ok(out)
    }

    pub fn compose(&self, u: &WeylElement, w: &WeylElement) -> Result<WeylElement> {
        self.check_rank(u.rank())?;
        self.check_rank(w.rank())?;
        Ok(u.compose(w))
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check_rank(w.rank())?;
        Ok(w.inverse())
    }

    pub fn apply(&self, w: &WeylElement, v: &RootVector) -> Result<RootVector> {
        self.check_rank(w.rank())?;
        self.check_rank(v.dim())?;
        Ok(w.apply(v))
    }

    /// s_{order[0]} ··· s_{order[n-1]}.
    pub fn coxeter_element(&self, order: &[usize]) -> Result<WeylElement> {
        check_permutation(order, self.rank())?;
        self.word_element(order)
    }

    /// Writes a positive real root as s_{w_1} ··· s_{w_k}(α_end) by height
    /// descent. Returns `None` when `beta` is not a positive real root.
    pub fn descent_word(&self, beta: &RootVector) -> Option<(Vec<usize>, usize)> {
        if beta.dim() != self.rank() || !beta.is_positive() {
            return None;
        }
        let mut v = beta.0.clone();
        let mut letters = Vec::new();
        loop {
            let nonzero: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
            if nonzero.len() == 1 && v[nonzero[0]] == 1 {
                letters.reverse();
                return Some((letters, nonzero[0]));
            }
            // (v, α_i) > 0 for some i whenever v is a non-simple real root.
            let vr = RootVector(v.clone());
            let i = (0..v.len()).find(|&i| {
                let ai = RootVector::simple(v.len(), i);
                self.cartan.form(&vr.0, &ai.0) > 0
            })?;
            self.reflect_simple(i, &mut v);
            if v.iter().any(|&x| x < 0) {
                return None;
            }
            letters.push(i);
        }
    }

    pub fn is_real_root(&self, beta: &RootVector) -> bool {
        self.descent_word(&beta.abs()).is_some()
    }

    /// Reflection matrix v ↦ v - (2B(v,β)/B(β,β)) β, if integral.
    fn reflection_matrix(&self, beta: &RootVector) -> Option<WeylElement> {
        let n = self.rank();
        let norm = self.cartan.form(&beta.0, &beta.0);
        if norm <= 0 {
            return None;
        }
        let mut m = IntMatrix::identity(n);
        for j in 0..n {
            let aj = RootVector::simple(n, j);
            let num = 2 * self.cartan.form(&aj.0, &beta.0);
            if num % norm != 0 {
                return None;
            }
            let k = num / norm;
            for i in 0..n {
                m.set(i, j, m.get(i, j) - k * beta.0[i]);
            }
        }
        Some(WeylElement(m))
    }

    /// The reflection r_β of a real root (either sign).
    pub fn reflection_for_root(&self, beta: &RootVector) -> Result<Reflection> {
        self.check_rank(beta.dim())?;
        let root = beta.abs();
        if !self.is_real_root(&root) {
            return Err(Error::NotRealRoot(beta.to_string()));
        }
        let element = self
            .reflection_matrix(&root)
            .filter(is_reflection)
            .ok_or_else(|| Error::NotRealRoot(beta.to_string()))?;
        Ok(Reflection { element, root })
    }

    /// Reflection for a root already known to be real.
    pub(crate) fn reflection_of_known_root(&self, beta: &RootVector) -> Reflection {
        let root = beta.abs();
        let element = self
            .reflection_matrix(&root)
            .expect("real roots give integral reflections");
        Reflection { element, root }
    }

    /// Positive primitive generator of the image of (t - id).
    pub fn root_of_reflection(&self, t: &WeylElement) -> Result<RootVector> {
        self.check_rank(t.rank())?;
        if !is_reflection(t) {
            return Err(Error::NotReflection);
        }
        let m = t.matrix().minus_identity();
        let col = (0..m.dim())
            .map(|j| m.column(j))
            .find(|c| c.iter().any(|&x| x != 0))
            .ok_or(Error::NotReflection)?;
        let g = col.iter().fold(0i128, |g, &x| gcd(g, i128::from(x))) as i64;
        let v = RootVector(col.iter().map(|x| x / g).collect());
        let v = v.abs();
        if !v.is_positive() {
            return Err(Error::NotReflection);
        }
        Ok(v)
    }

    pub fn reflection_from_element(&self, t: &WeylElement) -> Result<Reflection> {
        let root = self.root_of_reflection(t)?;
        Ok(Reflection { element: t.clone(), root })
    }

    /// Positive real roots of height at most `height_bound`, sorted by
    /// height then coordinates. Finite types ignore the bound and return
    /// every positive root.
    pub fn positive_real_roots(&self, height_bound: i64) -> Vec<RootVector> {
        let n = self.rank();
        let bound = if self.is_finite() { i64::MAX } else { height_bound };
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut frontier: Vec<RootVector> = (0..n)
            .map(|i| RootVector::simple(n, i))
            .filter(|r| r.height() <= bound)
            .collect();
        seen.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..n {
                    let mut v = r.0.clone();
                    self.reflect_simple(i, &mut v);
                    let v = RootVector(v);
                    if v.is_positive() && v.height() <= bound && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by_key(RootVector::order_key);
        roots
    }

    /// All real roots (both signs) of height at most `height_bound`.
    pub fn enumerate_real_roots(&self, height_bound: i64) -> Vec<RootVector> {
        let pos = self.positive_real_roots(height_bound);
        let mut all: Vec<RootVector> = pos.iter().map(RootVector::neg).chain(pos.iter().cloned()).collect();
        all.sort_by_key(RootVector::order_key);
        all
    }

    /// Every reflection of a finite group.
    pub fn finite_reflections(&self) -> Result<&[Reflection]> {
        if !self.is_finite() {
            return Err(Error::WrongType { expected: "finite" });
        }
        Ok(self.finite_reflections.get_or_init(|| {
            self.positive_real_roots(i64::MAX)
                .iter()
                .map(|r| self.reflection_of_known_root(r))
                .collect()
        }))
    }

    /// Reflections of positive real roots up to `height` (cached).
    pub fn reflection_pool(&self, height: i64) -> Arc<Vec<Reflection>> {
        if self.is_finite() {
            let all = self.finite_reflections().expect("finite");
            return Arc::new(all.iter().filter(|r| r.root.height() <= height).cloned().collect());
        }
        let mut pools = self.pools.lock().expect("pool cache poisoned");
        pools
            .entry(height)
            .or_insert_with(|| {
                Arc::new(
                    self.positive_real_roots(height)
                        .iter()
                        .map(|r| self.reflection_of_known_root(r))
                        .collect(),
                )
            })
            .clone()
    }

    /// A reduced word for `w`: w = s_{w_1} ··· s_{w_k}.
    pub fn reduced_word(&self, w: &WeylElement) -> Result<Vec<usize>> {
        self.check_rank(w.rank())?;
        let n = self.rank();
        let mut cur = w.clone();
        let mut letters = Vec::new();
        while !cur.is_identity() {
            // w(α_i) < 0 iff s_i is a right descent of w.
            let i = (0..n)
                .find(|&i| {
                    let col = cur.matrix().column(i);
                    col.iter().all(|&x| x <= 0)
                })
                .ok_or_else(|| Error::Precondition("matrix is not a Weyl group element".into()))?;
            cur = cur.compose(&self.simple[i]);
            letters.push(i);
            if letters.len() > 100_000 {
                return Err(Error::Precondition("reduced word search diverged".into()));
            }
        }
        letters.reverse();
        Ok(letters)
    }

    /// Absolute length of `w`.
    ///
    /// Exact for finite types (codimension of the fixed lattice) and for
    /// universal Coxeter groups (minimal deletions from the reduced word).
    /// Other types search products of reflections from an adaptively
    /// enlarged pool, up to `cap` factors.
    pub fn absolute_length(&self, w: &WeylElement, cap: usize) -> AbsoluteLength {
        self.reflection_factorization(w, cap).length
    }

    /// Absolute length plus a factorization witnessing it.
    pub fn reflection_factorization(&self, w: &WeylElement, cap: usize) -> LengthCertificate {
        if w.is_identity() {
            return LengthCertificate { length: AbsoluteLength::Exact(0), factors: Some(vec![]) };
        }
        if self.is_finite() {
            let factors = self.greedy_finite_factorization(w);
            return LengthCertificate { length: AbsoluteLength::Exact(factors.len()), factors: Some(factors) };
        }
        if self.cartan.is_universal() {
            if let Ok(factors) = self.deletion_factorization(w) {
                return LengthCertificate {
                    length: AbsoluteLength::Exact(factors.len()),
                    factors: Some(factors),
                };
            }
        }
        let lower = self.length_lower_bound(w);
        let mut k = lower;
        while k <= cap {
            if let Some(f) = self.factor_into(w, k) {
                let length = if k == lower { AbsoluteLength::Exact(k) } else { AbsoluteLength::Unknown };
                return LengthCertificate { length, factors: Some(f) };
            }
            k += 2;
        }
        LengthCertificate { length: AbsoluteLength::Unknown, factors: None }
    }

    /// rank(w - id), raised to the parity fixed by det w.
    pub fn length_lower_bound(&self, w: &WeylElement) -> usize {
        let r = w.matrix().minus_identity().rank();
        let odd = w.sign() < 0;
        if (r % 2 == 1) == odd {
            r
        } else {
            r + 1
        }
    }

    fn greedy_finite_factorization(&self, w: &WeylElement) -> Vec<Reflection> {
        let refl = self.finite_reflections().expect("finite");
        let mut cur = w.clone();
        let mut len = cur.matrix().minus_identity().rank();
        let mut out = Vec::with_capacity(len);
        while len > 0 {
            let (t, next) = refl
                .iter()
                .find_map(|t| {
                    let next = t.element.compose(&cur);
                    (next.matrix().minus_identity().rank() + 1 == len).then_some((t, next))
                })
                .expect("a length-reducing reflection exists in finite type");
            out.push(t.clone());
            cur = next;
            len -= 1;
        }
        out
    }

    /// Factorization of a universal Coxeter group element from a maximum
    /// non-crossing matching of equal letters in its reduced word; the
    /// unmatched letters are deleted one at a time, each deletion
    /// contributing the reflection X s X⁻¹ for the prefix X before it.
    fn deletion_factorization(&self, w: &WeylElement) -> Result<Vec<Reflection>> {
        let word = self.reduced_word(w)?;
        let matched = max_noncrossing_matching(&word);
        let mut current: Vec<usize> = word.clone();
        let mut removed = 0;
        let mut out = Vec::new();
        for (p, &letter) in word.iter().enumerate() {
            if matched[p] {
                continue;
            }
            let idx = p - removed;
            let root = self.apply_word(&current[..idx], &RootVector::simple(self.rank(), letter))?;
            out.push(self.reflection_of_known_root(&root));
            current.remove(idx);
            removed += 1;
        }
        debug_assert!(self.word_element(&current).map(|e| e.is_identity()).unwrap_or(false));
        Ok(out)
    }

    /// Searches for w = r_1 ··· r_k with r_1..r_{k-1} from the adaptive
    /// pool and r_k tested directly.
    pub fn factor_into(&self, w: &WeylElement, k: usize) -> Option<Vec<Reflection>> {
        if k == 0 {
            return w.is_identity().then(Vec::new);
        }
        let mut height = (2 * w.moved_height()).max(2);
        loop {
            let capped = height.min(self.pool_bounds.height_ceiling);
            let pool = self.reflection_pool(capped);
            let mut stack = Vec::with_capacity(k);
            if self.factor_dfs(w, k, &pool, &mut stack) {
                return Some(stack);
            }
            if capped >= self.pool_bounds.height_ceiling || self.is_finite() {
                return None;
            }
            height *= 2;
        }
    }

    fn factor_dfs(&self, rest: &WeylElement, k: usize, pool: &[Reflection], stack: &mut Vec<Reflection>) -> bool {
        if k == 1 {
            if is_reflection(rest) {
                if let Ok(t) = self.reflection_from_element(rest) {
                    stack.push(t);
                    return true;
                }
            }
            return false;
        }
        for r in pool {
            let next = r.element.compose(rest);
            if self.length_lower_bound(&next) > k - 1 {
                continue;
            }
            stack.push(r.clone());
            if self.factor_dfs(&next, k - 1, pool, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }

    /// All group elements of a finite type, in breadth-first order.
    pub fn enumerate_group(&self, exec: Exec) -> Result<&[WeylElement]> {
        if !self.is_finite() {
            return Err(Error::WrongType { expected: "finite" });
        }
        Ok(self.elements.get_or_init(|| {
            let mut seen: IndexSet<WeylElement> = IndexSet::new();
            seen.insert(self.identity());
            let mut frontier = vec![self.identity()];
            while !frontier.is_empty() {
                let expanded = exec.map(&frontier, |w| {
                    self.simple.iter().map(|s| w.compose(s)).collect::<Vec<_>>()
                });
                let mut next = Vec::new();
                for w in expanded.into_iter().flatten() {
                    if seen.insert(w.clone()) {
                        next.push(w);
                    }
                }
                frontier = next;
            }
            seen.into_iter().collect()
        }))
    }

    pub fn group_order(&self, exec: Exec) -> Result<u128> {
        Ok(self.enumerate_group(exec)?.len() as u128)
    }
}

/// For each position, whether it belongs to a maximum non-crossing
/// matching that pairs equal letters (interval dynamic programming).
fn max_noncrossing_matching(word: &[usize]) -> Vec<bool> {
    let len = word.len();
    let mut best = vec![vec![0usize; len + 1]; len + 1];
    // best[i][j]: optimum on word[i..j]
    for span in 2..=len {
        for i in 0..=len - span {
            let j = i + span;
            let mut v = best[i + 1][j];
            for k in i + 1..j {
                if word[k] == word[i] {
                    v = v.max(1 + best[i + 1][k] + best[k + 1][j]);
                }
            }
            best[i][j] = v;
        }
    }
    let mut matched = vec![false; len];
    let mut todo = vec![(0, len)];
    while let Some((i, j)) = todo.pop() {
        if j <= i + 1 {
            continue;
        }
        if best[i][j] == best[i + 1][j] {
            todo.push((i + 1, j));
            continue;
        }
        let k = (i + 1..j)
            .find(|&k| word[k] == word[i] && best[i][j] == 1 + best[i + 1][k] + best[k + 1][j])
            .expect("matching reconstruction");
        matched[i] = true;
        matched[k] = true;
        todo.push((i + 1, k));
        todo.push((k + 1, j));
    }
    matched
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::NotPermutation(n));
    }
    for &i in order {
        if i >= n || seen[i] {
            return Err(Error::NotPermutation(n));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Multiset-free index of elements to their position; handy for tables.
pub fn index_elements(elements: &[WeylElement]) -> HashMap<WeylElement, usize> {
    elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::preset;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(preset(name).unwrap())
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn simple_reflection_formula() {
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(s1.element.apply(&rv(&[0, 1])), rv(&[1, 1]));
        for name in ["A3", "B3", "G2", "universal:3:2"] {
            let g = group(name);
            let n = g.rank();
            for i in 0..n {
                let s = g.simple_element(i).unwrap();
                for j in 0..n {
                    let mut expected = RootVector::simple(n, j).0;
                    expected[i] -= g.cartan().get(i, j);
                    assert_eq!(s.apply(&RootVector::simple(n, j)).0, expected);
                }
                assert_eq!(s.apply(&RootVector::simple(n, i)), RootVector::simple(n, i).neg());
            }
        }
        let u = group("universal:2:2");
        assert_eq!(u.simple_element(1).unwrap().apply(&rv(&[1, 0])), rv(&[1, 2]));
        assert!(a2.simple_reflection(2).is_err());
    }

    #[test]
    fn composition_and_inverse() {
        let a2 = group("A2");
        let c = a2.coxeter_element(&[0, 1]).unwrap();
        assert_eq!(c.apply(&rv(&[1, 0])), rv(&[0, 1]));
        assert_eq!(a2.apply(&a2.identity(), &rv(&[1, 0])).unwrap(), rv(&[1, 0]));
        let s = a2.simple_element(0).unwrap();
        assert!(s.compose(s).is_identity());
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.pow(3), a2.identity());
        let a3 = group("A3");
        assert!(a2.compose(&a2.identity(), &a3.identity()).is_err());
        assert_eq!(
            a3.coxeter_element(&[1, 0, 2]).unwrap(),
            a3.word_element(&[1, 0, 2]).unwrap()
        );
        assert!(a3.coxeter_element(&[0, 0, 2]).is_err());
        let a1 = group("A1");
        let c1 = a1.coxeter_element(&[0]).unwrap();
        assert_eq!(c1.apply(&rv(&[1])), rv(&[-1]));
    }

    #[test]
    fn reflections_and_roots() {
        let a2 = group("A2");
        let s1s2s1 = a2.word_element(&[0, 1, 0]).unwrap();
        assert!(is_reflection(&s1s2s1));
        assert!(!is_reflection(&a2.identity()));
        assert!(!is_reflection(&a2.word_element(&[0, 1]).unwrap()));
        assert_eq!(a2.root_of_reflection(&s1s2s1).unwrap(), rv(&[1, 1]));
        assert_eq!(a2.reflection_for_root(&rv(&[1, 1])).unwrap().element, s1s2s1);
        assert_eq!(a2.reflection_for_root(&rv(&[1, 0])).unwrap().element, *a2.simple_element(0).unwrap());
        let a3 = group("A3");
        let t = a3.word_element(&[1, 2, 1]).unwrap();
        assert_eq!(a3.root_of_reflection(&t).unwrap(), rv(&[0, 1, 1]));
        assert_eq!(a3.root_of_reflection(&a3.simple[1]).unwrap(), rv(&[0, 1, 0]));
        assert_eq!(a2.root_of_reflection(&a2.word_element(&[0, 1]).unwrap()), Err(Error::NotReflection));
    }

    #[test]
    fn non_roots_rejected() {
        let a2 = group("A2");
        assert!(a2.reflection_for_root(&rv(&[2, 0])).is_err());
        assert!(a2.reflection_for_root(&rv(&[1, -1])).is_err());
        assert!(a2.reflection_for_root(&rv(&[2, 1])).is_err());
        let u = group("universal:2:2");
        // (β,β) for (1,2) is 2 - 8 + 8 = 2, same as the simple roots
        assert!(u.reflection_for_root(&rv(&[1, 2])).is_ok());
        assert!(u.reflection_for_root(&rv(&[1, 1])).is_err());
        assert!(u.reflection_for_root(&rv(&[2, 2])).is_err());
    }

    #[test]
    fn root_enumeration() {
        assert_eq!(group("A2").enumerate_real_roots(1).len(), 6);
        assert_eq!(group("A3").enumerate_real_roots(1).len(), 12);
        let u = group("universal:2:2").positive_real_roots(8);
        let expected: Vec<RootVector> = [[1, 0], [0, 1], [1, 2], [2, 1], [2, 3], [3, 2], [3, 4], [4, 3]]
            .iter()
            .map(|v| rv(v))
            .collect();
        let mut e = expected.clone();
        e.sort_by_key(RootVector::order_key);
        assert_eq!(u, e);
        for r in group("universal:3:2").enumerate_real_roots(12) {
            assert!(r.is_positive() || r.is_negative());
        }
    }

    #[test]
    fn absolute_lengths() {
        let a2 = group("A2");
        assert_eq!(a2.absolute_length(&a2.identity(), 2), AbsoluteLength::Exact(0));
        assert_eq!(a2.absolute_length(&a2.word_element(&[0, 1, 0]).unwrap(), 2), AbsoluteLength::Exact(1));
        for name in ["A2", "B3", "D4", "affine-A2", "universal:3:2", "universal:4:3"] {
            let g = group(name);
            let n = g.rank();
            let c = g.coxeter_element(&(0..n).collect::<Vec<_>>()).unwrap();
            let cert = g.reflection_factorization(&c, n);
            assert_eq!(cert.length, AbsoluteLength::Exact(n), "{name}");
            let product = cert.factors.unwrap().iter().fold(g.identity(), |acc, r| acc.compose(&r.element));
            assert_eq!(product, c);
        }
    }

    #[test]
    fn matching_dp() {
        // s1 s2 s1 is a reflection: one deletion.
        assert_eq!(max_noncrossing_matching(&[0, 1, 0]), vec![true, false, true]);
        assert_eq!(max_noncrossing_matching(&[0, 1, 2]), vec![false; 3]);
        // crossing pairs (0..2) and (1..3) cannot both be kept
        let m = max_noncrossing_matching(&[0, 1, 0, 1]);
        assert_eq!(m.iter().filter(|&&b| b).count(), 2);
    }

    #[test]
    fn reduced_words() {
        let u = group("universal:3:2");
        let w = u.word_element(&[0, 1, 2, 1, 0, 2]).unwrap();
        assert_eq!(u.reduced_word(&w).unwrap(), vec![0, 1, 2, 1, 0, 2]);
        let a2 = group("A2");
        let w0 = a2.word_element(&[0, 1, 0]).unwrap();
        assert_eq!(a2.reduced_word(&w0).unwrap().len(), 3);
    }

    #[test]
    fn group_orders() {
        for (name, order) in [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("D4", 192)] {
            assert_eq!(group(name).group_order(Exec::default()).unwrap(), order, "{name}");
        }
        assert!(group("affine-A2").enumerate_group(Exec::Sequential).is_err());
    }
}
