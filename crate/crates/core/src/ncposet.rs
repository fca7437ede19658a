//! The noncrossing partition poset [1, c] under absolute order.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::orientation::Orientation;
use crate::verdict::Certainty;
use crate::weyl::{is_reflection, AbsoluteLength, Reflection, RootVector, WeylElement, WeylGroup};

/// u ≤ w iff l(u) + l(u⁻¹w) = l(w).
pub fn absolute_leq(u: &WeylElement, w: &WeylElement, group: &WeylGroup, cap: usize) -> Certainty {
    let len = |x: &WeylElement| match group.absolute_length(x, cap) {
        AbsoluteLength::Exact(k) => Some(k),
        AbsoluteLength::Unknown => None,
    };
    match (len(u), len(&u.inverse().compose(w)), len(w)) {
        (Some(a), Some(b), Some(c)) => Certainty::from_bool(a + b == c),
        (Some(a), _, Some(c)) if a > c => Certainty::No,
        _ => Certainty::Unknown,
    }
}

/// [1, c] with its rank function and cover relations.
#[derive(Debug, Clone)]
pub struct NcPoset {
    /// Sorted by rank, then by matrix entries.
    pub elements: Vec<WeylElement>,
    pub ranks: Vec<usize>,
    /// (lower, upper) index pairs.
    pub covers: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
    index: HashMap<WeylElement, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl NcPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Reachability matrix: leq[i][j] iff elements[i] ≤ elements[j].
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        // elements are sorted by rank, so processing in reverse sees every
        // upper cover first
        for i in (0..n).rev() {
            leq[i][i] = true;
            for &j in &self.up[i] {
                let (head, tail) = leq.split_at_mut(j);
                for (k, v) in tail[0].iter().enumerate() {
                    if *v {
                        head[i][k] = true;
                    }
                }
            }
        }
        leq
    }

    /// Indices along a saturated chain from `from` up to `to`.
    pub fn chain_between(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let leq = self.order_matrix();
        let mut prev: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.up[x] {
                if leq[y][to] && !prev.contains_key(&y) {
                    prev.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// Elements w of a finite group with l(w) + l(w⁻¹c) = n.
pub fn enumerate_nc(o: &Orientation, exec: Exec) -> Result<NcPoset> {
    let group = o.group();
    if !group.is_finite() {
        return Err(Error::WrongType { expected: "finite" });
    }
    let n = o.rank();
    let c = o.coxeter();
    let carter = |w: &WeylElement| w.matrix().minus_identity().rank();
    let all = group.enumerate_group(exec)?;
    let ranked: Vec<Option<(usize, WeylElement)>> = exec.map(all, |w| {
        let l = carter(w);
        (l + carter(&w.inverse().compose(c)) == n).then(|| (l, w.clone()))
    });
    let mut members: Vec<(usize, WeylElement)> = ranked.into_iter().flatten().collect();
    members.sort();
    let (ranks, elements): (Vec<usize>, Vec<WeylElement>) = members.into_iter().unzip();
    let index: HashMap<WeylElement, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let ids: Vec<usize> = (0..elements.len()).collect();
    let cover_lists: Vec<Vec<(usize, usize)>> = exec.map(&ids, |&i| {
        let inv = elements[i].inverse();
        (i + 1..elements.len())
            .filter(|&j| ranks[j] == ranks[i] + 1 && is_reflection(&inv.compose(&elements[j])))
            .map(|j| (i, j))
            .collect()
    });
    let covers: Vec<(usize, usize)> = cover_lists.into_iter().flatten().collect();
    let mut up = vec![Vec::new(); elements.len()];
    let mut down = vec![Vec::new(); elements.len()];
    for &(a, b) in &covers {
        up[a].push(b);
        down[b].push(a);
    }
    let bottom = index[&WeylElement::identity(n)];
    let top = index[c];
    Ok(NcPoset { elements, ranks, covers, bottom, top, index, up, down })
}

/// Reflections between u and w in the poset, and a full factorization of
/// c that passes through both.
#[derive(Debug, Clone)]
pub struct IntervalFactorization {
    /// u · t_1 ··· t_m = w.
    pub between: Vec<Reflection>,
    /// Product equals c; `between` appears as a contiguous block.
    pub full: Vec<Reflection>,
}

fn steps(p: &NcPoset, group: &WeylGroup, path: &[usize]) -> Vec<Reflection> {
    path.windows(2)
        .map(|w| {
            let t = p.elements[w[0]].inverse().compose(&p.elements[w[1]]);
            group.reflection_from_element(&t).expect("covers differ by a reflection")
        })
        .collect()
}

pub fn interval_factorization(
    u: &WeylElement,
    w: &WeylElement,
    p: &NcPoset,
    group: &WeylGroup,
) -> Result<IntervalFactorization> {
    let missing = || Error::Precondition("both elements must lie in [1, c]".into());
    let (iu, iw) = (p.index_of(u).ok_or_else(missing)?, p.index_of(w).ok_or_else(missing)?);
    let mid = p
        .chain_between(iu, iw)
        .ok_or_else(|| Error::Precondition("u is not below w".into()))?;
    let low = p.chain_between(p.bottom, iu).expect("bottom is below everything");
    let high = p.chain_between(iw, p.top).expect("top is above everything");
    let between = steps(p, group, &mid);
    let mut full = steps(p, group, &low);
    full.extend(between.iter().cloned());
    full.extend(steps(p, group, &high));
    Ok(IntervalFactorization { between, full })
}

/// Summary of the order-theoretic checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    pub size: usize,
    pub rank_vector: Vec<usize>,
    pub self_dual_ranks: bool,
    pub maximal_chains: u128,
    pub is_lattice: bool,
    pub atoms: usize,
}

pub fn poset_properties(p: &NcPoset) -> PosetReport {
    let top_rank = p.ranks[p.top];
    let mut rank_vector = vec![0; top_rank + 1];
    for &r in &p.ranks {
        rank_vector[r] += 1;
    }
    let self_dual_ranks = rank_vector.iter().eq(rank_vector.iter().rev());
    let mut chains = vec![0u128; p.len()];
    chains[p.bottom] = 1;
    for i in 0..p.len() {
        for &j in &p.up[i] {
            chains[j] += chains[i];
        }
    }
    let leq = p.order_matrix();
    let n = p.len();
    let has_bound = |upper: bool, a: usize, b: usize| {
        let bounds: Vec<usize> = (0..n)
            .filter(|&x| if upper { leq[a][x] && leq[b][x] } else { leq[x][a] && leq[x][b] })
            .collect();
        bounds.iter().any(|&x| {
            bounds.iter().all(|&y| if upper { leq[x][y] } else { leq[y][x] })
        })
    };
    let is_lattice = (0..n).all(|a| (a + 1..n).all(|b| has_bound(true, a, b) && has_bound(false, a, b)));
    PosetReport {
        size: n,
        rank_vector: rank_vector.clone(),
        self_dual_ranks,
        maximal_chains: chains[p.top],
        is_lattice,
        atoms: rank_vector.get(1).copied().unwrap_or(0),
    }
}

/// Node of a serialized poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNode {
    pub id: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<RootVector>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDump {
    pub nodes: Vec<PosetNode>,
    pub covers: Vec<(usize, usize)>,
}

pub fn poset_dump(p: &NcPoset, group: &WeylGroup) -> PosetDump {
    let nodes = p
        .elements
        .iter()
        .zip(&p.ranks)
        .enumerate()
        .map(|(id, (w, &rank))| PosetNode {
            id,
            rank,
            root: (rank == 1).then(|| group.root_of_reflection(w).expect("rank one elements are reflections")),
            matrix: w.matrix().rows(),
        })
        .collect();
    PosetDump { nodes, covers: p.covers.clone() }
}

/// Graphviz rendering of the Hasse diagram.
pub fn poset_dot(dump: &PosetDump) -> String {
    let mut out = String::from("digraph nc {\n  rankdir=BT;\n");
    for node in &dump.nodes {
        let label = match &node.root {
            Some(r) => format!("{} [{}]", node.id, r),
            None => node.id.to_string(),
        };
        let _ = writeln!(out, "  n{} [label=\"{}\" rank={}];", node.id, label, node.rank);
    }
    for (a, b) in &dump.covers {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
