//! Report types emitted by every subcommand.
//!
//! Each report renders as text or JSON, and JSON output parses back to an
//! equal value.

use std::fmt::Write;

use schur_scope::schur::ConjectureReport;
use schur_scope::{Certainty, CurveWord, LoopWord, RootVector, Simplicity};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum Report {
    Roots(RootList),
    GroupOrder(GroupOrder),
    OrbitCount(OrbitCount),
    OrbitDump(OrbitDump),
    SchurCheck(SchurCheck),
    SchurList(SchurList),
    SchurVerify(ConjectureReport),
    NcList(NcList),
    NcLeq(NcLeq),
    NcChain(NcChain),
    BraidApply(BraidApply),
    BraidStab(BraidStab),
    CurveRoot(CurveRoot),
    CurveLoop(CurveLoop),
    CurveSimple(CurveSimple),
    CurveSpiral(CurveSpiral),
    CurveRender(CurveRender),
    Mutate(Mutation),
    Repro(Repro),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootList {
    /// Present when the list is cut off by height (infinite types).
    pub height_bound: Option<i64>,
    pub roots: Vec<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOrder {
    /// `None` for infinite groups.
    pub order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    pub count: u64,
    pub complete: bool,
    pub pruned: bool,
    pub height_bound: Option<i64>,
    /// n! h^n / |G| for finite types.
    pub formula: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDump {
    pub complete: bool,
    pub pruned: bool,
    pub tuples: Vec<Vec<RootVector>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurCheck {
    pub root: RootVector,
    pub curve: Option<CurveWord>,
    pub generic: bool,
    pub answer: Certainty,
    /// Roots of a reflection factorization of c starting with r_β.
    pub certificate: Option<Vec<RootVector>>,
    pub certificate_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurEntry {
    pub root: RootVector,
    pub answer: Certainty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurList {
    pub height_bound: Option<i64>,
    pub entries: Vec<SchurEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcNode {
    pub id: usize,
    pub rank: usize,
    /// Reduced word, 1-based; empty for the identity.
    pub word: String,
    pub root: Option<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcList {
    pub size: usize,
    pub rank_vector: Vec<usize>,
    pub maximal_chains: u64,
    pub is_lattice: bool,
    pub nodes: Vec<NcNode>,
    pub covers: Vec<(usize, usize)>,
    pub dot: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcLeq {
    pub u: String,
    pub w: String,
    pub answer: Certainty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcChain {
    pub from: String,
    pub to: String,
    /// Reduced words along the chain; `None` when `from` is not below `to`.
    pub chain: Option<Vec<String>>,
    pub reflections: Vec<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidApply {
    pub word: String,
    pub tuple: Vec<RootVector>,
    pub product_is_coxeter: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabCheck {
    pub label: String,
    pub word: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub depth: usize,
    /// A predicted stabilizer word and a conjugator taking it outside.
    pub witness: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidStab {
    pub checks: Vec<StabCheck>,
    pub skipped: Vec<String>,
    pub probe: Option<Probe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRoot {
    pub curve: CurveWord,
    pub root: RootVector,
    pub expression: String,
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveLoop {
    pub curve: CurveWord,
    pub loop_word: LoopWord,
    pub reflection_root: RootVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSimple {
    pub curve: CurveWord,
    pub punctures: usize,
    pub verdict: Simplicity,
    pub certificate: Option<Vec<RootVector>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpiral {
    pub curve: CurveWord,
    pub k: i64,
    pub spiral: CurveWord,
    pub root: RootVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRender {
    pub curve: CurveWord,
    pub path: String,
    pub bytes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationRoot {
    pub root: RootVector,
    pub mutated_root: RootVector,
    pub before: Certainty,
    pub after: Certainty,
    pub agreement: Certainty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub side: String,
    /// 1-based.
    pub order: Vec<usize>,
    pub mutated_order: Vec<usize>,
    pub root: Option<MutationRoot>,
    pub curve: Option<(CurveWord, CurveWord)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repro {
    pub fixture: String,
    pub matches: bool,
    pub output: String,
    pub diff: Vec<String>,
}

pub fn tuple_text(roots: &[RootVector]) -> String {
    roots.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn root_lines(out: &mut String, label: &str, roots: &[RootVector]) {
    let _ = writeln!(out, "{label} ({}): {}", roots.len(), tuple_text(roots));
}

impl Report {
    /// Whether the report contains an Unknown or truncated result.
    pub fn undecided(&self) -> bool {
        match self {
            Report::OrbitCount(r) => !r.complete,
            Report::OrbitDump(r) => !r.complete,
            Report::SchurCheck(r) => r.answer == Certainty::Unknown,
            Report::SchurList(r) => r.entries.iter().any(|e| e.answer == Certainty::Unknown),
            Report::SchurVerify(r) => r.truncated || !r.unknowns.is_empty(),
            Report::NcLeq(r) => r.answer == Certainty::Unknown,
            Report::CurveSimple(r) => matches!(r.verdict, Simplicity::NoWithinBound | Simplicity::Unknown),
            Report::Mutate(r) => r.root.as_ref().is_some_and(|m| m.agreement == Certainty::Unknown),
            _ => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Roots(r) => {
                for root in &r.roots {
                    let _ = writeln!(out, "{root:?}");
                }
                if let Some(h) = r.height_bound {
                    let _ = writeln!(out, "# {} roots of height <= {h}", r.roots.len());
                }
            }
            Report::GroupOrder(r) => match r.order {
                Some(n) => out = format!("{n}\n"),
                None => out = "infinite\n".into(),
            },
            Report::OrbitCount(r) => {
                let _ = writeln!(out, "{}", r.count);
                if !r.complete {
                    let bound = r.height_bound.map(|h| format!(" at height {h}")).unwrap_or_default();
                    let _ = writeln!(out, "# truncated{bound}: the count is a lower bound");
                }
                if let Some(f) = r.formula {
                    let _ = writeln!(out, "# n! h^n / |G| = {f}");
                }
            }
            Report::OrbitDump(r) => {
                for t in &r.tuples {
                    let _ = writeln!(out, "{}", tuple_text(t));
                }
                if !r.complete {
                    let _ = writeln!(out, "# truncated");
                }
            }
            Report::SchurCheck(r) => {
                let _ = writeln!(out, "{}", r.answer);
                if let Some(cw) = &r.curve {
                    let _ = writeln!(out, "curve: {cw}");
                }
                let _ = writeln!(out, "root: {:?}", r.root);
                if let Some(cert) = &r.certificate {
                    let _ = writeln!(out, "certificate: {}", tuple_text(cert));
                    let _ = writeln!(out, "certificate valid: {}", yes_no(r.certificate_valid));
                }
            }
            Report::SchurList(r) => {
                for e in &r.entries {
                    let _ = writeln!(out, "{:?} {}", e.root, e.answer);
                }
                if let Some(h) = r.height_bound {
                    let _ = writeln!(out, "# roots of height <= {h}");
                }
            }
            Report::SchurVerify(r) => {
                let _ = writeln!(out, "height bound: {}", r.height_bound);
                root_lines(&mut out, "prefix", &r.sets.prefix);
                root_lines(&mut out, "curves", &r.sets.curves);
                if let Some(all) = &r.sets.all_positive {
                    root_lines(&mut out, "positive", all);
                }
                let _ = writeln!(out, "prefix = curves: {}", yes_no(r.prefix_equals_curves));
                if let Some(b) = r.prefix_equals_all {
                    let _ = writeln!(out, "prefix = positive: {}", yes_no(b));
                }
                for s in &r.unknowns {
                    let _ = writeln!(out, "unknown {:?}: {}", s.root, s.reason);
                }
                let _ = writeln!(out, "tuples visited: {}", r.tuples_visited);
                let _ = writeln!(out, "pruned: {}", yes_no(r.pruned));
                let _ = writeln!(out, "truncated: {}", yes_no(r.truncated));
            }
            Report::NcList(r) => {
                if let Some(dot) = &r.dot {
                    out.push_str(dot);
                } else {
                    let ranks: Vec<String> = r.rank_vector.iter().map(|k| k.to_string()).collect();
                    let _ = writeln!(out, "size: {}", r.size);
                    let _ = writeln!(out, "ranks: {}", ranks.join(" "));
                    let _ = writeln!(out, "maximal chains: {}", r.maximal_chains);
                    let _ = writeln!(out, "lattice: {}", yes_no(r.is_lattice));
                    for node in &r.nodes {
                        let word = if node.word.is_empty() { "e" } else { &node.word };
                        let _ = write!(out, "{} rank {} [{}]", node.id, node.rank, word);
                        if let Some(root) = &node.root {
                            let _ = write!(out, " root {root:?}");
                        }
                        out.push('\n');
                    }
                    for (a, b) in &r.covers {
                        let _ = writeln!(out, "{a} < {b}");
                    }
                }
            }
            Report::NcLeq(r) => {
                let _ = writeln!(out, "{}", r.answer);
            }
            Report::NcChain(r) => match &r.chain {
                Some(chain) => {
                    let words: Vec<&str> = chain.iter().map(|w| if w.is_empty() { "e" } else { w.as_str() }).collect();
                    let _ = writeln!(out, "chain: {}", words.join(" < "));
                    let _ = writeln!(out, "reflections: {}", tuple_text(&r.reflections));
                }
                None => out.push_str("no chain: the first element is not below the second\n"),
            },
            Report::BraidApply(r) => {
                let _ = writeln!(out, "{}", tuple_text(&r.tuple));
                let _ = writeln!(out, "product is c: {}", yes_no(r.product_is_coxeter));
            }
            Report::BraidStab(r) => {
                for c in &r.checks {
                    let _ = writeln!(out, "{}: {}", c.label, if c.holds { "holds" } else { "fails" });
                }
                for s in &r.skipped {
                    let _ = writeln!(out, "skipped {s}");
                }
                if let Some(p) = &r.probe {
                    match &p.witness {
                        Some((tau, sigma)) => {
                            let _ = writeln!(out, "probe depth {}: conjugating [{tau}] by [{sigma}] leaves the stabilizer", p.depth);
                        }
                        None => {
                            let _ = writeln!(out, "probe depth {}: no conjugate leaves the stabilizer", p.depth);
                        }
                    }
                }
            }
            Report::CurveRoot(r) => {
                let _ = writeln!(out, "{:?}", r.root);
                let _ = writeln!(out, "curve: {}", r.curve);
                let _ = writeln!(out, "expression: {}", r.expression);
            }
            Report::CurveLoop(r) => {
                let _ = writeln!(out, "{}", r.loop_word);
                let _ = writeln!(out, "reflection root: {:?}", r.reflection_root);
            }
            Report::CurveSimple(r) => {
                let verdict = match r.verdict {
                    Simplicity::Yes => "Yes",
                    Simplicity::No => "No",
                    Simplicity::NoWithinBound => "NoWithinBound",
                    Simplicity::Unknown => "Unknown",
                };
                let _ = writeln!(out, "{verdict}");
                let _ = writeln!(out, "curve: {} on {} punctures", r.curve, r.punctures);
                if let Some(cert) = &r.certificate {
                    let _ = writeln!(out, "certificate: {}", tuple_text(cert));
                }
            }
            Report::CurveSpiral(r) => {
                let _ = writeln!(out, "{}", r.spiral);
                let _ = writeln!(out, "root: {:?}", r.root);
            }
            Report::CurveRender(r) => {
                let _ = writeln!(out, "wrote {} ({} bytes)", r.path, r.bytes);
            }
            Report::Mutate(r) => {
                let fmt_order = |o: &[usize]| o.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "{} mutation: order {} -> {}", r.side, fmt_order(&r.order), fmt_order(&r.mutated_order));
                if let Some(m) = &r.root {
                    let _ = writeln!(out, "root {:?}: {}", m.root, m.before);
                    let _ = writeln!(out, "mutated root {:?}: {}", m.mutated_root, m.after);
                    let _ = writeln!(out, "agreement: {}", m.agreement);
                }
                if let Some((a, b)) = &r.curve {
                    let _ = writeln!(out, "curve {a} -> {b}");
                }
            }
            Report::Repro(r) => {
                out.push_str(&r.output);
                if r.matches {
                    let _ = writeln!(out, "# {}: matches expected output", r.fixture);
                } else {
                    let _ = writeln!(out, "# {}: MISMATCH", r.fixture);
                    for line in &r.diff {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
        }
        out
    }
}
