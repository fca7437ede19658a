use anyhow::{bail, Context, Result};
use schur_scope::curves::{
    canonicalize, loop_of_curve, mutation_word_map, parse_letters, reflection_of_curve, root_of_curve, spiral,
    MutationSide, SimplicityOracle,
};
use schur_scope::hurwitz::{
    factorization_count_formula, full_twist_identity_check, hurwitz_orbit, lemma_stabilizer_words, normality_probe,
    stabilizer_check, OrbitBounds,
};
use schur_scope::ncposet::{absolute_leq, enumerate_nc, interval_factorization, poset_dot, poset_dump, poset_properties};
use schur_scope::schur::{is_schur_root, mutate, mutation_equivalence_check, verify_conjecture, SchurMethod};
use schur_scope::{BraidWord, CurveWord, Factorization, RootVector, WeylElement, WeylGroup};

use crate::args::{BraidCmd, Command, CurveCmd, CurveInput, GroupCmd, MutateArgs, NcCmd, OrbitCmd, RootsCmd, SchurCmd};
use crate::report::*;
use crate::session::Session;
use crate::{repro, svg};

pub fn dispatch(session: &Session, command: &Command) -> Result<Report> {
    match command {
        Command::Roots(RootsCmd::List { all }) => roots_list(session, *all),
        Command::Group(GroupCmd::Order) => group_order(session),
        Command::Orbit(OrbitCmd::Count) => orbit(session, false),
        Command::Orbit(OrbitCmd::Dump) => orbit(session, true),
        Command::Schur(SchurCmd::Check { root, curve, generic }) => schur_check(session, root.as_deref(), curve, *generic),
        Command::Schur(SchurCmd::List { generic }) => schur_list(session, *generic),
        Command::Schur(SchurCmd::Verify) => {
            Ok(Report::SchurVerify(verify_conjecture(&session.orientation, session.caps.height, &session.limits())?))
        }
        Command::Nc(NcCmd::List { dot }) => nc_list(session, *dot),
        Command::Nc(NcCmd::Leq { u, w }) => nc_leq(session, u, w),
        Command::Nc(NcCmd::Chain { from, to }) => nc_chain(session, from.as_deref(), to.as_deref()),
        Command::Braid(BraidCmd::Apply { word }) => braid_apply(session, word),
        Command::Braid(BraidCmd::Stab { word, lemma, twist, probe }) => {
            braid_stab(session, word.as_deref(), *lemma, *twist, *probe)
        }
        Command::Curve(cmd) => curve(session, cmd),
        Command::Mutate(args) => mutation(session, args),
        Command::Repro(args) => Ok(Report::Repro(repro::run(&args.fixture, session.exec)?)),
    }
}

/// Canonical curve from the `--word/--end/--neg` flags.
pub fn curve_from(input: &CurveInput, n: usize) -> Result<CurveWord> {
    let end = input.end.context("--end is required for a curve")?;
    if end == 0 {
        bail!("--end is 1-based");
    }
    let letters = parse_letters(input.word.as_deref().unwrap_or(""))?;
    let mut cw = canonicalize(&letters, end - 1);
    if input.neg {
        cw = cw.negated();
    }
    cw.check_rank(n)?;
    Ok(cw)
}

fn parse_root(text: &str, n: usize) -> Result<RootVector> {
    let root: RootVector = text.parse()?;
    if root.dim() != n {
        bail!("root {text} has {} coordinates, expected {n}", root.dim());
    }
    Ok(root)
}

/// Element from a 1-based simple-reflection word; `e` or empty is the identity.
pub fn element_from_word(text: &str, group: &WeylGroup) -> Result<WeylElement> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(group.identity());
    }
    Ok(group.word_element(&parse_letters(text)?)?)
}

pub fn element_word(w: &WeylElement, group: &WeylGroup) -> Result<String> {
    let word = group.reduced_word(w)?;
    Ok(word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","))
}

fn height_bound(session: &Session) -> Option<i64> {
    (!session.group().is_finite()).then_some(session.caps.height)
}

fn roots_list(session: &Session, all: bool) -> Result<Report> {
    let group = session.group();
    let h = session.caps.height;
    let roots = if all { group.enumerate_real_roots(h) } else { group.positive_real_roots(h) };
    Ok(Report::Roots(RootList { height_bound: height_bound(session), roots }))
}

fn group_order(session: &Session) -> Result<Report> {
    let group = session.group();
    let order = if group.is_finite() { Some(u64::try_from(group.group_order(session.exec)?)?) } else { None };
    Ok(Report::GroupOrder(GroupOrder { order }))
}

fn orbit(session: &Session, dump: bool) -> Result<Report> {
    let o = &session.orientation;
    let bounds = OrbitBounds { node_cap: session.caps.orbit, max_height: height_bound(session), exec: session.exec };
    let orbit = hurwitz_orbit(&Factorization::canonical(o), bounds);
    if dump {
        let tuples = orbit.factorizations.iter().map(Factorization::roots).collect();
        return Ok(Report::OrbitDump(OrbitDump { complete: orbit.complete, pruned: orbit.pruned, tuples }));
    }
    let formula = if o.group().is_finite() {
        Some(u64::try_from(factorization_count_formula(o.group(), session.exec)?)?)
    } else {
        None
    };
    Ok(Report::OrbitCount(OrbitCount {
        count: orbit.len() as u64,
        complete: orbit.complete,
        pruned: orbit.pruned,
        height_bound: bounds.max_height,
        formula,
    }))
}

fn method(generic: bool) -> SchurMethod {
    if generic {
        SchurMethod::Generic
    } else {
        SchurMethod::Auto
    }
}

fn schur_check(session: &Session, root: Option<&str>, curve: &CurveInput, generic: bool) -> Result<Report> {
    let o = &session.orientation;
    let n = session.rank();
    let (root, curve) = match root {
        Some(text) => (parse_root(text, n)?, None),
        None => {
            let cw = curve_from(curve, n).context("give --root or a curve via --word/--end")?;
            (root_of_curve(&cw, o.group())?, Some(cw))
        }
    };
    let verdict = is_schur_root(&root, o, &session.limits(), method(generic))?;
    let certificate_valid = verdict.validates(&root, o);
    Ok(Report::SchurCheck(SchurCheck {
        root,
        curve,
        generic,
        answer: verdict.answer,
        certificate: verdict.certificate.as_ref().map(Factorization::roots),
        certificate_valid,
    }))
}

fn schur_list(session: &Session, generic: bool) -> Result<Report> {
    let o = &session.orientation;
    let limits = session.limits();
    let entries = o
        .group()
        .positive_real_roots(session.caps.height)
        .into_iter()
        .map(|root| {
            let answer = is_schur_root(&root, o, &limits, method(generic))?.answer;
            Ok(SchurEntry { root, answer })
        })
        .collect::<Result<_>>()?;
    Ok(Report::SchurList(SchurList { height_bound: height_bound(session), entries }))
}

fn nc_list(session: &Session, dot: bool) -> Result<Report> {
    let o = &session.orientation;
    let group = o.group();
    let poset = enumerate_nc(o, session.exec)?;
    let props = poset_properties(&poset);
    let dump = poset_dump(&poset, group);
    let nodes = dump
        .nodes
        .iter()
        .zip(&poset.elements)
        .map(|(node, w)| {
            Ok(NcNode { id: node.id, rank: node.rank, word: element_word(w, group)?, root: node.root.clone() })
        })
        .collect::<Result<_>>()?;
    Ok(Report::NcList(NcList {
        size: props.size,
        rank_vector: props.rank_vector,
        maximal_chains: u64::try_from(props.maximal_chains)?,
        is_lattice: props.is_lattice,
        nodes,
        covers: dump.covers.clone(),
        dot: dot.then(|| poset_dot(&dump)),
    }))
}

fn nc_leq(session: &Session, u: &str, w: &str) -> Result<Report> {
    let group = session.group();
    let (eu, ew) = (element_from_word(u, group)?, element_from_word(w, group)?);
    let cap = session.limits().length_cap_for(session.rank());
    let answer = absolute_leq(&eu, &ew, group, cap);
    Ok(Report::NcLeq(NcLeq { u: element_word(&eu, group)?, w: element_word(&ew, group)?, answer }))
}

fn nc_chain(session: &Session, from: Option<&str>, to: Option<&str>) -> Result<Report> {
    let o = &session.orientation;
    let group = o.group();
    let poset = enumerate_nc(o, session.exec)?;
    let pick = |text: Option<&str>, default: usize| -> Result<usize> {
        match text {
            None => Ok(default),
            Some(t) => {
                let w = element_from_word(t, group)?;
                poset.index_of(&w).with_context(|| format!("element [{t}] is not below c in absolute order"))
            }
        }
    };
    let (a, b) = (pick(from, poset.bottom)?, pick(to, poset.top)?);
    let (from, to) = (element_word(&poset.elements[a], group)?, element_word(&poset.elements[b], group)?);
    let Some(path) = poset.chain_between(a, b) else {
        return Ok(Report::NcChain(NcChain { from, to, chain: None, reflections: vec![] }));
    };
    let witness = interval_factorization(&poset.elements[a], &poset.elements[b], &poset, group)?;
    let chain = path.iter().map(|&i| element_word(&poset.elements[i], group)).collect::<Result<_>>()?;
    let reflections = witness.between.iter().map(|t| t.root.clone()).collect();
    Ok(Report::NcChain(NcChain { from, to, chain: Some(chain), reflections }))
}

fn parse_braid(text: &str, n: usize) -> Result<BraidWord> {
    let word: BraidWord = text.parse()?;
    word.check_strands(n)?;
    Ok(word)
}

fn braid_apply(session: &Session, text: &str) -> Result<Report> {
    let o = &session.orientation;
    let word = parse_braid(text, session.rank())?;
    let moved = Factorization::canonical(o).apply_braid_word(&word)?;
    Ok(Report::BraidApply(BraidApply {
        word: word.to_string(),
        tuple: moved.roots(),
        product_is_coxeter: moved.product() == *o.coxeter(),
    }))
}

fn braid_stab(
    session: &Session,
    word: Option<&str>,
    lemma: bool,
    twist: Option<i64>,
    probe: Option<usize>,
) -> Result<Report> {
    let o = &session.orientation;
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    if let Some(text) = word {
        let w = parse_braid(text, session.rank())?;
        checks.push(StabCheck { label: format!("[{w}] fixes the tuple"), word: w.to_string(), holds: stabilizer_check(&w, o)? });
    }
    let lemma = lemma || (word.is_none() && twist.is_none() && probe.is_none());
    if lemma {
        let (words, diagnostics) = lemma_stabilizer_words(o);
        for sw in words {
            let holds = stabilizer_check(&sw.word, o)?;
            checks.push(StabCheck { label: format!("{} fixes the tuple", sw.label), word: sw.word.to_string(), holds });
        }
        skipped = diagnostics;
    }
    if let Some(k) = twist {
        let n = session.rank();
        let word = if n >= 2 { BraidWord::descending(n - 2, 0).pow(n as i64 * k) } else { BraidWord::default() };
        checks.push(StabCheck {
            label: format!("full twist k={k} conjugates the tuple by c^{k}"),
            word: word.to_string(),
            holds: full_twist_identity_check(o, k),
        });
    }
    let probe = match probe {
        Some(depth) => {
            let witness = normality_probe(o, depth)?.map(|(tau, sigma)| (tau.to_string(), sigma.to_string()));
            Some(Probe { depth, witness })
        }
        None => None,
    };
    Ok(Report::BraidStab(BraidStab { checks, skipped, probe }))
}

fn curve(session: &Session, cmd: &CurveCmd) -> Result<Report> {
    let o = &session.orientation;
    let n = session.rank();
    match cmd {
        CurveCmd::Root(input) => {
            let cw = curve_from(input, n)?;
            let root = root_of_curve(&cw, o.group())?;
            Ok(Report::CurveRoot(CurveRoot { expression: cw.root_expression(), sign: cw.sign(), curve: cw, root }))
        }
        CurveCmd::Loop(input) => {
            let cw = curve_from(input, n)?;
            let reflection = reflection_of_curve(&cw, o.group())?;
            Ok(Report::CurveLoop(CurveLoop { loop_word: loop_of_curve(&cw), curve: cw, reflection_root: reflection.root }))
        }
        CurveCmd::Simple(input) => {
            let cw = curve_from(input, n)?;
            let report = SimplicityOracle::new(n)?.check(&cw, &session.limits())?;
            Ok(Report::CurveSimple(CurveSimple {
                curve: cw,
                punctures: n,
                verdict: report.verdict,
                certificate: report.certificate.as_ref().map(Factorization::roots),
            }))
        }
        CurveCmd::Spiral { curve, k } => {
            let cw = curve_from(curve, n)?;
            let spun = spiral(&cw, o, *k);
            let root = root_of_curve(&spun, o.group())?;
            Ok(Report::CurveSpiral(CurveSpiral { curve: cw, k: *k, spiral: spun, root }))
        }
        CurveCmd::Render { curve, out } => {
            let cw = curve_from(curve, n)?;
            let svg = svg::render_curve_svg(&cw, n);
            std::fs::write(out, &svg).with_context(|| format!("writing {}", out.display()))?;
            Ok(Report::CurveRender(CurveRender { curve: cw, path: out.display().to_string(), bytes: svg.len() }))
        }
    }
}

fn mutation(session: &Session, args: &MutateArgs) -> Result<Report> {
    let o = &session.orientation;
    let n = session.rank();
    let side: MutationSide = args.side.parse()?;
    let mutated = mutate(o, side);
    let one_based = |order: &[usize]| order.iter().map(|i| i + 1).collect::<Vec<_>>();
    let root = match &args.root {
        Some(text) => {
            let beta = parse_root(text, n)?;
            let check = mutation_equivalence_check(&beta, o, side, &session.limits(), SchurMethod::Auto)?;
            Some(MutationRoot {
                agreement: check.agreement(),
                root: check.root,
                mutated_root: check.mutated_root,
                before: check.before,
                after: check.after,
            })
        }
        None => None,
    };
    let curve = match args.curve.end {
        Some(_) => {
            let cw = curve_from(&args.curve, n)?;
            let mapped = mutation_word_map(&cw, side, o);
            Some((cw, mapped))
        }
        None => None,
    };
    let side = match side {
        MutationSide::Source => "source",
        MutationSide::Sink => "sink",
    };
    Ok(Report::Mutate(Mutation {
        side: side.into(),
        order: one_based(o.order()),
        mutated_order: one_based(mutated.order()),
        root,
        curve,
    }))
}
