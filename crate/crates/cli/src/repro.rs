//! Named fixtures: each recomputes a worked example and is diffed against
//! a checked-in expected transcript.

use std::fmt::Write;

use anyhow::{bail, Result};
use schur_scope::curves::{canonicalize, loop_of_curve, mutation_word_map, parse_letters, root_of_curve, MutationSide, SimplicityOracle};
use schur_scope::hurwitz::{factorization_count_formula, hurwitz_orbit, stabilizer_check, OrbitBounds};
use schur_scope::schur::{is_schur_root, mutate, mutation_reflection, SchurMethod};
use schur_scope::{preset, BraidLetter, BraidWord, Exec, Factorization, Limits, Orientation, RootVector};

use crate::report::Repro;
use crate::session::parse_order;

pub const FIXTURES: [&str; 4] = ["example-2.6", "example-3.6", "example-4.8", "table-4"];

pub fn expected(name: &str) -> Option<&'static str> {
    Some(match name {
        "example-2.6" => include_str!("../fixtures/example-2.6.expected"),
        "example-3.6" => include_str!("../fixtures/example-3.6.expected"),
        "example-4.8" => include_str!("../fixtures/example-4.8.expected"),
        "table-4" => include_str!("../fixtures/table-4.expected"),
        _ => return None,
    })
}

/// Recomputes the fixture transcript.
pub fn compute(name: &str, exec: Exec) -> Result<String> {
    match name {
        "example-2.6" => example_2_6(),
        "example-3.6" => example_3_6(exec),
        "example-4.8" => example_4_8(exec),
        "table-4" => table_4(exec),
        other => bail!("unknown fixture '{other}' (available: {})", FIXTURES.join(", ")),
    }
}

pub fn run(name: &str, exec: Exec) -> Result<Repro> {
    let output = compute(name, exec)?;
    let want = expected(name).expect("every computable fixture has a transcript");
    let diff = diff_lines(want, &output);
    Ok(Repro { fixture: name.to_string(), matches: diff.is_empty(), output, diff })
}

/// Line-by-line differences as `-expected` / `+actual` pairs.
pub fn diff_lines(want: &str, got: &str) -> Vec<String> {
    let w: Vec<&str> = want.lines().collect();
    let g: Vec<&str> = got.lines().collect();
    let mut out = Vec::new();
    for i in 0..w.len().max(g.len()) {
        let (a, b) = (w.get(i), g.get(i));
        if a != b {
            out.push(format!("line {}:", i + 1));
            if let Some(a) = a {
                out.push(format!("-{a}"));
            }
            if let Some(b) = b {
                out.push(format!("+{b}"));
            }
        }
    }
    out
}

fn orient(name: &str, order: &str) -> Result<Orientation> {
    let o = Orientation::standard(preset(name)?);
    Ok(o.reordered(parse_order(order)?)?)
}

fn word_text(letters: &[usize]) -> String {
    letters.iter().map(|l| format!("s_{}", l + 1)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn example_2_6() -> Result<String> {
    let o = orient("A3", "1,2,3")?;
    let group = o.group();
    let mut out = String::new();
    let _ = writeln!(out, "type: A3");
    let _ = writeln!(out, "c: {}", word_text(o.order()));

    let gamma = canonicalize(&parse_letters("2")?, 2);
    let gamma_root = root_of_curve(&gamma, group)?;
    let lp = loop_of_curve(&gamma);
    let r = group.reflection_for_root(&gamma_root)?;
    let _ = writeln!(out, "gamma: {gamma}");
    let _ = writeln!(out, "gamma root: {gamma_root}");
    let _ = writeln!(out, "gamma expression: {}", gamma.root_expression());
    let _ = writeln!(out, "gamma loop: {lp}");
    let _ = writeln!(out, "gamma reflection: {}", word_text(&lp.0));
    let _ = writeln!(out, "loop presents r_gamma: {}", yes_no(group.word_element(&lp.0)? == r.element));
    let simple = SimplicityOracle::new(3)?.check(&gamma, &Limits::default())?;
    let _ = writeln!(out, "gamma simple: {}", simple.verdict);

    let raw = parse_letters("2,3")?;
    let beta = canonicalize(&raw, 2);
    let raw_root = group.apply_word(&raw, &RootVector::simple(3, 2))?;
    let beta_root = root_of_curve(&beta, group)?;
    let _ = writeln!(out, "beta word: {}α_3", word_text(&raw));
    let _ = writeln!(out, "beta raw root: {raw_root}");
    let _ = writeln!(out, "beta: {beta}");
    let _ = writeln!(out, "beta sign: {}", beta.sign());
    let _ = writeln!(out, "beta root: {beta_root}");
    let _ = writeln!(out, "beta expression: {}", beta.root_expression());
    let _ = writeln!(out, "beta = -gamma: {}", yes_no(beta_root == gamma_root.neg() && raw_root == beta_root));
    Ok(out)
}

fn example_3_6(exec: Exec) -> Result<String> {
    let limits = Limits { exec, ..Limits::default() };
    let mut out = String::new();
    for name in ["universal:3:2", "A3"] {
        let o = orient(name, "1,2,3")?;
        let group = o.group();
        let beta = canonicalize(&parse_letters("2,3")?, 1);
        let root = root_of_curve(&beta, group)?;
        let _ = writeln!(out, "[{name}]");
        let _ = writeln!(out, "c: {}", word_text(o.order()));
        let _ = writeln!(out, "beta: {beta} = {}", beta.root_expression());
        let _ = writeln!(out, "beta root: {root}");
        let _ = writeln!(out, "beta schur: {}", is_schur_root(&root, &o, &limits, SchurMethod::Auto)?.answer);
        for (label, side) in [("source", MutationSide::Source), ("sink", MutationSide::Sink)] {
            let m = mutate(&o, side);
            let s = mutation_reflection(&o, side);
            let mapped = mutation_word_map(&beta, side, &o);
            let mapped_root = root_of_curve(&mapped, group)?;
            let letter = match side {
                MutationSide::Source => o.source(),
                MutationSide::Sink => o.sink(),
            };
            let _ = writeln!(out, "{label}: s_{}", letter + 1);
            let _ = writeln!(out, "{label} c: {}", word_text(m.order()));
            let _ = writeln!(out, "{label} c = s c s: {}", yes_no(*m.coxeter() == s.compose(o.coxeter()).compose(s)));
            let _ = writeln!(out, "{label} curve: {mapped} = {}", mapped.root_expression());
            let _ = writeln!(out, "{label} root: {mapped_root}");
            let _ = writeln!(out, "{label} root = s beta: {}", yes_no(mapped_root == s.apply(&root)));
            let _ = writeln!(out, "{label} schur: {}", is_schur_root(&mapped_root, &m, &limits, SchurMethod::Auto)?.answer);
        }
    }
    Ok(out)
}

fn example_4_8(exec: Exec) -> Result<String> {
    let mut out = String::new();
    for name in ["A2", "G2"] {
        let o = orient(name, "1,2")?;
        let orbit = hurwitz_orbit(&Factorization::canonical(&o), OrbitBounds { exec, ..OrbitBounds::capped(1_000_000) });
        let _ = writeln!(out, "{name} index: {}", orbit.len());
        let mut smallest = None;
        for k in 1..=12 {
            let word = BraidWord(vec![BraidLetter::sigma(0)]).pow(k);
            if stabilizer_check(&word, &o)? {
                smallest = Some(k);
                break;
            }
        }
        match smallest {
            Some(k) => {
                let _ = writeln!(out, "{name} stabilizer generator: sigma_1^{k}");
            }
            None => {
                let _ = writeln!(out, "{name} stabilizer generator: none up to sigma_1^12");
            }
        }
    }
    Ok(out)
}

fn table_4(exec: Exec) -> Result<String> {
    let mut out = String::new();
    for name in ["A2", "B2", "G2", "A3", "B3", "A4", "D4"] {
        let o = Orientation::standard(preset(name)?);
        let group = o.group();
        let orbit = hurwitz_orbit(&Factorization::canonical(&o), OrbitBounds { exec, ..OrbitBounds::capped(1_000_000) });
        let h = group.cartan().coxeter_number()?;
        let order = group.group_order(exec)?;
        let formula = factorization_count_formula(group, exec)?;
        let _ = writeln!(out, "{name}: orbit {} formula {formula} h {h} |G| {order}", orbit.len());
    }
    Ok(out)
}
