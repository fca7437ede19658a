use std::process::Command;

use schur_scope::hurwitz::{hurwitz_orbit, OrbitBounds};
use schur_scope::ncposet::{enumerate_nc, poset_properties};
use schur_scope::schur::{is_schur_root, SchurMethod};
use schur_scope::{preset, Exec, Factorization, Limits, Orientation, RootVector};
use schur_scope_cli::report::Report;
use schur_scope_cli::{repro, run, svg};

fn cli(args: &[&str]) -> schur_scope_cli::Outcome {
    let argv = std::iter::once("schur-scope").chain(args.iter().copied());
    run(argv, None)
}

fn json(args: &[&str]) -> (Report, String) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = cli(&full);
    assert!(out.code != 1, "{args:?}: {}", out.stderr);
    let report: Report = serde_json::from_str(&out.stdout).unwrap();
    (report, out.stdout)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schur-scope"))
}

const REPORT_COMMANDS: &[&[&str]] = &[
    &["--type", "B2", "roots", "list", "--all"],
    &["--type", "universal:2:2", "--height", "5", "roots", "list"],
    &["--type", "G2", "group", "order"],
    &["--type", "affine-A2", "group", "order"],
    &["--type", "A3", "orbit", "count"],
    &["--type", "universal:3:2", "--height", "3", "orbit", "count"],
    &["--type", "A2", "orbit", "dump"],
    &["--type", "A2", "schur", "check", "--root", "1,1"],
    &["--type", "universal:3:2", "schur", "check", "--word", "2,3", "--end", "2", "--generic"],
    &["--type", "B2", "schur", "list"],
    &["--type", "A3", "schur", "verify"],
    &["--type", "universal:2:2", "--height", "8", "schur", "verify"],
    &["--type", "A3", "nc", "list"],
    &["--type", "A2", "nc", "list", "--dot"],
    &["--type", "A3", "nc", "leq", "--u", "1", "--w", "1,2,3"],
    &["--type", "A3", "nc", "chain"],
    &["--type", "A3", "nc", "chain", "--from", "1,2", "--to", "2"],
    &["--type", "A3", "braid", "apply", "--word", "1,-2"],
    &["--type", "A3", "braid", "stab", "--word", "1,1,1", "--twist", "-1", "--probe", "1"],
    &["--type", "B3", "braid", "stab", "--lemma"],
    &["--type", "A3", "curve", "root", "--word", "2,3", "--end", "3"],
    &["--type", "A3", "curve", "loop", "--word", "2", "--end", "3", "--neg"],
    &["--type", "universal:3:2", "curve", "simple", "--word", "2", "--end", "3"],
    &["--type", "universal:3:2", "curve", "simple", "--word", "2,1", "--end", "3"],
    &["--type", "A3", "curve", "spiral", "--word", "2", "--end", "3", "--k", "-2"],
    &["--type", "universal:3:2", "mutate", "sink", "--root", "0,3,2", "--word", "2,3", "--end", "2"],
    &["repro", "example-2.6"],
    &["repro", "table-4"],
];

#[test]
fn json_round_trips_for_every_report_kind() {
    for args in REPORT_COMMANDS {
        let (report, text) = json(args);
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        let reparsed: Report = serde_json::from_str(&again).unwrap();
        assert_eq!(reparsed, report, "{args:?}");
    }
}

#[test]
fn spec_examples() {
    let out = cli(&["--type", "A3", "orbit", "count"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("16"));

    let out = cli(&["--type", "A2", "schur", "check", "--root", "1,1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("Yes"));
    assert!(out.stdout.contains("certificate: (1,1) (1,0)"));

    let out = cli(&["--type", "universal:3:2", "curve", "simple", "--word", "2", "--end", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("Yes"));
}

#[test]
fn reports_are_thin_adapters_over_core() {
    let o = Orientation::standard(preset("B3").unwrap());
    let orbit = hurwitz_orbit(&Factorization::canonical(&o), OrbitBounds::capped(1_000_000));
    let (report, _) = json(&["--type", "B3", "orbit", "count"]);
    let Report::OrbitCount(r) = report else { panic!() };
    assert_eq!(r.count as usize, orbit.len());
    assert!(r.complete);

    let (report, _) = json(&["--type", "B3", "orbit", "dump"]);
    let Report::OrbitDump(r) = report else { panic!() };
    let direct: Vec<Vec<RootVector>> = orbit.factorizations.iter().map(Factorization::roots).collect();
    assert_eq!(r.tuples, direct);

    let beta = RootVector(vec![1, 1, 1]);
    let v = is_schur_root(&beta, &o, &Limits::default(), SchurMethod::Auto).unwrap();
    let (report, _) = json(&["--type", "B3", "schur", "check", "--root", "1,1,1"]);
    let Report::SchurCheck(r) = report else { panic!() };
    assert_eq!(r.answer, v.answer);
    assert_eq!(r.certificate, v.certificate.as_ref().map(Factorization::roots));
    assert!(r.certificate_valid);

    let p = enumerate_nc(&o, Exec::Sequential).unwrap();
    let (report, _) = json(&["--type", "B3", "nc", "list"]);
    let Report::NcList(r) = report else { panic!() };
    assert_eq!(r.size, poset_properties(&p).size);
    assert_eq!(r.covers, p.covers);
}

#[test]
fn orders_and_caps() {
    let (report, _) = json(&["--type", "A3", "--order", "2,3,1", "mutate", "source"]);
    let Report::Mutate(r) = report else { panic!() };
    assert_eq!(r.order, vec![2, 3, 1]);
    assert_eq!(r.mutated_order, vec![3, 1, 2]);

    let out = run(["schur-scope", "--type", "A3", "orbit", "count"], Some("orbit=5"));
    assert_eq!(out.code, 2);
    assert_eq!(out.stdout.lines().next(), Some("5"));
    let out = run(["schur-scope", "--type", "A3", "--orbit-cap", "100", "orbit", "count"], Some("orbit=5"));
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("16"));

    let out = run(["schur-scope", "--type", "A3", "orbit", "count"], Some("orbit=x"));
    assert_eq!(out.code, 1);
    assert!(cli(&["--type", "A3", "--height", "0", "roots", "list"]).code == 1);
    assert!(cli(&["--type", "A3", "--order", "1,1,2", "orbit", "count"]).code == 1);
}

#[test]
fn cartan_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.txt");
    std::fs::write(&path, "2\n2 -1\n-3 2\n").unwrap();
    let out = cli(&["--cartan", path.to_str().unwrap(), "orbit", "count"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next(), Some("6"));
    std::fs::write(&path, "2\n2 -1\n0 2\n").unwrap();
    assert_eq!(cli(&["--cartan", path.to_str().unwrap(), "orbit", "count"]).code, 1);
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str], env: Option<&str>| {
        let mut cmd = bin();
        cmd.args(args).env_remove("SCHUR_SCOPE_CAPS");
        if let Some(e) = env {
            cmd.env("SCHUR_SCOPE_CAPS", e);
        }
        let out = cmd.output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, stdout) = status(&["--type", "A3", "orbit", "count"], None);
    assert_eq!((code, stdout.lines().next()), (0, Some("16")));
    assert_eq!(status(&["--type", "universal:3:2", "--height", "3", "orbit", "count"], None).0, 2);
    assert_eq!(status(&["--type", "A3", "orbit", "count"], Some("orbit=3")).0, 2);
    assert_eq!(status(&["--type", "Z9", "orbit", "count"], None).0, 1);
    assert_eq!(status(&["--type", "A3", "orbit", "tally"], None).0, 1);
    assert_eq!(status(&["orbit", "count"], None).0, 1);
    assert_eq!(status(&["--type", "A2", "schur", "check", "--root", "1,2"], None).0, 1);
    assert_eq!(status(&["repro", "example-0.0"], None).0, 1);
    assert_eq!(status(&["--help"], None).0, 0);
    assert_eq!(status(&["--version"], None).0, 0);
}

#[test]
fn undecided_results_exit_two() {
    let out = cli(&["--type", "universal:3:2", "--orbit-cap", "2", "curve", "simple", "--word", "2,1", "--end", "3"]);
    assert_eq!(out.code, 0, "the exact length route decides without the orbit");
    let out = cli(&["--type", "universal:2:2", "--height", "6", "schur", "verify"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = cli(&["--type", "universal:3:2", "--height", "6", "--orbit-cap", "10", "schur", "verify"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("truncated: yes"));
}

#[test]
fn golden_svgs() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("curve-2-3.svg", vec!["--word", "2", "--end", "3"]),
        ("curve-neg-2-3.svg", vec!["--word", "2,3", "--end", "3"]),
        ("fan-2.svg", vec!["--end", "2"]),
    ] {
        let out_path = dir.path().join(name);
        let mut argv = vec!["--type", "A3", "curve", "render"];
        argv.extend(args);
        argv.extend(["--out", out_path.to_str().unwrap()]);
        let out = cli(&argv);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let got = std::fs::read_to_string(&out_path).unwrap();
        let want = std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
        assert_eq!(got, want, "{name}");
    }
    assert!(svg::render_curve_svg(&"-2|3".parse().unwrap(), 3).contains(svg::SCHEMATIC_LABEL));
    let out = cli(&["--type", "A3", "curve", "render", "--end", "2", "--out", "/nonexistent-dir/x.svg"]);
    assert_eq!(out.code, 1);
}

#[test]
fn repro_is_byte_stable() {
    for name in repro::FIXTURES {
        let first = cli(&["repro", name]);
        let second = cli(&["--sequential", "repro", name]);
        assert_eq!(first.code, 0, "{name}: {}", first.stdout);
        assert_eq!(first.stdout, second.stdout);
        let r = repro::run(name, Exec::Sequential).unwrap();
        assert!(r.matches, "{:?}", r.diff);
        assert_eq!(r.output, repro::expected(name).unwrap());
    }
}

#[test]
fn curve_inputs() {
    let out = cli(&["--type", "A3", "curve", "root", "--word", "2,3", "--end", "3"]);
    assert_eq!(out.stdout.lines().collect::<Vec<_>>(), ["(0,-1,-1)", "curve: -2|3", "expression: -s_2α_3"]);
    let out = cli(&["--type", "A3", "curve", "loop", "--word", "2", "--end", "3"]);
    assert_eq!(out.stdout.lines().next(), Some("2,3,2"));
    assert_eq!(cli(&["--type", "A3", "curve", "root", "--word", "4", "--end", "3"]).code, 1);
    assert_eq!(cli(&["--type", "A3", "curve", "root", "--word", "2"]).code, 1);
}
