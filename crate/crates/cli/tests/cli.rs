use mdeg_core::degree_estimates::FeasibilityVerdict;
use mdeg_core::h_reduction::ReductionSummary;
use mdeg_core::lemma_verifier::decompose::DecompositionSummary;
use mdeg_core::lemma_verifier::{CollapseReport, ContradictionReport, IdentityReport};
use mdeg_core::mdeg_criteria::{Classification, Verdict};
use std::path::PathBuf;
use std::process::Command;

/// Runs the library entry point and returns `(exit code, stdout, stderr)`.
fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = mdeg_cli::dispatch(std::iter::once("mdeg").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(code <= 1, "exit {code}: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}"))
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mdeg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn golden_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["classify", "4", "5", "6"], 0),
        (&["classify", "4", "6", "8"], 0),
        (&["classify", "--dim", "2", "3", "6"], 0),
        (&["classify", "4", "5"], 2),
        (&["classify", "--dim", "2", "0", "6"], 2),
        (&["classify", "0", "5", "6"], 2),
        (&["bracket", "x^2", "y"], 0),
        (&["bracket", "x^", "y"], 2),
        (&["hreduce", "--H", "x^2 + y*z", "--P", "x"], 0),
        (&["hreduce", "--H", "x^2", "--P", "x^4"], 2),
        (&["subound", "4", "5", "2", "1", "0"], 0),
        (&["subound", "5", "4", "2", "1", "0"], 2),
        (&["semigroup", "4", "5", "6"], 0),
        (&["semigroup", "0", "5", "6"], 2),
        (&["feasible", "6", "4", "5", "2"], 0),
        (&["decompose", "--F4", "x^4", "--G6", "5*x^6"], 0),
        (&["decompose", "--F4", "x^3", "--G6", "x^6"], 2),
        (&["collapse", "x + y^2", "y"], 0),
        (&["verify-lemma", "SQF-6", "--trials", "5"], 0),
        (&["verify-lemma", "PWR-5-span/E-3bA", "--trials", "5"], 1),
        (&["verify-lemma", "SQF-3"], 2),
        (&["verify-lemma", "SQF-9", "--trials", "0"], 2),
        (&["contradiction", "sqf"], 0),
        (&["contradiction", "pwr2", "--sweep", "0"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, want) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, *want, "{args:?}\nstdout: {out}\nstderr: {err}");
        if *want == 2 {
            assert!(!err.is_empty(), "{args:?} gave no diagnostic");
        }
    }
}

#[test]
fn text_outputs() {
    let (_, out, _) = run(&["classify", "4", "5", "6"]);
    assert!(out.starts_with("NotRealizable [R8]"), "{out}");
    let (_, out, _) = run(&["bracket", "x^2", "y"]);
    assert_eq!(out, "[x,y]: 2*x\ndeg = 3\n");
    let (_, out, _) = run(&["semigroup", "4", "5", "6"]);
    assert_eq!(out.trim(), "false");
    let (_, out, _) = run(&["subound", "4", "5", "2", "1", "0"]);
    assert_eq!(out.trim(), "13");
    let (_, out, _) = run(&["feasible", "6", "4", "5", "2"]);
    assert!(out.contains("contradiction") && out.trim_end().ends_with("verdict: infeasible"), "{out}");
    let (_, out, _) = run(&["decompose", "--F4", "x^4", "--G6", "5*x^6"]);
    assert_eq!(out.trim(), "Power h = x alpha = 5");
}

#[test]
fn json_round_trips() {
    let c: Classification = json(&["classify", "3", "4", "5"]);
    assert_eq!(c.verdict, Verdict::NotRealizable);
    let c: Classification = json(&["classify", "--dim", "2", "4", "12"]);
    assert_eq!(c.verdict, Verdict::Realizable);

    let r: IdentityReport = json(&["verify-lemma", "PWR-7", "--trials", "7", "--seed", "11"]);
    assert!(r.ok());
    assert_eq!((r.trials, r.seed), (7, 11));

    let r: IdentityReport = json(&["verify-lemma", "SQF-6/+2bHF2", "--trials", "4"]);
    assert!(!r.ok());
    assert!(!r.failures[0].inputs.is_empty());

    let v: FeasibilityVerdict = json(&["feasible", "4", "5", "6", "2"]);
    assert!(!v.feasible);

    let s: ReductionSummary = json(&["hreduce", "--H", "x^2 + y*z", "--P", "-2*x^4 - 4*x^2*y*z - 2*y^2*z^2"]);
    assert_eq!(s, ReductionSummary::MonomialInH { a: "-2".into(), k: 2 });

    let d: DecompositionSummary = json(&["decompose", "--F4", "2*x^4", "--G6", "x^6"]);
    assert!(matches!(d, DecompositionSummary::NeedsFieldExtension { k: 4, .. }), "{d:?}");

    let c: CollapseReport = json(&["collapse", "x + y^2", "y"]);
    assert!(matches!(c, CollapseReport::HypothesisNotMet { .. } | CollapseReport::Consistent { .. }), "{c:?}");

    let reports: Vec<ContradictionReport> = json(&["contradiction", "pwr1", "--sweep", "3"]);
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r.confirmed));
}

#[test]
fn same_seed_same_report() {
    let a = run(&["--json", "verify-lemma", "SQF-8", "--trials", "6", "--seed", "5"]);
    let b = run(&["--json", "verify-lemma", "SQF-8", "--trials", "6", "--seed", "5"]);
    assert_eq!(a, b);
}

#[test]
fn scenario_files() {
    let ok = temp_file(
        "sqf5.txt",
        "# squarefree chain at its terminal level\nbranch = squarefree\nlevel = 5\nH = x^2 + y*z\nalpha = 1\nc = 4\n",
    );
    let (code, out, err) = run(&["scenario", ok.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("deg[F,G] = 4 (level 5)"), "{out}");

    let pwr = temp_file("pwr7.txt", "branch = upper\nlevel = 7\nh = x\nalpha = 2\nb = 1\n");
    let (code, out, err) = run(&["--json", "scenario", pwr.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["below_level"], true);

    let bad = temp_file("bad.txt", "branch = squarefree\nlevel = 5\nbeta = 1\n");
    assert_eq!(run(&["scenario", bad.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["scenario", "/nonexistent/scenario.txt"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mdeg");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["classify", "4", "5", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("NotRealizable"));
    assert_eq!(status(&["classify", "4", "5"]).status.code(), Some(2));
    assert_eq!(status(&["verify-lemma", "PWR-5-span/E-3bA", "--trials", "3"]).status.code(), Some(1));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}

#[test]
fn negative_polynomials_are_arguments() {
    let (code, out, err) = run(&["bracket", "-x^2", "-y"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "[x,y]: 2*x\ndeg = 3\n");
}
