use std::path::Path;
use std::process::Command;

use dialgebra::cli::dispatch;
use dialgebra::samples;
use dialgebra::structure::{AlgebraFile, FiniteAlgebra, LinearOperator};

fn run(args: &[&str]) -> dialgebra::cli::RunReport {
    dispatch(std::iter::once("dialgebra").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, file: &AlgebraFile) -> String {
    let path = dir.join(name);
    std::fs::write(&path, file.to_text()).unwrap();
    path.to_str().unwrap().to_string()
}

const BROKEN: &str = "\
# *1 = ε·xy on k[ε]/(ε²); *2 has only e1 *2 e1 = e1
dim 2
product o1
0 1
0 0
0 0
0 0
product o2
1 0
0 0
0 0
0 0
";

#[test]
fn operad_confluence_reports() {
    let r = run(&["operad", "confluence", "--k", "2", "--presentation", "mda"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.output().contains("8/8 critical monomials confluent"));
    // the displayed relations split half of the critical monomials
    let r = run(&["operad", "confluence", "--k", "2", "--presentation", "paper"]);
    assert_eq!(r.exit_code, 1);
    assert!(r.output().contains("4/8 critical monomials confluent"));
    let r = run(&["operad", "confluence", "--k", "2"]);
    assert_eq!(r.exit_code, 2);
}

#[test]
fn free_homology_report() {
    let r = run(&["homology", "free", "--alphabet", "1", "--max-weight", "3"]);
    assert_eq!(r.exit_code, 0, "{}", r.output());
    let r = run(&["--format", "records", "homology", "free", "--alphabet", "1", "--max-weight", "3"]);
    let records: Vec<serde_json::Value> = r.output().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.first().unwrap()["kind"], "command");
    assert_eq!(records.last().unwrap()["kind"], "verdict");
    let homology: Vec<_> = records.iter().filter(|r| r["kind"] == "homology").map(|r| &r["record"]).collect();
    assert_eq!(homology.len(), 6);
    for rec in homology {
        let expected = if rec["weight"] == 1 && rec["degree"] == 0 { 1 } else { 0 };
        assert_eq!(rec["homology"], expected);
    }
}

#[test]
fn broken_file_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.alg");
    std::fs::write(&path, BROKEN).unwrap();
    let p = path.to_str().unwrap();
    let r = run(&["check", "mda", p]);
    assert_eq!(r.exit_code, 1);
    assert!(r.output().contains("FAIL  (x *1 y) *2 z = x *1 (y *2 z) at (e1, e1, e1): residual (0, -1)"));
    let r = run(&["homology", "finite", p, "--max-degree", "2"]);
    assert_eq!(r.exit_code, 1);
}

#[test]
fn malformed_input_names_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "dim 2\nproduct a\n1 2 3\n").unwrap();
    let r = run(&["check", "assoc", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, 2);
    assert!(r.output().contains("line 3"), "{}", r.output());
    assert!(r.output().contains("product a"));
    let r = run(&["check", "assoc", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(r.exit_code, 2);
    assert_eq!(run(&["frobnicate"]).exit_code, 2);
}

#[test]
fn construct_outputs_pass_their_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = |n: &str| d.join(n).to_str().unwrap().to_string();

    let mut semihom = AlgebraFile::from_algebra(&FiniteAlgebra::new(2).with_product("a", samples::left_unit_algebra()).unwrap());
    semihom.operators.push(("f".into(), samples::project_b().0));
    let semihom = write(d, "semihom.alg", &semihom);
    let eps = samples::epsilon_mda();
    let base = samples::dual_numbers();
    let mut two = AlgebraFile::from_algebra(&FiniteAlgebra::new(2).with_product("a", base.clone()).unwrap());
    let eps_op = LinearOperator::left_multiplication(&base, &[0.into(), 1.into()]);
    two.operators.push(("f".into(), eps_op.0));
    two.operators.push(("g".into(), LinearOperator::identity(2).0));
    let two = write(d, "two.alg", &two);
    let mda = write(d, "eps.alg", &AlgebraFile::from_algebra(&eps));

    let cases: Vec<(Vec<String>, &str, Vec<&str>)> = vec![
        (vec!["from-semihom".into(), semihom.clone(), "--side".into(), "left".into()], "c1.alg", vec!["mda"]),
        (vec!["from-two-semihoms".into(), two], "c2.alg", vec!["mda"]),
        (vec!["matched-pair".into(), mda.clone(), "--variant".into(), "r".into()], "c3.alg", vec!["matchedpair", "bimodule"]),
        (vec!["sum".into(), mda.clone()], "c4.alg", vec!["assoc"]),
    ];
    for (args, name, checks) in cases {
        let mut argv = vec!["construct".to_string()];
        argv.extend(args);
        argv.push("--out".into());
        argv.push(out(name));
        let r = dispatch(std::iter::once("dialgebra".to_string()).chain(argv.clone()));
        assert_eq!(r.exit_code, 0, "{argv:?}: {}", r.output());
        let text = std::fs::read_to_string(out(name)).unwrap();
        assert_eq!(AlgebraFile::parse(&text).unwrap().to_text(), text);
        for check in checks {
            let r = run(&["check", check, &out(name)]);
            assert_eq!(r.exit_code, 0, "check {check} on {name}: {}", r.output());
        }
    }
    let r = run(&["construct", "double", &out("c3.alg"), "--out", &out("c5.alg")]);
    assert_eq!(r.exit_code, 0, "{}", r.output());
    assert_eq!(run(&["check", "assoc", &out("c5.alg")]).exit_code, 0);

    // the wrong side is refused with exit 1
    let r = run(&["construct", "from-semihom", &semihom, "--side", "right", "--out", &out("no.alg")]);
    assert_eq!(r.exit_code, 1);
    assert!(!d.join("no.alg").exists());
}

#[test]
fn other_checks() {
    let dir = tempfile::tempdir().unwrap();
    let eps = write(dir.path(), "eps.alg", &AlgebraFile::from_algebra(&samples::epsilon_mda()));
    for check in ["mda", "assoc", "compatible", "assosym"] {
        assert_eq!(run(&["check", check, &eps]).exit_code, 0, "{check}");
    }
    assert_eq!(run(&["check", "compatible", &eps, "--kind", "lie"]).exit_code, 1);
    let r = run(&["free", "eval", &eps, "--alphabet", "1", "--length", "3"]);
    assert_eq!(r.exit_code, 0, "{}", r.output());
    let r = run(&["free", "eval", &eps, "--alphabet", "1", "--length", "2", "--word", "x1 *1 x1"]);
    assert!(r.output().contains("(0, 1)"), "{}", r.output());
    assert_eq!(run(&["free", "dims", "--alphabet", "2", "--length", "3"]).exit_code, 0);
    assert_eq!(run(&["operad", "dual", "--k", "3", "--presentation", "paper"]).exit_code, 0);
    assert_eq!(run(&["operad", "dual", "--k", "2", "--presentation", "mda", "--pairing", "unsigned"]).exit_code, 1);
    assert_eq!(run(&["operad", "dims", "--k", "2", "--presentation", "mda", "--max-arity", "5"]).exit_code, 0);
    assert_eq!(run(&["homology", "finite", &eps, "--max-degree", "3"]).exit_code, 0);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let eps = write(dir.path(), "eps.alg", &AlgebraFile::from_algebra(&samples::epsilon_mda()));
    for args in [
        vec!["--format", "records", "operad", "confluence", "--k", "3", "--presentation", "paper"],
        vec!["homology", "finite", eps.as_str(), "--max-degree", "3"],
        vec!["--format", "records", "homology", "free", "--alphabet", "2", "--max-weight", "4"],
    ] {
        assert_eq!(run(&args).output(), run(&args).output());
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dialgebra");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["operad", "confluence", "--k", "2", "--presentation", "mda"]), Some(0));
    assert_eq!(status(&["operad", "confluence", "--k", "2", "--presentation", "paper"]), Some(1));
    assert_eq!(status(&["homology", "finite", "/nonexistent.alg", "--max-degree", "2"]), Some(2));
    assert_eq!(status(&["--help"]), Some(0));
}
