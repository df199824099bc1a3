use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_heinzlab"));
    c.env_remove("HEINZLAB_SEED");
    c
}

fn run(args: &[&str], cwd: &Path) -> Output {
    bin().args(args).current_dir(cwd).output().expect("spawn heinzlab")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_matrix(dir: &Path, name: &str, dim: usize, entries: &[[f64; 2]]) -> String {
    let path = dir.join(name);
    let body = serde_json::json!({ "dim": dim, "entries": entries });
    std::fs::write(&path, body.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn list_shows_suites_and_status() {
    let dir = TempDir::new().unwrap();
    let a = run(&["list"], dir.path());
    assert_eq!(code(&a), 0);
    let out = stdout(&a);
    assert!(out.contains("S2.rahma1.psi"));
    let deter = out.lines().find(|l| l.starts_with("S5.det.deter1 ")).expect("deter1 row");
    assert!(deter.contains("recorded"));
    assert!(!out.contains("S0.selftest"));
    assert_eq!(out, stdout(&run(&["list"], dir.path())));
}

#[test]
fn verify_classical_suite_passes() {
    let dir = TempDir::new().unwrap();
    let out = path_str(&dir, "report.json");
    let o = run(&["verify", "--suite", "S1.young.Y1", "--trials", "100", "--out", &out], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["suites"][0]["id"], "S1.young.Y1");
    assert_eq!(report["suites"][0]["trials"], 100);
    assert_eq!(report["suites"][0]["violations"], 0);
    assert!(report["version"].as_str().unwrap().starts_with("heinzlab "));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let o = run(&["verify", "--suite", "bogus"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("S1.young.Y1"));
    assert_eq!(code(&run(&["verify", "--trials", "0"], dir.path())), 2);
    assert_eq!(code(&run(&["verify", "--dim-max", "1000"], dir.path())), 2);
    assert_eq!(code(&run(&["frobnicate"], dir.path())), 2);
}

#[test]
fn seed_determines_the_report() {
    let dir = TempDir::new().unwrap();
    let args = |out: &str, seed: &str| {
        vec!["verify".to_string(), "--suite".into(), "all".into(), "--trials".into(), "20".into(), "--seed".into(), seed.into(), "--out".into(), out.into()]
    };
    let (a, b, c) = (path_str(&dir, "a.json"), path_str(&dir, "b.json"), path_str(&dir, "c.json"));
    for (p, s) in [(&a, "7"), (&b, "7"), (&c, "8")] {
        let o = bin().args(args(p, s)).current_dir(dir.path()).output().unwrap();
        assert!(matches!(code(&o), 0 | 1), "{}", stderr(&o));
    }
    let read = |p: &str| std::fs::read(p).unwrap();
    assert_eq!(read(&a), read(&b));
    assert_ne!(read(&a), read(&c));
}

#[test]
fn seed_flag_beats_environment() {
    let dir = TempDir::new().unwrap();
    let base = ["verify", "--suite", "S5.ando,S1.young.Y3", "--trials", "10"];
    let report = |extra: &[&str], env: Option<&str>, name: &str| {
        let out = path_str(&dir, name);
        let mut c = bin();
        c.args(base).args(extra).args(["--out", &out]).current_dir(dir.path());
        if let Some(v) = env {
            c.env("HEINZLAB_SEED", v);
        }
        assert_eq!(code(&c.output().unwrap()), 0);
        std::fs::read(out).unwrap()
    };
    let flag7 = report(&["--seed", "7"], None, "f7.json");
    let env7 = report(&[], Some("7"), "e7.json");
    let both = report(&["--seed", "7"], Some("3"), "b.json");
    let env3 = report(&[], Some("3"), "e3.json");
    assert_eq!(flag7, env7);
    assert_eq!(flag7, both);
    assert_ne!(flag7, env3);
}

#[test]
fn serial_flag_does_not_change_the_report() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (path_str(&dir, "par.json"), path_str(&dir, "ser.json"));
    let base = ["verify", "--suite", "S2.refund1.phi,S4.heinz.O1", "--trials", "30", "--seed", "5"];
    run(&[&base[..], &["--out", &a]].concat(), dir.path());
    run(&[&base[..], &["--out", &b, "--serial"]].concat(), dir.path());
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn eval_scalar_examples() {
    let dir = TempDir::new().unwrap();
    let o = run(&["eval", "--op", "kantorovich", "--params", "t=1"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["eval", "--op", "kantorovich", "--params", "t=4"], dir.path());
    assert_eq!(stdout(&o).trim(), "1.5625");
    let o = run(&["eval", "--op", "heinz", "--params", "rho=1", "sigma=16", "kappa=0.25"], dir.path());
    assert_eq!(stdout(&o).trim(), "5");
    let o = run(&["eval", "--op", "means", "--params", "rho=1", "sigma=4"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("arith = 2.5") && text.contains("geom = 2"), "{text}");
    assert_eq!(code(&run(&["eval", "--op", "nope"], dir.path())), 2);
    assert_eq!(code(&run(&["eval", "--op", "kantorovich", "--params", "t=-1"], dir.path())), 2);
    assert_eq!(code(&run(&["eval", "--op", "kantorovich", "--params", "t"], dir.path())), 2);
}

#[test]
fn eval_geometric_mean_with_identity_base() {
    let dir = TempDir::new().unwrap();
    let t = write_matrix(dir.path(), "t.json", 2, &[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
    let s = write_matrix(dir.path(), "s.json", 2, &[[4.0, 0.0], [0.0, 0.0], [0.0, 0.0], [9.0, 0.0]]);
    let o = run(&["eval", "--op", "geom", "--params", "kappa=0.5", "--matrix", &t, &s], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows: Vec<Vec<String>> = stdout(&o).lines().map(|l| l.split('\t').map(String::from).collect()).collect();
    assert_eq!(rows, [["2", "0"], ["0", "3"]]);
}

#[test]
fn eval_norms_of_a_diagonal() {
    let dir = TempDir::new().unwrap();
    let a = write_matrix(dir.path(), "a.json", 2, &[[3.0, 0.0], [0.0, 0.0], [0.0, 0.0], [-4.0, 0.0]]);
    let o = run(&["eval", "--op", "norms", "--matrix", &a, "--norms", "schatten:1,schatten:2,schatten:inf,kyfan:1"], dir.path());
    let text = stdout(&o);
    for line in ["schatten:1 = 7", "schatten:2 = 5", "schatten:inf = 4", "kyfan:1 = 4"] {
        assert!(text.contains(line), "{line} in {text}");
    }
}

#[test]
fn bad_matrix_files_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2, \"entries\": [[1, 0]]}").unwrap();
    let o = run(&["eval", "--op", "eig", "--matrix", bad.to_str().unwrap()], dir.path());
    assert_eq!(code(&o), 2);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&run(&["eval", "--op", "eig", "--matrix", bad.to_str().unwrap()], dir.path())), 2);
    let skew = write_matrix(dir.path(), "skew.json", 2, &[[1.0, 0.0], [2.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
    let o = run(&["eval", "--op", "eig", "--matrix", &skew], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("defect"), "{}", stderr(&o));
    let missing = path_str(&dir, "missing.json");
    assert_eq!(code(&run(&["eval", "--op", "eig", "--matrix", &missing], dir.path())), 2);
}

#[test]
fn written_matrices_reload_bit_identically() {
    let dir = TempDir::new().unwrap();
    let t = write_matrix(dir.path(), "t.json", 2, &[[2.0, 0.0], [0.3, -0.7], [0.3, 0.7], [1.1, 0.0]]);
    let s = write_matrix(dir.path(), "s.json", 2, &[[1.0 / 3.0, 0.0], [0.1, 0.2], [0.1, -0.2], [5.0, 0.0]]);
    let g = path_str(&dir, "g.json");
    let o = run(&["eval", "--op", "geom", "--params", "kappa=0.37", "--matrix", &t, &s, "--out", &g], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    // the arithmetic mean of a matrix with itself is exact
    let g2 = path_str(&dir, "g2.json");
    let o = run(&["eval", "--op", "arith", "--params", "kappa=0.5", "--matrix", &g, &g, "--out", &g2], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&std::fs::read_to_string(&g2).unwrap()).unwrap();
    let bits = |v: &Value| -> Vec<u64> { v["entries"].as_array().unwrap().iter().flat_map(|z| z.as_array().unwrap().iter().map(|x| x.as_f64().unwrap().to_bits()).collect::<Vec<_>>()).collect() };
    assert_eq!(bits(&a), bits(&b));
    assert_eq!(std::fs::read(&g).unwrap(), std::fs::read(&g2).unwrap());
}

fn worst_case(dir: &TempDir, suite: &str, name: &str) -> String {
    let report = path_str(dir, &format!("{name}.report.json"));
    run(&["verify", "--suite", suite, "--trials", "5", "--dim-min", "4", "--dim-max", "4", "--out", &report], dir.path());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let case = path_str(dir, &format!("{name}.case.json"));
    std::fs::write(&case, v["suites"][0]["worst_case"].to_string()).unwrap();
    case
}

#[test]
fn violations_exit_one_and_write_counterexamples() {
    let dir = TempDir::new().unwrap();
    let report = path_str(&dir, "r.json");
    let o = run(&["verify", "--suite", "S0.selftest", "--trials", "5", "--out", &report], dir.path());
    assert_eq!(code(&o), 1);
    let cex = dir.path().join("S0.selftest.counterexample.json");
    assert!(cex.exists());
    assert!(stdout(&o).contains("S0.selftest.counterexample.json"));
    let case: Value = serde_json::from_str(&std::fs::read_to_string(&cex).unwrap()).unwrap();
    assert_eq!(case["dim"], 1);
    // recorded suites report violations without failing
    let o = run(&["verify", "--suite", "S5.det.rashidq1", "--trials", "100"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("S5.det.rashidq1.counterexample.json").exists());
}

#[test]
fn shrink_and_replay() {
    let dir = TempDir::new().unwrap();
    let case = worst_case(&dir, "S0.selftest", "self");
    let small = path_str(&dir, "small.json");
    let o = run(&["shrink", "--case", &case, "--out", &small], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("dim 4 -> 1"), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&small).unwrap()).unwrap();
    assert_eq!(v["dim"], 1);
    let o = run(&["verify", "--case", &small], dir.path());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("verdict: violate"));
    let ok = worst_case(&dir, "S1.young.Y1", "young");
    let o = run(&["shrink", "--case", &ok, "--out", &small], dir.path());
    assert_eq!(code(&o), 2);
    let o = run(&["verify", "--case", &ok], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict: pass"));
}
