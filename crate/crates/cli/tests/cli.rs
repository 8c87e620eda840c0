use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arrexp"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn exponents_of_main_example() {
    let o = run(&["exponents", data("main.json").to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["d1"].as_u64(), v["d2"].as_u64(), v["delta"].as_u64()), (Some(10), Some(10), Some(0)));
    assert_eq!(v["method"], "wy");
    assert_eq!(v["witness"].as_array().unwrap().len(), 10);
}

#[test]
fn exponents_methods_agree() {
    let path = data("2213.json");
    for method in ["auto", "wy", "brute"] {
        let o = run(&["exponents", "--input", path.to_str().unwrap(), "--method", method]);
        let v = json(&o);
        assert_eq!((v["d1"].as_u64(), v["d2"].as_u64()), (Some(3), Some(5)), "{method}");
    }
}

#[test]
fn symbolic_det_line() {
    let o = run(&["symbolic-det", data("2213.json").to_str().unwrap(), "--symbolic", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2*z^4 - 2*z^2 = 2 z^2 (z-1)(z+1)");
}

#[test]
fn symbolic_det_rejects_bad_index() {
    let o = run(&["symbolic-det", data("2213.json").to_str().unwrap(), "--symbolic", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn missing_file_is_domain_error() {
    let o = run(&["exponents", "does-not-exist.json"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("does-not-exist.json"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["exponents"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--theorem", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["padic", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn malformed_json_is_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"lines\": [[1,0]], \"mults\": [0]}").unwrap();
    assert_eq!(run(&["exponents", path.to_str().unwrap()]).status.code(), Some(1));
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(run(&["exponents", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn wy_matrix_json() {
    let o = run(&["wy-matrix", data("2213.json").to_str().unwrap(), "--json", "--factors"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["e"], 3);
    assert_eq!(v["matrix"][3], serde_json::json!(["-6", "2", "0", "0"]));
    assert_eq!(v["w"][2], serde_json::json!(["3", "2", "1", "0"]));
}

#[test]
fn wy_matrix_text_at_other_degree() {
    let o = run(&["wy-matrix", data("2213.json").to_str().unwrap(), "--degree", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("e = 4, 4 x 6 (f 3 | g 3)"));
}

#[test]
fn check_subcommands() {
    let v = json(&run(&["check", data("main.json").to_str().unwrap(), "--theorem", "main"]));
    assert_eq!(v["applies"], true);
    assert_eq!(v["certificate"]["i1"], serde_json::json!([3, 4, 5]));
    assert_eq!(v["certificate"]["i2"], serde_json::json!([6]));

    let v = json(&run(&["check", data("2213.json").to_str().unwrap(), "--theorem", "main"]));
    assert_eq!(v["applies"], false);

    let v = json(&run(&["check", data("b2.json").to_str().unwrap(), "--theorem", "b2-equal-gap"]));
    assert_eq!((v["applies"].as_bool(), v["delta"].as_u64()), (Some(true), Some(0)));

    let v = json(&run(&["check", data("b2-lines.json").to_str().unwrap(), "--theorem", "zero-locus", "--mults", "2,2,1,3"]));
    assert_eq!(v["valid_slopes"], serde_json::json!(["-1"]));

    let v = json(&run(&["check", "--theorem", "b2-zero-gap", "--mults", "3,3,3,3"]));
    assert_eq!(v["predicted_delta"], 2);

    let v = json(&run(&["check", "--theorem", "zero-locus", "--mults", "2,2,1,3", "--s3", "1"]));
    assert_eq!(v["valid_slopes"], serde_json::json!(["-1"]));

    let o = run(&["check", "--theorem", "zero-locus", "--mults", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn wronskian_and_padic() {
    assert_eq!(stdout(&run(&["wronskian", "5,4,2,0"])).trim(), "240");
    assert_eq!(stdout(&run(&["wronskian", "1,0"])).trim(), "-1");
    assert_eq!(run(&["wronskian", "1,3"]).status.code(), Some(1));
    assert_eq!(stdout(&run(&["padic", "--p", "2", "--value", "240"])).trim(), "4");
    assert_eq!(stdout(&run(&["padic", "--p", "3", "--value", "0"])).trim(), "inf");
    assert_eq!(run(&["padic", "--p", "4", "--value", "8"]).status.code(), Some(1));
    let v = json(&run(&["padic", "--p", "2", "--tuple", "5,4,2,0"]));
    assert_eq!((v["tuple_valuation"].as_u64(), v["holds"].as_bool()), (Some(4), Some(true)));
}

fn sweep_output(workers: &str, extra: &[&str]) -> String {
    let lines = data("b2-lines.json");
    let mut args = vec!["sweep", lines.to_str().unwrap(), "--workers", workers];
    args.extend_from_slice(extra);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn sweep_is_deterministic_across_workers() {
    let one = sweep_output("1", &["--balanced-only", "--max", "4"]);
    for w in ["2", "4", "8"] {
        assert_eq!(one, sweep_output(w, &["--balanced-only", "--max", "4"]));
    }
    assert!(one.starts_with("m1,m2,m3,m4,d1,d2,delta,method,ms\n"));
    for row in one.lines().skip(1) {
        let cols: Vec<&str> = row.split(',').collect();
        let m: Vec<usize> = cols[..4].iter().map(|c| c.parse().unwrap()).collect();
        let (d1, d2): (usize, usize) = (cols[4].parse().unwrap(), cols[5].parse().unwrap());
        assert_eq!(d1 + d2, m.iter().sum::<usize>());
        assert!(d2 - d1 <= 2);
    }
}

#[test]
fn sweep_to_file_with_config_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b2.jsonl");
    let cfg = dir.path().join("sweep.toml");
    std::fs::write(
        &cfg,
        "lines = [[1,0],[0,1],[1,-1],[1,1]]\nmin = 2\nmax = 3\nparity = \"odd\"\nformat = \"jsonl\"\n",
    )
    .unwrap();
    let o = bin()
        .args(["sweep", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "--check-delta-h"])
        .env("ARREXP_WORKERS", "3")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 8);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["mults"], serde_json::json!([2, 2, 2, 3]));

    // flags override the config file
    let o = run(&["sweep", "--config", cfg.to_str().unwrap(), "--format", "csv", "--max", "2"]);
    assert_eq!(stdout(&o), "m1,m2,m3,m4,d1,d2,delta,method,ms\n");
}

#[test]
fn sweep_rejects_bad_config() {
    let lines = data("b2-lines.json");
    let o = run(&["sweep", lines.to_str().unwrap(), "--min", "3", "--max", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bin().args(["sweep", lines.to_str().unwrap(), "--max", "2"]).env("ARREXP_WORKERS", "x").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_timing_fills_ms() {
    let text = sweep_output("2", &["--timing", "--min", "2", "--max", "2"]);
    let row = text.lines().nth(1).unwrap();
    assert!(!row.ends_with(','), "{row}");
}

#[test]
fn failed_prediction_exits_1() {
    let path = data("main-counterexample.json");
    let o = run(&["check", path.to_str().unwrap(), "--theorem", "main"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("predicted delta 0, computed 2"));
    let v = json(&run(&["exponents", path.to_str().unwrap()]));
    assert_eq!((v["d1"].as_u64(), v["d2"].as_u64()), (Some(5), Some(7)));
}
