use std::process::{Command, Output};

use serde_json::Value;

fn treezeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treezeta"))
        .args(args)
        .output()
        .expect("spawn treezeta")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = treezeta(&all);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

#[test]
fn poly_latex_has_fourth_row() {
    let o = treezeta(&["poly", "--n", "4", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("4 & $q^{6} + 3q^{5} + 11q^{4} + 10q^{3} + 11q^{2} + 3q + 1$ \\\\"), "{out}");
}

#[test]
fn poly_json_coefficients_are_strings() {
    let (v, code) = json(&["poly", "--n", "3"]);
    assert_eq!(code, 0);
    let p3 = &v["results"]["P"][2]["coefficients"];
    assert_eq!(p3, &serde_json::json!(["1", "1", "4", "1", "1"]));
    let (w, _) = json(&["poly", "--n", "3", "--method", "closed-form"]);
    assert_eq!(w["results"], v["results"]);
}

#[test]
fn zeta_at_zero_is_one() {
    let (v, code) = json(&["zeta", "--q", "2", "--s", "0,0"]);
    assert_eq!(code, 0);
    let val = &v["results"]["value"];
    assert!((val["re"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(val["im"].as_f64().unwrap(), 0.0);
    assert_eq!(v["status"], "pass");
}

#[test]
fn boundary_trees() {
    let (v, _) = json(&["zeta", "--line", "--s", "-2"]);
    assert!((v["results"]["value"]["re"].as_f64().unwrap() - 6.0).abs() < 1e-12);
    let (v, _) = json(&["zeta", "--sato-tate", "--s", "0.5,1", "--quadrature"]);
    let (w, _) = json(&["zeta", "--sato-tate", "--s", "0.5,1"]);
    let a = v["results"]["value"]["re"].as_f64().unwrap();
    let b = w["results"]["value"]["re"].as_f64().unwrap();
    assert!((a - b).abs() < 1e-8);
}

#[test]
fn dyck_verification_passes() {
    let o = treezeta(&["verify", "dyck", "--n-max", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verify: pass"));
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "negvals", "--n-max", "10"], 0),
        (&["verify", "twostep", "--q", "3"], 0),
        (&["verify", "symmetry", "--q", "2", "--tol", "0"], 1),
        (&["zeta", "--q", "2", "--s", "1,0", "--max-nodes", "64", "--abs-tol", "1e-300", "--rel-tol", "1e-300"], 3),
        (&["verify", "integers", "--q", "2", "--max-nodes", "128", "--abs-tol", "1e-300", "--rel-tol", "1e-300"], 3),
        (&["frobnicate"], 2),
        (&["zeta", "--q", "2"], 2),
        (&["zeta", "--q", "2", "--s", "x,1"], 2),
        (&["zeta", "--q", "1", "--s", "0"], 2),
        (&["zeta", "--line", "--s", "0.5"], 2),
        (&["dyck", "--n", "12", "--method", "bruteforce"], 2),
        (&["heat", "--q", "2", "--t", "-1"], 2),
        (&["zeta", "--q", "2", "--s", "0", "--max-nodes", "100"], 2),
    ];
    for (args, want) in cases {
        let o = treezeta(args);
        assert_eq!(o.status.code(), Some(*want), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["values", "--q", "3", "--neg", "4", "--pos", "4", "--format", "json"][..],
        &["verify", "boundary", "--format", "json"],
        &["zeta", "--q", "5", "--s", "2,3", "--xi", "--format", "json"],
        &["dyck", "--n", "3", "--list", "--format", "json"],
    ] {
        let text = stdout(&treezeta(args));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "fe", "--q", "2", "--format", "json"];
    assert_eq!(treezeta(&args).stdout, treezeta(&args).stdout);
    let args = ["heat", "--q", "3", "--t", "1"];
    assert_eq!(treezeta(&args).stdout, treezeta(&args).stdout);
}

#[test]
fn timings_only_on_request() {
    let (v, _) = json(&["poly", "--n", "2"]);
    assert!(v.get("timings").is_none());
    let (v, _) = json(&["poly", "--n", "2", "--timings"]);
    assert!(v["timings"]["total_ms"].is_number());
}

#[test]
fn config_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"tolerances": {"symmetry": 1e-300}}"#).unwrap();
    let out = dir.path().join("out.csv");
    let o = treezeta(&[
        "verify",
        "symmetry",
        "--q",
        "3",
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "csv",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("check,q,points,max_defect,tolerance,result\n"));
    assert!(csv.contains("FAIL at"));

    std::fs::write(&cfg, r#"{"quadrature": {"bogus": 1}}"#).unwrap();
    let o = treezeta(&["poly", "--n", "1", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn csv_values_rows() {
    let o = treezeta(&["values", "--q", "2", "--neg", "2", "--pos", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "s,zeta(s)\n0,1\n-1,3\n-2,12\n1,2/3\n");
}

#[test]
fn heat_text_output() {
    let o = treezeta(&["heat", "--q", "2", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("heat: pass\n"));
}
