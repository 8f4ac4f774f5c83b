use std::process::{Command, Output};

fn crr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crr"))
        .args(args)
        .env_remove("CRR_ZEROS_TOL")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = crr(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn column(v: &serde_json::Value, key: &str) -> Vec<f64> {
    v["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_f64().unwrap())
        .collect()
}

#[test]
fn zeros_of_the_published_row() {
    let v = json(&["zeros", "--n", "30", "--lambda", "5", "--eta", "2", "--format", "json"]);
    let x = column(&v, "x");
    assert_eq!(x.len(), 30);
    assert!((x[0] + 2.94731).abs() <= 5e-5);
    assert!((x[29] - 5.99823).abs() <= 5e-5);
    assert_eq!(v["meta"]["n"], 30);
}

#[test]
#[allow(clippy::approx_constant)] // printed five-decimal value
fn symmetric_bounds_at_zero_eta() {
    let out = crr(&["bounds", "--n", "4", "--lambda", "1.5", "--eta", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,eta,lower,upper,x_min,x_max,contained"));
    let f: Vec<&str> = lines.next().unwrap().split(',').collect();
    let lower: f64 = f[2].parse().unwrap();
    let upper: f64 = f[3].parse().unwrap();
    assert!((lower + 1.41421).abs() <= 5e-5 && (upper - 1.41421).abs() <= 5e-5);
    assert_eq!(f[6], "true");
    assert!(lines.next().is_none());
}

#[test]
fn degree_one_zero_is_eta_over_lambda() {
    let v = json(&["zeros", "--n", "1", "--lambda", "2", "--eta", "1", "--format", "json"]);
    assert_eq!(column(&v, "x"), vec![0.5]);
}

#[test]
fn json_numbers_round_trip() {
    let out = crr(&["zeros", "--n", "1", "--lambda", "2", "--eta", "1", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"x\":5.0000000000000000e-1"), "{text}");
    assert!(text.starts_with("{\"meta\":{"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["table", "--id", "1", "--format", "json"][..],
        &["bounds", "--n", "12", "--lambda-grid", "0.75,1,5", "--eta-grid", "-2,0,3"][..],
        &["zeros", "--n", "50", "--k", "2", "--lambda", "3", "--eta", "-1"][..],
    ] {
        assert_eq!(crr(args).stdout, crr(args).stdout);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["zeros", "--n", "4", "--lambda", "0"][..],
        &["zeros", "--n", "4", "--lambda", "nan"][..],
        &["bounds", "--n", "2", "--lambda", "1", "--eta", "0"][..],
        &["asymp", "--n", "6", "--branch", "lambda", "--eta", "1", "--grid", "10,100"][..],
        &["eval", "--n", "2", "--family", "laguerre", "--alpha", "-2", "--x", "1"][..],
        &["measure", "--lambda", "0.4"][..],
        &["table", "--id", "9"][..],
        &["nonsense"][..],
    ] {
        let out = crr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_crr"))
        .args(["zeros", "--n", "5", "--lambda", "2", "--format", "json"])
        .env("CRR_ZEROS_TOL", "1e-6")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["meta"]["rel_tol"].as_f64(), Some(1e-6));
    let bad = Command::new(env!("CARGO_BIN_EXE_crr"))
        .args(["zeros", "--n", "5", "--lambda", "2"])
        .env("CRR_ZEROS_TOL", "tight")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn writes_to_out_path() {
    let dir = std::env::temp_dir().join(format!("crr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z.csv");
    let out = crr(&["zeros", "--n", "3", "--lambda", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("index,x,theta\n1,"));
    assert_eq!(text.lines().count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_one_has_delta_columns() {
    let v = json(&["table", "--id", "1", "--format", "json"]);
    let rows = v["data"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let lambdas: Vec<f64> = column(&v, "lambda");
    assert_eq!(lambdas, vec![0.75, 1.75, 5.0, 10.0, 15.0, 20.0, 25.0, 70.0]);
    for key in ["x_min_delta", "bound_min_delta", "x_max_delta", "bound_max_delta"] {
        assert!(rows.iter().all(|r| r[key].as_f64().unwrap() >= 0.0));
    }
    assert!(rows.iter().all(|r| r["eta"] == 2.0 && r["n"] == 30));
}

#[test]
fn suspect_row_is_reported_not_compared() {
    let v = json(&["table", "--id", "2", "--format", "json"]);
    let row = v["data"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["eta"].as_f64() == Some(5.0))
        .unwrap();
    assert_eq!(row["status"], "suspect (see docs)");
    assert!(row["x_min_delta"].is_null());
    assert!(row["note"].as_str().unwrap().contains("recomputed"));
    assert!((row["bound_min"].as_f64().unwrap() - 0.53011).abs() < 5e-5);
    assert!((row["bound_max"].as_f64().unwrap() - 8.80322).abs() < 5e-5);
}

#[test]
fn eval_and_measure_run() {
    let v = json(&["eval", "--n", "2", "--lambda", "1", "--eta", "0", "--x-grid", "-1,0,2", "--format", "json"]);
    // P_2 = (3/4) x² − 1/4 at λ = 1, η = 0
    let p = column(&v, "p");
    for (x, got) in [-1.0f64, 0.0, 2.0].iter().zip(&p) {
        assert!((got - (0.75 * x * x - 0.25)).abs() < 1e-15);
    }
    let h = json(&["eval", "--n", "3", "--family", "hermite", "--x", "1", "--format", "json"]);
    assert_eq!(column(&h, "p"), vec![-4.0]);
    let m = json(&["measure", "--lambda", "1.5", "--eta", "0.5", "--n-max", "5", "--format", "json"]);
    assert!((m["meta"]["weight_mass"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!(column(&m, "tau_abs").iter().all(|t| (t - 1.0).abs() < 1e-12));
    let a = json(&["asymp", "--n", "6", "--branch", "eta", "--lambda", "1.5", "--grid", "1e2,1e3,1e4,1e5", "--format", "json"]);
    assert!((a["meta"]["slope"].as_f64().unwrap() + 1.0).abs() < 0.15);
}

#[test]
fn help_exits_zero() {
    let out = crr(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("check-all"));
}
