//! End-to-end runs of the `askey` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn askey(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_askey"));
    cmd.args(args).env_remove("ASKEY_BACKEND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("askey runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn hermite_value() {
    let out = askey(
        &["eval", "--family", "hermite", "--n", "3", "--x", "0.5"],
        &[],
    );
    assert!(out.status.success());
    // p₃(x) = x³ − (3/2)x.
    assert_eq!(json(&out)["value"], 0.125 - 0.75);
}

#[test]
fn complex_wilson_parameters() {
    let out = askey(
        &[
            "eval",
            "--family",
            "wilson",
            "--params",
            "a=1,b=1,b_im=-1,c=1,d=1,d_im=1",
            "--n",
            "1",
            "--x",
            "0",
        ],
        &[],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    // p₁(0) = −B₀.
    assert_eq!(v["value"].as_f64().unwrap(), -v["B"][0].as_f64().unwrap());
}

#[test]
fn missing_parameter_is_reported() {
    let out = askey(
        &[
            "eval", "--family", "jacobi", "--params", "alpha=1", "--n", "2", "--x", "0",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("beta"));
}

#[test]
fn chart_evaluation_at_the_corner() {
    let out = askey(
        &[
            "eval-chart",
            "--chart",
            "racah1",
            "--coords",
            "0,0,0,0",
            "--n",
            "2",
            "--x",
            "3",
        ],
        &[],
    );
    assert!(out.status.success());
    // Bₙ = 0, Cₙ = n: p₂(x) = x² − 1.
    assert_eq!(json(&out)["value"], 8.0);
}

#[test]
fn csv_table() {
    let out = askey(
        &[
            "table", "--chart", "racah1", "--coords", "0,0,0,0", "--nmax", "3",
        ],
        &[],
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["n,B,C", "0,0,", "1,0,1", "2,0,2", "3,0,3"]);
    assert!(text.contains("# family: hermite"));
}

#[test]
fn json_table() {
    let out = askey(
        &[
            "table", "--chart", "wilson2", "--coords", "1,1,1,0", "--nmax", "2", "--format", "json",
        ],
        &[],
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["family"], "continuous-dual-hahn");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn passing_suite_exits_zero() {
    let out = askey(&["verify", "transitions", "--samples", "50"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "transitions");
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["backend"], "binary64");
}

#[test]
fn failing_suite_exits_one() {
    // An unreachable tolerance turns a passing suite red.
    let out = askey(
        &[
            "verify",
            "chart-consistency",
            "--samples",
            "3",
            "--tol",
            "0",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn unknown_suite_is_an_error() {
    let out = askey(&["verify", "no-such-suite"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn backend_flag_wins_over_environment() {
    let env = [("ASKEY_BACKEND", "highprec")];
    let args = ["verify", "favard-scan", "--samples", "2"];
    assert_eq!(json(&askey(&args, &env))["backend"], "highprec");
    let mut flagged = args.to_vec();
    flagged.extend(["--backend", "binary64"]);
    assert_eq!(json(&askey(&flagged, &env))["backend"], "binary64");
    assert_eq!(json(&askey(&args, &[]))["backend"], "binary64");
}

#[test]
fn identify_from_file() {
    let dir = std::env::temp_dir().join(format!("askey-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("laguerre.json");
    let samples: Vec<Value> = (0..8)
        .map(|n| serde_json::json!({ "n": n, "B": 2 * n + 1, "C": n * n }))
        .collect();
    std::fs::write(&path, serde_json::to_string(&samples).unwrap()).unwrap();
    let out = askey(&["identify", "--input", path.to_str().unwrap()], &[]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["matched"], "laguerre");
    let residuals: Vec<f64> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["residual"].as_f64().unwrap_or(f64::INFINITY))
        .collect();
    assert!(residuals.windows(2).all(|w| w[0] <= w[1]));
}
