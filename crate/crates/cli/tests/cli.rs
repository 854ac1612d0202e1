//! End-to-end runs of the `euler-pencil` binary: goldens, independent values,
//! exit codes and the JSON envelope.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_euler-pencil"))
        .args(args)
        .env_remove("EULER_PENCIL_CATALOGUE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).expect("valid json")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).expect("golden file")
}

/// Naive point count of `y^2 = x^3 + a4 x + a6` over `F_p`.
fn naive_ap(a4: i64, a6: i64, p: i64) -> i64 {
    let mut n = 1;
    for x in 0..p {
        let r = (x * x % p * x + a4 * x + a6).rem_euclid(p);
        n += (0..p).filter(|y| y * y % p == r).count() as i64;
    }
    p + 1 - n
}

#[test]
fn canonical_match_goldens() {
    for p in [3, 5, 13] {
        let ps = p.to_string();
        let got = stdout(&["match", "--curve", "256b2", "--p", &ps, "--format", "json"]);
        assert_eq!(got, golden(&format!("match_256b2_p{p}.json")), "p={p}");
    }
}

#[test]
fn canonical_match_values() {
    for p in [3i64, 5, 13] {
        let v = json(&["match", "--curve", "256b2", "--p", &p.to_string()]);
        assert_eq!(v["status"], "PASS");
        let a = naive_ap(8, 0, p);
        let reports = v["result"]["reports"].as_array().unwrap();
        assert_eq!(reports.len(), 2);
        for r in reports {
            assert_eq!(r["a_p"].as_i64(), Some(a));
            let sign = if r["basepoint"]["branch"] == "plus" { 1.0 } else { -1.0 };
            let w = (a as f64 + sign * ((4 * p * (p + 1) - a * a) as f64).sqrt()) / (2 * p) as f64;
            let got = r["basepoint"]["w"]["re"].as_f64().unwrap();
            assert!((got - w).abs() < 1e-11, "p={p}: {got} vs {w}");
            assert!((r["trace"]["re"].as_f64().unwrap() - a as f64).abs() < 1e-9);
            assert!((r["det"]["re"].as_f64().unwrap() - p as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn ap_table_golden_and_counts() {
    let got = stdout(&["ap", "--curve", "256b2", "--max-p", "47"]);
    assert_eq!(got, golden("ap_256b2_47.txt"));
    let v = json(&["ap", "--curve", "256b2", "--max-p", "47"]);
    for e in v["result"]["entries"].as_array().unwrap() {
        let p = e["p"].as_i64().unwrap();
        assert_eq!(e["a_p"].as_i64(), Some(naive_ap(8, 0, p)), "p={p}");
    }
}

#[test]
fn j_of_canonical_pencil_is_1728() {
    let v = json(&["j", "--tau", "2", "--delta", "0", "--Delta", "2"]);
    assert_eq!(v["result"]["j"], "1728");
}

#[test]
fn cm_pencil_csv_golden() {
    let got = stdout(&["match", "--curve", "27a3", "--pencil", "-9,-1,20.35", "--max-p", "31", "--format", "csv"]);
    assert_eq!(got, golden("match_27a3_csv.csv"));
    let mut lines = got.lines();
    assert_eq!(lines.next(), Some("p,a_p,branch,u^2,u,lambda,tr R,det R,residual,float_residual,status"));
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let p: i64 = cells[0].parse().unwrap();
        // y^2 + y = x^3 is y'^2 = x^3 + 16 after y' = 2y + 1, scaled by 4; same trace for p > 2.
        if p > 3 {
            assert_eq!(cells[1].parse::<i64>().unwrap(), naive_ap(0, 16, p), "p={p}");
        }
        assert_eq!(cells[8].parse::<f64>().unwrap(), 0.0, "p={p}");
        assert!(cells[9].parse::<f64>().unwrap() < 1e-9, "p={p}");
        assert_eq!(cells[10], "PASS");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hasse", "--ap", "2", "--p", "3"]).status.code(), Some(0));
    assert_eq!(run(&["hasse", "--ap", "-4", "--p", "3"]).status.code(), Some(1));
    assert_eq!(run(&["golden"]).status.code(), Some(0));
    assert_eq!(run(&["reduce-check", "--pencil", "3,1,5", "--ap", "2", "--p", "7"]).status.code(), Some(0));
    assert_eq!(run(&["verify-all", "--only", "2"]).status.code(), Some(1));
    assert_eq!(run(&["verify-all", "--only", "7"]).status.code(), Some(0));
}

#[test]
fn usage_errors_name_the_flag() {
    let cases: [(&[&str], &str); 7] = [
        (&["match", "--p", "5", "--ap", "9"], "--ap"),
        (&["match", "--pencil", "1,2", "--p", "5", "--ap", "1"], "--pencil"),
        (&["ap", "--curve", "nope"], "--curve"),
        (&["cornacchia", "--p", "7"], "--p"),
        (&["arcsine", "--t", "1"], "--t"),
        (&["j", "--tau", "3", "--delta", "1", "--Delta", "2"], "--tau"),
        (&["--tol", "-1", "golden"], "--tol"),
    ];
    for (args, flag) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(flag), "{args:?}: {err}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn json_envelope_is_versioned_and_deterministic() {
    let args = ["delta-series", "--curve", "256b2", "--x", "200", "--format", "json"];
    let a = stdout(&args);
    let b = stdout(&["--threads", "3", "delta-series", "--curve", "256b2", "--x", "200", "--format", "json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "euler-pencil/1");
    assert_eq!(v["command"], "delta-series");
    for key in ["params", "status", "tolerances", "result"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn delta_series_csv_columns() {
    let got = stdout(&["delta-series", "--curve", "256b2", "--x", "50", "--format", "csv"]);
    let mut lines = got.lines();
    assert_eq!(lines.next(), Some("p,a_p,w_plus,u,lambda,delta,class"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..2], &["3", "0"]);
    let delta: f64 = first[5].parse().unwrap();
    let want = ((2.0 / 3f64.sqrt()).sqrt() - 1.0) * 2.0 * 3f64.sqrt();
    assert!((delta - want).abs() < 1e-11);
    assert_eq!(first[6], "inert");
}

#[test]
fn inline_model_matches_catalogue() {
    let a = json(&["ap", "--model", "0,0,0,8,0", "--max-p", "30"]);
    let b = json(&["ap", "--curve", "256b2", "--max-p", "30"]);
    let pick = |v: &Value| v["result"]["entries"].clone();
    assert_eq!(pick(&a), pick(&b));
}

#[test]
fn continuum_commands() {
    let v = json(&["universality", "--z", "1.1"]);
    assert_eq!(v["status"], "PASS");
    let z = 1.1f64;
    let closed = (1.0 / z).asin() / (std::f64::consts::PI * (z * z - 1.0).sqrt());
    let got = v["result"]["integrals"][0]["value"]["re"].as_f64().unwrap();
    assert!((got - closed).abs() < 1e-10);
    let l = json(&["chi4-L", "--s", "1"]);
    assert!((l["result"]["value"].as_f64().unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
    assert_eq!(json(&["eta-feq", "--s", "0.3"])["status"], "PASS");
}

#[test]
fn catalogue_override_from_environment() {
    let dir = std::env::temp_dir().join(format!("ep-cat-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.json");
    std::fs::write(&path, r#"[{"label": "mine", "model": [0, 0, 0, -1, 0], "source": "test"}]"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_euler-pencil"))
        .args(["ap", "--curve", "mine", "--max-p", "13", "--format", "json"])
        .env("EULER_PENCIL_CATALOGUE", &path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let a13 = v["result"]["entries"].as_array().unwrap().iter().find(|e| e["p"] == 13).unwrap()["a_p"].as_i64();
    assert_eq!(a13, Some(naive_ap(-1, 0, 13)));
    std::fs::remove_dir_all(&dir).ok();
}
