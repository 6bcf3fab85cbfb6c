use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsatlas"))
        .args(args)
        .env_remove("WSATLAS_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn enumerate() {
    let out = stdout(&["enumerate", "-g", "3"]);
    let counts: Vec<&str> = out.lines().filter(|l| l.starts_with("genus")).collect();
    assert_eq!(counts, ["genus 1: 1", "genus 2: 2", "genus 3: 4"]);
    assert!(out.lines().any(|l| l.trim() == "4,5,6,7"));
}

#[test]
fn invariants_and_ideal() {
    let v = json(&["invariants", "4,6,11,13"]);
    assert_eq!(v["genus"], 6);
    assert_eq!(v["type"], 3);
    assert_eq!(v["pseudo_frobenius"], serde_json::json!([2, 7, 9]));

    let v = json(&["ideal", "3,4,5"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    let v = json(&["ideal", "3,4,5", "--field", "fp:101"]);
    assert_eq!(v["variables"], serde_json::json!(["x", "y4", "y5"]));

    let v = json(&["resolve", "4,6,11,13"]);
    assert_eq!(v["betti"], serde_json::json!([1, 6, 8, 3]));
}

#[test]
fn cotangent() {
    let v = json(&["t1", "2,3"]);
    assert_eq!(v["t1"], serde_json::json!({"-6": 1, "-4": 1}));
    assert_eq!(v["t1_plus"], 0);
    let v = json(&["t2", "4,7,10,13", "--field", "fp:31991"]);
    assert_eq!(v["total"], 6);
}

#[test]
fn quadbase_and_hauser() {
    let out = stdout(&["quadbase", "4,7,10,13", "--dim"]);
    assert!(out.contains("equations 6"));
    assert!(out.contains("dimension 13 (projective 12)"));
    let out = stdout(&["hauser", "2,3"]);
    assert!(out.contains("flatness 0 equations"));
}

#[test]
fn table() {
    let out = stdout(&["table", "-g", "2", "--format", "csv", "--no-cache"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "name,generators,genus,d_lower,d_reference,type,t1_plus,t2,base");
    assert_eq!(lines.len(), 4);

    let out = run(&["table", "-g", "2", "--diff", "--no-cache", "--threads", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("3/3 rows match"));

    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cold = stdout(&["table", "-g", "3", "--format", "json", "--t2", "--cache", cache]);
    let warm = stdout(&["table", "-g", "3", "--format", "json", "--t2", "--cache", cache]);
    assert_eq!(cold, warm);
    assert!(dir.path().join("manifest.json").exists());
}

#[test]
fn errors() {
    let out = run(&["t1", "3,6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd 3"));
    let out = run(&["table", "-g", "1", "--format", "xlsx"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["ideal", "3,4,5", "--field", "fp:100"]);
    assert_eq!(out.status.code(), Some(2));
}
