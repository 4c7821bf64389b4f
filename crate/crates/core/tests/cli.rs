use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env_remove("SCHUBERT_FORMAT")
        .output()
        .expect("failed to run the schubert binary")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn schubert_text_and_json() {
    assert_eq!(stdout(&["schubert", "2413"]), "x1^2*x2 + x1*x2^2\n");
    assert_eq!(stdout(&["schubert", "1324", "--method", "chain"]), "x1 + x2\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "schubert", "132"])).unwrap();
    assert_eq!(json, serde_json::json!([{"exp": [1, 0, 0], "coef": 1}, {"exp": [0, 1, 0], "coef": 1}]));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["schubert", "213"])
        .env("SCHUBERT_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"[{"exp":[1,0,0],"coef":1}]"#);
}

#[test]
fn skew_routes_and_expansion() {
    let nf = stdout(&["skew", "2413", "1324"]);
    for method in ["chains", "lr"] {
        assert_eq!(stdout(&["skew", "2413", "1324", "--method", method]), nf);
    }
    assert_eq!(stdout(&["skew", "2413", "1324", "--expand"]).trim(), r#"{"3241":1,"3412":1,"4132":1}"#);
}

#[test]
fn skew_rejects_incomparable_pair() {
    let out = run(&["skew", "3124", "2413"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Bruhat"));
}

#[test]
fn lr_rows_and_cache() {
    let text = stdout(&["lr", "1324", "2314"]);
    assert!(text.lines().any(|l| l == "w=2413 c=1"), "{text}");
    let json = stdout(&["--format", "json", "lr", "1324", "2314"]);
    for line in json.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["u"], "1324");
        assert!(v["c"].as_i64().unwrap() > 0);
    }

    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("lr.ndjson");
    let cache = cache.to_str().unwrap();
    stdout(&["lr", "1324", "2314", "--out", cache]);
    let first = std::fs::read_to_string(cache).unwrap();
    assert_eq!(first.lines().count(), text.lines().count());
    stdout(&["lr", "1324", "2314", "--out", cache]);
    assert_eq!(std::fs::read_to_string(cache).unwrap(), first);
}

#[test]
fn rcgraphs_render() {
    let ascii = stdout(&["rcgraphs", "1432"]);
    assert_eq!(ascii.split("\n\n").count(), 5);
    assert!(ascii.starts_with(". + +\n. +\n."));
    let json = stdout(&["rcgraphs", "1432", "--render", "json"]);
    assert_eq!(json.lines().count(), 5);
    for line in json.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 4);
    }
}

#[test]
fn chains_with_type_filter() {
    assert_eq!(stdout(&["chains", "1324", "2413"]).lines().count(), 4);
    let filtered = stdout(&["chains", "1324", "2413", "--type", "1,1"]);
    assert_eq!(filtered, "1324 -(1,1)-> 2314 -(2,3)-> 2413\n");
    assert_eq!(stdout(&["chains", "1324", "2413", "--type", "0,2,0"]).lines().count(), 1);
    let json = stdout(&["--format", "json", "chains", "1432", "4321"]);
    assert_eq!(json.lines().count(), 5);
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--suite", "all", "--n", "3"]);
    assert_eq!(out.lines().filter(|l| l.contains(": pass")).count(), 8, "{out}");
    let json = stdout(&["--format", "json", "verify", "--suite", "bijection", "--n", "4", "--seed", "1"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn bad_input_fails_cleanly() {
    for args in [&["schubert", "1123"][..], &["schubert", "12", "--n", "1"], &["chains", "12", "21", "--type", "x"]] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error"), "{args:?}");
    }
}
