use std::process::{Command, Output};

fn graphlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphlab"))
        .args(args)
        .env_remove("GRAPHLAB_KCAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = graphlab(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gamma_json_counts() {
    let doc = json(&["gamma", "--k", "3", "--emit", "json"]);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 19);
}

#[test]
fn gamma_zero_dot() {
    let out = graphlab(&["gamma", "--k", "0", "--emit", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches("[label=").count(), 1);
    assert_eq!(dot.matches(" -- ").count(), 0);
}

#[test]
fn gamma_dot_with_primes() {
    let dot = stdout(&graphlab(&[
        "gamma", "--k", "3", "--primes", "2,3,5", "--emit", "dot",
    ]));
    for label in ["1", "2", "3", "5", "6", "10", "15", "30"] {
        assert!(dot.contains(&format!("[label=\"{label}\"]")), "{label}");
    }
}

#[test]
fn gamma_csv_is_distance_matrix() {
    let csv = stdout(&graphlab(&["gamma", "--k", "2", "--emit", "csv"]));
    assert_eq!(csv.lines().next().unwrap(), "1,p1,p2,p1p2");
    assert_eq!(csv.lines().count(), 5);
    assert_eq!(csv.lines().nth(2).unwrap(), "1,0,2,1");
}

#[test]
fn bad_primes_are_usage_errors() {
    assert_eq!(
        graphlab(&["gamma", "--k", "3", "--primes", "2,4,5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        graphlab(&["gamma", "--k", "3", "--primes", "2,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        graphlab(&["gamma", "--k", "3", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(graphlab(&[]).status.code(), Some(2));
}

#[test]
fn divisor_graph_twelve() {
    let doc = json(&["divisor-graph", "--n", "12"]);
    assert_eq!(doc["vertices"], serde_json::json!([1, 2, 3, 4, 6, 12]));
    assert_eq!(doc["edges"].as_array().unwrap().len(), 12);
    let capped = graphlab(&["divisor-graph", "--n", "720720", "--max-divisors", "100"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn indices_selection() {
    let doc = json(&["indices", "--k", "3", "--index", "wiener,harary"]);
    assert_eq!(doc["indices"]["wiener"]["value"], "37");
    assert_eq!(doc["indices"]["harary"]["num"], "47");
    assert_eq!(doc["indices"]["harary"]["den"], "2");
    assert_eq!(doc["indices"].as_object().unwrap().len(), 2);

    let doc = json(&["indices", "--k", "4", "--index", "mostar"]);
    assert_eq!(doc["indices"]["mostar"]["value"], "268");
}

#[test]
fn indices_on_semiprime_graph() {
    let doc = json(&["indices", "--n", "6", "--index", "all"]);
    assert_eq!(doc["graph"]["family"], "divisor");
    assert_eq!(doc["indices"].as_object().unwrap().len(), 14);
    // 4 vertices, 5 edges, one non-adjacent pair
    assert_eq!(doc["indices"]["wiener"]["value"], "7");
    assert_eq!(doc["indices"]["zagreb1"]["value"], "26");
}

#[test]
fn indices_table_has_decimals() {
    let out = stdout(&graphlab(&[
        "indices", "--k", "3", "--index", "randic", "--format", "table",
    ]));
    assert!(out.starts_with("randic"));
    assert!(out.contains("(23 + 12√7)/14"));
    assert!(out.trim_end().ends_with("3.910644"), "{out}");
}

#[test]
fn unknown_index_lists_names() {
    let out = graphlab(&["indices", "--k", "3", "--index", "wiener,nope"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nope") && err.contains("hyper_wiener") && err.contains("mostar"));
    assert_eq!(
        graphlab(&["indices", "--index", "all"]).status.code(),
        Some(2)
    );
    assert_eq!(
        graphlab(&["indices", "--k", "2", "--n", "6"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_full_range() {
    let out = graphlab(&["verify", "--k-min", "0", "--k-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().take(99).all(|l| l.starts_with("[PASS]")));
    assert!(text.ends_with("99 checks, 0 failed\n"));
}

#[test]
fn verify_single_k() {
    let text = stdout(&graphlab(&["verify", "--k-min", "3", "--k-max", "3"]));
    assert!(text.contains("wiener: formula 37 == oracle 37"));
}

#[test]
fn verify_cap() {
    assert_eq!(
        graphlab(&["verify", "--k-max", "99"]).status.code(),
        Some(2)
    );
    assert_eq!(
        graphlab(&["verify", "--k-min", "4", "--k-max", "3"])
            .status
            .code(),
        Some(2)
    );
    let raised = Command::new(env!("CARGO_BIN_EXE_graphlab"))
        .args(["verify", "--k-min", "11", "--k-max", "11"])
        .env("GRAPHLAB_KCAP", "11")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
    let lowered = Command::new(env!("CARGO_BIN_EXE_graphlab"))
        .args(["verify", "--k-max", "3"])
        .env("GRAPHLAB_KCAP", "2")
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(2));
}

#[test]
fn claims_markdown_rows() {
    let md = stdout(&graphlab(&["claims", "--k", "3", "--format", "markdown"]));
    assert_eq!(
        md.lines().filter(|l| l.starts_with("| gamma3.")).count(),
        13
    );
}

#[test]
fn claims_json_summary() {
    let doc = json(&["claims", "--format", "json"]);
    let s = &doc["summary"];
    assert_eq!(s["total"], 33);
    assert_eq!(
        s["match"].as_u64().unwrap()
            + s["mismatch"].as_u64().unwrap()
            + s["unevaluable"].as_u64().unwrap(),
        33
    );
}

#[test]
fn claims_strict_exit_follows_verdicts() {
    let doc = json(&["claims", "--k", "3", "--format", "json"]);
    let all_match = doc["summary"]["mismatch"] == 0 && doc["summary"]["unevaluable"] == 0;
    let code = graphlab(&["claims", "--k", "3", "--strict"]).status.code();
    assert_eq!(code, Some(if all_match { 0 } else { 3 }));
    assert_eq!(graphlab(&["claims", "--k", "3"]).status.code(), Some(0));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["claims", "--format", "json"][..],
        &["indices", "--k", "5", "--index", "all"][..],
        &["gamma", "--k", "4", "--emit", "dot"][..],
        &["verify", "--k-min", "0", "--k-max", "6"][..],
    ] {
        assert_eq!(graphlab(args).stdout, graphlab(args).stdout, "{args:?}");
    }
}
