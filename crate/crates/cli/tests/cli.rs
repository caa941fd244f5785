use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coralprune"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn cycle_has_one_essential_loop() {
    let c5 = fixture("c5.edges");
    let out = run(&["pd", "--input", c5.to_str().unwrap()]);
    assert!(out.status.success());
    let pd = json(&out);
    assert_eq!(pd["dims"]["1"], serde_json::json!([[2.0, "inf"]]));
}

#[test]
fn attribute_filter_on_triangle() {
    let k3 = fixture("k3.edges");
    let filter = format!("attr:{}", fixture("k3_filter.csv").display());
    let out = run(&["pd", "--input", k3.to_str().unwrap(), "--filter", &filter]);
    assert!(out.status.success());
    let pd = json(&out);
    assert_eq!(pd["dims"]["0"], serde_json::json!([[1.0, "inf"]]));
    assert_eq!(pd["dims"]["1"], serde_json::json!([]));
}

#[test]
fn pd_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("pd.csv");
    let c5 = fixture("c5.edges");
    let out = run(&[
        "pd",
        "--input",
        c5.to_str().unwrap(),
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(csv).unwrap();
    assert!(text.lines().count() >= 3, "{text}");
}

#[test]
fn coral_empties_k4() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = dir.path().join("k4.edges");
    fs::write(&k4, "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let out_dir = dir.path().join("out");
    let out = run(&[
        "reduce",
        "--input",
        k4.to_str().unwrap(),
        "--method",
        "coral",
        "--k",
        "5",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(out_dir.join("reduced.edges")).unwrap(),
        ""
    );
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["vertex_reduction_pct"], 100.0);
    assert_eq!(report["edge_reduction_pct"], 100.0);
    assert_eq!(report["invocation"][1], "reduce");
}

#[test]
fn verify_sweeps_pass() {
    for check in [
        "coral",
        "prunit-sub",
        "prunit-super",
        "prunit-power",
        "combined",
    ] {
        let out = run(&["verify", "--check", check, "--k", "1", "--seeds", "15"]);
        assert!(
            out.status.success(),
            "{check}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn injected_fault_fails_with_dump() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("report.jsonl");
    let dump = dir.path().join("cx");
    let out = run(&[
        "verify",
        "--check",
        "prunit-sub",
        "--seeds",
        "10",
        "--inject-fault",
        "1",
        "--out",
        jsonl.to_str().unwrap(),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let lines = fs::read_to_string(jsonl).unwrap();
    assert_eq!(lines.lines().count(), 10);
    assert!(fs::read_dir(dump).unwrap().count() > 0);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(
        run(&["pd", "--input", "/no/such/file"]).status.code(),
        Some(2)
    );
    let c5 = fixture("c5.edges");
    let c5 = c5.to_str().unwrap();
    assert_eq!(
        run(&["pd", "--input", c5, "--direction", "sideways"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["reduce", "--input", c5, "--method", "coral", "--out", "/tmp/x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn kahle_sweep_csv() {
    let out = run(&[
        "experiment",
        "kahle-sweep",
        "--n",
        "15",
        "--p",
        "0.2",
        "0.3",
        "--seeds",
        "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p,seed,betti_2,nontrivial"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn clustering_over_tu_dir() {
    let out = run(&[
        "experiment",
        "clustering-betti",
        "--input",
        fixture("TOY").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("TOY/1,1.0,0,0"), "{text}");
}

#[test]
fn bench_reports_one_row_per_k() {
    let g = fixture("er_n20_p0.3_s7.edges");
    let out = run(&[
        "bench",
        "--input",
        g.to_str().unwrap(),
        "--method",
        "coral",
        "--k",
        "1",
        "2",
        "3",
        "--max-dim",
        "1",
    ]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| !r[11].is_empty()));
}

#[test]
fn reduce_writes_trace_and_honors_skip_mutual() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = dir.path().join("k2.edges");
    fs::write(&k2, "1 2\n").unwrap();
    let k2 = k2.to_str().unwrap();

    let out_dir = dir.path().join("default");
    let out = run(&["reduce", "--input", k2, "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(out_dir.join("reduced.edges")).unwrap(),
        "1\n"
    );
    let trace = fs::read_to_string(out_dir.join("trace.csv")).unwrap();
    assert_eq!(
        trace.lines().collect::<Vec<_>>(),
        ["pruned_id,dominator_id,pass", "2,1,1"]
    );

    let strict = dir.path().join("strict");
    let out = run(&[
        "reduce",
        "--input",
        k2,
        "--skip-mutual",
        "--out",
        strict.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(strict.join("reduced.edges")).unwrap(),
        "1 2\n"
    );
}

#[test]
fn step_thresholds_coarsen_births() {
    let k3 = fixture("k3.edges");
    let filter = format!("attr:{}", fixture("k3_filter.csv").display());
    let k3 = k3.to_str().unwrap();
    let out = run(&["pd", "--input", k3, "--filter", &filter, "--step", "4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["dims"]["0"], serde_json::json!([[4.0, "inf"]]));
    assert_eq!(
        run(&["pd", "--input", k3, "--step", "0"]).status.code(),
        Some(2)
    );
}
