use std::path::{Path, PathBuf};

use serde_json::Value;
use suspension_turan::cli::run;
use suspension_turan::graph::{complete_bipartite, parse_graph6, path, write_graph6, Graph};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Out {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn turan(args: &[&str]) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("turan").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn g6(g: &Graph) -> String {
    String::from_utf8(write_graph6(g)).unwrap()
}

#[test]
fn formula() {
    let o = turan(&["formula", "10", "2"]);
    assert_eq!(o.code, 0);
    let j = o.json();
    assert_eq!(j["value"], 27);
    assert!(j["maximizers"].as_array().unwrap().contains(&Value::from(5)));
    assert_eq!(j["branch"], "2 mod 4");
    assert_eq!(j["schema_version"], 1);
    assert_eq!(turan(&["formula", "5", "0"]).code, 2);
    assert_eq!(turan(&["formula", "x", "2"]).code, 2);
}

#[test]
fn decompose_and_family() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.tree", "-1 0 1 2\n");
    let o = turan(&["decompose", &p4, "1"]);
    assert_eq!(o.code, 0);
    let j = o.json();
    assert_eq!(j["valid"], true);
    assert_eq!(j["independent_set"].as_array().unwrap().len(), 1);
    assert_eq!(turan(&["decompose", &p4, "2", "--bruteforce"]).code, 0);
    assert_eq!(turan(&["decompose", &p4, "3"]).code, 2);
    let p4g6 = write(dir.path(), "p4.g6", &format!("{}\n", g6(&path(4))));
    let j = turan(&["family", &p4g6]).json();
    assert_eq!(j["minimal"], serde_json::json!(["BW"]));
    assert_eq!(j["raw"].as_array().unwrap().len(), 3);
}

#[test]
fn check_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.tree", "-1 0 1 2");
    let k55 = write(dir.path(), "k55.g6", &g6(&complete_bipartite(5, 5)));
    let o = turan(&["check", &k55, &p4, "--suspension"]);
    assert_eq!((o.code, o.json()["verdict"].clone()), (1, Value::from("absent")));
    let o = turan(&["check", &k55, &p4]);
    assert_eq!(o.code, 0);
    let j = o.json();
    assert_eq!(j["verdict"], "found");
    assert_eq!(j["embedding"].as_array().unwrap().len(), 4);
    let list = write(dir.path(), "k55.txt", &complete_bipartite(5, 5).to_edge_list());
    assert_eq!(
        turan(&["check", &list, &p4, "--suspension"]).stdout,
        suspension_stdout(&k55, &p4)
    );
    let big = write(dir.path(), "k88.g6", &g6(&complete_bipartite(8, 8)));
    let k3 = write(dir.path(), "k3.tree", "-1 0");
    let o = turan(&["check", &big, &k3, "--suspension", "--budget", "1"]);
    assert_eq!(
        (o.code, o.json()["verdict"].clone()),
        (1, Value::from("budget_exhausted"))
    );
}

fn suspension_stdout(host: &str, tree: &str) -> String {
    turan(&["check", host, tree, "--suspension"]).stdout
}

#[test]
fn construct_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.tree", "-1 0 1 2");
    let cert = dir.path().join("cert.g6");
    let o = turan(&["construct", "10", &p4, "--out", cert.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let j = o.json();
    assert_eq!(j["report"]["edge_count"], 27);
    assert_eq!(j["report"]["variant"], "Prop6");
    assert_eq!(j["freeness"], "absent");
    let text = std::fs::read_to_string(&cert).unwrap();
    let g = parse_graph6(text.trim().as_bytes()).unwrap();
    assert_eq!(g.edge_count(), 27);
    assert_eq!(j["certificate"], text.trim());
    let o = turan(&["construct", "9", &p4, "--variant", "SmallSideMatching"]);
    assert_eq!((o.code, o.json()["report"]["edge_count"].clone()), (0, Value::from(22)));
    let o = turan(&["construct", "9", &p4, "--variant", "Prop5"]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json()["report"], Value::Null);
    assert_eq!(turan(&["construct", "9", &p4, "--variant", "Nope"]).code, 2);
    // above 62 vertices the certificate is an edge list
    let j = turan(&["construct", "70", &p4]).json();
    let cert = j["certificate"].as_str().unwrap();
    assert_eq!(Graph::parse_edge_list(cert).unwrap().n(), 70);
}

#[test]
fn verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.tree", "-1 0 1 2");
    let o = turan(&["verify", &p4, "5", "12", "--oracle"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stderr.contains("Prop6"));
    let j = o.json();
    for row in j["rows"].as_array().unwrap() {
        assert_eq!(row["meets_target"], true);
        assert_eq!(row["freeness_verdict"], "absent");
        assert_eq!(row["status"], "ok");
        let n = row["n"].as_u64().unwrap();
        assert_eq!(row["oracle_value"].is_null(), n > 8);
    }
    assert_eq!(j["summary"]["ok"], true);
    let j = turan(&["verify", &p4, "4", "4", "--json"]).json();
    assert_eq!(j["rows"][0]["status"], "not_applicable");
    let spider = write(dir.path(), "s.tree", "-1 0 0 0 3 3 3");
    let j = turan(&["verify", &spider, "11", "11"]).json();
    assert_eq!(j["rows"][0]["construction_variant"], "Prop5");
    assert_eq!(j["rows"][0]["edge_count"], 36);
    assert_eq!(j["rows"][0]["f_value"], 36);
    let claw = write(dir.path(), "claw.tree", "-1 0 0 0");
    assert_eq!(turan(&["verify", &claw, "5", "6"]).code, 2);
}

#[test]
fn deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = write(dir.path(), "p6.tree", "-1 0 1 2 3 4");
    let a = turan(&["verify", &p6, "6", "30", "--oracle", "--threads", "1", "--json"]);
    let b = turan(&["verify", &p6, "6", "30", "--oracle", "--threads", "4", "--json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
}

#[test]
fn oracle_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.tree", "-1 0 1 2");
    let p4g = write(dir.path(), "p4.txt", &path(4).to_edge_list());
    let j = turan(&["oracle", "ex", "7", &p4g, "--suspend", "--prune"]).json();
    assert_eq!(j["value"], 14);
    let k3 = write(dir.path(), "k3.g6", "Bw\n");
    let j = turan(&["oracle", "ex", "6", &k3]).json();
    assert_eq!(
        (j["value"].clone(), j["extremal_graphs"].as_array().unwrap().len()),
        (Value::from(9), 1)
    );
    assert_eq!(turan(&["oracle", "ex", "10", &k3]).code, 2);
    assert_eq!(turan(&["oracle", "ex", "8", &k3, "--oracle-cap", "7"]).code, 2);
    let o = turan(&["oracle", "decomp-family", &p4, "--max-vertices", "4"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.json()["agrees"], true);
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "p4.txt", "-1 0 1 2");
    assert_eq!(turan(&["decompose", &bad, "1"]).code, 2);
    assert_eq!(turan(&["decompose", "/nonexistent.tree", "1"]).code, 2);
    let cyclic = write(dir.path(), "c.g6", "Cr\n");
    let o = turan(&["family", &cyclic]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("not a tree"));
    assert_eq!(turan(&["bogus"]).code, 2);
    assert_eq!(turan(&[]).code, 2);
    let help = turan(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn binary_entry_point() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(["formula", "11", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["value"], 36);
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_turan"))
        .arg("nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
