use std::path::PathBuf;
use std::process::{Command as Proc, Output};

use proptest::prelude::*;
use replicated_cli::*;
use replicated_core::{Error, Quiver};

fn quiver_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../quivers").join(name)
}

fn replicated(args: &[&str]) -> Output {
    Proc::new(env!("CARGO_BIN_EXE_replicated")).args(args).output().expect("binary runs")
}

#[test]
fn parses_the_kronecker_file() {
    let q = read_quiver(&quiver_path("kronecker.json")).unwrap();
    assert_eq!(q, Quiver::kronecker());
}

#[test]
fn empty_arrow_list_is_semisimple() {
    let q = parse_quiver(r#"{"vertices":["x","y"],"arrows":[]}"#).unwrap();
    assert_eq!(q.vertex_count(), 2);
    assert!(q.paths().iter().all(|p| p.is_trivial()));
}

#[test]
fn rejects_cycles_and_duplicates() {
    let cyclic = r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"1"}]}"#;
    assert!(matches!(parse_quiver(cyclic), Err(CliError::Quiver(Error::CyclicQuiver(_)))));
    let dup = r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"2","to":"1"},{"name":"a","from":"2","to":"1"}]}"#;
    assert!(matches!(parse_quiver(dup), Err(CliError::Quiver(Error::DuplicateLabel(l))) if l == "a"));
    let unknown = r#"{"vertices":["1"],"arrows":[{"name":"a","from":"2","to":"1"}]}"#;
    assert!(matches!(parse_quiver(unknown), Err(CliError::Quiver(Error::UnknownVertex(_)))));
}

#[test]
fn parse_errors_carry_positions() {
    let text = "{\n  \"vertices\": [\"1\"],\n  \"arows\": []\n}";
    match parse_quiver(text) {
        Err(CliError::Parse { line, column, message }) => {
            assert_eq!(line, 3);
            assert!(column > 0);
            assert!(message.contains("arows"), "{message}");
        }
        other => panic!("{other:?}"),
    }
    let empty = "{\"vertices\": [\"1\"],\n \"arrows\": [{\"name\": \"\", \"from\": \"1\", \"to\": \"1\"}]}";
    assert!(matches!(parse_quiver(empty), Err(CliError::Parse { line: 2, column: 22, .. })));
}

fn dag() -> impl Strategy<Value = Quiver> {
    (1usize..6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..8)))
        .prop_map(|(n, pairs)| {
            let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            // Orienting every arrow from the larger index keeps the quiver acyclic.
            let arrows: Vec<(String, String, String)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .enumerate()
                .map(|(k, (a, b))| (format!("x{k}"), vertices[a.max(b)].clone(), vertices[a.min(b)].clone()))
                .collect();
            Quiver::new(&vertices, &arrows).unwrap()
        })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(q in dag()) {
        let text = serialize_quiver(&q);
        prop_assert_eq!(parse_quiver(&text).unwrap(), q);
    }
}

#[test]
fn run_reports_the_documented_examples() {
    let k = Quiver::kronecker();
    let (report, _) = run(&Command::Repdim, &Options::new(k.clone(), 1)).unwrap();
    assert!(report.passed());
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["results"][0]["values"]["gl_dim_end_m"]["value"], 3);
    assert_eq!(json["inventory"].as_array().unwrap().len(), 10);
    assert_eq!(json["instance"]["m"], 1);

    let (report, _) = run(&Command::Domdim, &Options::new(k, 2)).unwrap();
    assert!(report.passed());
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert!(json["results"][0]["values"]["dom_dim"]["value"].as_u64().unwrap() >= 2);
}

#[test]
fn unknown_target_is_an_error() {
    let cmd = Command::Lemma24 { target: Some("nope".into()), generator: GeneratorChoice::Auslander };
    assert!(matches!(run(&cmd, &Options::new(Quiver::a2(), 1)), Err(CliError::UnknownTarget(_))));
    let cmd = Command::Lemma24 { target: Some("U1.1".into()), generator: GeneratorChoice::Auslander };
    let (report, _) = run(&cmd, &Options::new(Quiver::a2(), 1)).unwrap();
    assert_eq!(report.results[0].witnesses.len(), 1);
}

#[test]
fn missing_quiver_is_a_usage_error() {
    let opts = Options { quiver: None, m: 1, cap: None, seed: 0, timing: false };
    assert!(matches!(run(&Command::Bounds, &opts), Err(CliError::Usage(_))));
}

#[test]
fn exit_codes() {
    let kron = quiver_path("kronecker.json");
    let a3 = quiver_path("a3.json");
    assert_eq!(replicated(&["example34"]).status.code(), Some(0));
    assert_eq!(replicated(&["bounds", "--quiver", kron.to_str().unwrap()]).status.code(), Some(0));
    // The dom.dim >= gl.dim - 1 check fails for A3 with m = 1.
    assert_eq!(replicated(&["domdim", "--quiver", a3.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(replicated(&["repdim", "--quiver", "/does/not/exist.json"]).status.code(), Some(2));
    let bad = replicated(&["lemma24", "--quiver", kron.to_str().unwrap(), "--target", "X9"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("X9"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = replicated(&["example34", "--report", "json", "--out", out.to_str().unwrap()]).status;
    assert_eq!(status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(json["results"][0]["verdict"], "pass");
    assert!(json["elapsed_ms"].is_null());
    let timed = replicated(&["example34", "--report", "json", "--timing"]);
    let json: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(json["elapsed_ms"].is_u64());
}
