use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use kuratowski::harness::{random_graph, Rng};
use kuratowski::Graph;
use kuratowski_cli::{parse_edge_list, print_edge_list, VerdictDocument};
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn kuratowski(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kuratowski"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_fixtures() {
    let out = kuratowski(&["check", &fixture("k5.txt")], None);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "nonplanar");
    assert_eq!(v["certificate"]["pattern"], "K5");

    let out = kuratowski(&["check", "--validate", &fixture("k4.txt")], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["euler"]["F"], 4);

    let out = kuratowski(&["check", "--via", "minor", &fixture("petersen.txt")], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["certificate"]["pattern"], "K33");
}

#[test]
fn input_errors_exit_two_with_line_numbers() {
    let out = kuratowski(&["check", &fixture("bad_vertex.txt")], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(kuratowski(&["check", "/no/such/file"], None).status.code(), Some(2));
    assert_eq!(kuratowski(&["check", "--budget", "0", &fixture("k4.txt")], None).status.code(), Some(2));
    assert_eq!(kuratowski(&["harness", "nonsense"], None).status.code(), Some(2));
    assert_eq!(kuratowski(&["bogus"], None).status.code(), Some(2));
}

#[test]
fn stdin_input() {
    let out = kuratowski(&["check", "-"], Some("n 3\n0 1\n1 2\n"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["euler"]["components"], 1);
}

#[test]
fn certify_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["k4.txt", "k5.txt", "petersen.txt"] {
        for via in ["subdivision", "minor"] {
            let out = kuratowski(&["check", "--via", via, &fixture(name)], None);
            let path = dir.path().join(format!("{name}.{via}.json"));
            std::fs::write(&path, &out.stdout).unwrap();
            let cert = kuratowski(&["certify", &fixture(name), path.to_str().unwrap()], None);
            assert_eq!(cert.status.code(), Some(0), "{name} via {via}");
            assert_eq!(cert.stdout, b"valid\n");
        }
    }
    // a K5 certificate does not certify K4
    let out = kuratowski(&["check", &fixture("k5.txt")], None);
    let cert = kuratowski(&["certify", &fixture("k4.txt"), "-"], Some(&String::from_utf8_lossy(&out.stdout)));
    assert_eq!(cert.status.code(), Some(1));
}

#[test]
fn lemmas_and_harness_commands() {
    let out = kuratowski(&["lemmas", &fixture("k5.txt")], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["condition1"], true);
    assert_eq!(v["condition3"], true);

    let out = kuratowski(&["harness", "genus"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("campaign=genus\nstatus=pass\n"), "{text}");
    assert!(text.contains("counter.genus.K5=1\n"));
}

#[test]
fn random_graphs_round_trip() {
    let mut rng = Rng::new(3);
    for i in 0..100 {
        let g = random_graph(rng.below(12), [0.2, 0.5, 0.8][i % 3], &mut rng).unwrap();
        assert_eq!(parse_edge_list(&print_edge_list(&g)).unwrap(), g);
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..10).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mask = bits.iter().enumerate().filter(|(_, &b)| b).fold(0u128, |m, (i, _)| m | 1 << i);
            Graph::from_mask(n, mask).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(g in small_graph()) {
        prop_assert_eq!(parse_edge_list(&print_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn verdict_documents_round_trip(g in small_graph()) {
        let v = kuratowski::planarity::decide(&g, &kuratowski::DecisionConfig::default()).unwrap();
        let doc = VerdictDocument::from_verdict(&v);
        let back = VerdictDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.certify(&g), Ok(()));
    }
}
