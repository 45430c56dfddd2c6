use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use reconfkit::io::{parse_reconf_instance, parse_sequence};
use reconfkit::verify_sequence;

const P3: &str = r#"{"format":"reconfig-instance/v1","variant":"cds","n":3,"edges":[[0,1],[1,2]],"source":[0,1],"target":[1,2],"k":2}"#;
const C4: &str = r#"{"format":"reconfig-instance/v1","variant":"cds","n":4,"edges":[[0,1],[1,2],[2,3],[0,3]],"source":[0,1],"target":[2,3],"k":2}"#;
const TRIANGLE: &str = r#"{"format":"reconfig-instance/v1","variant":"mcc","n":3,"edges":[[0,1],[1,2],[0,2]],"colors":[1,2,3],"source":[],"target":[],"k":3}"#;

fn reconfig(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_reconfig"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "p3.json", P3);
    let seq_path = dir.path().join("seq.json");
    let out = reconfig(&["solve", &inst, "-o", seq_path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let seq = parse_sequence(&std::fs::read(&seq_path).unwrap()).unwrap();
    assert_eq!(seq.len(), 2);
    let out = reconfig(&["verify", &inst, seq_path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tampered_sequence_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "p3.json", P3);
    let seq = r#"{"format":"reconfig-sequence/v1","initial":[0,1],"moves":[{"op":"remove","vertex":1}]}"#;
    let seq = write(dir.path(), "seq.json", seq);
    let out = reconfig(&["verify", &inst, &seq], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("step 0"));
}

#[test]
fn unreachable_and_errors() {
    let out = reconfig(&["solve", "-"], Some(C4.as_bytes()));
    assert_eq!(out.status.code(), Some(1));
    // frozen at the source, so even a tiny budget proves unreachability
    let out = reconfig(&["solve", "-", "--max-states", "1"], Some(C4.as_bytes()));
    assert_eq!(out.status.code(), Some(1));
    let out = reconfig(&["solve", "-", "--max-states", "1"], Some(P3.as_bytes()));
    assert_eq!(out.status.code(), Some(2));
    let out = reconfig(&["solve", "--bogus"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    let out = reconfig(&["solve", "-"], Some(b"{}"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gadget_pipes_into_solve() {
    let out = reconfig(&["gen-gadget", "-", "--rep", "2"], Some(TRIANGLE.as_bytes()));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let solved = reconfig(&["solve", "-"], Some(&out.stdout));
    assert_eq!(solved.status.code(), Some(0));
    let (inst, _) = parse_reconf_instance(&out.stdout).unwrap();
    let seq = parse_sequence(&solved.stdout).unwrap();
    assert!(verify_sequence(&inst, &seq).is_ok());
}

#[test]
fn gadget_to_cds_with_layout_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let mcc = write(dir.path(), "tri.json", TRIANGLE);
    let layout = dir.path().join("layout.json");
    let dot = dir.path().join("g.dot");
    let out = reconfig(
        &[
            "gen-gadget",
            &mcc,
            "--rep",
            "1",
            "--to-cds",
            "--layout",
            layout.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let (inst, _) = parse_reconf_instance(&out.stdout).unwrap();
    assert_eq!(inst.variant(), reconfkit::Variant::Cds);
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("graph"));
    assert!(std::fs::read_to_string(layout).unwrap().contains("copies"));
}

#[test]
fn random_planar_is_reproducible_and_kernelizes() {
    let a = reconfig(&["gen-random-planar", "--n", "18", "--k", "3", "--seed", "7"], None);
    let b = reconfig(&["gen-random-planar", "--n", "18", "--k", "3", "--seed", "7"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let (inst, rot) = parse_reconf_instance(&a.stdout).unwrap();
    assert!(rot.is_some());
    assert_eq!(inst.graph().n(), 18);

    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let k = reconfig(&["kernelize", "-", "--trace", trace.to_str().unwrap()], Some(&a.stdout));
    assert_eq!(k.status.code(), Some(0));
    parse_reconf_instance(&k.stdout).unwrap();
    assert!(std::fs::read_to_string(trace).unwrap().contains("entries"));
    let core = reconfig(&["core", "-"], Some(&a.stdout));
    assert_eq!(core.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&core.stdout).contains("core"));
}

#[test]
fn embed_and_stats_from_edge_lists() {
    let k4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
    let out = reconfig(&["embed", "-", "--edge-list", "--one-based"], Some(k4.as_bytes()));
    assert_eq!(out.status.code(), Some(0));
    let rot: Vec<Vec<usize>> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rot.iter().all(|r| r.len() == 3));
    let k5: String = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| format!("{a} {b}\n")))
        .collect();
    let out = reconfig(&["embed", "-", "--edge-list"], Some(k5.as_bytes()));
    assert_eq!(out.status.code(), Some(1));
    let out = reconfig(&["stats", "-", "--edge-list"], Some(k5.as_bytes()));
    assert_eq!(out.status.code(), Some(0));
    let stats: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stats["degeneracy"], 4);
    assert_eq!(stats["m"], 10);
}
