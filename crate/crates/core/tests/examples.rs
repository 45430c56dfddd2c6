//! Every example runs to completion.

mod ccs_to_cds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ccs_to_cds.rs"));
}
mod cli_in_process {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_in_process.rs"));
}
mod colored_subgraph {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/colored_subgraph.rs"));
}
mod domination_core {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/domination_core.rs"));
}
mod embed_faces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/embed_faces.rs"));
}
mod file_formats {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/file_formats.rs"));
}
mod gadget_witness {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gadget_witness.rs"));
}
mod graph_toolkit {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graph_toolkit.rs"));
}
mod kernelize_planar {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/kernelize_planar.rs"));
}
mod path_rule {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/path_rule.rs"));
}
mod reduction_rules {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduction_rules.rs"));
}
mod solve_p3 {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve_p3.rs"));
}
mod tree_exchange {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tree_exchange.rs"));
}
mod verify_sequence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_sequence.rs"));
}

#[test]
fn ccs_to_cds_runs() {
    ccs_to_cds::run().unwrap();
}

#[test]
fn cli_in_process_runs() {
    cli_in_process::run().unwrap();
}

#[test]
fn colored_subgraph_runs() {
    colored_subgraph::run().unwrap();
}

#[test]
fn domination_core_runs() {
    domination_core::run().unwrap();
}

#[test]
fn embed_faces_runs() {
    embed_faces::run().unwrap();
}

#[test]
fn file_formats_runs() {
    file_formats::run().unwrap();
}

#[test]
fn gadget_witness_runs() {
    gadget_witness::run().unwrap();
}

#[test]
fn graph_toolkit_runs() {
    graph_toolkit::run().unwrap();
}

#[test]
fn kernelize_planar_runs() {
    kernelize_planar::run().unwrap();
}

#[test]
fn path_rule_runs() {
    path_rule::run().unwrap();
}

#[test]
fn reduction_rules_runs() {
    reduction_rules::run().unwrap();
}

#[test]
fn solve_p3_runs() {
    solve_p3::run().unwrap();
}

#[test]
fn tree_exchange_runs() {
    tree_exchange::run().unwrap();
}

#[test]
fn verify_sequence_runs() {
    verify_sequence::run().unwrap();
}
