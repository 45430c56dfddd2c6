mod common;

use common::*;
use proptest::prelude::*;
use reconfkit::gadgets::MccInstance;
use reconfkit::generate::{random_planar_cds, PlanarParams};
use reconfkit::io::{
    instance_to_json, parse_edge_list, parse_instance, parse_reconf_instance, parse_sequence, sequence_to_json,
    to_dot, to_edge_list, InstanceFile, Parsed,
};
use reconfkit::kernel::{kernelize, KernelTrace};
use reconfkit::{solve_tar, Coloring, Error, Graph, VertexSet};

const P3: &str = r#"{"format":"reconfig-instance/v1","variant":"cds","n":3,"edges":[[0,1],[1,2]],"source":[0,1],"target":[1,2],"k":2}"#;

fn field_of(err: Error) -> String {
    match err {
        Error::Field { field, .. } => field,
        other => panic!("expected a field error, got {other}"),
    }
}

#[test]
fn minimal_instance_parses() {
    let (inst, rot) = parse_reconf_instance(P3.as_bytes()).unwrap();
    assert_eq!(inst.graph().m(), 2);
    assert_eq!(inst.k(), 2);
    assert!(rot.is_none());
}

#[test]
fn errors_name_the_field() {
    let ccs = P3.replace("\"cds\"", "\"ccs\"");
    assert_eq!(field_of(parse_instance(ccs.as_bytes()).unwrap_err()), "colors");
    let looped = P3.replace("[1,2]],", "[0,0]],");
    let err = parse_instance(looped.as_bytes()).unwrap_err();
    assert!(err.to_string().contains("self-loop"));
    assert_eq!(field_of(err), "edges");
    let bad_source = P3.replace("\"source\":[0,1]", "\"source\":[0]");
    assert_eq!(field_of(parse_instance(bad_source.as_bytes()).unwrap_err()), "source");
    let range = P3.replace("\"target\":[1,2]", "\"target\":[1,7]");
    assert_eq!(field_of(parse_instance(range.as_bytes()).unwrap_err()), "target");
    let tag = P3.replace("v1", "v9");
    assert_eq!(field_of(parse_instance(tag.as_bytes()).unwrap_err()), "format");
    let dup = P3.replace("[1,2]],", "[1,2],[2,1]],");
    assert_eq!(field_of(parse_instance(dup.as_bytes()).unwrap_err()), "edges");
    let rot = P3.replace("\"k\":2", "\"k\":2,\"rotation\":[[1],[0],[1]]");
    assert_eq!(field_of(parse_instance(rot.as_bytes()).unwrap_err()), "rotation");
    assert!(matches!(parse_instance(b"{not json"), Err(Error::Json(_))));
    let extra = P3.replace("\"k\":2", "\"k\":2,\"bogus\":1");
    assert!(parse_instance(extra.as_bytes()).is_err());
}

#[test]
fn mcc_files_round_trip() {
    let mcc = MccInstance::new(Graph::complete(3), Coloring::from_colors(vec![1, 2, 3]).unwrap(), 3).unwrap();
    let json = InstanceFile::from_mcc(&mcc).to_json();
    assert_eq!(parse_instance(json.as_bytes()).unwrap(), Parsed::Mcc { instance: mcc, rotation: None });
    assert!(parse_reconf_instance(json.as_bytes()).is_err());
}

#[test]
fn sequences_round_trip_and_check_the_tag() {
    let (inst, _) = parse_reconf_instance(P3.as_bytes()).unwrap();
    let seq = solve_tar(&inst).unwrap().unwrap();
    let json = sequence_to_json(&seq);
    assert_eq!(parse_sequence(json.as_bytes()).unwrap(), seq);
    assert!(parse_sequence(json.replace("reconfig-sequence/v1", "x").as_bytes()).is_err());
}

#[test]
fn dot_and_edge_lists() {
    let g = Graph::cycle(4);
    let dot = to_dot(&g, &[0].into());
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert_eq!(parse_edge_list(&to_edge_list(&g), false).unwrap(), g);
    let dimacs = "c a comment\np edge 3 2\ne 1 2\ne 2 3\n";
    assert_eq!(parse_edge_list(dimacs, true).unwrap(), Graph::path(3));
    let header = "3 2\n0 1\n1 2\n";
    assert_eq!(parse_edge_list(header, false).unwrap(), Graph::path(3));
    assert!(parse_edge_list("p edge 2 1\ne 1 1\n", true).is_err());
    assert!(parse_edge_list("0 x\n", false).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn instances_round_trip(n in 1usize..30, k in 1usize..4, seed in any::<u64>(), with_rot in any::<bool>()) {
        let (inst, rs) = random_planar_cds(PlanarParams::new(n, k, seed)).unwrap();
        let rot = with_rot.then_some(&rs);
        let json = instance_to_json(&inst, rot);
        let (back, back_rot) = parse_reconf_instance(json.as_bytes()).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back_rot.as_ref(), rot);
        // serialization is a pure function of the value
        prop_assert_eq!(instance_to_json(&back, back_rot.as_ref()), json);
    }

    #[test]
    fn traces_round_trip(seed in 0u64..200) {
        for inst in [gen_r1(seed), gen_r4(seed)].into_iter().flatten() {
            let kernel = kernelize(&inst, None).unwrap();
            let json = serde_json::to_string(&kernel.trace).unwrap();
            let back: KernelTrace = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(&back, &kernel.trace);
            prop_assert_eq!(&back.replay(inst.graph()).unwrap().0, kernel.instance.graph());
        }
    }

    #[test]
    fn edge_lists_round_trip(n in 1usize..20, seed in any::<u64>()) {
        let (inst, _) = random_planar_cds(PlanarParams::new(n, 1, seed)).unwrap();
        let g = inst.graph();
        prop_assert_eq!(&parse_edge_list(&to_edge_list(g), false).unwrap(), g);
        let s: VertexSet = inst.source().clone();
        let dot = to_dot(g, &s);
        prop_assert_eq!(dot.matches("filled").count(), s.len());
        prop_assert_eq!(dot.matches(" -- ").count(), g.m());
    }
}
