// JSON instance and sequence files, DOT export and edge-list import.

use reconfkit::generate::{random_planar_cds, PlanarParams};
use reconfkit::io::{
    instance_to_json, parse_edge_list, parse_reconf_instance, parse_sequence, sequence_to_json, to_dot,
};
use reconfkit::solve_tar;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (inst, rs) = random_planar_cds(PlanarParams::new(8, 2, 1))?;
    let json = instance_to_json(&inst, Some(&rs));
    let (back, rot) = parse_reconf_instance(json.as_bytes())?;
    assert_eq!(back, inst);
    assert_eq!(rot.as_ref(), Some(&rs));
    println!("{json}");

    if let Some(seq) = solve_tar(&inst)? {
        let text = sequence_to_json(&seq);
        assert_eq!(parse_sequence(text.as_bytes())?, seq);
        println!("{text}");
    }
    println!("{}", to_dot(inst.graph(), inst.source()));

    let dimacs = "c triangle with a tail\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
    let g = parse_edge_list(dimacs, true)?;
    println!("edge list: n = {}, m = {}", g.n(), g.m());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
