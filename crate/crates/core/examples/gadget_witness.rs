// Builds the hardness gadget from a triangle and replays the explicit
// witness sequence.

use reconfkit::gadgets::{build_ccsr, forward_sequence, forward_sequence_length, segment_length, MccInstance};
use reconfkit::graph::degeneracy;
use reconfkit::{verify_sequence, Coloring, Graph};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mcc = MccInstance::new(Graph::complete(3), Coloring::from_colors(vec![1, 2, 3])?, 3)?;
    let (inst, layout) = build_ccsr(&mcc, 2)?;
    println!(
        "gadget: {} vertices, {} edges, {} colours, token bound {}, degeneracy {}",
        inst.graph().n(),
        inst.graph().m(),
        inst.coloring().map_or(0, |c| c.num_colors()),
        inst.k(),
        degeneracy(inst.graph()).0
    );
    let seq = forward_sequence(&layout, &[0, 1, 2])?;
    verify_sequence(&inst, &seq)?;
    println!(
        "witness: {} moves in segments of {}",
        seq.len(),
        segment_length(mcc.k())
    );
    assert_eq!(seq.len(), forward_sequence_length(mcc.k(), 2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
