// Shortest token addition/removal sequence between two connected
// dominating sets of a path on three vertices.

use reconfkit::{solve_tar, verify_sequence, Graph, ReconfInstance};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let inst = ReconfInstance::cds(Graph::path(3), [0, 1].into(), [1, 2].into(), 2)?;
    let seq = solve_tar(&inst)?.ok_or("P3 is reachable")?;
    for (i, config) in seq.configurations()?.iter().enumerate() {
        println!("step {i}: {:?}", config.as_slice());
    }
    verify_sequence(&inst, &seq)?;
    assert_eq!(seq.len(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
