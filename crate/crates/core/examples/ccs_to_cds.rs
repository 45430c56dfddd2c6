// Turning a colored connected subgraph instance into a connected
// dominating set instance with hub vertices and pendants.

use reconfkit::gadgets::ccsr_to_cdsr;
use reconfkit::{solve_tar, Coloring, Graph, ReconfInstance, Variant};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // colour classes {0, 1} and {2, 3}, each a clique
    let g = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2), (0, 3)])?;
    let c = Coloring::from_colors(vec![1, 1, 2, 2])?;
    let ccs = ReconfInstance::new(Variant::Ccs, g, Some(c), [1, 2].into(), [0, 3].into(), 3)?;
    let cds = ccsr_to_cdsr(&ccs)?;
    println!(
        "ccs: n = {}, k = {}  ->  cds: n = {}, k = {}",
        ccs.graph().n(),
        ccs.k(),
        cds.graph().n(),
        cds.k()
    );
    let before = solve_tar(&ccs)?.is_some();
    let after = solve_tar(&cds)?.is_some();
    println!("verdict before {before}, after {after}");
    assert_eq!(before, after);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
