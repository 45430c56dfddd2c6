// A k-domination core: any set of at most k vertices dominating it
// dominates the whole graph.

use reconfkit::generate::{random_planar_cds, PlanarParams};
use reconfkit::kernel::{compute_core, is_domination_core};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (inst, _) = random_planar_cds(PlanarParams::new(14, 2, 3))?;
    let g = inst.graph();
    let must = inst.source().union(inst.target());
    let cert = compute_core(g, inst.k(), &must)?;
    println!(
        "n = {}, k = {}, core {:?} ({})",
        g.n(),
        inst.k(),
        cert.core.as_slice(),
        cert.method
    );
    assert!(is_domination_core(g, &cert.core, inst.k())?);
    assert!(must.is_subset(&cert.core));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
