// Kernelizing a seeded random planar instance and replaying the trace.

use reconfkit::generate::{random_planar_cds, PlanarParams};
use reconfkit::kernel::kernelize;
use reconfkit::solve_tar;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (inst, rs) = random_planar_cds(PlanarParams::new(30, 2, 13))?;
    let kernel = kernelize(&inst, Some(&rs))?;
    println!(
        "{} vertices / {} edges -> {} / {} after {} rule applications",
        inst.graph().n(),
        inst.graph().m(),
        kernel.instance.graph().n(),
        kernel.instance.graph().m(),
        kernel.trace.len()
    );
    for e in &kernel.trace.entries {
        println!("  {:?} threshold {} anchors {:?}", e.rule, e.threshold, e.anchors);
    }
    let (replayed, _) = kernel.trace.replay(inst.graph())?;
    assert_eq!(&replayed, kernel.instance.graph());
    let reachable = solve_tar(&kernel.instance)?.is_some();
    println!("kernel verdict: {}", if reachable { "reachable" } else { "unreachable" });
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
