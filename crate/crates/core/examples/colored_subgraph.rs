// The colored connected subgraph variant: every configuration must be
// connected and meet each colour class.

use reconfkit::{is_feasible, solve_tar, Coloring, Graph, ReconfInstance, Variant};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::path(4);
    let colors = Coloring::from_colors(vec![1, 2, 1, 2])?;
    for k in [2, 3] {
        let inst = ReconfInstance::new(Variant::Ccs, g.clone(), Some(colors.clone()), [0, 1].into(), [2, 3].into(), k)?;
        match solve_tar(&inst)? {
            Some(seq) => println!("k = {k}: {} moves", seq.len()),
            None => println!("k = {k}: unreachable"),
        }
        assert!(!is_feasible(&inst, &[1].into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
