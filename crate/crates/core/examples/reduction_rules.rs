// The individual reduction rules on hand-built instances, each checked
// against the exact solver.

use reconfkit::kernel::{
    compute_core, find_thick_diamond, rule_remove_diamond_region, rule_strip_diamond_edges,
    rule_strip_high_degree_neighborhood, rule_trim_pendants, thick_diamonds, Thresholds,
};
use reconfkit::planar::embed;
use reconfkit::{solve_tar, Graph, ReconfInstance};

fn verdict(inst: &ReconfInstance) -> Result<bool, reconfkit::Error> {
    Ok(solve_tar(inst)?.is_some())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // thick diamond between 0 and 1 with a path through its middle
    let t = 11;
    let mut edges: Vec<(usize, usize)> = (2..2 + t).flat_map(|x| [(0, x), (1, x)]).collect();
    edges.extend((2..1 + t).map(|x| (x, x + 1)));
    let g = Graph::from_edges(2 + t, edges)?;
    let inst = ReconfInstance::cds(g.clone(), [0, 2, 1].into(), [0, 3, 1].into(), 3)?;
    let d = thick_diamonds(&g, 3 * inst.k()).into_iter().next().ok_or("diamond")?;
    let stripped = rule_strip_diamond_edges(&g, &d, inst.k())?;
    println!("strip diamond edges: {} -> {} edges", g.m(), stripped.m());
    let after = ReconfInstance::cds(stripped, [0, 2, 1].into(), [0, 3, 1].into(), 3)?;
    assert_eq!(verdict(&inst)?, verdict(&after)?);

    // very thick diamond around a universal vertex: a region is irrelevant
    let t = 18;
    let mut edges: Vec<(usize, usize)> = (2..2 + t).flat_map(|x| [(0, x), (1, x)]).collect();
    edges.push((0, 1));
    let g = Graph::from_edges(2 + t, edges)?;
    let inst = ReconfInstance::cds(g.clone(), [0].into(), [0].into(), 1)?;
    let core = compute_core(&g, 1, inst.source())?;
    if let Some(d) = find_thick_diamond(&g, Thresholds::new(core.len(), 1).diamond) {
        let out = rule_remove_diamond_region(&g, &embed(&g)?, &d, &core, 1)?;
        println!("remove diamond region: dropped {:?}", out.removed.as_slice());
    }

    // high degree: edges inside the neighbourhood go
    let mut edges: Vec<(usize, usize)> = (1..=20).map(|x| (0, x)).collect();
    edges.extend([(1, 2), (2, 3), (1, 3)]);
    let g = Graph::from_edges(21, edges)?;
    let core = compute_core(&g, 1, &[0].into())?;
    let out = rule_strip_high_degree_neighborhood(&g, &core, 1);
    println!("strip high-degree neighbourhood: {} -> {} edges", g.m(), out.m());

    // pendants beyond k + 1 are dropped
    let (trimmed, _) = rule_trim_pendants(&Graph::complete_bipartite(1, 9), 2);
    println!("trim pendants: star with 9 leaves keeps {}", trimmed.n() - 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
