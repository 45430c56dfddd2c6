// The many-disjoint-paths rule on a wide planar ladder between two hubs.

use reconfkit::kernel::{compute_core, d_set, rule_path_region, Thresholds};
use reconfkit::planar::embed;
use reconfkit::{Graph, Vertex};

/// Hubs 0 and 1 joined by `m` paths `0 - a_i - b_i - 1`, consecutive
/// paths linked by rungs so the graph stays planar and 2-connected.
fn ladder(m: usize) -> Graph {
    let a = |i: usize| 2 + 2 * i;
    let b = |i: usize| 3 + 2 * i;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..m {
        edges.extend([(0, a(i)), (a(i), b(i)), (b(i), 1)]);
        if i + 1 < m {
            edges.extend([(a(i), a(i + 1)), (b(i), b(i + 1))]);
        }
    }
    Graph::from_edges(2 + 2 * m, edges).expect("valid ladder")
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = ladder(160);
    let k = 2;
    let core = compute_core(&g, k, &[0, 1].into())?;
    let d = d_set(&g, &core.core);
    let t = Thresholds::new(core.len(), k);
    println!(
        "|C| = {}, |D| = {}, needs degree and path count above {}",
        core.len(),
        d.len(),
        t.paths(d.len())
    );
    match rule_path_region(&g, &embed(&g)?, &core, &d, k)? {
        Some(out) => println!(
            "rule applied: {} -> {} vertices, removed {:?}, added edges {:?}",
            g.n(),
            out.graph.n(),
            out.entry.remove_vertices,
            out.entry.add_edges
        ),
        None => println!("rule does not apply"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
