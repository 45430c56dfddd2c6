// Degeneracy, domination checks and vertex-disjoint paths.

use reconfkit::graph::{degeneracy, is_connected_induced, is_dominating, max_vertex_disjoint_paths, pendant_neighbors};
use reconfkit::{Graph, VertexSet};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let k23 = Graph::complete_bipartite(2, 3);
    let (d, order) = degeneracy(&k23);
    println!("K_(2,3) is {d}-degenerate, peeling order {order:?}");

    let set = VertexSet::from([0, 2]);
    println!(
        "{{0, 2}} dominating: {}, connected: {}",
        is_dominating(&k23, &set),
        is_connected_induced(&k23, &set)
    );

    let paths = max_vertex_disjoint_paths(&k23, 0, 1, &VertexSet::new(), 2)?;
    println!("{} disjoint paths between the two hubs: {paths:?}", paths.len());
    assert_eq!(paths.len(), 3);

    let star = Graph::complete_bipartite(1, 4);
    println!("pendants of the star centre: {:?}", pendant_neighbors(&star, 0)?.as_slice());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
