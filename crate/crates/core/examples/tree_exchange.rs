// Exchanging one spanning tree into another an edge at a time.

use reconfkit::gadgets::{is_spanning_tree, replay_exchange, tree_edge_exchange};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = [(1, 2), (2, 3), (3, 4), (4, 5)];
    let star = [(1, 3), (2, 3), (3, 4), (3, 5)];
    let order = [(3, 5), (1, 3), (2, 3), (3, 4)];
    let removed = tree_edge_exchange(5, &path, &star, &order)?;
    for (step, tree) in replay_exchange(&path, &order, &removed).iter().enumerate() {
        println!("T{step}: {tree:?}");
        assert!(is_spanning_tree(5, tree));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
