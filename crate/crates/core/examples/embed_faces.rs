// Planar embedding, face tracing, touch sets and the two sides of a cycle.

use reconfkit::planar::{classify_by_cycle, embed, enumerate_faces, SubgraphFaces};
use reconfkit::Graph;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // wheel: hub 0 and rim 1..=5
    let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
    edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
    let wheel = Graph::from_edges(6, edges)?;

    let rs = embed(&wheel)?;
    let faces = enumerate_faces(&rs);
    println!("{} vertices, {} edges, {} faces", wheel.n(), wheel.m(), faces.len());
    assert_eq!(wheel.n() + faces.len(), wheel.m() + 2);

    let sides = classify_by_cycle(&wheel, &rs, &[1, 2, 3, 4, 5])?;
    let (with_hub, other) = sides.split_by(0);
    println!("rim separates {:?} from {:?}", with_hub.as_slice(), other.as_slice());

    // faces of the rim alone; the hub sits inside one of them
    let rim: Vec<(usize, usize)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
    let sub = SubgraphFaces::new(&wheel, &rs, &rim)?;
    let f = sub.location(0).ok_or("hub lies in a face")?;
    println!("touch set of the hub's face: {:?}", sub.touch_set(&wheel, f).as_slice());

    assert!(embed(&Graph::complete(5)).is_err());
    println!("K5 rejected as non-planar");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
