//! Seeded random planar instances with a recorded embedding.
//!
//! A stacked triangulation is grown with a planted hub set that stays a
//! connected dominating set: every vertex is inserted into a triangle with
//! a hub corner. Edges are then dropped at random as long as the hubs
//! still form a connected dominating set. The source is the hub set, the
//! target a randomly pruned connected dominating set of size at most `k`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::ReconfInstance;
use crate::error::{Error, Result};
use crate::graph::{is_connected_induced, is_dominating, Graph, Vertex, VertexSet};
use crate::planar::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarParams {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    /// Probability of attempting to drop each triangulation edge.
    pub sparsify: f64,
}

impl PlanarParams {
    pub fn new(n: usize, k: usize, seed: u64) -> Self {
        PlanarParams {
            n,
            k,
            seed,
            sparsify: 0.5,
        }
    }
}

fn insert_after(list: &mut Vec<Vertex>, anchor: Vertex, x: Vertex) {
    let pos = list.iter().position(|&w| w == anchor).expect("anchor in rotation");
    list.insert(pos + 1, x);
}

/// Stacked triangulation on `n >= 3` vertices where `hubs` (ids below the
/// count) stay connected and dominating.
fn stacked(n: usize, hubs: usize, rng: &mut ChaCha8Rng) -> (Graph, RotationSystem) {
    let mut rot: Vec<Vec<Vertex>> = vec![vec![2, 1], vec![0, 2], vec![1, 0]];
    // each face a -> b -> c has succ_b(a) = c
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for x in 3..n {
        let usable: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].iter().any(|&v| v < hubs)).collect();
        let fi = *usable.choose(rng).expect("a face with a hub corner exists");
        let [a, b, c] = faces[fi];
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        insert_after(&mut rot[a], c, x);
        rot.push(vec![a, c, b]);
        faces[fi] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        edges.extend([(a, x), (b, x), (c, x)]);
    }
    (Graph::from_edges(n, edges).expect("valid edges"), RotationSystem::new(rot))
}

/// Removes vertices of `set` in random order while it stays a connected
/// dominating set.
fn prune(g: &Graph, set: &VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut cur = set.clone();
    let mut order = cur.clone().into_vec();
    order.shuffle(rng);
    for v in order {
        let smaller = cur.without(v);
        if is_dominating(g, &smaller) && is_connected_induced(g, &smaller) {
            cur = smaller;
        }
    }
    cur
}

/// A connected planar CDS instance with its embedding. Requires `n >= 1`
/// and `k >= 1`.
pub fn random_planar_cds(p: PlanarParams) -> Result<(ReconfInstance, RotationSystem)> {
    if p.n == 0 || p.k == 0 {
        return Err(Error::Invalid("need n >= 1 and k >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    if p.n < 3 {
        let g = Graph::path(p.n);
        let rs = RotationSystem::new((0..p.n).map(|v| g.neighbors(v).to_vec()).collect());
        let s = VertexSet::from([0]);
        return Ok((ReconfInstance::cds(g, s.clone(), s, p.k)?, rs));
    }
    // leave one token of slack for the reconfiguration when possible
    let hubs = p.k.saturating_sub(1).max(1).min(p.n);
    let (g, rs) = stacked(p.n, hubs, &mut rng);
    let hub_set: VertexSet = (0..hubs).collect();

    let mut all: Vec<(Vertex, Vertex)> = g.edges().collect();
    all.shuffle(&mut rng);
    let mut cur = g;
    let mut dropped = Vec::new();
    for e in all {
        if !rng.gen_bool(p.sparsify) {
            continue;
        }
        let next = cur.with_edge_changes(&[e], &[])?;
        if is_dominating(&next, &hub_set) && is_connected_induced(&next, &hub_set) {
            cur = next;
            dropped.push(e);
        }
    }
    let rs = rs.without_edges(&dropped);

    // scramble ids so hubs are not always the smallest
    let mut perm: Vec<Vertex> = (0..p.n).collect();
    perm.shuffle(&mut rng);
    let g = Graph::from_edges(p.n, cur.edges().map(|(a, b)| (perm[a], perm[b])))?;
    let mut rot = vec![Vec::new(); p.n];
    for v in 0..p.n {
        rot[perm[v]] = rs.rotation(v).iter().map(|&w| perm[w]).collect();
    }
    let rs = RotationSystem::new(rot);
    let source: VertexSet = hub_set.iter().map(|v| perm[v]).collect();

    let mut pool = source.clone();
    let extra: Vec<Vertex> = source.iter().flat_map(|v| g.neighbors(v).to_vec()).collect();
    for &x in extra.choose_multiple(&mut rng, 3) {
        pool.insert(x);
    }
    let target = prune(&g, &pool, &mut rng);
    let target = if target.len() <= p.k { target } else { source.clone() };
    Ok((ReconfInstance::cds(g, source, target, p.k)?, rs))
}
