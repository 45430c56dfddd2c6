//! Independent oracles and seeded instance generators shared by the
//! integration tests and the acceptance report.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconfkit::gadgets::MccInstance;
use reconfkit::generate::{random_planar_cds, PlanarParams};
use reconfkit::kernel::{compute_core, Thresholds};
use reconfkit::{Coloring, Graph, ReconfInstance, Variant, Vertex, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------
// naive oracles, written against plain adjacency queries only

pub fn naive_dominating(g: &Graph, set: &BTreeSet<Vertex>) -> bool {
    (0..g.n()).all(|v| set.contains(&v) || g.neighbors(v).iter().any(|w| set.contains(w)))
}

pub fn naive_connected(g: &Graph, set: &BTreeSet<Vertex>) -> bool {
    let Some(&start) = set.iter().next() else { return false };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

pub fn naive_feasible(inst: &ReconfInstance, set: &BTreeSet<Vertex>) -> bool {
    let g = inst.graph();
    set.len() <= inst.k()
        && match inst.variant() {
            Variant::Ds => naive_dominating(g, set),
            Variant::Cds => naive_dominating(g, set) && naive_connected(g, set),
            Variant::Ccs => {
                let c = inst.coloring().unwrap();
                let hit: BTreeSet<u32> = set.iter().map(|&v| c.color(v)).collect();
                naive_connected(g, set) && hit.len() == c.num_colors() as usize
            }
        }
}

/// BFS over explicit vertex sets trying every single add and remove.
pub fn naive_distance(inst: &ReconfInstance) -> Option<usize> {
    let s: BTreeSet<Vertex> = inst.source().iter().collect();
    let t: BTreeSet<Vertex> = inst.target().iter().collect();
    let mut seen = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((cur, d)) = queue.pop_front() {
        if cur == t {
            return Some(d);
        }
        for v in 0..inst.graph().n() {
            let mut next = cur.clone();
            if !next.remove(&v) {
                next.insert(v);
            }
            if naive_feasible(inst, &next) && seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    None
}

/// Every subset of size at most `k`, in increasing size.
pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k.min(n) {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l: &Vertex| l + 1);
            for v in start..n {
                let mut t: Vec<Vertex> = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All connected dominating sets with at most `k` vertices.
pub fn all_cds(g: &Graph, k: usize) -> Vec<VertexSet> {
    subsets_up_to(g.n(), k)
        .into_iter()
        .filter(|s| {
            let b: BTreeSet<Vertex> = s.iter().copied().collect();
            naive_dominating(g, &b) && naive_connected(g, &b)
        })
        .map(VertexSet::from)
        .collect()
}

/// Whether every set of at most `k` vertices dominating `c` dominates `g`.
pub fn brute_is_core(g: &Graph, c: &VertexSet, k: usize) -> bool {
    subsets_up_to(g.n(), k).into_iter().all(|x| {
        let b: BTreeSet<Vertex> = x.into_iter().collect();
        let dom_c = c.iter().all(|v| b.contains(&v) || g.neighbors(v).iter().any(|w| b.contains(w)));
        !dom_c || naive_dominating(g, &b)
    })
}

/// Multicolored clique by trying every vertex subset of size `k`.
pub fn brute_mcc(g: &Graph, colors: &[u32], k: usize) -> bool {
    subsets_up_to(g.n(), k).into_iter().filter(|s| s.len() == k).any(|s| {
        let cols: BTreeSet<u32> = s.iter().map(|&v| colors[v]).collect();
        cols.len() == k && s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Faces of a rotation system traced directly from the lists.
pub fn naive_face_count(rot: &[Vec<Vertex>]) -> usize {
    let succ = |v: Vertex, w: Vertex| {
        let r = &rot[v];
        let i = r.iter().position(|&x| x == w).unwrap();
        r[(i + 1) % r.len()]
    };
    let mut seen = HashSet::new();
    let mut faces = 0;
    for (a, list) in rot.iter().enumerate() {
        for &b in list {
            if seen.contains(&(a, b)) {
                continue;
            }
            faces += 1;
            let (mut x, mut y) = (a, b);
            while seen.insert((x, y)) {
                let z = succ(y, x);
                x = y;
                y = z;
            }
        }
    }
    faces
}

/// Euler's formula per component: faces are traced per component, so every
/// component with an edge satisfies `V_i - E_i + F_i = 2`.
pub fn euler_holds(g: &Graph, rot: &[Vec<Vertex>]) -> bool {
    let comps = g.components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    let nontrivial = comps.len() - isolated;
    let f = naive_face_count(rot);
    (g.n() - isolated) as i64 - g.m() as i64 + f as i64 == 2 * nontrivial as i64
}

pub fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

pub fn random_perm(n: usize, r: &mut ChaCha8Rng) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(r);
    p
}

/// Picks a source and target among the feasible sets, or `None`.
pub fn pick_endpoints(g: &Graph, k: usize, r: &mut ChaCha8Rng) -> Option<ReconfInstance> {
    let feasible = all_cds(g, k);
    let s = feasible.choose(r)?.clone();
    let t = if r.gen_bool(0.25) { s.clone() } else { feasible.choose(r)?.clone() };
    ReconfInstance::cds(g.clone(), s, t, k).ok()
}

// ---------------------------------------------------------------------
// Multicolored Clique inputs

/// Every 2-coloured bipartite edge set on up to 4 vertices plus random
/// inputs on 5 and 6 vertices.
pub fn mcc_catalog_k2() -> Vec<MccInstance> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for a in 1..n {
            let colors: Vec<u32> = (0..n).map(|v| if v < a { 1 } else { 2 }).collect();
            let cross: Vec<(Vertex, Vertex)> = (0..a).flat_map(|x| (a..n).map(move |y| (x, y))).collect();
            for mask in 0..(1u32 << cross.len()) {
                let edges = cross.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                out.push(MccInstance::new(g, Coloring::from_colors(colors.clone()).unwrap(), 2).unwrap());
            }
        }
    }
    let mut r = rng(0xC0FFEE);
    for n in [5usize, 6] {
        for _ in 0..8 {
            let a = r.gen_range(1..n);
            let colors: Vec<u32> = (0..n).map(|v| if v < a { 1 } else { 2 }).collect();
            let p = [0.0, 0.15, 0.3, 0.5][r.gen_range(0..4)];
            let edges: Vec<_> = (0..a).flat_map(|x| (a..n).map(move |y| (x, y))).filter(|_| r.gen_bool(p)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            out.push(MccInstance::new(g, Coloring::from_colors(colors).unwrap(), 2).unwrap());
        }
    }
    out
}

/// Small 3-coloured inputs built around triangles.
pub fn triangle_family_k3() -> Vec<MccInstance> {
    type Case = (usize, Vec<(Vertex, Vertex)>, Vec<u32>);
    let cases: Vec<Case> = vec![
        (3, vec![(0, 1), (1, 2), (0, 2)], vec![1, 2, 3]),
        (4, vec![(0, 1), (1, 2), (0, 2), (2, 3)], vec![1, 2, 3, 1]),
        (4, vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)], vec![1, 2, 3, 3]),
        (5, vec![(0, 1), (1, 2), (0, 2), (3, 4), (0, 4)], vec![1, 2, 3, 1, 2]),
        (6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)], vec![1, 2, 3, 1, 2, 3]),
    ];
    cases
        .into_iter()
        .map(|(n, e, c)| MccInstance::new(Graph::from_edges(n, e).unwrap(), Coloring::from_colors(c).unwrap(), 3).unwrap())
        .collect()
}

// ---------------------------------------------------------------------
// rule precondition generators; each returns a relabelled instance

/// Diamond of thickness above `3k` with at least one internal edge.
pub fn gen_r1(seed: u64) -> Option<ReconfInstance> {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3usize);
    let t = 3 * k + 1 + r.gen_range(0..=2usize);
    let mut n = 2 + t;
    let xs: Vec<Vertex> = (2..2 + t).collect();
    let mut edges: Vec<(Vertex, Vertex)> = xs.iter().flat_map(|&x| [(0, x), (1, x)]).collect();
    if r.gen_bool(0.6) {
        edges.push((0, 1));
    }
    // x_i x_{i+1} edges sit inside the face between them
    let mut internal = 0;
    for i in 0..t - 1 {
        if r.gen_bool(0.35) {
            edges.push((xs[i], xs[i + 1]));
            internal += 1;
        }
    }
    if internal == 0 {
        let i = r.gen_range(0..t - 1);
        edges.push((xs[i], xs[i + 1]));
    }
    let extras = r.gen_range(0..=3usize).min(20 - n);
    for _ in 0..extras {
        let host = if r.gen_bool(0.5) { 0 } else { r.gen_range(0..n) };
        edges.push((host, n));
        n += 1;
    }
    let g = relabel(&Graph::from_edges(n, edges).unwrap(), &random_perm(n, &mut r));
    pick_endpoints(&g, k, &mut r)
}

/// `k = 1`: a universal hub `u`, a neighbour `v`, a diamond on `u, v`
/// without internal edges and some pendants of `u`. Accepted when the
/// diamond is thicker than `4|C| + 3k + 1` for the computed core.
pub fn gen_r2(seed: u64) -> Option<ReconfInstance> {
    let mut r = rng(seed);
    let pendants = r.gen_range(0..=3usize);
    let t = r.gen_range(13..=18usize).min(18 - pendants);
    let n = 2 + t + pendants;
    let mut edges: Vec<(Vertex, Vertex)> = (2..2 + t).flat_map(|x| [(0, x), (1, x)]).collect();
    edges.push((0, 1));
    edges.extend((2 + t..n).map(|p| (0, p)));
    let g = relabel(&Graph::from_edges(n, edges).unwrap(), &random_perm(n, &mut r));
    let inst = pick_endpoints(&g, 1, &mut r)?;
    let c = compute_core(inst.graph(), 1, &inst.source().union(inst.target())).ok()?;
    (t > Thresholds::new(c.len(), 1).diamond).then_some(inst)
}

/// `k = 1`: a hub whose neighbours carry some fan edges and whose degree
/// exceeds `(4|C| + 3k + 1) k`.
pub fn gen_r3(seed: u64) -> Option<ReconfInstance> {
    let mut r = rng(seed);
    let d = r.gen_range(13..=19usize);
    let n = d + 1;
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|x| (0, x)).collect();
    let mut fan = 0;
    for i in 1..d {
        if r.gen_bool(0.4) {
            edges.push((i, i + 1));
            fan += 1;
        }
    }
    if fan == 0 {
        edges.push((1, 2));
    }
    let g = relabel(&Graph::from_edges(n, edges).unwrap(), &random_perm(n, &mut r));
    let inst = pick_endpoints(&g, 1, &mut r)?;
    let c = compute_core(inst.graph(), 1, &inst.source().union(inst.target())).ok()?;
    let t = Thresholds::new(c.len(), 1);
    let hub = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
    let no_thick = reconfkit::kernel::find_thick_diamond(&g, t.diamond).is_none();
    (g.degree(hub) > t.degree && no_thick).then_some(inst)
}

/// `k = 1`: adjacent hubs `a`, `b` with `t` common neighbours and pendants on
/// `b`, so that `S = T = {b}`. The degree of `a` passes the nominal R3
/// bound while no diamond is thick: `a` is heavy yet never in a solution.
pub fn gen_adjacent_hubs(seed: u64) -> Option<ReconfInstance> {
    let mut r = rng(seed);
    let t = r.gen_range(8..=18usize);
    let pendants = r.gen_range(1..=2usize);
    let n = 2 + t + pendants;
    let mut edges: Vec<(Vertex, Vertex)> = (2..2 + t).flat_map(|x| [(0, x), (1, x)]).collect();
    edges.push((0, 1));
    edges.extend((2 + t..n).map(|p| (1, p)));
    let perm = random_perm(n, &mut r);
    let g = relabel(&Graph::from_edges(n, edges).unwrap(), &perm);
    let b = VertexSet::from([perm[1]]);
    let inst = ReconfInstance::cds(g, b.clone(), b, 1).ok()?;
    let c = compute_core(inst.graph(), 1, inst.source()).ok()?;
    let th = Thresholds::new(c.len(), 1);
    let no_thick = reconfkit::kernel::find_thick_diamond(inst.graph(), th.diamond).is_none();
    (no_thick && t + 1 > th.nominal_degree).then_some(inst)
}

/// A random planar instance with more than `k + 1` pendants on one vertex.
pub fn gen_r4(seed: u64) -> Option<ReconfInstance> {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3usize);
    let base_n = r.gen_range(4..=12usize);
    let (base, _) = random_planar_cds(PlanarParams::new(base_n, k, seed)).ok()?;
    let hub = r.gen_range(0..base_n);
    let extra = (k + 2 + r.gen_range(0..=2usize)).min(20 - base_n);
    if extra <= k + 1 {
        return None;
    }
    let mut edges: Vec<(Vertex, Vertex)> = base.graph().edges().collect();
    edges.extend((base_n..base_n + extra).map(|p| (hub, p)));
    let n = base_n + extra;
    let g = relabel(&Graph::from_edges(n, edges).unwrap(), &random_perm(n, &mut r));
    pick_endpoints(&g, k, &mut r)
}

/// Ladder of `m` paths `u a_i b_i v` with `commons` common neighbours of
/// `u, v`, optional edge `uv` and diagonals `a_i b_{i+1}` every `diag`
/// rungs. `u = 0`, `v = 1`.
pub fn ladder(m: usize, uv: bool, diag: usize, commons: usize) -> Graph {
    let base = 2 + commons;
    let mut e = Vec::new();
    for c in 2..base {
        e.extend([(0, c), (1, c)]);
    }
    if uv {
        e.push((0, 1));
    }
    for i in 0..m {
        let (a, b) = (base + 2 * i, base + 1 + 2 * i);
        e.extend([(0, a), (a, b), (b, 1)]);
        if diag > 0 && i + 1 < m && i % diag == 0 {
            e.push((a, b + 2));
        }
    }
    Graph::from_edges(base + 2 * m, e).unwrap()
}

/// Large ladder instance on which the path rule fires.
pub fn gen_r5_large(seed: u64) -> ReconfInstance {
    let mut r = rng(seed);
    let k = if r.gen_bool(0.4) { 2 } else { 3 };
    let uv = k == 2 || r.gen_bool(0.5);
    let commons = r.gen_range(1..=3usize);
    let diag = r.gen_range(0..=3usize);
    let m = if k == 2 { 110 } else { 240 } + r.gen_range(0..10usize);
    let g = ladder(m, uv, diag, commons);
    let (s, t): (VertexSet, VertexSet) = if k == 2 {
        ([0, 1].into(), [0, 1].into())
    } else {
        let c1 = 2;
        let c2 = 2 + r.gen_range(0..commons);
        ([0, c1, 1].into(), [0, c2, 1].into())
    };
    let perm = random_perm(g.n(), &mut r);
    let map = |s: &VertexSet| s.iter().map(|v| perm[v]).collect::<VertexSet>();
    ReconfInstance::cds(relabel(&g, &perm), map(&s), map(&t), k).unwrap()
}

/// Seeds `0..` until `count` instances are produced.
pub fn collect<F: Fn(u64) -> Option<ReconfInstance>>(gen: F, count: usize, max_seeds: u64) -> Vec<ReconfInstance> {
    (0..max_seeds).filter_map(gen).take(count).collect()
}
