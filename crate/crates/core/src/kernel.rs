//! Planar kernelization for connected dominating set reconfiguration.
//!
//! The pipeline keeps a `k`-domination core `C` containing `S ∪ T`, and
//! applies five rules in a fixed order, recomputing the core and
//! restarting after every application:
//!
//! * R1 strips internal edges of diamonds thicker than `3k`,
//! * R2 deletes the region around a middle common neighbour of a diamond
//!   thicker than `4|C| + 3k + 1`,
//! * R3 strips edges inside the neighbourhood of a vertex of degree above
//!   `(4|C| + 3k + 1) k`,
//! * R4 keeps `k + 1` pendants per vertex,
//! * R5 deletes the two middle vertices of a bundle of many disjoint
//!   `u`–`v` paths, possibly adding one edge.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::{Bits, Masks};
use crate::engine::{ReconfInstance, Variant};
use crate::error::{Error, Result};
use crate::graph::{max_vertex_disjoint_paths, ordered, pendant_neighbors, Graph, Vertex, VertexMap, VertexSet};
use crate::planar::{compute_or_validate_embedding, enumerate_faces, FaceId, RotationSystem, SubgraphFaces};

/// Default cap on branching nodes explored by the core check.
pub const DEFAULT_CORE_BUDGET: usize = 20_000_000;

/// A verified `k`-domination core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreCert {
    pub core: VertexSet,
    pub k: usize,
    /// How the core property was established.
    pub method: String,
}

impl CoreCert {
    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }
}

/// Looks for `X` with `|X| <= k` dominating `core` but not all of `g`.
/// Returns `(X, z)` with `z` undominated by `X`.
fn core_counterexample(
    g: &Graph,
    core: &VertexSet,
    k: usize,
    budget: usize,
) -> Result<Option<(VertexSet, Vertex)>> {
    let masks = Masks::new(g);
    let n = g.n();
    let core_bits = Bits::from_iter(n, core.iter());
    let mut nodes = 0usize;

    struct Search<'a> {
        masks: &'a Masks,
        core: &'a [Vertex],
        allowed: Bits,
        k: usize,
        nodes: &'a mut usize,
        budget: usize,
    }

    impl Search<'_> {
        fn run(&mut self, chosen: &mut Vec<Vertex>, dominated: &Bits) -> Result<bool> {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(Error::BudgetExceeded { limit: self.budget });
            }
            // undominated core vertex with the fewest usable dominators
            let mut best: Option<(usize, Vertex)> = None;
            for &c in self.core {
                if dominated.get(c) {
                    continue;
                }
                let options = self.masks.closed[c].and(&self.allowed).count();
                if best.is_none_or(|(b, _)| options < b) {
                    best = Some((options, c));
                }
            }
            let Some((options, c)) = best else {
                return Ok(true);
            };
            if chosen.len() == self.k || options == 0 {
                return Ok(false);
            }
            let cands: Vec<Vertex> = self.masks.closed[c].and(&self.allowed).ones_iter().collect();
            for y in cands {
                let mut next = dominated.clone();
                next.or_assign(&self.masks.closed[y]);
                chosen.push(y);
                if self.run(chosen, &next)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            Ok(false)
        }
    }

    for z in g.vertices() {
        if core_bits.get(z) {
            continue;
        }
        let mut allowed = Bits::ones(n);
        for w in masks.closed[z].ones_iter() {
            allowed.clear(w);
        }
        let mut search = Search {
            masks: &masks,
            core: core.as_slice(),
            allowed,
            k,
            nodes: &mut nodes,
            budget,
        };
        let mut chosen = Vec::new();
        if search.run(&mut chosen, &Bits::zeros(n))? {
            return Ok(Some((chosen.into_iter().collect(), z)));
        }
    }
    Ok(None)
}

/// Whether every `X` with `|X| <= k` that dominates `c_set` dominates `g`.
/// Exact branching on undominated core vertices.
pub fn is_domination_core(g: &Graph, c_set: &VertexSet, k: usize) -> Result<bool> {
    is_domination_core_with(g, c_set, k, DEFAULT_CORE_BUDGET)
}

pub fn is_domination_core_with(g: &Graph, c_set: &VertexSet, k: usize, budget: usize) -> Result<bool> {
    c_set.check_in(g)?;
    Ok(core_counterexample(g, c_set, k, budget)?.is_none())
}

/// A core containing `must_contain`, minimal under single-vertex removal
/// among vertices outside `must_contain`.
pub fn compute_core(g: &Graph, k: usize, must_contain: &VertexSet) -> Result<CoreCert> {
    compute_core_with(g, k, must_contain, DEFAULT_CORE_BUDGET)
}

pub fn compute_core_with(g: &Graph, k: usize, must_contain: &VertexSet, budget: usize) -> Result<CoreCert> {
    must_contain.check_in(g)?;
    let mut core = must_contain.clone();
    // grow: every counterexample leaves some vertex undominated; add it
    while let Some((_, z)) = core_counterexample(g, &core, k, budget)? {
        core.insert(z);
    }
    // shrink: the property is monotone in the core, so one pass suffices
    for v in core.clone().iter() {
        if must_contain.contains(v) {
            continue;
        }
        let smaller = core.without(v);
        if core_counterexample(g, &smaller, k, budget)?.is_none() {
            core = smaller;
        }
    }
    Ok(CoreCert {
        core,
        k,
        method: "exact branching over dominators of undominated core vertices".into(),
    })
}

/// Classes of `V \ A` by projection `N(v) ∩ A`, ordered by projection.
pub fn projection_classes(g: &Graph, a: &VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let mut classes: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices().filter(|&v| !a.contains(v)) {
        let proj: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| a.contains(w)).collect();
        classes.entry(proj).or_default().push(v);
    }
    classes
        .into_iter()
        .map(|(p, m)| (VertexSet::from(p), VertexSet::from(m)))
        .collect()
}

/// `{u, v}` with their common neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diamond {
    pub u: Vertex,
    pub v: Vertex,
    pub common: VertexSet,
}

impl Diamond {
    pub fn new(g: &Graph, u: Vertex, v: Vertex) -> Result<Self> {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v {
            return Err(Error::Invalid("a diamond needs two distinct vertices".into()));
        }
        let (u, v) = ordered(u, v);
        Ok(Diamond {
            u,
            v,
            common: g.common_neighbors(u, v).into(),
        })
    }

    pub fn thickness(&self) -> usize {
        self.common.len()
    }

    /// Edges with both ends in the common neighbourhood.
    pub fn internal_edges(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in self.common.iter() {
            for &b in g.neighbors(a) {
                if a < b && self.common.contains(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// All diamonds of thickness above `threshold`, by `(u, v)`.
pub fn thick_diamonds(g: &Graph, threshold: usize) -> Vec<Diamond> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
        for &x in g.neighbors(u) {
            for &v in g.neighbors(x) {
                if v > u {
                    *count.entry(v).or_default() += 1;
                }
            }
        }
        for (v, c) in count {
            if c > threshold {
                out.push(Diamond::new(g, u, v).expect("valid pair"));
            }
        }
    }
    out
}

/// The diamond with smallest `(u, v)` of thickness above `threshold`.
pub fn find_thick_diamond(g: &Graph, threshold: usize) -> Option<Diamond> {
    thick_diamonds(g, threshold).into_iter().next()
}

/// Thresholds of the rules for the current core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    /// R1 fires above `3k`.
    pub strip: usize,
    /// R2 fires above `4|C| + 3k + 1`.
    pub diamond: usize,
    /// R3 fires above `(4|C| + 3k + 2) k`. The neighbour covering a `1/k`
    /// share of `N(v)` may itself lie in `N(v)`, which costs one common
    /// neighbour, so the bare `(4|C| + 3k + 1) k` bound is one short.
    pub degree: usize,
    /// The uncorrected bound `(4|C| + 3k + 1) k`.
    pub nominal_degree: usize,
    /// R4 keeps this many pendants.
    pub pendants: usize,
}

impl Thresholds {
    pub fn new(core_size: usize, k: usize) -> Self {
        let diamond = 4 * core_size + 3 * k + 1;
        Thresholds {
            strip: 3 * k,
            diamond,
            degree: (diamond + 1) * k,
            nominal_degree: diamond * k,
            pendants: k + 1,
        }
    }

    /// R5 fires above `4|D| + (4|C| + 3k + 1) k + 1`.
    pub fn paths(&self, d_size: usize) -> usize {
        4 * d_size + self.nominal_degree + 1
    }
}

/// R1: removes every edge inside the common neighbourhood.
pub fn rule_strip_diamond_edges(g: &Graph, d: &Diamond, k: usize) -> Result<Graph> {
    if d.thickness() <= 3 * k {
        return Err(Error::Precondition(format!(
            "diamond thickness {} does not exceed 3k = {}",
            d.thickness(),
            3 * k
        )));
    }
    g.with_edge_changes(&d.internal_edges(g), &[])
}

/// Outcome of R2.
#[derive(Clone, Debug)]
pub struct RegionRemoval {
    pub graph: Graph,
    pub rotation: RotationSystem,
    pub removed: VertexSet,
    pub map: VertexMap,
    /// The two untouched faces of the diamond that were chosen.
    pub faces: (FaceId, FaceId),
    /// `x_1, x_2, x_3` of the chosen face pair.
    pub x: [Vertex; 3],
}

/// R2: removes everything strictly inside the cycle `u, x_1, v, x_3` on the
/// side of `x_2`, where the faces `u x_1 v x_2` and `u x_2 v x_3` of the
/// diamond are untouched by `C \ {u, v}`.
pub fn rule_remove_diamond_region(
    g: &Graph,
    rs: &RotationSystem,
    d: &Diamond,
    core: &CoreCert,
    k: usize,
) -> Result<RegionRemoval> {
    let t = Thresholds::new(core.len(), k);
    if d.thickness() <= t.diamond {
        return Err(Error::Precondition(format!(
            "diamond thickness {} does not exceed 4|C| + 3k + 1 = {}",
            d.thickness(),
            t.diamond
        )));
    }
    if !d.internal_edges(g).is_empty() {
        return Err(Error::Precondition("diamond still has internal edges".into()));
    }
    let (u, v) = (d.u, d.v);
    let h_edges: Vec<(Vertex, Vertex)> = d.common.iter().flat_map(|x| [(u, x), (v, x)]).collect();
    let sub = SubgraphFaces::new(g, rs, &h_edges)?;
    let anchors = VertexSet::from([u, v]);
    let blockers = core.core.difference(&anchors);
    let untouched = |f: FaceId| sub.touch_set_excluding(g, f, &anchors).intersection(&blockers).is_empty();
    let other_x = |f: FaceId, x: Vertex| {
        sub.faces()
            .boundary(f)
            .iter()
            .find(|&y| y != x && d.common.contains(y))
            .expect("diamond face has two common neighbours")
    };

    let mut best: Option<((FaceId, FaceId), Vertex)> = None;
    for x2 in d.common.iter() {
        let fa = sub.faces().face_of((u, x2)).expect("diamond dart");
        let fb = sub.faces().face_of((x2, u)).expect("diamond dart");
        let key = (fa.min(fb), fa.max(fb));
        if best.is_some_and(|(b, _)| b <= key) {
            continue;
        }
        if untouched(fa) && untouched(fb) {
            best = Some((key, x2));
        }
    }
    let Some((faces, x2)) = best else {
        return Err(Error::Internal(
            "no two adjacent diamond faces are free of core vertices".into(),
        ));
    };
    let fa = sub.faces().face_of((u, x2)).expect("diamond dart");
    let fb = sub.faces().face_of((x2, u)).expect("diamond dart");
    let x1 = other_x(fa, x2);
    let x3 = other_x(fb, x2);
    let sides = crate::planar::classify_by_cycle(g, rs, &[u, x1, v, x3])?;
    let (removed, _) = sides.split_by(x2);
    let removed = removed.clone();
    if !removed.contains(x2) {
        return Err(Error::Internal("x_2 is not on its own side of the cycle".into()));
    }
    if !removed.intersection(&core.core).is_empty() {
        return Err(Error::Internal("region to delete meets the core".into()));
    }
    let (graph, map) = g.remove_vertices(&removed);
    let rotation = rs.after_vertex_removal(&map);
    Ok(RegionRemoval {
        graph,
        rotation,
        removed,
        map,
        faces,
        x: [x1, x2, x3],
    })
}

/// Edges inside `N(v)` for the vertices above the R3 degree threshold,
/// processed in id order against the progressively thinned graph.
fn high_degree_edges(g: &Graph, core_size: usize, k: usize) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let threshold = Thresholds::new(core_size, k).degree;
    let mut current = g.clone();
    let mut hubs = Vec::new();
    let mut removed = Vec::new();
    for v in g.vertices() {
        if current.degree(v) <= threshold {
            continue;
        }
        let nbrs = current.neighbors(v).to_vec();
        let inner: Vec<(Vertex, Vertex)> = nbrs
            .iter()
            .flat_map(|&a| current.neighbors(a).iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b && nbrs.binary_search(&b).is_ok())
            .collect();
        if inner.is_empty() {
            continue;
        }
        current = current.with_edge_changes(&inner, &[]).expect("edges present");
        hubs.push(v);
        removed.extend(inner);
    }
    (hubs, removed)
}

/// R3: for every vertex of degree above `(4|C| + 3k + 1) k`, removes all
/// edges between its neighbours.
pub fn rule_strip_high_degree_neighborhood(g: &Graph, core: &CoreCert, k: usize) -> Graph {
    let (_, removed) = high_degree_edges(g, core.len(), k);
    g.with_edge_changes(&removed, &[]).expect("edges present")
}

/// Pendants to delete so that every vertex keeps `k + 1` of them. Members
/// of `protected` are always kept; the rest are filled by smallest id.
fn surplus_pendants(g: &Graph, k: usize, protected: &VertexSet) -> VertexSet {
    let mut out = Vec::new();
    for v in g.vertices() {
        let pend = pendant_neighbors(g, v).expect("valid vertex");
        // an isolated edge makes both ends pendants of each other
        if g.degree(v) == 1 || pend.len() <= k + 1 {
            continue;
        }
        let mut keep = protected.intersection(&pend).len();
        for p in pend.iter() {
            if protected.contains(p) {
                continue;
            }
            if keep < k + 1 {
                keep += 1;
            } else {
                out.push(p);
            }
        }
    }
    out.into()
}

/// R4: every vertex keeps its `k + 1` smallest pendant neighbours.
pub fn rule_trim_pendants(g: &Graph, k: usize) -> (Graph, VertexMap) {
    rule_trim_pendants_protected(g, k, &VertexSet::new())
}

/// R4 that never deletes a vertex of `protected` (the source and target).
pub fn rule_trim_pendants_protected(g: &Graph, k: usize, protected: &VertexSet) -> (Graph, VertexMap) {
    g.remove_vertices(&surplus_pendants(g, k, protected))
}

/// `C` together with every vertex having at least two neighbours in `C`.
pub fn d_set(g: &Graph, core: &VertexSet) -> VertexSet {
    g.vertices()
        .filter(|&v| core.contains(v) || g.neighbors(v).iter().filter(|&&w| core.contains(w)).count() >= 2)
        .collect()
}

/// Shortcuts a `u`–`v` path to an induced one without using the edge `uv`.
fn shortcut(g: &Graph, path: &[Vertex]) -> Vec<Vertex> {
    let last = path.len() - 1;
    let mut out = vec![path[0]];
    let mut i = 0;
    while i < last {
        let from = path[i];
        let mut j = i + 1;
        for cand in (i + 2..=last).rev() {
            if cand == last && i == 0 {
                continue;
            }
            if g.has_edge(from, path[cand]) {
                j = cand;
                break;
            }
        }
        out.push(path[j]);
        i = j;
    }
    out
}

/// Outcome of R5.
#[derive(Clone, Debug)]
pub struct PathRegion {
    pub graph: Graph,
    pub rotation: RotationSystem,
    pub map: VertexMap,
    pub entry: TraceEntry,
}

/// Named vertices of an R5 application, in the ids of the input graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRegionVertices {
    pub u: Vertex,
    pub v: Vertex,
    pub x_f: Vertex,
    pub y_f: Vertex,
    pub z_u: Vertex,
    pub z_v: Vertex,
    pub x_g: Vertex,
    pub y_g: Vertex,
}

/// R5 on the smallest pair `(u, v)` meeting the degree and path-count
/// thresholds, or `None` when no pair qualifies.
pub fn rule_path_region(
    g: &Graph,
    rs: &RotationSystem,
    core: &CoreCert,
    d: &VertexSet,
    k: usize,
) -> Result<Option<PathRegion>> {
    let t = Thresholds::new(core.len(), k);
    let limit = t.paths(d.len()).max(t.degree);
    let heavy: Vec<Vertex> = g.vertices().filter(|&x| g.degree(x) > limit).collect();
    for (i, &u) in heavy.iter().enumerate() {
        for &v in &heavy[i + 1..] {
            if let Some(out) = rule_path_region_at(g, rs, core, d, k, u, v)? {
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// R5 for a fixed pair. `None` if the pair does not meet the thresholds.
pub fn rule_path_region_at(
    g: &Graph,
    rs: &RotationSystem,
    core: &CoreCert,
    d: &VertexSet,
    k: usize,
    u: Vertex,
    v: Vertex,
) -> Result<Option<PathRegion>> {
    let t = Thresholds::new(core.len(), k);
    let limit = t.paths(d.len());
    // u and v must also be forced, which needs the corrected R3 bound
    let deg_limit = limit.max(t.degree);
    if g.degree(u) <= deg_limit || g.degree(v) <= deg_limit {
        return Ok(None);
    }
    let forbidden = d.without(u).without(v);
    let paths = max_vertex_disjoint_paths(g, u, v, &forbidden, 2)?;
    if paths.len() <= limit {
        return Ok(None);
    }
    let paths: Vec<Vec<Vertex>> = paths.iter().map(|p| shortcut(g, p)).collect();
    let mut path_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut h_edges = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for &x in &p[1..p.len() - 1] {
            path_of.insert(x, i);
        }
        h_edges.extend(p.windows(2).map(|w| (w[0], w[1])));
    }
    let sub = SubgraphFaces::new(g, rs, &h_edges)?;
    let anchors = VertexSet::from([u, v]);
    let blockers = d.difference(&anchors);
    let untouched = |f: FaceId| sub.touch_set_excluding(g, f, &anchors).intersection(&blockers).is_empty();
    let neighbour_path = |f: FaceId, own: usize| -> Result<usize> {
        sub.faces()
            .boundary(f)
            .iter()
            .filter_map(|x| path_of.get(&x).copied())
            .find(|&p| p != own)
            .ok_or_else(|| Error::Internal("face bounded by a single path".into()))
    };

    let mut best: Option<((FaceId, FaceId), usize)> = None;
    for (i, p) in paths.iter().enumerate() {
        let fa = sub.faces().face_of((u, p[1])).expect("path dart");
        let fb = sub.faces().face_of((p[1], u)).expect("path dart");
        let key = (fa.min(fb), fa.max(fb));
        if best.is_some_and(|(b, _)| b <= key) {
            continue;
        }
        if untouched(fa) && untouched(fb) {
            best = Some((key, i));
        }
    }
    let Some(((f, gface), mid)) = best else {
        return Err(Error::Internal("no two adjacent path faces are free of D".into()));
    };
    let pf = &paths[neighbour_path(f, mid)?];
    let pg = &paths[neighbour_path(gface, mid)?];
    let pm = &paths[mid];
    for p in [pf, pm, pg] {
        if p.len() != 4 {
            return Err(Error::Internal(format!(
                "bounding path {p:?} has {} inner vertices, expected 2",
                p.len() - 2
            )));
        }
    }
    let names = PathRegionVertices {
        u,
        v,
        x_f: pf[1],
        y_f: pf[2],
        z_u: pm[1],
        z_v: pm[2],
        x_g: pg[1],
        y_g: pg[2],
    };
    let e = |a, b| g.has_edge(a, b);
    let add_edge = !e(u, v)
        && (e(names.x_f, names.z_v) || e(names.y_f, names.z_u))
        && (e(names.x_g, names.z_v) || e(names.y_g, names.z_u));
    let removed = VertexSet::from([names.z_u, names.z_v]);
    let (mut graph, map) = g.remove_vertices(&removed);
    let mut rotation = rs.after_vertex_removal(&map);
    let mut add_edges = Vec::new();
    if add_edge {
        let a = map.forward(names.x_f).expect("kept");
        let b = map.forward(names.y_g).expect("kept");
        let (nu, nv) = (map.forward(u).expect("kept"), map.forward(v).expect("kept"));
        let faces = enumerate_faces(&rotation);
        let on = |fid: FaceId, x: Vertex| faces.darts(fid).iter().any(|dart| dart.0 == x);
        let target = (0..faces.len())
            .filter(|&fid| on(fid, a) && on(fid, b))
            .max_by_key(|&fid| (on(fid, nu) && on(fid, nv)) as u8)
            .ok_or_else(|| Error::Internal("x_f and y_g share no face after deletion".into()))?;
        // prefer the merged face that also carries u and v
        let target = (0..faces.len())
            .find(|&fid| on(fid, a) && on(fid, b) && on(fid, nu) && on(fid, nv))
            .unwrap_or(target);
        rotation = rotation.insert_edge_in_face(faces.darts(target), a, b)?;
        graph = graph.with_edge_changes(&[], &[(a, b)])?;
        add_edges.push((names.x_f, names.y_g));
    }
    rotation
        .validate(&graph)
        .map_err(|err| Error::Internal(format!("R5 broke the embedding: {err}")))?;
    let entry = TraceEntry {
        rule: Rule::R5,
        core_size: core.len(),
        d_size: Some(d.len()),
        threshold: limit,
        anchors: vec![u, v],
        faces: Some((f, gface)),
        path_vertices: Some(names),
        remove_edges: Vec::new(),
        add_edges,
        remove_vertices: removed.into_vec(),
    };
    Ok(Some(PathRegion {
        graph,
        rotation,
        map,
        entry,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

/// One rule application. Vertex ids refer to the graph the rule was
/// applied to; edges change first, then vertices are deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: Rule,
    pub core_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_size: Option<usize>,
    /// The threshold the triggering quantity exceeded.
    pub threshold: usize,
    /// Diamond ends, the high-degree vertex, or the path bundle ends.
    pub anchors: Vec<Vertex>,
    /// Chosen adjacent face pair (R2, R5).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<(FaceId, FaceId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path_vertices: Option<PathRegionVertices>,
    pub remove_edges: Vec<(Vertex, Vertex)>,
    pub add_edges: Vec<(Vertex, Vertex)>,
    pub remove_vertices: Vec<Vertex>,
}

impl TraceEntry {
    pub fn apply(&self, g: &Graph) -> Result<(Graph, VertexMap)> {
        let edited = g.with_edge_changes(&self.remove_edges, &self.add_edges)?;
        let removed: VertexSet = self.remove_vertices.iter().copied().collect();
        removed.check_in(g)?;
        Ok(edited.remove_vertices(&removed))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelTrace {
    pub entries: Vec<TraceEntry>,
}

impl KernelTrace {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Replays the trace on `g`, returning the final graph and the
    /// composed id map.
    pub fn replay(&self, g: &Graph) -> Result<(Graph, VertexMap)> {
        let mut cur = g.clone();
        let mut map = VertexMap::identity(g.n());
        for e in &self.entries {
            let (next, step) = e.apply(&cur)?;
            map = map.then(&step);
            cur = next;
        }
        Ok((cur, map))
    }
}

/// Reduced instance together with its embedding, the trace and the map
/// from input ids to kernel ids.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub instance: ReconfInstance,
    pub rotation: RotationSystem,
    pub trace: KernelTrace,
    pub map: VertexMap,
    /// Core of the final graph.
    pub core: CoreCert,
}

struct State {
    graph: Graph,
    rotation: RotationSystem,
    source: VertexSet,
    target: VertexSet,
    map: VertexMap,
}

impl State {
    fn protected(&self) -> VertexSet {
        self.source.union(&self.target)
    }

    fn advance(&mut self, graph: Graph, rotation: RotationSystem, step: &VertexMap) -> Result<()> {
        let fwd = |s: &VertexSet| {
            step.forward_set(s)
                .ok_or_else(|| Error::Internal("a rule deleted a source or target vertex".into()))
        };
        self.source = fwd(&self.source)?;
        self.target = fwd(&self.target)?;
        self.map = self.map.then(step);
        rotation
            .validate(&graph)
            .map_err(|e| Error::Internal(format!("embedding broken by a rule: {e}")))?;
        self.graph = graph;
        self.rotation = rotation;
        Ok(())
    }
}

/// Applies R1 to R5 in order, restarting after every application, until
/// none fires.
pub fn kernelize(inst: &ReconfInstance, rs: Option<&RotationSystem>) -> Result<Kernel> {
    if inst.variant() != Variant::Cds {
        return Err(Error::Precondition("kernelization applies to cds instances".into()));
    }
    let k = inst.k();
    let rotation = compute_or_validate_embedding(inst.graph(), rs)?;
    let mut st = State {
        graph: inst.graph().clone(),
        rotation,
        source: inst.source().clone(),
        target: inst.target().clone(),
        map: VertexMap::identity(inst.graph().n()),
    };
    let mut trace = KernelTrace::default();
    loop {
        let core = compute_core(&st.graph, k, &st.protected())?;
        let t = Thresholds::new(core.len(), k);
        let identity = VertexMap::identity(st.graph.n());

        // R1
        if let Some(d) = thick_diamonds(&st.graph, t.strip)
            .into_iter()
            .find(|d| !d.internal_edges(&st.graph).is_empty())
        {
            let remove = d.internal_edges(&st.graph);
            let graph = rule_strip_diamond_edges(&st.graph, &d, k)?;
            let rotation = st.rotation.without_edges(&remove);
            trace.entries.push(TraceEntry {
                rule: Rule::R1,
                core_size: core.len(),
                d_size: None,
                threshold: t.strip,
                anchors: vec![d.u, d.v],
                faces: None,
                path_vertices: None,
                remove_edges: remove,
                add_edges: Vec::new(),
                remove_vertices: Vec::new(),
            });
            st.advance(graph, rotation, &identity)?;
            continue;
        }

        // R2
        if let Some(d) = find_thick_diamond(&st.graph, t.diamond) {
            let out = rule_remove_diamond_region(&st.graph, &st.rotation, &d, &core, k)?;
            trace.entries.push(TraceEntry {
                rule: Rule::R2,
                core_size: core.len(),
                d_size: None,
                threshold: t.diamond,
                anchors: vec![d.u, d.v],
                faces: Some(out.faces),
                path_vertices: None,
                remove_edges: Vec::new(),
                add_edges: Vec::new(),
                remove_vertices: out.removed.into_vec(),
            });
            st.advance(out.graph, out.rotation, &out.map)?;
            continue;
        }

        // R3
        let (hubs, remove) = high_degree_edges(&st.graph, core.len(), k);
        if !remove.is_empty() {
            let graph = st.graph.with_edge_changes(&remove, &[])?;
            let rotation = st.rotation.without_edges(&remove);
            trace.entries.push(TraceEntry {
                rule: Rule::R3,
                core_size: core.len(),
                d_size: None,
                threshold: t.degree,
                anchors: hubs,
                faces: None,
                path_vertices: None,
                remove_edges: remove,
                add_edges: Vec::new(),
                remove_vertices: Vec::new(),
            });
            st.advance(graph, rotation, &identity)?;
            continue;
        }

        // R4
        let surplus = surplus_pendants(&st.graph, k, &st.protected());
        if !surplus.is_empty() {
            let (graph, map) = st.graph.remove_vertices(&surplus);
            let rotation = st.rotation.after_vertex_removal(&map);
            trace.entries.push(TraceEntry {
                rule: Rule::R4,
                core_size: core.len(),
                d_size: None,
                threshold: t.pendants,
                anchors: Vec::new(),
                faces: None,
                path_vertices: None,
                remove_edges: Vec::new(),
                add_edges: Vec::new(),
                remove_vertices: surplus.into_vec(),
            });
            st.advance(graph, rotation, &map)?;
            continue;
        }

        // R5
        let d = d_set(&st.graph, &core.core);
        if let Some(out) = rule_path_region(&st.graph, &st.rotation, &core, &d, k)? {
            trace.entries.push(out.entry);
            st.advance(out.graph, out.rotation, &out.map)?;
            continue;
        }

        let instance = ReconfInstance::cds(st.graph, st.source, st.target, k)?;
        return Ok(Kernel {
            instance,
            rotation: st.rotation,
            trace,
            map: st.map,
            core,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dominating;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn core_examples() {
        let g = star(3);
        assert!(is_domination_core(&g, &VertexSet::full(4), 1).unwrap());
        assert!(!is_domination_core(&g, &VertexSet::from([1]), 1).unwrap());
        assert!(is_domination_core(&g, &VertexSet::from([1, 2]), 1).unwrap());
    }

    #[test]
    fn computed_cores() {
        let g = star(5);
        let cert = compute_core(&g, 1, &VertexSet::new()).unwrap();
        assert!(cert.len() <= 2);
        assert!(is_domination_core(&g, &cert.core, 1).unwrap());

        let p5 = Graph::path(5);
        let cert = compute_core(&p5, 2, &VertexSet::from([1, 2, 3])).unwrap();
        assert!(is_domination_core(&p5, &cert.core, 2).unwrap());
        assert!(VertexSet::from([1, 2, 3]).is_subset(&cert.core));
    }

    #[test]
    fn projection_examples() {
        let p4 = Graph::path(4);
        let classes = projection_classes(&p4, &VertexSet::from([1, 2]));
        assert_eq!(
            classes,
            vec![
                (VertexSet::from([1]), VertexSet::from([0])),
                (VertexSet::from([2]), VertexSet::from([3])),
            ]
        );
        let none = projection_classes(&p4, &VertexSet::new());
        assert_eq!(none, vec![(VertexSet::new(), VertexSet::full(4))]);
        let k25 = Graph::complete_bipartite(2, 5);
        let classes = projection_classes(&k25, &VertexSet::from([0, 1]));
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].1.len(), 5);
    }

    #[test]
    fn diamond_search() {
        let k27 = Graph::complete_bipartite(2, 7);
        assert_eq!(find_thick_diamond(&k27, 6).unwrap().thickness(), 7);
        assert!(find_thick_diamond(&k27, 7).is_none());
        assert!(find_thick_diamond(&Graph::path(6), 2).is_none());
    }

    #[test]
    fn r1_strips_internal_edges() {
        let g = Graph::complete_bipartite(2, 7).with_edge_changes(&[], &[(2, 3)]).unwrap();
        let d = Diamond::new(&g, 0, 1).unwrap();
        let out = rule_strip_diamond_edges(&g, &d, 2).unwrap();
        assert!(!out.has_edge(2, 3));
        assert_eq!(out.m(), 14);
        assert!(rule_strip_diamond_edges(&g, &d, 3).is_err());
    }

    #[test]
    fn r3_strips_hub_neighbourhood() {
        // hub 0 with 20 leaves and a triangle among leaves 1, 2, 3
        let g = star(20).with_edge_changes(&[], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let core = CoreCert {
            core: VertexSet::from([0]),
            k: 1,
            method: "test".into(),
        };
        let out = rule_strip_high_degree_neighborhood(&g, &core, 1);
        assert_eq!(out, star(20));
        let small = star(3);
        assert_eq!(rule_strip_high_degree_neighborhood(&small, &core, 1), small);
    }

    #[test]
    fn r4_keeps_k_plus_one() {
        let g = star(7);
        let (out, _) = rule_trim_pendants(&g, 2);
        assert_eq!(out.n(), 4);
        let (same, _) = rule_trim_pendants(&star(3), 2);
        assert_eq!(same, star(3));
    }

    #[test]
    fn r2_on_large_diamond() {
        // K_{2,t} plus an edge u-v; C = {u, v}; k = 1 gives threshold 12
        let t = 14;
        let g = Graph::complete_bipartite(2, t).with_edge_changes(&[], &[(0, 1)]).unwrap();
        let rs = compute_or_validate_embedding(&g, None).unwrap();
        let core = CoreCert {
            core: VertexSet::from([0, 1]),
            k: 1,
            method: "test".into(),
        };
        let d = Diamond::new(&g, 0, 1).unwrap();
        let out = rule_remove_diamond_region(&g, &rs, &d, &core, 1).unwrap();
        assert_eq!(out.removed.len(), 1);
        assert!(out.removed.contains(out.x[1]));
        assert_eq!(out.graph.n(), t + 1);
    }

    #[test]
    fn kernelize_identity_on_small_instance() {
        let inst = ReconfInstance::cds(Graph::path(4), [1, 2].into(), [1, 2].into(), 2).unwrap();
        let kernel = kernelize(&inst, None).unwrap();
        assert!(kernel.trace.is_empty());
        assert_eq!(kernel.instance.graph(), inst.graph());
    }

    #[test]
    fn kernelize_trims_pendants_and_replays() {
        let g = star(9);
        let inst = ReconfInstance::cds(g.clone(), [0].into(), [0].into(), 1).unwrap();
        let kernel = kernelize(&inst, None).unwrap();
        assert!(kernel.instance.graph().n() < g.n());
        let (replayed, _) = kernel.trace.replay(&g).unwrap();
        assert_eq!(&replayed, kernel.instance.graph());
        assert!(is_dominating(kernel.instance.graph(), kernel.instance.source()));
    }

    #[test]
    fn adjacent_hubs_keep_source_feasible() {
        // 1 and 2 adjacent with many common neighbours; {2} alone dominates,
        // so vertex 1 is not forced although its degree passes the nominal bound
        let mut edges = vec![(1, 2)];
        for x in (0..20).filter(|&x| x != 1 && x != 2) {
            edges.extend([(1, x), (2, x)]);
        }
        let g = Graph::from_edges(20, edges).unwrap();
        let inst = ReconfInstance::cds(g, [2].into(), [2].into(), 1).unwrap();
        let kernel = kernelize(&inst, None).unwrap();
        let out = kernel.instance.graph();
        assert!(is_dominating(out, kernel.instance.source()));
        let t = Thresholds::new(kernel.core.len(), 1);
        assert_eq!(t.degree, t.nominal_degree + 1);
    }
}
