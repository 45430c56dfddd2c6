//! Combinatorial planar embeddings.
//!
//! A [`RotationSystem`] stores, for every vertex, the cyclic order of its
//! neighbours. Faces are traced with the rule "the dart following `a -> b`
//! is `b -> succ_b(a)`", where `succ_b` is the rotation successor at `b`.
//!
//! Region questions ("which face of a subgraph `H` is this vertex drawn
//! in?") are answered by [`SubgraphFaces`]: every component of `G - V(H)`
//! is placed into the face of `H` that contains the wedge of one of its
//! attachment darts.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ordered, Graph, Vertex, VertexMap, VertexSet};

pub type Dart = (Vertex, Vertex);
pub type FaceId = usize;

/// Per-vertex cyclic neighbour order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSystem {
    rot: Vec<Vec<Vertex>>,
}

impl RotationSystem {
    pub fn new(rot: Vec<Vec<Vertex>>) -> Self {
        RotationSystem { rot }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn as_lists(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    fn position(&self, v: Vertex, w: Vertex) -> Option<usize> {
        self.rot[v].iter().position(|&x| x == w)
    }

    /// Neighbour following `w` in the rotation at `v`.
    pub fn succ(&self, v: Vertex, w: Vertex) -> Vertex {
        let list = &self.rot[v];
        let i = self.position(v, w).expect("dart present in rotation");
        list[(i + 1) % list.len()]
    }

    /// Checks that the rotation is a permutation of each neighbourhood and
    /// that every component satisfies Euler's formula.
    pub fn validate(&self, g: &Graph) -> Result<FaceSet> {
        if self.rot.len() != g.n() {
            return Err(Error::InvalidRotation(format!(
                "rotation has {} vertices, graph has {}",
                self.rot.len(),
                g.n()
            )));
        }
        for v in g.vertices() {
            let mut sorted = self.rot[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighbourhood"
                )));
            }
        }
        let faces = enumerate_faces(self);
        check_euler(g, &faces)?;
        Ok(faces)
    }

    /// Rotation of the graph obtained by deleting vertices; `map` is the map
    /// returned alongside the smaller graph.
    pub fn after_vertex_removal(&self, map: &VertexMap) -> RotationSystem {
        let rot = (0..map.new_len())
            .map(|new| {
                self.rot[map.backward(new)]
                    .iter()
                    .filter_map(|&w| map.forward(w))
                    .collect()
            })
            .collect();
        RotationSystem { rot }
    }

    pub fn without_edges(&self, edges: &[(Vertex, Vertex)]) -> RotationSystem {
        let gone: HashSet<(Vertex, Vertex)> = edges.iter().map(|&(a, b)| ordered(a, b)).collect();
        let rot = self
            .rot
            .iter()
            .enumerate()
            .map(|(v, list)| {
                list.iter()
                    .copied()
                    .filter(|&w| !gone.contains(&ordered(v, w)))
                    .collect()
            })
            .collect();
        RotationSystem { rot }
    }

    /// Inserts the edge `{a, b}` through the face that contains darts `a -> _`
    /// and `b -> _`, splitting that face in two.
    pub fn insert_edge_in_face(&self, face: &[Dart], a: Vertex, b: Vertex) -> Result<RotationSystem> {
        let len = face.len();
        // the dart entering a vertex inside this face fixes the wedge
        let entering = |x: Vertex| -> Option<Vertex> {
            (0..len).find(|&i| face[i].0 == x).map(|i| face[(i + len - 1) % len].0)
        };
        let (Some(pa), Some(pb)) = (entering(a), entering(b)) else {
            return Err(Error::InvalidRotation(format!(
                "face does not contain both {a} and {b}"
            )));
        };
        let mut rot = self.rot.clone();
        for (x, pred, other) in [(a, pa, b), (b, pb, a)] {
            let list = &mut rot[x];
            if list.is_empty() {
                list.push(other);
            } else {
                let i = list.iter().position(|&w| w == pred).expect("entering dart");
                list.insert(i + 1, other);
            }
        }
        Ok(RotationSystem { rot })
    }
}

/// Facial walks of a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    dart_face: BTreeMap<Dart, FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn darts(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_of(&self, dart: Dart) -> Option<FaceId> {
        self.dart_face.get(&dart).copied()
    }

    /// Distinct vertices on the boundary walk of `f`.
    pub fn boundary(&self, f: FaceId) -> VertexSet {
        self.faces[f].iter().map(|d| d.0).collect()
    }
}

/// Traces every face. Face ids follow the order of the smallest dart each
/// face contains.
pub fn enumerate_faces(rs: &RotationSystem) -> FaceSet {
    let mut all: Vec<Dart> = Vec::new();
    for (v, list) in rs.rot.iter().enumerate() {
        all.extend(list.iter().map(|&w| (v, w)));
    }
    all.sort_unstable();
    let mut dart_face = BTreeMap::new();
    let mut faces = Vec::new();
    for &start in &all {
        if dart_face.contains_key(&start) {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            dart_face.insert(d, id);
            walk.push(d);
            let (a, b) = d;
            d = (b, rs.succ(b, a));
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    FaceSet { faces, dart_face }
}

fn check_euler(g: &Graph, faces: &FaceSet) -> Result<()> {
    let total: usize = faces.faces.iter().map(Vec::len).sum();
    if total != 2 * g.m() {
        return Err(Error::InvalidRotation("face lengths do not sum to 2|E|".into()));
    }
    let comps = g.components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut face_count = vec![0usize; comps.len()];
    for walk in &faces.faces {
        face_count[comp_of[walk[0].0]] += 1;
    }
    let mut edge_count = vec![0usize; comps.len()];
    for (a, _) in g.edges() {
        edge_count[comp_of[a]] += 1;
    }
    for (i, c) in comps.iter().enumerate() {
        if edge_count[i] == 0 {
            continue;
        }
        let chi = c.len() as i64 - edge_count[i] as i64 + face_count[i] as i64;
        if chi != 2 {
            return Err(Error::InvalidRotation(format!(
                "component containing {} has Euler characteristic {chi}",
                c[0]
            )));
        }
    }
    Ok(())
}

/// Validates `provided` against `g`, or computes a planar embedding.
pub fn compute_or_validate_embedding(
    g: &Graph,
    provided: Option<&RotationSystem>,
) -> Result<RotationSystem> {
    match provided {
        Some(rs) => {
            rs.validate(g)?;
            Ok(rs.clone())
        }
        None => {
            let rs = embed(g)?;
            rs.validate(g)
                .map_err(|e| Error::Internal(format!("embedder produced an invalid rotation: {e}")))?;
            Ok(rs)
        }
    }
}

/// Planar embedding by biconnected decomposition and path addition
/// (Demoucron, Malgrange and Pertuiset) on each block. Block rotations are
/// concatenated at cut vertices.
pub fn embed(g: &Graph) -> Result<RotationSystem> {
    if g.m() > 3 * g.n().saturating_sub(2) && g.n() >= 3 {
        return Err(Error::NonPlanar { witness: None });
    }
    let mut rot = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        let block_rot = embed_block(&block)?;
        for (v, list) in block_rot {
            rot[v].extend(list);
        }
    }
    Ok(RotationSystem { rot })
}

/// Edge sets of the biconnected components.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(ordered(e.0, e.1));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block; returns the rotation at each block vertex.
fn embed_block(edges: &[(Vertex, Vertex)]) -> Result<Vec<(Vertex, Vec<Vertex>)>> {
    let verts: Vec<Vertex> = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if edges.len() == 1 {
        let (a, b) = edges[0];
        return Ok(vec![(a, vec![b]), (b, vec![a])]);
    }
    let local = |v: Vertex| verts.binary_search(&v).expect("block vertex");
    let local_edges: Vec<(Vertex, Vertex)> = edges.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let g = Graph::from_edges(verts.len(), local_edges.iter().copied())?;
    let n = g.n();

    // initial cycle: edge (a, b) closed by a shortest path avoiding it
    let (a, b) = local_edges[0];
    let path = Graph::from_edges(n, local_edges[1..].iter().copied())?
        .shortest_path(a, b, |_| false)
        .ok_or_else(|| Error::Internal("block without a cycle".into()))?;
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    for w in path.windows(2) {
        h_edges.insert(ordered(w[0], w[1]));
    }
    h_edges.insert(ordered(a, b));
    for &x in &path {
        in_h[x] = true;
    }
    let mut faces: Vec<Vec<Vertex>> = vec![path.clone(), path.iter().rev().copied().collect()];

    while h_edges.len() < g.m() {
        let fragments = fragments(&g, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|x| f.contains(x)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return Err(Error::NonPlanar { witness: None }),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let p = fragment_path(&g, &in_h, &h_edges, &fragments[fi]);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &p);
        faces.push(f1);
        faces.push(f2);
        for w in p.windows(2) {
            h_edges.insert(ordered(w[0], w[1]));
        }
        for &x in &p {
            in_h[x] = true;
        }
    }

    // succ_v(u) = w for every consecutive u, v, w on an oriented face
    let mut succ: Vec<BTreeMap<Vertex, Vertex>> = vec![BTreeMap::new(); n];
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let deg = g.degree(v);
        let first = g.neighbors(v)[0];
        let mut list = vec![first];
        let mut cur = first;
        for _ in 1..deg {
            cur = succ[v][&cur];
            list.push(cur);
        }
        if succ[v].get(&cur) != Some(&first) || succ[v].len() != deg {
            return Err(Error::Internal("face orientation inconsistent".into()));
        }
        out.push((verts[v], list.into_iter().map(|x| verts[x]).collect()));
    }
    Ok(out)
}

struct Fragment {
    attachments: Vec<Vertex>,
    inner: Vec<Vertex>,
    chord: Option<(Vertex, Vertex)>,
}

fn fragments(g: &Graph, in_h: &[bool], h_edges: &HashSet<(Vertex, Vertex)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        if in_h[a] && in_h[b] && !h_edges.contains(&(a, b)) {
            out.push(Fragment {
                attachments: vec![a, b],
                inner: Vec::new(),
                chord: Some((a, b)),
            });
        }
    }
    for comp in g.components_within(|x| !in_h[x]) {
        let attachments: BTreeSet<Vertex> = comp
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().copied())
            .filter(|&y| in_h[y])
            .collect();
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            inner: comp,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    g: &Graph,
    in_h: &[bool],
    _h_edges: &HashSet<(Vertex, Vertex)>,
    frag: &Fragment,
) -> Vec<Vertex> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let a = frag.attachments[0];
    let inner: HashSet<Vertex> = frag.inner.iter().copied().collect();
    // BFS from a into the fragment interior until another attachment is hit
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &c in g.neighbors(a) {
        if inner.contains(&c) && !parent.contains_key(&c) {
            parent.insert(c, a);
            queue.push_back(c);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if in_h[y] && y != a {
                let mut path = vec![y, x];
                let mut cur = x;
                while parent[&cur] != a {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if inner.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let len = face.len();
    let a = path[0];
    let b = *path.last().expect("non-empty path");
    let i = face.iter().position(|&x| x == a).expect("attachment on face");
    let j = face.iter().position(|&x| x == b).expect("attachment on face");
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % len;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % len;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

/// Faces of a connected subgraph `H` of an embedded graph `G`, together with
/// the face of `H` in which each vertex of `G - V(H)` is drawn.
#[derive(Clone, Debug)]
pub struct SubgraphFaces {
    h_vertices: VertexSet,
    rotation: RotationSystem,
    faces: FaceSet,
    location: Vec<Option<FaceId>>,
}

impl SubgraphFaces {
    pub fn new(g: &Graph, rs: &RotationSystem, h_edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let edge_set: HashSet<(Vertex, Vertex)> = h_edges.iter().map(|&(a, b)| ordered(a, b)).collect();
        for &(a, b) in &edge_set {
            if !g.has_edge(a, b) {
                return Err(Error::Invalid(format!("edge {{{a},{b}}} not in graph")));
            }
        }
        let h_vertices: VertexSet = edge_set.iter().flat_map(|&(a, b)| [a, b]).collect();
        let in_h = |x: Edge2| edge_set.contains(&ordered(x.0, x.1));
        let rot = (0..g.n())
            .map(|v| rs.rot[v].iter().copied().filter(|&w| in_h((v, w))).collect())
            .collect();
        let rotation = RotationSystem { rot };
        let faces = enumerate_faces(&rotation);

        let mut location = vec![None; g.n()];
        for comp in g.components_within(|x| !h_vertices.contains(x)) {
            let attach = comp.iter().find_map(|&y| {
                g.neighbors(y)
                    .iter()
                    .find(|&&x| h_vertices.contains(x))
                    .map(|&x| (x, y))
            });
            let Some((x, y)) = attach else { continue };
            // first H-neighbour after y in the rotation at x
            let list = &rs.rot[x];
            let start = list.iter().position(|&w| w == y).expect("dart in rotation");
            let h_next = (1..=list.len())
                .map(|s| list[(start + s) % list.len()])
                .find(|&w| in_h((x, w)))
                .expect("attachment vertex has an H-edge");
            let face = faces.face_of((x, h_next)).expect("H dart has a face");
            for &c in &comp {
                location[c] = Some(face);
            }
        }
        Ok(SubgraphFaces {
            h_vertices,
            rotation,
            faces,
            location,
        })
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn h_vertices(&self) -> &VertexSet {
        &self.h_vertices
    }

    /// Face of `H` containing `v`, for `v` outside `H` and attached to it.
    pub fn location(&self, v: Vertex) -> Option<FaceId> {
        self.location[v]
    }

    /// Vertices of `G - V(H)` drawn inside face `f`.
    pub fn inside(&self, f: FaceId) -> VertexSet {
        (0..self.location.len())
            .filter(|&v| self.location[v] == Some(f))
            .collect()
    }

    /// Vertices touching face `f`: its boundary, their neighbours, and the
    /// vertices drawn inside it.
    pub fn touch_set(&self, g: &Graph, f: FaceId) -> VertexSet {
        self.touch_set_excluding(g, f, &VertexSet::new())
    }

    /// As [`touch_set`](Self::touch_set), but adjacency to the `anchors`
    /// does not count as touching. Anchors lying on every face (the poles of
    /// a diamond or of a path bundle) would otherwise touch everything.
    pub fn touch_set_excluding(&self, g: &Graph, f: FaceId, anchors: &VertexSet) -> VertexSet {
        let boundary = self.faces.boundary(f);
        let mut out: BTreeSet<Vertex> = boundary.iter().collect();
        for b in boundary.iter().filter(|&b| !anchors.contains(b)) {
            out.extend(g.neighbors(b).iter().copied());
        }
        out.extend(self.inside(f).iter());
        out.into_iter().collect()
    }
}

type Edge2 = (Vertex, Vertex);

/// Spec-level entry point for the touch set of a face of `H`.
pub fn touch_set(g: &Graph, sub: &SubgraphFaces, f: FaceId) -> VertexSet {
    sub.touch_set(g, f)
}

/// The two sides of a simple cycle in an embedded graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSides {
    pub cycle: VertexSet,
    /// Vertices in the face of the cycle containing the dart `c0 -> c1`.
    pub left: VertexSet,
    /// The other face, plus components not attached to the cycle.
    pub right: VertexSet,
}

impl CycleSides {
    /// `(side containing reference, other side)`.
    pub fn split_by(&self, reference: Vertex) -> (&VertexSet, &VertexSet) {
        if self.right.contains(reference) {
            (&self.right, &self.left)
        } else {
            (&self.left, &self.right)
        }
    }
}

/// Splits `V(G)` minus a simple cycle into its two sides.
pub fn classify_by_cycle(g: &Graph, rs: &RotationSystem, cycle: &[Vertex]) -> Result<CycleSides> {
    if cycle.len() < 3 {
        return Err(Error::Invalid("a cycle needs at least 3 vertices".into()));
    }
    let members: VertexSet = cycle.iter().copied().collect();
    if members.len() != cycle.len() {
        return Err(Error::Invalid("cycle repeats a vertex".into()));
    }
    members.check_in(g)?;
    let edges: Vec<(Vertex, Vertex)> = (0..cycle.len())
        .map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    for &(a, b) in &edges {
        if !g.has_edge(a, b) {
            return Err(Error::Invalid(format!("cycle edge {{{a},{b}}} missing")));
        }
    }
    let sub = SubgraphFaces::new(g, rs, &edges)?;
    if sub.faces.len() != 2 {
        return Err(Error::Internal(format!(
            "a cycle should have 2 faces, found {}",
            sub.faces.len()
        )));
    }
    let left_face = sub.faces.face_of((cycle[0], cycle[1])).expect("cycle dart");
    let mut left = Vec::new();
    let mut right = Vec::new();
    for v in g.vertices().filter(|&v| !members.contains(v)) {
        if sub.location(v) == Some(left_face) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Ok(CycleSides {
        cycle: members,
        left: left.into(),
        right: right.into(),
    })
}
