//! Hardness gadgets: Multicolored Clique to colored connected subgraph
//! reconfiguration, the pendant-hub transform to connected dominating set
//! reconfiguration, and explicit witness sequences.
//!
//! Layout of the gadget graph `H` (ids are assigned in this order):
//!
//! 1. `v_1..v_k`, then `w_2..w_k` (the subdivided start star),
//! 2. blocks `i = 1..k`, each with layers `r = 1..r_max`; a layer holds a
//!    copy of every vertex of `G` followed by one subdivision vertex per
//!    retained edge, in sorted edge order,
//! 3. `x_1..x_k`, then `y_1..y_{k-1}` (the subdivided end star).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{Move, ReconfInstance, ReconfSequence, Variant};
use crate::error::{Error, Result};
use crate::graph::{ordered, Coloring, Graph, Vertex, VertexSet};

/// A Multicolored Clique input: a graph with a proper colouring into
/// `1..=k`. Connectivity is not required; disconnected inputs are how
/// small no-instances arise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MccInstance {
    graph: Graph,
    coloring: Coloring,
    k: usize,
}

impl MccInstance {
    pub fn new(graph: Graph, coloring: Coloring, k: usize) -> Result<Self> {
        if coloring.len() != graph.n() {
            return Err(Error::InvalidInstance(format!(
                "colors: {} entries for {} vertices",
                coloring.len(),
                graph.n()
            )));
        }
        if coloring.num_colors() as usize != k {
            return Err(Error::InvalidInstance(format!(
                "colors: palette has {} colours, expected k = {k}",
                coloring.num_colors()
            )));
        }
        if !coloring.is_proper(&graph) {
            return Err(Error::InvalidInstance("colors: colouring is not proper".into()));
        }
        Ok(MccInstance { graph, coloring, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Whether `clique` has one vertex of every colour, pairwise adjacent.
    /// Returns the clique ordered by colour.
    pub fn check_clique(&self, clique: &[Vertex]) -> Result<Vec<Vertex>> {
        if clique.len() != self.k {
            return Err(Error::Invalid(format!(
                "a multicolored clique needs {} vertices, got {}",
                self.k,
                clique.len()
            )));
        }
        let mut by_color = vec![usize::MAX; self.k];
        for &v in clique {
            self.graph.check_vertex(v)?;
            let slot = &mut by_color[self.coloring.color(v) as usize - 1];
            if *slot != usize::MAX {
                return Err(Error::Invalid(format!("colour {} used twice", self.coloring.color(v))));
            }
            *slot = v;
        }
        for (i, &a) in by_color.iter().enumerate() {
            for &b in &by_color[i + 1..] {
                if !self.graph.has_edge(a, b) {
                    return Err(Error::Invalid(format!("{a} and {b} are not adjacent")));
                }
            }
        }
        Ok(by_color)
    }
}

/// Backtracking search for a multicolored clique, colour by colour.
pub fn find_multicolored_clique(mcc: &MccInstance) -> Option<Vec<Vertex>> {
    fn extend(mcc: &MccInstance, chosen: &mut Vec<Vertex>) -> bool {
        let color = chosen.len() as u32 + 1;
        if color as usize > mcc.k {
            return true;
        }
        for v in mcc.coloring.class(color) {
            if chosen.iter().all(|&u| mcc.graph.has_edge(u, v)) {
                chosen.push(v);
                if extend(mcc, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    extend(mcc, &mut chosen).then_some(chosen)
}

/// Keeps edges whose colour pair is an edge of `pattern` and subdivides
/// each of them. `pattern` has one vertex per colour (vertex `i - 1` is
/// colour `i`). Original vertices keep their ids; subdivision vertices
/// follow in sorted edge order. Returns the graph and the subdivision set.
pub fn color_restrict_subdivide(g: &Graph, c: &Coloring, pattern: &Graph) -> Result<(Graph, VertexSet)> {
    let (graph, subs) = restrict_and_subdivide(g, c, pattern)?;
    Ok((graph, subs.into_iter().map(|(_, s)| s).collect()))
}

fn retained_edges(g: &Graph, c: &Coloring, pattern: &Graph) -> Result<Vec<(Vertex, Vertex)>> {
    if c.len() != g.n() {
        return Err(Error::Invalid("colouring length differs from the graph".into()));
    }
    if !c.is_proper(g) {
        return Err(Error::Invalid("colouring is not proper".into()));
    }
    if pattern.n() != c.num_colors() as usize {
        return Err(Error::Invalid(format!(
            "pattern has {} vertices for {} colours",
            pattern.n(),
            c.num_colors()
        )));
    }
    Ok(g.edges()
        .filter(|&(a, b)| pattern.has_edge(c.color(a) as usize - 1, c.color(b) as usize - 1))
        .collect())
}

/// An original edge and the vertex that subdivides it.
type SubdividedEdge = ((Vertex, Vertex), Vertex);

fn restrict_and_subdivide(
    g: &Graph,
    c: &Coloring,
    pattern: &Graph,
) -> Result<(Graph, Vec<SubdividedEdge>)> {
    let kept = retained_edges(g, c, pattern)?;
    let n = g.n();
    let subs: Vec<_> = kept.iter().enumerate().map(|(i, &e)| (e, n + i)).collect();
    let edges = subs.iter().flat_map(|&((a, b), s)| [(a, s), (b, s)]);
    Ok((Graph::from_edges(n + kept.len(), edges)?, subs))
}

/// A subdivision vertex of a layer together with the edge it subdivides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub a: Vertex,
    pub b: Vertex,
    pub vertex: Vertex,
}

/// Lookup tables of a generated gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLayout {
    pub k: usize,
    pub r_max: usize,
    /// Vertex count and edges of the Multicolored Clique input.
    pub source_n: usize,
    pub source_edges: Vec<(Vertex, Vertex)>,
    pub source_colors: Vec<u32>,
    pub v: Vec<Vertex>,
    /// `w[j]` is `w_{j+2}`.
    pub w: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    /// `copies[i-1][r-1][u]` is the copy of `u` in block `i`, layer `r`.
    pub copies: Vec<Vec<Vec<Vertex>>>,
    /// `subdivisions[i-1][r-1]`, sorted by `(a, b)`.
    pub subdivisions: Vec<Vec<Vec<Subdivision>>>,
    pub q_s: VertexSet,
    pub q_t: VertexSet,
}

impl GadgetLayout {
    pub fn copy(&self, block: usize, layer: usize, u: Vertex) -> Vertex {
        self.copies[block - 1][layer - 1][u]
    }

    /// Subdivision vertex of edge `{a, b}` in block `block`, layer `layer`.
    pub fn subdivision(&self, block: usize, layer: usize, a: Vertex, b: Vertex) -> Option<Vertex> {
        let (a, b) = ordered(a, b);
        let list = &self.subdivisions[block - 1][layer - 1];
        list.binary_search_by(|s| (s.a, s.b).cmp(&(a, b)))
            .ok()
            .map(|i| list[i].vertex)
    }

    pub fn is_subdivision(&self, vertex: Vertex) -> bool {
        self.subdivisions
            .iter()
            .flatten()
            .any(|layer| layer.binary_search_by(|s| s.vertex.cmp(&vertex)).is_ok())
    }

    /// All vertices of one layer.
    pub fn layer_vertices(&self, block: usize, layer: usize) -> VertexSet {
        let mut out: Vec<Vertex> = self.copies[block - 1][layer - 1].clone();
        out.extend(self.subdivisions[block - 1][layer - 1].iter().map(|s| s.vertex));
        out.into()
    }
}

/// Star on colours `1..=k` centred at `center`, as a pattern graph.
fn star_pattern(k: usize, center: usize) -> Graph {
    Graph::from_edges(k, (1..=k).filter(|&j| j != center).map(|j| (center - 1, j - 1)))
        .expect("valid star")
}

/// Builds the colored connected subgraph reconfiguration instance
/// `(H, ĉ, Q_s, Q_t, 2k)`. The paper uses `r_max = 20k`; small values keep
/// the state space searchable.
pub fn build_ccsr(mcc: &MccInstance, r_max: usize) -> Result<(ReconfInstance, GadgetLayout)> {
    let k = mcc.k;
    if k < 2 {
        return Err(Error::Precondition("the gadget needs k >= 2".into()));
    }
    if r_max < 1 {
        return Err(Error::Precondition("r_max must be at least 1".into()));
    }
    let g = &mcc.graph;
    let c = &mcc.coloring;
    let n = g.n();
    let extra = (k + 1) as u32;

    let mut colors: Vec<u32> = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let fresh = |colors: &mut Vec<u32>, col: u32| {
        colors.push(col);
        colors.len() - 1
    };

    let v: Vec<Vertex> = (1..=k).map(|i| fresh(&mut colors, i as u32)).collect();
    let w: Vec<Vertex> = (2..=k).map(|_| fresh(&mut colors, extra)).collect();
    for i in 2..=k {
        edges.push((v[0], w[i - 2]));
        edges.push((v[i - 1], w[i - 2]));
    }

    let mut copies = Vec::with_capacity(k);
    let mut subdivisions = Vec::with_capacity(k);
    for i in 1..=k {
        let kept = retained_edges(g, c, &star_pattern(k, i))?;
        let mut block_copies = Vec::with_capacity(r_max);
        let mut block_subs = Vec::with_capacity(r_max);
        for _ in 1..=r_max {
            let layer: Vec<Vertex> = (0..n).map(|u| fresh(&mut colors, c.color(u))).collect();
            let subs: Vec<Subdivision> = kept
                .iter()
                .map(|&(a, b)| {
                    let s = fresh(&mut colors, extra);
                    edges.push((layer[a], s));
                    edges.push((layer[b], s));
                    Subdivision { a, b, vertex: s }
                })
                .collect();
            block_copies.push(layer);
            block_subs.push(subs);
        }
        copies.push(block_copies);
        subdivisions.push(block_subs);
    }
    let x: Vec<Vertex> = (1..=k).map(|i| fresh(&mut colors, i as u32)).collect();
    let y: Vec<Vertex> = (1..k).map(|_| fresh(&mut colors, extra)).collect();
    for j in 1..k {
        edges.push((x[k - 1], y[j - 1]));
        edges.push((x[j - 1], y[j - 1]));
    }

    // crossing edges inside a block and from a block to the next
    for i in 0..k {
        for r in 0..r_max {
            let next = if r + 1 < r_max {
                Some(&copies[i][r + 1])
            } else if i + 1 < k {
                Some(&copies[i + 1][0])
            } else {
                None
            };
            for s in &subdivisions[i][r] {
                match next {
                    Some(layer) => {
                        edges.push((s.vertex, layer[s.a]));
                        edges.push((s.vertex, layer[s.b]));
                    }
                    None => {
                        // last layer of block k: attach to x_k and x_other
                        let other = match c.color(s.a) as usize == k {
                            true => c.color(s.b),
                            false => c.color(s.a),
                        };
                        edges.push((s.vertex, x[k - 1]));
                        edges.push((s.vertex, x[other as usize - 1]));
                    }
                }
            }
        }
    }
    for i in 2..=k {
        for (u, &copy) in copies[0][0].iter().enumerate() {
            let col = c.color(u) as usize;
            if col == 1 || col == i {
                edges.push((w[i - 2], copy));
            }
        }
    }

    let total = colors.len();
    let graph = Graph::from_edges(total, edges)?;
    let coloring = Coloring::new(colors, extra)?;
    let q_s: VertexSet = v.iter().chain(&w).copied().collect();
    let q_t: VertexSet = x.iter().chain(&y).copied().collect();
    let layout = GadgetLayout {
        k,
        r_max,
        source_n: n,
        source_edges: g.edges().collect(),
        source_colors: c.as_slice().to_vec(),
        v,
        w,
        x,
        y,
        copies,
        subdivisions,
        q_s: q_s.clone(),
        q_t: q_t.clone(),
    };
    let inst = ReconfInstance::new(Variant::Ccs, graph, Some(coloring), q_s, q_t, 2 * k)?;
    Ok((inst, layout))
}

/// Adds a hub per colour class, adjacent to the whole class, with `2k + 1`
/// pendants each. Hubs get ids `n..n+k'`, pendants follow grouped by hub.
/// Source and target gain all hubs; the bound becomes `k + k'`.
pub fn ccsr_to_cdsr(inst: &ReconfInstance) -> Result<ReconfInstance> {
    let Some(c) = inst.coloring().filter(|_| inst.variant() == Variant::Ccs) else {
        return Err(Error::Precondition("expected a ccs instance".into()));
    };
    let g = inst.graph();
    let n = g.n();
    let colors = c.num_colors() as usize;
    let k = inst.k();
    let pendants = 2 * k + 1;
    let hubs: Vec<Vertex> = (n..n + colors).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for v in g.vertices() {
        edges.push((v, hubs[c.color(v) as usize - 1]));
    }
    let mut next = n + colors;
    for &h in &hubs {
        for _ in 0..pendants {
            edges.push((h, next));
            next += 1;
        }
    }
    let graph = Graph::from_edges(next, edges)?;
    let hub_set: VertexSet = hubs.into_iter().collect();
    ReconfInstance::cds(
        graph,
        inst.source().union(&hub_set),
        inst.target().union(&hub_set),
        k + colors,
    )
}

/// Validates that `edges` form a spanning tree on labels `1..=k` and
/// returns them normalised.
fn check_tree(k: usize, edges: &[(usize, usize)], name: &str) -> Result<BTreeSet<(usize, usize)>> {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| ordered(a, b)).collect();
    let bad = |why: &str| Error::Invalid(format!("{name}: {why}"));
    if set.len() != edges.len() || set.len() + 1 != k {
        return Err(bad("a spanning tree on k labels has k - 1 distinct edges"));
    }
    if set.iter().any(|&(a, b)| a < 1 || b > k || a == b) {
        return Err(bad("labels must lie in 1..=k"));
    }
    if !is_tree(k, &set) {
        return Err(bad("edges do not form a tree"));
    }
    Ok(set)
}

fn is_tree(k: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    if edges.len() + 1 != k {
        return false;
    }
    let g = Graph::from_edges(k, edges.iter().map(|&(a, b)| (a - 1, b - 1)));
    g.map(|g| g.is_connected()).unwrap_or(false)
}

/// Given trees `t1`, `t2` on labels `1..=k` and an ordering `f` of the
/// edges of `t2`, returns an ordering `e` of the edges of `t1` such that
/// every `T_{j+1} = T_j + f_j - e_j` is a tree and the last one is `t2`.
pub fn tree_edge_exchange(
    k: usize,
    t1: &[(usize, usize)],
    t2: &[(usize, usize)],
    f_order: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let mut current = check_tree(k, t1, "t1")?;
    let target = check_tree(k, t2, "t2")?;
    let f: Vec<(usize, usize)> = f_order.iter().map(|&(a, b)| ordered(a, b)).collect();
    if f.iter().copied().collect::<BTreeSet<_>>() != target || f.len() != target.len() {
        return Err(Error::Invalid("f_order is not a permutation of t2".into()));
    }
    let mut out = Vec::with_capacity(f.len());
    for &fj in &f {
        if current.contains(&fj) {
            out.push(fj);
            continue;
        }
        // the cycle closed by fj is fj plus the tree path between its ends
        let tree = Graph::from_edges(k, current.iter().map(|&(a, b)| (a - 1, b - 1)))?;
        let path = tree
            .shortest_path(fj.0 - 1, fj.1 - 1, |_| false)
            .ok_or_else(|| Error::Internal("tree is disconnected".into()))?;
        let ej = path
            .windows(2)
            .map(|w| ordered(w[0] + 1, w[1] + 1))
            .filter(|e| !target.contains(e))
            .min()
            .ok_or_else(|| Error::Internal("cycle lies inside t2".into()))?;
        current.remove(&ej);
        current.insert(fj);
        out.push(ej);
    }
    debug_assert_eq!(current, target);
    Ok(out)
}

/// Replays an exchange and returns every intermediate edge set, starting
/// with `t1`.
pub fn replay_exchange(
    t1: &[(usize, usize)],
    f_order: &[(usize, usize)],
    e_order: &[(usize, usize)],
) -> Vec<BTreeSet<(usize, usize)>> {
    let mut cur: BTreeSet<(usize, usize)> = t1.iter().map(|&(a, b)| ordered(a, b)).collect();
    let mut out = vec![cur.clone()];
    for (&f, &e) in f_order.iter().zip(e_order) {
        let (f, e) = (ordered(f.0, f.1), ordered(e.0, e.1));
        // f == e marks an edge that was already present
        if f != e {
            cur.insert(f);
            cur.remove(&e);
        }
        out.push(cur.clone());
    }
    out
}

/// Whether an edge set on labels `1..=k` is a spanning tree.
pub fn is_spanning_tree(k: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    is_tree(k, edges)
}

/// Number of moves in each segment of [`forward_sequence`].
pub fn segment_length(k: usize) -> usize {
    4 * k - 2
}

/// Total length of [`forward_sequence`] for a gadget.
pub fn forward_sequence_length(k: usize, r_max: usize) -> usize {
    segment_length(k) * (k * r_max + 1)
}

/// The explicit witness sequence from `Q_s` to `Q_t` for a multicolored
/// clique. Segments: into the first block, one per layer shift, one per
/// block transition (driven by [`tree_edge_exchange`]) and one into `Q_t`,
/// each of `4k - 2` moves.
pub fn forward_sequence(layout: &GadgetLayout, clique: &[Vertex]) -> Result<ReconfSequence> {
    let k = layout.k;
    let r_max = layout.r_max;
    let g = Graph::from_edges(layout.source_n, layout.source_edges.iter().copied())?;
    let c = Coloring::new(layout.source_colors.clone(), k as u32)?;
    let mcc = MccInstance::new(g, c, k)?;
    // u[j-1] is the clique vertex of colour j
    let u = mcc.check_clique(clique)?;

    let mut moves: Vec<Move> = Vec::new();
    let mut swap = |add: Vertex, remove: Vertex| {
        moves.push(Move::add(add));
        moves.push(Move::remove(remove));
    };
    let sub = |i: usize, r: usize, a: usize, b: usize| {
        layout
            .subdivision(i, r, u[a - 1], u[b - 1])
            .ok_or_else(|| Error::Internal(format!("missing subdivision in block {i}, layer {r}")))
    };

    // into block 1, layer 1
    for j in 2..=k {
        swap(layout.copy(1, 1, u[j - 1]), layout.v[j - 1]);
    }
    swap(layout.copy(1, 1, u[0]), layout.v[0]);
    for j in 2..=k {
        swap(sub(1, 1, 1, j)?, layout.w[j - 2]);
    }

    let shift_order = |i: usize| (1..=k).filter(move |&j| j != i).chain(std::iter::once(i));
    for i in 1..=k {
        for r in 1..r_max {
            for j in shift_order(i) {
                swap(layout.copy(i, r + 1, u[j - 1]), layout.copy(i, r, u[j - 1]));
            }
            for j in (1..=k).filter(|&j| j != i) {
                swap(sub(i, r + 1, i, j)?, sub(i, r, i, j)?);
            }
        }
        if i == k {
            break;
        }
        for j in shift_order(i) {
            swap(layout.copy(i + 1, 1, u[j - 1]), layout.copy(i, r_max, u[j - 1]));
        }
        let star = |center: usize| -> Vec<(usize, usize)> {
            (1..=k)
                .filter(|&j| j != center)
                .map(|j| ordered(center, j))
                .collect()
        };
        let f_order = star(i + 1);
        let e_order = tree_edge_exchange(k, &star(i), &f_order, &f_order)?;
        for (f, e) in f_order.iter().zip(&e_order) {
            swap(sub(i + 1, 1, f.0, f.1)?, sub(i, r_max, e.0, e.1)?);
        }
    }

    // out of block k, last layer, into Q_t
    for j in 1..k {
        swap(layout.x[j - 1], layout.copy(k, r_max, u[j - 1]));
    }
    swap(layout.x[k - 1], layout.copy(k, r_max, u[k - 1]));
    for j in 1..k {
        swap(layout.y[j - 1], sub(k, r_max, k, j)?);
    }

    Ok(ReconfSequence {
        initial: layout.q_s.clone(),
        moves,
    })
}
