//! Finite simple undirected graphs on contiguous vertex ids, plus the
//! combinatorial primitives the rest of the crate is built on: degeneracy
//! ordering, domination and connectivity tests, vertex-disjoint paths via
//! vertex-split maximum flow, and pendant neighbours.
//!
//! Graphs are immutable values. Every edit produces a fresh graph together
//! with a [`VertexMap`] when vertex ids change.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Parallel edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            check_vertex(a, n)?;
            check_vertex(b, n)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// Complete bipartite graph; the left side gets ids `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
        Graph::from_edges(a + b, edges).expect("bipartite edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(v, self.n())
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(v).chain(self.adj[v].iter().copied())
    }

    /// Common neighbours of `a` and `b`, sorted.
    pub fn common_neighbors(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.adj[a], &self.adj[b]);
        let mut out = Vec::new();
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Returns a copy with the given edges removed and added. Removing an
    /// absent edge or adding a present one is an error.
    pub fn with_edge_changes(
        &self,
        remove: &[(Vertex, Vertex)],
        add: &[(Vertex, Vertex)],
    ) -> Result<Graph> {
        let mut edges: BTreeSet<(Vertex, Vertex)> = self.edges().collect();
        for &(a, b) in remove {
            if !edges.remove(&ordered(a, b)) {
                return Err(Error::Invalid(format!("edge {{{a},{b}}} is not present")));
            }
        }
        for &(a, b) in add {
            self.check_vertex(a)?;
            self.check_vertex(b)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !edges.insert(ordered(a, b)) {
                return Err(Error::Invalid(format!("edge {{{a},{b}}} already present")));
            }
        }
        Graph::from_edges(self.n(), edges)
    }

    /// Deletes `removed` and compacts the remaining ids, preserving order.
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, VertexMap) {
        let keep: Vec<Vertex> = self.vertices().filter(|v| !removed.contains(*v)).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep` (must be sorted and duplicate free). The
    /// i-th kept vertex becomes vertex i.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, VertexMap) {
        let map = VertexMap::from_kept(self.n(), keep);
        let mut adj = Vec::with_capacity(keep.len());
        let mut m = 0;
        for &old in keep {
            let list: Vec<Vertex> = self.adj[old].iter().filter_map(|&w| map.forward(w)).collect();
            m += list.len();
            adj.push(list);
        }
        (Graph { adj, m: m / 2 }, map)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(|_| true)
    }

    /// Components of the subgraph induced by vertices satisfying `allowed`.
    pub fn components_within<F: Fn(Vertex) -> bool>(&self, allowed: F) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] || !allowed(s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] && allowed(y) {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Shortest path from `s` to `t` avoiding vertices for which `blocked`
    /// holds (endpoints are never blocked).
    pub fn shortest_path<F: Fn(Vertex) -> bool>(
        &self,
        s: Vertex,
        t: Vertex,
        blocked: F,
    ) -> Option<Vec<Vertex>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX && (y == t || !blocked(y)) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

pub(crate) fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::InvalidVertex { vertex: v, n })
    }
}

pub(crate) fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Old-id/new-id correspondence produced when vertices are deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    old_to_new: Vec<Option<Vertex>>,
    new_to_old: Vec<Vertex>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    fn from_kept(n_old: usize, keep: &[Vertex]) -> Self {
        let mut old_to_new = vec![None; n_old];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        VertexMap {
            old_to_new,
            new_to_old: keep.to_vec(),
        }
    }

    pub fn forward(&self, old: Vertex) -> Option<Vertex> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn backward(&self, new: Vertex) -> Vertex {
        self.new_to_old[new]
    }

    pub fn old_len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        let old_to_new = self
            .old_to_new
            .iter()
            .map(|x| x.and_then(|mid| next.forward(mid)))
            .collect();
        let new_to_old = next.new_to_old.iter().map(|&mid| self.new_to_old[mid]).collect();
        VertexMap {
            old_to_new,
            new_to_old,
        }
    }

    pub fn forward_set(&self, set: &VertexSet) -> Option<VertexSet> {
        set.iter().map(|v| self.forward(v)).collect::<Option<Vec<_>>>().map(VertexSet::from)
    }
}

/// A set of vertex ids kept as a sorted, duplicate-free list. The sorted
/// form doubles as the canonical key for configurations.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn check_in(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) => g.check_vertex(v),
            None => Ok(()),
        }
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(mut v: Vec<Vertex>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        VertexSet::from(v.to_vec())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

/// Vertex colouring with colours `1..=num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    num_colors: u32,
}

impl Coloring {
    /// `num_colors` is the size of the palette; colours outside `1..=num_colors`
    /// are rejected.
    pub fn new(colors: Vec<u32>, num_colors: u32) -> Result<Self> {
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > num_colors)
        {
            return Err(Error::Invalid(format!(
                "vertex {v} has colour {c}, outside 1..={num_colors}"
            )));
        }
        Ok(Coloring { colors, num_colors })
    }

    /// Palette size taken from the largest colour used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, k)
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v]
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    pub fn class(&self, color: u32) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == color).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(a, b)| self.colors[a] != self.colors[b])
    }

    /// True iff `set` hits every colour of the palette.
    pub fn covers_all(&self, set: &VertexSet) -> bool {
        let mut seen = vec![false; self.num_colors as usize + 1];
        for v in set.iter() {
            seen[self.colors[v] as usize] = true;
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// Degeneracy together with the min-degree peeling order witnessing it.
/// Ties are broken by smallest vertex id.
pub fn degeneracy(g: &Graph) -> (usize, Vec<Vertex>) {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (d, order)
}

/// True iff every vertex is in `set` or adjacent to a member of it.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let mut dominated = vec![false; g.n()];
    let mut count = 0;
    for v in set.iter() {
        for w in g.closed_neighborhood(v) {
            if !dominated[w] {
                dominated[w] = true;
                count += 1;
            }
        }
    }
    count == g.n()
}

/// True iff `set` is non-empty and induces a connected subgraph.
pub fn is_connected_induced(g: &Graph, set: &VertexSet) -> bool {
    let Some(start) = set.iter().next() else {
        return false;
    };
    let mut seen = VertexSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if set.contains(y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == set.len()
}

/// Neighbours of `v` that have degree exactly one.
pub fn pendant_neighbors(g: &Graph, v: Vertex) -> Result<VertexSet> {
    g.check_vertex(v)?;
    Ok(g.neighbors(v).iter().copied().filter(|&w| g.degree(w) == 1).collect())
}

/// Maximum set of internally vertex-disjoint `u`-`v` paths whose internal
/// vertices avoid `forbidden`. For `min_len >= 2` the edge `{u, v}` is
/// ignored, which forces an internal vertex on every path; paths shorter
/// than `min_len` are then filtered out of the flow decomposition.
pub fn max_vertex_disjoint_paths(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    forbidden: &VertexSet,
    min_len: usize,
) -> Result<Vec<Vec<Vertex>>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Precondition("endpoints must differ".into()));
    }
    if forbidden.contains(u) || forbidden.contains(v) {
        return Err(Error::Precondition("endpoints must not be forbidden".into()));
    }
    let mut net = FlowNetwork::new(2 * g.n());
    // in(x) = 2x, out(x) = 2x + 1
    for x in g.vertices() {
        if x != u && x != v && !forbidden.contains(x) {
            net.add_edge(2 * x, 2 * x + 1);
        }
    }
    let usable = |x: Vertex| x == u || x == v || !forbidden.contains(x);
    for (a, b) in g.edges() {
        if !usable(a) || !usable(b) {
            continue;
        }
        if min_len >= 2 && ordered(a, b) == ordered(u, v) {
            continue;
        }
        net.add_edge(2 * a + 1, 2 * b);
        net.add_edge(2 * b + 1, 2 * a);
    }
    let source = 2 * u + 1;
    let sink = 2 * v;
    net.max_flow(source, sink);

    let mut paths = Vec::new();
    for start in net.saturated_out(source) {
        let mut path = vec![u];
        let mut node = start;
        loop {
            let x = node / 2;
            path.push(x);
            if x == v {
                break;
            }
            // through the split edge, then along the unique outgoing flow edge
            let out = 2 * x + 1;
            node = net
                .saturated_out(out)
                .into_iter()
                .next()
                .expect("flow conservation at a split vertex");
        }
        if path.len() > min_len {
            paths.push(path);
        }
    }
    paths.sort();
    Ok(paths)
}

/// Unit-capacity network with Edmonds-Karp augmentation.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut flow = 0;
        loop {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    reached = true;
                    break;
                }
                for &e in &self.head[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && y != s && via[y] == usize::MAX {
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                return flow;
            }
            let mut x = t;
            while x != s {
                let e = via[x];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                x = self.to[e ^ 1];
            }
            flow += 1;
        }
    }

    /// Targets of forward edges out of `x` that carry flow.
    fn saturated_out(&self, x: usize) -> Vec<usize> {
        self.head[x]
            .iter()
            .filter(|&&e| e % 2 == 0 && self.cap[e] == 0)
            .map(|&e| self.to[e])
            .collect()
    }
}
