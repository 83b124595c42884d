//! Undirected simple graphs on dense vertex ids and the median-graph
//! primitives built on top of them: hop distances, geodesic betweenness,
//! convexity, medians, convex expansion and the inverse contraction of an
//! edge split.
//!
//! Graphs are immutable values. Operations that change the shape of a graph
//! (expansion, contraction, induced subgraphs) return a fresh [`Graph`]
//! together with an explicit vertex map.

use std::collections::VecDeque;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph not connected")]
    NotConnected,
    #[error("graph not bipartite: vertex {w} is equidistant from {u} and {v}")]
    NotBipartite { u: Vertex, v: Vertex, w: Vertex },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("vertices {0:?} have more than one median")]
    MultipleMedians([Vertex; 3]),
    #[error("expansion sets not convex")]
    ExpansionNotConvex,
    #[error("invalid expansion sets: {0}")]
    InvalidExpansion(&'static str),
    #[error("split edges do not form a matching at vertex {0}")]
    SplitNotMatching(Vertex),
}

/// A connected, simple, undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges, out-of-range ids and
    /// disconnected inputs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adj[a].contains(&b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
            list.push((a, b));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        list.sort_unstable();
        let g = Graph { adj, edges: list };
        if !g.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(g)
    }

    pub fn single_vertex() -> Self {
        Graph { adj: vec![Vec::new()], edges: Vec::new() }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is a valid graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is a valid graph")
    }

    /// The star with `n` vertices: centre 0 joined to leaves `1..n`.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (0, i))).expect("star is a valid graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        Self::new(a + b, edges).expect("complete bipartite graph is valid")
    }

    /// The `dim`-dimensional hypercube; vertex ids are the binary labels.
    pub fn hypercube(dim: u32) -> Self {
        let n = 1usize << dim;
        let edges = (0..n).flat_map(|v| {
            (0..dim)
                .map(move |bit| (v, v ^ (1 << bit)))
                .filter(|(u, w)| u < w)
        });
        Self::new(n, edges).expect("hypercube is a valid graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n()
    }

    fn is_connected(&self) -> bool {
        bfs(self, 0).iter().all(|d| *d != UNREACHED)
    }

    /// Vertices of degree one, ascending.
    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    /// Fails when the induced subgraph is disconnected.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| index[*u] != usize::MAX && index[*v] != usize::MAX)
            .map(|(u, v)| (index[*u], index[*v]));
        Graph::new(vertices.len(), edges)
    }

    /// Applies a vertex relabelling `map[old] = new` (a permutation).
    pub fn relabel(&self, map: &[Vertex]) -> Graph {
        Graph::new(self.n(), self.edges.iter().map(|&(u, v)| (map[u], map[v])))
            .expect("relabelling preserves validity")
    }
}

const UNREACHED: u32 = u32::MAX;

fn bfs(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    /// `w` lies on some shortest `u`-`v` path.
    #[inline]
    pub fn is_between(&self, u: Vertex, w: Vertex, v: Vertex) -> bool {
        self.get(u, w) + self.get(w, v) == self.get(u, v)
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        let row = bfs(g, s);
        if row.contains(&UNREACHED) {
            return Err(GraphError::NotConnected);
        }
        d.extend(row);
    }
    Ok(DistanceMatrix { n, d })
}

pub fn is_between(dm: &DistanceMatrix, u: Vertex, w: Vertex, v: Vertex) -> bool {
    dm.is_between(u, w, v)
}

/// Geodesic convexity of a vertex set given as a membership mask.
///
/// A set `S` is convex iff, for every `u` in `S`, every vertex of `S` has all
/// of its predecessors in the shortest-path DAG rooted at `u` inside `S`:
/// any vertex on a shortest `u`-`v` path is reached from `v` by walking
/// predecessors.
pub fn is_convex_mask(g: &Graph, dm: &DistanceMatrix, member: &[bool]) -> bool {
    let inside: Vec<Vertex> = (0..g.n()).filter(|&v| member[v]).collect();
    for &u in &inside {
        for &x in &inside {
            let dx = dm.get(u, x);
            if dx == 0 {
                continue;
            }
            for &w in g.neighbors(x) {
                if !member[w] && dm.get(u, w) + 1 == dx {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_convex(g: &Graph, dm: &DistanceMatrix, set: &[Vertex]) -> bool {
    is_convex_mask(g, dm, &mask_of(g.n(), set))
}

pub(crate) fn mask_of(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in set {
        mask[v] = true;
    }
    mask
}

/// Smallest convex set containing `seed`, by closing under betweenness.
pub fn convex_hull(g: &Graph, dm: &DistanceMatrix, seed: &[Vertex]) -> Vec<Vertex> {
    let n = g.n();
    let mut member = mask_of(n, seed);
    loop {
        let inside: Vec<Vertex> = (0..n).filter(|&v| member[v]).collect();
        let mut grew = false;
        for (i, &u) in inside.iter().enumerate() {
            for &v in &inside[i + 1..] {
                for w in 0..n {
                    if !member[w] && dm.is_between(u, w, v) {
                        member[w] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return (0..n).filter(|&v| member[v]).collect();
        }
    }
}

/// The unique vertex between every pair of `u`, `v`, `w`.
///
/// `Ok(None)` when no such vertex exists; an error when there are several,
/// which means the graph is not median.
pub fn median(
    dm: &DistanceMatrix,
    u: Vertex,
    v: Vertex,
    w: Vertex,
) -> Result<Option<Vertex>, GraphError> {
    let mut found = None;
    for x in 0..dm.n() {
        if dm.is_between(u, x, v) && dm.is_between(u, x, w) && dm.is_between(v, x, w) {
            if found.is_some() {
                return Err(GraphError::MultipleMedians([u, v, w]));
            }
            found = Some(x);
        }
    }
    Ok(found)
}

/// Exhaustive triple check: every triple of distinct vertices has exactly one
/// median.
pub fn is_median_graph(g: &Graph) -> bool {
    let dm = match all_pairs_distances(g) {
        Ok(dm) => dm,
        Err(_) => return false,
    };
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if !matches!(median(&dm, u, v, w), Ok(Some(_))) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_bipartite(g: &Graph) -> bool {
    let dist = bfs(g, 0);
    g.edges().iter().all(|&(u, v)| dist[u] % 2 != dist[v] % 2)
}

/// A pair of vertex sets. As an expansion input the sets cover the graph and
/// overlap; as the result of [`edge_split`] they are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspaces {
    pub w1: Vec<Vertex>,
    pub w2: Vec<Vertex>,
}

impl Halfspaces {
    pub fn new(mut w1: Vec<Vertex>, mut w2: Vec<Vertex>) -> Self {
        w1.sort_unstable();
        w1.dedup();
        w2.sort_unstable();
        w2.dedup();
        Halfspaces { w1, w2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    W1,
    W2,
}

/// Where a vertex of an expanded graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Origin {
    pub vertex: Vertex,
    pub side: Side,
    /// The origin lay in `W1 ∩ W2` and was duplicated.
    pub split: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub graph: Graph,
    pub origin: Vec<Origin>,
}

/// Convex expansion of `g` with respect to `h`.
///
/// Vertices keep their ids; a vertex `v` of `W1 ∩ W2` keeps its id as the
/// `W1` copy and its `W2` copy is appended after the original vertices, in
/// increasing order of `v`.
pub fn convex_expansion(g: &Graph, h: &Halfspaces) -> Result<Expansion, GraphError> {
    let n = g.n();
    for &v in h.w1.iter().chain(&h.w2) {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
    }
    let in1 = mask_of(n, &h.w1);
    let in2 = mask_of(n, &h.w2);
    if (0..n).any(|v| !in1[v] && !in2[v]) {
        return Err(GraphError::InvalidExpansion("W1 and W2 do not cover the vertex set"));
    }
    if !(0..n).any(|v| in1[v] && in2[v]) {
        return Err(GraphError::InvalidExpansion("W1 and W2 do not intersect"));
    }
    let only1 = |v: Vertex| in1[v] && !in2[v];
    let only2 = |v: Vertex| in2[v] && !in1[v];
    if g
        .edges()
        .iter()
        .any(|&(u, v)| (only1(u) && only2(v)) || (only2(u) && only1(v)))
    {
        return Err(GraphError::InvalidExpansion("an edge joins W1\\W2 to W2\\W1"));
    }
    let dm = all_pairs_distances(g)?;
    if !is_convex_mask(g, &dm, &in1) || !is_convex_mask(g, &dm, &in2) {
        return Err(GraphError::ExpansionNotConvex);
    }

    let mut origin: Vec<Origin> = (0..n)
        .map(|v| Origin {
            vertex: v,
            side: if in1[v] { Side::W1 } else { Side::W2 },
            split: in1[v] && in2[v],
        })
        .collect();
    let mut second = vec![usize::MAX; n];
    for v in 0..n {
        if in1[v] && in2[v] {
            second[v] = origin.len();
            origin.push(Origin { vertex: v, side: Side::W2, split: true });
        }
    }
    let both = |v: Vertex| in1[v] && in2[v];
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        match (both(u), both(v)) {
            (true, true) => {
                edges.push((u, v));
                edges.push((second[u], second[v]));
            }
            (true, false) => edges.push((if only2(v) { second[u] } else { u }, v)),
            (false, true) => edges.push((u, if only2(u) { second[v] } else { v })),
            (false, false) => edges.push((u, v)),
        }
    }
    for v in 0..n {
        if both(v) {
            edges.push((v, second[v]));
        }
    }
    let graph = Graph::new(origin.len(), edges)?;
    Ok(Expansion { graph, origin })
}

/// The bipartition of the vertex set induced by the edge `(u, v)`: vertices
/// strictly closer to `u`, and vertices strictly closer to `v`.
pub fn edge_split(
    g: &Graph,
    dm: &DistanceMatrix,
    edge: (Vertex, Vertex),
) -> Result<Halfspaces, GraphError> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for w in 0..g.n() {
        match dm.get(w, u).cmp(&dm.get(w, v)) {
            std::cmp::Ordering::Less => w1.push(w),
            std::cmp::Ordering::Greater => w2.push(w),
            std::cmp::Ordering::Equal => return Err(GraphError::NotBipartite { u, v, w }),
        }
    }
    Ok(Halfspaces { w1, w2 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `map[old] = new`.
    pub map: Vec<Vertex>,
}

impl Contraction {
    /// Images of the two sides of the contracted split.
    pub fn image(&self, h: &Halfspaces) -> Halfspaces {
        Halfspaces::new(
            h.w1.iter().map(|&v| self.map[v]).collect(),
            h.w2.iter().map(|&v| self.map[v]).collect(),
        )
    }
}

/// Contracts every edge crossing the split `h`. Contracted vertices are
/// numbered by increasing smallest original member.
pub fn contract_split(g: &Graph, h: &Halfspaces) -> Result<Contraction, GraphError> {
    let n = g.n();
    let in1 = mask_of(n, &h.w1);
    let in2 = mask_of(n, &h.w2);
    if (0..n).any(|v| in1[v] == in2[v]) {
        return Err(GraphError::InvalidExpansion("split sides must partition the vertex set"));
    }
    let mut partner = vec![usize::MAX; n];
    for &(u, v) in g.edges() {
        if in1[u] != in1[v] {
            for (a, b) in [(u, v), (v, u)] {
                if partner[a] != usize::MAX {
                    return Err(GraphError::SplitNotMatching(a));
                }
                partner[a] = b;
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if map[v] != usize::MAX {
            continue;
        }
        map[v] = next;
        if partner[v] != usize::MAX {
            map[partner[v]] = next;
        }
        next += 1;
    }
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .filter(|(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(next, edges)?;
    Ok(Contraction { graph, map })
}

/// Finds an isomorphism `g -> h` (as `map[g_vertex] = h_vertex`) by
/// backtracking, pruning with degrees and distance consistency.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n != h.n() || g.edges().len() != h.edges().len() {
        return None;
    }
    let dg = all_pairs_distances(g).ok()?;
    let dh = all_pairs_distances(h).ok()?;
    let profile = |dm: &DistanceMatrix, deg: usize, v: Vertex| {
        let mut row: Vec<u32> = (0..n).map(|w| dm.get(v, w)).collect();
        row.sort_unstable();
        (deg, row)
    };
    let pg: Vec<_> = (0..n).map(|v| profile(&dg, g.degree(v), v)).collect();
    let ph: Vec<_> = (0..n).map(|v| profile(&dh, h.degree(v), v)).collect();
    let mut a = pg.clone();
    let mut b = ph.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }

    // BFS order keeps the distance constraints tight from the first steps.
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }

    let mut search = IsoSearch {
        order: &order,
        dg: &dg,
        dh: &dh,
        pg: &pg,
        ph: &ph,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Some(search.map)
    } else {
        None
    }
}

struct IsoSearch<'a> {
    order: &'a [Vertex],
    dg: &'a DistanceMatrix,
    dh: &'a DistanceMatrix,
    pg: &'a [(usize, Vec<u32>)],
    ph: &'a [(usize, Vec<u32>)],
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for cand in 0..self.used.len() {
            if self.used[cand] || self.pg[v] != self.ph[cand] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&x| self.dg.get(v, x) == self.dh.get(cand, self.map[x]));
            if !consistent {
                continue;
            }
            self.map[v] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
        }
        self.map[v] = usize::MAX;
        false
    }
}
