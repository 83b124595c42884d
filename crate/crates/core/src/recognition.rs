//! Recognition of profiles that are intermediate on some median graph.
//!
//! The candidate graph is the neighbour graph of the domain: two orders are
//! joined when no third order of the domain lies between them. If the
//! profile is intermediate on any median graph, that graph is the neighbour
//! graph. [`recognize`] then verifies the structure recursively: pick a pair
//! `(a, b)` splitting the domain, check that the edges across the split form
//! a matching with a common signature, that the graph is the convex
//! expansion of its contraction along those edges, and recurse into both
//! sides.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{
    all_pairs_distances, contract_split, convex_expansion, is_convex_mask,
    median, Graph, GraphError, Halfspaces, Side, Vertex,
};
use crate::intermediate::first_non_convex_pair;
use crate::order::{Alternative, LinearOrder, PairSet};
use crate::profile::Profile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("empty domain")]
    Empty,
    #[error("domain is not reduced: orders {0} and {1} coincide")]
    NotReduced(usize, usize),
    #[error("orders over different numbers of alternatives")]
    MismatchedAlternatives,
    #[error("domain of {size} orders exceeds the oracle limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The graph on `domain` (vertex `i` is `domain[i]`) joining every pair of
/// orders with no third order of the domain between them.
pub fn build_neighbor_graph(domain: &[LinearOrder]) -> Result<Graph, RecognitionError> {
    let n = domain.len();
    if n == 0 {
        return Err(RecognitionError::Empty);
    }
    let m = domain[0].m();
    if domain.iter().any(|r| r.m() != m) {
        return Err(RecognitionError::MismatchedAlternatives);
    }
    let rel: Vec<PairSet> = domain.iter().map(PairSet::of).collect();
    for i in 0..n {
        for j in i + 1..n {
            if rel[i] == rel[j] {
                return Err(RecognitionError::NotReduced(i, j));
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let blocked = (0..n).any(|k| k != i && k != j && rel[i].between(&rel[k], &rel[j]));
            if !blocked {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// A condition of the recursive structure check, in the order they are
/// tested: (i), (ii), (v), (iii), (iv).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// (i) cut edges form a matching.
    DistinctEndpoints,
    /// (ii) all cut edges carry the same signature.
    EqualSignatures,
    /// (v) the graph is the convex expansion of its contraction.
    ConvexExpansion,
    /// (iii) both sides induce median graphs.
    MedianSides,
    /// (iv) both sides carry intermediate subprofiles.
    IntermediateSides,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::DistinctEndpoints => "(i)",
            Condition::EqualSignatures => "(ii)",
            Condition::ConvexExpansion => "(v)",
            Condition::MedianSides => "(iii)",
            Condition::IntermediateSides => "(iv)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub condition: Condition,
    /// Human-readable witness, in vertex ids of the neighbour graph.
    pub witness: String,
    /// Pivot pairs and sides visited on the way to the failure.
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Rejection),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    /// The input with identical orders merged; entry `i` sits at vertex
    /// `placement[i]`.
    pub reduced: Profile,
    /// Input voter -> reduced entry.
    pub voter_class: Vec<usize>,
    /// Neighbour graph of the domain (the median graph when accepted).
    pub graph: Graph,
    pub placement: Vec<Vertex>,
    pub verdict: Verdict,
}

impl RecognitionResult {
    pub fn is_accepted(&self) -> bool {
        matches!(self.verdict, Verdict::Accepted)
    }

    /// Input voter -> vertex.
    pub fn voter_vertex(&self) -> Vec<Vertex> {
        self.voter_class.iter().map(|&c| self.placement[c]).collect()
    }
}

/// Decides whether the profile is intermediate on some median graph and, if
/// so, returns that graph on the reduced domain.
pub fn recognize(p: &Profile) -> RecognitionResult {
    let (reduced, voter_class) = p.reduce();
    let graph = build_neighbor_graph(reduced.orders())
        .expect("a reduced, non-empty domain has a connected neighbour graph");
    let placement: Vec<Vertex> = (0..reduced.n()).collect();
    let relations: Vec<PairSet> = reduced.orders().iter().map(PairSet::of).collect();
    let checker = Checker { p: &reduced, g: &graph, relations: &relations };
    let all: Vec<Vertex> = (0..graph.n()).collect();
    let mut trace = Vec::new();
    let verdict = match checker.check(&all, &mut trace) {
        Err(rejection) => Verdict::Rejected(rejection),
        Ok(()) => checker.final_guard(),
    };
    RecognitionResult { reduced, voter_class, graph, placement, verdict }
}

struct Checker<'a> {
    p: &'a Profile,
    g: &'a Graph,
    relations: &'a [PairSet],
}

fn fmt_set(vs: &[Vertex]) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl Checker<'_> {
    fn reject(&self, condition: Condition, witness: String, trace: &[String]) -> Rejection {
        Rejection { condition, witness, trace: trace.to_vec() }
    }

    fn name(&self, a: Alternative) -> &str {
        &self.p.names()[a]
    }

    /// Checks the structure on the subgraph induced by `vertices` (sorted).
    fn check(&self, vertices: &[Vertex], trace: &mut Vec<String>) -> Result<(), Rejection> {
        if vertices.len() <= 1 {
            return Ok(());
        }
        let m = self.p.m();
        let (a, b) = (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find(|&(a, b)| {
                a != b
                    && vertices.iter().any(|&v| self.p.order(v).prefers(a, b))
                    && vertices.iter().any(|&v| self.p.order(v).prefers(b, a))
            })
            .expect("distinct orders disagree on some pair");
        let (side_ab, side_ba): (Vec<Vertex>, Vec<Vertex>) =
            vertices.iter().partition(|&&v| self.p.order(v).prefers(a, b));
        trace.push(format!(
            "pivot ({},{}) on {}: V_ab={} V_ba={}",
            self.name(a),
            self.name(b),
            fmt_set(vertices),
            fmt_set(&side_ab),
            fmt_set(&side_ba)
        ));

        let local = self.g.induced(vertices).map_err(|_| {
            self.reject(Condition::MedianSides, format!("{} is disconnected", fmt_set(vertices)), trace)
        })?;
        let mut in_ab = vec![false; self.g.n()];
        for &v in &side_ab {
            in_ab[v] = true;
        }

        // Cut edges, oriented from V_ab to V_ba, in global ids.
        let cuts: Vec<(Vertex, Vertex)> = local
            .edges()
            .iter()
            .map(|&(x, y)| (vertices[x], vertices[y]))
            .filter(|&(x, y)| in_ab[x] != in_ab[y])
            .map(|(x, y)| if in_ab[x] { (x, y) } else { (y, x) })
            .collect();
        if cuts.is_empty() {
            return Err(self.reject(
                Condition::MedianSides,
                format!("no edge joins {} and {}", fmt_set(&side_ab), fmt_set(&side_ba)),
                trace,
            ));
        }

        // (i)
        let mut seen_u: HashMap<Vertex, (Vertex, Vertex)> = HashMap::new();
        let mut seen_v: HashMap<Vertex, (Vertex, Vertex)> = HashMap::new();
        for &(u, v) in &cuts {
            if let Some(prev) = seen_u.insert(u, (u, v)) {
                return Err(self.reject(
                    Condition::DistinctEndpoints,
                    format!("vertex {u} ends cut edges {}-{} and {u}-{v}", prev.0, prev.1),
                    trace,
                ));
            }
            if let Some(prev) = seen_v.insert(v, (u, v)) {
                return Err(self.reject(
                    Condition::DistinctEndpoints,
                    format!("vertex {v} ends cut edges {}-{} and {u}-{v}", prev.0, prev.1),
                    trace,
                ));
            }
        }

        // (ii)
        let sig0 = self.relations[cuts[0].0].separated_from(&self.relations[cuts[0].1]);
        for &(u, v) in &cuts[1..] {
            if self.relations[u].separated_from(&self.relations[v]) != sig0 {
                return Err(self.reject(
                    Condition::EqualSignatures,
                    format!(
                        "cut edges {}-{} and {u}-{v} have different signatures",
                        cuts[0].0, cuts[0].1
                    ),
                    trace,
                ));
            }
        }

        // (v)
        self.check_expansion(vertices, &local, &in_ab).map_err(|why| {
            self.reject(Condition::ConvexExpansion, why, trace)
        })?;

        // (iii)
        for side in [&side_ab, &side_ba] {
            let sub = self.g.induced(side).map_err(|_| {
                self.reject(Condition::MedianSides, format!("{} is disconnected", fmt_set(side)), trace)
            })?;
            if let Some(triple) = non_median_triple(&sub) {
                let t = triple.map(|x| side[x]);
                return Err(self.reject(
                    Condition::MedianSides,
                    format!("{} has no unique median in side {}", fmt_set(&t), fmt_set(side)),
                    trace,
                ));
            }
        }

        // (iv)
        for side in [&side_ab, &side_ba] {
            let depth = trace.len();
            if let Err(inner) = self.check(side, trace) {
                return Err(Rejection {
                    condition: Condition::IntermediateSides,
                    witness: format!("side {}: {} {}", fmt_set(side), inner.condition, inner.witness),
                    trace: inner.trace,
                });
            }
            trace.truncate(depth);
        }
        trace.pop();
        Ok(())
    }

    /// Contracts the cut edges and checks that expanding the contraction
    /// along the images of the two sides gives back the local graph.
    fn check_expansion(&self, vertices: &[Vertex], local: &Graph, in_ab: &[bool]) -> Result<(), String> {
        let n = local.n();
        let local_ab: Vec<Vertex> = (0..n).filter(|&x| in_ab[vertices[x]]).collect();
        let local_ba: Vec<Vertex> = (0..n).filter(|&x| !in_ab[vertices[x]]).collect();
        let split = Halfspaces::new(local_ab, local_ba);
        let contraction = contract_split(local, &split).map_err(|e| e.to_string())?;
        let images = contraction.image(&split);
        let expansion = convex_expansion(&contraction.graph, &images)
            .map_err(|e| format!("contraction does not expand back: {e}"))?;
        // Identify each local vertex with its copy in the expansion.
        let mut second = HashMap::new();
        for (id, o) in expansion.origin.iter().enumerate() {
            if o.split && o.side == Side::W2 {
                second.insert(o.vertex, id);
            }
        }
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; expansion.graph.n()];
        for x in 0..n {
            let c = contraction.map[x];
            let target = if !in_ab[vertices[x]] && expansion.origin[c].split {
                second[&c]
            } else {
                c
            };
            if used[target] {
                return Err(format!("vertices collapse onto expansion vertex {target}"));
            }
            used[target] = true;
            phi[x] = target;
        }
        if expansion.graph.n() != n || expansion.graph.edges().len() != local.edges().len() {
            return Err(format!(
                "expansion has {} vertices and {} edges, expected {} and {}",
                expansion.graph.n(),
                expansion.graph.edges().len(),
                n,
                local.edges().len()
            ));
        }
        for &(x, y) in local.edges() {
            if !expansion.graph.has_edge(phi[x], phi[y]) {
                return Err(format!(
                    "edge {}-{} is not reproduced by the expansion",
                    vertices[x], vertices[y]
                ));
            }
        }
        Ok(())
    }

    /// Whole-graph verification backing the recursive verdict.
    fn final_guard(&self) -> Verdict {
        if let Some(t) = non_median_triple(self.g) {
            return Verdict::Rejected(Rejection {
                condition: Condition::ConvexExpansion,
                witness: format!("{} has no unique median", fmt_set(&t)),
                trace: Vec::new(),
            });
        }
        let dm = all_pairs_distances(self.g).expect("connected");
        match first_non_convex_pair(self.p, self.g, &dm) {
            None => Verdict::Accepted,
            Some((a, b)) => Verdict::Rejected(Rejection {
                condition: Condition::IntermediateSides,
                witness: format!("V_{}{} is not convex", self.name(a), self.name(b)),
                trace: Vec::new(),
            }),
        }
    }
}

fn non_median_triple(g: &Graph) -> Option<[Vertex; 3]> {
    let dm = all_pairs_distances(g).ok()?;
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if !matches!(median(&dm, u, v, w), Ok(Some(_))) {
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

/// Largest domain the exhaustive oracle accepts.
pub const ORACLE_LIMIT: usize = 7;

/// Exhaustive check: is the reduced profile intermediate on some median
/// graph with one vertex per order? Tries every median graph of the right
/// size (generated by convex expansions from a single vertex) and every
/// placement of the orders on its vertices.
pub fn recognition_oracle(p: &Profile, max_n: usize) -> Result<bool, RecognitionError> {
    let limit = max_n.min(ORACLE_LIMIT);
    let domain = p.domain();
    let d = domain.len();
    if d > limit {
        return Err(RecognitionError::TooLarge { size: d, limit });
    }
    let m = p.m();
    // Masks over domain indices of every non-trivial V_ab.
    let full = (1u32 << d) - 1;
    let mut masks: Vec<u32> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let mask = (0..d).filter(|&i| domain[i].prefers(a, b)).fold(0, |acc, i| acc | 1 << i);
            if mask != 0 && mask != full && mask.count_ones() > 1 {
                masks.push(mask);
            }
        }
    }
    masks.sort_unstable();
    masks.dedup();
    for entry in median_graphs(d) {
        let mut perm: Vec<usize> = (0..d).collect();
        loop {
            let fits = masks.iter().all(|&mask| {
                let mut image = 0usize;
                for (i, &v) in perm.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        image |= 1 << v;
                    }
                }
                entry.convex[image]
            });
            if fits {
                return Ok(true);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    Ok(false)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A median graph with its table of convex vertex sets.
pub struct MedianGraphEntry {
    pub graph: Graph,
    convex: Vec<bool>,
}

/// All median graphs on exactly `n` vertices (`1 <= n <= 7`), one per
/// isomorphism class.
pub fn median_graphs(n: usize) -> &'static [MedianGraphEntry] {
    static CATALOGUE: OnceLock<Vec<Vec<MedianGraphEntry>>> = OnceLock::new();
    assert!((1..=ORACLE_LIMIT).contains(&n), "median graph catalogue covers 1..=7 vertices");
    &CATALOGUE.get_or_init(build_catalogue)[n]
}

fn build_catalogue() -> Vec<Vec<MedianGraphEntry>> {
    let mut by_size: Vec<HashMap<Vec<u8>, Graph>> = vec![HashMap::new(); ORACLE_LIMIT + 1];
    let k1 = Graph::single_vertex();
    by_size[1].insert(canonical_form(&k1), k1);
    for size in 1..ORACLE_LIMIT {
        let graphs: Vec<Graph> = by_size[size].values().cloned().collect();
        for g in graphs {
            // Each vertex goes to W1 only, W2 only, or both.
            let total = 3usize.pow(size as u32);
            for code in 0..total {
                let mut w1 = Vec::new();
                let mut w2 = Vec::new();
                let mut c = code;
                let mut both = 0;
                for v in 0..size {
                    match c % 3 {
                        0 => w1.push(v),
                        1 => w2.push(v),
                        _ => {
                            w1.push(v);
                            w2.push(v);
                            both += 1;
                        }
                    }
                    c /= 3;
                }
                if both == 0 || size + both > ORACLE_LIMIT {
                    continue;
                }
                if let Ok(exp) = convex_expansion(&g, &Halfspaces::new(w1, w2)) {
                    let key = canonical_form(&exp.graph);
                    by_size[size + both].entry(key).or_insert(exp.graph);
                }
            }
        }
    }
    by_size
        .into_iter()
        .map(|graphs| {
            let mut graphs: Vec<(Vec<u8>, Graph)> = graphs.into_iter().collect();
            graphs.sort_by(|x, y| x.0.cmp(&y.0));
            graphs
                .into_iter()
                .map(|(_, graph)| {
                    let dm = all_pairs_distances(&graph).expect("connected");
                    let n = graph.n();
                    let convex = (0..1usize << n)
                        .map(|mask| {
                            let member: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
                            is_convex_mask(&graph, &dm, &member)
                        })
                        .collect();
                    MedianGraphEntry { graph, convex }
                })
                .collect()
        })
        .collect()
}

/// Lexicographically smallest adjacency matrix over all vertex permutations.
/// Brute force; only meant for graphs of at most seven vertices.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    loop {
        let mut adj = vec![0u8; n * n];
        for &(u, v) in g.edges() {
            adj[perm[u] * n + perm[v]] = 1;
            adj[perm[v] * n + perm[u]] = 1;
        }
        if best.as_ref().map_or(true, |b| adj < *b) {
            best = Some(adj);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one permutation")
}
