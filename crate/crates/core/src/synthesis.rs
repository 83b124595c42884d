//! Intermediate profiles for arbitrary median graphs, and random median
//! graphs for testing.
//!
//! A median graph is taken apart by contracting one split at a time until a
//! single vertex remains. Replaying the contractions as expansions, each step
//! clones one alternative: vertices on the `W1` side rank the original just
//! above its clone, vertices on the `W2` side just below.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{
    all_pairs_distances, contract_split, convex_expansion, convex_hull, edge_split,
    is_median_graph, Graph, GraphError, Halfspaces, Side, Vertex,
};
use crate::intermediate::is_intermediate;
use crate::order::{Alternative, LinearOrder};
use crate::profile::{default_names, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("graph is not a median graph")]
    NotMedian,
    #[error("expansion step {0} does not reproduce its graph")]
    BadStep(usize),
    #[error("synthesized profile is not intermediate after step {0}")]
    NotIntermediate(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One convex expansion: `graph` is `base` expanded along `halfspaces`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionStep {
    pub base: Graph,
    pub halfspaces: Halfspaces,
    pub graph: Graph,
    /// Vertex of `graph` -> the vertex of `base` it comes from.
    pub base_of: Vec<Vertex>,
    /// Vertex of `graph` -> the side of the new split it lies on.
    pub side: Vec<Side>,
}

impl ExpansionStep {
    /// Expands `base` along `halfspaces` and checks that the result is
    /// `graph` under the recorded maps.
    pub fn verify(&self) -> bool {
        let Ok(exp) = convex_expansion(&self.base, &self.halfspaces) else {
            return false;
        };
        if exp.graph.n() != self.graph.n() || exp.graph.edges().len() != self.graph.edges().len() {
            return false;
        }
        let mut copy2 = vec![usize::MAX; self.base.n()];
        for (id, o) in exp.origin.iter().enumerate() {
            if o.split && o.side == Side::W2 {
                copy2[o.vertex] = id;
            }
        }
        let phi: Vec<Vertex> = (0..self.graph.n())
            .map(|v| {
                let b = self.base_of[v];
                if self.side[v] == Side::W2 && copy2[b] != usize::MAX {
                    copy2[b]
                } else {
                    b
                }
            })
            .collect();
        let mut seen = vec![false; exp.graph.n()];
        for &x in &phi {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        self.graph.edges().iter().all(|&(u, v)| exp.graph.has_edge(phi[u], phi[v]))
    }
}

/// Expansions from a single vertex up to a target graph. The last step's
/// `graph` is the target itself, with its own vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionHistory {
    pub steps: Vec<ExpansionStep>,
}

impl ExpansionHistory {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Contracts the split of the smallest edge until one vertex remains, and
/// returns the contractions as a forward history.
pub fn mulder_decompose(g: &Graph) -> Result<ExpansionHistory, SynthesisError> {
    if !is_median_graph(g) {
        return Err(SynthesisError::NotMedian);
    }
    let mut steps = Vec::new();
    let mut current = g.clone();
    while current.n() > 1 {
        let dm = all_pairs_distances(&current)?;
        let split = edge_split(&current, &dm, current.edges()[0])?;
        let contraction = contract_split(&current, &split)?;
        let halfspaces = contraction.image(&split);
        let mut side = vec![Side::W2; current.n()];
        for &v in &split.w1 {
            side[v] = Side::W1;
        }
        steps.push(ExpansionStep {
            base: contraction.graph.clone(),
            halfspaces,
            graph: current,
            base_of: contraction.map,
            side,
        });
        current = contraction.graph;
    }
    steps.reverse();
    Ok(ExpansionHistory { steps })
}

/// Where a clone goes relative to the alternative it copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClonePlacement {
    pub anchor: Alternative,
    pub below: bool,
}

impl ClonePlacement {
    /// Inserts the clone, which receives the fresh id `order.m()`.
    pub fn apply(&self, order: &LinearOrder) -> LinearOrder {
        order.with_clone(self.anchor, self.below)
    }
}

/// The clone of `x` sits directly below `x` on the `W1` side and directly
/// above it on the `W2` side.
pub fn clone_position_choice(x: Alternative, side: Side) -> ClonePlacement {
    ClonePlacement { anchor: x, below: side == Side::W1 }
}

/// A reduced profile, one order per vertex of `g` (voter `v` at vertex `v`),
/// intermediate on `g` and using one alternative more than the number of
/// splits of `g`.
pub fn synthesize_profile(g: &Graph) -> Result<Profile, SynthesisError> {
    let history = mulder_decompose(g)?;
    let mut orders = vec![LinearOrder::identity(1)];
    for (i, step) in history.steps.iter().enumerate() {
        if !step.verify() {
            return Err(SynthesisError::BadStep(i));
        }
        // The most recently introduced alternative.
        let x = orders[0].m() - 1;
        orders = (0..step.graph.n())
            .map(|v| clone_position_choice(x, step.side[v]).apply(&orders[step.base_of[v]]))
            .collect();
        let names = default_names(orders[0].m());
        let p = Profile::new(names, orders.clone()).expect("orders over a common alternative set");
        if !is_intermediate(&p, &step.graph).expect("one order per vertex") {
            return Err(SynthesisError::NotIntermediate(i));
        }
    }
    let names = default_names(orders[0].m());
    Ok(Profile::new(names, orders).expect("orders over a common alternative set"))
}

/// A median graph with exactly `n` vertices (`n >= 1`) grown from a single
/// vertex by seeded random convex expansions, then randomly relabelled.
pub fn random_median_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a graph needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::single_vertex();
    while g.n() < n {
        let room = n - g.n();
        let dm = all_pairs_distances(&g).expect("expansions stay connected");
        let all: Vec<Vertex> = (0..g.n()).collect();
        let mut grown = None;
        for _ in 0..16 {
            let h = if g.n() == 1 || rng.gen_bool(0.4) {
                let seeds: Vec<Vertex> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..g.n())).collect();
                Halfspaces::new(all.clone(), convex_hull(&g, &dm, &seeds))
            } else {
                let e = g.edges()[rng.gen_range(0..g.edges().len())];
                let split = edge_split(&g, &dm, e).expect("median graphs are bipartite");
                let mut seed1 = split.w1.clone();
                for _ in 0..rng.gen_range(1..=2) {
                    seed1.push(*split.w2.choose(&mut rng).expect("non-empty side"));
                }
                let w1 = convex_hull(&g, &dm, &seed1);
                let mut seed2: Vec<Vertex> = (0..g.n()).filter(|v| w1.binary_search(v).is_err()).collect();
                if seed2.is_empty() || rng.gen_bool(0.3) {
                    seed2.push(*w1.choose(&mut rng).expect("non-empty side"));
                }
                Halfspaces::new(w1, convex_hull(&g, &dm, &seed2))
            };
            let overlap = h.w1.iter().filter(|v| h.w2.binary_search(v).is_ok()).count();
            if overlap > room {
                continue;
            }
            if let Ok(exp) = convex_expansion(&g, &h) {
                grown = Some(exp.graph);
                break;
            }
        }
        g = match grown {
            Some(next) => next,
            None => {
                let v = rng.gen_range(0..g.n());
                convex_expansion(&g, &Halfspaces::new(all, vec![v]))
                    .expect("a pendant expansion is always valid")
                    .graph
            }
        };
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    g.relabel(&perm)
}
