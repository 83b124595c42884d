//! Intermediateness of a profile on a given graph, and the cut structure of
//! intermediate profiles.
//!
//! Voter `i` of a profile sits at vertex `i` of the graph. A profile is
//! intermediate when every `V_ab` is geodesically convex; the same property
//! can be stated path by path (every shortest path carries a classical
//! single-crossing subprofile), which [`check_condition_iii`] tests
//! independently.

use thiserror::Error;

use crate::graph::{all_pairs_distances, is_convex_mask, DistanceMatrix, Graph, Vertex};
use crate::order::{Alternative, PairSet};
use crate::profile::{Profile, ProfileError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntermediateError {
    #[error("profile has {voters} voters but the graph has {vertices} vertices")]
    SizeMismatch { voters: usize, vertices: usize },
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

fn check_sizes(p: &Profile, g: &Graph) -> Result<(), IntermediateError> {
    if p.n() != g.n() {
        return Err(IntermediateError::SizeMismatch { voters: p.n(), vertices: g.n() });
    }
    Ok(())
}

/// Every `V_ab` is convex in `g`.
pub fn is_intermediate(p: &Profile, g: &Graph) -> Result<bool, IntermediateError> {
    check_sizes(p, g)?;
    let dm = all_pairs_distances(g).expect("graphs are connected");
    Ok(first_non_convex_pair(p, g, &dm).is_none())
}

/// The lexicographically first ordered pair `(a, b)` whose `V_ab` is not
/// convex in `g`, if any.
pub fn non_convex_pair(
    p: &Profile,
    g: &Graph,
) -> Result<Option<(Alternative, Alternative)>, IntermediateError> {
    check_sizes(p, g)?;
    let dm = all_pairs_distances(g).expect("graphs are connected");
    Ok(first_non_convex_pair(p, g, &dm))
}

pub(crate) fn first_non_convex_pair(
    p: &Profile,
    g: &Graph,
    dm: &DistanceMatrix,
) -> Option<(Alternative, Alternative)> {
    let m = p.m();
    let mut member = vec![false; p.n()];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let mut count = 0;
            for (slot, r) in member.iter_mut().zip(p.orders()) {
                *slot = r.prefers(a, b);
                count += *slot as usize;
            }
            if count <= 1 || count == p.n() {
                continue;
            }
            if !is_convex_mask(g, dm, &member) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Every shortest path of `g` carries a classical single-crossing
/// subprofile: along the path, each pair of alternatives flips at most once.
///
/// Enumerates shortest paths explicitly, so the cost grows with their number.
pub fn check_condition_iii(p: &Profile, g: &Graph) -> Result<bool, IntermediateError> {
    check_sizes(p, g)?;
    let dm = all_pairs_distances(g).expect("graphs are connected");
    let relations: Vec<PairSet> = p.orders().iter().map(PairSet::of).collect();
    let words = relations[0].words().len();
    for source in 0..g.n() {
        let mut walk = PathWalk { g, dm: &dm, relations: &relations, source };
        let changed = vec![0u64; words];
        if !walk.extend(source, &changed) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct PathWalk<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    relations: &'a [PairSet],
    source: Vertex,
}

impl PathWalk<'_> {
    // `changed` marks pairs that already flipped somewhere on the path
    // from the source to `at`.
    fn extend(&mut self, at: Vertex, changed: &[u64]) -> bool {
        let depth = self.dm.get(self.source, at);
        for &next in self.g.neighbors(at) {
            if self.dm.get(self.source, next) != depth + 1 {
                continue;
            }
            let here = self.relations[at].words();
            let there = self.relations[next].words();
            let mut flipped = Vec::with_capacity(changed.len());
            for ((h, t), c) in here.iter().zip(there).zip(changed) {
                let diff = h ^ t;
                if diff & c != 0 {
                    return false;
                }
                flipped.push(c | diff);
            }
            if !self.extend(next, &flipped) {
                return false;
            }
        }
        true
    }
}

/// An edge `u -> v` together with its signature: the ordered pairs `(c, d)`
/// with `c` preferred to `d` at `u` and `d` preferred to `c` at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub signature: PairSet,
}

/// The signature `S(uv)` of the (oriented) pair of voters `u`, `v`.
pub fn signature(p: &Profile, u: usize, v: usize) -> PairSet {
    p.order(u).relation().separated_from(&p.order(v).relation())
}

/// All edges of `g` from `V_ab` to `V_ba`, oriented `u ∈ V_ab`, `v ∈ V_ba`.
pub fn ab_cuts(
    p: &Profile,
    g: &Graph,
    a: Alternative,
    b: Alternative,
) -> Result<Vec<CutEdge>, IntermediateError> {
    check_sizes(p, g)?;
    p.check_pair(a, b)?;
    let mut cuts = Vec::new();
    for &(x, y) in g.edges() {
        let (u, v) = match (p.order(x).prefers(a, b), p.order(y).prefers(a, b)) {
            (true, false) => (x, y),
            (false, true) => (y, x),
            _ => continue,
        };
        cuts.push(CutEdge { u, v, signature: signature(p, u, v) });
    }
    Ok(cuts)
}
