//! Small worked instances used throughout the tests and the CLI examples.

use crate::graph::{Graph, Halfspaces};
use crate::profile::Profile;

/// A classical single-crossing profile on the path `0-1-2-3`.
pub fn path_profile() -> (Profile, Graph) {
    let p = Profile::from_letters(&["abcd", "bacd", "bcad", "bcda"]).expect("valid profile");
    (p, Graph::path(4))
}

/// `acbd, abcd, abdc, bacd` on the star centred at voter 1 (`abcd`).
pub fn tree_profile() -> (Profile, Graph) {
    let p = Profile::from_letters(&["acbd", "abcd", "abdc", "bacd"]).expect("valid profile");
    let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).expect("valid graph");
    (p, g)
}

/// Eight orders forming a maximal Condorcet domain, on the 3-cube.
pub fn cube_profile() -> (Profile, Graph) {
    let p = Profile::from_letters(&[
        "abcd", "abdc", "bacd", "badc", "cdab", "dcab", "cdba", "dcba",
    ])
    .expect("valid profile");
    let g = Graph::new(
        8,
        [
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .expect("valid graph");
    (p, g)
}

/// The Condorcet cycle `abc, bca, cab`.
pub fn cycle_profile() -> Profile {
    Profile::from_letters(&["abc", "bca", "cab"]).expect("valid profile")
}

/// Six vertices `a..f` (ids 0..5): `a-c`, `b-d`, `c-d`, `c-e`, `d-f`, with the
/// convex cover `W1 = {a, b, c, d}`, `W2 = {c, d, e, f}`.
pub fn expansion_example() -> (Graph, Halfspaces) {
    let g = Graph::new(6, [(0, 2), (1, 3), (2, 3), (2, 4), (3, 5)]).expect("valid graph");
    (g, Halfspaces::new(vec![0, 1, 2, 3], vec![2, 3, 4, 5]))
}

/// The expansion of [`expansion_example`]: `c` and `d` split into `c¹ = 2`,
/// `d¹ = 3`, `c² = 6`, `d² = 7`.
pub fn expanded_example() -> Graph {
    Graph::new(
        8,
        [(0, 2), (1, 3), (2, 3), (6, 7), (4, 6), (5, 7), (2, 6), (3, 7)],
    )
    .expect("valid graph")
}
