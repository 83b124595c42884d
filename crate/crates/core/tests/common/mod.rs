#![allow(dead_code)]

use std::collections::HashSet;

use median_voting::graph::Graph;
use median_voting::order::LinearOrder;
use median_voting::profile::Profile;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

/// All permutations of `0..m` in lexicographic order.
pub fn all_orders(m: usize) -> Vec<LinearOrder> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        out.push(LinearOrder::new(perm.clone()).unwrap());
        let Some(i) = (1..m).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..m).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        out.push(s.clone());
        let Some(i) = (0..k).rev().find(|&i| s[i] < n - k + i) else { break };
        s[i] += 1;
        for j in i + 1..k {
            s[j] = s[j - 1] + 1;
        }
    }
    out
}

/// A uniformly shaped random tree: vertex `i > 0` hangs off a random
/// earlier vertex.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    Graph::new(n, (1..n).map(|i| (rng.gen_range(0..i), i))).unwrap()
}

/// A random connected graph, usually not median: a random tree plus extra
/// edges.
pub fn random_connected_graph<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let mut edges: HashSet<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    Graph::new(n, edges).unwrap()
}

/// Orders on the vertices of a tree such that every pair of alternatives
/// flips on at most one edge: a profile single-crossing on the tree.
/// Adjacent voters may share an order.
pub fn single_crossing_on_tree<R: Rng>(t: &Graph, m: usize, rng: &mut R) -> Profile {
    let n = t.n();
    let mut orders: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut first: Vec<usize> = (0..m).collect();
    first.shuffle(rng);
    orders[0] = Some(first);
    let mut flipped = vec![false; m * m];
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if orders[w].is_some() {
                continue;
            }
            let parent = orders[v].clone().unwrap();
            let mut child = parent.clone();
            let swaps = rng.gen_range(0..=2);
            for _ in 0..swaps {
                if m < 2 {
                    break;
                }
                let i = rng.gen_range(0..m - 1);
                let (a, b) = (child[i], child[i + 1]);
                if !flipped[a * m + b] && !flipped[b * m + a] && position(&parent, a) < position(&parent, b) {
                    child.swap(i, i + 1);
                    flipped[a * m + b] = true;
                }
            }
            orders[w] = Some(child);
            stack.push(w);
        }
    }
    let orders = orders.into_iter().map(|o| LinearOrder::new(o.unwrap()).unwrap()).collect();
    Profile::unnamed(orders).unwrap()
}

fn position(order: &[usize], a: usize) -> usize {
    order.iter().position(|&x| x == a).unwrap()
}

pub fn rational<R: Rng>(rng: &mut R, max: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(0..=max)), BigInt::from(rng.gen_range(1..=4)))
}

/// Random non-negative rows, non-decreasing along each voter's ranking.
pub fn monotone_table<R: Rng>(p: &Profile, rng: &mut R) -> Vec<Vec<BigRational>> {
    p.orders()
        .iter()
        .map(|r| {
            let mut row = vec![BigRational::from_integer(0.into()); p.m()];
            let mut acc = rational(rng, 2);
            for &a in r.as_slice() {
                row[a] = acc.clone();
                if rng.gen_bool(0.7) {
                    acc += rational(rng, 3);
                }
            }
            row
        })
        .collect()
}

/// Random top segments of every voter's ranking.
pub fn random_approval<R: Rng>(p: &Profile, rng: &mut R) -> Vec<Vec<usize>> {
    p.orders()
        .iter()
        .map(|r| r.as_slice()[..rng.gen_range(0..=p.m())].to_vec())
        .collect()
}

/// A classical single-crossing profile on a path of `n` voters whose
/// orders run from a random order to its reverse by adjacent swaps, so
/// every pair flips somewhere along the path. Swaps favour the top of the
/// order so that many alternatives are ranked first by someone.
pub fn maximal_single_crossing_path<R: Rng>(n: usize, m: usize, rng: &mut R) -> Profile {
    let mut current: Vec<usize> = (0..m).collect();
    current.shuffle(rng);
    let start = current.clone();
    let mut chain = vec![current.clone()];
    loop {
        // Adjacent pairs still in their starting relative order.
        let open: Vec<usize> = (0..m.saturating_sub(1))
            .filter(|&i| position(&start, current[i]) < position(&start, current[i + 1]))
            .collect();
        let pick = if rng.gen_bool(0.5) { open.first() } else { open.choose(rng) };
        let Some(&i) = pick else { break };
        current.swap(i, i + 1);
        chain.push(current.clone());
    }
    let mut picks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..chain.len())).collect();
    picks.sort_unstable();
    let orders = picks.iter().map(|&i| LinearOrder::new(chain[i].clone()).unwrap()).collect();
    Profile::unnamed(orders).unwrap()
}
