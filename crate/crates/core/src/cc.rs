//! Chamberlin-Courant winner determination for profiles single-crossing on
//! a tree.
//!
//! For any committee, the voters whose favourite member is `c` form a
//! subtree (an intersection of convex sets `V_cd`). An optimal assignment is
//! therefore a partition of the tree into at most `k` connected parts, each
//! labelled with one alternative. [`cc_tree_dp`] finds the cheapest such
//! partition bottom-up from a leaf; [`cc_brute_force`] enumerates committees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::intermediate::is_intermediate;
use crate::order::Alternative;
use crate::profile::Profile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CcError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("profile has {voters} voters but the tree has {vertices} vertices")]
    SizeMismatch { voters: usize, vertices: usize },
    #[error("not single-crossing on given tree")]
    NotSingleCrossing,
    #[error("committee size {k} must lie in 1..={m}")]
    BadCommitteeSize { k: usize, m: usize },
    #[error("misrepresentation function covers {got} alternatives, profile has {expected}")]
    MisrepAlternatives { got: usize, expected: usize },
    #[error("misrepresentation table has {got} rows, profile has {expected} voters")]
    MisrepVoters { got: usize, expected: usize },
    #[error("misrepresentation values must be non-negative")]
    Negative,
    #[error("positional vector must start at 0 and be non-decreasing")]
    BadPositional,
    #[error("misrepresentation of voter {0} is not monotone in position")]
    NotMonotone(usize),
    #[error("approved set of voter {0} is not a top segment of their ranking")]
    ApprovalNotPrefix(usize),
    #[error("alternative {0} out of range")]
    AlternativeOutOfRange(usize),
    #[error("{committees} committees exceed the brute-force limit")]
    TooLarge { committees: u128 },
    #[error("{0} is not a leaf of the tree")]
    NotALeaf(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Sum over voters.
    Utilitarian,
    /// Maximum over voters.
    Egalitarian,
}

/// Dissatisfaction `r(v, c)` of voter `v` represented by `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Misrepresentation {
    /// `r(v, c) = s[pos_v(c) - 1]`.
    Positional(Vec<BigRational>),
    /// `r(v, c) = table[v][c]`.
    Table(Vec<Vec<BigRational>>),
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl Misrepresentation {
    /// `s = (0, 1, ..., m - 1)`.
    pub fn borda(m: usize) -> Self {
        Misrepresentation::Positional((0..m).map(int).collect())
    }

    pub fn positional(s: Vec<BigRational>) -> Result<Self, CcError> {
        if s.first().is_some_and(|s1| !s1.is_zero()) || s.windows(2).any(|w| w[0] > w[1]) {
            return Err(CcError::BadPositional);
        }
        Ok(Misrepresentation::Positional(s))
    }

    /// Rows indexed by voter, columns by alternative id.
    pub fn table(p: &Profile, rows: Vec<Vec<BigRational>>) -> Result<Self, CcError> {
        let r = Misrepresentation::Table(rows);
        r.validate(p)?;
        Ok(r)
    }

    /// Zero for approved alternatives, one otherwise. Each voter must
    /// approve a top segment of their ranking.
    pub fn approval(p: &Profile, approved: &[Vec<Alternative>]) -> Result<Self, CcError> {
        if approved.len() != p.n() {
            return Err(CcError::MisrepVoters { got: approved.len(), expected: p.n() });
        }
        let m = p.m();
        let mut rows = Vec::with_capacity(p.n());
        for (v, set) in approved.iter().enumerate() {
            let mut row = vec![BigRational::one(); m];
            for &a in set {
                if a >= m {
                    return Err(CcError::AlternativeOutOfRange(a));
                }
                row[a] = BigRational::zero();
            }
            let r = p.order(v);
            let count = row.iter().filter(|x| x.is_zero()).count();
            if r.as_slice()[..count].iter().any(|&a| !row[a].is_zero()) {
                return Err(CcError::ApprovalNotPrefix(v));
            }
            rows.push(row);
        }
        Ok(Misrepresentation::Table(rows))
    }

    /// Every voter approves their top `t` alternatives.
    pub fn approve_top(p: &Profile, t: usize) -> Self {
        let sets: Vec<Vec<Alternative>> =
            p.orders().iter().map(|r| r.as_slice()[..t.min(p.m())].to_vec()).collect();
        Misrepresentation::approval(p, &sets).expect("top segments are prefixes")
    }

    pub fn value(&self, p: &Profile, v: usize, a: Alternative) -> &BigRational {
        match self {
            Misrepresentation::Positional(s) => &s[p.order(v).position(a) - 1],
            Misrepresentation::Table(rows) => &rows[v][a],
        }
    }

    /// Checks dimensions, non-negativity and monotonicity against `p`.
    pub fn validate(&self, p: &Profile) -> Result<(), CcError> {
        let m = p.m();
        match self {
            Misrepresentation::Positional(s) => {
                if s.len() != m {
                    return Err(CcError::MisrepAlternatives { got: s.len(), expected: m });
                }
                if s.iter().any(|x| x.is_negative()) {
                    return Err(CcError::Negative);
                }
                if s.windows(2).any(|w| w[0] > w[1]) {
                    return Err(CcError::BadPositional);
                }
            }
            Misrepresentation::Table(rows) => {
                if rows.len() != p.n() {
                    return Err(CcError::MisrepVoters { got: rows.len(), expected: p.n() });
                }
                for (v, row) in rows.iter().enumerate() {
                    if row.len() != m {
                        return Err(CcError::MisrepAlternatives { got: row.len(), expected: m });
                    }
                    if row.iter().any(|x| x.is_negative()) {
                        return Err(CcError::Negative);
                    }
                    let ranked = p.order(v).as_slice();
                    if ranked.windows(2).any(|w| row[w[0]] > row[w[1]]) {
                        return Err(CcError::NotMonotone(v));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcSolution {
    /// Voter -> representative.
    pub assignment: Vec<Alternative>,
    /// Distinct representatives, ascending.
    pub committee: Vec<Alternative>,
    pub phi: BigRational,
    pub objective: Objective,
}

/// `Φ(P, w)`: the multiplicity-weighted sum, or the maximum, of the voters'
/// misrepresentations under `assignment`.
pub fn total_misrepresentation(
    p: &Profile,
    r: &Misrepresentation,
    assignment: &[Alternative],
    obj: Objective,
) -> BigRational {
    let mut acc = BigRational::zero();
    for (v, &a) in assignment.iter().enumerate() {
        let x = r.value(p, v, a);
        match obj {
            Objective::Utilitarian => acc += x * int(p.multiplicities()[v] as usize),
            Objective::Egalitarian => {
                if *x > acc {
                    acc = x.clone();
                }
            }
        }
    }
    acc
}

fn combine(obj: Objective, x: &BigRational, y: &BigRational) -> BigRational {
    match obj {
        Objective::Utilitarian => x + y,
        Objective::Egalitarian => x.max(y).clone(),
    }
}

fn solution(p: &Profile, r: &Misrepresentation, mut committee: Vec<Alternative>, obj: Objective) -> CcSolution {
    committee.sort_unstable();
    committee.dedup();
    let assignment: Vec<Alternative> = p
        .orders()
        .iter()
        .map(|o| o.best_of(committee.iter().copied()).expect("non-empty committee"))
        .collect();
    // Only members someone is assigned to stay in the committee.
    let mut used = assignment.clone();
    used.sort_unstable();
    used.dedup();
    let phi = total_misrepresentation(p, r, &assignment, obj);
    CcSolution { assignment, committee: used, phi, objective: obj }
}

fn check_k(p: &Profile, k: usize) -> Result<(), CcError> {
    if k < 1 || k > p.m() {
        return Err(CcError::BadCommitteeSize { k, m: p.m() });
    }
    Ok(())
}

fn check_tree(p: &Profile, t: &Graph) -> Result<(), CcError> {
    if p.n() != t.n() {
        return Err(CcError::SizeMismatch { voters: p.n(), vertices: t.n() });
    }
    if !t.is_tree() {
        return Err(CcError::NotATree);
    }
    if !is_intermediate(p, t).expect("sizes checked") {
        return Err(CcError::NotSingleCrossing);
    }
    Ok(())
}

/// The leaf that plays the role of the first voter: the smallest-id leaf,
/// or vertex 0 of a single-vertex tree.
pub fn first_leaf(t: &Graph) -> Vertex {
    t.leaves().first().copied().unwrap_or(0)
}

/// Optimal Chamberlin-Courant `k`-assignment for a profile single-crossing
/// on the tree `t` (voter `v` at vertex `v`).
pub fn cc_tree_dp(
    p: &Profile,
    t: &Graph,
    k: usize,
    r: &Misrepresentation,
    obj: Objective,
) -> Result<CcSolution, CcError> {
    check_tree(p, t)?;
    check_k(p, k)?;
    r.validate(p)?;
    let root = first_leaf(t);
    let labels: Vec<Alternative> = p.order(root).as_slice().to_vec();
    let dp = TreeDp::run(p, t, k, r, obj, root, &labels);
    Ok(solution(p, r, dp.committee(), obj))
}

type Table = Vec<Vec<Option<BigRational>>>;

struct TreeDp<'a> {
    obj: Objective,
    labels: &'a [Alternative],
    k: usize,
    children: Vec<Vec<Vertex>>,
    /// `stages[v][i][t][j]`: best cost of `v` with its first `i` children's
    /// subtrees cut into `t` parts, `v`'s part labelled `labels[j]`.
    stages: Vec<Vec<Table>>,
    root: Vertex,
}

impl<'a> TreeDp<'a> {
    fn run(
        p: &Profile,
        t: &Graph,
        k: usize,
        r: &Misrepresentation,
        obj: Objective,
        root: Vertex,
        labels: &'a [Alternative],
    ) -> Self {
        let n = t.n();
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    children[v].push(w);
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut dp = TreeDp { obj, labels, k, children, stages: vec![Vec::new(); n], root };
        let weight = |v: usize| int(p.multiplicities()[v] as usize);
        for &v in order.iter().rev() {
            let mut cur: Table = vec![vec![None; labels.len()]; k + 1];
            for (j, &a) in labels.iter().enumerate() {
                let x = r.value(p, v, a);
                cur[1][j] = Some(match obj {
                    Objective::Utilitarian => x * weight(v),
                    Objective::Egalitarian => x.clone(),
                });
            }
            let mut stages = vec![cur];
            for &c in &dp.children[v] {
                let next = dp.merge(stages.last().expect("initial stage"), c);
                stages.push(next);
            }
            dp.stages[v] = stages;
        }
        dp
    }

    fn full(&self, v: Vertex) -> &Table {
        self.stages[v].last().expect("initial stage")
    }

    /// Cheapest labelling of the subtree of `c` with `t` parts, any label.
    fn best(&self, c: Vertex, t: usize) -> Option<(usize, &BigRational)> {
        let mut best: Option<(usize, &BigRational)> = None;
        for (j, x) in self.full(c)[t].iter().enumerate() {
            if let Some(x) = x {
                if best.is_none_or(|(_, b)| x < b) {
                    best = Some((j, x));
                }
            }
        }
        best
    }

    // Each candidate (t1, t2, merged) is scanned in a fixed order and kept
    // only on strict improvement.
    fn candidates(&self, prev: &Table, c: Vertex, t: usize, j: usize) -> Option<(BigRational, usize, usize, bool)> {
        let mut best: Option<(BigRational, usize, usize, bool)> = None;
        let child = self.full(c);
        for t1 in 1..=t {
            let Some(x) = &prev[t1][j] else { continue };
            // Child's part joins v's part.
            let t2 = t + 1 - t1;
            if t2 <= self.k {
                if let Some(y) = &child[t2][j] {
                    let cost = combine(self.obj, x, y);
                    if best.as_ref().is_none_or(|b| cost < b.0) {
                        best = Some((cost, t1, t2, true));
                    }
                }
            }
            // Child's subtree is cut off.
            if t1 < t {
                if let Some((_, y)) = self.best(c, t - t1) {
                    let cost = combine(self.obj, x, y);
                    if best.as_ref().is_none_or(|b| cost < b.0) {
                        best = Some((cost, t1, t - t1, false));
                    }
                }
            }
        }
        best
    }

    fn merge(&self, prev: &Table, c: Vertex) -> Table {
        let mut next: Table = vec![vec![None; self.labels.len()]; self.k + 1];
        for t in 1..=self.k {
            for j in 0..self.labels.len() {
                next[t][j] = self.candidates(prev, c, t, j).map(|b| b.0);
            }
        }
        next
    }

    fn committee(&self) -> Vec<Alternative> {
        let mut best: Option<(&BigRational, usize, usize)> = None;
        for t in 1..=self.k {
            if let Some((j, x)) = self.best(self.root, t) {
                if best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, t, j));
                }
            }
        }
        let (_, t, j) = best.expect("one part always fits");
        let mut members = Vec::new();
        self.trace(self.root, self.stages[self.root].len() - 1, t, j, &mut members);
        members
    }

    fn trace(&self, v: Vertex, stage: usize, t: usize, j: usize, out: &mut Vec<Alternative>) {
        if stage == 0 {
            out.push(self.labels[j]);
            return;
        }
        let c = self.children[v][stage - 1];
        let (_, t1, t2, merged) =
            self.candidates(&self.stages[v][stage - 1], c, t, j).expect("traced entries are feasible");
        if merged {
            self.trace(c, self.stages[c].len() - 1, t2, j, out);
        } else {
            let (jc, _) = self.best(c, t2).expect("traced entries are feasible");
            self.trace(c, self.stages[c].len() - 1, t2, jc, out);
        }
        self.trace(v, stage - 1, t1, j, out);
    }
}

fn binomial(m: usize, k: usize) -> u128 {
    let k = k.min(m - k);
    (0..k).fold(1u128, |acc, i| acc * (m - i) as u128 / (i + 1) as u128)
}

/// Largest number of committees [`cc_brute_force`] will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

/// Exhaustive minimum over all `k`-member committees, each voter assigned
/// their favourite member. Ties keep the first committee in lexicographic
/// order of alternative ids.
pub fn cc_brute_force(
    p: &Profile,
    k: usize,
    r: &Misrepresentation,
    obj: Objective,
) -> Result<CcSolution, CcError> {
    check_k(p, k)?;
    r.validate(p)?;
    let m = p.m();
    let committees = binomial(m, k);
    if committees > BRUTE_FORCE_LIMIT {
        return Err(CcError::TooLarge { committees });
    }
    let mut members: Vec<Alternative> = (0..k).collect();
    let mut best: Option<(BigRational, Vec<Alternative>)> = None;
    loop {
        let assignment: Vec<Alternative> = p
            .orders()
            .iter()
            .map(|o| o.best_of(members.iter().copied()).expect("non-empty committee"))
            .collect();
        let phi = total_misrepresentation(p, r, &assignment, obj);
        if best.as_ref().is_none_or(|b| phi < b.0) {
            best = Some((phi, members.clone()));
        }
        // Next k-subset in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| members[i] < m - k + i) else { break };
        members[i] += 1;
        for j in i + 1..k {
            members[j] = members[j - 1] + 1;
        }
    }
    let (_, committee) = best.expect("at least one committee");
    Ok(solution(p, r, committee, obj))
}

/// The cut-defined voter sets containing `leaf`: every `V_ab` with `leaf`
/// in it, tagged with its lexicographically first pair, plus the full voter
/// set (tagged `None`). Sorted by size, so every set follows its subsets.
pub fn enumerate_cuts_with_leaf(
    p: &Profile,
    t: &Graph,
    leaf: Vertex,
) -> Result<Vec<(Option<(Alternative, Alternative)>, Vec<usize>)>, CcError> {
    check_tree(p, t)?;
    if leaf >= t.n() || (t.n() > 1 && t.degree(leaf) != 1) {
        return Err(CcError::NotALeaf(leaf));
    }
    let m = p.m();
    let n = p.n();
    let mut out: Vec<(Option<(Alternative, Alternative)>, Vec<usize>)> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b || !p.order(leaf).prefers(a, b) {
                continue;
            }
            let set = p.v_ab(a, b).expect("distinct alternatives");
            if set.len() < n && !out.iter().any(|(_, s)| *s == set) {
                out.push((Some((a, b)), set));
            }
        }
    }
    out.push((None, (0..n).collect()));
    out.sort_by(|x, y| x.1.len().cmp(&y.1.len()).then_with(|| x.1.cmp(&y.1)));
    Ok(out)
}

/// `set` and its complement both induce connected subgraphs of the tree
/// (the complement may be empty).
pub fn is_terminal_subtree(t: &Graph, set: &[Vertex]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut member = vec![false; t.n()];
    for &v in set {
        member[v] = true;
    }
    let rest: Vec<Vertex> = (0..t.n()).filter(|&v| !member[v]).collect();
    t.induced(set).is_ok() && (rest.is_empty() || t.induced(&rest).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn borda_values() {
        let p = Profile::from_letters(&["abcd"]).unwrap();
        let r = Misrepresentation::borda(4);
        assert_eq!(*r.value(&p, 0, 2), int(2));
        assert_eq!(*r.value(&p, 0, 0), int(0));
        assert_eq!(Misrepresentation::borda(1), Misrepresentation::Positional(vec![int(0)]));
    }

    #[test]
    fn tree_example_k1() {
        let (p, t) = fixtures::tree_profile();
        let r = Misrepresentation::borda(4);
        let s = cc_tree_dp(&p, &t, 1, &r, Objective::Utilitarian).unwrap();
        assert_eq!(s.committee, vec![0]);
        assert_eq!(s.phi, int(1));
        assert_eq!(cc_brute_force(&p, 1, &r, Objective::Utilitarian).unwrap().phi, int(1));
    }

    #[test]
    fn k_equal_m_costs_nothing() {
        let (p, t) = fixtures::tree_profile();
        for obj in [Objective::Utilitarian, Objective::Egalitarian] {
            let s = cc_tree_dp(&p, &t, 4, &Misrepresentation::borda(4), obj).unwrap();
            assert!(s.phi.is_zero());
        }
    }

    #[test]
    fn single_voter_gets_top() {
        let p = Profile::from_letters(&["cab"]).unwrap();
        let s = cc_tree_dp(&p, &Graph::single_vertex(), 1, &Misrepresentation::borda(3), Objective::Utilitarian)
            .unwrap();
        assert_eq!(s.committee, vec![2]);
        assert!(s.phi.is_zero());
    }

    #[test]
    fn condorcet_cycle_brute_force() {
        let p = fixtures::cycle_profile();
        let s = cc_brute_force(&p, 1, &Misrepresentation::borda(3), Objective::Utilitarian).unwrap();
        assert_eq!(s.phi, int(3));
    }

    #[test]
    fn path_counterexample_to_zero_base_case() {
        // Three orders on a path; two members cannot serve all three tops.
        let p = Profile::from_letters(&["abc", "bac", "cba"]).unwrap();
        let path = Graph::path(3);
        let r = Misrepresentation::borda(3);
        let dp = cc_tree_dp(&p, &path, 2, &r, Objective::Utilitarian).unwrap();
        assert_eq!(dp.phi, int(1));
        assert_eq!(cc_brute_force(&p, 2, &r, Objective::Utilitarian).unwrap().phi, int(1));
    }

    #[test]
    fn six_voter_path_egalitarian() {
        let p = Profile::from_letters(&["abcd", "bacd", "bcad", "bcda", "cbda", "cdba"]).unwrap();
        let path = Graph::path(6);
        let r = Misrepresentation::borda(4);
        for k in 1..=4 {
            let dp = cc_tree_dp(&p, &path, k, &r, Objective::Egalitarian).unwrap();
            let bf = cc_brute_force(&p, k, &r, Objective::Egalitarian).unwrap();
            assert_eq!(dp.phi, bf.phi, "k = {k}");
            assert!(dp.committee.len() <= k);
        }
    }

    #[test]
    fn multiplicities_weight_the_sum() {
        let p = Profile::with_multiplicities(
            vec!["a".into(), "b".into()],
            vec![crate::LinearOrder::new(vec![0, 1]).unwrap(), crate::LinearOrder::new(vec![1, 0]).unwrap()],
            vec![1, 3],
        )
        .unwrap();
        let s = cc_tree_dp(&p, &Graph::path(2), 1, &Misrepresentation::borda(2), Objective::Utilitarian).unwrap();
        assert_eq!(s.committee, vec![1]);
        assert_eq!(s.phi, int(1));
    }

    #[test]
    fn input_errors() {
        let (p, t) = fixtures::tree_profile();
        let r = Misrepresentation::borda(4);
        assert_eq!(
            cc_tree_dp(&p, &t, 0, &r, Objective::Utilitarian),
            Err(CcError::BadCommitteeSize { k: 0, m: 4 })
        );
        assert_eq!(cc_tree_dp(&p, &Graph::path(4), 1, &r, Objective::Utilitarian), Err(CcError::NotSingleCrossing));
        assert_eq!(cc_tree_dp(&p, &Graph::cycle(4), 1, &r, Objective::Utilitarian), Err(CcError::NotATree));
        assert!(matches!(
            cc_tree_dp(&p, &t, 1, &Misrepresentation::borda(3), Objective::Utilitarian),
            Err(CcError::MisrepAlternatives { .. })
        ));
    }

    #[test]
    fn misrepresentation_validation() {
        assert_eq!(Misrepresentation::positional(vec![int(1), int(2)]), Err(CcError::BadPositional));
        assert_eq!(Misrepresentation::positional(vec![int(0), int(2), int(1)]), Err(CcError::BadPositional));
        let p = Profile::from_letters(&["abc", "bca"]).unwrap();
        assert_eq!(Misrepresentation::approval(&p, &[vec![0], vec![2]]), Err(CcError::ApprovalNotPrefix(1)));
        assert!(Misrepresentation::approval(&p, &[vec![0, 1], vec![]]).is_ok());
        let rows = vec![vec![q(0, 1), q(1, 2), q(1, 2)], vec![q(0, 1), q(0, 1), q(1, 3)]];
        assert_eq!(Misrepresentation::table(&p, rows), Err(CcError::NotMonotone(1)));
    }

    #[test]
    fn approval_top_one() {
        let (p, t) = fixtures::path_profile();
        let r = Misrepresentation::approve_top(&p, 1);
        let s = cc_tree_dp(&p, &t, 1, &r, Objective::Utilitarian).unwrap();
        assert_eq!(s.phi, int(1));
        assert_eq!(s.committee, vec![1]);
    }

    #[test]
    fn cuts_on_a_path_are_prefixes() {
        let p = Profile::from_letters(&["abc", "bac", "bca"]).unwrap();
        let cuts = enumerate_cuts_with_leaf(&p, &Graph::path(3), 0).unwrap();
        let sets: Vec<Vec<usize>> = cuts.into_iter().map(|(_, s)| s).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        let unanimous = Profile::from_letters(&["abc", "abc"]).unwrap();
        assert_eq!(enumerate_cuts_with_leaf(&unanimous, &Graph::path(2), 1).unwrap().len(), 1);
        assert_eq!(enumerate_cuts_with_leaf(&p, &Graph::path(3), 1), Err(CcError::NotALeaf(1)));
    }

    #[test]
    fn terminal_subtrees() {
        let star = Graph::star(4);
        assert!(is_terminal_subtree(&star, &[1]));
        assert!(is_terminal_subtree(&star, &[0, 1, 2, 3]));
        assert!(!is_terminal_subtree(&star, &[0]));
        assert!(!is_terminal_subtree(&star, &[1, 2]));
    }
}
