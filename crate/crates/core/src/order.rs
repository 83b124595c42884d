use std::fmt;

use thiserror::Error;

pub type Alternative = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("orders over different numbers of alternatives ({0} vs {1})")]
    MismatchedAlternatives(usize, usize),
}

/// A strict linear order over the alternatives `0..m`.
///
/// Stored both as the ranking from best to worst and as its inverse, the
/// zero-based rank of every alternative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    order: Vec<Alternative>,
    rank: Vec<usize>,
}

impl LinearOrder {
    /// `order` lists the alternatives from best to worst.
    pub fn new(order: Vec<Alternative>) -> Result<Self, OrderError> {
        let m = order.len();
        let mut rank = vec![usize::MAX; m];
        for (i, &a) in order.iter().enumerate() {
            if a >= m || rank[a] != usize::MAX {
                return Err(OrderError::NotPermutation(m));
            }
            rank[a] = i;
        }
        Ok(LinearOrder { order, rank })
    }

    pub fn identity(m: usize) -> Self {
        LinearOrder { order: (0..m).collect(), rank: (0..m).collect() }
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    /// Alternatives from best to worst.
    pub fn as_slice(&self) -> &[Alternative] {
        &self.order
    }

    /// One-based position: the top alternative has position 1.
    pub fn position(&self, a: Alternative) -> usize {
        self.rank[a] + 1
    }

    #[inline]
    pub fn prefers(&self, a: Alternative, b: Alternative) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn top(&self) -> Alternative {
        self.order[0]
    }

    /// The best alternative of `among` in this order.
    pub fn best_of<I: IntoIterator<Item = Alternative>>(&self, among: I) -> Option<Alternative> {
        among.into_iter().min_by_key(|&a| self.rank[a])
    }

    pub fn relation(&self) -> PairSet {
        PairSet::of(self)
    }

    /// Rebuilds the order with the alternative `inserted` placed directly
    /// below (`below == true`) or directly above `anchor`. `inserted` must be
    /// the next fresh id `m`.
    pub(crate) fn with_clone(&self, anchor: Alternative, below: bool) -> LinearOrder {
        let inserted = self.m();
        let mut order = Vec::with_capacity(inserted + 1);
        for &a in &self.order {
            if a == anchor && !below {
                order.push(inserted);
            }
            order.push(a);
            if a == anchor && below {
                order.push(inserted);
            }
        }
        LinearOrder::new(order).expect("cloning keeps a permutation")
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// The relation of a linear order as a bitset over ordered pairs: bit
/// `a * m + b` is set iff `a` is preferred to `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    m: usize,
    words: Vec<u64>,
}

impl PairSet {
    pub fn empty(m: usize) -> Self {
        PairSet { m, words: vec![0; (m * m).div_ceil(64).max(1)] }
    }

    pub fn of(order: &LinearOrder) -> Self {
        let m = order.m();
        let mut set = PairSet::empty(m);
        for (i, &a) in order.order.iter().enumerate() {
            for &b in &order.order[i + 1..] {
                set.insert(a, b);
            }
        }
        set
    }

    pub fn insert(&mut self, a: Alternative, b: Alternative) {
        let bit = a * self.m + b;
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    pub fn contains(&self, a: Alternative, b: Alternative) -> bool {
        let bit = a * self.m + b;
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Ordered pairs `(a, b)` in the set, lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = (Alternative, Alternative)> + '_ {
        let m = self.m;
        (0..m * m)
            .filter(move |bit| self.words[bit / 64] >> (bit % 64) & 1 == 1)
            .map(move |bit| (bit / m, bit % m))
    }

    /// Pairs of `self` that `other` reverses: the pairs separated by an edge
    /// from an order with relation `self` to one with relation `other`.
    pub fn separated_from(&self, other: &PairSet) -> PairSet {
        PairSet {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    /// `middle` agrees with every pair on which `self` and `other` agree.
    pub fn between(&self, middle: &PairSet, other: &PairSet) -> bool {
        self.words
            .iter()
            .zip(&middle.words)
            .zip(&other.words)
            .all(|((p, r), q)| p & q & !r == 0)
    }
}

/// `rj` agrees with every pair on which `ri` and `rk` agree.
pub fn is_order_between(
    ri: &LinearOrder,
    rj: &LinearOrder,
    rk: &LinearOrder,
) -> Result<bool, OrderError> {
    let m = ri.m();
    for other in [rj, rk] {
        if other.m() != m {
            return Err(OrderError::MismatchedAlternatives(m, other.m()));
        }
    }
    for a in 0..m {
        for b in 0..m {
            if a != b && ri.prefers(a, b) && rk.prefers(a, b) && !rj.prefers(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Members of `domain` between `p` and `q`, in domain order.
pub fn interval(domain: &[LinearOrder], p: &LinearOrder, q: &LinearOrder) -> Vec<LinearOrder> {
    let (rp, rq) = (p.relation(), q.relation());
    domain
        .iter()
        .filter(|r| r.m() == p.m() && rp.between(&r.relation(), &rq))
        .cloned()
        .collect()
}
