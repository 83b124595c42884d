//! Preference profiles, majority relations and representative voters.

use std::collections::HashMap;

use thiserror::Error;

use crate::order::{Alternative, LinearOrder, OrderError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("profile has no voters")]
    Empty,
    #[error("voter {voter} ranks {found} alternatives, expected {expected}")]
    WrongLength { voter: usize, expected: usize, found: usize },
    #[error("{0} names given for {1} alternatives")]
    NameCount(usize, usize),
    #[error("duplicate alternative name {0:?}")]
    DuplicateName(String),
    #[error("voter {0} has multiplicity zero")]
    ZeroMultiplicity(usize),
    #[error("alternative {0} out of range")]
    AlternativeOutOfRange(Alternative),
    #[error("a pair of equal alternatives ({0}, {0}) has no majority direction")]
    EqualAlternatives(Alternative),
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A sequence of linear orders indexed by voter, each with a positive
/// multiplicity, over a shared set of named alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    names: Vec<String>,
    orders: Vec<LinearOrder>,
    multiplicities: Vec<u64>,
}

impl Profile {
    pub fn new(names: Vec<String>, orders: Vec<LinearOrder>) -> Result<Self, ProfileError> {
        let k = vec![1; orders.len()];
        Self::with_multiplicities(names, orders, k)
    }

    pub fn with_multiplicities(
        names: Vec<String>,
        orders: Vec<LinearOrder>,
        multiplicities: Vec<u64>,
    ) -> Result<Self, ProfileError> {
        if orders.is_empty() {
            return Err(ProfileError::Empty);
        }
        let m = names.len();
        for (voter, r) in orders.iter().enumerate() {
            if r.m() != m {
                return Err(ProfileError::WrongLength { voter, expected: m, found: r.m() });
            }
        }
        if multiplicities.len() != orders.len() {
            return Err(ProfileError::NameCount(multiplicities.len(), orders.len()));
        }
        if let Some(v) = multiplicities.iter().position(|&k| k == 0) {
            return Err(ProfileError::ZeroMultiplicity(v));
        }
        let mut seen = HashMap::new();
        for name in &names {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(ProfileError::DuplicateName(name.clone()));
            }
        }
        Ok(Profile { names, orders, multiplicities })
    }

    /// A profile with default names `a`, `b`, ... (or `a0`, `a1`, ... past 26).
    pub fn unnamed(orders: Vec<LinearOrder>) -> Result<Self, ProfileError> {
        let m = orders.first().map_or(0, LinearOrder::m);
        Self::new(default_names(m), orders)
    }

    /// Parses orders written as strings of single-letter alternatives, e.g.
    /// `["acbd", "abcd"]`. Letters are numbered alphabetically.
    pub fn from_letters(rows: &[&str]) -> Result<Self, ProfileError> {
        let mut letters: Vec<char> = rows.iter().flat_map(|r| r.chars()).collect();
        letters.sort_unstable();
        letters.dedup();
        let orders = rows
            .iter()
            .map(|r| {
                let order = r
                    .chars()
                    .map(|c| letters.binary_search(&c).expect("letter collected above"))
                    .collect();
                LinearOrder::new(order)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters.iter().map(|c| c.to_string()).collect(), orders)
    }

    /// Number of voters (entries); multiplicities are weights on entries.
    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alternative(&self, name: &str) -> Option<Alternative> {
        self.names.iter().position(|n| n == name)
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn order(&self, voter: usize) -> &LinearOrder {
        &self.orders[voter]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn total_weight(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    pub fn is_reduced(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.orders.iter().all(|r| seen.insert(r))
    }

    /// Renders an order with alternative names.
    pub fn render(&self, order: &LinearOrder) -> String {
        let names: Vec<&str> = order.as_slice().iter().map(|&a| self.names[a].as_str()).collect();
        names.join(" ")
    }

    /// `V_ab`: voters strictly preferring `a` to `b`.
    pub fn v_ab(&self, a: Alternative, b: Alternative) -> Result<Vec<usize>, ProfileError> {
        self.check_pair(a, b)?;
        Ok((0..self.n()).filter(|&i| self.orders[i].prefers(a, b)).collect())
    }

    pub(crate) fn check_pair(&self, a: Alternative, b: Alternative) -> Result<(), ProfileError> {
        for x in [a, b] {
            if x >= self.m() {
                return Err(ProfileError::AlternativeOutOfRange(x));
            }
        }
        if a == b {
            return Err(ProfileError::EqualAlternatives(a));
        }
        Ok(())
    }

    pub fn majority_relation(&self) -> MajorityRelation {
        let m = self.m();
        let mut count = vec![0u64; m * m];
        for (r, &k) in self.orders.iter().zip(&self.multiplicities) {
            let order = r.as_slice();
            for (i, &a) in order.iter().enumerate() {
                for &b in &order[i + 1..] {
                    count[a * m + b] += k;
                }
            }
        }
        MajorityRelation::from_counts(m, &count)
    }

    /// A voter whose order coincides with the strict majority relation.
    pub fn representative_voter(&self) -> Option<usize> {
        let mr = self.majority_relation();
        let m = self.m();
        (0..self.n()).find(|&i| {
            let r = &self.orders[i];
            (0..m).all(|a| (0..m).all(|b| a == b || r.prefers(a, b) == mr.strict(a, b)))
        })
    }

    /// Merges identical orders, summing multiplicities. Returns the reduced
    /// profile (classes in first-appearance order) and the voter -> class map.
    pub fn reduce(&self) -> (Profile, Vec<usize>) {
        let mut index: HashMap<&LinearOrder, usize> = HashMap::new();
        let mut orders = Vec::new();
        let mut mult = Vec::new();
        let mut class = Vec::with_capacity(self.n());
        for (r, &k) in self.orders.iter().zip(&self.multiplicities) {
            let c = *index.entry(r).or_insert_with(|| {
                orders.push(r.clone());
                mult.push(0);
                orders.len() - 1
            });
            mult[c] += k;
            class.push(c);
        }
        let reduced = Profile { names: self.names.clone(), orders, multiplicities: mult };
        (reduced, class)
    }

    /// One voter of multiplicity one per unit of weight, in entry order.
    /// Also returns the entry each expanded voter came from.
    pub fn expand(&self) -> (Profile, Vec<usize>) {
        let mut orders = Vec::new();
        let mut source = Vec::new();
        for (i, (r, &k)) in self.orders.iter().zip(&self.multiplicities).enumerate() {
            for _ in 0..k {
                orders.push(r.clone());
                source.push(i);
            }
        }
        let multiplicities = vec![1; orders.len()];
        (Profile { names: self.names.clone(), orders, multiplicities }, source)
    }

    /// The subprofile of the given voters, in that order.
    pub fn subprofile(&self, voters: &[usize]) -> Profile {
        Profile {
            names: self.names.clone(),
            orders: voters.iter().map(|&v| self.orders[v].clone()).collect(),
            multiplicities: voters.iter().map(|&v| self.multiplicities[v]).collect(),
        }
    }

    /// Distinct orders in first-appearance order.
    pub fn domain(&self) -> Vec<LinearOrder> {
        self.reduce().0.orders
    }
}

pub(crate) fn default_names(m: usize) -> Vec<String> {
    (0..m)
        .map(|i| {
            if m <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("a{i}")
            }
        })
        .collect()
}

/// Pairwise majority: `a ⪰ b` iff at least as many voters put `a` above `b`
/// as the reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityRelation {
    m: usize,
    weak: Vec<bool>,
    strict: Vec<bool>,
}

impl MajorityRelation {
    /// `count[a * m + b]` is the weight of voters preferring `a` to `b`.
    pub fn from_counts(m: usize, count: &[u64]) -> Self {
        let mut weak = vec![false; m * m];
        let mut strict = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    weak[a * m + b] = count[a * m + b] >= count[b * m + a];
                    strict[a * m + b] = count[a * m + b] > count[b * m + a];
                }
            }
        }
        MajorityRelation { m, weak, strict }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn weak(&self, a: Alternative, b: Alternative) -> bool {
        self.weak[a * self.m + b]
    }

    pub fn strict(&self, a: Alternative, b: Alternative) -> bool {
        self.strict[a * self.m + b]
    }

    pub fn is_strict_transitive(&self) -> bool {
        let m = self.m;
        for a in 0..m {
            for b in 0..m {
                if !self.strict(a, b) {
                    continue;
                }
                for c in 0..m {
                    if self.strict(b, c) && !self.strict(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The strict relation as a ranking, when it is a linear order.
    pub fn as_linear_order(&self) -> Option<LinearOrder> {
        let m = self.m;
        let mut wins: Vec<(usize, Alternative)> = (0..m)
            .map(|a| ((0..m).filter(|&b| self.strict(a, b)).count(), a))
            .collect();
        wins.sort_unstable_by(|x, y| y.cmp(x));
        let order = LinearOrder::new(wins.iter().map(|w| w.1).collect()).ok()?;
        let linear = (0..m).all(|a| (0..m).all(|b| a == b || order.prefers(a, b) == self.strict(a, b)));
        linear.then_some(order)
    }
}
