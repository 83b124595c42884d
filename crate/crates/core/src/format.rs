//! Text and JSON formats for graphs, profiles and misrepresentation inputs.
//!
//! Graph text: a line `n`, then one edge `u v` per line (0-based ids).
//! Profile text: a line `n m`, then one voter per line, best alternative
//! first, optionally prefixed by a multiplicity such as `3×`. Alternative
//! names are numbered in order of first appearance. In every text format
//! `#` starts a comment and blank lines are skipped.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cc::Misrepresentation;
use crate::graph::Graph;
use crate::order::{Alternative, LinearOrder};
use crate::profile::Profile;

/// Largest vertex count accepted by the graph parsers.
pub const MAX_VERTICES: usize = 100_000;
/// Largest alternative count accepted by the profile parsers.
pub const MAX_ALTERNATIVES: usize = 1_000;

/// A parse failure. `line` is 1-based; 0 refers to the input as a whole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Non-empty lines with comments stripped, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::at(line, format!("expected {what}, found {token:?}")))
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| ParseError::at(0, "empty graph file"))?;
    if header.len() != 1 {
        return Err(ParseError::at(line, "expected the vertex count alone"));
    }
    let n = number(line, header[0], "a vertex count")?;
    if n == 0 || n > MAX_VERTICES {
        return Err(ParseError::at(line, format!("vertex count must lie in 1..={MAX_VERTICES}")));
    }
    let mut edges = Vec::new();
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(ParseError::at(line, "expected an edge `u v`"));
        }
        let u = number(line, tokens[0], "a vertex id")?;
        let v = number(line, tokens[1], "a vertex id")?;
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::at(line, format!("vertex {x} out of range 0..{n}")));
            }
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| ParseError::at(0, e.to_string()))
}

/// Canonical text: edges as `u v` with `u < v`, in sorted order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn multiplicity_prefix(token: &str) -> Option<&str> {
    token
        .strip_suffix('×')
        .or_else(|| token.strip_suffix('x'))
        .or_else(|| token.strip_suffix('*'))
        .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
}

/// The header count `n` may be either the number of voter lines or the total
/// multiplicity.
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::at(0, "empty profile file"))?;
    if header.len() != 2 {
        return Err(ParseError::at(hline, "expected the header `n m`"));
    }
    let n = number(hline, header[0], "a voter count")?;
    let m = number(hline, header[1], "an alternative count")?;
    if m == 0 || m > MAX_ALTERNATIVES {
        return Err(ParseError::at(hline, format!("alternative count must lie in 1..={MAX_ALTERNATIVES}")));
    }
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, Alternative> = HashMap::new();
    let mut orders = Vec::new();
    let mut mult: Vec<u64> = Vec::new();
    for (line, tokens) in lines {
        let (k, ranked) = match tokens.len() {
            len if len == m + 1 => {
                let digits = multiplicity_prefix(tokens[0])
                    .ok_or_else(|| ParseError::at(line, format!("expected a multiplicity like `3×`, found {:?}", tokens[0])))?;
                let k: u64 = digits
                    .parse()
                    .map_err(|_| ParseError::at(line, "multiplicity too large"))?;
                if k == 0 {
                    return Err(ParseError::at(line, "multiplicity must be positive"));
                }
                (k, &tokens[1..])
            }
            len if len == m => (1, &tokens[..]),
            len => return Err(ParseError::at(line, format!("expected {m} alternatives, found {len}"))),
        };
        let mut order = Vec::with_capacity(m);
        for &name in ranked {
            let id = match index.get(name) {
                Some(&id) => id,
                None if names.len() < m => {
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                    names.len() - 1
                }
                None => return Err(ParseError::at(line, format!("unknown alternative {name:?}"))),
            };
            order.push(id);
        }
        let order = LinearOrder::new(order)
            .map_err(|_| ParseError::at(line, "an alternative is repeated"))?;
        orders.push(order);
        mult.push(k);
    }
    if orders.is_empty() {
        return Err(ParseError::at(0, "profile has no voters"));
    }
    let total = mult.iter().try_fold(0u64, |acc, &k| acc.checked_add(k));
    if n != orders.len() && total != Some(n as u64) {
        return Err(ParseError::at(
            hline,
            format!("header announces {n} voters, found {} lines", orders.len()),
        ));
    }
    Profile::with_multiplicities(names, orders, mult).map_err(|e| ParseError::at(0, e.to_string()))
}

/// Writes `n m` with `n` the number of voter lines; multiplicities above one
/// are written as a `k×` prefix.
pub fn write_profile(p: &Profile) -> String {
    let mut out = format!("{} {}\n", p.n(), p.m());
    for (r, &k) in p.orders().iter().zip(p.multiplicities()) {
        if k != 1 {
            out.push_str(&format!("{k}× "));
        }
        out.push_str(&p.render(r));
        out.push('\n');
    }
    out
}

fn rational(line: usize, token: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::at(line, format!("expected an integer or p/q, found {token:?}"));
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(ParseError::at(line, "zero denominator"));
    }
    Ok(BigRational::new(p, q))
}

/// A misrepresentation table: a header row naming the alternatives (in any
/// order), then one row of values (integers or `p/q`) per voter line of `p`.
pub fn parse_misrep_table(text: &str, p: &Profile) -> Result<Misrepresentation, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::at(0, "empty table"))?;
    if header.len() != p.m() {
        return Err(ParseError::at(hline, format!("expected {} alternative names", p.m())));
    }
    let mut columns = Vec::with_capacity(p.m());
    for name in &header {
        let a = p
            .alternative(name)
            .ok_or_else(|| ParseError::at(hline, format!("unknown alternative {name:?}")))?;
        if columns.contains(&a) {
            return Err(ParseError::at(hline, format!("alternative {name:?} repeated")));
        }
        columns.push(a);
    }
    let mut rows = Vec::with_capacity(p.n());
    for (line, tokens) in lines {
        if rows.len() == p.n() {
            return Err(ParseError::at(line, format!("more than {} rows", p.n())));
        }
        if tokens.len() != p.m() {
            return Err(ParseError::at(line, format!("expected {} values", p.m())));
        }
        let mut row = vec![BigRational::zero(); p.m()];
        for (&a, token) in columns.iter().zip(&tokens) {
            row[a] = rational(line, token)?;
        }
        rows.push(row);
    }
    if rows.len() != p.n() {
        return Err(ParseError::at(0, format!("expected {} rows, found {}", p.n(), rows.len())));
    }
    Misrepresentation::table(p, rows).map_err(|e| ParseError::at(0, e.to_string()))
}

/// Approved alternatives, one line per voter line of `p`; `-` marks an
/// empty set.
pub fn parse_approval_sets(text: &str, p: &Profile) -> Result<Vec<Vec<Alternative>>, ParseError> {
    let mut sets = Vec::with_capacity(p.n());
    for (line, tokens) in content_lines(text) {
        if sets.len() == p.n() {
            return Err(ParseError::at(line, format!("more than {} lines", p.n())));
        }
        let mut set = Vec::new();
        if tokens != ["-"] {
            for name in tokens {
                let a = p
                    .alternative(name)
                    .ok_or_else(|| ParseError::at(line, format!("unknown alternative {name:?}")))?;
                if set.contains(&a) {
                    return Err(ParseError::at(line, format!("alternative {name:?} repeated")));
                }
                set.push(a);
            }
        }
        sets.push(set);
    }
    if sets.len() != p.n() {
        return Err(ParseError::at(0, format!("expected {} lines, found {}", p.n(), sets.len())));
    }
    Ok(sets)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, ParseError> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(ParseError::at(0, format!("vertex count must lie in 1..={MAX_VERTICES}")));
        }
        if let Some([u, v]) = self.edges.iter().find(|[u, v]| *u >= self.n || *v >= self.n) {
            return Err(ParseError::at(0, format!("edge {u}-{v} out of range 0..{}", self.n)));
        }
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| ParseError::at(0, e.to_string()))
    }
}

fn default_multiplicity() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoterJson {
    pub order: Vec<String>,
    #[serde(default = "default_multiplicity")]
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileJson {
    pub alternatives: Vec<String>,
    pub voters: Vec<VoterJson>,
}

impl From<&Profile> for ProfileJson {
    fn from(p: &Profile) -> Self {
        let voters = p
            .orders()
            .iter()
            .zip(p.multiplicities())
            .map(|(r, &k)| VoterJson {
                order: r.as_slice().iter().map(|&a| p.names()[a].clone()).collect(),
                multiplicity: k,
            })
            .collect();
        ProfileJson { alternatives: p.names().to_vec(), voters }
    }
}

impl ProfileJson {
    pub fn to_profile(&self) -> Result<Profile, ParseError> {
        let m = self.alternatives.len();
        if m == 0 || m > MAX_ALTERNATIVES {
            return Err(ParseError::at(0, format!("alternative count must lie in 1..={MAX_ALTERNATIVES}")));
        }
        let mut index = HashMap::new();
        for (i, name) in self.alternatives.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(ParseError::at(0, format!("duplicate alternative name {name:?}")));
            }
        }
        let mut orders = Vec::with_capacity(self.voters.len());
        for (v, voter) in self.voters.iter().enumerate() {
            let ids = voter
                .order
                .iter()
                .map(|name| {
                    index
                        .get(name.as_str())
                        .copied()
                        .ok_or_else(|| ParseError::at(0, format!("voter {v}: unknown alternative {name:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if ids.len() != m {
                return Err(ParseError::at(0, format!("voter {v} ranks {} of {m} alternatives", ids.len())));
            }
            orders.push(
                LinearOrder::new(ids)
                    .map_err(|_| ParseError::at(0, format!("voter {v} repeats an alternative")))?,
            );
        }
        let mult = self.voters.iter().map(|v| v.multiplicity).collect();
        Profile::with_multiplicities(self.alternatives.clone(), orders, mult)
            .map_err(|e| ParseError::at(0, e.to_string()))
    }
}

fn json_error(e: serde_json::Error) -> ParseError {
    ParseError::at(e.line(), e.to_string())
}

pub fn graph_from_json(text: &str) -> Result<Graph, ParseError> {
    serde_json::from_str::<GraphJson>(text).map_err(json_error)?.to_graph()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graphs serialize")
}

pub fn profile_from_json(text: &str) -> Result<Profile, ParseError> {
    serde_json::from_str::<ProfileJson>(text).map_err(json_error)?.to_profile()
}

pub fn profile_to_json(p: &Profile) -> String {
    serde_json::to_string(&ProfileJson::from(p)).expect("profiles serialize")
}

/// Graph text or JSON, told apart by a leading `{`.
pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    if is_json(text) {
        graph_from_json(text)
    } else {
        parse_graph(text)
    }
}

/// Profile text or JSON, told apart by a leading `{`.
pub fn read_profile(text: &str) -> Result<Profile, ParseError> {
    if is_json(text) {
        profile_from_json(text)
    } else {
        parse_profile(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn graph_round_trip() {
        let (_, cube) = fixtures::cube_profile();
        let text = write_graph(&cube);
        assert_eq!(parse_graph(&text).unwrap(), cube);
        assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
        assert_eq!(read_graph(&graph_to_json(&cube)).unwrap(), cube);
    }

    #[test]
    fn graph_text_details() {
        let g = parse_graph("# a path\n3\n\n2 1 # reversed\n0 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(parse_graph("1\n").unwrap().n(), 1);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(parse_graph("3\n0 1\n1 x\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("3\n0 1\n1 3\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("2 2\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("3\n0 1\n").unwrap_err().line, 0);
        assert!(parse_graph("").is_err());
        assert!(parse_graph("0\n").is_err());
    }

    #[test]
    fn profile_text() {
        let p = parse_profile("4 4\nc a b d\n2× a b c d\nb a c d\n").unwrap();
        assert_eq!(p.names(), &["c", "a", "b", "d"]);
        assert_eq!(p.multiplicities(), &[1, 2, 1]);
        assert_eq!(p.order(1).as_slice(), &[1, 2, 0, 3]);
        // n may count lines instead of weight
        assert!(parse_profile("3 4\nc a b d\n2x a b c d\nb a c d\n").is_ok());
        assert_eq!(parse_profile(&write_profile(&p)).unwrap(), p);
    }

    #[test]
    fn profile_errors() {
        assert_eq!(parse_profile("2 3\na b c\na b b\n").unwrap_err().line, 3);
        assert_eq!(parse_profile("2 3\na b c\na b d\n").unwrap_err().line, 3);
        assert_eq!(parse_profile("2 3\na b c\n0× a b c\n").unwrap_err().line, 3);
        assert_eq!(parse_profile("2 3\na b c\nq a b c\n").unwrap_err().line, 3);
        assert_eq!(parse_profile("5 3\na b c\nb a c\n").unwrap_err().line, 1);
        assert_eq!(parse_profile("2 3\na b\n").unwrap_err().line, 2);
    }

    #[test]
    fn profile_json_round_trip() {
        let (p, _) = fixtures::cube_profile();
        let json = profile_to_json(&p);
        assert_eq!(read_profile(&json).unwrap(), p);
        let q = read_profile(r#"{"alternatives":["x","y"],"voters":[{"order":["y","x"],"multiplicity":3},{"order":["x","y"]}]}"#)
            .unwrap();
        assert_eq!(q.multiplicities(), &[3, 1]);
        assert!(read_profile(r#"{"alternatives":["x","y"],"voters":[{"order":["y","y"]}]}"#).is_err());
        assert!(read_profile(r#"{"alternatives":["x"],"voters":[],"extra":1}"#).is_err());
    }

    #[test]
    fn misrep_table() {
        let p = parse_profile("2 3\na b c\nb c a\n").unwrap();
        let r = parse_misrep_table("c b a\n2 1 0\n1/2 0 3/2\n", &p).unwrap();
        assert_eq!(*r.value(&p, 0, 2), BigRational::from_integer(2.into()));
        assert_eq!(*r.value(&p, 1, 2), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_misrep_table("c b a\n2 1 0\n1/0 0 1\n", &p).unwrap_err().line, 3);
        assert_eq!(parse_misrep_table("c b z\n", &p).unwrap_err().line, 1);
        assert!(parse_misrep_table("a b c\n0 1 2\n", &p).is_err());
        assert!(parse_misrep_table("a b c\n0 1 2\n2 1 0\n", &p).is_err());
    }

    #[test]
    fn approval_sets() {
        let p = parse_profile("2 3\na b c\nb c a\n").unwrap();
        assert_eq!(parse_approval_sets("a b\n-\n", &p).unwrap(), vec![vec![0, 1], vec![]]);
        assert_eq!(parse_approval_sets("a z\n-\n", &p).unwrap_err().line, 1);
        assert!(parse_approval_sets("a\n", &p).is_err());
    }
}
