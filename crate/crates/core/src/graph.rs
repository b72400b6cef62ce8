//! Canonical signed-graph model.
//!
//! Vertices are 1-based (`1..=p`). Edges are stored as `(u, v, sign)` with
//! `u < v`, sorted lexicographically and free of duplicates, so two equal
//! graphs have identical edge lists.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Parses `+1`, `1`, `+`, `-1`, `-` (and the unicode minus).
    pub fn parse(token: &str) -> Option<Sign> {
        match token {
            "+1" | "1" | "+" => Some(Sign::Positive),
            "-1" | "-" | "\u{2212}1" | "\u{2212}" => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Sign, String> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

/// Product of a sequence of signs; the empty product is positive.
pub fn sign_product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
    signs.into_iter().fold(Sign::Positive, |acc, s| acc * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedGraph {
    p: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Builds the canonical form of a signed graph from an arbitrary edge list.
    ///
    /// Endpoints may be given in either order. Duplicate unordered pairs are
    /// rejected whatever their signs.
    pub fn canonicalize<I>(p: usize, raw_edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        if p == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::new();
        for (a, b, sign) in raw_edges {
            for x in [a, b] {
                if x == 0 || x > p {
                    return Err(Error::VertexOutOfRange { vertex: x, p });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { u: a, v: b });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, sign });
        }
        edges.sort();
        if let Some(w) = edges
            .windows(2)
            .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
        {
            return Err(Error::DuplicateEdge {
                u: w[0].u,
                v: w[0].v,
            });
        }
        Ok(SignedGraph { p, edges })
    }

    /// Edgeless graph on `p` vertices.
    pub fn empty(p: usize) -> Result<SignedGraph> {
        SignedGraph::canonicalize(p, std::iter::empty())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn raw_edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v, e.sign))
    }

    /// Number of positive edges (`r`).
    pub fn positive_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_positive()).count()
    }

    pub fn negative_count(&self) -> usize {
        self.q() - self.positive_count()
    }

    /// True when no edge is negative (vacuously true for edgeless graphs).
    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_positive())
    }

    /// True when no edge is positive (vacuously true for edgeless graphs).
    pub fn is_all_negative(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_negative())
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.p).contains(&v)
    }

    /// Sign of the edge joining `a` and `b`, if they are adjacent.
    pub fn sign(&self, a: usize, b: usize) -> Option<Sign> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(u, v)))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.sign(a, b).is_some()
    }

    /// Neighbour lists indexed by `v - 1`, each sorted by neighbour id
    /// (which is also canonical edge order).
    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.p];
        for e in &self.edges {
            adj[e.u - 1].push((e.v, e.sign));
            adj[e.v - 1].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Applies a switching function: every edge sign becomes `ζ(u)σ(uv)ζ(v)`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Result<SignedGraph> {
        if zeta.len() != self.p {
            return Err(Error::LengthMismatch {
                expected: self.p,
                actual: zeta.len(),
            });
        }
        Ok(self.map_signs(|e| zeta.get(e.u) * e.sign * zeta.get(e.v)))
    }

    /// Flips every edge sign (`-Σ`).
    pub fn negated(&self) -> SignedGraph {
        self.map_signs(|e| e.sign.flip())
    }

    /// Same underlying graph with every sign replaced by `f(edge)`.
    pub fn map_signs<F: FnMut(&Edge) -> Sign>(&self, mut f: F) -> SignedGraph {
        SignedGraph {
            p: self.p,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: e.u,
                    v: e.v,
                    sign: f(e),
                })
                .collect(),
        }
    }

    /// True when both graphs have the same vertex count and edge pairs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.p == other.p
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| (a.u, a.v) == (b.u, b.v))
    }

    pub fn degrees(&self) -> DegreeReport {
        let mut out = vec![VertexDegree::default(); self.p];
        for e in &self.edges {
            for x in [e.u, e.v] {
                let d = &mut out[x - 1];
                d.d += 1;
                match e.sign {
                    Sign::Positive => {
                        d.d_plus += 1;
                        d.d_net += 1;
                    }
                    Sign::Negative => {
                        d.d_minus += 1;
                        d.d_net -= 1;
                    }
                }
            }
        }
        DegreeReport { vertices: out }
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.p];
        let mut comps = Vec::new();
        for start in 1..=self.p {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x - 1] {
                    if !seen[y - 1] {
                        seen[y - 1] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True when the underlying graph has no 3-cycle.
    pub fn is_triangle_free(&self) -> bool {
        let adj = self.adjacency_lists();
        self.edges.iter().all(|e| {
            // sorted neighbour lists: intersect by merge
            let (a, b) = (&adj[e.u - 1], &adj[e.v - 1]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].0.cmp(&b[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Removes vertex `v` and its edges; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<SignedGraph> {
        if !self.contains_vertex(v) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                p: self.p,
            });
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        SignedGraph::canonicalize(
            self.p - 1,
            self.edges
                .iter()
                .filter(|e| e.u != v && e.v != v)
                .map(|e| (shift(e.u), shift(e.v), e.sign)),
        )
    }

    /// Parses the text edge-list format: a `p q` header, then `q` lines of
    /// `u v s`. Lines starting with `#` and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `p q` header".into(),
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse {
                line: hline,
                message: format!("expected `p q`, got `{header}`"),
            });
        }
        let parse_count = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: hline,
                message: format!("invalid count `{tok}`"),
            })
        };
        let p = parse_count(nums[0])?;
        let q = parse_count(nums[1])?;
        let mut raw = Vec::with_capacity(q);
        for (line, body) in lines {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v s`, got `{body}`"),
                });
            }
            let vertex = |tok: &str| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex `{tok}`"),
                })
            };
            let sign = Sign::parse(toks[2]).ok_or_else(|| Error::Parse {
                line,
                message: format!("invalid sign `{}`", toks[2]),
            })?;
            raw.push((vertex(toks[0])?, vertex(toks[1])?, sign));
        }
        if raw.len() != q {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {q} edges, found {}", raw.len()),
            });
        }
        SignedGraph::canonicalize(p, raw)
    }

    /// Canonical text edge list, LF line endings.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.p, self.q())?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.u, e.v, e.sign)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedGraph> {
        SignedGraph::parse_edge_list(s)
    }
}

/// A `±1` value per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn new(values: Vec<Sign>) -> SwitchingFunction {
        SwitchingFunction(values)
    }

    /// Parses a comma- or whitespace-separated list such as `-1,+1,-1,-1`.
    pub fn parse(list: &str) -> Result<SwitchingFunction> {
        list.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                Sign::parse(t).ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("invalid sign `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(SwitchingFunction)
    }

    pub fn identity(p: usize) -> SwitchingFunction {
        SwitchingFunction(vec![Sign::Positive; p])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at 1-based vertex `v`.
    pub fn get(&self, v: usize) -> Sign {
        self.0[v - 1]
    }

    pub fn values(&self) -> &[Sign] {
        &self.0
    }

    /// Pointwise product.
    pub fn compose(&self, other: &SwitchingFunction) -> Result<SwitchingFunction> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(SwitchingFunction(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect(),
        ))
    }

    pub fn negated(&self) -> SwitchingFunction {
        SwitchingFunction(self.0.iter().map(|s| s.flip()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|s| s.is_positive())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexDegree {
    pub d: usize,
    pub d_plus: usize,
    pub d_minus: usize,
    pub d_net: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub vertices: Vec<VertexDegree>,
}

impl DegreeReport {
    /// Degrees of 1-based vertex `v`.
    pub fn get(&self, v: usize) -> VertexDegree {
        self.vertices[v - 1]
    }

    pub fn net_total(&self) -> i64 {
        self.vertices.iter().map(|d| d.d_net).sum()
    }
}

/// Instance families produced by [`generate`].
#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    /// Path `v1 v2 … vp`; `pattern[i]` is the sign of `v_{i+1} v_{i+2}`.
    Path {
        pattern: Vec<Sign>,
    },
    /// Cycle `v1 … vp v1`; `pattern[i]` is the sign of the `(i+1)`-th edge,
    /// the last one closing `vp v1`.
    Cycle {
        pattern: Vec<Sign>,
    },
    /// Star with centre `v1`; `pattern[i]` is the sign of `v1 v_{i+2}`.
    Star {
        pattern: Vec<Sign>,
    },
    Complete {
        p: usize,
        sign: Sign,
    },
    /// Erdős–Rényi `G(p, edge_prob)` resampled until connected; each edge is
    /// negative with probability `neg_prob`.
    Random {
        p: usize,
        edge_prob: f64,
        neg_prob: f64,
    },
}

/// Parses a sign pattern such as `-+++`.
pub fn parse_pattern(pattern: &str) -> Result<Vec<Sign>> {
    pattern
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Positive),
            '-' | '\u{2212}' => Ok(Sign::Negative),
            other => Err(Error::InvalidParams(format!(
                "sign pattern may only contain '+' and '-', got '{other}'"
            ))),
        })
        .collect()
}

const MAX_RANDOM_ATTEMPTS: usize = 100_000;

/// Builds an instance of `kind`. `seed` only affects [`GraphKind::Random`].
pub fn generate(kind: &GraphKind, seed: u64) -> Result<SignedGraph> {
    match kind {
        GraphKind::Path { pattern } => {
            let p = pattern.len() + 1;
            SignedGraph::canonicalize(
                p,
                pattern.iter().enumerate().map(|(i, &s)| (i + 1, i + 2, s)),
            )
        }
        GraphKind::Cycle { pattern } => {
            let p = pattern.len();
            if p < 3 {
                return Err(Error::InvalidParams(
                    "a cycle needs at least 3 vertices".into(),
                ));
            }
            SignedGraph::canonicalize(
                p,
                pattern
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| (i + 1, (i + 1) % p + 1, s)),
            )
        }
        GraphKind::Star { pattern } => {
            let p = pattern.len() + 1;
            SignedGraph::canonicalize(p, pattern.iter().enumerate().map(|(i, &s)| (1, i + 2, s)))
        }
        GraphKind::Complete { p, sign } => {
            let p = *p;
            SignedGraph::canonicalize(
                p,
                (1..=p).flat_map(|u| (u + 1..=p).map(move |v| (u, v, *sign))),
            )
        }
        GraphKind::Random {
            p,
            edge_prob,
            neg_prob,
        } => random_connected(*p, *edge_prob, *neg_prob, seed),
    }
}

fn random_connected(p: usize, edge_prob: f64, neg_prob: f64, seed: u64) -> Result<SignedGraph> {
    if p == 0 {
        return Err(Error::NoVertices);
    }
    for (name, x) in [("edge_prob", edge_prob), ("neg_prob", neg_prob)] {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::InvalidParams(format!(
                "{name} must lie in [0, 1], got {x}"
            )));
        }
    }
    if p > 1 && edge_prob == 0.0 {
        return Err(Error::InvalidParams(
            "edge_prob must be positive for a connected graph on more than one vertex".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RANDOM_ATTEMPTS {
        let mut raw = Vec::new();
        for u in 1..=p {
            for v in u + 1..=p {
                if rng.gen_bool(edge_prob) {
                    let sign = if rng.gen_bool(neg_prob) {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    };
                    raw.push((u, v, sign));
                }
            }
        }
        let g = SignedGraph::canonicalize(p, raw)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParams(format!(
        "no connected sample after {MAX_RANDOM_ATTEMPTS} attempts; raise edge_prob"
    )))
}
