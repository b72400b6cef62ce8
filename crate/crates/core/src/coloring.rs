//! Signed colorings over the color sets `M_n`.
//!
//! `M_{2k} = {±1, …, ±k}` and `M_{2k+1} = {0, ±1, …, ±k}`. A coloring is
//! proper when `c(u) ≠ σ(uv)·c(v)` on every edge; the chromatic number is
//! the least `n` admitting a proper coloring from `M_n`.
//!
//! The exact solver backtracks over vertices in descending-degree order
//! (ties by vertex id) and tries colors in the fixed order
//! `0, 1, -1, 2, -2, …`, raising `n` from 1. Negating every color maps
//! proper colorings to proper colorings, so while all assigned colors are 0
//! the negative colors are skipped; the first coloring found under the
//! fixed order always has a positive first nonzero entry, so the pruning
//! never changes the answer.

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::is_antibalanced;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::mycielskian::{mycielskian_without_root, MycielskianLabeling};

pub type Color = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColorSet {
    n: usize,
}

impl ColorSet {
    pub fn new(n: usize) -> Result<ColorSet> {
        if n == 0 {
            return Err(Error::InvalidParams("color sets start at M_1".into()));
        }
        Ok(ColorSet { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k = ⌊n/2⌋`, the largest color magnitude.
    pub fn k(&self) -> usize {
        self.n / 2
    }

    pub fn has_zero(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn contains(&self, c: Color) -> bool {
        if c == 0 {
            self.has_zero()
        } else {
            c.unsigned_abs() as usize <= self.k()
        }
    }

    /// Members in solver order: `0` (if present), then `1, -1, 2, -2, …`.
    pub fn members(&self) -> Vec<Color> {
        let mut out = Vec::with_capacity(self.n);
        if self.has_zero() {
            out.push(0);
        }
        for m in 1..=self.k() as Color {
            out.push(m);
            out.push(-m);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedColoring {
    pub n: usize,
    pub colors: Vec<Color>,
}

impl SignedColoring {
    pub fn new(n: usize, colors: Vec<Color>) -> SignedColoring {
        SignedColoring { n, colors }
    }

    /// Color of 1-based vertex `v`.
    pub fn color(&self, v: usize) -> Color {
        self.colors[v - 1]
    }

    pub fn color_set(&self) -> Result<ColorSet> {
        ColorSet::new(self.n)
    }

    fn check_members(&self) -> Result<ColorSet> {
        let set = self.color_set()?;
        match self.colors.iter().find(|&&c| !set.contains(c)) {
            Some(&color) => Err(Error::ColorOutOfSet { color, n: self.n }),
            None => Ok(set),
        }
    }
}

fn violates(cu: Color, sign: Sign, cv: Color) -> bool {
    cu == Color::from(sign.value()) * cv
}

pub fn is_proper(g: &SignedGraph, c: &SignedColoring) -> Result<bool> {
    if c.colors.len() != g.p() {
        return Err(Error::LengthMismatch {
            expected: g.p(),
            actual: c.colors.len(),
        });
    }
    c.check_members()?;
    Ok(!g
        .edges()
        .iter()
        .any(|e| violates(c.color(e.u), e.sign, c.color(e.v))))
}

/// Number of colors of `M_n` the (proper) coloring leaves unused.
pub fn deficiency(g: &SignedGraph, c: &SignedColoring) -> Result<usize> {
    if !is_proper(g, c)? {
        return Err(Error::NotProper);
    }
    let mut used = c.colors.clone();
    used.sort_unstable();
    used.dedup();
    Ok(c.n - used.len())
}

struct Search<'a> {
    order: Vec<usize>,
    /// For each position in `order`, the earlier-ordered neighbours and signs.
    back: Vec<Vec<(usize, Sign)>>,
    palette: &'a [Color],
    colors: Vec<Color>,
    nodes: u64,
    budget: Option<u64>,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn new(g: &SignedGraph, order: &[usize], palette: &'a [Color], budget: Option<u64>) -> Self {
        let mut pos = vec![0usize; g.p()];
        for (i, &v) in order.iter().enumerate() {
            pos[v - 1] = i;
        }
        let adj = g.adjacency_lists();
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                adj[v - 1]
                    .iter()
                    .filter(|&&(w, _)| pos[w - 1] < i)
                    .map(|&(w, s)| (pos[w - 1], s))
                    .collect()
            })
            .collect();
        Search {
            order: order.to_vec(),
            back,
            palette,
            colors: vec![0; order.len()],
            nodes: 0,
            budget,
        }
    }

    fn fits(&self, i: usize, c: Color) -> bool {
        self.back[i]
            .iter()
            .all(|&(j, s)| !violates(c, s, self.colors[j]))
    }

    /// Depth-first search from position `i`; `all_zero` tracks whether every
    /// earlier position holds color 0.
    fn run(&mut self, i: usize, all_zero: bool) -> Outcome {
        if i == self.order.len() {
            return Outcome::Found;
        }
        for idx in 0..self.palette.len() {
            let c = self.palette[idx];
            if all_zero && c < 0 {
                continue;
            }
            if let Some(b) = self.budget {
                if self.nodes >= b {
                    return Outcome::OutOfBudget;
                }
            }
            self.nodes += 1;
            if !self.fits(i, c) {
                continue;
            }
            self.colors[i] = c;
            match self.run(i + 1, all_zero && c == 0) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    fn coloring(&self, n: usize) -> SignedColoring {
        let mut colors = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            colors[v - 1] = self.colors[i];
        }
        SignedColoring::new(n, colors)
    }
}

/// Vertices by descending degree, ties broken by ascending id.
pub fn solver_order(g: &SignedGraph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (1..=g.p()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg.get(v).d));
    order
}

/// Exact chromatic number with a witness coloring.
pub fn chromatic_number(g: &SignedGraph) -> (usize, SignedColoring) {
    chromatic_number_budgeted(g, None).expect("unbudgeted search always finishes")
}

/// Like [`chromatic_number`] but stops after `budget` search nodes (summed
/// over all `n`), reporting the `n` under examination as a lower bound.
pub fn chromatic_number_budgeted(
    g: &SignedGraph,
    budget: Option<u64>,
) -> Result<(usize, SignedColoring)> {
    let order = solver_order(g);
    let mut spent = 0u64;
    for n in 1.. {
        let palette = ColorSet { n }.members();
        let mut search = Search::new(g, &order, &palette, budget.map(|b| b - spent));
        let outcome = search.run(0, true);
        spent += search.nodes;
        match outcome {
            Outcome::Found => return Ok((n, search.coloring(n))),
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Err(Error::BudgetExhausted {
                    budget: budget.unwrap_or_default(),
                    lower_bound: n,
                })
            }
        }
    }
    unreachable!("M_n grows without bound")
}

/// Parallel variant: for each `n`, the first vertex's color choices are
/// searched concurrently and the earliest successful choice in solver order
/// wins, so the result is identical to [`chromatic_number`].
pub fn chromatic_number_parallel(g: &SignedGraph) -> (usize, SignedColoring) {
    let order = solver_order(g);
    for n in 1.. {
        let palette = ColorSet { n }.members();
        // first vertex: all-zero prefix is empty, so negatives are pruned
        let firsts: Vec<Color> = palette.iter().copied().filter(|&c| c >= 0).collect();
        let found = firsts
            .par_iter()
            .map(|&c| {
                let mut search = Search::new(g, &order, &palette, None);
                search.colors[0] = c;
                match search.run(1, c == 0) {
                    Outcome::Found => Some(search.coloring(n)),
                    _ => None,
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        if let Some(c) = found {
            return (n, c);
        }
    }
    unreachable!("M_n grows without bound")
}

/// Extends a proper coloring of `Σ` over `M_n` to a proper coloring of
/// `M(Σ)` over `M_{n+1}`.
///
/// Even `n = 2k`: twins copy their originals and the root gets 0.
/// Odd `n = 2k+1`: every vertex colored 0 (an independent set) is recolored
/// `k+1` together with its twin, other twins copy, and the root gets
/// `-(k+1)`.
pub fn extend_coloring_to_mycielskian(
    g: &SignedGraph,
    c: &SignedColoring,
) -> Result<SignedColoring> {
    if !is_proper(g, c)? {
        return Err(Error::NotProper);
    }
    let lab = MycielskianLabeling::new(g.p());
    let n = c.n;
    let k = (n / 2) as Color;
    let mut colors = vec![0; lab.order()];
    let (base, root): (Vec<Color>, Color) = if n.is_multiple_of(2) {
        (c.colors.clone(), 0)
    } else {
        (
            c.colors
                .iter()
                .map(|&x| if x == 0 { k + 1 } else { x })
                .collect(),
            -(k + 1),
        )
    };
    for i in 1..=g.p() {
        colors[lab.original(i) - 1] = base[i - 1];
        colors[lab.twin(i) - 1] = base[i - 1];
    }
    colors[lab.root() - 1] = root;
    Ok(SignedColoring::new(n + 1, colors))
}

/// Chromatic number of `M(Σ)` with the root deleted.
pub fn restricted_mycielskian_chromatic(g: &SignedGraph) -> usize {
    chromatic_number(&mycielskian_without_root(g)).0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntibalanceCheck {
    pub chromatic_number: usize,
    pub chromatic_at_most_two: bool,
    pub antibalanced: bool,
}

impl AntibalanceCheck {
    pub fn agrees(&self) -> bool {
        self.chromatic_at_most_two == self.antibalanced
    }
}

/// Compares `χ(Σ) ≤ 2` with the switching-based antibalance test.
pub fn antibalance_chromatic_check(g: &SignedGraph) -> AntibalanceCheck {
    let (n, _) = chromatic_number(g);
    AntibalanceCheck {
        chromatic_number: n,
        chromatic_at_most_two: n <= 2,
        antibalanced: is_antibalanced(g).0,
    }
}
