//! Corpora and brute-force oracles shared by the integration tests.
//!
//! Nothing here calls the solver, certifier or matrix code under test; the
//! oracles enumerate directly from the edge list.

#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;

use signed_mycielski::graph::{generate, GraphKind};
use signed_mycielski::mycielskian::{mycielskian, tower};
use signed_mycielski::{Sign, SignedGraph, SwitchingFunction};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

pub fn load(name: &str) -> SignedGraph {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture exists");
    SignedGraph::parse_edge_list(&text).expect("fixture parses")
}

/// All `2^m` sign vectors of length `m`.
pub fn sign_patterns(m: usize) -> Vec<Vec<Sign>> {
    (0..1u32 << m)
        .map(|mask| {
            (0..m)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect()
        })
        .collect()
}

pub fn switching_from_mask(p: usize, mask: u64) -> SwitchingFunction {
    SwitchingFunction::new(
        (0..p)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect(),
    )
}

/// Every signed cycle `C_n`, `n` in `lens`.
pub fn cycles(lens: std::ops::RangeInclusive<usize>) -> Vec<SignedGraph> {
    lens.flat_map(|n| {
        sign_patterns(n)
            .into_iter()
            .map(|pattern| generate(&GraphKind::Cycle { pattern }, 0).unwrap())
    })
    .collect()
}

/// Every signed path `P_n` (`n` vertices), `n` in `lens`.
pub fn paths(lens: std::ops::RangeInclusive<usize>) -> Vec<SignedGraph> {
    lens.flat_map(|n| {
        sign_patterns(n - 1)
            .into_iter()
            .map(|pattern| generate(&GraphKind::Path { pattern }, 0).unwrap())
    })
    .collect()
}

/// Every signed star with `n` vertices, `n` in `lens`.
pub fn stars(lens: std::ops::RangeInclusive<usize>) -> Vec<SignedGraph> {
    lens.flat_map(|n| {
        sign_patterns(n - 1)
            .into_iter()
            .map(|pattern| generate(&GraphKind::Star { pattern }, 0).unwrap())
    })
    .collect()
}

/// `count` random connected graphs with `p` cycling through `ps`.
pub fn random_graphs(
    count: usize,
    ps: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<SignedGraph> {
    let ps: Vec<usize> = ps.collect();
    (0..count)
        .map(|i| {
            let kind = GraphKind::Random {
                p: ps[i % ps.len()],
                edge_prob: 0.45,
                neg_prob: 0.4,
            };
            generate(&kind, seed.wrapping_add(i as u64)).unwrap()
        })
        .collect()
}

/// Random connected graphs switched to a balanced signature: an all-positive
/// instance switched by a random `ζ`.
pub fn random_balanced(
    count: usize,
    ps: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<SignedGraph> {
    random_graphs(count, ps, seed)
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let positive = g.map_signs(|_| Sign::Positive);
            let mask = (seed ^ 0x9e37_79b9).wrapping_mul(i as u64 + 1) >> 7;
            positive.switch(&switching_from_mask(g.p(), mask)).unwrap()
        })
        .collect()
}

/// Reference graphs: `C_4^-` and `M(C_4^-)`, the balanced
/// 4-cycle and its balanced Mycielskian, the tower `Σ_1..Σ_4`, the balanced
/// triangle and its Mycielskian.
pub fn reference_graphs() -> Vec<SignedGraph> {
    let c4 = load("c4_minus.txt");
    let tri = load("balanced_triangle.txt");
    let mut out = vec![
        mycielskian(&c4).0,
        c4,
        load("balanced_square.txt"),
        load("balanced_square_mb.txt"),
        mycielskian(&tri).0,
        tri,
    ];
    out.extend(tower(4));
    out
}

fn sign_value(s: Sign) -> i64 {
    match s {
        Sign::Positive => 1,
        Sign::Negative => -1,
    }
}

fn edge_sign(g: &SignedGraph, a: usize, b: usize) -> Option<Sign> {
    g.edges()
        .iter()
        .find(|e| (e.u, e.v) == (a.min(b), a.max(b)))
        .map(|e| e.sign)
}

fn neighbours(g: &SignedGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.p() + 1];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    adj
}

/// Product of edge signs along consecutive vertices, closing the loop when
/// `closed`.
pub fn walk_sign(g: &SignedGraph, vs: &[usize], closed: bool) -> i64 {
    let mut prod = 1;
    let n = vs.len();
    let steps = if closed { n } else { n - 1 };
    for i in 0..steps {
        let s = edge_sign(g, vs[i], vs[(i + 1) % n]).expect("consecutive vertices adjacent");
        prod *= sign_value(s);
    }
    prod
}

/// Every simple cycle (length ≥ 3), each listed once per orientation,
/// starting at its smallest vertex.
pub fn simple_cycles(g: &SignedGraph) -> Vec<Vec<usize>> {
    fn extend(
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 {
                out.push(path.clone());
            } else if w > start && !used[w] {
                used[w] = true;
                path.push(w);
                extend(adj, start, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let adj = neighbours(g);
    let mut out = Vec::new();
    for s in 1..=g.p() {
        let mut used = vec![false; g.p() + 1];
        used[s] = true;
        extend(&adj, s, &mut vec![s], &mut used, &mut out);
    }
    out
}

/// Every simple path from `a` to `b`.
pub fn simple_paths(g: &SignedGraph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn extend(
        adj: &[Vec<usize>],
        b: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if last == b {
            out.push(path.clone());
            return;
        }
        for &w in &adj[last] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                extend(adj, b, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let adj = neighbours(g);
    let mut used = vec![false; g.p() + 1];
    used[a] = true;
    let mut out = Vec::new();
    extend(&adj, b, &mut vec![a], &mut used, &mut out);
    out
}

pub fn all_cycles_positive(g: &SignedGraph) -> bool {
    simple_cycles(g).iter().all(|c| walk_sign(g, c, true) == 1)
}

/// Members of `M_n`.
pub fn color_set(n: usize) -> Vec<i64> {
    let k = (n / 2) as i64;
    let mut out: Vec<i64> = (1..=k).flat_map(|m| [m, -m]).collect();
    if n % 2 == 1 {
        out.push(0);
    }
    out
}

pub fn is_proper_oracle(g: &SignedGraph, colors: &[i64]) -> bool {
    g.edges()
        .iter()
        .all(|e| colors[e.u - 1] != sign_value(e.sign) * colors[e.v - 1])
}

/// Whether some assignment from `M_n` is proper, by plain enumeration of all
/// `|M_n|^p` assignments.
pub fn colorable_oracle(g: &SignedGraph, n: usize) -> bool {
    let set = color_set(n);
    let p = g.p();
    let mut idx = vec![0usize; p];
    loop {
        let colors: Vec<i64> = idx.iter().map(|&i| set[i]).collect();
        if is_proper_oracle(g, &colors) {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == p {
                return false;
            }
            idx[pos] += 1;
            if idx[pos] < set.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub fn chromatic_oracle(g: &SignedGraph) -> usize {
    (1..).find(|&n| colorable_oracle(g, n)).unwrap()
}

/// Classical chromatic number of the underlying graph by enumeration.
pub fn classical_chromatic_oracle(g: &SignedGraph) -> usize {
    let p = g.p();
    (1..=p.max(1))
        .find(|&k| {
            let mut c = vec![0usize; p];
            loop {
                if g.edges().iter().all(|e| c[e.u - 1] != c[e.v - 1]) {
                    return true;
                }
                let mut pos = 0;
                loop {
                    if pos == p {
                        return false;
                    }
                    c[pos] += 1;
                    if c[pos] < k {
                        break;
                    }
                    c[pos] = 0;
                    pos += 1;
                }
            }
        })
        .unwrap()
}

/// Degree triple `(d, d⁺, d⁻)` of every vertex, counted from the edge list.
pub fn degree_oracle(g: &SignedGraph) -> Vec<(i64, i64, i64)> {
    let mut out = vec![(0, 0, 0); g.p()];
    for e in g.edges() {
        for x in [e.u, e.v] {
            out[x - 1].0 += 1;
            match e.sign {
                Sign::Positive => out[x - 1].1 += 1,
                Sign::Negative => out[x - 1].2 += 1,
            }
        }
    }
    out
}

/// Arbitrary (not necessarily connected) signed graph on `1..=max_p`
/// vertices.
pub fn signed_graph(max_p: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_p).prop_flat_map(|p| {
        let pairs: Vec<(usize, usize)> = (1..=p)
            .flat_map(|u| (u + 1..=p).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        (
            Just(p),
            Just(pairs),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(any::<bool>(), m),
        )
            .prop_map(|(p, pairs, keep, neg)| {
                let raw = pairs
                    .into_iter()
                    .zip(keep.into_iter().zip(neg))
                    .filter(|(_, (k, _))| *k)
                    .map(|((u, v), (_, n))| {
                        (v, u, if n { Sign::Negative } else { Sign::Positive })
                    });
                SignedGraph::canonicalize(p, raw).unwrap()
            })
    })
}

pub fn graph_and_switching(
    max_p: usize,
) -> impl Strategy<Value = (SignedGraph, SwitchingFunction)> {
    signed_graph(max_p).prop_flat_map(|g| {
        let p = g.p();
        (Just(g), switching(p))
    })
}

pub fn switching(p: usize) -> impl Strategy<Value = SwitchingFunction> {
    proptest::collection::vec(any::<bool>(), p).prop_map(|bits| {
        SwitchingFunction::new(
            bits.into_iter()
                .map(|b| if b { Sign::Negative } else { Sign::Positive })
                .collect(),
        )
    })
}
