//! Balance and antibalance certificates.
//!
//! [`certify_balance`] runs a BFS potential assignment: the smallest vertex of
//! each component gets `ζ = +1` and a tree edge `(u, v, s)` sets
//! `ζ(v) = ζ(u)·s`. A non-tree edge with `ζ(u)·s·ζ(v) = -1` closes a negative
//! cycle, which is returned as the witness. Every answer can be re-checked
//! with [`verify_certificate`].

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{sign_product, Sign, SignedGraph, SwitchingFunction};

/// Harary bipartition: label 1 or 2 per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Bipartition(Vec<u8>);

impl Bipartition {
    pub fn new(labels: Vec<u8>) -> Result<Bipartition> {
        if let Some(&bad) = labels.iter().find(|&&l| l != 1 && l != 2) {
            return Err(Error::InvalidParams(format!(
                "bipartition labels must be 1 or 2, got {bad}"
            )));
        }
        Ok(Bipartition(labels))
    }

    /// Part 1 is `{v : ζ(v) = +1}`, part 2 the rest.
    pub fn from_switching(zeta: &SwitchingFunction) -> Bipartition {
        Bipartition(
            zeta.values()
                .iter()
                .map(|s| if s.is_positive() { 1 } else { 2 })
                .collect(),
        )
    }

    /// Part label of 1-based vertex `v`.
    pub fn part(&self, v: usize) -> u8 {
        self.0[v - 1]
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices of part 1 and part 2.
    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &l) in self.0.iter().enumerate() {
            if l == 1 {
                a.push(i + 1);
            } else {
                b.push(i + 1);
            }
        }
        (a, b)
    }

    /// Positive edges stay inside a part, negative edges cross.
    pub fn is_harary_for(&self, g: &SignedGraph) -> bool {
        self.len() == g.p()
            && g.edges().iter().all(|e| {
                let crosses = self.part(e.u) != self.part(e.v);
                crosses == e.sign.is_negative()
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceCertificate {
    Balanced {
        bipartition: Bipartition,
        to_all_positive: SwitchingFunction,
    },
    Unbalanced {
        /// A simple negative cycle, starting at its smallest vertex.
        witness: Vec<usize>,
    },
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced { .. })
    }

    pub fn switching(&self) -> Option<&SwitchingFunction> {
        match self {
            BalanceCertificate::Balanced {
                to_all_positive, ..
            } => Some(to_all_positive),
            BalanceCertificate::Unbalanced { .. } => None,
        }
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        match self {
            BalanceCertificate::Balanced { bipartition, .. } => Some(bipartition),
            BalanceCertificate::Unbalanced { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            BalanceCertificate::Balanced { .. } => None,
            BalanceCertificate::Unbalanced { witness } => Some(witness),
        }
    }

    pub fn report(&self) -> BalanceReport {
        BalanceReport {
            balanced: self.is_balanced(),
            bipartition: self.bipartition().map(|b| b.labels().to_vec()),
            switching: self.switching().map(|z| z.values().to_vec()),
            witness_cycle: self.witness().map(<[usize]>::to_vec),
        }
    }
}

/// Flat JSON form of a [`BalanceCertificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub bipartition: Option<Vec<u8>>,
    pub switching: Option<Vec<Sign>>,
    pub witness_cycle: Option<Vec<usize>>,
}

/// Product of the edge signs along a closed walk `c[0] c[1] … c[k-1] c[0]`,
/// which must be a simple cycle of `g`.
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Result<Sign> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!(
            "a cycle needs at least 3 vertices, got {}",
            cycle.len()
        )));
    }
    let mut seen = vec![false; g.p()];
    for &v in cycle {
        if !g.contains_vertex(v) {
            return Err(Error::NotACycle(format!("vertex {v} is not in the graph")));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::NotACycle(format!("vertex {v} repeats")));
        }
    }
    let n = cycle.len();
    (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            g.sign(a, b)
                .ok_or_else(|| Error::NotACycle(format!("{a} and {b} are not adjacent")))
        })
        .collect::<Result<Vec<_>>>()
        .map(sign_product)
}

/// Product of the edge signs along a path `v0 v1 … vk` (vertices distinct).
pub fn path_sign(g: &SignedGraph, path: &[usize]) -> Result<Sign> {
    path.windows(2)
        .map(|w| {
            g.sign(w[0], w[1])
                .ok_or_else(|| Error::NotACycle(format!("{} and {} are not adjacent", w[0], w[1])))
        })
        .collect::<Result<Vec<_>>>()
        .map(sign_product)
}

pub fn certify_balance(g: &SignedGraph) -> BalanceCertificate {
    let p = g.p();
    let adj = g.adjacency_lists();
    let mut zeta: Vec<Option<Sign>> = vec![None; p];
    let mut parent = vec![0usize; p];
    let mut depth = vec![0usize; p];

    for root in 1..=p {
        if zeta[root - 1].is_some() {
            continue;
        }
        zeta[root - 1] = Some(Sign::Positive);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let zu = zeta[u - 1].unwrap();
            for &(v, s) in &adj[u - 1] {
                match zeta[v - 1] {
                    None => {
                        zeta[v - 1] = Some(zu * s);
                        parent[v - 1] = u;
                        depth[v - 1] = depth[u - 1] + 1;
                        queue.push_back(v);
                    }
                    Some(zv) if (zu * s * zv).is_negative() => {
                        let witness = close_cycle(u, v, &parent, &depth);
                        return BalanceCertificate::Unbalanced {
                            witness: normalize_cycle(witness),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let to_all_positive = SwitchingFunction::new(zeta.into_iter().map(Option::unwrap).collect());
    BalanceCertificate::Balanced {
        bipartition: Bipartition::from_switching(&to_all_positive),
        to_all_positive,
    }
}

/// Tree path `u → lca → v` in a BFS forest; with the edge `v u` it forms a
/// simple cycle.
fn close_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a - 1] > depth[b - 1] {
        a = parent[a - 1];
        up_a.push(a);
    }
    while depth[b - 1] > depth[a - 1] {
        b = parent[b - 1];
        up_b.push(b);
    }
    while a != b {
        a = parent[a - 1];
        b = parent[b - 1];
        up_a.push(a);
        up_b.push(b);
    }
    // both end at the lca
    up_b.pop();
    up_a.extend(up_b.into_iter().rev());
    up_a
}

/// Rotates a cycle to start at its smallest vertex and orients it towards
/// the smaller of that vertex's two cycle neighbours.
fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if n > 2 && cycle[n - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// `-Σ`: every sign flipped.
pub fn negate(g: &SignedGraph) -> SignedGraph {
    g.negated()
}

/// Whether `g` is antibalanced, with a switching function taking `g` to
/// all-negative when it is.
pub fn is_antibalanced(g: &SignedGraph) -> (bool, Option<SwitchingFunction>) {
    match certify_balance(&negate(g)) {
        BalanceCertificate::Balanced {
            to_all_positive, ..
        } => (true, Some(to_all_positive)),
        BalanceCertificate::Unbalanced { .. } => (false, None),
    }
}

/// Finds `ζ` with `switch(a, ζ) = b`, if the two signatures on the same
/// underlying graph are switching equivalent.
pub fn switching_between(a: &SignedGraph, b: &SignedGraph) -> Result<Option<SwitchingFunction>> {
    if !a.same_underlying(b) {
        return Err(Error::UnderlyingMismatch);
    }
    // ζ(u)σa(uv)ζ(v) = σb(uv) ⟺ ζ switches the product signature to all-positive
    let product = SignedGraph::canonicalize(
        a.p(),
        a.edges()
            .iter()
            .zip(b.edges())
            .map(|(x, y)| (x.u, x.v, x.sign * y.sign)),
    )?;
    Ok(certify_balance(&product).switching().cloned())
}

/// Re-checks a certificate against `g` without trusting how it was produced.
pub fn verify_certificate(g: &SignedGraph, cert: &BalanceCertificate) -> bool {
    match cert {
        BalanceCertificate::Balanced {
            bipartition,
            to_all_positive,
        } => {
            to_all_positive.len() == g.p()
                && g.switch(to_all_positive)
                    .map(|s| s.is_all_positive())
                    .unwrap_or(false)
                && bipartition.is_harary_for(g)
        }
        BalanceCertificate::Unbalanced { witness } => {
            matches!(cycle_sign(g, witness), Ok(Sign::Negative))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};
    use crate::testgraphs::*;

    #[test]
    fn cycle_sign_examples() {
        assert_eq!(cycle_sign(&c4_minus(), &[1, 2, 3, 4]), Ok(N));
        assert_eq!(cycle_sign(&all_positive_c4(), &[1, 2, 3, 4]), Ok(P));
    }

    #[test]
    fn cycle_sign_rejects_non_cycles() {
        let g = c4_minus();
        assert!(matches!(
            cycle_sign(&g, &[1, 3, 2, 4]),
            Err(Error::NotACycle(_))
        ));
        assert!(matches!(cycle_sign(&g, &[1, 2]), Err(Error::NotACycle(_))));
        assert!(matches!(
            cycle_sign(&g, &[1, 2, 1, 4]),
            Err(Error::NotACycle(_))
        ));
        assert!(matches!(
            cycle_sign(&g, &[1, 2, 9]),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn c4_minus_is_unbalanced_with_whole_cycle_witness() {
        let cert = certify_balance(&c4_minus());
        assert_eq!(cert.witness(), Some(&[1, 2, 3, 4][..]));
        assert!(verify_certificate(&c4_minus(), &cert));
    }

    #[test]
    fn balanced_square_bipartition() {
        let g = balanced_square();
        let cert = certify_balance(&g);
        assert!(cert.is_balanced());
        let (a, b) = cert.bipartition().unwrap().parts();
        // {v2} | {v1, v3, v4}, part 1 holding the smallest vertex
        assert_eq!(a, vec![1, 3, 4]);
        assert_eq!(b, vec![2]);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn all_positive_gives_identity() {
        let cert = certify_balance(&complete(5, P));
        assert!(cert.switching().unwrap().is_identity());
        let (a, b) = cert.bipartition().unwrap().parts();
        assert_eq!((a.len(), b.len()), (5, 0));
    }

    #[test]
    fn disconnected_per_component() {
        let g = SignedGraph::canonicalize(5, [(1, 2, N), (3, 4, N), (4, 5, N)]).unwrap();
        let cert = certify_balance(&g);
        let z = cert.switching().unwrap();
        // ζ = +1 at each component's smallest vertex
        assert_eq!(z.get(1), P);
        assert_eq!(z.get(3), P);
        assert!(verify_certificate(&g, &cert));
        let bad =
            SignedGraph::canonicalize(6, [(1, 2, P), (4, 5, N), (5, 6, P), (4, 6, P)]).unwrap();
        let cert = certify_balance(&bad);
        assert_eq!(cert.witness(), Some(&[4, 5, 6][..]));
    }

    #[test]
    fn antibalance_examples() {
        let (ab, z) = is_antibalanced(&cycle("----"));
        assert!(ab);
        assert!(z.unwrap().is_identity());
        assert!(!is_antibalanced(&c4_minus()).0);
        // -C4⁻ has three negative edges, so its cycle is negative
        assert_eq!(cycle_sign(&negate(&c4_minus()), &[1, 2, 3, 4]), Ok(N));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(negate(&all_positive_c4()), cycle("----"));
        assert_eq!(negate(&negate(&c4_minus())), c4_minus());
        assert_eq!(negate(&c4_minus()).negative_count(), 3);
    }

    #[test]
    fn switching_between_finds_switch() {
        let g = balanced_square();
        let z = SwitchingFunction::new(vec![N, P, N, N]);
        let h = g.switch(&z).unwrap();
        let found = switching_between(&g, &h).unwrap().unwrap();
        assert_eq!(g.switch(&found).unwrap(), h);
        assert_eq!(switching_between(&g, &c4_minus()).unwrap(), None);
        assert_eq!(switching_between(&g, &k1()), Err(Error::UnderlyingMismatch));
    }

    #[test]
    fn bipartition_labels_validated() {
        assert!(Bipartition::new(vec![1, 2, 3]).is_err());
        assert!(Bipartition::new(vec![1, 2, 2]).is_ok());
    }

    #[test]
    fn report_fields() {
        let json = certify_balance(&c4_minus()).report();
        assert!(!json.balanced);
        assert_eq!(json.witness_cycle, Some(vec![1, 2, 3, 4]));
        assert!(json.switching.is_none());
    }
}
