//! Mycielskian constructions on signed graphs.
//!
//! For `Σ` on vertices `1..=p` the Mycielskian lives on `1..=2p+1`: original
//! vertex `i` keeps index `i`, its twin `i'` is `p + i`, and the root `w` is
//! `2p + 1`. Every edge `(u, v, s)` of `Σ` yields `(u, v, s)`, `(u, v', s)`
//! and `(u', v, s)`; each twin is joined to the root. In `M(Σ)` the root
//! edges are positive; [`resign_root`] and [`balanced_mycielskian`] replace
//! them.

use serde::Serialize;

use crate::balance::{certify_balance, BalanceCertificate};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchingFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MycielskiVertex {
    Original(usize),
    Twin(usize),
    Root,
}

/// Index scheme of a Mycielskian built from a graph on `p` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MycielskianLabeling {
    p: usize,
}

impl MycielskianLabeling {
    pub fn new(p: usize) -> MycielskianLabeling {
        MycielskianLabeling { p }
    }

    /// Vertex count of the base graph.
    pub fn base_order(&self) -> usize {
        self.p
    }

    pub fn order(&self) -> usize {
        2 * self.p + 1
    }

    pub fn original(&self, i: usize) -> usize {
        i
    }

    pub fn twin(&self, i: usize) -> usize {
        self.p + i
    }

    pub fn root(&self) -> usize {
        2 * self.p + 1
    }

    pub fn index(&self, vertex: MycielskiVertex) -> usize {
        match vertex {
            MycielskiVertex::Original(i) => self.original(i),
            MycielskiVertex::Twin(i) => self.twin(i),
            MycielskiVertex::Root => self.root(),
        }
    }

    pub fn role(&self, index: usize) -> Option<MycielskiVertex> {
        match index {
            0 => None,
            i if i <= self.p => Some(MycielskiVertex::Original(i)),
            i if i <= 2 * self.p => Some(MycielskiVertex::Twin(i - self.p)),
            i if i == 2 * self.p + 1 => Some(MycielskiVertex::Root),
            _ => None,
        }
    }

    /// JSON sidecar form: `original`, `twin` and `root` index arrays.
    pub fn sidecar(&self) -> LabelingSidecar {
        LabelingSidecar {
            original: (1..=self.p).collect(),
            twin: (1..=self.p).map(|i| self.twin(i)).collect(),
            root: vec![self.root()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelingSidecar {
    pub original: Vec<usize>,
    pub twin: Vec<usize>,
    pub root: Vec<usize>,
}

/// Signs for the root edges `v_i' w`, entry `i - 1` for twin `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RootSignature(Vec<Sign>);

impl RootSignature {
    pub fn new(signs: Vec<Sign>) -> RootSignature {
        RootSignature(signs)
    }

    pub fn all_positive(p: usize) -> RootSignature {
        RootSignature(vec![Sign::Positive; p])
    }

    pub fn from_switching(zeta: &SwitchingFunction) -> RootSignature {
        RootSignature(zeta.values().to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign of the root edge at twin `i` (1-based).
    pub fn get(&self, i: usize) -> Sign {
        self.0[i - 1]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }
}

fn mycielski_edges(g: &SignedGraph, rs: &RootSignature) -> SignedGraph {
    let lab = MycielskianLabeling::new(g.p());
    let mut raw = Vec::with_capacity(3 * g.q() + g.p());
    for e in g.edges() {
        raw.push((e.u, e.v, e.sign));
        raw.push((e.u, lab.twin(e.v), e.sign));
        raw.push((lab.twin(e.u), e.v, e.sign));
    }
    for i in 1..=g.p() {
        raw.push((lab.twin(i), lab.root(), rs.get(i)));
    }
    SignedGraph::canonicalize(lab.order(), raw).expect("Mycielskian edges are simple")
}

/// `M(Σ)` with all root edges positive.
pub fn mycielskian(g: &SignedGraph) -> (SignedGraph, MycielskianLabeling) {
    (
        mycielski_edges(g, &RootSignature::all_positive(g.p())),
        MycielskianLabeling::new(g.p()),
    )
}

/// `M(Σ)` with the root vertex (and its edges) deleted.
pub fn mycielskian_without_root(g: &SignedGraph) -> SignedGraph {
    let (m, lab) = mycielskian(g);
    m.delete_vertex(lab.root()).expect("root is a vertex")
}

/// Outcome of checking "`M(Σ)` balanced ⟺ `Σ` all-positive" on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MycielskianBalanceDiagnostic {
    pub mycielskian_balanced: bool,
    pub all_positive: bool,
    /// Negative 5-cycle `(v_i, v_j, v_i', w, v_j')` through the first
    /// negative edge `v_i v_j`, when there is one.
    pub five_cycle: Option<Vec<usize>>,
    /// Witness produced by the balance certifier on `M(Σ)`.
    pub certifier_witness: Option<Vec<usize>>,
}

impl MycielskianBalanceDiagnostic {
    pub fn agrees(&self) -> bool {
        self.mycielskian_balanced == self.all_positive
    }
}

pub fn mycielskian_balanced_iff_all_positive(g: &SignedGraph) -> MycielskianBalanceDiagnostic {
    let (m, lab) = mycielskian(g);
    let cert = certify_balance(&m);
    let five_cycle = g.edges().iter().find(|e| e.sign.is_negative()).map(|e| {
        vec![
            lab.original(e.u),
            lab.original(e.v),
            lab.twin(e.u),
            lab.root(),
            lab.twin(e.v),
        ]
    });
    MycielskianBalanceDiagnostic {
        mycielskian_balanced: cert.is_balanced(),
        all_positive: g.is_all_positive(),
        five_cycle,
        certifier_witness: cert.witness().map(<[usize]>::to_vec),
    }
}

/// Checks that `gm` has the shape of a Mycielskian under `lab`: the root is
/// adjacent to exactly the twins, and the twins are pairwise non-adjacent.
fn validate_shape(gm: &SignedGraph, lab: &MycielskianLabeling) -> Result<()> {
    if gm.p() != lab.order() {
        return Err(Error::NotAMycielskian(format!(
            "expected {} vertices, found {}",
            lab.order(),
            gm.p()
        )));
    }
    let adj = gm.adjacency_lists();
    let root_nbrs: Vec<usize> = adj[lab.root() - 1].iter().map(|&(v, _)| v).collect();
    let twins: Vec<usize> = (1..=lab.base_order()).map(|i| lab.twin(i)).collect();
    if root_nbrs != twins {
        return Err(Error::NotAMycielskian(
            "root must be adjacent to exactly the twins".into(),
        ));
    }
    for e in gm.edges() {
        if matches!(lab.role(e.u), Some(MycielskiVertex::Twin(_)))
            && matches!(lab.role(e.v), Some(MycielskiVertex::Twin(_)))
        {
            return Err(Error::NotAMycielskian(format!(
                "twins {} and {} are adjacent",
                e.u, e.v
            )));
        }
    }
    Ok(())
}

/// Replaces the root-edge signs of a Mycielskian by `rs`; all other signs
/// are kept.
pub fn resign_root(
    gm: &SignedGraph,
    lab: &MycielskianLabeling,
    rs: &RootSignature,
) -> Result<SignedGraph> {
    validate_shape(gm, lab)?;
    if rs.len() != lab.base_order() {
        return Err(Error::LengthMismatch {
            expected: lab.base_order(),
            actual: rs.len(),
        });
    }
    let root = lab.root();
    Ok(gm.map_signs(|e| {
        if e.v == root {
            rs.get(e.u - lab.base_order())
        } else {
            e.sign
        }
    }))
}

/// True iff `rs(i)·rs(j) = σ(v_i v_j)` on every edge of `g`.
pub fn check_root_relation(g: &SignedGraph, rs: &RootSignature) -> bool {
    rs.len() == g.p()
        && g.edges()
            .iter()
            .all(|e| rs.get(e.u) * rs.get(e.v) == e.sign)
}

/// Balanced Mycielskian `M_B(Σ)` together with `ζ_B`, using the switching
/// function chosen by [`certify_balance`].
pub fn balanced_mycielskian(g: &SignedGraph) -> Result<(SignedGraph, SwitchingFunction)> {
    match certify_balance(g) {
        BalanceCertificate::Balanced {
            to_all_positive, ..
        } => balanced_mycielskian_with(g, &to_all_positive),
        BalanceCertificate::Unbalanced { .. } => Err(Error::NotBalanced),
    }
}

/// `M_B(Σ)` for a caller-chosen `ζ`, which must switch `g` to all-positive.
///
/// Root edges get `σ_B(v_i' w) = ζ(v_i)`; the returned
/// `ζ_B = (ζ, ζ, +1)` switches the result to all-positive.
pub fn balanced_mycielskian_with(
    g: &SignedGraph,
    zeta: &SwitchingFunction,
) -> Result<(SignedGraph, SwitchingFunction)> {
    if !g.switch(zeta)?.is_all_positive() {
        return Err(Error::InvalidSwitching);
    }
    let mb = mycielski_edges(g, &RootSignature::from_switching(zeta));
    let mut zb = Vec::with_capacity(2 * g.p() + 1);
    zb.extend_from_slice(zeta.values());
    zb.extend_from_slice(zeta.values());
    zb.push(Sign::Positive);
    Ok((mb, SwitchingFunction::new(zb)))
}

/// `[Σ_1, …, Σ_n]` with `Σ_1 = K_1`, `Σ_2 = K_2⁻` and `Σ_{k+1} = M_B(Σ_k)`.
pub fn tower(n: usize) -> Vec<SignedGraph> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(SignedGraph::empty(1).expect("K1"));
    if n == 1 {
        return out;
    }
    out.push(SignedGraph::canonicalize(2, [(1, 2, Sign::Negative)]).expect("K2-"));
    while out.len() < n {
        let next = balanced_mycielskian(out.last().unwrap())
            .expect("every tower level is balanced")
            .0;
        out.push(next);
    }
    out
}
