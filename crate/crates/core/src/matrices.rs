//! Adjacency, incidence, degree and Laplacian matrices of a signed graph and
//! of its Mycielskian.
//!
//! Mycielskian matrices are assembled from blocks of the base graph's
//! matrices in the vertex order `v_1…v_p, v_1'…v_p', w`, which matches
//! [`MycielskianLabeling`](crate::mycielskian::MycielskianLabeling). They can
//! be compared entrywise with the same matrix built directly from
//! [`mycielskian`](crate::mycielskian::mycielskian).
//!
//! Incidence columns use a fixed orientation: for `e = (u, v, s)` with
//! `u < v` the column has `+1` at `u` and `-s` at `v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exactla::RationalMatrix;
use crate::graph::SignedGraph;

fn val(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn ones(rows: usize, cols: usize, x: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| val(x))
}

fn blocks(rows: &[Vec<&RationalMatrix>]) -> RationalMatrix {
    RationalMatrix::from_blocks(rows).expect("block shapes are consistent")
}

pub fn adjacency(g: &SignedGraph) -> RationalMatrix {
    let mut a = RationalMatrix::zeros(g.p(), g.p());
    for e in g.edges() {
        let s = val(e.sign.value().into());
        a[(e.u - 1, e.v - 1)] = s.clone();
        a[(e.v - 1, e.u - 1)] = s;
    }
    a
}

/// Diagonal degree matrix of the underlying graph.
pub fn degree_matrix(g: &SignedGraph) -> RationalMatrix {
    let d: Vec<i64> = g.degrees().vertices.iter().map(|d| d.d as i64).collect();
    RationalMatrix::diagonal(&d)
}

/// `L = D(|Σ|) - A(Σ)`.
pub fn laplacian(g: &SignedGraph) -> RationalMatrix {
    &degree_matrix(g) - &adjacency(g)
}

/// Adjacency matrix of `Σ` joined to a new vertex by negative edges:
/// `[[A, -j], [-jᵗ, 0]]`.
pub fn negative_join(g: &SignedGraph) -> RationalMatrix {
    let p = g.p();
    let a = adjacency(g);
    let col = ones(p, 1, -1);
    let row = ones(1, p, -1);
    let zero = RationalMatrix::zeros(1, 1);
    blocks(&[vec![&a, &col], vec![&row, &zero]])
}

/// `A_M = [[A, A, 0], [A, 0, j], [0ᵗ, jᵗ, 0]]`.
pub fn adjacency_mycielskian(g: &SignedGraph) -> RationalMatrix {
    let p = g.p();
    let a = adjacency(g);
    let zpp = RationalMatrix::zeros(p, p);
    let z_col = RationalMatrix::zeros(p, 1);
    let z_row = RationalMatrix::zeros(1, p);
    let j_col = ones(p, 1, 1);
    let j_row = ones(1, p, 1);
    let z11 = RationalMatrix::zeros(1, 1);
    blocks(&[
        vec![&a, &a, &z_col],
        vec![&a, &zpp, &j_col],
        vec![&z_row, &j_row, &z11],
    ])
}

/// `D_M = diag(2D, D + I, p)`.
pub fn degree_matrix_mycielskian(g: &SignedGraph) -> RationalMatrix {
    let p = g.p();
    let d = degree_matrix(g);
    let two_d = d.scale(&val(2));
    let d_plus_i = &d + &RationalMatrix::identity(p);
    let zpp = RationalMatrix::zeros(p, p);
    let z_col = RationalMatrix::zeros(p, 1);
    let z_row = RationalMatrix::zeros(1, p);
    let corner = RationalMatrix::diagonal(&[p as i64]);
    blocks(&[
        vec![&two_d, &zpp, &z_col],
        vec![&zpp, &d_plus_i, &z_col],
        vec![&z_row, &z_row, &corner],
    ])
}

/// `L_M = [[2D - A, -A, 0], [-A, D + I, -j], [0ᵗ, -jᵗ, p]]`.
pub fn laplacian_mycielskian(g: &SignedGraph) -> RationalMatrix {
    let p = g.p();
    let a = adjacency(g);
    let d = degree_matrix(g);
    let top_left = &d.scale(&val(2)) - &a;
    let neg_a = -&a;
    let d_plus_i = &d + &RationalMatrix::identity(p);
    let z_col = RationalMatrix::zeros(p, 1);
    let z_row = RationalMatrix::zeros(1, p);
    let mj_col = ones(p, 1, -1);
    let mj_row = ones(1, p, -1);
    let corner = RationalMatrix::diagonal(&[p as i64]);
    blocks(&[
        vec![&top_left, &neg_a, &z_col],
        vec![&neg_a, &d_plus_i, &mj_col],
        vec![&z_row, &mj_row, &corner],
    ])
}

/// Congruence factors with `P·B·Pᵗ = A_M`:
/// `P = [[I, 0, 0], [I, -I, 0], [0ᵗ, 0ᵗ, 1]]` and
/// `B = [[A, 0, 0], [0, -A, -j], [0ᵗ, -jᵗ, 0]]`.
///
/// The lower-right `(p+1)×(p+1)` block of `B` is `[[-A, -j], [-jᵗ, 0]]`.
pub fn congruence_factors(g: &SignedGraph) -> (RationalMatrix, RationalMatrix) {
    let p = g.p();
    let a = adjacency(g);
    let neg_a = -&a;
    let id = RationalMatrix::identity(p);
    let neg_id = -&id;
    let zpp = RationalMatrix::zeros(p, p);
    let z_col = RationalMatrix::zeros(p, 1);
    let z_row = RationalMatrix::zeros(1, p);
    let one = RationalMatrix::diagonal(&[1]);
    let z11 = RationalMatrix::zeros(1, 1);
    let mj_col = ones(p, 1, -1);
    let mj_row = ones(1, p, -1);
    let pm = blocks(&[
        vec![&id, &zpp, &z_col],
        vec![&id, &neg_id, &z_col],
        vec![&z_row, &z_row, &one],
    ]);
    let bm = blocks(&[
        vec![&a, &zpp, &z_col],
        vec![&zpp, &neg_a, &mj_col],
        vec![&z_row, &mj_row, &z11],
    ]);
    (pm, bm)
}

/// Lower-right `(p+1)×(p+1)` block of `B` from [`congruence_factors`].
pub fn congruence_lower_block(g: &SignedGraph) -> RationalMatrix {
    let (_, b) = congruence_factors(g);
    let p = g.p();
    RationalMatrix::from_fn(p + 1, p + 1, |i, j| b[(p + i, p + j)].clone())
}

/// `x(e_k)` for the `k`-th edge (0-based) in canonical order: `+1` at `u`,
/// `-σ(e_k)` at `v`.
pub fn edge_vector(g: &SignedGraph, k: usize) -> Vec<i64> {
    let e = g.edges()[k];
    let mut x = vec![0; g.p()];
    x[e.u - 1] = 1;
    x[e.v - 1] = -i64::from(e.sign.value());
    x
}

/// `p × q` incidence matrix, column `k` is `x(e_k)`.
pub fn incidence(g: &SignedGraph) -> RationalMatrix {
    let mut h = RationalMatrix::zeros(g.p(), g.q());
    for k in 0..g.q() {
        for (i, x) in edge_vector(g, k).into_iter().enumerate() {
            if x != 0 {
                h[(i, k)] = val(x);
            }
        }
    }
    h
}

/// `(2p+1) × (3q+p)` incidence matrix of `M(Σ)`.
///
/// Columns are `e_1…e_q, e_1', e_1'', …, e_q', e_q'', f_1…f_p` with
/// `e_k' = v_i v_j'`, `e_k'' = v_i' v_j` for `e_k = v_i v_j` (`i < j`) and
/// `f_i = v_i' w`. Writing `x_k` and `y_k` for `x(e_k)` restricted to `v_i`
/// and `v_j` (so `x_k + y_k = x(e_k)`), the column of `e_k'` is `x_k` on the
/// original rows and `y_k` on the twin rows; `e_k''` swaps them. Root
/// columns carry `+1` at the twin and `-1` at the root.
pub fn incidence_mycielskian(g: &SignedGraph) -> RationalMatrix {
    let (p, q) = (g.p(), g.q());
    let root = 2 * p;
    let mut h = RationalMatrix::zeros(2 * p + 1, 3 * q + p);
    for (k, e) in g.edges().iter().enumerate() {
        let x_at_u = val(1);
        let y_at_v = val(-i64::from(e.sign.value()));
        let (u, v) = (e.u - 1, e.v - 1);
        h[(u, k)] = x_at_u.clone();
        h[(v, k)] = y_at_v.clone();
        let c1 = q + 2 * k;
        let c2 = c1 + 1;
        // e_k' = v_u v_v': x_k on originals, y_k on twins
        h[(u, c1)] = x_at_u.clone();
        h[(p + v, c1)] = y_at_v.clone();
        // e_k'' = v_u' v_v: y_k on originals, x_k on twins
        h[(v, c2)] = y_at_v;
        h[(p + u, c2)] = x_at_u;
    }
    for i in 0..p {
        let c = 3 * q + i;
        h[(p + i, c)] = BigRational::one();
        h[(root, c)] = -BigRational::one();
    }
    h
}
