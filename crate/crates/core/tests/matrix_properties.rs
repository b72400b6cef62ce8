mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use signed_mycielski::balance::certify_balance;
use signed_mycielski::exactla::is_congruent_product;
use signed_mycielski::matrices::{
    adjacency, adjacency_mycielskian, congruence_factors, degree_matrix, degree_matrix_mycielskian,
    incidence, incidence_mycielskian, laplacian, laplacian_mycielskian, negative_join,
};
use signed_mycielski::mycielskian::mycielskian;
use signed_mycielski::{RationalMatrix, SignedGraph};

use common::signed_graph;

fn connected_graph(max_p: usize) -> impl Strategy<Value = SignedGraph> {
    signed_graph(max_p).prop_filter("connected", |g| g.is_connected())
}

fn small_int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, cols), rows)
}

fn symmetric_matrix(max_n: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        small_int_matrix(n, n).prop_map(move |m| {
            RationalMatrix::from_fn(n, n, |i, j| {
                let (a, b) = (i.min(j), i.max(j));
                BigRational::from_integer(BigInt::from(m[a][b]))
            })
        })
    })
}

fn rational_square(n: usize) -> impl Strategy<Value = RationalMatrix> {
    (small_int_matrix(n, n), small_int_matrix(n, n)).prop_map(move |(num, den)| {
        RationalMatrix::from_fn(n, n, |i, j| {
            BigRational::new(BigInt::from(num[i][j]), BigInt::from(den[i][j].abs() + 1))
        })
    })
}

/// Rank by plain Gaussian elimination over the rationals.
fn rank_oracle(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &rows[rank][col];
                let (head, tail) = rows.split_at_mut(rank.max(r));
                let (pivot, target) = if r < rank {
                    (&tail[0], &mut head[r])
                } else {
                    (&head[rank], &mut tail[0])
                };
                for (x, y) in target[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion.
fn det_oracle(m: &RationalMatrix) -> BigRational {
    fn go(rows: &[Vec<BigRational>]) -> BigRational {
        let n = rows.len();
        if n == 0 {
            return BigRational::from_integer(1.into());
        }
        let mut total = BigRational::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * go(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let rows: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    go(&rows)
}

fn product_with_transpose(h: &RationalMatrix) -> RationalMatrix {
    h.multiply(&h.transpose()).unwrap()
}

fn check_incidence_columns(h: &RationalMatrix) -> Result<(), TestCaseError> {
    for c in 0..h.cols() {
        let nonzero: Vec<&BigRational> = (0..h.rows())
            .map(|r| h.get(r, c))
            .filter(|x| !x.is_zero())
            .collect();
        prop_assert_eq!(nonzero.len(), 2);
        prop_assert!(nonzero
            .iter()
            .all(|x| x.abs() == BigRational::from_integer(1.into())));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn block_adjacency_matches_direct(g in signed_graph(9)) {
        let m = mycielskian(&g).0;
        prop_assert_eq!(adjacency_mycielskian(&g), adjacency(&m));
        prop_assert_eq!(degree_matrix_mycielskian(&g), degree_matrix(&m));
        prop_assert_eq!(laplacian_mycielskian(&g), laplacian(&m));
    }

    #[test]
    fn congruence_reproduces_mycielskian_adjacency(g in signed_graph(9)) {
        let (p, b) = congruence_factors(&g);
        prop_assert!(is_congruent_product(&p, &b, &adjacency_mycielskian(&g)).unwrap());
        prop_assert_eq!(p.determinant().unwrap().abs(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn rank_and_nullity_are_additive(g in signed_graph(9)) {
        let am = adjacency_mycielskian(&g);
        let a = adjacency(&g);
        let join = negative_join(&g);
        prop_assert_eq!(am.rank(), a.rank() + join.rank());
        let (im, ia, ij) = (am.inertia().unwrap(), a.inertia().unwrap(), join.inertia().unwrap());
        prop_assert_eq!(im.n_zero, ia.n_zero + ij.n_zero);
        // the lower block of B is congruent to the negated join
        prop_assert_eq!(im, ia + ij.negated());
    }

    #[test]
    fn incidence_factors_laplacian(g in signed_graph(9)) {
        let h = incidence(&g);
        check_incidence_columns(&h)?;
        prop_assert_eq!(product_with_transpose(&h), laplacian(&g));
        let hm = incidence_mycielskian(&g);
        prop_assert_eq!((hm.rows(), hm.cols()), (2 * g.p() + 1, 3 * g.q() + g.p()));
        check_incidence_columns(&hm)?;
        prop_assert_eq!(product_with_transpose(&hm), laplacian_mycielskian(&g));
    }

    #[test]
    fn laplacian_is_degree_minus_adjacency(g in signed_graph(9)) {
        let l = laplacian(&g);
        prop_assert_eq!(&l, &degree_matrix(&g).try_sub(&adjacency(&g)).unwrap());
        let lm = laplacian_mycielskian(&g);
        prop_assert_eq!(lm, degree_matrix_mycielskian(&g).try_sub(&adjacency_mycielskian(&g)).unwrap());
    }

    #[test]
    fn laplacian_singular_iff_balanced(g in connected_graph(8)) {
        let balanced = certify_balance(&g).is_balanced();
        prop_assert_eq!(laplacian(&g).determinant().unwrap().is_zero(), balanced);
        let lm_singular = laplacian_mycielskian(&g).determinant().unwrap().is_zero();
        prop_assert_eq!(lm_singular, g.is_all_positive());
    }

    #[test]
    fn laplacian_singular_iff_some_component_balanced(g in signed_graph(8)) {
        let some_balanced = g.components().iter().any(|comp| {
            let sub = SignedGraph::canonicalize(
                comp.len(),
                g.edges().iter().filter(|e| comp.contains(&e.u)).map(|e| {
                    let at = |x| comp.iter().position(|&c| c == x).unwrap() + 1;
                    (at(e.u), at(e.v), e.sign)
                }),
            )
            .unwrap();
            certify_balance(&sub).is_balanced()
        });
        prop_assert_eq!(laplacian(&g).determinant().unwrap().is_zero(), some_balanced);
    }

    #[test]
    fn inertia_agrees_with_rank(m in symmetric_matrix(8)) {
        let i = m.inertia().unwrap();
        prop_assert_eq!(i.order(), m.rows());
        prop_assert_eq!(i.rank(), m.rank());
        prop_assert_eq!(m.rank(), rank_oracle(&m));
    }

    #[test]
    fn inertia_is_congruence_invariant(m in symmetric_matrix(6), p in rational_square(6)) {
        let n = m.rows();
        let p = RationalMatrix::from_fn(n, n, |i, j| p.get(i, j).clone());
        prop_assume!(!p.determinant().unwrap().is_zero());
        let moved = p.multiply(&m).unwrap().multiply(&p.transpose()).unwrap();
        prop_assert!(moved.is_symmetric());
        prop_assert_eq!(moved.inertia().unwrap(), m.inertia().unwrap());
    }

    #[test]
    fn determinant_matches_cofactors(m in rational_square(5)) {
        prop_assert_eq!(m.determinant().unwrap(), det_oracle(&m));
        prop_assert_eq!(m.rank(), rank_oracle(&m));
    }

    #[test]
    fn determinant_sign_follows_negative_index(m in symmetric_matrix(7)) {
        let det = m.determinant().unwrap();
        prop_assume!(!det.is_zero());
        let i = m.inertia().unwrap();
        prop_assert_eq!(det.is_negative(), i.n_minus % 2 == 1);
    }

    #[test]
    fn serialization_is_exact(m in rational_square(4)) {
        let json = serde_json::to_string(&m).unwrap();
        let back: RationalMatrix = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn positive_edge_counterexample_to_literal_sign_additivity() {
    // K2+: A_M is the adjacency of a positive 5-cycle
    let g = SignedGraph::parse_edge_list("2 1\n1 2 +1\n").unwrap();
    let im = adjacency_mycielskian(&g).inertia().unwrap();
    let ia = adjacency(&g).inertia().unwrap();
    let ij = negative_join(&g).inertia().unwrap();
    assert_eq!((im.n_plus, im.n_minus, im.n_zero), (3, 2, 0));
    assert_eq!((ia + ij).n_plus, 2);
    assert_eq!(im, ia + ij.negated());
}
