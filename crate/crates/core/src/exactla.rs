//! Exact rational linear algebra.
//!
//! Dense matrices over arbitrary-precision rationals. Rank and determinant
//! use fraction-free (Bareiss) elimination on rows scaled to integers;
//! inertia uses congruence diagonalization, so no floating point or
//! tolerance is involved anywhere.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = int(v);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigRational>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> RationalMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<RationalMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {cols} columns, found {}",
                bad.len()
            )));
        }
        Ok(RationalMatrix::from_fn(rows.len(), cols, |i, j| {
            int(rows[i][j])
        }))
    }

    pub fn from_rational_rows(rows: Vec<Vec<BigRational>>) -> Result<RationalMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(RationalMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Assembles a block matrix. Blocks in a block-row must share a row
    /// count and blocks in a block-column a column count.
    pub fn from_blocks(blocks: &[Vec<&RationalMatrix>]) -> Result<RationalMatrix> {
        let width = blocks.first().map_or(0, Vec::len);
        if blocks.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch("ragged block rows".into()));
        }
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = (0..width).map(|j| blocks[0][j].cols).collect();
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({bi}, {bj}) is {}x{}, expected {}x{}",
                        b.rows, b.cols, heights[bi], widths[bj]
                    )));
                }
            }
        }
        let (rows, cols) = (heights.iter().sum(), widths.iter().sum());
        let mut out = RationalMatrix::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self[(i, j)] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Entries as `i64` rows, if all are integers that fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        if x.is_integer() {
                            x.to_integer().to_i64()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn scale(&self, factor: &BigRational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn multiply(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &RationalMatrix, op: &str) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.same_shape(other, "add")?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.same_shape(other, "subtract")?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Rows scaled by the lcm of their denominators, as integers.
    /// Returns the integer rows and the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale_product = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let lcm = self.row(i).iter().fold(BigInt::one(), |acc, x| {
                    num_integer::Integer::lcm(&acc, x.denom())
                });
                scale_product *= &lcm;
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();
        (rows, scale_product)
    }

    /// Exact rank by Bareiss elimination.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.integer_rows();
        bareiss(&mut m, self.cols).0
    }

    pub fn determinant(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigRational::one());
        }
        let (mut m, scale) = self.integer_rows();
        let (rank, det) = bareiss(&mut m, n);
        if rank < n {
            return Ok(BigRational::zero());
        }
        Ok(BigRational::new(det, scale))
    }

    /// Signature `(n₊, n₋, n₀)` of a symmetric matrix by congruence
    /// diagonalization.
    pub fn inertia(&self) -> Result<Inertia> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let diag = congruence_diagonal(self.clone());
        let mut out = Inertia::default();
        for d in diag {
            match d.signum() {
                s if s.is_positive() => out.n_plus += 1,
                s if s.is_negative() => out.n_minus += 1,
                _ => out.n_zero += 1,
            }
        }
        Ok(out)
    }

    fn swap_symmetric(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + a, k * self.cols + b);
        }
    }
}

/// Fraction-free elimination in place. Returns the rank and, for a full-rank
/// square input, the determinant (with row-swap sign).
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if piv != r {
            m.swap(piv, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (r, det)
}

/// Diagonal of a matrix congruent to the symmetric input `a`.
///
/// At step `k`: use `a_kk` if nonzero; otherwise swap in a later nonzero
/// diagonal entry; otherwise, if some `a_ij ≠ 0` remains, add row/column `j`
/// to row/column `i` (making the new `a_ii = 2a_ij`) and swap it in;
/// otherwise the remaining block is zero.
fn congruence_diagonal(mut a: RationalMatrix) -> Vec<BigRational> {
    let n = a.rows;
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_symmetric(k, j);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_zero())
            {
                // row_i += row_j, then col_i += col_j
                for c in k..n {
                    let v = a[(j, c)].clone();
                    a[(i, c)] += v;
                }
                for r in k..n {
                    let v = a[(r, j)].clone();
                    a[(r, i)] += v;
                }
                a.swap_symmetric(k, i);
            } else {
                diag.extend(std::iter::repeat_n(BigRational::zero(), n - k));
                return diag;
            }
        }
        let pivot = a[(k, k)].clone();
        for r in k + 1..n {
            if a[(r, k)].is_zero() {
                continue;
            }
            let f = &a[(r, k)] / &pivot;
            for c in k..n {
                let v = &f * &a[(k, c)];
                a[(r, c)] -= v;
            }
            for rr in k..n {
                let v = &f * &a[(rr, k)];
                a[(rr, r)] -= v;
            }
        }
        diag.push(pivot);
    }
    diag
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_add(rhs).expect("matrix shapes must agree")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_sub(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Display for RationalMatrix {
    /// One row per line, entries space-separated (`p/q` when not integral).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

// Serialized as an array of rows of exact strings ("3", "-1/2").
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| x.parse::<BigRational>().map_err(de::Error::custom))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        RationalMatrix::from_rational_rows(parsed).map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Inertia {
        Inertia {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    /// Inertia of the negated matrix.
    pub fn negated(&self) -> Inertia {
        Inertia::new(self.n_minus, self.n_plus, self.n_zero)
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.n_plus + rhs.n_plus,
            self.n_minus + rhs.n_minus,
            self.n_zero + rhs.n_zero,
        )
    }
}

pub fn multiply(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.multiply(b)
}

pub fn transpose(a: &RationalMatrix) -> RationalMatrix {
    a.transpose()
}

pub fn determinant(a: &RationalMatrix) -> Result<BigRational> {
    a.determinant()
}

pub fn rank(a: &RationalMatrix) -> usize {
    a.rank()
}

pub fn inertia(a: &RationalMatrix) -> Result<Inertia> {
    a.inertia()
}

/// Exact test of `P·B·Pᵗ = target`.
pub fn is_congruent_product(
    p: &RationalMatrix,
    b: &RationalMatrix,
    target: &RationalMatrix,
) -> Result<bool> {
    let product = p.multiply(b)?.multiply(&p.transpose())?;
    if (product.rows, product.cols) != (target.rows, target.cols) {
        return Err(Error::DimensionMismatch(format!(
            "P·B·Pᵗ is {}x{}, target is {}x{}",
            product.rows, product.cols, target.rows, target.cols
        )));
    }
    Ok(product == *target)
}
