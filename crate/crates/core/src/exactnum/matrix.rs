use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Dense integer matrix, row-major, with unbounded entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::DegenerateMatrix);
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow("matrix entry")))
                    .collect()
            })
            .collect()
    }

    pub fn to_i64_columns(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).to_i64().ok_or(Error::Overflow("matrix entry")))
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }

    fn column_combine(&mut self, p: usize, q: usize, x: &BigInt, y: &BigInt, u: &BigInt, v: &BigInt) {
        // (col_p, col_q) <- (x col_p + y col_q, u col_p + v col_q)
        for i in 0..self.rows {
            let a = self.get(i, p).clone();
            let b = self.get(i, q).clone();
            self.set(i, p, x * &a + y * &b);
            self.set(i, q, u * &a + v * &b);
        }
    }

    fn column_swap(&mut self, p: usize, q: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + p, i * self.cols + q);
        }
    }

    fn column_axpy(&mut self, target: usize, factor: &BigInt, source: usize) {
        // col_target -= factor * col_source
        for i in 0..self.rows {
            let s = self.get(i, source) * factor;
            let idx = i * self.cols + target;
            self.data[idx] -= s;
        }
    }

    fn column_negate(&mut self, p: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + p;
            self.data[idx] = -core::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[BigInt]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows.iter().map(|r| DebugRow(r))).finish()
    }
}

struct DebugRow<'a>(&'a [BigInt]);

impl fmt::Debug for DebugRow<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.0.iter().map(|x| DisplayAsDebug(x)))
            .finish()
    }
}

struct DisplayAsDebug<'a>(&'a BigInt);

impl fmt::Debug for DisplayAsDebug<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self.0, f)
    }
}

/// Column-style Hermite normal form `H = M·U` with `U` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// `(row, column)` of each pivot; column indices are `0, 1, …, rank-1`.
    pub pivots: Vec<(usize, usize)>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True iff the column lattice of `M` is all of `Z^rows`, i.e. the
    /// leading `rows × rows` block of `H` is the identity.
    pub fn pivot_block_is_identity(&self) -> bool {
        let d = self.h.rows();
        if self.rank() != d {
            return false;
        }
        (0..d).all(|i| (0..d).all(|j| *self.h.get(i, j) == BigInt::from((i == j) as i64)))
    }
}

/// Column-style Hermite normal form with non-negative pivots and entries left
/// of each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> Result<HermiteForm> {
    if m.rows() == 0 || m.cols() == 0 || m.is_zero() {
        return Err(Error::DegenerateMatrix);
    }
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for i in 0..h.rows() {
        if next == h.cols() {
            break;
        }
        for j in next + 1..h.cols() {
            let b = h.get(i, j).clone();
            if b.is_zero() {
                continue;
            }
            let a = h.get(i, next).clone();
            if a.is_zero() {
                h.column_swap(next, j);
                u.column_swap(next, j);
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let ug = -(&b / &g);
            let vg = &a / &g;
            h.column_combine(next, j, &x, &y, &ug, &vg);
            u.column_combine(next, j, &x, &y, &ug, &vg);
        }
        let pivot = h.get(i, next).clone();
        if pivot.is_zero() {
            continue;
        }
        if pivot.is_negative() {
            h.column_negate(next);
            u.column_negate(next);
        }
        let pivot = h.get(i, next).clone();
        for j in 0..next {
            let q = h.get(i, j).div_floor(&pivot);
            if !q.is_zero() {
                h.column_axpy(j, &q, next);
                u.column_axpy(j, &q, next);
            }
        }
        pivots.push((i, next));
        next += 1;
    }
    Ok(HermiteForm { h, u, pivots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_i64_rows().unwrap()
    }

    #[test]
    fn gcd_of_maximal_minors_is_one_for_rational_normal_curve() {
        // independent check: all 2x2 minors of A, gcd by brute force
        let a = [[1i64, 1, 1, 1], [0, 1, 2, 3]];
        let mut g = 0i64;
        for p in 0..4 {
            for q in p + 1..4 {
                g = g.gcd(&(a[0][p] * a[1][q] - a[0][q] * a[1][p]));
            }
        }
        assert_eq!(g, 1);
        let m = IntMatrix::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let hnf = hermite_normal_form(&m).unwrap();
        assert!(hnf.pivot_block_is_identity());
        assert_eq!(m.mul(&hnf.u).unwrap(), hnf.h);
    }

    #[test]
    fn identity_is_its_own_form() {
        let m = IntMatrix::identity(2);
        let hnf = hermite_normal_form(&m).unwrap();
        assert_eq!(hnf.h, IntMatrix::identity(2));
        assert_eq!(hnf.u, IntMatrix::identity(2));
    }

    #[test]
    fn index_four_sublattice_is_not_saturated() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap();
        let hnf = hermite_normal_form(&m).unwrap();
        assert_eq!(big_rows(&hnf.h), vec![vec![2, 0], vec![0, 2]]);
        assert!(!hnf.pivot_block_is_identity());
    }

    #[test]
    fn saturated_despite_non_unit_entries() {
        let m = IntMatrix::from_rows(&[vec![2, 3]]).unwrap();
        let hnf = hermite_normal_form(&m).unwrap();
        assert!(hnf.pivot_block_is_identity());
    }

    #[test]
    fn zero_matrix_rejected() {
        let m = IntMatrix::zeros(2, 2);
        assert_eq!(hermite_normal_form(&m), Err(Error::DegenerateMatrix));
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[vec![3, -1], vec![0, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(3));
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
    }

    proptest! {
        #[test]
        fn hnf_is_unimodular_transform(
            rows in 1usize..4,
            cols in 1usize..5,
            entries in proptest::collection::vec(-6i64..=6, 16),
        ) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| entries[i * cols + j]).collect())
                .collect();
            let m = IntMatrix::from_rows(&data).unwrap();
            prop_assume!(!m.is_zero());
            let hnf = hermite_normal_form(&m).unwrap();
            prop_assert_eq!(m.mul(&hnf.u).unwrap(), hnf.h.clone());
            prop_assert_eq!(hnf.u.determinant().unwrap().abs(), BigInt::one());
            for &(r, c) in &hnf.pivots {
                prop_assert!(hnf.h.get(r, c).is_positive());
                for j in 0..c {
                    prop_assert!(!hnf.h.get(r, j).is_negative());
                    prop_assert!(hnf.h.get(r, j) < hnf.h.get(r, c));
                }
                for j in c + 1..cols {
                    prop_assert!(hnf.h.get(r, j).is_zero());
                }
            }
        }
    }
}
