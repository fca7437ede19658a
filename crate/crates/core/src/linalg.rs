//! Small dense integer matrices with exact determinant, rank and inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) const OVERFLOW: &str = "entry exceeds the i64 range";

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row has {} entries, expected {}",
                    row.len(),
                    n
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    /// Panics if an entry leaves the i64 range.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = a.checked_mul(other.data[k * n + j]).expect(OVERFLOW);
                    out.data[i * n + j] = out.data[i * n + j].checked_add(term).expect(OVERFLOW);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(0i64, |acc, j| {
                    acc.checked_add(self.get(i, j).checked_mul(v[j]).expect(OVERFLOW)).expect(OVERFLOW)
                })
            })
            .collect()
    }

    pub fn minus_identity(&self) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] -= 1;
        }
        m
    }

    fn to_wide(&self) -> Vec<Vec<i128>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| i128::from(self.get(i, j))).collect())
            .collect()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> i128 {
        determinant_wide(self.to_wide())
    }

    /// Determinant of the principal submatrix on `indices`.
    pub fn principal_minor(&self, indices: &[usize]) -> i128 {
        let sub = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| i128::from(self.get(i, j))).collect())
            .collect();
        determinant_wide(sub)
    }

    pub fn rank(&self) -> usize {
        rank_wide(self.to_wide())
    }

    /// Exact inverse of a unimodular matrix (adjugate over a ±1 determinant).
    pub fn inverse(&self) -> Result<IntMatrix> {
        let n = self.n;
        let det = self.determinant();
        if det != 1 && det != -1 {
            return Err(Error::Precondition(format!(
                "matrix with determinant {det} has no integer inverse"
            )));
        }
        if n == 1 {
            return Ok(IntMatrix { n, data: vec![self.data[0] * det as i64] });
        }
        let wide = self.to_wide();
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                // cofactor C_ji goes to position (i, j)
                let minor: Vec<Vec<i128>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| (0..n).filter(|&c| c != i).map(|c| wide[r][c]).collect())
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let v = sign * determinant_wide(minor) * det;
                out.set(i, j, i64::try_from(v).expect("inverse entry overflows i64"));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

fn determinant_wide(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn rank_wide(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if m[r][col] == 0 {
                continue;
            }
            let (a, b) = (m[rank][col], m[r][col]);
            let mut g = 0;
            for c in 0..cols {
                m[r][c] = m[r][c] * a - m[rank][c] * b;
                g = gcd(g, m[r][c]);
            }
            if g > 1 {
                for c in 0..cols {
                    m[r][c] /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn determinant_and_rank() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.determinant(), 4);
        assert_eq!(a.rank(), 3);
        let affine = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(affine.determinant(), 0);
        assert_eq!(affine.rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), -1);
    }

    #[test]
    fn unimodular_inverse() {
        let a = m(&[&[-1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = m(&[&[1, 0, 0], &[1, -1, 1], &[0, 0, 1]]);
        let ab = a.mul(&b);
        let inv = ab.inverse().unwrap();
        assert!(ab.mul(&inv).is_identity());
        assert!(inv.mul(&ab).is_identity());
        assert!(m(&[&[2, 0], &[0, 1]]).inverse().is_err());
    }
}
