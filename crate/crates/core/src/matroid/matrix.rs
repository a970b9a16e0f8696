use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{MatroidError, Subset};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

/// Matrices over the rationals, the only input type the CLI reads.
pub type RationalMatrix = Matrix<BigRational>;

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self, MatroidError> {
        if entries.len() != rows * cols {
            return Err(MatroidError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatroidError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatroidError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Matrix<S>) -> Result<Matrix<S>, MatroidError> {
        if self.cols != other.rows {
            return Err(MatroidError::Shape("product dimensions".into()));
        }
        let mut out = vec![S::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &mut out[i * other.cols + j];
                    *v = v.clone() + a.clone() * other.get(k, j).clone();
                }
            }
        }
        Matrix::new(self.rows, other.cols, out)
    }

    /// Multiplies column `j` by `c`.
    pub fn scale_column(&mut self, j: usize, c: &S) {
        for i in 0..self.rows {
            let v = self.get(i, j).clone() * c.clone();
            self.set(i, j, v);
        }
    }

    /// The columns listed (0-based), in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<S> {
        let mut e = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                e.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            entries: e,
        }
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.rows, self.cols, self.entries.clone()).0
    }

    /// Determinant of a square matrix by Bareiss elimination.
    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss(self.rows, self.cols, self.entries.clone()).1
    }

    /// The maximal minor on a set of columns (1-based elements of `cols`).
    pub fn minor(&self, cols: Subset) -> S {
        let idx: Vec<usize> = cols.elems().map(|e| e - 1).collect();
        self.select_columns(&idx).determinant()
    }
}

/// Returns `(rank, det)`; `det` is only meaningful for square input.
fn bareiss<S: Scalar>(rows: usize, cols: usize, mut a: Vec<S>) -> (usize, S) {
    let at = |i: usize, j: usize| i * cols + j;
    let mut prev = S::one();
    let mut sign = S::one();
    let mut rank = 0;
    for j in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[at(i, j)].is_zero()) else {
            continue;
        };
        if p != rank {
            for k in 0..cols {
                a.swap(at(p, k), at(rank, k));
            }
            sign = -sign;
        }
        let piv = a[at(rank, j)].clone();
        for i in rank + 1..rows {
            let lead = a[at(i, j)].clone();
            for k in j + 1..cols {
                let v = piv.clone() * a[at(i, k)].clone() - lead.clone() * a[at(rank, k)].clone();
                a[at(i, k)] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[at(i, j)] = S::zero();
        }
        prev = piv;
        rank += 1;
    }
    let det = if rank == rows && rows == cols {
        sign * prev
    } else {
        S::zero()
    };
    (rank, det)
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `{"rows": r, "cols": n, "entries": [["p/q", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self, MatroidError> {
        if json.entries.len() != json.rows || json.entries.iter().any(|r| r.len() != json.cols) {
            return Err(MatroidError::Shape(format!(
                "declared {}x{} does not match entries",
                json.rows, json.cols
            )));
        }
        let mut e = Vec::with_capacity(json.rows * json.cols);
        for s in json.entries.iter().flatten() {
            let v = s
                .trim()
                .parse::<S>()
                .map_err(|_| MatroidError::Parse(format!("bad matrix entry {s:?}")))?;
            e.push(v);
        }
        Matrix::new(json.rows, json.cols, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    type Q = RationalMatrix;

    #[test]
    fn rank_and_det() {
        let m = Q::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        assert_eq!(m.rank(), 2);
        let z = Q::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(z.rank(), 1);
        assert!(z.determinant().is_zero());
        let d = Matrix::<BigInt>::from_i64_rows(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 5]]);
        // 0*(5) - 2*(5 - 0) + 1*(0 - 3) = -13
        assert_eq!(d.determinant(), BigInt::from(-13));
    }

    #[test]
    fn fractional_entries() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let m = Q::from_rows(vec![vec![q(1, 2), q(0, 1), q(1, 3)], vec![q(-3, 1), q(5, 7), q(1, 1)]]).unwrap();
        assert_eq!(m.rank(), 2);
        let sq = Q::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(5, 7), q(2, 1)]]).unwrap();
        assert_eq!(sq.determinant(), q(1, 1) - q(5, 21));
        let dep = Q::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]]).unwrap();
        assert_eq!(dep.rank(), 1);
    }

    #[test]
    fn json_parses_fractions() {
        let j: MatrixJson =
            serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[["1/2","-3"]]}"#).unwrap();
        let m = Q::from_json(&j).unwrap();
        assert_eq!(m.get(0, 0), &BigRational::new(1.into(), 2.into()));
        assert_eq!(Q::from_json(&m.to_json()).unwrap(), m);
        let bad: MatrixJson =
            serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[["x","1"]]}"#).unwrap();
        assert!(matches!(Q::from_json(&bad), Err(MatroidError::Parse(_))));
    }
}
