use super::Field;
use crate::error::{AlgebraError, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch { expected: c, actual: bad.len() });
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Self::from_fn(field, rows, cols, |_, _| z.clone())
    }

    pub fn identity(field: F, n: usize) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_fn(field, n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn diagonal(field: F, diag: &[F::Elem]) -> Self {
        let z = field.zero();
        Self::from_fn(field, diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                z.clone()
            }
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch { expected: self.cols, actual: other.rows });
        }
        let f = &self.field;
        Ok(Self::from_fn(f.clone(), self.rows, other.cols, |i, j| {
            (0..self.cols).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(self.get(i, k), other.get(k, j))))
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(AlgebraError::DimensionMismatch { expected: self.rows, actual: other.rows });
        }
        let f = &self.field;
        Ok(Self::from_fn(f.clone(), self.rows, self.cols, |i, j| f.add(self.get(i, j), other.get(i, j))))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Self::from_fn(f.clone(), self.rows, self.cols, |i, j| f.mul(self.get(i, j), s))
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.field.is_zero(self.get(i, j))))
    }

    pub fn diag(&self) -> Vec<F::Elem> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<F::Elem> {
        self.require_square()?;
        let f = &self.field;
        let n = self.rows;
        let mut m = self.row_vecs();
        let mut det = f.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !f.is_zero(&m[r][col])) else {
                return Ok(f.zero());
            };
            if p != col {
                m.swap(p, col);
                det = f.neg(&det);
            }
            let pivot = m[col][col].clone();
            det = f.mul(&det, &pivot);
            let pinv = f.inv(&pivot).expect("nonzero pivot");
            for r in col + 1..n {
                if f.is_zero(&m[r][col]) {
                    continue;
                }
                let factor = f.mul(&m[r][col], &pinv);
                for c in col..n {
                    let t = f.mul(&factor, &m[col][c]);
                    m[r][c] = f.sub(&m[r][c], &t);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        self.require_square()?;
        let f = &self.field;
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut inv = Self::identity(f.clone(), n).row_vecs();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !f.is_zero(&a[r][col])) else {
                return Ok(None);
            };
            a.swap(p, col);
            inv.swap(p, col);
            let pinv = f.inv(&a[col][col]).expect("nonzero pivot");
            for c in 0..n {
                a[col][c] = f.mul(&a[col][c], &pinv);
                inv[col][c] = f.mul(&inv[col][c], &pinv);
            }
            for r in 0..n {
                if r == col || f.is_zero(&a[r][col]) {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let t = f.mul(&factor, &a[col][c]);
                    a[r][c] = f.sub(&a[r][c], &t);
                    let t = f.mul(&factor, &inv[col][c]);
                    inv[r][c] = f.sub(&inv[r][c], &t);
                }
            }
        }
        Ok(Some(Self::from_rows(f.clone(), inv)?))
    }

    /// Rank through the field's preferred elimination.
    pub fn rank(&self) -> usize {
        self.field.rank(&self.row_vecs())
    }

    pub fn format_rows(&self) -> Vec<String> {
        self.row_vecs()
            .iter()
            .map(|row| row.iter().map(|e| self.field.format_elem(e)).collect::<Vec<_>>().join(", "))
            .collect()
    }
}

/// Plain Gaussian elimination, pivoting on the first nonzero entry.
pub(crate) fn rank_by_elimination<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, p);
        let pinv = field.inv(&m[rank][col]).expect("nonzero pivot");
        for r in rank + 1..n_rows {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let factor = field.mul(&m[r][col], &pinv);
            for c in col..n_cols {
                let t = field.mul(&factor, &m[rank][c]);
                m[r][c] = field.sub(&m[r][c], &t);
            }
        }
        rank += 1;
    }
    rank
}
