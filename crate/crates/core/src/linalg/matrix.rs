use std::fmt;

use crate::linalg::{LinalgError, Subspace};
use crate::poly::Poly;
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix over a single [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot = &*slot + &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Reduced row echelon form with leftmost pivots.
    pub fn rref(&self) -> Rref {
        let mut ech = Echelon::new(&self.field, self.cols);
        for r in 0..self.rows {
            ech.insert(self.row(r).to_vec());
        }
        let pivots = ech.pivots.clone();
        let matrix = Matrix::from_rows(&self.field, self.cols, ech.rows).unwrap();
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Null space `{x : M x = 0}` as a subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.matrix.get(r, free);
            }
            basis.push(v);
        }
        Subspace::span(&self.field, self.cols, basis).expect("kernel vectors have the ambient length")
    }

    /// A solution of `M x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let mut ech = Echelon::new(&self.field, self.cols + 1);
        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();
            row.push(rhs[r].clone());
            ech.insert(row);
        }
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut ech = Echelon::new(&self.field, 2 * n);
        for r in 0..n {
            let mut row = self.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { self.field.one() } else { self.field.zero() }));
            ech.insert(row);
        }
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        let rows = ech.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(&self.field, n, rows).unwrap())
    }

    /// Minimal polynomial, as the lcm of the Krylov minimal polynomials of the unit vectors.
    pub fn minimal_polynomial(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "minimal polynomial of a non-square matrix");
        let n = self.rows;
        let mut acc = Poly::new(&self.field, vec![self.field.one()]);
        for i in 0..n {
            let mut v = vec![self.field.zero(); n];
            v[i] = self.field.one();
            if acc_annihilates(self, &acc, &v) {
                continue;
            }
            let mut krylov = vec![v.clone()];
            loop {
                let next = self.apply(krylov.last().unwrap()).unwrap();
                let m = Matrix::from_columns(&self.field, n, &krylov).unwrap();
                if let Some(c) = m.solve(&next).unwrap() {
                    let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
                    coeffs.push(self.field.one());
                    let local = Poly::new(&self.field, coeffs);
                    let g = acc.gcd(&local);
                    acc = acc.mul(&local).div_rem(&g).0;
                    break;
                }
                krylov.push(next);
            }
        }
        acc
    }
}

fn acc_annihilates(m: &Matrix, p: &Poly, v: &[Scalar]) -> bool {
    // Horner evaluation of p(M) v
    let mut acc = vec![m.field.zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = m.apply(&acc).unwrap();
        for (a, x) in acc.iter_mut().zip(v) {
            *a = &*a + &(c * x);
        }
    }
    acc.iter().all(Scalar::is_zero)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Incrementally maintained reduced row echelon basis.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    width: usize,
    pub(crate) rows: Vec<Vec<Scalar>>,
    pub(crate) pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(_field: &Field, width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the current rows in place.
    pub(crate) fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (slot, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *slot = &*slot - &(&factor * r);
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub(crate) fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().unwrap();
        for slot in v.iter_mut().skip(pivot) {
            if !slot.is_zero() {
                *slot = &*slot * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (slot, x) in row.iter_mut().zip(&v).skip(pivot) {
                if !x.is_zero() {
                    *slot = &*slot - &(&factor * x);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_row() {
        let q = Field::rationals();
        let k = mat(&q, &[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q.from_i64(1), q.from_i64(-1)]).unwrap());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let q = Field::rationals();
        assert_eq!(Matrix::identity(&q, 3).kernel().dim(), 0);
    }

    #[test]
    fn solve_and_inconsistency() {
        let q = Field::rationals();
        let m = mat(&q, &[&[1, 2], &[2, 4]]);
        let x = m.solve(&[q.from_i64(3), q.from_i64(6)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![q.from_i64(3), q.from_i64(6)]);
        assert!(m.solve(&[q.from_i64(1), q.from_i64(1)]).unwrap().is_none());
        assert!(m.solve(&[q.from_i64(1)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::rationals();
        let m = mat(&q, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&q, 3));
        assert!(mat(&q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let q = Field::rationals();
        let p = mat(&q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        let mp = p.minimal_polynomial();
        // x^2 - x
        assert_eq!(mp.coeffs().len(), 3);
        assert!(mp.coeffs()[0].is_zero());
        let nil = mat(&q, &[&[0, 1], &[0, 0]]);
        assert_eq!(nil.minimal_polynomial().degree(), Some(2));
    }
}
