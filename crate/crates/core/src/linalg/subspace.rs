use crate::linalg::matrix::Echelon;
use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Field, Scalar};

/// A subspace of `k^n`, stored by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are identical. A vector inside the subspace has coordinates
/// equal to its entries at the pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Matrix::identity(field, ambient).row_space()
    }

    pub fn span<I>(field: &Field, ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            ech.insert(v);
        }
        Ok(Subspace {
            field: field.clone(),
            ambient,
            rows: ech.rows,
            pivots: ech.pivots,
        })
    }

    pub(crate) fn from_echelon(field: &Field, ambient: usize, ech: Echelon) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: ech.rows,
            pivots: ech.pivots,
        }
    }

    pub(crate) fn to_echelon(&self) -> Echelon {
        let mut ech = Echelon::new(&self.field, self.ambient);
        ech.rows = self.rows.clone();
        ech.pivots = self.pivots.clone();
        ech
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, self.rows.clone()).unwrap()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), LinalgError> {
        if v.len() == self.ambient {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            })
        }
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch(self.ambient, other.ambient))
        }
    }

    /// `v` minus its component along the pivot columns; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        self.check_len(v)?;
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        Ok(out)
    }

    fn reduce_in_place(&self, v: &mut [Scalar]) {
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

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for v in &other.rows {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the stored basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *slot = &*slot + &(c * r);
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut ech = self.to_echelon();
        for v in &other.rows {
            ech.insert(v.clone());
        }
        Ok(Subspace::from_echelon(&self.field, self.ambient, ech))
    }

    /// Intersection through the kernel of the stacked system `U a - V b = 0`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&self.field, self.ambient));
        }
        let a = self.dim();
        let mut columns: Vec<Vec<Scalar>> = self.rows.clone();
        columns.extend(other.rows.iter().map(|v| v.iter().map(|x| -x).collect()));
        let system = Matrix::from_columns(&self.field, self.ambient, &columns)?;
        let kernel = system.kernel();
        let vectors = kernel.rows.iter().map(|k| self.combine(&k[..a]));
        Subspace::span(&self.field, self.ambient, vectors)
    }

    /// Indices of the non-pivot columns; their images span the quotient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in `k^n / U`, in the basis given by
    /// the images of the unit vectors at [`Self::complement_indices`].
    pub fn quotient_coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        let reduced = self.reduce(v)?;
        Ok(self
            .complement_indices()
            .into_iter()
            .map(|i| reduced[i].clone())
            .collect())
    }

    /// Matrix of the projection `k^n -> k^n / U` in the basis of [`Self::quotient_coordinates`].
    pub fn quotient_matrix(&self) -> Matrix {
        let comp = self.complement_indices();
        let mut m = Matrix::zeros(&self.field, comp.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![self.field.zero(); self.ambient];
            e[j] = self.field.one();
            for (r, x) in self.quotient_coordinates(&e).unwrap().into_iter().enumerate() {
                m.set(r, j, x);
            }
        }
        m
    }

    /// `{x : <u, x> = 0 for all u in U}` with the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(&self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace, LinalgError> {
        if map.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: map.cols(),
            });
        }
        let mut vecs = Vec::with_capacity(self.dim());
        for v in &self.rows {
            vecs.push(map.apply(v)?);
        }
        Subspace::span(&self.field, map.rows(), vecs)
    }
}

impl Matrix {
    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.field(), self.cols(), self.row_vectors()).unwrap()
    }

    /// Column space (image) of the matrix.
    pub fn image(&self) -> Subspace {
        self.transpose().row_space()
    }
}
