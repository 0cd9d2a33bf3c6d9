use std::collections::BTreeMap;
use std::fmt;

use crate::Error;
use crate::linalg::tensor::{flatten, unflatten};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Sparse coefficient list `[(index, coefficient)]`.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Structure constants in the sparse triple encoding used by the file format.
/// Omitted entries are zero; repeated entries are summed.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub field: Field,
    pub labels: Vec<String>,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    /// `(i, j, k, c)`: `e_i e_j` has coefficient `c` on `e_k`.
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    /// `(i, j, k, c)`: `Δ(e_i)` has coefficient `c` on `e_j ⊗ e_k`.
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    /// `(i, j, c)`: `S(e_i)` has coefficient `c` on `e_j`.
    pub antipode: Vec<(usize, usize, Scalar)>,
}

/// A finite-dimensional Hopf algebra presented by structure constants on a
/// fixed basis `e_0, ..., e_{n-1}`.
///
/// Construction only checks that the data is well formed and that the
/// antipode matrix is invertible; the Hopf axioms are checked by
/// [`crate::hopf::verify_axioms`].
#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    name: String,
    field: Field,
    labels: Vec<String>,
    /// `mult[i * n + j] = e_i e_j`
    mult: Vec<SparseVec>,
    unit: Vec<Scalar>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    /// Column `j` holds `S(e_j)`.
    antipode: Matrix,
    antipode_inv: Matrix,
}

fn check_index(index: usize, dim: usize, what: &str) -> Result<(), Error> {
    if index < dim {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what: what.to_string(),
            index,
            dim,
        })
    }
}

fn check_scalar(field: &Field, s: &Scalar, what: &str) -> Result<(), Error> {
    if &s.field() == field {
        Ok(())
    } else {
        Err(Error::Malformed(format!(
            "{what}: scalar {s} lies in {} instead of {field}",
            s.field()
        )))
    }
}

fn sparsify(v: Vec<Scalar>) -> SparseVec {
    v.into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .collect()
}

impl HopfAlgebra {
    pub fn from_structure_constants(
        name: impl Into<String>,
        data: StructureConstants,
    ) -> Result<Self, Error> {
        let n = data.labels.len();
        let field = data.field.clone();
        if n == 0 {
            return Err(Error::Malformed("dimension must be positive".into()));
        }
        for (what, v) in [("unit", &data.unit), ("counit", &data.counit)] {
            if v.len() != n {
                return Err(Error::Malformed(format!(
                    "{what} has length {} but the dimension is {n}",
                    v.len()
                )));
            }
            for s in v.iter() {
                check_scalar(&field, s, what)?;
            }
        }
        let mut mult: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
        for (t, (i, j, k, c)) in data.mult.iter().enumerate() {
            let what = format!("mult entry {t}");
            check_index(*i, n, &what)?;
            check_index(*j, n, &what)?;
            check_index(*k, n, &what)?;
            check_scalar(&field, c, &what)?;
            let slot = mult[i * n + j].entry(*k).or_insert_with(|| field.zero());
            *slot = &*slot + c;
        }
        let mut comult: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); n];
        for (t, (i, j, k, c)) in data.comult.iter().enumerate() {
            let what = format!("comult entry {t}");
            check_index(*i, n, &what)?;
            check_index(*j, n, &what)?;
            check_index(*k, n, &what)?;
            check_scalar(&field, c, &what)?;
            let slot = comult[*i].entry((*j, *k)).or_insert_with(|| field.zero());
            *slot = &*slot + c;
        }
        let mut antipode = Matrix::zeros(&field, n, n);
        for (t, (i, j, c)) in data.antipode.iter().enumerate() {
            let what = format!("antipode entry {t}");
            check_index(*i, n, &what)?;
            check_index(*j, n, &what)?;
            check_scalar(&field, c, &what)?;
            let cur = antipode.get(*j, *i).clone();
            antipode.set(*j, *i, &cur + c);
        }
        let antipode_inv = antipode.inverse().ok_or(Error::SingularAntipode)?;
        Ok(HopfAlgebra {
            name: name.into(),
            field,
            labels: data.labels,
            mult: mult
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
            unit: data.unit,
            comult: comult
                .into_iter()
                .map(|m| {
                    m.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|((j, k), c)| (j, k, c))
                        .collect()
                })
                .collect(),
            counit: data.counit,
            antipode,
            antipode_inv,
        })
    }

    /// Dense constructor: `products[i * n + j] = e_i e_j`, `coproducts[i] = Δ(e_i)`
    /// as a flat tensor, and `antipode` with column `j` equal to `S(e_j)`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_dense(
        name: impl Into<String>,
        field: &Field,
        labels: Vec<String>,
        products: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
        coproducts: Vec<Vec<Scalar>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if products.len() != n * n || coproducts.len() != n {
            return Err(Error::Malformed("dense structure tensors have the wrong shape".into()));
        }
        let mut mult = Vec::new();
        for (ij, p) in products.into_iter().enumerate() {
            if p.len() != n {
                return Err(Error::Malformed("product vector has the wrong length".into()));
            }
            for (k, c) in sparsify(p) {
                mult.push((ij / n, ij % n, k, c));
            }
        }
        let mut comult = Vec::new();
        for (i, t) in coproducts.into_iter().enumerate() {
            if t.len() != n * n {
                return Err(Error::Malformed("coproduct tensor has the wrong length".into()));
            }
            for (jk, c) in sparsify(t) {
                comult.push((i, jk / n, jk % n, c));
            }
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Malformed("antipode matrix has the wrong shape".into()));
        }
        let mut s = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = antipode.get(j, i);
                if !c.is_zero() {
                    s.push((i, j, c.clone()));
                }
            }
        }
        HopfAlgebra::from_structure_constants(
            name,
            StructureConstants {
                field: field.clone(),
                labels,
                unit,
                counit,
                mult,
                comult,
                antipode: s,
            },
        )
    }

    pub fn to_structure_constants(&self) -> StructureConstants {
        let n = self.dim();
        let mut mult = Vec::new();
        for (ij, p) in self.mult.iter().enumerate() {
            for (k, c) in p {
                mult.push((ij / n, ij % n, *k, c.clone()));
            }
        }
        let mut comult = Vec::new();
        for (i, t) in self.comult.iter().enumerate() {
            for (j, k, c) in t {
                comult.push((i, *j, *k, c.clone()));
            }
        }
        let mut antipode = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.antipode.get(j, i);
                if !c.is_zero() {
                    antipode.push((i, j, c.clone()));
                }
            }
        }
        StructureConstants {
            field: self.field.clone(),
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            mult,
            comult,
            antipode,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse_matrix(&self) -> &Matrix {
        &self.antipode_inv
    }

    /// `e_i e_j`, sparse.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    /// `Δ(e_i)` as sparse triples.
    pub fn coproduct_of_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product_of_basis(i, j) {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_multiplication(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.multiply(x, &self.basis(j))).collect();
        Matrix::from_columns(&self.field, n, &cols).unwrap()
    }

    /// Matrix of `y -> y x`.
    pub fn right_multiplication(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.multiply(&self.basis(j), x)).collect();
        Matrix::from_columns(&self.field, n, &cols).unwrap()
    }

    pub fn comultiply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n * n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let idx = j * n + k;
                out[idx] = &out[idx] + &(a * c);
            }
        }
        out
    }

    /// `Δ^op`, the flip of `Δ`.
    pub fn comultiply_op(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n * n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let idx = k * n + j;
                out[idx] = &out[idx] + &(a * c);
            }
        }
        out
    }

    /// Matrix (`n^2 x n`) of `Δ`.
    pub fn comultiplication_matrix(&self) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.comultiply(&self.basis(j))).collect();
        Matrix::from_columns(&self.field, n * n, &cols).unwrap()
    }

    pub fn antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(x).expect("element length matches the dimension")
    }

    pub fn antipode_inverse(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.apply(x).expect("element length matches the dimension")
    }

    pub fn counit(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (a, e) in x.iter().zip(&self.counit) {
            if !a.is_zero() && !e.is_zero() {
                acc = &acc + &(a * e);
            }
        }
        acc
    }

    /// Product in `A ⊗ A`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_multiply(&self, t: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        self.tensor_multiply_order(t, u, 2)
    }

    /// Componentwise product in `A^{⊗order}`.
    pub fn tensor_multiply_order(&self, t: &[Scalar], u: &[Scalar], order: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n.pow(order as u32)];
        let tn: Vec<(Vec<usize>, &Scalar)> = t
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(p, s)| (unflatten(p, n, order), s))
            .collect();
        let un: Vec<(Vec<usize>, &Scalar)> = u
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(p, s)| (unflatten(p, n, order), s))
            .collect();
        for (ti, tc) in &tn {
            for (ui, uc) in &un {
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), *tc * *uc)];
                for leg in 0..order {
                    let prod = self.product_of_basis(ti[leg], ui[leg]);
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (k, pc) in prod {
                            let mut idx2 = idx.clone();
                            idx2.push(*k);
                            next.push((idx2, c * pc));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    let p = flatten(&idx, n);
                    out[p] = &out[p] + &c;
                }
            }
        }
        out
    }

    /// `1 ⊗ ... ⊗ 1` of the given order.
    pub fn unit_tensor(&self, order: usize) -> Vec<Scalar> {
        let mut t = vec![self.field.one()];
        for _ in 0..order {
            t = crate::linalg::tensor::outer(&t, &self.unit);
        }
        t
    }

    /// Iterated coproduct `Δ^{(parts-1)}(x)` as a sparse sum of basis tensors
    /// `x_(1) ⊗ ... ⊗ x_(parts)`.
    pub fn iterated_coproduct(&self, x: &[Scalar], parts: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(parts >= 1);
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                terms.insert(vec![i], a.clone());
            }
        }
        for _ in 1..parts {
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &terms {
                let last = *idx.last().unwrap();
                for (j, k, d) in &self.comult[last] {
                    let mut key = idx[..idx.len() - 1].to_vec();
                    key.push(*j);
                    key.push(*k);
                    let slot = next.entry(key).or_insert_with(|| self.field.zero());
                    *slot = &*slot + &(c * d);
                }
            }
            terms = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        terms.into_iter().collect()
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[i];
            if c.is_one() {
                parts.push(label.clone());
            } else {
                parts.push(format!("({c})*{label}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn format_tensor(&self, t: &[Scalar]) -> String {
        let n = self.dim();
        let mut parts = Vec::new();
        for (p, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (p / n, p % n);
            let pair = format!("{}⊗{}", self.labels[i], self.labels[j]);
            if c.is_one() {
                parts.push(pair);
            } else {
                parts.push(format!("({c})*{pair}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Whether the multiplication is commutative on basis pairs.
    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    /// Whether `Δ = Δ^op` on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis(i);
            self.comultiply(&b) == self.comultiply_op(&b)
        })
    }
}

/// Structural equality: same field, basis labels and structure constants.
impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.unit == other.unit
            && self.counit == other.counit
            && self.mult == other.mult
            && self.comult == other.comult
            && self.antipode == other.antipode
    }
}

impl fmt::Display for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name, self.dim(), self.field)
    }
}

/// An element tied to the algebra it lives in; binary operations check
/// that both operands come from the same algebra.
#[derive(Debug, Clone)]
pub struct Element<'a> {
    algebra: &'a HopfAlgebra,
    coeffs: Vec<Scalar>,
}

/// An element of `A ⊗ A`.
#[derive(Debug, Clone)]
pub struct Tensor2<'a> {
    algebra: &'a HopfAlgebra,
    coeffs: Vec<Scalar>,
}

impl<'a> Element<'a> {
    pub fn new(algebra: &'a HopfAlgebra, coeffs: Vec<Scalar>) -> Result<Self, Error> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::Malformed(format!(
                "element has {} coefficients, algebra dimension is {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        for c in &coeffs {
            check_scalar(algebra.field(), c, "element")?;
        }
        Ok(Element { algebra, coeffs })
    }

    pub fn basis(algebra: &'a HopfAlgebra, i: usize) -> Self {
        Element {
            algebra,
            coeffs: algebra.basis(i),
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn algebra(&self) -> &'a HopfAlgebra {
        self.algebra
    }

    fn check_same(&self, other: &Element<'_>) -> Result<(), Error> {
        if std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn mul(&self, other: &Element<'a>) -> Result<Element<'a>, Error> {
        self.check_same(other)?;
        Ok(Element {
            algebra: self.algebra,
            coeffs: self.algebra.multiply(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &Element<'a>) -> Result<Element<'a>, Error> {
        self.check_same(other)?;
        Ok(Element {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn comultiply(&self) -> Tensor2<'a> {
        Tensor2 {
            algebra: self.algebra,
            coeffs: self.algebra.comultiply(&self.coeffs),
        }
    }

    pub fn comultiply_op(&self) -> Tensor2<'a> {
        Tensor2 {
            algebra: self.algebra,
            coeffs: self.algebra.comultiply_op(&self.coeffs),
        }
    }

    pub fn antipode(&self) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coeffs: self.algebra.antipode(&self.coeffs),
        }
    }

    pub fn antipode_inverse(&self) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coeffs: self.algebra.antipode_inverse(&self.coeffs),
        }
    }

    pub fn counit(&self) -> Scalar {
        self.algebra.counit(&self.coeffs)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.check_same(other).is_ok() && self.coeffs == other.coeffs
    }
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.algebra.format_element(&self.coeffs))
    }
}

impl<'a> Tensor2<'a> {
    pub fn new(algebra: &'a HopfAlgebra, coeffs: Vec<Scalar>) -> Result<Self, Error> {
        let n = algebra.dim();
        if coeffs.len() != n * n {
            return Err(Error::Malformed(format!(
                "tensor has {} coefficients, expected {}",
                coeffs.len(),
                n * n
            )));
        }
        Ok(Tensor2 { algebra, coeffs })
    }

    /// `a ⊗ b`
    pub fn pure(a: &Element<'a>, b: &Element<'a>) -> Result<Self, Error> {
        a.check_same(b)?;
        Ok(Tensor2 {
            algebra: a.algebra,
            coeffs: crate::linalg::tensor::outer(&a.coeffs, &b.coeffs),
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn mul(&self, other: &Tensor2<'a>) -> Result<Tensor2<'a>, Error> {
        if !(std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Tensor2 {
            algebra: self.algebra,
            coeffs: self.algebra.tensor_multiply(&self.coeffs, &other.coeffs),
        })
    }
}

impl PartialEq for Tensor2<'_> {
    fn eq(&self, other: &Self) -> bool {
        (std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra)
            && self.coeffs == other.coeffs
    }
}

impl fmt::Display for Tensor2<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.algebra.format_tensor(&self.coeffs))
    }
}
