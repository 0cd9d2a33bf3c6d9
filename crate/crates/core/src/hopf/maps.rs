//! Convolution on `Hom(A, B)` and the multiplicative operator `W` on `A⊗A`.

use crate::certificate::{Certificate, Check};
use crate::hopf::{HopfAlgebra, Terms};
use crate::linalg::tensor::flatten;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Error;

/// `(f*g)(x) = f(x_(1))·g(x_(2))` for linear maps `f, g: A -> B`, given as
/// `dim B x dim A` matrices. `Δ` is taken from `source`, products from `target`.
pub fn convolution(source: &HopfAlgebra, target: &HopfAlgebra, f: &Matrix, g: &Matrix) -> Result<Matrix, Error> {
    check_shape(source, target, f)?;
    check_shape(source, target, g)?;
    let n = source.dim();
    let fcols: Vec<Vec<Scalar>> = (0..n).map(|j| f.column(j)).collect();
    let gcols: Vec<Vec<Scalar>> = (0..n).map(|j| g.column(j)).collect();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = target.zero();
        for (j, k, c) in source.coproduct_of_basis(i) {
            let prod = target.multiply(&fcols[*j], &gcols[*k]);
            for (slot, p) in acc.iter_mut().zip(prod) {
                if !p.is_zero() {
                    *slot = &*slot + &(c * &p);
                }
            }
        }
        cols.push(acc);
    }
    Ok(Matrix::from_columns(source.field(), target.dim(), &cols)?)
}

/// The convolution unit `x -> ε(x)1`.
pub fn convolution_unit(source: &HopfAlgebra, target: &HopfAlgebra) -> Matrix {
    let cols: Vec<Vec<Scalar>> = source
        .counit_vector()
        .iter()
        .map(|e| target.unit().iter().map(|u| e * u).collect())
        .collect();
    Matrix::from_columns(source.field(), target.dim(), &cols).unwrap()
}

/// Solves `f*g = ε1` for `g` and confirms `g*f = ε1`.
pub fn convolution_inverse(source: &HopfAlgebra, target: &HopfAlgebra, f: &Matrix) -> Result<Matrix, Error> {
    check_shape(source, target, f)?;
    let (n, m) = (source.dim(), target.dim());
    let field = source.field();
    let fcols: Vec<Vec<Scalar>> = (0..n).map(|j| f.column(j)).collect();
    // unknown g[r][k] sits at column r * n + k; equation (i, t) at row i * m + t
    let mut system = Matrix::zeros(field, n * m, m * n);
    for i in 0..n {
        for (j, k, c) in source.coproduct_of_basis(i) {
            for r in 0..m {
                let prod = target.multiply(&fcols[*j], &target.basis(r));
                for (t, p) in prod.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let (row, col) = (i * m + t, r * n + k);
                    let cur = system.get(row, col).clone();
                    system.set(row, col, &cur + &(c * p));
                }
            }
        }
    }
    let unit = convolution_unit(source, target);
    let mut rhs = Vec::with_capacity(n * m);
    for i in 0..n {
        rhs.extend(unit.column(i));
    }
    let solution = system
        .solve(&rhs)?
        .ok_or_else(|| Error::NotInvertible("f*g = ε1 has no solution".into()))?;
    let mut g = Matrix::zeros(field, m, n);
    for r in 0..m {
        for k in 0..n {
            g.set(r, k, solution[r * n + k].clone());
        }
    }
    if convolution(source, target, &g, f)? != unit {
        return Err(Error::NotInvertible("g*f != ε1 for the right inverse".into()));
    }
    Ok(g)
}

fn check_shape(source: &HopfAlgebra, target: &HopfAlgebra, f: &Matrix) -> Result<(), Error> {
    if f.rows() != target.dim() || f.cols() != source.dim() {
        return Err(Error::Linalg(crate::linalg::LinalgError::DimensionMismatch {
            expected: target.dim() * source.dim(),
            found: f.rows() * f.cols(),
        }));
    }
    Ok(())
}

/// `W(a⊗a') = a_(1)⊗a_(2)a'` with `W⁻¹(a⊗a') = a_(1)⊗S(a_(2))a'`, stored
/// by sparse columns indexed by the flat position `i·n + j`.
#[derive(Debug, Clone)]
pub struct WOperator {
    n: usize,
    columns: Vec<Vec<(usize, Scalar)>>,
    inverse_columns: Vec<Vec<(usize, Scalar)>>,
    pub certificate: Certificate,
}

impl WOperator {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> Matrix {
        dense(&self.columns, self.n * self.n)
    }

    pub fn inverse_matrix(&self) -> Matrix {
        dense(&self.inverse_columns, self.n * self.n)
    }

    pub fn apply(&self, t: &[Scalar]) -> Vec<Scalar> {
        apply_flat(&self.columns, t)
    }

    pub fn apply_inverse(&self, t: &[Scalar]) -> Vec<Scalar> {
        apply_flat(&self.inverse_columns, t)
    }
}

fn dense(cols: &[Vec<(usize, Scalar)>], size: usize) -> Matrix {
    let field = cols
        .iter()
        .flatten()
        .next()
        .map(|(_, s)| s.field())
        .unwrap_or_else(crate::scalar::Field::rationals);
    let mut m = Matrix::zeros(&field, size, size);
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col {
            m.set(*r, c, v.clone());
        }
    }
    m
}

fn apply_flat(cols: &[Vec<(usize, Scalar)>], t: &[Scalar]) -> Vec<Scalar> {
    let field = t.first().map(Scalar::field).unwrap_or_else(crate::scalar::Field::rationals);
    let mut out = vec![field.zero(); t.len()];
    for (c, x) in t.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (r, v) in &cols[c] {
            out[*r] = &out[*r] + &(x * v);
        }
    }
    out
}

/// Applies a map on `A⊗A` (sparse columns) to legs `(l1, l2)` of every term.
fn apply_pair(cols: &[Vec<(usize, Scalar)>], t: &Terms, l1: usize, l2: usize, n: usize, field: &crate::scalar::Field) -> Terms {
    let mut out = Terms::new(field);
    for (k, v) in t.iter() {
        for (r, c) in &cols[flatten(&[k[l1], k[l2]], n)] {
            let mut key = k.clone();
            key[l1] = r / n;
            key[l2] = r % n;
            out.add(key, v * c);
        }
    }
    out
}

/// Builds `W` and `W⁻¹`, certifies the inverse formula on all basis tensors and,
/// when `pentagon` is set, `W23 W12 W23⁻¹ = W12 W13` on all basis triples.
pub fn w_operator(h: &HopfAlgebra, pentagon: bool) -> WOperator {
    let n = h.dim();
    let s = h.antipode_columns();
    let mut columns = Vec::with_capacity(n * n);
    let mut inverse_columns = Vec::with_capacity(n * n);
    for a in 0..n {
        let d = h.comultiply_terms(&h.basis(a));
        let sd = h.map_leg(&d, 1, &s);
        for b in 0..n {
            for (src, dst) in [(&d, &mut columns), (&sd, &mut inverse_columns)] {
                let mut col = Terms::new(h.field());
                for (k, c) in src.iter() {
                    for (p, pc) in h.product_of_basis(k[1], b) {
                        col.add(vec![k[0], *p], c * pc);
                    }
                }
                dst.push(col.iter().map(|(k, v)| (flatten(k, n), v.clone())).collect());
            }
        }
    }
    let mut op = WOperator {
        n,
        columns,
        inverse_columns,
        certificate: Certificate::new(),
    };
    let mut failure = None;
    for p in 0..n * n {
        let e = basis_flat(h, n * n, p);
        if op.apply(&op.apply_inverse(&e)) != e || op.apply_inverse(&op.apply(&e)) != e {
            failure = Some((vec![p / n, p % n], "W W⁻¹ != id on e_i⊗e_j".to_string()));
            break;
        }
    }
    op.certificate.push(Check::from_search("inverse_formula", failure));
    if pentagon {
        op.certificate.push(pentagon_check(h, &op));
    }
    op
}

fn basis_flat(h: &HopfAlgebra, size: usize, p: usize) -> Vec<Scalar> {
    let mut e = vec![h.field().zero(); size];
    e[p] = h.field().one();
    e
}

/// `W23 W12 W23⁻¹ = W12 W13` on every basis triple.
pub fn pentagon_check(h: &HopfAlgebra, w: &WOperator) -> Check {
    let n = h.dim();
    let f = h.field();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut x = Terms::new(f);
                x.add(vec![a, b, c], f.one());
                let lhs = apply_pair(
                    &w.columns,
                    &apply_pair(&w.columns, &apply_pair(&w.inverse_columns, &x, 1, 2, n, f), 0, 1, n, f),
                    1,
                    2,
                    n,
                    f,
                );
                let rhs = apply_pair(&w.columns, &apply_pair(&w.columns, &x, 0, 2, n, f), 0, 1, n, f);
                if lhs != rhs {
                    return Check::fail("pentagon", vec![a, b, c], "W23 W12 W23⁻¹ != W12 W13");
                }
            }
        }
    }
    Check::pass("pentagon")
}

/// Dense `n^2 x n^2` left multiplication by `t` in `A⊗A`.
pub(crate) fn tensor_left_multiplication(h: &HopfAlgebra, t: &[Scalar]) -> Matrix {
    let n = h.dim();
    let tt = Terms::from_flat(t, n, 2);
    let mut m = Matrix::zeros(h.field(), n * n, n * n);
    for col in 0..n * n {
        let mut e = Terms::new(h.field());
        e.add(vec![col / n, col % n], h.field().one());
        for (k, v) in h.multiply_terms(&tt, &e).iter() {
            m.set(flatten(k, n), col, v.clone());
        }
    }
    m
}

/// Two-sided inverse of `t` in `A⊗A`, if any.
pub fn tensor_inverse(h: &HopfAlgebra, t: &[Scalar]) -> Option<Vec<Scalar>> {
    let one = h.unit_tensor(2);
    let inv = tensor_left_multiplication(h, t).solve(&one).ok()??;
    (h.tensor_multiply(&inv, t) == one).then_some(inv)
}

/// Two-sided inverse of `x` in `A`, if any.
pub fn element_inverse(h: &HopfAlgebra, x: &[Scalar]) -> Option<Vec<Scalar>> {
    let inv = h.left_multiplication(x).solve(h.unit()).ok()??;
    (h.multiply(&inv, x) == h.unit()).then_some(inv)
}
