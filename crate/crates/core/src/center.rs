//! Algebra center, adjoint action, Hopf center and the central exact sequence.

use std::sync::Arc;

use crate::certificate::{Certificate, Check};
use crate::hopf::{
    check_hopf_ideal, check_hopf_subalgebra, left_ideal, quotient_hopf, sub_hopf, two_sided_ideal, Element,
    HopfAlgebra, Quotient, SparseVec, SubAlgebra, Terms,
};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::sequence::{
    counit_kernel, freeness_certificate, is_normal, ExactSequence, FreenessCertificate, FreenessFailure,
    DEFAULT_FREENESS_BUDGET,
};
use crate::sparse;
use crate::Error;

/// `Ad_x(y) = x_(1) y S(x_(2))`
pub fn adjoint_vector(h: &HopfAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let s = h.antipode_columns();
    let ys = sparse::sparsify(y);
    let mut acc = h.zero();
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, k, c) in h.coproduct_of_basis(i) {
            let term = sparse::mul3(h, &sparse::unit_vec(h, *j), &ys, &s[*k]);
            sparse::add_scaled(&mut acc, &(a * c), &term);
        }
    }
    acc
}

pub fn adjoint_action<'a>(x: &Element<'a>, y: &Element<'a>) -> Result<Element<'a>, Error> {
    let h = x.algebra();
    if !(std::ptr::eq(h, y.algebra()) || h == y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Element::new(h, adjoint_vector(h, x.coeffs(), y.coeffs()))
}

/// Matrix of `y -> Ad_x(y)`.
pub fn adjoint_matrix(h: &HopfAlgebra, x: &[Scalar]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..h.dim()).map(|j| adjoint_vector(h, x, &h.basis(j))).collect();
    Matrix::from_columns(h.field(), h.dim(), &cols).unwrap()
}

/// Sparse columns `Ad_{e_i}(e_j)` for all `i, j`, indexed `[i][j]`.
pub(crate) fn adjoint_table(h: &HopfAlgebra) -> Vec<Vec<SparseVec>> {
    let s = h.antipode_columns();
    (0..h.dim())
        .map(|i| {
            (0..h.dim())
                .map(|j| {
                    let mut acc = h.zero();
                    for (a, b, c) in h.coproduct_of_basis(i) {
                        let term = sparse::mul3(h, &sparse::unit_vec(h, *a), &sparse::unit_vec(h, j), &s[*b]);
                        sparse::add_scaled(&mut acc, c, &term);
                    }
                    sparse::sparsify(&acc)
                })
                .collect()
        })
        .collect()
}

/// `{x : x e_i = e_i x for all i}`
pub fn commutant_center(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let e = h.basis(i);
        let diff = h.left_multiplication(&e).sub(&h.right_multiplication(&e)).unwrap();
        rows.extend(diff.row_vectors());
    }
    Matrix::from_rows(h.field(), n, rows).unwrap().kernel()
}

/// `{x : Ad_{e_i}(x) = ε(e_i) x for all i}`
pub fn adjoint_invariant_center(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    let table = adjoint_table(h);
    let mut rows = Vec::with_capacity(n * n);
    for (i, cols) in table.iter().enumerate() {
        let mut m = Matrix::identity(h.field(), n).scale(&-&h.counit_vector()[i]);
        for (j, col) in cols.iter().enumerate() {
            for (r, c) in col {
                let cur = m.get(*r, j).clone();
                m.set(*r, j, &cur + c);
            }
        }
        rows.extend(m.row_vectors());
    }
    Matrix::from_rows(h.field(), n, rows).unwrap().kernel()
}

/// `Z(A)`, computed as a commutant and cross-checked against the
/// adjoint-invariant description.
pub fn algebra_center(h: &HopfAlgebra) -> Result<Subspace, Error> {
    let z = commutant_center(h);
    if z != adjoint_invariant_center(h) {
        return Err(Error::Inconsistent(
            "commutant and Ad-invariant descriptions of the center differ".into(),
        ));
    }
    Ok(z)
}

/// The three linear descriptions of the Hopf center, computed independently.
#[derive(Debug, Clone)]
pub struct HopfCenterCharacterizations {
    pub center: Subspace,
    /// `M_R = {x : Δx ∈ A⊗Z}`
    pub right: Subspace,
    /// `M_L = {x : Δx ∈ Z⊗A}`
    pub left: Subspace,
    /// `M_Z = {x ∈ Z : Δx ∈ Z⊗Z}`
    pub central: Subspace,
}

impl HopfCenterCharacterizations {
    pub fn agree(&self) -> bool {
        self.right == self.left && self.right == self.central
    }
}

/// `{x : (Q⊗id)Δx = 0}` (on the left leg) or `{x : (id⊗Q)Δx = 0}`, where `Q`
/// is the projection onto `A/Z`.
fn coproduct_leg_kernel(h: &HopfAlgebra, z: &Subspace, left: bool) -> Subspace {
    let n = h.dim();
    if z.is_full() {
        return Subspace::full(h.field(), n);
    }
    let q = z.quotient_matrix();
    let m = q.rows();
    let qcols: Vec<Vec<Scalar>> = (0..n).map(|j| q.column(j)).collect();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![h.field().zero(); n * m];
        for (j, k, c) in h.coproduct_of_basis(i) {
            if left {
                for (t, qv) in qcols[*j].iter().enumerate() {
                    if !qv.is_zero() {
                        let p = t * n + k;
                        v[p] = &v[p] + &(c * qv);
                    }
                }
            } else {
                for (t, qv) in qcols[*k].iter().enumerate() {
                    if !qv.is_zero() {
                        let p = j * m + t;
                        v[p] = &v[p] + &(c * qv);
                    }
                }
            }
        }
        cols.push(v);
    }
    Matrix::from_columns(h.field(), n * m, &cols).unwrap().kernel()
}

/// `{x ∈ Z : Δx ∈ Z⊗Z}` using that the Kronecker square of a reduced echelon
/// basis is again reduced, so membership in `Z⊗Z` is read off at pivot pairs.
fn central_coproduct_subspace(h: &HopfAlgebra, z: &Subspace) -> Subspace {
    let n = h.dim();
    let basis = z.basis();
    let piv = z.pivots();
    let mut residuals = Vec::with_capacity(basis.len());
    for v in basis {
        let d = h.comultiply(v);
        let mut r = d.clone();
        for (a, za) in basis.iter().enumerate() {
            for (b, zb) in basis.iter().enumerate() {
                let coeff = &d[piv[a] * n + piv[b]];
                if coeff.is_zero() {
                    continue;
                }
                for (s, x) in za.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let cx = coeff * x;
                    for (t, y) in zb.iter().enumerate() {
                        if !y.is_zero() {
                            let p = s * n + t;
                            r[p] = &r[p] - &(&cx * y);
                        }
                    }
                }
            }
        }
        residuals.push(r);
    }
    if basis.is_empty() {
        return z.clone();
    }
    let coeffs = Matrix::from_columns(h.field(), n * n, &residuals).unwrap().kernel();
    let vecs: Vec<Vec<Scalar>> = coeffs.basis().iter().map(|t| z.combine(t)).collect();
    Subspace::span(h.field(), n, vecs).unwrap()
}

pub fn hopf_center_characterizations(h: &HopfAlgebra) -> Result<HopfCenterCharacterizations, Error> {
    let center = algebra_center(h)?;
    Ok(HopfCenterCharacterizations {
        right: coproduct_leg_kernel(h, &center, false),
        left: coproduct_leg_kernel(h, &center, true),
        central: central_coproduct_subspace(h, &center),
        center,
    })
}

/// The Hopf center with its certificate.
#[derive(Debug, Clone)]
pub struct HopfCenter {
    pub subspace: Subspace,
    pub characterizations: HopfCenterCharacterizations,
    pub certificate: Certificate,
}

impl HopfCenter {
    pub fn center(&self) -> &Subspace {
        &self.characterizations.center
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// `HZ(A) = {x : Δx ∈ A⊗Z(A)}`, certified to agree with the left-handed and
/// central descriptions and to be a Hopf subalgebra of `Z(A)`.
pub fn hopf_center(h: &HopfAlgebra) -> Result<HopfCenter, Error> {
    let ch = hopf_center_characterizations(h)?;
    if !ch.agree() {
        return Err(Error::Inconsistent(format!(
            "Hopf center descriptions differ: dim M_R = {}, dim M_L = {}, dim M_Z = {}",
            ch.right.dim(),
            ch.left.dim(),
            ch.central.dim()
        )));
    }
    let m = ch.right.clone();
    let mut certificate = Certificate::new();
    certificate.push(Check::pass("left_equals_right"));
    certificate.push(Check::pass("central_equals_right"));
    certificate.push(Check::from_bool(
        "contained_in_center",
        ch.center.contains_subspace(&m).unwrap(),
    ));
    certificate.extend_prefixed("hopf_subalgebra", check_hopf_subalgebra(h, &m));
    Ok(HopfCenter {
        subspace: m,
        characterizations: ch,
        certificate,
    })
}

/// `Ad_x(yz) = Ad_{x_(1)}(y) Ad_{x_(2)}(z)` on all basis triples.
pub fn leibniz_check(h: &HopfAlgebra) -> Check {
    let n = h.dim();
    let table = adjoint_table(h);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let yz = h.product_of_basis(y, z);
                let mut lhs = h.zero();
                for (k, c) in yz {
                    sparse::add_scaled(&mut lhs, c, &table[x][*k]);
                }
                let mut rhs = h.zero();
                for (a, b, c) in h.coproduct_of_basis(x) {
                    sparse::add_scaled(&mut rhs, c, &sparse::mul(h, &table[*a][y], &table[*b][z]));
                }
                if lhs != rhs {
                    return Check::fail("leibniz", vec![x, y, z], "Ad_x(yz) != Ad_{x1}(y) Ad_{x2}(z)");
                }
            }
        }
    }
    Check::pass("leibniz")
}

/// `Ad_{xy} = Ad_x ∘ Ad_y` on all basis triples.
pub fn adjoint_composition_check(h: &HopfAlgebra) -> Check {
    let n = h.dim();
    let table = adjoint_table(h);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut lhs = h.zero();
                for (k, c) in h.product_of_basis(x, y) {
                    sparse::add_scaled(&mut lhs, c, &table[*k][z]);
                }
                let mut rhs = h.zero();
                for (k, c) in &table[y][z] {
                    sparse::add_scaled(&mut rhs, c, &table[x][*k]);
                }
                if lhs != rhs {
                    return Check::fail("adjoint_composition", vec![x, y, z], "Ad_{xy}(z) != Ad_x(Ad_y(z))");
                }
            }
        }
    }
    Check::pass("adjoint_composition")
}

/// `Δ(Ad_x(y)) = x_(1) y_(1) S(x_(4)) ⊗ Ad_{x_(2)}(y_(2))` on all basis pairs.
pub fn adjoint_coproduct_check(h: &HopfAlgebra) -> Check {
    let n = h.dim();
    let s = h.antipode_columns();
    let table = adjoint_table(h);
    for x in 0..n {
        let d3 = h.iterated_coproduct(&h.basis(x), 4);
        for y in 0..n {
            let mut lhs = vec![h.field().zero(); n * n];
            for (k, c) in &table[x][y] {
                for (a, b, d) in h.coproduct_of_basis(*k) {
                    let p = a * n + b;
                    lhs[p] = &lhs[p] + &(c * d);
                }
            }
            let mut rhs = vec![h.field().zero(); n * n];
            for (y1, y2, cy) in h.coproduct_of_basis(y) {
                let y1 = sparse::unit_vec(h, *y1);
                let y2 = sparse::unit_vec(h, *y2);
                for (key, cx) in &d3 {
                    let left = sparse::mul3(h, &sparse::unit_vec(h, key[0]), &y1, &s[key[3]]);
                    if left.is_empty() {
                        continue;
                    }
                    let right = sparse::mul3(h, &sparse::unit_vec(h, key[1]), &y2, &s[key[2]]);
                    sparse::add_outer(&mut rhs, n, &(cx * cy), &left, &right);
                }
            }
            if lhs != rhs {
                return Check::fail(
                    "adjoint_coproduct",
                    vec![x, y],
                    "Δ(Ad_x(y)) != x1 y1 S(x4) ⊗ Ad_{x2}(y2)",
                );
            }
        }
    }
    Check::pass("adjoint_coproduct")
}

/// A right coaction `ρ: V -> V⊗A` corestricted to `V⊗HZ(A)`.
#[derive(Debug, Clone)]
pub struct Corestriction {
    pub hopf_center: Subspace,
    /// `dim V · dim HZ x dim V`, second leg in the reduced basis of `HZ(A)`.
    pub matrix: Matrix,
}

/// Verifies that `rho` (`dim V · dim A x dim V`, index `v·n + a`) is a right
/// coaction with image in `V⊗Z(A)` and re-expresses it in `V⊗HZ(A)`.
pub fn corestrict_comodule(h: &HopfAlgebra, rho: &Matrix) -> Result<Corestriction, Error> {
    let n = h.dim();
    if rho.rows() % n != 0 || rho.rows() / n != rho.cols() {
        return Err(Error::InvalidParameter(format!(
            "coaction matrix is {}x{}, expected (d·{n})xd",
            rho.rows(),
            rho.cols()
        )));
    }
    let d = rho.cols();
    let f = h.field();
    let cols: Vec<Terms> = (0..d)
        .map(|j| {
            let mut t = Terms::new(f);
            for (p, c) in rho.column(j).into_iter().enumerate() {
                t.add(vec![p / n, p % n], c);
            }
            t
        })
        .collect();
    for (j, col) in cols.iter().enumerate() {
        // (ρ⊗id)ρ = (id⊗Δ)ρ and (id⊗ε)ρ = id
        let mut lhs = Terms::new(f);
        let mut rhs = Terms::new(f);
        let mut counit = Terms::new(f);
        for (k, c) in col.iter() {
            for (k2, c2) in cols[k[0]].iter() {
                lhs.add(vec![k2[0], k2[1], k[1]], c * c2);
            }
            for (a, b, c2) in h.coproduct_of_basis(k[1]) {
                rhs.add(vec![k[0], *a, *b], c * c2);
            }
            counit.add(vec![k[0]], c * &h.counit_vector()[k[1]]);
        }
        let mut id = Terms::new(f);
        id.add(vec![j], f.one());
        if lhs != rhs || counit != id {
            return Err(Error::Hypothesis(format!("ρ is not a right coaction at v_{j}")));
        }
    }
    let hz = hopf_center(h)?;
    let z = hz.center();
    for j in 0..cols.len() {
        for v in 0..d {
            let leg: Vec<Scalar> = (0..n).map(|a| rho.get(v * n + a, j).clone()).collect();
            if !z.contains(&leg).unwrap() {
                return Err(Error::Hypothesis(format!(
                    "ρ(v_{j}) has second leg {} at v_{v}, outside Z(A)",
                    h.format_element(&leg)
                )));
            }
        }
    }
    let m = hz.subspace.dim();
    let mut out = Matrix::zeros(f, d * m, d);
    for j in 0..d {
        for v in 0..d {
            let leg: Vec<Scalar> = (0..n).map(|a| rho.get(v * n + a, j).clone()).collect();
            let coords = hz.subspace.coordinates(&leg).unwrap().ok_or_else(|| {
                Error::Inconsistent(format!("second leg {} is central but not in HZ(A)", h.format_element(&leg)))
            })?;
            for (t, c) in coords.into_iter().enumerate() {
                out.set(v * m + t, j, c);
            }
        }
    }
    Ok(Corestriction {
        hopf_center: hz.subspace,
        matrix: out,
    })
}

/// `k -> HZ(A) -> A -> B -> k` with all certificates.
#[derive(Debug, Clone)]
pub struct CentralReport {
    pub hopf_center: HopfCenter,
    /// `A·HZ(A)⁺`
    pub ideal: Subspace,
    pub sub: SubAlgebra,
    pub quotient: Quotient,
    pub sequence: ExactSequence,
    pub freeness: Result<FreenessCertificate, FreenessFailure>,
    pub normal: bool,
    pub certificate: Certificate,
}

impl CentralReport {
    pub fn center(&self) -> &Subspace {
        self.hopf_center.center()
    }
}

pub fn central_sequence(h: &Arc<HopfAlgebra>) -> Result<CentralReport, Error> {
    central_sequence_with_budget(h, DEFAULT_FREENESS_BUDGET)
}

pub fn central_sequence_with_budget(h: &Arc<HopfAlgebra>, budget: u64) -> Result<CentralReport, Error> {
    let hz = hopf_center(h)?;
    let mut certificate = Certificate::new();
    certificate.extend_prefixed("hopf_center", hz.certificate.clone());

    let plus = hz.subspace.intersection(&counit_kernel(h)).unwrap();
    let one_sided = left_ideal(h, &plus);
    let two_sided = two_sided_ideal(h, &plus);
    certificate.push(Check::from_bool("ideal_one_sided_equals_two_sided", one_sided == two_sided));
    certificate.extend_prefixed("hopf_ideal", check_hopf_ideal(h, &two_sided));

    let quotient = quotient_hopf(h, &two_sided)?;
    let sub = sub_hopf(h, &hz.subspace)?;
    let sequence = ExactSequence::new(sub.inclusion.clone(), quotient.projection.clone());
    certificate.extend_prefixed("exact", sequence.certificate.clone());

    let normal = is_normal(&quotient.projection);
    certificate.push(Check::from_bool("normal", normal));

    let freeness = freeness_certificate(h, &hz.subspace, budget);
    certificate.push(match &freeness {
        Ok(cert) => Check::from_bool(
            "freeness",
            cert.verify(h) && hz.dim() * quotient.algebra.dim() == h.dim() && cert.rank() == quotient.algebra.dim(),
        ),
        Err(e) => Check::fail("freeness", vec![], format!("{e:?}")),
    });

    Ok(CentralReport {
        hopf_center: hz,
        ideal: two_sided,
        sub,
        quotient,
        sequence,
        freeness,
        normal,
        certificate,
    })
}
