use std::sync::Arc;

use crate::certificate::{Certificate, Check};
use crate::hopf::{sparse_columns, HopfAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::Error;

/// A linear map between Hopf algebras; `matrix` is `target.dim() x source.dim()`.
#[derive(Debug, Clone)]
pub struct HopfMorphism {
    source: Arc<HopfAlgebra>,
    target: Arc<HopfAlgebra>,
    matrix: Matrix,
}

impl HopfMorphism {
    /// Builds the morphism and certifies all five structure identities.
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Matrix) -> Result<Self, Error> {
        let f = HopfMorphism::unchecked(source, target, matrix)?;
        let cert = f.verify();
        if let Some(fail) = cert.failures().next() {
            return Err(Error::Axiom(format!(
                "not a Hopf morphism: {} fails at {:?}",
                fail.name,
                fail.witness.clone().unwrap_or_default()
            )));
        }
        Ok(f)
    }

    /// Checks only the matrix shape.
    pub fn unchecked(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Matrix) -> Result<Self, Error> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Malformed(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(HopfMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let m = Matrix::identity(h.field(), h.dim());
        HopfMorphism {
            source: h.clone(),
            target: h,
            matrix: m,
        }
    }

    pub fn source(&self) -> &Arc<HopfAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HopfAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x).expect("element of the source algebra")
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &HopfMorphism) -> Result<HopfMorphism, Error> {
        if *other.target != *self.source {
            return Err(Error::AlgebraMismatch);
        }
        Ok(HopfMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn verify(&self) -> Certificate {
        verify_morphism(&self.source, &self.target, &self.matrix)
    }
}

/// Checks multiplicativity, unitality, comultiplicativity, counitality and
/// compatibility with the antipodes on basis elements (pairs).
pub fn verify_morphism(source: &HopfAlgebra, target: &HopfAlgebra, f: &Matrix) -> Certificate {
    let mut cert = Certificate::new();
    if f.rows() != target.dim() || f.cols() != source.dim() {
        cert.push(Check::fail("shape", vec![f.rows(), f.cols()], "matrix shape mismatch"));
        return cert;
    }
    let n = source.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| f.column(i)).collect();

    let mut failure = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&source.multiply(&source.basis(i), &source.basis(j))).unwrap();
            if lhs != target.multiply(&images[i], &images[j]) {
                failure = Some((vec![i, j], "f(e_i e_j) != f(e_i) f(e_j)".to_string()));
                break 'outer;
            }
        }
    }
    cert.push(Check::from_search("multiplicative", failure));

    let unital = f.apply(source.unit()).unwrap() == target.unit();
    cert.push(if unital {
        Check::pass("unital")
    } else {
        Check::fail("unital", vec![], "f(1) != 1")
    });

    let cols = sparse_columns(f);
    let mut failure = None;
    for i in 0..n {
        let d = source.comultiply_terms(&source.basis(i));
        let lhs = target.map_leg(&target.map_leg(&d, 0, &cols), 1, &cols);
        let rhs = target.comultiply_terms(&images[i]);
        if lhs != rhs {
            failure = Some((vec![i], "(f⊗f)Δ(e_i) != Δ(f(e_i))".to_string()));
            break;
        }
    }
    cert.push(Check::from_search("comultiplicative", failure));

    let failure = (0..n)
        .find(|&i| target.counit(&images[i]) != source.counit_vector()[i])
        .map(|i| (vec![i], "ε(f(e_i)) != ε(e_i)".to_string()));
    cert.push(Check::from_search("counital", failure));

    let failure = (0..n)
        .find(|&i| f.apply(&source.antipode(&source.basis(i))).unwrap() != target.antipode(&images[i]))
        .map(|i| (vec![i], "f(S(e_i)) != S(f(e_i))".to_string()));
    cert.push(Check::from_search("antipode", failure));
    cert
}
