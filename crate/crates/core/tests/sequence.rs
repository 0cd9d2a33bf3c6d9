mod common;

use std::sync::Arc;

use common::*;
use hopfkit::center::{central_sequence, hopf_center};
use hopfkit::hopf::{group_algebra, sub_hopf, sweedler_h4, trivial, Group, HopfAlgebra};
use hopfkit::sequence::*;
use hopfkit::{Matrix, Subspace};

fn unit_map(h: &Arc<HopfAlgebra>) -> HopfMorphism {
    let k = Arc::new(trivial(h.field()));
    let m = Matrix::from_columns(h.field(), h.dim(), &[h.unit().to_vec()]).unwrap();
    HopfMorphism::new(k, h.clone(), m).unwrap()
}

fn counit_map(h: &Arc<HopfAlgebra>) -> HopfMorphism {
    let k = Arc::new(trivial(h.field()));
    let m = Matrix::from_rows(h.field(), h.dim(), vec![h.counit_vector().to_vec()]).unwrap();
    HopfMorphism::new(h.clone(), k, m).unwrap()
}

#[test]
fn morphism_examples() {
    let h = Arc::new(group_algebra(&Group::cyclic(2).unwrap(), &q()));
    assert!(verify_morphism(&h, &h, &Matrix::identity(&q(), 2)).all_passed());
    assert!(counit_map(&h).verify().all_passed());
    let swap = Matrix::from_rows(&q(), 2, vec![vec![q().zero(), q().one()], vec![q().one(), q().zero()]]).unwrap();
    let cert = verify_morphism(&h, &h, &swap);
    assert!(!cert.passed("unital"));
    assert!(HopfMorphism::new(h.clone(), h.clone(), swap).is_err());
}

#[test]
fn exactness_examples() {
    let g = Group::quaternion();
    let h = Arc::new(group_algebra(&g, &q()));
    let rep = central_sequence(&h).unwrap();
    let seq = ExactSequence::new(rep.sub.inclusion.clone(), rep.quotient.projection.clone());
    assert!(seq.is_exact());

    let id = ExactSequence::new(unit_map(&h), HopfMorphism::identity(h.clone()));
    assert!(id.is_exact(), "{:?}", id.certificate);

    let bad = ExactSequence::new(unit_map(&h), counit_map(&h));
    assert!(!bad.certificate.passed("kernel_is_ideal"));
    assert!(bad.certificate.get("kernel_is_ideal").unwrap().witness.is_some());
    assert!(bad.certificate.passed("injective"));
    assert!(bad.certificate.passed("surjective"));
}

#[test]
fn normality() {
    for h in small_builtins() {
        assert!(is_normal(&HopfMorphism::identity(h.clone())));
    }
    let s3 = Arc::new(group_algebra(&Group::symmetric3(), &q()));
    let eps = counit_map(&s3);
    let left = hopf_kernel_left(&eps);
    let right = hopf_kernel_right(&eps);
    assert!(left.is_full() && right.is_full());
    assert!(is_normal(&eps));
}

#[test]
fn cokernels() {
    let g = Group::quaternion();
    let h = Arc::new(group_algebra(&g, &q()));
    let z = span_of_basis(&q(), 8, &group_center(&g));
    let sub = sub_hopf(&h, &z).unwrap();
    let cok = hopf_cokernel(&sub.inclusion).unwrap();
    assert_eq!(cok.algebra.dim(), cosets(&g, &group_center(&g)).len());
    assert!(cok.algebra.is_commutative());

    let k = hopf_cokernel(&unit_map(&h)).unwrap();
    assert_eq!(k.algebra.dim(), 8);

    let u = uq();
    let hz = hopf_center(&u).unwrap().subspace;
    let sub = sub_hopf(&u, &hz).unwrap();
    assert_eq!(hopf_cokernel(&sub.inclusion).unwrap().algebra.dim(), 27);

    // span{1, (12)} in k[S3] is a Hopf subalgebra but not ad-stable
    let s3 = Arc::new(group_algebra(&Group::symmetric3(), &q()));
    let sub = sub_hopf(&s3, &span_of_basis(&q(), 6, &[0, 1])).unwrap();
    assert!(hopf_cokernel(&sub.inclusion).is_err());
}

#[test]
fn cokernel_round_trip_reproduces_b() {
    for h in small_builtins() {
        let rep = central_sequence(&h).unwrap();
        let iso = cokernel_round_trip(&rep.sequence).unwrap();
        assert!(iso.verify().all_passed());
    }
}

#[test]
fn freeness_examples() {
    let h4 = sweedler_h4(&q());
    let full = Subspace::full(&q(), 4);
    let c = freeness_certificate(&h4, &full, DEFAULT_FREENESS_BUDGET).unwrap();
    assert_eq!(c.rank(), 1);
    assert_eq!(c.cofactors, vec![h4.unit().to_vec()]);

    let sub = span_of_basis(&q(), 4, &[0, 1]);
    let c = freeness_certificate(&h4, &sub, DEFAULT_FREENESS_BUDGET).unwrap();
    assert_eq!(c.cofactors, vec![h4.basis(0), h4.basis(2)]);
    assert!(c.verify(&h4));

    let three = span_of_basis(&q(), 4, &[0, 1, 2]);
    assert!(matches!(
        freeness_certificate(&h4, &three, DEFAULT_FREENESS_BUDGET),
        Err(FreenessFailure::DimensionObstruction { sub_dim: 3, dim: 4 })
    ));

    let k = group_algebra(&Group::dihedral4(), &q());
    assert!(matches!(
        freeness_certificate(&k, &span_of_basis(&q(), 8, &[0]), 2),
        Err(FreenessFailure::Budget { .. })
    ));
}

#[test]
fn freeness_dimension_law() {
    for h in small_builtins() {
        let rep = central_sequence(&h).unwrap();
        if let Ok(c) = &rep.freeness {
            assert_eq!(h.dim(), rep.hopf_center.dim() * rep.quotient.algebra.dim());
            assert_eq!(c.rank(), rep.quotient.algebra.dim());
        }
    }
}
