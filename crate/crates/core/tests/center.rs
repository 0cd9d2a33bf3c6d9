mod common;

use std::sync::Arc;

use common::*;
use hopfkit::center::{
    adjoint_action, adjoint_composition_check, adjoint_coproduct_check, adjoint_vector, algebra_center,
    central_sequence, corestrict_comodule, hopf_center, hopf_center_characterizations, leibniz_check,
};
use hopfkit::hopf::builtins::sweedler_coboundary_twist;
use hopfkit::hopf::{
    function_algebra, group_algebra, group_algebra_check, grouplikes, sweedler_h4, taft, Element, GroupAlgebraVerdict,
};
use hopfkit::{Matrix, Subspace};

#[test]
fn center_of_group_algebra_is_spanned_by_class_sums() {
    for g in groups() {
        let h = group_algebra(&g, &q());
        let z = algebra_center(&h).unwrap();
        let classes = conjugacy_classes(&g);
        assert_eq!(z.dim(), classes.len(), "{}", g.name());
        assert_eq!(z, span_of_indicators(&q(), g.order(), &classes));
    }
    assert_eq!(algebra_center(&group_algebra(&hopfkit::hopf::Group::symmetric3(), &q())).unwrap().dim(), 3);
    assert_eq!(algebra_center(&group_algebra(&hopfkit::hopf::Group::quaternion(), &q())).unwrap().dim(), 5);
}

#[test]
fn center_of_h4_is_the_scalars() {
    let h = sweedler_h4(&q());
    let z = algebra_center(&h).unwrap();
    assert_eq!(z, Subspace::span(&q(), 4, [h.unit().to_vec()]).unwrap());
}

#[test]
fn adjoint_action_examples() {
    let h = sweedler_h4(&q());
    let g = Element::basis(&h, 1);
    let x = Element::basis(&h, 2);
    let ad = adjoint_action(&g, &x).unwrap();
    assert_eq!(ad.coeffs(), x.scale(&q().from_i64(-1)).coeffs());
    let one = Element::new(&h, h.unit().to_vec()).unwrap();
    for i in 0..4 {
        let y = Element::basis(&h, i);
        assert_eq!(adjoint_action(&one, &y).unwrap().coeffs(), y.coeffs());
    }
    let other = sweedler_h4(&hopfkit::Field::prime(5).unwrap());
    assert!(adjoint_action(&Element::basis(&other, 1), &x).is_err());

    for grp in nonabelian() {
        let k = group_algebra(&grp, &q());
        for a in 0..grp.order() {
            for b in 0..grp.order() {
                let c = grp.mul(grp.mul(a, b), grp.inverse(a));
                assert_eq!(adjoint_vector(&k, &k.basis(a), &k.basis(b)), k.basis(c));
            }
        }
    }
}

#[test]
fn hopf_center_of_group_algebra_is_group_algebra_of_center() {
    for g in groups() {
        let h = group_algebra(&g, &q());
        let hz = hopf_center(&h).unwrap();
        let oracle = group_center(&g);
        assert_eq!(hz.subspace, span_of_basis(&q(), g.order(), &oracle), "{}", g.name());
        assert!(hz.certificate.all_passed());
        let sub = hopfkit::hopf::sub_hopf(&Arc::new(h.clone()), &hz.subspace).unwrap();
        let (gl, complete) = grouplikes(&sub.algebra);
        assert!(complete);
        assert_eq!(gl.len(), oracle.len());
    }
}

#[test]
fn hopf_center_of_commutative_algebra_is_everything() {
    for g in groups() {
        let h = function_algebra(&g, &q());
        assert!(hopf_center(&h).unwrap().subspace.is_full());
    }
}

#[test]
fn hopf_center_trivial_cases() {
    let h = sweedler_h4(&q());
    assert_eq!(hopf_center(&h).unwrap().dim(), 1);
    assert_eq!(hopf_center(&taft(3, 1).unwrap()).unwrap().dim(), 1);
    assert_eq!(hopf_center(&uq()).unwrap().dim(), 1);
}

#[test]
fn characterizations_agree_on_small_builtins() {
    for h in small_builtins() {
        let ch = hopf_center_characterizations(&h).unwrap();
        assert!(ch.agree(), "{}", h.name());
        assert!(ch.center.contains_subspace(&ch.right).unwrap());
    }
}

#[test]
fn central_grouplikes_lie_in_hopf_center() {
    for h in small_builtins() {
        let hz = hopf_center(&h).unwrap();
        let (gl, _) = grouplikes(&h);
        for g in gl {
            if hz.center().contains(&g).unwrap() {
                assert!(hz.subspace.contains(&g).unwrap(), "{}", h.name());
            }
        }
    }
}

#[test]
fn adjoint_identities_on_small_builtins() {
    for h in small_builtins() {
        assert!(leibniz_check(&h).passed, "{}", h.name());
        assert!(adjoint_composition_check(&h).passed, "{}", h.name());
        assert!(adjoint_coproduct_check(&h).passed, "{}", h.name());
    }
}

#[test]
fn twist_preserves_hopf_center() {
    let h = sweedler_h4(&q());
    let tw = sweedler_coboundary_twist(&q()).unwrap();
    assert_eq!(hopf_center(&tw.algebra).unwrap().subspace, hopf_center(&h).unwrap().subspace);
}

#[test]
fn corestriction() {
    let h = group_algebra(&hopfkit::hopf::Group::quaternion(), &q());
    let n = h.dim();
    // trivial coaction on a 2-dim space
    let mut triv = Matrix::zeros(&q(), 2 * n, 2);
    for v in 0..2 {
        triv.set(v * n, v, q().one());
    }
    let c = corestrict_comodule(&h, &triv).unwrap();
    assert_eq!(c.matrix.rows(), 2 * 2);

    // Δ restricted to HZ, as a coaction of A on HZ
    let hz = hopf_center(&h).unwrap().subspace;
    let d = hz.dim();
    let mut rho = Matrix::zeros(&q(), d * n, d);
    for (j, b) in hz.basis().iter().enumerate() {
        let t = h.comultiply(b);
        for (v, &p) in hz.pivots().iter().enumerate() {
            for a in 0..n {
                rho.set(v * n + a, j, t[p * n + a].clone());
            }
        }
    }
    let c = corestrict_comodule(&h, &rho).unwrap();
    assert_eq!(c.hopf_center, hz);

    // Δ on all of k[S3] has non-central second legs
    let s3 = group_algebra(&hopfkit::hopf::Group::symmetric3(), &q());
    let m = s3.dim();
    let mut delta = Matrix::zeros(&q(), m * m, m);
    for g in 0..m {
        delta.set(g * m + g, g, q().one());
    }
    let err = corestrict_comodule(&s3, &delta).unwrap_err();
    assert!(err.to_string().contains("outside Z(A)"), "{err}");
}

#[test]
fn central_sequence_of_q8() {
    let g = hopfkit::hopf::Group::quaternion();
    let h = Arc::new(group_algebra(&g, &q()));
    let rep = central_sequence(&h).unwrap();
    assert!(rep.certificate.all_passed(), "{:?}", rep.certificate.failures().collect::<Vec<_>>());
    assert_eq!(rep.sequence.dims(), (2, 8, 4));
    let free = rep.freeness.as_ref().unwrap();
    assert_eq!(free.rank(), 4);
    // cofactors are coset representatives of G/Z(G)
    let z = group_center(&g);
    let cs = cosets(&g, &z);
    let mut hit = vec![false; cs.len()];
    for a in &free.cofactors {
        let idx = a.iter().position(|x| !x.is_zero()).unwrap();
        assert_eq!(a.iter().filter(|x| !x.is_zero()).count(), 1);
        let c = cs.iter().position(|c| c.contains(&idx)).unwrap();
        assert!(!hit[c]);
        hit[c] = true;
    }
    let b = &rep.quotient.algebra;
    assert!(b.is_commutative());
    let check = group_algebra_check(b);
    assert_eq!(check.verdict, GroupAlgebraVerdict::GroupAlgebra);
    // (Z/2)²: every grouplike squares to 1
    for x in &check.grouplikes {
        assert_eq!(b.multiply(x, x), b.unit());
    }
}

#[test]
fn central_sequence_degenerate_cases() {
    let h = Arc::new(function_algebra(&hopfkit::hopf::Group::symmetric3(), &q()));
    let rep = central_sequence(&h).unwrap();
    assert!(rep.certificate.all_passed());
    assert_eq!(rep.sequence.dims(), (6, 6, 1));

    let h = Arc::new(sweedler_h4(&q()));
    let rep = central_sequence(&h).unwrap();
    assert!(rep.certificate.all_passed());
    assert_eq!(rep.sequence.dims(), (1, 4, 4));
    assert!(rep.quotient.projection.matrix().inverse().is_some());
}

#[test]
fn central_sequence_passes_for_small_builtins() {
    for h in small_builtins() {
        let rep = central_sequence(&h).unwrap();
        assert!(
            rep.certificate.all_passed(),
            "{}: {:?}",
            h.name(),
            rep.certificate.failures().collect::<Vec<_>>()
        );
        let (c, a, b) = rep.sequence.dims();
        assert_eq!(c * b, a);
    }
}
