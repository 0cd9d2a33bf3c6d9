mod common;

use std::sync::Arc;

use common::*;
use hopfkit::center::{central_sequence, hopf_center};
use hopfkit::cocenter::*;
use hopfkit::hopf::{
    dual_hopf, function_algebra, group_algebra, group_algebra_check, sweedler_h4, trivial, GroupAlgebraVerdict, Group,
    HopfAlgebra, HopfMorphism,
};
use hopfkit::{Field, Matrix, Scalar, Subspace};

/// `ad(x) = x2 ⊗ S(x1) x3` straight from the definition, dense.
fn ad_oracle(h: &HopfAlgebra, x: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let mut out = vec![h.field().zero(); n * n];
    for (k, c) in h.iterated_coproduct(x, 3) {
        let right = h.multiply(&h.antipode(&h.basis(k[0])), &h.basis(k[2]));
        for (b, v) in right.iter().enumerate() {
            let p = k[1] * n + b;
            out[p] = &out[p] + &(&c * v);
        }
    }
    out
}

fn label(h: &HopfAlgebra, s: &str) -> Vec<Scalar> {
    h.basis(h.index_of(s).unwrap_or_else(|| panic!("no label {s}")))
}

fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    hopfkit::linalg::tensor::outer(a, b)
}

fn add(a: &[Scalar], b: &[Scalar], s: i64) -> Vec<Scalar> {
    let f = a[0].field();
    a.iter().zip(b).map(|(x, y)| x + &(&f.from_i64(s) * y)).collect()
}

#[test]
fn adjoint_coaction_matches_definition() {
    for h in small_builtins() {
        let ad = adjoint_coaction(&h).unwrap();
        assert!(ad.certificate.all_passed());
        for i in 0..h.dim() {
            assert_eq!(ad.apply(&h.basis(i)), ad_oracle(&h, &h.basis(i)), "{} e_{i}", h.name());
        }
    }
}

#[test]
fn adjoint_coaction_examples() {
    let g = Group::symmetric3();
    let h = group_algebra(&g, &q());
    let ad = adjoint_coaction(&h).unwrap();
    for i in 0..6 {
        assert_eq!(ad.apply(&h.basis(i)), tensor(&h.basis(i), h.unit()));
    }
    let u = uq();
    let ad = adjoint_coaction(&u).unwrap();
    assert_eq!(ad.apply(u.unit()), tensor(u.unit(), u.unit()));
    let (e, k, one) = (label(&u, "E"), label(&u, "K"), u.unit().to_vec());
    let expected = add(&add(&tensor(&e, &k), &tensor(&k, &e), -1), &tensor(&one, &e), 1);
    assert_eq!(ad.apply(&e), expected);
}

#[test]
fn ad_invariants_agree_with_inval1() {
    for h in small_builtins() {
        let inv = ad_invariants_checked(&h).unwrap();
        assert!(inv.contains(h.unit()).unwrap());
    }
    for g in groups() {
        assert!(ad_invariants(&group_algebra(&g, &q())).is_full());
    }
}

#[test]
fn ad_homomorphism_criterion() {
    let k = function_algebra(&Group::symmetric3(), &q());
    let r = ad_is_homomorphism(&k).unwrap();
    assert!(r.multiplicative && r.central_values);
    assert_eq!(r.hopf_center_values, Some(true));
    for h in small_builtins() {
        assert!(ad_is_homomorphism(&h).unwrap().agree(), "{}", h.name());
    }
}

#[test]
fn coefficient_coalgebra_and_generated_algebra() {
    for g in groups() {
        let h = group_algebra(&g, &q());
        let scalars = Subspace::span(&q(), h.dim(), [h.unit().to_vec()]).unwrap();
        let d = d_analysis(&h).unwrap();
        assert_eq!(d.coefficient_coalgebra, scalars);
        assert_eq!(d.generated, scalars);
    }
    for h in small_builtins() {
        let d = d_analysis(&h).unwrap();
        assert!(d.certificate.all_passed(), "{}", h.name());
        assert!(d.ad_stable);
        // oracle: right legs of the dense ad
        let n = h.dim();
        let mut legs = Vec::new();
        for i in 0..n {
            let t = ad_oracle(&h, &h.basis(i));
            legs.extend(t.chunks(n).map(|r| r.to_vec()));
        }
        assert_eq!(d.coefficient_coalgebra, Subspace::span(h.field(), n, legs).unwrap());
    }
    let h4 = sweedler_h4(&q());
    let d = d_analysis(&h4).unwrap();
    // ad(x) = x⊗g + g⊗gx - 1⊗gx
    let golden = Subspace::span(&q(), 4, [h4.basis(0), h4.basis(1), h4.basis(3)]).unwrap();
    assert_eq!(d.coefficient_coalgebra, golden);
    assert!(d.bialgebra && d.antipode_stable);
    assert!(d.generated.is_full());
}

#[test]
fn d_of_small_quantum_sl2_is_everything() {
    let u = uq();
    let d = d_analysis(&u).unwrap();
    assert!(d.generated.is_full());
    assert!(d.certificate.all_passed());
}

#[test]
fn cocentral_subspace_examples() {
    for g in groups() {
        assert!(cocentral_subspace(&group_algebra(&g, &q())).is_zero());
    }
    let h = sweedler_h4(&q());
    let one_minus_g = add(h.unit(), &h.basis(1), -1);
    let expected = Subspace::span(&q(), 4, [one_minus_g, h.basis(2), h.basis(3)]).unwrap();
    assert_eq!(cocentral_subspace(&h), expected);

    let u = uq();
    let w = cocentral_subspace(&u);
    for v in [add(&label(&u, "K"), u.unit(), -1), label(&u, "E"), label(&u, "F")] {
        assert!(w.contains(&v).unwrap());
    }
}

#[test]
fn cocenter_oracles() {
    for g in groups() {
        let h = Arc::new(group_algebra(&g, &q()));
        let c = hopf_cocenter(&h).unwrap();
        assert_eq!(c.dim(), g.order());
        assert!(c.kernel.is_zero());

        let k = Arc::new(function_algebra(&g, &q()));
        let c = hopf_cocenter(&k).unwrap();
        assert_eq!(c.dim(), group_center(&g).len(), "{}", g.name());
    }
    assert_eq!(hopf_cocenter(&Arc::new(sweedler_h4(&q()))).unwrap().dim(), 1);
    assert_eq!(hopf_cocenter(&uq()).unwrap().dim(), 1);
}

#[test]
fn h4_cocenter_kernel_is_w() {
    let h = Arc::new(sweedler_h4(&q()));
    let c = hopf_cocenter(&h).unwrap();
    assert_eq!(c.kernel, cocentral_subspace(&h));
    assert_eq!(hopf_center(&dual_hopf(&h)).unwrap().dim(), 1);
}

/// Restriction `k(G) -> k(Z(G))` on point functions, with `Z(G)` relabelled as `Z/m`.
fn restriction_to_center(g: &Group) -> (Arc<HopfAlgebra>, HopfMorphism) {
    let z = group_center(g);
    // identify Z(G) with a cyclic group by a generator search
    let m = z.len();
    let generator = z
        .iter()
        .copied()
        .find(|&x| {
            let mut y = x;
            let mut ord = 1;
            while y != 0 {
                y = g.mul(y, x);
                ord += 1;
            }
            ord == m
        })
        .expect("cyclic center");
    let mut pos = vec![usize::MAX; g.order()];
    let mut y = 0;
    for k in 0..m {
        pos[y] = k;
        y = g.mul(y, generator);
    }
    let source = Arc::new(function_algebra(g, &q()));
    let target = Arc::new(function_algebra(&Group::cyclic(m).unwrap(), &q()));
    let mut mat = Matrix::zeros(&q(), m, g.order());
    for (x, &p) in pos.iter().enumerate() {
        if p != usize::MAX {
            mat.set(p, x, q().one());
        }
    }
    let morphism = HopfMorphism::new(source.clone(), target, mat).unwrap();
    (source, morphism)
}

#[test]
fn universality_of_the_cocenter() {
    for g in nonabelian() {
        let (k, r) = restriction_to_center(&g);
        assert!(cocentrality(&r).is_cocentral());
        let c = hopf_cocenter(&k).unwrap();
        let f = factor_through_cocenter(&c, &r).unwrap();
        assert_eq!(f.compose(c.projection()).unwrap().matrix(), r.matrix());
        // π through itself is the identity
        let id = factor_through_cocenter(&c, c.projection()).unwrap();
        assert_eq!(id.matrix(), &Matrix::identity(&q(), c.dim()));
    }
    for h in small_builtins() {
        let c = hopf_cocenter(&h).unwrap();
        let k = Arc::new(trivial(h.field()));
        let eps = Matrix::from_rows(h.field(), h.dim(), vec![h.counit_vector().to_vec()]).unwrap();
        let counit = HopfMorphism::new(h.clone(), k, eps).unwrap();
        let f = factor_through_cocenter(&c, &counit).unwrap();
        assert_eq!(f.matrix().row(0), c.algebra().counit_vector());
    }
    // the identity of H4 is not cocentral
    let h = Arc::new(sweedler_h4(&q()));
    let c = hopf_cocenter(&h).unwrap();
    assert!(factor_through_cocenter(&c, &HopfMorphism::identity(h.clone())).is_err());
}

#[test]
fn cocentrality_tests_agree_on_emitted_projections() {
    for h in small_builtins() {
        let c = hopf_cocenter(&h).unwrap();
        assert!(cocentrality(c.projection()).is_cocentral());
        let cs = central_sequence(&h).unwrap();
        assert!(cocentrality(&cs.quotient.projection).agree(), "{}", h.name());
        assert!(cocentrality(&HopfMorphism::identity(h.clone())).agree());
    }
}

#[test]
fn cocentral_sequences() {
    let g = Group::quaternion();
    let k = Arc::new(function_algebra(&g, &q()));
    let rep = cocentral_sequence(&k).unwrap();
    assert!(rep.certificate.all_passed(), "{:?}", rep.certificate.failures().collect::<Vec<_>>());
    assert_eq!(rep.sequence.dims(), (4, 8, 2));
    // C' = functions constant on cosets of Z(G)
    let cs = cosets(&g, &group_center(&g));
    assert_eq!(rep.hopf_kernel, span_of_indicators(&q(), 8, &cs));

    for grp in groups() {
        let h = Arc::new(group_algebra(&grp, &q()));
        let rep = cocentral_sequence(&h).unwrap();
        assert!(rep.certificate.all_passed());
        assert_eq!(rep.sequence.dims(), (1, grp.order(), grp.order()));
    }
    for h in small_builtins() {
        let rep = cocentral_sequence(&h).unwrap();
        assert!(rep.certificate.all_passed(), "{}: {:?}", h.name(), rep.certificate.failures().collect::<Vec<_>>());
        assert!(rep.normal);
    }
}

#[test]
fn cocentral_sequence_of_small_quantum_sl2() {
    let u = uq();
    let rep = cocentral_sequence(&u).unwrap();
    assert!(rep.certificate.all_passed(), "{:?}", rep.certificate.failures().collect::<Vec<_>>());
    assert!(rep.hopf_kernel.is_full());
    assert_eq!(rep.cocenter.dim(), 1);
    assert!(rep.d_equals_hopf_kernel);
}

#[test]
fn grouplike_verdicts() {
    let f3 = Field::cyclotomic(3).unwrap();
    let r = group_algebra_check(&group_algebra(&Group::cyclic(3).unwrap(), &f3));
    assert_eq!(r.verdict, GroupAlgebraVerdict::GroupAlgebra);
    assert_eq!(r.grouplikes.len(), 3);

    let k = Arc::new(function_algebra(&Group::quaternion(), &q()));
    let c = hopf_cocenter(&k).unwrap();
    let r = group_algebra_check(c.algebra());
    assert_eq!(r.verdict, GroupAlgebraVerdict::GroupAlgebra);
    assert_eq!(r.grouplikes.len(), 2);

    let r = group_algebra_check(&sweedler_h4(&q()));
    assert_eq!(r.verdict, GroupAlgebraVerdict::NotGroupAlgebra);
    assert_eq!(r.grouplikes.len(), 2);

    // k(Z/3) over Q: its characters need a cube root of unity
    let r = group_algebra_check(&function_algebra(&Group::cyclic(3).unwrap(), &q()));
    assert_eq!(r.verdict, GroupAlgebraVerdict::ExtensionRequired);
    let r = group_algebra_check(&function_algebra(&Group::cyclic(3).unwrap(), &f3));
    assert_eq!(r.verdict, GroupAlgebraVerdict::GroupAlgebra);
}

#[test]
fn duality_consistency() {
    for h in small_builtins() {
        let d = Arc::new(dual_hopf(&h));
        assert_eq!(hopf_cocenter(&h).unwrap().dim(), hopf_center(&d).unwrap().dim(), "{}", h.name());
        assert_eq!(hopf_center(&h).unwrap().dim(), hopf_cocenter(&d).unwrap().dim(), "{}", h.name());
    }
}

#[test]
fn coalgebra_cocenter_examples() {
    for g in groups() {
        let h = group_algebra(&g, &q());
        let full = Subspace::full(&q(), h.dim());
        let cz = coalgebra_cocenter(&h, &full).unwrap();
        assert!(cz.kernel.is_zero());
        assert_eq!(cz.dim, g.order());
    }
    let s3 = group_algebra(&Group::symmetric3(), &q());
    let not_sub = Subspace::span(&q(), 6, [add(&s3.basis(1), &s3.basis(2), 1)]).unwrap();
    assert!(coalgebra_cocenter(&s3, &not_sub).is_err());

    let h4 = Arc::new(sweedler_h4(&q()));
    let full = Subspace::full(&q(), 4);
    let (closure, cert) = coalgebra_cocenter_closure(&h4, &full).unwrap();
    assert!(cert.all_passed());
    assert_eq!(closure.dim(), 3);
    assert_eq!(closure, hopf_cocenter(&h4).unwrap().kernel);
}

#[test]
fn coalgebra_generation_lemma_small_quantum_sl2() {
    let u = uq();
    let gens = [label(&u, "E"), label(&u, "F"), label(&u, "K")];
    let c = generated_subcoalgebra(&u, &gens);
    assert!(subcoalgebra_failure(&u, &c).is_none());
    assert!(generates_as_hopf_algebra(&u, &c));
    let (closure, cert) = coalgebra_cocenter_closure(&u, &c).unwrap();
    assert!(cert.all_passed());
    assert_eq!(closure, hopf_cocenter(&u).unwrap().kernel);
}
