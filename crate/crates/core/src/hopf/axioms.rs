use crate::certificate::{Certificate, Check};
use crate::hopf::terms::Terms;
use crate::hopf::HopfAlgebra;

type Failure = Option<(Vec<usize>, String)>;

/// Checks every Hopf algebra axiom on basis elements, pairs and triples.
///
/// Each failing check carries the first counterexample found.
pub fn verify_axioms(h: &HopfAlgebra) -> Certificate {
    let mut cert = Certificate::new();
    cert.push(Check::from_search("associativity", associativity(h)));
    cert.push(Check::from_search("unit", unit_law(h)));
    cert.push(Check::from_search("coassociativity", coassociativity(h)));
    cert.push(Check::from_search("counit", counit_law(h)));
    cert.push(Check::from_search("comultiplication_multiplicative", comult_multiplicative(h)));
    cert.push(Check::from_search("comultiplication_unital", comult_unital(h)));
    cert.push(Check::from_search("counit_multiplicative", counit_multiplicative(h)));
    cert.push(Check::from_search("counit_unital", counit_unital(h)));
    cert.push(Check::from_search("antipode", antipode_law(h)));
    cert
}

fn associativity(h: &HopfAlgebra) -> Failure {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = h.product_of_basis(i, j);
            for k in 0..n {
                let mut lhs = Terms::new(h.field());
                for (a, c) in ij {
                    for (b, d) in h.product_of_basis(*a, k) {
                        lhs.add(vec![*b], c * d);
                    }
                }
                let mut rhs = Terms::new(h.field());
                for (a, c) in h.product_of_basis(j, k) {
                    for (b, d) in h.product_of_basis(i, *a) {
                        rhs.add(vec![*b], c * d);
                    }
                }
                if lhs != rhs {
                    return Some((vec![i, j, k], "(e_i e_j) e_k != e_i (e_j e_k)".into()));
                }
            }
        }
    }
    None
}

fn unit_law(h: &HopfAlgebra) -> Failure {
    for i in 0..h.dim() {
        let e = h.basis(i);
        if h.multiply(h.unit(), &e) != e || h.multiply(&e, h.unit()) != e {
            return Some((vec![i], "1 e_i != e_i or e_i 1 != e_i".into()));
        }
    }
    None
}

fn coassociativity(h: &HopfAlgebra) -> Failure {
    for i in 0..h.dim() {
        let d = h.comultiply_terms(&h.basis(i));
        if h.comultiply_leg(&d, 0) != h.comultiply_leg(&d, 1) {
            return Some((vec![i], "(Δ⊗id)Δ(e_i) != (id⊗Δ)Δ(e_i)".into()));
        }
    }
    None
}

fn counit_law(h: &HopfAlgebra) -> Failure {
    for i in 0..h.dim() {
        let d = h.comultiply_terms(&h.basis(i));
        let e = Terms::from_vector(&h.basis(i));
        if h.counit_leg(&d, 0) != e || h.counit_leg(&d, 1) != e {
            return Some((vec![i], "(ε⊗id)Δ(e_i) != e_i or (id⊗ε)Δ(e_i) != e_i".into()));
        }
    }
    None
}

fn comult_multiplicative(h: &HopfAlgebra) -> Failure {
    let n = h.dim();
    let deltas: Vec<Terms> = (0..n).map(|i| h.comultiply_terms(&h.basis(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Terms::new(h.field());
            for (k, c) in h.product_of_basis(i, j) {
                lhs.add_terms(&deltas[*k], c);
            }
            let rhs = h.multiply_terms(&deltas[i], &deltas[j]);
            if lhs != rhs {
                return Some((vec![i, j], "Δ(e_i e_j) != Δ(e_i)Δ(e_j)".into()));
            }
        }
    }
    None
}

fn comult_unital(h: &HopfAlgebra) -> Failure {
    let lhs = h.comultiply_terms(h.unit());
    let rhs = unit_terms(h, 2);
    (lhs != rhs).then(|| (vec![], "Δ(1) != 1⊗1".into()))
}

fn counit_multiplicative(h: &HopfAlgebra) -> Failure {
    let n = h.dim();
    let eps = h.counit_vector();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = h.field().zero();
            for (k, c) in h.product_of_basis(i, j) {
                lhs = &lhs + &(c * &eps[*k]);
            }
            if lhs != &eps[i] * &eps[j] {
                return Some((vec![i, j], "ε(e_i e_j) != ε(e_i)ε(e_j)".into()));
            }
        }
    }
    None
}

fn counit_unital(h: &HopfAlgebra) -> Failure {
    (!h.counit(h.unit()).is_one()).then(|| (vec![], "ε(1) != 1".into()))
}

fn antipode_law(h: &HopfAlgebra) -> Failure {
    let s = h.antipode_columns();
    for i in 0..h.dim() {
        let d = h.comultiply_terms(&h.basis(i));
        let mut expected = Terms::new(h.field());
        let eps = &h.counit_vector()[i];
        for (k, u) in h.unit().iter().enumerate() {
            expected.add(vec![k], eps * u);
        }
        let left = h.multiply_legs(&h.map_leg(&d, 0, &s), 0);
        let right = h.multiply_legs(&h.map_leg(&d, 1, &s), 0);
        if left != expected {
            return Some((vec![i], "m(S⊗id)Δ(e_i) != ε(e_i)1".into()));
        }
        if right != expected {
            return Some((vec![i], "m(id⊗S)Δ(e_i) != ε(e_i)1".into()));
        }
    }
    None
}

fn tensor_pure(a: &Terms, b: &Terms) -> Terms {
    let field = a
        .iter()
        .next()
        .map(|(_, v)| v.field())
        .unwrap_or_else(crate::scalar::Field::rationals);
    let mut out = Terms::new(&field);
    for (ka, va) in a.iter() {
        for (kb, vb) in b.iter() {
            let mut k = ka.clone();
            k.extend_from_slice(kb);
            out.add(k, va * vb);
        }
    }
    out
}

/// `1⊗...⊗1` as sparse terms.
pub(crate) fn unit_terms(h: &HopfAlgebra, order: usize) -> Terms {
    let one = Terms::from_vector(h.unit());
    let mut out = Terms::new(h.field());
    out.add(Vec::new(), h.field().one());
    for _ in 0..order {
        out = tensor_pure(&out, &one);
    }
    out
}

pub(crate) fn outer_terms(a: &Terms, b: &Terms) -> Terms {
    tensor_pure(a, b)
}
