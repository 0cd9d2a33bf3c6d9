//! Duals, quotients by Hopf ideals, Hopf subalgebras and ideal closures.

use std::sync::Arc;

use crate::certificate::{Certificate, Check};
use crate::hopf::{sparse_columns, HopfAlgebra, HopfMorphism, StructureConstants};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::Error;

fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

/// The dual Hopf algebra on the dual basis `e_i*`: every structure tensor is
/// transposed, so `dual_hopf(dual_hopf(H)) == H` exactly.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let sc = h.to_structure_constants();
    let name = match h.name().strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual({})", h.name()),
    };
    let dual = StructureConstants {
        field: sc.field.clone(),
        labels: sc.labels.iter().map(|l| dual_label(l)).collect(),
        unit: sc.counit.clone(),
        counit: sc.unit.clone(),
        // f_a f_b = Σ_i Δ_i^{ab} f_i
        mult: sc.comult.iter().map(|(i, a, b, c)| (*a, *b, *i, c.clone())).collect(),
        // Δ(f_c) = Σ m_{ab}^c f_a ⊗ f_b
        comult: sc.mult.iter().map(|(a, b, c, x)| (*c, *a, *b, x.clone())).collect(),
        antipode: sc.antipode.iter().map(|(i, j, c)| (*j, *i, c.clone())).collect(),
    };
    HopfAlgebra::from_structure_constants(name, dual).expect("transpose of valid structure constants")
}

/// Whether the flat tensor `t` over an `n`-dimensional space lies in `left ⊗ right`
/// (`None` standing for the whole space).
pub fn tensor_in(t: &[Scalar], n: usize, left: Option<&Subspace>, right: Option<&Subspace>) -> bool {
    if let Some(r) = right {
        for i in 0..n {
            let row = &t[i * n..(i + 1) * n];
            if row.iter().any(|x| !x.is_zero()) && !r.contains(row).unwrap() {
                return false;
            }
        }
    }
    if let Some(l) = left {
        for j in 0..n {
            let col: Vec<Scalar> = (0..n).map(|i| t[i * n + j].clone()).collect();
            if col.iter().any(|x| !x.is_zero()) && !l.contains(&col).unwrap() {
                return false;
            }
        }
    }
    true
}

/// Certifies `I` as a Hopf ideal: two-sided ideal, `ε(I) = 0`,
/// `Δ(I) ⊆ I⊗A + A⊗I` (tested as `(p⊗p)Δ(I) = 0` for the projection `p`), `S(I) ⊆ I`.
pub fn check_hopf_ideal(h: &HopfAlgebra, ideal: &Subspace) -> Certificate {
    let mut cert = Certificate::new();
    let n = h.dim();
    let basis = ideal.basis();

    let mut failure = None;
    'ideal: for (t, v) in basis.iter().enumerate() {
        for j in 0..n {
            let e = h.basis(j);
            if !ideal.contains(&h.multiply(&e, v)).unwrap() {
                failure = Some((vec![t, j], "e_j v not in I".to_string()));
                break 'ideal;
            }
            if !ideal.contains(&h.multiply(v, &e)).unwrap() {
                failure = Some((vec![t, j], "v e_j not in I".to_string()));
                break 'ideal;
            }
        }
    }
    cert.push(Check::from_search("two_sided_ideal", failure));

    let failure = basis
        .iter()
        .position(|v| !h.counit(v).is_zero())
        .map(|t| (vec![t], "ε(v) != 0".to_string()));
    cert.push(Check::from_search("counit_vanishes", failure));

    let p = sparse_columns(&ideal.quotient_matrix());
    let failure = basis
        .iter()
        .position(|v| {
            let d = h.comultiply_terms(v);
            !h.map_leg(&h.map_leg(&d, 0, &p), 1, &p).is_zero()
        })
        .map(|t| (vec![t], "Δ(v) not in I⊗A + A⊗I".to_string()));
    cert.push(Check::from_search("coideal", failure));

    let failure = basis
        .iter()
        .position(|v| !ideal.contains(&h.antipode(v)).unwrap())
        .map(|t| (vec![t], "S(v) not in I".to_string()));
    cert.push(Check::from_search("antipode_stable", failure));
    cert
}

/// Certifies `U` as a Hopf subalgebra: unit, products, `Δ(U) ⊆ U⊗U`, `S(U) = U`.
pub fn check_hopf_subalgebra(h: &HopfAlgebra, u: &Subspace) -> Certificate {
    let mut cert = Certificate::new();
    let n = h.dim();
    let basis = u.basis();
    cert.push(Check::from_bool("contains_unit", u.contains(h.unit()).unwrap()));

    let mut failure = None;
    'mult: for (s, a) in basis.iter().enumerate() {
        for (t, b) in basis.iter().enumerate() {
            if !u.contains(&h.multiply(a, b)).unwrap() {
                failure = Some((vec![s, t], "product leaves the subspace".to_string()));
                break 'mult;
            }
        }
    }
    cert.push(Check::from_search("closed_under_multiplication", failure));

    let failure = basis
        .iter()
        .position(|v| !tensor_in(&h.comultiply(v), n, Some(u), Some(u)))
        .map(|t| (vec![t], "Δ(v) not in U⊗U".to_string()));
    cert.push(Check::from_search("subcoalgebra", failure));

    let failure = basis
        .iter()
        .position(|v| !u.contains(&h.antipode(v)).unwrap())
        .map(|t| (vec![t], "S(v) not in U".to_string()));
    cert.push(Check::from_search("antipode_stable", failure));
    cert
}

/// A quotient Hopf algebra with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Arc<HopfAlgebra>,
    pub projection: HopfMorphism,
}

/// `H / I` on the basis of images of the non-pivot basis vectors of `I`.
pub fn quotient_hopf(h: &Arc<HopfAlgebra>, ideal: &Subspace) -> Result<Quotient, Error> {
    if ideal.ambient_dim() != h.dim() {
        return Err(Error::Linalg(crate::linalg::LinalgError::AmbientMismatch(
            h.dim(),
            ideal.ambient_dim(),
        )));
    }
    let cert = check_hopf_ideal(h, ideal);
    if let Some(fail) = cert.failures().next() {
        return Err(Error::NotHopfIdeal {
            condition: fail.name.clone(),
            witness: format!("{:?}", fail.witness.clone().unwrap_or_default()),
        });
    }
    if ideal.is_full() {
        return Err(Error::NotHopfIdeal {
            condition: "proper".into(),
            witness: "the ideal is the whole algebra".into(),
        });
    }
    if ideal.is_zero() {
        return Ok(Quotient {
            algebra: h.clone(),
            projection: HopfMorphism::identity(h.clone()),
        });
    }
    let comp = ideal.complement_indices();
    let m = comp.len();
    let pm = ideal.quotient_matrix();
    let p = |v: &[Scalar]| pm.apply(v).unwrap();
    let pcols = sparse_columns(&pm);
    let mut products = Vec::with_capacity(m * m);
    for &a in &comp {
        for &b in &comp {
            products.push(p(&h.multiply(&h.basis(a), &h.basis(b))));
        }
    }
    let coproducts = comp
        .iter()
        .map(|&a| {
            let d = h.comultiply_terms(&h.basis(a));
            h.map_leg(&h.map_leg(&d, 0, &pcols), 1, &pcols).to_flat(m, 2)
        })
        .collect();
    let antipode_cols: Vec<Vec<Scalar>> = comp.iter().map(|&a| p(&h.antipode(&h.basis(a)))).collect();
    let quotient = HopfAlgebra::from_dense(
        format!("{}/I", h.name()),
        h.field(),
        comp.iter().map(|&a| h.labels()[a].clone()).collect(),
        products,
        p(h.unit()),
        coproducts,
        comp.iter().map(|&a| h.counit_vector()[a].clone()).collect(),
        Matrix::from_columns(h.field(), m, &antipode_cols)?,
    )?;
    let quotient = Arc::new(quotient);
    let projection = HopfMorphism::new(h.clone(), quotient.clone(), pm)?;
    Ok(Quotient {
        algebra: quotient,
        projection,
    })
}

/// A Hopf subalgebra with its inclusion.
#[derive(Debug, Clone)]
pub struct SubAlgebra {
    pub algebra: Arc<HopfAlgebra>,
    pub inclusion: HopfMorphism,
}

/// The Hopf subalgebra `U`, on the reduced echelon basis of `U`.
pub fn sub_hopf(h: &Arc<HopfAlgebra>, u: &Subspace) -> Result<SubAlgebra, Error> {
    let cert = check_hopf_subalgebra(h, u);
    if let Some(fail) = cert.failures().next() {
        return Err(Error::Hypothesis(format!(
            "not a Hopf subalgebra: {} fails at {:?}",
            fail.name,
            fail.witness.clone().unwrap_or_default()
        )));
    }
    let n = h.dim();
    let d = u.dim();
    let pivots = u.pivots().to_vec();
    let coords = |v: &[Scalar]| -> Vec<Scalar> { pivots.iter().map(|&p| v[p].clone()).collect() };
    let rows = u.basis();
    let labels = rows
        .iter()
        .map(|r| {
            let nz: Vec<usize> = (0..n).filter(|&i| !r[i].is_zero()).collect();
            if nz.len() == 1 && r[nz[0]].is_one() {
                h.labels()[nz[0]].clone()
            } else {
                h.format_element(r)
            }
        })
        .collect();
    let mut products = Vec::with_capacity(d * d);
    for a in rows {
        for b in rows {
            products.push(coords(&h.multiply(a, b)));
        }
    }
    let coproducts = rows
        .iter()
        .map(|a| {
            let t = h.comultiply(a);
            let mut out = Vec::with_capacity(d * d);
            for &pa in &pivots {
                for &pb in &pivots {
                    out.push(t[pa * n + pb].clone());
                }
            }
            out
        })
        .collect();
    let antipode_cols: Vec<Vec<Scalar>> = rows.iter().map(|a| coords(&h.antipode(a))).collect();
    let sub = HopfAlgebra::from_dense(
        format!("sub({})", h.name()),
        h.field(),
        labels,
        products,
        coords(h.unit()),
        coproducts,
        rows.iter().map(|a| h.counit(a)).collect(),
        Matrix::from_columns(h.field(), d, &antipode_cols)?,
    )?;
    let sub = Arc::new(sub);
    let inclusion = HopfMorphism::new(sub.clone(), h.clone(), Matrix::from_columns(h.field(), n, rows)?)?;
    Ok(SubAlgebra {
        algebra: sub,
        inclusion,
    })
}

/// `A·U`
pub fn left_ideal(h: &HopfAlgebra, u: &Subspace) -> Subspace {
    let mut vecs = u.basis().to_vec();
    for v in u.basis() {
        for i in 0..h.dim() {
            vecs.push(h.multiply(&h.basis(i), v));
        }
    }
    Subspace::span(h.field(), h.dim(), vecs).unwrap()
}

/// `U·A`
pub fn right_ideal(h: &HopfAlgebra, u: &Subspace) -> Subspace {
    let mut vecs = u.basis().to_vec();
    for v in u.basis() {
        for i in 0..h.dim() {
            vecs.push(h.multiply(v, &h.basis(i)));
        }
    }
    Subspace::span(h.field(), h.dim(), vecs).unwrap()
}

/// `A·U·A`
pub fn two_sided_ideal(h: &HopfAlgebra, u: &Subspace) -> Subspace {
    right_ideal(h, &left_ideal(h, u))
}

/// Smallest two-sided ideal containing `U` and stable under `S`, by fixed-point iteration.
pub fn ideal_antipode_closure(h: &HopfAlgebra, u: &Subspace) -> Subspace {
    let mut current = u.clone();
    loop {
        let ideal = two_sided_ideal(h, &current);
        let images = ideal.image(h.antipode_matrix()).unwrap();
        let next = ideal.sum(&images).unwrap();
        if next == current {
            return current;
        }
        current = next;
    }
}
