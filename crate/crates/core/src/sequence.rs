//! Exactness of `k -> C -> A -> B -> k`, normality, Hopf kernels and
//! cokernels, and freeness certificates.



use serde::Serialize;

use crate::certificate::{Certificate, Check};
use crate::hopf::{left_ideal, quotient_hopf, sparse_columns, two_sided_ideal, HopfAlgebra, Quotient};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::Error;

pub use crate::hopf::{verify_morphism, HopfMorphism};

/// `{x : (π⊗id)Δ(x) = 1⊗x}`
pub fn hopf_kernel_left(pi: &HopfMorphism) -> Subspace {
    hopf_kernel(pi, true)
}

/// `{x : (id⊗π)Δ(x) = x⊗1}`
pub fn hopf_kernel_right(pi: &HopfMorphism) -> Subspace {
    hopf_kernel(pi, false)
}

fn hopf_kernel(pi: &HopfMorphism, left: bool) -> Subspace {
    let a = pi.source();
    let b = pi.target();
    let (n, m) = (a.dim(), b.dim());
    let cols = sparse_columns(pi.matrix());
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let d = a.comultiply_terms(&a.basis(i));
        let pushed = if left { a.map_leg(&d, 0, &cols) } else { a.map_leg(&d, 1, &cols) };
        let mut v = if left { pushed.to_flat_rect(m, n) } else { pushed.to_flat_rect(n, m) };
        // subtract 1⊗e_i (resp. e_i⊗1)
        for (t, u) in b.unit().iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let pos = if left { t * n + i } else { i * m + t };
            v[pos] = &v[pos] - u;
        }
        columns.push(v);
    }
    Matrix::from_columns(a.field(), n * m, &columns).unwrap().kernel()
}

/// Whether the left and right Hopf kernels of `π` coincide.
pub fn is_normal(pi: &HopfMorphism) -> bool {
    hopf_kernel_left(pi) == hopf_kernel_right(pi)
}

/// A sequence `k -> C -> A -> B -> k` with its exactness certificate.
#[derive(Debug, Clone)]
pub struct ExactSequence {
    pub iota: HopfMorphism,
    pub pi: HopfMorphism,
    pub certificate: Certificate,
}

impl ExactSequence {
    pub fn new(iota: HopfMorphism, pi: HopfMorphism) -> Self {
        let certificate = verify_exact(&iota, &pi);
        ExactSequence { iota, pi, certificate }
    }

    pub fn is_exact(&self) -> bool {
        self.certificate.all_passed()
    }

    /// `(dim C, dim A, dim B)`
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.iota.source().dim(), self.iota.target().dim(), self.pi.target().dim())
    }
}

fn first_outside(inner: &Subspace, outer: &Subspace) -> Option<usize> {
    inner.basis().iter().position(|v| !outer.contains(v).unwrap())
}

fn compare_subspaces(name: &str, lhs: &Subspace, rhs: &Subspace, lhs_name: &str, rhs_name: &str) -> Check {
    if lhs == rhs {
        return Check::pass(name);
    }
    if let Some(t) = first_outside(lhs, rhs) {
        return Check::fail(
            name,
            vec![t],
            format!("basis vector {t} of {lhs_name} is not in {rhs_name}: {:?}", fmt_vec(&lhs.basis()[t])),
        );
    }
    let t = first_outside(rhs, lhs).unwrap_or(0);
    Check::fail(
        name,
        vec![t],
        format!("basis vector {t} of {rhs_name} is not in {lhs_name}: {:?}", fmt_vec(&rhs.basis()[t])),
    )
}

pub(crate) fn fmt_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// The four exactness conditions, each decided independently:
/// `injective`, `surjective`, `kernel_is_ideal` (`ker π = A·ι(C)⁺`) and
/// `image_is_hopf_kernel` (`ι(C) = {x : (π⊗id)Δ(x) = 1⊗x}`).
pub fn verify_exact(iota: &HopfMorphism, pi: &HopfMorphism) -> Certificate {
    let mut cert = Certificate::new();
    if **iota.target() != **pi.source() {
        cert.push(Check::fail("composable", vec![], "ι and π do not share the middle algebra"));
        return cert;
    }
    let a = pi.source();
    let morphisms_ok = iota.verify().all_passed() && pi.verify().all_passed();
    cert.push(Check::from_bool("morphisms", morphisms_ok));

    let ker_iota = iota.kernel();
    cert.push(if ker_iota.is_zero() {
        Check::pass("injective")
    } else {
        Check::fail("injective", vec![0], format!("ι kills {:?}", fmt_vec(&ker_iota.basis()[0])))
    });

    let rank = pi.matrix().rank();
    cert.push(if rank == pi.target().dim() {
        Check::pass("surjective")
    } else {
        Check::fail("surjective", vec![rank], format!("rank π = {rank} < dim B = {}", pi.target().dim()))
    });

    let image = iota.image();
    let augmentation = counit_kernel(a);
    let image_plus = image.intersection(&augmentation).unwrap();
    let generated = left_ideal(a, &image_plus);
    cert.push(compare_subspaces("kernel_is_ideal", &pi.kernel(), &generated, "ker π", "A·ι(C)⁺"));

    cert.push(compare_subspaces(
        "image_is_hopf_kernel",
        &image,
        &hopf_kernel_left(pi),
        "ι(C)",
        "{x : (π⊗id)Δx = 1⊗x}",
    ));
    cert
}

/// `A⁺ = ker ε`
pub fn counit_kernel(h: &HopfAlgebra) -> Subspace {
    Matrix::from_rows(h.field(), h.dim(), vec![h.counit_vector().to_vec()]).unwrap().kernel()
}

/// Whether `S(x_(1)) u x_(2) ∈ U` for all basis `x` and basis vectors `u` of `U`.
pub fn is_ad_stable(h: &HopfAlgebra, u: &Subspace) -> Option<(usize, usize)> {
    for x in 0..h.dim() {
        for (t, v) in u.basis().iter().enumerate() {
            let mut acc = h.zero();
            for (j, k, c) in h.coproduct_of_basis(x) {
                let term = h.multiply(&h.multiply(&h.antipode(&h.basis(*j)), v), &h.basis(*k));
                for (slot, y) in acc.iter_mut().zip(term) {
                    if !y.is_zero() {
                        *slot = &*slot + &(c * &y);
                    }
                }
            }
            if !u.contains(&acc).unwrap() {
                return Some((x, t));
            }
        }
    }
    None
}

/// `A / A·ι(C)⁺·A`, after checking that `ι(C)` is stable under the adjoint action.
pub fn hopf_cokernel(iota: &HopfMorphism) -> Result<Quotient, Error> {
    let a = iota.target();
    let image = iota.image();
    if let Some((x, t)) = is_ad_stable(a, &image) {
        return Err(Error::Hypothesis(format!(
            "ι(C) is not ad-stable: S(x_(1)) u x_(2) leaves ι(C) for x = e_{x}, u = basis vector {t}"
        )));
    }
    let plus = image.intersection(&counit_kernel(a)).unwrap();
    quotient_hopf(a, &two_sided_ideal(a, &plus))
}

/// `A` is a free left `C`-module with basis `cofactors`: `c ⊗ a_t -> c a_t`
/// is a linear isomorphism `C ⊗ span{a_t} -> A`.
#[derive(Debug, Clone)]
pub struct FreenessCertificate {
    pub subalgebra: Subspace,
    pub cofactors: Vec<Vec<Scalar>>,
}

impl FreenessCertificate {
    pub fn rank(&self) -> usize {
        self.cofactors.len()
    }

    /// Recomputes the rank of the multiplication map.
    pub fn verify(&self, h: &HopfAlgebra) -> bool {
        let vecs: Vec<Vec<Scalar>> = self
            .cofactors
            .iter()
            .flat_map(|a| self.subalgebra.basis().iter().map(move |c| h.multiply(c, a)))
            .collect();
        vecs.len() == h.dim() && Subspace::span(h.field(), h.dim(), vecs).unwrap().is_full()
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreenessFailure {
    /// `dim C` does not divide `dim A`.
    DimensionObstruction { sub_dim: usize, dim: usize },
    Budget { steps: u64 },
    Exhausted,
}

pub const DEFAULT_FREENESS_BUDGET: u64 = 1_000_000;

/// Greedy search with backtracking for `a_1 = 1, a_2, ...` such that the
/// `C·a_t` are independent and span `A`. Candidates are basis vectors first,
/// then moment vectors `Σ (i+1)^k e_i`, then sums `e_i + e_j`; every extension
/// attempt costs one budget step.
pub fn freeness_certificate(
    h: &HopfAlgebra,
    sub: &Subspace,
    budget: u64,
) -> Result<FreenessCertificate, FreenessFailure> {
    let (n, d) = (h.dim(), sub.dim());
    if d == 0 || n % d != 0 {
        return Err(FreenessFailure::DimensionObstruction { sub_dim: d, dim: n });
    }
    let rank = n / d;
    let mut steps = 0u64;
    let mut basis_candidates: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis(i)).collect();
    basis_candidates.retain(|v| v != h.unit());
    let mut pair_candidates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = h.basis(i);
            v[j] = h.field().one();
            pair_candidates.push(v);
        }
    }
    // moment vectors Σ (i+1)^k e_i, generic enough to meet every coset-like block
    let moments: Vec<Vec<Scalar>> = (1..=n as i64)
        .map(|k| (0..n).map(|i| h.field().from_i64(i as i64 + 1).pow(k)).collect())
        .collect();
    for candidates in [
        basis_candidates.clone(),
        [basis_candidates.clone(), moments].concat(),
        [basis_candidates, pair_candidates].concat(),
    ] {
        let start = module_span(h, sub, h.unit(), &Subspace::zero(h.field(), n));
        let Some(start) = start else { break };
        let mut chosen = vec![h.unit().to_vec()];
        match search(h, sub, &candidates, 0, start, &mut chosen, rank, &mut steps, budget) {
            Ok(true) => {
                let cert = FreenessCertificate {
                    subalgebra: sub.clone(),
                    cofactors: chosen,
                };
                debug_assert!(cert.verify(h));
                return Ok(cert);
            }
            Ok(false) => continue,
            Err(()) => return Err(FreenessFailure::Budget { steps }),
        }
    }
    Err(FreenessFailure::Exhausted)
}

/// `span + C·a` if `C·a` has full dimension and meets `span` trivially.
fn module_span(h: &HopfAlgebra, sub: &Subspace, a: &[Scalar], span: &Subspace) -> Option<Subspace> {
    let vecs: Vec<Vec<Scalar>> = sub.basis().iter().map(|c| h.multiply(c, a)).collect();
    let added = Subspace::span(h.field(), h.dim(), vecs).unwrap();
    let total = span.sum(&added).unwrap();
    (total.dim() == span.dim() + sub.dim()).then_some(total)
}

#[allow(clippy::too_many_arguments)]
fn search(
    h: &HopfAlgebra,
    sub: &Subspace,
    candidates: &[Vec<Scalar>],
    from: usize,
    span: Subspace,
    chosen: &mut Vec<Vec<Scalar>>,
    rank: usize,
    steps: &mut u64,
    budget: u64,
) -> Result<bool, ()> {
    if chosen.len() == rank {
        return Ok(true);
    }
    for (offset, a) in candidates[from..].iter().enumerate() {
        *steps += 1;
        if *steps > budget {
            return Err(());
        }
        if span.contains(a).unwrap() {
            continue;
        }
        if let Some(next) = module_span(h, sub, a, &span) {
            chosen.push(a.clone());
            if search(h, sub, candidates, from + offset + 1, next, chosen, rank, steps, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

/// Solves `h ∘ p1 = p2` for surjective Hopf maps out of the same algebra and
/// certifies `h` as a Hopf morphism (an isomorphism when both are surjective
/// with equal kernels).
pub fn factor_through(p1: &HopfMorphism, p2: &HopfMorphism) -> Result<HopfMorphism, Error> {
    if **p1.source() != **p2.source() {
        return Err(Error::AlgebraMismatch);
    }
    // h P1 = P2  <=>  P1^T h^T = P2^T, solved column by column of h^T
    let p1t = p1.matrix().transpose();
    let p2t = p2.matrix().transpose();
    let (m1, m2) = (p1.target().dim(), p2.target().dim());
    let mut h = Matrix::zeros(p1.source().field(), m2, m1);
    for r in 0..m2 {
        let sol = p1t
            .solve(&p2t.column(r))?
            .ok_or_else(|| Error::NoFactorization(format!("row {r} of the target map has no preimage")))?;
        for (c, v) in sol.into_iter().enumerate() {
            h.set(r, c, v);
        }
    }
    HopfMorphism::new(p1.target().clone(), p2.target().clone(), h)
}

/// Convenience: the cokernel of `ι` from a passing sequence matches `B`.
pub fn cokernel_round_trip(seq: &ExactSequence) -> Result<HopfMorphism, Error> {
    let cok = hopf_cokernel(&seq.iota)?;
    let iso = factor_through(&cok.projection, &seq.pi)?;
    if iso.matrix().rows() != iso.matrix().cols() || iso.matrix().inverse().is_none() {
        return Err(Error::Inconsistent("cokernel is not isomorphic to B".into()));
    }
    Ok(iso)
}
