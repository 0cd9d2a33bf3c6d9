//! Sparse element arithmetic for the inner loops of identity checks.

use crate::hopf::{HopfAlgebra, SparseVec};
use crate::scalar::Scalar;

pub(crate) fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn mul(h: &HopfAlgebra, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut acc = h.zero();
    for (i, x) in a {
        for (j, y) in b {
            let xy = x * y;
            for (k, c) in h.product_of_basis(*i, *j) {
                acc[*k] = &acc[*k] + &(&xy * c);
            }
        }
    }
    sparsify(&acc)
}

pub(crate) fn mul3(h: &HopfAlgebra, a: &SparseVec, b: &SparseVec, c: &SparseVec) -> SparseVec {
    mul(h, &mul(h, a, b), c)
}

pub(crate) fn unit_vec(h: &HopfAlgebra, i: usize) -> SparseVec {
    vec![(i, h.field().one())]
}

/// `acc += scale · (a ⊗ b)` in the flat `n²` layout.
pub(crate) fn add_outer(acc: &mut [Scalar], n: usize, scale: &Scalar, a: &SparseVec, b: &SparseVec) {
    for (i, x) in a {
        let sx = scale * x;
        for (j, y) in b {
            let p = i * n + j;
            acc[p] = &acc[p] + &(&sx * y);
        }
    }
}

/// `acc += scale · a`
pub(crate) fn add_scaled(acc: &mut [Scalar], scale: &Scalar, a: &SparseVec) {
    for (i, x) in a {
        acc[*i] = &acc[*i] + &(scale * x);
    }
}
