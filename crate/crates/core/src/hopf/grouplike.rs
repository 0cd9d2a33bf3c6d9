//! Grouplike elements as characters of the dual algebra.

use serde::Serialize;

use crate::hopf::{dual_hopf, HopfAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupAlgebraVerdict {
    GroupAlgebra,
    NotGroupAlgebra,
    /// Some eigenvalue lies outside the base field; no conclusion is drawn.
    ExtensionRequired,
}

#[derive(Debug, Clone)]
pub struct GrouplikeReport {
    pub verdict: GroupAlgebraVerdict,
    pub grouplikes: Vec<Vec<Scalar>>,
    /// All eigenvalues needed by the search lie in the base field.
    pub complete: bool,
}

/// Grouplikes `g` (`Δg = g⊗g`, `ε(g) = 1`) found in the base field.
///
/// A grouplike is a character `χ` of `R = H*`, i.e. a common eigenvector of
/// the transposed left multiplications `L_r^T` with eigenvalue `χ(r)`. The
/// search branches over eigenvalues of `L_{r_0}^T, L_{r_1}^T, ...` and
/// intersects eigenspaces. The second component is false when some minimal
/// polynomial does not split over the field.
pub fn grouplikes(h: &HopfAlgebra) -> (Vec<Vec<Scalar>>, bool) {
    let r = dual_hopf(h);
    let n = h.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| r.left_multiplication(&r.basis(i)).transpose()).collect();
    let mut complete = true;
    let mut roots: Vec<Option<Vec<Scalar>>> = vec![None; n];
    let mut found = Vec::new();
    let mut stack: Vec<(usize, Subspace, Vec<Scalar>)> = vec![(0, Subspace::full(h.field(), n), Vec::new())];
    while let Some((i, space, values)) = stack.pop() {
        if i == n {
            if is_grouplike(h, &values) {
                found.push(values);
            }
            continue;
        }
        if roots[i].is_none() {
            let fr = ops[i].minimal_polynomial().roots();
            complete &= fr.complete;
            roots[i] = Some(fr.roots.into_iter().map(|(x, _)| x).collect());
        }
        for lambda in roots[i].as_ref().unwrap().iter().rev() {
            let shifted = ops[i].sub(&Matrix::identity(h.field(), n).scale(lambda)).unwrap();
            let eigen = space.intersection(&shifted.kernel()).unwrap();
            if !eigen.is_zero() {
                let mut next = values.clone();
                next.push(lambda.clone());
                stack.push((i + 1, eigen, next));
            }
        }
    }
    found.sort_by_key(|g| g.iter().position(|x| !x.is_zero()));
    (found, complete)
}

fn is_grouplike(h: &HopfAlgebra, g: &[Scalar]) -> bool {
    h.counit(g).is_one() && h.comultiply(g) == crate::linalg::tensor::outer(g, g)
}

/// Decides whether `H` is the group algebra of its grouplikes.
pub fn group_algebra_check(h: &HopfAlgebra) -> GrouplikeReport {
    let (found, complete) = grouplikes(h);
    let verdict = if found.len() == h.dim() {
        GroupAlgebraVerdict::GroupAlgebra
    } else if !h.is_cocommutative() || complete {
        GroupAlgebraVerdict::NotGroupAlgebra
    } else {
        GroupAlgebraVerdict::ExtensionRequired
    };
    GrouplikeReport {
        verdict,
        grouplikes: found,
        complete,
    }
}
