//! Leg-numbered tensors over `A^{⊗k}`.
//!
//! A tensor of order `k` over an `n`-dimensional space is a flat vector of
//! length `n^k`; the multi-index `(i_0, ..., i_{k-1})` sits at the row-major
//! position `((i_0 * n + i_1) * n + ...) + i_{k-1}`, so for `k = 2` the
//! pair `(i, j)` maps to `i * n + j`. Legs are numbered from 0.

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Field, Scalar};

pub fn flatten(indices: &[usize], n: usize) -> usize {
    indices.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn unflatten(mut index: usize, n: usize, order: usize) -> Vec<usize> {
    let mut out = vec![0; order];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

fn check_legs(legs: &[usize], order: usize) -> Result<(), LinalgError> {
    for (i, &l) in legs.iter().enumerate() {
        if l >= order {
            return Err(LinalgError::IndexOutOfRange { index: l, bound: order });
        }
        if legs[..i].contains(&l) {
            return Err(LinalgError::RepeatedLeg(l));
        }
    }
    Ok(())
}

/// Applies `map` (a matrix on `A^{⊗legs.len()}`) to the listed legs of `x`,
/// identity on the others. `legs[0]` is the map's first tensor factor.
pub fn leg_apply(
    map: &Matrix,
    legs: &[usize],
    x: &[Scalar],
    n: usize,
    order: usize,
) -> Result<Vec<Scalar>, LinalgError> {
    check_legs(legs, order)?;
    let arity = legs.len();
    let block = n.pow(arity as u32);
    if map.rows() != block || map.cols() != block {
        return Err(LinalgError::DimensionMismatch {
            expected: block,
            found: map.cols(),
        });
    }
    let total = n.pow(order as u32);
    if x.len() != total {
        return Err(LinalgError::DimensionMismatch {
            expected: total,
            found: x.len(),
        });
    }
    let field = map.field().clone();
    // column-wise nonzero entries of the map
    let columns: Vec<Vec<(usize, Scalar)>> = (0..block)
        .map(|c| {
            (0..block)
                .filter_map(|r| {
                    let v = map.get(r, c);
                    (!v.is_zero()).then(|| (r, v.clone()))
                })
                .collect()
        })
        .collect();
    let mut out = vec![field.zero(); total];
    for (pos, coeff) in x.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut idx = unflatten(pos, n, order);
        let sub: Vec<usize> = legs.iter().map(|&l| idx[l]).collect();
        for (r, v) in &columns[flatten(&sub, n)] {
            let new_sub = unflatten(*r, n, arity);
            for (&l, &s) in legs.iter().zip(&new_sub) {
                idx[l] = s;
            }
            let target = flatten(&idx, n);
            out[target] = &out[target] + &(coeff * v);
        }
    }
    Ok(out)
}

/// Places a tensor of order `legs.len()` into the given legs of an order-`order`
/// tensor, filling every other leg with `filler` (usually the unit).
pub fn embed_legs(
    x: &[Scalar],
    legs: &[usize],
    order: usize,
    filler: &[Scalar],
) -> Result<Vec<Scalar>, LinalgError> {
    check_legs(legs, order)?;
    let n = filler.len();
    let arity = legs.len();
    if x.len() != n.pow(arity as u32) {
        return Err(LinalgError::DimensionMismatch {
            expected: n.pow(arity as u32),
            found: x.len(),
        });
    }
    let field: Field = filler
        .first()
        .map(Scalar::field)
        .unwrap_or_else(Field::rationals);
    let others: Vec<usize> = (0..order).filter(|l| !legs.contains(l)).collect();
    let filler_nz: Vec<(usize, &Scalar)> = filler
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .collect();
    let mut out = vec![field.zero(); n.pow(order as u32)];
    if filler_nz.is_empty() && !others.is_empty() {
        return Ok(out);
    }
    for (pos, coeff) in x.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let sub = unflatten(pos, n, arity);
        let mut idx = vec![0; order];
        for (&l, &s) in legs.iter().zip(&sub) {
            idx[l] = s;
        }
        // iterate over all filler choices for the remaining legs
        let mut choice = vec![0usize; others.len()];
        loop {
            let mut c = coeff.clone();
            for (k, &l) in others.iter().enumerate() {
                let (i, f) = filler_nz[choice[k]];
                idx[l] = i;
                c = &c * f;
            }
            let t = flatten(&idx, n);
            out[t] = &out[t] + &c;
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < filler_nz.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Reorders tensor legs: output leg `j` carries input leg `perm[j]`.
pub fn permute_legs(x: &[Scalar], perm: &[usize], n: usize) -> Result<Vec<Scalar>, LinalgError> {
    let order = perm.len();
    check_legs(perm, order)?;
    let field = x.first().map(Scalar::field).unwrap_or_else(Field::rationals);
    let mut out = vec![field.zero(); x.len()];
    for (pos, coeff) in x.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let idx = unflatten(pos, n, order);
        let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        out[flatten(&new, n)] = coeff.clone();
    }
    Ok(out)
}

/// `x ⊗ y` for flat tensors over the same `n`.
pub fn outer(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let field = x.first().or(y.first()).map(Scalar::field).unwrap_or_else(Field::rationals);
    let mut out = vec![field.zero(); x.len() * y.len()];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                out[i * y.len() + j] = a * b;
            }
        }
    }
    out
}

/// Kronecker product `a ⊗ b` of two linear maps.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for ar in 0..a.rows() {
        for ac in 0..a.cols() {
            let x = a.get(ar, ac);
            if x.is_zero() {
                continue;
            }
            for br in 0..b.rows() {
                for bc in 0..b.cols() {
                    let y = b.get(br, bc);
                    if !y.is_zero() {
                        out.set(ar * b.rows() + br, ac * b.cols() + bc, x * y);
                    }
                }
            }
        }
    }
    out
}
