#![allow(dead_code)]

use std::sync::Arc;

use hopfkit::hopf::builtins::sweedler_coboundary_twist;
use hopfkit::hopf::{function_algebra, group_algebra, small_quantum_sl2, sweedler_h4, taft, Group, HopfAlgebra};
use hopfkit::{Field, Scalar, Subspace};

pub fn q() -> Field {
    Field::rationals()
}

pub fn groups() -> Vec<Group> {
    let mut gs: Vec<Group> = (1..=6).map(|n| Group::cyclic(n).unwrap()).collect();
    gs.extend([Group::symmetric3(), Group::dihedral4(), Group::quaternion(), Group::klein()]);
    gs
}

pub fn nonabelian() -> Vec<Group> {
    vec![Group::symmetric3(), Group::dihedral4(), Group::quaternion()]
}

/// Brute-force center of a group from its Cayley table.
pub fn group_center(g: &Group) -> Vec<usize> {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for a in 0..g.order() {
        if seen[a] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|x| g.mul(g.mul(x, a), g.inverse(x))).collect();
        class.sort();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Left cosets `xN` of a normal subgroup, as sorted index lists.
pub fn cosets(g: &Group, normal: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        let mut c: Vec<usize> = normal.iter().map(|&n| g.mul(x, n)).collect();
        c.sort();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

pub fn indicator(field: &Field, n: usize, support: &[usize]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    for &i in support {
        v[i] = field.one();
    }
    v
}

pub fn span_of_indicators(field: &Field, n: usize, sets: &[Vec<usize>]) -> Subspace {
    Subspace::span(field, n, sets.iter().map(|s| indicator(field, n, s))).unwrap()
}

pub fn span_of_basis(field: &Field, n: usize, idx: &[usize]) -> Subspace {
    Subspace::span(field, n, idx.iter().map(|&i| indicator(field, n, &[i]))).unwrap()
}

/// Every algebra the acceptance criteria quantify over.
pub fn builtins() -> Vec<Arc<HopfAlgebra>> {
    let mut out = Vec::new();
    for g in groups() {
        out.push(Arc::new(group_algebra(&g, &q())));
        out.push(Arc::new(function_algebra(&g, &q())));
    }
    out.push(Arc::new(sweedler_h4(&q())));
    out.push(Arc::new(taft(3, 1).unwrap()));
    out.push(Arc::new(small_quantum_sl2(3).unwrap()));
    out.push(Arc::new(sweedler_coboundary_twist(&q()).unwrap().algebra));
    out
}

/// The same list without the 27-dimensional algebra, for quadratic-cost checks.
pub fn small_builtins() -> Vec<Arc<HopfAlgebra>> {
    builtins().into_iter().filter(|h| h.dim() < 27).collect()
}

pub fn uq() -> Arc<HopfAlgebra> {
    Arc::new(small_quantum_sl2(3).unwrap())
}
