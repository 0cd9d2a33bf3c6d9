//! Sparse sums of basis tensors, keyed by multi-index.

use std::collections::BTreeMap;

use crate::hopf::HopfAlgebra;
use crate::linalg::tensor::{flatten, unflatten};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone)]
pub struct Terms {
    field: Field,
    map: BTreeMap<Vec<usize>, Scalar>,
}

/// Equality of the sums; the field tag of an empty sum is ignored.
impl PartialEq for Terms {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Terms {}

impl Terms {
    pub fn new(field: &Field) -> Self {
        Terms {
            field: field.clone(),
            map: BTreeMap::new(),
        }
    }

    pub fn from_vector(v: &[Scalar]) -> Self {
        let field = v.first().map(Scalar::field).unwrap_or_else(Field::rationals);
        let mut t = Terms::new(&field);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.map.insert(vec![i], c.clone());
            }
        }
        t
    }

    /// Reads a flat tensor of the given order.
    pub fn from_flat(v: &[Scalar], n: usize, order: usize) -> Self {
        let field = v.first().map(Scalar::field).unwrap_or_else(Field::rationals);
        let mut t = Terms::new(&field);
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.map.insert(unflatten(p, n, order), c.clone());
            }
        }
        t
    }

    pub fn add(&mut self, key: Vec<usize>, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.map.get_mut(&key) {
            Some(slot) => {
                *slot = &*slot + &value;
                if slot.is_zero() {
                    self.map.remove(&key);
                }
            }
            None => {
                self.map.insert(key, value);
            }
        }
    }

    pub fn add_terms(&mut self, other: &Terms, scale: &Scalar) {
        for (k, v) in &other.map {
            self.add(k.clone(), v * scale);
        }
    }

    pub fn sub(&self, other: &Terms) -> Terms {
        let mut out = self.clone();
        out.add_terms(other, &-&self.field.one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn to_flat(&self, n: usize, order: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); n.pow(order as u32)];
        for (k, v) in &self.map {
            debug_assert_eq!(k.len(), order);
            out[flatten(k, n)] = v.clone();
        }
        out
    }

    /// Row-major flattening of a two-leg tensor in `k^rows ⊗ k^cols`.
    pub fn to_flat_rect(&self, rows: usize, cols: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); rows * cols];
        for (k, v) in &self.map {
            debug_assert!(k.len() == 2 && k[0] < rows && k[1] < cols);
            out[k[0] * cols + k[1]] = v.clone();
        }
        out
    }

    /// First multi-index where the two sums differ.
    pub fn first_difference(&self, other: &Terms) -> Option<Vec<usize>> {
        self.sub(other).map.keys().next().cloned()
    }
}

impl HopfAlgebra {
    /// Product of two basis tensors leg by leg.
    pub(crate) fn multiply_basis_tensors(&self, a: &[usize], b: &[usize]) -> Vec<(Vec<usize>, Scalar)> {
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), self.field().one())];
        for (&x, &y) in a.iter().zip(b) {
            let prod = self.product_of_basis(x, y);
            if prod.is_empty() {
                return Vec::new();
            }
            let mut next = Vec::with_capacity(partial.len() * prod.len());
            for (idx, c) in &partial {
                for (k, pc) in prod {
                    let mut idx2 = idx.clone();
                    idx2.push(*k);
                    next.push((idx2, c * pc));
                }
            }
            partial = next;
        }
        partial
    }

    /// Leg-wise product of two sparse tensors of equal order.
    pub fn multiply_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new(self.field());
        for (ka, va) in a.iter() {
            for (kb, vb) in b.iter() {
                let ab = va * vb;
                for (k, c) in self.multiply_basis_tensors(ka, kb) {
                    out.add(k, &ab * &c);
                }
            }
        }
        out
    }

    /// `Δ` as a sparse order-2 tensor.
    pub fn comultiply_terms(&self, x: &[Scalar]) -> Terms {
        let mut out = Terms::new(self.field());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in self.coproduct_of_basis(i) {
                out.add(vec![*j, *k], a * c);
            }
        }
        out
    }

    /// Applies `Δ` to leg `leg` of every term.
    pub fn comultiply_leg(&self, t: &Terms, leg: usize) -> Terms {
        let mut out = Terms::new(self.field());
        for (k, v) in t.iter() {
            for (j, l, c) in self.coproduct_of_basis(k[leg]) {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..leg]);
                key.push(*j);
                key.push(*l);
                key.extend_from_slice(&k[leg + 1..]);
                out.add(key, v * c);
            }
        }
        out
    }

    /// Applies a linear map (given by its matrix) to leg `leg` of every term.
    pub fn map_leg(&self, t: &Terms, leg: usize, columns: &[Vec<(usize, Scalar)>]) -> Terms {
        let mut out = Terms::new(self.field());
        for (k, v) in t.iter() {
            for (r, c) in &columns[k[leg]] {
                let mut key = k.clone();
                key[leg] = *r;
                out.add(key, v * c);
            }
        }
        out
    }

    /// Applies `ε` to leg `leg`, lowering the order by one.
    pub fn counit_leg(&self, t: &Terms, leg: usize) -> Terms {
        let mut out = Terms::new(self.field());
        for (k, v) in t.iter() {
            let e = &self.counit_vector()[k[leg]];
            if e.is_zero() {
                continue;
            }
            let mut key = k.clone();
            key.remove(leg);
            out.add(key, v * e);
        }
        out
    }

    /// Multiplies legs `leg` and `leg + 1` together.
    pub fn multiply_legs(&self, t: &Terms, leg: usize) -> Terms {
        let mut out = Terms::new(self.field());
        for (k, v) in t.iter() {
            for (p, c) in self.product_of_basis(k[leg], k[leg + 1]) {
                let mut key = Vec::with_capacity(k.len() - 1);
                key.extend_from_slice(&k[..leg]);
                key.push(*p);
                key.extend_from_slice(&k[leg + 2..]);
                out.add(key, v * c);
            }
        }
        out
    }

    /// Column lists of the antipode (and its inverse) for use with [`Self::map_leg`].
    pub fn antipode_columns(&self) -> Vec<Vec<(usize, Scalar)>> {
        sparse_columns(self.antipode_matrix())
    }
}

pub(crate) fn sparse_columns(m: &crate::linalg::Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter_map(|r| {
                    let v = m.get(r, c);
                    (!v.is_zero()).then(|| (r, v.clone()))
                })
                .collect()
        })
        .collect()
}
