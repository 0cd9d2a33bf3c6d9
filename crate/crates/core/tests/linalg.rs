use hopfkit::linalg::tensor::{embed_legs, flatten, leg_apply, outer, unflatten};
use hopfkit::{Field, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn f7() -> Field {
    Field::prime(7).unwrap()
}

fn q() -> Field {
    Field::rationals()
}

fn vector(field: &Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

fn matrix(field: &Field, cols: usize, rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_rows(field, cols, rows.iter().map(|r| vector(field, r)).collect()).unwrap()
}

fn rows(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
}

proptest! {
    #[test]
    fn rank_nullity(m in rows(5, 7), rational in any::<bool>()) {
        let f = if rational { q() } else { f7() };
        let a = matrix(&f, 7, &m);
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.dim(), 7);
        for v in k.basis() {
            prop_assert!(a.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_gives_witness_or_proves_infeasible(m in rows(4, 5), rhs in prop::collection::vec(-3i64..=3, 4)) {
        let a = matrix(&q(), 5, &m);
        let b = vector(&q(), &rhs);
        let column_space = Subspace::span(&q(), 4, (0..5).map(|c| a.column(c))).unwrap();
        match a.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(a.apply(&x).unwrap(), b),
            None => prop_assert!(!column_space.contains(&b).unwrap()),
        }
    }

    #[test]
    fn modular_dimension_law(u in rows(3, 6), v in rows(4, 6)) {
        let f = f7();
        let u = Subspace::span(&f, 6, u.iter().map(|r| vector(&f, r))).unwrap();
        let v = Subspace::span(&f, 6, v.iter().map(|r| vector(&f, r))).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && s.contains_subspace(&v).unwrap());
        prop_assert!(u.contains_subspace(&i).unwrap() && v.contains_subspace(&i).unwrap());
        prop_assert_eq!(u.intersection(&u).unwrap(), u.clone());
        prop_assert_eq!(u.sum(&u).unwrap(), u);
    }

    /// Any invertible recombination of a spanning set gives the same value.
    #[test]
    fn rref_canonicity(basis in rows(3, 6), mix in rows(3, 3), shift in 1i64..=5) {
        let f = q();
        let vs: Vec<Vec<Scalar>> = basis.iter().map(|r| vector(&f, r)).collect();
        let mut t = matrix(&f, 3, &mix);
        for d in 0..3 {
            // strictly diagonally dominant, hence invertible
            let big = f.from_i64(10 + shift);
            t.set(d, d, big);
        }
        let mixed: Vec<Vec<Scalar>> = (0..3)
            .map(|r| {
                (0..6)
                    .map(|c| (0..3).fold(f.zero(), |acc, k| &acc + &(t.get(r, k) * &vs[k][c])))
                    .collect()
            })
            .collect();
        let a = Subspace::span(&f, 6, vs.clone()).unwrap();
        let b = Subspace::span(&f, 6, mixed.into_iter().rev()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn leg_apply_respects_composition(t in rows(4, 4), u in rows(4, 4), x in prop::collection::vec(-2i64..=2, 8), legs in prop::sample::select(vec![[0usize, 1], [1, 2], [0, 2], [2, 0]])) {
        let f = q();
        let (t, u) = (matrix(&f, 4, &t), matrix(&f, 4, &u));
        let x = vector(&f, &x);
        let once = leg_apply(&u.mul(&t).unwrap(), &legs, &x, 2, 3).unwrap();
        let twice = leg_apply(&u, &legs, &leg_apply(&t, &legs, &x, 2, 3).unwrap(), 2, 3).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn flatten_round_trip(i in 0usize..5, j in 0usize..5, k in 0usize..5) {
        prop_assert_eq!(unflatten(flatten(&[i, j], 5), 5, 2), vec![i, j]);
        prop_assert_eq!(flatten(&[i, j], 5), i * 5 + j);
        prop_assert_eq!(unflatten(flatten(&[i, j, k], 5), 5, 3), vec![i, j, k]);
    }
}

#[test]
fn kernel_examples() {
    let k = matrix(&q(), 2, &[vec![1, 1]]).kernel();
    assert_eq!(k, Subspace::span(&q(), 2, [vector(&q(), &[1, -1])]).unwrap());
    assert!(Matrix::identity(&q(), 3).kernel().is_zero());
    assert!(matrix(&q(), 2, &[vec![1, 1], vec![2, 2]]).solve(&vector(&q(), &[1, 3])).unwrap().is_none());
    assert!(matrix(&q(), 2, &[vec![1, 1]]).apply(&vector(&q(), &[1, 2, 3])).is_err());
}

#[test]
fn subspace_examples() {
    let x = Subspace::span(&q(), 2, [vector(&q(), &[1, 0])]).unwrap();
    let y = Subspace::span(&q(), 2, [vector(&q(), &[0, 1])]).unwrap();
    assert!(x.intersection(&y).unwrap().is_zero());
    assert!(x.sum(&y).unwrap().is_full());
    let other = Subspace::full(&q(), 3);
    assert!(x.sum(&other).is_err());
    assert!(x.contains(&vector(&q(), &[1, 2, 3])).is_err());
}

#[test]
fn leg_examples() {
    let f = q();
    let n = 2;
    let x = vector(&f, &[1, 2, 3, 4]);
    let one = vector(&f, &[1, 0]);
    let id = Matrix::identity(&f, 4);
    let x3 = embed_legs(&x, &[1, 2], 3, &one).unwrap();
    assert_eq!(x3, outer(&one, &x));
    assert_eq!(leg_apply(&id, &[1, 2], &x3, n, 3).unwrap(), x3);

    let t = matrix(&f, 4, &[vec![1, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 2, 0], vec![0, 0, 1, 1]]);
    let t_inv = t.inverse().unwrap();
    let y = leg_apply(&t_inv, &[0, 1], &leg_apply(&t, &[0, 1], &x3, n, 3).unwrap(), n, 3).unwrap();
    assert_eq!(y, x3);
    assert!(leg_apply(&id, &[1, 3], &x3, n, 3).is_err());
    assert!(leg_apply(&id, &[1, 1], &x3, n, 3).is_err());
}
