mod common;

use largescale::linalg::{image_of_map, subspace_ops, Field, Fp, Matrix, Rationals, Subspace};
use proptest::prelude::*;

fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
    })
}

fn f(p: u64) -> Fp {
    Fp::new(p).unwrap()
}

proptest! {
    #[test]
    fn rank_of_transpose(rows in matrix_strategy(6), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let a = Matrix::from_i64_rows(&f(p), &rows).unwrap();
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rank_nullity(rows in matrix_strategy(6)) {
        let a = Matrix::from_i64_rows(&f(5), &rows).unwrap();
        let k = a.kernel();
        prop_assert_eq!(k.dim() + a.rank(), a.ncols());
        for v in k.basis().columns() {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| *x == 0));
        }
        let q = Matrix::from_i64_rows(&Rationals, &rows).unwrap();
        prop_assert_eq!(q.kernel().dim() + q.rank(), q.ncols());
    }

    #[test]
    fn dimension_identity(u in matrix_strategy(6), w in matrix_strategy(6)) {
        let n = u.len().min(w.len());
        let field = f(5);
        let u = Subspace::span(&Matrix::from_i64_rows(&field, &u[..n]).unwrap());
        let w = Subspace::span(&Matrix::from_i64_rows(&field, &w[..n]).unwrap());
        let ops = subspace_ops(&u, &w).unwrap();
        prop_assert_eq!(u.dim() + w.dim(), ops.sum.dim() + ops.intersection.dim());
        prop_assert!(ops.intersection.is_subspace_of(&u).unwrap());
        prop_assert!(ops.intersection.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&ops.sum).unwrap());
    }

    #[test]
    fn canonicalization_is_idempotent(rows in matrix_strategy(6)) {
        let s = Subspace::span(&Matrix::from_i64_rows(&f(7), &rows).unwrap());
        let again = Subspace::span(s.basis());
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.basis(), s.basis());
        prop_assert_eq!(s.basis().rank(), s.dim());
    }

    #[test]
    fn spans_match_enumeration_over_f2(
        n in 1usize..=6,
        vecs in proptest::collection::vec(proptest::collection::vec(0u64..2, 6), 0..=5),
    ) {
        let field = f(2);
        let vecs: Vec<Vec<u64>> = vecs.into_iter().map(|v| v[..n].to_vec()).collect();
        let span = Subspace::from_vectors(&field, n, &vecs).unwrap();
        let members = common::brute_span_f2(n, &vecs);
        prop_assert_eq!(members.len(), 1usize << span.dim());
        for mask in 0u32..(1 << n) {
            let v: Vec<u64> = (0..n).map(|i| u64::from(mask >> i & 1)).collect();
            prop_assert_eq!(span.contains(&v).unwrap(), members.contains(&v));
        }
    }

    #[test]
    fn image_dimension_bounds(rows in matrix_strategy(5), urows in matrix_strategy(5)) {
        let field = f(3);
        let a = Matrix::from_i64_rows(&field, &rows).unwrap();
        let n = a.ncols();
        let ucols: Vec<Vec<u64>> = urows
            .iter()
            .map(|r| (0..n).map(|i| field.from_i64(*r.get(i).unwrap_or(&0))).collect())
            .collect();
        let u = Subspace::from_vectors(&field, n, &ucols).unwrap();
        let img = image_of_map(&a, &u).unwrap();
        prop_assert!(img.dim() <= u.dim().min(a.rank()));
        prop_assert_eq!(image_of_map(&Matrix::identity(&field, n), &u).unwrap(), u.clone());
        prop_assert_eq!(image_of_map(&Matrix::zeros(&field, 2, n), &u).unwrap().dim(), 0);
    }

    #[test]
    fn solve_finds_solutions(rows in matrix_strategy(5), x in proptest::collection::vec(-3i64..=3, 5)) {
        let field = f(5);
        let a = Matrix::from_i64_rows(&field, &rows).unwrap();
        let x: Vec<u64> = (0..a.ncols()).map(|i| field.from_i64(x[i])).collect();
        let b = a.mul_vec(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }
}

#[test]
fn projection_of_the_diagonal() {
    let field = f(5);
    let p = Matrix::from_i64_rows(&field, &[vec![1, 0], vec![0, 0]]).unwrap();
    let diag = Subspace::from_vectors(&field, 2, &[vec![1, 1]]).unwrap();
    let axis = Subspace::from_vectors(&field, 2, &[vec![1, 0]]).unwrap();
    assert_eq!(image_of_map(&p, &diag).unwrap(), axis);
}

#[test]
fn kernel_of_the_rank_one_example() {
    let field = f(5);
    let a = Matrix::from_i64_rows(&field, &[vec![1, 2], vec![2, 4]]).unwrap();
    let k = a.kernel();
    assert_eq!(k, Subspace::from_vectors(&field, 2, &[vec![3, 1]]).unwrap());
}

#[test]
fn seeded_six_dimensional_identity() {
    use rand::{Rng, SeedableRng};
    let field = f(2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let mut draw = || -> Vec<Vec<u64>> {
            (0..rng.random_range(0..=4))
                .map(|_| (0..6).map(|_| rng.random_range(0..2)).collect())
                .collect()
        };
        let (uv, wv) = (draw(), draw());
        let u = Subspace::from_vectors(&field, 6, &uv).unwrap();
        let w = Subspace::from_vectors(&field, 6, &wv).unwrap();
        let su = common::brute_span_f2(6, &uv);
        let sw = common::brute_span_f2(6, &wv);
        let both: Vec<Vec<u64>> = uv.iter().chain(&wv).cloned().collect();
        let ssum = common::brute_span_f2(6, &both);
        let sint = su.intersection(&sw).count();
        let ops = subspace_ops(&u, &w).unwrap();
        assert_eq!(1usize << ops.sum.dim(), ssum.len());
        assert_eq!(1usize << ops.intersection.dim(), sint);
        assert_eq!(u.dim() + w.dim(), ops.sum.dim() + ops.intersection.dim());
    }
}
