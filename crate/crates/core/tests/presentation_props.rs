mod common;

use common::{deg, f5};
use largescale::linalg::Matrix;
use largescale::presentation::{
    box_points, named_example, random_presentation, GradedPresentation, Multidegree, RandomParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(m: usize) -> RandomParams {
    RandomParams {
        m,
        max_gens: 5,
        max_rels: 6,
        max_degree: 4,
    }
}

fn random_chain(
    rng: &mut ChaCha8Rng,
    m: usize,
    max: i64,
) -> (Multidegree, Multidegree, Multidegree) {
    let a = Multidegree::new((0..m).map(|_| rng.random_range(0..=max)).collect());
    let mut step = |base: &Multidegree| {
        Multidegree::new(
            base.coords()
                .iter()
                .map(|x| x + rng.random_range(0..=2))
                .collect(),
        )
    };
    let b = step(&a);
    let c = step(&b);
    (a, b, c)
}

#[test]
fn functoriality() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..100 {
        let m = 2 + (seed % 2) as usize;
        let module = random_presentation(seed, &params(m), &f5()).unwrap();
        let (a, b, c) = random_chain(&mut rng, m, 4);
        let direct = module.transition_matrix(&a, &c).unwrap();
        let composed = module
            .transition_matrix(&b, &c)
            .unwrap()
            .mul(&module.transition_matrix(&a, &b).unwrap())
            .unwrap();
        assert_eq!(direct, composed, "seed {seed}: {a} <= {b} <= {c}");
        assert_eq!(
            module.transition_matrix(&a, &a).unwrap(),
            Matrix::identity(&f5(), module.dim_at(&a).unwrap())
        );
    }
}

#[test]
fn rank_invariant_matches_transition_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for seed in 0..100 {
        let module = random_presentation(seed, &params(2), &f5()).unwrap();
        let (a, b, c) = random_chain(&mut rng, 2, 4);
        let rab = module.rank_invariant(&a, &b).unwrap();
        assert_eq!(rab, module.transition_matrix(&a, &b).unwrap().rank());
        assert_eq!(
            module.rank_invariant(&a, &a).unwrap(),
            module.dim_at(&a).unwrap()
        );
        let rac = module.rank_invariant(&a, &c).unwrap();
        assert!(rac <= rab.min(module.rank_invariant(&b, &c).unwrap()));
    }
}

#[test]
fn stabilization() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for seed in 0..40 {
        let module = random_presentation(seed, &params(2), &f5()).unwrap();
        let bound = module.stabilization_bound();
        for _ in 0..20 {
            let c = Multidegree::new(
                bound
                    .coords()
                    .iter()
                    .map(|x| x + rng.random_range(0..3))
                    .collect(),
            );
            let c2 = Multidegree::new(
                c.coords()
                    .iter()
                    .map(|x| x + rng.random_range(0..3))
                    .collect(),
            );
            let t = module.transition_matrix(&c, &c2).unwrap();
            assert!(
                t.is_square() && t.is_invertible(),
                "seed {seed}: {c} -> {c2}"
            );
        }
    }
}

#[test]
fn additivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for seed in 0..50 {
        let a = random_presentation(seed, &params(2), &f5()).unwrap();
        let b = random_presentation(seed + 1000, &params(2), &f5()).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        let (p, q, _) = random_chain(&mut rng, 2, 5);
        assert_eq!(
            sum.rank_invariant(&p, &q).unwrap(),
            a.rank_invariant(&p, &q).unwrap() + b.rank_invariant(&p, &q).unwrap()
        );
        assert_eq!(
            sum.dim_at(&q).unwrap(),
            a.dim_at(&q).unwrap() + b.dim_at(&q).unwrap()
        );
    }
}

#[test]
fn random_presentations_are_homogeneous() {
    let params = RandomParams {
        m: 2,
        max_gens: 5,
        max_rels: 8,
        max_degree: 6,
    };
    for seed in 0..200 {
        let p = random_presentation(seed, &params, &f5()).unwrap();
        for (j, rd) in p.rel_degrees().iter().enumerate() {
            for (i, gd) in p.gen_degrees().iter().enumerate() {
                assert!(*p.rel_coeffs().get(i, j) == 0 || gd.le(rd));
            }
        }
        assert!(p
            .gen_degrees()
            .iter()
            .chain(p.rel_degrees())
            .all(|d| d.is_nonnegative() && d.coords().iter().all(|&x| x <= 6)));
    }
}

#[test]
fn shift_moves_dimensions() {
    for seed in 0..30 {
        let module = random_presentation(seed, &params(2), &f5()).unwrap();
        let e = deg(&[1, 2]);
        let shifted = module.shift(&e).unwrap();
        for d in box_points(&Multidegree::zero(2), &deg(&[4, 4])) {
            assert_eq!(
                shifted.dim_at(&d.add(&e)).unwrap(),
                module.dim_at(&d).unwrap()
            );
        }
    }
}

#[test]
fn samerank_values_from_the_examples() {
    let m = named_example(&f5(), "samerank_M")
        .unwrap()
        .into_module()
        .unwrap();
    let n = named_example(&f5(), "samerank_N")
        .unwrap()
        .into_module()
        .unwrap();
    for a in box_points(&Multidegree::zero(2), &deg(&[3, 3])) {
        let expected = if a == Multidegree::zero(2) {
            0
        } else if a.le(&deg(&[3, 0])) || a.le(&deg(&[0, 3])) {
            1
        } else {
            2
        };
        assert_eq!(m.dim_at(&a).unwrap(), expected, "{a}");
        assert_eq!(n.dim_at(&a).unwrap(), expected, "{a}");
    }
}

#[test]
fn monomial_quotient_transitions() {
    let q = GradedPresentation::monomial_quotient(&f5(), 2, &[deg(&[2, 0])]).unwrap();
    assert_eq!(
        q.transition_matrix(&deg(&[0, 0]), &deg(&[1, 0])).unwrap(),
        Matrix::identity(&f5(), 1)
    );
    assert_eq!(
        q.transition_matrix(&deg(&[1, 0]), &deg(&[2, 0]))
            .unwrap()
            .shape(),
        (0, 1)
    );
}
