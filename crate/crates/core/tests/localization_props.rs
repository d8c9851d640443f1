mod common;

use common::{corpus, deg, f5, reduction_barcode};
use largescale::localization::{
    barcode_from_ranks, localized_barcode, localized_dim, localized_rank, Interval, SubsetMask,
};
use largescale::presentation::{box_points, random_presentation, Multidegree, RandomParams};

#[test]
fn moebius_barcodes_match_column_reduction() {
    for (seed, module) in corpus(100).iter().enumerate() {
        for axis in 1..=2 {
            let ours = localized_barcode(module, axis).unwrap();
            assert_eq!(
                ours,
                reduction_barcode(module, axis),
                "seed {seed}, axis {axis}"
            );
        }
    }
    let params = RandomParams {
        m: 3,
        max_gens: 4,
        max_rels: 5,
        max_degree: 3,
    };
    for seed in 0..40 {
        let module = random_presentation(seed, &params, &f5()).unwrap();
        for axis in 1..=3 {
            assert_eq!(
                localized_barcode(&module, axis).unwrap(),
                reduction_barcode(&module, axis)
            );
        }
    }
}

#[test]
fn bars_reproduce_the_rank_function() {
    for module in corpus(100) {
        for axis in 1..=2 {
            let bc = localized_barcode(&module, axis).unwrap();
            let sigma = SubsetMask::full(2).without(axis);
            let last = module.stabilization_bound()[axis - 1];
            for a in 0..=last + 2 {
                for b in a..=last + 2 {
                    let r = localized_rank(&module, sigma, &deg(&[a]), &deg(&[b])).unwrap();
                    assert_eq!(bc.rank(a, b), r, "axis {axis}, [{a},{b}]");
                }
            }
        }
    }
}

#[test]
fn memoized_ranks_give_the_same_barcode() {
    for module in corpus(60) {
        let b = module.stabilization_bound();
        for axis in 1..=2 {
            let i = axis - 1;
            let last = b[i];
            let n = (last + 1) as usize;
            let mut table = vec![vec![0usize; n]; n];
            for x in 0..n {
                for y in x..n {
                    let t = module
                        .transition_matrix(&b.with(i, x as i64), &b.with(i, y as i64))
                        .unwrap();
                    table[x][y] = t.rank();
                }
            }
            let memo =
                barcode_from_ranks(axis, last, |x, y| Ok(table[x as usize][y as usize])).unwrap();
            assert_eq!(memo, localized_barcode(&module, axis).unwrap());
        }
    }
}

#[test]
fn infinite_bars_count_the_generic_rank() {
    for module in corpus(100) {
        let full = localized_dim(&module, SubsetMask::full(2), &deg(&[0, 0])).unwrap();
        assert_eq!(full, module.dim_at(&module.stabilization_bound()).unwrap());
        for axis in 1..=2 {
            assert_eq!(
                localized_barcode(&module, axis).unwrap().infinite_count(),
                full
            );
        }
    }
}

#[test]
fn localized_dims_are_pinned_evaluations() {
    for module in corpus(40) {
        let b = module.stabilization_bound();
        let hi = b.add(&deg(&[2, 2]));
        for d in box_points(&Multidegree::zero(2), &hi) {
            for bits in 0..4u32 {
                let sigma = SubsetMask(bits);
                let mut pinned = d.clone();
                for v in sigma.vertices() {
                    pinned = pinned.with(v - 1, d[v - 1].max(b[v - 1]));
                }
                assert_eq!(
                    localized_dim(&module, sigma, &d).unwrap(),
                    module.dim_at(&pinned).unwrap()
                );
            }
            assert_eq!(
                localized_dim(&module, SubsetMask::full(2), &d.sub(&deg(&[10, 10]))).unwrap(),
                module.dim_at(&b).unwrap()
            );
        }
    }
}

#[test]
fn strip_barcodes() {
    let f = f5();
    let v = largescale::presentation::vstrip(&f, 1, 4).unwrap();
    let bc = localized_barcode(&v, 1).unwrap();
    assert_eq!(bc.bars, vec![(Interval::finite(1, 4), 1)]);
    assert!(localized_barcode(&v, 2).unwrap().bars.is_empty());
}
