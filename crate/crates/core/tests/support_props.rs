mod common;

use common::f5;
use largescale::presentation::{random_presentation, RandomParams};
use largescale::support::{
    enumerate_complexes, face_ring, in_kernel_lk, kdim, random_complex, serre_chain, serre_step,
    simples, supp_complex, supp_complex_by_nilpotence, FaceRingRelations, SimplicialComplex,
};

/// Downward-closed families found by filtering every family of subsets of `[m]`.
fn brute_complexes(m: usize) -> Vec<Vec<u32>> {
    let subsets = 1u32 << m;
    let mut out = Vec::new();
    for family in 0u64..(1u64 << subsets) {
        let has = |s: u32| family >> s & 1 == 1;
        let closed = (0..subsets)
            .filter(|&s| has(s))
            .all(|s| (0..m).all(|v| !has(s) || has(s & !(1 << v))));
        if closed {
            out.push((0..subsets).filter(|&s| has(s)).collect());
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for m in 1..=3 {
        let mut ours: Vec<Vec<u32>> = enumerate_complexes(m)
            .unwrap()
            .iter()
            .map(|k| k.faces().iter().map(|s| s.0).collect())
            .collect();
        let mut brute = brute_complexes(m);
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute, "m = {m}");
    }
    assert_eq!(enumerate_complexes(4).unwrap().len(), 168);
}

#[test]
fn face_rings_have_the_complex_as_support() {
    let f = f5();
    let mut all: Vec<SimplicialComplex> = (1..=3)
        .flat_map(|m| enumerate_complexes(m).unwrap())
        .collect();
    all.extend((0..50).map(|s| random_complex(4, s).unwrap()));
    for k in &all {
        for rel in [FaceRingRelations::Minimal, FaceRingRelations::All] {
            let ring = face_ring(&f, k, rel).unwrap();
            assert_eq!(&supp_complex(&ring).unwrap(), k);
            assert_eq!(&supp_complex_by_nilpotence(&ring).unwrap(), k);
        }
    }
}

#[test]
fn box_test_agrees_with_nilpotence() {
    for m in 1..=3 {
        let params = RandomParams {
            m,
            max_gens: 4,
            max_rels: 6,
            max_degree: 3,
        };
        for seed in 0..70 {
            let module = random_presentation(seed, &params, &f5()).unwrap();
            assert_eq!(
                supp_complex(&module).unwrap(),
                supp_complex_by_nilpotence(&module).unwrap(),
                "m {m}, seed {seed}"
            );
        }
    }
}

#[test]
fn kernel_membership_is_support_containment() {
    let params = RandomParams {
        m: 2,
        max_gens: 3,
        max_rels: 5,
        max_degree: 3,
    };
    let complexes = enumerate_complexes(2).unwrap();
    for seed in 0..40 {
        let module = random_presentation(seed, &params, &f5()).unwrap();
        let supp = supp_complex_by_nilpotence(&module).unwrap();
        for k in &complexes {
            assert_eq!(in_kernel_lk(&module, k).unwrap(), supp.is_subcomplex_of(k));
        }
    }
}

#[test]
fn support_of_a_sum_is_the_union() {
    let params = RandomParams {
        m: 3,
        max_gens: 3,
        max_rels: 4,
        max_degree: 3,
    };
    for seed in 0..30 {
        let a = random_presentation(seed, &params, &f5()).unwrap();
        let b = random_presentation(seed + 77, &params, &f5()).unwrap();
        let (sa, sb) = (supp_complex(&a).unwrap(), supp_complex(&b).unwrap());
        let union =
            SimplicialComplex::new(3, sa.faces().iter().chain(sb.faces()).copied()).unwrap();
        assert_eq!(supp_complex(&a.direct_sum(&b).unwrap()).unwrap(), union);
    }
}

#[test]
fn krull_dimension_counts_serre_steps() {
    for m in 1..=4 {
        for k in enumerate_complexes(m).unwrap() {
            let chain = serre_chain(&k);
            assert_eq!(kdim(&k), chain.len() as i64 - 2, "{k}");
            for w in chain.windows(2) {
                assert!(w[0].is_subcomplex_of(&w[1]) && w[0] != w[1]);
            }
            let missing = k.missing_faces().iter().map(|s| s.len()).min();
            assert_eq!(kdim(&k), missing.map_or(-1, |s| m as i64 - s as i64));
        }
    }
}

#[test]
fn skeleta_step_to_the_next_skeleton() {
    for m in 1..=5 {
        for i in -2..m as i64 - 1 {
            let sk = SimplicialComplex::skeleton(m, i).unwrap();
            assert_eq!(
                serre_step(&sk),
                SimplicialComplex::skeleton(m, i + 1).unwrap()
            );
            let from_empty = serre_chain(&SimplicialComplex::empty(m).unwrap());
            assert_eq!(from_empty[(i + 2) as usize], sk);
        }
        assert_eq!(
            serre_chain(&SimplicialComplex::empty(m).unwrap()).len(),
            m + 2
        );
        if m >= 3 {
            let km = SimplicialComplex::skeleton(m, m as i64 - 3).unwrap();
            assert_eq!(kdim(&km), 1);
            assert_eq!(serre_chain(&km).len(), 3);
        }
    }
}

#[test]
fn simples_live_on_minimal_missing_faces() {
    let f = f5();
    for k in enumerate_complexes(3).unwrap() {
        if k.is_full() {
            assert!(simples(&k).is_empty());
            continue;
        }
        let next = serre_step(&k);
        for s in simples(&k) {
            let module = s.realize(&f, 3).unwrap();
            let supp = supp_complex(&module).unwrap();
            assert_eq!(supp, SimplicialComplex::closure(3, [s.sigma]).unwrap());
            assert!(!in_kernel_lk(&module, &k).unwrap());
            assert!(in_kernel_lk(&module, &next).unwrap());
            assert!(s
                .sigma
                .vertices()
                .iter()
                .all(|&v| k.contains(&s.sigma.without(v))));
        }
    }
}
