//! Independent oracles shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use std::collections::BTreeMap;

use largescale::linalg::{Field, Fp};
use largescale::localization::{Barcode, Interval};
use largescale::presentation::{
    random_presentation, GradedPresentation, Multidegree, RandomParams,
};

pub fn f5() -> Fp {
    Fp::new(5).unwrap()
}

pub fn deg(v: &[i64]) -> Multidegree {
    Multidegree::from(v)
}

/// The 200-module corpus: m = 2, at most 5 generators, 8 relations, degrees up to 6.
pub fn corpus(n: u64) -> Vec<GradedPresentation<Fp>> {
    let params = RandomParams {
        m: 2,
        max_gens: 5,
        max_rels: 8,
        max_degree: 6,
    };
    (0..n)
        .map(|s| random_presentation(s, &params, &f5()).unwrap())
        .collect()
}

/// Barcode of `M_{σ_i}` by the standard persistence reduction on the pinned slice.
///
/// Pinning the other coordinates at the bound makes every generator and relation present, so
/// the slice is the one-parameter presentation with degrees read off axis `i`. Generators are
/// sorted by degree; each relation column is reduced against earlier columns until its lowest
/// nonzero row (youngest generator) is new. A reduced column pairs that generator with the
/// relation; unpaired generators live forever.
pub fn reduction_barcode<F: Field>(m: &GradedPresentation<F>, axis: usize) -> Barcode {
    let f = m.field();
    let i = axis - 1;
    let mut gens: Vec<usize> = (0..m.num_gens()).collect();
    gens.sort_by_key(|&g| (m.gen_degrees()[g][i], g));
    let mut rels: Vec<usize> = (0..m.num_rels()).collect();
    rels.sort_by_key(|&r| (m.rel_degrees()[r][i], r));
    let mut cols: Vec<Vec<F::Elem>> = rels
        .iter()
        .map(|&r| {
            gens.iter()
                .map(|&g| m.rel_coeffs().get(g, r).clone())
                .collect()
        })
        .collect();
    let low = |c: &[F::Elem]| c.iter().rposition(|x| !f.is_zero(x));
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut bars = Vec::new();
    for k in 0..cols.len() {
        while let Some(p) = low(&cols[k]) {
            let Some(&j) = owner.get(&p) else { break };
            let factor = f.mul(&cols[k][p], &f.inv(&cols[j][p]).unwrap());
            let pivot_col = cols[j].clone();
            for (x, y) in cols[k].iter_mut().zip(&pivot_col) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        if let Some(p) = low(&cols[k]) {
            owner.insert(p, k);
            let birth = m.gen_degrees()[gens[p]][i];
            let death = m.rel_degrees()[rels[k]][i];
            if birth < death {
                bars.push(Interval::finite(birth, death));
            }
        }
    }
    let paired: Vec<usize> = owner.keys().copied().collect();
    for (p, &g) in gens.iter().enumerate() {
        if !paired.contains(&p) {
            bars.push(Interval::infinite(m.gen_degrees()[g][i]));
        }
    }
    Barcode::from_bars(axis, bars)
}

/// Every vector of `F_2^n` in the span of `vectors`, by enumerating all 0/1 combinations.
pub fn brute_span_f2(n: usize, vectors: &[Vec<u64>]) -> std::collections::BTreeSet<Vec<u64>> {
    let mut out = std::collections::BTreeSet::new();
    for mask in 0u32..(1 << vectors.len()) {
        let mut v = vec![0u64; n];
        for (k, w) in vectors.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for (a, b) in v.iter_mut().zip(w) {
                    *a ^= b;
                }
            }
        }
        out.insert(v);
    }
    out
}
