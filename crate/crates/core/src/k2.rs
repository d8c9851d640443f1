//! Two-parameter modules up to finite modules: strips, quadrants, delocalization and sections.
//!
//! The torsion part comes from the one-parameter barcodes of the two strip localizations.
//! The torsion-free part is read off the two image filtrations of the stable corner
//! `M(B)`: `V1(d)` is the image of `M(d, B2)` and `V2(e)` the image of `M(B1, e)`. Quadrant
//! multiplicities are the mixed second differences of `dim(V1(d) ∩ V2(e))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};
use crate::localization::{localized_barcode, localized_dim, Interval, SubsetMask};
use crate::presentation::{hstrip, vstrip, GradedPresentation, Multidegree, PresentationMap};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LargeScaleDecomposition {
    pub vertical_strips: Vec<(Interval, usize)>,
    pub horizontal_strips: Vec<(Interval, usize)>,
    pub quadrants: Vec<(Multidegree, usize)>,
}

impl LargeScaleDecomposition {
    pub fn is_empty(&self) -> bool {
        self.vertical_strips.is_empty()
            && self.horizontal_strips.is_empty()
            && self.quadrants.is_empty()
    }

    pub fn quadrant_count(&self) -> usize {
        self.quadrants.iter().map(|(_, k)| k).sum()
    }

    /// Canonical form: sorted, merged, zero multiplicities dropped.
    pub fn canonical(self) -> Self {
        fn merge<K: Ord>(v: Vec<(K, usize)>) -> Vec<(K, usize)> {
            let mut map: BTreeMap<K, usize> = BTreeMap::new();
            for (k, n) in v {
                *map.entry(k).or_default() += n;
            }
            map.into_iter().filter(|(_, n)| *n > 0).collect()
        }
        LargeScaleDecomposition {
            vertical_strips: merge(self.vertical_strips),
            horizontal_strips: merge(self.horizontal_strips),
            quadrants: merge(self.quadrants),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionStrips {
    pub vertical: Vec<(Interval, usize)>,
    pub horizontal: Vec<(Interval, usize)>,
}

pub(crate) fn require_m<F: Field>(module: &GradedPresentation<F>, m: usize) -> Result<()> {
    if module.m() != m {
        return Err(Error::UnsupportedM {
            expected: m,
            found: module.m(),
        });
    }
    Ok(())
}

pub fn torsion_strips<F: Field>(module: &GradedPresentation<F>) -> Result<TorsionStrips> {
    require_m(module, 2)?;
    Ok(TorsionStrips {
        vertical: localized_barcode(module, 1)?.finite_bars(),
        horizontal: localized_barcode(module, 2)?.finite_bars(),
    })
}

/// The two image filtrations of the stable corner `M(B)`.
#[derive(Clone, Debug)]
pub struct Bifiltration<F: Field> {
    pub bound: Multidegree,
    pub ambient_dim: usize,
    pub v1: Vec<Subspace<F>>,
    pub v2: Vec<Subspace<F>>,
}

impl<F: Field> Bifiltration<F> {
    fn chain_at(chain: &[Subspace<F>], d: i64) -> Option<&Subspace<F>> {
        if d < 0 {
            None
        } else {
            chain.get(d as usize).or_else(|| chain.last())
        }
    }

    /// `V1(d)`, with `V1(d) = 0` for `d < 0` and `V1(d) = V1(B1)` past the bound.
    pub fn v1_at(&self, d: i64) -> Option<&Subspace<F>> {
        Self::chain_at(&self.v1, d)
    }

    pub fn v2_at(&self, e: i64) -> Option<&Subspace<F>> {
        Self::chain_at(&self.v2, e)
    }

    /// `I(d, e) = dim(V1(d) ∩ V2(e))`, defined for all integers.
    pub fn intersection_dim(&self, d: i64, e: i64) -> Result<usize> {
        match (self.v1_at(d), self.v2_at(e)) {
            (Some(a), Some(b)) => Ok(a.intersection(b)?.dim()),
            _ => Ok(0),
        }
    }

    /// `I` on `[0, B1] × [0, B2]`, indexed `[d][e]`.
    pub fn intersection_table(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.v1.len())
            .map(|d| {
                (0..self.v2.len())
                    .map(|e| self.intersection_dim(d as i64, e as i64))
                    .collect()
            })
            .collect()
    }

    /// Both chains are increasing and end at the whole corner.
    pub fn is_exhaustive_chain(&self) -> Result<bool> {
        for chain in [&self.v1, &self.v2] {
            for w in chain.windows(2) {
                if !w[0].is_subspace_of(&w[1])? {
                    return Ok(false);
                }
            }
            if chain.last().map(|s| s.dim()) != Some(self.ambient_dim) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn bifiltration<F: Field>(module: &GradedPresentation<F>) -> Result<Bifiltration<F>> {
    require_m(module, 2)?;
    let b = module.stabilization_bound();
    let ambient_dim = module.dim_at(&b)?;
    let chain = |axis: usize| -> Result<Vec<Subspace<F>>> {
        (0..=b[axis])
            .map(|x| {
                Ok(Subspace::span(
                    &module.transition_matrix(&b.with(axis, x), &b)?,
                ))
            })
            .collect()
    };
    Ok(Bifiltration {
        ambient_dim,
        v1: chain(0)?,
        v2: chain(1)?,
        bound: b,
    })
}

/// Corners `(d, e)` with multiplicity `I(d,e) − I(d−1,e) − I(d,e−1) + I(d−1,e−1)`.
pub fn quadrant_corners<F: Field>(
    module: &GradedPresentation<F>,
) -> Result<Vec<(Multidegree, usize)>> {
    let bf = bifiltration(module)?;
    let table = bf.intersection_table()?;
    let at = |d: i64, e: i64| -> i64 {
        if d < 0 || e < 0 {
            0
        } else {
            table[d as usize][e as usize] as i64
        }
    };
    let mut out = Vec::new();
    for d in 0..table.len() as i64 {
        for e in 0..table[0].len() as i64 {
            let k = at(d, e) - at(d - 1, e) - at(d, e - 1) + at(d - 1, e - 1);
            if k < 0 {
                return Err(Error::NegativeMultiplicity {
                    location: format!("quadrant corner ({d},{e})"),
                    value: k,
                });
            }
            if k > 0 {
                out.push((Multidegree::from([d, e]), k as usize));
            }
        }
    }
    Ok(out)
}

pub fn decompose<F: Field>(module: &GradedPresentation<F>) -> Result<LargeScaleDecomposition> {
    let strips = torsion_strips(module)?;
    Ok(LargeScaleDecomposition {
        vertical_strips: strips.vertical,
        horizontal_strips: strips.horizontal,
        quadrants: quadrant_corners(module)?,
    }
    .canonical())
}

fn strip_bounds(iv: &Interval) -> Result<(i64, i64)> {
    match iv.end {
        crate::localization::Endpoint::Finite(b) => Ok((iv.start, b)),
        crate::localization::Endpoint::Infinity => Err(Error::EmptyParameterRange(format!(
            "strip {iv} must be finite"
        ))),
    }
}

/// The direct sum of strip and quadrant presentations described by `dec`.
pub fn reconstruct<F: Field>(
    field: &F,
    dec: &LargeScaleDecomposition,
) -> Result<GradedPresentation<F>> {
    let mut parts = Vec::new();
    for (iv, k) in &dec.vertical_strips {
        let (a, b) = strip_bounds(iv)?;
        parts.extend(std::iter::repeat_n(vstrip(field, a, b)?, *k));
    }
    for (iv, k) in &dec.horizontal_strips {
        let (a, b) = strip_bounds(iv)?;
        parts.extend(std::iter::repeat_n(hstrip(field, a, b)?, *k));
    }
    for (c, k) in &dec.quadrants {
        if c.len() != 2 {
            return Err(Error::DegreeLength {
                expected: 2,
                found: c.coords().to_vec(),
            });
        }
        parts.extend(std::iter::repeat_n(GradedPresentation::free(field, c)?, *k));
    }
    GradedPresentation::direct_sum_all(field, 2, &parts)
}

pub fn equivalent_in_dk2<F: Field>(
    a: &GradedPresentation<F>,
    b: &GradedPresentation<F>,
) -> Result<bool> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(decompose(a)? == decompose(b)?)
}

/// `dim` of the fiber product `M_{{2}}(d) ×_{M_{{1,2}}(d)} M_{{1}}(d)`.
pub fn delocalize_dim<F: Field>(module: &GradedPresentation<F>, d: &Multidegree) -> Result<usize> {
    require_m(module, 2)?;
    module.check_degree(d)?;
    if !d.is_nonnegative() {
        return Err(Error::NegativeDegree(d.to_string()));
    }
    let e = d.join(&module.stabilization_bound());
    let left = Multidegree::from([d[0], e[1]]);
    let right = Multidegree::from([e[0], d[1]]);
    let t1 = module.transition_matrix(&left, &e)?;
    let t2 = module.transition_matrix(&right, &e)?;
    let f = module.field();
    let diff = t1.hstack(&t2.scale(&f.neg(&f.one())))?;
    Ok(diff.ncols() - diff.rank())
}

/// `dim(im(M(a) → M(c)) ∩ im(M(b) → M(c)))`.
pub fn intersection_rank<F: Field>(
    module: &GradedPresentation<F>,
    a: &Multidegree,
    b: &Multidegree,
    c: &Multidegree,
) -> Result<usize> {
    let ia = Subspace::span(&module.transition_matrix(a, c)?);
    let ib = Subspace::span(&module.transition_matrix(b, c)?);
    Ok(ia.intersection(&ib)?.dim())
}

/// Images of the target generators under a section, in canonical coordinates of the source at
/// the pinned degrees `(d_j1, P2)` and `(P1, d_j2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionWitness<F: Field> {
    pub pin: Multidegree,
    pub axis1: Vec<Vec<F::Elem>>,
    pub axis2: Vec<Vec<F::Elem>>,
}

struct LinearSystem<F: Field> {
    field: F,
    block_sizes: Vec<usize>,
    rows: Vec<(Vec<(usize, Matrix<F>)>, Vec<F::Elem>)>,
}

impl<F: Field> LinearSystem<F> {
    fn equation(&mut self, terms: Vec<(usize, Matrix<F>)>, rhs: Vec<F::Elem>) {
        self.rows.push((terms, rhs));
    }

    fn solve(&self) -> Result<Option<Vec<Vec<F::Elem>>>> {
        let offsets: Vec<usize> = self
            .block_sizes
            .iter()
            .scan(0, |acc, &s| {
                let o = *acc;
                *acc += s;
                Some(o)
            })
            .collect();
        let ncols: usize = self.block_sizes.iter().sum();
        let nrows: usize = self.rows.iter().map(|(_, r)| r.len()).sum();
        let mut a = Matrix::zeros(&self.field, nrows, ncols);
        let mut b = Vec::with_capacity(nrows);
        let mut r0 = 0;
        for (terms, rhs) in &self.rows {
            for (blk, m) in terms {
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        let v = self
                            .field
                            .add(a.get(r0 + i, offsets[*blk] + j), m.get(i, j));
                        a.set(r0 + i, offsets[*blk] + j, v);
                    }
                }
            }
            b.extend(rhs.iter().cloned());
            r0 += rhs.len();
        }
        Ok(a.solve(&b)?.map(|x| {
            offsets
                .iter()
                .zip(&self.block_sizes)
                .map(|(&o, &s)| x[o..o + s].to_vec())
                .collect()
        }))
    }
}

fn check_epimorphism<F: Field>(map: &PresentationMap<F>) -> Result<()> {
    require_m(map.source(), 2)?;
    let coker = map.cokernel()?;
    let b = coker.stabilization_bound();
    for axis in 1..=2 {
        let sigma = SubsetMask::full(2).without(axis);
        for x in 0..=b[axis - 1] {
            let d = Multidegree::zero(2).with(axis - 1, x);
            if localized_dim(&coker, sigma, &d)? != 0 {
                return Err(Error::NotEpimorphism(axis));
            }
        }
    }
    Ok(())
}

struct SectionSetup {
    pin: Multidegree,
    /// Pinned degree of each target generator per axis.
    degrees: [Vec<Multidegree>; 2],
}

fn section_setup<F: Field>(map: &PresentationMap<F>) -> SectionSetup {
    let pin = map
        .source()
        .stabilization_bound()
        .join(&map.target().stabilization_bound());
    let degrees = [0, 1].map(|k| {
        map.target()
            .gen_degrees()
            .iter()
            .map(|g| pin.with(k, g[k]))
            .collect::<Vec<_>>()
    });
    SectionSetup { pin, degrees }
}

/// Adds the relation and right-inverse constraints for one axis; unknown blocks start at
/// `offset`.
fn axis_constraints<F: Field>(
    map: &PresentationMap<F>,
    setup: &SectionSetup,
    axis: usize,
    offset: usize,
    sys: &mut LinearSystem<F>,
) -> Result<()> {
    let (s, t) = (map.source(), map.target());
    let f = s.field();
    let degs = &setup.degrees[axis];
    for (r, rd) in t.rel_degrees().iter().enumerate() {
        let e = setup.pin.with(axis, rd[axis]);
        let terms = (0..t.num_gens())
            .filter(|&j| !f.is_zero(t.rel_coeffs().get(j, r)))
            .map(|j| {
                let tr = s.transition_matrix(&degs[j], &e)?;
                Ok((offset + j, tr.scale(t.rel_coeffs().get(j, r))))
            })
            .collect::<Result<Vec<_>>>()?;
        sys.equation(terms, vec![f.zero(); s.dim_at(&e)?]);
    }
    for (j, c) in degs.iter().enumerate() {
        sys.equation(
            vec![(offset + j, map.at(c)?)],
            t.slice(c)?.reduce_generator(j)?,
        );
    }
    Ok(())
}

fn block_sizes<F: Field>(
    map: &PresentationMap<F>,
    setup: &SectionSetup,
    axis: usize,
) -> Result<Vec<usize>> {
    setup.degrees[axis]
        .iter()
        .map(|c| map.source().dim_at(c))
        .collect()
}

/// Whether the section equations for one strip localization alone (axis 1 or 2) are solvable.
pub fn single_axis_solvable<F: Field>(map: &PresentationMap<F>, axis: usize) -> Result<bool> {
    check_epimorphism(map)?;
    if axis == 0 || axis > 2 {
        return Err(Error::AxisOutOfRange { axis, m: 2 });
    }
    let setup = section_setup(map);
    let mut sys = LinearSystem {
        field: map.source().field().clone(),
        block_sizes: block_sizes(map, &setup, axis - 1)?,
        rows: Vec::new(),
    };
    axis_constraints(map, &setup, axis - 1, 0, &mut sys)?;
    Ok(sys.solve()?.is_some())
}

/// A right inverse of the localized map, if one exists.
pub fn section_exists<F: Field>(map: &PresentationMap<F>) -> Result<Option<SectionWitness<F>>> {
    check_epimorphism(map)?;
    let setup = section_setup(map);
    let n = map.target().num_gens();
    let mut sizes = block_sizes(map, &setup, 0)?;
    sizes.extend(block_sizes(map, &setup, 1)?);
    let mut sys = LinearSystem {
        field: map.source().field().clone(),
        block_sizes: sizes,
        rows: Vec::new(),
    };
    axis_constraints(map, &setup, 0, 0, &mut sys)?;
    axis_constraints(map, &setup, 1, n, &mut sys)?;
    let s = map.source();
    let f = s.field();
    for j in 0..n {
        let a = s.transition_matrix(&setup.degrees[0][j], &setup.pin)?;
        let b = s.transition_matrix(&setup.degrees[1][j], &setup.pin)?;
        sys.equation(
            vec![(j, a), (n + j, b.scale(&f.neg(&f.one())))],
            vec![f.zero(); s.dim_at(&setup.pin)?],
        );
    }
    Ok(sys.solve()?.map(|mut blocks| {
        let axis2 = blocks.split_off(n);
        SectionWitness {
            pin: setup.pin.clone(),
            axis1: blocks,
            axis2,
        }
    }))
}

/// Checks a witness against the defining properties directly: relations of the target vanish,
/// the composite with the map is the identity on generators, and the two halves agree at the
/// stable corner.
pub fn verify_section<F: Field>(map: &PresentationMap<F>, w: &SectionWitness<F>) -> Result<bool> {
    let (s, t) = (map.source(), map.target());
    let f = s.field();
    let zero = |v: &[F::Elem]| v.iter().all(|x| f.is_zero(x));
    for (axis, images) in [&w.axis1, &w.axis2].into_iter().enumerate() {
        if images.len() != t.num_gens() {
            return Ok(false);
        }
        let degs: Vec<Multidegree> = t
            .gen_degrees()
            .iter()
            .map(|g| w.pin.with(axis, g[axis]))
            .collect();
        for (j, c) in degs.iter().enumerate() {
            if images[j].len() != s.dim_at(c)? {
                return Ok(false);
            }
            let back = map.at(c)?.mul_vec(&images[j])?;
            if back != t.slice(c)?.reduce_generator(j)? {
                return Ok(false);
            }
        }
        for (r, rd) in t.rel_degrees().iter().enumerate() {
            let e = w.pin.with(axis, rd[axis]);
            let mut acc = vec![f.zero(); s.dim_at(&e)?];
            for j in 0..t.num_gens() {
                let c = t.rel_coeffs().get(j, r);
                if f.is_zero(c) {
                    continue;
                }
                let v = s.transition_matrix(&degs[j], &e)?.mul_vec(&images[j])?;
                for (x, y) in acc.iter_mut().zip(v) {
                    *x = f.add(x, &f.mul(c, &y));
                }
            }
            if !zero(&acc) {
                return Ok(false);
            }
        }
    }
    for j in 0..t.num_gens() {
        let g = &t.gen_degrees()[j];
        let a = s
            .transition_matrix(&w.pin.with(0, g[0]), &w.pin)?
            .mul_vec(&w.axis1[j])?;
        let b = s
            .transition_matrix(&w.pin.with(1, g[1]), &w.pin)?
            .mul_vec(&w.axis2[j])?;
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::presentation::named_example;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    fn d(v: &[i64]) -> Multidegree {
        Multidegree::from(v)
    }

    fn named(name: &str) -> GradedPresentation<Fp> {
        named_example(&f5(), name).unwrap().into_module().unwrap()
    }

    fn q(v: &[i64]) -> (Multidegree, usize) {
        (d(v), 1)
    }

    #[test]
    fn samerank_quadrants() {
        assert_eq!(
            decompose(&named("samerank_M")).unwrap().quadrants,
            vec![q(&[0, 0]), q(&[1, 1])]
        );
        assert_eq!(
            decompose(&named("samerank_N")).unwrap().quadrants,
            vec![q(&[0, 1]), q(&[1, 0])]
        );
        assert!(!equivalent_in_dk2(&named("samerank_M"), &named("samerank_N")).unwrap());
    }

    #[test]
    fn strips() {
        let f = f5();
        let free = GradedPresentation::free(&f, &d(&[0, 0])).unwrap();
        let s = torsion_strips(&free).unwrap();
        assert!(s.vertical.is_empty() && s.horizontal.is_empty());
        let sq = GradedPresentation::monomial_quotient(&f, 2, &[d(&[2, 0])]).unwrap();
        let s = torsion_strips(&sq).unwrap();
        assert_eq!(s.vertical, vec![(Interval::finite(0, 2), 1)]);
        assert!(s.horizontal.is_empty());
        let dec = decompose(&named("rho_counterexample")).unwrap();
        assert_eq!(dec.vertical_strips, vec![(Interval::finite(0, 1), 1)]);
        assert_eq!(dec.horizontal_strips, vec![(Interval::finite(0, 1), 1)]);
        assert!(dec.quadrants.is_empty());
    }

    #[test]
    fn bifiltration_of_n() {
        let bf = bifiltration(&named("samerank_N")).unwrap();
        assert_eq!(bf.ambient_dim, 2);
        assert_eq!(bf.v1[0].dim(), 1);
        assert_eq!(bf.v1[1].dim(), 2);
        assert!(bf.is_exhaustive_chain().unwrap());
        let free = GradedPresentation::free(&f5(), &d(&[2, 1])).unwrap();
        let bf = bifiltration(&free).unwrap();
        assert_eq!(
            bf.v1.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            vec![0, 0, 1]
        );
    }

    #[test]
    fn reconstruct_and_invisibility() {
        let f = f5();
        assert_eq!(
            reconstruct(&f, &LargeScaleDecomposition::default())
                .unwrap()
                .num_gens(),
            0
        );
        let dec = LargeScaleDecomposition {
            quadrants: vec![q(&[1, 1])],
            ..Default::default()
        };
        assert_eq!(
            reconstruct(&f, &dec).unwrap(),
            GradedPresentation::free(&f, &d(&[1, 1])).unwrap()
        );
        let m = named("samerank_M");
        let finite =
            GradedPresentation::monomial_quotient(&f, 2, &[d(&[1, 0]), d(&[0, 1])]).unwrap();
        assert!(equivalent_in_dk2(&m, &m.direct_sum(&finite).unwrap()).unwrap());
        assert!(decompose(&GradedPresentation::zero(&f, 2).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn delocalization() {
        let f = f5();
        let r = GradedPresentation::free(&f, &d(&[0, 0])).unwrap();
        let rho = named("rho_counterexample");
        assert_eq!(delocalize_dim(&r, &d(&[2, 3])).unwrap(), 1);
        assert_eq!(delocalize_dim(&rho, &d(&[0, 0])).unwrap(), 2);
        assert_eq!(delocalize_dim(&rho, &d(&[1, 1])).unwrap(), 0);
        assert!(delocalize_dim(&rho, &d(&[-1, 0])).is_err());
    }

    #[test]
    fn intersection_ranks() {
        let (a, b, c) = (d(&[1, 0]), d(&[0, 1]), d(&[1, 1]));
        assert_eq!(
            intersection_rank(&named("samerank_N"), &a, &b, &c).unwrap(),
            0
        );
        assert_eq!(
            intersection_rank(&named("samerank_M"), &a, &b, &c).unwrap(),
            1
        );
        let m = named("samerank_M");
        assert_eq!(
            intersection_rank(&m, &a, &a, &c).unwrap(),
            m.rank_invariant(&a, &c).unwrap()
        );
    }

    #[test]
    fn sections() {
        let f = f5();
        let notsplit = named_example(&f, "notsplit").unwrap().into_map().unwrap();
        assert!(section_exists(&notsplit).unwrap().is_none());
        assert!(single_axis_solvable(&notsplit, 1).unwrap());
        assert!(single_axis_solvable(&notsplit, 2).unwrap());

        let m = named("samerank_M");
        let id = PresentationMap::identity(&m);
        let w = section_exists(&id).unwrap().unwrap();
        assert!(verify_section(&id, &w).unwrap());

        let r = GradedPresentation::free(&f, &d(&[0, 0])).unwrap();
        let src = r
            .direct_sum(&GradedPresentation::free(&f, &d(&[1, 1])).unwrap())
            .unwrap();
        let proj = PresentationMap::from_i64(src, r.clone(), &[vec![1, 0]]).unwrap();
        let w = section_exists(&proj).unwrap().unwrap();
        assert!(verify_section(&proj, &w).unwrap());

        let inc = PresentationMap::from_i64(
            GradedPresentation::free(&f, &d(&[1, 0])).unwrap(),
            r,
            &[vec![1]],
        )
        .unwrap();
        assert!(matches!(
            section_exists(&inc),
            Err(Error::NotEpimorphism(_))
        ));
    }

    #[test]
    fn wrong_m() {
        let m3 = named("m3_indecomposable");
        assert!(matches!(decompose(&m3), Err(Error::UnsupportedM { .. })));
    }
}
