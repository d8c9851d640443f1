//! Three-parameter modules with bounded torsion as representations of the star quiver `Q_n`:
//! three legs of `n` vertices each, every arrow pointing toward a common sink.
//!
//! Vertex 0 is the sink; vertex `1 + l·n + k` is position `k` on leg `l`. Arrow `k` of leg `l`
//! goes from position `k` to position `k + 1`, and the last one into the sink.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::k2::require_m;
use crate::linalg::{Field, Matrix, Subspace};
use crate::localization::{barcode_from_ranks, Barcode, Endpoint};
use crate::presentation::{GradedPresentation, Multidegree};

pub const LEGS: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep<F: Field> {
    field: F,
    n: usize,
    sink_dim: usize,
    leg_dims: [Vec<usize>; LEGS],
    arrows: [Vec<Matrix<F>>; LEGS],
}

impl<F: Field> QuiverRep<F> {
    pub fn new(
        field: &F,
        n: usize,
        sink_dim: usize,
        leg_dims: [Vec<usize>; LEGS],
        arrows: [Vec<Matrix<F>>; LEGS],
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::QuiverShape("legs need at least one vertex".into()));
        }
        for l in 0..LEGS {
            if leg_dims[l].len() != n || arrows[l].len() != n {
                return Err(Error::QuiverShape(format!(
                    "leg {} must have {n} vertices and arrows",
                    l + 1
                )));
            }
            for k in 0..n {
                let tgt = if k + 1 < n {
                    leg_dims[l][k + 1]
                } else {
                    sink_dim
                };
                if arrows[l][k].shape() != (tgt, leg_dims[l][k]) {
                    return Err(Error::QuiverShape(format!(
                        "arrow {k} on leg {} is {}x{}, expected {tgt}x{}",
                        l + 1,
                        arrows[l][k].nrows(),
                        arrows[l][k].ncols(),
                        leg_dims[l][k]
                    )));
                }
                if arrows[l][k].field() != field {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        Ok(QuiverRep {
            field: field.clone(),
            n,
            sink_dim,
            leg_dims,
            arrows,
        })
    }

    pub fn zero(field: &F, n: usize) -> Result<Self> {
        let dims = [vec![0; n], vec![0; n], vec![0; n]];
        let arrows = [0, 1, 2].map(|_| (0..n).map(|_| Matrix::zeros(field, 0, 0)).collect());
        Self::new(field, n, 0, dims, arrows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn sink_dim(&self) -> usize {
        self.sink_dim
    }
    pub fn leg_dims(&self) -> &[Vec<usize>; LEGS] {
        &self.leg_dims
    }
    pub fn leg_arrows(&self, leg: usize) -> &[Matrix<F>] {
        &self.arrows[leg]
    }

    pub fn vertex_count(&self) -> usize {
        LEGS * self.n + 1
    }

    pub fn vertex(&self, leg: usize, k: usize) -> usize {
        1 + leg * self.n + k
    }

    /// Dimension at every vertex, sink first.
    pub fn dims(&self) -> Vec<usize> {
        let mut v = vec![self.sink_dim];
        for l in 0..LEGS {
            v.extend(&self.leg_dims[l]);
        }
        v
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// `(source, target, matrix)` for every arrow.
    pub fn arrows(&self) -> Vec<(usize, usize, &Matrix<F>)> {
        let mut out = Vec::new();
        for l in 0..LEGS {
            for k in 0..self.n {
                let tgt = if k + 1 < self.n {
                    self.vertex(l, k + 1)
                } else {
                    0
                };
                out.push((self.vertex(l, k), tgt, &self.arrows[l][k]));
            }
        }
        out
    }

    /// Composite map on leg `l` from position `a` to position `b` (`b = n` is the sink).
    pub fn leg_composite(&self, l: usize, a: usize, b: usize) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(&self.field, self.leg_dims[l][a]);
        for k in a..b {
            acc = self.arrows[l][k].mul(&acc)?;
        }
        Ok(acc)
    }

    /// Ranks of all composites along each leg, including into the sink.
    pub fn composite_ranks(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for l in 0..LEGS {
            for a in 0..self.n {
                for b in a..=self.n {
                    out.push(self.leg_composite(l, a, b)?.rank());
                }
            }
        }
        Ok(out)
    }

    pub fn leg_maps_injective(&self) -> bool {
        self.arrows.iter().flatten().all(|a| a.rank() == a.ncols())
    }

    pub fn direct_sum(&self, other: &QuiverRep<F>) -> Result<QuiverRep<F>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::QuiverShape(
                "direct sum of reps with different leg lengths".into(),
            ));
        }
        let dims = [0, 1, 2].map(|l| {
            self.leg_dims[l]
                .iter()
                .zip(&other.leg_dims[l])
                .map(|(a, b)| a + b)
                .collect()
        });
        let arrows = [0, 1, 2].map(|l| {
            self.arrows[l]
                .iter()
                .zip(&other.arrows[l])
                .map(|(a, b)| a.block_diag(b))
                .collect()
        });
        Self::new(
            &self.field,
            self.n,
            self.sink_dim + other.sink_dim,
            dims,
            arrows,
        )
    }

    /// Applies a per-vertex linear map to the arrows: the representation with arrows
    /// `P_w^{-1} A P_u`.
    fn conjugate(&self, p: &[Matrix<F>]) -> Result<Vec<Matrix<F>>> {
        self.arrows()
            .into_iter()
            .map(|(u, w, a)| {
                let inv = p[w]
                    .inverse()
                    .ok_or_else(|| Error::QuiverShape("singular change of basis".into()))?;
                inv.mul(&a.mul(&p[u])?)
            })
            .collect()
    }
}

/// A tuple of square matrices, one per vertex.
pub type Endo<F> = Vec<Matrix<F>>;

#[derive(Clone, Debug)]
pub struct EndoBasis<F: Field> {
    pub basis: Vec<Endo<F>>,
}

impl<F: Field> EndoBasis<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, rep: &QuiverRep<F>, coeffs: &[F::Elem]) -> Endo<F> {
        let f = rep.field();
        let mut out: Endo<F> = rep.dims().iter().map(|&d| Matrix::zeros(f, d, d)).collect();
        for (c, e) in coeffs.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (o, m) in out.iter_mut().zip(e) {
                *o = o.add(&m.scale(c)).expect("matching shapes");
            }
        }
        out
    }
}

pub fn compose<F: Field>(a: &Endo<F>, b: &Endo<F>) -> Result<Endo<F>> {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

pub fn is_endomorphism<F: Field>(rep: &QuiverRep<F>, e: &Endo<F>) -> Result<bool> {
    for (u, w, a) in rep.arrows() {
        if a.mul(&e[u])? != e[w].mul(a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn flatten<F: Field>(e: &Endo<F>) -> Vec<F::Elem> {
    e.iter()
        .flat_map(|m| (0..m.nrows()).flat_map(move |i| m.row(i).to_vec()))
        .collect()
}

fn unflatten<F: Field>(rep: &QuiverRep<F>, v: &[F::Elem]) -> Endo<F> {
    let mut off = 0;
    rep.dims()
        .into_iter()
        .map(|d| {
            let m = Matrix::from_fn(rep.field(), d, d, |i, j| v[off + i * d + j].clone());
            off += d * d;
            m
        })
        .collect()
}

/// Basis of `End(V)`, solved from `A f_u = f_w A` for every arrow `u → w`. The identity comes
/// first when `V ≠ 0`.
pub fn endomorphism_basis<F: Field>(rep: &QuiverRep<F>) -> Result<EndoBasis<F>> {
    let f = rep.field();
    let dims = rep.dims();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d * d;
            Some(o)
        })
        .collect();
    let unknowns: usize = dims.iter().map(|d| d * d).sum();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (u, w, a) in rep.arrows() {
        let (du, dw) = (dims[u], dims[w]);
        // Entry (i, j) of A f_u − f_w A.
        for i in 0..dw {
            for j in 0..du {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..du {
                    let idx = offsets[u] + k * du + j;
                    row[idx] = f.add(&row[idx], a.get(i, k));
                }
                for k in 0..dw {
                    let idx = offsets[w] + i * dw + k;
                    row[idx] = f.sub(&row[idx], a.get(k, j));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(f, rows.len(), unknowns, |i, j| rows[i][j].clone());
    let kernel = system.kernel();
    let identity: Endo<F> = dims.iter().map(|&d| Matrix::identity(f, d)).collect();
    let mut chosen: Vec<Vec<F::Elem>> = Vec::new();
    let mut rank = 0;
    for cand in std::iter::once(flatten(&identity)).chain(kernel.basis().columns()) {
        let mut trial = chosen.clone();
        trial.push(cand.clone());
        let r = Matrix::from_columns(f, unknowns, &trial)?.rank();
        if r > rank {
            rank = r;
            chosen = trial;
        }
    }
    Ok(EndoBasis {
        basis: chosen.iter().map(|v| unflatten(rep, v)).collect(),
    })
}

/// A direct-sum decomposition `V ≅ first ⊕ second` together with the change of basis at each
/// vertex whose columns list a basis of the first part followed by one of the second.
#[derive(Clone, Debug)]
pub struct Split<F: Field> {
    pub first: QuiverRep<F>,
    pub second: QuiverRep<F>,
    pub change_of_basis: Vec<Matrix<F>>,
}

impl<F: Field> Split<F> {
    /// Dimensions add up, both parts are nonzero, the arrows become block diagonal in the
    /// adapted bases, and all composite ranks of the sum agree with `rep`.
    pub fn verify(&self, rep: &QuiverRep<F>) -> Result<bool> {
        if self.first.total_dim() == 0 || self.second.total_dim() == 0 {
            return Ok(false);
        }
        let sum = self.first.direct_sum(&self.second)?;
        if sum.dims() != rep.dims() {
            return Ok(false);
        }
        if self.change_of_basis.iter().any(|p| !p.is_invertible()) {
            return Ok(false);
        }
        let conj = rep.conjugate(&self.change_of_basis)?;
        let expected: Vec<Matrix<F>> = sum
            .arrows()
            .into_iter()
            .map(|(_, _, a)| a.clone())
            .collect();
        if conj != expected {
            return Ok(false);
        }
        Ok(sum.composite_ranks()? == rep.composite_ranks()?)
    }
}

/// Fitting decomposition of `V` along an endomorphism that is neither nilpotent nor invertible.
fn fitting_split<F: Field>(rep: &QuiverRep<F>, e: &Endo<F>) -> Result<Option<Split<F>>> {
    let f = rep.field();
    let power = rep.total_dim().max(1);
    let g: Endo<F> = e.iter().map(|m| m.pow(power)).collect::<Result<_>>()?;
    if g.iter().all(|m| m.is_zero()) || g.iter().all(|m| m.is_invertible()) {
        return Ok(None);
    }
    let kers: Vec<Subspace<F>> = g.iter().map(|m| m.kernel()).collect();
    let ims: Vec<Subspace<F>> = g.iter().map(|m| m.image()).collect();
    let restrict = |parts: &[Subspace<F>]| -> Result<QuiverRep<F>> {
        let dims: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
        let mut arrows: [Vec<Matrix<F>>; LEGS] = Default::default();
        for (u, w, a) in rep.arrows() {
            let img = a.mul(parts[u].basis())?;
            let cols = img
                .columns()
                .iter()
                .map(|c| {
                    parts[w].coordinates(c)?.ok_or_else(|| {
                        Error::QuiverShape("Fitting component is not a subrepresentation".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let leg = (u - 1) / rep.n();
            arrows[leg].push(Matrix::from_columns(f, dims[w], &cols)?);
        }
        let leg_dims = [0, 1, 2].map(|l| dims[1 + l * rep.n()..1 + (l + 1) * rep.n()].to_vec());
        QuiverRep::new(f, rep.n(), dims[0], leg_dims, arrows)
    };
    let first = restrict(&kers)?;
    let second = restrict(&ims)?;
    let change_of_basis = kers
        .iter()
        .zip(&ims)
        .map(|(k, i)| k.basis().hstack(i.basis()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(Split {
        first,
        second,
        change_of_basis,
    }))
}

#[derive(Clone, Copy, Debug)]
pub struct SplitOptions {
    pub trials: usize,
    pub seed: u64,
    /// Largest `dim End(V)` for exhaustive idempotent search.
    pub max_end_dim: usize,
    /// Largest number of coefficient vectors the exhaustive search may visit.
    pub max_enumeration: u64,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions {
            trials: 64,
            seed: 0,
            max_end_dim: 6,
            max_enumeration: 2_000_000,
        }
    }
}

/// Searches basis endomorphisms and seeded random combinations for a Fitting splitting.
pub fn try_split<F: Field>(rep: &QuiverRep<F>, opts: &SplitOptions) -> Result<Option<Split<F>>> {
    let basis = endomorphism_basis(rep)?;
    try_split_with(rep, &basis, opts)
}

fn try_split_with<F: Field>(
    rep: &QuiverRep<F>,
    basis: &EndoBasis<F>,
    opts: &SplitOptions,
) -> Result<Option<Split<F>>> {
    for e in &basis.basis {
        if let Some(s) = fitting_split(rep, e)? {
            return Ok(Some(s));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let f = rep.field();
    for _ in 0..opts.trials {
        let coeffs: Vec<F::Elem> = (0..basis.dim()).map(|_| f.random_elem(&mut rng)).collect();
        if let Some(s) = fitting_split(rep, &basis.combination(rep, &coeffs))? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum Indecomposability<F: Field> {
    Yes,
    No(Box<Split<F>>),
    Unknown,
}

/// Yes only when every idempotent of `End(V)` has been checked, No with a verified split, and
/// Unknown otherwise. The zero representation counts as indecomposable.
pub fn is_indecomposable<F: Field>(
    rep: &QuiverRep<F>,
    opts: &SplitOptions,
) -> Result<Indecomposability<F>> {
    if rep.total_dim() == 0 {
        return Ok(Indecomposability::Yes);
    }
    let basis = endomorphism_basis(rep)?;
    if let Some(s) = try_split_with(rep, &basis, opts)? {
        return Ok(Indecomposability::No(Box::new(s)));
    }
    let k = basis.dim();
    if k == 1 {
        return Ok(Indecomposability::Yes);
    }
    let Some(elements) = rep.field().elements() else {
        return Ok(Indecomposability::Unknown);
    };
    let q = elements.len() as u64;
    let fits = k <= opts.max_end_dim
        && q.checked_pow(k as u32)
            .is_some_and(|n| n <= opts.max_enumeration);
    if !fits {
        return Ok(Indecomposability::Unknown);
    }
    let mut idx = vec![0usize; k];
    loop {
        let coeffs: Vec<F::Elem> = idx.iter().map(|&i| elements[i].clone()).collect();
        let e = basis.combination(rep, &coeffs);
        if compose(&e, &e)? == e {
            if let Some(s) = fitting_split(rep, &e)? {
                return Ok(Indecomposability::No(Box::new(s)));
            }
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(Indecomposability::Yes);
            }
            idx[pos] += 1;
            if idx[pos] < elements.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn pinned_corner<F: Field>(module: &GradedPresentation<F>, n: usize) -> Multidegree {
    module
        .stabilization_bound()
        .join(&Multidegree::constant(3, n as i64))
}

/// Whether every transition along axis `i` past degree `n` is an isomorphism once the other two
/// coordinates are pinned at `max(n, B)`.
pub fn in_leq_n<F: Field>(module: &GradedPresentation<F>, n: usize) -> Result<bool> {
    require_m(module, 3)?;
    let e = pinned_corner(module, n);
    for axis in 0..3 {
        for x in n as i64..e[axis] {
            let t = module.transition_matrix(&e.with(axis, x), &e.with(axis, x + 1))?;
            if !t.is_invertible() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn to_quiver_rep<F: Field>(module: &GradedPresentation<F>, n: usize) -> Result<QuiverRep<F>> {
    require_m(module, 3)?;
    if n == 0 {
        return Err(Error::QuiverShape("legs need at least one vertex".into()));
    }
    if !in_leq_n(module, n)? {
        return Err(Error::NotInLeqN(n as i64));
    }
    let e = pinned_corner(module, n);
    let mut leg_dims: [Vec<usize>; LEGS] = Default::default();
    let mut arrows: [Vec<Matrix<F>>; LEGS] = Default::default();
    for l in 0..LEGS {
        for j in 0..n {
            let here = e.with(l, j as i64);
            leg_dims[l].push(module.dim_at(&here)?);
            let next = if j + 1 < n {
                e.with(l, j as i64 + 1)
            } else {
                e.clone()
            };
            arrows[l].push(module.transition_matrix(&here, &next)?);
        }
    }
    QuiverRep::new(module.field(), n, module.dim_at(&e)?, leg_dims, arrows)
}

/// Interval decomposition of each leg when the sink vanishes.
pub fn torsion_leg_split<F: Field>(rep: &QuiverRep<F>) -> Result<Option<[Barcode; LEGS]>> {
    if rep.sink_dim() != 0 {
        return Ok(None);
    }
    let n = rep.n();
    let mut out = Vec::with_capacity(LEGS);
    for l in 0..LEGS {
        out.push(barcode_from_ranks(l + 1, n as i64, |a, b| {
            if b as usize >= n {
                Ok(0)
            } else {
                Ok(rep.leg_composite(l, a as usize, b as usize)?.rank())
            }
        })?);
    }
    let out: [Barcode; LEGS] = out.try_into().expect("three legs");
    Ok(Some(out))
}

/// Direct sum of interval representations on the legs, with zero sink.
pub fn from_leg_barcodes<F: Field>(
    field: &F,
    n: usize,
    legs: &[Barcode; LEGS],
) -> Result<QuiverRep<F>> {
    let mut rep = QuiverRep::zero(field, n)?;
    for (l, bc) in legs.iter().enumerate() {
        for (iv, k) in &bc.bars {
            let end = match iv.end {
                Endpoint::Finite(b) if iv.start >= 0 && b as usize <= n => b as usize,
                _ => {
                    return Err(Error::QuiverShape(format!(
                        "bar {iv} does not fit a leg of length {n}"
                    )))
                }
            };
            let a = iv.start as usize;
            let mut dims: [Vec<usize>; LEGS] = [vec![0; n], vec![0; n], vec![0; n]];
            for d in &mut dims[l][a..end] {
                *d = 1;
            }
            let arrows = [0, 1, 2].map(|ll| {
                (0..n)
                    .map(|k| {
                        let src = dims[ll][k];
                        let tgt = if k + 1 < n { dims[ll][k + 1] } else { 0 };
                        Matrix::from_fn(field, tgt, src, |_, _| field.one())
                    })
                    .collect()
            });
            let interval = QuiverRep::new(field, n, 0, dims, arrows)?;
            for _ in 0..*k {
                rep = rep.direct_sum(&interval)?;
            }
        }
    }
    Ok(rep)
}

pub fn random_quiver_rep<F: Field>(
    field: &F,
    seed: u64,
    n: usize,
    max_dim: usize,
    sink_dim: usize,
) -> Result<QuiverRep<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let leg_dims: [Vec<usize>; LEGS] =
        [0, 1, 2].map(|_| (0..n).map(|_| rng.random_range(0..=max_dim)).collect());
    let arrows = [0, 1, 2].map(|l| {
        (0..n)
            .map(|k| {
                let src = leg_dims[l][k];
                let tgt = if k + 1 < n {
                    leg_dims[l][k + 1]
                } else {
                    sink_dim
                };
                Matrix::from_fn(field, tgt, src, |_, _| field.random_elem(&mut rng))
            })
            .collect()
    });
    QuiverRep::new(field, n, sink_dim, leg_dims, arrows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphType {
    Dynkin(String),
    Euclidean(String),
    Wild,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverShape {
    pub n: usize,
    pub vertices: usize,
    /// `(source, target)`; vertex 0 is the sink.
    pub arrows: Vec<(usize, usize)>,
    pub graph_type: GraphType,
}

/// `Q_n`, whose underlying graph is the star `T_{n+1,n+1,n+1}`.
pub fn quiver_shape(n: usize) -> Result<QuiverShape> {
    if n == 0 {
        return Err(Error::QuiverShape("legs need at least one vertex".into()));
    }
    let mut arrows = Vec::new();
    for l in 0..LEGS {
        for k in 0..n {
            let src = 1 + l * n + k;
            let tgt = if k + 1 < n { src + 1 } else { 0 };
            arrows.push((src, tgt));
        }
    }
    // Arms of p = n + 1 vertices each; the star is Dynkin iff 3/p > 1 and Euclidean iff 3/p = 1.
    let graph_type = match n {
        1 => GraphType::Dynkin("D4".into()),
        2 => GraphType::Euclidean("E6~".into()),
        _ => GraphType::Wild,
    };
    Ok(QuiverShape {
        n,
        vertices: LEGS * n + 1,
        arrows,
        graph_type,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::presentation::named_example;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    fn simple_at_sink(f: &Fp, n: usize) -> QuiverRep<Fp> {
        let dims = [vec![0; n], vec![0; n], vec![0; n]];
        let arrows = [0, 1, 2].map(|_| {
            (0..n)
                .map(|k| Matrix::zeros(f, if k + 1 < n { 0 } else { 1 }, 0))
                .collect()
        });
        QuiverRep::new(f, n, 1, dims, arrows).unwrap()
    }

    #[test]
    fn free_module_rep() {
        let f = f5();
        let r = GradedPresentation::free(&f, &Multidegree::zero(3)).unwrap();
        assert!(in_leq_n(&r, 0).unwrap());
        let v = to_quiver_rep(&r, 1).unwrap();
        assert_eq!(v.dims(), vec![1, 1, 1, 1]);
        assert!(v
            .arrows()
            .iter()
            .all(|(_, _, a)| **a == Matrix::identity(&f, 1)));
    }

    #[test]
    fn truncation_range() {
        let f = f5();
        for n in 0..3i64 {
            let q =
                GradedPresentation::monomial_quotient(&f, 3, &[Multidegree::from([n + 1, 0, 0])])
                    .unwrap();
            assert!(!in_leq_n(&q, n as usize).unwrap());
            assert!(in_leq_n(&q, n as usize + 1).unwrap());
        }
        // Transitions must be checked past the first step as well.
        let q =
            GradedPresentation::monomial_quotient(&f, 3, &[Multidegree::from([3, 0, 0])]).unwrap();
        assert!(!in_leq_n(&q, 1).unwrap());
        assert!(matches!(to_quiver_rep(&q, 1), Err(Error::NotInLeqN(1))));
        let m2 = GradedPresentation::free(&f, &Multidegree::zero(2)).unwrap();
        assert!(matches!(in_leq_n(&m2, 1), Err(Error::UnsupportedM { .. })));
    }

    #[test]
    fn m3_example() {
        let m = named_example(&f5(), "m3_indecomposable")
            .unwrap()
            .into_module()
            .unwrap();
        assert!(in_leq_n(&m, 2).unwrap());
        let v = to_quiver_rep(&m, 2).unwrap();
        assert_eq!(v.sink_dim(), 2);
        assert_eq!(v.leg_dims(), &[vec![1, 2], vec![1, 2], vec![1, 2]]);
        assert!(v.leg_maps_injective());
        let end = endomorphism_basis(&v).unwrap();
        assert_eq!(end.dim(), 1);
        assert!(matches!(
            is_indecomposable(&v, &SplitOptions::default()).unwrap(),
            Indecomposability::Yes
        ));
    }

    #[test]
    fn endomorphisms_of_simples() {
        let f = f5();
        let s = simple_at_sink(&f, 1);
        assert_eq!(endomorphism_basis(&s).unwrap().dim(), 1);
        assert!(try_split(&s, &SplitOptions::default()).unwrap().is_none());
        let ss = s.direct_sum(&s).unwrap();
        let end = endomorphism_basis(&ss).unwrap();
        assert_eq!(end.dim(), 4);
        for a in &end.basis {
            assert!(is_endomorphism(&ss, a).unwrap());
        }
    }

    #[test]
    fn splits_are_verified() {
        let f = f5();
        let r = GradedPresentation::free(&f, &Multidegree::zero(3)).unwrap();
        let v = to_quiver_rep(&r.direct_sum(&r).unwrap(), 1).unwrap();
        match is_indecomposable(&v, &SplitOptions::default()).unwrap() {
            Indecomposability::No(s) => assert!(s.verify(&v).unwrap()),
            other => panic!("expected a split, got {other:?}"),
        }
        assert!(matches!(
            is_indecomposable(&QuiverRep::zero(&f, 2).unwrap(), &SplitOptions::default()).unwrap(),
            Indecomposability::Yes
        ));
    }

    #[test]
    fn leg_split_of_a_strip() {
        let f = f5();
        assert!(torsion_leg_split(&QuiverRep::zero(&f, 2).unwrap())
            .unwrap()
            .unwrap()
            .iter()
            .all(|b| b.bars.is_empty()));
        let strip =
            GradedPresentation::monomial_quotient(&f, 3, &[Multidegree::from([1, 0, 0])]).unwrap();
        let v = to_quiver_rep(&strip, 2).unwrap();
        assert_eq!(v.sink_dim(), 0);
        let legs = torsion_leg_split(&v).unwrap().unwrap();
        assert_eq!(
            legs[0].bars,
            vec![(crate::localization::Interval::finite(0, 1), 1)]
        );
        assert!(legs[1].bars.is_empty() && legs[2].bars.is_empty());
        let back = from_leg_barcodes(&f, 2, &legs).unwrap();
        assert_eq!(
            back.composite_ranks().unwrap(),
            v.composite_ranks().unwrap()
        );
        assert!(torsion_leg_split(&simple_at_sink(&f, 1)).unwrap().is_none());
    }

    #[test]
    fn shapes() {
        let s1 = quiver_shape(1).unwrap();
        assert_eq!((s1.vertices, s1.arrows.len()), (4, 3));
        assert_eq!(s1.graph_type, GraphType::Dynkin("D4".into()));
        assert_eq!(
            quiver_shape(2).unwrap().graph_type,
            GraphType::Euclidean("E6~".into())
        );
        assert_eq!(quiver_shape(3).unwrap().graph_type, GraphType::Wild);
        assert!(quiver_shape(0).is_err());
    }
}
