//! Simplicial complexes on `[m]`, supports of modules, face rings and the simple-quotient chain.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::localization::SubsetMask;
use crate::presentation::{box_points, GradedPresentation, Multidegree};

/// Largest vertex count for which every subset of `[m]` is enumerated.
pub const MAX_VERTICES: usize = 16;

/// A downward-closed family of subsets of `[m]`. The complex with no faces at all is
/// different from the complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<SubsetMask>,
}

fn all_subsets(m: usize) -> impl Iterator<Item = SubsetMask> {
    (0..1u32 << m).map(SubsetMask)
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::InvalidComplex(format!(
            "vertex count {m} outside 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Whether `faces` is downward closed inside `[m]`.
pub fn is_complex(m: usize, faces: &BTreeSet<SubsetMask>) -> bool {
    faces.iter().all(|s| {
        s.fits(m)
            && s.vertices()
                .into_iter()
                .all(|v| faces.contains(&s.without(v)))
    })
}

impl SimplicialComplex {
    pub fn new(m: usize, faces: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        check_m(m)?;
        let faces: BTreeSet<SubsetMask> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|s| !s.fits(m)) {
            return Err(Error::InvalidComplex(format!(
                "face {bad} uses a vertex outside [{m}]"
            )));
        }
        for s in &faces {
            for v in s.vertices() {
                let t = s.without(v);
                if !faces.contains(&t) {
                    return Err(Error::InvalidComplex(format!(
                        "face {s} present but {t} missing"
                    )));
                }
            }
        }
        Ok(SimplicialComplex { m, faces })
    }

    /// Smallest complex containing the given faces.
    pub fn closure(m: usize, generators: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        check_m(m)?;
        let gens: Vec<SubsetMask> = generators.into_iter().collect();
        let faces = all_subsets(m).filter(|s| gens.iter().any(|g| s.is_subset(g)));
        Self::new(m, faces)
    }

    /// The complex with no faces.
    pub fn empty(m: usize) -> Result<Self> {
        Self::new(m, [])
    }

    /// `{∅}`.
    pub fn void(m: usize) -> Result<Self> {
        Self::new(m, [SubsetMask::EMPTY])
    }

    pub fn full(m: usize) -> Result<Self> {
        check_m(m)?;
        Self::new(m, all_subsets(m))
    }

    /// Subsets of cardinality `≤ i + 1`, for `-2 ≤ i ≤ m - 1`.
    pub fn skeleton(m: usize, i: i64) -> Result<Self> {
        check_m(m)?;
        if i < -2 || i > m as i64 - 1 {
            return Err(Error::SkeletonOutOfRange { m, i });
        }
        Self::new(m, all_subsets(m).filter(|s| (s.len() as i64) <= i + 1))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn faces(&self) -> &BTreeSet<SubsetMask> {
        &self.faces
    }

    pub fn contains(&self, s: &SubsetMask) -> bool {
        self.faces.contains(s)
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.faces.is_subset(&other.faces)
    }

    pub fn is_full(&self) -> bool {
        self.faces.len() == 1 << self.m
    }

    /// Faces as sorted vertex lists, shortest first.
    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.faces.iter().map(|s| s.vertices()).collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    pub fn missing_faces(&self) -> BTreeSet<SubsetMask> {
        all_subsets(self.m)
            .filter(|s| !self.faces.contains(s))
            .collect()
    }

    /// Missing faces all of whose proper subsets are faces. For the complex with no faces this
    /// is `{∅}`.
    pub fn minimal_missing_faces(&self) -> BTreeSet<SubsetMask> {
        self.missing_faces()
            .into_iter()
            .filter(|s| {
                s.vertices()
                    .into_iter()
                    .all(|v| self.faces.contains(&s.without(v)))
            })
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.faces.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}} on [{}]", parts.join(","), self.m)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every complex on `[m]`, in a deterministic order.
pub fn enumerate_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m == 0 || m > 5 {
        return Err(Error::InvalidComplex(format!(
            "enumeration supports 1 <= m <= 5, got {m}"
        )));
    }
    let mut order: Vec<SubsetMask> = all_subsets(m).collect();
    order.sort_by_key(|s| (s.len(), s.0));
    let mut out = Vec::new();
    let mut chosen = BTreeSet::new();
    fn rec(
        m: usize,
        order: &[SubsetMask],
        k: usize,
        chosen: &mut BTreeSet<SubsetMask>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if k == order.len() {
            out.push(SimplicialComplex {
                m,
                faces: chosen.clone(),
            });
            return;
        }
        let s = order[k];
        rec(m, order, k + 1, chosen, out);
        if s.vertices()
            .into_iter()
            .all(|v| chosen.contains(&s.without(v)))
        {
            chosen.insert(s);
            rec(m, order, k + 1, chosen, out);
            chosen.remove(&s);
        }
    }
    rec(m, &order, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

/// A seeded random complex; the complex with no faces and `{∅}` both occur.
pub fn random_complex(m: usize, seed: u64) -> Result<SimplicialComplex> {
    check_m(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.random_ratio(1, 10) {
        return SimplicialComplex::empty(m);
    }
    let k = rng.random_range(0..=m + 1);
    let p = rng.random_range(0.2..0.8);
    let gens: Vec<SubsetMask> = (0..k)
        .map(|_| {
            SubsetMask((0..m).fold(0, |acc, i| {
                if rng.random_bool(p) {
                    acc | 1 << i
                } else {
                    acc
                }
            }))
        })
        .collect();
    SimplicialComplex::closure(m, gens.into_iter().chain([SubsetMask::EMPTY]))
}

/// `{σ : M_σ ≠ 0}` by the box test: `M_σ ≠ 0` iff some degree with σ-coordinates at the
/// bound and the others in `[0, B]` carries a nonzero space.
pub fn supp_complex<F: Field>(module: &GradedPresentation<F>) -> Result<SimplicialComplex> {
    let m = module.m();
    check_m(m)?;
    let b = module.stabilization_bound();
    let mut faces = Vec::new();
    for sigma in all_subsets(m) {
        let lo = Multidegree::new(
            (1..=m)
                .map(|v| if sigma.contains(v) { b[v - 1] } else { 0 })
                .collect(),
        );
        let mut nonzero = false;
        for d in box_points(&lo, &b) {
            if module.dim_at(&d)? > 0 {
                nonzero = true;
                break;
            }
        }
        if nonzero {
            faces.push(sigma);
        }
    }
    SimplicialComplex::new(m, faces)
}

/// Support computed independently: `σ` is in the support iff some `t_σ^s`, with `s` past
/// the bound, acts nonzero on some degree in `[0, B]`.
pub fn supp_complex_by_nilpotence<F: Field>(
    module: &GradedPresentation<F>,
) -> Result<SimplicialComplex> {
    let m = module.m();
    check_m(m)?;
    let b = module.stabilization_bound();
    let s = b.max_coord() + 1;
    let points = box_points(&Multidegree::zero(m), &b);
    let mut faces = Vec::new();
    for sigma in all_subsets(m) {
        let step = Multidegree::new(sigma.indicator(m).coords().iter().map(|x| x * s).collect());
        let mut alive = false;
        for d in &points {
            if module.rank_invariant(d, &d.add(&step))? > 0 {
                alive = true;
                break;
            }
        }
        if alive {
            faces.push(sigma);
        }
    }
    SimplicialComplex::new(m, faces)
}

/// Whether `L_K M = 0`, that is, whether the support of `M` lies in `K`.
pub fn in_kernel_lk<F: Field>(
    module: &GradedPresentation<F>,
    k: &SimplicialComplex,
) -> Result<bool> {
    if module.m() != k.m() {
        return Err(Error::AmbientMismatch(module.m(), k.m()));
    }
    Ok(supp_complex(module)?.is_subcomplex_of(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceRingRelations {
    Minimal,
    All,
}

/// `k[K] = R / (t_σ : σ ∉ K)`.
pub fn face_ring<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    relations: FaceRingRelations,
) -> Result<GradedPresentation<F>> {
    let monomials: Vec<Multidegree> = match relations {
        FaceRingRelations::Minimal => k.minimal_missing_faces(),
        FaceRingRelations::All => k.missing_faces(),
    }
    .into_iter()
    .map(|s| s.indicator(k.m()))
    .collect();
    GradedPresentation::monomial_quotient(field, k.m(), &monomials)
}

/// A simple object attached to a minimal missing face, possibly shifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleDescriptor {
    pub sigma: SubsetMask,
    pub shift: Multidegree,
}

impl SimpleDescriptor {
    /// `t^shift R / (t_i : i ∉ σ)`.
    pub fn realize<F: Field>(&self, field: &F, m: usize) -> Result<GradedPresentation<F>> {
        let monomials: Vec<Multidegree> = (1..=m)
            .filter(|&v| !self.sigma.contains(v))
            .map(|v| Multidegree::unit(m, v - 1))
            .collect();
        GradedPresentation::monomial_quotient(field, m, &monomials)?.shift(&self.shift)
    }
}

pub fn simples(k: &SimplicialComplex) -> Vec<SimpleDescriptor> {
    k.minimal_missing_faces()
        .into_iter()
        .map(|sigma| SimpleDescriptor {
            sigma,
            shift: Multidegree::zero(k.m()),
        })
        .collect()
}

/// `K` together with its minimal missing faces.
pub fn serre_step(k: &SimplicialComplex) -> SimplicialComplex {
    let mut faces = k.faces.clone();
    faces.extend(k.minimal_missing_faces());
    SimplicialComplex { m: k.m, faces }
}

/// Iterates [`serre_step`] until the full simplex; the first entry is `k` itself.
pub fn serre_chain(k: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let mut chain = vec![k.clone()];
    while !chain.last().unwrap().is_full() {
        let next = serre_step(chain.last().unwrap());
        chain.push(next);
    }
    chain
}

/// `m − (smallest missing face size)`, and −1 for the full simplex.
pub fn kdim(k: &SimplicialComplex) -> i64 {
    match k.missing_faces().iter().map(|s| s.len()).min() {
        Some(s) => k.m as i64 - s as i64,
        None => -1,
    }
}
