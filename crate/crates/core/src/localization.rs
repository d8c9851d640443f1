//! Localizations `M_σ` (variables `t_i`, `i ∈ σ`, inverted) and one-parameter barcodes.
//!
//! For fixed coordinates outside σ, the σ-slice of a presentation has all degrees `≤ B_σ`,
//! so it stabilizes there. Every localized quantity is therefore an ordinary evaluation of
//! `M` with the σ-coordinates pinned at `max(d_σ, B_σ)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::presentation::{GradedPresentation, Multidegree};

/// A subset of `{1, ..., m}`; vertex `i` is bit `i - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_vertices(vs: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &v in vs {
            if v == 0 || v > 32 {
                return Err(Error::AxisOutOfRange { axis: v, m: 32 });
            }
            bits |= 1 << (v - 1);
        }
        Ok(SubsetMask(bits))
    }

    pub fn full(m: usize) -> Self {
        SubsetMask(if m >= 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    pub fn singleton(v: usize) -> Self {
        SubsetMask(1 << (v - 1))
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=32).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn complement(&self, m: usize) -> SubsetMask {
        SubsetMask(!self.0 & Self::full(m).0)
    }

    pub fn without(&self, v: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << (v - 1)))
    }

    /// Vertices in increasing order, 1-based.
    pub fn vertices(&self) -> Vec<usize> {
        (1..=32).filter(|&v| self.contains(v)).collect()
    }

    pub fn fits(&self, m: usize) -> bool {
        self.is_subset(&Self::full(m))
    }

    /// `Σ_{i ∈ σ} e_i` in ℕ^m.
    pub fn indicator(&self, m: usize) -> Multidegree {
        Multidegree::new((1..=m).map(|v| i64::from(self.contains(v))).collect())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vs.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    Finite(i64),
    Infinity,
}

/// A half-open interval `[start, end)` of ℕ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub start: i64,
    pub end: Endpoint,
}

impl Interval {
    pub fn finite(start: i64, end: i64) -> Self {
        Interval {
            start,
            end: Endpoint::Finite(end),
        }
    }

    pub fn infinite(start: i64) -> Self {
        Interval {
            start,
            end: Endpoint::Infinity,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.end, Endpoint::Finite(_))
    }

    /// Whether `[a, b]` lies inside the interval.
    pub fn covers(&self, a: i64, b: i64) -> bool {
        self.start <= a
            && match self.end {
                Endpoint::Finite(e) => b < e,
                Endpoint::Infinity => true,
            }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            Endpoint::Finite(e) => write!(f, "[{},{})", self.start, e),
            Endpoint::Infinity => write!(f, "[{},inf)", self.start),
        }
    }
}

/// Bars with multiplicities, sorted by `(start, end)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barcode {
    pub axis: usize,
    pub bars: Vec<(Interval, usize)>,
}

impl Barcode {
    pub fn from_bars(axis: usize, bars: impl IntoIterator<Item = Interval>) -> Self {
        let mut counts: BTreeMap<Interval, usize> = BTreeMap::new();
        for b in bars {
            *counts.entry(b).or_default() += 1;
        }
        Barcode {
            axis,
            bars: counts.into_iter().collect(),
        }
    }

    pub fn finite_bars(&self) -> Vec<(Interval, usize)> {
        self.bars
            .iter()
            .copied()
            .filter(|(i, _)| i.is_finite())
            .collect()
    }

    pub fn infinite_bars(&self) -> Vec<(Interval, usize)> {
        self.bars
            .iter()
            .copied()
            .filter(|(i, _)| !i.is_finite())
            .collect()
    }

    pub fn infinite_count(&self) -> usize {
        self.infinite_bars().iter().map(|(_, k)| k).sum()
    }

    pub fn total(&self) -> usize {
        self.bars.iter().map(|(_, k)| k).sum()
    }

    /// Number of bars covering `[a, b]`, which is the rank `r(a, b)` they encode.
    pub fn rank(&self, a: i64, b: i64) -> usize {
        self.bars
            .iter()
            .filter(|(i, _)| i.covers(a, b))
            .map(|(_, k)| k)
            .sum()
    }
}

fn check_sigma<F: Field>(m: &GradedPresentation<F>, sigma: SubsetMask) -> Result<()> {
    if !sigma.fits(m.m()) {
        return Err(Error::DimensionMismatch(format!(
            "subset {sigma} is not contained in [{}]",
            m.m()
        )));
    }
    Ok(())
}

/// Inserts the non-σ coordinates `a` into a full degree whose σ-coordinates come from `fill`.
fn embed(m: usize, sigma: SubsetMask, a: &Multidegree, fill: &Multidegree) -> Result<Multidegree> {
    let free = m - sigma.len();
    if a.len() != free {
        return Err(Error::DegreeLength {
            expected: free,
            found: a.coords().to_vec(),
        });
    }
    let mut it = a.coords().iter();
    Ok(Multidegree::new(
        (1..=m)
            .map(|v| {
                if sigma.contains(v) {
                    fill[v - 1]
                } else {
                    *it.next().unwrap()
                }
            })
            .collect(),
    ))
}

/// `rk_{M_σ}(a, b)`, where `a` and `b` list only the coordinates outside σ.
pub fn localized_rank<F: Field>(
    module: &GradedPresentation<F>,
    sigma: SubsetMask,
    a: &Multidegree,
    b: &Multidegree,
) -> Result<usize> {
    check_sigma(module, sigma)?;
    let bound = module.stabilization_bound();
    let fa = embed(module.m(), sigma, a, &bound)?;
    let fb = embed(module.m(), sigma, b, &bound)?;
    module.rank_invariant(&fa, &fb)
}

/// `dim M_σ(d)`; coordinates of `d` inside σ may be any integers.
pub fn localized_dim<F: Field>(
    module: &GradedPresentation<F>,
    sigma: SubsetMask,
    d: &Multidegree,
) -> Result<usize> {
    check_sigma(module, sigma)?;
    module.check_degree(d)?;
    let bound = module.stabilization_bound();
    let pinned = Multidegree::new(
        (1..=module.m())
            .map(|v| {
                if sigma.contains(v) {
                    d[v - 1].max(bound[v - 1])
                } else {
                    d[v - 1]
                }
            })
            .collect(),
    );
    if (1..=module.m()).any(|v| !sigma.contains(v) && d[v - 1] < 0) {
        return Err(Error::NegativeDegree(d.to_string()));
    }
    module.dim_at(&pinned)
}

/// Möbius inversion of a one-parameter rank function on `[0, last]`; ranks at `last` stand in
/// for ranks at infinity.
pub fn barcode_from_ranks(
    axis: usize,
    last: i64,
    mut r: impl FnMut(i64, i64) -> Result<usize>,
) -> Result<Barcode> {
    let n = (last + 1).max(0) as usize;
    let mut table = vec![vec![0i64; n]; n];
    for a in 0..n {
        for b in a..n {
            table[a][b] = r(a as i64, b as i64)? as i64;
        }
    }
    let rk = |a: i64, b: i64| -> i64 {
        if a < 0 {
            0
        } else {
            table[a as usize][b as usize]
        }
    };
    let mut bars = Vec::new();
    let mut push = |iv: Interval, k: i64| -> Result<()> {
        if k < 0 {
            return Err(Error::NegativeMultiplicity {
                location: format!("{iv} on axis {axis}"),
                value: k,
            });
        }
        bars.push((iv, k as usize));
        Ok(())
    };
    for a in 0..=last {
        for b in a + 1..=last {
            let k = rk(a, b - 1) - rk(a, b) - rk(a - 1, b - 1) + rk(a - 1, b);
            if k != 0 {
                push(Interval::finite(a, b), k)?;
            }
        }
        let k = rk(a, last) - rk(a - 1, last);
        if k != 0 {
            push(Interval::infinite(a), k)?;
        }
    }
    bars.sort();
    Ok(Barcode { axis, bars })
}

/// Interval decomposition of `M_{σ_i}` as a `k[t_i]`-module, `σ_i = [m] ∖ {i}` (axis 1-based).
pub fn localized_barcode<F: Field>(module: &GradedPresentation<F>, axis: usize) -> Result<Barcode> {
    let m = module.m();
    if axis == 0 || axis > m {
        return Err(Error::AxisOutOfRange { axis, m });
    }
    let sigma = SubsetMask::full(m).without(axis);
    let last = module.stabilization_bound()[axis - 1];
    barcode_from_ranks(axis, last, |a, b| {
        localized_rank(
            module,
            sigma,
            &Multidegree::from([a]),
            &Multidegree::from([b]),
        )
    })
}
