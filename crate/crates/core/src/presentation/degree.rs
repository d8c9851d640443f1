use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

/// A point of ℤ^m. Presentations only use ℕ^m, but localized queries may carry negative
/// coordinates on inverted axes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<i64>);

impl Multidegree {
    pub fn new(coords: Vec<i64>) -> Self {
        Multidegree(coords)
    }

    pub fn zero(m: usize) -> Self {
        Multidegree(vec![0; m])
    }

    pub fn constant(m: usize, v: i64) -> Self {
        Multidegree(vec![v; m])
    }

    /// The `i`-th unit vector (0-based axis).
    pub fn unit(m: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `self ≤ other`. Degrees of different lengths are incomparable.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn meet(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn with(&self, axis: usize, v: i64) -> Multidegree {
        let mut c = self.0.clone();
        c[axis] = v;
        Multidegree(c)
    }

    pub fn max_coord(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

impl From<&[i64]> for Multidegree {
    fn from(v: &[i64]) -> Self {
        Multidegree(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Multidegree {
    fn from(v: [i64; N]) -> Self {
        Multidegree(v.to_vec())
    }
}

impl Index<usize> for Multidegree {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All degrees in the box `[lo, hi]`, in lexicographic order.
pub fn box_points(lo: &Multidegree, hi: &Multidegree) -> Vec<Multidegree> {
    let mut out = Vec::new();
    if lo.len() != hi.len() || !lo.le(hi) {
        return out;
    }
    let mut cur = lo.clone().into_vec();
    loop {
        out.push(Multidegree(cur.clone()));
        let mut k = cur.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for j in k + 1..cur.len() {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}
