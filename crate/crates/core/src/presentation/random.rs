use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{GradedPresentation, Multidegree};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomParams {
    pub m: usize,
    pub max_gens: usize,
    pub max_rels: usize,
    pub max_degree: i64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            m: 2,
            max_gens: 5,
            max_rels: 8,
            max_degree: 6,
        }
    }
}

fn random_degree(rng: &mut ChaCha8Rng, m: usize, max: i64) -> Multidegree {
    Multidegree::new((0..m).map(|_| rng.random_range(0..=max)).collect())
}

/// A seeded random presentation. Each relation degree is the join of some generator degree
/// with a random point, so every relation touches at least one generator when there are any.
pub fn random_presentation<F: Field>(
    seed: u64,
    params: &RandomParams,
    field: &F,
) -> Result<GradedPresentation<F>> {
    if params.m == 0 {
        return Err(Error::EmptyParameterRange("m must be at least 1".into()));
    }
    if params.max_degree < 0 {
        return Err(Error::EmptyParameterRange(format!(
            "max_degree {} is negative",
            params.max_degree
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = params.m;
    let n_gens = rng.random_range(0..=params.max_gens);
    let n_rels = if n_gens == 0 {
        0
    } else {
        rng.random_range(0..=params.max_rels)
    };
    let gens: Vec<Multidegree> = (0..n_gens)
        .map(|_| random_degree(&mut rng, m, params.max_degree))
        .collect();
    let rels: Vec<Multidegree> = (0..n_rels)
        .map(|_| {
            let g = &gens[rng.random_range(0..n_gens)];
            g.join(&random_degree(&mut rng, m, params.max_degree))
        })
        .collect();
    let mut coeffs = Matrix::zeros(field, n_gens, n_rels);
    for (j, rd) in rels.iter().enumerate() {
        for (i, gd) in gens.iter().enumerate() {
            if gd.le(rd) && rng.random_bool(0.7) {
                coeffs.set(i, j, field.random_elem(&mut rng));
            }
        }
    }
    GradedPresentation::new(field, m, gens, rels, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rationals};

    #[test]
    fn deterministic() {
        let f = Fp::new(5).unwrap();
        let p = RandomParams::default();
        for seed in 0..20 {
            assert_eq!(
                random_presentation(seed, &p, &f).unwrap(),
                random_presentation(seed, &p, &f).unwrap()
            );
        }
        let q = random_presentation(3, &p, &Rationals).unwrap();
        assert_eq!(q, random_presentation(3, &p, &Rationals).unwrap());
    }

    #[test]
    fn no_generators_gives_zero() {
        let f = Fp::new(5).unwrap();
        let p = RandomParams {
            max_gens: 0,
            ..RandomParams::default()
        };
        let z = random_presentation(7, &p, &f).unwrap();
        assert_eq!(z.num_gens(), 0);
        assert_eq!(z.dim_at(&Multidegree::from([3, 3])).unwrap(), 0);
    }

    #[test]
    fn empty_ranges() {
        let f = Fp::new(5).unwrap();
        let p = RandomParams {
            m: 0,
            ..RandomParams::default()
        };
        assert!(matches!(
            random_presentation(0, &p, &f),
            Err(Error::EmptyParameterRange(_))
        ));
        let p = RandomParams {
            max_degree: -1,
            ..RandomParams::default()
        };
        assert!(random_presentation(0, &p, &f).is_err());
    }
}
