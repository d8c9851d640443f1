use super::{box_points, GradedPresentation, Multidegree};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// A graded module map given on generators. Column `j` of `coeffs` is the image of source
/// generator `j`, written in target generators: `g_j ↦ Σ_i c_ij t^(src_j − tgt_i) h_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentationMap<F: Field> {
    source: GradedPresentation<F>,
    target: GradedPresentation<F>,
    coeffs: Matrix<F>,
}

impl<F: Field> PresentationMap<F> {
    pub fn new(
        source: GradedPresentation<F>,
        target: GradedPresentation<F>,
        coeffs: Matrix<F>,
    ) -> Result<Self> {
        if source.field() != target.field() || coeffs.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        if source.m() != target.m() {
            return Err(Error::AmbientMismatch(source.m(), target.m()));
        }
        if coeffs.shape() != (target.num_gens(), source.num_gens()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                coeffs.nrows(),
                coeffs.ncols(),
                target.num_gens(),
                source.num_gens()
            )));
        }
        let f = source.field().clone();
        for (j, sd) in source.gen_degrees().iter().enumerate() {
            for (i, td) in target.gen_degrees().iter().enumerate() {
                if !f.is_zero(coeffs.get(i, j)) && !td.le(sd) {
                    return Err(Error::MapNotWellDefined(format!(
                        "source generator {j} at {sd} cannot map to target generator {i} at {td}"
                    )));
                }
            }
        }
        let map = PresentationMap {
            source,
            target,
            coeffs,
        };
        for (r, rd) in map.source.rel_degrees().iter().enumerate() {
            let image = map.coeffs.mul_vec(&map.source.rel_coeffs().column(r))?;
            let class = map.target.slice(rd)?.reduce(&image)?;
            if class.iter().any(|x| !f.is_zero(x)) {
                return Err(Error::MapNotWellDefined(format!(
                    "source relation {r} does not map into the target relations"
                )));
            }
        }
        Ok(map)
    }

    pub fn from_i64(
        source: GradedPresentation<F>,
        target: GradedPresentation<F>,
        coeffs: &[Vec<i64>],
    ) -> Result<Self> {
        let f = source.field().clone();
        let m = if coeffs.is_empty() {
            Matrix::zeros(&f, target.num_gens(), source.num_gens())
        } else {
            Matrix::from_i64_rows(&f, coeffs)?
        };
        Self::new(source, target, m)
    }

    pub fn identity(module: &GradedPresentation<F>) -> Self {
        let n = module.num_gens();
        PresentationMap {
            source: module.clone(),
            target: module.clone(),
            coeffs: Matrix::identity(module.field(), n),
        }
    }

    pub fn source(&self) -> &GradedPresentation<F> {
        &self.source
    }
    pub fn target(&self) -> &GradedPresentation<F> {
        &self.target
    }
    pub fn coeffs(&self) -> &Matrix<F> {
        &self.coeffs
    }

    /// The induced linear map `S(d) → T(d)` in canonical bases.
    pub fn at(&self, d: &Multidegree) -> Result<Matrix<F>> {
        let ss = self.source.slice(d)?;
        let ts = self.target.slice(d)?;
        let cols = ss
            .basis_generators()
            .into_iter()
            .map(|g| ts.reduce(&self.coeffs.column(g)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.source.field(), ts.dim(), &cols)
    }

    /// Cokernel presentation: target relations together with the images of source generators.
    pub fn cokernel(&self) -> Result<GradedPresentation<F>> {
        let mut rels = self.target.rel_degrees().to_vec();
        rels.extend(self.source.gen_degrees().iter().cloned());
        GradedPresentation::new(
            self.target.field(),
            self.target.m(),
            self.target.gen_degrees().to_vec(),
            rels,
            self.target.rel_coeffs().hstack(&self.coeffs)?,
        )
    }

    /// Whether the induced maps commute with transitions on a box; a consistency check used
    /// in tests.
    pub fn is_natural_on(&self, hi: &Multidegree) -> Result<bool> {
        let m = self.source.m();
        for a in box_points(&Multidegree::zero(m), hi) {
            for i in 0..m {
                let b = a.add(&Multidegree::unit(m, i));
                let lhs = self.at(&b)?.mul(&self.source.transition_matrix(&a, &b)?)?;
                let rhs = self.target.transition_matrix(&a, &b)?.mul(&self.at(&a)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::presentation::named_example;

    #[test]
    fn notsplit_map_is_natural() {
        let f = Fp::new(5).unwrap();
        let map = named_example(&f, "notsplit").unwrap().into_map().unwrap();
        assert!(map.is_natural_on(&Multidegree::from([2, 2])).unwrap());
        let at = map.at(&Multidegree::from([1, 1])).unwrap();
        assert_eq!(at.shape(), (1, 2));
    }

    #[test]
    fn rejects_bad_maps() {
        let f = Fp::new(5).unwrap();
        let r = GradedPresentation::free(&f, &Multidegree::from([0, 0])).unwrap();
        let s = GradedPresentation::free(&f, &Multidegree::from([1, 0])).unwrap();
        // Degree cannot decrease.
        assert!(PresentationMap::from_i64(r.clone(), s.clone(), &[vec![1]]).is_err());
        // R/(t1) → R sending 1 ↦ 1 does not kill the relation.
        let q = GradedPresentation::monomial_quotient(&f, 2, &[Multidegree::from([1, 0])]).unwrap();
        assert!(matches!(
            PresentationMap::from_i64(q.clone(), r.clone(), &[vec![1]]),
            Err(Error::MapNotWellDefined(_))
        ));
        // The other direction is fine.
        assert!(PresentationMap::from_i64(r, q, &[vec![1]]).is_ok());
    }
}
