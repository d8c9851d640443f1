use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A linear subspace of `k^n`, stored by a canonical basis: the columns of `basis` are in
/// reduced column echelon form, so two subspaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

/// Sum and intersection of a pair of subspaces.
#[derive(Clone, Debug)]
pub struct SubspaceOps<F: Field> {
    pub sum: Subspace<F>,
    pub intersection: Subspace<F>,
}

impl<F: Field> Subspace<F> {
    /// Column span of `m`, a subspace of `k^{rows}`.
    pub fn span(m: &Matrix<F>) -> Self {
        let ech = m.transpose().rref();
        let rank = ech.pivots.len();
        let rows: Vec<usize> = (0..rank).collect();
        Subspace {
            ambient: m.nrows(),
            basis: ech.reduced.select_rows(&rows).transpose(),
            pivots: ech.pivots,
        }
    }

    pub fn from_vectors(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        Ok(Self::span(&Matrix::from_columns(field, ambient, vectors)?))
    }

    pub fn zero(field: &F, ambient: usize) -> Self {
        Self::span(&Matrix::zeros(field, ambient, 0))
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self::span(&Matrix::identity(field, ambient))
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical basis as the columns of an `ambient × dim` matrix.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        // Each basis column has a 1 in its pivot row and 0 in every other pivot row.
        let c: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.basis.mul_vec(&c)?;
        Ok((back.as_slice() == v).then_some(c))
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_ambient(other)?;
        for v in self.basis.columns() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        Ok(Self::span(&self.basis.hstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let k = self.dim();
        let minus_w = other.basis.scale(&self.field().neg(&self.field().one()));
        let ker = self.basis.hstack(&minus_w)?.kernel();
        let top: Vec<usize> = (0..k).collect();
        let coeffs = ker.basis().select_rows(&top);
        Ok(Self::span(&self.basis.mul(&coeffs)?))
    }

    /// Image of this subspace under `map`, whose columns are indexed by this ambient space.
    pub fn image_under(&self, map: &Matrix<F>) -> Result<Subspace<F>> {
        if map.ncols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map with {} columns applied to ambient dimension {}",
                map.ncols(),
                self.ambient
            )));
        }
        Ok(Self::span(&map.mul(&self.basis)?))
    }
}

/// Sum and intersection in one call.
pub fn subspace_ops<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Result<SubspaceOps<F>> {
    Ok(SubspaceOps {
        sum: u.sum(w)?,
        intersection: u.intersection(w)?,
    })
}

/// `A(U)` for a subspace `U` of the source of `A`.
pub fn image_of_map<F: Field>(a: &Matrix<F>, u: &Subspace<F>) -> Result<Subspace<F>> {
    u.image_under(a)
}
