//! Finitely presented ℕ^m-graded modules over `k[t_1, ..., t_m]`.
//!
//! A presentation stores generator degrees, relation degrees and a scalar coefficient matrix.
//! The entry `(i, j)` is the coefficient of `t^(rel_j - gen_i) g_i` in relation `j`, so the
//! monomial part is implied by the degrees.
//!
//! At a degree `d` the vector space `M(d)` is `k^{G_d}` modulo the relations of degree `≤ d`,
//! where `G_d` is the set of generators of degree `≤ d`. Its canonical basis consists of the
//! generators that are not pivots of the reduced relation matrix at `d`.
//!
//! Eligibility only depends on `min(d, B)` for the stabilization bound `B`, which is why every
//! transition between degrees `≥ B` is an isomorphism, and why a localized module can be
//! evaluated by pinning inverted coordinates at `B`.

mod degree;
mod map;
mod named;
mod random;

pub use degree::{box_points, Multidegree};
pub use map::PresentationMap;
pub use named::{hstrip, named_example, vstrip, NamedObject, NAMED_EXAMPLES};
pub use random::{random_presentation, RandomParams};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct GradedPresentation<F: Field> {
    field: F,
    m: usize,
    gen_degrees: Vec<Multidegree>,
    rel_degrees: Vec<Multidegree>,
    rel_coeffs: Matrix<F>,
}

/// The vector space `M(d)` in canonical coordinates.
#[derive(Clone, Debug)]
pub struct DegreeSlice<F: Field> {
    eligible: Vec<usize>,
    local: Vec<Option<usize>>,
    /// Reduced relation rows over the eligible generators.
    rows: Matrix<F>,
    pivots: Vec<usize>,
    basis: Vec<usize>,
}

impl<F: Field> DegreeSlice<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Global indices of the generators whose classes form the canonical basis.
    pub fn basis_generators(&self) -> Vec<usize> {
        self.basis.iter().map(|&p| self.eligible[p]).collect()
    }

    pub fn eligible_generators(&self) -> &[usize] {
        &self.eligible
    }

    pub fn is_eligible(&self, g: usize) -> bool {
        self.local[g].is_some()
    }

    /// Canonical coordinates of the class of `v`, a vector indexed by all generators and
    /// supported on generators of degree `≤ d`.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.rows.field();
        if v.len() != self.local.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} generators",
                v.len(),
                self.local.len()
            )));
        }
        let mut w: Vec<F::Elem> = vec![f.zero(); self.eligible.len()];
        for (g, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            match self.local[g] {
                Some(l) => w[l] = x.clone(),
                None => {
                    return Err(Error::DimensionMismatch(format!(
                        "generator {g} is not present in this degree"
                    )))
                }
            }
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (j, x) in w.iter_mut().enumerate() {
                let y = self.rows.get(r, j);
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        Ok(self.basis.iter().map(|&p| w[p].clone()).collect())
    }

    /// Coordinates of the class of a single generator.
    pub fn reduce_generator(&self, g: usize) -> Result<Vec<F::Elem>> {
        let f = self.rows.field();
        let mut v = vec![f.zero(); self.local.len()];
        v[g] = f.one();
        self.reduce(&v)
    }
}

impl<F: Field> GradedPresentation<F> {
    /// Builds and validates a presentation. `rel_coeffs` has one row per generator and one
    /// column per relation.
    pub fn new(
        field: &F,
        m: usize,
        gen_degrees: Vec<Multidegree>,
        rel_degrees: Vec<Multidegree>,
        rel_coeffs: Matrix<F>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyParameterRange("m must be at least 1".into()));
        }
        if rel_coeffs.field() != field {
            return Err(Error::FieldMismatch);
        }
        for d in gen_degrees.iter().chain(&rel_degrees) {
            if d.len() != m {
                return Err(Error::DegreeLength {
                    expected: m,
                    found: d.coords().to_vec(),
                });
            }
            if !d.is_nonnegative() {
                return Err(Error::NegativeDegree(d.to_string()));
            }
        }
        if rel_coeffs.shape() != (gen_degrees.len(), rel_degrees.len()) {
            return Err(Error::DimensionMismatch(format!(
                "coefficient matrix is {}x{}, expected {}x{}",
                rel_coeffs.nrows(),
                rel_coeffs.ncols(),
                gen_degrees.len(),
                rel_degrees.len()
            )));
        }
        for (j, rd) in rel_degrees.iter().enumerate() {
            for (i, gd) in gen_degrees.iter().enumerate() {
                if !field.is_zero(rel_coeffs.get(i, j)) && !gd.le(rd) {
                    return Err(Error::NotHomogeneous {
                        relation: j,
                        generator: i,
                    });
                }
            }
        }
        Ok(GradedPresentation {
            field: field.clone(),
            m,
            gen_degrees,
            rel_degrees,
            rel_coeffs,
        })
    }

    /// Convenience constructor from integer data; each relation is a degree and one
    /// coefficient per generator.
    pub fn from_i64(
        field: &F,
        m: usize,
        gens: &[Vec<i64>],
        rels: &[(Vec<i64>, Vec<i64>)],
    ) -> Result<Self> {
        let n = gens.len();
        for (j, (_, c)) in rels.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "relation {j} has {} coefficients for {n} generators",
                    c.len()
                )));
            }
        }
        let coeffs = Matrix::from_fn(field, n, rels.len(), |i, j| field.from_i64(rels[j].1[i]));
        Self::new(
            field,
            m,
            gens.iter().map(|g| Multidegree::new(g.clone())).collect(),
            rels.iter()
                .map(|(d, _)| Multidegree::new(d.clone()))
                .collect(),
            coeffs,
        )
    }

    pub fn zero(field: &F, m: usize) -> Result<Self> {
        Self::new(field, m, vec![], vec![], Matrix::zeros(field, 0, 0))
    }

    /// `t^a R`, a free module of rank one generated in degree `a`.
    pub fn free(field: &F, a: &Multidegree) -> Result<Self> {
        Self::new(
            field,
            a.len(),
            vec![a.clone()],
            vec![],
            Matrix::zeros(field, 1, 0),
        )
    }

    /// `R / (t^{e_1}, ..., t^{e_k})` for monomials given by exponent vectors.
    pub fn monomial_quotient(field: &F, m: usize, monomials: &[Multidegree]) -> Result<Self> {
        Self::new(
            field,
            m,
            vec![Multidegree::zero(m)],
            monomials.to_vec(),
            Matrix::from_fn(field, 1, monomials.len(), |_, _| field.one()),
        )
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn gen_degrees(&self) -> &[Multidegree] {
        &self.gen_degrees
    }
    pub fn rel_degrees(&self) -> &[Multidegree] {
        &self.rel_degrees
    }
    pub fn rel_coeffs(&self) -> &Matrix<F> {
        &self.rel_coeffs
    }
    pub fn num_gens(&self) -> usize {
        self.gen_degrees.len()
    }
    pub fn num_rels(&self) -> usize {
        self.rel_degrees.len()
    }

    pub fn check_degree(&self, d: &Multidegree) -> Result<()> {
        if d.len() != self.m {
            return Err(Error::DegreeLength {
                expected: self.m,
                found: d.coords().to_vec(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, a: &Multidegree, b: &Multidegree) -> Result<()> {
        self.check_degree(a)?;
        self.check_degree(b)?;
        if !a.le(b) {
            return Err(Error::NotComparable(
                a.coords().to_vec(),
                b.coords().to_vec(),
            ));
        }
        Ok(())
    }

    fn eligible_gens(&self, d: &Multidegree) -> Vec<usize> {
        (0..self.num_gens())
            .filter(|&i| self.gen_degrees[i].le(d))
            .collect()
    }

    fn eligible_rels(&self, d: &Multidegree) -> Vec<usize> {
        (0..self.num_rels())
            .filter(|&j| self.rel_degrees[j].le(d))
            .collect()
    }

    /// Relation columns of degree `≤ d`, restricted to the generators of degree `≤ d`.
    fn relation_block(&self, gens: &[usize], d: &Multidegree) -> Matrix<F> {
        self.rel_coeffs
            .select_rows(gens)
            .select_cols(&self.eligible_rels(d))
    }

    pub fn slice(&self, d: &Multidegree) -> Result<DegreeSlice<F>> {
        self.check_degree(d)?;
        let eligible = self.eligible_gens(d);
        let mut local = vec![None; self.num_gens()];
        for (l, &g) in eligible.iter().enumerate() {
            local[g] = Some(l);
        }
        let ech = self.relation_block(&eligible, d).transpose().rref();
        let rank = ech.pivots.len();
        let rows = ech.reduced.select_rows(&(0..rank).collect::<Vec<_>>());
        let mut is_pivot = vec![false; eligible.len()];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..eligible.len()).filter(|&p| !is_pivot[p]).collect();
        Ok(DegreeSlice {
            eligible,
            local,
            rows,
            pivots: ech.pivots,
            basis,
        })
    }

    pub fn dim_at(&self, d: &Multidegree) -> Result<usize> {
        self.check_degree(d)?;
        let gens = self.eligible_gens(d);
        Ok(gens.len() - self.relation_block(&gens, d).rank())
    }

    /// Matrix of multiplication `M(a) → M(b)` in canonical bases, of shape `dim(b) × dim(a)`.
    pub fn transition_matrix(&self, a: &Multidegree, b: &Multidegree) -> Result<Matrix<F>> {
        self.check_pair(a, b)?;
        let sa = self.slice(a)?;
        let sb = self.slice(b)?;
        let cols = sa
            .basis_generators()
            .into_iter()
            .map(|g| sb.reduce_generator(g))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&self.field, sb.dim(), &cols)
    }

    /// Rank of `M(a) → M(b)`, computed in `k^{G_b}` without choosing bases:
    /// `rank [E_a | A_b] − rank A_b`.
    pub fn rank_invariant(&self, a: &Multidegree, b: &Multidegree) -> Result<usize> {
        self.check_pair(a, b)?;
        let gens_b = self.eligible_gens(b);
        let rel = self.relation_block(&gens_b, b);
        let units = Matrix::from_fn(&self.field, gens_b.len(), gens_b.len(), |i, j| {
            if i == j && self.gen_degrees[gens_b[j]].le(a) {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        Ok(units.hstack(&rel)?.rank() - rel.rank())
    }

    /// Componentwise maximum of all generator and relation degrees.
    pub fn stabilization_bound(&self) -> Multidegree {
        self.gen_degrees
            .iter()
            .chain(&self.rel_degrees)
            .fold(Multidegree::zero(self.m), |acc, d| acc.join(d))
    }

    /// `dim M(B)`, the rank of the module after inverting every variable.
    pub fn rank(&self) -> usize {
        self.dim_at(&self.stabilization_bound())
            .expect("bound has length m")
    }

    pub fn direct_sum(&self, other: &GradedPresentation<F>) -> Result<GradedPresentation<F>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.m != other.m {
            return Err(Error::AmbientMismatch(self.m, other.m));
        }
        let mut gens = self.gen_degrees.clone();
        gens.extend(other.gen_degrees.iter().cloned());
        let mut rels = self.rel_degrees.clone();
        rels.extend(other.rel_degrees.iter().cloned());
        Self::new(
            &self.field,
            self.m,
            gens,
            rels,
            self.rel_coeffs.block_diag(&other.rel_coeffs),
        )
    }

    pub fn direct_sum_all<'a>(
        field: &F,
        m: usize,
        parts: impl IntoIterator<Item = &'a GradedPresentation<F>>,
    ) -> Result<GradedPresentation<F>> {
        parts
            .into_iter()
            .try_fold(Self::zero(field, m)?, |acc, p| acc.direct_sum(p))
    }

    /// Translates every degree by `e ≥ 0`.
    pub fn shift(&self, e: &Multidegree) -> Result<GradedPresentation<F>> {
        self.check_degree(e)?;
        if !e.is_nonnegative() {
            return Err(Error::NegativeDegree(e.to_string()));
        }
        Self::new(
            &self.field,
            self.m,
            self.gen_degrees.iter().map(|d| d.add(e)).collect(),
            self.rel_degrees.iter().map(|d| d.add(e)).collect(),
            self.rel_coeffs.clone(),
        )
    }

    /// The same presentation read over another field; coefficients must have integer
    /// representatives.
    pub fn change_field<G: Field>(&self, field: &G) -> Result<GradedPresentation<G>> {
        let rows = self
            .rel_coeffs
            .to_i64_rows()
            .ok_or_else(|| Error::DimensionMismatch("non-integer coefficients".into()))?;
        let coeffs = Matrix::from_fn(field, self.num_gens(), self.num_rels(), |i, j| {
            field.from_i64(rows[i][j])
        });
        GradedPresentation::new(
            field,
            self.m,
            self.gen_degrees.clone(),
            self.rel_degrees.clone(),
            coeffs,
        )
    }
}
