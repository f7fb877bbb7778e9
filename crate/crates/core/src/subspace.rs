use std::fmt;

use num_traits::Zero;

use crate::linalg::{nullspace, rref, Matrix, Rational};

/// A linear subspace of a fixed coordinate space.
///
/// The basis is kept in reduced row echelon form without zero rows, so two
/// subspaces are equal exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the rows of `spanning` (which may be dependent).
    pub fn span(spanning: &Matrix) -> Self {
        let r = rref(spanning);
        let rows: Vec<usize> = (0..r.rank).collect();
        let cols: Vec<usize> = (0..spanning.cols()).collect();
        Self {
            ambient_dim: spanning.cols(),
            basis: r.reduced.select(&rows, &cols),
            pivots: r.pivot_cols,
        }
    }

    pub fn span_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec()).expect("vector length must match ambient dimension");
        Self::span(&m)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::span(&Matrix::zeros(0, ambient_dim))
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::span(&Matrix::identity(ambient_dim))
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient_dim: usize, axes: &[usize]) -> Self {
        let mut m = Matrix::zeros(axes.len(), ambient_dim);
        for (r, &a) in axes.iter().enumerate() {
            m[(r, a)] = Rational::from_integer(1.into());
        }
        Self::span(&m)
    }

    /// Kernel of `m`, i.e. `{v : m v = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        Self::span(&nullspace(m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the
    /// subspace. The coefficient of basis row `r` is `v[pivot_r]`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dimension");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let residual = self.reduce(v);
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `v` minus its component along the basis, read off at the pivot
    /// columns. The result vanishes at every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                *o -= &c * b;
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&Matrix::vstack(&self.basis, &other.basis).expect("ambient dimensions must agree"))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = a A = b B  <=>  [a, -b] [A; B] = 0
        let stacked = Matrix::vstack(&self.basis, &other.basis).expect("ambient dimensions must agree");
        let rel = nullspace(&stacked.transpose());
        let k = self.dim();
        let mut vecs = Vec::new();
        for r in 0..rel.rows() {
            let a = &rel.row(r)[..k];
            vecs.push(self.basis.vec_mul(a));
        }
        Subspace::span_vectors(self.ambient_dim, &vecs)
    }

    /// The coordinate axes not used as pivots; a canonical complement.
    pub fn complement_axes(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// True when `self ⊕ other` is the whole space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient_dim && self.intersection(other).is_zero()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}
