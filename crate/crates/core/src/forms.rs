//! Symmetric bilinear forms on Lie algebras: the cyclic and ad-invariant
//! solvers, radicals, orthogonal complements, index, and the decomposition
//! checks for subalgebra ⊕ ideal splittings.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{LieAlgebra, LieError};
use crate::linalg::{dot, is_zero_vec, nullspace, signature, LinalgError, Matrix, Rational, Signature};
use crate::rep::{Representation, SolutionSpace};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("form is {form}-dimensional but the algebra has dimension {algebra}")]
    DimensionMismatch { form: usize, algebra: usize },
    #[error("subspace lives in dimension {got}, expected {expected}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("form is not cyclic: residual {value} at ({i}, {j}, {k})")]
    NotCyclic {
        i: usize,
        j: usize,
        k: usize,
        value: Rational,
    },
    #[error("subalgebra and ideal do not form a direct sum decomposition")]
    NotComplement,
    #[error("restriction of the form is degenerate; radical has dimension {}", .radical.dim())]
    Degenerate { radical: Subspace },
}

/// Index of the unknown `B[i][j]` (`i ≤ j`) in the upper-triangle row-major
/// ordering of symmetric `n × n` matrices.
pub fn upper_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// A symmetric bilinear form, stored as its Gram matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    m: Matrix,
}

impl BilinearForm {
    pub fn new(m: Matrix) -> Result<Self, FormError> {
        m.check_symmetric()?;
        Ok(Self { m })
    }

    pub fn zero(n: usize) -> Self {
        Self { m: Matrix::zeros(n, n) }
    }

    pub fn identity(n: usize) -> Self {
        Self { m: Matrix::identity(n) }
    }

    /// The form whose upper triangle, read row-major, is `upper`.
    pub fn from_upper(n: usize, upper: &[Rational]) -> Self {
        assert_eq!(upper.len(), n * (n + 1) / 2, "upper triangle length");
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = upper[upper_index(n, i, j)].clone();
                m[(j, i)] = v.clone();
                m[(i, j)] = v;
            }
        }
        Self { m }
    }

    pub fn to_upper(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                out.push(self.m[(i, j)].clone());
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix {
        self.m
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.m.bilinear(u, v)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.m[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { m: self.m.scale(s) }
    }

    pub fn add(&self, other: &BilinearForm) -> Self {
        Self { m: &self.m + &other.m }
    }

    /// `Sᵀ B S` where the columns of `S` express a new basis; equivalently
    /// the form in the basis given by the rows of `p = Sᵀ`.
    pub fn in_basis(&self, p: &Matrix) -> Self {
        Self {
            m: &(p * &self.m) * &p.transpose(),
        }
    }

    /// The form restricted to `s`, in the coordinates of its RREF basis.
    pub fn restrict(&self, s: &Subspace) -> Self {
        self.in_basis(s.basis())
    }

    pub fn signature(&self) -> Signature {
        signature(&self.m).expect("form matrix is square and symmetric")
    }

    /// Maximal dimension of an isotropic subspace, `min(p, n) + z`.
    pub fn index(&self) -> usize {
        self.signature().index()
    }

    pub fn radical(&self) -> Subspace {
        Subspace::kernel(&self.m)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.m.rank() == self.dim()
    }

    /// `{x : B(x, s) = 0}`.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        Subspace::kernel(&(s.basis() * &self.m))
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        self.restrict(s).is_zero()
    }
}

impl fmt::Debug for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearForm({:?})", self.m)
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.m, f)
    }
}

fn check_dim(g: &LieAlgebra, b: &BilinearForm) -> Result<(), FormError> {
    if b.dim() != g.dim() {
        return Err(FormError::DimensionMismatch {
            form: b.dim(),
            algebra: g.dim(),
        });
    }
    Ok(())
}

fn check_ambient(g: &LieAlgebra, s: &Subspace) -> Result<(), FormError> {
    if s.ambient_dim() != g.dim() {
        return Err(FormError::AmbientMismatch {
            expected: g.dim(),
            got: s.ambient_dim(),
        });
    }
    Ok(())
}

/// `B([x,y],z) + B([y,z],x) + B([z,x],y)`.
pub fn cyclic_sum(g: &LieAlgebra, b: &BilinearForm, x: &[Rational], y: &[Rational], z: &[Rational]) -> Rational {
    b.eval(&g.bracket_unchecked(x, y), z) + b.eval(&g.bracket_unchecked(y, z), x) + b.eval(&g.bracket_unchecked(z, x), y)
}

fn cyclic_sum_basis(g: &LieAlgebra, bm: &Matrix, i: usize, j: usize, k: usize) -> Rational {
    let col = |a: usize| bm.column(a);
    dot(g.structure(i, j), &col(k)) + dot(g.structure(j, k), &col(i)) + dot(g.structure(k, i), &col(j))
}

/// A nonzero cyclic sum on basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicResidual {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

/// All nonzero cyclic sums over basis triples `i < j < k`. The cyclic sum is
/// alternating in its three arguments, so these triples decide cyclicity.
pub fn cyclic_defect(g: &LieAlgebra, b: &BilinearForm) -> Result<Vec<CyclicResidual>, FormError> {
    check_dim(g, b)?;
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let value = cyclic_sum_basis(g, b.matrix(), i, j, k);
                if !value.is_zero() {
                    out.push(CyclicResidual { i, j, k, value });
                }
            }
        }
    }
    Ok(out)
}

pub fn is_cyclic(g: &LieAlgebra, b: &BilinearForm) -> Result<bool, FormError> {
    Ok(cyclic_defect(g, b)?.is_empty())
}

pub fn require_cyclic(g: &LieAlgebra, b: &BilinearForm) -> Result<(), FormError> {
    match cyclic_defect(g, b)?.into_iter().next() {
        None => Ok(()),
        Some(CyclicResidual { i, j, k, value }) => Err(FormError::NotCyclic { i, j, k, value }),
    }
}

/// Coefficient row of `B([eᵢ,eⱼ],eₖ) + B([eⱼ,eₖ],eᵢ) + B([eₖ,eᵢ],eⱼ)` in the
/// upper-triangle unknowns.
fn cyclic_row(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = g.dim();
    let mut row = vec![Rational::zero(); n * (n + 1) / 2];
    for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
        for (l, c) in g.structure(p, q).iter().enumerate() {
            if !c.is_zero() {
                row[upper_index(n, l, r)] += c;
            }
        }
    }
    row
}

fn assemble(unknowns: usize, rows: Vec<Vec<Rational>>) -> Matrix {
    let rows = rows.into_iter().filter(|r| !is_zero_vec(r)).collect();
    Matrix::from_rows(unknowns, rows).expect("rows have unknown count")
}

/// The cyclic system over triples `i < j < k`.
pub fn cyclic_system(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                rows.push(cyclic_row(g, i, j, k));
            }
        }
    }
    assemble(n * (n + 1) / 2, rows)
}

/// The cyclic system over all ordered triples, including repeated indices.
pub fn cyclic_system_all_triples(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                rows.push(cyclic_row(g, i, j, k));
            }
        }
    }
    assemble(n * (n + 1) / 2, rows)
}

fn solve_forms(n: usize, system: Matrix) -> SolutionSpace<BilinearForm> {
    let basis = nullspace(&system)
        .row_vecs()
        .iter()
        .map(|v| BilinearForm::from_upper(n, v))
        .collect();
    SolutionSpace {
        basis,
        equations: system.rows(),
        unknowns: n * (n + 1) / 2,
    }
}

/// Basis of the cyclic symmetric forms on `g`.
pub fn cyclic_space(g: &LieAlgebra) -> SolutionSpace<BilinearForm> {
    solve_forms(g.dim(), cyclic_system(g))
}

/// The system `B([eᵢ,eⱼ],eₖ) + B(eⱼ,[eᵢ,eₖ]) = 0`; it is symmetric in
/// `j, k`, so only `j ≤ k` is assembled.
pub fn invariant_system(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut row = vec![Rational::zero(); n * (n + 1) / 2];
                for (l, c) in g.structure(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[upper_index(n, l, k)] += c;
                    }
                }
                for (l, c) in g.structure(i, k).iter().enumerate() {
                    if !c.is_zero() {
                        row[upper_index(n, j, l)] += c;
                    }
                }
                rows.push(row);
            }
        }
    }
    assemble(n * (n + 1) / 2, rows)
}

/// Basis of the ad-invariant symmetric forms on `g`.
pub fn invariant_space(g: &LieAlgebra) -> SolutionSpace<BilinearForm> {
    solve_forms(g.dim(), invariant_system(g))
}

/// `K(x, y) = tr(ad x ∘ ad y)`.
pub fn killing_form(g: &LieAlgebra) -> BilinearForm {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = (&ads[i] * &ads[j]).trace();
            m[(j, i)] = t.clone();
            m[(i, j)] = t;
        }
    }
    BilinearForm { m }
}

/// Outcome of the three-condition test for `g = h ⊕ i` (`h` a subalgebra,
/// `i` an ideal).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbcReport {
    /// `B` restricted to `h` and to `i` are each cyclic.
    pub a_ok: bool,
    /// Cyclic sums with two arguments in `i` and one in `h` vanish.
    pub b_ok: bool,
    /// Cyclic sums with two arguments in `h` and one in `i` vanish.
    pub c_ok: bool,
    /// `B` is cyclic on all of `g`.
    pub cyclic: bool,
}

impl AbcReport {
    pub fn all(&self) -> bool {
        self.a_ok && self.b_ok && self.c_ok
    }
}

pub fn check_abc(g: &LieAlgebra, b: &BilinearForm, h: &Subspace, i: &Subspace) -> Result<AbcReport, FormError> {
    check_dim(g, b)?;
    check_ambient(g, h)?;
    check_ambient(g, i)?;
    g.require_subalgebra(h)?;
    g.require_ideal(i)?;
    if !h.is_complement_of(i) {
        return Err(FormError::NotComplement);
    }
    let hv = h.basis_vectors();
    let iv = i.basis_vectors();
    let zero = |x: &Vec<Rational>, y: &Vec<Rational>, z: &Vec<Rational>| cyclic_sum(g, b, x, y, z).is_zero();
    let all_triples = |v: &[Vec<Rational>]| {
        (0..v.len()).all(|p| ((p + 1)..v.len()).all(|q| ((q + 1)..v.len()).all(|r| zero(&v[p], &v[q], &v[r]))))
    };
    let pairs_with = |pairs: &[Vec<Rational>], single: &[Vec<Rational>]| {
        (0..pairs.len()).all(|p| ((p + 1)..pairs.len()).all(|q| single.iter().all(|s| zero(&pairs[p], &pairs[q], s))))
    };
    Ok(AbcReport {
        a_ok: all_triples(&hv) && all_triples(&iv),
        b_ok: pairs_with(&iv, &hv),
        c_ok: pairs_with(&hv, &iv),
        cyclic: is_cyclic(g, b)?,
    })
}

/// `g = g₁ +_π i` with `g₁ = i⊥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSplit {
    /// `i⊥`, a complementary subalgebra.
    pub complement: Subspace,
    /// The bracket of `g₁` (in its RREF basis) acting on `i` (in its RREF
    /// basis).
    pub action: Representation,
}

/// Splits a cyclic metric algebra along an ideal on which the form is
/// nondegenerate.
pub fn split_along_ideal(g: &LieAlgebra, b: &BilinearForm, ideal: &Subspace) -> Result<IdealSplit, FormError> {
    check_dim(g, b)?;
    check_ambient(g, ideal)?;
    require_cyclic(g, b)?;
    g.require_ideal(ideal)?;
    let restricted = b.restrict(ideal);
    if !restricted.is_nondegenerate() {
        let local = restricted.radical();
        let ambient = local.basis().row_vecs().iter().map(|c| ideal.basis().vec_mul(c)).collect::<Vec<_>>();
        return Err(FormError::Degenerate {
            radical: Subspace::span_vectors(g.dim(), &ambient),
        });
    }
    let complement = b.orthogonal_complement(ideal);
    if !complement.is_complement_of(ideal) {
        return Err(FormError::NotComplement);
    }
    let g1 = g.restrict(&complement)?;
    let iv = ideal.basis_vectors();
    let d = iv.len();
    let ops = complement
        .basis_vectors()
        .iter()
        .map(|x| {
            let mut m = Matrix::zeros(d, d);
            for (col, y) in iv.iter().enumerate() {
                let w = g.bracket_unchecked(x, y);
                let coords = ideal.coordinates(&w).expect("ideal is closed under g");
                for (row, c) in coords.into_iter().enumerate() {
                    m[(row, col)] = c;
                }
            }
            m
        })
        .collect();
    let ideal_names: Vec<String> = g.restrict(ideal)?.names().to_vec();
    let action = Representation::with_module_names(g1, ideal_names, ops).expect("operators are square");
    Ok(IdealSplit { complement, action })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::rat;

    #[test]
    fn upper_index_is_row_major() {
        let n = 4;
        let mut expected = 0;
        for i in 0..n {
            for j in i..n {
                assert_eq!(upper_index(n, i, j), expected);
                assert_eq!(upper_index(n, j, i), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn sl2_cyclic_family() {
        let g = catalog::sl2();
        // B(H,H) = -4, B(X,Y) = 1
        let b = BilinearForm::new(Matrix::from_i64(&[&[-4, 0, 0], &[0, 0, 1], &[0, 1, 0]])).unwrap();
        assert!(cyclic_defect(&g, &b).unwrap().is_empty());
        let k = killing_form(&g);
        assert_eq!(k.matrix(), &Matrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        let d = cyclic_defect(&g, &k).unwrap();
        assert_eq!(d, vec![CyclicResidual { i: 0, j: 1, k: 2, value: rat(24) }]);
        assert_eq!(cyclic_space(&g).dim(), 5);
        assert_eq!(invariant_space(&g).dim(), 1);
    }

    #[test]
    fn abelian_everything_cyclic() {
        let g = LieAlgebra::abelian(3);
        assert_eq!(cyclic_space(&g).dim(), 6);
        assert_eq!(invariant_space(&g).dim(), 6);
        assert!(killing_form(&g).is_zero());
    }

    #[test]
    fn heisenberg_forms() {
        let g = catalog::heisenberg(1);
        assert!(killing_form(&g).is_zero());
        assert_eq!(invariant_space(&g).dim(), 3);
        assert_eq!(cyclic_space(&g).dim(), 5);
    }

    #[test]
    fn radicals_and_complements() {
        let b = BilinearForm::identity(3);
        assert!(b.radical().is_zero());
        assert!(BilinearForm::zero(3).radical().is_whole());
        assert_eq!(b.orthogonal_complement(&Subspace::coordinate(3, &[0])), Subspace::coordinate(3, &[1, 2]));
        assert!(b.orthogonal_complement(&Subspace::zero(3)).is_whole());
    }

    #[test]
    fn index_and_isotropy() {
        assert_eq!(BilinearForm::identity(4).index(), 0);
        assert_eq!(BilinearForm::zero(3).index(), 3);
        let hyp = BilinearForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(hyp.is_isotropic(&Subspace::coordinate(2, &[0])));
        assert!(hyp.is_isotropic(&Subspace::zero(2)));
        assert!(!hyp.is_isotropic(&Subspace::whole(2)));
    }

    #[test]
    fn killing_fails_a_on_sl2_plus_line() {
        let g = catalog::sl2().direct_sum(&LieAlgebra::abelian(1));
        let k = killing_form(&g);
        let r = check_abc(&g, &k, &Subspace::coordinate(4, &[0, 1, 2]), &Subspace::coordinate(4, &[3])).unwrap();
        assert!(!r.a_ok);
        assert!(!r.cyclic);
    }

    #[test]
    fn split_requires_nondegenerate_restriction() {
        let g = LieAlgebra::abelian(2);
        let b = BilinearForm::new(Matrix::from_i64(&[&[1, 0], &[0, 0]])).unwrap();
        let err = split_along_ideal(&g, &b, &Subspace::coordinate(2, &[1])).unwrap_err();
        assert_eq!(err, FormError::Degenerate { radical: Subspace::coordinate(2, &[1]) });
        let whole = split_along_ideal(&g, &BilinearForm::identity(2), &Subspace::whole(2)).unwrap();
        assert!(whole.complement.is_zero());
    }
}
