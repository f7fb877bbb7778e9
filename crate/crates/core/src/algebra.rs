//! Lie algebras given by structure constants, and the subspace machinery
//! built on them: centers, the classical series, ideals and quotients.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{is_zero_vec, Matrix, Rational};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("vector has length {got}, algebra has dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("structure constants have the wrong shape: {0}")]
    Shape(String),
    #[error("bracket [{0},{0}] must vanish")]
    SelfBracket(String),
    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),
    #[error("subspace is not an ideal: [{element}, basis row {row}] leaves it")]
    NotIdeal { element: String, row: usize },
    #[error("subspace is not a subalgebra: bracket of basis rows {0} and {1} leaves it")]
    NotSubalgebra(usize, usize),
    #[error("change of basis matrix is singular")]
    SingularBasis,
}

/// A failed axiom, with the basis indices where it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `c[i][j] != -c[j][i]` (including `c[i][i] != 0`).
    Antisymmetry { i: usize, j: usize },
    /// The Jacobi sum for `(e_i, e_j, e_k)` is the nonzero `residual`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Rational>,
    },
    /// A representation fails `[π(e_i), π(e_j)] = π([e_i, e_j])`.
    Homomorphism { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn jacobi_triples(&self) -> Vec<(usize, usize, usize)> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::Jacobi { i, j, k, .. } => Some((*i, *j, *k)),
                _ => None,
            })
            .collect()
    }
}

/// Finite-dimensional Lie algebra over the rationals.
///
/// `structure[i][j]` holds the coordinates of `[e_i, e_j]`. The type does not
/// enforce the Lie axioms on construction; [`LieAlgebra::validate`] reports
/// them, so malformed input can be inspected rather than rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    structure: Vec<Vec<Vec<Rational>>>,
}

/// One sparse bracket entry: `[e_i, e_j] = Σ coeff · e_k`.
pub type BracketEntry = (usize, usize, Vec<(usize, Rational)>);

impl LieAlgebra {
    pub fn new(names: Vec<String>, structure: Vec<Vec<Vec<Rational>>>) -> Result<Self, LieError> {
        let n = names.len();
        if structure.len() != n || structure.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(LieError::Shape(format!("expected {n}x{n}x{n} structure constants")));
        }
        Ok(Self { names, structure })
    }

    /// Builds an algebra from the brackets `[e_i, e_j]` with `i != j`;
    /// `[e_j, e_i]` is filled in by antisymmetry and omitted pairs are zero.
    /// Repeated pairs accumulate.
    pub fn from_brackets(names: Vec<String>, brackets: &[BracketEntry]) -> Result<Self, LieError> {
        let n = names.len();
        let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(LieError::Shape(format!("bracket index ({i},{j}) out of range")));
            }
            if i == j {
                if terms.iter().all(|(_, c)| c.is_zero()) {
                    continue;
                }
                return Err(LieError::SelfBracket(names[i].clone()));
            }
            for (k, c) in terms {
                if *k >= n {
                    return Err(LieError::Shape(format!("bracket target {k} out of range")));
                }
                structure[i][j][*k] += c;
                structure[j][i][*k] -= c;
            }
        }
        Ok(Self { names, structure })
    }

    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        Self {
            names,
            structure: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim(), "one name per basis element");
        self.names = names;
        self
    }

    pub fn index_of(&self, name: &str) -> Result<usize, LieError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| LieError::UnknownBasis(name.to_string()))
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().flatten().all(|v| is_zero_vec(v))
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::LengthMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = &self.structure[i][j];
                if is_zero_vec(c) {
                    continue;
                }
                let s = ui * vj;
                for (o, ck) in out.iter_mut().zip(c) {
                    if !ck.is_zero() {
                        *o += &s * ck;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad e_i`, acting on column vectors.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.structure[i][j][k].clone();
            }
        }
        m
    }

    /// Matrix of `ad u` for an arbitrary element.
    pub fn ad_of(&self, u: &[Rational]) -> Result<Matrix, LieError> {
        self.check_len(u)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                m = &m + &self.ad(i).scale(ui);
            }
        }
        Ok(m)
    }

    /// Checks antisymmetry and the Jacobi identity exactly, on every pair and
    /// every triple `i < j < k`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let bad = self.structure[i][j]
                    .iter()
                    .zip(&self.structure[j][i])
                    .any(|(a, b)| !(a + b).is_zero());
                if bad {
                    violations.push(Violation::Antisymmetry { i, j });
                }
            }
        }
        let e: Vec<Vec<Rational>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let a = self.bracket_unchecked(&self.structure[i][j], &e[k]);
                    let b = self.bracket_unchecked(&self.structure[j][k], &e[i]);
                    let c = self.bracket_unchecked(&self.structure[k][i], &e[j]);
                    let residual: Vec<Rational> =
                        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vec(&residual) {
                        violations.push(Violation::Jacobi { i, j, k, residual });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `[s, t]` as a subspace.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in s.basis_vectors() {
            for v in t.basis_vectors() {
                let w = self.bracket_unchecked(&u, &v);
                if !is_zero_vec(&w) {
                    vecs.push(w);
                }
            }
        }
        Subspace::span_vectors(self.dim(), &vecs)
    }

    /// `{x : [x, g] ⊆ s}`, the preimage of the center of `g/s` when `s` is
    /// an ideal.
    pub fn center_mod(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let annihilator = crate::linalg::nullspace(s.basis());
        let mut rows = Vec::new();
        for j in 0..n {
            for w in annihilator.row_vecs() {
                let row: Vec<Rational> = (0..n)
                    .map(|i| crate::linalg::dot(&w, &self.structure[i][j]))
                    .collect();
                rows.push(row);
            }
        }
        Subspace::kernel(&Matrix::from_rows(n, rows).expect("rows have algebra length"))
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            // [x, v] = -ad(v) x
            let adv = self.ad_of(&v).expect("subspace lives in the algebra");
            rows.extend(adv.row_vecs());
        }
        Subspace::kernel(&Matrix::from_rows(n, rows).expect("rows have algebra length"))
    }

    pub fn center(&self) -> Subspace {
        self.center_mod(&Subspace::zero(self.dim()))
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = Subspace::whole(self.dim());
        self.bracket_span(&g, &g)
    }

    /// `D⁰ = g, Dᵏ⁺¹ = [Dᵏ, Dᵏ]`, stopping before the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        iterate_until_stable(Subspace::whole(self.dim()), |d| self.bracket_span(d, d))
    }

    /// `L⁰ = g, Lᵏ⁺¹ = [g, Lᵏ]`, stopping before the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = Subspace::whole(self.dim());
        iterate_until_stable(g.clone(), |l| self.bracket_span(&g, l))
    }

    /// `C⁰ = 0 ⊂ C¹ = C(g) ⊂ …` with `Cⁱ⁺¹/Cⁱ` the center of `g/Cⁱ`.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        iterate_until_stable(Subspace::zero(self.dim()), |c| self.center_mod(c))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    fn first_escape(&self, left: &Subspace, s: &Subspace) -> Option<(usize, usize)> {
        let lv = left.basis_vectors();
        for (a, u) in lv.iter().enumerate() {
            for (b, v) in s.basis_vectors().iter().enumerate() {
                if !s.contains(&self.bracket_unchecked(u, v)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `[g, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_witness(s).is_none()
    }

    fn ideal_witness(&self, s: &Subspace) -> Option<(usize, usize)> {
        self.first_escape(&Subspace::whole(self.dim()), s)
    }

    /// `[s, s] ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.first_escape(s, s).is_none()
    }

    pub fn require_ideal(&self, s: &Subspace) -> Result<(), LieError> {
        match self.ideal_witness(s) {
            Some((a, row)) => Err(LieError::NotIdeal {
                element: self.names[a].clone(),
                row,
            }),
            None => Ok(()),
        }
    }

    pub fn require_subalgebra(&self, s: &Subspace) -> Result<(), LieError> {
        match self.first_escape(s, s) {
            Some((a, b)) => Err(LieError::NotSubalgebra(a, b)),
            None => Ok(()),
        }
    }

    /// Quotient by an ideal. Representatives are the coordinate axes that are
    /// not pivots of the ideal's basis; the projection maps coordinates of `g`
    /// to coordinates of the quotient.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        self.require_ideal(ideal)?;
        let free = ideal.complement_axes();
        let q = free.len();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            free.iter().map(|&f| r[f].clone()).collect()
        };
        let mut projection = Matrix::zeros(q, self.dim());
        for j in 0..self.dim() {
            let col = project(&self.basis_vector(j));
            for (a, x) in col.into_iter().enumerate() {
                projection[(a, j)] = x;
            }
        }
        let mut structure = vec![vec![vec![Rational::zero(); q]; q]; q];
        for (a, &fa) in free.iter().enumerate() {
            for (b, &fb) in free.iter().enumerate() {
                structure[a][b] = project(&self.structure[fa][fb]);
            }
        }
        let names = free.iter().map(|&f| self.names[f].clone()).collect();
        Ok((LieAlgebra { names, structure }, projection))
    }

    /// Block direct sum; `self` occupies the first coordinates.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    structure[i][j][k] = self.structure[i][j][k].clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    structure[n1 + i][n1 + j][n1 + k] = other.structure[i][j][k].clone();
                }
            }
        }
        let names = disjoint_names(&[self.names.clone(), other.names.clone()]);
        LieAlgebra { names, structure }
    }

    /// Same dimension and structure constants, ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.structure == other.structure
    }

    /// The structure of a subalgebra in the coordinates of its RREF basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        self.require_subalgebra(s)?;
        let rows = s.basis_vectors();
        let k = rows.len();
        let mut structure = vec![vec![vec![Rational::zero(); k]; k]; k];
        for a in 0..k {
            for b in 0..k {
                let w = self.bracket_unchecked(&rows[a], &rows[b]);
                structure[a][b] = s.coordinates(&w).expect("subalgebra is closed");
            }
        }
        let names = rows.iter().enumerate().map(|(r, v)| self.vector_label(v, r)).collect();
        Ok(LieAlgebra { names, structure })
    }

    fn vector_label(&self, v: &[Rational], fallback: usize) -> String {
        let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        match nonzero.as_slice() {
            [i] if v[*i] == Rational::from_integer(1.into()) => self.names[*i].clone(),
            _ => format!("v{}", fallback + 1),
        }
    }

    /// The same algebra written in the basis given by the rows of `p`.
    pub fn change_basis(&self, p: &Matrix, names: Option<Vec<String>>) -> Result<LieAlgebra, LieError> {
        if p.rows() != self.dim() || p.cols() != self.dim() {
            return Err(LieError::Shape("change of basis must be square".into()));
        }
        let inv = p.inverse().map_err(|_| LieError::SingularBasis)?;
        let rows = p.row_vecs();
        let n = self.dim();
        let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                let w = self.bracket_unchecked(&rows[a], &rows[b]);
                structure[a][b] = inv.vec_mul(&w);
            }
        }
        let names = names.unwrap_or_else(|| rows.iter().enumerate().map(|(r, v)| self.vector_label(v, r)).collect());
        Ok(LieAlgebra { names, structure })
    }
}

/// Concatenates basis labels; if any label repeats, every label gets the
/// 1-based number of its part appended.
pub fn disjoint_names(parts: &[Vec<String>]) -> Vec<String> {
    let all: Vec<&String> = parts.iter().flatten().collect();
    let distinct: HashSet<&String> = all.iter().copied().collect();
    if distinct.len() == all.len() {
        return all.into_iter().cloned().collect();
    }
    parts
        .iter()
        .enumerate()
        .flat_map(|(p, names)| names.iter().map(move |n| format!("{n}{}", p + 1)))
        .collect()
}

fn iterate_until_stable(start: Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut series = vec![start];
    loop {
        let next = step(series.last().expect("series is nonempty"));
        if &next == series.last().expect("series is nonempty") {
            return series;
        }
        series.push(next);
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}; basis {:?})", self.dim(), self.names)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis: {}", self.names.join(", "))?;
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let terms: Vec<String> = self.structure[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("{c}*{}", self.names[k]))
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "[{}, {}] = {}", self.names[i], self.names[j], terms.join(" + "))?;
                }
            }
        }
        Ok(())
    }
}
