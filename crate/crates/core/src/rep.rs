//! Representations as explicit operator matrices, and cyclic quadruples.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{LieAlgebra, ValidationReport, Violation};
use crate::forms::BilinearForm;
use crate::linalg::{is_zero_vec, nullspace, rat, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("expected {expected} operators, one per basis element, got {got}")]
    OperatorCount { expected: usize, got: usize },
    #[error("operator for {0} is not {1}x{1}")]
    OperatorShape(String, usize),
    #[error("module names: expected {expected}, got {got}")]
    ModuleNames { expected: usize, got: usize },
    #[error("conjugating matrix is not an invertible {0}x{0} matrix")]
    BadConjugator(usize),
    #[error("rho must be {rows}x{cols}")]
    RhoShape { rows: usize, cols: usize },
    #[error("quadruple identity fails at ({0}, {1})")]
    QuadrupleIdentity(String, String),
    #[error("form is {got}-dimensional, module is {expected}-dimensional")]
    FormDimension { expected: usize, got: usize },
}

/// `π: g → gl(V)`, stored as one matrix per basis element of `g`.
/// The module carries basis labels so that derived algebras can name them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    module_names: Vec<String>,
    ops: Vec<Matrix>,
}

fn default_module_names(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("v{i}")).collect()
}

impl Representation {
    pub fn new(algebra: LieAlgebra, module_dim: usize, ops: Vec<Matrix>) -> Result<Self, RepError> {
        Self::with_module_names(algebra, default_module_names(module_dim), ops)
    }

    pub fn with_module_names(
        algebra: LieAlgebra,
        module_names: Vec<String>,
        ops: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        if ops.len() != algebra.dim() {
            return Err(RepError::OperatorCount {
                expected: algebra.dim(),
                got: ops.len(),
            });
        }
        let d = module_names.len();
        for (i, op) in ops.iter().enumerate() {
            if op.rows() != d || op.cols() != d {
                return Err(RepError::OperatorShape(algebra.names()[i].clone(), d));
            }
        }
        Ok(Self {
            algebra,
            module_names,
            ops,
        })
    }

    pub fn rename_module(mut self, names: Vec<String>) -> Result<Self, RepError> {
        if names.len() != self.module_dim() {
            return Err(RepError::ModuleNames {
                expected: self.module_dim(),
                got: names.len(),
            });
        }
        self.module_names = names;
        Ok(self)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_names.len()
    }

    pub fn module_names(&self) -> &[String] {
        &self.module_names
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    pub fn op(&self, i: usize) -> &Matrix {
        &self.ops[i]
    }

    /// `π(x)` for an arbitrary element `x`.
    pub fn op_of(&self, x: &[Rational]) -> Matrix {
        let d = self.module_dim();
        let mut m = Matrix::zeros(d, d);
        for (xi, op) in x.iter().zip(&self.ops) {
            if !xi.is_zero() {
                m = &m + &op.scale(xi);
            }
        }
        m
    }

    /// The zero representation of `g` on a `d`-dimensional space.
    pub fn trivial(algebra: LieAlgebra, d: usize) -> Self {
        let ops = vec![Matrix::zeros(d, d); algebra.dim()];
        Self {
            algebra,
            module_names: default_module_names(d),
            ops,
        }
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let ops = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        Self {
            algebra: algebra.clone(),
            module_names: algebra.names().to_vec(),
            ops,
        }
    }

    /// Checks `[π(eᵢ), π(eⱼ)] = π([eᵢ, eⱼ])` for every `i < j`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.algebra.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.ops[i].commutator(&self.ops[j]);
                let rhs = self.op_of(self.algebra.structure(i, j));
                if lhs != rhs {
                    violations.push(Violation::Homomorphism { i, j });
                }
            }
        }
        ValidationReport { violations }
    }

    /// `π*(x) = −π(x)ᵀ`.
    pub fn dual(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            module_names: self.module_names.iter().map(|n| format!("{n}*")).collect(),
            ops: self.ops.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    /// The outer tensor product, a representation of `g₁ ⊕ g₂` on `V₁ ⊗ V₂`
    /// with Kronecker coordinates `i·d₂ + j`.
    pub fn tensor(&self, other: &Representation) -> Self {
        let (d1, d2) = (self.module_dim(), other.module_dim());
        let i1 = Matrix::identity(d1);
        let i2 = Matrix::identity(d2);
        let mut ops: Vec<Matrix> = self.ops.iter().map(|m| m.kron(&i2)).collect();
        ops.extend(other.ops.iter().map(|m| i1.kron(m)));
        let mut module_names = Vec::with_capacity(d1 * d2);
        for a in &self.module_names {
            for b in &other.module_names {
                module_names.push(format!("{a}⊗{b}"));
            }
        }
        Self {
            algebra: self.algebra.direct_sum(&other.algebra),
            module_names,
            ops,
        }
    }

    /// `π'(x) = P π(x) P⁻¹`, an isomorphic representation.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self, RepError> {
        let d = self.module_dim();
        if p.rows() != d || p.cols() != d {
            return Err(RepError::BadConjugator(d));
        }
        let inv = p.inverse().map_err(|_| RepError::BadConjugator(d))?;
        Ok(Self {
            algebra: self.algebra.clone(),
            module_names: default_module_names(d),
            ops: self.ops.iter().map(|m| &(p * m) * &inv).collect(),
        })
    }

    /// True when every `π(eᵢ)` is self-adjoint for `k`:
    /// `k(π(eᵢ)u, v) = k(u, π(eᵢ)v)`.
    pub fn is_symmetric_action(&self, k: &BilinearForm) -> Result<bool, RepError> {
        Ok(self.first_non_symmetric(k)?.is_none())
    }

    /// The first basis element whose operator is not `k`-symmetric.
    pub fn first_non_symmetric(&self, k: &BilinearForm) -> Result<Option<usize>, RepError> {
        if k.dim() != self.module_dim() {
            return Err(RepError::FormDimension {
                expected: self.module_dim(),
                got: k.dim(),
            });
        }
        let km = k.matrix();
        Ok(self
            .ops
            .iter()
            .position(|op| &op.transpose() * km != km * op))
    }

    /// Basis of the symmetric forms `k` for which the action is symmetric.
    pub fn symmetric_action_forms(&self) -> Vec<BilinearForm> {
        let d = self.module_dim();
        let unknowns = d * (d + 1) / 2;
        let mut rows = Vec::new();
        // (opᵀ K − K op)[a][b] = Σ_m op[m][a] K[m][b] − K[a][m] op[m][b]
        for op in &self.ops {
            for a in 0..d {
                for b in (a + 1)..d {
                    let mut row = vec![Rational::zero(); unknowns];
                    for m in 0..d {
                        row[crate::forms::upper_index(d, m, b)] += &op[(m, a)];
                        row[crate::forms::upper_index(d, a, m)] -= &op[(m, b)];
                    }
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_rows(unknowns, rows).expect("rows have unknown count");
        nullspace(&system)
            .row_vecs()
            .iter()
            .map(|v| BilinearForm::from_upper(d, v))
            .collect()
    }

    /// Coefficient matrix of the quadruple identity
    /// `ρ([x,y]) + π*(x)ρ(y) − π*(y)ρ(x) = 0` over basis pairs `a < b`.
    /// Unknowns are the entries of `ρ` in row-major order.
    pub fn quadruple_system(&self) -> Matrix {
        let n = self.algebra.dim();
        let d = self.module_dim();
        let unknowns = n * d;
        let mut rows = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let c_ab = self.algebra.structure(a, b);
                for c in 0..d {
                    let mut row = vec![Rational::zero(); unknowns];
                    for (l, cl) in c_ab.iter().enumerate() {
                        if !cl.is_zero() {
                            row[l * d + c] += cl;
                        }
                    }
                    for m in 0..d {
                        let pa = &self.ops[a][(m, c)];
                        if !pa.is_zero() {
                            row[b * d + m] -= pa;
                        }
                        let pb = &self.ops[b][(m, c)];
                        if !pb.is_zero() {
                            row[a * d + m] += pb;
                        }
                    }
                    if !is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        Matrix::from_rows(unknowns, rows).expect("rows have unknown count")
    }

    /// Basis of all `ρ` (as `dim g × dim V` matrices) making
    /// `(g, π, V, ρ)` a cyclic quadruple.
    pub fn quadruple_space(&self) -> SolutionSpace<Matrix> {
        let n = self.algebra.dim();
        let d = self.module_dim();
        let system = self.quadruple_system();
        let basis = nullspace(&system)
            .row_vecs()
            .into_iter()
            .map(|v| Matrix::from_vec(n, d, v).expect("n*d entries"))
            .collect();
        SolutionSpace {
            basis,
            equations: system.rows(),
            unknowns: n * d,
        }
    }
}

/// A solution basis together with the shape of the system it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace<T> {
    pub basis: Vec<T>,
    pub equations: usize,
    pub unknowns: usize,
}

impl<T> SolutionSpace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The irreducible `(k+1)`-dimensional `sl(2)`-module on `v₀..v_k`.
pub fn vk_module(k: usize) -> Representation {
    let d = k + 1;
    let mut h = Matrix::zeros(d, d);
    let mut x = Matrix::zeros(d, d);
    let mut y = Matrix::zeros(d, d);
    let kk = k as i64;
    for i in 0..d {
        let ii = i as i64;
        h[(i, i)] = rat(kk - 2 * ii);
        if i + 1 < d {
            y[(i + 1, i)] = rat(ii + 1);
        }
        if i > 0 {
            x[(i - 1, i)] = rat(kk - ii + 1);
        }
    }
    Representation {
        algebra: crate::catalog::sl2(),
        module_names: default_module_names(d),
        ops: vec![h, x, y],
    }
}

/// `V(k₁) ⊗ … ⊗ V(k_m)` as a representation of `sl(2)^{⊕m}`.
pub fn vk_tensor(ks: &[usize]) -> Representation {
    let mut it = ks.iter();
    let first = vk_module(*it.next().expect("at least one factor"));
    it.fold(first, |acc, &k| acc.tensor(&vk_module(k)))
}

/// A cyclic quadruple `(g, π, V, ρ)`; row `r` of `rho` is the covector
/// `ρ(e_r)` in the dual basis of `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    rep: Representation,
    rho: Matrix,
}

impl Quadruple {
    pub fn new(rep: Representation, rho: Matrix) -> Result<Self, RepError> {
        let (n, d) = (rep.algebra().dim(), rep.module_dim());
        if rho.rows() != n || rho.cols() != d {
            return Err(RepError::RhoShape { rows: n, cols: d });
        }
        let q = Self { rep, rho };
        if let Some((a, b)) = q.first_failure() {
            let names = q.rep.algebra().names();
            return Err(RepError::QuadrupleIdentity(names[a].clone(), names[b].clone()));
        }
        Ok(q)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    /// `ρ([e_a,e_b]) + π*(e_a)ρ(e_b) − π*(e_b)ρ(e_a)` as a covector.
    pub fn residual(&self, a: usize, b: usize) -> Vec<Rational> {
        let g = self.rep.algebra();
        let rho_ab = self.rho.vec_mul(g.structure(a, b));
        // π*(x)f = −f·π(x) for a row covector f
        let pa_rb = self.rep.op(a).vec_mul(self.rho.row(b));
        let pb_ra = self.rep.op(b).vec_mul(self.rho.row(a));
        rho_ab
            .iter()
            .zip(&pa_rb)
            .zip(&pb_ra)
            .map(|((r, p), q)| r - p + q)
            .collect()
    }

    fn first_failure(&self) -> Option<(usize, usize)> {
        let n = self.rep.algebra().dim();
        (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .find(|&(a, b)| !is_zero_vec(&self.residual(a, b)))
    }
}

pub(crate) fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::one();
    v
}
