//! Building cyclic metric Lie algebras from smaller ones: orthogonal
//! semidirect products, quadruple extensions, double extensions, and the
//! inverse reduction along an isotropic central vector.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{disjoint_names, LieAlgebra, LieError, Violation};
use crate::forms::{require_cyclic, BilinearForm, FormError};
use crate::linalg::{frac, is_zero_vec, solve, Matrix, Rational};
use crate::rep::{unit, Quadruple, RepError, Representation};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("representation is of a different algebra than {0}")]
    AlgebraMismatch(String),
    #[error("{what} has dimension {got}, expected {expected}")]
    Dimension { what: String, expected: usize, got: usize },
    #[error("operators fail to be a representation at ({0}, {1})")]
    NotRepresentation(usize, usize),
    #[error("action of {element} is not a derivation: fails on ({i}, {j})")]
    NotDerivation { element: String, i: usize, j: usize },
    #[error("action of {0} is not symmetric with respect to the form")]
    NotSymmetric(String),
    #[error("{0} must be nondegenerate")]
    Degenerate(String),
    #[error("cocycle is not antisymmetric at ({0}, {1})")]
    CocycleAntisymmetry(usize, usize),
    #[error("cocycle does not define a Lie algebra: Jacobi fails at ({0}, {1}, {2})")]
    NotCocycle(usize, usize, usize),
    #[error("compatibility identity fails at x = {x}, h1 = {h1}, h2 = {h2}")]
    Compatibility { x: usize, h1: usize, h2: usize },
    #[error("action of {element} must {reason}")]
    ActionShape { element: String, reason: String },
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is not central: bracket with basis element {0} is nonzero")]
    NotCentral(usize),
    #[error("vector is not isotropic")]
    NotIsotropic,
    #[error(
        "not a one-dimensional central double extension along this vector: \
         [x, h_{0}] has a nonzero component along the central direction"
    )]
    NotCentralExtension(usize),
    #[error("construction produced an invalid algebra: {0:?}")]
    InvalidOutput(Violation),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// A Lie algebra with a cyclic symmetric form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricAlgebra {
    algebra: LieAlgebra,
    form: BilinearForm,
}

impl MetricAlgebra {
    /// Fails unless the form has the right dimension and is cyclic.
    pub fn new(algebra: LieAlgebra, form: BilinearForm) -> std::result::Result<Self, FormError> {
        require_cyclic(&algebra, &form)?;
        Ok(Self { algebra, form })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.form.is_nondegenerate()
    }

    pub fn radical(&self) -> Subspace {
        self.form.radical()
    }

    pub fn into_parts(self) -> (LieAlgebra, BilinearForm) {
        (self.algebra, self.form)
    }
}

/// Checks the Lie axioms on a freshly assembled algebra and wraps it.
fn finish(algebra: LieAlgebra, form: BilinearForm) -> Result<MetricAlgebra> {
    if let Some(v) = algebra.validate().violations.into_iter().next() {
        return Err(ConstructionError::InvalidOutput(v));
    }
    Ok(MetricAlgebra::new(algebra, form)?)
}

/// An antisymmetric bilinear map `h × h → s`, `theta[i][j]` in `s`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    source_dim: usize,
    target_dim: usize,
    theta: Vec<Vec<Vec<Rational>>>,
}

impl Cocycle2 {
    pub fn new(source_dim: usize, target_dim: usize, theta: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = source_dim;
        if theta.len() != n || theta.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != target_dim)) {
            return Err(ConstructionError::Dimension {
                what: "cocycle".into(),
                expected: n,
                got: theta.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                if theta[i][j].iter().zip(&theta[j][i]).any(|(a, b)| !(a + b).is_zero()) {
                    return Err(ConstructionError::CocycleAntisymmetry(i, j));
                }
            }
        }
        Ok(Self {
            source_dim,
            target_dim,
            theta,
        })
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        Self {
            source_dim,
            target_dim,
            theta: vec![vec![vec![Rational::zero(); target_dim]; source_dim]; source_dim],
        }
    }

    /// From the values `θ(eᵢ, eⱼ)` for `i < j`; the rest follows by
    /// antisymmetry and omitted pairs are zero.
    pub fn from_pairs(source_dim: usize, target_dim: usize, pairs: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let mut c = Self::zero(source_dim, target_dim);
        for (i, j, v) in pairs {
            if *i >= source_dim || *j >= source_dim || v.len() != target_dim {
                return Err(ConstructionError::Dimension {
                    what: "cocycle entry".into(),
                    expected: target_dim,
                    got: v.len(),
                });
            }
            if i == j {
                if is_zero_vec(v) {
                    continue;
                }
                return Err(ConstructionError::CocycleAntisymmetry(*i, *j));
            }
            c.theta[*j][*i] = v.iter().map(|x| -x).collect();
            c.theta[*i][*j] = v.clone();
        }
        Ok(c)
    }

    /// A scalar cocycle from an antisymmetric matrix `Θ[i][j] = θ(eᵢ, eⱼ)`.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let n = m.rows();
        let theta = (0..n)
            .map(|i| (0..n).map(|j| vec![m[(i, j)].clone()]).collect())
            .collect();
        Self::new(n, 1, theta)
    }

    /// For a scalar cocycle, the matrix `Θ[i][j] = θ(eᵢ, eⱼ)`.
    pub fn scalar_matrix(&self) -> Matrix {
        assert_eq!(self.target_dim, 1, "scalar cocycle");
        let n = self.source_dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.theta[i][j][0].clone();
            }
        }
        m
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        &self.theta[i][j]
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.target_dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (o, t) in out.iter_mut().zip(&self.theta[i][j]) {
                    *o += &s * t;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().flatten().all(|v| is_zero_vec(v))
    }
}

/// The central extension `h +_θ s`: `h` first, then `s` as a central ideal.
pub fn central_extension(h: &LieAlgebra, s_names: &[String], theta: &Cocycle2) -> Result<LieAlgebra> {
    let (q, p) = (h.dim(), s_names.len());
    if theta.source_dim() != q || theta.target_dim() != p {
        return Err(ConstructionError::Dimension {
            what: "cocycle".into(),
            expected: q,
            got: theta.source_dim(),
        });
    }
    let n = q + p;
    let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
    for a in 0..q {
        for b in 0..q {
            let row = &mut structure[a][b];
            row[..q].clone_from_slice(h.structure(a, b));
            row[q..].clone_from_slice(theta.get(a, b));
        }
    }
    let names = disjoint_names(&[h.names().to_vec(), s_names.to_vec()]);
    let k = LieAlgebra::new(names, structure)?;
    if let Some((i, j, l)) = k.validate().jacobi_triples().first() {
        return Err(ConstructionError::NotCocycle(*i, *j, *l));
    }
    Ok(k)
}

/// `g₁ +_π g₂` with `g₁` first: `[x, y] = π(x)y` for `x ∈ g₁`, `y ∈ g₂`.
/// No axioms are checked.
pub fn semidirect_algebra(g1: &LieAlgebra, g2: &LieAlgebra, ops: &[Matrix]) -> LieAlgebra {
    let (n1, n2) = (g1.dim(), g2.dim());
    let n = n1 + n2;
    let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
    for a in 0..n1 {
        for b in 0..n1 {
            structure[a][b][..n1].clone_from_slice(g1.structure(a, b));
        }
        for b in 0..n2 {
            for k in 0..n2 {
                let v = ops[a][(k, b)].clone();
                structure[n1 + b][a][n1 + k] = -&v;
                structure[a][n1 + b][n1 + k] = v;
            }
        }
    }
    for a in 0..n2 {
        for b in 0..n2 {
            structure[n1 + a][n1 + b][n1..].clone_from_slice(g2.structure(a, b));
        }
    }
    let names = disjoint_names(&[g1.names().to_vec(), g2.names().to_vec()]);
    LieAlgebra::new(names, structure).expect("shape is consistent")
}

fn check_rep_of(g: &LieAlgebra, pi: &Representation, module_dim: usize) -> Result<()> {
    if !pi.algebra().same_structure(g) {
        return Err(ConstructionError::AlgebraMismatch(format!("{:?}", g.names())));
    }
    if pi.module_dim() != module_dim {
        return Err(ConstructionError::Dimension {
            what: "representation module".into(),
            expected: module_dim,
            got: pi.module_dim(),
        });
    }
    if let Some(Violation::Homomorphism { i, j }) = pi.validate().violations.first() {
        return Err(ConstructionError::NotRepresentation(*i, *j));
    }
    Ok(())
}

/// First pair `(i, j)` on which `d` fails to be a derivation of `g`.
pub fn derivation_failure(g: &LieAlgebra, d: &Matrix) -> Option<(usize, usize)> {
    let n = g.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = d.mul_vec(g.structure(i, j));
            let a = g.bracket_unchecked(&images[i], &g.basis_vector(j));
            let b = g.bracket_unchecked(&g.basis_vector(i), &images[j]);
            let rhs: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

fn check_derivations(g: &LieAlgebra, pi: &Representation, target: &LieAlgebra) -> Result<()> {
    for (x, op) in pi.ops().iter().enumerate() {
        if let Some((i, j)) = derivation_failure(target, op) {
            return Err(ConstructionError::NotDerivation {
                element: g.names()[x].clone(),
                i,
                j,
            });
        }
    }
    Ok(())
}

/// The orthogonal semidirect product `(g₁, B₁) +_π (g₂, B₂)`.
pub fn semidirect(g1: &MetricAlgebra, g2: &MetricAlgebra, pi: &Representation) -> Result<MetricAlgebra> {
    check_rep_of(g1.algebra(), pi, g2.dim())?;
    check_derivations(g1.algebra(), pi, g2.algebra())?;
    if let Some(x) = pi.first_non_symmetric(g2.form())? {
        return Err(ConstructionError::NotSymmetric(g1.algebra().names()[x].clone()));
    }
    let algebra = semidirect_algebra(g1.algebra(), g2.algebra(), pi.ops());
    let form = Matrix::block_diagonal(g1.form().matrix(), g2.form().matrix());
    finish(algebra, BilinearForm::new(form)?)
}

/// `L = g +_π V` with `V` abelian and
/// `B_L((x,u),(y,v)) = B_g(x,y) + ρ(x)(v) + ρ(y)(u)`.
pub fn quadruple_extension(q: &Quadruple, b_g: &BilinearForm) -> Result<MetricAlgebra> {
    let g = q.rep().algebra();
    require_cyclic(g, b_g)?;
    let v = LieAlgebra::abelian(q.rep().module_dim()).with_names(q.rep().module_names().to_vec());
    let algebra = semidirect_algebra(g, &v, q.rep().ops());
    let (n, d) = (g.dim(), v.dim());
    let mut m = Matrix::zeros(n + d, n + d);
    m.set_block(0, 0, b_g.matrix());
    m.set_block(0, n, q.rho());
    m.set_block(n, 0, &q.rho().transpose());
    finish(algebra, BilinearForm::new(m)?)
}

/// `(g, ad, g, ρ)` with `ρ(x)(y) = B(x, y)`.
pub fn adjoint_quadruple(g: &LieAlgebra, b: &BilinearForm) -> Result<Quadruple> {
    require_cyclic(g, b)?;
    Ok(Quadruple::new(Representation::adjoint(g), b.matrix().clone())?)
}

/// Extends an action of `s` on `h` (one operator per basis element of `s`)
/// to `h ⊕ s` by letting `s` act on its copy by the adjoint action.
pub fn double_extension_action(s: &LieAlgebra, h_names: &[String], h_ops: &[Matrix]) -> Result<Representation> {
    if h_ops.len() != s.dim() {
        return Err(RepError::OperatorCount {
            expected: s.dim(),
            got: h_ops.len(),
        }
        .into());
    }
    let ops = h_ops
        .iter()
        .enumerate()
        .map(|(x, op)| Matrix::block_diagonal(op, &s.ad(x)))
        .collect();
    let names = disjoint_names(&[h_names.to_vec(), copy_names(s)]);
    Ok(Representation::with_module_names(s.clone(), names, ops)?)
}

fn copy_names(s: &LieAlgebra) -> Vec<String> {
    s.names().iter().map(|n| format!("{n}*")).collect()
}

/// Reads the compatibility identity
/// `B_s(x, θ(h₁,h₂)) = B_h([x,h₂],h₁) − B_h([x,h₁],h₂)` as a definition of
/// `θ`, given the action of `s` on `h`.
pub fn derive_theta(h: &MetricAlgebra, s: &MetricAlgebra, h_ops: &[Matrix]) -> Result<Cocycle2> {
    let inv = s
        .form()
        .matrix()
        .inverse()
        .map_err(|_| ConstructionError::Degenerate("B_s".into()))?;
    let (p, q) = (s.dim(), h.dim());
    if h_ops.len() != p {
        return Err(RepError::OperatorCount { expected: p, got: h_ops.len() }.into());
    }
    let bh = h.form().matrix();
    // B_h(π(x)h₂, h₁) − B_h(π(x)h₁, h₂) = (Bₕπ(x) − (Bₕπ(x))ᵀ)[h₁][h₂]
    let skew: Vec<Matrix> = h_ops
        .iter()
        .map(|op| {
            let a = bh * op;
            &a - &a.transpose()
        })
        .collect();
    let mut theta = vec![vec![vec![Rational::zero(); p]; q]; q];
    for h1 in 0..q {
        for h2 in 0..q {
            let f: Vec<Rational> = skew.iter().map(|m| m[(h1, h2)].clone()).collect();
            theta[h1][h2] = inv.mul_vec(&f);
        }
    }
    Cocycle2::new(q, p, theta)
}

/// The double extension `s +_π (h +_θ s)` with basis `(s, h, s-copy)` and form
/// `B = [[B̃, 0, B_s], [0, B_h, 0], [B_s, 0, 0]]`.
///
/// `pi` acts on `h ⊕ s` (the underlying space of `h +_θ s`).
pub fn double_extension(
    h: &MetricAlgebra,
    s: &MetricAlgebra,
    pi: &Representation,
    theta: &Cocycle2,
    b_tilde: &BilinearForm,
) -> Result<MetricAlgebra> {
    let (p, q) = (s.dim(), h.dim());
    if !h.is_nondegenerate() {
        return Err(ConstructionError::Degenerate("B_h".into()));
    }
    if !s.is_nondegenerate() {
        return Err(ConstructionError::Degenerate("B_s".into()));
    }
    require_cyclic(s.algebra(), b_tilde)?;
    check_rep_of(s.algebra(), pi, q + p)?;
    let sname = |x: usize| s.algebra().names()[x].clone();
    for (x, op) in pi.ops().iter().enumerate() {
        if (q..q + p).any(|r| (0..q).any(|c| !op[(r, c)].is_zero())) {
            return Err(ConstructionError::ActionShape {
                element: sname(x),
                reason: "map h into h".into(),
            });
        }
        let ad = s.algebra().ad(x);
        for c in 0..p {
            let col = op.column(q + c);
            if !is_zero_vec(&col[..q]) || col[q..] != ad.column(c)[..] {
                return Err(ConstructionError::ActionShape {
                    element: sname(x),
                    reason: "act on the copy of s by the bracket of s".into(),
                });
            }
        }
    }
    if theta.source_dim() != q || theta.target_dim() != p {
        return Err(ConstructionError::Dimension {
            what: "cocycle".into(),
            expected: q,
            got: theta.source_dim(),
        });
    }
    let bh = h.form().matrix();
    let bs = s.form().matrix();
    for (x, op) in pi.ops().iter().enumerate() {
        let hx = op.select(&(0..q).collect::<Vec<_>>(), &(0..q).collect::<Vec<_>>());
        let a = bh * &hx;
        for h1 in 0..q {
            for h2 in (h1 + 1)..q {
                let lhs = crate::linalg::dot(bs.row(x), theta.get(h1, h2));
                let rhs = &a[(h1, h2)] - &a[(h2, h1)];
                if lhs != rhs {
                    return Err(ConstructionError::Compatibility { x, h1, h2 });
                }
            }
        }
    }
    let k = central_extension(h.algebra(), &copy_names(s.algebra()), theta)?;
    check_derivations(s.algebra(), pi, &k)?;
    let algebra = semidirect_algebra(s.algebra(), &k, pi.ops());
    let n = 2 * p + q;
    let mut m = Matrix::zeros(n, n);
    m.set_block(0, 0, b_tilde.matrix());
    m.set_block(0, p + q, bs);
    m.set_block(p, p, bh);
    m.set_block(p + q, 0, bs);
    finish(algebra, BilinearForm::new(m)?)
}

/// `D = ½ B_h⁻¹ Θ`, the `B_h`-skew operator whose use in the compatibility
/// identity reproduces `θ`.
pub fn canonical_derivation(h: &MetricAlgebra, theta: &Cocycle2) -> Result<Matrix> {
    let inv = h
        .form()
        .matrix()
        .inverse()
        .map_err(|_| ConstructionError::Degenerate("B_h".into()))?;
    Ok((&inv * &theta.scalar_matrix()).scale(&frac(1, 2)))
}

/// One-dimensional central double extension with the canonical action
/// `D = ½ B_h⁻¹ Θ`. Basis `(x, h, z)`, form `B(x, z) = 1` plus `B_h`.
pub fn central_double_extension_1d(h: &MetricAlgebra, theta: &Cocycle2) -> Result<MetricAlgebra> {
    let d = canonical_derivation(h, theta)?;
    central_double_extension_1d_with(h, theta, &d)
}

/// As [`central_double_extension_1d`] with an explicit action `D` of `x` on
/// `h`; the compatibility identity requires `B_h D − (B_h D)ᵀ = Θ`.
pub fn central_double_extension_1d_with(h: &MetricAlgebra, theta: &Cocycle2, d: &Matrix) -> Result<MetricAlgebra> {
    if theta.target_dim() != 1 {
        return Err(ConstructionError::Dimension {
            what: "cocycle target".into(),
            expected: 1,
            got: theta.target_dim(),
        });
    }
    let s = MetricAlgebra::new(
        LieAlgebra::abelian(1).with_names(vec!["x".into()]),
        BilinearForm::identity(1),
    )?;
    let pi = double_extension_action(s.algebra(), h.algebra().names(), std::slice::from_ref(d))?;
    let out = double_extension(h, &s, &pi, theta, &BilinearForm::zero(1))?;
    let h_names = h.algebra().names();
    let fresh = |base: &str| {
        let mut name = base.to_string();
        while h_names.contains(&name) {
            name.push('\'');
        }
        name
    };
    let mut names = vec![fresh("x")];
    names.extend(h_names.iter().cloned());
    names.push(fresh("z"));
    let (algebra, form) = out.into_parts();
    Ok(MetricAlgebra {
        algebra: algebra.with_names(names),
        form,
    })
}

/// The data recovered by [`reduce_central`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralReduction {
    /// `h = span(x, z)⊥` with the bracket modulo `x, z`, in its RREF basis.
    pub h: MetricAlgebra,
    /// `z`-component of the bracket on `h`.
    pub theta: Cocycle2,
    /// The chosen `x`: `B(x, z) = 1`, `B(x, x) = 0`.
    pub x: Vec<Rational>,
    /// `ad x` restricted to `h`.
    pub derivation: Matrix,
    /// Rows `x, h-basis…, z`: the basis in which `g` matches
    /// `central_double_extension_1d_with(h, θ, D)`.
    pub basis: Matrix,
}

/// Writes a nondegenerate cyclic metric algebra as a one-dimensional central
/// double extension along the isotropic central vector `z`.
///
/// `x` solves `B(x, z) = 1` and `B(x, c) = 0` for the remaining directions
/// `c` of the center, with free coordinates zero, and is then shifted by
/// `−½B(x,x) z`.
pub fn reduce_central(g: &MetricAlgebra, z: &[Rational]) -> Result<CentralReduction> {
    let n = g.dim();
    if z.len() != n {
        return Err(LieError::LengthMismatch { expected: n, got: z.len() }.into());
    }
    if is_zero_vec(z) {
        return Err(ConstructionError::ZeroVector);
    }
    if !g.is_nondegenerate() {
        return Err(ConstructionError::Degenerate("form".into()));
    }
    let alg = g.algebra();
    if let Some(j) = (0..n).find(|&j| !is_zero_vec(&alg.bracket_unchecked(z, &unit(n, j)))) {
        return Err(ConstructionError::NotCentral(j));
    }
    let b = g.form();
    if !b.eval(z, z).is_zero() {
        return Err(ConstructionError::NotIsotropic);
    }

    let center = alg.center();
    let dropped = (0..center.dim())
        .find(|&r| !z[center.pivots()[r]].is_zero())
        .expect("z is a nonzero central vector");
    let mut rows = vec![b.matrix().mul_vec(z)];
    let mut rhs = vec![Rational::one()];
    for (r, c) in center.basis_vectors().iter().enumerate() {
        if r != dropped {
            rows.push(b.matrix().mul_vec(c));
            rhs.push(Rational::zero());
        }
    }
    let system = Matrix::from_rows(n, rows).expect("rows have algebra length");
    let mut x = solve(&system, &rhs).expect("nondegenerate form makes the system solvable");
    let shift = b.eval(&x, &x) * frac(1, 2);
    for (xi, zi) in x.iter_mut().zip(z) {
        *xi -= &shift * zi;
    }

    let plane = Subspace::span_vectors(n, &[x.clone(), z.to_vec()]);
    let hs = b.orthogonal_complement(&plane);
    let hv = hs.basis_vectors();
    let q = hv.len();
    // w = w_h + B(w,z)·x + B(w,x)·z since B(x,z) = 1 and x, z are isotropic.
    let split = |w: &[Rational]| -> (Vec<Rational>, Rational, Rational) {
        let along_x = b.eval(w, z);
        let along_z = b.eval(w, &x);
        let rest: Vec<Rational> = w
            .iter()
            .zip(&x)
            .zip(z)
            .map(|((wi, xi), zi)| wi - &along_x * xi - &along_z * zi)
            .collect();
        (hs.coordinates(&rest).expect("remainder lies in h"), along_x, along_z)
    };

    let mut structure = vec![vec![vec![Rational::zero(); q]; q]; q];
    let mut theta = vec![vec![vec![Rational::zero(); 1]; q]; q];
    for a in 0..q {
        for c in 0..q {
            let (wh, ax, az) = split(&alg.bracket_unchecked(&hv[a], &hv[c]));
            debug_assert!(ax.is_zero(), "cyclicity forces B([h,h],z) = 0");
            structure[a][c] = wh;
            theta[a][c] = vec![az];
        }
    }
    let mut derivation = Matrix::zeros(q, q);
    for (c, u) in hv.iter().enumerate() {
        let (wh, _, az) = split(&alg.bracket_unchecked(&x, u));
        if !az.is_zero() {
            return Err(ConstructionError::NotCentralExtension(c));
        }
        for (r, v) in wh.into_iter().enumerate() {
            derivation[(r, c)] = v;
        }
    }

    let h_names = subspace_names(alg, &hs, (1..=q).map(|i| format!("h{i}")).collect());
    let h_alg = LieAlgebra::new(h_names, structure)?;
    let h = MetricAlgebra::new(h_alg, b.restrict(&hs))?;
    let theta = Cocycle2::new(q, 1, theta)?;
    let mut basis_rows = vec![x.clone()];
    basis_rows.extend(hv);
    basis_rows.push(z.to_vec());
    let basis = Matrix::from_rows(n, basis_rows).expect("rows have algebra length");
    Ok(CentralReduction {
        h,
        theta,
        x,
        derivation,
        basis,
    })
}

/// Labels for the RREF basis rows of `s`: the ambient name when a row is a
/// coordinate axis, otherwise the fallback.
fn subspace_names(g: &LieAlgebra, s: &Subspace, fallback: Vec<String>) -> Vec<String> {
    s.basis_vectors()
        .iter()
        .zip(fallback)
        .map(|(v, f)| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            match nz.as_slice() {
                [i] if v[*i].is_one() => g.names()[*i].clone(),
                _ => f,
            }
        })
        .collect()
}
