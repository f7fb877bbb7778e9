//! Named algebras, representations and forms.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{LieAlgebra, Violation};
use crate::constructions::{semidirect_algebra, MetricAlgebra};
use crate::forms::BilinearForm;
use crate::linalg::{rat, solve_in_row_space, Matrix};
use crate::rep::Representation;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error("catalog entry {name} fails a check: {reason}")]
    Annotation { name: String, reason: String },
}

/// A catalog algebra with its known structure and distinguished objects.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub levi: Option<Subspace>,
    pub radical: Option<Subspace>,
    pub nilradical: Option<Subspace>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub representations: BTreeMap<String, Representation>,
}

pub const NAMES: &[&str] = &[
    "sl(n)",
    "gl(n)",
    "so(n)",
    "su2",
    "heisenberg(2k+1)",
    "abelian(n)",
    "r2",
    "remark_lorentz",
    "sl2_semidirect_F2",
    "gl2_semidirect_F2",
    "so3_semidirect_F3",
    "sl3_semidirect_F3",
];

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = rat(1);
    m
}

/// The Lie algebra spanned by the given matrices under the commutator.
/// Panics if the span is not closed or the matrices are dependent.
fn matrix_algebra(names: Vec<String>, mats: &[Matrix]) -> LieAlgebra {
    let n = mats[0].rows();
    let flat: Vec<Vec<_>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    let stack = Matrix::from_rows(n * n, flat).expect("square matrices of one size");
    assert_eq!(stack.rank(), mats.len(), "matrix basis must be independent");
    let d = mats.len();
    let mut structure = vec![vec![vec![rat(0); d]; d]; d];
    for a in 0..d {
        for b in (a + 1)..d {
            let c = mats[a].commutator(&mats[b]);
            let coords = solve_in_row_space(&stack, c.entries()).expect("matrix span is closed under commutators");
            structure[b][a] = coords.iter().map(|x| -x).collect();
            structure[a][b] = coords;
        }
    }
    LieAlgebra::new(names, structure).expect("shape is consistent")
}

/// Cartan elements `E_ii − E_{i+1,i+1}` first, then `E_ij` (`i ≠ j`) in
/// lexicographic order.
fn sl_basis(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    let label = |i: usize, j: usize| {
        if n < 10 {
            format!("E{}{}", i + 1, j + 1)
        } else {
            format!("E{}_{}", i + 1, j + 1)
        }
    };
    for i in 0..n - 1 {
        names.push(if n == 2 { "H".to_string() } else { format!("H{}", i + 1) });
        mats.push(&elementary(n, i, i) - &elementary(n, i + 1, i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(match (n, i, j) {
                    (2, 0, 1) => "X".to_string(),
                    (2, 1, 0) => "Y".to_string(),
                    _ => label(i, j),
                });
                mats.push(elementary(n, i, j));
            }
        }
    }
    (names, mats)
}

fn gl_basis(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let (mut names, mut mats) = sl_basis(n);
    names.push("I".to_string());
    mats.push(Matrix::identity(n));
    (names, mats)
}

fn so_basis(n: usize) -> (Vec<String>, Vec<Matrix>) {
    if n == 3 {
        let i = &elementary(3, 2, 1) - &elementary(3, 1, 2);
        let j = &elementary(3, 0, 2) - &elementary(3, 2, 0);
        let k = &elementary(3, 1, 0) - &elementary(3, 0, 1);
        return (strings(&["i", "j", "k"]), vec![i, j, k]);
    }
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            names.push(if n < 10 {
                format!("A{}{}", i + 1, j + 1)
            } else {
                format!("A{}_{}", i + 1, j + 1)
            });
            mats.push(&elementary(n, i, j) - &elementary(n, j, i));
        }
    }
    (names, mats)
}

fn natural(algebra: &LieAlgebra, mats: Vec<Matrix>) -> Representation {
    let d = mats[0].rows();
    let names = (1..=d).map(|i| format!("e{i}")).collect();
    Representation::with_module_names(algebra.clone(), names, mats).expect("matrices match the basis")
}

pub fn sl(n: usize) -> LieAlgebra {
    let (names, mats) = sl_basis(n);
    matrix_algebra(names, &mats)
}

pub fn gl(n: usize) -> LieAlgebra {
    let (names, mats) = gl_basis(n);
    matrix_algebra(names, &mats)
}

pub fn so(n: usize) -> LieAlgebra {
    let (names, mats) = so_basis(n);
    matrix_algebra(names, &mats)
}

/// `sl(2)` on `H, X, Y`.
pub fn sl2() -> LieAlgebra {
    sl(2)
}

/// `so(3)` on `i, j, k` with `[i,j] = k` and cyclic permutations.
pub fn so3() -> LieAlgebra {
    so(3)
}

pub fn sl_natural(n: usize) -> Representation {
    let (names, mats) = sl_basis(n);
    natural(&matrix_algebra(names, &mats), mats)
}

pub fn gl_natural(n: usize) -> Representation {
    let (names, mats) = gl_basis(n);
    natural(&matrix_algebra(names, &mats), mats)
}

pub fn so_natural(n: usize) -> Representation {
    let (names, mats) = so_basis(n);
    natural(&matrix_algebra(names, &mats), mats)
}

/// The Heisenberg algebra of dimension `2k+1`:
/// `x1..xk, y1..yk, z` with `[xᵢ, yᵢ] = z`.
pub fn heisenberg(k: usize) -> LieAlgebra {
    let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    names.extend((1..=k).map(|i| format!("y{i}")));
    names.push("z".to_string());
    let brackets: Vec<_> = (0..k).map(|i| (i, k + i, vec![(2 * k, rat(1))])).collect();
    LieAlgebra::from_brackets(names, &brackets).expect("valid indices")
}

/// The two-dimensional nonabelian algebra, `[x, y] = y`.
pub fn r2() -> LieAlgebra {
    LieAlgebra::from_brackets(strings(&["x", "y"]), &[(0, 1, vec![(1, rat(1))])]).expect("valid indices")
}

/// `r2 ⊕ r2` on `x1, y1, x2, y2` with the Lorentz cyclic metric
/// `B(x1,x2) = 1`, `B(y1,y1) = B(y2,y2) = 1`.
pub fn remark_lorentz_metric() -> MetricAlgebra {
    let g = r2().direct_sum(&r2());
    let b = BilinearForm::new(Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1]]))
        .expect("symmetric");
    MetricAlgebra::new(g, b).expect("the Lorentz metric is cyclic")
}

/// `g ⋉ 𝔽ⁿ` for the natural action of a matrix algebra, `𝔽ⁿ` last.
fn natural_semidirect(rep: &Representation) -> LieAlgebra {
    let d = rep.module_dim();
    let v = LieAlgebra::abelian(d).with_names(rep.module_names().to_vec());
    semidirect_algebra(rep.algebra(), &v, rep.ops())
}

pub fn sl2_semidirect_f2() -> LieAlgebra {
    natural_semidirect(&sl_natural(2))
}

pub fn gl2_semidirect_f2() -> LieAlgebra {
    natural_semidirect(&gl_natural(2))
}

pub fn so3_semidirect_f3() -> LieAlgebra {
    natural_semidirect(&so_natural(3))
}

pub fn sl3_semidirect_f3() -> LieAlgebra {
    natural_semidirect(&sl_natural(3))
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..b).collect()
}

fn invalid(name: &str, reason: &str) -> CatalogError {
    CatalogError::InvalidParams {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn one_param(name: &str, params: &[usize]) -> Result<usize, CatalogError> {
    match params {
        [n] => Ok(*n),
        _ => Err(invalid(name, "expects exactly one parameter")),
    }
}

fn no_params(name: &str, params: &[usize]) -> Result<(), CatalogError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(invalid(name, "takes no parameters"))
    }
}

impl CatalogEntry {
    fn new(name: String, algebra: LieAlgebra) -> Self {
        Self {
            name,
            algebra,
            levi: None,
            radical: None,
            nilradical: None,
            forms: BTreeMap::new(),
            representations: BTreeMap::new(),
        }
    }

    fn decomposition(mut self, levi: &[usize], radical: &[usize], nilradical: &[usize]) -> Self {
        let n = self.algebra.dim();
        self.levi = Some(Subspace::coordinate(n, levi));
        self.radical = Some(Subspace::coordinate(n, radical));
        self.nilradical = Some(Subspace::coordinate(n, nilradical));
        self
    }

    fn semisimple(self) -> Self {
        let n = self.algebra.dim();
        self.decomposition(&range(0, n), &[], &[])
    }

    fn solvable(self, nilradical: &[usize]) -> Self {
        let n = self.algebra.dim();
        self.decomposition(&[], &range(0, n), nilradical)
    }

    fn with_rep(mut self, key: &str, rep: Representation) -> Self {
        self.representations.insert(key.to_string(), rep);
        self
    }

    fn with_form(mut self, key: &str, form: BilinearForm) -> Self {
        self.forms.insert(key.to_string(), form);
        self
    }

    fn with_adjoint(self) -> Self {
        let ad = Representation::adjoint(&self.algebra);
        self.with_rep("adjoint", ad)
    }

    /// Checks the Lie axioms and every annotation: the Levi factor is a
    /// subalgebra complementary to the radical, the radical is a solvable
    /// ideal and the nilradical a nilpotent ideal.
    pub fn verify(&self) -> Result<(), CatalogError> {
        let fail = |reason: String| CatalogError::Annotation {
            name: self.name.clone(),
            reason,
        };
        let g = &self.algebra;
        if let Some(v) = g.validate().violations.first() {
            return Err(fail(format!("Lie axioms fail: {v:?}")));
        }
        if let Some(levi) = &self.levi {
            if !g.is_subalgebra(levi) {
                return Err(fail("Levi factor is not a subalgebra".into()));
            }
            if let Some(radical) = &self.radical {
                if !levi.is_complement_of(radical) {
                    return Err(fail("Levi factor and radical are not complementary".into()));
                }
            }
        }
        if let Some(radical) = &self.radical {
            if !g.is_ideal(radical) || !g.restrict(radical).is_ok_and(|r| r.is_solvable()) {
                return Err(fail("radical is not a solvable ideal".into()));
            }
        }
        if let Some(nil) = &self.nilradical {
            if !g.is_ideal(nil) || !g.restrict(nil).is_ok_and(|r| r.is_nilpotent()) {
                return Err(fail("nilradical is not a nilpotent ideal".into()));
            }
            if let Some(radical) = &self.radical {
                if !radical.contains_subspace(nil) {
                    return Err(fail("nilradical is not inside the radical".into()));
                }
            }
        }
        for (key, form) in &self.forms {
            if form.dim() != g.dim() {
                return Err(fail(format!("form {key} has the wrong dimension")));
            }
        }
        for (key, rep) in &self.representations {
            if !rep.algebra().same_structure(g) {
                return Err(fail(format!("representation {key} is not of this algebra")));
            }
            if let Some(Violation::Homomorphism { i, j }) = rep.validate().violations.first() {
                return Err(fail(format!("representation {key} fails at ({i}, {j})")));
            }
        }
        Ok(())
    }
}

/// Builds a catalog entry by family name and parameters.
pub fn make(name: &str, params: &[usize]) -> Result<CatalogEntry, CatalogError> {
    let entry = match name {
        "sl" => {
            let n = one_param(name, params)?;
            if n < 2 {
                return Err(invalid(name, "n must be at least 2"));
            }
            let rep = sl_natural(n);
            CatalogEntry::new(format!("sl{n}"), rep.algebra().clone())
                .semisimple()
                .with_rep("natural", rep)
                .with_adjoint()
        }
        "gl" => {
            let n = one_param(name, params)?;
            if n < 2 {
                return Err(invalid(name, "n must be at least 2"));
            }
            let rep = gl_natural(n);
            let d = rep.algebra().dim();
            CatalogEntry::new(format!("gl{n}"), rep.algebra().clone())
                .decomposition(&range(0, d - 1), &[d - 1], &[d - 1])
                .with_rep("natural", rep)
                .with_adjoint()
        }
        "so" => {
            let n = one_param(name, params)?;
            if n < 2 {
                return Err(invalid(name, "n must be at least 2"));
            }
            let rep = so_natural(n);
            let e = CatalogEntry::new(format!("so{n}"), rep.algebra().clone());
            let e = if n == 2 { e.solvable(&[0]) } else { e.semisimple() };
            e.with_rep("natural", rep).with_adjoint()
        }
        "su2" => {
            no_params(name, params)?;
            let rep = so_natural(3);
            CatalogEntry::new("su2".into(), rep.algebra().clone())
                .semisimple()
                .with_rep("natural", rep)
                .with_adjoint()
        }
        "heisenberg" => {
            let d = one_param(name, params)?;
            if d < 3 || d % 2 == 0 {
                return Err(invalid(name, "dimension must be odd and at least 3"));
            }
            CatalogEntry::new(format!("heisenberg{d}"), heisenberg(d / 2))
                .solvable(&range(0, d))
                .with_adjoint()
        }
        "abelian" => {
            let n = one_param(name, params)?;
            CatalogEntry::new(format!("abelian{n}"), LieAlgebra::abelian(n))
                .solvable(&range(0, n))
                .with_adjoint()
        }
        "r2" => {
            no_params(name, params)?;
            CatalogEntry::new("r2".into(), r2()).solvable(&[1]).with_adjoint()
        }
        "remark_lorentz" => {
            no_params(name, params)?;
            let m = remark_lorentz_metric();
            CatalogEntry::new("remark_lorentz".into(), m.algebra().clone())
                .solvable(&[1, 3])
                .with_form("lorentz", m.form().clone())
                .with_adjoint()
        }
        "sl2_semidirect_F2" => {
            no_params(name, params)?;
            CatalogEntry::new(name.into(), sl2_semidirect_f2())
                .decomposition(&[0, 1, 2], &[3, 4], &[3, 4])
                .with_adjoint()
        }
        "gl2_semidirect_F2" => {
            no_params(name, params)?;
            CatalogEntry::new(name.into(), gl2_semidirect_f2())
                .decomposition(&[0, 1, 2], &[3, 4, 5], &[4, 5])
                .with_adjoint()
        }
        "so3_semidirect_F3" => {
            no_params(name, params)?;
            // P = diag(1,-1,0), Q = diag(1,2,-3): symmetric and traceless.
            let example = BilinearForm::new(Matrix::from_i64(&[
                &[1, 0, 0, 1, 0, 0],
                &[0, -1, 0, 0, 2, 0],
                &[0, 0, 0, 0, 0, -3],
                &[1, 0, 0, 0, 0, 0],
                &[0, 2, 0, 0, 0, 0],
                &[0, 0, -3, 0, 0, 0],
            ]))
            .expect("symmetric");
            CatalogEntry::new(name.into(), so3_semidirect_f3())
                .decomposition(&[0, 1, 2], &[3, 4, 5], &[3, 4, 5])
                .with_form("pq_example", example)
                .with_adjoint()
        }
        "sl3_semidirect_F3" => {
            no_params(name, params)?;
            CatalogEntry::new(name.into(), sl3_semidirect_f3())
                .decomposition(&range(0, 8), &[8, 9, 10], &[8, 9, 10])
                .with_adjoint()
        }
        _ => return Err(CatalogError::Unknown(name.to_string())),
    };
    Ok(entry)
}

/// Resolves names such as `sl2`, `sl(3)`, `heisenberg5`, `abelian(4)`,
/// `so3_semidirect_F3`.
pub fn lookup(spec: &str) -> Result<CatalogEntry, CatalogError> {
    let spec = spec.trim();
    match spec {
        "su2" | "r2" | "remark_lorentz" | "sl2_semidirect_F2" | "gl2_semidirect_F2" | "so3_semidirect_F3"
        | "sl3_semidirect_F3" => return make(spec, &[]),
        _ => {}
    }
    let (family, param) = if let Some(open) = spec.find('(') {
        let inner = spec[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| CatalogError::Unknown(spec.to_string()))?;
        (&spec[..open], inner)
    } else {
        let split = spec
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| CatalogError::Unknown(spec.to_string()))?;
        (&spec[..split], &spec[split..])
    };
    let n: usize = param
        .trim()
        .parse()
        .map_err(|_| invalid(family, &format!("bad parameter {param:?}")))?;
    match family {
        "sl" | "gl" | "so" | "heisenberg" | "abelian" => make(family, &[n]),
        _ => Err(CatalogError::Unknown(spec.to_string())),
    }
}
