#![allow(dead_code)]

use std::collections::HashSet;

use cyclie_core::catalog;
use cyclie_core::constructions::{derive_theta, double_extension_action};
use cyclie_core::forms::cyclic_space;
use cyclie_core::linalg::{frac, nullspace, rat};
use cyclie_core::rep::{vk_module, vk_tensor};
use cyclie_core::{BilinearForm, Cocycle2, LieAlgebra, Matrix, MetricAlgebra, Quadruple, Rational, Representation, Subspace};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// A small rational `p/q`, `|p| ≤ 4`, `1 ≤ q ≤ 3`.
    pub fn small(&mut self) -> Rational {
        frac(self.int(-4, 4), self.int(1, 3))
    }

    pub fn nonzero(&mut self) -> Rational {
        loop {
            let r = self.small();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small()).collect()
    }

    pub fn matrix(&mut self, r: usize, c: usize) -> Matrix {
        let data = (0..r * c).map(|_| self.small()).collect();
        Matrix::from_vec(r, c, data).unwrap()
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// A product of elementary integer row operations: invertible over ℤ,
    /// with small entries.
    pub fn unimodular(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::identity(n);
        if n < 2 {
            return m;
        }
        for _ in 0..2 * n {
            let (i, j) = (self.below(n), self.below(n));
            if i == j {
                continue;
            }
            let c = rat(self.int(-1, 1));
            for k in 0..n {
                let v = &m[(j, k)] * &c;
                m[(i, k)] += v;
            }
        }
        m
    }

    pub fn symmetric(&mut self, n: usize) -> BilinearForm {
        let upper: Vec<Rational> = (0..n * (n + 1) / 2).map(|_| self.small()).collect();
        BilinearForm::from_upper(n, &upper)
    }

    pub fn nondegenerate_symmetric(&mut self, n: usize) -> BilinearForm {
        loop {
            let b = self.symmetric(n);
            if b.is_nondegenerate() {
                return b;
            }
        }
    }

    pub fn antisymmetric(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in (i + 1)..n {
                let v = self.small();
                m[(j, i)] = -&v;
                m[(i, j)] = v;
            }
        }
        m
    }

    /// A random combination of `basis` (zero when the basis is empty).
    pub fn combine_forms(&mut self, n: usize, basis: &[BilinearForm]) -> BilinearForm {
        basis
            .iter()
            .fold(BilinearForm::zero(n), |acc, b| acc.add(&b.scale(&self.small())))
    }

    pub fn combine_matrices(&mut self, r: usize, c: usize, basis: &[Matrix]) -> Matrix {
        basis.iter().fold(Matrix::zeros(r, c), |acc, m| &acc + &m.scale(&self.small()))
    }

    pub fn cyclic_form(&mut self, g: &LieAlgebra) -> BilinearForm {
        let space = cyclic_space(g);
        self.combine_forms(g.dim(), &space.basis)
    }

    pub fn nondegenerate_from(&mut self, n: usize, basis: &[BilinearForm]) -> BilinearForm {
        for _ in 0..1000 {
            let b = self.combine_forms(n, basis);
            if b.is_nondegenerate() {
                return b;
            }
        }
        panic!("no nondegenerate form found in the span");
    }
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Every catalog algebra the lemma suite runs on, with its distinguished
/// forms.
pub fn catalog_algebras() -> Vec<(String, LieAlgebra, Vec<BilinearForm>)> {
    let mut out = Vec::new();
    for spec in [
        "sl2",
        "so3",
        "sl3",
        "so4",
        "gl2",
        "heisenberg3",
        "heisenberg5",
        "abelian3",
        "r2",
        "remark_lorentz",
        "sl2_semidirect_F2",
        "gl2_semidirect_F2",
        "so3_semidirect_F3",
        "sl3_semidirect_F3",
    ] {
        let e = catalog::lookup(spec).unwrap();
        out.push((spec.to_string(), e.algebra, e.forms.into_values().collect()));
    }
    out.push((
        "sl2+abelian2".into(),
        catalog::sl2().direct_sum(&LieAlgebra::abelian(2)),
        vec![],
    ));
    out.push((
        "sl2+heisenberg3".into(),
        catalog::sl2().direct_sum(&catalog::heisenberg(1)),
        vec![],
    ));
    out
}

/// Subalgebras and ideals worth testing: coordinate subspaces (all of them
/// for small algebras, those of dimension ≤ 3 otherwise) plus the
/// structural subspaces.
pub fn structural_subspaces(g: &LieAlgebra) -> (Vec<Subspace>, Vec<Subspace>) {
    let n = g.dim();
    let mut candidates: Vec<Subspace> = Vec::new();
    if n <= 8 {
        for mask in 0u32..(1 << n) {
            let axes: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            candidates.push(Subspace::coordinate(n, &axes));
        }
    } else {
        candidates.push(Subspace::zero(n));
        for a in 0..n {
            candidates.push(Subspace::coordinate(n, &[a]));
            for b in (a + 1)..n {
                candidates.push(Subspace::coordinate(n, &[a, b]));
                for c in (b + 1)..n {
                    candidates.push(Subspace::coordinate(n, &[a, b, c]));
                }
            }
        }
        candidates.push(Subspace::whole(n));
    }
    candidates.push(g.center());
    candidates.extend(g.derived_series());
    candidates.extend(g.lower_central_series());
    candidates.extend(g.upper_central_series());
    for i in 0..n {
        candidates.push(g.centralizer(&Subspace::coordinate(n, &[i])));
    }
    let mut seen = HashSet::new();
    candidates.retain(|s| seen.insert(s.clone()));
    let subalgebras: Vec<Subspace> = candidates.iter().filter(|s| g.is_subalgebra(s)).cloned().collect();
    let ideals: Vec<Subspace> = candidates.iter().filter(|s| g.is_ideal(s)).cloned().collect();
    (subalgebras, ideals)
}

/// `g₁ = abelian(k) | r2 | sl2`, `g₂ = abelian(m)` with `B₂ = P⁻ᵀΔP⁻¹` and a
/// commuting family `π(x) = P Dₓ P⁻¹` of `B₂`-symmetric operators that
/// vanishes on `[g₁, g₁]`; or `sl2` acting naturally on `𝔽²` with `B₂ = 0`.
pub fn semidirect_input(gen: &mut Gen) -> (MetricAlgebra, MetricAlgebra, Representation) {
    let kind = gen.below(4);
    if kind == 3 {
        let g1 = catalog::sl2();
        let b1 = gen.cyclic_form(&g1);
        let g2 = LieAlgebra::abelian(2);
        return (
            MetricAlgebra::new(g1, b1).unwrap(),
            MetricAlgebra::new(g2, BilinearForm::zero(2)).unwrap(),
            catalog::sl_natural(2),
        );
    }
    let m = 1 + gen.below(3);
    let p = gen.invertible(m);
    let pinv = p.inverse().unwrap();
    let delta: Vec<Rational> = (0..m).map(|_| gen.small()).collect();
    let b2 = BilinearForm::new(&(&pinv.transpose() * &Matrix::diagonal(&delta)) * &pinv).unwrap();
    let op = |gen: &mut Gen| {
        let d: Vec<Rational> = (0..m).map(|_| gen.small()).collect();
        &(&p * &Matrix::diagonal(&d)) * &pinv
    };
    let (g1, ops) = match kind {
        0 => {
            let k = 1 + gen.below(3);
            let ops = (0..k).map(|_| op(gen)).collect();
            (LieAlgebra::abelian(k).with_names(names("a", k)), ops)
        }
        1 => (catalog::r2(), vec![op(gen), Matrix::zeros(m, m)]),
        _ => (catalog::sl2(), vec![Matrix::zeros(m, m); 3]),
    };
    let b1 = gen.cyclic_form(&g1);
    let pi = Representation::new(g1.clone(), m, ops).unwrap();
    (
        MetricAlgebra::new(g1, b1).unwrap(),
        MetricAlgebra::new(LieAlgebra::abelian(m).with_names(names("b", m)), b2).unwrap(),
        pi,
    )
}

/// Cached quadruple-space bases for a fixed list of (algebra, representation).
pub struct QuadruplePool {
    entries: Vec<(Representation, Vec<Matrix>, Vec<BilinearForm>)>,
}

impl QuadruplePool {
    pub fn new() -> Self {
        let mut reps = vec![
            Representation::adjoint(&catalog::sl2()),
            Representation::adjoint(&catalog::sl2()).dual(),
            vk_module(0),
            vk_module(1),
            vk_module(2),
            vk_module(3),
            Representation::adjoint(&catalog::so3()),
            catalog::so_natural(3),
            Representation::adjoint(&catalog::r2()),
            Representation::trivial(catalog::r2(), 2),
            Representation::adjoint(&catalog::heisenberg(1)),
            Representation::trivial(LieAlgebra::abelian(2), 2),
            catalog::gl_natural(2),
            vk_tensor(&[1, 1]),
        ];
        reps.push(Representation::adjoint(&catalog::gl2_semidirect_f2()));
        let entries = reps
            .into_iter()
            .map(|r| {
                let q = r.quadruple_space().basis;
                let c = cyclic_space(r.algebra()).basis;
                (r, q, c)
            })
            .collect();
        Self { entries }
    }

    pub fn sample(&self, gen: &mut Gen) -> (Quadruple, BilinearForm) {
        let (rep, rho_basis, forms) = &self.entries[gen.below(self.entries.len())];
        let (n, d) = (rep.algebra().dim(), rep.module_dim());
        let rho = gen.combine_matrices(n, d, rho_basis);
        let b = gen.combine_forms(n, forms);
        (Quadruple::new(rep.clone(), rho).unwrap(), b)
    }
}

pub struct DoubleExtensionInput {
    pub h: MetricAlgebra,
    pub s: MetricAlgebra,
    pub pi: Representation,
    pub theta: Cocycle2,
    pub b_tilde: BilinearForm,
}

/// Three families with `θ` derived from the compatibility identity:
/// `s ∈ {sl2, so3}` acting on `h = abelian(3)` by the adjoint action with
/// `B_h = λ B_s`; `sl2` acting trivially on an abelian `h`; and `dim s = 1`
/// acting by `D = B_h⁻¹ A` with `A` antisymmetric.
pub fn double_extension_input(gen: &mut Gen, pools: &[(LieAlgebra, Vec<BilinearForm>)]) -> DoubleExtensionInput {
    let kind = gen.below(3);
    let (s_alg, b_s, h, h_ops) = match kind {
        0 => {
            let (s_alg, space) = &pools[gen.below(pools.len())];
            let b_s = gen.nondegenerate_from(3, space);
            let lambda = gen.nonzero();
            let h = MetricAlgebra::new(LieAlgebra::abelian(3).with_names(names("h", 3)), b_s.scale(&lambda)).unwrap();
            let ops = (0..3).map(|i| s_alg.ad(i)).collect();
            (s_alg.clone(), b_s, h, ops)
        }
        1 => {
            let (s_alg, space) = &pools[0];
            let b_s = gen.nondegenerate_from(3, space);
            let q = 1 + gen.below(3);
            let b_h = gen.nondegenerate_symmetric(q);
            let h = MetricAlgebra::new(LieAlgebra::abelian(q).with_names(names("h", q)), b_h).unwrap();
            (s_alg.clone(), b_s, h, vec![Matrix::zeros(q, q); 3])
        }
        _ => {
            let q = 1 + gen.below(4);
            let b_h = gen.nondegenerate_symmetric(q);
            let d = &b_h.matrix().inverse().unwrap() * &gen.antisymmetric(q);
            let h = MetricAlgebra::new(LieAlgebra::abelian(q).with_names(names("h", q)), b_h).unwrap();
            let s_alg = LieAlgebra::abelian(1).with_names(vec!["s".into()]);
            (s_alg, BilinearForm::new(Matrix::diagonal(&[gen.nonzero()])).unwrap(), h, vec![d])
        }
    };
    let s = MetricAlgebra::new(s_alg.clone(), b_s).unwrap();
    let theta = derive_theta(&h, &s, &h_ops).unwrap();
    let pi = double_extension_action(&s_alg, h.algebra().names(), &h_ops).unwrap();
    let b_tilde = gen.cyclic_form(&s_alg);
    DoubleExtensionInput {
        h,
        s,
        pi,
        theta,
        b_tilde,
    }
}

/// Antisymmetric `Θ` (as upper-triangle unknowns `i < j`) for which
/// `½ B_h⁻¹ Θ` is a derivation of `h` and `Θ` is a 2-cocycle of `h`.
pub fn admissible_thetas(h: &MetricAlgebra) -> Vec<Matrix> {
    let g = h.algebra();
    let q = g.dim();
    let inv = h.form().matrix().inverse().unwrap();
    let pairs: Vec<(usize, usize)> = (0..q).flat_map(|i| ((i + 1)..q).map(move |j| (i, j))).collect();
    let unit_theta = |&(i, j): &(usize, usize)| {
        let mut m = Matrix::zeros(q, q);
        m[(i, j)] = rat(1);
        m[(j, i)] = rat(-1);
        m
    };
    // column u = the linear defects of unknown u
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for pair in &pairs {
        let theta = unit_theta(pair);
        let d = (&inv * &theta).scale(&frac(1, 2));
        let mut defects = Vec::new();
        for a in 0..q {
            for b in (a + 1)..q {
                let ea = g.basis_vector(a);
                let eb = g.basis_vector(b);
                let lhs = d.mul_vec(&g.bracket(&ea, &eb).unwrap());
                let r1 = g.bracket(&d.column(a), &eb).unwrap();
                let r2 = g.bracket(&ea, &d.column(b)).unwrap();
                defects.extend(lhs.iter().zip(&r1).zip(&r2).map(|((l, x), y)| l - x - y));
                for c in (b + 1)..q {
                    let ec = g.basis_vector(c);
                    let cyc = theta.bilinear(&g.bracket(&ea, &eb).unwrap(), &ec)
                        + theta.bilinear(&g.bracket(&eb, &ec).unwrap(), &ea)
                        + theta.bilinear(&g.bracket(&ec, &ea).unwrap(), &eb);
                    defects.push(cyc);
                }
            }
        }
        columns.push(defects);
    }
    if pairs.is_empty() {
        return vec![];
    }
    let system = Matrix::from_rows(columns[0].len(), columns).unwrap().transpose();
    nullspace(&system)
        .row_vecs()
        .iter()
        .map(|coeffs| {
            pairs
                .iter()
                .zip(coeffs)
                .fold(Matrix::zeros(q, q), |acc, (p, c)| &acc + &unit_theta(p).scale(c))
        })
        .collect()
}

pub struct CentralPool {
    heisenberg: Vec<(MetricAlgebra, Vec<Matrix>)>,
}

impl CentralPool {
    /// Nondegenerate cyclic forms on heisenberg(3), each with its admissible
    /// cocycles. Larger Heisenberg algebras carry no nondegenerate cyclic
    /// form: `B(z, ·)` vanishes identically once there are two pairs.
    pub fn new(gen: &mut Gen) -> Self {
        let g = catalog::heisenberg(1);
        let space = cyclic_space(&g).basis;
        let heisenberg = (0..8)
            .map(|_| {
                let b = gen.nondegenerate_from(g.dim(), &space);
                let h = MetricAlgebra::new(g.clone(), b).unwrap();
                let thetas = admissible_thetas(&h);
                (h, thetas)
            })
            .collect();
        Self { heisenberg }
    }

    pub fn abelian(&self, gen: &mut Gen) -> (MetricAlgebra, Cocycle2) {
        let q = 1 + gen.below(4);
        let b = gen.nondegenerate_symmetric(q);
        let h = MetricAlgebra::new(LieAlgebra::abelian(q), b).unwrap();
        let theta = Cocycle2::from_matrix(&gen.antisymmetric(q)).unwrap();
        (h, theta)
    }

    pub fn heisenberg(&self, gen: &mut Gen) -> (MetricAlgebra, Cocycle2) {
        let (h, thetas) = &self.heisenberg[gen.below(self.heisenberg.len())];
        let q = h.dim();
        let theta = Cocycle2::from_matrix(&gen.combine_matrices(q, q, thetas)).unwrap();
        (h.clone(), theta)
    }

    pub fn heisenberg_theta_dims(&self) -> Vec<usize> {
        self.heisenberg.iter().map(|(_, t)| t.len()).collect()
    }
}

pub fn double_extension_pools() -> Vec<(LieAlgebra, Vec<BilinearForm>)> {
    [catalog::sl2(), catalog::so3()]
        .into_iter()
        .map(|g| {
            let b = cyclic_space(&g).basis;
            (g, b)
        })
        .collect()
}

// ---- independent oracles ----

pub const PRIME: i64 = 1_000_000_007;

fn mod_p(r: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    let p = num_bigint::BigInt::from(PRIME);
    let n = (r.numer() % &p + &p) % &p;
    let d = (r.denom() % &p + &p) % &p;
    let (n, d) = (n.to_i64().unwrap(), d.to_i64().unwrap());
    assert!(d != 0, "denominator divisible by the oracle prime");
    n * pow_mod(d, PRIME - 2) % PRIME
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut acc = 1;
    b %= PRIME;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

/// Rank over 𝔽_p of a rational system.
pub fn rank_mod_p(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(mod_p).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % PRIME;
                for k in c..cols {
                    m[r][k] = ((m[r][k] - f * m[rank][k]) % PRIME + PRIME) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Unknown index of the symmetric pair `{i, j}` in an n×n form, enumerated
/// column by column (deliberately not the library's order).
fn sym_unknown(i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    b * (b + 1) / 2 + a
}

/// `dim` of the cyclic forms, from the cyclic identity over all ordered
/// triples, eliminated mod p.
pub fn cyclic_dim_oracle(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let unknowns = n * (n + 1) / 2;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); unknowns];
                for (x, y, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for (k, coef) in g.structure(x, y).iter().enumerate() {
                        row[sym_unknown(k, w)] += coef;
                    }
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank_mod_p(&rows, unknowns)
}

/// `dim` of the ad-invariant forms: `B([a,b],c) + B(b,[a,c]) = 0`.
pub fn invariant_dim_oracle(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let unknowns = n * (n + 1) / 2;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); unknowns];
                for (k, coef) in g.structure(a, b).iter().enumerate() {
                    row[sym_unknown(k, c)] += coef;
                }
                for (k, coef) in g.structure(a, c).iter().enumerate() {
                    row[sym_unknown(b, k)] += coef;
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank_mod_p(&rows, unknowns)
}

/// `dim` of the ρ solving `ρ([x,y]) + π*(x)ρ(y) − π*(y)ρ(x) = 0`, written
/// pointwise on module vectors: `ρ([x,y])(v) − ρ(y)(π(x)v) + ρ(x)(π(y)v)`.
pub fn quadruple_dim_oracle(rep: &Representation) -> usize {
    let (n, d) = (rep.algebra().dim(), rep.module_dim());
    let g = rep.algebra();
    let unknowns = n * d;
    let var = |r: usize, c: usize| r * d + c;
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for v in 0..d {
                let mut row = vec![Rational::zero(); unknowns];
                for (k, coef) in g.structure(x, y).iter().enumerate() {
                    row[var(k, v)] += coef;
                }
                let (px, py) = (rep.op(x), rep.op(y));
                for m in 0..d {
                    row[var(y, m)] -= &px[(m, v)];
                    row[var(x, m)] += &py[(m, v)];
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank_mod_p(&rows, unknowns)
}

/// `tr(ad a ∘ ad b)` summed directly from structure constants.
pub fn killing_oracle(g: &LieAlgebra, a: usize, b: usize) -> Rational {
    let n = g.dim();
    let mut t = Rational::zero();
    for i in 0..n {
        // (ad a ∘ ad b)(e_i), component i
        for k in 0..n {
            let c1 = &g.structure(b, i)[k];
            if !c1.is_zero() {
                t += c1 * &g.structure(a, k)[i];
            }
        }
    }
    t
}

/// Characteristic polynomial `det(λI − M)` by Faddeev–LeVerrier,
/// coefficients from `λⁿ` down.
pub fn char_poly(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![rat(1)];
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut prev = mk.clone();
        for i in 0..n {
            prev[(i, i)] += coeffs[k - 1].clone();
        }
        mk = m * &prev;
        coeffs.push(-mk.trace() / rat(k as i64));
    }
    coeffs
}

/// Signature of a symmetric matrix from Descartes' rule of signs, which is
/// exact for real-rooted polynomials.
pub fn signature_oracle(m: &Matrix) -> (usize, usize, usize) {
    let p = char_poly(m);
    let n = m.rows();
    let null = p.iter().rev().take_while(|c| c.is_zero()).count();
    let changes = |signs: Vec<i32>| {
        let s: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let sign = |r: &Rational| {
        use num_traits::Signed;
        if r.is_positive() {
            1
        } else if r.is_negative() {
            -1
        } else {
            0
        }
    };
    let pos = changes(p.iter().map(sign).collect());
    // p(−λ): flip the sign of odd-degree coefficients
    let neg = changes(
        p.iter()
            .enumerate()
            .map(|(i, c)| if (n - i) % 2 == 1 { -sign(c) } else { sign(c) })
            .collect(),
    );
    (pos, neg, null)
}
