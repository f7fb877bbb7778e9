//! Loading input documents and resolving references.
//!
//! Besides names defined in the loaded documents, references may use the
//! prefixes `catalog:`, `killing:`, `zero:`, `adjoint:`, `natural:`, `dual:`,
//! `vk:` and `span:`.

use std::fmt;
use std::path::Path;

use cyclie_core::catalog;
use cyclie_core::constructions::{adjoint_quadruple, Cocycle2};
use cyclie_core::forms::killing_form;
use cyclie_core::linalg::parse_rational;
use cyclie_core::rep::{vk_module, vk_tensor};
use cyclie_core::{BilinearForm, LieAlgebra, Matrix, MetricAlgebra, Quadruple, Rational, Representation, Subspace};

use crate::wire::{parse_matrix, parse_vector, Document};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or an unresolvable reference (exit 2).
    Input(String),
    /// Input understood, but a validation or precondition failed (exit 1).
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Failed(m) => write!(f, "failed: {m}"),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Input(msg.into()))
}

pub fn failed(e: impl fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn bad(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Default)]
pub struct Workspace {
    doc: Document,
}

fn merge<V>(into: &mut std::collections::BTreeMap<String, V>, from: std::collections::BTreeMap<String, V>, kind: &str, path: &str) -> Result<()> {
    for (k, v) in from {
        if into.contains_key(&k) {
            return input(format!("{path}: {kind} {k:?} is defined twice"));
        }
        into.insert(k, v);
    }
    Ok(())
}

impl Workspace {
    pub fn load(paths: &[impl AsRef<Path>]) -> Result<Self> {
        let mut ws = Workspace::default();
        for p in paths {
            let p = p.as_ref();
            let label = p.display().to_string();
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{label}: {e}")))?;
            ws.add_str(&text, &label)?;
        }
        Ok(ws)
    }

    pub fn add_str(&mut self, text: &str, label: &str) -> Result<()> {
        let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Input(format!("{label}: {e}")))?;
        merge(&mut self.doc.algebras, doc.algebras, "algebra", label)?;
        merge(&mut self.doc.forms, doc.forms, "form", label)?;
        merge(&mut self.doc.representations, doc.representations, "representation", label)?;
        merge(&mut self.doc.subspaces, doc.subspaces, "subspace", label)?;
        merge(&mut self.doc.quadruples, doc.quadruples, "quadruple", label)?;
        merge(&mut self.doc.cocycles, doc.cocycles, "cocycle", label)?;
        Ok(())
    }

    pub fn has_form(&self, name: &str) -> bool {
        self.doc.forms.contains_key(name)
    }

    pub fn has_representation(&self, name: &str) -> bool {
        self.doc.representations.contains_key(name)
    }

    pub fn algebra(&self, r: &str) -> Result<LieAlgebra> {
        if let Some(def) = self.doc.algebras.get(r) {
            let at = format!("algebras.{r}");
            if let Some(d) = def.dim {
                if d != def.basis.len() {
                    return input(format!("{at}.dim: {d} but the basis has {} names", def.basis.len()));
                }
            }
            for (i, n) in def.basis.iter().enumerate() {
                if def.basis[..i].contains(n) {
                    return input(format!("{at}.basis: {n:?} appears twice"));
                }
            }
            let index = |name: &str, at: &str| {
                def.basis
                    .iter()
                    .position(|b| b == name)
                    .ok_or_else(|| CliError::Input(format!("{at}: unknown basis name {name:?}")))
            };
            let mut brackets = Vec::new();
            for (b, (x, y, terms)) in def.brackets.iter().enumerate() {
                let at = format!("{at}.brackets[{b}]");
                let (i, j) = (index(x, &at)?, index(y, &at)?);
                let mut out = Vec::new();
                for (t, (z, c)) in terms.iter().enumerate() {
                    let at = format!("{at}[2][{t}]");
                    out.push((index(z, &at)?, c.parse(&at).map_err(CliError::Input)?));
                }
                brackets.push((i, j, out));
            }
            return LieAlgebra::from_brackets(def.basis.clone(), &brackets).map_err(|e| CliError::Input(format!("{at}: {e}")));
        }
        if let Some(spec) = r.strip_prefix("catalog:") {
            return Ok(catalog::lookup(spec).map_err(bad)?.algebra);
        }
        input(format!("unknown algebra {r:?} (define it under \"algebras\" or use catalog:NAME)"))
    }

    /// A form together with its algebra.
    pub fn form(&self, r: &str) -> Result<MetricPair> {
        if let Some(def) = self.doc.forms.get(r) {
            let at = format!("forms.{r}");
            let g = self.algebra(&def.on)?;
            let m = parse_matrix(&def.matrix, &format!("{at}.matrix")).map_err(CliError::Input)?;
            if m.rows() != g.dim() || m.cols() != g.dim() {
                return input(format!("{at}.matrix: expected {0}×{0}, found {1}×{2}", g.dim(), m.rows(), m.cols()));
            }
            let b = BilinearForm::new(m).map_err(|e| CliError::Input(format!("{at}.matrix: {e}")))?;
            return Ok(MetricPair { algebra: g, form: b });
        }
        if let Some(rest) = r.strip_prefix("catalog:") {
            let (spec, key) = match rest.split_once('#') {
                Some((s, k)) => (s, Some(k)),
                None => (rest, None),
            };
            let entry = catalog::lookup(spec).map_err(bad)?;
            let keys: Vec<&String> = entry.forms.keys().collect();
            let form = match key {
                Some(k) => entry.forms.get(k).cloned(),
                None if entry.forms.len() == 1 => entry.forms.values().next().cloned(),
                None => None,
            };
            return match form {
                Some(form) => Ok(MetricPair {
                    algebra: entry.algebra,
                    form,
                }),
                None => input(format!("catalog entry {spec} has forms {keys:?}; use catalog:{spec}#KEY")),
            };
        }
        if let Some(a) = r.strip_prefix("killing:") {
            let g = self.algebra(a)?;
            let form = killing_form(&g);
            return Ok(MetricPair { algebra: g, form });
        }
        if let Some(a) = r.strip_prefix("zero:") {
            let g = self.algebra(a)?;
            let form = BilinearForm::zero(g.dim());
            return Ok(MetricPair { algebra: g, form });
        }
        input(format!("unknown form {r:?} (define it under \"forms\" or use catalog:, killing: or zero:)"))
    }

    pub fn metric(&self, r: &str) -> Result<MetricAlgebra> {
        let p = self.form(r)?;
        MetricAlgebra::new(p.algebra, p.form).map_err(|e| CliError::Failed(format!("{r}: {e}")))
    }

    pub fn representation(&self, r: &str) -> Result<Representation> {
        if let Some(def) = self.doc.representations.get(r) {
            let at = format!("representations.{r}");
            let g = self.algebra(&def.on)?;
            let d = match (&def.module, def.dim, def.ops.values().next()) {
                (Some(names), _, _) => names.len(),
                (None, Some(d), _) => d,
                (None, None, Some(op)) => op.len(),
                (None, None, None) => return input(format!("{at}: give \"dim\", \"module\" or at least one operator")),
            };
            if let (Some(names), Some(dim)) = (&def.module, def.dim) {
                if names.len() != dim {
                    return input(format!("{at}.dim: {dim} but the module has {} names", names.len()));
                }
            }
            let mut ops = vec![Matrix::zeros(d, d); g.dim()];
            for (name, rows) in &def.ops {
                let i = g
                    .index_of(name)
                    .map_err(|_| CliError::Input(format!("{at}.ops: {name:?} is not a basis element of {}", def.on)))?;
                let m = parse_matrix(rows, &format!("{at}.ops.{name}")).map_err(CliError::Input)?;
                if m.rows() != d || m.cols() != d {
                    return input(format!("{at}.ops.{name}: expected {d}×{d}, found {}×{}", m.rows(), m.cols()));
                }
                ops[i] = m;
            }
            let rep = match &def.module {
                Some(names) => Representation::with_module_names(g, names.clone(), ops),
                None => Representation::new(g, d, ops),
            };
            return rep.map_err(|e| CliError::Input(format!("{at}: {e}")));
        }
        if let Some(ks) = r.strip_prefix("vk:") {
            let ks: std::result::Result<Vec<usize>, _> = ks.split(',').map(|k| k.trim().parse()).collect();
            return match ks {
                Ok(ks) if ks.len() == 1 => Ok(vk_module(ks[0])),
                Ok(ks) if !ks.is_empty() => Ok(vk_tensor(&ks)),
                _ => input(format!("{r:?}: expected vk:K or vk:K1,K2,…")),
            };
        }
        if let Some(a) = r.strip_prefix("adjoint:") {
            return Ok(Representation::adjoint(&self.algebra(a)?));
        }
        if let Some(inner) = r.strip_prefix("dual:") {
            return Ok(self.representation(inner)?.dual());
        }
        if let Some(rest) = r.strip_prefix("natural:").or_else(|| r.strip_prefix("catalog:")) {
            let (spec, key) = match (r.starts_with("natural:"), rest.split_once('#')) {
                (true, _) => (rest, "natural"),
                (false, Some((s, k))) => (s, k),
                (false, None) => return input(format!("{r:?}: use catalog:NAME#KEY or natural:NAME")),
            };
            let entry = catalog::lookup(spec).map_err(bad)?;
            return match entry.representations.get(key) {
                Some(rep) => Ok(rep.clone()),
                None => input(format!("catalog entry {spec} has no representation {key:?}")),
            };
        }
        input(format!("unknown representation {r:?}"))
    }

    /// A subspace of `g`: a defined name, or `span:a,b,…` over basis names.
    pub fn subspace(&self, r: &str, g: &LieAlgebra) -> Result<Subspace> {
        let n = g.dim();
        if let Some(list) = r.strip_prefix("span:") {
            let mut axes = Vec::new();
            for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                axes.push(g.index_of(name).map_err(|_| CliError::Input(format!("{r:?}: unknown basis name {name:?}")))?);
            }
            return Ok(Subspace::coordinate(n, &axes));
        }
        if let Some(def) = self.doc.subspaces.get(r) {
            let at = format!("subspaces.{r}");
            let on = self.algebra(&def.on)?;
            if on.dim() != n {
                return input(format!("{at}: lives in {} of dimension {}, expected {n}", def.on, on.dim()));
            }
            return match (&def.span, &def.basis) {
                (Some(names), None) => self.subspace(&format!("span:{}", names.join(",")), &on),
                (None, Some(rows)) => {
                    let m = parse_matrix(rows, &format!("{at}.basis")).map_err(CliError::Input)?;
                    if m.rows() > 0 && m.cols() != n {
                        return input(format!("{at}.basis: rows must have {n} entries"));
                    }
                    Ok(Subspace::span_vectors(n, &m.row_vecs()))
                }
                _ => input(format!("{at}: give exactly one of \"span\" or \"basis\"")),
            };
        }
        input(format!("unknown subspace {r:?} (define it under \"subspaces\" or use span:a,b,…)"))
    }

    pub fn quadruple(&self, r: &str) -> Result<Quadruple> {
        if let Some(def) = self.doc.quadruples.get(r) {
            let at = format!("quadruples.{r}");
            let rep = self.representation(&def.rep)?;
            let rho = parse_matrix(&def.rho, &format!("{at}.rho")).map_err(CliError::Input)?;
            return Quadruple::new(rep, rho).map_err(|e| CliError::Failed(format!("{at}: {e}")));
        }
        if let Some(f) = r.strip_prefix("adjoint:") {
            let p = self.form(f)?;
            return adjoint_quadruple(&p.algebra, &p.form).map_err(failed);
        }
        input(format!("unknown quadruple {r:?} (define it under \"quadruples\" or use adjoint:FORM)"))
    }

    /// A cocycle on `h`, with the names of its target coordinates.
    pub fn cocycle(&self, r: &str, h: &LieAlgebra) -> Result<(Cocycle2, Vec<String>)> {
        let Some(def) = self.doc.cocycles.get(r) else {
            return input(format!("unknown cocycle {r:?} (define it under \"cocycles\")"));
        };
        let at = format!("cocycles.{r}");
        let on = self.algebra(&def.on)?;
        if on.dim() != h.dim() {
            return input(format!("{at}: defined on {} of dimension {}, expected {}", def.on, on.dim(), h.dim()));
        }
        let target = def.target.clone().unwrap_or_else(|| vec!["z".to_string()]);
        let mut pairs = Vec::new();
        for (v, (x, y, values)) in def.values.iter().enumerate() {
            let at = format!("{at}.values[{v}]");
            let i = on.index_of(x).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
            let j = on.index_of(y).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
            let vals = parse_vector(values, &at).map_err(CliError::Input)?;
            if vals.len() != target.len() {
                return input(format!("{at}: expected {} values", target.len()));
            }
            pairs.push((i, j, vals));
        }
        let theta = Cocycle2::from_pairs(h.dim(), target.len(), &pairs).map_err(|e| CliError::Input(format!("{at}: {e}")))?;
        Ok((theta, target))
    }
}

pub struct MetricPair {
    pub algebra: LieAlgebra,
    pub form: BilinearForm,
}

/// A vector given as a basis name or as comma-separated rationals.
pub fn parse_vector_arg(s: &str, g: &LieAlgebra) -> Result<Vec<Rational>> {
    if let Ok(i) = g.index_of(s.trim()) {
        return Ok(g.basis_vector(i));
    }
    let v: std::result::Result<Vec<Rational>, _> = s.split(',').map(|x| parse_rational(x.trim())).collect();
    match v {
        Ok(v) if v.len() == g.dim() => Ok(v),
        Ok(v) => input(format!("vector {s:?} has {} entries, expected {}", v.len(), g.dim())),
        Err(_) => input(format!("{s:?} is neither a basis name nor a comma-separated list of rationals")),
    }
}
