//! The JSON input/output format. Rationals are strings ("3", "-1/2"); plain
//! integers are accepted on input.

use std::collections::BTreeMap;

use cyclie_core::constructions::Cocycle2;
use cyclie_core::linalg::{format_rational, parse_rational};
use cyclie_core::{BilinearForm, LieAlgebra, Matrix, Rational, Representation};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Int(i64),
}

impl Num {
    pub fn parse(&self, at: &str) -> Result<Rational, String> {
        match self {
            Num::Text(s) => parse_rational(s).map_err(|e| format!("{at}: {e}")),
            Num::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

pub fn num(r: &Rational) -> Num {
    Num::Text(format_rational(r))
}

pub type Rows = Vec<Vec<Num>>;

/// Top-level document. Unknown keys (certificates, provenance) are ignored
/// so that emitted certificates load back as input.
#[derive(Debug, Default, Deserialize, Serialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, FormDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, SubspaceDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub quadruples: BTreeMap<String, QuadrupleDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cocycles: BTreeMap<String, CocycleDef>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<(String, String, Vec<(String, Num)>)>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FormDef {
    pub on: String,
    pub matrix: Rows,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RepDef {
    pub on: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<Vec<String>>,
    /// Keyed by basis names of the algebra; missing elements act by zero.
    #[serde(default)]
    pub ops: BTreeMap<String, Rows>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDef {
    pub on: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Rows>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleDef {
    pub rep: String,
    pub rho: Rows,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDef {
    pub on: String,
    /// Names of the target coordinates; one scalar target when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    pub values: Vec<(String, String, Vec<Num>)>,
}

pub fn parse_matrix(rows: &Rows, at: &str) -> Result<Matrix, String> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut parsed = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(format!("{at}[{r}]: expected {cols} entries, found {}", row.len()));
        }
        let row: Result<Vec<_>, _> = row
            .iter()
            .enumerate()
            .map(|(c, x)| x.parse(&format!("{at}[{r}][{c}]")))
            .collect();
        parsed.push(row?);
    }
    Matrix::from_rows(cols, parsed).map_err(|e| format!("{at}: {e}"))
}

pub fn parse_vector(v: &[Num], at: &str) -> Result<Vec<Rational>, String> {
    v.iter().enumerate().map(|(i, x)| x.parse(&format!("{at}[{i}]"))).collect()
}

pub fn rows(m: &Matrix) -> Rows {
    (0..m.rows()).map(|r| m.row(r).iter().map(num).collect()).collect()
}

pub fn vector(v: &[Rational]) -> Vec<Num> {
    v.iter().map(num).collect()
}

pub fn algebra_def(g: &LieAlgebra) -> AlgebraDef {
    let names = g.names();
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in (i + 1)..g.dim() {
            let terms: Vec<(String, Num)> = g
                .structure(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (names[k].clone(), num(c)))
                .collect();
            if !terms.is_empty() {
                brackets.push((names[i].clone(), names[j].clone(), terms));
            }
        }
    }
    AlgebraDef {
        dim: Some(g.dim()),
        basis: names.to_vec(),
        brackets,
    }
}

pub fn form_def(on: &str, b: &BilinearForm) -> FormDef {
    FormDef {
        on: on.to_string(),
        matrix: rows(b.matrix()),
    }
}

pub fn rep_def(on: &str, r: &Representation) -> RepDef {
    let ops = r
        .algebra()
        .names()
        .iter()
        .zip(r.ops())
        .filter(|(_, op)| !op.is_zero())
        .map(|(n, op)| (n.clone(), rows(op)))
        .collect();
    RepDef {
        on: on.to_string(),
        dim: Some(r.module_dim()),
        module: Some(r.module_names().to_vec()),
        ops,
    }
}

pub fn cocycle_def(on: &str, h: &LieAlgebra, theta: &Cocycle2, target: &[String]) -> CocycleDef {
    let names = h.names();
    let mut values = Vec::new();
    for i in 0..theta.source_dim() {
        for j in (i + 1)..theta.source_dim() {
            let v = theta.get(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                values.push((names[i].clone(), names[j].clone(), vector(v)));
            }
        }
    }
    CocycleDef {
        on: on.to_string(),
        target: Some(target.to_vec()),
        values,
    }
}
