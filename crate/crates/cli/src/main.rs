mod report;
mod wire;
mod workspace;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclie_core::catalog;
use cyclie_core::constructions::{
    central_double_extension_1d, derive_theta, double_extension, double_extension_action, quadruple_extension,
    reduce_central, semidirect,
};
use cyclie_core::forms::{check_abc, cyclic_defect, cyclic_space, invariant_space, split_along_ideal};
use cyclie_core::linalg::format_rational;
use cyclie_core::{BilinearForm, LieAlgebra, MetricAlgebra, Subspace, Violation};
use serde_json::json;

use report::{combination, Report};
use workspace::{failed, input, parse_vector_arg, CliError, Result, Workspace};

#[derive(Parser)]
#[command(name = "cyclie", version, about = "Cyclic metrics on Lie algebras, in exact rational arithmetic")]
struct Cli {
    /// Input document (JSON); may be repeated.
    #[arg(short, long = "input", global = true, value_name = "FILE")]
    inputs: Vec<PathBuf>,
    /// Emit a machine-readable certificate instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Add tool version and arguments to the output.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Form,
    Rep,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity, a representation, or a form's cyclic identity.
    Validate {
        target: String,
        /// What TARGET names; guessed from the workspace when omitted.
        #[arg(long = "as", value_enum)]
        kind: Option<Kind>,
    },
    /// Basis of the cyclic symmetric forms.
    CyclicSpace { algebra: String },
    /// Basis of the ad-invariant symmetric forms.
    InvariantSpace { algebra: String },
    /// Basis of the maps ρ making (g, π, V, ρ) a cyclic quadruple.
    QuadrupleSpace { representation: String },
    /// Congruence signature (positive, negative, null).
    Signature { form: String },
    /// Maximal dimension of an isotropic subspace.
    Index { form: String },
    /// Derived, lower central and upper central series.
    Series { algebra: String },
    /// Center of the algebra.
    Center { algebra: String },
    /// Split a metric algebra along an ideal on which the form is nondegenerate.
    Split {
        form: String,
        #[arg(long)]
        ideal: String,
    },
    /// Orthogonal semidirect product g₁ +_π g₂.
    Semidirect {
        g1: String,
        g2: String,
        /// Representation of g₁ on the underlying space of g₂.
        #[arg(long)]
        action: String,
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// Metric algebra g +_π V of a cyclic quadruple.
    QuadExtend {
        quadruple: String,
        /// Cyclic form on g.
        form: String,
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// Double extension s +_π (h +_θ s).
    DoubleExtend {
        h: String,
        s: String,
        /// Representation of s on the underlying space of h.
        #[arg(long)]
        action: String,
        /// Cocycle h × h → s; derived from the compatibility identity when omitted.
        #[arg(long)]
        theta: Option<String>,
        /// Cyclic form on s; zero when omitted.
        #[arg(long)]
        b_tilde: Option<String>,
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// One-dimensional central double extension of (h, B_h) by a scalar cocycle.
    #[command(name = "central-extend-1d")]
    CentralExtend1d {
        h: String,
        theta: String,
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// Recover (h, θ) from a nondegenerate metric algebra and an isotropic central vector.
    ReduceCentral {
        form: String,
        /// Basis name or comma-separated coordinates.
        #[arg(long)]
        z: String,
        #[arg(long, default_value = "h")]
        name: String,
    },
    /// Check the three conditions for a split into subalgebra ⊕ ideal.
    CheckAbc {
        form: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        ideal: String,
    },
    /// List the catalog, or show one entry.
    Catalog { name: Option<String> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let meta = cli.meta.then(|| {
        json!({
            "tool": "cyclie",
            "version": env!("CARGO_PKG_VERSION"),
            "args": std::env::args().skip(1).collect::<Vec<_>>(),
        })
    });
    let outcome = Workspace::load(&cli.inputs).and_then(|ws| run(&ws, &cli.command));
    match outcome {
        Ok(report) => {
            let ok = report.ok;
            if cli.json {
                print!("{}", report.json(meta));
            } else {
                if let Some(m) = &meta {
                    println!("# cyclie {} {}", m["version"].as_str().unwrap_or(""), m["args"]);
                }
                print!("{}", report.text());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let kind = if matches!(e, CliError::Input(_)) { "input" } else { "failed" };
                let msg = match &e {
                    CliError::Input(m) | CliError::Failed(m) => m.clone(),
                };
                let mut body = json!({ "ok": false, "error": { "kind": kind, "message": msg } });
                if let Some(m) = meta {
                    body["meta"] = m;
                }
                println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            }
            eprintln!("cyclie: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(ws: &Workspace, command: &Command) -> Result<Report> {
    match command {
        Command::Validate { target, kind } => validate(ws, target, *kind),
        Command::CyclicSpace { algebra } => {
            let g = valid_algebra(ws, algebra)?;
            let space = cyclic_space(&g);
            Ok(form_space("cyclic-space", algebra, &g, space.basis, space.unknowns, space.equations))
        }
        Command::InvariantSpace { algebra } => {
            let g = valid_algebra(ws, algebra)?;
            let space = invariant_space(&g);
            Ok(form_space("invariant-space", algebra, &g, space.basis, space.unknowns, space.equations))
        }
        Command::QuadrupleSpace { representation } => quadruple_space(ws, representation),
        Command::Signature { form } | Command::Index { form } => {
            let name = if matches!(command, Command::Index { .. }) { "index" } else { "signature" };
            let b = ws.form(form)?.form;
            let sig = b.signature();
            let mut r = Report::new(name);
            r.line(format!("form: {form} (dim {})", b.dim()));
            r.line(format!("signature: {sig}"));
            r.line(format!("index: {}", b.index()));
            r.set("form", form);
            r.set("signature", json!({ "pos": sig.pos, "neg": sig.neg, "null": sig.null }));
            r.set("index", b.index());
            Ok(r)
        }
        Command::Series { algebra } => series(ws, algebra),
        Command::Center { algebra } => {
            let g = valid_algebra(ws, algebra)?;
            let c = g.center();
            let mut r = Report::new("center");
            r.line(format!("algebra: {algebra} (dim {})", g.dim()));
            r.line(format!("dimension: {}", c.dim()));
            for v in c.basis_vectors() {
                r.line(format!("  {}", combination(&v, g.names())));
            }
            r.set("algebra", algebra);
            r.set("dimension", c.dim());
            r.set("basis", wire::rows(c.basis()));
            Ok(r)
        }
        Command::Split { form, ideal } => split(ws, form, ideal),
        Command::Semidirect { g1, g2, action, name } => {
            let (m1, m2) = (ws.metric(g1)?, ws.metric(g2)?);
            let pi = ws.representation(action)?;
            let out = semidirect(&m1, &m2, &pi).map_err(failed)?;
            let mut r = Report::new("semidirect");
            r.set("inputs", json!({ "g1": g1, "g2": g2, "action": action }));
            construction(&mut r, name, &out);
            Ok(r)
        }
        Command::QuadExtend { quadruple, form, name } => {
            let q = ws.quadruple(quadruple)?;
            let b = ws.form(form)?;
            if b.algebra.dim() != q.rep().algebra().dim() {
                return input(format!("{form} is not a form on the algebra of {quadruple}"));
            }
            let out = quadruple_extension(&q, &b.form).map_err(failed)?;
            let mut r = Report::new("quad-extend");
            r.set("inputs", json!({ "quadruple": quadruple, "form": form }));
            construction(&mut r, name, &out);
            Ok(r)
        }
        Command::DoubleExtend {
            h,
            s,
            action,
            theta,
            b_tilde,
            name,
        } => double_extend(ws, h, s, action, theta.as_deref(), b_tilde.as_deref(), name),
        Command::CentralExtend1d { h, theta, name } => {
            let hm = ws.metric(h)?;
            let (t, target) = ws.cocycle(theta, hm.algebra())?;
            if target.len() != 1 {
                return input(format!("{theta}: a scalar cocycle is needed, found {} targets", target.len()));
            }
            let out = central_double_extension_1d(&hm, &t).map_err(failed)?;
            let mut r = Report::new("central-extend-1d");
            r.set("inputs", json!({ "h": h, "theta": theta }));
            construction(&mut r, name, &out);
            Ok(r)
        }
        Command::ReduceCentral { form, z, name } => reduce(ws, form, z, name),
        Command::CheckAbc { form, h, ideal } => {
            let p = ws.form(form)?;
            let hs = ws.subspace(h, &p.algebra)?;
            let is = ws.subspace(ideal, &p.algebra)?;
            let abc = check_abc(&p.algebra, &p.form, &hs, &is).map_err(failed)?;
            let yn = |b: bool| if b { "yes" } else { "no" };
            let mut r = Report::new("check-abc");
            r.line(format!("form: {form}"));
            r.line(format!("(a) restrictions cyclic: {}", yn(abc.a_ok)));
            r.line(format!("(b) two ideal arguments: {}", yn(abc.b_ok)));
            r.line(format!("(c) two subalgebra arguments: {}", yn(abc.c_ok)));
            r.line(format!("cyclic: {}", yn(abc.cyclic)));
            r.set("form", form);
            r.set("a", abc.a_ok);
            r.set("b", abc.b_ok);
            r.set("c", abc.c_ok);
            r.set("cyclic", abc.cyclic);
            r.ok = abc.all();
            Ok(r)
        }
        Command::Catalog { name } => catalog_command(name.as_deref()),
    }
}

fn valid_algebra(ws: &Workspace, r: &str) -> Result<LieAlgebra> {
    let g = ws.algebra(r)?;
    require_valid(&g, r)?;
    Ok(g)
}

fn require_valid(g: &LieAlgebra, label: &str) -> Result<()> {
    match g.validate().violations.first() {
        None => Ok(()),
        Some(v) => Err(CliError::Failed(format!("{label}: {}", violation_text(g, v)))),
    }
}

fn violation_text(g: &LieAlgebra, v: &Violation) -> String {
    let n = g.names();
    match v {
        Violation::Antisymmetry { i, j } => format!("antisymmetry fails at ({}, {})", n[*i], n[*j]),
        Violation::Jacobi { i, j, k, residual } => format!(
            "Jacobi fails at ({}, {}, {}): sum = {}",
            n[*i],
            n[*j],
            n[*k],
            combination(residual, n)
        ),
        Violation::Homomorphism { i, j } => format!("homomorphism fails at ({}, {})", n[*i], n[*j]),
    }
}

fn validate(ws: &Workspace, target: &str, kind: Option<Kind>) -> Result<Report> {
    let kind = kind.unwrap_or_else(|| {
        let form_prefix = ["killing:", "zero:"].iter().any(|p| target.starts_with(p))
            || (target.starts_with("catalog:") && target.contains('#'));
        let rep_prefix = ["vk:", "adjoint:", "natural:", "dual:"].iter().any(|p| target.starts_with(p));
        if ws.has_form(target) || form_prefix {
            Kind::Form
        } else if ws.has_representation(target) || rep_prefix {
            Kind::Rep
        } else {
            Kind::Algebra
        }
    });
    let mut r = Report::new("validate");
    r.set("target", target);
    match kind {
        Kind::Algebra | Kind::Form => {
            let (g, form) = match kind {
                Kind::Form => {
                    let p = ws.form(target)?;
                    (p.algebra, Some(p.form))
                }
                _ => (ws.algebra(target)?, None),
            };
            let report = g.validate();
            r.line(format!("{target}: dim {}", g.dim()));
            let texts: Vec<String> = report.violations.iter().map(|v| violation_text(&g, v)).collect();
            if texts.is_empty() {
                r.line("lie algebra: ok");
            } else {
                r.line("lie algebra: FAILED");
                for t in &texts {
                    r.line(format!("  {t}"));
                }
            }
            r.set("kind", if form.is_some() { "form" } else { "algebra" });
            r.set("lie_algebra", json!({ "ok": report.ok(), "violations": texts }));
            r.ok = report.ok();
            if let Some(b) = form {
                let defect = cyclic_defect(&g, &b).map_err(failed)?;
                let n = g.names();
                let items: Vec<_> = defect
                    .iter()
                    .map(|d| json!({ "triple": [n[d.i], n[d.j], n[d.k]], "value": format_rational(&d.value) }))
                    .collect();
                if defect.is_empty() {
                    r.line("cyclic: yes");
                } else {
                    r.line("cyclic: no");
                    for d in &defect {
                        r.line(format!("  cyclic sum at ({}, {}, {}) = {}", n[d.i], n[d.j], n[d.k], d.value));
                    }
                }
                r.set("cyclic", json!({ "ok": defect.is_empty(), "defects": items }));
                r.ok &= defect.is_empty();
            }
        }
        Kind::Rep => {
            let rep = ws.representation(target)?;
            let g = rep.algebra();
            let report = rep.validate();
            let texts: Vec<String> = report.violations.iter().map(|v| violation_text(g, v)).collect();
            r.line(format!("{target}: algebra dim {}, module dim {}", g.dim(), rep.module_dim()));
            if texts.is_empty() {
                r.line("representation: ok");
            } else {
                r.line("representation: FAILED");
                for t in &texts {
                    r.line(format!("  {t}"));
                }
            }
            r.set("kind", "representation");
            r.set("representation", json!({ "ok": report.ok(), "violations": texts }));
            r.ok = report.ok();
        }
    }
    Ok(r)
}

fn form_space(
    command: &str,
    label: &str,
    g: &LieAlgebra,
    basis: Vec<BilinearForm>,
    unknowns: usize,
    equations: usize,
) -> Report {
    let mut r = Report::new(command);
    r.line(format!("algebra: {label} (dim {}; basis {})", g.dim(), g.names().join(", ")));
    r.line(format!("unknowns: {unknowns}"));
    r.line(format!("equations: {equations}"));
    r.line(format!("dimension: {}", basis.len()));
    for (k, b) in basis.iter().enumerate() {
        r.line(format!("form {}:", k + 1));
        r.matrix(2, b.matrix());
    }
    r.set("algebra", label);
    r.set("basis_names", g.names());
    r.set("unknowns", unknowns);
    r.set("equations", equations);
    r.set("dimension", basis.len());
    r.set("basis", basis.iter().map(|b| wire::rows(b.matrix())).collect::<Vec<_>>());
    r
}

fn quadruple_space(ws: &Workspace, label: &str) -> Result<Report> {
    let rep = ws.representation(label)?;
    let report = rep.validate();
    if let Some(v) = report.violations.first() {
        return Err(CliError::Failed(format!("{label}: {}", violation_text(rep.algebra(), v))));
    }
    let space = rep.quadruple_space();
    let mut r = Report::new("quadruple-space");
    r.line(format!(
        "representation: {label} (algebra dim {}, module dim {})",
        rep.algebra().dim(),
        rep.module_dim()
    ));
    r.line(format!("unknowns: {}", space.unknowns));
    r.line(format!("equations: {}", space.equations));
    r.line(format!("dimension: {}", space.dim()));
    for (k, m) in space.basis.iter().enumerate() {
        r.line(format!("rho {}:", k + 1));
        r.matrix(2, m);
    }
    r.set("representation", label);
    r.set("unknowns", space.unknowns);
    r.set("equations", space.equations);
    r.set("dimension", space.dim());
    r.set("basis", space.basis.iter().map(wire::rows).collect::<Vec<_>>());
    Ok(r)
}

fn series(ws: &Workspace, label: &str) -> Result<Report> {
    let g = valid_algebra(ws, label)?;
    let mut r = Report::new("series");
    r.line(format!("algebra: {label} (dim {})", g.dim()));
    r.set("algebra", label);
    for (key, title, sep, s) in [
        ("derived", "derived series", " > ", g.derived_series()),
        ("lower_central", "lower central series", " > ", g.lower_central_series()),
        ("upper_central", "upper central series", " < ", g.upper_central_series()),
    ] {
        let dims: Vec<String> = s.iter().map(|t| t.dim().to_string()).collect();
        r.line(format!("{title}: {}", dims.join(sep)));
        r.set(key, s.iter().map(|t| wire::rows(t.basis())).collect::<Vec<_>>());
    }
    r.line(format!("nilpotent: {}", g.is_nilpotent()));
    r.line(format!("solvable: {}", g.is_solvable()));
    r.set("nilpotent", g.is_nilpotent());
    r.set("solvable", g.is_solvable());
    Ok(r)
}

fn split(ws: &Workspace, form: &str, ideal: &str) -> Result<Report> {
    let p = ws.form(form)?;
    let i = ws.subspace(ideal, &p.algebra)?;
    let out = split_along_ideal(&p.algebra, &p.form, &i).map_err(failed)?;
    let names = p.algebra.names();
    let mut r = Report::new("split");
    r.line(format!("form: {form}"));
    r.line(format!("complement (dim {}):", out.complement.dim()));
    for v in out.complement.basis_vectors() {
        r.line(format!("  {}", combination(&v, names)));
    }
    r.line("action on the ideal, per complement basis vector:");
    for (k, op) in out.action.ops().iter().enumerate() {
        r.line(format!("  g1[{}]:", k + 1));
        r.matrix(4, op);
    }
    r.set("form", form);
    r.set("complement", wire::rows(out.complement.basis()));
    r.set("ideal", wire::rows(i.basis()));
    r.set("action", out.action.ops().iter().map(wire::rows).collect::<Vec<_>>());
    Ok(r)
}

fn double_extend(
    ws: &Workspace,
    h: &str,
    s: &str,
    action: &str,
    theta: Option<&str>,
    b_tilde: Option<&str>,
    name: &str,
) -> Result<Report> {
    let hm = ws.metric(h)?;
    let sm = ws.metric(s)?;
    let act = ws.representation(action)?;
    if act.algebra().dim() != sm.dim() || act.module_dim() != hm.dim() {
        return input(format!(
            "{action}: expected an action of {s} (dim {}) on {h} (dim {})",
            sm.dim(),
            hm.dim()
        ));
    }
    let h_ops = act.ops().to_vec();
    let theta = match theta {
        Some(t) => {
            let (c, target) = ws.cocycle(t, hm.algebra())?;
            if target.len() != sm.dim() {
                return input(format!("{t}: expected {} target coordinates", sm.dim()));
            }
            c
        }
        None => derive_theta(&hm, &sm, &h_ops).map_err(failed)?,
    };
    let bt = match b_tilde {
        Some(f) => {
            let p = ws.form(f)?;
            if p.algebra.dim() != sm.dim() {
                return input(format!("{f}: expected a form on {s}"));
            }
            p.form
        }
        None => BilinearForm::zero(sm.dim()),
    };
    let pi = double_extension_action(sm.algebra(), hm.algebra().names(), &h_ops).map_err(failed)?;
    let out = double_extension(&hm, &sm, &pi, &theta, &bt).map_err(failed)?;
    let mut r = Report::new("double-extend");
    r.set("inputs", json!({ "h": h, "s": s, "action": action }));
    let t = wire::cocycle_def(h, hm.algebra(), &theta, sm.algebra().names());
    r.set("theta", json!({ "target": t.target, "values": t.values }));
    construction(&mut r, name, &out);
    Ok(r)
}

fn reduce(ws: &Workspace, form: &str, z: &str, name: &str) -> Result<Report> {
    let g = ws.metric(form)?;
    let zv = parse_vector_arg(z, g.algebra())?;
    let red = reduce_central(&g, &zv).map_err(failed)?;
    let names = g.algebra().names();
    let mut r = Report::new("reduce-central");
    r.line(format!("form: {form}"));
    r.line(format!("z = {}", combination(&zv, names)));
    r.line(format!("x = {}", combination(&red.x, names)));
    r.line(format!("h = span(x, z)⊥, dim {}:", red.h.dim()));
    for (k, row) in red.basis.row_vecs().iter().enumerate().skip(1).take(red.h.dim()) {
        r.line(format!("  {} = {}", red.h.algebra().names()[k - 1], combination(row, names)));
    }
    for l in red.h.algebra().to_string().lines() {
        r.line(format!("  {l}"));
    }
    r.line("B_h:");
    r.matrix(2, red.h.form().matrix());
    r.line("theta:");
    r.matrix(2, &red.theta.scalar_matrix());
    r.line("D = ad x on h:");
    r.matrix(2, &red.derivation);
    r.set("form", form);
    r.set("z", wire::vector(&zv));
    r.set("x", wire::vector(&red.x));
    r.set("derivation", wire::rows(&red.derivation));
    r.set("basis", wire::rows(&red.basis));
    r.define("algebras", name, wire::algebra_def(red.h.algebra()));
    r.define("forms", name, wire::form_def(name, red.h.form()));
    r.define(
        "cocycles",
        &format!("{name}_theta"),
        wire::cocycle_def(name, red.h.algebra(), &red.theta, &["z".to_string()]),
    );
    Ok(r)
}

/// Shared tail of the constructors: print and certify the output.
fn construction(r: &mut Report, name: &str, out: &MetricAlgebra) {
    let g = out.algebra();
    let report = g.validate();
    let defect = cyclic_defect(g, out.form()).expect("shapes agree");
    let sig = out.form().signature();
    r.line(format!("{name}: dim {}", g.dim()));
    for l in g.to_string().lines() {
        r.line(format!("  {l}"));
    }
    r.line("form:");
    r.matrix(2, out.form().matrix());
    r.line(format!("signature: {sig}"));
    r.line(format!("index: {}", out.form().index()));
    r.line(format!("nondegenerate: {}", out.is_nondegenerate()));
    r.line(format!("lie algebra: {}", if report.ok() { "ok" } else { "FAILED" }));
    r.line(format!("cyclic: {}", if defect.is_empty() { "yes" } else { "no" }));
    r.define("algebras", name, wire::algebra_def(g));
    r.define("forms", name, wire::form_def(name, out.form()));
    r.set(
        "certificate",
        json!({
            "dim": g.dim(),
            "signature": { "pos": sig.pos, "neg": sig.neg, "null": sig.null },
            "index": out.form().index(),
            "nondegenerate": out.is_nondegenerate(),
            "jacobi_ok": report.ok(),
            "cyclic_defects": defect.len(),
        }),
    );
    r.ok = report.ok() && defect.is_empty();
}

fn catalog_command(name: Option<&str>) -> Result<Report> {
    let mut r = Report::new("catalog");
    let Some(name) = name else {
        r.line("catalog entries (use `cyclie catalog NAME` for details):");
        for n in catalog::NAMES {
            r.line(format!("  {n}"));
        }
        r.set("names", catalog::NAMES);
        return Ok(r);
    };
    let e = catalog::lookup(name).map_err(|e| CliError::Input(e.to_string()))?;
    e.verify().map_err(failed)?;
    let g = &e.algebra;
    r.line(format!("{}: dim {}", e.name, g.dim()));
    for l in g.to_string().lines() {
        r.line(format!("  {l}"));
    }
    let mut annotations = serde_json::Map::new();
    for (key, s) in [("levi", &e.levi), ("radical", &e.radical), ("nilradical", &e.nilradical)] {
        if let Some(s) = s {
            r.line(format!("{key}: {}", span_text(s, g)));
            annotations.insert(key.into(), serde_json::to_value(wire::rows(s.basis())).expect("serializable"));
        }
    }
    for (key, b) in &e.forms {
        r.line(format!("form {key}:"));
        r.matrix(2, b.matrix());
        r.define("forms", key, wire::form_def(&e.name, b));
    }
    for (key, rep) in &e.representations {
        r.line(format!("representation {key}: module dim {}", rep.module_dim()));
        r.define("representations", key, wire::rep_def(&e.name, rep));
    }
    r.define("algebras", &e.name, wire::algebra_def(g));
    r.set("annotations", annotations);
    Ok(r)
}

fn span_text(s: &Subspace, g: &LieAlgebra) -> String {
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| combination(v, g.names())).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        format!("span({})", parts.join(", "))
    }
}
