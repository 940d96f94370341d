//! Command-line frontend. [`run`] parses argv and returns the exit code
//! with both output streams, so the binary is a thin wrapper.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::branching::levi_lowest_weights;
use crate::error::{invalid, precondition, Error, Result};
use crate::exactalg::{format_rational, parse_rational_list, Assignment, Rational};
use crate::gap::{gap_certify, gap_functions, gapexist_check, prop_every_certify};
use crate::goldens::tables;
use crate::latex::{self, Labels};
use crate::linalg::Vector;
use crate::minpoly::{char_poly_factored, classical_limit, min_poly_at, min_poly_for};
use crate::params::{BlockVariant, Blocks, Convention, Setting};
use crate::rootsys::{standard_form, trace_form, Family, NormalizedForm, RootSystem};
use crate::weights::{poset_dot, WeightSystem};

/// Elements allowed in one Weyl-group or coset enumeration.
const ENUMERATION_LIMIT: usize = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "liemin", version, about = "Minimal polynomials, branching and gap certificates for generalized Verma modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple roots, ρ, highest root, marks and Cartan matrix.
    Rootsys(TypeArgs),
    /// Weights with multiplicities; `--format dot` draws the poset.
    Weights(RepArgs),
    /// Decomposition of π restricted to the Levi factor of Θ.
    Branch(ProblemArgs),
    /// The global minimal polynomial q_{π,Θ}(x; λ), evaluated if --lambda is given.
    Minpoly(ProblemArgs),
    /// The characteristic polynomial q_π(x) in the coordinates ε_i.
    Charpoly(RepArgs),
    /// Symbolic gap functions r_{α,ϖ_α}(λ) for every α ∈ Θ.
    Gap(ProblemArgs),
    /// Gap certificate at a numeric λ.
    Certify(CertifyArgs),
    /// Classical limit: distinct restrictions, their differences and ramified fibers.
    Orbit(ProblemArgs),
    /// Recompute the embedded reference tables and diff them.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormChoice {
    /// Trace form of π.
    Trace,
    /// Long roots of squared length 2 (ε-coordinates for the classical types).
    Standard,
}

#[derive(Args, Debug)]
struct TypeArgs {
    /// Type label: A3, B4, C2, D5, E6, E7, E8, F4, G2 or gl4.
    #[arg(long = "type")]
    type_label: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct RepArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Highest weight: `adjoint`, `fund:a,b,…` or `eps:x,y,…`; defaults to the natural representation of gl/A/B/C/D/G2.
    #[arg(long)]
    pi: Option<String>,
    #[arg(long, value_enum, default_value = "trace")]
    form: FormChoice,
}

#[derive(Args, Debug)]
struct ProblemArgs {
    #[command(flatten)]
    rep: RepArgs,
    /// Θ as 1-based simple-root indices, e.g. `2,3,4`; empty for Θ = ∅.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    theta: String,
    /// Block ends `n₁,…,n_L` for gl/B/C/D; replaces --theta and uses psi-prime.
    #[arg(long)]
    blocks: Option<String>,
    /// Block variant: plain, bar or prime.
    #[arg(long, default_value = "plain")]
    variant: String,
    /// Simple-root numbering of --theta: psi or psi-prime.
    #[arg(long, default_value = "psi")]
    convention: String,
    /// Values of the parameters λ, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// LaTeX label for a single parameter, e.g. `\lambda`.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Also check the orbit conditions and the type-specific criterion.
    #[arg(long)]
    existence: bool,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// Only tables of this type, e.g. G2 or E6.
    #[arg(long, conflicts_with = "all")]
    family: Option<String>,
    /// Every table.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Exit code and the two output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes: 0 success, 1 a reference table differs, 2 invalid input,
/// 3 a mathematical precondition fails.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cmd: &Command) -> Result<(i32, String)> {
    match cmd {
        Command::Rootsys(a) => rootsys(a).map(ok),
        Command::Weights(a) => weights(a).map(ok),
        Command::Branch(a) => branch(a).map(ok),
        Command::Minpoly(a) => minpoly(a).map(ok),
        Command::Charpoly(a) => charpoly(a).map(ok),
        Command::Gap(a) => gap(a).map(ok),
        Command::Certify(a) => certify(a).map(ok),
        Command::Orbit(a) => orbit(a).map(ok),
        Command::Tables(a) => tables_cmd(a),
    }
}

fn ok(s: String) -> (i32, String) {
    (0, s)
}

fn only(format: Format, allowed: &[Format], what: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        invalid(format!("{what} has no {format:?} output").to_lowercase())
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn joined(v: &[Rational]) -> String {
    rationals(v).join(", ")
}

fn root_system(label: &str) -> Result<Arc<RootSystem>> {
    Ok(Arc::new(RootSystem::parse(label)?))
}

fn rep(a: &RepArgs) -> Result<(WeightSystem, NormalizedForm)> {
    let rs = root_system(&a.ty.type_label)?;
    let ws = match &a.pi {
        Some(spec) => WeightSystem::from_spec(rs.clone(), spec)?,
        None => match rs.family() {
            Family::E | Family::F => return invalid(format!("{} needs --pi", rs.label())),
            _ => WeightSystem::new(rs.clone(), rs.fundamental_weight(0).clone())?,
        },
    };
    let form = match a.form {
        FormChoice::Trace => trace_form(&ws)?,
        FormChoice::Standard => standard_form(&rs),
    };
    Ok((ws, form))
}

fn parse_indices(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: usize = t.trim().parse().map_err(|_| Error::Invalid(format!("bad index '{t}'")))?;
            if i == 0 || i > rank {
                return invalid(format!("index {i} out of range 1..={rank}"));
            }
            Ok(i - 1)
        })
        .collect()
}

fn setting(rs: &RootSystem, a: &ProblemArgs) -> Result<Setting> {
    if let Some(b) = &a.blocks {
        if !a.theta.trim().is_empty() {
            return invalid("--blocks and --theta are exclusive");
        }
        let ends: Vec<usize> = b
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Invalid(format!("bad block end '{t}'"))))
            .collect::<Result<_>>()?;
        return Blocks::new(rs, &ends, a.variant.parse::<BlockVariant>()?)?.setting(rs);
    }
    let theta = parse_indices(&a.theta, rs.rank())?;
    Setting::fundamental(rs, a.convention.parse::<Convention>()?, &theta)
}

fn assignment(s: &Setting, a: &ProblemArgs) -> Result<Option<Assignment>> {
    match &a.lambda {
        None => Ok(None),
        Some(text) => {
            let values = if text.trim().is_empty() { Vec::new() } else { parse_rational_list(text)? };
            Ok(Some(s.param.assignment(&values)?))
        }
    }
}

struct Problem {
    ws: WeightSystem,
    form: NormalizedForm,
    setting: Setting,
    labels: Labels,
    lambda: Option<Assignment>,
}

fn problem(a: &ProblemArgs) -> Result<Problem> {
    let (ws, form) = rep(&a.rep)?;
    let setting = setting(ws.root_system(), a)?;
    let mut labels = setting.param.labels();
    if let Some(l) = &a.label {
        if labels.len() != 1 {
            return invalid("--label needs exactly one parameter");
        }
        labels.values_mut().for_each(|v| *v = l.clone());
    }
    let lambda = assignment(&setting, a)?;
    Ok(Problem { ws, form, setting, labels, lambda })
}

fn rootsys(a: &TypeArgs) -> Result<String> {
    only(a.format, &[Format::Text, Format::Json], "rootsys")?;
    let rs = root_system(&a.type_label)?;
    let simple: Vec<Vec<String>> = rs.simple_roots().iter().map(|r| rationals(r)).collect();
    let rho = rs.simple_coords(rs.rho());
    let top = rs.simple_coords(rs.highest_root());
    if a.format == Format::Json {
        return Ok(pretty(&json!({
            "type": rs.label(),
            "rank": rs.rank(),
            "simple_roots": simple,
            "positive_roots": rs.positive_roots().len(),
            "weyl_order": rs.weyl_order(),
            "rho": rationals(&rho),
            "highest_root": rationals(&top),
            "marks": rs.marks(),
            "cartan": rs.cartan(),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "type {}", rs.label());
    let _ = writeln!(out, "rank {}", rs.rank());
    for (i, r) in simple.iter().enumerate() {
        let _ = writeln!(out, "alpha_{} = ({})", i + 1, r.join(", "));
    }
    let _ = writeln!(out, "positive roots {}", rs.positive_roots().len());
    let _ = writeln!(out, "weyl order {}", rs.weyl_order());
    let _ = writeln!(out, "rho = {} (simple roots)", joined(&rho));
    let _ = writeln!(out, "highest root = {} (simple roots)", joined(&top));
    let marks: Vec<String> = rs.marks().iter().map(i64::to_string).collect();
    let _ = writeln!(out, "marks {}", marks.join(", "));
    for row in rs.cartan() {
        let r: Vec<String> = row.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "cartan {}", r.join(" "));
    }
    Ok(out)
}

fn weights(a: &RepArgs) -> Result<String> {
    only(a.ty.format, &[Format::Text, Format::Json, Format::Dot], "weights")?;
    let (ws, form) = rep(a)?;
    let rs = ws.root_system();
    if a.ty.format == Format::Dot {
        return Ok(poset_dot(&ws));
    }
    let pi_rho = form.pair(ws.highest(), rs.rho());
    let rows: Vec<(Vec<String>, Vec<i64>, u64)> =
        ws.weights().iter().map(|w| (rationals(&rs.dynkin_labels(&w.eps)), w.depth.clone(), w.mult)).collect();
    if a.ty.format == Format::Json {
        let list: Vec<Value> = rows.iter().map(|(l, d, m)| json!({"labels": l, "depth": d, "mult": m})).collect();
        return Ok(pretty(&json!({
            "type": rs.label(),
            "highest": ws.highest_labels(),
            "dim": ws.dim(),
            "pi_rho": format_rational(&pi_rho),
            "minuscule": ws.is_minuscule(),
            "multiplicity_free": ws.is_multiplicity_free(),
            "weights": list,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "dim {}", ws.dim());
    let _ = writeln!(out, "(pi, rho) = {}", format_rational(&pi_rho));
    let _ = writeln!(out, "distinct weights {}", rows.len());
    for (l, d, m) in rows {
        let depth: Vec<String> = d.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "[{}] depth {} mult {m}", l.join(" "), depth.join(","));
    }
    Ok(out)
}

fn user_labels(s: &Setting, rs: &RootSystem, v: &Vector) -> Vec<String> {
    rationals(&rs.dynkin_labels(&s.to_user(rs, v)))
}

fn branch(a: &ProblemArgs) -> Result<String> {
    only(a.rep.ty.format, &[Format::Text, Format::Json], "branch")?;
    let p = problem(a)?;
    let rs = p.ws.root_system();
    let b = levi_lowest_weights(&p.ws, &p.setting.theta);
    let comps: Vec<(Vec<String>, Vec<String>, u64, u64)> = b
        .components
        .iter()
        .map(|c| (user_labels(&p.setting, rs, &c.highest.eps), user_labels(&p.setting, rs, &c.lowest.eps), c.count, c.levi_dim))
        .collect();
    if a.rep.ty.format == Format::Json {
        let list: Vec<Value> =
            comps.iter().map(|(h, l, c, d)| json!({"highest": h, "lowest": l, "count": c, "levi_dim": d})).collect();
        return Ok(pretty(&json!({"theta": theta_json(&p.setting), "total_dim": b.total_dim(), "components": list})));
    }
    let mut out = String::new();
    for (h, l, c, d) in comps {
        let _ = writeln!(out, "{c} x dim {d}: highest [{}] lowest [{}]", h.join(" "), l.join(" "));
    }
    let _ = writeln!(out, "total dim {}", b.total_dim());
    Ok(out)
}

fn theta_json(s: &Setting) -> Vec<usize> {
    s.user_theta.iter().map(|i| i + 1).collect()
}

fn minpoly(a: &ProblemArgs) -> Result<String> {
    let format = a.rep.ty.format;
    only(format, &[Format::Text, Format::Json, Format::Latex], "minpoly")?;
    let p = problem(a)?;
    let res = min_poly_for(&p.ws, &p.setting, &p.form);
    let eval = match &p.lambda {
        Some(v) => Some(min_poly_at(&res, &p.ws, &p.setting.param, &p.form, v)?),
        None => None,
    };
    let pairs = |v: &[(Rational, u32)]| -> Vec<Value> { v.iter().map(|(r, m)| json!({"root": format_rational(r), "mult": m})).collect() };
    match format {
        Format::Latex => Ok(format!("{}\n", latex::factored(&res.q, &p.labels))),
        Format::Json => {
            let mut v = json!({
                "theta": theta_json(&p.setting),
                "convention": p.setting.convention.to_string(),
                "q": res.q.to_json(),
                "latex": latex::factored(&res.q, &p.labels),
                "degree": res.q.degree(),
                "squarefree": res.squarefree,
            });
            if let Some(e) = &eval {
                v["evaluation"] = json!({"roots": pairs(&e.roots), "minimal": e.minimal, "annihilator": pairs(&e.annihilator)});
            }
            Ok(pretty(&v))
        }
        _ => {
            let mut out = format!("q(x) = {}\ndegree {}\n", latex::factored(&res.q, &p.labels), res.q.degree());
            if let Some(e) = eval {
                let show = |v: &[(Rational, u32)]| {
                    v.iter().map(|(r, m)| if *m == 1 { format_rational(r) } else { format!("{}^{m}", format_rational(r)) }).collect::<Vec<_>>().join(", ")
                };
                let _ = writeln!(out, "roots {}", show(&e.roots));
                let _ = writeln!(out, "minimal {}", e.minimal);
                let _ = writeln!(out, "annihilator roots {}", show(&e.annihilator));
            }
            Ok(out)
        }
    }
}

fn charpoly(a: &RepArgs) -> Result<String> {
    only(a.ty.format, &[Format::Text, Format::Json, Format::Latex], "charpoly")?;
    let (ws, form) = rep(a)?;
    let q = char_poly_factored(&ws, &form);
    let labels: Labels = (0..ws.root_system().dim()).map(|i| (i + 1, format!("\\varepsilon_{{{}}}", i + 1))).collect();
    let text = latex::factored(&q, &labels);
    match a.ty.format {
        Format::Json => Ok(pretty(&json!({"q": q.to_json(), "latex": text, "degree": q.degree()}))),
        Format::Latex => Ok(format!("{text}\n")),
        _ => Ok(format!("q(x) = {text}\ndegree {}\n", q.degree())),
    }
}

fn gap(a: &ProblemArgs) -> Result<String> {
    let format = a.rep.ty.format;
    only(format, &[Format::Text, Format::Json, Format::Latex], "gap")?;
    let p = problem(a)?;
    let rs = p.ws.root_system();
    let alphas = gap_functions(&p.ws, &p.setting, &p.form)?;
    if format == Format::Json {
        let list: Vec<Value> = alphas
            .iter()
            .map(|ag| {
                let cands: Vec<Value> = ag
                    .candidates
                    .iter()
                    .map(|c| {
                        json!({
                            "extremal": c.chain.to_json(|e| p.setting.to_user(rs, e), |i| p.setting.to_user_index(rs, i)),
                            "r_factors": c.gap.r.to_json(),
                            "r_latex": latex::scaled(&c.gap.r, &p.labels),
                            "identically_zero": c.gap.is_identically_zero(),
                            "criterion": c.criterion.name(),
                        })
                    })
                    .collect();
                json!({"alpha": p.setting.to_user_index(rs, ag.alpha) + 1, "candidates": cands})
            })
            .collect();
        return Ok(pretty(&json!({"theta": theta_json(&p.setting), "alpha_results": list})));
    }
    let mut out = String::new();
    for ag in &alphas {
        for c in &ag.candidates {
            let alpha = p.setting.to_user_index(rs, ag.alpha) + 1;
            let r = latex::scaled(&c.gap.r, &p.labels);
            if format == Format::Latex {
                let _ = writeln!(out, "r_{{\\alpha_{{{alpha}}}}}(\\lambda) = {r}");
            } else {
                let _ = writeln!(out, "alpha {alpha}: r = {r}  [{}]", c.criterion.name());
            }
        }
    }
    Ok(out)
}

fn certify(a: &CertifyArgs) -> Result<String> {
    let format = a.problem.rep.ty.format;
    only(format, &[Format::Text, Format::Json], "certify")?;
    let p = problem(&a.problem)?;
    let Some(lambda) = &p.lambda else {
        return invalid("certify needs --lambda");
    };
    let rs = p.ws.root_system();
    let cert = gap_certify(&p.ws, &p.setting, &p.form, lambda)?;
    let mut extra = Vec::new();
    if a.existence {
        let v = p.setting.param.vector(rs.dim(), lambda)?;
        let g = gapexist_check(rs, &p.setting.theta, &v, ENUMERATION_LIMIT)?;
        let typed = match prop_every_certify(&p.ws, &p.setting, &v, ENUMERATION_LIMIT) {
            Ok(t) => Some(t),
            Err(Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        extra.push(("existence", serde_json::to_value(&g).expect("serializable")));
        extra.push(("type_specific", serde_json::to_value(&typed).expect("serializable")));
    }
    if format == Format::Json {
        let mut v = cert.to_json(rs);
        for (k, x) in extra {
            v[k] = x;
        }
        return Ok(pretty(&v));
    }
    let mut out = cert.to_text(rs);
    for (k, x) in extra {
        let _ = writeln!(out, "{k} {x}");
    }
    Ok(out)
}

fn orbit(a: &ProblemArgs) -> Result<String> {
    let format = a.rep.ty.format;
    only(format, &[Format::Text, Format::Json, Format::Latex], "orbit")?;
    let p = problem(a)?;
    let lim = classical_limit(&min_poly_for(&p.ws, &p.setting, &p.form));
    let qbar = latex::factored(&lim.qbar, &p.labels);
    let rbar = latex::scaled(&lim.rbar, &p.labels);
    let ramified: Vec<String> = lim.ramified.iter().map(|m| latex::linear(m, &p.labels)).collect();
    match format {
        Format::Json => Ok(pretty(&json!({
            "theta": theta_json(&p.setting),
            "qbar": lim.qbar.to_json(),
            "qbar_latex": qbar,
            "rbar": lim.rbar.to_json(),
            "rbar_latex": rbar,
            "ramified": ramified,
        }))),
        Format::Latex => Ok(format!("{qbar}\n{rbar}\n")),
        _ => {
            let mut out = format!("qbar(x) = {qbar}\nrbar = {rbar}\n");
            if ramified.is_empty() {
                out.push_str("unramified\n");
            } else {
                let _ = writeln!(out, "ramified at {}", ramified.join("; "));
            }
            Ok(out)
        }
    }
}

fn tables_cmd(a: &TablesArgs) -> Result<(i32, String)> {
    only(a.format, &[Format::Text, Format::Json], "tables")?;
    let selected: Vec<_> = match (&a.family, a.all) {
        (Some(f), _) => tables().into_iter().filter(|t| t.type_label.eq_ignore_ascii_case(f)).collect(),
        (None, true) => tables(),
        (None, false) => return invalid("tables needs --family or --all"),
    };
    if selected.is_empty() {
        return precondition("no embedded table for this family");
    }
    let mut all_match = true;
    let mut out = String::new();
    let mut report = Vec::new();
    for t in &selected {
        for c in t.check_all()? {
            all_match &= c.matches;
            report.push(json!({"table": t.name, "row": c.row, "matches": c.matches, "expected": c.expected, "computed": c.computed}));
            if c.matches {
                let _ = writeln!(out, "{} row {}: ok", t.name, c.row);
            } else {
                let _ = writeln!(out, "{} row {}: MISMATCH\n  want {}\n  got  {}", t.name, c.row, c.expected, c.computed);
            }
        }
    }
    let code = if all_match { 0 } else { 1 };
    if a.format == Format::Json {
        return Ok((code, pretty(&json!({"all_match": all_match, "rows": report}))));
    }
    let _ = writeln!(out, "{}", if all_match { "all rows match" } else { "some rows differ" });
    Ok((code, out))
}
