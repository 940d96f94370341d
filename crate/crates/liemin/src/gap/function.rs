//! The gap functions `r_{α,ϖ_α}(λ)`, sufficient criteria for their
//! nonvanishing, and the certificate built from them.

use num::{Signed, Zero};
use serde_json::{json, Value};

use crate::branching::levi_lowest_weights;
use crate::error::{precondition, Result};
use crate::exactalg::{format_rational, Assignment, LinearForm, Rational, ScaledProduct};
use crate::latex::{self, Labels};
use crate::linalg::{self, Vector};
use crate::minpoly::{d_shift_raw, omega_entries};
use crate::params::{Parametrization, Setting};
use crate::rootsys::{Family, NormalizedForm, RootSystem, ThetaSubset};
use crate::weights::{leq, restriction, WeightSystem};

use super::chain::{extremal_low_weights, ExtremalChain};

/// `r = (first factor) · (second factor)`, each kept as its list of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapFunction {
    pub first: Vec<LinearForm>,
    pub second: Vec<LinearForm>,
    pub r: ScaledProduct,
}

impl GapFunction {
    pub fn first_identically_zero(&self) -> bool {
        self.first.iter().any(LinearForm::is_zero)
    }

    pub fn second_identically_zero(&self) -> bool {
        self.second.iter().any(LinearForm::is_zero)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.r.is_identically_zero()
    }

    pub fn eval(&self, a: &Assignment) -> Result<Rational> {
        self.r.eval(a)
    }
}

/// `r_{α,ϖ_α}` for the chain of an extremal low weight, `α ∈ Θ`.
pub fn gap_function(
    ws: &WeightSystem,
    ts: &ThetaSubset,
    param: &Parametrization,
    form: &NormalizedForm,
    chain: &ExtremalChain,
) -> Result<GapFunction> {
    let rs = ws.root_system();
    if !ts.contains(chain.alpha) {
        return precondition(format!("α{} is not in Θ", chain.alpha + 1));
    }
    let low = &ws.lowest().eps;
    let d = |w: &[Rational]| d_shift_raw(form, rs, low, w);
    let pair = |w: &[Rational]| param.pair_with(form, w);
    let entries = omega_entries(ws, ts, param, form);
    let top = chain.extremal();

    let mut omega: Vec<(LinearForm, Rational)> = Vec::new();
    let mut below: Vec<(LinearForm, Rational)> = Vec::new();
    for e in &entries {
        let p = (e.mu.clone(), e.c.clone());
        if leq(&e.weight, top) && !below.contains(&p) {
            below.push(p.clone());
        }
        if !omega.contains(&p) {
            omega.push(p);
        }
    }
    let raised = chain.raised(rs);
    let head = pair(&raised).plus_constant(&d(&raised));
    let first: Vec<LinearForm> =
        omega.iter().filter(|p| !below.contains(p)).map(|(mu, c)| (&head - mu).plus_constant(&-c)).collect();

    let in_levi_bottom = |i: usize| entries.iter().any(|e| e.weight.depth == chain.weights[i].depth);
    let top_eps = &top.eps;
    let tail = form.pair(rs.simple_root(chain.alpha), top_eps);
    let second: Vec<LinearForm> = (1..chain.weights.len())
        .filter(|&p| in_levi_bottom(p))
        .map(|p| {
            let prev = &chain.weights[p - 1].eps;
            let c = -&tail + d(top_eps) - d(&chain.weights[p].eps);
            pair(&linalg::sub(top_eps, prev)).plus_constant(&c)
        })
        .collect();
    let r = ScaledProduct::from_forms(Rational::from_integer(1.into()), first.iter().chain(&second).cloned());
    Ok(GapFunction { first, second, r })
}

/// A sufficient reason for `r_{α,ϖ_α} ≢ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// `{γ₁, …, γ_K} ⊂ Θ`.
    ChainInTheta,
    /// The Θ-component of α is ⊥ π̄, the rest of Θ is ⊥ the tail, and the
    /// tail `γ₁ … γ_{K−1}` is of type A.
    TailTypeA,
    Minuscule,
    MultiplicityFree,
    /// The restriction fiber of `ϖ_α` is one irreducible `g_Θ`-module.
    IrreducibleFiber,
    None,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::ChainInTheta => "chain-in-theta",
            Criterion::TailTypeA => "type-a-tail",
            Criterion::Minuscule => "minuscule",
            Criterion::MultiplicityFree => "multiplicity-free",
            Criterion::IrreducibleFiber => "irreducible-fiber",
            Criterion::None => "none",
        }
    }
}

/// The first sufficient criterion that applies to the chain.
pub fn nonvanishing_criteria(ws: &WeightSystem, ts: &ThetaSubset, chain: &ExtremalChain) -> Criterion {
    if chain.gammas.iter().all(|&g| ts.contains(g)) {
        return Criterion::ChainInTheta;
    }
    if tail_type_a(ws, ts, chain) {
        return Criterion::TailTypeA;
    }
    if ws.is_minuscule() {
        return Criterion::Minuscule;
    }
    if ws.is_multiplicity_free() {
        return Criterion::MultiplicityFree;
    }
    let key = restriction(ts, chain.extremal());
    let copies: u64 = levi_lowest_weights(ws, ts)
        .components
        .iter()
        .filter(|c| restriction(ts, &c.lowest) == key)
        .map(|c| c.count)
        .sum();
    if copies == 1 {
        return Criterion::IrreducibleFiber;
    }
    Criterion::None
}

fn tail_type_a(ws: &WeightSystem, ts: &ThetaSubset, chain: &ExtremalChain) -> bool {
    let rs = ws.root_system();
    let c = rs.cartan();
    let low = &ws.lowest().eps;
    let Some(component) = ts.components().iter().find(|comp| comp.contains(&chain.alpha)) else {
        return false;
    };
    if component.iter().any(|&b| !rs.pairing(low, b).is_zero()) {
        return false;
    }
    let k = chain.len();
    let tail = &chain.gammas[..k - 1];
    let rest_orthogonal = ts
        .indices()
        .iter()
        .filter(|b| !chain.gammas.contains(b))
        .all(|&b| tail.iter().all(|&g| c[b][g] == 0));
    let simply_laced = tail.windows(2).all(|w| c[w[0]][w[1]] == -1 && c[w[1]][w[0]] == -1);
    rest_orthogonal && simply_laced
}

/// `2⟨μ, β⟩/⟨β, β⟩ ∉ {−1, −2, …}` for every positive root β.
pub fn is_dominant_shifted(rs: &RootSystem, mu: &[Rational]) -> bool {
    rs.positive_roots().iter().all(|b| {
        let p = rs.coroot_pairing(mu, b);
        !(p.is_integer() && p.is_negative())
    })
}

/// `⟨μ, β⟩ ≠ 0` for every root β.
pub fn is_regular(rs: &RootSystem, mu: &[Rational]) -> bool {
    rs.positive_roots().iter().all(|b| !linalg::dot(mu, b).is_zero())
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub chain: ExtremalChain,
    pub gap: GapFunction,
    pub criterion: Criterion,
}

/// Every candidate `r_{α,ϖ_α}` for one `α ∈ Θ`, α in the Ψ numbering.
#[derive(Clone, Debug)]
pub struct AlphaGap {
    pub alpha: usize,
    pub candidates: Vec<Candidate>,
}

/// Symbolic gap functions for every `α ∈ Θ`.
pub fn gap_functions(ws: &WeightSystem, setting: &Setting, form: &NormalizedForm) -> Result<Vec<AlphaGap>> {
    let ts = &setting.theta;
    ts.indices()
        .iter()
        .map(|&alpha| {
            let candidates = extremal_low_weights(ws, alpha)
                .into_iter()
                .map(|chain| {
                    let gap = gap_function(ws, ts, &setting.param, form, &chain)?;
                    let criterion = nonvanishing_criteria(ws, ts, &chain);
                    Ok(Candidate { chain, gap, criterion })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AlphaGap { alpha, candidates })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    /// Some α has no candidate with `r(λ) ≠ 0`; the gap may still hold.
    NotCertified,
    /// Some α has only identically vanishing candidates.
    Uncertifiable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::NotCertified => "not_certified",
            Verdict::Uncertifiable => "uncertifiable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GapCertificate {
    pub setting: Setting,
    pub alphas: Vec<AlphaGap>,
    /// `r(λ)` per α and candidate.
    pub values: Vec<Vec<Rational>>,
    pub verdict: Verdict,
    /// `λ_Θ + ρ` dominant.
    pub dominant: bool,
    /// Certified and dominant: `I_{π,Θ}(λ)` is the annihilator.
    pub annihilator: bool,
}

pub fn gap_certify(ws: &WeightSystem, setting: &Setting, form: &NormalizedForm, a: &Assignment) -> Result<GapCertificate> {
    let rs = ws.root_system();
    let alphas = gap_functions(ws, setting, form)?;
    let values: Vec<Vec<Rational>> =
        alphas.iter().map(|ag| ag.candidates.iter().map(|c| c.gap.eval(a)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let certified = values.iter().all(|vs| vs.iter().any(|v| !v.is_zero()));
    let hopeless = alphas.iter().any(|ag| ag.candidates.iter().all(|c| c.gap.is_identically_zero()));
    let verdict = if certified {
        Verdict::Certified
    } else if hopeless {
        Verdict::Uncertifiable
    } else {
        Verdict::NotCertified
    };
    let lambda = setting.param.vector(rs.dim(), a)?;
    let dominant = is_dominant_shifted(rs, &linalg::add(&lambda, rs.rho()));
    Ok(GapCertificate { setting: setting.clone(), alphas, values, verdict, dominant, annihilator: certified && dominant })
}

impl GapCertificate {
    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let s = &self.setting;
        let labels = s.param.labels();
        let alpha_results: Vec<Value> = self
            .alphas
            .iter()
            .zip(&self.values)
            .map(|(ag, vs)| {
                let candidates: Vec<Value> = ag
                    .candidates
                    .iter()
                    .zip(vs)
                    .map(|(c, v)| {
                        json!({
                            "extremal": c.chain.to_json(|e| s.to_user(rs, e), |i| s.to_user_index(rs, i)),
                            "r_factors": c.gap.r.to_json(),
                            "r_latex": latex::scaled(&c.gap.r, &labels),
                            "identically_zero": c.gap.is_identically_zero(),
                            "criterion": c.criterion.name(),
                            "value": format_rational(v),
                        })
                    })
                    .collect();
                json!({"alpha": s.to_user_index(rs, ag.alpha) + 1, "candidates": candidates})
            })
            .collect();
        json!({
            "theta": s.user_theta.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "convention": s.convention.to_string(),
            "alpha_results": alpha_results,
            "verdict": self.verdict.name(),
            "dominant": self.dominant,
            "annihilator": self.annihilator,
        })
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        let s = &self.setting;
        let labels: Labels = s.param.labels();
        let mut out = String::new();
        for (ag, vs) in self.alphas.iter().zip(&self.values) {
            for (c, v) in ag.candidates.iter().zip(vs) {
                out.push_str(&format!(
                    "alpha {}: r = {}  [{}] value {}\n",
                    s.to_user_index(rs, ag.alpha) + 1,
                    latex::scaled(&c.gap.r, &labels),
                    c.criterion.name(),
                    format_rational(v)
                ));
            }
        }
        out.push_str(self.verdict.name());
        if self.annihilator {
            out.push_str(" (annihilator)");
        }
        out.push('\n');
        out
    }
}

/// `true` when `rs` is the adjoint representation of a simple algebra.
pub fn is_adjoint(ws: &WeightSystem) -> bool {
    let rs = ws.root_system();
    rs.family() != Family::Gl && ws.highest() == rs.highest_root()
}

/// Entries of the second factor in the form `⟨λ_Θ + ρ, γ_{n_i} + ⋯ + γ_{K−1}⟩`
/// valid when `2⟨π̄, γ₁⟩/⟨γ₁, γ₁⟩ = −1` and the chain is of type A (or B
/// with short `γ_K`, or G₂ with short `γ₂`).
pub fn second_factor_by_rho(
    ws: &WeightSystem,
    ts: &ThetaSubset,
    param: &Parametrization,
    form: &NormalizedForm,
    chain: &ExtremalChain,
) -> Option<Vec<LinearForm>> {
    let rs = ws.root_system();
    let low = &ws.lowest().eps;
    let c = rs.cartan();
    let g = &chain.gammas;
    let k = g.len();
    let inner_simple = g[..k.saturating_sub(1)].windows(2).all(|w| c[w[0]][w[1]] == -1 && c[w[1]][w[0]] == -1);
    let last_ok = k < 2 || (c[g[k - 1]][g[k - 2]] == -1 && c[g[k - 2]][g[k - 1]] <= -1);
    if !inner_simple || !last_ok || rs.pairing(low, g[0]) != Rational::from_integer((-1).into()) {
        return None;
    }
    let entries = omega_entries(ws, ts, param, form);
    let top = &chain.extremal().eps;
    let out = (1..chain.weights.len())
        .filter(|&p| entries.iter().any(|e| e.weight.depth == chain.weights[p].depth))
        .map(|p| {
            let diff: Vector = linalg::sub(top, &chain.weights[p - 1].eps);
            param.pair_with(form, &diff).plus_constant(&form.pair(rs.rho(), &diff))
        })
        .collect();
    Some(out)
}

/// Candidates for `α = α_{n−1}` in `sl_n`, `n = m₁ + 4`, with
/// `π̄ = −m₁Λ₁ − m₂Λ₂` and `Θ = Ψ ∖ {α₂}`: a family where one candidate has
/// identically vanishing first factor.
pub fn degenerate_sl_family(m1: u32, m2: u32) -> Result<(Setting, Vec<Candidate>)> {
    if m1 == 0 || m2 == 0 {
        return precondition("need m₁, m₂ ≥ 1");
    }
    let rank = m1 as usize + 3;
    let rs = std::sync::Arc::new(RootSystem::parse(&format!("A{rank}"))?);
    let mut labels = vec![0u32; rank];
    labels[rank - 1] = m1;
    labels[rank - 2] = m2;
    let spec = format!("fund:{}", labels.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
    let ws = WeightSystem::from_spec(rs.clone(), &spec)?;
    let theta: Vec<usize> = (0..rank).filter(|&j| j != 1).collect();
    let setting = Setting::fundamental(&rs, crate::params::Convention::Psi, &theta)?;
    let form = crate::rootsys::standard_form(&rs);
    let alpha = rank - 1;
    let candidates = gap_functions(&ws, &setting, &form)?
        .into_iter()
        .find(|ag| ag.alpha == alpha)
        .map(|ag| ag.candidates)
        .unwrap_or_default();
    Ok((setting, candidates))
}
