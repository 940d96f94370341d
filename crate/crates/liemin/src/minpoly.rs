//! Global minimal polynomials `q_{π,Θ}(x; λ)`, their evaluation and
//! refinement at numeric λ, characteristic polynomials, classical limits and
//! the closed forms for multiplicity-free, adjoint and minuscule `π`.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};
use rand::Rng;

use crate::branching::levi_lowest_weights;
use crate::error::{invalid, precondition, Result};
use crate::exactalg::{int, rat, Assignment, FactoredPoly, LinearForm, MultiPoly, Rational, ScaledProduct};
use crate::linalg::{self, Vector};
use crate::params::{check_diagram_automorphism, Parametrization, Setting};
use crate::rootsys::{NormalizedForm, RootSystem, ThetaSubset};
use crate::weights::{levi_decompose_adjoint, levi_decompose_minuscule, lt_theta, restriction, Weight, WeightSystem};

/// `½⟨low − ϖ, low + ϖ − 2ρ⟩` for an arbitrary lowest weight `low`.
pub fn d_shift_raw(form: &NormalizedForm, rs: &RootSystem, low: &[Rational], w: &[Rational]) -> Rational {
    let a = linalg::sub(low, w);
    let b = linalg::axpy(&linalg::add(low, w), &int(-2), rs.rho());
    form.pair(&a, &b) / int(2)
}

/// `D_π(ϖ) = ½⟨π̄ − ϖ, π̄ + ϖ − 2ρ⟩`.
pub fn d_shift(ws: &WeightSystem, form: &NormalizedForm, w: &[Rational]) -> Result<Rational> {
    if ws.find_eps(w).is_none() {
        return invalid("not a weight of the representation");
    }
    Ok(d_shift_raw(form, ws.root_system(), &ws.lowest().eps, w))
}

/// `⟨μ, μ + 2ρ⟩`
pub fn casimir_eigenvalue(form: &NormalizedForm, mu: &[Rational]) -> Rational {
    form.casimir(mu)
}

/// One element `ϖ ∈ W̄_Θ(π)` with its pair `(⟨λ_Θ, ϖ⟩, D_π(ϖ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaEntry {
    pub weight: Weight,
    pub restriction: Vec<i64>,
    pub mu: LinearForm,
    pub c: Rational,
}

impl OmegaEntry {
    pub fn root(&self) -> LinearForm {
        self.mu.plus_constant(&self.c)
    }
}

#[derive(Clone, Debug)]
pub struct MinPolyResult {
    pub q: FactoredPoly,
    /// `W̄_Θ(π)` in branching order, before merging equal pairs.
    pub entries: Vec<OmegaEntry>,
    /// `Ω_{π,Θ}` as a set.
    pub omega: Vec<(LinearForm, Rational)>,
    /// No two elements of `W̄_Θ(π)` share a pair.
    pub squarefree: bool,
}

pub fn omega_entries(ws: &WeightSystem, ts: &ThetaSubset, param: &Parametrization, form: &NormalizedForm) -> Vec<OmegaEntry> {
    let rs = ws.root_system();
    let low = &ws.lowest().eps;
    levi_lowest_weights(ws, ts)
        .lowest_weights()
        .map(|w| OmegaEntry {
            weight: w.clone(),
            restriction: restriction(ts, w),
            mu: param.pair_with(form, &w.eps),
            c: d_shift_raw(form, rs, low, &w.eps),
        })
        .collect()
}

fn collect_result(entries: Vec<OmegaEntry>) -> MinPolyResult {
    let mut omega: Vec<(LinearForm, Rational)> = Vec::new();
    for e in &entries {
        let p = (e.mu.clone(), e.c.clone());
        if !omega.contains(&p) {
            omega.push(p);
        }
    }
    let q = FactoredPoly::from_roots(omega.iter().map(|(m, c)| m.plus_constant(c)));
    let squarefree = omega.len() == entries.len();
    omega.sort_by(|a, b| a.0.plus_constant(&a.1).canonical_cmp(&b.0.plus_constant(&b.1)));
    MinPolyResult { q, entries, omega, squarefree }
}

/// `q_{π,Θ}(x; λ) = ∏_{(μ, C) ∈ Ω_{π,Θ}} (x − μ(λ) − C)` in the Ψ convention.
pub fn global_min_poly(ws: &WeightSystem, ts: &ThetaSubset, param: &Parametrization, form: &NormalizedForm) -> MinPolyResult {
    collect_result(omega_entries(ws, ts, param, form))
}

/// [`global_min_poly`] for a user setting (either convention).
pub fn min_poly_for(ws: &WeightSystem, setting: &Setting, form: &NormalizedForm) -> MinPolyResult {
    global_min_poly(ws, &setting.theta, &setting.param, form)
}

/// The polynomial of the variant for a diagram automorphism `τ` preserving
/// Θ: the parameters are restricted to the `τ`-fixed slice and equal pairs
/// merge.
pub fn tau_min_poly(
    ws: &WeightSystem,
    ts: &ThetaSubset,
    param: &Parametrization,
    form: &NormalizedForm,
    tau: &[usize],
) -> Result<MinPolyResult> {
    let rs = ws.root_system();
    check_diagram_automorphism(rs, tau)?;
    if ts.indices().iter().any(|&i| !ts.contains(tau[i])) {
        return precondition("the automorphism does not preserve Θ");
    }
    let reduced = param.tau_reduce(rs, tau)?;
    Ok(global_min_poly(ws, ts, &reduced, form))
}

/// A class of `W̄_Θ(π)` under `ϖ ~ ϖ′ ⇔ λ_Θ − ϖ ∈ W.(λ_Θ − ϖ′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageClass {
    /// Indices into [`MinPolyResult::entries`].
    pub members: Vec<usize>,
    pub value: Rational,
    /// Longest chain strictly increasing for `<_Θ` inside the class.
    pub kappa: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    /// Roots of `q_{π,Θ}(x; λ)` with multiplicity.
    pub roots: Vec<(Rational, u32)>,
    /// All roots simple, hence `q` is the minimal polynomial at λ.
    pub minimal: bool,
    pub classes: Vec<LinkageClass>,
    /// `∏ (x − value)^κ`, the exponent maximized over classes sharing a value.
    pub annihilator: Vec<(Rational, u32)>,
}

fn longest_chain(restrictions: &[&Vec<i64>]) -> usize {
    let n = restrictions.len();
    let mut order: Vec<usize> = (0..n).collect();
    // deeper restrictions first: a strict <_Θ predecessor is always deeper
    order.sort_by_key(|&i| -restrictions[i].iter().sum::<i64>());
    let mut best = vec![1usize; n];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if lt_theta(restrictions[j], restrictions[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Evaluate at a numeric λ, split `W̄_Θ(π)` into linkage classes and
/// compute the chain lengths `κ_ℓ`.
pub fn min_poly_at(
    res: &MinPolyResult,
    ws: &WeightSystem,
    param: &Parametrization,
    form: &NormalizedForm,
    a: &Assignment,
) -> Result<Evaluation> {
    let rs = ws.root_system();
    let roots = res.q.eval_at(a)?;
    let minimal = roots.iter().all(|(_, m)| *m == 1);
    let lambda = param.vector(rs.dim(), a)?;
    let shifted = linalg::add(&lambda, rs.rho());

    // norm first, then the dominant representative of the Weyl orbit
    let mut by_key: BTreeMap<(Rational, Vector), Vec<usize>> = BTreeMap::new();
    for (k, e) in res.entries.iter().enumerate() {
        let v = linalg::sub(&shifted, &e.weight.eps);
        let norm = form.pair(&v, &v);
        let (dom, _) = rs.to_dominant(&v);
        by_key.entry((norm, dom)).or_default().push(k);
    }
    let mut classes = Vec::new();
    for members in by_key.into_values() {
        let vals: Vec<Rational> = members.iter().map(|&k| res.entries[k].root().eval(a)).collect::<Result<_>>()?;
        assert!(vals.iter().all(|v| *v == vals[0]), "linked weights must share the root value");
        let rests: Vec<&Vec<i64>> = members.iter().map(|&k| &res.entries[k].restriction).collect();
        let kappa = longest_chain(&rests);
        classes.push(LinkageClass { members, value: vals[0].clone(), kappa });
    }
    classes.sort_by(|x, y| x.members.cmp(&y.members));
    let mut ann: BTreeMap<Rational, u32> = BTreeMap::new();
    for c in &classes {
        let e = ann.entry(c.value.clone()).or_insert(0);
        *e = (*e).max(c.kappa as u32);
    }
    Ok(Evaluation { roots, minimal, classes, annihilator: ann.into_iter().collect() })
}

/// One factor `x − ϖ − (⟨π, π+2ρ⟩ − ⟨ϖ, ϖ⟩)/2` of `q_π(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyFactor {
    pub weight: Vector,
    pub constant: Rational,
}

impl CharPolyFactor {
    /// The root with the coordinate functions `ε_i` as variables `i+1`.
    pub fn root(&self) -> LinearForm {
        LinearForm::from_parts(self.constant.clone(), self.weight.iter().enumerate().map(|(i, c)| (i + 1, c.clone())))
    }
}

/// `q_π(x)`, one factor per distinct weight.
pub fn char_poly(ws: &WeightSystem, form: &NormalizedForm) -> Vec<CharPolyFactor> {
    let top = form.casimir(ws.highest());
    ws.weights()
        .iter()
        .map(|w| CharPolyFactor { weight: w.eps.clone(), constant: (&top - form.pair(&w.eps, &w.eps)) / int(2) })
        .collect()
}

pub fn char_poly_factored(ws: &WeightSystem, form: &NormalizedForm) -> FactoredPoly {
    FactoredPoly::from_roots(char_poly(ws, form).iter().map(CharPolyFactor::root))
}

/// Substitute `ε_i ↦ ⟨λ_Θ + ρ, ε_i⟩` in `q_π`; at Θ = ∅ this is `q_{π,∅}`.
pub fn char_poly_shifted(ws: &WeightSystem, form: &NormalizedForm, param: &Parametrization) -> FactoredPoly {
    let rs = ws.root_system();
    let dim = rs.dim();
    let subs: Vec<LinearForm> = (0..dim)
        .map(|i| {
            let e = linalg::unit(dim, i);
            param.pair_with(form, &e).plus_constant(&form.pair(rs.rho(), &e))
        })
        .collect();
    let roots = char_poly(ws, form).into_iter().map(|f| {
        let mut r = LinearForm::constant(f.constant.clone());
        for (c, s) in f.weight.iter().zip(&subs) {
            r = &r + &s.scale(c);
        }
        r
    });
    FactoredPoly::from_roots(roots)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalLimit {
    /// `∏_{μ ∈ Ω̄} (x − μ(λ))` over distinct restrictions.
    pub qbar: FactoredPoly,
    /// `∏_{μ ≠ μ′} (μ − μ′)` over ordered pairs.
    pub rbar: ScaledProduct,
    /// Restrictions carrying more than one constant `C`.
    pub ramified: Vec<LinearForm>,
}

pub fn classical_limit(res: &MinPolyResult) -> ClassicalLimit {
    let mut fibers: Vec<(LinearForm, Vec<Rational>)> = Vec::new();
    for (m, c) in &res.omega {
        match fibers.iter_mut().find(|(f, _)| f == m) {
            Some((_, cs)) => cs.push(c.clone()),
            None => fibers.push((m.clone(), vec![c.clone()])),
        }
    }
    let qbar = FactoredPoly::from_roots(fibers.iter().map(|(m, _)| m.clone()));
    let mut diffs = Vec::new();
    for (i, (a, _)) in fibers.iter().enumerate() {
        for (j, (b, _)) in fibers.iter().enumerate() {
            if i != j {
                diffs.push(a - b);
            }
        }
    }
    let rbar = ScaledProduct::from_forms(Rational::one(), diffs);
    let ramified = fibers.into_iter().filter(|(_, cs)| cs.len() > 1).map(|(m, _)| m).collect();
    ClassicalLimit { qbar, rbar, ramified }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    MultiplicityFree,
    Adjoint,
    Minuscule,
}

impl std::str::FromStr for SpecialKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multiplicity-free" => Ok(SpecialKind::MultiplicityFree),
            "adjoint" => Ok(SpecialKind::Adjoint),
            "minuscule" => Ok(SpecialKind::Minuscule),
            _ => invalid(format!("unknown kind '{s}'")),
        }
    }
}

/// The closed forms for multiplicity-free, adjoint and minuscule `π`,
/// computed without the Levi branching used by [`global_min_poly`].
pub fn specialized_min_poly(
    ws: &WeightSystem,
    ts: &ThetaSubset,
    param: &Parametrization,
    form: &NormalizedForm,
    kind: SpecialKind,
) -> Result<FactoredPoly> {
    match kind {
        SpecialKind::MultiplicityFree => multiplicity_free_form(ws, ts, param, form),
        SpecialKind::Adjoint => adjoint_form(ws, ts, param, form),
        SpecialKind::Minuscule => minuscule_form(ws, ts, param, form),
    }
}

fn multiplicity_free_form(ws: &WeightSystem, ts: &ThetaSubset, param: &Parametrization, form: &NormalizedForm) -> Result<FactoredPoly> {
    if !ws.is_multiplicity_free() {
        return precondition("representation is not multiplicity free");
    }
    let rs = ws.root_system();
    let low = &ws.lowest().eps;
    let mut fibers: HashMap<Vec<i64>, Vec<&Weight>> = HashMap::new();
    for w in ws.weights() {
        fibers.entry(restriction(ts, w)).or_default().push(w);
    }
    let mut roots = Vec::new();
    for members in fibers.values() {
        let minimal: Vec<&&Weight> =
            members.iter().filter(|w| !members.iter().any(|v| crate::weights::lt(v, w))).collect();
        assert_eq!(minimal.len(), 1, "each fiber is an irreducible Levi module");
        let lam = &minimal[0].eps;
        roots.push(param.pair_with(form, lam).plus_constant(&d_shift_raw(form, rs, low, lam)));
    }
    let mut roots_dedup: Vec<LinearForm> = Vec::new();
    for r in roots {
        if !roots_dedup.contains(&r) {
            roots_dedup.push(r);
        }
    }
    Ok(FactoredPoly::from_roots(roots_dedup))
}

fn adjoint_form(ws: &WeightSystem, ts: &ThetaSubset, param: &Parametrization, form: &NormalizedForm) -> Result<FactoredPoly> {
    let rs = ws.root_system();
    if ws.highest() != rs.highest_root() {
        return precondition("representation is not the adjoint representation");
    }
    let half = rat(1, 2);
    let mut roots = vec![LinearForm::constant(half.clone())];
    let lev = levi_decompose_adjoint(rs, ts);
    for comp in &lev.components {
        // maximal root of the component and its ρ
        let sub = rs.theta(comp)?;
        let idx = sub.positive_root_indices();
        let top = idx
            .iter()
            .map(|&k| (&rs.positive_coords()[k], &rs.positive_roots()[k]))
            .max_by_key(|(c, _)| c.iter().sum::<i64>())
            .expect("nonempty component")
            .1;
        let c = form.pair(top, &linalg::axpy(top, &int(2), sub.rho_levi()));
        let r = LinearForm::constant((Rational::one() - c) / int(2));
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    for g in &lev.grades {
        let am = &g.lowest;
        let lin = param.pair_with(form, am);
        let cst = form.pair(rs.rho(), am) + (Rational::one() - form.pair(am, am)) / int(2);
        let r = lin.plus_constant(&cst);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    Ok(FactoredPoly::from_roots(roots))
}

fn minuscule_form(ws: &WeightSystem, ts: &ThetaSubset, param: &Parametrization, form: &NormalizedForm) -> Result<FactoredPoly> {
    let rs = ws.root_system();
    let pi = ws.highest();
    let tops = levi_decompose_minuscule(ws, ts)?;
    let shift = linalg::sub(ts.rho_complement(), ts.rho_levi());
    let mut roots = Vec::new();
    for mu in &tops {
        let (dom, word) = rs.to_dominant(mu);
        assert_eq!(&dom, pi, "Levi highest weights lie in the orbit of π");
        // ⟨w(λ_Θ + ρ_Θ − ρ(Θ)) + ρ, π⟩ with w μ = π
        let lin = LinearForm::from_parts(
            Rational::zero(),
            param.params().iter().map(|p| (p.var, form.pair(&rs.apply_word(&word, &p.basis), pi))),
        );
        let cst = form.pair(&linalg::add(&rs.apply_word(&word, &shift), rs.rho()), pi);
        let r = lin.plus_constant(&cst);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    Ok(FactoredPoly::from_roots(roots))
}

/// `T^{(k)} = Σ m_π(ϖ) ϖ^k` with the coordinate functions `ε_i` as
/// variables `i+1`.
pub fn power_sums(ws: &WeightSystem, k: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for w in ws.weights() {
        let lin = LinearForm::from_parts(Rational::zero(), w.eps.iter().enumerate().map(|(i, c)| (i + 1, c.clone())));
        out = &out + &lin.to_multipoly().pow(k).scale(&int(w.mult as i64));
    }
    out
}

/// Outcome of the Jacobian test for a family of invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationHeuristic {
    pub jacobian_rank: usize,
    pub independent: bool,
    /// `∏ deg = |W|`, which together with independence means generation.
    pub degree_product_matches: bool,
}

impl GenerationHeuristic {
    pub fn generates(&self) -> bool {
        self.independent && self.degree_product_matches
    }
}

/// Rank of `(∂T_a/∂α_i)` at a random point of the Cartan subalgebra
/// (including the center for `gl_n`). Heuristic: a rank drop at the sample
/// point can be accidental.
pub fn generation_heuristic<R: Rng>(rs: &RootSystem, invariants: &[(MultiPoly, u32)], rng: &mut R) -> GenerationHeuristic {
    let dim = rs.dim();
    let mut dirs: Vec<Vector> = rs.simple_roots().to_vec();
    dirs.extend(rs.center_directions().iter().cloned());
    let mut point = linalg::zeros(dim);
    for d in &dirs {
        let c = Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=7).into());
        point = linalg::axpy(&point, &c, d);
    }
    let a: Assignment = point.iter().enumerate().map(|(i, c)| (i + 1, c.clone())).collect();
    let mut jac: Vec<Vec<Rational>> = Vec::new();
    for (p, _) in invariants {
        let grads: Vec<Rational> =
            (0..dim).map(|i| p.derivative(i + 1).eval(&a).expect("all coordinates assigned")).collect();
        jac.push(dirs.iter().map(|d| linalg::dot(&grads, d)).collect());
    }
    let jacobian_rank = linalg::rank(&jac);
    let independent = jacobian_rank == invariants.len();
    let prod: u64 = invariants.iter().map(|(_, d)| *d as u64).product();
    let degree_product_matches = invariants.len() == dirs.len() && prod == rs.weyl_order();
    GenerationHeuristic { jacobian_rank, independent, degree_product_matches }
}
