//! Restriction to the Levi subalgebra `g_Θ` and a Brauer–Klimyk tensor
//! product oracle.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::error::{precondition, Result};
use crate::exactalg::{int, Rational};
use crate::linalg::{self, Vector};
use crate::rootsys::{NormalizedForm, RootSystem, ThetaSubset};
use crate::weights::{Weight, WeightSystem};

/// One isotypic piece of `π|_{g_Θ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    pub highest: Weight,
    pub lowest: Weight,
    pub count: u64,
    pub levi_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingResult {
    pub theta: Vec<usize>,
    pub components: Vec<LeviComponent>,
}

impl BranchingResult {
    pub fn total_dim(&self) -> u64 {
        self.components.iter().map(|c| c.count * c.levi_dim).sum()
    }

    pub fn lowest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.components.iter().map(|c| &c.lowest)
    }

    pub fn highest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.components.iter().map(|c| &c.highest)
    }
}

fn labels_of(rs: &RootSystem, top: &[i64], depth: &[i64]) -> Vec<i64> {
    let c = rs.cartan();
    (0..rs.rank())
        .map(|j| top[j] - (0..rs.rank()).map(|i| depth[i] * c[i][j]).sum::<i64>())
        .collect()
}

/// Fold `(depth, labels)` into the Θ-dominant chamber under the
/// `ρ(Θ)`-shifted action. `None` when the shifted point lies on a wall.
fn levi_dot_fold(rs: &RootSystem, theta: &[usize], depth: &mut [i64], labels: &mut [i64]) -> Option<i64> {
    let c = rs.cartan();
    let mut sign = 1;
    while let Some(&i) = theta.iter().find(|&&i| labels[i] < 0) {
        if labels[i] == -1 {
            return None;
        }
        let t = labels[i] + 1;
        depth[i] += t;
        for j in 0..rs.rank() {
            labels[j] -= t * c[i][j];
        }
        sign = -sign;
    }
    Some(sign)
}

/// Decomposition of `π|_{g_Θ}` through the alternating sum over `W_Θ`.
pub fn levi_lowest_weights(ws: &WeightSystem, ts: &ThetaSubset) -> BranchingResult {
    let rs = ws.root_system();
    let top = ws.highest_labels();
    let c = rs.cartan();
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    for w in ws.weights() {
        let mut d = w.depth.clone();
        let mut l = labels_of(rs, top, &d);
        if let Some(sign) = levi_dot_fold(rs, ts.indices(), &mut d, &mut l) {
            *acc.entry(d).or_insert(0) += sign * w.mult as i64;
        }
    }
    let mut components = Vec::new();
    for (d, n) in acc {
        assert!(n >= 0, "negative Levi multiplicity");
        if n == 0 {
            continue;
        }
        let highest = ws.get(&d).expect("Levi highest weight is a weight").clone();
        let mut ld = d.clone();
        let mut ll = labels_of(rs, top, &ld);
        while let Some(&i) = ts.indices().iter().find(|&&i| ll[i] > 0) {
            let s = ll[i];
            ld[i] += s;
            for j in 0..rs.rank() {
                ll[j] -= s * c[i][j];
            }
        }
        let lowest = ws.get(&ld).expect("Levi lowest weight is a weight").clone();
        let levi_dim = ts.levi_dimension(rs, &highest.eps);
        components.push(LeviComponent { highest, lowest, count: n as u64, levi_dim });
    }
    components.sort_by(|a, b| {
        let ka = (-a.lowest.height_below_top(), a.lowest.depth.clone());
        let kb = (-b.lowest.height_below_top(), b.lowest.depth.clone());
        ka.cmp(&kb)
    });
    let out = BranchingResult { theta: ts.indices().to_vec(), components };
    assert_eq!(out.total_dim(), ws.dim(), "Levi branching loses dimension");
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecomposition {
    /// Highest weights with multiplicities, sorted.
    pub components: Vec<(Vector, u64)>,
}

impl TensorDecomposition {
    pub fn total_dim(&self, rs: &RootSystem) -> u64 {
        self.components.iter().map(|(h, m)| m * rs.weyl_dimension(h)).sum()
    }
}

/// `V(a) ⊗ V(b)` by folding `b + ν` over the weights `ν` of `a`.
pub fn klimyk_tensor(a: &WeightSystem, b: &WeightSystem) -> TensorDecomposition {
    let rs = a.root_system();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let mut acc: BTreeMap<Vector, i64> = BTreeMap::new();
    for w in a.weights() {
        let mut v = linalg::add(b.highest(), &w.eps);
        let mut l: Vec<i64> = rs.integral_labels(&v).expect("integral");
        let mut sign = 1;
        let mut singular = false;
        while let Some(&i) = all.iter().find(|&&i| l[i] < 0) {
            if l[i] == -1 {
                singular = true;
                break;
            }
            let t = l[i] + 1;
            v = linalg::axpy(&v, &int(-t), rs.simple_root(i));
            for j in 0..rs.rank() {
                l[j] -= t * rs.cartan()[i][j];
            }
            sign = -sign;
        }
        if !singular {
            *acc.entry(v).or_insert(0) += sign * w.mult as i64;
        }
    }
    let components = acc
        .into_iter()
        .filter(|(_, n)| *n != 0)
        .map(|(h, n)| {
            assert!(n > 0, "negative tensor multiplicity");
            (h, n as u64)
        })
        .collect();
    TensorDecomposition { components }
}

/// Hypothesis of the parabolic character identity: `Λ` dominant integral,
/// `⟨Λ, α⟩ = 0` on Θ, and `Λ + ϖ` dominant on Ψ∖Θ for every highest weight
/// `ϖ` of `π*|_{g_Θ}`.
pub fn parabolic_hypothesis(dual: &WeightSystem, lambda: &[Rational], ts: &ThetaSubset) -> Result<BranchingResult> {
    let rs = dual.root_system();
    match rs.integral_labels(lambda) {
        Some(l) if l.iter().all(|x| *x >= 0) => {}
        _ => return precondition("Λ is not dominant integral"),
    }
    if ts.indices().iter().any(|&i| !rs.pairing(lambda, i).is_zero()) {
        return precondition("Λ is not orthogonal to Θ");
    }
    let br = levi_lowest_weights(dual, ts);
    for h in br.highest_weights() {
        let s = linalg::add(lambda, &h.eps);
        if ts.complement(rs).iter().any(|&j| rs.pairing(&s, j) < Rational::zero()) {
            return precondition("Λ + ϖ fails to be dominant outside Θ");
        }
    }
    Ok(br)
}

/// `χ_{π*} χ_Λ = Σ m_{π*,Θ}(ϖ) χ_{Λ+ϖ}` under [`parabolic_hypothesis`].
pub fn tensor_with_parabolic_character(dual: &WeightSystem, lambda: &[Rational], ts: &ThetaSubset) -> Result<TensorDecomposition> {
    let br = parabolic_hypothesis(dual, lambda, ts)?;
    let mut acc: BTreeMap<Vector, u64> = BTreeMap::new();
    for c in &br.components {
        *acc.entry(linalg::add(lambda, &c.highest.eps)).or_insert(0) += c.count;
    }
    Ok(TensorDecomposition { components: acc.into_iter().collect() })
}

/// `{⟨Λ, ϖ⟩ + D_π(ϖ) : ϖ ∈ W̄_Θ(π)}`, sorted and deduplicated.
pub fn eigenvalue_set(ws: &WeightSystem, ts: &ThetaSubset, form: &NormalizedForm, lambda: &[Rational]) -> Vec<Rational> {
    let br = levi_lowest_weights(ws, ts);
    let low = &ws.lowest().eps;
    let mut out: Vec<Rational> = br
        .lowest_weights()
        .map(|w| form.pair(lambda, &w.eps) + crate::minpoly::d_shift_raw(form, ws.root_system(), low, &w.eps))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The same set from the highest weights of `π*|_{g_Θ}`:
/// `{−⟨Λ, ϖ⟩ + ½⟨π* − ϖ, π* + ϖ + 2ρ⟩}`.
pub fn eigenvalue_set_dual(ws: &WeightSystem, ts: &ThetaSubset, form: &NormalizedForm, lambda: &[Rational]) -> Result<Vec<Rational>> {
    let dual = ws.dual()?;
    let rs = ws.root_system();
    let br = levi_lowest_weights(&dual, ts);
    let top = dual.highest();
    let mut out: Vec<Rational> = br
        .highest_weights()
        .map(|w| {
            let a = linalg::sub(top, &w.eps);
            let b = linalg::axpy(&linalg::add(top, &w.eps), &int(2), rs.rho());
            -form.pair(lambda, &w.eps) + form.pair(&a, &b) / int(2)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Casimir eigenvalues `½(c(Λ) + c(π*) − c(ν))` over the components `ν` of
/// `π* ⊗ V_Λ`, computed with Klimyk.
pub fn klimyk_eigenvalues(ws: &WeightSystem, form: &NormalizedForm, lambda: &[Rational]) -> Result<Vec<Rational>> {
    let dual = ws.dual()?;
    let vl = WeightSystem::new(ws.root_system_arc(), lambda.to_vec())?;
    let dec = klimyk_tensor(&dual, &vl);
    let base = form.casimir(lambda) + form.casimir(dual.highest());
    let mut out: Vec<Rational> = dec.components.iter().map(|(h, _)| (&base - form.casimir(h)) / int(2)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
