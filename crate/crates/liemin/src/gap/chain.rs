//! Extremal low weights and the simple-root chains leading to them.

use num::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::exactalg::format_rational;
use crate::linalg::{self, Vector};
use crate::rootsys::RootSystem;
use crate::weights::{leq, lt, Weight, WeightSystem};

/// `ϖ₁ = π̄ → ϖ₂ → ⋯ → ϖ_K = ϖ_α`, with `ϖ_{i+1} = ϖ_i + γ_i` and `γ_K = α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalChain {
    pub alpha: usize,
    pub weights: Vec<Weight>,
    pub gammas: Vec<usize>,
}

impl ExtremalChain {
    pub fn extremal(&self) -> &Weight {
        self.weights.last().expect("nonempty chain")
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// `ϖ′_α = ϖ_α + α`.
    pub fn raised(&self, rs: &RootSystem) -> Vector {
        linalg::add(&self.extremal().eps, rs.simple_root(self.alpha))
    }

    /// Checks the chain properties of an extremal low weight.
    pub fn check_invariants(&self, ws: &WeightSystem) -> Result<()> {
        let rs = ws.root_system();
        let k = self.len();
        let fail = |what: &str| invalid(format!("chain to α{} violates {what}", self.alpha + 1));
        if self.weights.len() != k || k == 0 || self.gammas[k - 1] != self.alpha {
            return fail("shape");
        }
        let low = ws.lowest();
        let height = low.height_below_top() - self.extremal().height_below_top();
        if self.weights[0] != *low || height + 1 != k as i64 {
            return fail("ϖ₁ = π̄ and K = |ϖ_α − π̄| + 1");
        }
        for i in 0..k {
            if !rs.pairing(&self.weights[i].eps, self.gammas[i]).is_negative() {
                return fail("⟨ϖ_i, γ_i⟩ < 0");
            }
            for j in i + 1..k {
                if !rs.pairing(&self.weights[i].eps, self.gammas[j]).is_zero() {
                    return fail("⟨ϖ_i, γ_j⟩ = 0 for i < j");
                }
            }
            for j in 0..k {
                let adjacent = i == j || rs.cartan()[self.gammas[i]][self.gammas[j]] != 0;
                if adjacent != (i.abs_diff(j) <= 1) {
                    return fail("⟨γ_i, γ_j⟩ ≠ 0 iff |i − j| ≤ 1");
                }
            }
            if self.weights[i].mult != 1 {
                return fail("multiplicity one");
            }
            if !is_extremal(ws, &self.weights[i], self.gammas[i]) {
                return fail("ϖ_i extremal with respect to γ_i");
            }
        }
        let below: Vec<&Weight> = ws.weights().iter().filter(|w| lt(w, self.extremal())).collect();
        if below.len() != k - 1 || below.iter().any(|w| !self.weights[..k - 1].contains(w)) {
            return fail("{ϖ₁, …, ϖ_{K−1}} = {ϖ′ < ϖ_α}");
        }
        Ok(())
    }

    pub fn to_json(&self, eps: impl Fn(&Vector) -> Vector, index: impl Fn(usize) -> usize) -> Value {
        let show = |v: &Vector| eps(v).iter().map(format_rational).collect::<Vec<_>>();
        json!({
            "alpha": index(self.alpha) + 1,
            "extremal": show(&self.extremal().eps),
            "chain": self.gammas.iter().map(|&g| index(g) + 1).collect::<Vec<_>>(),
        })
    }
}

/// `w` is ≤-minimal among the weights not orthogonal to `α`.
pub fn is_extremal(ws: &WeightSystem, w: &Weight, alpha: usize) -> bool {
    let rs = ws.root_system();
    let moves = |v: &Weight| !rs.pairing(&v.eps, alpha).is_zero();
    moves(w) && !ws.weights().iter().any(|v| moves(v) && lt(v, w))
}

/// All extremal low weights for `α`, found from the Dynkin diagram: a chain
/// is a path `γ₁ … γ_K = α` with `⟨π̄, γ₁⟩ < 0` and `π̄ ⊥ γ₂, …, γ_K`.
pub fn extremal_low_weights(ws: &WeightSystem, alpha: usize) -> Vec<ExtremalChain> {
    let rs = ws.root_system();
    let low = ws.lowest();
    let starts: Vec<usize> = (0..rs.rank()).filter(|&g| rs.pairing(&low.eps, g).is_negative()).collect();
    let mut out = Vec::new();
    for &start in &starts {
        let Some(path) = dynkin_path(rs, start, alpha) else { continue };
        if path[1..].iter().any(|&g| !rs.pairing(&low.eps, g).is_zero()) {
            continue;
        }
        let mut weights = vec![low.clone()];
        for &g in &path[..path.len() - 1] {
            let next = linalg::add(&weights.last().expect("nonempty").eps, rs.simple_root(g));
            let w = ws.find_eps(&next).expect("chain weights lie in the weight system");
            weights.push(w.clone());
        }
        out.push(ExtremalChain { alpha, weights, gammas: path });
    }
    out.sort_by_key(|c| c.extremal().depth.clone());
    out
}

/// Brute-force definition: ≤-minimal weights with `⟨ϖ, α⟩ ≠ 0`.
pub fn extremal_weights_by_scan(ws: &WeightSystem, alpha: usize) -> Vec<&Weight> {
    ws.weights().iter().filter(|w| is_extremal(ws, w, alpha)).collect()
}

/// The unique path between two nodes of the (tree) Dynkin diagram.
fn dynkin_path(rs: &RootSystem, from: usize, to: usize) -> Option<Vec<usize>> {
    let r = rs.rank();
    let mut prev = vec![usize::MAX; r];
    let mut seen = vec![false; r];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        for v in 0..r {
            if v != u && !seen[v] && rs.cartan()[u][v] != 0 {
                seen[v] = true;
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = vec![to];
    while *path.last().expect("nonempty") != from {
        path.push(prev[*path.last().expect("nonempty")]);
    }
    path.reverse();
    Some(path)
}

/// Chain weights `{ϖ ≤ ϖ_α}` in increasing order, read off the poset.
pub fn weights_below(ws: &WeightSystem, top: &Weight) -> Vec<Weight> {
    let mut v: Vec<Weight> = ws.weights().iter().filter(|w| leq(w, top)).cloned().collect();
    v.sort_by_key(|w| std::cmp::Reverse(w.height_below_top()));
    v
}
