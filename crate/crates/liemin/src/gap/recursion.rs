//! The polynomials `f(k, ℓ)` and `g(k, ℓ)` defined by recursion, with
//! their product closed forms.

use std::collections::HashMap;

use crate::exactalg::{int, MultiPoly};

pub const T_VAR: usize = 1;

pub fn s_var(nu: usize) -> usize {
    100 + nu
}

pub fn mu_var(nu: usize) -> usize {
    200 + nu
}

fn lin(terms: &[(usize, i64)]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for &(v, c) in terms {
        p = &p + &MultiPoly::var(v).scale(&int(c));
    }
    p
}

/// Memoized recursion tables.
#[derive(Default)]
pub struct Recursion {
    f: HashMap<(usize, usize), MultiPoly>,
    g: HashMap<(usize, usize), MultiPoly>,
}

impl Recursion {
    /// `f(0, ℓ) = 1`, `f(k, ℓ) = f(k−1, ℓ)(μ_ℓ − μ_k) + Σ_{ν<ℓ} s_ν f(k−1, ν)`.
    pub fn f(&mut self, k: usize, l: usize) -> MultiPoly {
        if let Some(p) = self.f.get(&(k, l)) {
            return p.clone();
        }
        let p = if k == 0 {
            MultiPoly::one()
        } else {
            let mut acc = &self.f(k - 1, l) * &lin(&[(mu_var(l), 1), (mu_var(k), -1)]);
            for nu in 1..l {
                acc = &acc + &(&MultiPoly::var(s_var(nu)) * &self.f(k - 1, nu));
            }
            acc
        };
        self.f.insert((k, l), p.clone());
        p
    }

    /// `g(1, ℓ) = 1`, `g(k, ℓ) = g(k−1, ℓ)(t − μ_k) + f(k−1, ℓ)`.
    pub fn g(&mut self, k: usize, l: usize) -> MultiPoly {
        assert!(k >= 1, "g is defined for k ≥ 1");
        if let Some(p) = self.g.get(&(k, l)) {
            return p.clone();
        }
        let p = if k == 1 {
            MultiPoly::one()
        } else {
            &(&self.g(k - 1, l) * &lin(&[(T_VAR, 1), (mu_var(k), -1)])) + &self.f(k - 1, l)
        };
        self.g.insert((k, l), p.clone());
        p
    }
}

/// `∏_{ν<ℓ} (μ_ℓ − μ_ν + s_ν)`.
pub fn f_closed(l: usize) -> MultiPoly {
    (1..l).fold(MultiPoly::one(), |acc, nu| &acc * &lin(&[(mu_var(l), 1), (mu_var(nu), -1), (s_var(nu), 1)]))
}

/// `∏_{ν<ℓ} (t − μ_ν + s_ν) ∏_{ν=ℓ+1}^{k} (t − μ_ν)` for `k ≥ ℓ`.
pub fn g_closed(k: usize, l: usize) -> MultiPoly {
    let head = (1..l).fold(MultiPoly::one(), |acc, nu| &acc * &lin(&[(T_VAR, 1), (mu_var(nu), -1), (s_var(nu), 1)]));
    (l + 1..=k).fold(head, |acc, nu| &acc * &lin(&[(T_VAR, 1), (mu_var(nu), -1)]))
}

/// One closed-form identity and whether its residual vanishes.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClosedFormCheck {
    pub identity: &'static str,
    pub k: usize,
    pub l: usize,
    pub zero_residual: bool,
}

/// All three identities for `1 ≤ ℓ ≤ max`, `0 ≤ k ≤ max`.
pub fn closed_form_residuals(max: usize) -> Vec<ClosedFormCheck> {
    let mut r = Recursion::default();
    let mut out = Vec::new();
    for l in 1..=max {
        for k in l..=max {
            out.push(ClosedFormCheck { identity: "f vanishes for k >= l", k, l, zero_residual: r.f(k, l).is_zero() });
        }
        let res = &r.f(l - 1, l) - &f_closed(l);
        out.push(ClosedFormCheck { identity: "f(l-1, l) product", k: l - 1, l, zero_residual: res.is_zero() });
        for k in l.max(1)..=max {
            let res = &r.g(k, l) - &g_closed(k, l);
            out.push(ClosedFormCheck { identity: "g(k, l) product", k, l, zero_residual: res.is_zero() });
        }
    }
    out
}
