//! Linkage between the blocks of a `gl_n` parabolic: when a simple
//! transposition inside a block is absorbed by `W(Θ)`.

use std::collections::{BTreeSet, HashSet};

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exactalg::{int, Rational};

/// Result for block `j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLinkage {
    pub block: usize,
    /// Some `(ν, ν+1)λ̄` with `ν, ν+1` in block `j` lies in `W(Θ)λ̄`.
    pub by_orbit: bool,
    /// Some block `k` meets `Λ_j` with the ordering condition.
    pub by_sets: bool,
}

/// `λ̄_ν = λ_k + (ν − 1) − (n − 1)/2` for `ν` in block `k`.
pub fn gl_bar_lambda(ends: &[usize], lambda: &[Rational]) -> Result<Vec<Rational>> {
    if ends.len() != lambda.len() || ends.is_empty() || ends.windows(2).any(|w| w[0] >= w[1]) || ends[0] == 0 {
        return invalid("need strictly increasing block ends and one λ per block");
    }
    let n = *ends.last().expect("nonempty");
    let mut out = Vec::with_capacity(n);
    let mut k = 0;
    for nu in 1..=n {
        if nu > ends[k] {
            k += 1;
        }
        out.push(&lambda[k] + int(nu as i64 - 1) - Rational::new((n as i64 - 1).into(), 2.into()));
    }
    Ok(out)
}

fn start(ends: &[usize], k: usize) -> usize {
    if k == 0 {
        0
    } else {
        ends[k - 1]
    }
}

/// `W(Θ)λ̄`: every arrangement keeping each block's entries in order.
pub fn coset_orbit(ends: &[usize], bar: &[Rational]) -> HashSet<Vec<Rational>> {
    let n = bar.len();
    let sizes: Vec<usize> = (0..ends.len()).map(|k| ends[k] - start(ends, k)).collect();
    let mut out = HashSet::new();
    let mut used = vec![0usize; sizes.len()];
    let mut current = Vec::with_capacity(n);
    fn rec(
        ends: &[usize],
        bar: &[Rational],
        sizes: &[usize],
        used: &mut Vec<usize>,
        current: &mut Vec<Rational>,
        out: &mut HashSet<Vec<Rational>>,
    ) {
        if current.len() == bar.len() {
            out.insert(current.clone());
            return;
        }
        for k in 0..sizes.len() {
            if used[k] < sizes[k] {
                current.push(bar[start(ends, k) + used[k]].clone());
                used[k] += 1;
                rec(ends, bar, sizes, used, current, out);
                used[k] -= 1;
                current.pop();
            }
        }
    }
    rec(ends, bar, &sizes, &mut used, &mut current, &mut out);
    out
}

/// Both sides of the block-linkage equivalence for every block.
pub fn gln_linkage_check(ends: &[usize], lambda: &[Rational]) -> Result<Vec<BlockLinkage>> {
    let bar = gl_bar_lambda(ends, lambda)?;
    let orbit = coset_orbit(ends, &bar);
    let sets: Vec<BTreeSet<Rational>> = (0..ends.len()).map(|k| bar[start(ends, k)..ends[k]].iter().cloned().collect()).collect();
    Ok((0..ends.len())
        .map(|j| {
            let by_orbit = (start(ends, j) + 1..ends[j]).any(|nu| {
                let mut t = bar.clone();
                t.swap(nu - 1, nu);
                orbit.contains(&t)
            });
            let by_sets = (0..ends.len()).any(|k| linked(&sets[j], &sets[k], k as i64 - j as i64));
            BlockLinkage { block: j + 1, by_orbit, by_sets }
        })
        .collect())
}

/// `Λ_k ∩ Λ_j ≠ ∅`, `Λ_j ⊄ Λ_k`, and `(μ′ − μ)(k − j) > 0` for
/// `μ ∈ Λ_j ∖ Λ_k`, `μ′ ∈ Λ_k`.
fn linked(lj: &BTreeSet<Rational>, lk: &BTreeSet<Rational>, k_minus_j: i64) -> bool {
    if lj.is_disjoint(lk) || lj.is_subset(lk) {
        return false;
    }
    let sign = int(k_minus_j);
    lj.difference(lk).all(|m| lk.iter().all(|mp| {
        let v = (mp - m) * &sign;
        !v.is_zero() && v.is_positive()
    }))
}
