//! Weight systems of irreducible representations (Freudenthal), the order
//! `≤` and its restriction `≤_Θ`, and minuscule / adjoint Levi data.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{invalid, precondition, Result};
use crate::exactalg::{int, Rational};
use crate::linalg::{self, dot, Vector};
use crate::rootsys::{RootSystem, ThetaSubset};

/// One weight `ϖ = π − Σ depth_i α_i` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub eps: Vector,
    pub depth: Vec<i64>,
    pub mult: u64,
}

impl Weight {
    pub fn height_below_top(&self) -> i64 {
        self.depth.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    rs: Arc<RootSystem>,
    highest: Vector,
    labels: Vec<i64>,
    weights: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
    lowest: usize,
    dim: u64,
}

fn labels_after(rs: &RootSystem, top: &[i64], depth: &[i64]) -> Vec<i64> {
    let c = rs.cartan();
    (0..rs.rank())
        .map(|j| top[j] - (0..rs.rank()).map(|i| depth[i] * c[i][j]).sum::<i64>())
        .collect()
}

/// Reflect `(depth, labels)` into the dominant chamber.
fn dominant_depth(rs: &RootSystem, depth: &[i64], labels: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let c = rs.cartan();
    let mut d = depth.to_vec();
    let mut l = labels.to_vec();
    while let Some(i) = (0..rs.rank()).find(|&i| l[i] < 0) {
        let s = l[i];
        d[i] += s;
        for j in 0..rs.rank() {
            l[j] -= s * c[i][j];
        }
    }
    (d, l)
}

impl WeightSystem {
    pub fn new(rs: Arc<RootSystem>, highest: Vector) -> Result<Self> {
        if highest.len() != rs.dim() {
            return invalid("highest weight has the wrong length");
        }
        let Some(top) = rs.integral_labels(&highest) else {
            return invalid("highest weight is not integral");
        };
        if top.iter().any(|l| *l < 0) {
            return precondition("highest weight is not dominant");
        }
        let r = rs.rank();
        let eps_of = |depth: &[i64]| -> Vector {
            let mut v = highest.clone();
            for (i, k) in depth.iter().enumerate() {
                if *k != 0 {
                    v = linalg::axpy(&v, &int(-k), rs.simple_root(i));
                }
            }
            v
        };

        // dominant weights below π
        let mut dominant: Vec<Vec<i64>> = vec![vec![0; r]];
        let mut seen: HashSet<Vec<i64>> = dominant.iter().cloned().collect();
        let mut k = 0;
        while k < dominant.len() {
            let d = dominant[k].clone();
            for c in rs.positive_coords() {
                let nd: Vec<i64> = d.iter().zip(c).map(|(a, b)| a + b).collect();
                if seen.contains(&nd) {
                    continue;
                }
                if labels_after(&rs, &top, &nd).iter().all(|l| *l >= 0) {
                    seen.insert(nd.clone());
                    dominant.push(nd);
                }
            }
            k += 1;
        }
        dominant.sort_by_key(|d| (d.iter().sum::<i64>(), d.clone()));

        // Freudenthal recursion over dominant weights
        let shifted_top = linalg::add(&highest, rs.rho());
        let top_norm = dot(&shifted_top, &shifted_top);
        let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
        for d in &dominant {
            if d.iter().all(|x| *x == 0) {
                mult.insert(d.clone(), 1);
                continue;
            }
            let mu = eps_of(d);
            let mut num = Rational::zero();
            for (c, alpha) in rs.positive_coords().iter().zip(rs.positive_roots()) {
                let mut kk = 1i64;
                loop {
                    let nd: Vec<i64> = d.iter().zip(c).map(|(a, b)| a - kk * b).collect();
                    if nd.iter().any(|x| *x < 0) {
                        break;
                    }
                    let (dd, _) = dominant_depth(&rs, &nd, &labels_after(&rs, &top, &nd));
                    let m = match mult.get(&dd) {
                        Some(m) if dd.iter().all(|x| *x >= 0) => *m,
                        _ => break,
                    };
                    let nu = linalg::axpy(&mu, &int(kk), alpha);
                    num += dot(&nu, alpha) * int(m as i64);
                    kk += 1;
                }
            }
            let shifted = linalg::add(&mu, rs.rho());
            let den = &top_norm - dot(&shifted, &shifted);
            let m = int(2) * num / den;
            let m = m.to_integer();
            let m: u64 = m.try_into().unwrap_or(0);
            mult.insert(d.clone(), m);
        }

        // spread over Weyl orbits
        let c = rs.cartan();
        let mut all: Vec<(Vec<i64>, u64)> = Vec::new();
        for d in &dominant {
            let m = mult[d];
            if m == 0 {
                continue;
            }
            let mut orbit = vec![(d.clone(), labels_after(&rs, &top, d))];
            let mut in_orbit: HashSet<Vec<i64>> = [d.clone()].into_iter().collect();
            let mut k = 0;
            while k < orbit.len() {
                let (od, ol) = orbit[k].clone();
                for i in 0..r {
                    if ol[i] > 0 {
                        let mut nd = od.clone();
                        nd[i] += ol[i];
                        if in_orbit.insert(nd.clone()) {
                            let nl: Vec<i64> = (0..r).map(|j| ol[j] - ol[i] * c[i][j]).collect();
                            orbit.push((nd, nl));
                        }
                    }
                }
                k += 1;
            }
            all.extend(orbit.into_iter().map(|(d, _)| (d, m)));
        }
        all.sort_by_key(|(d, _)| (d.iter().sum::<i64>(), d.clone()));
        let weights: Vec<Weight> = all.into_iter().map(|(d, m)| Weight { eps: eps_of(&d), depth: d, mult: m }).collect();
        let index: HashMap<Vec<i64>, usize> = weights.iter().enumerate().map(|(i, w)| (w.depth.clone(), i)).collect();
        let dim: u64 = weights.iter().map(|w| w.mult).sum();
        let expected = rs.weyl_dimension(&highest);
        assert_eq!(dim, expected, "Freudenthal disagrees with the Weyl dimension formula");

        let low = rs.apply_word(rs.longest_word(), &highest);
        let lowest = weights.iter().position(|w| w.eps == low).expect("w₀π is a weight");
        assert_eq!(lowest, weights.len() - 1, "w₀π is the unique deepest weight");
        Ok(WeightSystem { rs, highest, labels: top, weights, index, lowest, dim })
    }

    /// `adjoint`, `fund:…` or `eps:…`.
    pub fn from_spec(rs: Arc<RootSystem>, spec: &str) -> Result<Self> {
        if spec == "adjoint" {
            return Self::adjoint(rs);
        }
        let hw = rs.parse_weight(spec)?;
        Self::new(rs, hw)
    }

    pub fn adjoint(rs: Arc<RootSystem>) -> Result<Self> {
        let hw = rs.highest_root().clone();
        Self::new(rs, hw)
    }

    /// The representation with highest weight `−w₀π`.
    pub fn dual(&self) -> Result<Self> {
        let hw = linalg::neg(&self.weights[self.lowest].eps);
        Self::new(self.rs.clone(), hw)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        self.rs.clone()
    }

    pub fn highest(&self) -> &Vector {
        &self.highest
    }

    pub fn highest_labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn lowest(&self) -> &Weight {
        &self.weights[self.lowest]
    }

    /// Weights ordered from the top down (by `Σ depth`).
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn get(&self, depth: &[i64]) -> Option<&Weight> {
        self.index.get(depth).map(|&i| &self.weights[i])
    }

    pub fn find_eps(&self, eps: &[Rational]) -> Option<&Weight> {
        let diff = linalg::sub(&self.highest, eps);
        let coords = self.rs.simple_coords(&diff);
        let depth: Option<Vec<i64>> = coords
            .iter()
            .map(|c| if c.is_integer() { i64::try_from(c.to_integer()).ok() } else { None })
            .collect();
        let w = self.get(&depth?)?;
        (w.eps.as_slice() == eps).then_some(w)
    }

    pub fn multiplicity(&self, eps: &[Rational]) -> u64 {
        self.find_eps(eps).map_or(0, |w| w.mult)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.weights.iter().all(|w| w.mult == 1)
    }

    pub fn dominant_weights(&self) -> Vec<&Weight> {
        self.weights.iter().filter(|w| self.rs.is_dominant(&w.eps)).collect()
    }

    /// Unique dominant weight with `⟨ϖ, α^∨⟩ ∈ {0, 1}` for every positive root.
    pub fn dominant_minuscule_weight(&self) -> Vector {
        let rs = &self.rs;
        let found: Vec<&Weight> = self
            .dominant_weights()
            .into_iter()
            .filter(|w| {
                rs.positive_roots().iter().all(|a| {
                    let p = rs.coroot_pairing(&w.eps, a);
                    p.is_zero() || p.is_one()
                })
            })
            .collect();
        assert_eq!(found.len(), 1, "exactly one dominant minuscule weight");
        found[0].eps.clone()
    }

    /// All weights form a single Weyl orbit.
    pub fn is_minuscule(&self) -> bool {
        self.dominant_weights().len() == 1
    }
}

/// `ϖ ≤ ϖ′`, i.e. `ϖ′ − ϖ ∈ R₊`.
pub fn leq(a: &Weight, b: &Weight) -> bool {
    a.depth.iter().zip(&b.depth).all(|(x, y)| x >= y)
}

pub fn lt(a: &Weight, b: &Weight) -> bool {
    a.depth != b.depth && leq(a, b)
}

/// Restriction of a weight to `a_Θ`, as its depth on the indices outside Θ.
pub fn restriction(ts: &ThetaSubset, w: &Weight) -> Vec<i64> {
    w.depth.iter().enumerate().filter(|(i, _)| !ts.contains(*i)).map(|(_, d)| *d).collect()
}

/// `μ ≤_Θ μ′` on restrictions produced by [`restriction`].
pub fn leq_theta(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

pub fn lt_theta(a: &[i64], b: &[i64]) -> bool {
    a != b && leq_theta(a, b)
}

/// `ν − μ ∈ R₊` for arbitrary vectors, decided through simple coordinates.
pub fn leq_eps(rs: &RootSystem, mu: &[Rational], nu: &[Rational]) -> bool {
    let d = linalg::sub(nu, mu);
    if !linalg::is_zero(&rs.project_semisimple(&d).iter().zip(&d).map(|(a, b)| a - b).collect::<Vec<_>>()) {
        return false;
    }
    rs.simple_coords(&d).iter().all(|c| c.is_integer() && !c.is_negative())
}

/// Covering edges `ϖ → ϖ + α_i` of the weight poset.
pub fn poset_edges(ws: &WeightSystem) -> Vec<(usize, usize, usize)> {
    let mut edges = Vec::new();
    for (k, w) in ws.weights().iter().enumerate() {
        for i in 0..ws.root_system().rank() {
            if w.depth[i] == 0 {
                continue;
            }
            let mut d = w.depth.clone();
            d[i] -= 1;
            if let Some(&t) = ws.index.get(&d) {
                edges.push((k, t, i));
            }
        }
    }
    edges
}

pub fn poset_dot(ws: &WeightSystem) -> String {
    let mut s = String::from("digraph weights {\n  rankdir=LR;\n");
    for (k, w) in ws.weights().iter().enumerate() {
        let lab: Vec<String> = ws.root_system().dynkin_labels(&w.eps).iter().map(crate::exactalg::format_rational).collect();
        let m = if w.mult > 1 { format!(" ({})", w.mult) } else { String::new() };
        let _ = writeln!(s, "  w{k} [label=\"{}{m}\"];", lab.join(" "));
    }
    for (a, b, i) in poset_edges(ws) {
        let _ = writeln!(s, "  w{a} -> w{b} [label=\"{}\"];", i + 1);
    }
    s.push_str("}\n");
    s
}

/// Θ-dominant representative of `μ` under the ordinary action of `W_Θ`.
fn levi_dominant(rs: &RootSystem, ts: &ThetaSubset, mu: &[Rational]) -> Vector {
    let mut v = mu.to_vec();
    while let Some(&i) = ts.indices().iter().find(|&&i| rs.pairing(&v, i).is_negative()) {
        v = rs.reflect(i, &v);
    }
    v
}

/// Highest weights `w_i^{-1}π` of the Levi components of a minuscule
/// representation, sorted.
pub fn levi_decompose_minuscule(ws: &WeightSystem, ts: &ThetaSubset) -> Result<Vec<Vector>> {
    if !ws.is_minuscule() {
        return precondition("representation is not minuscule");
    }
    let rs = ws.root_system();
    let mut tops: Vec<Vector> = ws.weights().iter().map(|w| levi_dominant(rs, ts, &w.eps)).collect();
    tops.sort();
    tops.dedup();
    Ok(tops)
}

/// A graded piece `V(m)` of the adjoint representation under `a_Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointGrade {
    /// Coefficients of the roots on the simple roots outside Θ.
    pub grade: Vec<i64>,
    pub lowest: Vector,
    pub highest: Vector,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointLevi {
    pub grades: Vec<AdjointGrade>,
    /// `dim a_Θ` and the Θ-components of the zero-graded part.
    pub center_dim: usize,
    pub components: Vec<Vec<usize>>,
}

pub fn levi_decompose_adjoint(rs: &RootSystem, ts: &ThetaSubset) -> AdjointLevi {
    let outside = ts.complement(rs);
    let mut by_grade: BTreeMap<Vec<i64>, Vec<(Vec<i64>, Vector)>> = BTreeMap::new();
    for (c, a) in rs.positive_coords().iter().zip(rs.positive_roots()) {
        let g: Vec<i64> = outside.iter().map(|&j| c[j]).collect();
        if g.iter().all(|x| *x == 0) {
            continue;
        }
        let neg_g: Vec<i64> = g.iter().map(|x| -x).collect();
        let neg_c: Vec<i64> = c.iter().map(|x| -x).collect();
        by_grade.entry(g).or_default().push((c.clone(), a.clone()));
        by_grade.entry(neg_g).or_default().push((neg_c, linalg::neg(a)));
    }
    let grades = by_grade
        .into_iter()
        .map(|(g, roots)| {
            let min = roots.iter().min_by_key(|(c, _)| c.iter().sum::<i64>()).expect("nonempty");
            let max = roots.iter().max_by_key(|(c, _)| c.iter().sum::<i64>()).expect("nonempty");
            // the extreme roots of one grade are comparable with every other root in it
            assert!(roots.iter().all(|(c, _)| c.iter().zip(&min.0).all(|(x, y)| x >= y)));
            AdjointGrade { grade: g, lowest: min.1.clone(), highest: max.1.clone(), dim: roots.len() as u64 }
        })
        .collect();
    AdjointLevi { grades, center_dim: outside.len(), components: ts.components().to_vec() }
}
