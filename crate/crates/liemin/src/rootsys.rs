//! Root systems in Bourbaki ε-coordinates, Weyl group words, parabolic
//! subsets and the trace form of a representation.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, precondition, Error, Result};
use crate::exactalg::{int, rat, Rational};
use crate::linalg::{self, dot, Matrix, Vector};
use crate::weights::WeightSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Gl,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::Gl => "gl",
        };
        write!(f, "{s}")
    }
}

/// A reduced word `[i₁, …, i_k]` standing for `s_{i₁} ⋯ s_{i_k}`.
pub type Word = Vec<usize>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    dim: usize,
    simple: Vec<Vector>,
    positive: Vec<Vector>,
    positive_coords: Vec<Vec<i64>>,
    // cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)
    cartan: Vec<Vec<i64>>,
    gram: Matrix,
    half_norms: Vec<Rational>,
    fundamental: Vec<Vector>,
    rho: Vector,
    highest: usize,
    longest_word: Word,
    tau: Vec<usize>,
    complement: Vec<Vector>,
}

fn eps(dim: usize, entries: &[(usize, Rational)]) -> Vector {
    let mut v = linalg::zeros(dim);
    for (i, c) in entries {
        v[*i] += c;
    }
    v
}

fn simple_roots(family: Family, n: usize) -> Result<(usize, Vec<Vector>)> {
    let one = || int(1);
    let m1 = || int(-1);
    let chain = |dim: usize, count: usize| -> Vec<Vector> {
        (0..count).map(|i| eps(dim, &[(i, one()), (i + 1, m1())])).collect()
    };
    Ok(match (family, n) {
        (Family::A, r) if r >= 1 => (r + 1, chain(r + 1, r)),
        (Family::Gl, m) if m >= 2 => (m, chain(m, m - 1)),
        (Family::B, r) if r >= 2 => {
            let mut s = chain(r, r - 1);
            s.push(eps(r, &[(r - 1, one())]));
            (r, s)
        }
        (Family::C, r) if r >= 2 => {
            let mut s = chain(r, r - 1);
            s.push(eps(r, &[(r - 1, int(2))]));
            (r, s)
        }
        (Family::D, r) if r >= 4 => {
            let mut s = chain(r, r - 1);
            s.push(eps(r, &[(r - 2, one()), (r - 1, one())]));
            (r, s)
        }
        (Family::E, r) if (6..=8).contains(&r) => {
            let h = rat(1, 2);
            let mh = rat(-1, 2);
            let mut a1 = vec![mh.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, eps(8, &[(0, one()), (1, one())])];
            for i in 0..(r - 2) {
                s.push(eps(8, &[(i + 1, one()), (i, m1())]));
            }
            (8, s)
        }
        (Family::F, 4) => {
            let h = rat(1, 2);
            let mh = rat(-1, 2);
            (
                4,
                vec![
                    eps(4, &[(1, one()), (2, m1())]),
                    eps(4, &[(2, one()), (3, m1())]),
                    eps(4, &[(3, one())]),
                    vec![h, mh.clone(), mh.clone(), mh],
                ],
            )
        }
        (Family::G, 2) => (
            3,
            vec![eps(3, &[(0, one()), (1, m1())]), eps(3, &[(0, int(-2)), (1, one()), (2, one())])],
        ),
        _ => return invalid(format!("unsupported root system {family}{n}")),
    })
}

fn rational_to_i64(q: &Rational) -> Option<i64> {
    if q.denom().is_one() {
        q.numer().to_i64()
    } else {
        None
    }
}

impl RootSystem {
    /// `n` is the rank for simple types and the matrix size for `gl`.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let (dim, simple) = simple_roots(family, n)?;
        let rank = simple.len();
        let gram: Matrix = simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
        let half_norms: Vec<Rational> = (0..rank).map(|i| &gram[i][i] / int(2)).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| rational_to_i64(&(&gram[i][j] / &half_norms[j])).expect("integral Cartan entry"))
                    .collect()
            })
            .collect();

        // positive roots by the string algorithm, in simple-root coordinates
        let mut coords: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut c = vec![0; rank];
                c[i] = 1;
                c
            })
            .collect();
        let mut seen: HashSet<Vec<i64>> = coords.iter().cloned().collect();
        let mut k = 0;
        while k < coords.len() {
            let beta = coords[k].clone();
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        coords.push(up);
                    }
                }
            }
            k += 1;
        }
        let positive: Vec<Vector> = coords
            .iter()
            .map(|c| {
                let mut v = linalg::zeros(dim);
                for (i, ci) in c.iter().enumerate() {
                    v = linalg::axpy(&v, &int(*ci), &simple[i]);
                }
                v
            })
            .collect();
        let highest = (0..coords.len())
            .max_by_key(|&i| coords[i].iter().sum::<i64>())
            .expect("nonempty");

        let gram_inv = linalg::inverse(&gram).expect("simple roots independent");
        let fundamental: Vec<Vector> = if family == Family::Gl {
            (0..rank).map(|i| (0..dim).map(|k| if k <= i { int(1) } else { int(0) }).collect()).collect()
        } else {
            (0..rank)
                .map(|i| {
                    let mut v = linalg::zeros(dim);
                    for (kk, a) in simple.iter().enumerate() {
                        v = linalg::axpy(&v, &(&half_norms[i] * &gram_inv[i][kk]), a);
                    }
                    v
                })
                .collect()
        };
        let mut rho = linalg::zeros(dim);
        for a in &positive {
            rho = linalg::add(&rho, a);
        }
        let rho = linalg::scale(&rho, &rat(1, 2));

        let complement = linalg::orthogonalize(&linalg::nullspace(&simple, dim));

        let mut rs = RootSystem {
            family,
            rank,
            dim,
            simple,
            positive,
            positive_coords: coords,
            cartan,
            gram,
            half_norms,
            fundamental,
            rho,
            highest,
            longest_word: Vec::new(),
            tau: Vec::new(),
            complement,
        };
        let mut mu = rs.rho.clone();
        let mut seq = Vec::new();
        while let Some(i) = (0..rank).find(|&i| rs.pairing(&mu, i).is_positive()) {
            mu = rs.reflect(i, &mu);
            seq.push(i);
        }
        seq.reverse();
        rs.longest_word = seq;
        rs.tau = (0..rank)
            .map(|i| {
                let v = linalg::neg(&rs.apply_word(&rs.longest_word, &rs.simple[i]));
                rs.simple.iter().position(|a| *a == v).expect("−w₀ permutes Ψ")
            })
            .collect();
        Ok(rs)
    }

    /// Parse labels such as `E6`, `B4`, `gl4`.
    pub fn parse(label: &str) -> Result<Self> {
        let t = label.trim();
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Invalid(format!("bad type label '{label}'")))?;
        let (head, tail) = t.split_at(split);
        let n: usize = tail.parse().map_err(|_| Error::Invalid(format!("bad type label '{label}'")))?;
        let family = match head {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "gl" => Family::Gl,
            _ => return invalid(format!("bad type label '{label}'")),
        };
        Self::new(family, n)
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::Gl => format!("gl{}", self.dim),
            f => format!("{f}{}", self.rank),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient ε-space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.simple[i]
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    /// Positive roots as non-negative integer combinations of Ψ.
    pub fn positive_coords(&self) -> &[Vec<i64>] {
        &self.positive_coords
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.fundamental
    }

    pub fn fundamental_weight(&self, i: usize) -> &Vector {
        &self.fundamental[i]
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn highest_root(&self) -> &Vector {
        &self.positive[self.highest]
    }

    /// Coefficients of the highest root on Ψ.
    pub fn marks(&self) -> &[i64] {
        &self.positive_coords[self.highest]
    }

    pub fn longest_word(&self) -> &Word {
        &self.longest_word
    }

    /// The diagram involution `−w₀` on simple-root indices.
    pub fn opposition(&self) -> &[usize] {
        &self.tau
    }

    /// Orthogonal basis of the complement of the root span.
    pub fn center_directions(&self) -> &[Vector] {
        &self.complement
    }

    pub fn weyl_order(&self) -> u64 {
        let fact = |k: u64| (1..=k).product::<u64>();
        let r = self.rank as u64;
        match self.family {
            Family::A | Family::Gl => fact(r + 1),
            Family::B | Family::C => (1u64 << r) * fact(r),
            Family::D => (1u64 << (r - 1)) * fact(r),
            Family::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// `2(μ, α_i)/(α_i, α_i)`
    pub fn pairing(&self, mu: &[Rational], i: usize) -> Rational {
        dot(mu, &self.simple[i]) / &self.half_norms[i]
    }

    pub fn coroot_pairing(&self, mu: &[Rational], alpha: &[Rational]) -> Rational {
        int(2) * dot(mu, alpha) / dot(alpha, alpha)
    }

    pub fn dynkin_labels(&self, mu: &[Rational]) -> Vec<Rational> {
        (0..self.rank).map(|i| self.pairing(mu, i)).collect()
    }

    pub fn integral_labels(&self, mu: &[Rational]) -> Option<Vec<i64>> {
        self.dynkin_labels(mu).iter().map(rational_to_i64).collect()
    }

    pub fn from_fundamental(&self, labels: &[Rational]) -> Result<Vector> {
        if labels.len() != self.rank {
            return invalid(format!("{} expects {} fundamental coordinates, got {}", self.label(), self.rank, labels.len()));
        }
        let mut v = linalg::zeros(self.dim);
        for (c, w) in labels.iter().zip(&self.fundamental) {
            v = linalg::axpy(&v, c, w);
        }
        Ok(v)
    }

    /// Parse `fund:1,0,2` or `eps:1/2,-1/2,0`.
    pub fn parse_weight(&self, spec: &str) -> Result<Vector> {
        let (kind, body) = spec
            .split_once(':')
            .ok_or_else(|| Error::Invalid(format!("weight '{spec}' needs a fund: or eps: prefix")))?;
        let vals = crate::exactalg::parse_rational_list(body)?;
        match kind {
            "fund" => self.from_fundamental(&vals),
            "eps" => {
                if vals.len() != self.dim {
                    return invalid(format!("{} expects {} ε-coordinates, got {}", self.label(), self.dim, vals.len()));
                }
                Ok(vals)
            }
            _ => invalid(format!("unknown weight prefix '{kind}'")),
        }
    }

    pub fn reflect(&self, i: usize, mu: &[Rational]) -> Vector {
        let c = self.pairing(mu, i);
        if c.is_zero() {
            return mu.to_vec();
        }
        linalg::axpy(mu, &-c, &self.simple[i])
    }

    pub fn is_root(&self, v: &[Rational]) -> bool {
        let n = linalg::neg(v);
        self.positive.iter().any(|a| a.as_slice() == v || *a == n)
    }

    pub fn reflect_root(&self, alpha: &[Rational], mu: &[Rational]) -> Result<Vector> {
        if !self.is_root(alpha) {
            return invalid("reflection vector is not a root");
        }
        Ok(linalg::axpy(mu, &-self.coroot_pairing(mu, alpha), alpha))
    }

    pub fn apply_word(&self, w: &[usize], mu: &[Rational]) -> Vector {
        let mut v = mu.to_vec();
        for &i in w.iter().rev() {
            v = self.reflect(i, &v);
        }
        v
    }

    /// `w.μ = w(μ+ρ) − ρ`
    pub fn dot_action(&self, w: &[usize], mu: &[Rational]) -> Vector {
        let shifted = linalg::add(mu, &self.rho);
        linalg::sub(&self.apply_word(w, &shifted), &self.rho)
    }

    pub fn words_equal(&self, a: &[usize], b: &[usize]) -> bool {
        self.apply_word(a, &self.rho) == self.apply_word(b, &self.rho)
    }

    pub fn is_dominant(&self, mu: &[Rational]) -> bool {
        (0..self.rank).all(|i| !self.pairing(mu, i).is_negative())
    }

    /// Dominant representative of `Wμ` together with a word `w`, `wμ` dominant.
    pub fn to_dominant(&self, mu: &[Rational]) -> (Vector, Word) {
        let mut v = mu.to_vec();
        let mut seq = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| self.pairing(&v, i).is_negative()) {
            v = self.reflect(i, &v);
            seq.push(i);
        }
        seq.reverse();
        (v, seq)
    }

    /// Coordinates of `μ` on Ψ (meaningful for μ in the root span).
    pub fn simple_coords(&self, mu: &[Rational]) -> Vector {
        let b: Vector = self.simple.iter().map(|a| dot(mu, a)).collect();
        let gi = linalg::inverse(&self.gram).expect("invertible");
        gi.iter().map(|row| dot(row, &b)).collect()
    }

    /// `μ` minus its component off the root span.
    pub fn project_semisimple(&self, mu: &[Rational]) -> Vector {
        let mut v = mu.to_vec();
        for u in &self.complement {
            let c = dot(&v, u) / dot(u, u);
            v = linalg::axpy(&v, &-c, u);
        }
        v
    }

    /// Weyl orbit of `μ`, sorted. Fails when the orbit exceeds `limit`.
    pub fn orbit(&self, mu: &[Rational], limit: usize) -> Result<Vec<Vector>> {
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.to_vec());
        queue.push_back(mu.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let w = self.reflect(i, &v);
                if !seen.contains(&w) {
                    if seen.len() >= limit {
                        return precondition(format!("orbit larger than {limit}"));
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<Vector> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Product over positive roots of `(μ+ρ, α)/(ρ, α)`.
    pub fn weyl_dimension(&self, highest: &[Rational]) -> u64 {
        let shifted = linalg::add(highest, &self.rho);
        let mut d = Rational::one();
        for a in &self.positive {
            d *= dot(&shifted, a) / dot(&self.rho, a);
        }
        rational_to_i64(&d).expect("integral dimension") as u64
    }

    pub fn theta(&self, indices: &[usize]) -> Result<ThetaSubset> {
        ThetaSubset::new(self, indices)
    }

    /// Minimal-length representatives `w` of `W/W_Θ`; each satisfies
    /// `w(α) > 0` for `α ∈ Θ`. Fails above `limit` elements.
    pub fn min_coset_reps(&self, ts: &ThetaSubset, limit: usize) -> Result<Vec<Word>> {
        let mut v = linalg::zeros(self.dim);
        for j in (0..self.rank).filter(|j| !ts.contains(*j)) {
            v = linalg::add(&v, &self.fundamental[j]);
        }
        let mut words: HashMap<Vector, Word> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        words.insert(v.clone(), Vec::new());
        order.push(v.clone());
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for i in 0..self.rank {
                if !self.pairing(&u, i).is_positive() {
                    continue;
                }
                let w = self.reflect(i, &u);
                if words.contains_key(&w) {
                    continue;
                }
                if words.len() >= limit {
                    return precondition(format!("W(Θ) has more than {limit} elements"));
                }
                let mut word = vec![i];
                word.extend(words[&u].iter().copied());
                words.insert(w.clone(), word);
                order.push(w.clone());
                queue.push_back(w);
            }
        }
        Ok(order.into_iter().map(|u| words.remove(&u).expect("present")).collect())
    }

    /// Every element of `W_Θ`, as reduced words. Fails above `limit`.
    pub fn parabolic_elements(&self, ts: &ThetaSubset, limit: usize) -> Result<Vec<Word>> {
        let mut words: HashMap<Vector, Word> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        words.insert(self.rho.clone(), Vec::new());
        order.push(self.rho.clone());
        queue.push_back(self.rho.clone());
        while let Some(u) = queue.pop_front() {
            for &i in ts.indices() {
                if !self.pairing(&u, i).is_positive() {
                    continue;
                }
                let w = self.reflect(i, &u);
                if words.contains_key(&w) {
                    continue;
                }
                if words.len() >= limit {
                    return precondition(format!("W_Θ has more than {limit} elements"));
                }
                let mut word = vec![i];
                word.extend(words[&u].iter().copied());
                words.insert(w.clone(), word);
                order.push(w.clone());
                queue.push_back(w);
            }
        }
        Ok(order.into_iter().map(|u| words.remove(&u).expect("present")).collect())
    }
}

/// A subset Θ of the simple roots with its Levi data; proper unless the
/// system is `gl_n`, whose center keeps `a_Θ` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSubset {
    indices: Vec<usize>,
    positive: Vec<usize>,
    rho_levi: Vector,
    rho_complement: Vector,
    components: Vec<Vec<usize>>,
}

impl ThetaSubset {
    fn new(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(bad) = idx.iter().find(|&&i| i >= rs.rank) {
            return invalid(format!("simple root index {} out of range for {}", bad + 1, rs.label()));
        }
        if idx.len() == rs.rank && rs.family != Family::Gl {
            return precondition("Θ must be a proper subset of the simple roots");
        }
        let positive: Vec<usize> = (0..rs.positive.len())
            .filter(|&k| rs.positive_coords[k].iter().enumerate().all(|(i, c)| *c == 0 || idx.contains(&i)))
            .collect();
        let mut rho_levi = linalg::zeros(rs.dim);
        for &k in &positive {
            rho_levi = linalg::add(&rho_levi, &rs.positive[k]);
        }
        let rho_levi = linalg::scale(&rho_levi, &rat(1, 2));
        let rho_complement = linalg::sub(&rs.rho, &rho_levi);

        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut assigned: HashSet<usize> = HashSet::new();
        for &start in &idx {
            if assigned.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            assigned.insert(start);
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for &j in &idx {
                    if !assigned.contains(&j) && rs.cartan[i][j] != 0 {
                        assigned.insert(j);
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(ThetaSubset { indices: idx, positive, rho_levi, rho_complement, components })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.rank).filter(|i| !self.contains(*i)).collect()
    }

    /// Indices into `rs.positive_roots()` of Σ(g_Θ)⁺.
    pub fn positive_root_indices(&self) -> &[usize] {
        &self.positive
    }

    pub fn rho_levi(&self) -> &Vector {
        &self.rho_levi
    }

    pub fn rho_complement(&self) -> &Vector {
        &self.rho_complement
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_levi_dominant(&self, rs: &RootSystem, mu: &[Rational]) -> bool {
        self.indices.iter().all(|&i| !rs.pairing(mu, i).is_negative())
    }

    pub fn is_levi_antidominant(&self, rs: &RootSystem, mu: &[Rational]) -> bool {
        self.indices.iter().all(|&i| !rs.pairing(mu, i).is_positive())
    }

    /// Weyl dimension formula on Σ(g_Θ)⁺.
    pub fn levi_dimension(&self, rs: &RootSystem, highest: &[Rational]) -> u64 {
        let shifted = linalg::add(highest, &self.rho_levi);
        let mut d = Rational::one();
        for &k in &self.positive {
            let a = &rs.positive[k];
            d *= dot(&shifted, a) / dot(&self.rho_levi, a);
        }
        rational_to_i64(&d).expect("integral dimension") as u64
    }
}

/// The trace form `⟨X, Y⟩ = tr π(X)π(Y)` transported to weights.
#[derive(Clone, Debug)]
pub struct NormalizedForm {
    c: Rational,
    c_center: Option<Rational>,
    complement: Vec<Vector>,
    rho: Vector,
}

impl NormalizedForm {
    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn c_center(&self) -> Option<&Rational> {
        self.c_center.as_ref()
    }

    pub fn pair(&self, mu: &[Rational], nu: &[Rational]) -> Rational {
        let mut semi = dot(mu, nu);
        let mut central = Rational::zero();
        for u in &self.complement {
            let t = dot(mu, u) * dot(nu, u) / dot(u, u);
            semi -= &t;
            central += t;
        }
        let mut v = semi / &self.c;
        if let Some(cc) = &self.c_center {
            v += central / cc;
        }
        v
    }

    /// `⟨μ, μ + 2ρ⟩`
    pub fn casimir(&self, mu: &[Rational]) -> Rational {
        let t = linalg::axpy(mu, &int(2), &self.rho);
        self.pair(mu, &t)
    }
}

/// `C_π` from every simple root (they must agree) and, for `gl_n`, `C′_π`.
pub fn trace_form(ws: &WeightSystem) -> Result<NormalizedForm> {
    let rs = ws.root_system();
    let mut cs = Vec::with_capacity(rs.rank);
    for a in &rs.simple {
        let mut s = Rational::zero();
        for w in ws.weights() {
            let p = dot(a, &w.eps);
            s += p.clone() * p * int(w.mult as i64);
        }
        cs.push(s / dot(a, a));
    }
    if cs.iter().any(|c| *c != cs[0]) {
        return precondition("trace form constant differs between simple roots");
    }
    if cs[0].is_zero() {
        return precondition("trivial representation has a degenerate trace form");
    }
    let c_center = if rs.family == Family::Gl {
        let e = &rs.complement[0];
        let n = int(rs.dim as i64);
        let mut s = Rational::zero();
        for w in ws.weights() {
            let p = dot(&w.eps, e);
            s += p.clone() * p * int(w.mult as i64);
        }
        let cc = s / n;
        if cc.is_zero() {
            return precondition("representation is trivial on the center of gl_n");
        }
        Some(cc)
    } else {
        None
    };
    Ok(NormalizedForm { c: cs[0].clone(), c_center, complement: rs.complement.clone(), rho: rs.rho.clone() })
}

/// The standard form `( , )` (`C = 1`, no central rescaling).
pub fn standard_form(rs: &RootSystem) -> NormalizedForm {
    NormalizedForm { c: int(1), c_center: None, complement: Vec::new(), rho: rs.rho.clone() }
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}
