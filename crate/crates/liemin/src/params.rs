//! Coordinates on `a_Θ^*`: the vectors the λ-variables multiply, the
//! adapter for the opposite fundamental system `Ψ′ = −Ψ`, and the block
//! parametrization used for the classical families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::error::{invalid, precondition, Error, Result};
use crate::exactalg::{int, Assignment, LinearForm, Rational, X_VAR};
use crate::linalg::{self, Vector};
use crate::rootsys::{Family, NormalizedForm, RootSystem, ThetaSubset};

/// Which fundamental system the user-facing indices and weights refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Psi,
    /// `Ψ′ = {−α₁, …, −α_r}`; lowest and highest weights swap roles.
    PsiPrime,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => Ok(Convention::Psi),
            "psi-prime" | "psi'" => Ok(Convention::PsiPrime),
            _ => invalid(format!("unknown convention '{s}' (expected psi or psi-prime)")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Psi => "psi",
            Convention::PsiPrime => "psi-prime",
        })
    }
}

/// One coordinate `λ_var` multiplying `basis` in `λ_Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub var: usize,
    pub label: String,
    pub basis: Vector,
}

/// `λ_Θ = Σ λ_var · basis_var`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Parametrization {
    params: Vec<Param>,
}

impl Parametrization {
    pub fn new(mut params: Vec<Param>) -> Result<Self> {
        params.sort_by_key(|p| p.var);
        if params.iter().any(|p| p.var == X_VAR) {
            return invalid("variable id 0 is reserved for x");
        }
        if params.windows(2).any(|w| w[0].var == w[1].var) {
            return invalid("duplicate parameter variable");
        }
        Ok(Parametrization { params })
    }

    /// `λ_j Λ_j` for every `j ∉ Θ` (variable `j+1`); for `gl_n` also the
    /// determinant direction `ε₁+…+ε_n` as variable `n`.
    pub fn fundamental(rs: &RootSystem, theta: &[usize]) -> Self {
        let mut params: Vec<Param> = (0..rs.rank())
            .filter(|j| !theta.contains(j))
            .map(|j| Param { var: j + 1, label: format!("\\lambda_{{{}}}", j + 1), basis: rs.fundamental_weight(j).clone() })
            .collect();
        if rs.family() == Family::Gl {
            let n = rs.dim();
            params.push(Param { var: n, label: format!("\\lambda_{{{n}}}"), basis: vec![int(1); n] });
        }
        Parametrization { params }
    }

    pub fn params(&self) -> &[Param] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn vars(&self) -> Vec<usize> {
        self.params.iter().map(|p| p.var).collect()
    }

    pub fn labels(&self) -> BTreeMap<usize, String> {
        self.params.iter().map(|p| (p.var, p.label.clone())).collect()
    }

    /// Same parametrization with every label replaced.
    pub fn relabel(&self, f: impl Fn(&Param) -> String) -> Self {
        let params = self.params.iter().map(|p| Param { label: f(p), ..p.clone() }).collect();
        Parametrization { params }
    }

    /// `⟨λ_Θ, v⟩` as a linear form in the parameters.
    pub fn pair_with(&self, form: &NormalizedForm, v: &[Rational]) -> LinearForm {
        LinearForm::from_parts(Rational::zero(), self.params.iter().map(|p| (p.var, form.pair(&p.basis, v))))
    }

    /// `λ_Θ` at a numeric assignment.
    pub fn vector(&self, dim: usize, a: &Assignment) -> Result<Vector> {
        let mut v = linalg::zeros(dim);
        for p in &self.params {
            let c = a.get(&p.var).ok_or_else(|| Error::Invalid(format!("no value for {}", p.label)))?;
            v = linalg::axpy(&v, c, &p.basis);
        }
        Ok(v)
    }

    /// `λ_Θ` coordinatewise as linear forms.
    pub fn symbolic_vector(&self, dim: usize) -> Vec<LinearForm> {
        (0..dim)
            .map(|k| LinearForm::from_parts(Rational::zero(), self.params.iter().map(|p| (p.var, p.basis[k].clone()))))
            .collect()
    }

    /// Assignment from values listed in variable order.
    pub fn assignment(&self, values: &[Rational]) -> Result<Assignment> {
        if values.len() != self.params.len() {
            return invalid(format!("expected {} λ values, got {}", self.params.len(), values.len()));
        }
        Ok(self.params.iter().map(|p| p.var).zip(values.iter().cloned()).collect())
    }

    pub fn check_orthogonal(&self, rs: &RootSystem, theta: &[usize]) -> Result<()> {
        for p in &self.params {
            if let Some(&i) = theta.iter().find(|&&i| !linalg::dot(&p.basis, rs.simple_root(i)).is_zero()) {
                return precondition(format!("{} is not orthogonal to simple root {}", p.label, i + 1));
            }
        }
        Ok(())
    }

    pub fn map_basis(&self, f: impl Fn(&Vector) -> Vector) -> Self {
        let params = self.params.iter().map(|p| Param { basis: f(&p.basis), ..p.clone() }).collect();
        Parametrization { params }
    }

    /// Restriction to the subspace fixed by the diagram automorphism `τ`:
    /// parameters swapped by `τ` merge, parameters negated by it vanish.
    pub fn tau_reduce(&self, rs: &RootSystem, tau: &[usize]) -> Result<Self> {
        check_diagram_automorphism(rs, tau)?;
        let images: Vec<Vector> = self.params.iter().map(|p| diagram_action(rs, tau, &p.basis)).collect();
        let mut out = Vec::new();
        let mut used = vec![false; self.params.len()];
        for (k, p) in self.params.iter().enumerate() {
            if used[k] {
                continue;
            }
            used[k] = true;
            let img = &images[k];
            if *img == p.basis {
                out.push(p.clone());
            } else if *img == linalg::neg(&p.basis) {
                continue;
            } else if let Some(m) = (0..self.params.len()).find(|&m| !used[m] && self.params[m].basis == *img) {
                used[m] = true;
                out.push(Param { var: p.var, label: p.label.clone(), basis: linalg::add(&p.basis, img) });
            } else {
                return precondition(format!("{} is not carried to a parameter by the automorphism", p.label));
            }
        }
        Ok(Parametrization { params: out })
    }
}

pub fn check_diagram_automorphism(rs: &RootSystem, tau: &[usize]) -> Result<()> {
    let r = rs.rank();
    let mut seen = vec![false; r];
    if tau.len() != r || tau.iter().any(|&t| t >= r || std::mem::replace(&mut seen[t], true)) {
        return invalid("automorphism must be a permutation of the simple roots");
    }
    let c = rs.cartan();
    if (0..r).any(|i| (0..r).any(|j| c[tau[i]][tau[j]] != c[i][j])) {
        return precondition("permutation is not a Dynkin diagram automorphism");
    }
    Ok(())
}

/// The linear map `α_i ↦ α_{τ(i)}`, identity off the root span.
pub fn diagram_action(rs: &RootSystem, tau: &[usize], v: &[Rational]) -> Vector {
    let coords = rs.simple_coords(v);
    let semi = rs.project_semisimple(v);
    let mut out = linalg::sub(v, &semi);
    for (i, c) in coords.iter().enumerate() {
        out = linalg::axpy(&out, c, rs.simple_root(tau[i]));
    }
    out
}

/// A user problem translated to the Ψ convention.
#[derive(Clone, Debug)]
pub struct Setting {
    pub convention: Convention,
    pub user_theta: Vec<usize>,
    pub theta: ThetaSubset,
    pub param: Parametrization,
}

impl Setting {
    /// For `Ψ′`, apply `w₀`: it carries `Ψ′` onto `Ψ`, so `−α_i ↦ α_{τ(i)}`
    /// with `τ = −w₀`, and the parameter vectors follow.
    pub fn new(rs: &RootSystem, convention: Convention, user_theta: &[usize], param: Parametrization) -> Result<Self> {
        param.check_orthogonal(rs, user_theta)?;
        let (theta, param) = match convention {
            Convention::Psi => (rs.theta(user_theta)?, param),
            Convention::PsiPrime => {
                let idx: Vec<usize> = user_theta.iter().map(|&i| rs.opposition()[i]).collect();
                let w0 = rs.longest_word().clone();
                (rs.theta(&idx)?, param.map_basis(|b| rs.apply_word(&w0, b)))
            }
        };
        let mut user_theta = user_theta.to_vec();
        user_theta.sort_unstable();
        user_theta.dedup();
        Ok(Setting { convention, user_theta, theta, param })
    }

    pub fn fundamental(rs: &RootSystem, convention: Convention, user_theta: &[usize]) -> Result<Self> {
        Self::new(rs, convention, user_theta, Parametrization::fundamental(rs, user_theta))
    }

    /// A weight computed in Ψ expressed for the user's convention.
    pub fn to_user(&self, rs: &RootSystem, v: &[Rational]) -> Vector {
        match self.convention {
            Convention::Psi => v.to_vec(),
            Convention::PsiPrime => rs.apply_word(rs.longest_word(), v),
        }
    }

    /// A user simple-root index in the Ψ numbering.
    pub fn to_internal_index(&self, rs: &RootSystem, i: usize) -> usize {
        match self.convention {
            Convention::Psi => i,
            Convention::PsiPrime => rs.opposition()[i],
        }
    }

    pub fn to_user_index(&self, rs: &RootSystem, i: usize) -> usize {
        match self.convention {
            Convention::Psi => i,
            // the opposition involution is its own inverse
            Convention::PsiPrime => rs.opposition()[i],
        }
    }
}

/// Which parabolic a block sequence selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BlockVariant {
    /// `Θ = {α′_ν : n_{k−1} < ν < n_k, ν < n}`
    #[default]
    Plain,
    /// `Θ ∪ {α′_n}` (types B, C, D; for D only when `α′_{n−1} ∈ Θ`).
    Bar,
    /// Type D with `α′_{n−1} ∉ Θ`, restricted to the slice fixed by the
    /// automorphism swapping `α′_{n−1}` and `α′_n`.
    Prime,
}

impl FromStr for BlockVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(BlockVariant::Plain),
            "bar" => Ok(BlockVariant::Bar),
            "prime" => Ok(BlockVariant::Prime),
            _ => invalid(format!("unknown block variant '{s}' (expected plain, bar or prime)")),
        }
    }
}

/// The block sequence `0 = n₀ < n₁ < … < n_L = n` of the classical
/// examples, stated in the `Ψ′` convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    ends: Vec<usize>,
    variant: BlockVariant,
}

impl Blocks {
    pub fn new(rs: &RootSystem, ends: &[usize], variant: BlockVariant) -> Result<Self> {
        let n = block_size(rs)?;
        if ends.is_empty() || ends.windows(2).any(|w| w[0] >= w[1]) || ends[0] == 0 {
            return invalid("block ends must be strictly increasing positive integers");
        }
        if *ends.last().expect("nonempty") != n {
            return invalid(format!("the last block end must be {n}"));
        }
        let l = ends.len();
        let penultimate = if l >= 2 { ends[l - 2] } else { 0 };
        match (rs.family(), variant) {
            (_, BlockVariant::Plain) => {}
            (Family::Gl, _) => return precondition("gl_n only has the plain block parabolic"),
            (Family::D, BlockVariant::Bar) if penultimate + 1 >= n => {
                return precondition("the bar variant of D_n needs α′_{n−1} ∈ Θ");
            }
            (Family::D, BlockVariant::Prime) if penultimate + 1 != n => {
                return precondition("the prime variant of D_n needs α′_{n−1} ∉ Θ");
            }
            (Family::B | Family::C | Family::D, BlockVariant::Bar) => {}
            (Family::D, BlockVariant::Prime) => {}
            _ => return precondition("the prime variant exists only for D_n"),
        }
        Ok(Blocks { ends: ends.to_vec(), variant })
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    pub fn variant(&self) -> BlockVariant {
        self.variant
    }

    pub fn count(&self) -> usize {
        self.ends.len()
    }

    /// `n_k` with `n_0 = 0`.
    pub fn end(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.ends[k - 1]
        }
    }

    /// The 1-based block containing the 1-based coordinate `nu`.
    pub fn block_of(&self, nu: usize) -> usize {
        self.ends.iter().position(|&e| nu <= e).expect("coordinate in range") + 1
    }

    /// Θ in the `Ψ′` numbering (0-based).
    pub fn theta(&self, rs: &RootSystem) -> Vec<usize> {
        let n = self.ends[self.ends.len() - 1];
        let mut th: Vec<usize> = (1..n).filter(|nu| !self.ends.contains(nu)).map(|nu| nu - 1).collect();
        if rs.family() != Family::Gl && self.variant == BlockVariant::Bar {
            th.push(n - 1);
        }
        th
    }

    /// `λ_k (ε_{n_{k−1}+1} + … + ε_{n_k})` for every block orthogonal to Θ.
    pub fn parametrization(&self, rs: &RootSystem) -> Result<Parametrization> {
        let dim = rs.dim();
        let theta = self.theta(rs);
        let params: Vec<Param> = (1..=self.count())
            .map(|k| {
                let mut b = linalg::zeros(dim);
                for nu in self.end(k - 1)..self.end(k) {
                    b[nu] = int(1);
                }
                Param { var: k, label: format!("\\lambda_{{{k}}}"), basis: b }
            })
            .filter(|p| theta.iter().all(|&i| linalg::dot(&p.basis, rs.simple_root(i)).is_zero()))
            .collect();
        let param = Parametrization::new(params)?;
        if self.variant == BlockVariant::Prime {
            return param.tau_reduce(rs, &self.swap(rs));
        }
        Ok(param)
    }

    /// The automorphism exchanging the two spin nodes of D_n.
    pub fn swap(&self, rs: &RootSystem) -> Vec<usize> {
        let r = rs.rank();
        let mut t: Vec<usize> = (0..r).collect();
        t.swap(r - 2, r - 1);
        t
    }

    pub fn setting(&self, rs: &RootSystem) -> Result<Setting> {
        Setting::new(rs, Convention::PsiPrime, &self.theta(rs), self.parametrization(rs)?)
    }

    /// `λ̄_ν` with `Σ λ̄_ν ε_ν = ρ′ + Σ_k λ_k (ε_{n_{k−1}+1} + … + ε_{n_k})`,
    /// `ρ′ = −ρ`; blocks without a parameter contribute nothing.
    pub fn bar_lambda(&self, rs: &RootSystem, param: &Parametrization) -> Vec<LinearForm> {
        let vars = param.vars();
        (1..=rs.dim())
            .map(|nu| {
                let k = self.block_of(nu);
                let base = LinearForm::constant(-rs.rho()[nu - 1].clone());
                if vars.contains(&k) {
                    &base + &LinearForm::var(k)
                } else {
                    base
                }
            })
            .collect()
    }
}

fn block_size(rs: &RootSystem) -> Result<usize> {
    match rs.family() {
        Family::Gl => Ok(rs.dim()),
        Family::B | Family::C | Family::D => Ok(rs.rank()),
        f => invalid(format!("block parametrization is defined for gl, B, C, D, not {f}")),
    }
}
