//! Exact rationals, affine-linear forms in the λ-variables, polynomials in x
//! kept as products of linear factors, and sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};

pub type Rational = BigRational;

/// Values for the λ-variables, keyed by variable id.
pub type Assignment = BTreeMap<usize, Rational>;

/// Variable id reserved for x when a factored polynomial is expanded.
pub const X_VAR: usize = 0;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Invalid(format!("malformed rational '{s}'"));
    match t.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().map_err(|_| bad())?;
            let d: BigInt = b.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return invalid(format!("zero denominator in '{s}'"));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// `constant + Σ coeff_j · λ_j`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    constant: Rational,
    coeffs: BTreeMap<usize, Rational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        LinearForm { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn var(j: usize) -> Self {
        Self::term(j, Rational::one())
    }

    pub fn term(j: usize, c: Rational) -> Self {
        Self::from_parts(Rational::zero(), [(j, c)])
    }

    pub fn from_parts(constant: Rational, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut out = LinearForm::constant(constant);
        for (j, c) in coeffs {
            out.add_term(j, &c);
        }
        out
    }

    fn add_term(&mut self, j: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(j).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn linear_part(&self) -> LinearForm {
        LinearForm { constant: Rational::zero(), coeffs: self.coeffs.clone() }
    }

    pub fn with_constant(&self, c: Rational) -> LinearForm {
        LinearForm { constant: c, coeffs: self.coeffs.clone() }
    }

    pub fn plus_constant(&self, c: &Rational) -> LinearForm {
        LinearForm { constant: &self.constant + c, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, s: &Rational) -> LinearForm {
        if s.is_zero() {
            return LinearForm::zero();
        }
        LinearForm {
            constant: &self.constant * s,
            coeffs: self.coeffs.iter().map(|(j, c)| (*j, c * s)).collect(),
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn eval(&self, a: &Assignment) -> Result<Rational> {
        let mut v = self.constant.clone();
        for (j, c) in &self.coeffs {
            let x = a
                .get(j)
                .ok_or_else(|| Error::Invalid(format!("no value assigned to variable {j}")))?;
            v += c * x;
        }
        Ok(v)
    }

    /// Replace variable `j` by the form `by`.
    pub fn substitute(&self, j: usize, by: &LinearForm) -> LinearForm {
        match self.coeffs.get(&j) {
            None => self.clone(),
            Some(c) => {
                let mut rest = self.clone();
                rest.coeffs.remove(&j);
                &rest + &by.scale(c)
            }
        }
    }

    /// Coefficients descending, compared variable by variable in increasing
    /// variable order; ties broken by the constant ascending.
    pub fn canonical_cmp(&self, other: &LinearForm) -> Ordering {
        let mut vars: Vec<usize> = self.vars().chain(other.vars()).collect();
        vars.sort_unstable();
        vars.dedup();
        for j in vars {
            match other.coeff(j).cmp(&self.coeff(j)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.constant.cmp(&other.constant)
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.constant.clone());
        for (j, c) in &self.coeffs {
            p = &p + &MultiPoly::var(*j).scale(c);
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let coeffs: serde_json::Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(j, c)| (j.to_string(), Value::String(format_rational(c))))
            .collect();
        json!({ "constant": format_rational(&self.constant), "coeffs": coeffs })
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (j, c) in &rhs.coeffs {
            out.add_term(*j, c);
        }
        out
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        self + &(-rhs)
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm {
            constant: -&self.constant,
            coeffs: self.coeffs.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
}

impl fmt::Display for LinearForm {
    /// Plain text, e.g. `2/9*l1 - 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (j, c) in &self.coeffs {
            let a = c.abs();
            let body = if a.is_one() { format!("l{j}") } else { format!("{}*l{j}", format_rational(&a)) };
            parts.push((c.is_negative(), body));
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push((self.constant.is_negative(), format_rational(&self.constant.abs())));
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn merge_factors(raw: impl IntoIterator<Item = (LinearForm, u32)>) -> Vec<(LinearForm, u32)> {
    let mut v: Vec<(LinearForm, u32)> = raw.into_iter().filter(|(_, m)| *m > 0).collect();
    v.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut out: Vec<(LinearForm, u32)> = Vec::with_capacity(v.len());
    for (f, m) in v {
        match out.last_mut() {
            Some((g, k)) if *g == f => *k += m,
            _ => out.push((f, m)),
        }
    }
    out
}

/// Monic `∏ (x − root)^mult` with roots affine in λ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactoredPoly {
    factors: Vec<(LinearForm, u32)>,
}

impl FactoredPoly {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors(raw: impl IntoIterator<Item = (LinearForm, u32)>) -> Self {
        FactoredPoly { factors: merge_factors(raw) }
    }

    pub fn from_roots(roots: impl IntoIterator<Item = LinearForm>) -> Self {
        Self::from_factors(roots.into_iter().map(|r| (r, 1)))
    }

    /// Factors in canonical order.
    pub fn factors(&self) -> &[(LinearForm, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    pub fn roots(&self) -> impl Iterator<Item = &LinearForm> {
        self.factors.iter().map(|(r, _)| r)
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().flat_map(|(r, _)| r.vars().collect::<Vec<_>>()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn mul(&self, other: &FactoredPoly) -> FactoredPoly {
        Self::from_factors(self.factors.iter().chain(other.factors.iter()).cloned())
    }

    /// Root values at `a`, merged and sorted ascending.
    pub fn eval_at(&self, a: &Assignment) -> Result<Vec<(Rational, u32)>> {
        let mut m: BTreeMap<Rational, u32> = BTreeMap::new();
        for (r, k) in &self.factors {
            *m.entry(r.eval(a)?).or_insert(0) += k;
        }
        Ok(m.into_iter().collect())
    }

    /// Value of the polynomial at `x = x0`, λ = `a`.
    pub fn eval(&self, x0: &Rational, a: &Assignment) -> Result<Rational> {
        let mut v = Rational::one();
        for (r, k) in &self.factors {
            let d = x0 - r.eval(a)?;
            for _ in 0..*k {
                v *= &d;
            }
        }
        Ok(v)
    }

    /// Expansion with x as variable [`X_VAR`].
    pub fn expand(&self) -> MultiPoly {
        let x = MultiPoly::var(X_VAR);
        let mut p = MultiPoly::one();
        for (r, k) in &self.factors {
            let f = &x - &r.to_multipoly();
            p = &p * &f.pow(*k);
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let fs: Vec<Value> = self
            .factors
            .iter()
            .map(|(r, k)| {
                let mut v = r.to_json();
                v["mult"] = json!(k);
                v
            })
            .collect();
        json!({ "factors": fs })
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (r, k) in &self.factors {
            let neg = -r;
            let s = neg.to_string();
            let body = if neg.is_zero() {
                "x".to_string()
            } else if s.starts_with('-') {
                format!("x - {}", &s[1..])
            } else {
                format!("x + {s}")
            };
            if *k == 1 {
                write!(f, "({body})")?;
            } else {
                write!(f, "({body})^{k}")?;
            }
        }
        Ok(())
    }
}

/// `scalar · ∏ factor^mult`, normalized so that every factor is non-constant
/// with first coefficient 1. Identically zero products have scalar 0 and no
/// factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledProduct {
    scalar: Rational,
    factors: Vec<(LinearForm, u32)>,
}

impl ScaledProduct {
    pub fn new(scalar: Rational, raw: impl IntoIterator<Item = (LinearForm, u32)>) -> Self {
        let mut s = scalar;
        let mut fs = Vec::new();
        for (f, m) in raw {
            if m == 0 {
                continue;
            }
            if f.is_constant() {
                let c = f.constant_term().clone();
                for _ in 0..m {
                    s *= &c;
                }
                continue;
            }
            let lead = f.coeffs().values().next().cloned().expect("non-constant");
            let unit = f.scale(&lead.recip());
            for _ in 0..m {
                s *= &lead;
            }
            fs.push((unit, m));
        }
        if s.is_zero() {
            return ScaledProduct { scalar: s, factors: Vec::new() };
        }
        ScaledProduct { scalar: s, factors: merge_factors(fs) }
    }

    pub fn from_forms(scalar: Rational, forms: impl IntoIterator<Item = LinearForm>) -> Self {
        Self::new(scalar, forms.into_iter().map(|f| (f, 1)))
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn factors(&self) -> &[(LinearForm, u32)] {
        &self.factors
    }

    pub fn is_identically_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn mul(&self, other: &ScaledProduct) -> ScaledProduct {
        Self::new(&self.scalar * &other.scalar, self.factors.iter().chain(other.factors.iter()).cloned())
    }

    pub fn eval(&self, a: &Assignment) -> Result<Rational> {
        let mut v = self.scalar.clone();
        for (f, m) in &self.factors {
            let x = f.eval(a)?;
            for _ in 0..*m {
                v *= &x;
            }
        }
        Ok(v)
    }

    pub fn expand(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.scalar.clone());
        for (f, m) in &self.factors {
            p = &p * &f.to_multipoly().pow(*m);
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let fs: Vec<Value> = self
            .factors
            .iter()
            .map(|(r, k)| {
                let mut v = r.to_json();
                v["mult"] = json!(k);
                v
            })
            .collect();
        json!({ "scalar": format_rational(&self.scalar), "factors": fs })
    }
}

impl fmt::Display for ScaledProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.scalar))?;
        for (r, k) in &self.factors {
            if *k == 1 {
                write!(f, "({r})")?;
            } else {
                write!(f, "({r})^{k}")?;
            }
        }
        Ok(())
    }
}

/// Sorted `(variable, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(usize, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sparse polynomial over ℚ in arbitrary variable ids.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], Rational::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *e += c;
            e.is_zero()
        };
        if vanished {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, a: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let x = a.get(v).ok_or_else(|| Error::Invalid(format!("no value assigned to variable {v}")))?;
                for _ in 0..*e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|(v, _)| *v == var) {
                let e = m[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.remove(pos);
                } else {
                    nm[pos].1 = e - 1;
                }
                out.add_term(nm, c * int(e as i64));
            }
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(mono_mul(ma, mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let a = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}
