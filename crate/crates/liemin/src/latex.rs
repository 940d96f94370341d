//! LaTeX rendering of factored polynomials and a parser for the same
//! grammar, used to diff against the embedded tables.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::{invalid, Result};
use crate::exactalg::{FactoredPoly, LinearForm, Rational, ScaledProduct, X_VAR};

pub type Labels = BTreeMap<usize, String>;

/// `\frac{p}{q}` or an integer, with a leading `-` when negative.
pub fn rational(q: &Rational) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    if a.denom().is_one() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

fn label(labels: &Labels, var: usize) -> String {
    if var == X_VAR {
        return "x".into();
    }
    labels.get(&var).cloned().unwrap_or_else(|| format!("\\lambda_{{{var}}}"))
}

/// Terms in variable order, constant last: `\frac{1}{6}\lambda - 2`.
pub fn linear(f: &LinearForm, labels: &Labels) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    for (&v, c) in f.coeffs() {
        let a = c.abs();
        let body = if a.is_one() { label(labels, v) } else { format!("{}{}", rational(&a), label(labels, v)) };
        terms.push((c.is_negative(), body));
    }
    let c = f.constant_term();
    if !c.is_zero() || terms.is_empty() {
        terms.push((c.is_negative(), rational(&c.abs())));
    }
    let mut out = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn power(body: String, m: u32) -> String {
    if m == 1 {
        format!("({body})")
    } else {
        format!("({body})^{{{m}}}")
    }
}

/// `(x - root₁)(x - root₂)⋯` in canonical factor order.
pub fn factored(p: &FactoredPoly, labels: &Labels) -> String {
    if p.factors().is_empty() {
        return "1".into();
    }
    p.factors()
        .iter()
        .map(|(r, m)| power(linear(&(&LinearForm::var(X_VAR) - r), labels), *m))
        .collect()
}

/// `scalar · (factor)⋯`; the scalar is omitted when it is 1.
pub fn scaled(p: &ScaledProduct, labels: &Labels) -> String {
    if p.is_identically_zero() {
        return "0".into();
    }
    let s = p.scalar();
    let mut out = if p.factors().is_empty() || !s.abs().is_one() {
        rational(s)
    } else if s.is_negative() {
        "-".into()
    } else {
        String::new()
    };
    for (f, m) in p.factors() {
        out.push_str(&power(linear(f, labels), *m));
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a BTreeMap<String, usize>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            invalid(format!("expected '{}' at byte {}", c as char, self.pos))
        }
    }

    fn integer(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        t.parse::<num::BigInt>().map(Rational::from_integer).or_else(|_| invalid(format!("expected a number at byte {start}")))
    }

    fn braced_integer(&mut self) -> Result<Rational> {
        self.expect(b'{')?;
        let v = self.integer()?;
        self.expect(b'}')?;
        Ok(v)
    }

    /// A number if one starts here.
    fn number(&mut self) -> Result<Option<Rational>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Some(self.integer()?)),
            Some(b'\\') if self.s[self.pos..].starts_with(b"\\frac") => {
                self.pos += 5;
                let p = self.braced_integer()?;
                let q = self.braced_integer()?;
                Ok(Some(p / q))
            }
            _ => Ok(None),
        }
    }

    /// A variable label if one starts here.
    fn variable(&mut self) -> Result<Option<usize>> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let mut best: Option<(usize, usize)> = None;
        for (name, &v) in self.vars {
            if rest.starts_with(name.as_bytes()) && best.is_none_or(|(l, _)| name.len() > l) {
                best = Some((name.len(), v));
            }
        }
        Ok(best.map(|(l, v)| {
            self.pos += l;
            v
        }))
    }

    fn linear(&mut self) -> Result<LinearForm> {
        let mut out = LinearForm::zero();
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                break;
            };
            let coef = self.number()?;
            let var = self.variable()?;
            let c = coef.clone().unwrap_or_else(Rational::one);
            let c = if neg { -c } else { c };
            match var {
                Some(v) => out = &out + &LinearForm::term(v, c),
                None if coef.is_some() => out = out.plus_constant(&c),
                None => return invalid(format!("expected a term at byte {}", self.pos)),
            }
            first = false;
            if matches!(self.peek(), Some(b')') | None) {
                break;
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let e = self.braced_integer()?;
        e.to_integer().try_into().or_else(|_| invalid("exponent out of range"))
    }

    fn product(&mut self) -> Result<(Rational, Vec<(LinearForm, u32)>)> {
        let mut scalar = Rational::one();
        if self.eat(b'-') {
            scalar = -scalar;
        }
        if let Some(n) = self.number()? {
            scalar *= n;
        }
        let mut factors = Vec::new();
        while self.eat(b'(') {
            let f = self.linear()?;
            self.expect(b')')?;
            factors.push((f, self.exponent()?));
        }
        if self.peek().is_some() {
            return invalid(format!("trailing input at byte {}", self.pos));
        }
        Ok((scalar, factors))
    }
}

fn var_map(labels: &Labels) -> BTreeMap<String, usize> {
    let mut m: BTreeMap<String, usize> = labels.iter().map(|(v, l)| (l.clone(), *v)).collect();
    m.insert("x".into(), X_VAR);
    m
}

/// Inverse of [`factored`].
pub fn parse_factored(s: &str, labels: &Labels) -> Result<FactoredPoly> {
    let vars = var_map(labels);
    let mut p = Parser { s: s.trim().as_bytes(), pos: 0, vars: &vars };
    if p.s == b"1" {
        return Ok(FactoredPoly::one());
    }
    let (scalar, factors) = p.product()?;
    if !scalar.is_one() {
        return invalid("a factored polynomial is monic");
    }
    let mut out = Vec::new();
    for (f, m) in factors {
        if f.coeff(X_VAR) != Rational::one() {
            return invalid("each factor must be monic in x");
        }
        let root = -&(&f - &LinearForm::var(X_VAR));
        out.push((root, m));
    }
    Ok(FactoredPoly::from_factors(out))
}

/// Inverse of [`scaled`]; factors need not be normalized.
pub fn parse_scaled(s: &str, labels: &Labels) -> Result<ScaledProduct> {
    let vars = var_map(labels);
    let t = s.trim();
    if t == "0" {
        return Ok(ScaledProduct::new(Rational::zero(), []));
    }
    let mut p = Parser { s: t.as_bytes(), pos: 0, vars: &vars };
    let (scalar, factors) = p.product()?;
    Ok(ScaledProduct::new(scalar, factors))
}
