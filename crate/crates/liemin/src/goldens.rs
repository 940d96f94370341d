//! Embedded reference tables of global minimal polynomials and gap
//! functions for maximal parabolics of the exceptional algebras, stored as
//! LaTeX fragments.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{invalid, Result};
use crate::exactalg::{FactoredPoly, ScaledProduct};
use crate::gap::gap_functions;
use crate::latex::{self, Labels};
use crate::minpoly::min_poly_for;
use crate::params::{Convention, Setting};
use crate::rootsys::{trace_form, RootSystem};
use crate::weights::WeightSystem;

const SOURCES: &[(&str, &str)] = &[
    ("e6_fund1", include_str!("../goldens/e6_fund1.tex")),
    ("e7_fund7", include_str!("../goldens/e7_fund7.tex")),
    ("e8_adjoint", include_str!("../goldens/e8_adjoint.tex")),
    ("f4_fund4", include_str!("../goldens/f4_fund4.tex")),
    ("g2_fund1", include_str!("../goldens/g2_fund1.tex")),
    ("g2_gap", include_str!("../goldens/g2_gap.tex")),
];

/// What the rows of a table hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// `q_{π,Θ}(x; λ)`, compared byte for byte.
    MinPoly,
    /// `r_{α,ϖ_α}(λ)` for the single candidate, compared as products.
    Gap,
}

/// Outcome of recomputing one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub row: usize,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

/// One table: row `i` is `Θ = Ψ ∖ {α_i}` with `λ_Θ = λ Λ_i`.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub name: String,
    pub type_label: String,
    pub weight: String,
    pub convention: Convention,
    pub kind: TableKind,
    /// Label used for the single parameter, if rows share one.
    pub single_label: Option<String>,
    /// 1-based removed root and its LaTeX row.
    pub rows: Vec<(usize, String)>,
}

impl GoldenTable {
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('%') {
                continue;
            }
            let Some((k, v)) = line.split_once(':') else {
                return invalid(format!("{name}: malformed line '{line}'"));
            };
            let v = v.trim();
            match k.parse::<usize>() {
                Ok(i) => rows.push((i, v.to_string())),
                Err(_) => {
                    fields.insert(k.trim(), v);
                }
            }
        }
        let field = |k: &str| fields.get(k).map(|s| s.to_string()).ok_or_else(|| crate::Error::Invalid(format!("{name}: missing '{k}'")));
        Ok(GoldenTable {
            name: name.to_string(),
            type_label: field("type")?,
            weight: field("weight")?,
            convention: field("convention")?.parse()?,
            kind: match fields.get("kind").copied().unwrap_or("minpoly") {
                "minpoly" => TableKind::MinPoly,
                "gap" => TableKind::Gap,
                k => return invalid(format!("{name}: unknown kind '{k}'")),
            },
            single_label: fields.get("label").map(|s| s.to_string()),
            rows,
        })
    }

    /// The parameter variable for row `i` is `i`; its label as printed.
    pub fn labels(&self, i: usize) -> Labels {
        let l = self.single_label.clone().unwrap_or_else(|| format!("\\lambda_{{{i}}}"));
        [(i, l)].into_iter().collect()
    }

    fn row(&self, i: usize) -> Result<&str> {
        match self.rows.iter().find(|(k, _)| *k == i) {
            Some((_, row)) => Ok(row),
            None => invalid(format!("{}: no row {i}", self.name)),
        }
    }

    pub fn expected(&self, i: usize) -> Result<FactoredPoly> {
        latex::parse_factored(self.row(i)?, &self.labels(i))
    }

    pub fn expected_gap(&self, i: usize) -> Result<ScaledProduct> {
        latex::parse_scaled(self.row(i)?, &self.labels(i))
    }

    fn problem(&self, i: usize) -> Result<(WeightSystem, Setting, crate::rootsys::NormalizedForm)> {
        let rs = Arc::new(RootSystem::parse(&self.type_label)?);
        let ws = WeightSystem::from_spec(rs.clone(), &self.weight)?;
        let form = trace_form(&ws)?;
        let theta: Vec<usize> = (0..rs.rank()).filter(|&j| j + 1 != i).collect();
        let setting = Setting::fundamental(&rs, self.convention, &theta)?;
        Ok((ws, setting, form))
    }

    /// Recompute row `i` from scratch.
    pub fn compute(&self, i: usize) -> Result<FactoredPoly> {
        let (ws, setting, form) = self.problem(i)?;
        Ok(min_poly_for(&ws, &setting, &form).q)
    }

    /// The gap function of row `i`; the row must have one α and one candidate.
    pub fn compute_gap(&self, i: usize) -> Result<ScaledProduct> {
        let (ws, setting, form) = self.problem(i)?;
        let gaps = gap_functions(&ws, &setting, &form)?;
        match gaps.as_slice() {
            [ag] if ag.candidates.len() == 1 => Ok(ag.candidates[0].gap.r.clone()),
            _ => invalid(format!("{}: row {i} needs exactly one α and one candidate", self.name)),
        }
    }

    pub fn check(&self, i: usize) -> Result<RowCheck> {
        let expected = self.row(i)?.to_string();
        let (computed, matches) = match self.kind {
            TableKind::MinPoly => {
                let q = self.compute(i)?;
                let text = self.render(i, &q);
                let matches = text == expected && q == self.expected(i)?;
                (text, matches)
            }
            TableKind::Gap => {
                let r = self.compute_gap(i)?;
                let matches = r == self.expected_gap(i)?;
                (latex::scaled(&r, &self.labels(i)), matches)
            }
        };
        Ok(RowCheck { row: i, expected, computed, matches })
    }

    pub fn check_all(&self) -> Result<Vec<RowCheck>> {
        self.rows.iter().map(|(i, _)| self.check(*i)).collect()
    }

    pub fn render(&self, i: usize, q: &FactoredPoly) -> String {
        latex::factored(q, &self.labels(i))
    }
}

pub fn tables() -> Vec<GoldenTable> {
    SOURCES.iter().map(|(n, t)| GoldenTable::parse(n, t).expect("embedded table parses")).collect()
}

pub fn table(name: &str) -> Option<GoldenTable> {
    tables().into_iter().find(|t| t.name == name)
}
