//! Closed-form minimal polynomials for the block parabolics of the
//! classical families, standard representation.

use std::sync::Arc;

use liemin::exactalg::{int, rat, FactoredPoly, LinearForm, Rational};
use liemin::minpoly::min_poly_for;
use liemin::params::{BlockVariant, Blocks};
use liemin::rootsys::{trace_form, RootSystem};
use liemin::weights::WeightSystem;

fn compute(label: &str, ends: &[usize], variant: BlockVariant) -> (Blocks, FactoredPoly) {
    let rs = Arc::new(RootSystem::parse(label).unwrap());
    let mut spec = vec!["0"; rs.rank()];
    spec[0] = "1";
    let ws = WeightSystem::from_spec(rs.clone(), &format!("fund:{}", spec.join(","))).unwrap();
    let form = trace_form(&ws).unwrap();
    let b = Blocks::new(&rs, ends, variant).unwrap();
    let q = min_poly_for(&ws, &b.setting(&rs).unwrap(), &form).q;
    (b, q)
}

fn half(k: usize) -> Rational {
    rat(k as i64, 2)
}

/// `λ_j/2 + c`
fn root(j: usize, c: Rational) -> LinearForm {
    LinearForm::from_parts(c, [(j, rat(1, 2))])
}

/// `−λ_j/2 + c`
fn coroot(j: usize, c: Rational) -> LinearForm {
    LinearForm::from_parts(c, [(j, rat(-1, 2))])
}

fn block_sequences(n: usize) -> Vec<Vec<usize>> {
    // every composition of n
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut ends: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            ends.push(n);
            ends
        })
        .collect()
}

pub fn gl_standard() {
    for ends in block_sequences(4) {
        let (b, q) = compute("gl4", &ends, BlockVariant::Plain);
        let want = FactoredPoly::from_roots((1..=b.count()).map(|k| LinearForm::from_parts(int(b.end(k - 1) as i64), [(k, int(1))])));
        assert_eq!(q, want, "{ends:?}");
    }
}

pub fn b_standard() {
    for n in 2..=4 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let (b, q) = compute(&format!("B{n}"), &ends, BlockVariant::Plain);
            let mut roots = vec![LinearForm::constant(half(n))];
            for j in 1..=l {
                roots.push(root(j, half(b.end(j - 1))));
                roots.push(coroot(j, half(2 * n - b.end(j))));
            }
            assert_eq!(q, FactoredPoly::from_roots(roots), "B{n} {ends:?}");

            if l == 1 {
                continue;
            }
            let (b, q) = compute(&format!("B{n}"), &ends, BlockVariant::Bar);
            let mut roots = vec![LinearForm::constant(half(b.end(l - 1)))];
            for j in 1..l {
                roots.push(root(j, half(b.end(j - 1))));
                roots.push(coroot(j, half(2 * n - b.end(j))));
            }
            assert_eq!(q, FactoredPoly::from_roots(roots), "B{n} bar {ends:?}");
        }
    }
}

pub fn c_standard() {
    for n in 2..=4 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let (b, q) = compute(&format!("C{n}"), &ends, BlockVariant::Plain);
            let mut roots = Vec::new();
            for j in 1..=l {
                roots.push(root(j, half(b.end(j - 1))));
                roots.push(coroot(j, half(2 * n - b.end(j) + 1)));
            }
            assert_eq!(q, FactoredPoly::from_roots(roots), "C{n} {ends:?}");

            if l == 1 {
                continue;
            }
            let (b, q) = compute(&format!("C{n}"), &ends, BlockVariant::Bar);
            let mut roots: Vec<LinearForm> = (1..=l).map(|j| root(j, half(b.end(j - 1)))).collect();
            roots.extend((1..l).map(|j| coroot(j, half(2 * n - b.end(j) + 1))));
            // the last block carries no parameter
            let roots = roots.into_iter().map(|r| r.substitute(l, &LinearForm::zero()));
            assert_eq!(q, FactoredPoly::from_roots(roots), "C{n} bar {ends:?}");
        }
    }
}

pub fn d_standard() {
    for n in 4..=5 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let (b, q) = compute(&format!("D{n}"), &ends, BlockVariant::Plain);
            let mut roots = Vec::new();
            for j in 1..=l {
                roots.push(root(j, half(b.end(j - 1))));
                roots.push(coroot(j, half(2 * n - b.end(j) - 1)));
            }
            assert_eq!(q, FactoredPoly::from_roots(roots), "D{n} {ends:?}");

            let penultimate = if l >= 2 { ends[l - 2] } else { 0 };
            if l == 1 {
                continue;
            }
            if penultimate + 1 < n {
                let (b, q) = compute(&format!("D{n}"), &ends, BlockVariant::Bar);
                let mut roots: Vec<LinearForm> = (1..=l).map(|j| root(j, half(b.end(j - 1)))).collect();
                roots.extend((1..l).map(|j| coroot(j, half(2 * n - b.end(j) - 1))));
                let roots = roots.into_iter().map(|r| r.substitute(l, &LinearForm::zero()));
                assert_eq!(q, FactoredPoly::from_roots(roots), "D{n} bar {ends:?}");
            } else {
                let (b, q) = compute(&format!("D{n}"), &ends, BlockVariant::Prime);
                let mut roots = vec![LinearForm::constant(half(n - 1))];
                for j in 1..l {
                    roots.push(root(j, half(b.end(j - 1))));
                    roots.push(coroot(j, half(2 * n - b.end(j) - 1)));
                }
                assert_eq!(q, FactoredPoly::from_roots(roots), "D{n} prime {ends:?}");
            }
        }
    }
}
