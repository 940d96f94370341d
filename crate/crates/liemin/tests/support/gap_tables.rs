//! Gap functions of the standard representations against their closed
//! forms in the shifted block coordinates `λ̄`.

use std::sync::Arc;

use liemin::exactalg::{int, rat, LinearForm, Rational, ScaledProduct};
use liemin::gap::gap_functions;
use liemin::params::{BlockVariant, Blocks, Setting};
use liemin::rootsys::{trace_form, RootSystem};
use liemin::weights::WeightSystem;

struct Case {
    rs: Arc<RootSystem>,
    blocks: Blocks,
    setting: Setting,
    bar: Vec<LinearForm>,
    /// `(user index i, r)` for every `α′_i ∈ Θ`.
    gaps: Vec<(usize, ScaledProduct)>,
}

fn case(label: &str, ends: &[usize], variant: BlockVariant) -> Case {
    let rs = Arc::new(RootSystem::parse(label).unwrap());
    let mut spec = vec!["0"; rs.rank()];
    spec[0] = "1";
    let ws = WeightSystem::from_spec(rs.clone(), &format!("fund:{}", spec.join(","))).unwrap();
    let form = trace_form(&ws).unwrap();
    let blocks = Blocks::new(&rs, ends, variant).unwrap();
    let setting = blocks.setting(&rs).unwrap();
    let bar = blocks.bar_lambda(&rs, &setting.param);
    let gaps = gap_functions(&ws, &setting, &form)
        .unwrap()
        .into_iter()
        .map(|ag| {
            assert_eq!(ag.candidates.len(), 1, "{label} {ends:?}");
            (setting.to_user_index(&rs, ag.alpha) + 1, ag.candidates[0].gap.r.clone())
        })
        .collect();
    Case {
        rs,
        blocks,
        setting,
        bar,
        gaps,
    }
}

impl Case {
    /// `λ̄_ν`, 1-based.
    fn b(&self, nu: usize) -> LinearForm {
        self.bar[nu - 1].clone()
    }

    fn end(&self, k: usize) -> usize {
        self.blocks.end(k)
    }

    fn count(&self) -> usize {
        self.blocks.count()
    }
}

fn diff(a: LinearForm, b: LinearForm) -> LinearForm {
    &a - &b
}

fn sum(a: LinearForm, b: LinearForm) -> LinearForm {
    &a + &b
}

fn product(scale: Rational, forms: Vec<LinearForm>) -> ScaledProduct {
    ScaledProduct::from_forms(scale, forms)
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        int(1 << e)
    } else {
        rat(1, 1 << -e)
    }
}

fn block_sequences(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut ends: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            ends.push(n);
            ends
        })
        .collect()
}

/// `∏_{ν<k}(λ̄_i − λ̄_{n_ν}) ∏_{k<ν≤top}(λ̄_{i+1} − λ̄_{n_{ν−1}+1})`
fn linkage(c: &Case, i: usize, k: usize, top: usize) -> Vec<LinearForm> {
    let mut f: Vec<LinearForm> = (1..k).map(|nu| diff(c.b(i), c.b(c.end(nu)))).collect();
    f.extend((k + 1..=top).map(|nu| diff(c.b(i + 1), c.b(c.end(nu - 1) + 1))));
    f
}

pub fn gl_gap_functions() {
    let mut checked = 0;
    for n in 2..=5 {
        for ends in block_sequences(n) {
            let c = case(&format!("gl{n}"), &ends, BlockVariant::Plain);
            for (i, r) in &c.gaps {
                let k = c.blocks.block_of(*i);
                let want = product(int(1), linkage(&c, *i, k, c.count()));
                assert_eq!(*r, want, "gl{n} {ends:?} α′{i}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "{checked}");
}

pub fn b_gap_functions() {
    let half = rat(1, 2);
    let mut checked = 0;
    for n in 2..=4 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let c = case(&format!("B{n}"), &ends, BlockVariant::Plain);
            for (i, r) in &c.gaps {
                let k = c.blocks.block_of(*i);
                let mut f = linkage(&c, *i, k, l);
                f.push(c.b(i + 1).plus_constant(&-&half));
                f.extend((1..=l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                assert_eq!(*r, product(pow2(-2 * l as i64), f), "B{n} {ends:?} α′{i}");
                checked += 1;
            }
            if l == 1 {
                continue;
            }
            let c = case(&format!("B{n}"), &ends, BlockVariant::Bar);
            for (i, r) in &c.gaps {
                let want = if *i == n {
                    let mut f: Vec<LinearForm> = (1..l).map(|nu| diff(c.b(n), c.b(c.end(nu)))).collect();
                    f.extend((1..l).map(|nu| c.b(c.end(nu)).plus_constant(&half)));
                    product(pow2(2 - 2 * l as i64), f)
                } else {
                    let k = c.blocks.block_of(*i);
                    let mut f = linkage(&c, *i, k, l);
                    f.extend((1..l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                    product(pow2(2 - 2 * l as i64), f)
                };
                assert_eq!(*r, want, "B{n} bar {ends:?} α′{i}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "{checked}");
}

pub fn c_gap_functions() {
    let mut checked = 0;
    for n in 2..=4 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let c = case(&format!("C{n}"), &ends, BlockVariant::Plain);
            for (i, r) in &c.gaps {
                let k = c.blocks.block_of(*i);
                let mut f = linkage(&c, *i, k, l);
                f.extend((1..=l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                assert_eq!(*r, product(pow2(1 - 2 * l as i64), f), "C{n} {ends:?} α′{i}");
                checked += 1;
            }
            if l == 1 {
                continue;
            }
            let c = case(&format!("C{n}"), &ends, BlockVariant::Bar);
            for (i, r) in &c.gaps {
                let want = if *i == n {
                    let mut f: Vec<LinearForm> = (1..l).map(|nu| c.b(c.end(nu))).collect();
                    f.extend((1..l).map(|nu| diff(c.b(n), c.b(c.end(nu)))));
                    product(pow2(2 - 2 * l as i64), f)
                } else {
                    let k = c.blocks.block_of(*i);
                    let mut f = linkage(&c, *i, k, l);
                    f.extend((1..l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                    product(pow2(2 - 2 * l as i64), f)
                };
                assert_eq!(*r, want, "C{n} bar {ends:?} α′{i}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "{checked}");
}

pub fn d_gap_functions() {
    let mut checked = 0;
    for n in 4..=5 {
        for ends in block_sequences(n) {
            let l = ends.len();
            let c = case(&format!("D{n}"), &ends, BlockVariant::Plain);
            for (i, r) in &c.gaps {
                let k = c.blocks.block_of(*i);
                let mut f = linkage(&c, *i, k, l);
                f.extend((1..=l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                assert_eq!(*r, product(pow2(1 - 2 * l as i64), f), "D{n} {ends:?} α′{i}");
                checked += 1;
            }
            if l == 1 {
                continue;
            }
            let penultimate = ends[l - 2];
            if penultimate + 1 < n {
                let c = case(&format!("D{n}"), &ends, BlockVariant::Bar);
                for (i, r) in &c.gaps {
                    let want = if *i == n {
                        let mut f: Vec<LinearForm> = (1..l).map(|nu| diff(c.b(n), c.b(c.end(nu)))).collect();
                        f.extend((1..l).map(|nu| diff(c.b(n - 1), c.b(c.end(nu)))));
                        let sign = if l % 2 == 0 { int(-1) } else { int(1) };
                        product(sign * pow2(2 - 2 * l as i64), f)
                    } else {
                        let k = c.blocks.block_of(*i);
                        let mut f = linkage(&c, *i, k, l);
                        f.extend((1..l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                        product(pow2(2 - 2 * l as i64), f)
                    };
                    assert_eq!(*r, want, "D{n} bar {ends:?} α′{i}");
                    checked += 1;
                }
            } else {
                let c = case(&format!("D{n}"), &ends, BlockVariant::Prime);
                for (i, r) in &c.gaps {
                    let k = c.blocks.block_of(*i);
                    let mut f = vec![c.b(i + 1)];
                    f.extend((1..k).map(|nu| diff(c.b(*i), c.b(c.end(nu)))));
                    f.extend((k + 1..l).map(|nu| diff(c.b(i + 1), c.b(c.end(nu - 1) + 1))));
                    f.extend((1..l).map(|nu| sum(c.b(i + 1), c.b(c.end(nu)))));
                    assert_eq!(*r, product(pow2(2 - 2 * l as i64), f), "D{n} prime {ends:?} α′{i}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 20, "{checked}");
}

pub fn setting_is_psi_prime() {
    let c = case("gl3", &[1, 3], BlockVariant::Plain);
    assert_eq!(c.gaps.len(), 1);
    assert_eq!(c.gaps[0].0, 2);
    assert_eq!(c.setting.user_theta, vec![1]);
    assert_eq!(c.rs.rank(), 2);
}
