//! Structural checks of the gap machinery: chains, existence conditions,
//! the gl block linkage and the recursion closed forms.

use std::sync::Arc;

use liemin::exactalg::{int, rat, Rational};
use liemin::gap::exist::strongly_regular;
use liemin::gap::gln::{coset_orbit, gl_bar_lambda};
use liemin::gap::{closed_form_residuals, extremal_low_weights, gapexist_check, gln_linkage_check, Recursion};
use liemin::linalg;
use liemin::params::{Convention, Setting};
use liemin::rootsys::RootSystem;
use liemin::weights::WeightSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT: usize = 100_000;

fn random_theta(rng: &mut ChaCha8Rng, rank: usize) -> Vec<usize> {
    loop {
        let t: Vec<usize> = (0..rank).filter(|_| rng.gen_bool(0.5)).collect();
        if t.len() < rank {
            return t;
        }
    }
}

/// `λ_Θ = Σ_{j∉Θ} c_j Λ_j` with small integer or half-integer `c_j`.
fn random_lambda(rng: &mut ChaCha8Rng, rs: &RootSystem, theta: &[usize]) -> Vec<Rational> {
    let mut v = linalg::zeros(rs.dim());
    for j in (0..rs.rank()).filter(|j| !theta.contains(j)) {
        let c = if rng.gen_bool(0.25) { rat(rng.gen_range(-5..=5), 2) } else { int(rng.gen_range(-3..=2)) };
        v = linalg::axpy(&v, &c, rs.fundamental_weight(j));
    }
    v
}

pub fn existence_conditions_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let systems: Vec<RootSystem> =
        ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"].iter().map(|l| RootSystem::parse(l).unwrap()).collect();
    let (mut dominant, mut singular, mut failing) = (0, 0, 0);
    while dominant < 200 {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let theta = random_theta(&mut rng, rs.rank());
        let ts = rs.theta(&theta).unwrap();
        let lambda = random_lambda(&mut rng, rs, &theta);
        let g = gapexist_check(rs, &ts, &lambda, LIMIT).unwrap();
        if !g.dominant {
            continue;
        }
        dominant += 1;
        singular += usize::from(!g.regular);
        failing += usize::from(!g.all());
        assert_eq!(g.singular_roots_orthogonal, g.orbits_meet_once, "{} Θ={theta:?} λ={lambda:?}", rs.label());
        assert_eq!(g.orbits_meet_once, g.cosets_separate, "{} Θ={theta:?} λ={lambda:?}", rs.label());
        if g.regular {
            assert!(g.all());
        }
    }
    assert!(singular >= 20 && failing >= 5, "{singular} singular, {failing} failing");
}

pub fn existence_fails_on_non_orthogonal_singular_root() {
    let rs = RootSystem::parse("A2").unwrap();
    let ts = rs.theta(&[0]).unwrap();
    // λ = −Λ₂ makes ⟨λ + ρ, α₂⟩ = 0 while α₂ is not ⊥ α₁
    let lambda = linalg::neg(rs.fundamental_weight(1));
    let g = gapexist_check(&rs, &ts, &lambda, LIMIT).unwrap();
    assert!(g.dominant && !g.regular);
    assert!(!g.singular_roots_orthogonal && !g.orbits_meet_once && !g.cosets_separate);
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut ends: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            ends.push(n);
            ends
        })
        .collect()
}

pub fn gl_linkage_matches_set_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut linked = 0;
    for n in 2..=6 {
        for ends in compositions(n) {
            for _ in 0..12 {
                let lambda: Vec<Rational> = ends.iter().map(|_| rat(rng.gen_range(-4..=4), 2)).collect();
                for b in gln_linkage_check(&ends, &lambda).unwrap() {
                    assert_eq!(b.by_orbit, b.by_sets, "{ends:?} λ={lambda:?} block {}", b.block);
                    linked += usize::from(b.by_orbit);
                }
            }
        }
    }
    assert!(linked >= 50, "{linked}");
}

pub fn gl_linkage_examples() {
    let ends = [2, 4];
    assert_eq!(coset_orbit(&ends, &gl_bar_lambda(&ends, &[int(0), int(10)]).unwrap()).len(), 6);
    // disjoint value sets never link
    let r = gln_linkage_check(&ends, &[int(0), int(10)]).unwrap();
    assert!(r.iter().all(|b| !b.by_orbit && !b.by_sets));
    // λ̄ = (a, a+1 | b+2, b+3) with b + 2 = a + 1: Λ₁ ∩ Λ₂ = {a+1}
    let r = gln_linkage_check(&ends, &[int(0), int(-1)]).unwrap();
    assert!(r.iter().any(|b| b.by_orbit && b.by_sets));
    // Λ₁ = Λ₂ gives no violation from either side
    let r = gln_linkage_check(&ends, &[int(0), int(-2)]).unwrap();
    assert!(r.iter().all(|b| !b.by_sets && !b.by_orbit));
}

pub fn recursion_closed_forms_to_eight() {
    let checks = closed_form_residuals(8);
    assert!(checks.iter().all(|c| c.zero_residual), "{:?}", checks.iter().find(|c| !c.zero_residual));
    let mut r = Recursion::default();
    assert!(!r.f(5, 6).is_zero());
}

pub fn f4_extremal_low_weights() {
    let rs = Arc::new(RootSystem::parse("F4").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "fund:0,0,0,1").unwrap();
    let setting = Setting::fundamental(&rs, Convention::PsiPrime, &[]).unwrap();
    let mut found = Vec::new();
    for user in 1..=4 {
        let chains = extremal_low_weights(&ws, setting.to_internal_index(&rs, user - 1));
        assert_eq!(chains.len(), 1);
        let eps = setting.to_user(&rs, &chains[0].extremal().eps);
        found.push(rs.simple_coords(&eps));
    }
    let want: Vec<Vec<Rational>> = [[1, 1, 2, 1], [1, 2, 2, 1], [1, 2, 3, 1], [1, 2, 3, 2]]
        .iter()
        .map(|r| r.iter().map(|&c| int(c)).collect())
        .collect();
    assert_eq!(found, want);
}

pub fn chain_invariants_over_corpus() {
    for (label, spec) in [
        ("E6", "fund:1,0,0,0,0,0"),
        ("E7", "fund:0,0,0,0,0,0,1"),
        ("F4", "fund:0,0,0,1"),
        ("G2", "fund:1,0"),
        ("G2", "adjoint"),
        ("B4", "fund:0,0,0,1"),
        ("C4", "fund:0,1,0,0"),
        ("D5", "fund:0,0,0,0,1"),
        ("A5", "fund:0,0,1,0,0"),
    ] {
        let rs = Arc::new(RootSystem::parse(label).unwrap());
        let ws = WeightSystem::from_spec(rs.clone(), spec).unwrap();
        for a in 0..rs.rank() {
            let chains = extremal_low_weights(&ws, a);
            assert!(!chains.is_empty() && chains.len() <= 3, "{label} {spec} α{a}");
            for c in chains {
                c.check_invariants(&ws).unwrap();
            }
        }
    }
}

pub fn strong_regularity_allows_odd_sign_changes() {
    assert!(strongly_regular(&[int(3), int(2), int(1)]));
    assert!(!strongly_regular(&[int(3), int(-2), int(2)]));
    assert!(!strongly_regular(&[int(3), int(0), int(1)]));
}

pub fn type_specific_examples() {
    use liemin::gap::exist::iota_hat;
    use liemin::rootsys::Family;
    assert_eq!(iota_hat(Family::E, 6, 4), (6, vec![4, 5, 6]));
    assert_eq!(iota_hat(Family::F, 4, 2), (1, vec![1, 2]));

    let rs = Arc::new(RootSystem::parse("gl4").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "eps:1,0,0,0").unwrap();
    let setting = Setting::fundamental(&rs, Convention::Psi, &[0, 2]).unwrap();
    let v = liemin::gap::prop_every_certify(&ws, &setting, &linalg::zeros(rs.dim()), LIMIT).unwrap();
    assert!(v.holds && v.clause == "natural");

    // D5, no spin node in Θ, λ = 0: ρ is strongly regular
    let rs = Arc::new(RootSystem::parse("D5").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "fund:1,0,0,0,0").unwrap();
    let setting = Setting::fundamental(&rs, Convention::PsiPrime, &[0, 1]).unwrap();
    let v = liemin::gap::prop_every_certify(&ws, &setting, &linalg::zeros(rs.dim()), LIMIT).unwrap();
    assert!(v.holds, "{v:?}");

    let rs = Arc::new(RootSystem::parse("E6").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "fund:1,0,0,0,0,0").unwrap();
    let setting = Setting::fundamental(&rs, Convention::PsiPrime, &[3]).unwrap();
    let v = liemin::gap::prop_every_certify(&ws, &setting, &linalg::zeros(rs.dim()), LIMIT).unwrap();
    assert_eq!(v.ideals, vec![6]);
    assert!(v.holds, "{v:?}");

    let rs = Arc::new(RootSystem::parse("A3").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "fund:0,1,0").unwrap();
    let setting = Setting::fundamental(&rs, Convention::Psi, &[0]).unwrap();
    assert!(liemin::gap::prop_every_certify(&ws, &setting, &linalg::zeros(rs.dim()), LIMIT).is_err());
}

pub fn certified_and_dominant_implies_existence() {
    use liemin::gap::{gap_certify, Verdict};
    use liemin::rootsys::trace_form;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut certified = 0;
    for (label, spec) in [("G2", "fund:1,0"), ("B3", "fund:1,0,0"), ("C3", "fund:1,0,0"), ("A3", "fund:0,1,0"), ("B2", "fund:1,1")] {
        let rs = Arc::new(RootSystem::parse(label).unwrap());
        let ws = WeightSystem::from_spec(rs.clone(), spec).unwrap();
        let form = trace_form(&ws).unwrap();
        for _ in 0..15 {
            let theta = random_theta(&mut rng, rs.rank());
            if theta.is_empty() {
                continue;
            }
            let setting = Setting::fundamental(&rs, Convention::Psi, &theta).unwrap();
            let values: Vec<Rational> = setting.param.params().iter().map(|_| int(rng.gen_range(-3..=3))).collect();
            let a = setting.param.assignment(&values).unwrap();
            let cert = gap_certify(&ws, &setting, &form, &a).unwrap();
            if cert.verdict == Verdict::Certified && cert.dominant {
                certified += 1;
                let lambda = setting.param.vector(rs.dim(), &a).unwrap();
                let g = gapexist_check(&rs, &setting.theta, &lambda, LIMIT).unwrap();
                assert!(g.all(), "{label} {spec} Θ={theta:?} λ={values:?}");
            }
        }
    }
    assert!(certified >= 20, "{certified}");
}

pub fn g2_gap_vanishes_at_minus_one() {
    use liemin::gap::gap_certify;
    use liemin::rootsys::trace_form;
    let rs = Arc::new(RootSystem::parse("G2").unwrap());
    let ws = WeightSystem::from_spec(rs.clone(), "fund:1,0").unwrap();
    let form = trace_form(&ws).unwrap();
    let setting = Setting::fundamental(&rs, Convention::Psi, &[0]).unwrap();
    let cert = gap_certify(&ws, &setting, &form, &setting.param.assignment(&[int(-1)]).unwrap()).unwrap();
    assert!(cert.values[0][0] == int(0));
    assert_eq!(cert.verdict.name(), "not_certified");
    let cert = gap_certify(&ws, &setting, &form, &setting.param.assignment(&[int(0)]).unwrap()).unwrap();
    assert!(cert.annihilator);
}
