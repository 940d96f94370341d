//! Randomized cross-checks of the minimal polynomial against independent
//! routes: Klimyk tensor decomposition and the closed forms for special
//! representations.

use std::sync::Arc;

use liemin::branching::{eigenvalue_set, klimyk_eigenvalues, parabolic_hypothesis};
use liemin::exactalg::{int, Rational};
use liemin::minpoly::{global_min_poly, min_poly_at, specialized_min_poly, SpecialKind};
use liemin::params::Parametrization;
use liemin::rootsys::{trace_form, RootSystem};
use liemin::weights::{levi_decompose_minuscule, WeightSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rep(label: &str, spec: &str) -> WeightSystem {
    WeightSystem::from_spec(Arc::new(RootSystem::parse(label).unwrap()), spec).unwrap()
}

fn fund(rank: usize, i: usize) -> String {
    let v: Vec<&str> = (0..rank).map(|j| if j == i { "1" } else { "0" }).collect();
    format!("fund:{}", v.join(","))
}

/// Proper subset of the simple roots, possibly empty.
pub fn random_theta(rng: &mut ChaCha8Rng, rank: usize) -> Vec<usize> {
    loop {
        let t: Vec<usize> = (0..rank).filter(|_| rng.gen_bool(0.5)).collect();
        if t.len() < rank {
            return t;
        }
    }
}

/// Small representations of every simple type up to rank 6.
fn small_reps() -> Vec<WeightSystem> {
    let mut out = Vec::new();
    for r in 1..=6 {
        out.push(rep(&format!("A{r}"), &fund(r, 0)));
        if r >= 3 {
            out.push(rep(&format!("A{r}"), &fund(r, 1)));
        }
    }
    for r in 2..=6 {
        out.push(rep(&format!("B{r}"), &fund(r, 0)));
        out.push(rep(&format!("C{r}"), &fund(r, 0)));
    }
    out.push(rep("B3", &fund(3, 2)));
    for r in 4..=6 {
        out.push(rep(&format!("D{r}"), &fund(r, 0)));
    }
    out.push(rep("D4", &fund(4, 3)));
    out.extend([rep("G2", "fund:1,0"), rep("G2", "adjoint"), rep("F4", "fund:0,0,0,1"), rep("E6", &fund(6, 0)), rep("A2", "adjoint")]);
    out
}

/// Roots of `q_{π,Θ}(·; λ)` against the eigenvalue sets from Levi branching
/// and from Klimyk's formula, for dominant integral `λ` satisfying the
/// parabolic hypothesis. Returns the number of instances checked.
pub fn klimyk_oracle(count: usize, seed: u64) -> usize {
    let reps = small_reps();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < count {
        attempts += 1;
        assert!(attempts < 200 * count, "too few admissible instances");
        let ws = &reps[rng.gen_range(0..reps.len())];
        let rs = ws.root_system();
        let form = trace_form(ws).unwrap();
        let theta = random_theta(&mut rng, rs.rank());
        let ts = rs.theta(&theta).unwrap();
        let param = Parametrization::fundamental(rs, &theta);
        let values: Vec<Rational> = param.params().iter().map(|_| int(rng.gen_range(0..=3))).collect();
        let a = param.assignment(&values).unwrap();
        let lambda = param.vector(rs.dim(), &a).unwrap();
        if rs.weyl_dimension(&lambda) > 3000 || parabolic_hypothesis(&ws.dual().unwrap(), &lambda, &ts).is_err() {
            continue;
        }
        let res = global_min_poly(ws, &ts, &param, &form);
        let ev = min_poly_at(&res, ws, &param, &form, &a).unwrap();
        let mut roots: Vec<Rational> = ev.roots.iter().map(|(v, _)| v.clone()).collect();
        roots.sort();
        roots.dedup();
        let ctx = format!("{} hw={:?} Θ={theta:?} λ={values:?}", rs.label(), ws.highest_labels());
        assert_eq!(roots, eigenvalue_set(ws, &ts, &form, &lambda), "{ctx}");
        assert_eq!(roots, klimyk_eigenvalues(ws, &form, &lambda).unwrap(), "{ctx}");
        checked += 1;
    }
    checked
}

/// Instances of the closed forms: `(label, highest weight spec, kind)`.
fn special_cases() -> Vec<(String, String, SpecialKind)> {
    use SpecialKind::*;
    let mut v: Vec<(String, String, SpecialKind)> = Vec::new();
    let mut add = |l: &str, s: String, k| v.push((l.to_string(), s, k));
    for (l, r) in [("A3", 3), ("A5", 5), ("B3", 3), ("B4", 4), ("C3", 3), ("C4", 4), ("D4", 4), ("D5", 5), ("G2", 2), ("F4", 4), ("E6", 6)] {
        add(l, "adjoint".into(), Adjoint);
        add(l, fund(r, 0), MultiplicityFree);
    }
    add("G2", "fund:1,0".into(), MultiplicityFree);
    add("E7", "adjoint".into(), Adjoint);
    add("E8", "adjoint".into(), Adjoint);
    add("E7", fund(7, 6), Minuscule);
    for (l, r, i) in [("A3", 3, 0), ("A4", 4, 1), ("A5", 5, 2), ("B3", 3, 2), ("B4", 4, 3), ("C3", 3, 0), ("D4", 4, 0), ("D5", 5, 4), ("D5", 5, 3), ("E6", 6, 0), ("E6", 6, 5)] {
        add(l, fund(r, i), Minuscule);
    }
    // F4 ϖ₄ is not multiplicity free: keep it out of the closed forms
    v.retain(|(l, s, k)| !(l == "F4" && *k == MultiplicityFree && s != "adjoint"));
    v
}

/// The closed forms for multiplicity-free, adjoint and minuscule `π` against
/// the generic algorithm. Returns the number of `(π, Θ)` instances.
pub fn specialized_vs_generic(per_case: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for (label, spec, kind) in special_cases() {
        let ws = rep(&label, &spec);
        let rs = ws.root_system();
        let form = trace_form(&ws).unwrap();
        let rounds = if rs.rank() >= 7 { 2 } else { per_case };
        for round in 0..rounds {
            let theta = if round == 0 { Vec::new() } else { random_theta(&mut rng, rs.rank()) };
            let ts = rs.theta(&theta).unwrap();
            let param = Parametrization::fundamental(rs, &theta);
            let generic = global_min_poly(&ws, &ts, &param, &form).q;
            let special = specialized_min_poly(&ws, &ts, &param, &form, kind).unwrap();
            assert_eq!(special, generic, "{label} {spec} {kind:?} Θ={theta:?}");
            checked += 1;
        }
    }
    checked
}

/// Coefficients of the maximal coroot in the simple coroots.
pub fn max_coroot_marks(rs: &RootSystem) -> Vec<i64> {
    let coroot = |k: usize| -> Vec<Rational> {
        let a = &rs.positive_roots()[k];
        let na = liemin::linalg::dot(a, a);
        (0..rs.rank())
            .map(|i| {
                let s = rs.simple_root(i);
                int(rs.positive_coords()[k][i]) * liemin::linalg::dot(s, s) / &na
            })
            .collect()
    };
    let best = (0..rs.positive_roots().len())
        .map(coroot)
        .max_by_key(|c| c.iter().sum::<Rational>())
        .unwrap();
    best.iter().map(|c| c.to_integer().try_into().unwrap()).collect()
}

/// Minuscule fundamental representations for every simple type up to rank 8:
/// the weights form the orbit of the dominant minuscule weight, and the
/// minuscule ones are exactly `Λ_i` with coroot mark 1. Returns the number of
/// `(type, i)` pairs examined.
pub fn minuscule_classification() -> usize {
    let mut labels = Vec::new();
    for r in 1..=8 {
        labels.push(format!("A{r}"));
    }
    for r in 2..=8 {
        labels.push(format!("B{r}"));
    }
    for r in 3..=8 {
        labels.push(format!("C{r}"));
    }
    for r in 4..=8 {
        labels.push(format!("D{r}"));
    }
    labels.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    let mut examined = 0;
    for label in labels {
        let rs = Arc::new(RootSystem::parse(&label).unwrap());
        let marks = max_coroot_marks(&rs);
        for i in 0..rs.rank() {
            let top = rs.fundamental_weight(i).clone();
            // the sl₂ string criterion on the highest weight alone
            let by_pairing = rs.positive_roots().iter().all(|a| rs.coroot_pairing(&top, a) <= int(1));
            assert_eq!(by_pairing, marks[i] == 1, "{label} Λ{}", i + 1);
            examined += 1;
            if rs.weyl_dimension(&top) > 20_000 {
                continue;
            }
            let ws = WeightSystem::new(rs.clone(), top.clone()).unwrap();
            assert_eq!(ws.is_minuscule(), marks[i] == 1, "{label} Λ{}", i + 1);
            let smallest = ws.weights().iter().map(|w| liemin::linalg::dot(&w.eps, &w.eps)).min().unwrap();
            assert_eq!(liemin::linalg::dot(&top, &top) == smallest, marks[i] == 1, "{label} Λ{}", i + 1);
            if ws.is_minuscule() {
                let orbit = rs.orbit(&ws.dominant_minuscule_weight(), 1 << 20).unwrap();
                assert_eq!(orbit.len() as u64, ws.dim(), "{label} Λ{}", i + 1);
                assert!(orbit.iter().all(|v| ws.multiplicity(v) == 1));
                let ts = rs.theta(&[]).unwrap();
                assert_eq!(levi_decompose_minuscule(&ws, &ts).unwrap().len(), orbit.len());
            }
        }
    }
    examined
}
