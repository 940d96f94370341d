//! Invariants over randomly drawn types, highest weights, Θ and λ.

use std::sync::Arc;

use liemin::exactalg::{int, rat, Rational};
use liemin::gap::{extremal_low_weights, extremal_weights_by_scan};
use liemin::linalg;
use liemin::minpoly::{global_min_poly, min_poly_at, power_sums};
use liemin::params::Parametrization;
use liemin::rootsys::{trace_form, RootSystem};
use liemin::weights::WeightSystem;
use proptest::prelude::*;

const LABELS: [&str; 10] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "gl3"];

/// A type, nonzero small Dynkin labels and a proper Θ mask.
fn instance() -> impl Strategy<Value = (Arc<RootSystem>, Vec<i64>, Vec<usize>)> {
    (0..LABELS.len(), prop::collection::vec(0i64..=2, 4), prop::collection::vec(any::<bool>(), 4)).prop_filter_map(
        "trivial or oversized representation",
        |(k, labels, mask)| {
            let rs = Arc::new(RootSystem::parse(LABELS[k]).unwrap());
            let r = rs.rank();
            let labels = labels[..r].to_vec();
            let theta: Vec<usize> = (0..r).filter(|&i| mask[i]).collect();
            let top = rs.from_fundamental(&labels.iter().map(|&c| int(c)).collect::<Vec<_>>()).unwrap();
            let size_ok = labels.iter().any(|&c| c > 0) && rs.weyl_dimension(&top) <= 400;
            (size_ok && theta.len() < r).then_some((rs, labels, theta))
        },
    )
}

fn weights(rs: &Arc<RootSystem>, labels: &[i64]) -> WeightSystem {
    let top = rs.from_fundamental(&labels.iter().map(|&c| int(c)).collect::<Vec<_>>()).unwrap();
    WeightSystem::new(rs.clone(), top).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplicities_sum_to_weyl_dimension((rs, labels, _) in instance()) {
        let ws = weights(&rs, &labels);
        let total: u64 = ws.weights().iter().map(|w| w.mult).sum();
        prop_assert_eq!(total, rs.weyl_dimension(ws.highest()));
        prop_assert_eq!(ws.dim(), total);
        // the weight multiset is Weyl invariant
        for i in 0..rs.rank() {
            for w in ws.weights() {
                prop_assert_eq!(ws.multiplicity(&rs.reflect(i, &w.eps)), w.mult);
            }
        }
    }

    #[test]
    fn reflections_are_isometric_involutions((rs, labels, _) in instance(), i in 0usize..4) {
        let i = i % rs.rank();
        let mu = rs.from_fundamental(&labels.iter().map(|&c| int(c) - rat(1, 2)).collect::<Vec<_>>()).unwrap();
        let s = rs.reflect(i, &mu);
        prop_assert_eq!(rs.reflect(i, &s), mu.clone());
        prop_assert_eq!(linalg::dot(&s, &s), linalg::dot(&mu, &mu));
        let dot = rs.dot_action(&[i], &mu);
        prop_assert_eq!(rs.dot_action(&[i], &dot), mu);
    }

    #[test]
    fn trace_form_is_probe_independent((rs, labels, _) in instance()) {
        let ws = weights(&rs, &labels);
        let form = trace_form(&ws).unwrap();
        // T⁽²⁾ = C_π · Σ ε_i² on the semisimple part
        if rs.center_directions().is_empty() {
            let t2 = power_sums(&ws, 2);
            for a in rs.simple_roots() {
                let at: liemin::exactalg::Assignment = a.iter().enumerate().map(|(i, c)| (i + 1, c.clone())).collect();
                prop_assert_eq!(&(t2.eval(&at).unwrap() / linalg::dot(a, a)), form.c());
            }
            prop_assert!(power_sums(&ws, 1).is_zero());
        }
    }

    #[test]
    fn min_poly_coefficients_and_linkage((rs, labels, theta) in instance(), values in prop::collection::vec(-6i64..=6, 4)) {
        let ws = weights(&rs, &labels);
        let form = trace_form(&ws).unwrap();
        let ts = rs.theta(&theta).unwrap();
        let param = Parametrization::fundamental(&rs, &theta);
        let res = global_min_poly(&ws, &ts, &param, &form);
        prop_assert_eq!(res.q.degree() as usize, res.omega.len());
        for e in &res.entries {
            for p in param.params() {
                prop_assert_eq!(e.mu.coeff(p.var), form.pair(&p.basis, &e.weight.eps));
            }
        }
        let vals: Vec<Rational> = param.params().iter().zip(&values).map(|(_, &v)| rat(v, 2)).collect();
        let a = param.assignment(&vals).unwrap();
        // linked weights share their root value (asserted inside)
        let ev = min_poly_at(&res, &ws, &param, &form, &a).unwrap();
        let members: usize = ev.classes.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(members, res.entries.len());
        prop_assert_eq!(ev.minimal, ev.roots.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn extremal_chains_hold((rs, labels, _) in instance(), alpha in 0usize..4) {
        let ws = weights(&rs, &labels);
        let alpha = alpha % rs.rank();
        let chains = extremal_low_weights(&ws, alpha);
        let scan = extremal_weights_by_scan(&ws, alpha);
        prop_assert_eq!(chains.len(), scan.len());
        for c in &chains {
            prop_assert!(c.check_invariants(&ws).is_ok());
        }
    }
}
