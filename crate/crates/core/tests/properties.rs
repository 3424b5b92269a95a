//! Randomised invariants of the public API.

use askey_core::charts::{chart_coeffs, chart_to_family, ChartId, ChartPoint};
use askey_core::families::{positivity_check, recurrence_coeffs, wilson_bc, FamilyInstance};
use askey_core::harness::{emit_table, run_suite, SuiteConfig, TableFormat};
use askey_core::polyrec::{
    build_monic_sequence, evaluate, evaluate_by_recurrence, rescale_coeffs, unrescale_coeffs,
    AffineScale, RecurrenceCoeffs,
};
use askey_core::scalar::{Backend, Complex};
use askey_core::transitions::{transition, transition_domain, TransitionKind, TransitionPair};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Coordinates away from the boundary, where the direct route is well
/// conditioned in binary64.
fn coords(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.05f64..1.0, dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rescaling_round_trips(
        rho in prop_oneof![-4.0f64..-0.25, 0.25f64..4.0],
        sigma in -3.0f64..3.0,
        b0 in -5.0f64..5.0,
        c0 in 0.0f64..5.0,
    ) {
        let rc = RecurrenceCoeffs::new(move |n| (b0 + n as f64, c0 * n as f64), None);
        let s = AffineScale::new(rho, sigma).unwrap();
        let back = unrescale_coeffs(&rescale_coeffs(&rc, s), s);
        for n in 0..8 {
            let (b, c) = back.pair(n);
            let (eb, ec) = rc.pair(n);
            prop_assert!(rel(b, eb) < 1e-13 && rel(c, ec) < 1e-13);
        }
    }

    #[test]
    fn recurrence_values_match_expanded_polynomials(
        bs in prop::collection::vec(-2.0f64..2.0, 8),
        cs in prop::collection::vec(0.1f64..2.0, 8),
        x in -2.0f64..2.0,
    ) {
        let (bs2, cs2) = (bs.clone(), cs.clone());
        let rc = RecurrenceCoeffs::new(move |n| (bs2[n], if n == 0 { 0.0 } else { cs2[n] }), None);
        let ps = build_monic_sequence(&rc, 7).unwrap();
        let vs = evaluate_by_recurrence(&rc, x, 7).unwrap();
        for (p, v) in ps.iter().zip(&vs) {
            prop_assert!(rel(evaluate(p, x), *v) < 1e-10);
            prop_assert_eq!(*p.coeffs().last().unwrap(), 1.0);
        }
    }

    #[test]
    fn wilson_symmetric_under_swaps(
        ar in 0.1f64..2.0, ai in -2.0f64..2.0, br in 0.1f64..2.0, bi in -2.0f64..2.0,
    ) {
        let a = Complex::new(ar, ai);
        let b = Complex::new(br, bi);
        let p = [a, b, a.conj(), b.conj()];
        let f = FamilyInstance::Wilson { a: p[0], b: p[1], c: p[2], d: p[3] };
        prop_assert!(positivity_check(&f).ok);
        for n in 0..6 {
            let (b0, c0) = wilson_bc(p[0], p[1], p[2], p[3], n).unwrap();
            let (b1, c1) = wilson_bc(p[3], p[2], p[0], p[1], n).unwrap();
            prop_assert!(b0.im.abs() < 1e-9 * b0.re.abs().max(1.0));
            prop_assert!(c0.im.abs() < 1e-9 * c0.re.abs().max(1.0));
            prop_assert!(rel(b0.re, b1.re) < 1e-11 && rel(c0.re, c1.re) < 1e-11);
            if n > 0 {
                prop_assert!(c0.re > 0.0);
            }
        }
    }

    #[test]
    fn chart_coefficients_match_the_direct_route(
        chart in prop::sample::select(ChartId::ALL.to_vec()),
        x in coords(4),
    ) {
        let x = x[..chart.dim()].to_vec();
        if let Ok(p) = ChartPoint::new(chart, x) {
            let (family, scale) = chart_to_family(&p).unwrap();
            let direct = rescale_coeffs(&recurrence_coeffs(&family).unwrap(), scale);
            for n in 0..=6 {
                let (b, c) = chart_coeffs(&p, n).unwrap();
                let (db, dc) = direct.pair(n);
                prop_assert!(rel(b, db) < 1e-8 && rel(c, dc) < 1e-8, "{} n={}: {} {} vs {} {}", p, n, b, c, db, dc);
            }
        }
    }

    #[test]
    fn transitions_invert(
        kind in prop::sample::select(vec![TransitionKind::T12, TransitionKind::T23, TransitionKind::T13]),
        forward in any::<bool>(),
        x in coords(4),
    ) {
        let pair = if forward { TransitionPair::forward(kind) } else { TransitionPair::backward(kind) };
        if let Ok(p) = ChartPoint::new(pair.source(), x) {
            if transition_domain(pair, &p).ok {
                let q = transition(pair, &p).unwrap();
                prop_assert_eq!(q.chart, pair.target());
                let back = transition(pair.inverse(), &q).unwrap();
                for (a, b) in back.coords.iter().zip(&p.coords) {
                    prop_assert!(rel(*a, *b) < 1e-9, "{} -> {} -> {}", p, q, back);
                }
            }
        }
    }

    #[test]
    fn tables_round_trip_through_json(
        chart in prop::sample::select(ChartId::ALL.to_vec()),
        x in coords(4),
    ) {
        let x = x[..chart.dim()].to_vec();
        if let Ok(p) = ChartPoint::new(chart, x) {
            let text = emit_table(chart, &p, 4, TableFormat::Json).unwrap();
            let v: serde_json::Value = serde_json::from_str(&text).unwrap();
            let rows = v["rows"].as_array().unwrap();
            prop_assert_eq!(rows.len(), 5);
            for (n, row) in rows.iter().enumerate() {
                let (b, c) = chart_coeffs(&p, n).unwrap();
                prop_assert_eq!(row["B"].as_f64().unwrap(), b);
                if n > 0 {
                    prop_assert_eq!(row["C"].as_f64().unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for name in ["chart-consistency", "transitions", "wilson-reality"] {
        let config = SuiteConfig::new(Backend::Binary64)
            .with_seed(7)
            .with_samples(5);
        let a = serde_json::to_string(&run_suite(name, &config).unwrap().details).unwrap();
        let b = serde_json::to_string(&run_suite(name, &config).unwrap().details).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn seeds_change_the_sampled_points() {
    let run = |seed| {
        let config = SuiteConfig::new(Backend::Binary64)
            .with_seed(seed)
            .with_samples(5);
        run_suite("chart-consistency", &config).unwrap().max_rel_err
    };
    assert_ne!(run(1), run(2));
}
