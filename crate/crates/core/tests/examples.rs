//! Worked examples, checked through the public API against hand-derived
//! values.

use askey_core::charts::{
    chart_coeffs, chart_to_family, continuity_probe, face_restriction, verify_face, BoundaryFace,
    ChartId, ChartPoint,
};
use askey_core::families::hyp::{hyp_terminating, monic_via_hyp, HypKind};
use askey_core::families::{
    positivity_check, racah_an_cn, racah_bc, recurrence_coeffs, wilson_bc, FamilyId,
    FamilyInstance, PositivityCase,
};
use askey_core::harness::{identify, run_suite, sample_interior, Model, Sample, SuiteConfig};
use askey_core::polyrec::{
    build_monic_sequence, evaluate, hankel_determinant, polys_from_moments, rescale_coeffs,
    unrescale_coeffs, AffineScale, MomentSequence, RecurrenceCoeffs,
};
use askey_core::scalar::{Backend, Complex};
use askey_core::transitions::{
    transition, transition_domain, transition_domain_coords, verify_transition, TransitionKind,
    TransitionPair,
};
use askey_core::AskeyError;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn hermite() -> RecurrenceCoeffs<f64> {
    RecurrenceCoeffs::new(|n| (0.0, n as f64 / 2.0), None)
}

fn cx(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn wilson_case1() -> [Complex<f64>; 4] {
    [cx(1.0, 0.0), cx(1.0, -1.0), cx(1.0, 0.0), cx(1.0, 1.0)]
}

// ---------------------------------------------------------------------------
// polyrec

#[test]
fn hermite_sequence_by_recurrence() {
    let ps = build_monic_sequence(&hermite(), 3).unwrap();
    assert_eq!(ps[0].coeffs(), &[1.0]);
    assert_eq!(ps[2].coeffs(), &[-0.5, 0.0, 1.0]);
    assert_eq!(ps[3].coeffs(), &[0.0, -1.5, 0.0, 1.0]);
    assert_eq!(build_monic_sequence(&hermite(), 0).unwrap().len(), 1);
}

#[test]
fn evaluation_by_substitution() {
    let ps = build_monic_sequence(&hermite(), 3).unwrap();
    assert_eq!(evaluate(&ps[2], 1.0), 0.5);
    assert_eq!(evaluate(&ps[0], 7.3), 1.0);
    assert_eq!(evaluate(&ps[3], 2.0), 5.0);
}

#[test]
fn rescaling_contract() {
    let rc = RecurrenceCoeffs::new(|n| (n as f64, 1.0), None);
    let s = AffineScale::new(2.0, 3.0).unwrap();
    let r = rescale_coeffs(&rc, s);
    for n in 1..6 {
        assert_eq!(r.pair(n), (2.0 * n as f64 + 6.0, 4.0));
        assert_eq!(unrescale_coeffs(&r, s).pair(n), rc.pair(n));
        assert_eq!(
            rescale_coeffs(&rc, AffineScale::identity()).pair(n),
            rc.pair(n)
        );
    }
}

#[test]
fn laguerre_rescaled_towards_hermite() {
    let alpha = 7.5;
    let lag = recurrence_coeffs(
        &FamilyInstance::from_params(FamilyId::Laguerre, &[cx(alpha, 0.0)]).unwrap(),
    )
    .unwrap();
    let rho = (2.0 * alpha).powf(-0.5);
    let r = rescale_coeffs(&lag, AffineScale::new(rho, -alpha).unwrap());
    for n in 1..6 {
        let nf = n as f64;
        let (b, c) = r.pair(n);
        assert!(close(b, rho * (2.0 * nf + 1.0), 1e-14));
        assert!(close(c, nf * (nf + alpha) / (2.0 * alpha), 1e-14));
    }
}

#[test]
fn hahn_face_unrescaled_is_monic_hahn() {
    // Hahn face {3} of the first Racah chart.
    let t = [0.5, 0.5, 0.0, 0.5];
    let p = ChartPoint::new(ChartId::Racah1, t.to_vec()).unwrap();
    let rec = face_restriction::<f64>(ChartId::Racah1, p.zero_set()).unwrap();
    let (rho, sigma) = (rec.scale)(&p.coords);
    let chart = RecurrenceCoeffs::new(move |n| chart_coeffs(&p, n).unwrap(), None);
    let back = unrescale_coeffs(&chart, AffineScale::new(rho, sigma).unwrap());
    // Hahn(α, β, N) with α = 1/t₁, β = 1/(t₁t₂), N = 1/(t₂t₄).
    let hahn =
        FamilyInstance::from_params(FamilyId::Hahn, &[cx(2.0, 0.0), cx(4.0, 0.0), cx(4.0, 0.0)])
            .unwrap();
    let direct = recurrence_coeffs(&hahn).unwrap();
    for n in 0..=4 {
        let (b, c) = back.pair(n);
        let (hb, hc) = direct.pair(n);
        assert!(
            close(b, hb, 1e-12) && close(c, hc, 1e-12),
            "n={n}: {b} {c} vs {hb} {hc}"
        );
    }
}

#[test]
fn moments_to_polynomials() {
    let lag = MomentSequence::new(vec![1.0, 1.0, 2.0, 6.0, 24.0]).unwrap();
    let ps = polys_from_moments(&lag, 2).unwrap();
    let expect = [2.0, -4.0, 1.0];
    for (a, b) in ps[2].coeffs().iter().zip(expect) {
        assert!(close(*a, b, 1e-13));
    }
    let ps = polys_from_moments(&MomentSequence::new(vec![2.0, 3.0, 7.0]).unwrap(), 1).unwrap();
    assert!(close(ps[1].coeffs()[0], -1.5, 1e-15));

    let herm = MomentSequence::new(vec![1.0, 0.0, 0.5, 0.0, 0.75]).unwrap();
    let from_moments = polys_from_moments(&herm, 2).unwrap();
    let from_recurrence = build_monic_sequence(&hermite(), 2).unwrap();
    for (a, b) in from_moments[2]
        .coeffs()
        .iter()
        .zip(from_recurrence[2].coeffs())
    {
        assert!(close(*a, *b, 1e-14));
    }
}

#[test]
fn hankel_determinants() {
    let m = MomentSequence::new(vec![1.0, 1.0, 2.0]).unwrap();
    assert!(close(hankel_determinant(&m, 2).unwrap(), 1.0, 1e-15));
    assert_eq!(hankel_determinant(&m, 0).unwrap(), 1.0);
    let m = MomentSequence::new(vec![1.0, 0.0, 0.5]).unwrap();
    assert!(close(hankel_determinant(&m, 2).unwrap(), 0.5, 1e-15));
}

// ---------------------------------------------------------------------------
// families

#[test]
fn racah_hand_values() {
    let (a0, c0) = racah_an_cn(1.0, 1.0, 2.0, 4.0, 0).unwrap();
    assert!(close(a0, 6.0, 1e-15));
    assert_eq!(c0, 0.0);
    // Hand substitution into cₙ (γ = −N−1): 1·6·2·2/(4·5).
    let (_, c1) = racah_an_cn(1.0, 1.0, 2.0, 4.0, 1).unwrap();
    assert!(close(c1, 1.2, 1e-15), "c1 = {c1}");
}

#[test]
fn wilson_case1_is_real_and_positive() {
    let [a, b, c, d] = wilson_case1();
    let (_, c0) = wilson_bc(a, b, c, d, 0).unwrap();
    assert_eq!((c0.re, c0.im), (0.0, 0.0));
    let (b1, c1) = wilson_bc(a, b, c, d, 1).unwrap();
    assert!(b1.im.abs() < 1e-14 && c1.im.abs() < 1e-14);
    assert!(c1.re > 0.0);
}

#[test]
fn direct_recurrences() {
    let h =
        recurrence_coeffs(&FamilyInstance::from_params(FamilyId::Hermite, &[]).unwrap()).unwrap();
    let l = recurrence_coeffs(
        &FamilyInstance::from_params(FamilyId::Laguerre, &[cx(0.5, 0.0)]).unwrap(),
    )
    .unwrap();
    for n in 1..8 {
        let nf = n as f64;
        assert_eq!(h.pair(n), (0.0, nf / 2.0));
        let (b, c) = l.pair(n);
        assert!(close(b, 2.0 * nf + 1.5, 1e-15) && close(c, nf * (nf + 0.5), 1e-15));
    }
    let legendre =
        FamilyInstance::from_params(FamilyId::Jacobi, &[cx(0.0, 0.0), cx(0.0, 0.0)]).unwrap();
    let (b1, c1) = recurrence_coeffs(&legendre).unwrap().pair(1);
    assert!(b1.abs() < 1e-15);
    assert!(close(c1, 1.0 / 3.0, 1e-15));
}

#[test]
fn hypergeometric_sums() {
    let z = cx(0.3, 0.0);
    let (b, c) = (cx(2.5, 0.0), cx(1.5, 0.0));
    assert_eq!(
        hyp_terminating(HypKind::F21, &[cx(-1.0, 0.0), b], &[c], z, 0)
            .unwrap()
            .re,
        1.0
    );
    let one_term = hyp_terminating(HypKind::F21, &[cx(-1.0, 0.0), b], &[c], z, 1).unwrap();
    assert!(close(one_term.re, 1.0 - 2.5 * 0.3 / 1.5, 1e-15));

    let racah = FamilyInstance::Racah {
        alpha: 1.0,
        beta: 1.0,
        n: 2.0,
        delta: 4.0,
    };
    for x in [0.0, 1.0, -2.5, 6.0] {
        assert!(close(monic_via_hyp(&racah, x, 1).unwrap(), x - 6.0, 1e-13));
        assert_eq!(monic_via_hyp(&racah, x, 0).unwrap(), 1.0);
    }
    // Racah R₁ at y = 0 (x = 0) is 1 after normalisation: r₁(0) = −a₀.
    let (a0, _) = racah_bc(1.0, 1.0, 2.0, 4.0, 0).unwrap();
    assert!(close(monic_via_hyp(&racah, 0.0, 1).unwrap(), -a0, 1e-13));

    let [a, b, c, d] = wilson_case1();
    let w = FamilyInstance::Wilson { a, b, c, d };
    // Monic: w₁(x) − w₁(0) = x.
    let slope = monic_via_hyp(&w, 1.0, 1).unwrap() - monic_via_hyp(&w, 0.0, 1).unwrap();
    assert!(close(slope, 1.0, 1e-13));
}

#[test]
fn positivity_verdicts() {
    let ok = |delta: f64| {
        positivity_check(&FamilyInstance::Racah {
            alpha: 1.0,
            beta: 1.0,
            n: 2.0,
            delta,
        })
    };
    assert!(ok(4.0).ok);
    assert!(!ok(2.0).ok);
    let [a, b, c, d] = wilson_case1();
    let v = positivity_check(&FamilyInstance::Wilson { a, b, c, d });
    assert!(v.ok);
    assert_eq!(v.case_label, Some(PositivityCase::WilsonCase1));
}

// ---------------------------------------------------------------------------
// charts

#[test]
fn chart_parameter_maps() {
    let racah =
        |chart, x: [f64; 4]| match chart_to_family(&ChartPoint::new(chart, x.to_vec()).unwrap())
            .unwrap()
            .0
        {
            FamilyInstance::Racah {
                alpha,
                beta,
                n,
                delta,
            } => [alpha, beta, n, delta],
            other => panic!("{other:?}"),
        };
    for (got, want) in racah(ChartId::Racah1, [0.5; 4])
        .iter()
        .zip([2.0, 4.0, 4.0, 18.0])
    {
        assert!(close(*got, want, 1e-14));
    }
    for (got, want) in racah(ChartId::Racah2, [1.0, 1.0, 1.0, 0.5])
        .iter()
        .zip([2.0, 4.0, 2.0, 7.0])
    {
        assert!(close(*got, want, 1e-14));
    }
    let p = ChartPoint::new(ChartId::Wilson1, vec![1.0; 4]).unwrap();
    match chart_to_family(&p).unwrap().0 {
        FamilyInstance::Wilson { a, b, c, d } => {
            for (got, want) in [a, b, c, d].iter().zip(wilson_case1()) {
                assert!(
                    close(got.re, want.re, 1e-14) && close(got.im, want.im, 1e-14),
                    "{got:?}"
                );
            }
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn racah1_origin_and_interior() {
    let origin = ChartPoint::new(ChartId::Racah1, vec![0.0; 4]).unwrap();
    for n in 0..10 {
        assert_eq!(chart_coeffs(&origin, n).unwrap(), (0.0, n as f64));
    }
    // Interior: the direct Racah route, rescaled by the chart's (ρ, σ).
    let p = ChartPoint::new(ChartId::Racah1, vec![0.5; 4]).unwrap();
    let (_, scale) = chart_to_family(&p).unwrap();
    let (b, c) = racah_bc(2.0, 4.0, 4.0, 18.0, 1).unwrap();
    let (rb, rc) = scale.apply(b, c);
    let (cb, cc) = chart_coeffs(&p, 1).unwrap();
    assert!(close(cb, rb, 1e-13) && close(cc, rc, 1e-13));
}

#[test]
fn wilson1_unit_point_matches_complex_route() {
    let p = ChartPoint::new(ChartId::Wilson1, vec![1.0; 4]).unwrap();
    let (_, scale) = chart_to_family(&p).unwrap();
    let [a, b, c, d] = wilson_case1();
    let (wb, wc) = wilson_bc(a, b, c, d, 1).unwrap();
    let (rb, rc) = scale.apply(wb.re, wc.re);
    let (cb, cc) = chart_coeffs(&p, 1).unwrap();
    assert!(cc > 0.0);
    assert!(close(cb, rb, 1e-13) && close(cc, rc, 1e-13));
}

#[test]
fn printed_restrictions() {
    let hahn = face_restriction::<f64>(ChartId::Racah1, BoundaryFace::from_indices(&[3])).unwrap();
    assert_eq!(hahn.target, FamilyId::Hahn);
    let t = [0.25, 0.5, 0.0, 0.2];
    let params: Vec<f64> = (hahn.params)(&t).params().iter().map(|v| v.re).collect();
    for (got, want) in params.iter().zip([4.0, 8.0, 10.0]) {
        assert!(close(*got, want, 1e-14), "{params:?}");
    }

    let corner =
        face_restriction::<f64>(ChartId::Racah1, BoundaryFace::from_indices(&[1, 2, 3, 4]))
            .unwrap();
    assert_eq!(corner.target, FamilyId::Hermite);
    let (rho, sigma) = (corner.scale)(&[0.0; 4]);
    assert!(close(rho, 2f64.sqrt(), 1e-15));
    assert_eq!(sigma, 0.0);

    let cdh = face_restriction::<f64>(ChartId::Wilson2, BoundaryFace::from_indices(&[4])).unwrap();
    assert_eq!(cdh.target, FamilyId::ContinuousDualHahn);
}

#[test]
fn face_verifications() {
    let cases: [(ChartId, &[usize], Vec<f64>); 3] = [
        (ChartId::Racah1, &[3], vec![0.5, 0.5, 0.0, 0.5]),
        (ChartId::Racah1, &[1, 2, 3, 4], vec![0.0; 4]),
        (ChartId::Wilson1, &[3], vec![1.0, 1.0, 0.0, 1.0]),
    ];
    for (chart, face, x) in cases {
        let p = ChartPoint::new(chart, x).unwrap();
        let rep = verify_face(chart, BoundaryFace::from_indices(face), &p, 4, 1e-10).unwrap();
        assert!(rep.pass, "{rep:?}");
    }
    let rep = verify_face(
        ChartId::Wilson1,
        BoundaryFace::from_indices(&[3]),
        &ChartPoint::new(ChartId::Wilson1, vec![1.0, 1.0, 0.0, 1.0]).unwrap(),
        4,
        1e-10,
    )
    .unwrap();
    assert_eq!(rep.target, FamilyId::Jacobi);
}

#[test]
fn racah1_continuity_from_the_half_point() {
    let base = ChartPoint::new(ChartId::Racah1, vec![0.5; 4]).unwrap();
    let rep = continuity_probe(
        ChartId::Racah1,
        BoundaryFace::from_indices(&[1]),
        &base,
        20,
        8,
    )
    .unwrap();
    assert!(rep.monotone_tail, "{:?}", rep.gaps);
    assert!(rep.final_gap < 1e-6, "final gap {:e}", rep.final_gap);
}

#[test]
fn jacobi2d_corner_approach() {
    let base = ChartPoint::new(ChartId::Jacobi2D, vec![1.0, 1.0]).unwrap();
    let rep = continuity_probe(
        ChartId::Jacobi2D,
        BoundaryFace::from_indices(&[1, 2]),
        &base,
        20,
        8,
    )
    .unwrap();
    assert!(rep.monotone_tail);
    let corner = ChartPoint::new(ChartId::Jacobi2D, vec![0.0, 0.0]).unwrap();
    for n in 0..9 {
        let (b, c) = chart_coeffs(&corner, n).unwrap();
        assert_eq!(b, 0.0);
        assert!(close(c, 4.0 * n as f64, 1e-15));
    }
}

#[test]
fn racah2_approach_to_its_hermite_face() {
    let base = ChartPoint::new(ChartId::Racah2, vec![1.0, 1.0, 1.0, 0.5]).unwrap();
    let rep = continuity_probe(
        ChartId::Racah2,
        BoundaryFace::from_indices(&[2]),
        &base,
        20,
        8,
    )
    .unwrap();
    // The gaps first grow, then decay like 2^{−k/2} (a square-root approach).
    assert!(rep.monotone_tail);
    let peak = rep.gaps.iter().cloned().fold(0.0, f64::max);
    assert!(rep.final_gap < peak * 1e-2, "{:?}", rep.gaps);
    let k = rep.gaps.len();
    assert!(close(
        rep.gaps[k - 1] / rep.gaps[k - 2],
        0.5f64.sqrt(),
        1e-2
    ));
}

// ---------------------------------------------------------------------------
// transitions

#[test]
fn t12_hand_point() {
    let s = ChartPoint::new(ChartId::Racah2, vec![1.0, 1.0, 1.0, 0.5]).unwrap();
    let t = transition(TransitionPair::backward(TransitionKind::T12), &s).unwrap();
    for (got, want) in t.coords.iter().zip([0.5, 0.5, 0.8, 1.0]) {
        assert!(close(*got, want, 1e-14), "{t}");
    }
    let fwd = TransitionPair::forward(TransitionKind::T12);
    let back = transition(fwd.inverse(), &transition(fwd, &t).unwrap()).unwrap();
    for (a, b) in back.coords.iter().zip(&t.coords) {
        assert!(close(*a, *b, 1e-12));
    }
    let rep = verify_transition(fwd.inverse(), &s, 6, 1e-10).unwrap();
    assert!(rep.pass, "{rep:?}");
}

#[test]
fn transition_domains() {
    let fwd12 = TransitionPair::forward(TransitionKind::T12);
    let inside = ChartPoint::new(ChartId::Racah1, vec![0.5, 0.5, 0.8, 1.0]).unwrap();
    assert!(transition_domain(fwd12, &inside).ok);
    // t₁t₃(1+t₂t₄) = 1 is on the closure, outside the open chart domain.
    assert!(ChartPoint::new(ChartId::Racah1, vec![1.0, 0.0, 1.0, 1.0]).is_err());
    assert!(!transition_domain_coords(fwd12, &[1.0, 0.0, 1.0, 1.0]).ok);

    // T = t₂²t₃²(t₄−t₁²)² − 4t₁²t₂t₃(1 − t₁t₃(1+t₂t₄)) = −1/4 here.
    let negative_t = ChartPoint::new(ChartId::Racah1, vec![1.0, 0.5, 0.5, 1.0]).unwrap();
    assert!(matches!(
        transition(TransitionPair::forward(TransitionKind::T13), &negative_t),
        Err(AskeyError::OutOfDomain(_))
    ));

    // S = s₄²(1+2s₁+s₁²−s₁²s₂s₃)² − 4s₁²s₃s₄(1+s₁) = 0.09 − 0.8 here.
    let negative_s = ChartPoint::new(ChartId::Racah2, vec![1.0, 1.0, 1.0, 0.1]).unwrap();
    let d = transition_domain(TransitionPair::forward(TransitionKind::T23), &negative_s);
    assert!(!d.ok);
    assert!(d.failed.iter().any(|c| c.contains('S')), "{:?}", d.failed);
}

#[test]
fn krawtchouk_face_identification() {
    // t₁ = 0: the Krawtchouk box of the first chart maps to s₁ = 0.
    let t = ChartPoint::new(ChartId::Racah1, vec![0.0, 0.5, 0.8, 1.0]).unwrap();
    let pair = TransitionPair::forward(TransitionKind::T12);
    let s = transition(pair, &t).unwrap();
    assert_eq!(s.coords[0], 0.0);
    let rep = verify_transition(pair, &t, 6, 1e-10).unwrap();
    assert!(rep.pass && rep.same_family, "{rep:?}");
}

// ---------------------------------------------------------------------------
// harness

#[test]
fn consistency_suite_at_the_stated_configuration() {
    let config = SuiteConfig::new(Backend::Binary64)
        .with_seed(42)
        .with_samples(100)
        .with_n_max(8)
        .with_tol(1e-8);
    assert!(run_suite("chart-consistency", &config).unwrap().pass);
}

#[test]
fn transitions_suite_defaults() {
    let r = run_suite("transitions", &SuiteConfig::default()).unwrap();
    assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.tol, 1e-10);
}

#[test]
fn limits_suite_defaults() {
    let r = run_suite("limits", &SuiteConfig::default()).unwrap();
    assert!(
        r.pass,
        "{:?}",
        r.failures()
            .map(|c| (&c.name, c.max_rel_err))
            .collect::<Vec<_>>()
    );
}

#[test]
fn identify_examples() {
    let hermite: Vec<Sample> = (0..8)
        .map(|n| Sample {
            n,
            b: 0.0,
            c: n as f64 / 2.0,
        })
        .collect();
    let r = identify(&hermite).unwrap();
    assert_eq!(r.matched, Some(Model::Family(FamilyId::Hermite)));
    assert_eq!(r.best().residual, 0.0);

    let laguerre: Vec<Sample> = (0..8)
        .map(|n| Sample {
            n,
            b: 2.0 * n as f64 + 1.0,
            c: (n * n) as f64,
        })
        .collect();
    let r = identify(&laguerre).unwrap();
    assert_eq!(r.matched, Some(Model::Family(FamilyId::Laguerre)));
    assert!(r.best().params[0].abs() < 1e-8);

    let p = ChartPoint::new(ChartId::Racah1, vec![0.5; 4]).unwrap();
    let s: Vec<Sample> = (0..=10)
        .map(|n| {
            let (b, c) = chart_coeffs(&p, n).unwrap();
            Sample { n, b, c }
        })
        .collect();
    let r = identify(&s).unwrap();
    assert_eq!(r.best().model, Model::Chart(ChartId::Racah1));
    for x in &r.best().params {
        assert!(close(*x, 0.5, 1e-6), "{:?}", r.best());
    }
}

#[test]
fn interior_samples() {
    for p in sample_interior::<f64>(ChartId::Racah1, 1, 3).unwrap() {
        let t = &p.coords;
        assert!(t[0] * t[2] < 1.0 && t[1] * t[3] < 1.0);
    }
    let js = sample_interior::<f64>(ChartId::Jacobi2D, 5, 5).unwrap();
    assert_eq!(js.len(), 5);
    assert!(js
        .iter()
        .flat_map(|p| &p.coords)
        .all(|&v| v > 1e-3 && v <= 1.0));
    let us = sample_interior::<f64>(ChartId::Racah3, 7, 10).unwrap();
    assert_eq!(us.len(), 10);
    for p in us {
        let u = &p.coords;
        assert!(u[1] * u[1] * u[2] * u[3] < 1.0 && u[1] * u[2] * (u[0] - u[1]) < 1.0);
    }
}
