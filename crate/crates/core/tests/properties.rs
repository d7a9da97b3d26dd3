use framescope::classifier::verdict_from_toeplitz;
use framescope::frame_bounds::{frame_bounds_subspace, witness_values, SubspaceOptions};
use framescope::linalg::{hermitian_eigenvalues, spectral_norm};
use framescope::sampling_lab::{run_dynamical, DynExperiment};
use framescope::toeplitz_ops::{analysis_section, block_lower_bound, hankel_section, toeplitz_section};
use framescope::windows::Xi;
use framescope::*;
use num_rational::Rational64;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn complex_trig() -> impl Strategy<Value = WindowSpec> {
    prop::collection::vec((-4i64..=4, coeff()), 1..6).prop_map(|c| WindowSpec::trig_poly(c).unwrap())
}

fn real_trig() -> impl Strategy<Value = WindowSpec> {
    prop::collection::vec((0i64..=4, coeff()), 1..5).prop_map(|c| WindowSpec::real_trig_poly(c).unwrap())
}

fn piecewise() -> impl Strategy<Value = WindowSpec> {
    (prop::collection::vec(0.05f64..0.95, 0..3), prop::collection::vec(prop::collection::vec(-2.0f64..2.0, 1..4), 3))
        .prop_map(|(mut cuts, polys)| {
            cuts.sort_by(f64::total_cmp);
            cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
            let mut edges = vec![-0.5];
            edges.extend(cuts.iter().map(|c| c - 0.5));
            edges.push(0.5);
            let pieces = edges
                .windows(2)
                .zip(polys.iter().cycle())
                .map(|(e, p)| Piece { a: e[0], b: e[1], poly: p.clone() })
                .collect();
            WindowSpec::piecewise(pieces).unwrap()
        })
}

fn any_window() -> impl Strategy<Value = WindowSpec> {
    prop_oneof![
        complex_trig(),
        real_trig(),
        piecewise(),
        (-3.0f64..3.0).prop_map(|x| WindowSpec::modulated(Xi::Float(x))),
        coeff().prop_map(WindowSpec::constant),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution(w in any_window()) {
        let back = w.reflect_conj().reflect_conj();
        for n in -12..=12 {
            prop_assert!((back.fourier_coeff(n) - w.fourier_coeff(n)).norm() <= 1e-12 * (1.0 + w.fourier_coeff(n).norm()));
        }
    }

    #[test]
    fn reflected_section_is_conjugate(w in any_window(), n in 1usize..=64) {
        let t = toeplitz_section(&w, n).unwrap().data;
        let r = toeplitz_section(&w.reflect_conj(), n).unwrap().data;
        prop_assert_eq!(r, t.map(|z| z.conj()));
    }

    #[test]
    fn hermitian_iff_real(w in any_window(), n in 2usize..=12) {
        let t = toeplitz_section(&w, n).unwrap().data;
        let defect = (&t - t.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        let real = w.is_real();
        // a nonreal window can still give a Hermitian section when its
        // offending coefficients sit beyond the section
        if real {
            prop_assert!(defect <= 1e-12);
        }
        if defect <= 1e-12 && n >= 9 {
            if let WindowKind::TrigPoly(_) = w.kind() {
                prop_assert!(real);
            }
        }
    }

    #[test]
    fn real_sections_stay_in_the_hull(w in prop_oneof![real_trig(), piecewise()], n in 1usize..=64) {
        let hull = w.real_hull().unwrap().widened(1e-9);
        for e in hermitian_eigenvalues(&toeplitz_section(&w, n).unwrap().data) {
            prop_assert!(hull.contains(e), "{} outside [{}, {}]", e, hull.lo, hull.hi);
        }
    }

    #[test]
    fn section_norm_grows_to_sup_norm(w in any_window()) {
        let norms: Vec<f64> = [4usize, 8, 16, 32].iter().map(|&n| spectral_norm(&toeplitz_section(&w, n).unwrap().data)).collect();
        for p in norms.windows(2) {
            prop_assert!(p[1] >= p[0] - 1e-12);
        }
        prop_assert!(norms[3] <= w.sup_norm() + 1e-9);
    }

    #[test]
    fn analysis_section_is_bessel(w in any_window(), n in 1usize..=24) {
        let t = spectral_norm(&toeplitz_section(&w, n).unwrap().data);
        let h = spectral_norm(&hankel_section(&w, n).unwrap().data);
        let phi = spectral_norm(&analysis_section(&w, n).unwrap().data);
        prop_assert!(phi * phi <= (2.0 * t * t).max(2.0 * h * h + 1.0) + 1e-9);
    }

    #[test]
    fn parseval_for_trig_polys(w in complex_trig()) {
        let WindowKind::TrigPoly(c) = w.kind() else { unreachable!() };
        let energy: f64 = c.values().map(|z| z.norm_sqr()).sum();
        let grid = 4096;
        let quad: f64 = (0..grid).map(|i| {
            let x = -0.5 + (i as f64 + 0.5) / grid as f64;
            w.evaluate(x).unwrap().norm_sqr()
        }).sum::<f64>() / grid as f64;
        prop_assert!((energy - quad).abs() <= 1e-10 * (1.0 + energy));
    }

    #[test]
    fn real_windows_are_never_incomplete(w in prop_oneof![real_trig(), piecewise()]) {
        prop_assume!(!w.is_zero());
        prop_assert_ne!(classify(&w).status, Status::Incomplete);
    }

    #[test]
    fn verdict_agrees_with_toeplitz_dictionary(w in any_window()) {
        let v = classify(&w);
        if v.status != Status::Unknown {
            prop_assert_eq!(verdict_from_toeplitz(v.toeplitz, true).unwrap(), v.status);
        }
    }

    #[test]
    fn modulated_agreement_on_rationals(p in -36i64..=36, q in prop::sample::select(vec![1i64, 2, 3, 4, 6, 12])) {
        let xi = Xi::Exact(Rational64::new(p, q));
        prop_assume!(xi.value().abs() <= 3.0);
        let v = classify_modulated(xi);
        prop_assert_eq!(v.toeplitz, toeplitz_verdict_modulated(xi));
        prop_assert_eq!(verdict_from_toeplitz(v.toeplitz, true).unwrap(), v.status);
    }

    #[test]
    fn bessel_upper_bound(w in prop_oneof![real_trig(), complex_trig(), piecewise()], m in 1usize..=8) {
        let e = frame_bounds_subspace(&w, m, SubspaceOptions { truncation: 512 }).unwrap();
        prop_assert!(e.b_m <= 1.0 + w.sup_norm().powi(2) + e.tail + 1e-9);
    }

    #[test]
    fn frame_bounds_are_monotone(w in prop_oneof![real_trig(), complex_trig()]) {
        let e: Vec<_> = [2usize, 4, 8].iter().map(|&m| frame_bounds_subspace(&w, m, SubspaceOptions::default()).unwrap()).collect();
        for p in e.windows(2) {
            prop_assert!(p[1].a_m <= p[0].a_m + 1e-9);
            prop_assert!(p[1].b_m >= p[0].b_m - 1e-9);
        }
    }

    #[test]
    fn block_bound_holds_for_random_blocks(c1 in 0.1f64..2.0, c2 in 0.0f64..4.0, seed in any::<u64>()) {
        use nalgebra::DMatrix;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 4;
        let mut a = DMatrix::<Complex64>::from_fn(n, n, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let mut b = DMatrix::<Complex64>::from_fn(n, n, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        // rescale so that sigma_min(A) = c1 and ||B|| = c2 exactly
        let sa = a.clone().singular_values();
        a *= Complex64::new(c1 / sa.min(), 0.0);
        let sb = b.clone().singular_values();
        b *= Complex64::new(c2 / sb.max(), 0.0);
        let mut phi = DMatrix::<Complex64>::identity(2 * n, 2 * n);
        phi.view_mut((0, 0), (n, n)).copy_from(&a);
        phi.view_mut((0, n), (n, n)).copy_from(&b);
        let smin = phi.singular_values().min();
        prop_assert!(smin * smin >= block_lower_bound(c1, c2).unwrap() - 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn witness_is_odd(t in 0.3f64..1.5) {
        let pos = witness_values(t, 1, 3).unwrap();
        let neg = witness_values(t, -3, -1).unwrap();
        for (p, q) in pos.iter().zip(neg.iter().rev()) {
            prop_assert!((q.1 - p.1.conj()).norm() <= 1e-8);
            prop_assert!((q.1 + p.1).norm() <= 1e-8);
        }
    }

    #[test]
    fn riesz_scheme_recovers_every_seed(seed in any::<u64>(), n in 4usize..=24) {
        let r = run_dynamical(DynExperiment::Cosine, n, seed, 0.0).unwrap();
        prop_assert!(r.relative_error <= 1e-8);
        prop_assert!(r.condition_number >= 1.0);
    }
}
