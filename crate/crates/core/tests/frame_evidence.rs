use framescope::frame_bounds::{exp_system_bounds, frame_bounds_subspace, gamma_of_xi, FrequencySet, Ray, SubspaceOptions};
use framescope::sampling_lab::{forward_condition, full_space_min_rayleigh, split_scheme};
use framescope::windows::{builtin, BUILTIN_NAMES};
use framescope::*;

fn opts() -> SubspaceOptions {
    SubspaceOptions::default()
}

/// `e^{-πiξx}` carries `span{e_k}` onto `span{e^{2πi(k-ξ/2)x}}`, so the form
/// of `F(g_ξ)` on degree-M polynomials is the form of `E(Γ_ξ + ξ/2)` there.
#[test]
fn modulated_windows_match_shifted_exponential_systems() {
    for xi in [0.25, -0.25, 0.4, -0.4] {
        let shifted = FrequencySet {
            rays: vec![Ray::new(0.0, 1, 0).unwrap(), Ray::new(xi, -1, 1).unwrap()],
            extra: vec![],
        };
        for m in [2usize, 4, 8, 16] {
            let a = frame_bounds_subspace(&WindowSpec::modulated(Xi::Float(xi)), m, opts()).unwrap();
            let b = exp_system_bounds(&shifted, m, 2048).unwrap();
            let tails = a.tail + b.tail;
            assert!((a.a_m - b.a_m).abs() <= tails, "xi {xi}, M {m}: {} vs {}", a.a_m, b.a_m);
            assert!((a.b_m - b.b_m).abs() <= tails, "xi {xi}, M {m}: {} vs {}", a.b_m, b.b_m);
        }
    }
}

#[test]
fn gamma_is_the_translate_of_the_shifted_set() {
    // Γ_ξ + ξ/2 = N₀ ∪ (ξ + N⁻)
    let xi = 0.4;
    let g = gamma_of_xi(xi).enumerate(6);
    let shifted = FrequencySet { rays: vec![Ray::new(0.0, 1, 0).unwrap(), Ray::new(xi, -1, 1).unwrap()], extra: vec![] };
    let mut moved: Vec<f64> = g.iter().map(|l| l + xi / 2.0).collect();
    moved.sort_by(f64::total_cmp);
    let direct = shifted.points_in(-5.7, 5.0);
    for (a, b) in moved.iter().filter(|x| (-5.7..=5.0).contains(*x)).zip(direct.iter()) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn verdicts_agree_with_frame_evidence() {
    let mut windows: Vec<(String, WindowSpec)> =
        BUILTIN_NAMES.iter().map(|n| (n.to_string(), builtin(n).unwrap())).collect();
    for xi in ["-1", "-1/2", "-1/4", "1/4", "3/4", "9/4", "-0.4", "0.4"] {
        windows.push((format!("xi={xi}"), WindowSpec::modulated(Xi::parse(xi).unwrap())));
    }
    for (name, w) in windows {
        let status = classify(&w).status;
        let e4 = frame_bounds_subspace(&w, 4, opts()).unwrap();
        let e16 = frame_bounds_subspace(&w, 16, opts()).unwrap();
        let e32 = frame_bounds_subspace(&w, 32, opts()).unwrap();
        match status {
            Status::RieszBasis | Status::FrameNotRiesz => {
                assert!(e16.a_m - e16.tail > 0.01, "{name}: A_16 - tail = {}", e16.a_m - e16.tail)
            }
            Status::CompleteOnly | Status::Incomplete => {
                assert!(e32.a_m <= e4.a_m / 1.5, "{name}: A_4 = {}, A_32 = {}", e4.a_m, e32.a_m)
            }
            other => panic!("{name}: unexpected {other:?}"),
        }
    }
}

#[test]
fn slow_decay_at_three_halves() {
    // complete but not a frame, yet the lower bound falls off slowly
    let w = WindowSpec::modulated(Xi::parse("3/2").unwrap());
    let a: Vec<f64> = [4usize, 32, 128].iter().map(|&m| frame_bounds_subspace(&w, m, opts()).unwrap().a_m).collect();
    assert!(a[0] > a[1] && a[1] > a[2]);
    assert!(a[1] > a[0] / 1.5);
}

#[test]
fn incomplete_systems_miss_a_direction() {
    let e = frame_bounds_subspace(&WindowSpec::modulated(Xi::Float(-1.0)), 8, opts()).unwrap();
    assert!(e.a_m < 1e-12);
}

#[test]
fn bessel_bound_on_builtins() {
    for name in BUILTIN_NAMES {
        let w = builtin(name).unwrap();
        for m in [4usize, 16] {
            let e = frame_bounds_subspace(&w, m, opts()).unwrap();
            assert!(e.b_m <= 1.0 + w.sup_norm().powi(2) + e.tail, "{name}");
        }
    }
}

#[test]
fn cosine_scheme_condition_tracks_frame_bounds() {
    let ghat = builtin("cosine").unwrap();
    for n in [5usize, 11, 24] {
        let cond = forward_condition(&split_scheme(ghat.clone()), n).unwrap();
        let e = frame_bounds_subspace(&ghat, n, opts()).unwrap();
        let predicted = (e.b_m / e.a_m).sqrt();
        assert!((cond - predicted).abs() <= 0.05 * predicted, "N {n}: {cond} vs {predicted}");
    }
}

#[test]
fn sawtooth_scheme_grows_at_odd_truncations() {
    let c: Vec<f64> = [7usize, 15, 31]
        .iter()
        .map(|&n| forward_condition(&split_scheme(WindowSpec::sawtooth()), n).unwrap())
        .collect();
    assert!(c[1] > 1.8 * c[0] && c[2] > 1.8 * c[1], "{c:?}");
}

#[test]
fn derivative_instability_continues() {
    let q: Vec<f64> = [4usize, 8, 16, 32, 64].iter().map(|&m| full_space_min_rayleigh(m).unwrap()).collect();
    for p in q.windows(2) {
        assert!(p[1] < p[0] / 2.0, "{q:?}");
    }
}
