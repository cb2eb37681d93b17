//! Ridge, loss curve and the distinguished amplitudes.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use coherence_core::optimize::maximize_loss;
use coherence_core::{
    dirac_coherence_loss, dirac_limit_coherence, loss_curve, maximize_alpha, ridge, FieldKind,
    Grid, ModeParameters, SeriesOptions,
};

fn limit_argmax() -> f64 {
    ((5.0 - 5f64.sqrt()) / 5.0).sqrt()
}

#[test]
fn limit_stationary_point_solves_quadratic() {
    // x = alpha^2 stationary where 5x^2 - 10x + 4 = 0.
    let x = limit_argmax().powi(2);
    assert!((5.0 * x * x - 10.0 * x + 4.0).abs() < 1e-12);
    // Central difference of the limit in x vanishes there.
    let f = |x: f64| dirac_limit_coherence(ModeParameters::new(x.sqrt()).unwrap());
    let h = 1e-5;
    assert!(((f(x + h) - f(x - h)) / (2.0 * h)).abs() < 1e-8);
}

#[test]
fn grid_scan_argmax_of_loss() {
    let n = 10_000;
    let (mut best_a, mut best) = (0.0, f64::MIN);
    for i in 0..=n {
        let a = i as f64 / n as f64;
        let d = dirac_coherence_loss(ModeParameters::new(a).unwrap());
        if d > best {
            best = d;
            best_a = a;
        }
    }
    assert!((best_a - 0.4f64.sqrt()).abs() < 1e-3);
    let m = maximize_loss(1e-9).unwrap();
    assert!((m.x - best_a).abs() < 2e-4);
    assert!(m.value >= best - 1e-12);
}

#[test]
fn distinguished_amplitudes_are_distinct() {
    let a = [FRAC_1_SQRT_2, limit_argmax(), 0.4f64.sqrt()];
    for i in 0..3 {
        for j in i + 1..3 {
            // Pairwise gaps are 0.036, 0.075 and 0.111.
            assert!((a[i] - a[j]).abs() > 0.03, "{i} {j}");
        }
    }
    assert!((a[2] - a[1]).abs() > 0.1);
}

#[test]
fn dirac_ridge_drifts_from_rest_to_limit() {
    let grid = Grid::new(0.0, FRAC_PI_4 - 1e-6, 101).unwrap();
    let pts = ridge(FieldKind::Dirac, &grid, 1e-8, SeriesOptions::default()).unwrap();
    assert_eq!(pts.len(), 101);
    assert!((pts[0].alpha_star - FRAC_1_SQRT_2).abs() < 1e-6);
    assert!((pts[100].alpha_star - limit_argmax()).abs() < 1e-4);
    for w in pts.windows(2) {
        assert!(w[1].alpha_star >= w[0].alpha_star - 1e-7, "{w:?}");
        assert!(w[1].coherence_max < w[0].coherence_max, "{w:?}");
    }
    let lim = maximize_alpha(FieldKind::Dirac, FRAC_PI_4, 1e-8, SeriesOptions::default()).unwrap();
    assert!((lim.coherence_max - 0.694).abs() < 1e-3);
}

#[test]
fn scalar_ridge_is_unimodal() {
    let grid = Grid::new(0.0, 2.0, 5).unwrap();
    let pts = ridge(FieldKind::Scalar, &grid, 1e-6, SeriesOptions::new(1e-10)).unwrap();
    assert!((pts[0].alpha_star - FRAC_1_SQRT_2).abs() < 1e-6);
    for w in pts.windows(2) {
        assert!(w[1].coherence_max < w[0].coherence_max);
    }
}

#[test]
fn loss_curve_consistency() {
    let alphas: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    let rows = loss_curve(&alphas).unwrap();
    for r in &rows {
        assert!((r.delta - (r.c_at_0 - r.c_at_limit)).abs() < 1e-9);
        assert!(r.delta >= -1e-15);
    }
}
