//! Dirac (fermionic) field in the single-mode approximation.
//!
//! The reduced state over `{|00>, |01>, |10>, |11>}` (Alice's mode, Rob's
//! region-I mode) has support on `|00>, |01>, |11>` only, so everything
//! is closed form. The three closed forms here (finite `theta`, the
//! `theta -> pi/4` limit and the loss between the two) are written out
//! separately and cross-checked in tests rather than derived from each
//! other.

use crate::coherence::CoherenceReport;
use crate::density::{CMatrix, DensityMatrix, C64};
use crate::entropy::{xlog2x, ProbVector};
use crate::error::Result;
use crate::frames::DiracFrame;
use crate::mode::ModeParameters;

pub const KET_00: usize = 0;
pub const KET_01: usize = 1;
pub const KET_10: usize = 2;
pub const KET_11: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct DiracState {
    pub mode: ModeParameters,
    pub frame: DiracFrame,
    pub matrix: DensityMatrix,
}

pub fn dirac_state(mode: ModeParameters, frame: &DiracFrame) -> Result<DiracState> {
    let a2 = mode.p_vacuum();
    let mut m = CMatrix::zeros(4, 4);
    m[(KET_00, KET_00)] = C64::new(a2 * frame.cos2(), 0.0);
    m[(KET_01, KET_01)] = C64::new(a2 * frame.sin2(), 0.0);
    m[(KET_11, KET_11)] = C64::new(mode.p_excited(), 0.0);
    let c = C64::new(mode.coupling() * frame.cos(), 0.0);
    m[(KET_00, KET_11)] = c;
    m[(KET_11, KET_00)] = c;
    Ok(DiracState {
        mode,
        frame: *frame,
        matrix: DensityMatrix::new(m)?,
    })
}

/// The two nonzero eigenvalues `{1 - alpha^2 sin^2 theta, alpha^2 sin^2 theta}`.
pub fn dirac_eigenvalues(mode: ModeParameters, frame: &DiracFrame) -> ProbVector {
    let lam2 = mode.p_vacuum() * frame.sin2();
    ProbVector::full(vec![1.0 - lam2, lam2]).expect("eigenvalues lie in [0, 1] and sum to 1")
}

/// Closed-form coherence at finite acceleration.
pub fn dirac_coherence(mode: ModeParameters, frame: &DiracFrame) -> CoherenceReport {
    let a2 = mode.p_vacuum();
    let b2 = mode.p_excited();
    let p00 = a2 * frame.cos2();
    let p01 = a2 * frame.sin2();
    let lam1 = 1.0 - p01;

    let value = -xlog2x(p00) - xlog2x(b2) + xlog2x(lam1);
    let s_diag = -xlog2x(p00) - xlog2x(p01) - xlog2x(b2);
    let s_rho = -xlog2x(lam1) - xlog2x(p01);
    CoherenceReport {
        value,
        s_diag,
        s_rho,
        terms_used: 2,
        tail_guarantee: 0.0,
    }
}

/// Coherence in the infinite-acceleration limit `theta -> pi/4`.
pub fn dirac_limit_coherence(mode: ModeParameters) -> f64 {
    let a2 = mode.p_vacuum();
    -xlog2x(mode.p_excited()) - xlog2x(a2 / 2.0) + xlog2x((2.0 - a2) / 2.0)
}

/// Report form of [`dirac_limit_coherence`], with the limiting entropies.
pub fn dirac_limit_report(mode: ModeParameters) -> CoherenceReport {
    let a2 = mode.p_vacuum();
    let half = a2 / 2.0;
    CoherenceReport {
        value: dirac_limit_coherence(mode),
        s_diag: -2.0 * xlog2x(half) - xlog2x(mode.p_excited()),
        s_rho: -xlog2x(1.0 - half) - xlog2x(half),
        terms_used: 2,
        tail_guarantee: 0.0,
    }
}

/// Coherence lost between zero and infinite acceleration.
pub fn dirac_coherence_loss(mode: ModeParameters) -> f64 {
    let a2 = mode.p_vacuum();
    -xlog2x(a2) + xlog2x(a2 / 2.0) - xlog2x((2.0 - a2) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::rel_ent_coherence_matrix;
    use crate::density::is_incoherent;
    use crate::entropy::shannon_entropy;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, FRAC_PI_6};

    fn mode(a: f64) -> ModeParameters {
        ModeParameters::new(a).unwrap()
    }

    fn frame(theta: f64) -> DiracFrame {
        DiracFrame::from_parameter(theta).unwrap()
    }

    fn near_limit() -> DiracFrame {
        frame(FRAC_PI_4 - 1e-12)
    }

    #[test]
    fn rest_frame_state_is_pure() {
        let s = dirac_state(mode(0.6), &frame(0.0)).unwrap();
        let ev = s.matrix.eigenvalues();
        assert!((ev[3] - 1.0).abs() < 1e-14);
        assert!(ev[..3].iter().all(|x| x.abs() < 1e-14));
    }

    #[test]
    fn alpha_one_is_diagonal() {
        let th = 0.3;
        let s = dirac_state(mode(1.0), &frame(th)).unwrap();
        assert!(is_incoherent(&s.matrix, 0.0));
        let d = s.matrix.diagonal();
        assert!((d[0] - th.cos().powi(2)).abs() < 1e-15);
        assert!((d[1] - th.sin().powi(2)).abs() < 1e-15);
        assert_eq!((d[2], d[3]), (0.0, 0.0));
    }

    #[test]
    fn near_limit_entries() {
        let s = dirac_state(mode(FRAC_1_SQRT_2), &near_limit()).unwrap();
        assert!((s.matrix.get(KET_00, KET_11).re - 0.5 * FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((s.matrix.get(KET_01, KET_01).re - 0.25).abs() < 1e-12);
        assert_eq!(s.matrix.get(KET_10, KET_10).re, 0.0);
        let ev = dirac_eigenvalues(mode(FRAC_1_SQRT_2), &near_limit());
        assert!((ev.entries()[0] - 0.75).abs() < 1e-12);
        assert!((ev.entries()[1] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_numeric_decomposition() {
        for i in 0..=10 {
            for j in 0..10 {
                let a = i as f64 / 10.0;
                let th = j as f64 * FRAC_PI_4 / 10.0;
                let mut num = dirac_state(mode(a), &frame(th))
                    .unwrap()
                    .matrix
                    .eigenvalues();
                num.reverse();
                let closed = dirac_eigenvalues(mode(a), &frame(th));
                let mut closed = closed.entries().to_vec();
                closed.sort_by(|x, y| y.total_cmp(x));
                assert!((num[0] - closed[0]).abs() < 1e-12);
                assert!((num[1] - closed[1]).abs() < 1e-12);
                assert!(num[2].abs() < 1e-12 && num[3].abs() < 1e-12);
            }
        }
        let e = dirac_eigenvalues(mode(0.4), &frame(0.0));
        assert_eq!(e.entries(), &[1.0, 0.0]);
    }

    #[test]
    fn von_neumann_entropy_at_limit() {
        let s = dirac_state(mode(FRAC_1_SQRT_2), &near_limit()).unwrap();
        let vn = crate::density::von_neumann_entropy(&s.matrix).unwrap();
        let expected = shannon_entropy(&ProbVector::full(vec![0.75, 0.25]).unwrap());
        assert!((vn - expected).abs() < 1e-10);
    }

    #[test]
    fn dephased_state_matches_closed_form() {
        let (a, th) = (0.5, 0.4);
        let s = dirac_state(mode(a), &frame(th)).unwrap();
        let d = crate::density::dephase(&s.matrix);
        let expected = [
            a * a * th.cos().powi(2),
            a * a * th.sin().powi(2),
            0.0,
            1.0 - a * a,
        ];
        for (i, e) in expected.iter().enumerate() {
            assert!((d.get(i, i).re - e).abs() < 1e-15);
        }
        assert!(is_incoherent(&d, 0.0));
    }

    #[test]
    fn coherence_reference_values() {
        let r = dirac_coherence(mode(0.5), &frame(FRAC_PI_6));
        let oracle =
            rel_ent_coherence_matrix(&dirac_state(mode(0.5), &frame(FRAC_PI_6)).unwrap().matrix)
                .unwrap()
                .value;
        assert!((r.value - oracle).abs() < 1e-12);
        assert!((r.value - 0.67681).abs() < 1e-5);
        assert!((r.value - (r.s_diag - r.s_rho)).abs() < 1e-14);

        let lim = dirac_coherence(mode(FRAC_1_SQRT_2), &near_limit()).value;
        // 1/2 + 3/4 log2(3/4)... evaluated: -(1/2)log2(1/2) - (1/4)log2(1/4) + (3/4)log2(3/4)
        let hand = 0.5 + 0.5 + 0.75 * 0.75f64.log2();
        assert!((lim - hand).abs() < 1e-10);
        assert!((hand - 0.68872).abs() < 1e-5);
    }

    #[test]
    fn limit_formula_matches_finite_theta() {
        for i in 0..=20 {
            let a = i as f64 / 20.0;
            let finite = dirac_coherence(mode(a), &frame(FRAC_PI_4 - 1e-6)).value;
            // d C / d theta is O(1), so the gap is O(1e-6).
            assert!(
                (finite - dirac_limit_coherence(mode(a))).abs() < 1e-5,
                "alpha {a}"
            );
            let closer = dirac_coherence(mode(a), &frame(FRAC_PI_4 - 1e-12)).value;
            assert!(
                (closer - dirac_limit_coherence(mode(a))).abs() < 1e-9,
                "alpha {a}"
            );
            let rep = dirac_limit_report(mode(a));
            assert!((rep.value - (rep.s_diag - rep.s_rho)).abs() < 1e-14);
        }
    }

    #[test]
    fn limit_and_loss_special_values() {
        let a_star = ((5.0 - 5f64.sqrt()) / 5.0).sqrt();
        assert!((dirac_limit_coherence(mode(a_star)) - 0.694).abs() < 1e-3);
        assert_eq!(dirac_limit_coherence(mode(0.0)), 0.0);
        assert!(dirac_limit_coherence(mode(1.0)).abs() < 1e-16);
        assert!((dirac_limit_coherence(mode(FRAC_1_SQRT_2)) - 0.68872).abs() < 1e-5);

        assert!((dirac_coherence_loss(mode(0.4f64.sqrt())) - 0.322).abs() < 1e-3);
        assert_eq!(dirac_coherence_loss(mode(0.0)), 0.0);
        assert!(dirac_coherence_loss(mode(1.0)).abs() < 1e-16);
    }

    #[test]
    fn loss_is_rest_minus_limit() {
        for i in 0..=100 {
            let a = i as f64 / 100.0;
            let rest = dirac_coherence(mode(a), &frame(0.0)).value;
            let d = rest - dirac_limit_coherence(mode(a));
            assert!(
                (dirac_coherence_loss(mode(a)) - d).abs() < 1e-9,
                "alpha {a}"
            );
        }
    }
}
