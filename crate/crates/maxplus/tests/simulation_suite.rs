//! Trajectory simulation against the spectral predictions: exact state
//! recursion, empirical periodicity detection, and cross-validation.

mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use maxplus::sample::{random_irreducible_finite_diagonal, EntryDistribution};
use maxplus::scalar::{ratio, rational};
use maxplus::simulation::{
    cross_validate, detect_periodicity, simulate, sufficient_horizon,
};
use maxplus::switched::{switched_analysis, Schedule};
use maxplus::{Matrix, Scalar, Vector};

#[test]
fn two_phase_cycle_schedule_reaches_the_composed_state() {
    // alternating the two opposite cycles gives X(2) = (rev ⊗ fwd) ⊗ X(0)
    let mats = bank(&[("fwd", &cycle_fwd()), ("rev", &cycle_rev())]);
    let schedule = Schedule::from_pairs(&[("fwd", 1), ("rev", 1)]).unwrap();
    let trace = simulate(&schedule, &mats, &Vector::zeros(3), 2).unwrap();
    assert_eq!(trace.states[2], Vector::from_str_row("2 2 2"));
    assert_eq!(trace.applied, vec!["fwd", "rev"]);
}

#[test]
fn trace_states_recompute_exactly() {
    let mats = bank(&[("a", &super_a()), ("b", &super_b())]);
    let schedule = Schedule::from_pairs(&[("b", 1), ("a", 2)]).unwrap();
    let trace = simulate(&schedule, &mats, &Vector::zeros(3), 25).unwrap();
    for k in 0..trace.horizon() {
        let a = &mats[&trace.applied[k]];
        assert_eq!(a.apply(&trace.states[k]).unwrap(), trace.states[k + 1]);
    }
}

#[test]
fn eventual_growth_follows_the_eigenvalue() {
    // lambda = 13/3: late states grow by exactly 13 every 3 steps
    let mats = bank(&[("a", &super_a())]);
    let schedule = Schedule::from_pairs(&[("a", 1)]).unwrap();
    let trace = simulate(&schedule, &mats, &Vector::zeros(3), 30).unwrap();
    let shift = Scalar::from(13);
    for k in 20..=27 {
        assert_eq!(
            trace.states[k].scale(&shift).unwrap(),
            trace.states[k + 3]
        );
    }
    let p = detect_periodicity(&trace).unwrap();
    assert_eq!(p.lambda_per_step, ratio(13, 3));
}

#[test]
fn detection_on_the_alternating_schedules() {
    let mats = bank(&[("a", &super_a()), ("b", &super_b())]);
    let schedule = Schedule::from_pairs(&[("b", 1), ("a", 1)]).unwrap();
    let trace = simulate(&schedule, &mats, &Vector::zeros(3), 40).unwrap();
    let p = detect_periodicity(&trace).unwrap();
    assert_eq!(p.lambda_per_step, ratio(9, 2));

    let mats = bank(&[("a", &sub_a()), ("b", &sub_b())]);
    let schedule = Schedule::from_pairs(&[("b", 1), ("a", 1)]).unwrap();
    let trace = simulate(&schedule, &mats, &Vector::zeros(3), 40).unwrap();
    let p = detect_periodicity(&trace).unwrap();
    assert_eq!(p.lambda_per_step, ratio(11, 2));
}

#[test]
fn cross_validation_agrees_on_the_reference_systems() {
    let cases: Vec<(Schedule, maxplus::MatrixMap, maxplus::Rational)> = vec![
        (
            Schedule::from_pairs(&[("b", 1), ("a", 1)]).unwrap(),
            bank(&[("a", &super_a()), ("b", &super_b())]),
            ratio(9, 2),
        ),
        (
            Schedule::from_pairs(&[("b", 1), ("a", 1)]).unwrap(),
            bank(&[("a", &sub_a()), ("b", &sub_b())]),
            ratio(11, 2),
        ),
        (
            Schedule::from_pairs(&[("b", 1)]).unwrap(),
            bank(&[("b", &super_b())]),
            rational(3),
        ),
    ];
    for (schedule, mats, expected) in cases {
        let spectral = switched_analysis(&schedule, &mats).unwrap();
        let horizon = sufficient_horizon(&spectral).max(12);
        let x0 = Vector::zeros(spectral.composed.dim());
        let cv = cross_validate(&schedule, &mats, &x0, horizon).unwrap();
        assert!(cv.agree, "disagreement at lambda {expected}");
        assert_eq!(cv.spectral.lambda_per_step, expected);
        let empirical = cv.empirical.unwrap();
        assert_eq!(empirical.lambda_per_step, expected);
        assert_eq!(cv.spectral.period % empirical.d, 0);
        assert!(empirical.k0 <= cv.spectral.transient);
    }
}

#[test]
fn cross_validation_agrees_on_seeded_random_schedules() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let dist = EntryDistribution::default();
    for trial in 0..25 {
        let n = 2 + (trial % 4);
        let m = 1 + (trial % 3);
        let mats: maxplus::MatrixMap = (0..m)
            .map(|i| {
                (
                    format!("m{i}"),
                    random_irreducible_finite_diagonal(&mut rng, n, dist),
                )
            })
            .collect();
        let phases: Vec<(String, usize)> = (0..m)
            .map(|i| (format!("m{i}"), 1 + (trial + i) % 3))
            .collect();
        let phase_refs: Vec<(&str, usize)> =
            phases.iter().map(|(s, l)| (s.as_str(), *l)).collect();
        let schedule = Schedule::from_pairs(&phase_refs).unwrap();

        let spectral = switched_analysis(&schedule, &mats).unwrap();
        let horizon = sufficient_horizon(&spectral);
        let x0 = Vector::zeros(n);
        let cv = cross_validate(&schedule, &mats, &x0, horizon).unwrap();
        assert!(
            cv.agree,
            "trial {trial}: spectral {:?} vs empirical {:?}",
            cv.spectral.lambda_per_step, cv.empirical
        );
        let empirical = cv.empirical.unwrap();
        assert_eq!(cv.spectral.period % empirical.d, 0);
    }
}

#[test]
fn states_become_finite_within_n_steps_under_finite_diagonals() {
    // with every self-loop present, any finite seed spreads to all
    // components within n steps
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let dist = EntryDistribution::default();
    for _ in 0..20 {
        let n = 4;
        let a = random_irreducible_finite_diagonal(&mut rng, n, dist);
        let mats = bank(&[("a", &a)]);
        let schedule = Schedule::from_pairs(&[("a", 1)]).unwrap();
        let x0 = Vector::from_str_row("0 eps eps eps");
        let trace = simulate(&schedule, &mats, &x0, n).unwrap();
        assert!(trace.states[n].iter().all(Scalar::is_finite));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // nonnegative entries and a finite diagonal make trajectories
    // componentwise nondecreasing
    #[test]
    fn growth_is_monotone_for_nonnegative_finite_diagonal_matrices(
        a in (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(
                prop_oneof![2 => Just(None), 5 => (0i64..=9).prop_map(Some)],
                n * n,
            ).prop_map(move |cells| {
                let mut m = Matrix::null(n);
                for (idx, cell) in cells.iter().enumerate() {
                    if let Some(v) = cell {
                        *m.get_mut(idx / n, idx % n) = Scalar::from(*v);
                    }
                }
                for i in 0..n {
                    if m[(i, i)].is_eps() {
                        *m.get_mut(i, i) = Scalar::from(0);
                    }
                }
                m
            })
        }),
        horizon in 1usize..=12,
    ) {
        let mats = bank(&[("a", &a)]);
        let schedule = Schedule::from_pairs(&[("a", 1)]).unwrap();
        let trace = simulate(&schedule, &mats, &Vector::zeros(a.dim()), horizon).unwrap();
        for k in 0..horizon {
            for i in 0..a.dim() {
                prop_assert!(trace.states[k][i] <= trace.states[k + 1][i]);
            }
        }
    }
}
