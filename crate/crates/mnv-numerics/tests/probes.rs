use std::f64::consts::PI;

use mnv_numerics::{decay_probe, ray_limit_probe, DecayLaw, FieldEvaluator};
use mnv_solution::build_solution;

#[test]
fn ray_limits_match_minus_cos_two_phi_at_sixteen_angles() {
    let u = FieldEvaluator::new(&build_solution().u);
    for j in 0..16 {
        let phi = PI * j as f64 / 8.0;
        let series = ray_limit_probe(&u, phi).unwrap();
        let miss = (series.extrapolated_limit + (2.0 * phi).cos()).abs();
        assert!(
            miss <= 1e-6,
            "phi = {phi}: limit {} misses -cos(2phi) by {miss:e}",
            series.extrapolated_limit
        );
    }
}

#[test]
fn ray_probes_record_their_ladder_and_method() {
    let u = FieldEvaluator::new(&build_solution().u);
    let series = ray_limit_probe(&u, 0.0).unwrap();
    assert_eq!(series.abscissae.len(), 7);
    assert_eq!(series.values.len(), 7);
    assert!((series.abscissae[0] - 1e-1).abs() < 1e-16);
    assert!((series.abscissae[6] - 1e-4).abs() < 1e-19);
    assert_eq!(series.method, "richardson in r^2");
    assert!((series.extrapolated_limit + 1.0).abs() <= 1e-6);
}

#[test]
fn the_diagonal_ray_limit_vanishes() {
    let u = FieldEvaluator::new(&build_solution().u);
    let series = ray_limit_probe(&u, PI / 4.0).unwrap();
    assert!(series.extrapolated_limit.abs() <= 1e-6);
}

#[test]
fn u_decays_with_coefficient_minus_three_cos_two_phi() {
    let u = FieldEvaluator::new(&build_solution().u);
    for &s in &[0.0, 1.0] {
        for j in 0..8 {
            let phi = PI * j as f64 / 4.0;
            let series = decay_probe(&u, phi, s, DecayLaw::Coefficient).unwrap();
            let miss = (series.extrapolated_limit + 3.0 * (2.0 * phi).cos()).abs();
            assert!(
                miss <= 1e-2,
                "phi = {phi}, s = {s}: coefficient {} misses by {miss:e}",
                series.extrapolated_limit
            );
        }
    }
}

#[test]
fn r_squared_v_stays_bounded_along_rays() {
    let v = FieldEvaluator::new(&build_solution().v);
    for j in 0..8 {
        let phi = PI * j as f64 / 4.0;
        let series = decay_probe(&v, phi, 1.0, DecayLaw::BoundedSup).unwrap();
        assert_eq!(series.method, "bounded sup");
        assert!(series.values.iter().all(|v| v.is_finite()));
        assert!(
            series.extrapolated_limit <= 10.0,
            "phi = {phi}: sup {} is out of range",
            series.extrapolated_limit
        );
        // The scaled magnitudes settle once r is large; the last two rungs of
        // the ladder already agree to a percent.
        let tail_drift = (series.values[6] - series.values[5]).abs();
        assert!(
            tail_drift <= 1e-2 * (1.0 + series.values[5].abs()),
            "phi = {phi}: tail still drifting by {tail_drift:e}"
        );
    }
}

#[test]
fn an_off_axis_ray_of_angle_one_is_bounded_too() {
    let v = FieldEvaluator::new(&build_solution().v);
    let series = decay_probe(&v, 1.0, 1.0, DecayLaw::BoundedSup).unwrap();
    assert!(series.extrapolated_limit.is_finite());
    assert!(series.extrapolated_limit <= 10.0);
}
