//! Exact certificates for everything except the full equation residual,
//! which lives in its own test file because it is the expensive one.

use mnv_algebra::{RationalFn, SparsePoly, Var};
use mnv_solution::bundle::build_solution;
use mnv_solution::perturb;
use mnv_solution::verify::{
    singular_point_audit, verify_dbar_constraint, verify_denominator_identity, verify_realness,
};
use mnv_solution::SolutionError;
use num_rational::BigRational;
use num_traits::Zero;

#[test]
fn dbar_constraint_certifies() {
    let report = verify_dbar_constraint(&build_solution()).unwrap();
    assert!(report.passed);
    assert!(report.certificate.is_zero);
    assert_eq!(report.certificate.num_terms, 0);
}

#[test]
fn dbar_constraint_rejects_shifted_potential() {
    let b = perturb::with_v_plus_zbar(&build_solution());
    let err = verify_dbar_constraint(&b).unwrap_err();
    assert!(matches!(err, SolutionError::ConstraintViolation { .. }));
}

#[test]
fn dbar_constraint_rejects_rescaled_u_alone() {
    // (U²)_z picks up a factor 4 while dbar(V) keeps its scale
    let b = perturb::scale_fields(&build_solution(), 2, 1);
    let err = verify_dbar_constraint(&b).unwrap_err();
    assert!(matches!(err, SolutionError::ConstraintViolation { .. }));
}

#[test]
fn dbar_constraint_survives_adding_a_constant() {
    // constants die under dbar; this perturbation is only visible to the
    // full equation residual
    let b = perturb::with_v_plus_one(&build_solution());
    assert!(verify_dbar_constraint(&b).unwrap().passed);
}

#[test]
fn denominator_split_certifies_and_is_coefficient_sensitive() {
    let b = build_solution();
    assert!(verify_denominator_identity(&b).unwrap().passed);

    let damaged = perturb::with_delta_plus_one(&b);
    let err = verify_denominator_identity(&damaged).unwrap_err();
    assert!(matches!(err, SolutionError::IdentityViolation { .. }));
}

#[test]
fn realness_certifies_u_and_flags_complex_v() {
    let report = verify_realness(&build_solution()).unwrap();
    assert!(report.passed);
    assert!(report
        .notes
        .iter()
        .any(|n| n.contains("not self-conjugate")));
}

#[test]
fn realness_rejects_an_imaginary_field() {
    let mut b = build_solution();
    b.u = RationalFn::from_poly(b.gamma.clone());
    let err = verify_realness(&b).unwrap_err();
    assert!(matches!(err, SolutionError::RealnessViolation { field: "u" }));
}

#[test]
fn singular_point_audit_passes_with_full_trail() {
    let report = singular_point_audit(&build_solution()).unwrap();
    assert!(report.passed);
    assert_eq!(report.notes.len(), 6);
    assert!(report.notes.iter().any(|n| n.contains("9 s^2")));
}

#[test]
fn singular_point_audit_rejects_a_damaged_split() {
    let b = perturb::with_delta_plus_one(&build_solution());
    let err = singular_point_audit(&b).unwrap_err();
    assert!(matches!(err, SolutionError::AuditFailure { .. }));
}

/// At s = 0 the solution is exactly antisymmetric under swapping x and y.
#[test]
fn antisymmetry_on_the_time_slice() {
    let b = build_solution();
    let zero = BigRational::zero();
    let frozen = RationalFn::new(
        b.u.num().substitute(Var::S, &zero),
        b.u.den().substitute(Var::S, &zero),
    )
    .unwrap();
    let swapped = RationalFn::new(frozen.num().swap_xy(), frozen.den().swap_xy()).unwrap();
    assert!((&frozen + &swapped).is_zero());
}

/// Both the numerator and q only contain monomials of even total degree,
/// so U(-x, -y, -s) = U(x, y, s) termwise.
#[test]
fn full_reflection_parity() {
    let b = build_solution();
    assert!(b.u.num().iter().all(|(m, _)| m.degree() % 2 == 0));
    assert_eq!(b.u.num().negate_vars(), b.u.num().clone());
    assert_eq!(b.u.den().negate_vars(), b.u.den().clone());
    assert_eq!(b.v.den().negate_vars(), b.v.den().clone());
}

/// The denominator q must be left untouched by normalization (its content
/// is coprime to the numerator's), so downstream code may rely on
/// `u.den() == q` literally, not merely up to scale.
#[test]
fn u_denominator_is_q() {
    let b = build_solution();
    assert_eq!(b.u.den(), &b.q);
    assert_eq!(b.q.total_degree(), 6);
    assert!(!SparsePoly::is_zero(&b.q));
}
