use super::side::SideBuilder;
use super::*;
use crate::error::SideTag;
use crate::numerics::{c, principal_pow, real, PI};

fn pol() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

#[test]
fn registry_shape() {
    let all = list_identities();
    assert_eq!(all.len(), 16);
    let ids: Vec<_> = all.iter().map(|s| s.id).collect();
    let want: Vec<String> = (0..16).map(|i| format!("ID-{i:02}")).collect();
    assert_eq!(ids, want);
    let id01 = find_identity("ID-01").unwrap();
    let mut schema = id01.schema.to_vec();
    schema.sort();
    assert_eq!(schema, vec![Field::A, Field::M, Field::K, Field::N]);
    assert_eq!(find_identity("ID-12").unwrap().schema, &[Field::X]);
    assert!(matches!(
        find_identity("ID-99"),
        Err(Error::UnknownIdentity(_))
    ));
    assert!(!ids.contains(&"ID-02-PRUDNIKOV-ORIGINAL"));
}

#[test]
fn degenerate_examples() {
    let pt = EvalPoint::new().with(Field::M, real(PI / 3.0)).with_n(0);
    let (l, r) = evaluate_sides("ID-02", &pt, &pol()).unwrap();
    // hand value: (1/2) tan(pi/6) sec(pi/3) = 1/sqrt(3)
    let hand = 1.0 / 3f64.sqrt();
    assert!((l.re - hand).abs() < 1e-15 && (r.re - hand).abs() < 1e-15);
    assert!((l.re - 0.577_350_3).abs() < 1e-7);

    let pt = EvalPoint::new().with(Field::M, real(1.0)).with_n(3);
    let (l, r) = evaluate_sides("ID-02", &pt, &pol()).unwrap();
    assert!((l.re - 0.598_445_709_455_036).abs() < 1e-14);
    assert!((r.re - 0.598_445_709_455_036).abs() < 1e-14);

    let orig = prudnikov_original();
    let (l, r) = orig.evaluate_values(&pt, &pol()).unwrap();
    assert!(rel(l, r) > 0.5);
}

#[test]
fn functional_equation_collapses_at_zero() {
    for (s, a) in [(real(2.0), real(1.3)), (c(-1.5, 0.7), c(2.2, -0.4))] {
        let pt = EvalPoint::new()
            .with(Field::Z, real(0.0))
            .with(Field::S, s)
            .with(Field::A, a);
        let (l, r) = evaluate_sides("ID-04", &pt, &pol()).unwrap();
        let want = principal_pow(a, -s).unwrap();
        assert!(rel(l, want) < 1e-14);
        assert!(rel(r, want) < 1e-14, "{r} vs {want}");
    }
}

#[test]
fn theorem_at_n_zero() {
    let pt = EvalPoint::new()
        .with(Field::A, real(1.1f64.powf(0.5)))
        .with(Field::M, c(0.7, 0.8))
        .with(Field::K, c(0.5, 0.3))
        .with_n(0);
    let (l, r) = evaluate_sides("ID-01", &pt, &pol()).unwrap();
    assert!(l.norm().is_finite() && r.norm().is_finite());
    assert!(rel(l, r) < 1e-12, "{l} vs {r}");
}

#[test]
fn cosine_ratio_inversion_symmetry() {
    for (m, r, n) in [(0.7, 1.1, 3), (2.2, 0.4, 0), (1.3, 2.4, 9)] {
        let fwd = EvalPoint::new()
            .with(Field::M, real(m))
            .with(Field::R, real(r))
            .with_n(n);
        let inv = EvalPoint::new()
            .with(Field::M, real(r))
            .with(Field::R, real(m))
            .with_n(n);
        let (a, _) = evaluate_sides("ID-03", &fwd, &pol()).unwrap();
        let (b, _) = evaluate_sides("ID-03", &inv, &pol()).unwrap();
        assert!(((a * b) - 1.0).norm() < 1e-10);
    }
}

#[test]
fn frozen_sides() {
    let cases: [(&str, EvalPoint, f64); 4] = [
        (
            "ID-08",
            EvalPoint::new().with(Field::A, real(3.3)).with_n(2),
            1e-12,
        ),
        (
            "ID-09",
            EvalPoint::new().with(Field::A, real(2.5)).with_n(0),
            1e-12,
        ),
        ("ID-10", EvalPoint::new().with(Field::A, real(7.0)), 1e-12),
        (
            "ID-15",
            EvalPoint::new().with(Field::X, real(0.7)).with_n(2),
            1e-11,
        ),
    ];
    for (id, pt, tol) in cases {
        let (l, r) = evaluate_sides(id, &pt, &pol()).unwrap();
        assert!(rel(l, r) < tol, "{id}: {l} vs {r}");
    }
}

#[test]
fn schema_violations() {
    let pt = EvalPoint::new().with(Field::M, real(1.0));
    assert!(matches!(
        evaluate_sides("ID-02", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
    let pt = EvalPoint::new().with(Field::M, real(1.0)).with_n(25);
    assert!(matches!(
        evaluate_sides("ID-02", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
    let pt = EvalPoint::new()
        .with(Field::M, real(1.0))
        .with(Field::X, real(1.0))
        .with_n(2);
    assert!(matches!(
        evaluate_sides("ID-02", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
    // Im(m) > 0 required for the theorem
    let pt = EvalPoint::new()
        .with(Field::A, real(1.0))
        .with(Field::M, c(0.7, -0.1))
        .with(Field::K, real(1.0))
        .with_n(1);
    assert!(matches!(
        evaluate_sides("ID-01", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
    let pt = EvalPoint::new().with(Field::A, real(1.5)).with_n(1);
    assert!(matches!(
        evaluate_sides("ID-08", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
    let pt = EvalPoint::new().with(Field::M, real(PI / 2.0)).with_n(1);
    assert!(matches!(
        evaluate_sides("ID-02", &pt, &pol()),
        Err(Error::Constraint(_))
    ));
}

#[test]
fn evaluation_errors_carry_side_and_slot() {
    let mut b = SideBuilder::new(SideTag::Rhs, Form::Sum);
    b.term(Ok(real(1.0))).unwrap();
    b.factor(Ok(real(2.0))).unwrap();
    let err = b.term(crate::special::log_gamma(real(-2.0))).unwrap_err();
    match &err {
        Error::Evaluation { side, term, source } => {
            assert_eq!(*side, SideTag::Rhs);
            assert_eq!(*term, 2);
            assert!(matches!(**source, Error::Pole(_)));
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(err.root(), Error::Pole(_)));
    let err = b.term(Ok(c(f64::NAN, 0.0))).unwrap_err();
    assert!(matches!(err, Error::Evaluation { term: 3, .. }));
}

#[test]
fn flip_largest_targets_biggest_term_or_factor() {
    let mut s = Side {
        factors: vec![real(2.0)],
        terms: vec![real(1.0), real(-5.0), real(3.0)],
        form: Form::Sum,
    };
    s.flip_largest();
    assert_eq!(s.terms, vec![real(1.0), real(5.0), real(3.0)]);
    let mut p = Side {
        factors: vec![real(0.5), real(-4.0)],
        terms: vec![],
        form: Form::Exp,
    };
    let before = p.value(SideTag::Rhs).unwrap();
    p.flip_largest();
    assert_eq!(p.value(SideTag::Rhs).unwrap(), -before);
}

#[test]
fn mutated_spec_breaks_equality() {
    let spec = find_identity("ID-02").unwrap().mutated();
    let pt = EvalPoint::new().with(Field::M, real(1.0)).with_n(3);
    let (l, r) = spec.evaluate_values(&pt, &pol()).unwrap();
    assert!(rel(l, r) > 0.1);
}

#[test]
fn cond_reflects_cancellation() {
    let s = Side {
        factors: vec![],
        terms: vec![real(1e6), real(-1e6), real(1.0)],
        form: Form::Sum,
    };
    assert!((s.cond(1.0) - 1e6).abs() < 1.0);
    let e = Side {
        factors: vec![real(3.0)],
        terms: vec![real(-40.0), real(39.0)],
        form: Form::Exp,
    };
    assert_eq!(e.cond(1.0), 40.0);
    let flat = Side {
        factors: vec![real(2.0)],
        terms: vec![],
        form: Form::Exp,
    };
    assert_eq!(flat.cond(1.0), 1.0);
}
