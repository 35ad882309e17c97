use super::*;
use crate::identities::{find_identity, list_identities, prudnikov_original, Field};
use std::collections::BTreeMap;

fn pol() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

#[test]
fn sampling_is_deterministic_and_valid() {
    let spec = find_identity("ID-02").unwrap();
    let st = SampleStrategy::default_for(&spec)
        .unwrap()
        .with_seed(7)
        .with_count(5)
        .unwrap();
    let a = sample_points(&spec, &st).unwrap();
    let b = sample_points(&spec, &st).unwrap();
    assert_eq!(a.len(), 5);
    assert_eq!(a, b);
    for pt in &a {
        let m = pt.m.unwrap();
        let n = pt.n.unwrap();
        assert!((2.0 * m).sin().norm() > 0.04);
        assert!((m * (-(n as f64)).exp2()).sin().norm() > 0.04);
    }
}

#[test]
fn theorem_points_keep_bases_inside_disk() {
    let spec = find_identity("ID-01").unwrap();
    let st = SampleStrategy::default_for(&spec)
        .unwrap()
        .with_seed(1)
        .with_count(3)
        .unwrap();
    for pt in sample_points(&spec, &st).unwrap() {
        let m = pt.m.unwrap();
        assert!((0.5..=2.0).contains(&m.im));
        let n = pt.n.unwrap() as i32;
        let la = crate::numerics::principal_log(pt.a.unwrap()).unwrap();
        assert!(la.norm() <= 2f64.powi(-n) * (1.0 + 1e-12));
    }
}

#[test]
fn strategy_validation() {
    let spec = find_identity("ID-02").unwrap();
    let region = default_region("ID-02").unwrap();
    assert!(SampleStrategy::new(1, 0, region.clone(), 0.05).is_err());
    assert!(SampleStrategy::new(1, 3, region.clone(), 0.0).is_err());
    assert!(SampleStrategy::for_spec(&spec, 1, 3, default_region("ID-04").unwrap(), 0.05).is_err());
    let no_n = Region::new(None, vec![(Field::M, Draw::Real { lo: 0.2, hi: 2.5 })]);
    assert!(SampleStrategy::for_spec(&spec, 1, 3, no_n, 0.05).is_err());
    assert!(sample_points(&spec, &SampleStrategy::empty())
        .unwrap()
        .is_empty());
    assert!(
        verify_identity(&spec, &SampleStrategy::empty(), &pol(), 1e-9)
            .unwrap()
            .is_empty()
    );
    assert!(verify_identity(&spec, &SampleStrategy::empty(), &pol(), 0.0).is_err());
}

#[test]
fn tight_region_exhausts() {
    let spec = find_identity("ID-02").unwrap();
    // every pole-free m is farther than the margin from this point
    let region = Region::new(
        Some((0, 0)),
        vec![(Field::M, Draw::Real { lo: 0.0, hi: 1e-9 })],
    );
    let st = SampleStrategy::for_spec(&spec, 1, 1, region, 0.05).unwrap();
    assert!(matches!(
        sample_points(&spec, &st),
        Err(Error::Exhausted { .. })
    ));
}

#[test]
fn degenerate_passes_and_table_form_fails() {
    let spec = find_identity("ID-02").unwrap();
    let st = SampleStrategy::default_for(&spec).unwrap();
    let res = verify_identity(&spec, &st, &pol(), spec.default_tol).unwrap();
    assert_eq!(res.iter().filter(|r| r.pass).count(), 100);

    let bad = prudnikov_original();
    let st = SampleStrategy::default_for(&bad).unwrap();
    let res = verify_identity(&bad, &st, &pol(), bad.default_tol).unwrap();
    assert!(res
        .iter()
        .all(|r| !r.pass && r.rel_err > 0.5 && r.outcome == Outcome::Violated));
}

#[test]
fn tolerance_is_monotone() {
    let spec = find_identity("ID-06").unwrap();
    let st = SampleStrategy::default_for(&spec)
        .unwrap()
        .with_count(30)
        .unwrap();
    let mut prev = 0;
    for tol in [1e-14, 1e-12, 1e-10, 1e-8, 1e-6] {
        let passes = verify_identity(&spec, &st, &pol(), tol)
            .unwrap()
            .iter()
            .filter(|r| r.pass)
            .count();
        assert!(passes >= prev);
        prev = passes;
    }
}

#[test]
fn cond_is_at_least_one_and_grows_for_small_x() {
    let spec = find_identity("ID-06").unwrap();
    let mut conds = Vec::new();
    for x in [0.4, 0.1, 0.025] {
        let pt = EvalPoint::new()
            .with(Field::X, Complex::new(x, 0.0))
            .with_n(6);
        let r = verify_point(&spec, 0, &pt, &pol(), 1e-7);
        assert!(r.cond >= 1.0 && r.pass, "{r:?}");
        conds.push(r.cond);
    }
    assert!(
        conds[1] > 2.0 * conds[0] && conds[2] > 2.0 * conds[1],
        "{conds:?}"
    );
}

#[test]
fn evaluation_failures_are_recorded() {
    let spec = find_identity("ID-02").unwrap();
    let pt = EvalPoint::new()
        .with(Field::M, Complex::new(0.0, 0.0))
        .with_n(0);
    let r = verify_point(&spec, 3, &pt, &pol(), 1e-9);
    assert_eq!(r.outcome, Outcome::EvaluationFailed);
    assert!(!r.pass && r.error.is_some() && r.rel_err.is_infinite());
}

#[test]
fn loggamma_sum_reports_branch() {
    let spec = find_identity("ID-07").unwrap();
    let st = SampleStrategy::default_for(&spec)
        .unwrap()
        .with_count(20)
        .unwrap();
    for r in verify_identity(&spec, &st, &pol(), spec.default_tol).unwrap() {
        assert!(r.pass, "{r:?}");
        assert!(r.branch_integer.is_some());
    }
}

#[test]
fn suite_overrides_and_empty_registry() {
    let mut o = BTreeMap::new();
    o.insert("ID-99".to_string(), Override::default());
    assert!(matches!(
        run_suite(&pol(), &o),
        Err(Error::UnknownIdentity(_))
    ));

    let r = run_suite_on(&[], &pol(), &BTreeMap::new()).unwrap();
    assert!(r.rows.is_empty() && r.all_passed());

    let spec = find_identity("ID-13").unwrap();
    let mut o = BTreeMap::new();
    o.insert(
        "ID-13".to_string(),
        Override {
            strategy: Some(
                SampleStrategy::default_for(&spec)
                    .unwrap()
                    .with_count(3)
                    .unwrap(),
            ),
            tol: Some(2e-5),
        },
    );
    let r = run_suite_on(&[spec], &pol(), &o).unwrap();
    assert_eq!(r.rows[0].tol, 2e-5);
    assert_eq!(r.rows[0].points, 3);
}

#[test]
fn mutation_drops_pass_rate() {
    for spec in list_identities() {
        let m = spec.mutated();
        let st = SampleStrategy::default_for(&m)
            .unwrap()
            .with_count(20)
            .unwrap();
        let passes = verify_identity(&m, &st, &pol(), m.default_tol)
            .unwrap()
            .iter()
            .filter(|r| r.pass)
            .count();
        assert_eq!(passes, 0, "{}", spec.id);
    }
}
