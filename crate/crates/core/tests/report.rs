use esscert_core::runner::{run, Config, Group};
use esscert_core::{Error, Status, VerificationReport};

fn full() -> VerificationReport {
    run(&Config::default()).unwrap()
}

#[test]
fn full_run_passes_and_is_idempotent() {
    let a = full();
    let b = full();
    assert_eq!(a, b);
    let failing: Vec<&str> = a.failures().map(|c| c.id.as_str()).collect();
    assert!(a.passed(), "failing checks: {failing:?}");
    assert_eq!(a.summary.pass + a.summary.fail + a.summary.info, a.checks.len());
}

#[test]
fn ids_are_unique_and_key_checks_are_present() {
    let r = full();
    let mut ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    ids.sort();
    let n = ids.len();
    ids.dedup();
    assert_eq!(ids.len(), n, "duplicate check ids");
    for id in [
        "group.order",
        "e3.isomorphism",
        "e4.relations.defining",
        "e4.equals-e5",
        "einf.figure-1",
        "einf.degeneration",
        "relations.3-4.vanish",
        "relations.4-6.vanish",
        "essential.h4.essential",
        "products.prop-ess10-4",
        "products.prop-ess8-6",
        "products.triples",
        "series.numerator",
        "series.functional-equation",
    ] {
        assert_eq!(r.get(id).map(|c| c.status), Some(Status::Pass), "{id}");
    }
}

#[test]
fn json_round_trips() {
    let r = run(&Config::new(16, 12, &[Group::Group, Group::Series]).unwrap()).unwrap();
    assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn groups_run_in_dependency_order() {
    let r = run(&Config::new(16, 12, &[Group::Series, Group::Group]).unwrap()).unwrap();
    let first_series = r.checks.iter().position(|c| c.id.starts_with("series.")).unwrap();
    assert!(r.checks[..first_series].iter().all(|c| c.id.starts_with("group.")));
}

#[test]
fn small_windows_are_rejected() {
    match Config::new(16, 4, &[]) {
        Err(Error::Config(msg)) => assert!(msg.contains("qmax ≥ 10")),
        other => panic!("expected a configuration error, got {other:?}"),
    }
}
