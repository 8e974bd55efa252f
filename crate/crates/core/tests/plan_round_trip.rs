mod common;

use common::{fixture_hamiltonian, random_commuting_group, random_hamiltonian, rng};
use fcmeasure::oracle::CheckStatus;
use fcmeasure::{
    build_graph, cover, pipeline, verify_plan, CliqueCover, Error, MeasurementPlan64, Method, PlanRecord, Relation,
    VerifyOptions,
};
use rand::Rng;

fn plan_for(h: &fcmeasure::Hamiltonian64, method: Method) -> MeasurementPlan64 {
    let c = cover(&build_graph(h, Relation::Fc), method, 64).unwrap();
    pipeline(h, &c).unwrap()
}

#[test]
fn plans_verify_and_survive_json() {
    let mut r = rng(51);
    for _ in 0..25 {
        let n = r.random_range(1..=5);
        let h = random_hamiltonian(n, r.random_range(1..=25), &mut r);
        let plan = plan_for(&h, Method::Rlf);
        let report = verify_plan(&h, &plan, &VerifyOptions::default());
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let json = serde_json::to_string(&plan.to_record()).unwrap();
        let back: PlanRecord = serde_json::from_str(&json).unwrap();
        let rebuilt = MeasurementPlan64::from_record(&back, &h).unwrap();
        assert_eq!(rebuilt, plan);
    }
}

#[test]
fn plan_json_is_reproducible() {
    let mut r = rng(52);
    let h = random_hamiltonian(6, 40, &mut r);
    let a = serde_json::to_string(&plan_for(&h, Method::Dsatur).to_record()).unwrap();
    let b = serde_json::to_string(&plan_for(&h, Method::Dsatur).to_record()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tampered_coefficient_fails_spectrum() {
    let h = fixture_hamiltonian("h2_group.txt");
    let mut record = plan_for(&h, Method::Exact).to_record();
    record.groups[0].transformed[3].coeff += 0.01;
    let plan = MeasurementPlan64::from_record(&record, &h).unwrap();
    let report = verify_plan(&h, &plan, &VerifyOptions::default());
    let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
    assert!(failed.contains(&"spectrum"), "{failed:?}");
    assert!(failed.contains(&"coefficients"));
}

#[test]
fn pipeline_rejects_non_commuting_groups() {
    let h = fixture_hamiltonian("six_term.txt");
    let bad = CliqueCover { relation: Relation::Fc, method: Method::Gc, groups: vec![vec![0, 1, 2, 3], vec![4, 5]] };
    assert!(matches!(pipeline(&h, &bad), Err(Error::InvalidCover(_))));
}

#[test]
fn record_with_wrong_basis_is_rejected() {
    let h = fixture_hamiltonian("model.txt");
    let mut record = plan_for(&h, Method::Gc).to_record();
    record.groups[0].sigma.swap(0, 1);
    let err = MeasurementPlan64::from_record(&record, &h).unwrap_err();
    assert_eq!(err.kind(), "basis");
}

#[test]
fn large_groups_skip_dense_checks() {
    let mut r = rng(53);
    let h = random_commuting_group(9, 12, &mut r);
    let plan = plan_for(&h, Method::Gc);
    let report = verify_plan(&h, &plan, &VerifyOptions::default());
    assert!(report.passed());
    assert!(report.checks.iter().any(|c| c.name == "conjugation" && c.status == CheckStatus::Skipped));
    assert!(report.checks.iter().any(|c| c.name == "spectrum" && c.status == CheckStatus::Passed));
}
