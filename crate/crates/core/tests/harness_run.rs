use disclab_core::harness::{run, Check, HarnessError, RunRequest, Selection, VerificationReport};
use disclab_core::registry;

fn small_all(seed: u64) -> RunRequest {
    RunRequest::new(Selection::All, seed, 50).with_ns(vec![3, 4])
}

#[test]
fn equal_seeds_give_identical_json() {
    let first = run(&small_all(42)).unwrap().to_json();
    let second = run(&small_all(42)).unwrap().to_json();
    assert_eq!(first, second);
    assert!(!first.contains("timings"));
}

#[test]
fn report_json_round_trips() {
    let report = run(&small_all(3)).unwrap();
    let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn small_all_run_fails_only_on_even_gcd_instance() {
    let report = run(&small_all(42)).unwrap();
    let failed: Vec<(String, usize, Option<usize>)> = report
        .entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| (e.claim_id.clone(), e.params.n, e.params.k))
        .collect();
    assert_eq!(failed, vec![(registry::STMT_A_SHAPE.to_string(), 4, Some(2))]);
    assert_eq!(report.summary.fail, 1);
    assert_eq!(report.summary.inconclusive, 0);
    assert!(report.certificates.iter().all(|c| c.certificate.as_ref().is_some_and(|c| c.is_proven())));
    for e in &report.entries {
        assert!(registry::lookup(&e.claim_id).is_some(), "{}", e.claim_id);
    }
}

#[test]
fn entries_are_sorted() {
    let report = run(&small_all(1)).unwrap();
    let keys: Vec<_> = report.entries.iter().map(|e| e.sort_key()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn timings_are_opt_in() {
    let mut req = RunRequest::new("lemma2".parse().unwrap(), 0, 0).with_ns(vec![3, 4]);
    req.timings = true;
    let report = run(&req).unwrap();
    let timings = report.timings.unwrap();
    assert_eq!(timings.iter().map(|t| (t.check, t.n)).collect::<Vec<_>>(), [(Check::Lemma2, 3), (Check::Lemma2, 4)]);
}

#[test]
fn range_errors() {
    let req = RunRequest::new("lemma1".parse().unwrap(), 42, 0).with_ns(vec![2]);
    assert_eq!(run(&req).unwrap_err(), HarnessError::BadRange { check: Check::Lemma1, n: 2 });
    let req = RunRequest::new("sigma".parse().unwrap(), 42, 0).with_ns(vec![3]);
    assert_eq!(run(&req).unwrap_err(), HarnessError::BadRange { check: Check::Sigma, n: 3 });
    assert!("lemma1,nope".parse::<Selection>().is_err());
}
