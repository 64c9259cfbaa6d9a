use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Check;
use crate::analysis::ClaimResult;
use crate::irreducibility::{CertifiedClaim, Verdict};
use crate::registry;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// Wall-clock time of one `(check, n)` unit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub check: Check,
    pub n: usize,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub tool_version: String,
    pub samples: usize,
    pub entries: Vec<ClaimResult>,
    pub certificates: Vec<CertifiedClaim>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Vec<Timing>>,
}

impl VerificationReport {
    /// Sorts entries and certificates by `(claim_id, n, k)` and tallies the
    /// summary. A certificate counts as a pass when proven, a failure when it
    /// could not be built, and inconclusive otherwise.
    pub fn assemble(
        seed: u64,
        samples: usize,
        mut entries: Vec<ClaimResult>,
        mut certificates: Vec<CertifiedClaim>,
        timings: Option<Vec<Timing>>,
    ) -> VerificationReport {
        entries.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        certificates.sort_by(|a, b| (&a.claim_id, &a.params).cmp(&(&b.claim_id, &b.params)));
        let mut summary = Summary::default();
        for e in &entries {
            if e.passed {
                summary.pass += 1;
            } else {
                summary.fail += 1;
            }
        }
        for c in &certificates {
            match (&c.certificate, &c.error) {
                (Some(cert), _) if cert.verdict == Verdict::Proven => summary.pass += 1,
                (_, Some(_)) => summary.fail += 1,
                _ => summary.inconclusive += 1,
            }
        }
        let timings = timings.map(|mut t| {
            t.sort_by_key(|t| (t.check, t.n));
            t
        });
        VerificationReport {
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            samples,
            entries,
            certificates,
            summary,
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Human-readable rendering: one line per claim, then the summary.
pub fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "disclab {} seed={} samples={}",
        report.tool_version, report.seed, report.samples
    );
    for e in &report.entries {
        let _ = writeln!(out, "{e}");
    }
    for c in &report.certificates {
        let status = match (&c.certificate, &c.error) {
            (Some(cert), _) if cert.verdict == Verdict::Proven => "PASS",
            (_, Some(_)) => "FAIL",
            _ => "INCONCLUSIVE",
        };
        let _ = write!(out, "{status} {} n={}", c.claim_id, c.params.n);
        if let Some(k) = c.params.k {
            let _ = write!(out, " k={k}");
        }
        if let Some(cert) = &c.certificate {
            let _ = write!(out, " via {:?}", cert.method);
        }
        let detail: Vec<&str> = [c.error.as_deref(), c.certificate.as_ref().map(|x| x.note.as_str()), Some(&c.note)]
            .into_iter()
            .flatten()
            .filter(|s| !s.is_empty())
            .collect();
        if !detail.is_empty() {
            let _ = write!(out, ": {}", detail.join("; "));
        }
        out.push('\n');
    }
    if let Some(timings) = &report.timings {
        for t in timings {
            let _ = writeln!(out, "time {} n={}: {:.1} ms", t.check, t.n, t.millis);
        }
    }
    let s = report.summary;
    let _ = writeln!(out, "summary: {} pass, {} fail, {} inconclusive", s.pass, s.fail, s.inconclusive);
    let unknown: Vec<&str> = report
        .entries
        .iter()
        .map(|e| e.claim_id.as_str())
        .chain(report.certificates.iter().map(|c| c.claim_id.as_str()))
        .filter(|id| registry::lookup(id).is_none())
        .collect();
    if !unknown.is_empty() {
        let _ = writeln!(out, "unregistered claim ids: {}", unknown.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Params;

    #[test]
    fn entries_sorted_and_counted() {
        let entries = vec![
            ClaimResult::new("lemma2.det_jk", Params::nk(3, 2), true),
            ClaimResult::new("lemma1.degree_ak", Params::nk(4, 1), false),
            ClaimResult::new("lemma1.degree_ak", Params::nk(3, 2), true),
            ClaimResult::new("lemma1.degree_ak", Params::nk(3, 1), true),
        ];
        let report = VerificationReport::assemble(1, 0, entries, Vec::new(), None);
        let keys: Vec<_> = report.entries.iter().map(|e| (e.claim_id.as_str(), e.params.n, e.params.k)).collect();
        assert_eq!(
            keys,
            [
                ("lemma1.degree_ak", 3, Some(1)),
                ("lemma1.degree_ak", 3, Some(2)),
                ("lemma1.degree_ak", 4, Some(1)),
                ("lemma2.det_jk", 3, Some(2)),
            ]
        );
        assert_eq!(report.summary, Summary { pass: 3, fail: 1, inconclusive: 0 });
        let text = render_text(&report);
        assert!(text.contains("FAIL lemma1.degree_ak n=4 k=1"));
        assert!(text.ends_with("summary: 3 pass, 1 fail, 0 inconclusive\n"));
    }
}
