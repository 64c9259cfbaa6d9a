//! Run orchestration, verification reports and the independent oracles used
//! by the test suites.

mod oracle;
mod report;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{
    check_divisibility, check_lemma1, check_lemma2, check_parametrization, check_remark1, check_sigma,
    check_smoothness, check_statements, ClaimResult,
};
use crate::irreducibility::{certify_discriminant_irreducibility, CertifiedClaim, FamilyOptions};
use crate::par;

pub use crate::registry;
pub use oracle::{oracle_det, oracle_discriminant_from_roots, oracle_resultant, ORACLE_MAX_DIM};
pub use report::{render_text, Summary, Timing, VerificationReport};

pub const DEFAULT_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown check name {0:?}")]
    BadCheckName(String),
    #[error("check {check} does not accept n = {n}")]
    BadRange { check: Check, n: usize },
    #[error("n = {n} exceeds the configured maximum {max}")]
    AboveMax { n: usize, max: usize },
    #[error("bad n range {0:?}")]
    BadRangeSyntax(String),
    #[error("{rows}x{cols} matrix exceeds the oracle limit")]
    TooLarge { rows: usize, cols: usize },
}

/// The checks a run can select.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Lemma1,
    Remark1,
    Lemma2,
    Smoothness,
    Divisibility,
    Statements,
    Sigma,
    Irreducibility,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Lemma1,
        Check::Remark1,
        Check::Lemma2,
        Check::Smoothness,
        Check::Divisibility,
        Check::Statements,
        Check::Sigma,
        Check::Irreducibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lemma1 => "lemma1",
            Check::Remark1 => "remark1",
            Check::Lemma2 => "lemma2",
            Check::Smoothness => "smoothness",
            Check::Divisibility => "divisibility",
            Check::Statements => "statements",
            Check::Sigma => "sigma",
            Check::Irreducibility => "irreducibility",
        }
    }

    /// Smallest `n` the check accepts.
    pub fn min_n(self) -> usize {
        match self {
            Check::Remark1 => 2,
            Check::Sigma => 4,
            _ => 3,
        }
    }

    /// Range used when no `n` is given, and the cap applied to `all`.
    /// `extended` adds the opt-in `n = 5` for divisibility.
    pub fn default_range(self, extended: bool) -> Vec<usize> {
        match self {
            Check::Lemma1 | Check::Remark1 | Check::Lemma2 | Check::Statements | Check::Smoothness => (3..=7).collect(),
            Check::Divisibility if extended => vec![3, 4, 5],
            Check::Divisibility => vec![3, 4],
            Check::Sigma => (4..=6).collect(),
            Check::Irreducibility => (3..=6).collect(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::BadCheckName(s.to_string()))
    }
}

/// Which checks to run: an explicit set, or `all`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(BTreeSet<Check>),
}

impl FromStr for Selection {
    type Err = HarnessError;

    /// Comma-separated check names, or `all`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut checks = BTreeSet::new();
        for name in s.split(',').map(str::trim) {
            if name == "all" {
                return Ok(Selection::All);
            }
            checks.insert(name.parse()?);
        }
        Ok(Selection::Only(checks))
    }
}

/// Parses `N`, `A..B` (inclusive) or a comma-separated list.
pub fn parse_n_range(s: &str) -> Result<Vec<usize>, HarnessError> {
    let bad = || HarnessError::BadRangeSyntax(s.to_string());
    let mut out = BTreeSet::new();
    for part in s.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.insert(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRequest {
    /// Explicit degrees; `None` uses each check's default range.
    pub ns: Option<Vec<usize>>,
    pub selection: Selection,
    pub seed: u64,
    pub samples: usize,
    /// Include opt-in instances (divisibility at n = 5, the n = 6
    /// specialization certificate).
    pub extended: bool,
    /// Record wall-clock timings. Reports with timings are not
    /// reproducible byte for byte.
    pub timings: bool,
    pub max_n: usize,
}

impl RunRequest {
    pub fn new(selection: Selection, seed: u64, samples: usize) -> RunRequest {
        RunRequest {
            ns: None,
            selection,
            seed,
            samples,
            extended: false,
            timings: false,
            max_n: DEFAULT_MAX_N,
        }
    }

    pub fn with_ns(mut self, ns: Vec<usize>) -> RunRequest {
        self.ns = Some(ns);
        self
    }

    /// The `(check, n)` units to execute. An explicitly named check rejects
    /// an `n` it cannot accept; under `all`, each check runs on the given
    /// degrees that also lie in its default range.
    pub fn units(&self) -> Result<Vec<(Check, usize)>, HarnessError> {
        let (checks, explicit): (Vec<Check>, bool) = match &self.selection {
            Selection::All => (Check::ALL.to_vec(), false),
            Selection::Only(set) => (set.iter().copied().collect(), true),
        };
        let mut units = Vec::new();
        for check in checks {
            let defaults = check.default_range(self.extended);
            let ns: Vec<usize> = match &self.ns {
                None => defaults,
                Some(ns) if explicit => ns.clone(),
                Some(ns) => ns.iter().copied().filter(|n| defaults.contains(n)).collect(),
            };
            for n in ns {
                if n < check.min_n() {
                    return Err(HarnessError::BadRange { check, n });
                }
                if n > self.max_n {
                    return Err(HarnessError::AboveMax { n, max: self.max_n });
                }
                units.push((check, n));
            }
        }
        Ok(units)
    }
}

enum UnitOutput {
    Entries(Vec<ClaimResult>),
    Certificates(Vec<CertifiedClaim>),
}

fn run_unit(check: Check, n: usize, req: &RunRequest) -> UnitOutput {
    let (seed, samples) = (req.seed, req.samples);
    match check {
        Check::Lemma1 => UnitOutput::Entries(check_lemma1(n)),
        Check::Remark1 => UnitOutput::Entries(check_remark1(n, samples, seed)),
        Check::Lemma2 => UnitOutput::Entries(check_lemma2(n)),
        Check::Smoothness => {
            let mut entries = check_smoothness(n, samples, seed);
            entries.push(check_parametrization(n));
            UnitOutput::Entries(entries)
        }
        Check::Divisibility => UnitOutput::Entries(check_divisibility(n)),
        Check::Statements => UnitOutput::Entries(check_statements(n)),
        Check::Sigma => UnitOutput::Entries(check_sigma(n, samples, seed)),
        Check::Irreducibility => {
            let opts = FamilyOptions {
                extended: req.extended,
                seed,
                ..FamilyOptions::default()
            };
            UnitOutput::Certificates(certify_discriminant_irreducibility(n, &opts))
        }
    }
}

/// Runs the selected checks and assembles a report. Units run on the
/// worker pool; the report is sorted, so completion order never shows.
pub fn run(req: &RunRequest) -> Result<VerificationReport, HarnessError> {
    let units = req.units()?;
    let outputs = par::map(&units, |&(check, n)| {
        let start = Instant::now();
        let out = run_unit(check, n, req);
        (check, n, out, start.elapsed())
    });
    let mut entries = Vec::new();
    let mut certificates = Vec::new();
    let mut timings = Vec::new();
    for (check, n, out, elapsed) in outputs {
        match out {
            UnitOutput::Entries(e) => entries.extend(e),
            UnitOutput::Certificates(c) => certificates.extend(c),
        }
        timings.push(Timing {
            check,
            n,
            millis: elapsed.as_secs_f64() * 1e3,
        });
    }
    Ok(VerificationReport::assemble(
        req.seed,
        req.samples,
        entries,
        certificates,
        req.timings.then_some(timings),
    ))
}
