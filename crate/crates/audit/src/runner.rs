//! Evaluates selected identities over their grids and classifies each one.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::config::Config;
use crate::grid::{expand, Point};
use crate::registry::{registry, Form, IdentityEntry, Pair, Verdict};
use crate::report::AuditReport;
use crate::AuditError;

/// The first grid point where a form fails, with both sides as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub point: Point,
    /// Which of the entry's asserted equalities failed (0 for single-equality entries).
    pub equality: usize,
    pub lhs: String,
    pub rhs: String,
    /// The corrected form at the same point, when the entry has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_rhs: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryOutcome {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub verdict: Verdict,
    pub expected: Verdict,
    pub status: Status,
    pub points: usize,
    pub skipped: SkipSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SkipSummary {
    pub total: usize,
    pub reasons: BTreeMap<&'static str, usize>,
}

/// Entries whose id matches `filter` (a glob), in registry order.
pub fn select(filter: Option<&str>) -> Result<Vec<&'static IdentityEntry>, AuditError> {
    let Some(pattern) = filter else {
        return Ok(registry().iter().collect());
    };
    let glob = glob::Pattern::new(pattern).map_err(|e| AuditError::Filter {
        pattern: pattern.to_string(),
        message: e.to_string(),
    })?;
    let chosen: Vec<_> = registry().iter().filter(|e| glob.matches(e.id)).collect();
    if chosen.is_empty() {
        return Err(AuditError::UnknownId(pattern.to_string()));
    }
    Ok(chosen)
}

/// Runs the audit on a dedicated pool of `threads` workers.
pub fn run_audit(
    config: &Config,
    filter: Option<&str>,
    threads: usize,
) -> Result<AuditReport, AuditError> {
    let entries = select(filter)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| AuditError::ThreadPool(e.to_string()))?;
    let outcomes = pool.install(|| {
        entries
            .par_iter()
            .map(|e| run_entry(e, config))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(AuditReport::new(outcomes))
}

/// Evaluates one entry on the current rayon pool.
pub fn run_entry(entry: &IdentityEntry, config: &Config) -> Result<EntryOutcome, AuditError> {
    let start = Instant::now();
    let mut skipped = SkipSummary::default();
    let mut points = Vec::new();
    for pt in expand(&config.axes_for(entry)) {
        match entry.skip.and_then(|rule| rule(&pt)) {
            Some(reason) => {
                skipped.total += 1;
                *skipped.reasons.entry(reason).or_default() += 1;
            }
            None => points.push(pt),
        }
    }
    if points.is_empty() {
        return Err(AuditError::EmptyGrid(entry.id.to_string()));
    }

    let printed_fail = first_failure(entry, entry.printed, &points)?;
    let mut corrected_fail = None;
    let verdict = match (&printed_fail, entry.corrected) {
        (None, _) => Verdict::HoldsPrinted,
        (Some(_), Some(form)) => {
            corrected_fail = first_failure(entry, form, &points)?;
            if corrected_fail.is_none() {
                Verdict::HoldsCorrectedOnly
            } else {
                Verdict::FailsBoth
            }
        }
        (Some(_), None) => Verdict::FailsBoth,
    };

    let counterexample = match printed_fail {
        Some((pt, idx, pairs)) => {
            let corrected = match entry.corrected {
                Some(form) => Some(evaluate(entry, form, &pt)?),
                None => None,
            };
            let at = corrected
                .as_ref()
                .and_then(|c| c.get(idx).or_else(|| c.first()));
            Some(Counterexample {
                equality: idx,
                lhs: pairs[idx].lhs.to_string(),
                rhs: pairs[idx].rhs.to_string(),
                corrected_lhs: at.map(|p| p.lhs.to_string()),
                corrected_rhs: at.map(|p| p.rhs.to_string()),
                point: pt,
            })
        }
        None => None,
    };
    let corrected_counterexample = corrected_fail.map(|(pt, idx, pairs)| Counterexample {
        equality: idx,
        lhs: pairs[idx].lhs.to_string(),
        rhs: pairs[idx].rhs.to_string(),
        corrected_lhs: None,
        corrected_rhs: None,
        point: pt,
    });

    let elapsed = start.elapsed();
    Ok(EntryOutcome {
        id: entry.id,
        paper_ref: entry.paper_ref,
        verdict,
        expected: entry.expected,
        status: if verdict == entry.expected {
            Status::Pass
        } else {
            Status::Fail
        },
        points: points.len(),
        skipped,
        counterexample,
        corrected_counterexample,
        elapsed,
        elapsed_ms: config.timings.then_some(elapsed.as_millis()),
    })
}

fn evaluate(entry: &IdentityEntry, form: Form, pt: &Point) -> Result<Vec<Pair>, AuditError> {
    form(pt).map_err(|source| AuditError::Evaluation {
        id: entry.id.to_string(),
        point: pt.to_string(),
        source: Box::new(source),
    })
}

type Failure = (Point, usize, Vec<Pair>);

/// First failing point in grid order. Points are evaluated in parallel but
/// the answer does not depend on scheduling.
fn first_failure(
    entry: &IdentityEntry,
    form: Form,
    points: &[Point],
) -> Result<Option<Failure>, AuditError> {
    let results: Vec<Option<(usize, Vec<Pair>)>> = points
        .par_iter()
        .map(|pt| {
            let pairs = evaluate(entry, form, pt)?;
            Ok(pairs
                .iter()
                .position(|p| !p.holds())
                .map(|idx| (idx, pairs)))
        })
        .collect::<Result<_, AuditError>>()?;
    Ok(results
        .into_iter()
        .zip(points)
        .find_map(|(r, pt)| r.map(|(idx, pairs)| (pt.clone(), idx, pairs))))
}
