//! The audit report and its JSON, Markdown and CSV renderings.

use serde::Serialize;

use crate::runner::{Counterexample, EntryOutcome, Status};
use crate::AuditError;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub run_id: String,
    pub timestamp: String,
    pub grid_totals: GridTotals,
    pub entries: Vec<EntryOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GridTotals {
    pub entries: usize,
    pub points: usize,
    pub skipped: usize,
    pub mismatches: usize,
}

impl AuditReport {
    pub fn new(entries: Vec<EntryOutcome>) -> Self {
        let grid_totals = GridTotals {
            entries: entries.len(),
            points: entries.iter().map(|e| e.points).sum(),
            skipped: entries.iter().map(|e| e.skipped.total).sum(),
            mismatches: entries.iter().filter(|e| e.status == Status::Fail).count(),
        };
        AuditReport {
            run_id: uuid::Uuid::new_v4().to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            grid_totals,
            entries,
        }
    }

    pub fn all_expected(&self) -> bool {
        self.grid_totals.mismatches == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Identity audit\n\n");
        out.push_str(&format!("- run: `{}`\n- time: {}\n", self.run_id, self.timestamp));
        let t = &self.grid_totals;
        out.push_str(&format!(
            "- entries: {}, points: {}, skipped: {}, mismatches: {}\n\n",
            t.entries, t.points, t.skipped, t.mismatches
        ));
        let timed = self.entries.iter().any(|e| e.elapsed_ms.is_some());
        out.push_str("| id | expected | verdict | status | points | skipped | counterexample |");
        out.push_str(if timed { " ms |\n" } else { "\n" });
        out.push_str("|---|---|---|---|---:|---:|---|");
        out.push_str(if timed { "---:|\n" } else { "\n" });
        for e in &self.entries {
            let cx = e
                .counterexample
                .as_ref()
                .map(describe)
                .unwrap_or_default()
                .replace('|', "\\|");
            out.push_str(&format!(
                "| {} | {} | {} | {:?} | {} | {} | {} |",
                e.id, e.expected, e.verdict, e.status, e.points, e.skipped.total, cx
            ));
            match e.elapsed_ms {
                Some(ms) => out.push_str(&format!(" {ms} |\n")),
                None => out.push('\n'),
            }
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, AuditError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "paper_ref",
            "expected",
            "verdict",
            "status",
            "points",
            "skipped",
            "cx_point",
            "cx_lhs",
            "cx_rhs",
            "cx_corrected_lhs",
            "cx_corrected_rhs",
        ])?;
        for e in &self.entries {
            let cx = e.counterexample.as_ref();
            let field = |f: fn(&Counterexample) -> Option<String>| cx.and_then(f).unwrap_or_default();
            w.write_record([
                e.id.to_string(),
                e.paper_ref.to_string(),
                e.expected.to_string(),
                e.verdict.to_string(),
                e.status.to_string(),
                e.points.to_string(),
                e.skipped.total.to_string(),
                field(|c| Some(c.point.to_string())),
                field(|c| Some(c.lhs.clone())),
                field(|c| Some(c.rhs.clone())),
                field(|c| c.corrected_lhs.clone()),
                field(|c| c.corrected_rhs.clone()),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| AuditError::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn describe(c: &Counterexample) -> String {
    let mut s = format!("{}: {} vs {}", c.point, c.lhs, c.rhs);
    if let (Some(l), Some(r)) = (&c.corrected_lhs, &c.corrected_rhs) {
        s.push_str(&format!("; corrected {l} vs {r}"));
    }
    s
}
