//! The run configuration: a flat `key = value` file with optional
//! `[entry_id]` sections that override that entry's grid.
//!
//! ```text
//! # run-wide settings
//! threads = 4
//! format = md
//! lambda = -1, 1/2, 2
//! n = 0..6
//!
//! [dixon]
//! n = 1..4
//! ```
//!
//! Ranges are inclusive. `lambda` values are exact fractions; decimals are
//! rejected. Top-level `m`, `n`, `p`, `k`, `lambda` replace the default axes
//! that entries inherit; a section replaces the named axes of one entry, and
//! naming an axis the entry does not use is an error.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use binomial_sums::parse_rational;

use crate::grid::{Axis, DefaultGrid, Dim};
use crate::registry;
use crate::AuditError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Md,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (json, md, csv)")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub filter: Option<String>,
    pub format: Option<Format>,
    pub threads: Option<usize>,
    pub timings: bool,
    pub defaults: DefaultGrid,
    pub overrides: BTreeMap<String, Vec<(Dim, Axis)>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, AuditError> {
        let text = std::fs::read_to_string(path).map_err(|source| AuditError::Io {
            path: path.display().to_string(),
            source,
        })?;
        text.parse()
    }

    /// Axes for one entry after applying defaults and overrides.
    pub fn axes_for(&self, entry: &registry::IdentityEntry) -> Vec<(Dim, Axis)> {
        let overrides = self.overrides.get(entry.id);
        entry
            .axes
            .iter()
            .map(|(dim, spec)| {
                let axis = overrides
                    .and_then(|o| o.iter().find(|(d, _)| d == dim))
                    .map(|(_, a)| a.clone())
                    .unwrap_or_else(|| match spec {
                        crate::grid::AxisSpec::Default => self.defaults.get(*dim).clone(),
                        crate::grid::AxisSpec::Fixed(a) => a.clone(),
                    });
                (*dim, axis)
            })
            .collect()
    }
}

impl FromStr for Config {
    type Err = AuditError;

    fn from_str(text: &str) -> Result<Config, AuditError> {
        let mut cfg = Config::default();
        let mut section: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| AuditError::Config {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let id = rest
                    .strip_suffix(']')
                    .ok_or_else(|| err(format!("unterminated section header {line:?}")))?
                    .trim();
                if registry::find(id).is_none() {
                    return Err(AuditError::UnknownId(id.to_string()));
                }
                if cfg.overrides.contains_key(id) {
                    return Err(err(format!("section [{id}] appears twice")));
                }
                cfg.overrides.insert(id.to_string(), Vec::new());
                section = Some(id.to_string());
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            if value.is_empty() {
                return Err(err(format!("empty value for {key}")));
            }

            if let Some(id) = &section {
                let dim = Dim::parse(key)
                    .ok_or_else(|| err(format!("unknown grid key {key:?} in [{id}]")))?;
                let entry = registry::find(id).expect("checked at header");
                if !entry.uses(dim) {
                    return Err(err(format!("entry {id} has no {key} axis")));
                }
                let axis = parse_axis(dim, value).map_err(err)?;
                let list = cfg.overrides.get_mut(id).expect("inserted at header");
                if list.iter().any(|(d, _)| *d == dim) {
                    return Err(err(format!("{key} set twice in [{id}]")));
                }
                list.push((dim, axis));
                continue;
            }

            match key {
                "filter" => cfg.filter = Some(value.to_string()),
                "format" => cfg.format = Some(value.parse().map_err(err)?),
                "threads" => {
                    let n: usize = value
                        .parse()
                        .map_err(|_| err(format!("threads must be a positive integer, got {value:?}")))?;
                    if n == 0 {
                        return Err(err("threads must be at least 1".into()));
                    }
                    cfg.threads = Some(n);
                }
                "timings" => {
                    cfg.timings = value
                        .parse()
                        .map_err(|_| err(format!("timings must be true or false, got {value:?}")))?
                }
                _ => {
                    let dim = Dim::parse(key).ok_or_else(|| err(format!("unknown key {key:?}")))?;
                    let axis = parse_axis(dim, value).map_err(err)?;
                    cfg.defaults.set(dim, axis);
                }
            }
        }
        Ok(cfg)
    }
}

fn parse_axis(dim: Dim, value: &str) -> Result<Axis, String> {
    if dim == Dim::Lambda {
        let vals = value
            .split(',')
            .map(|s| parse_rational(s.trim()).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Axis::Values(vals));
    }
    let (a, b) = parse_range(value)?;
    Ok(Axis::Range(a, b))
}

/// `a..b` (inclusive) or a single `a`.
pub fn parse_range(value: &str) -> Result<(u32, u32), String> {
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| format!("{s:?} is not a non-negative integer"))
    };
    let (a, b) = match value.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(value)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {value:?}"));
    }
    Ok((a, b))
}
