//! Exact sequence export: one family, fixed parameters, a range of the free index.

use std::collections::BTreeMap;
use std::fmt;

use binomial_sums::{bnk, classic_sequence, franel, moment, parse_rational, y6, FamilyTag, Rational};
use serde::Serialize;

use crate::config::parse_range;
use crate::AuditError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `B(d, k)` over `k`.
    Bnk { d: u32 },
    /// `F_p(m, n; lambda)` over `n`.
    Franel { p: u32, m: u32, lambda: Rational },
    /// `y6(m, n; lambda, p)` over `n`.
    Y6 { m: u32, lambda: Rational, p: u32 },
    /// `M_{m,p}(n)` over `n`.
    Moment { m: u32, p: u32 },
    Catalan,
    Daehee,
    Changhee,
}

impl Family {
    pub const NAMES: [&'static str; 7] =
        ["bnk", "franel", "y6", "moment", "catalan", "daehee", "changhee"];

    /// Builds a family from its name and a `key=value,key=value` list.
    pub fn parse(name: &str, params: &str) -> Result<Family, AuditError> {
        let mut given: BTreeMap<&str, &str> = BTreeMap::new();
        for part in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| usage(format!("parameter {part:?} is not key=value")))?;
            if given.insert(k.trim(), v.trim()).is_some() {
                return Err(usage(format!("parameter {} given twice", k.trim())));
            }
        }
        let wanted: &[&str] = match name {
            "bnk" => &["d"],
            "franel" => &["p", "m", "lambda"],
            "y6" => &["m", "lambda", "p"],
            "moment" => &["m", "p"],
            "catalan" | "daehee" | "changhee" => &[],
            other => {
                return Err(usage(format!(
                    "unknown family {other:?} (one of {})",
                    Family::NAMES.join(", ")
                )))
            }
        };
        if let Some(extra) = given.keys().find(|k| !wanted.contains(k)) {
            return Err(usage(format!("family {name} takes no parameter {extra:?}")));
        }
        let get = |key: &str| {
            given
                .get(key)
                .copied()
                .ok_or_else(|| usage(format!("family {name} needs parameter {key}")))
        };
        let nat = |key: &str| -> Result<u32, AuditError> {
            let v = get(key)?;
            v.parse()
                .map_err(|_| usage(format!("{key} must be a non-negative integer, got {v:?}")))
        };
        let frac = |key: &str| -> Result<Rational, AuditError> {
            parse_rational(get(key)?).map_err(|e| usage(e.to_string()))
        };
        Ok(match name {
            "bnk" => Family::Bnk { d: nat("d")? },
            "franel" => Family::Franel {
                p: nat("p")?,
                m: nat("m")?,
                lambda: frac("lambda")?,
            },
            "y6" => Family::Y6 {
                m: nat("m")?,
                lambda: frac("lambda")?,
                p: nat("p")?,
            },
            "moment" => Family::Moment {
                m: nat("m")?,
                p: nat("p")?,
            },
            "catalan" => Family::Catalan,
            "daehee" => Family::Daehee,
            _ => Family::Changhee,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Bnk { .. } => "bnk",
            Family::Franel { .. } => "franel",
            Family::Y6 { .. } => "y6",
            Family::Moment { .. } => "moment",
            Family::Catalan => "catalan",
            Family::Daehee => "daehee",
            Family::Changhee => "changhee",
        }
    }

    /// Name of the free index.
    pub fn index(&self) -> &'static str {
        match self {
            Family::Bnk { .. } => "k",
            _ => "n",
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, String> {
        let mut out = BTreeMap::new();
        match self {
            Family::Bnk { d } => {
                out.insert("d", d.to_string());
            }
            Family::Franel { p, m, lambda } | Family::Y6 { m, lambda, p } => {
                out.insert("p", p.to_string());
                out.insert("m", m.to_string());
                out.insert("lambda", lambda.to_string());
            }
            Family::Moment { m, p } => {
                out.insert("m", m.to_string());
                out.insert("p", p.to_string());
            }
            Family::Catalan | Family::Daehee | Family::Changhee => {}
        }
        out
    }

    pub fn value(&self, i: u32) -> Rational {
        match self {
            Family::Bnk { d } => bnk(*d, i),
            Family::Franel { p, m, lambda } => franel(*p, *m, i, lambda),
            Family::Y6 { m, lambda, p } => y6(*m, i, lambda, *p),
            Family::Moment { m, p } => moment(*m, *p, i),
            Family::Catalan => classic_sequence(FamilyTag::Catalan, i),
            Family::Daehee => classic_sequence(FamilyTag::Daehee, i),
            Family::Changhee => classic_sequence(FamilyTag::Changhee, i),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

fn usage(msg: String) -> AuditError {
    AuditError::Usage(msg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sequence {
    pub family: &'static str,
    pub params: BTreeMap<&'static str, String>,
    pub index: &'static str,
    pub start: u32,
    pub end: u32,
    pub values: Vec<String>,
}

impl Sequence {
    pub fn compute(family: &Family, range: &str) -> Result<Sequence, AuditError> {
        let (start, end) = parse_range(range).map_err(usage)?;
        Ok(Sequence {
            family: family.name(),
            params: family.params(),
            index: family.index(),
            start,
            end,
            values: (start..=end).map(|i| family.value(i).to_string()).collect(),
        })
    }

    pub fn to_csv(&self) -> Result<String, AuditError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([self.index, "value"])?;
        for (i, v) in (self.start..=self.end).zip(&self.values) {
            w.write_record([i.to_string(), v.clone()])?;
        }
        let bytes = w.into_inner().map_err(|e| AuditError::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sequence serializes");
        s.push('\n');
        s
    }
}
