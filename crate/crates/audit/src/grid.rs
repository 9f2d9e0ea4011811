//! Parameter grids: the axes an identity is checked over and the points
//! they expand to.

use std::fmt;

use binomial_sums::rational::{frac, int};
use binomial_sums::Rational;
use serde::Serialize;

/// A grid axis name. Every identity uses a subset of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    M,
    N,
    P,
    K,
    Lambda,
}

impl Dim {
    pub const ALL: [Dim; 5] = [Dim::M, Dim::N, Dim::P, Dim::K, Dim::Lambda];

    pub fn name(self) -> &'static str {
        match self {
            Dim::M => "m",
            Dim::N => "n",
            Dim::P => "p",
            Dim::K => "k",
            Dim::Lambda => "lambda",
        }
    }

    pub fn parse(s: &str) -> Option<Dim> {
        Dim::ALL.into_iter().find(|d| d.name() == s)
    }
}

/// The values an axis takes: an inclusive integer range, or a list of
/// rationals (only for `lambda`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Axis {
    Range(u32, u32),
    Values(Vec<Rational>),
}

impl Axis {
    fn len(&self) -> usize {
        match self {
            Axis::Range(a, b) => (*b as usize + 1).saturating_sub(*a as usize),
            Axis::Values(v) => v.len(),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Range(a, b) => write!(f, "{a}..{b}"),
            Axis::Values(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(", "))
            }
        }
    }
}

/// How an identity declares one of its axes.
#[derive(Clone, Debug)]
pub enum AxisSpec {
    /// Follows the run-wide default for this dimension.
    Default,
    Fixed(Axis),
}

/// Run-wide default axes, overridable from the config file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefaultGrid {
    pub m: Axis,
    pub n: Axis,
    pub p: Axis,
    pub k: Axis,
    pub lambda: Axis,
}

impl Default for DefaultGrid {
    fn default() -> Self {
        DefaultGrid {
            m: Axis::Range(0, 8),
            n: Axis::Range(0, 8),
            p: Axis::Range(0, 4),
            k: Axis::Range(0, 8),
            lambda: Axis::Values(default_lambdas()),
        }
    }
}

impl DefaultGrid {
    pub fn get(&self, dim: Dim) -> &Axis {
        match dim {
            Dim::M => &self.m,
            Dim::N => &self.n,
            Dim::P => &self.p,
            Dim::K => &self.k,
            Dim::Lambda => &self.lambda,
        }
    }

    pub fn set(&mut self, dim: Dim, axis: Axis) {
        match dim {
            Dim::M => self.m = axis,
            Dim::N => self.n = axis,
            Dim::P => self.p = axis,
            Dim::K => self.k = axis,
            Dim::Lambda => self.lambda = axis,
        }
    }
}

/// `{-2, -1, -1/2, 1/2, 1, 2, 3}`.
pub fn default_lambdas() -> Vec<Rational> {
    vec![int(-2), int(-1), frac(-1, 2), frac(1, 2), int(1), int(2), int(3)]
}

/// One grid point. Only the dimensions the identity uses are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Point {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_lambda"
    )]
    pub lambda: Option<Rational>,
}

fn serialize_lambda<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

// Accessors panic on a missing dimension: that is a registry bug, not input.
impl Point {
    pub fn m(&self) -> u32 {
        self.m.expect("identity uses m")
    }
    pub fn n(&self) -> u32 {
        self.n.expect("identity uses n")
    }
    pub fn p(&self) -> u32 {
        self.p.expect("identity uses p")
    }
    pub fn k(&self) -> u32 {
        self.k.expect("identity uses k")
    }
    pub fn lambda(&self) -> &Rational {
        self.lambda.as_ref().expect("identity uses lambda")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("m", self.m), ("n", self.n), ("p", self.p), ("k", self.k)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda={l}"));
        }
        f.write_str(&parts.join(", "))
    }
}

/// Expands resolved axes into points, `lambda` varying fastest, then `k`,
/// `p`, `n`, `m`.
pub fn expand(axes: &[(Dim, Axis)]) -> Vec<Point> {
    let mut sorted: Vec<&(Dim, Axis)> = axes.iter().collect();
    sorted.sort_by_key(|(d, _)| *d);
    let total: usize = sorted.iter().map(|(_, a)| a.len()).product();
    let mut points = Vec::with_capacity(total);
    let mut current = Point::default();
    fill(&sorted, &mut current, &mut points);
    points
}

fn fill(axes: &[&(Dim, Axis)], current: &mut Point, out: &mut Vec<Point>) {
    let Some(((dim, axis), rest)) = axes.split_first().map(|(h, t)| (*h, t)) else {
        out.push(current.clone());
        return;
    };
    match axis {
        Axis::Range(a, b) => {
            for v in *a..=*b {
                match dim {
                    Dim::M => current.m = Some(v),
                    Dim::N => current.n = Some(v),
                    Dim::P => current.p = Some(v),
                    Dim::K => current.k = Some(v),
                    Dim::Lambda => unreachable!("lambda axes hold values"),
                }
                fill(rest, current, out);
            }
        }
        Axis::Values(vals) => {
            for v in vals {
                current.lambda = Some(v.clone());
                fill(rest, current, out);
            }
        }
    }
}
