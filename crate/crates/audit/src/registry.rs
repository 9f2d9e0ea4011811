//! Every identity under audit: its printed form, its corrected form when the
//! printed one does not hold, the grid it is checked over, and the verdict it
//! is expected to reach.

use std::fmt;
use std::sync::OnceLock;

use binomial_sums::hypergeom::{alternating_square_gamma_form, one_p2_forms};
use binomial_sums::rational::{
    binomial, binomial_general, factorial, falling_factorial, frac, int, pochhammer, pow, pow_u,
    powi, sign,
};
use binomial_sums::{
    apostol_bernoulli, apostol_euler_order, b_ogf, bernoulli, bernoulli_poly_order, bnk,
    classic_sequence, euler_at_zero, euler_operator, euler_poly_order, fermionic, franel,
    frobenius_euler, gamma_half, legendre, moment, ogf_series, p_poly, pfq_terminating,
    poly_integral01, r_poly, raw_sum_poly, stirling1, stirling2, t_poly, volkenborn, vowe, y1,
    y6, y6_egf, y6_hyper, y_seq, EgfSeries, FamilyTag, OgfCase, PfqSpec, Poly, Rational,
};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::grid::{Axis, AxisSpec, Dim, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The identity holds exactly as printed over the whole grid.
    HoldsPrinted,
    /// The printed form fails somewhere; the recorded correction holds everywhere.
    HoldsCorrectedOnly,
    /// Neither form holds (or there is no correction to try).
    FailsBoth,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsPrinted => "HOLDS_PRINTED",
            Verdict::HoldsCorrectedOnly => "HOLDS_CORRECTED_ONLY",
            Verdict::FailsBoth => "FAILS_BOTH",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of an identity: a number or a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Poly(Poly),
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Scalar(v)
    }
}

impl From<Poly> for Value {
    fn from(v: Poly) -> Self {
        Value::Poly(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(v) => write!(f, "{v}"),
            Value::Poly(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub lhs: Value,
    pub rhs: Value,
}

impl Pair {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of every equality an identity asserts at one point.
pub type Form = fn(&Point) -> binomial_sums::Result<Vec<Pair>>;

/// Returns a reason code when a point lies outside an identity's domain.
pub type SkipRule = fn(&Point) -> Option<&'static str>;

pub struct IdentityEntry {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub axes: Vec<(Dim, AxisSpec)>,
    pub skip: Option<SkipRule>,
    pub printed: Form,
    pub corrected: Option<Form>,
    pub expected: Verdict,
}

impl IdentityEntry {
    pub fn uses(&self, dim: Dim) -> bool {
        self.axes.iter().any(|(d, _)| *d == dim)
    }
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

pub fn registry() -> &'static [IdentityEntry] {
    static REGISTRY: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn find(id: &str) -> Option<&'static IdentityEntry> {
    registry().iter().find(|e| e.id == id)
}

// ---------------------------------------------------------------- helpers

type Out = binomial_sums::Result<Vec<Pair>>;

fn pair(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Pair {
    Pair {
        lhs: lhs.into(),
        rhs: rhs.into(),
    }
}

fn one(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Out {
    Ok(vec![pair(lhs, rhs)])
}

fn q(v: u32) -> Rational {
    int(v as i64)
}

fn c(n: u32, k: u32) -> Rational {
    binomial(n as u64, k as u64)
}

fn fact(n: u32) -> Rational {
    factorial(n as u64)
}

fn two_pow(e: i64) -> Rational {
    powi(&int(2), e)
}

/// `sum_{j=0}^{n} C(n,j)^p lambda^j f(j)`.
fn weighted(pt: &Point, f: impl Fn(u32) -> Rational) -> Rational {
    let (n, p, lambda) = (pt.n(), pt.p(), pt.lambda());
    (0..=n)
        .map(|j| pow(&c(n, j), p) * pow(lambda, j) * f(j))
        .sum()
}

fn y6_at(pt: &Point, m: u32) -> Rational {
    y6(m, pt.n(), pt.lambda(), pt.p())
}

fn p_at(pt: &Point, m: u32) -> Poly {
    p_poly(m, pt.n(), pt.lambda(), pt.p())
}

fn nth_derivative(p: &Poly, k: u32) -> Poly {
    (0..k).fold(p.clone(), |acc, _| acc.derivative())
}

/// Polynomial through `(i, values[i])`, `i = 0..len`, by Newton forward differences.
fn interpolate(values: &[Rational]) -> Poly {
    let mut diffs = values.to_vec();
    let mut out = Poly::zero();
    let mut basis = Poly::one();
    for i in 0..values.len() {
        out = &out + &basis.scale(&diffs[0]);
        basis = (&basis * &Poly::linear(-q(i as u32))).scale(&q(i as u32 + 1).recip());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

fn pfq(upper: Vec<Rational>, lower: Vec<Rational>, z: Rational) -> binomial_sums::Result<Rational> {
    pfq_terminating(&PfqSpec::new(upper, lower, z))
}

fn rep(v: i64, times: usize) -> Vec<Rational> {
    vec![int(v); times]
}

fn range(dim: Dim, a: u32, b: u32) -> (Dim, AxisSpec) {
    (dim, AxisSpec::Fixed(Axis::Range(a, b)))
}

fn default(dim: Dim) -> (Dim, AxisSpec) {
    (dim, AxisSpec::Default)
}

fn full_grid() -> Vec<(Dim, AxisSpec)> {
    vec![default(Dim::M), default(Dim::N), default(Dim::P), default(Dim::Lambda)]
}

struct Builder(IdentityEntry);

fn entry(
    id: &'static str,
    paper_ref: &'static str,
    expected: Verdict,
    axes: Vec<(Dim, AxisSpec)>,
    printed: Form,
) -> Builder {
    Builder(IdentityEntry {
        id,
        paper_ref,
        axes,
        skip: None,
        printed,
        corrected: None,
        expected,
    })
}

impl Builder {
    fn corrected(mut self, f: Form) -> Self {
        self.0.corrected = Some(f);
        self
    }
    fn skip(mut self, f: SkipRule) -> Self {
        self.0.skip = Some(f);
        self
    }
}

fn skip_lambda_one(pt: &Point) -> Option<&'static str> {
    pt.lambda().is_one().then_some("lambda_singular")
}

// ------------------------------------------------------- golombek's sums

fn gl_derivative(d: u32, k: u32) -> binomial_sums::Result<Rational> {
    let order = d as usize;
    let base = EgfSeries::exp(&int(1), order).add(&EgfSeries::one(order))?;
    Ok(base.powi(k as i64)?.coeff(order))
}

fn b_from(start: u32, d: u32, k: u32) -> Rational {
    (start..=k).map(|j| c(k, j) * pow_u(j as u64, d)).sum()
}

fn q_sum(start: u32, m: u32, n: u32) -> Rational {
    (start..=n)
        .map(|k| {
            let b = c(n, k);
            &b * &b * pow_u(k as u64, m)
        })
        .sum()
}

fn golombek_q_rhs(m: u32, n: u32, corrected: bool) -> Rational {
    let (ni, nn) = (n as i64, q(n));
    match m {
        0 => c(2 * n, n) - Rational::one(),
        1 => &nn * c(2 * n - 1, n),
        2 => &nn * &nn * c(2 * n - 2, n - 1),
        _ if corrected => &nn * &nn * (&nn + int(1)) * c(2 * n - 2, n - 1) / int(2),
        _ => &nn * &nn * (&nn + int(1)) * binomial_general(&int(2 * ni - 3), n - 1),
    }
}

// ------------------------------------------------------ integral forms

/// `sum_k C(m,k) y6(k) / (m - k + 1)`, the integral of `P` over `[0, 1]` termwise.
fn integral_sum(pt: &Point) -> Rational {
    let m = pt.m();
    (0..=m)
        .map(|k| c(m, k) * y6_at(pt, k) / q(m - k + 1))
        .sum()
}

fn shifted_power_difference(j: u32, e: u32) -> Rational {
    pow_u(j as u64 + 1, e) - pow_u(j as u64, e)
}

fn printed_integral_rhs(pt: &Point) -> Rational {
    let m = pt.m();
    weighted(pt, |j| shifted_power_difference(j, m)) / q(m + 1)
}

fn corrected_integral_rhs(pt: &Point) -> Rational {
    let m = pt.m();
    weighted(pt, |j| shifted_power_difference(j, m + 1)) / q(m + 1) / fact(pt.n())
}

fn volkenborn_sum(pt: &Point) -> Rational {
    let m = pt.m();
    (0..=m)
        .map(|k| c(m, k) * y6_at(pt, k) * bernoulli(m - k))
        .sum()
}

fn fermionic_sum(pt: &Point) -> Rational {
    let m = pt.m();
    (0..=m)
        .map(|k| c(m, k) * y6_at(pt, k) * euler_at_zero(m - k))
        .sum()
}

fn bernoulli_values(pt: &Point) -> Rational {
    let b = bernoulli_poly_order(pt.m(), 1);
    weighted(pt, |j| b.eval(&q(j)))
}

fn euler_values(pt: &Point) -> Rational {
    let e = euler_poly_order(pt.m(), 1);
    weighted(pt, |j| e.eval(&q(j)))
}

// ------------------------------------------------------ the last theorems

fn stirling_form(pt: &Point) -> Rational {
    let (m, n, p, lambda) = (pt.m(), pt.n(), pt.p(), pt.lambda());
    let mut s = Rational::zero();
    for k in 0..=n {
        let w = powi(&c(n, k), p as i64 - 1) * pow(lambda, k) / fact(n - k);
        for l in 0..=k {
            s += &w * stirling2(m, l) / fact(k - l);
        }
    }
    s
}

/// `sum_v C(m+n,v) S(v,n) B^{(n)}_{m+n-v}(x) / (C(m+n,n) n!)` as a polynomial in `x`.
fn bernoulli_kernel(m: u32, n: u32) -> Poly {
    let top = m + n;
    let norm = (c(top, n) * fact(n)).recip();
    (0..=top)
        .map(|v| {
            bernoulli_poly_order(top - v, n as i64).scale(&(c(top, v) * stirling2(v, n) * &norm))
        })
        .sum()
}

/// `sum_v C(m,v) B(v,n) E^{(n)}_{m-v}(x) / (n! 2^n)` as a polynomial in `x`.
fn euler_kernel(m: u32, n: u32) -> Poly {
    let norm = (fact(n) * pow_u(2, n)).recip();
    (0..=m)
        .map(|v| euler_poly_order(m - v, n as i64).scale(&(c(m, v) * bnk(v, n) * &norm)))
        .sum()
}

/// Printed reading: the kernel keeps its free variable, the outer sum runs over `k`.
fn free_variable_form(pt: &Point, kernel: Poly) -> Poly {
    let (n, p, lambda) = (pt.n(), pt.p(), pt.lambda());
    let w: Rational = (0..=n).map(|k| pow(&c(n, k), p) * pow(lambda, k)).sum();
    kernel.scale(&w)
}

/// Corrected reading: the kernel's variable is the summation index `k`.
fn bound_variable_form(pt: &Point, kernel: Poly) -> Rational {
    weighted(pt, |k| kernel.eval(&q(k)))
}

// ---------------------------------------------------------------- build

fn build() -> Vec<IdentityEntry> {
    use Dim::*;
    use Verdict::*;
    let entries = vec![
        // ---- Golombek's sums B(d, k) and the sequences they generate
        entry("Gl", "B(n,k) = sum_{j=1}^{k} C(k,j) j^n = d^n/dt^n (e^t+1)^k at t=0", HoldsCorrectedOnly,
            vec![range(M, 0, 8), range(K, 0, 8)],
            |pt| one(b_from(1, pt.m(), pt.k()), gl_derivative(pt.m(), pt.k())?))
            .corrected(|pt| one(b_from(0, pt.m(), pt.k()), gl_derivative(pt.m(), pt.k())?)),
        entry("golombek_b", "B(0,k), B(1,k), B(2,k) = 2^k, k 2^{k-1}, k(k+1) 2^{k-2}", HoldsPrinted,
            vec![range(M, 0, 2), range(K, 0, 12)],
            |pt| {
                let (d, k) = (pt.m(), pt.k());
                let kk = q(k);
                let rhs = match d {
                    0 => pow_u(2, k),
                    1 => &kk * two_pow(k as i64 - 1),
                    _ => &kk * (&kk + int(1)) * two_pow(k as i64 - 2),
                };
                one(bnk(d, k), rhs)
            }),
        entry("golombek_q", "sum_{k>=1} C(n,k)^2 k^m = C(2n,n)-1, n C(2n-1,n), n^2 C(2n-2,n-1), n^2(n+1) C(2n-3,n-1)", HoldsCorrectedOnly,
            vec![range(M, 0, 3), range(N, 1, 8)],
            |pt| one(q_sum(1, pt.m(), pt.n()), golombek_q_rhs(pt.m(), pt.n(), false)))
            .corrected(|pt| one(q_sum(1, pt.m(), pt.n()), golombek_q_rhs(pt.m(), pt.n(), true))),
        entry("golombek_q_derivative", "sum_{k=1}^{n} C(n,k)^2 k^m = d^m/dt^m sum_{k=0}^{n} C(n,k)^2 e^{tk} at t=0", HoldsCorrectedOnly,
            vec![default(M), default(N)],
            |pt| one(q_sum(1, pt.m(), pt.n()), fact(pt.n()) * y6_egf(pt.n(), &int(1), 2, pt.m() as usize).coeff(pt.m() as usize)))
            .corrected(|pt| one(q_sum(0, pt.m(), pt.n()), fact(pt.n()) * y6_egf(pt.n(), &int(1), 2, pt.m() as usize).coeff(pt.m() as usize))),
        entry("CC2", "B(n,k) = k! y1(n,k;1)", HoldsPrinted,
            vec![range(M, 0, 10), range(K, 0, 10)],
            |pt| one(bnk(pt.m(), pt.k()), fact(pt.k()) * y1(pt.m(), pt.k(), &int(1)))),
        entry("Bs-1", "B(m,n) = sum_j C(n,j) j! 2^{n-j} S(m,j)", HoldsPrinted,
            vec![range(M, 0, 10), range(K, 0, 10)],
            |pt| {
                let (m, n) = (pt.m(), pt.k());
                let rhs: Rational = (0..=m)
                    .map(|j| c(n, j) * fact(j) * two_pow(n as i64 - j as i64) * stirling2(m, j))
                    .sum();
                one(bnk(m, n), rhs)
            }),
        entry("boyadzhiev", "sum_j C(k,j) j^n x^j = sum_j C(k,j) j! S(n,j) x^j (1+x)^{k-j}", HoldsPrinted,
            vec![range(M, 0, 8), range(K, 0, 8)],
            |pt| {
                let (n, k) = (pt.m(), pt.k());
                let lhs = Poly::new((0..=k).map(|j| c(k, j) * pow_u(j as u64, n)).collect());
                let one_plus_x = Poly::linear(int(1));
                let rhs: Poly = (0..=n.min(k))
                    .map(|j| {
                        &Poly::monomial(c(k, j) * fact(j) * stirling2(n, j), j as usize)
                            * &one_plus_x.pow(k - j)
                    })
                    .sum();
                one(lhs, rhs)
            }),
        entry("altStirling", "sum_j (-1)^j C(k,j) j^n = (-1)^k k! S(n,k)", HoldsPrinted,
            vec![range(M, 0, 10), range(K, 0, 10)],
            |pt| {
                let (n, k) = (pt.m(), pt.k());
                let lhs: Rational = (0..=k).map(|j| sign(j as u64) * c(k, j) * pow_u(j as u64, n)).sum();
                one(lhs, sign(k as u64) * fact(k) * stirling2(n, k))
            }),
        entry("CB1", "sum_{v<d} m_v B(d-v,k) = 2^{k-d} C(k,d) with m_v = s(d,d-v)/d!, and the solved form for B(d,k)", HoldsPrinted,
            vec![range(M, 1, 6), range(K, 0, 12)],
            |pt| {
                let (d, k) = (pt.m(), pt.k());
                let mv = |v: u32| stirling1(d, d - v) / fact(d);
                let target = two_pow(k as i64 - d as i64) * c(k, d);
                let recurrence: Rational = (0..d).map(|v| mv(v) * bnk(d - v, k)).sum();
                let m0 = mv(0);
                let solved = &target / &m0
                    - (1..d).map(|v| mv(v) / &m0 * bnk(d - v, k)).sum::<Rational>();
                Ok(vec![pair(recurrence, target), pair(bnk(d, k), solved)])
            }),
        entry("tpoly", "B(n,k) = 2^{k-n} T_n(k)", HoldsPrinted,
            vec![range(M, 1, 8), range(K, 0, 12)],
            |pt| {
                let (d, k) = (pt.m(), pt.k());
                one(bnk(d, k), two_pow(k as i64 - d as i64) * t_poly(d)?.eval(&q(k)))
            }),
        entry("xu_x", "x_{d-l} = sum_{j=l}^{d} s(j,l) S(d,j) 2^{d-j}", HoldsPrinted,
            vec![range(M, 2, 8), range(K, 1, 7)],
            |pt| {
                let (d, l) = (pt.m(), pt.k());
                let samples: Vec<Rational> = (0..=d)
                    .map(|i| bnk(d, i) * two_pow(d as i64 - i as i64))
                    .collect();
                let t = interpolate(&samples);
                let xu: Rational = (l..=d)
                    .map(|j| stirling1(j, l) * stirling2(d, j) * pow_u(2, d - j))
                    .sum();
                one(t.coeff(l as usize), xu)
            })
            .skip(|pt| (pt.k() >= pt.m()).then_some("index_out_of_range")),
        entry("fd_ogf", "f_d(x) = sum_k B(d,k) x^k = sum_j j! S(d,j) x^j / (1-2x)^{j+1}", HoldsPrinted,
            vec![range(M, 0, 8), range(K, 0, 12)],
            |pt| {
                let (d, k) = (pt.m(), pt.k());
                let series = b_ogf(d).maclaurin(k as usize)?;
                one(series[k as usize].clone(), bnk(d, k))
            }),
        entry("Cab3", "E_n^{(-k)}(lambda) = k! 2^{-k} y1(n,k;lambda)", HoldsPrinted,
            vec![range(M, 0, 8), range(K, 0, 8), default(Lambda)],
            |pt| {
                let (n, k, lambda) = (pt.m(), pt.k(), pt.lambda());
                let lhs = apostol_euler_order(n, -(k as i64), lambda)?.coeff(0);
                one(lhs, fact(k) * two_pow(-(k as i64)) * y1(n, k, lambda))
            }),
        entry("Caa3", "E_n^{(-k)} = 2^{-k} B(n,k)", HoldsPrinted,
            vec![range(M, 0, 8), range(K, 0, 8)],
            |pt| {
                let (n, k) = (pt.m(), pt.k());
                one(euler_poly_order(n, -(k as i64)).coeff(0), two_pow(-(k as i64)) * bnk(n, k))
            }),
        // ---- the numbers y6 and their sums
        entry("y6G", "y6(m,n;lambda,p) = d^m/dt^m F_y6(t,n;lambda,p) at t=0", HoldsPrinted,
            vec![range(M, 0, 12), default(N), default(P), default(Lambda)],
            |pt| {
                let m = pt.m();
                let series = y6_egf(pt.n(), pt.lambda(), pt.p(), m as usize);
                one(series.coeff(m as usize), y6_at(pt, m))
            }),
        entry("y6bb", "y6(0,n;lambda,p) = pF(p-1)(-n,...,-n; 1,...,1; (-1)^p lambda) / n!", HoldsPrinted,
            vec![range(N, 0, 10), range(P, 1, 4), default(Lambda)],
            |pt| one(y6_hyper(pt.n(), pt.lambda(), pt.p())?, y6(0, pt.n(), pt.lambda(), pt.p()))),
        entry("y6_y1", "y6(m,n;lambda,1) = y1(m,n;lambda)", HoldsPrinted,
            vec![default(M), default(N), default(Lambda)],
            |pt| one(y6(pt.m(), pt.n(), pt.lambda(), 1), y1(pt.m(), pt.n(), pt.lambda()))),
        entry("y6_bnk", "B(m,n) = n! y6(m,n;1,1)", HoldsPrinted,
            vec![default(M), default(N)],
            |pt| one(bnk(pt.m(), pt.n()), fact(pt.n()) * y6(pt.m(), pt.n(), &int(1), 1))),
        entry("chu", "sum_k C(n,k)^2 = 2F1(-n,-n;1;1) = C(2n,n)", HoldsPrinted,
            vec![range(N, 0, 20)],
            |pt| {
                let n = pt.n();
                let sum = moment(0, 2, n);
                let hyper = pfq(rep(-(n as i64), 2), rep(1, 1), int(1))?;
                Ok(vec![pair(sum.clone(), hyper), pair(sum, c(2 * n, n))])
            }),
        entry("dixon", "sum_k (-1)^k C(2n,k)^3 = 3F2(-2n,-2n,-2n;1,1;1) = (-1)^n (3n)!/(n!)^3", HoldsPrinted,
            vec![range(N, 1, 6)],
            |pt| {
                let n = pt.n();
                let sum = franel(3, 0, 2 * n, &int(-1));
                let hyper = pfq(rep(-2 * n as i64, 3), rep(1, 2), int(1))?;
                let f = fact(n);
                let closed = sign(n as u64) * fact(3 * n) / (&f * &f * &f);
                Ok(vec![pair(sum, hyper.clone()), pair(hyper, closed)])
            }),
        entry("cusick_sym", "S_{n,m}^{(p)} = sum_k (-1)^k C(m,k) n^{m-k} S_{n,k}^{(p)}", HoldsPrinted,
            vec![default(M), default(N), default(P)],
            |pt| {
                let (m, n, p) = (pt.m(), pt.n(), pt.p());
                let rhs: Rational = (0..=m)
                    .map(|k| sign(k as u64) * c(m, k) * pow_u(n as u64, m - k) * moment(k, p, n))
                    .sum();
                one(moment(m, p, n), rhs)
            }),
        entry("cusick_diag", "S_{n,p}^{(p)} = n^p S_{n,0}^{(p)}", FailsBoth,
            vec![default(N), default(P)],
            |pt| {
                let (n, p) = (pt.n(), pt.p());
                one(moment(p, p, n), pow_u(n as u64, p) * moment(0, p, n))
            }),
        entry("franel3", "v_n = sum_k C(n,k)^3 = 3F2(-n,-n,-n;1,1;-1)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                one(franel(3, 0, n, &int(1)), pfq(rep(-(n as i64), 3), rep(1, 2), int(-1))?)
            }),
        entry("franel4", "u_n = sum_k C(n,k)^4 = 4F3(-n,-n,-n,-n;1,1,1;1)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                one(franel(4, 0, n, &int(1)), pfq(rep(-(n as i64), 4), rep(1, 3), int(1))?)
            }),
        entry("alt2", "n! y6(0,n;-1,2) = 0 (n odd), (-1)^{n/2} n!/((n/2)!)^2 (n even)", HoldsPrinted,
            vec![range(N, 0, 16)],
            |pt| {
                let n = pt.n();
                let rhs = if n % 2 == 1 {
                    Rational::zero()
                } else {
                    let h = fact(n / 2);
                    sign(n as u64 / 2) * fact(n) / (&h * &h)
                };
                one(franel(2, 0, n, &int(-1)), rhs)
            }),
        entry("AWolf", "n! y6(0,n;-1,2) = sqrt(pi) 2^n / (Gamma((2+n)/2) Gamma((1-n)/2))", HoldsPrinted,
            vec![range(N, 0, 16)],
            |pt| one(franel(2, 0, pt.n(), &int(-1)), alternating_square_gamma_form(pt.n())?)),
        entry("alt3", "n! y6(0,n;-1,3) = 0 (n odd), (-1)^{n/2} (3n/2)!/((n/2)!)^3 (n even)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                let rhs = if n % 2 == 1 {
                    Rational::zero()
                } else {
                    let h = fact(n / 2);
                    sign(n as u64 / 2) * fact(3 * n / 2) / (&h * &h * &h)
                };
                one(franel(3, 0, n, &int(-1)), rhs)
            }),
        entry("CN", "y6(0,n;1,2) = (n+1) C_n / n! = (-1)^n C_n / D_n", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                let y = y6(0, n, &int(1), 2);
                let cat = classic_sequence(FamilyTag::Catalan, n);
                let daehee = classic_sequence(FamilyTag::Daehee, n);
                Ok(vec![
                    pair(y.clone(), q(n + 1) * &cat / fact(n)),
                    pair(y, sign(n as u64) * cat / daehee),
                ])
            }),
        entry("catalan_theorem", "C_n = (-1)^n y6(0,n;1,2) sum_k B_k s(n,k)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                let s: Rational = (0..=n).map(|k| bernoulli(k) * stirling1(n, k)).sum();
                one(classic_sequence(FamilyTag::Catalan, n), sign(n as u64) * y6(0, n, &int(1), 2) * s)
            }),
        entry("legendre_P0", "P_n(0) = (-1)^n n!/2^n y6(0,n;-1,2) = Ch_n y6(0,n;-1,2)", HoldsPrinted,
            vec![range(N, 0, 10)],
            |pt| {
                let n = pt.n();
                let p0 = legendre(n).eval(&int(0));
                let y = y6(0, n, &int(-1), 2);
                Ok(vec![
                    pair(p0.clone(), sign(n as u64) * fact(n) / pow_u(2, n) * &y),
                    pair(p0, classic_sequence(FamilyTag::Changhee, n) * y),
                ])
            }),
        entry("legendre_P2", "P_n(2) = n!/2^n y6(0,n;3,2) = -Y_n(-1) y6(0,n;3,2)", HoldsPrinted,
            vec![range(N, 0, 10)],
            |pt| {
                let n = pt.n();
                let p2 = legendre(n).eval(&int(2));
                let y = y6(0, n, &int(3), 2);
                Ok(vec![
                    pair(p2.clone(), fact(n) / pow_u(2, n) * &y),
                    pair(p2, -y_seq(n, &int(-1))? * y),
                ])
            }),
        entry("changhee_theorem", "P_n(0) = y6(0,n;-1,2) sum_k s(n,k) E_k", HoldsPrinted,
            vec![range(N, 0, 10)],
            |pt| {
                let n = pt.n();
                let s: Rational = (0..=n).map(|k| stirling1(n, k) * euler_at_zero(k)).sum();
                one(legendre(n).eval(&int(0)), y6(0, n, &int(-1), 2) * s)
            }),
        // ---- the polynomials P(x;m,n;lambda,p)
        entry("Yp1Yp2_bridge", "sum_k C(m,k) x^{m-k} y6(k,n;lambda,p) = sum_j C(n,j)^p lambda^j (x+j)^m", HoldsCorrectedOnly,
            full_grid(),
            |pt| one(p_at(pt, pt.m()), raw_sum_poly(pt.m(), pt.n(), pt.lambda(), pt.p())))
            .corrected(|pt| one(raw_sum_poly(pt.m(), pt.n(), pt.lambda(), pt.p()), p_at(pt, pt.m()).scale(&fact(pt.n())))),
        entry("py6a", "d^k/dx^k P(x;m,n;lambda,p) = (n)^{(k)} P(x;m-k,n;lambda,p), falling factorial", HoldsCorrectedOnly,
            vec![range(M, 1, 8), range(K, 1, 8), default(N), range(P, 0, 2), default(Lambda)],
            |pt| {
                let (m, k) = (pt.m(), pt.k());
                one(nth_derivative(&p_at(pt, m), k), p_at(pt, m - k).scale(&falling_factorial(&q(pt.n()), k)))
            })
            .corrected(|pt| {
                let (m, k) = (pt.m(), pt.k());
                one(nth_derivative(&p_at(pt, m), k), p_at(pt, m - k).scale(&falling_factorial(&q(m), k)))
            })
            .skip(|pt| (pt.k() > pt.m()).then_some("k_exceeds_m")),
        entry("py6ab", "P(x;m+1,n;lambda,p) - x P(x;m,n;lambda,p) = sum_j C(m,j) x^{m-j} y6(j+1,n;lambda,p)", HoldsPrinted,
            full_grid(),
            |pt| {
                let m = pt.m();
                let lhs = &p_at(pt, m + 1) - &(&Poly::x() * &p_at(pt, m));
                let rhs: Poly = (0..=m)
                    .map(|j| Poly::monomial(c(m, j) * y6_at(pt, j + 1), (m - j) as usize))
                    .sum();
                one(lhs, rhs)
            }),
        entry("inP1", "int_0^1 P(x;m,n;lambda,p) dx = sum_k C(m,k) y6(k,n;lambda,p)/(m-k+1)", HoldsPrinted,
            full_grid(),
            |pt| one(poly_integral01(&p_at(pt, pt.m())), integral_sum(pt))),
        entry("inP2", "int_0^1 P(x;m,n;lambda,p) dx = sum_j C(n,j)^p lambda^j ((1+j)^m - j^m)/(m+1)", HoldsCorrectedOnly,
            full_grid(),
            |pt| one(poly_integral01(&p_at(pt, pt.m())), printed_integral_rhs(pt)))
            .corrected(|pt| one(poly_integral01(&p_at(pt, pt.m())), corrected_integral_rhs(pt))),
        entry("inP8", "sum_k C(m,k) y6(k,n;lambda,p)/(m-k+1) = sum_j C(n,j)^p lambda^j ((1+j)^m - j^m)/(m+1)", HoldsCorrectedOnly,
            full_grid(),
            |pt| one(integral_sum(pt), printed_integral_rhs(pt)))
            .corrected(|pt| one(integral_sum(pt), corrected_integral_rhs(pt))),
        entry("inP8a", "sum_k C(m,k) (m+1)/(m-k+1) y6(k,n;lambda,p) = sum_j C(n,j)^p lambda^j sum_{l<m} C(m,l) j^l", HoldsCorrectedOnly,
            full_grid(),
            |pt| {
                let m = pt.m();
                let rhs = weighted(pt, |j| (0..m).map(|l| c(m, l) * pow_u(j as u64, l)).sum());
                one(q(m + 1) * integral_sum(pt), rhs)
            })
            .corrected(|pt| {
                let m = pt.m();
                let rhs = weighted(pt, |j| (0..=m).map(|l| c(m + 1, l) * pow_u(j as u64, l)).sum());
                one(q(m + 1) * integral_sum(pt), rhs / fact(pt.n()))
            }),
        entry("P1_corollary", "P(1;m,n;lambda,p) = (m+1)/n! sum_k C(m,k) y6(k,n;lambda,p)/(m-k+1) + y6(m,n;lambda,p)", HoldsCorrectedOnly,
            full_grid(),
            |pt| {
                let m = pt.m();
                let rhs = q(m + 1) / fact(pt.n()) * integral_sum(pt) + y6_at(pt, m);
                one(p_at(pt, m).eval(&int(1)), rhs)
            })
            .corrected(|pt| {
                let m = pt.m();
                let rhs = q(m + 1) * integral_sum(pt) + y6_at(pt, m + 1);
                one(p_at(pt, m + 1).eval(&int(1)), rhs)
            }),
        entry("inP3_4", "sum_k C(m,k) y6(k,n;lambda,p) B_{m-k} = sum_j C(n,j)^p lambda^j B_m(j)", HoldsCorrectedOnly,
            full_grid(),
            |pt| {
                let s = volkenborn_sum(pt);
                Ok(vec![pair(volkenborn(&p_at(pt, pt.m())), s.clone()), pair(s, bernoulli_values(pt))])
            })
            .corrected(|pt| {
                let s = volkenborn_sum(pt);
                Ok(vec![pair(volkenborn(&p_at(pt, pt.m())), s.clone()), pair(s, bernoulli_values(pt) / fact(pt.n()))])
            }),
        entry("inP5_6", "sum_k C(m,k) y6(k,n;lambda,p) E_{m-k} = sum_j C(n,j)^p lambda^j E_m(j)", HoldsCorrectedOnly,
            full_grid(),
            |pt| {
                let s = fermionic_sum(pt);
                Ok(vec![pair(fermionic(&p_at(pt, pt.m())), s.clone()), pair(s, euler_values(pt))])
            })
            .corrected(|pt| {
                let s = fermionic_sum(pt);
                Ok(vec![pair(fermionic(&p_at(pt, pt.m())), s.clone()), pair(s, euler_values(pt) / fact(pt.n()))])
            }),
        // ---- power sums, Mirimanoff and Frobenius-Euler
        entry("mirimanoff_frobenius", "lambda^{1-n} sum_{j<n} lambda^j (x+j)^m = (H_m(x+n;1/lambda) - lambda^{-n} H_m(x+n;1/lambda)) / (1 - 1/lambda)", HoldsCorrectedOnly,
            vec![default(M), range(N, 1, 8), default(Lambda)],
            |pt| {
                let (lhs, h, lambda, n) = mirimanoff_parts(pt)?;
                let factor = (Rational::one() - powi(&lambda, -(n as i64))) / (Rational::one() - lambda.recip());
                one(lhs, h.shift(&q(n)).scale(&factor))
            })
            .corrected(|pt| {
                let (lhs, h, lambda, n) = mirimanoff_parts(pt)?;
                let denom = (Rational::one() - lambda.recip()).recip();
                let rhs = &h.shift(&q(n)) - &h.scale(&powi(&lambda, -(n as i64)));
                one(lhs, rhs.scale(&denom))
            })
            .skip(skip_lambda_one),
        entry("apostol_powersum", "sum_{j<n} lambda^j j^{m-1} = (lambda^m B_m(n;lambda) - B_m(lambda)) / m", HoldsCorrectedOnly,
            vec![range(M, 1, 8), range(N, 1, 8), default(Lambda)],
            |pt| apostol_powersum(pt, pt.m()))
            .corrected(|pt| apostol_powersum(pt, pt.n()))
            .skip(skip_lambda_one),
        entry("faulhaber", "sum_{j<n} j^{m-1} = (B_m(n) - B_m) / m", HoldsPrinted,
            vec![range(M, 1, 8), range(N, 1, 8)],
            |pt| {
                let (m, n) = (pt.m(), pt.n());
                let lhs: Rational = (0..n).map(|j| pow_u(j as u64, m - 1)).sum();
                let b = bernoulli_poly_order(m, 1);
                one(lhs, (b.eval(&q(n)) - b.coeff(0)) / q(m))
            }),
        entry("alt_euler_sum", "sum_{j<n} (-1)^j j^{m-1} = ((-1)^{n-1} E_m(n) - E_m) / 2", HoldsCorrectedOnly,
            vec![range(M, 1, 8), range(N, 1, 8)],
            |pt| {
                let (m, n) = (pt.m(), pt.n());
                let e = euler_poly_order(m, 1);
                one(alternating_power_sum(m, n), (sign(n as u64 - 1) * e.eval(&q(n)) - e.coeff(0)) / int(2))
            })
            .corrected(|pt| {
                let (m, n) = (pt.m(), pt.n());
                let e = euler_poly_order(m - 1, 1);
                one(alternating_power_sum(m, n), (sign(n as u64 - 1) * e.eval(&q(n)) + e.coeff(0)) / int(2))
            }),
        // ---- the functional-equation theorems
        entry("sec6_stirling", "y6(m,n;lambda,p) = sum_k sum_{l<=k} C(n,k)^{p-1} S(m,l) lambda^k / ((n-k)! (k-l)!)", HoldsPrinted,
            full_grid(),
            |pt| one(y6_at(pt, pt.m()), stirling_form(pt))),
        entry("sec6_bernoulli", "y6(m,n;lambda,p) = sum_k sum_v C(n,k)^p C(m+n,v) lambda^k S(v,n) B^{(n)}_{m+n-v}(j) / (C(m+n,n) n!)", HoldsCorrectedOnly,
            vec![range(M, 0, 5), range(N, 0, 5), range(P, 0, 2), default(Lambda)],
            |pt| one(Poly::constant(y6_at(pt, pt.m())), free_variable_form(pt, bernoulli_kernel(pt.m(), pt.n()))))
            .corrected(|pt| one(y6_at(pt, pt.m()), bound_variable_form(pt, bernoulli_kernel(pt.m(), pt.n())))),
        entry("sec6_euler", "y6(m,n;lambda,p) = sum_k sum_{v<=m} C(n,k)^p C(m,v) lambda^k B(v,n) E^{(n)}_{m-v}(j) / (n! 2^n)", HoldsCorrectedOnly,
            vec![range(M, 0, 5), range(N, 0, 5), range(P, 0, 2), default(Lambda)],
            |pt| one(Poly::constant(y6_at(pt, pt.m())), free_variable_form(pt, euler_kernel(pt.m(), pt.n()))))
            .corrected(|pt| one(y6_at(pt, pt.m()), bound_variable_form(pt, euler_kernel(pt.m(), pt.n())))),
        // ---- R_n(x;p), the Vowe polynomials and the Euler operator
        entry("yp3_euler_operator", "y6(m,n;lambda,p) = alpha_m(lambda;n,p), alpha_m = (x d/dx)^m R_n(x;p)", HoldsPrinted,
            vec![range(M, 1, 6), default(N), range(P, 0, 3), default(Lambda)],
            |pt| one(euler_operator(&r_poly(pt.n(), pt.p()), pt.m()).eval(pt.lambda()), y6_at(pt, pt.m()))),
        entry("vowe_recurrence", "(n+1) M_{n+1}(x) = (2n+1)(1+x) M_n(x) - n (1-x)^2 M_{n-1}(x)", HoldsPrinted,
            vec![range(N, 1, 10)],
            |pt| {
                let n = pt.n();
                let one_plus = Poly::linear(int(1));
                let one_minus = Poly::from_ints(&[1, -1]);
                let rhs = &(&one_plus * &vowe(n)).scale(&frac(2 * n as i64 + 1, n as i64 + 1))
                    - &(&one_minus.pow(2) * &vowe(n - 1)).scale(&frac(n as i64, n as i64 + 1));
                one(vowe(n + 1), rhs)
            }),
        entry("vowe_legendre", "M_n(x) = (1-x)^n P_n((1+x)/(1-x))", HoldsPrinted,
            vec![range(N, 0, 10)],
            |pt| {
                let n = pt.n();
                let a = legendre(n);
                let one_plus = Poly::linear(int(1));
                let one_minus = Poly::from_ints(&[1, -1]);
                let rhs: Poly = (0..=n)
                    .map(|k| (&one_plus.pow(k) * &one_minus.pow(n - k)).scale(&a.coeff(k as usize)))
                    .sum();
                one(vowe(n), rhs)
            }),
        // ---- ordinary generating functions sum_n y6(0,n;lambda,p) t^n
        entry("ogf_00", "f(t;lambda;0,0) = (lambda e^{lambda t} - e^t) / (lambda - 1)", HoldsPrinted,
            vec![range(N, 0, 12), default(Lambda)],
            |pt| ogf_check(pt, OgfCase::LamP0(pt.lambda().clone())))
            .skip(skip_lambda_one),
        entry("ogf_01", "f(t;lambda;1,0) = e^{(lambda+1) t}", HoldsPrinted,
            vec![range(N, 0, 12), default(Lambda)],
            |pt| ogf_check(pt, OgfCase::LamP1(pt.lambda().clone()))),
        entry("ogf_12", "f(t;1;2,0) = sum C(2n,n) t^n/n! = sum (n+1) C_n t^n/n! = sum (2n)! t^n/(n!)^3 = 1F1(1/2;1;4t)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                let y = y6(0, n, &int(1), 2);
                let mut out = vec![pair(y.clone(), ogf_series(&OgfCase::OneP2, n as usize)?[n as usize].clone())];
                for (_, coeffs) in one_p2_forms(n as usize)? {
                    out.push(pair(y.clone(), coeffs[n as usize].clone()));
                }
                Ok(out)
            }),
        entry("ogf_m12", "f(t;-1;2,0) = sum sqrt(pi) 2^n t^n / (Gamma((2+n)/2) Gamma((1-n)/2) n!)", HoldsPrinted,
            vec![range(N, 0, 12)],
            |pt| {
                let n = pt.n();
                one(y6(0, n, &int(-1), 2), ogf_series(&OgfCase::Minus1P2, n as usize)?[n as usize].clone())
            }),
        entry("factorial_bridge", "(2n)! = 2^{2n} n! (1/2)_n = 4^n Gamma((1+2n)/2) n! / sqrt(pi)", HoldsPrinted,
            vec![range(N, 0, 20)],
            |pt| {
                let n = pt.n();
                let lhs = fact(2 * n);
                let poch = pow_u(4, n) * fact(n) * pochhammer(&frac(1, 2), n);
                let g = gamma_half(&frac(2 * n as i64 + 1, 2))?;
                let (r, e) = g.finite().expect("positive argument");
                let gamma = if e == 1 { pow_u(4, n) * r * fact(n) } else { Rational::zero() };
                Ok(vec![pair(lhs.clone(), poch), pair(lhs, gamma)])
            }),
    ];
    entries.into_iter().map(|b| b.0).collect()
}

fn mirimanoff_parts(pt: &Point) -> binomial_sums::Result<(Poly, Poly, Rational, u32)> {
    let (m, n, lambda) = (pt.m(), pt.n(), pt.lambda().clone());
    let lhs: Poly = (0..n)
        .map(|j| {
            Poly::linear(q(j))
                .pow(m)
                .scale(&powi(&lambda, j as i64 + 1 - n as i64))
        })
        .sum();
    let h = frobenius_euler(m, &lambda.recip())?;
    Ok((lhs, h, lambda, n))
}

fn apostol_powersum(pt: &Point, exponent: u32) -> Out {
    let (m, n, lambda) = (pt.m(), pt.n(), pt.lambda());
    let lhs: Rational = (0..n).map(|j| pow(lambda, j) * pow_u(j as u64, m - 1)).sum();
    let b = apostol_bernoulli(m, lambda)?;
    one(lhs, (pow(lambda, exponent) * b.eval(&q(n)) - b.coeff(0)) / q(m))
}

fn alternating_power_sum(m: u32, n: u32) -> Rational {
    (0..n).map(|j| sign(j as u64) * pow_u(j as u64, m - 1)).sum()
}

fn ogf_check(pt: &Point, case: OgfCase) -> Out {
    let n = pt.n();
    let coeffs = ogf_series(&case, n as usize)?;
    one(y6(0, n, &case.lambda(), case.p()), coeffs[n as usize].clone())
}
