//! Terminating generalized hypergeometric series and the closed forms of the
//! ordinary generating functions `f(t) = sum_n y6(0, n; lambda, p) t^n` that
//! are known for small `p`.

use num_traits::{One, Zero};

use crate::classic::{classic_sequence, FamilyTag};
use crate::error::{Error, Result};
use crate::gamma::{gamma_half, sqrt_pi_quotient};
use crate::rational::{as_nonpositive_integer, binomial, factorial, frac, int, pochhammer, pow_u, Rational};
use crate::series::EgfSeries;

/// `pFq(upper; lower; argument)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfqSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl PfqSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        PfqSpec {
            upper,
            lower,
            argument,
        }
    }

    /// Index of the last nonzero term: the smallest `-alpha` over upper
    /// parameters in `{0, -1, -2, ...}`.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.iter().filter_map(as_nonpositive_integer).min()
    }
}

/// Exact value of a terminating `pFq`:
/// `sum_{m=0}^{M} prod (alpha_j)_m / prod (beta_j)_m * z^m / m!`.
///
/// A lower parameter equal to `-b` (`b >= 0`) is accepted only when the
/// series stops at `M <= b`, before `(beta)_m` vanishes.
pub fn pfq_terminating(spec: &PfqSpec) -> Result<Rational> {
    let last = spec.termination_index().ok_or(Error::NonTerminating)?;
    for beta in &spec.lower {
        if let Some(b) = as_nonpositive_integer(beta) {
            if last > b {
                return Err(Error::InvalidLowerParameter {
                    value: beta.clone(),
                    pole: b + 1,
                    terminates_at: last,
                });
            }
        }
    }
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for m in 0..=last {
        if m > 0 {
            let k = int(m as i64 - 1);
            for a in &spec.upper {
                term *= a + &k;
            }
            for b in &spec.lower {
                term /= b + &k;
            }
            term *= &spec.argument;
            term /= int(m as i64);
        }
        sum += &term;
    }
    Ok(sum)
}

/// `y6(0, n; lambda, p) = (1/n!) pF(p-1)(-n, ..., -n; 1, ..., 1; (-1)^p lambda)`.
pub fn y6_hyper(n: u32, lambda: &Rational, p: u32) -> Result<Rational> {
    if p == 0 {
        return Err(Error::InvalidArgument(
            "the hypergeometric form needs p >= 1".into(),
        ));
    }
    let z = if p.is_multiple_of(2) { lambda.clone() } else { -lambda.clone() };
    let spec = PfqSpec::new(
        vec![int(-(n as i64)); p as usize],
        vec![int(1); p as usize - 1],
        z,
    );
    Ok(pfq_terminating(&spec)? / factorial(n as u64))
}

/// The four parameter choices for which `f(t) = sum_n y6(0, n; lambda, p) t^n`
/// has a closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OgfCase {
    /// `p = 0`: `(lambda e^(lambda t) - e^t) / (lambda - 1)`, `lambda != 1`.
    LamP0(Rational),
    /// `p = 1`: `e^((lambda + 1) t)`.
    LamP1(Rational),
    /// `lambda = 1, p = 2`: `1F1(1/2; 1; 4t)`.
    OneP2,
    /// `lambda = -1, p = 2`: coefficients `sqrt(pi) 2^n / (Gamma((2+n)/2) Gamma((1-n)/2) n!)`.
    Minus1P2,
}

impl OgfCase {
    pub fn lambda(&self) -> Rational {
        match self {
            OgfCase::LamP0(l) | OgfCase::LamP1(l) => l.clone(),
            OgfCase::OneP2 => int(1),
            OgfCase::Minus1P2 => int(-1),
        }
    }

    pub fn p(&self) -> u32 {
        match self {
            OgfCase::LamP0(_) => 0,
            OgfCase::LamP1(_) => 1,
            OgfCase::OneP2 | OgfCase::Minus1P2 => 2,
        }
    }
}

/// Coefficients of `t^0..=t^order` (ordinary normalization) of the closed form.
pub fn ogf_series(case: &OgfCase, order: usize) -> Result<Vec<Rational>> {
    match case {
        OgfCase::LamP0(lambda) => {
            if lambda.is_one() {
                return Err(Error::SingularParameter {
                    family: "f(t; lambda; 0, 0)",
                    parameter: "lambda",
                    value: lambda.clone(),
                    hint: "",
                });
            }
            let s = EgfSeries::exp(lambda, order)
                .scale(lambda)
                .sub(&EgfSeries::exp(&int(1), order))?
                .scale(&(lambda - Rational::one()).recip());
            Ok(s.to_ordinary())
        }
        OgfCase::LamP1(lambda) => {
            Ok(EgfSeries::exp(&(lambda + Rational::one()), order).to_ordinary())
        }
        OgfCase::OneP2 => Ok((0..=order as u32).map(one_f_one_coefficient).collect()),
        OgfCase::Minus1P2 => (0..=order as u32)
            .map(|n| Ok(alternating_square_gamma_form(n)? / factorial(n as u64)))
            .collect(),
    }
}

/// `4^n (1/2)_n / (n!)^2`, the `t^n` coefficient of `1F1(1/2; 1; 4t)`.
fn one_f_one_coefficient(n: u32) -> Rational {
    let f = factorial(n as u64);
    pow_u(4, n) * pochhammer(&frac(1, 2), n) / (&f * &f)
}

/// `sqrt(pi) 2^n / (Gamma((2+n)/2) Gamma((1-n)/2))` with `1/Gamma(pole) = 0`.
pub fn alternating_square_gamma_form(n: u32) -> Result<Rational> {
    let a = gamma_half(&frac(2 + n as i64, 2))?;
    let b = gamma_half(&frac(1 - n as i64, 2))?;
    sqrt_pi_quotient(&pow_u(2, n), 1, &[a, b])
}

/// Every closed form known for `f(t; 1; 2, 0)`, each as its coefficient list
/// up to `t^order`. All lists are equal.
pub fn one_p2_forms(order: usize) -> Result<Vec<(&'static str, Vec<Rational>)>> {
    let ns = 0..=order as u32;
    let central: Vec<Rational> = ns
        .clone()
        .map(|n| binomial(2 * n as u64, n as u64) / factorial(n as u64))
        .collect();
    let catalan: Vec<Rational> = ns
        .clone()
        .map(|n| {
            int(n as i64 + 1) * classic_sequence(FamilyTag::Catalan, n) / factorial(n as u64)
        })
        .collect();
    let factorials: Vec<Rational> = ns
        .clone()
        .map(|n| {
            let f = factorial(n as u64);
            factorial(2 * n as u64) / (&f * &f * &f)
        })
        .collect();
    let one_f_one: Vec<Rational> = ns.clone().map(one_f_one_coefficient).collect();
    let gamma: Vec<Rational> = ns
        .map(|n| {
            // 4^n Gamma(n + 1/2) / (sqrt(pi) Gamma(n + 1) n!)
            let num = gamma_half(&frac(2 * n as i64 + 1, 2))?;
            let (r, e) = num.finite().expect("positive argument");
            let den = gamma_half(&int(n as i64 + 1))?;
            // the explicit 1/sqrt(pi) cancels the sqrt(pi) carried by Gamma(n + 1/2)
            let q = sqrt_pi_quotient(&(pow_u(4, n) * r), e - 1, &[den])?;
            Ok(q / factorial(n as u64))
        })
        .collect::<Result<_>>()?;
    Ok(vec![
        ("central_binomial", central),
        ("catalan", catalan),
        ("factorial", factorials),
        ("hypergeometric_1f1", one_f_one),
        ("gamma", gamma),
    ])
}
