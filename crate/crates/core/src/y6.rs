//! The numbers `y6(m, n; lambda, p) = (1/n!) sum_k C(n,k)^p k^m lambda^k`,
//! the Golombek sums `B(d, k)`, and the structures built on `B(d, k)`:
//! the polynomial `T_d(k)` and the ordinary generating function `f_d(x)`.

use num_traits::{One, Zero};

use crate::classic::{stirling1, stirling2};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, pow, pow_u, Rational};
use crate::series::EgfSeries;

static Y6: Memo<Y6Key, Rational> = Memo::new();

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Y6Key {
    pub m: u32,
    pub n: u32,
    pub lambda: Rational,
    pub p: u32,
}

/// `(1/n!) sum_{k=0}^{n} C(n,k)^p k^m lambda^k`, with `0^0 = 1`. Memoized.
pub fn y6(m: u32, n: u32, lambda: &Rational, p: u32) -> Rational {
    let key = Y6Key {
        m,
        n,
        lambda: lambda.clone(),
        p,
    };
    Y6.get_or_compute(key, || y6_sum(m, n, lambda, p))
}

fn y6_sum(m: u32, n: u32, lambda: &Rational, p: u32) -> Rational {
    let s: Rational = (0..=n)
        .map(|k| {
            pow(&binomial(n as u64, k as u64), p) * pow_u(k as u64, m) * pow(lambda, k)
        })
        .sum();
    s / factorial(n as u64)
}

/// The generating function `(1/n!) sum_k C(n,k)^p lambda^k e^(kt)`, truncated
/// at `order`. Its `m`-th EGF coefficient (the `m`-th derivative at `t = 0`)
/// is `y6(m, n; lambda, p)`.
pub fn y6_egf(n: u32, lambda: &Rational, p: u32, order: usize) -> EgfSeries {
    let mut acc = EgfSeries::constant(Rational::zero(), order);
    for k in 0..=n {
        let w = pow(&binomial(n as u64, k as u64), p) * pow(lambda, k);
        if w.is_zero() {
            continue;
        }
        acc = acc
            .add(&EgfSeries::exp(&int(k as i64), order).scale(&w))
            .expect("same order");
    }
    acc.scale(&factorial(n as u64).recip())
}

/// Golombek's sum `B(d, k) = sum_{j=0}^{k} C(k,j) j^d`, the `d`-th derivative of
/// `(e^t + 1)^k` at 0. The sum starts at `j = 0`, so `B(0, k) = 2^k`.
pub fn bnk(d: u32, k: u32) -> Rational {
    (0..=k)
        .map(|j| binomial(k as u64, j as u64) * pow_u(j as u64, d))
        .sum()
}

/// `T_d(k)`, the polynomial in `k` with `B(d, k) = 2^(k-d) T_d(k)`. Its
/// coefficient of `k^l` is `sum_{j=l}^{d} s(j,l) S(d,j) 2^(d-j)`.
pub fn t_poly(d: u32) -> Result<Poly> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "T_d(k) is defined for d >= 1; use bnk(0, k) = 2^k".into(),
        ));
    }
    let coeffs = (0..=d)
        .map(|l| {
            (l..=d)
                .map(|j| stirling1(j, l) * stirling2(d, j) * pow_u(2, d - j))
                .sum()
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// A quotient of polynomials, kept unreduced.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalFunction {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(x);
        (!d.is_zero()).then(|| self.numerator.eval(x) / d)
    }

    /// Maclaurin coefficients `a_0..=a_order`. Needs `denominator(0) != 0`.
    pub fn maclaurin(&self, order: usize) -> Result<Vec<Rational>> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(Error::InvalidArgument(
                "denominator vanishes at 0; no Maclaurin expansion".into(),
            ));
        }
        let mut a: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.numerator.coeff(n);
            for k in 1..=n {
                acc -= self.denominator.coeff(k) * &a[n - k];
            }
            a.push(acc / &d0);
        }
        Ok(a)
    }
}

/// Equality as functions: `a/b == c/d` iff `a d == c b`.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

/// `f_d(x) = sum_k B(d,k) x^k` in closed form:
/// `sum_{j=1}^{d} j! S(d,j) x^j / (1-2x)^(j+1)` over the common denominator
/// `(1-2x)^(d+1)`, and `1/(1-2x)` for `d = 0`.
pub fn b_ogf(d: u32) -> RationalFunction {
    let one_minus_2x = Poly::from_ints(&[1, -2]);
    if d == 0 {
        return RationalFunction {
            numerator: Poly::one(),
            denominator: one_minus_2x,
        };
    }
    let numerator: Poly = (1..=d)
        .map(|j| {
            let c = factorial(j as u64) * stirling2(d, j);
            &Poly::monomial(c, j as usize) * &one_minus_2x.pow(d - j)
        })
        .sum();
    RationalFunction {
        numerator,
        denominator: one_minus_2x.pow(d + 1),
    }
}

/// Moll's moment sum `M_{m,p}(n) = sum_k C(n,k)^p k^m = n! y6(m, n; 1, p)`.
pub fn moment(m: u32, p: u32, n: u32) -> Rational {
    factorial(n as u64) * y6(m, n, &Rational::one(), p)
}

/// Generalized Franel numbers `F_p(m, n; lambda) = n! y6(m, n; lambda, p)`.
pub fn franel(p: u32, m: u32, n: u32, lambda: &Rational) -> Rational {
    factorial(n as u64) * y6(m, n, lambda, p)
}
