//! Truncated exponential generating functions.
//!
//! An [`EgfSeries`] of order `N` holds `c_0..=c_N` and stands for
//! `sum c_n t^n / n!` modulo `t^(N+1)`. Products use the binomial
//! convolution, so every generating function in the crate composes with the
//! same rule.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Rational>,
}

impl EgfSeries {
    /// Builds a series from its EGF coefficients. The order is `coeffs.len() - 1`.
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        EgfSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `e^(a t)`: coefficients `a^n`.
    pub fn exp(a: &Rational, order: usize) -> Self {
        Self::new((0..=order as u32).map(|n| pow(a, n)).collect())
    }

    /// `log(1 + t)`: coefficients `(-1)^(n-1) (n-1)!` for `n >= 1`.
    pub fn log1p(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            let f = factorial(n as u64 - 1);
            *c = if n % 2 == 1 { f } else { -f };
        }
        Self::new(coeffs)
    }

    /// Converts ordinary power-series coefficients `a_n` (of `t^n`) into EGF form `n! a_n`.
    pub fn from_ordinary(ordinary: &[Rational]) -> Self {
        Self::new(
            ordinary
                .iter()
                .enumerate()
                .map(|(n, a)| a * factorial(n as u64))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `c_n`, or zero past the truncation order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ordinary coefficients `c_n / n!`.
    pub fn to_ordinary(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / factorial(n as u64))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new((0..=order).map(|n| self.coeff(n)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Multiplication by `t`; the top coefficient falls off.
    pub fn mul_t(&self) -> Self {
        let n = self.order();
        let shifted = (1..=n).map(|k| &self.coeffs[k - 1] * int(k as i64));
        Self::new(std::iter::once(Rational::zero()).chain(shifted).collect())
    }

    /// Division by `t`, lowering the order by one. Requires `c_0 = 0`.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "division by t needs a zero constant term".into(),
            ));
        }
        if self.order() == 0 {
            return Err(Error::InvalidArgument(
                "division by t of an order-0 series".into(),
            ));
        }
        Ok(Self::new(
            (1..=self.order())
                .map(|k| &self.coeffs[k] / int(k as i64))
                .collect(),
        ))
    }

    /// `self^k` for any integer `k`; negative powers go through the reciprocal.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { egf_reciprocal(self)? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..k.unsigned_abs() {
            acc = egf_product(&acc, &base)?;
        }
        Ok(acc)
    }

    /// The polynomial coefficient of `t^n / n!` in `self(t) * e^(x t)`, that is
    /// `sum_j C(n, j) c_j x^(n-j)`. This is the Appell sequence attached to the
    /// series. Requires `n <= order`.
    pub fn appell_poly(&self, n: usize) -> Poly {
        assert!(n <= self.order(), "coefficient {n} beyond order {}", self.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for j in 0..=n {
            coeffs[n - j] = binomial(n as u64, j as u64) * &self.coeffs[j];
        }
        Poly::new(coeffs)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

/// Binomial convolution: entry `n` is `sum_k C(n,k) a_k b_(n-k)`.
pub fn egf_product(a: &EgfSeries, b: &EgfSeries) -> Result<EgfSeries> {
    a.check_order(b)?;
    let order = a.order();
    let mut out = vec![Rational::zero(); order + 1];
    for (n, slot) in out.iter_mut().enumerate() {
        let mut acc = Rational::zero();
        for k in 0..=n {
            let ak = &a.coeffs[k];
            let bk = &b.coeffs[n - k];
            if ak.is_zero() || bk.is_zero() {
                continue;
            }
            acc += binomial(n as u64, k as u64) * ak * bk;
        }
        *slot = acc;
    }
    Ok(EgfSeries::new(out))
}

/// The series `r` with `a * r = 1 + O(t^(N+1))`. Fails when `a_0 = 0`.
pub fn egf_reciprocal(a: &EgfSeries) -> Result<EgfSeries> {
    let a0 = &a.coeffs[0];
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = a0.recip();
    let order = a.order();
    let mut r: Vec<Rational> = Vec::with_capacity(order + 1);
    r.push(inv0.clone());
    for n in 1..=order {
        let mut acc = Rational::zero();
        for k in 1..=n {
            if a.coeffs[k].is_zero() {
                continue;
            }
            acc += binomial(n as u64, k as u64) * &a.coeffs[k] * &r[n - k];
        }
        r.push(-acc * &inv0);
    }
    Ok(EgfSeries::new(r))
}
