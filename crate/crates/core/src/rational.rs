//! The exact scalar type and the integer-indexed products built on it
//! (factorials, binomials for rational upper argument, rising and falling
//! factorials).
//!
//! [`Rational`] is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator, and no operation ever rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// `base^exp` for a signed exponent. Panics on `0^negative`.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow(base, exp as u32)
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        pow(&base.recip(), exp.unsigned_abs() as u32)
    }
}

/// `u^exp` for a natural base, with `0^0 = 1`.
pub fn pow_u(base: u64, exp: u32) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}

/// `(-1)^k`
pub fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Integer binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// `z(z-1)...(z-v+1) / v!`, equal to 1 when `v = 0`.
pub fn binomial_general(z: &Rational, v: u32) -> Rational {
    falling_factorial(z, v) / factorial(v as u64)
}

/// Rising factorial `x(x+1)...(x+v-1)`; 1 when `v = 0`.
pub fn pochhammer(x: &Rational, v: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..v {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Falling factorial `x(x-1)...(x-v+1)`; 1 when `v = 0`.
pub fn falling_factorial(x: &Rational, v: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..v {
        acc *= &t;
        t -= Rational::one();
    }
    acc
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Returns `Some(k)` when `q` is the integer `-k` with `k >= 0`.
pub fn as_nonpositive_integer(q: &Rational) -> Option<u64> {
    if !is_integer(q) || q.is_positive() {
        return None;
    }
    let k: BigInt = -q.numer();
    u64::try_from(k).ok()
}

/// Parses an exact fraction such as `3`, `-1/2` or `−1/2` (Unicode minus).
/// Decimal notation is rejected.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = |reason| Error::Parse {
        input: input.to_string(),
        reason,
    };
    let s = input.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(err("empty"));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(err("decimals are not accepted; write a fraction like 1/2"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}
