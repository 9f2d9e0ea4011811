//! The gamma function on integers and half-integers, where its values are
//! `rational` or `rational * sqrt(pi)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, pow_u, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaHalfValue {
    /// `rational_part * sqrt(pi)^sqrt_pi_exponent`, exponent 0 or 1.
    Finite {
        rational_part: Rational,
        sqrt_pi_exponent: u8,
    },
    /// Non-positive integer argument.
    Pole,
}

impl GammaHalfValue {
    pub fn is_pole(&self) -> bool {
        matches!(self, GammaHalfValue::Pole)
    }

    /// `(rational_part, sqrt_pi_exponent)`, `None` at a pole.
    pub fn finite(&self) -> Option<(&Rational, u8)> {
        match self {
            GammaHalfValue::Finite {
                rational_part,
                sqrt_pi_exponent,
            } => Some((rational_part, *sqrt_pi_exponent)),
            GammaHalfValue::Pole => None,
        }
    }
}

impl fmt::Display for GammaHalfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaHalfValue::Pole => f.write_str("pole"),
            GammaHalfValue::Finite {
                rational_part,
                sqrt_pi_exponent: 0,
            } => write!(f, "{rational_part}"),
            GammaHalfValue::Finite { rational_part, .. } => write!(f, "{rational_part}*sqrt(pi)"),
        }
    }
}

/// `Gamma(a)` for `a` an integer or half-integer.
pub fn gamma_half(a: &Rational) -> Result<GammaHalfValue> {
    let den = a.denom();
    if den.is_one() {
        if !a.is_positive() {
            return Ok(GammaHalfValue::Pole);
        }
        let n = u64::try_from(a.numer() - BigInt::one())
            .map_err(|_| Error::InvalidArgument(format!("gamma argument {a} too large")))?;
        return Ok(GammaHalfValue::Finite {
            rational_part: factorial(n),
            sqrt_pi_exponent: 0,
        });
    }
    if *den != BigInt::from(2) {
        return Err(Error::NotHalfInteger(a.clone()));
    }
    // a = n + 1/2 with n = floor(a)
    let n = a.floor().to_integer();
    let too_large = || Error::InvalidArgument(format!("gamma argument {a} too large"));
    let rational_part = if !n.is_negative() {
        // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
        let n = u64::try_from(n).map_err(|_| too_large())?;
        factorial(2 * n) / (pow_u(4, n as u32) * factorial(n))
    } else {
        // Gamma(1/2 - n) = (-4)^n n! / (2n)! sqrt(pi)
        let n = u64::try_from(-n).map_err(|_| too_large())?;
        let mag = pow_u(4, n as u32) * factorial(n) / factorial(2 * n);
        if n % 2 == 1 {
            -mag
        } else {
            mag
        }
    };
    Ok(GammaHalfValue::Finite {
        rational_part,
        sqrt_pi_exponent: 1,
    })
}

/// Evaluates `c * sqrt(pi)^e / (Gamma(a_1) ... Gamma(a_r))`, with
/// `1 / Gamma(pole) = 0`. Fails if the powers of `sqrt(pi)` do not cancel.
pub fn sqrt_pi_quotient(
    coefficient: &Rational,
    sqrt_pi_exponent: u8,
    denominators: &[GammaHalfValue],
) -> Result<Rational> {
    let mut den = Rational::one();
    let mut exp = sqrt_pi_exponent as i32;
    for g in denominators {
        match g.finite() {
            None => return Ok(Rational::zero()),
            Some((r, e)) => {
                den *= r;
                exp -= e as i32;
            }
        }
    }
    if exp != 0 {
        return Err(Error::InvalidArgument(format!(
            "quotient keeps a factor sqrt(pi)^{exp}"
        )));
    }
    Ok(coefficient / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn finite(r: Rational, e: u8) -> GammaHalfValue {
        GammaHalfValue::Finite {
            rational_part: r,
            sqrt_pi_exponent: e,
        }
    }

    #[test]
    fn examples() {
        assert_eq!(gamma_half(&frac(1, 2)).unwrap(), finite(int(1), 1));
        assert_eq!(gamma_half(&frac(5, 2)).unwrap(), finite(frac(3, 4), 1));
        assert_eq!(gamma_half(&int(0)).unwrap(), GammaHalfValue::Pole);
        assert_eq!(gamma_half(&frac(-1, 2)).unwrap(), finite(int(-2), 1));
        assert_eq!(gamma_half(&int(5)).unwrap(), finite(int(24), 0));
    }

    #[test]
    fn rejects_other_denominators() {
        assert_eq!(
            gamma_half(&frac(1, 3)).unwrap_err(),
            Error::NotHalfInteger(frac(1, 3))
        );
    }

    #[test]
    fn recurrence_on_half_integer_window() {
        // Gamma(a + 1) = a Gamma(a) for a in [-9/2, 9/2], both sides finite
        for twice in -9i64..=9 {
            let a = frac(twice, 2);
            let lhs = gamma_half(&(&a + int(1))).unwrap();
            let rhs = gamma_half(&a).unwrap();
            if let (Some((l, le)), Some((r, re))) = (lhs.finite(), rhs.finite()) {
                assert_eq!(le, re);
                assert_eq!(l.clone(), &a * r);
            }
        }
    }

    #[test]
    fn pochhammer_is_a_gamma_ratio_on_half_integers() {
        use crate::rational::pochhammer;
        for twice in [1i64, 3, 5, -1, -3, -7] {
            let x = frac(twice, 2);
            for v in 0..6u32 {
                let num = gamma_half(&(&x + int(v as i64))).unwrap();
                let den = gamma_half(&x).unwrap();
                let (n, ne) = num.finite().unwrap();
                let (d, de) = den.finite().unwrap();
                assert_eq!(ne, de);
                assert_eq!(n / d, pochhammer(&x, v));
            }
        }
    }

    #[test]
    fn quotient_with_pole_is_zero() {
        let q = sqrt_pi_quotient(&int(4), 1, &[gamma_half(&int(2)).unwrap(), GammaHalfValue::Pole]);
        assert_eq!(q.unwrap(), int(0));
        let q = sqrt_pi_quotient(
            &int(4),
            1,
            &[gamma_half(&int(2)).unwrap(), gamma_half(&frac(-1, 2)).unwrap()],
        );
        assert_eq!(q.unwrap(), int(-2));
        assert!(sqrt_pi_quotient(&int(1), 0, &[gamma_half(&frac(1, 2)).unwrap()]).is_err());
    }
}
