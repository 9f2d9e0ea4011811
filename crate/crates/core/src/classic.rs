//! Classical number and polynomial families: Stirling numbers of both kinds,
//! Bernoulli and Euler polynomials of integer order, their Apostol and
//! Frobenius–Euler deformations, Catalan/Daehee/Changhee numbers, Legendre
//! and Mirimanoff polynomials.
//!
//! Everything here is computed from its exponential generating function with
//! [`EgfSeries`] arithmetic. The unit tests check each family against an
//! independent recurrence or enumeration.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::poly::Poly;
use crate::rational::{binomial, factorial, frac, int, pow, pow_u, Rational};
use crate::series::{egf_reciprocal, EgfSeries};

static STIRLING2: Memo<(u32, u32), Rational> = Memo::new();
static STIRLING1: Memo<(u32, u32), Rational> = Memo::new();
static BERNOULLI_ORDER: Memo<(u32, i64), Poly> = Memo::new();
static APOSTOL_EULER_ORDER: Memo<(u32, i64, Rational), Poly> = Memo::new();

/// Catalan, Daehee and Changhee number sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Catalan,
    Daehee,
    Changhee,
}

/// Stirling number of the second kind: the coefficient of `t^n/n!` in
/// `(e^t - 1)^v / v!`.
pub fn stirling2(n: u32, v: u32) -> Rational {
    if v > n {
        return Rational::zero();
    }
    STIRLING2.get_or_compute((n, v), || {
        let order = n as usize;
        let em1 = EgfSeries::exp(&int(1), order)
            .sub(&EgfSeries::one(order))
            .expect("same order");
        em1.powi(v as i64).expect("positive power").coeff(order) / factorial(v as u64)
    })
}

/// Signed Stirling number of the first kind: the coefficient of `t^n/n!` in
/// `(log(1 + t))^k / k!`.
pub fn stirling1(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    STIRLING1.get_or_compute((n, k), || {
        let order = n as usize;
        EgfSeries::log1p(order)
            .powi(k as i64)
            .expect("positive power")
            .coeff(order)
            / factorial(k as u64)
    })
}

/// `(e^t - 1) / t` truncated at `order`.
fn exp_minus_one_over_t(order: usize) -> EgfSeries {
    EgfSeries::exp(&int(1), order + 1)
        .sub(&EgfSeries::one(order + 1))
        .and_then(|s| s.div_t())
        .expect("zero constant term")
}

/// Bernoulli polynomial of order `k`, from `(t / (e^t - 1))^k e^(xt)`.
/// Negative orders expand the entire function `((e^t - 1)/t)^|k|`.
pub fn bernoulli_poly_order(n: u32, k: i64) -> Poly {
    BERNOULLI_ORDER.get_or_compute((n, k), || {
        exp_minus_one_over_t(n as usize)
            .powi(-k)
            .expect("constant term is 1")
            .appell_poly(n as usize)
    })
}

/// Classical Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: u32) -> Rational {
    bernoulli_poly_order(n, 1).coeff(0)
}

/// Apostol–Euler polynomial of order `k`: `(2 / (lambda e^t + 1))^k e^(xt)`.
/// Positive orders need `lambda != -1`; order 0 gives `x^n`.
pub fn apostol_euler_order(n: u32, k: i64, lambda: &Rational) -> Result<Poly> {
    if k > 0 && *lambda == int(-1) {
        return Err(Error::SingularParameter {
            family: "Apostol-Euler polynomials of positive order",
            parameter: "lambda",
            value: lambda.clone(),
            hint: "",
        });
    }
    Ok(APOSTOL_EULER_ORDER.get_or_compute((n, k, lambda.clone()), || {
        let order = n as usize;
        // (lambda e^t + 1) / 2
        let half = EgfSeries::exp(&int(1), order).scale(lambda)
            .add(&EgfSeries::one(order))
            .expect("same order")
            .scale(&frac(1, 2));
        half.powi(-k).expect("checked above").appell_poly(order)
    }))
}

/// Euler polynomial of order `k`, from `(2 / (e^t + 1))^k e^(xt)`.
pub fn euler_poly_order(n: u32, k: i64) -> Poly {
    apostol_euler_order(n, k, &int(1)).expect("lambda = 1 is regular")
}

/// `E_n(0)`, the value the p-adic and Changhee formulas call the Euler number.
pub fn euler_at_zero(n: u32) -> Rational {
    euler_poly_order(n, 1).coeff(0)
}

/// Apostol–Bernoulli polynomial from `t e^(xt) / (lambda e^t - 1)`, `lambda != 1`.
pub fn apostol_bernoulli(n: u32, lambda: &Rational) -> Result<Poly> {
    if lambda.is_one() {
        return Err(Error::SingularParameter {
            family: "Apostol-Bernoulli polynomials",
            parameter: "lambda",
            value: lambda.clone(),
            hint: "; use bernoulli_poly_order(n, 1) for the classical case",
        });
    }
    let order = n as usize;
    let denom = EgfSeries::exp(&int(1), order).scale(lambda)
        .sub(&EgfSeries::one(order))
        .expect("same order");
    Ok(egf_reciprocal(&denom)?.mul_t().appell_poly(order))
}

/// Apostol–Euler polynomial from `2 e^(xt) / (lambda e^t + 1)`, `lambda != -1`.
pub fn apostol_euler(n: u32, lambda: &Rational) -> Result<Poly> {
    apostol_euler_order(n, 1, lambda)
}

/// Frobenius–Euler polynomial `H_n(x; u)` from `(1 - u) e^(xt) / (e^t - u)`.
pub fn frobenius_euler(n: u32, u: &Rational) -> Result<Poly> {
    if u.is_one() {
        return Err(Error::SingularParameter {
            family: "Frobenius-Euler polynomials",
            parameter: "u",
            value: u.clone(),
            hint: "",
        });
    }
    let order = n as usize;
    let denom = EgfSeries::exp(&int(1), order)
        .sub(&EgfSeries::constant(u.clone(), order))
        .expect("same order");
    Ok(egf_reciprocal(&denom)?
        .scale(&(Rational::one() - u))
        .appell_poly(order))
}

pub fn classic_sequence(tag: FamilyTag, n: u32) -> Rational {
    match tag {
        FamilyTag::Catalan => binomial(2 * n as u64, n as u64) / int(n as i64 + 1),
        FamilyTag::Daehee => (0..=n).map(|k| bernoulli(k) * stirling1(n, k)).sum(),
        FamilyTag::Changhee => (0..=n).map(|k| stirling1(n, k) * euler_at_zero(k)).sum(),
    }
}

/// `(1/k!) sum_j C(k,j) j^n lambda^j`, the coefficients of `(lambda e^t + 1)^k / k!`.
pub fn y1(n: u32, k: u32, lambda: &Rational) -> Rational {
    let s: Rational = (0..=k)
        .map(|j| binomial(k as u64, j as u64) * pow_u(j as u64, n) * pow(lambda, j))
        .sum();
    s / factorial(k as u64)
}

/// `Y_n(lambda)`, the EGF coefficients of `2 / (lambda^2 t + lambda - 1)`,
/// obtained by expanding the geometric series:
/// `2 n! (-lambda^2)^n / (lambda - 1)^(n+1)`.
pub fn y_seq(n: u32, lambda: &Rational) -> Result<Rational> {
    if lambda.is_one() {
        return Err(Error::SingularParameter {
            family: "Y_n",
            parameter: "lambda",
            value: lambda.clone(),
            hint: "",
        });
    }
    let d = lambda - Rational::one();
    let ratio = -(lambda * lambda) / &d;
    Ok(int(2) * factorial(n as u64) * pow(&ratio, n) / d)
}

/// Legendre polynomial from `2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k`.
pub fn legendre(n: u32) -> Poly {
    let xm1 = Poly::linear(int(-1));
    let xp1 = Poly::linear(int(1));
    let sum: Poly = (0..=n)
        .map(|k| {
            let c = binomial(n as u64, k as u64);
            (&xm1.pow(n - k) * &xp1.pow(k)).scale(&(&c * &c))
        })
        .sum();
    sum.scale(&pow_u(2, n).recip())
}

/// Mirimanoff polynomial `sum_{j<n} (j + shift)^m x^j`; `shift = 0` gives `f_m(x, n)`.
pub fn mirimanoff(m: u32, n: u32, shift: u32) -> Poly {
    Poly::new(
        (0..n)
            .map(|j| pow_u((j + shift) as u64, m))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::falling_factorial;

    /// Number of set partitions of {0..n-1} into exactly v blocks, by walking
    /// restricted growth strings.
    fn count_partitions(n: usize, v: usize) -> u64 {
        fn walk(pos: usize, n: usize, max: usize, v: usize) -> u64 {
            if pos == n {
                return (max == v) as u64;
            }
            (0..=max.min(v.saturating_sub(1)))
                .map(|b| walk(pos + 1, n, max.max(b + 1), v))
                .sum()
        }
        if n == 0 {
            return (v == 0) as u64;
        }
        walk(1, n, 1, v)
    }

    fn stirling2_recurrence(n: u32, k: u32) -> Rational {
        let mut row = vec![Rational::one()];
        for i in 0..n {
            let mut next = vec![Rational::zero(); i as usize + 2];
            for (j, s) in row.iter().enumerate() {
                next[j] += s * int(j as i64);
                next[j + 1] += s;
            }
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients of the falling factorial x(x-1)...(x-n+1).
    fn falling_poly(n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, i| &acc * &Poly::linear(int(-(i as i64))))
    }

    /// Bernoulli numbers from sum_{j<=n} C(n+1, j) B_j = 0.
    fn bernoulli_recurrence(count: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![Rational::one()];
        for n in 1..count {
            let s: Rational = (0..n)
                .map(|j| binomial(n as u64 + 1, j as u64) * &b[j])
                .sum();
            b.push(-s / int(n as i64 + 1));
        }
        b
    }

    #[test]
    fn stirling2_examples_and_enumeration() {
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(5, 0), int(0));
        assert_eq!(stirling2(3, 3), int(1));
        for n in 0..=8u32 {
            for v in 0..=n {
                assert_eq!(
                    stirling2(n, v),
                    int(count_partitions(n as usize, v as usize) as i64),
                    "S({n},{v})"
                );
            }
        }
        for n in 0..=12u32 {
            for v in 0..=12u32 {
                assert_eq!(stirling2(n, v), stirling2_recurrence(n, v));
            }
        }
    }

    #[test]
    fn stirling1_examples_and_falling_factorial() {
        assert_eq!(stirling1(3, 2), int(-3));
        assert_eq!(stirling1(4, 2), int(11));
        for n in 0..=12u32 {
            assert_eq!(stirling1(n, n), int(1));
            let f = falling_poly(n);
            for k in 0..=n {
                assert_eq!(stirling1(n, k), f.coeff(k as usize), "s({n},{k})");
            }
        }
    }

    #[test]
    fn stirling_matrices_are_inverse() {
        for n in 0..=10u32 {
            for m in 0..=10u32 {
                let s: Rational = (0..=10).map(|k| stirling1(n, k) * stirling2(k, m)).sum();
                assert_eq!(s, if n == m { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn powers_expand_in_binomials() {
        // x^n = sum_v C(x, v) v! S(n, v) = sum_v x(x-1)...(x-v+1) S(n, v)
        for n in 0..=10u32 {
            let rhs: Poly = (0..=n)
                .map(|v| falling_poly(v).scale(&stirling2(n, v)))
                .sum();
            assert_eq!(rhs, Poly::monomial(int(1), n as usize));
            let x = frac(7, 3);
            let pointwise: Rational = (0..=n)
                .map(|v| falling_factorial(&x, v) * stirling2(n, v))
                .sum();
            assert_eq!(pointwise, pow(&x, n));
        }
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(
            bernoulli_poly_order(2, 1),
            Poly::new(vec![frac(1, 6), int(-1), int(1)])
        );
        assert_eq!(bernoulli_poly_order(3, 0), Poly::monomial(int(1), 3));
        assert_eq!(bernoulli_poly_order(2, 1).eval(&int(0)), frac(1, 6));
    }

    #[test]
    fn bernoulli_matches_recurrence() {
        let b = bernoulli_recurrence(13);
        for n in 0..=12u32 {
            assert_eq!(bernoulli(n), b[n as usize]);
            // B_n(x) = sum_k C(n,k) B_k x^(n-k)
            let expected = Poly::new(
                (0..=n)
                    .map(|i| binomial(n as u64, (n - i) as u64) * &b[(n - i) as usize])
                    .collect(),
            );
            assert_eq!(bernoulli_poly_order(n, 1), expected);
        }
    }

    #[test]
    fn bernoulli_order_adds_under_convolution() {
        // B^{(a+b)}_n(x + y) = sum_k C(n,k) B^{(a)}_k(x) B^{(b)}_{n-k}(y); check at x = y = 0
        for n in 0..=8u32 {
            for (a, b) in [(1i64, 1i64), (2, -1), (-2, -1), (3, -3)] {
                let lhs = bernoulli_poly_order(n, a + b).coeff(0);
                let rhs: Rational = (0..=n)
                    .map(|k| {
                        binomial(n as u64, k as u64)
                            * bernoulli_poly_order(k, a).coeff(0)
                            * bernoulli_poly_order(n - k, b).coeff(0)
                    })
                    .sum();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn negative_order_bernoulli_is_explicit() {
        // ((e^t - 1)/t)^k has coefficients k! S(n + k, k) / C(n + k, k) ... checked as
        // B^{(-k)}_n = n! k! S(n+k, k) / (n+k)!
        for k in 0..=5u32 {
            for n in 0..=8u32 {
                let expected = factorial(n as u64) * factorial(k as u64) * stirling2(n + k, k)
                    / factorial((n + k) as u64);
                assert_eq!(bernoulli_poly_order(n, -(k as i64)).coeff(0), expected);
            }
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_poly_order(2, 1), Poly::from_ints(&[0, -1, 1]));
        assert_eq!(euler_poly_order(1, -2).eval(&int(0)), int(1));
        assert_eq!(euler_poly_order(2, 0), Poly::monomial(int(1), 2));
    }

    #[test]
    fn euler_matches_functional_equation() {
        // E_n(x) + E_n(x + 1) = 2 x^n determines E_n: E_n = x^n - (1/2) sum_{k<n} C(n,k) E_k
        let mut e: Vec<Poly> = Vec::new();
        for n in 0..=12u32 {
            let lower: Poly = (0..n)
                .map(|k| e[k as usize].scale(&binomial(n as u64, k as u64)))
                .sum();
            let en = &Poly::monomial(int(1), n as usize) - &lower.scale(&frac(1, 2));
            assert_eq!(euler_poly_order(n, 1), en, "E_{n}");
            e.push(en);
        }
    }

    #[test]
    fn negative_order_euler_is_scaled_golombek_sum() {
        // E_n^{(-k)}(0) = 2^-k sum_j C(k,j) j^n, by expanding ((e^t+1)/2)^k directly
        for n in 0..=8u32 {
            for k in 0..=8u32 {
                let direct: Rational = (0..=k)
                    .map(|j| binomial(k as u64, j as u64) * pow_u(j as u64, n))
                    .sum();
                assert_eq!(
                    euler_poly_order(n, -(k as i64)).coeff(0),
                    direct / pow_u(2, k)
                );
            }
        }
    }

    #[test]
    fn apostol_euler_negative_order_is_scaled_y1() {
        for lambda in [int(1), int(2), int(-1)] {
            for n in 0..=8u32 {
                for k in 0..=8u32 {
                    let lhs = apostol_euler_order(n, -(k as i64), &lambda).unwrap().coeff(0);
                    let rhs = factorial(k as u64) * y1(n, k, &lambda) / pow_u(2, k);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn apostol_bernoulli_examples() {
        assert_eq!(apostol_bernoulli(1, &int(2)).unwrap(), Poly::one());
        assert_eq!(apostol_bernoulli(2, &int(2)).unwrap(), Poly::from_ints(&[-4, 2]));
        assert!(apostol_bernoulli(0, &frac(1, 2)).unwrap().is_zero());
        assert!(matches!(
            apostol_bernoulli(3, &int(1)),
            Err(Error::SingularParameter { .. })
        ));
    }

    #[test]
    fn apostol_bernoulli_difference_equation() {
        for lambda in [int(2), int(3), int(-1), frac(1, 2)] {
            for n in 0..=8u32 {
                let b: Vec<Poly> = (0..=n).map(|k| apostol_bernoulli(k, &lambda).unwrap()).collect();
                let shifted: Poly = (0..=n)
                    .map(|k| b[k as usize].scale(&binomial(n as u64, k as u64)))
                    .sum();
                let lhs = &shifted.scale(&lambda) - &b[n as usize];
                let rhs = if n == 0 {
                    Poly::zero()
                } else {
                    Poly::monomial(int(n as i64), n as usize - 1)
                };
                assert_eq!(lhs, rhs, "lambda={lambda} n={n}");
                // same statement through polynomial shift
                let direct = &b[n as usize].shift(&int(1)).scale(&lambda) - &b[n as usize];
                assert_eq!(direct, rhs);
            }
        }
    }

    #[test]
    fn apostol_euler_examples_and_difference_equation() {
        assert_eq!(apostol_euler(0, &int(1)).unwrap(), Poly::one());
        assert_eq!(
            apostol_euler(1, &int(1)).unwrap(),
            Poly::new(vec![frac(-1, 2), int(1)])
        );
        assert_eq!(apostol_euler(0, &int(3)).unwrap(), Poly::constant(frac(1, 2)));
        assert!(apostol_euler(2, &int(-1)).is_err());
        for lambda in [int(2), int(3), frac(1, 2), int(-2)] {
            for n in 0..=8u32 {
                let e = apostol_euler(n, &lambda).unwrap();
                let lhs = &e.shift(&int(1)).scale(&lambda) + &e;
                assert_eq!(lhs, Poly::monomial(int(2), n as usize));
            }
        }
    }

    #[test]
    fn frobenius_euler_examples_and_difference_equation() {
        assert_eq!(frobenius_euler(0, &int(2)).unwrap(), Poly::one());
        assert_eq!(frobenius_euler(1, &int(2)).unwrap(), Poly::from_ints(&[1, 1]));
        assert_eq!(frobenius_euler(1, &frac(1, 2)).unwrap(), Poly::from_ints(&[-2, 1]));
        assert!(frobenius_euler(1, &int(1)).is_err());
        for u in [int(2), int(-1), frac(1, 2), int(3)] {
            for n in 0..=8u32 {
                let h = frobenius_euler(n, &u).unwrap();
                let lhs = &h.shift(&int(1)) - &h.scale(&u);
                assert_eq!(lhs, Poly::monomial(Rational::one() - &u, n as usize));
            }
        }
    }

    #[test]
    fn classic_sequence_examples() {
        assert_eq!(classic_sequence(FamilyTag::Catalan, 3), int(5));
        assert_eq!(classic_sequence(FamilyTag::Changhee, 2), frac(1, 2));
        assert_eq!(classic_sequence(FamilyTag::Daehee, 2), frac(2, 3));
    }

    /// Catalan numbers by counting balanced +/- sequences of length 2n.
    fn ballot(n: u32) -> u64 {
        fn walk(open: u32, close: u32, n: u32) -> u64 {
            if open == n && close == n {
                return 1;
            }
            let mut c = 0;
            if open < n {
                c += walk(open + 1, close, n);
            }
            if close < open {
                c += walk(open, close + 1, n);
            }
            c
        }
        walk(0, 0, n)
    }

    #[test]
    fn classic_sequences_match_closed_forms() {
        for n in 0..=12u32 {
            assert_eq!(classic_sequence(FamilyTag::Catalan, n), int(ballot(n) as i64));
            let d = classic_sequence(FamilyTag::Daehee, n);
            assert_eq!(d * int(n as i64 + 1) / factorial(n as u64), crate::rational::sign(n as u64));
            let ch = classic_sequence(FamilyTag::Changhee, n);
            assert_eq!(ch * pow_u(2, n) / factorial(n as u64), crate::rational::sign(n as u64));
        }
    }

    #[test]
    fn y1_examples_and_series() {
        assert_eq!(y1(2, 2, &int(1)), int(3));
        for k in 0..6u32 {
            assert_eq!(y1(0, k, &int(1)), pow_u(2, k) / factorial(k as u64));
        }
        assert_eq!(y1(0, 0, &int(5)), int(1));
        assert_eq!(y1(3, 0, &int(5)), int(0));
        for lambda in [int(2), frac(-1, 2), int(-1)] {
            for k in 0..=6u32 {
                let order = 8;
                let s = EgfSeries::exp(&int(1), order).scale(&lambda)
                    .add(&EgfSeries::one(order))
                    .unwrap()
                    .powi(k as i64)
                    .unwrap()
                    .scale(&factorial(k as u64).recip());
                for n in 0..=order as u32 {
                    assert_eq!(y1(n, k, &lambda), s.coeff(n as usize));
                }
            }
        }
    }

    #[test]
    fn y_seq_examples() {
        assert_eq!(y_seq(0, &int(3)).unwrap(), int(1));
        assert_eq!(y_seq(2, &int(-1)).unwrap(), frac(-1, 2));
        assert_eq!(y_seq(1, &int(3)).unwrap(), frac(-9, 2));
        assert!(y_seq(0, &int(1)).is_err());
        for n in 0..8u32 {
            assert_eq!(-y_seq(n, &int(-1)).unwrap(), factorial(n as u64) / pow_u(2, n));
        }
    }

    #[test]
    fn y_seq_matches_series_division() {
        for lambda in [int(3), int(-1), frac(1, 2), int(-2)] {
            let order = 8;
            let mut d = vec![Rational::zero(); order + 1];
            d[0] = &lambda - Rational::one();
            d[1] = &lambda * &lambda;
            let r = egf_reciprocal(&EgfSeries::new(d)).unwrap().scale(&int(2));
            for n in 0..=order as u32 {
                assert_eq!(y_seq(n, &lambda).unwrap(), r.coeff(n as usize));
            }
        }
    }

    #[test]
    fn legendre_examples_and_recurrence() {
        assert_eq!(legendre(2), Poly::new(vec![frac(-1, 2), int(0), frac(3, 2)]));
        assert_eq!(legendre(0), Poly::one());
        assert_eq!(legendre(2).eval(&int(0)), frac(-1, 2));
        let mut prev = Poly::one();
        let mut cur = Poly::x();
        assert_eq!(legendre(1), cur);
        for n in 1..12u32 {
            let next = (&(&Poly::x() * &cur).scale(&int(2 * n as i64 + 1))
                - &prev.scale(&int(n as i64)))
                .scale(&frac(1, n as i64 + 1));
            assert_eq!(legendre(n + 1), next, "P_{}", n + 1);
            prev = cur;
            cur = next;
        }
    }

    #[test]
    fn mirimanoff_examples() {
        assert_eq!(mirimanoff(2, 3, 0), Poly::from_ints(&[0, 1, 4]));
        assert_eq!(mirimanoff(0, 3, 0), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(mirimanoff(1, 2, 5), Poly::from_ints(&[5, 6]));
        assert_eq!(mirimanoff(3, 0, 0), Poly::zero());
    }
}
