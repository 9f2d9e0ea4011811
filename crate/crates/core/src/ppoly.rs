//! The polynomials `P(x; m, n; lambda, p)` whose coefficients are the `y6`
//! numbers, the linear functionals used to integrate them, power sums in
//! closed form, and the `R_n(x; p)` / Vowe family with the Euler operator
//! `x d/dx`.

use num_traits::{One, Zero};

use crate::classic::{
    apostol_bernoulli, bernoulli, bernoulli_poly_order, euler_at_zero, euler_poly_order,
    frobenius_euler,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, pow, Rational};
use crate::y6::y6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PPolyKey {
    pub m: u32,
    pub n: u32,
    pub lambda: Rational,
    pub p: u32,
}

/// `P(x; m, n; lambda, p) = sum_{k=0}^{m} C(m,k) x^(m-k) y6(k, n; lambda, p)`,
/// the coefficient of `t^m/m!` in `e^(xt) F_y6(t)`.
pub fn p_poly(m: u32, n: u32, lambda: &Rational, p: u32) -> Poly {
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    for k in 0..=m {
        coeffs[(m - k) as usize] = binomial(m as u64, k as u64) * y6(k, n, lambda, p);
    }
    Poly::new(coeffs)
}

impl PPolyKey {
    pub fn poly(&self) -> Poly {
        p_poly(self.m, self.n, &self.lambda, self.p)
    }
}

/// `sum_{j=0}^{n} C(n,j)^p lambda^j (x + j)^m`, expanded. Equal to
/// `n! * p_poly(m, n, lambda, p)`.
pub fn raw_sum_poly(m: u32, n: u32, lambda: &Rational, p: u32) -> Poly {
    (0..=n)
        .map(|j| {
            let w = pow(&binomial(n as u64, j as u64), p) * pow(lambda, j);
            Poly::linear(int(j as i64)).pow(m).scale(&w)
        })
        .sum()
}

/// Volkenborn integral of a polynomial: `x^i -> B_i`.
pub fn volkenborn(q: &Poly) -> Rational {
    q.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| c * bernoulli(i as u32))
        .sum()
}

/// Fermionic p-adic integral of a polynomial: `x^i -> E_i(0)`.
pub fn fermionic(q: &Poly) -> Rational {
    q.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| c * euler_at_zero(i as u32))
        .sum()
}

/// `sum_{j=0}^{upper-1} lambda^j j^m` through Bernoulli-type closed forms:
///
/// * `lambda = 1`: `(B_{m+1}(N) - B_{m+1}) / (m+1)`
/// * `lambda = -1`: `((-1)^(N-1) E_m(N) + E_m(0)) / 2`
/// * otherwise: `(lambda^N B_{m+1}(N; lambda) - B_{m+1}(0; lambda)) / (m+1)`
///   with Apostol–Bernoulli polynomials.
pub fn power_sum_closed(m: u32, upper: u32, lambda: &Rational) -> Rational {
    let nn = int(upper as i64);
    if lambda.is_one() {
        let b = bernoulli_poly_order(m + 1, 1);
        (b.eval(&nn) - b.coeff(0)) / int(m as i64 + 1)
    } else if *lambda == int(-1) {
        let e = euler_poly_order(m, 1);
        let s = if upper % 2 == 1 { int(1) } else { int(-1) };
        (s * e.eval(&nn) + e.coeff(0)) / int(2)
    } else {
        let b = apostol_bernoulli(m + 1, lambda).expect("lambda != 1");
        (pow(lambda, upper) * b.eval(&nn) - b.coeff(0)) / int(m as i64 + 1)
    }
}

/// `R_n(x; p) = (1/n!) sum_k C(n,k)^p x^k`, so that `R_n(lambda; p) = y6(0, n; lambda, p)`.
pub fn r_poly(n: u32, p: u32) -> Poly {
    let nf = factorial(n as u64).recip();
    Poly::new(
        (0..=n)
            .map(|k| pow(&binomial(n as u64, k as u64), p) * &nf)
            .collect(),
    )
}

/// The Vowe polynomial `M_n(x) = sum_k C(n,k)^2 x^k = n! R_n(x; 2)`.
pub fn vowe(n: u32) -> Poly {
    r_poly(n, 2).scale(&factorial(n as u64))
}

/// `(x d/dx)^iterations q`. On monomials `x^k -> k^iterations x^k`.
pub fn euler_operator(q: &Poly, iterations: u32) -> Poly {
    let mut cur = q.clone();
    for _ in 0..iterations {
        cur = &Poly::x() * &cur.derivative();
    }
    cur
}

/// `sum_{j=0}^{n-1} u^j (x0 + j)^m` via Frobenius–Euler polynomials:
/// `(u^n H_m(x0 + n; 1/u) - H_m(x0; 1/u)) / (u - 1)`.
pub fn mirimanoff_frobenius_sum(m: u32, n: u32, x0: &Rational, u: &Rational) -> Result<Rational> {
    if u.is_zero() || u.is_one() {
        return Err(Error::SingularParameter {
            family: "Mirimanoff/Frobenius-Euler sum",
            parameter: "u",
            value: u.clone(),
            hint: " (u must avoid 0 and 1)",
        });
    }
    let h = frobenius_euler(m, &u.recip())?;
    let top = pow(u, n) * h.eval(&(x0 + int(n as i64)));
    Ok((top - h.eval(x0)) / (u - Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::{legendre, mirimanoff};
    use crate::poly::poly_integral01;
    use crate::rational::{falling_factorial, frac, pow_u};

    fn grid() -> Vec<Rational> {
        vec![int(-2), int(-1), frac(-1, 2), frac(1, 2), int(1), int(2), int(3)]
    }

    #[test]
    fn p_poly_examples() {
        assert_eq!(p_poly(2, 2, &int(1), 1), Poly::from_ints(&[3, 4, 2]));
        assert_eq!(
            p_poly(0, 3, &int(2), 2),
            Poly::constant(y6(0, 3, &int(2), 2))
        );
        assert_eq!(p_poly(1, 1, &int(1), 1), Poly::from_ints(&[1, 2]));
    }

    #[test]
    fn p_poly_degree_is_m_for_positive_lambda() {
        for m in 0..=6 {
            for n in 0..=5 {
                for lambda in [frac(1, 2), int(1), int(3)] {
                    assert_eq!(p_poly(m, n, &lambda, 2).degree(), Some(m as usize));
                }
            }
        }
    }

    #[test]
    fn raw_sum_examples() {
        assert_eq!(raw_sum_poly(2, 2, &int(1), 1), Poly::from_ints(&[6, 8, 4]));
        assert_eq!(raw_sum_poly(1, 1, &int(1), 1), Poly::from_ints(&[1, 2]));
        // p = 0 at x = 0 is a plain power sum
        assert_eq!(raw_sum_poly(2, 3, &int(1), 0).eval(&int(0)), int(14));
    }

    #[test]
    fn raw_sum_is_factorial_times_p_poly() {
        for lambda in grid() {
            for m in 0..=6 {
                for n in 0..=6 {
                    for p in 0..=3 {
                        assert_eq!(
                            raw_sum_poly(m, n, &lambda, p),
                            p_poly(m, n, &lambda, p).scale(&factorial(n as u64))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn k_fold_derivative_uses_falling_factorial_of_m() {
        for lambda in [int(-1), frac(1, 2), int(2)] {
            for m in 1..=6u32 {
                for n in 0..=5 {
                    let mut d = p_poly(m, n, &lambda, 2);
                    for k in 1..=m {
                        d = d.derivative();
                        let rhs = p_poly(m - k, n, &lambda, 2)
                            .scale(&falling_factorial(&int(m as i64), k));
                        assert_eq!(d, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn volkenborn_examples() {
        assert_eq!(volkenborn(&Poly::x()), frac(-1, 2));
        assert_eq!(volkenborn(&Poly::one()), int(1));
        assert_eq!(volkenborn(&Poly::from_ints(&[3, 4, 2])), frac(4, 3));
    }

    #[test]
    fn fermionic_examples() {
        assert_eq!(fermionic(&Poly::x()), frac(-1, 2));
        assert_eq!(fermionic(&Poly::monomial(int(1), 2)), int(0));
        assert_eq!(fermionic(&Poly::from_ints(&[3, 4, 2])), int(1));
    }

    #[test]
    fn functionals_on_shifted_powers() {
        // Volkenborn of (x + j)^m is B_m(j); fermionic is E_m(j)
        for m in 0..=8u32 {
            for j in 0..=5i64 {
                let q = Poly::linear(int(j)).pow(m);
                assert_eq!(volkenborn(&q), bernoulli_poly_order(m, 1).eval(&int(j)));
                assert_eq!(fermionic(&q), euler_poly_order(m, 1).eval(&int(j)));
            }
        }
    }

    #[test]
    fn volkenborn_difference_property() {
        // Volkenborn integral satisfies I(f(x+1)) - I(f) = f'(0)
        for m in 0..=8u32 {
            let f = Poly::linear(frac(1, 3)).pow(m);
            assert_eq!(
                volkenborn(&f.shift(&int(1))) - volkenborn(&f),
                f.derivative().coeff(0)
            );
            // fermionic: I(f(x+1)) + I(f) = 2 f(0)
            assert_eq!(
                fermionic(&f.shift(&int(1))) + fermionic(&f),
                int(2) * f.coeff(0)
            );
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum_closed(1, 3, &int(2)), int(10));
        assert_eq!(power_sum_closed(2, 3, &int(-1)), int(3));
        for n in 1..10u32 {
            assert_eq!(power_sum_closed(1, n, &int(1)), int((n * (n - 1) / 2) as i64));
        }
    }

    #[test]
    fn power_sums_match_direct_summation() {
        let mut lambdas = grid();
        lambdas.push(int(0));
        for lambda in lambdas {
            for m in 0..=8u32 {
                for upper in 0..=12u32 {
                    let direct: Rational = (0..upper)
                        .map(|j| pow(&lambda, j) * pow_u(j as u64, m))
                        .sum();
                    assert_eq!(power_sum_closed(m, upper, &lambda), direct);
                }
            }
        }
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly(2, 2), Poly::new(vec![frac(1, 2), int(2), frac(1, 2)]));
        assert_eq!(
            r_poly(3, 0),
            Poly::from_ints(&[1, 1, 1, 1]).scale(&frac(1, 6))
        );
        for lambda in grid() {
            for n in 0..=6 {
                assert_eq!(
                    r_poly(n, 3).eval(&lambda) * factorial(n as u64),
                    crate::y6::franel(3, 0, n, &lambda)
                );
            }
        }
    }

    #[test]
    fn vowe_examples() {
        assert_eq!(vowe(2), Poly::from_ints(&[1, 4, 1]));
        assert_eq!(vowe(0), Poly::one());
        assert_eq!(vowe(1), Poly::from_ints(&[1, 1]));
        let one_plus = Poly::from_ints(&[1, 1]);
        let one_minus = Poly::from_ints(&[1, -1]);
        let rec = &(&one_plus * &vowe(1)).scale(&frac(3, 2))
            - &(&one_minus.pow(2) * &vowe(0)).scale(&frac(1, 2));
        assert_eq!(rec, vowe(2));
    }

    #[test]
    fn vowe_recurrence_and_legendre_substitution() {
        let one_plus = Poly::from_ints(&[1, 1]);
        let one_minus = Poly::from_ints(&[1, -1]);
        for n in 1..=10u32 {
            let rhs = &(&one_plus * &vowe(n)).scale(&frac(2 * n as i64 + 1, n as i64 + 1))
                - &(&one_minus.pow(2) * &vowe(n - 1)).scale(&frac(n as i64, n as i64 + 1));
            assert_eq!(vowe(n + 1), rhs);
        }
        for n in 0..=10u32 {
            let p = legendre(n);
            let sub: Poly = (0..=n)
                .map(|k| (&one_plus.pow(k) * &one_minus.pow(n - k)).scale(&p.coeff(k as usize)))
                .sum();
            assert_eq!(vowe(n), sub);
        }
    }

    #[test]
    fn euler_operator_examples() {
        assert_eq!(
            euler_operator(&Poly::monomial(int(1), 3), 2),
            Poly::monomial(int(9), 3)
        );
        assert_eq!(euler_operator(&r_poly(2, 2), 1).eval(&int(1)), y6(1, 2, &int(1), 2));
        assert_eq!(euler_operator(&r_poly(2, 2), 1).eval(&int(1)), int(3));
        assert_eq!(euler_operator(&r_poly(2, 2), 2).eval(&int(1)), int(4));
    }

    #[test]
    fn euler_operator_extracts_y6() {
        for lambda in grid() {
            for m in 1..=6 {
                for n in 0..=8 {
                    for p in 0..=3 {
                        assert_eq!(
                            euler_operator(&r_poly(n, p), m).eval(&lambda),
                            y6(m, n, &lambda, p)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mirimanoff_frobenius_examples() {
        assert_eq!(mirimanoff_frobenius_sum(1, 2, &int(0), &int(2)).unwrap(), int(2));
        assert_eq!(mirimanoff_frobenius_sum(0, 3, &int(0), &int(2)).unwrap(), int(7));
        assert_eq!(mirimanoff_frobenius_sum(2, 2, &int(1), &int(3)).unwrap(), int(13));
        assert!(mirimanoff_frobenius_sum(2, 2, &int(1), &int(1)).is_err());
        assert!(mirimanoff_frobenius_sum(2, 2, &int(1), &int(0)).is_err());
    }

    #[test]
    fn mirimanoff_frobenius_matches_direct_sum_and_polynomial() {
        for u in [int(2), int(-1), frac(1, 2), int(3), frac(-1, 2)] {
            for m in 0..=6u32 {
                for n in 0..=6u32 {
                    for x0 in 0..=3u32 {
                        let direct: Rational = (0..n)
                            .map(|j| pow(&u, j) * pow_u((x0 + j) as u64, m))
                            .sum();
                        let closed = mirimanoff_frobenius_sum(m, n, &int(x0 as i64), &u).unwrap();
                        assert_eq!(closed, direct);
                        assert_eq!(mirimanoff(m, n, x0).eval(&u), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn riemann_integral_of_p_poly() {
        for lambda in grid() {
            for m in 0..=6u32 {
                for n in 0..=5u32 {
                    let p = p_poly(m, n, &lambda, 2);
                    let lhs = poly_integral01(&p);
                    let via_coeffs: Rational = (0..=m)
                        .map(|k| binomial(m as u64, k as u64) * y6(k, n, &lambda, 2) / int((m - k + 1) as i64))
                        .sum();
                    assert_eq!(lhs, via_coeffs);
                    let via_sum: Rational = (0..=n)
                        .map(|j| {
                            let c = binomial(n as u64, j as u64);
                            &c * &c * pow(&lambda, j)
                                * (pow_u(j as u64 + 1, m + 1) - pow_u(j as u64, m + 1))
                                / int(m as i64 + 1)
                        })
                        .sum::<Rational>()
                        / factorial(n as u64);
                    assert_eq!(lhs, via_sum);
                }
            }
        }
    }
}
