//! Exact arithmetic for finite sums of powers of binomial coefficients.
//!
//! The central object is the number family
//!
//! ```text
//! y6(m, n; lambda, p) = (1/n!) * sum_{k=0}^{n} C(n,k)^p * k^m * lambda^k
//! ```
//!
//! together with the polynomials `P(x; m, n; lambda, p)` it generates and the
//! classical families it connects to (Bernoulli, Euler, Apostol, Stirling,
//! Catalan, Daehee, Changhee, Franel, Legendre, Mirimanoff, Frobenius–Euler).
//! Every value is an exact [`Rational`]; nothing is computed in floating point.
//!
//! ```
//! use binomial_sums::{y6, franel, rational::int};
//!
//! // Franel numbers: sum_k C(n,k)^3
//! let v: Vec<_> = (0..5).map(|n| franel(3, 0, n, &int(1))).collect();
//! assert_eq!(v, [1, 2, 10, 56, 346].map(int));
//!
//! assert_eq!(y6(0, 3, &int(1), 3).to_string(), "28/3");
//! ```

pub mod classic;
pub mod error;
pub mod gamma;
pub mod hypergeom;
mod memo;
pub mod poly;
pub mod ppoly;
pub mod rational;
pub mod series;
pub mod y6;

pub use classic::{
    apostol_bernoulli, apostol_euler, apostol_euler_order, bernoulli, bernoulli_poly_order,
    classic_sequence, euler_at_zero, euler_poly_order, frobenius_euler, legendre, mirimanoff,
    stirling1, stirling2, y1, y_seq, FamilyTag,
};
pub use error::{Error, Result};
pub use gamma::{gamma_half, GammaHalfValue};
pub use hypergeom::{ogf_series, pfq_terminating, y6_hyper, OgfCase, PfqSpec};
pub use poly::{poly_integral01, Poly};
pub use ppoly::{
    euler_operator, fermionic, mirimanoff_frobenius_sum, p_poly, power_sum_closed, r_poly,
    raw_sum_poly, volkenborn, vowe, PPolyKey,
};
pub use rational::{binomial_general, parse_rational, pochhammer, Rational};
pub use series::{egf_product, egf_reciprocal, EgfSeries};
/// Runs the guide's snippets as doc-tests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    struct ExactArithmetic;
    #[doc = include_str!("../../../book/src/y6-family.md")]
    struct Y6Family;
    #[doc = include_str!("../../../book/src/golombek.md")]
    struct Golombek;
    #[doc = include_str!("../../../book/src/classical.md")]
    struct Classical;
    #[doc = include_str!("../../../book/src/polynomials.md")]
    struct Polynomials;
    #[doc = include_str!("../../../book/src/hypergeometric.md")]
    struct Hypergeometric;
    #[doc = include_str!("../../../README.md")]
    struct Readme;
}

pub use y6::{b_ogf, bnk, franel, moment, t_poly, y6, y6_egf, RationalFunction, Y6Key};
