//! Exact Bernoulli and Euler numbers and polynomials.
//!
//! Both families are generated from their defining recurrences rather
//! than by power-series division, which keeps everything rational:
//! `Σ_{k=0}^{n} binom(n+1, k) B_k = 0` for `n ≥ 1`, and
//! `Σ_k binom(n, k) E_k + E_n = 0` for `n ≥ 1` with `E_0 = 1`.
//!
//! The `E_n` here are the Euler-polynomial values at 0 (so `E_1 = -1/2`),
//! not the integer secant numbers.

use num_traits::{One, Zero};

use crate::exactnum::{binom_rational, rat, Rational};
use crate::poly::Poly;

/// Exact Bernoulli numbers `B_0 .. B_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
}

impl BernoulliCache {
    pub fn get(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }
}

/// Exact Euler numbers `E_n = E_n(0)` for `n = 0 .. N`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerCache {
    numbers: Vec<Rational>,
}

impl EulerCache {
    pub fn get(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }
}

pub fn bernoulli_numbers(n_max: usize) -> BernoulliCache {
    let mut numbers = vec![Rational::one()];
    for n in 1..=n_max {
        // B_n = -1/(n+1) Σ_{k<n} binom(n+1, k) B_k
        let mut acc = Rational::zero();
        for (k, bk) in numbers.iter().enumerate() {
            acc += binom_rational(&rat(n as i64 + 1), k) * bk;
        }
        numbers.push(-acc / rat(n as i64 + 1));
    }
    BernoulliCache { numbers }
}

pub fn euler_numbers(n_max: usize) -> EulerCache {
    let mut numbers = vec![Rational::one()];
    for n in 1..=n_max {
        // 2 E_n = -Σ_{k<n} binom(n, k) E_k
        let mut acc = Rational::zero();
        for (k, ek) in numbers.iter().enumerate() {
            acc += binom_rational(&rat(n as i64), k) * ek;
        }
        numbers.push(-acc / rat(2));
    }
    EulerCache { numbers }
}

/// `B_n(x) = Σ_l binom(n, l) B_{n-l} x^l`, exactly.
pub fn bernoulli_poly(n: usize) -> Poly {
    let cache = bernoulli_numbers(n);
    umbral_poly(n, cache.numbers())
}

/// `E_n(x) = Σ_l binom(n, l) E_{n-l} x^l`, exactly.
pub fn euler_poly(n: usize) -> Poly {
    let cache = euler_numbers(n);
    umbral_poly(n, cache.numbers())
}

fn umbral_poly(n: usize, numbers: &[Rational]) -> Poly {
    let coeffs = (0..=n)
        .map(|l| binom_rational(&rat(n as i64), l) * &numbers[n - l])
        .collect();
    Poly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn bernoulli_number_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(*b.get(0), rat(1));
        assert_eq!(*b.get(1), ratio(-1, 2));
        assert_eq!(*b.get(2), ratio(1, 6));
        assert_eq!(*b.get(3), rat(0));
        assert_eq!(*b.get(4), ratio(-1, 30));
        assert_eq!(*b.get(12), ratio(-691, 2730));
        // odd vanishing
        for m in 1..=5 {
            assert_eq!(*b.get(2 * m + 1), rat(0));
        }
    }

    #[test]
    fn euler_number_values() {
        let e = euler_numbers(6);
        assert_eq!(*e.get(0), rat(1));
        assert_eq!(*e.get(1), ratio(-1, 2));
        assert_eq!(*e.get(2), rat(0));
        assert_eq!(*e.get(3), ratio(1, 4));
        assert_eq!(*e.get(4), rat(0));
        assert_eq!(*e.get(5), ratio(-1, 2));
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(
            bernoulli_poly(1),
            Poly::from_coeffs(vec![ratio(-1, 2), rat(1)])
        );
        assert_eq!(
            bernoulli_poly(2),
            Poly::from_coeffs(vec![ratio(1, 6), rat(-1), rat(1)])
        );
        assert_eq!(euler_poly(1), Poly::from_coeffs(vec![ratio(-1, 2), rat(1)]));
        assert_eq!(
            euler_poly(2),
            Poly::from_coeffs(vec![rat(0), rat(-1), rat(1)])
        );
    }

    #[test]
    fn difference_identities() {
        // B_n(x+1) - B_n(x) = n x^{n-1}, E_n(x+1) + E_n(x) = 2 x^n
        for n in 1..=20usize {
            let b = bernoulli_poly(n);
            let shifted = b.compose_affine(&rat(1), &rat(1));
            assert_eq!(
                &shifted - &b,
                Poly::monomial(rat(n as i64), n - 1),
                "Bernoulli difference at n={n}"
            );
            let e = euler_poly(n);
            let shifted = e.compose_affine(&rat(1), &rat(1));
            assert_eq!(
                &shifted + &e,
                Poly::monomial(rat(2), n),
                "Euler sum at n={n}"
            );
        }
    }

    #[test]
    fn derivative_identities() {
        for n in 1..=12usize {
            assert_eq!(
                bernoulli_poly(n).differentiate(1),
                bernoulli_poly(n - 1).scale(&rat(n as i64))
            );
            assert_eq!(
                euler_poly(n).differentiate(1),
                euler_poly(n - 1).scale(&rat(n as i64))
            );
        }
    }
}
