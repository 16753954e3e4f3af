//! Construction of the Gegenbauer (ultraspherical) polynomials `C_n^(λ)`
//! by four independent routes, plus the structural identities tying them
//! together: parity, the defining second-order ODE, special values, the
//! derivative ladder, and the generating-series values.
//!
//! The four routes are deliberately redundant — agreement between them is
//! one of the strongest checks this crate performs:
//! 1. the explicit hypergeometric-style sum in powers of `(x-1)/2`,
//! 2. the three-term recurrence `n C_n = 2x(n+λ-1) C_{n-1} - (n+2λ-2) C_{n-2}`,
//! 3. the normalized symmetric Jacobi polynomial `P_n^(λ-1/2, λ-1/2)`,
//! 4. the Rodrigues form, differentiated symbolically on weighted pairs
//!    `(poly, offset)` so fractional powers never appear.

use num_traits::Zero;

use crate::error::Error;
use crate::exactnum::{
    binom_rational, factorial, rat, ratio, rising_factorial, two_pow, GegenParam, Rational,
};
use crate::poly::Poly;

/// Which construction produced a [`GegenPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    ExplicitSum,
    Recurrence,
    JacobiForm,
    GeneratingSeries,
}

/// A fully constructed `C_n^(λ)` with its provenance.
///
/// Construction validates the two special-value invariants: the leading
/// coefficient is `2^n binom(λ+n-1, n)` and the value at 1 is
/// `binom(n+2λ-1, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GegenPoly {
    param: GegenParam,
    n: usize,
    poly: Poly,
    route: Route,
}

impl GegenPoly {
    fn checked(param: GegenParam, n: usize, poly: Poly, route: Route) -> Self {
        debug_assert_eq!(poly.degree(), Some(n), "degree must be exactly n");
        debug_assert_eq!(
            poly.leading_coeff(),
            two_pow(n) * binom_rational(&(param.lambda() + rat(n as i64) - rat(1)), n),
            "leading coefficient invariant"
        );
        debug_assert_eq!(
            poly.eval(&rat(1)),
            binom_rational(&(param.lambda() * rat(2) + rat(n as i64) - rat(1)), n),
            "value at x = 1 invariant"
        );
        GegenPoly {
            param,
            n,
            poly,
            route,
        }
    }

    pub fn param(&self) -> &GegenParam {
        &self.param
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }
}

/// `C_n^(λ)` from the explicit finite sum
/// `binom(n+2λ-1, n) Σ_k binom(n,k) (2λ+n)_k / (λ+1/2)_k ((x-1)/2)^k`.
pub fn gegen_explicit(param: &GegenParam, n: usize) -> GegenPoly {
    let lam = param.lambda();
    let half_shift = lam + ratio(1, 2);
    let two_lam_n = lam * rat(2) + rat(n as i64);

    // powers of (x-1)/2 built incrementally
    let base = Poly::from_coeffs(vec![ratio(-1, 2), ratio(1, 2)]);
    let mut pow_k = Poly::one();
    let mut sum = Poly::zero();
    for k in 0..=n {
        let c = binom_rational(&rat(n as i64), k) * rising_factorial(&two_lam_n, k)
            / rising_factorial(&half_shift, k);
        sum = &sum + &pow_k.scale(&c);
        if k < n {
            pow_k = &pow_k * &base;
        }
    }
    let front = binom_rational(&(lam * rat(2) + rat(n as i64) - rat(1)), n);
    GegenPoly::checked(param.clone(), n, sum.scale(&front), Route::ExplicitSum)
}

/// `C_n^(λ)` by the three-term recurrence
/// `C_0 = 1`, `C_1 = 2λx`, `n C_n = 2x(n+λ-1) C_{n-1} - (n+2λ-2) C_{n-2}`.
pub fn gegen_recurrence(param: &GegenParam, n: usize) -> GegenPoly {
    let lam = param.lambda();
    let mut prev = Poly::one(); // C_0
    if n == 0 {
        return GegenPoly::checked(param.clone(), 0, prev, Route::Recurrence);
    }
    let mut cur = Poly::monomial(lam * rat(2), 1); // C_1
    for m in 2..=n {
        let a = (rat(m as i64) + lam - rat(1)) * rat(2) / rat(m as i64);
        let b = (rat(m as i64) + lam * rat(2) - rat(2)) / rat(m as i64);
        let next = &Poly::monomial(a, 1) * &cur - prev.scale(&b);
        prev = cur;
        cur = next;
    }
    GegenPoly::checked(param.clone(), n, cur, Route::Recurrence)
}

/// The Jacobi polynomial `P_n^(α,β)` from its explicit double-endpoint form
/// `Σ_k binom(n+α, n-k) binom(n+β, k) ((x-1)/2)^k ((x+1)/2)^{n-k}`.
pub fn jacobi_explicit(alpha: &Rational, beta: &Rational, n: usize) -> Poly {
    let minus = Poly::from_coeffs(vec![ratio(-1, 2), ratio(1, 2)]); // (x-1)/2
    let plus = Poly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]); // (x+1)/2
    let mut minus_pows = vec![Poly::one()];
    let mut plus_pows = vec![Poly::one()];
    for _ in 0..n {
        minus_pows.push(minus_pows.last().unwrap() * &minus);
        plus_pows.push(plus_pows.last().unwrap() * &plus);
    }
    let mut sum = Poly::zero();
    for k in 0..=n {
        let c = binom_rational(&(rat(n as i64) + alpha), n - k)
            * binom_rational(&(rat(n as i64) + beta), k);
        sum = &sum + &(&minus_pows[k] * &plus_pows[n - k]).scale(&c);
    }
    sum
}

/// `C_n^(λ)` as the ratio-normalized symmetric Jacobi polynomial:
/// `[binom(n+2λ-1, n) / binom(n+λ-1/2, n)] · P_n^(λ-1/2, λ-1/2)`.
pub fn gegen_from_jacobi(param: &GegenParam, n: usize) -> Result<GegenPoly, Error> {
    let lam = param.lambda();
    let upper = rat(n as i64) + lam - ratio(1, 2);
    let denom = binom_rational(&upper, n);
    if denom.is_zero() {
        return Err(Error::DegenerateRatio {
            upper: upper.to_string(),
            n,
        });
    }
    let ratio_const = binom_rational(&(lam * rat(2) + rat(n as i64) - rat(1)), n) / denom;
    let a = lam - ratio(1, 2);
    let jac = jacobi_explicit(&a, &a, n);
    Ok(GegenPoly::checked(
        param.clone(),
        n,
        jac.scale(&ratio_const),
        Route::JacobiForm,
    ))
}

/// Taylor coefficients in `t` of the generating series `(1 - 2x₀t + t²)^(-λ)`
/// at a rational point `x₀`, i.e. the values `[C_0^(λ)(x₀), …, C_N^(λ)(x₀)]`.
///
/// Expanded exactly as the binomial series of `(1-u)^(-λ)` with
/// `u = 2x₀t - t²`: since `u` has valuation 1 in `t`, only `u^m` with
/// `m ≤ N` can reach degree `N`.
pub fn gegen_series_coeff(param: &GegenParam, x0: &Rational, n_max: usize) -> Vec<Rational> {
    let lam = param.lambda();
    let u = Poly::from_coeffs(vec![Rational::zero(), x0 * rat(2), rat(-1)]);
    let mut u_pow = Poly::one();
    let mut series = Poly::zero();
    for m in 0..=n_max {
        let c = rising_factorial(lam, m) / factorial(m);
        series = &series + &u_pow.scale(&c);
        if m < n_max {
            u_pow = (&u_pow * &u).truncate(n_max);
        }
    }
    (0..=n_max).map(|i| series.coeff(i)).collect()
}

/// Scale of the k-step derivative ladder: `2^k (λ)_k`, the constant forced
/// by iterating the single-step rule `d/dx C_n^(λ) = 2λ C_{n-1}^(λ+1)`.
pub fn derivative_ladder_scale(param: &GegenParam, k: usize) -> Rational {
    two_pow(k) * rising_factorial(param.lambda(), k)
}

/// The literal-power constant `2^k λ^k` sometimes quoted for the k-step
/// ladder; wrong for k ≥ 2 (the errata engine documents this).
pub fn derivative_ladder_scale_literal(param: &GegenParam, k: usize) -> Rational {
    two_pow(k) * crate::exactnum::pow_rational(param.lambda(), k as i64)
}

/// The k-th derivative of `C_n^(λ)` computed through the ladder
/// `d^k/dx^k C_n^(λ) = 2^k (λ)_k C_{n-k}^(λ+k)` and cross-checked against
/// direct formal differentiation.
pub fn gegen_derivative(g: &GegenPoly, k: usize) -> Result<Poly, Error> {
    if k > g.n {
        return Err(Error::DegreeUnderflow {
            order: k,
            degree: g.n,
        });
    }
    if k == 0 {
        return Ok(g.poly.clone());
    }
    let shifted = g.param.shifted(k);
    let ladder = gegen_recurrence(&shifted, g.n - k)
        .into_poly()
        .scale(&derivative_ladder_scale(&g.param, k));
    let direct = g.poly.differentiate(k);
    assert_eq!(
        ladder, direct,
        "derivative ladder must match formal derivative"
    );
    Ok(ladder)
}

/// A pair `(poly, offset)` standing for `(1-x²)^(λ-1/2+offset) · poly`.
///
/// The product rule closes within the type as long as `offset > 0`:
/// each derivative lowers the offset by exactly one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedForm {
    poly: Poly,
    exponent_offset: usize,
}

impl WeightedForm {
    pub fn new(poly: Poly, exponent_offset: usize) -> Self {
        WeightedForm {
            poly,
            exponent_offset,
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn offset(&self) -> usize {
        self.exponent_offset
    }

    /// One symbolic derivative:
    /// `d/dx [(1-x²)^(λ-1/2+j) p] = (1-x²)^(λ-1/2+j-1) [(1-x²) p' - (2λ-1+2j) x p]`.
    ///
    /// Panics if the offset is already zero (a derivative would leave the
    /// closed family of weighted polynomials).
    pub fn differentiate(&self, param: &GegenParam) -> WeightedForm {
        assert!(
            self.exponent_offset > 0,
            "WeightedForm derivative requires a positive weight offset"
        );
        let one_minus_x2 = Poly::from_coeffs(vec![rat(1), rat(0), rat(-1)]);
        let exponent = param.lambda() - ratio(1, 2) + rat(self.exponent_offset as i64);
        let term1 = &one_minus_x2 * &self.poly.differentiate(1);
        let term2 = Poly::monomial(exponent * rat(2), 1);
        WeightedForm {
            poly: &term1 - &(&term2 * &self.poly),
            exponent_offset: self.exponent_offset - 1,
        }
    }
}

/// `C_n^(λ)` from the Rodrigues form: apply `n` symbolic derivatives to
/// `(1-x²)^(n+λ-1/2)`, peel off the residual weight `(1-x²)^(λ-1/2)`, and
/// scale by `(-2)^n (λ)_n / (n! (n+2λ)_n)`. The result is cross-checked
/// against the explicit sum.
pub fn rodrigues_form(param: &GegenParam, n: usize) -> Poly {
    let mut form = WeightedForm::new(Poly::one(), n);
    for _ in 0..n {
        form = form.differentiate(param);
    }
    debug_assert_eq!(form.offset(), 0);
    let lam = param.lambda();
    let sign = crate::exactnum::neg_one_pow(n);
    let constant = sign * two_pow(n) * rising_factorial(lam, n)
        / (factorial(n) * rising_factorial(&(lam * rat(2) + rat(n as i64)), n));
    let result = form.poly().scale(&constant);
    debug_assert_eq!(result, *gegen_explicit(param, n).poly());
    result
}

/// Residual of the defining ODE `(1-x²) y'' - (2λ+1) x y' + n(n+2λ) y`
/// applied to an arbitrary candidate polynomial. Identically zero exactly
/// when the candidate solves the degree-n equation.
pub fn ode_residual_poly(param: &GegenParam, n: usize, candidate: &Poly) -> Poly {
    let lam = param.lambda();
    let one_minus_x2 = Poly::from_coeffs(vec![rat(1), rat(0), rat(-1)]);
    let term1 = &one_minus_x2 * &candidate.differentiate(2);
    let term2 = &Poly::monomial(lam * rat(2) + rat(1), 1) * &candidate.differentiate(1);
    let eigen = rat(n as i64) * (rat(n as i64) + lam * rat(2));
    let term3 = candidate.scale(&eigen);
    &(&term1 - &term2) + &term3
}

/// ODE residual of a constructed Gegenbauer polynomial (must be zero).
pub fn ode_residual(g: &GegenPoly) -> Poly {
    ode_residual_poly(&g.param, g.n, &g.poly)
}
