//! Floating-point backend: recurrence evaluation, Gauss-Jacobi quadrature
//! for the weight `(1-x²)^(λ-1/2)`, and float projections.
//!
//! This is the only place gamma is evaluated at non-integer arguments
//! (Lanczos approximation) and the only backend that can handle irrational
//! λ. For rational λ everything here is cross-checked against the exact
//! backend to tight tolerances.

use crate::error::Error;
use crate::exactnum::rational_to_f64;
use crate::poly::Poly;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Lanczos approximation of Γ(x) (g = 7, 9 coefficients).
pub fn gamma_f64(x: f64) -> f64 {
    const P: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.5203681218851,
        -1259.1392167224028,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507343278686905,
        -0.13857109526572012,
        9.984_369_578_019_572e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // reflection
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma_f64(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = P[0];
    for (i, &p) in P.iter().enumerate().skip(1) {
        acc += p / (x + i as f64);
    }
    let t = x + 7.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// Base moment `μ₀(λ) = B(1/2, λ+1/2) = √π Γ(λ+1/2) / Γ(λ+1)`.
pub fn mu0(lambda: f64) -> f64 {
    SQRT_PI * gamma_f64(lambda + 0.5) / gamma_f64(lambda + 1.0)
}

/// Rising factorial in f64.
pub fn rising_factorial_f64(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a + j as f64))
}

/// Squared norm in `μ₀` units: `<C_n, C_n>/μ₀ = λ (2λ)_n / (n! (n+λ))`.
pub fn norm_ratio_f64(lambda: f64, n: usize) -> f64 {
    let mut fact = 1.0;
    for j in 2..=n {
        fact *= j as f64;
    }
    lambda * rising_factorial_f64(2.0 * lambda, n) / (fact * (n as f64 + lambda))
}

/// `C_n^(λ)(x)` by the forward three-term recurrence.
pub fn eval_gegen_f64(lambda: f64, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * x;
    for m in 2..=n {
        let mf = m as f64;
        let next = (2.0 * x * (mf + lambda - 1.0) * cur - (mf + 2.0 * lambda - 2.0) * prev) / mf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of `C_n^(λ)` by the three-term recurrence in f64
/// (for irrational λ, where the exact backend cannot go).
pub fn gegen_coeffs_f64(lambda: f64, n: usize) -> Vec<f64> {
    let mut prev = vec![1.0f64];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 2.0 * lambda];
    for m in 2..=n {
        let mf = m as f64;
        let mut next = vec![0.0; m + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * (mf + lambda - 1.0) * c / mf;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= (mf + 2.0 * lambda - 2.0) * c / mf;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// A Gauss rule for `∫_{-1}^{1} f(x) (1-x²)^(λ-1/2) dx`.
///
/// Nodes are strictly increasing, symmetric about 0, and interior to
/// (-1, 1); weights are positive, symmetric, and sum to `μ₀(λ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub lambda: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// CSV dump, columns `node,weight`, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("node,weight\n");
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            out.push_str(&format!("{x:.16e},{w:.16e}\n"));
        }
        out
    }
}

/// Gauss rule for the weight `(1-x²)^(λ-1/2)` with `m` nodes, exact for
/// polynomial integrands of degree ≤ 2m-1.
///
/// Golub-Welsch construction: nodes are the eigenvalues of the symmetric
/// tridiagonal recurrence matrix (self-contained implicit QL iteration),
/// polished to machine precision by Newton steps on the monic recurrence
/// polynomial; weights come from the Christoffel sum
/// `w_i = μ₀ / Σ_j q_j(x_i)²` of orthonormal values.
pub fn gauss_jacobi_rule(lambda: f64, m: usize) -> Result<QuadRule, Error> {
    if !lambda.is_finite() || lambda <= -0.5 {
        return Err(Error::InvalidWeight {
            lambda: format!("{lambda}"),
            shift: 0,
        });
    }
    if m == 0 {
        return Err(Error::InvalidInput("node count must be ≥ 1".into()));
    }

    // Monic recurrence: x π_j = π_{j+1} + β_j π_{j-1} with
    // β_j = j (j + 2λ - 1) / (4 (j + λ - 1) (j + λ)); the diagonal is zero
    // because the weight is even.
    let betas: Vec<f64> = (0..m)
        .map(|j| {
            let jf = j as f64;
            jf * (jf + 2.0 * lambda - 1.0) / (4.0 * (jf + lambda - 1.0) * (jf + lambda))
        })
        .collect();

    let mut diag = vec![0.0f64; m];
    let mut off = vec![0.0f64; m]; // off[j] couples j and j+1; off[m-1] unused
    for j in 1..m {
        off[j - 1] = betas[j].sqrt();
    }
    symmetric_tridiagonal_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    let total = mu0(lambda);
    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .map(|x0| {
            // two Newton steps on π_m (the QL estimate is already within
            // a few ulp, so this converges immediately)
            let mut x = x0;
            for _ in 0..2 {
                let (value, slope) = monic_value_and_slope(&betas, m, x);
                if slope != 0.0 {
                    x -= value / slope;
                }
            }
            (x, total / orthonormal_sum_of_squares(&betas, m, x))
        })
        .collect();

    // Enforce the exact symmetry of the even weight.
    let len = pairs.len();
    for i in 0..len / 2 {
        let j = len - 1 - i;
        let x = 0.5 * (pairs[j].0 - pairs[i].0);
        let w = 0.5 * (pairs[i].1 + pairs[j].1);
        pairs[i] = (-x, w);
        pairs[j] = (x, w);
    }
    if len % 2 == 1 {
        pairs[len / 2].0 = 0.0;
    }

    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadRule {
        lambda,
        nodes,
        weights,
    })
}

/// Error-free product: `a·b = hi + lo` exactly (FMA-based).
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let hi = a * b;
    (hi, a.mul_add(b, -hi))
}

/// Error-free sum: `a + b = hi + lo` exactly (Knuth, branch-free).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let hi = a + b;
    let v = hi - a;
    (hi, (a - (hi - v)) + (b - v))
}

/// [`two_sum`] assuming `|a| ≥ |b|`.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let hi = a + b;
    (hi, b - (hi - a))
}

/// An unevaluated sum of two floats (double-double), giving roughly 32
/// significant digits. Only the handful of operations the projection
/// pipeline needs.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    fn add_f64(self, x: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, x);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    fn mul_f64(self, x: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * x);
        Dd { hi, lo }
    }

    fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let (hi, lo) = quick_two_sum(p1, p2 + self.hi * other.lo + self.lo * other.hi);
        Dd { hi, lo }
    }

    fn div_f64(self, x: f64) -> Dd {
        let q1 = self.hi / x;
        let (p1, p2) = two_prod(q1, x);
        let q2 = ((self.hi - p1) + (self.lo - p2)) / x;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

/// Value and derivative of the degree-`m` monic orthogonal polynomial at
/// `x`, via `π_{j+1} = x π_j - β_j π_{j-1}`.
fn monic_value_and_slope(betas: &[f64], m: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut dprev = 0.0;
    if m == 0 {
        return (prev, dprev);
    }
    let mut cur = x;
    let mut dcur = 1.0;
    for beta in &betas[1..m] {
        let next = x * cur - beta * prev;
        let dnext = cur + x * dcur - beta * dprev;
        prev = cur;
        dprev = dcur;
        cur = next;
        dcur = dnext;
    }
    (cur, dcur)
}

/// `Σ_{j=0}^{m-1} q_j(x)²` for the orthonormal family of the normalized
/// weight (`q_0 = 1`, `√β_{j+1} q_{j+1} = x q_j - √β_j q_{j-1}`).
fn orthonormal_sum_of_squares(betas: &[f64], m: usize, x: f64) -> f64 {
    let mut prev = 0.0f64;
    let mut cur = 1.0f64;
    let mut sum = 1.0f64;
    for j in 1..m {
        let sb_prev = if j == 1 { 0.0 } else { betas[j - 1].sqrt() };
        let next = (x * cur - sb_prev * prev) / betas[j].sqrt();
        prev = cur;
        cur = next;
        sum += cur * cur;
    }
    sum
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit-QL
/// iteration with Wilkinson shifts. `d` holds the diagonal, `e` the
/// sub-diagonal in `e[0..n-1]`; eigenvalues land in `d`, unordered.
fn symmetric_tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) -> Result<(), Error> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            // find the first negligible sub-diagonal element at or after l
            let mut m = l;
            while m < n - 1 {
                let scale = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::InvalidInput(
                    "tridiagonal eigensolver failed to converge".into(),
                ));
            }

            // Wilkinson shift
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));

            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // deflate
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Projection coefficients of a float-coefficient polynomial onto
/// `{C_k^(λ)}` by quadrature: `d_k = ∫ p C_k w / h_k`, with one rule sized
/// to integrate every product `p · C_k` (k ≤ n) exactly.
pub fn float_project(coeffs: &[f64], lambda: f64, n: usize) -> Result<Vec<f64>, Error> {
    if !lambda.is_finite() || lambda <= -0.5 || lambda == 0.0 {
        return Err(Error::InvalidWeight {
            lambda: format!("{lambda}"),
            shift: 0,
        });
    }
    let deg = coeffs.len().saturating_sub(1);
    let rule = gauss_jacobi_rule(lambda, (deg + n) / 2 + 1)?;
    let m = rule.len();

    // Extracting a small trailing coefficient from a large polynomial is a
    // heavily cancelling functional: plain f64 evaluation of the dot
    // products loses most of the 1e-10 budget. The nodal work (basis
    // recurrence, Horner, component peeling, dot products) therefore runs
    // in double-double; peeling each component as it is found is exact for
    // the rule, which integrates every basis product exactly.
    let mut basis: Vec<Vec<Dd>> = Vec::with_capacity(n + 1);
    basis.push(vec![Dd::from(1.0); m]);
    if n >= 1 {
        basis.push(
            rule.nodes
                .iter()
                .map(|&x| Dd::from(2.0 * lambda).mul_f64(x))
                .collect(),
        );
    }
    for k in 2..=n {
        let kf = k as f64;
        let row = (0..m)
            .map(|i| {
                let x = rule.nodes[i];
                basis[k - 1][i]
                    .mul_f64(2.0 * (kf + lambda - 1.0))
                    .mul_f64(x)
                    .sub(basis[k - 2][i].mul_f64(kf + 2.0 * lambda - 2.0))
                    .div_f64(kf)
            })
            .collect();
        basis.push(row);
    }

    let total = mu0(lambda);
    let inv_norms: Vec<f64> = (0..=n)
        .map(|k| 1.0 / (total * norm_ratio_f64(lambda, k)))
        .collect();

    let mut residual: Vec<Dd> = rule
        .nodes
        .iter()
        .map(|&x| {
            let mut acc = Dd::from(0.0);
            for &c in coeffs.iter().rev() {
                acc = acc.mul_f64(x).add_f64(c);
            }
            acc
        })
        .collect();

    let mut d = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut num = Dd::from(0.0);
        for i in 0..m {
            num = num.add(residual[i].mul(basis[k][i]).mul_f64(rule.weights[i]));
        }
        let dk = num.to_f64() * inv_norms[k];
        for i in 0..m {
            residual[i] = residual[i].sub(basis[k][i].mul_f64(dk));
        }
        d.push(dk);
    }
    Ok(d)
}

/// [`float_project`] of an exact polynomial (coefficients rounded to f64).
pub fn float_project_poly(p: &Poly, lambda: f64, n: usize) -> Result<Vec<f64>, Error> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(rational_to_f64).collect();
    float_project(&coeffs, lambda, n)
}

/// Float evaluation of the product-linearization closed form for
/// `C_{n-k} · C_k` — the leading constant is `2^(λ+1)` when `as_printed`
/// and 2 otherwise (the Pochhammer reading is used in both cases). This is
/// how the as-printed variant is assessed for non-integer λ, where `2^(λ+1)`
/// has no exact rational value.
pub fn product_coeffs_f64(
    lambda: f64,
    n: usize,
    k: usize,
    as_printed: bool,
) -> Result<Vec<f64>, Error> {
    if k > n {
        return Err(Error::InvalidPair { n, k });
    }
    let leading = if as_printed {
        2f64.powf(lambda + 1.0)
    } else {
        2.0
    };
    let two_lam = 2.0 * lambda;
    let half = lambda + 0.5;
    let binom = |a: f64, j: usize| -> f64 {
        let mut acc = 1.0;
        for i in 0..j {
            acc *= (a - i as f64) / (i as f64 + 1.0);
        }
        acc
    };
    let front = binom(two_lam + (n - k) as f64 - 1.0, n - k) * binom(two_lam + k as f64 - 1.0, k);
    let mut fact = vec![1.0f64; n + 2];
    for i in 1..=n + 1 {
        fact[i] = fact[i - 1] * i as f64;
    }
    let mut d = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let mut sum = 0.0;
        for p in r..=n {
            let mut m_sum = 0.0;
            for m in 0..=p {
                if p - m > n - k || m > k {
                    continue;
                }
                m_sum += binom((n - k) as f64, p - m)
                    * binom(k as f64, m)
                    * rising_factorial_f64(two_lam + k as f64, m)
                    * rising_factorial_f64(two_lam + (n - k) as f64, p - m)
                    / (rising_factorial_f64(half, m) * rising_factorial_f64(half, p - m));
            }
            let sign = if (p + r) % 2 == 0 { 1.0 } else { -1.0 };
            sum += m_sum * sign * fact[p] * rising_factorial_f64(half, p)
                / (fact[p - r] * rising_factorial_f64(two_lam, r + p + 1));
        }
        d.push(leading * (r as f64 + lambda) * front * sum);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio, GegenParam};
    use crate::gegenbauer::gegen_recurrence;

    #[test]
    fn gamma_reference_values() {
        assert!((gamma_f64(1.0) - 1.0).abs() < 1e-14);
        assert!((gamma_f64(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma_f64(0.5) - SQRT_PI).abs() < 1e-14);
        assert!((gamma_f64(1.5) - SQRT_PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn eval_examples() {
        assert!((eval_gegen_f64(1.0, 2, 1.0) - 3.0).abs() < 1e-14);
        assert!((eval_gegen_f64(0.5, 3, 0.5) + 0.4375).abs() < 1e-14);
        assert!((eval_gegen_f64(7.7, 0, 0.3) - 1.0).abs() == 0.0);
    }

    #[test]
    fn eval_matches_exact_up_to_degree_30() {
        for lam in [ratio(1, 2), rat(1), ratio(3, 2), ratio(7, 3)] {
            let param = GegenParam::new(lam.clone()).unwrap();
            let lf = rational_to_f64(&lam);
            for n in 0..=30usize {
                let exact_poly = gegen_recurrence(&param, n);
                for xr in [rat(0), ratio(1, 2), ratio(-3, 4), rat(1), ratio(9, 10)] {
                    let x = rational_to_f64(&xr);
                    let exact = rational_to_f64(&exact_poly.poly().eval(&xr));
                    let float = eval_gegen_f64(lf, n, x);
                    // condition-aware scale: Σ |c_i| |x|^i
                    let scale: f64 = exact_poly
                        .poly()
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, c)| rational_to_f64(c).abs() * x.abs().powi(i as i32))
                        .sum();
                    assert!(
                        (float - exact).abs() <= 1e-12 * scale.max(1.0),
                        "λ={lam} n={n} x={x}: {float} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_as_printed_at_non_integer_lambda() {
        // 2^(λ+1) has no exact rational value at λ = 3/2; the float route
        // assesses the as-printed constant there: it overshoots the exact
        // corrected coefficients by 2^λ, to 1e-10 relative.
        use crate::expansions::{product_coeffs, ProductVariant};
        let param = GegenParam::new(ratio(3, 2)).unwrap();
        let lambda = 1.5f64;
        for n in 0..=5usize {
            for k in 0..=n {
                let exact = product_coeffs(&param, n, k, ProductVariant::Corrected).unwrap();
                let printed = product_coeffs_f64(lambda, n, k, true).unwrap();
                let corrected = product_coeffs_f64(lambda, n, k, false).unwrap();
                for r in 0..=n {
                    let e = rational_to_f64(&exact.d[r]);
                    if e == 0.0 {
                        assert!(printed[r].abs() < 1e-10, "n={n} k={k} r={r}");
                        continue;
                    }
                    assert!(
                        (corrected[r] - e).abs() <= 1e-10 * e.abs(),
                        "corrected n={n} k={k} r={r}"
                    );
                    let ratio = printed[r] / e;
                    assert!(
                        (ratio - 2f64.powf(lambda)).abs() <= 1e-10 * 2f64.powf(lambda),
                        "as-printed overshoot n={n} k={k} r={r}: {ratio}"
                    );
                }
            }
        }
        assert!(matches!(
            product_coeffs_f64(lambda, 1, 2, true),
            Err(Error::InvalidPair { .. })
        ));
    }

    #[test]
    fn two_point_legendre() {
        let rule = gauss_jacobi_rule(0.5, 2).unwrap();
        assert!((rule.nodes[0] + 1.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!((rule.nodes[1] - 1.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!((rule.weights[0] - 1.0).abs() < 1e-13);
        assert!((rule.weights[1] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn one_point_chebyshev_u() {
        let rule = gauss_jacobi_rule(1.0, 1).unwrap();
        assert_eq!(rule.nodes, vec![0.0]);
        assert!((rule.weights[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn invalid_weight_rejected() {
        assert!(matches!(
            gauss_jacobi_rule(-0.6, 2),
            Err(Error::InvalidWeight { .. })
        ));
    }

    #[test]
    fn odd_integrands_vanish() {
        for lam in [0.25, 1.0, 2.7] {
            let rule = gauss_jacobi_rule(lam, 6).unwrap();
            assert!(rule.integrate(|x| x).abs() < 1e-14);
            assert!(rule.integrate(|x| x * x * x).abs() < 1e-14);
        }
    }

    #[test]
    fn rule_shape_invariants() {
        for lam in [-0.3, 0.5, 1.0, 2.0, std::f64::consts::SQRT_2] {
            for m in 1..=12 {
                let rule = gauss_jacobi_rule(lam, m).unwrap();
                assert_eq!(rule.len(), m);
                for w in &rule.weights {
                    assert!(*w > 0.0);
                }
                for pair in rule.nodes.windows(2) {
                    assert!(pair[0] < pair[1]);
                }
                for (i, x) in rule.nodes.iter().enumerate() {
                    assert!(x.abs() < 1.0);
                    assert_eq!(*x, -rule.nodes[m - 1 - i], "symmetric nodes");
                }
                let total: f64 = rule.weights.iter().sum();
                assert!((total - mu0(lam)).abs() <= 1e-12 * mu0(lam));
            }
        }
    }

    #[test]
    fn quadrature_matches_exact_moments() {
        // ∫ x^{2j} w dx / μ₀ = (1/2)_j / (λ+1)_j, checked against the rule
        for lam in [0.5, 1.5, 2.0] {
            let rule = gauss_jacobi_rule(lam, 8).unwrap();
            for j in 0..=7 {
                let got = rule.integrate(|x| x.powi(2 * j as i32)) / mu0(lam);
                let expect = rising_factorial_f64(0.5, j) / rising_factorial_f64(lam + 1.0, j);
                assert!((got - expect).abs() <= 1e-12 * expect.abs().max(1.0));
            }
        }
    }

    #[test]
    fn float_projection_examples() {
        let d = float_project(&[0.0, 0.0, 1.0], 1.0, 2).unwrap();
        assert!((d[0] - 0.25).abs() < 1e-13);
        assert!(d[1].abs() < 1e-13);
        assert!((d[2] - 0.25).abs() < 1e-13);

        // projecting C_3 returns the unit vector even at irrational λ
        let lam = std::f64::consts::SQRT_2;
        let c3 = gegen_coeffs_f64(lam, 3);
        let d = float_project(&c3, lam, 3).unwrap();
        for (k, dk) in d.iter().enumerate() {
            let expect = if k == 3 { 1.0 } else { 0.0 };
            assert!((dk - expect).abs() < 1e-10, "k={k}: {dk}");
        }
    }

    #[test]
    fn csv_shape() {
        let rule = gauss_jacobi_rule(0.5, 2).unwrap();
        let csv = rule.to_csv();
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "node,weight");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("-5.77350269189625"));
    }
}
