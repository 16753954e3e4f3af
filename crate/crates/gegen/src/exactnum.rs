//! Arbitrary-precision rational scalars and the Pochhammer / gamma-ratio
//! combinatorics that keep every coefficient in this crate exactly
//! computable.
//!
//! Gamma is never evaluated at a non-integer argument here: every gamma
//! quotient that appears downstream is algebraically reduced to a rising
//! factorial with integer offset first, so the whole pipeline stays inside
//! the rationals. Floating-point gamma lives in [`crate::numeric`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The scalar used everywhere in the exact backend.
///
/// Stored canonically (positive denominator, reduced), so equality is
/// structural and arithmetic is exact. Serializes as `"num/den"`, or
/// `"num"` when the denominator is 1.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact rational from a `"num/den"` or `"num"` string.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| Error::InvalidInput(format!("cannot parse rational {s:?}: {e}")))
}

/// The basis order λ, validated once at construction: λ > -1/2 and λ ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GegenParam {
    lambda: Rational,
}

impl GegenParam {
    pub fn new(lambda: Rational) -> Result<Self, Error> {
        if lambda.is_zero() || lambda <= ratio(-1, 2) {
            return Err(Error::InvalidParam {
                lambda: lambda.to_string(),
            });
        }
        Ok(GegenParam { lambda })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// λ as f64, for handing off to the float backend.
    pub fn lambda_f64(&self) -> f64 {
        rational_to_f64(&self.lambda)
    }

    /// The shifted parameter λ + k (always valid: λ > -1/2 and k ≥ 1 give λ + k > 1/2).
    pub fn shifted(&self, k: usize) -> GegenParam {
        GegenParam {
            lambda: &self.lambda + rat(k as i64),
        }
    }

    /// Whether λ is an integer.
    pub fn is_integer(&self) -> bool {
        self.lambda.is_integer()
    }
}

impl std::fmt::Display for GegenParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.lambda)
    }
}

/// Convert an exact rational to the nearest f64.
pub fn rational_to_f64(r: &Rational) -> f64 {
    // Scale into i128 range first so huge numerators do not overflow the
    // naive numer/denom division.
    let numer = r.numer();
    let denom = r.denom();
    if let (Some(n), Some(d)) = (to_i128(numer), to_i128(denom)) {
        return n as f64 / d as f64;
    }
    // Fall back to string round-trip through f64 parsing on the decimal
    // expansion; adequate for the magnitudes used in the float backend.
    let scaled = (r * BigRational::from_integer(BigInt::from(1i64 << 60))).trunc();
    let approx = bigint_to_f64(scaled.numer());
    approx / (1i64 << 60) as f64
}

fn to_i128(n: &BigInt) -> Option<i128> {
    let (sign, digits) = n.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0] as i128 * sign_factor(sign)),
        2 => {
            let mag = (digits[1] as u128) << 64 | digits[0] as u128;
            if mag <= i128::MAX as u128 {
                Some(mag as i128 * sign_factor(sign))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn sign_factor(sign: num_bigint::Sign) -> i128 {
    if sign == num_bigint::Sign::Minus {
        -1
    } else {
        1
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    let mut out = 0.0f64;
    let (sign, digits) = n.to_u64_digits();
    for &d in digits.iter().rev() {
        out = out * 1.8446744073709552e19 + d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -out
    } else {
        out
    }
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// Rising factorial (Pochhammer symbol) `(a)_k = a (a+1) ⋯ (a+k-1)`;
/// the empty product for `k = 0`.
pub fn rising_factorial(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Exact gamma quotient `Γ(a+m)/Γ(a)`, equal to `(a)_m` when no pole of
/// gamma is crossed. Errors with [`Error::PoleCrossing`] if some `a + j = 0`
/// for `0 ≤ j < m`, where the quotient is not defined.
pub fn gamma_ratio(a: &Rational, m: usize) -> Result<Rational, Error> {
    let mut term = a.clone();
    for j in 0..m {
        if term.is_zero() {
            return Err(Error::PoleCrossing {
                a: a.to_string(),
                m,
                offset: j,
            });
        }
        term += Rational::one();
    }
    Ok(rising_factorial(a, m))
}

/// Generalized binomial coefficient `binom(a, k) = a (a-1) ⋯ (a-k+1) / k!`
/// for rational `a` and non-negative integer `k`.
pub fn binom_rational(a: &Rational, k: usize) -> Rational {
    let mut num = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        num *= &term;
        term -= Rational::one();
    }
    num / factorial(k)
}

/// Integer power of a rational, with negative exponents allowed for
/// nonzero bases.
pub fn pow_rational(a: &Rational, e: i64) -> Rational {
    if e >= 0 {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc *= a;
        }
        acc
    } else {
        Rational::one() / pow_rational(a, -e)
    }
}

/// `(-1)^k` as a rational.
pub fn neg_one_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// 2^k as a rational (k ≥ 0).
pub fn two_pow(k: usize) -> Rational {
    BigRational::from_integer(BigInt::one() << k)
}

/// True when `r` is a non-negative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(3), 0), rat(1));
        assert_eq!(rising_factorial(&rat(2), 3), rat(24));
        assert_eq!(rising_factorial(&ratio(1, 2), 2), ratio(3, 4));
    }

    #[test]
    fn rising_factorial_step() {
        // (a)_{k+1} = (a)_k (a+k)
        for (a, k) in [(ratio(3, 7), 4usize), (rat(-2), 3), (ratio(-5, 2), 6)] {
            let lhs = rising_factorial(&a, k + 1);
            let rhs = rising_factorial(&a, k) * (&a + rat(k as i64));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio(&rat(1), 2).unwrap(), rat(2));
        assert_eq!(gamma_ratio(&ratio(3, 2), 2).unwrap(), ratio(15, 4));
        assert_eq!(gamma_ratio(&ratio(-1, 4), 1).unwrap(), ratio(-1, 4));
    }

    #[test]
    fn gamma_ratio_matches_pochhammer() {
        for (a, m) in [(ratio(5, 3), 4usize), (ratio(1, 2), 7), (rat(3), 2)] {
            assert_eq!(gamma_ratio(&a, m).unwrap(), rising_factorial(&a, m));
        }
    }

    #[test]
    fn gamma_ratio_pole() {
        let err = gamma_ratio(&rat(-2), 5).unwrap_err();
        assert!(matches!(err, Error::PoleCrossing { offset: 2, .. }));
        // No pole is crossed when the walk stops before zero.
        assert_eq!(gamma_ratio(&rat(-2), 2).unwrap(), rat(2));
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_rational(&rat(5), 2), rat(10));
        assert_eq!(binom_rational(&ratio(1, 2), 2), ratio(-1, 8));
        // binom(n+2λ-1, n) at n=1, λ=1 is the value of C_1^{(1)} at x=1.
        assert_eq!(binom_rational(&rat(2), 1), rat(2));
    }

    #[test]
    fn binom_matches_integer_binomial() {
        let mut pascal = vec![1u64];
        for n in 0..=10usize {
            for (k, &expect) in pascal.iter().enumerate() {
                assert_eq!(binom_rational(&rat(n as i64), k), rat(expect as i64));
            }
            let mut next = vec![1u64];
            for w in pascal.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            pascal = next;
        }
    }

    #[test]
    fn duplication_identity_in_ratio_form() {
        // (λ)_m (λ+1/2)_m / (2λ)_{2m} = 4^{-m}, exactly, for rational λ.
        for lam in [ratio(1, 2), rat(1), ratio(3, 2), ratio(7, 3), ratio(5, 4)] {
            for m in 0..=8usize {
                let lhs = rising_factorial(&lam, m) * rising_factorial(&(&lam + ratio(1, 2)), m)
                    / rising_factorial(&(&lam * rat(2)), 2 * m);
                assert_eq!(lhs, pow_rational(&ratio(1, 4), m as i64), "λ={lam} m={m}");
            }
        }
    }

    #[test]
    fn param_validation() {
        assert!(GegenParam::new(ratio(1, 2)).is_ok());
        assert!(GegenParam::new(ratio(-1, 4)).is_ok());
        assert!(GegenParam::new(rat(0)).is_err());
        assert!(GegenParam::new(ratio(-1, 2)).is_err());
        assert!(GegenParam::new(rat(-3)).is_err());
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["3/2", "-7/3", "4", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn rational_to_f64_large() {
        let big = pow_rational(&rat(10), 40) + ratio(1, 3);
        let f = rational_to_f64(&big);
        assert!((f - 1e40).abs() / 1e40 < 1e-12);
        assert!((rational_to_f64(&ratio(-7, 16)) + 0.4375).abs() < 1e-15);
    }
}
