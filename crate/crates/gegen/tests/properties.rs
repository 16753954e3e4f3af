//! Property-based invariants across the exact backend.

use proptest::prelude::*;

use gegen::exactnum::{
    binom_rational, gamma_ratio, pow_rational, rat, ratio, rising_factorial, GegenParam, Rational,
};
use gegen::expansions::{monomial_coeffs, product_coeffs, ProductVariant};
use gegen::gegenbauer::{
    gegen_explicit, gegen_from_jacobi, gegen_recurrence, gegen_series_coeff, ode_residual,
    rodrigues_form,
};
use gegen::poly::Poly;
use gegen::weightspace::{inner_product, project, prop1_coeffs};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=8).prop_map(|(n, d)| ratio(n, d))
}

fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Poly::from_coeffs)
}

/// Valid λ values exercising integer, half-integer, generic rational, and
/// the negative sliver (-1/2, 0).
fn lambda_pool() -> impl Strategy<Value = GegenParam> {
    prop::sample::select(vec![
        ratio(1, 2),
        rat(1),
        ratio(3, 2),
        rat(2),
        ratio(7, 3),
        ratio(-1, 4),
        ratio(5, 7),
        rat(3),
    ])
    .prop_map(|l| GegenParam::new(l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(p in small_poly(6), q in small_poly(6), r in small_poly(6)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &(&q * &r), &(&p * &q) * &r);
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn poly_product_rule(p in small_poly(5), q in small_poly(5)) {
        let lhs = (&p * &q).differentiate(1);
        let rhs = &(&p.differentiate(1) * &q) + &(&p * &q.differentiate(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn affine_composition_round_trip(
        p in small_poly(6),
        a in (1i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d)),
        b in small_rational(),
        negate in any::<bool>(),
    ) {
        let a = if negate { -a } else { a };
        let inv_a = Rational::new(a.denom().clone(), a.numer().clone());
        let back = p.compose_affine(&a, &b).compose_affine(&inv_a, &(-&b / &a));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rising_factorial_recurrence(a in small_rational(), k in 0usize..10) {
        prop_assert_eq!(
            rising_factorial(&a, k + 1),
            rising_factorial(&a, k) * (&a + rat(k as i64))
        );
    }

    #[test]
    fn gamma_ratio_equals_pochhammer(a in small_rational(), m in 0usize..10) {
        if let Ok(g) = gamma_ratio(&a, m) {
            prop_assert_eq!(g, rising_factorial(&a, m));
        }
    }

    #[test]
    fn duplication_identity(lam in lambda_pool(), m in 0usize..10) {
        let l = lam.lambda();
        let lhs = rising_factorial(l, m) * rising_factorial(&(l + ratio(1, 2)), m)
            / rising_factorial(&(l * rat(2)), 2 * m);
        prop_assert_eq!(lhs, pow_rational(&ratio(1, 4), m as i64));
    }

    #[test]
    fn integer_binomials(n in 0i64..14, k in 0usize..14) {
        let expected = if (k as i64) > n {
            rat(0)
        } else {
            // Pascal route, independent of the falling-factorial code path
            let mut acc = rat(1);
            for j in 0..k {
                acc = acc * rat(n - j as i64) / rat(j as i64 + 1);
            }
            acc
        };
        prop_assert_eq!(binom_rational(&rat(n), k), expected);
    }

    #[test]
    fn inner_product_symmetric_bilinear(
        p in small_poly(5),
        q in small_poly(5),
        r in small_poly(5),
        c in small_rational(),
        lam in lambda_pool(),
    ) {
        let pq = inner_product(&p, &q, &lam, 0).ratio;
        let qp = inner_product(&q, &p, &lam, 0).ratio;
        prop_assert_eq!(&pq, &qp);

        let combined = inner_product(&(&p.scale(&c) + &r), &q, &lam, 0).ratio;
        let split = c * pq + inner_product(&r, &q, &lam, 0).ratio;
        prop_assert_eq!(combined, split);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn projection_routes_agree_and_reconstruct(p in small_poly(9), lam in lambda_pool()) {
        let a = project(&p, &lam);
        let b = prop1_coeffs(&p, &lam);
        prop_assert_eq!(&a.d, &b.d);
        prop_assert_eq!(a.reconstruct(), p);
    }

    #[test]
    fn construction_routes_agree(lam in lambda_pool(), n in 0usize..=8) {
        let e = gegen_explicit(&lam, n);
        let r = gegen_recurrence(&lam, n);
        let j = gegen_from_jacobi(&lam, n).unwrap();
        let rod = rodrigues_form(&lam, n);
        prop_assert_eq!(e.poly(), r.poly());
        prop_assert_eq!(r.poly(), j.poly());
        prop_assert_eq!(r.poly(), &rod);
        prop_assert!(ode_residual(&r).is_zero());
    }

    #[test]
    fn series_matches_evaluation(
        lam in lambda_pool(),
        x0 in (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d)),
    ) {
        let n_max = 8;
        let values = gegen_series_coeff(&lam, &x0, n_max);
        for (n, v) in values.iter().enumerate() {
            prop_assert_eq!(v, &gegen_recurrence(&lam, n).poly().eval(&x0));
        }
    }

    #[test]
    fn monomial_closed_form_matches_oracle(lam in lambda_pool(), n in 0usize..=10) {
        let closed = monomial_coeffs(&lam, n);
        let oracle = project(&Poly::monomial(rat(1), n), &lam);
        prop_assert_eq!(&closed.d, &oracle.d);
    }

    #[test]
    fn product_linearization_reconstructs(lam in lambda_pool(), n in 0usize..=6, split in 0usize..=6) {
        let k = split.min(n);
        let d = product_coeffs(&lam, n, k, ProductVariant::Corrected).unwrap();
        let expected = gegen_recurrence(&lam, n - k).into_poly()
            * gegen_recurrence(&lam, k).into_poly();
        prop_assert_eq!(d.reconstruct(), expected);
    }
}
