//! The structural identities of the family: parity, the defining ODE,
//! special values, and the derivative ladder (including the wrong
//! literal-power constant the errata engine flags).
//!
//! Run with: `cargo run --example structural_identities`

use gegen::exactnum::{rat, ratio, rising_factorial, two_pow, GegenParam};
use gegen::gegenbauer::{
    derivative_ladder_scale, derivative_ladder_scale_literal, gegen_derivative, gegen_recurrence,
    ode_residual,
};

fn main() {
    let param = GegenParam::new(ratio(7, 3)).unwrap();

    for n in 0..=6usize {
        let g = gegen_recurrence(&param, n);

        let reflected = g.poly().compose_affine(&rat(-1), &rat(0));
        let parity = if n % 2 == 0 { "even" } else { "odd " };
        assert_eq!(
            reflected,
            g.poly().scale(&if n % 2 == 0 { rat(1) } else { rat(-1) })
        );

        assert!(ode_residual(&g).is_zero());

        println!(
            "n={n} ({parity}): C_n(1) = {}, leading coefficient = {}",
            g.poly().eval(&rat(1)),
            g.poly().leading_coeff()
        );
    }

    // d^k/dx^k C_n^(λ) = 2^k (λ)_k C_{n-k}^(λ+k)
    println!("\nderivative ladder at n = 4:");
    let g = gegen_recurrence(&param, 4);
    for k in 0..=4usize {
        let ladder = gegen_derivative(&g, k).unwrap();
        assert_eq!(ladder, g.poly().differentiate(k));
        println!(
            "  k={k}: constant 2^k (λ)_k = {}",
            two_pow(k) * rising_factorial(param.lambda(), k)
        );
    }

    // the literal power λ^k disagrees from k = 2 on
    let derived = derivative_ladder_scale(&param, 2);
    let literal = derivative_ladder_scale_literal(&param, 2);
    println!("\nat k = 2: derived constant {derived}, literal-power reading {literal}");
    assert_ne!(derived, literal);
}
