//! Gauss rules for the weight `(1-x²)^(λ-1/2)`: nodes, weights, and
//! polynomial exactness.
//!
//! Run with: `cargo run --example quadrature`

use gegen::numeric::{gauss_jacobi_rule, mu0};

fn main() {
    // λ = 1/2 is the constant weight: classical Gauss-Legendre
    let rule = gauss_jacobi_rule(0.5, 3).unwrap();
    println!("λ = 0.5, m = 3 (Gauss-Legendre):");
    print!("{}", rule.to_csv());

    // a singular weight at the endpoints (λ < 1/2) needs no special casing
    let rule = gauss_jacobi_rule(-0.3, 5).unwrap();
    println!("\nλ = -0.3, m = 5 (endpoint-singular weight):");
    print!("{}", rule.to_csv());
    let total: f64 = rule.weights.iter().sum();
    println!("Σ weights = {total:.15e}");
    println!("μ₀(λ)     = {:.15e}", mu0(-0.3));

    // degree-(2m-1) exactness: ∫ x^8 w dx needs only 5 nodes
    let rule = gauss_jacobi_rule(1.5, 5).unwrap();
    let by_quadrature = rule.integrate(|x| x.powi(8)) / mu0(1.5);
    // exact even-moment ratio (1/2)_4 / (λ+1)_4
    let exact = (0.5 * 1.5 * 2.5 * 3.5) / (2.5 * 3.5 * 4.5 * 5.5);
    println!("\nλ = 1.5: ∫x⁸w/μ₀ by quadrature = {by_quadrature:.16}");
    println!("          exact moment ratio    = {exact:.16}");
}
