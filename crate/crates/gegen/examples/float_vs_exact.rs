//! Cross-backend check: float projections against exact rationals, and
//! orthogonality at an irrational order where only the float backend can
//! operate.
//!
//! Run with: `cargo run --example float_vs_exact`

use gegen::classicpoly::bernoulli_poly;
use gegen::exactnum::{ratio, rational_to_f64, GegenParam};
use gegen::numeric::{eval_gegen_f64, float_project_poly, gauss_jacobi_rule, mu0, norm_ratio_f64};
use gegen::weightspace::project;

fn main() {
    let param = GegenParam::new(ratio(3, 2)).unwrap();
    let lambda = param.lambda_f64();
    let source = bernoulli_poly(8);

    let exact = project(&source, &param);
    let float = float_project_poly(&source, lambda, 8).unwrap();

    println!("B_8 in the λ = 3/2 basis, exact vs float:");
    for (k, (e, f)) in exact.d.iter().zip(&float).enumerate() {
        println!(
            "  d_{k} = {e}  ≈ {f:.15e}  (Δ = {:.1e})",
            (rational_to_f64(e) - f).abs()
        );
    }

    // orthogonality survives at λ = √2, far outside the rational backend
    let lambda = std::f64::consts::SQRT_2;
    let total = mu0(lambda);
    println!("\nnormalized |<C_m, C_n>| at λ = √2:");
    for m in 0..=4usize {
        for n in 0..m {
            let rule = gauss_jacobi_rule(lambda, (m + n) / 2 + 1).unwrap();
            let ip =
                rule.integrate(|x| eval_gegen_f64(lambda, m, x) * eval_gegen_f64(lambda, n, x));
            let h = (norm_ratio_f64(lambda, m) * norm_ratio_f64(lambda, n)).sqrt() * total;
            println!("  m={m} n={n}: {:.2e}", (ip / h).abs());
        }
    }
}
