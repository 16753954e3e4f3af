//! Linearize the product `C_{n-k} · C_k` back into the basis, comparing
//! the exact corrected constant against the as-printed one (off by the
//! factor `2^λ`).
//!
//! Run with: `cargo run --example product_linearization`

use gegen::exactnum::{rat, GegenParam};
use gegen::expansions::{product_coeffs, ProductVariant};
use gegen::gegenbauer::gegen_recurrence;

fn main() {
    let param = GegenParam::new(rat(1)).unwrap();

    println!("linearizations at λ = 1 (Chebyshev-U):\n");
    for n in 0..=4usize {
        for k in 0..=n {
            let d = product_coeffs(&param, n, k, ProductVariant::Corrected).unwrap();
            let source = gegen_recurrence(&param, n - k).into_poly()
                * gegen_recurrence(&param, k).into_poly();
            assert_eq!(d.reconstruct(), source);
            let rendered: Vec<String> = d.d.iter().map(|x| x.to_string()).collect();
            println!(
                "  C_{} · C_{k} = [{}] · (C_0..C_{n})",
                n - k,
                rendered.join(", ")
            );
        }
    }

    // the as-printed leading constant 2^(λ+1) overshoots the exact 2 by 2^λ
    println!("\nas-printed constant at λ = 1, n = 2, k = 1:");
    let corrected = product_coeffs(&param, 2, 1, ProductVariant::Corrected).unwrap();
    let printed = product_coeffs(&param, 2, 1, ProductVariant::AsPrinted).unwrap();
    for (k, (c, p)) in corrected.d.iter().zip(&printed.d).enumerate() {
        println!("  d_{k}: corrected {c}, as printed {p}");
    }
}
