//! Exact Bernoulli and Euler polynomials and their expansions in the
//! Gegenbauer basis.
//!
//! Run with: `cargo run --example bernoulli_euler`

use gegen::classicpoly::{bernoulli_numbers, bernoulli_poly, euler_poly};
use gegen::exactnum::{rat, GegenParam};
use gegen::expansions::{bernoulli_coeffs, euler_coeffs};
use gegen::weightspace::project;

fn main() {
    let b = bernoulli_numbers(10);
    println!("Bernoulli numbers B_0..B_10:");
    let rendered: Vec<String> = b.numbers().iter().map(|x| x.to_string()).collect();
    println!("  [{}]", rendered.join(", "));

    println!("\nBernoulli polynomials:");
    for n in 0..=4 {
        println!("  B_{n}(x) = {}", bernoulli_poly(n));
    }
    println!("\nEuler polynomials:");
    for n in 0..=4 {
        println!("  E_{n}(x) = {}", euler_poly(n));
    }

    let param = GegenParam::new(rat(1)).unwrap();
    println!("\nexpansions at λ = 1:");
    for n in 0..=5usize {
        let closed = bernoulli_coeffs(&param, n);
        assert_eq!(closed.d, project(&bernoulli_poly(n), &param).d);
        assert_eq!(closed.reconstruct(), bernoulli_poly(n));
        let rendered: Vec<String> = closed.d.iter().map(|d| d.to_string()).collect();
        println!("  B_{n} = [{}] · (C_0..C_{n})", rendered.join(", "));
    }
    for n in 0..=5usize {
        let closed = euler_coeffs(&param, n);
        assert_eq!(closed.d, project(&euler_poly(n), &param).d);
        assert_eq!(closed.reconstruct(), euler_poly(n));
        let rendered: Vec<String> = closed.d.iter().map(|d| d.to_string()).collect();
        println!("  E_{n} = [{}] · (C_0..C_{n})", rendered.join(", "));
    }
}
