//! Expand `x^n` in the basis `{C_k^(λ)}` three ways — closed form,
//! orthogonality projection, and the derivative functional — and
//! reconstruct.
//!
//! Run with: `cargo run --example monomial_expansion`

use gegen::exactnum::{rat, ratio, GegenParam};
use gegen::expansions::monomial_coeffs;
use gegen::poly::Poly;
use gegen::weightspace::{project, prop1_coeffs};

fn main() {
    let param = GegenParam::new(ratio(1, 2)).unwrap();

    for n in 0..=6usize {
        let source = Poly::monomial(rat(1), n);
        let closed = monomial_coeffs(&param, n);
        let oracle = project(&source, &param);
        let functional = prop1_coeffs(&source, &param);

        assert_eq!(closed.d, oracle.d);
        assert_eq!(closed.d, functional.d);
        assert_eq!(closed.reconstruct(), source);

        let rendered: Vec<String> = closed.d.iter().map(|d| d.to_string()).collect();
        println!("x^{n} = [{}] · (C_0..C_{n})", rendered.join(", "));
    }
    println!("\nclosed form = projection = derivative functional, exactly");
}
