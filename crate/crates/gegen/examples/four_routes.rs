//! Construct `C_n^(λ)` by four independent routes and show they agree
//! coefficient for coefficient, plus the generating-series route for
//! values at a point.
//!
//! Run with: `cargo run --example four_routes`

use gegen::exactnum::{ratio, GegenParam};
use gegen::gegenbauer::{
    gegen_explicit, gegen_from_jacobi, gegen_recurrence, gegen_series_coeff, rodrigues_form,
};

fn main() {
    let param = GegenParam::new(ratio(3, 2)).unwrap();

    println!("C_n^(3/2) by four routes:\n");
    for n in 0..=5 {
        let explicit = gegen_explicit(&param, n);
        let recurrence = gegen_recurrence(&param, n);
        let jacobi = gegen_from_jacobi(&param, n).unwrap();
        let rodrigues = rodrigues_form(&param, n);

        assert_eq!(explicit.poly(), recurrence.poly());
        assert_eq!(recurrence.poly(), jacobi.poly());
        assert_eq!(recurrence.poly(), &rodrigues);
        println!("  n={n}: {}", recurrence.poly());
    }

    // the generating series (1 - 2x₀t + t²)^(-λ) reproduces the values
    let x0 = ratio(1, 2);
    let series = gegen_series_coeff(&param, &x0, 5);
    println!("\nseries coefficients at x₀ = {x0} (= C_n(x₀)):");
    for (n, value) in series.iter().enumerate() {
        let direct = gegen_recurrence(&param, n).poly().eval(&x0);
        assert_eq!(value, &direct);
        println!("  n={n}: {value}");
    }
    println!("\nall routes agree exactly");
}
