//! Expanding `C_n^(λ)` in its own basis: orthogonality forces the
//! Kronecker delta, while the as-printed closed form lands elsewhere —
//! already at n = 0, where it leaves `d_0 = 2λ`.
//!
//! Run with: `cargo run --example self_connection`

use gegen::exactnum::{ratio, GegenParam};
use gegen::expansions::{self_connection_coeffs, SelfVariant};
use gegen::gegenbauer::gegen_recurrence;
use gegen::weightspace::project;

fn main() {
    let param = GegenParam::new(ratio(3, 2)).unwrap();

    println!("projection of C_n^(3/2) onto its own basis:");
    for n in 0..=4usize {
        let oracle = project(gegen_recurrence(&param, n).poly(), &param);
        let delta = self_connection_coeffs(&param, n, SelfVariant::OracleDelta);
        assert_eq!(oracle.d, delta.d);
        let rendered: Vec<String> = oracle.d.iter().map(|d| d.to_string()).collect();
        println!("  n={n}: [{}]", rendered.join(", "));
    }

    println!("\nthe as-printed formula, by contrast (both readings of λ^k):");
    for variant in [SelfVariant::AsPrinted, SelfVariant::AsPrintedPochhammer] {
        let d = self_connection_coeffs(&param, 2, variant);
        let rendered: Vec<String> = d.d.iter().map(|x| x.to_string()).collect();
        println!("  {variant:?} at n=2: [{}]", rendered.join(", "));
    }
    let d0 = self_connection_coeffs(&param, 0, SelfVariant::AsPrinted);
    println!("  at n=0 it evaluates to [{}] — that is 2λ, not 1", d0.d[0]);
}
