//! Sweep every coefficient family over a λ grid, compare each closed form
//! against the projection oracle, and emit the resulting errata records
//! as JSON lines.
//!
//! Run with: `cargo run --example errata_scan`

use gegen::exactnum::GegenParam;
use gegen::expansions::{verify_family, ProductVariant, SelfVariant, VerifyTask};

fn main() {
    let grid: Vec<GegenParam> = gegen::cli::default_grid()
        .into_iter()
        .map(|l| GegenParam::new(l).unwrap())
        .collect();

    let tasks = [
        VerifyTask::Monomial,
        VerifyTask::Bernoulli,
        VerifyTask::Euler,
        VerifyTask::Product(ProductVariant::Corrected),
        VerifyTask::SelfConnection(SelfVariant::OracleDelta),
        VerifyTask::Product(ProductVariant::AsPrinted),
        VerifyTask::SelfConnection(SelfVariant::AsPrinted),
        VerifyTask::DerivativeLadder,
    ];

    for task in tasks {
        let records = verify_family(task, &grid, 6);
        let tag = if task.informational() {
            "INFO"
        } else {
            "EXACT"
        };
        println!("[{tag}] {}: {} errata", task.identity(), records.len());
        for record in records.iter().take(3) {
            println!("    {}", record.to_json_line());
        }
        if records.len() > 3 {
            println!("    … {} more", records.len() - 3);
        }
    }
}
