//! Thin command-line front end over [`gegen::cli`].

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gegen::cli::{
    self, cmd_eval, cmd_expand, cmd_quad, cmd_verify, ExpandArgs, FamilyKind, OutputFormat,
    RunConfig,
};
use gegen::coeffs::Method;
use gegen::error::Error;

#[derive(Parser)]
#[command(
    name = "gegen",
    about = "Exact Gegenbauer-basis expansions, identity verification, and quadrature",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a family member in the basis {C_k^(λ)}
    Expand {
        /// monomial | bernoulli | euler | product | self
        #[arg(long)]
        family: String,
        /// exact rational, e.g. 3/2 (λ > -1/2, λ ≠ 0)
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
        /// split index for the product family (C_{n-k} · C_k)
        #[arg(long)]
        k: Option<usize>,
        /// closed-form | projection | prop1
        #[arg(long, default_value = "closed-form")]
        method: String,
        /// family-specific formula variant (e.g. corrected, as-printed)
        #[arg(long)]
        variant: Option<String>,
        /// json | csv
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Compare closed forms against the projection oracle over a λ grid
    Verify {
        /// key = value config file (lambdas, n_max, families, format, as_printed)
        #[arg(long)]
        config: Option<std::path::PathBuf>,
        /// override: comma-separated exact rationals
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
        /// override: max expansion degree
        #[arg(long)]
        n_max: Option<usize>,
        /// override: comma-separated family subset
        #[arg(long)]
        families: Option<String>,
        /// corrected (exact families only) | as-printed (add informational runs)
        #[arg(long)]
        variant: Option<String>,
        /// write errata as JSON lines to this path
        #[arg(long)]
        report_errata: Option<std::path::PathBuf>,
    },
    /// Dump a Gauss quadrature rule for the weight (1-x²)^(λ-1/2) as CSV
    Quad {
        /// float λ > -1/2
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// node count
        #[arg(long)]
        m: usize,
    },
    /// Evaluate C_n^(λ)(x); rational strings run exactly, decimals in float
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Expand {
            family,
            lambda,
            n,
            k,
            method,
            variant,
            format,
        } => {
            let method = match method.as_str() {
                "closed-form" => Method::ClosedForm,
                "projection" => Method::Projection,
                "prop1" => Method::Prop1,
                other => {
                    return Err(Error::InvalidInput(format!("unknown method {other:?}")));
                }
            };
            let out = cmd_expand(&ExpandArgs {
                family: FamilyKind::parse(&family)?,
                lambda,
                n,
                k,
                method,
                variant,
                format: OutputFormat::parse(&format)?,
            })?;
            println!("{out}");
            Ok(0)
        }
        Command::Verify {
            config,
            lambdas,
            n_max,
            families,
            variant,
            report_errata,
        } => {
            let mut run_config = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::InvalidInput(format!("config {}: {e}", path.display()))
                    })?;
                    RunConfig::parse(&text)?
                }
                None => RunConfig::default(),
            };
            if let Some(list) = lambdas {
                run_config.lambdas = list
                    .split(',')
                    .map(gegen::exactnum::parse_rational)
                    .collect::<Result<Vec<_>, _>>()?;
            }
            if let Some(n) = n_max {
                run_config.n_max = n;
            }
            if let Some(list) = families {
                run_config.families = list
                    .split(',')
                    .map(FamilyKind::parse)
                    .collect::<Result<Vec<_>, _>>()?;
            }
            match variant.as_deref() {
                None => {}
                Some("corrected") => run_config.as_printed = false,
                Some("as-printed") => run_config.as_printed = true,
                Some(other) => {
                    return Err(Error::InvalidInput(format!(
                        "unknown verify variant {other:?}"
                    )));
                }
            }
            let report = cmd_verify(&run_config)?;
            print!("{}", report.render());
            if let Some(path) = report_errata {
                std::fs::write(&path, report.errata_json_lines())
                    .map_err(|e| Error::InvalidInput(format!("errata {}: {e}", path.display())))?;
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Quad { lambda, m } => {
            println!("{}", cmd_quad(lambda, m)?);
            Ok(0)
        }
        Command::Eval { lambda, n, x } => {
            println!("{}", cmd_eval(&lambda, n, &x)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(cli::exit_code(&err) as u8)
        }
    }
}
