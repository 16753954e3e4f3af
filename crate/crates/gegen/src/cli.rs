//! Command implementations behind the `gegen` binary: `expand`, `verify`,
//! `quad`, and `eval`.
//!
//! Every command produces deterministic output — stable ordering, fixed
//! formatting, exact rationals as strings — so identical invocations are
//! byte-identical. Exact-backend commands take λ as a rational string
//! ("3/2"); a decimal λ routes to the float backend.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coeffs::{CoeffVector, Family, Method};
use crate::error::Error;
use crate::exactnum::{parse_rational, ratio, GegenParam, Rational};
use crate::expansions::{
    bernoulli_coeffs, euler_coeffs, monomial_coeffs, product_coeffs, self_connection_coeffs,
    verify_family, ProductVariant, SelfVariant, VerifyTask,
};
use crate::gegenbauer::gegen_recurrence;
use crate::numeric::{eval_gegen_f64, gauss_jacobi_rule};
use crate::poly::Poly;
use crate::weightspace::{project_with_family, prop1_coeffs_with_family};

/// Exit code for malformed arguments or configuration.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for an invalid weight (λ out of range for the float backend).
pub const EXIT_INVALID_WEIGHT: i32 = 3;

/// Map an error to the process exit code the CLI contract promises.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidWeight { .. } => EXIT_INVALID_WEIGHT,
        _ => EXIT_USAGE,
    }
}

/// The coefficient families the CLI can expand and verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Monomial,
    Bernoulli,
    Euler,
    Product,
    SelfConnection,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Monomial,
        FamilyKind::Bernoulli,
        FamilyKind::Euler,
        FamilyKind::Product,
        FamilyKind::SelfConnection,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Monomial => "monomial",
            FamilyKind::Bernoulli => "bernoulli",
            FamilyKind::Euler => "euler",
            FamilyKind::Product => "product",
            FamilyKind::SelfConnection => "self",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "monomial" => Ok(FamilyKind::Monomial),
            "bernoulli" => Ok(FamilyKind::Bernoulli),
            "euler" => Ok(FamilyKind::Euler),
            "product" => Ok(FamilyKind::Product),
            "self" => Ok(FamilyKind::SelfConnection),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

/// Settings for a verification run (the `verify` command).
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lambdas: Vec<Rational>,
    pub n_max: usize,
    pub families: Vec<FamilyKind>,
    pub format: OutputFormat,
    /// Also run the informational as-printed variants and report their
    /// errata (they never affect the exit status).
    pub as_printed: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lambdas: default_grid(),
            n_max: 12,
            families: FamilyKind::ALL.to_vec(),
            format: OutputFormat::Json,
            as_printed: true,
        }
    }
}

/// The default verification grid λ ∈ {1/2, 1, 3/2, 2, 5/2, 7/3}.
pub fn default_grid() -> Vec<Rational> {
    vec![
        ratio(1, 2),
        ratio(1, 1),
        ratio(3, 2),
        ratio(2, 1),
        ratio(5, 2),
        ratio(7, 3),
    ]
}

impl RunConfig {
    /// Parse the simple `key = value` config format. Unknown keys are
    /// rejected; missing keys keep their defaults.
    ///
    /// ```text
    /// lambdas = 1/2, 1, 3/2
    /// n_max = 10
    /// families = monomial, product
    /// format = json
    /// as_printed = true
    /// ```
    pub fn parse(text: &str) -> Result<RunConfig, Error> {
        let mut config = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let value = value.trim();
            match key.trim() {
                "lambdas" => {
                    config.lambdas = value
                        .split(',')
                        .map(parse_rational)
                        .collect::<Result<Vec<_>, _>>()?;
                }
                "n_max" => {
                    config.n_max = value
                        .parse()
                        .map_err(|e| Error::InvalidInput(format!("n_max: {e}")))?;
                }
                "families" => {
                    config.families = value
                        .split(',')
                        .map(FamilyKind::parse)
                        .collect::<Result<Vec<_>, _>>()?;
                }
                "format" => config.format = OutputFormat::parse(value)?,
                "as_printed" => {
                    config.as_printed = value
                        .parse()
                        .map_err(|e| Error::InvalidInput(format!("as_printed: {e}")))?;
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "config line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<Vec<GegenParam>, Error> {
        if self.n_max > 64 {
            return Err(Error::InvalidInput(format!(
                "n_max = {} exceeds the supported bound 64",
                self.n_max
            )));
        }
        self.lambdas
            .iter()
            .map(|l| GegenParam::new(l.clone()))
            .collect()
    }
}

#[derive(Serialize)]
struct CoeffEntry {
    k: usize,
    value: String,
}

#[derive(Serialize)]
struct ExpandOutput<'a> {
    family: &'a str,
    lambda: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<&'a str>,
    method: Method,
    coeffs: Vec<CoeffEntry>,
}

/// Arguments for [`cmd_expand`].
#[derive(Debug, Clone)]
pub struct ExpandArgs {
    pub family: FamilyKind,
    pub lambda: String,
    pub n: usize,
    pub k: Option<usize>,
    /// closed-form (default), projection, or prop1
    pub method: Method,
    /// corrected (default) / as-printed / as-printed-literal-power for
    /// product; oracle (default) / as-printed / as-printed-pochhammer for
    /// self.
    pub variant: Option<String>,
    pub format: OutputFormat,
}

fn product_variant(name: Option<&str>) -> Result<ProductVariant, Error> {
    match name.unwrap_or("corrected") {
        "corrected" => Ok(ProductVariant::Corrected),
        "as-printed" => Ok(ProductVariant::AsPrinted),
        "as-printed-literal-power" => Ok(ProductVariant::AsPrintedLiteralPower),
        other => Err(Error::InvalidInput(format!(
            "unknown product variant {other:?}"
        ))),
    }
}

fn self_variant(name: Option<&str>) -> Result<SelfVariant, Error> {
    match name.unwrap_or("oracle") {
        "oracle" => Ok(SelfVariant::OracleDelta),
        "as-printed" => Ok(SelfVariant::AsPrinted),
        "as-printed-pochhammer" => Ok(SelfVariant::AsPrintedPochhammer),
        other => Err(Error::InvalidInput(format!(
            "unknown self-connection variant {other:?}"
        ))),
    }
}

/// Source polynomial a family expands (used for the projection methods).
fn family_source(
    family: FamilyKind,
    param: &GegenParam,
    n: usize,
    k: Option<usize>,
) -> Result<(Poly, Option<Family>), Error> {
    Ok(match family {
        FamilyKind::Monomial => (
            Poly::monomial(crate::exactnum::rat(1), n),
            Some(Family::Monomial),
        ),
        FamilyKind::Bernoulli => (
            crate::classicpoly::bernoulli_poly(n),
            Some(Family::Bernoulli),
        ),
        FamilyKind::Euler => (crate::classicpoly::euler_poly(n), Some(Family::Euler)),
        FamilyKind::Product => {
            let k =
                k.ok_or_else(|| Error::InvalidInput("product expansion requires --k".into()))?;
            if k > n {
                return Err(Error::InvalidPair { n, k });
            }
            let p =
                gegen_recurrence(param, n - k).into_poly() * gegen_recurrence(param, k).into_poly();
            (p, Some(Family::Product { k }))
        }
        FamilyKind::SelfConnection => (
            gegen_recurrence(param, n).into_poly(),
            Some(Family::SelfConnection),
        ),
    })
}

/// Expand one family member and render the coefficient table.
pub fn cmd_expand(args: &ExpandArgs) -> Result<String, Error> {
    let lambda = parse_rational(&args.lambda)?;
    let param = GegenParam::new(lambda)?;
    let variant = args.variant.as_deref();

    let coeffs: CoeffVector = match args.method {
        Method::ClosedForm => match args.family {
            FamilyKind::Monomial => monomial_coeffs(&param, args.n),
            FamilyKind::Bernoulli => bernoulli_coeffs(&param, args.n),
            FamilyKind::Euler => euler_coeffs(&param, args.n),
            FamilyKind::Product => {
                let k = args
                    .k
                    .ok_or_else(|| Error::InvalidInput("product expansion requires --k".into()))?;
                product_coeffs(&param, args.n, k, product_variant(variant)?)?
            }
            FamilyKind::SelfConnection => {
                self_connection_coeffs(&param, args.n, self_variant(variant)?)
            }
        },
        Method::Projection => {
            let (p, family) = family_source(args.family, &param, args.n, args.k)?;
            project_with_family(&p, &param, family)
        }
        Method::Prop1 => {
            let (p, family) = family_source(args.family, &param, args.n, args.k)?;
            prop1_coeffs_with_family(&p, &param, family)
        }
    };

    let entries: Vec<CoeffEntry> = coeffs
        .d
        .iter()
        .enumerate()
        .map(|(k, v)| CoeffEntry {
            k,
            value: v.to_string(),
        })
        .collect();

    match args.format {
        OutputFormat::Json => {
            let out = ExpandOutput {
                family: args.family.name(),
                lambda: param.lambda().to_string(),
                n: args.n,
                k: args.k.filter(|_| args.family == FamilyKind::Product),
                variant,
                method: coeffs.method,
                coeffs: entries,
            };
            Ok(serde_json::to_string(&out).expect("expand output serializes"))
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,value\n");
            for e in &entries {
                let _ = writeln!(out, "{},{}", e.k, e.value);
            }
            Ok(out.trim_end().to_string())
        }
    }
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyLine {
    pub label: String,
    pub cells: usize,
    pub errata: usize,
    pub informational: bool,
}

/// Full result of a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub lines: Vec<VerifyLine>,
    pub errata: Vec<crate::ErrataRecord>,
    /// True iff every exact (non-informational) family matched the oracle.
    pub pass: bool,
}

impl VerifyReport {
    /// Human-readable, byte-deterministic report text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let status = if line.informational {
                "INFO"
            } else if line.errata == 0 {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = writeln!(
                out,
                "{}: {} cells, {} errata — {}",
                line.label, line.cells, line.errata, status
            );
        }
        let _ = writeln!(out, "result: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }

    /// Errata as JSON lines (one record per line).
    pub fn errata_json_lines(&self) -> String {
        let mut out = String::new();
        for rec in &self.errata {
            out.push_str(&rec.to_json_line());
            out.push('\n');
        }
        out
    }
}

fn grid_cells(task: &VerifyTask, grid_len: usize, n_max: usize) -> usize {
    match task {
        // product sweeps every split k ≤ n
        VerifyTask::Product(_) => grid_len * ((n_max + 1) * (n_max + 2)) / 2,
        _ => grid_len * (n_max + 1),
    }
}

/// Run the verification grid described by `config`.
///
/// Honors `GEGEN_THREADS` as a cap on the rayon worker count. Exact
/// families must produce zero errata for the report to pass; as-printed
/// runs are informational.
pub fn cmd_verify(config: &RunConfig) -> Result<VerifyReport, Error> {
    let params = config.validate()?;

    let mut tasks: Vec<VerifyTask> = Vec::new();
    for family in &config.families {
        match family {
            FamilyKind::Monomial => tasks.push(VerifyTask::Monomial),
            FamilyKind::Bernoulli => tasks.push(VerifyTask::Bernoulli),
            FamilyKind::Euler => tasks.push(VerifyTask::Euler),
            FamilyKind::Product => {
                tasks.push(VerifyTask::Product(ProductVariant::Corrected));
                if config.as_printed {
                    tasks.push(VerifyTask::Product(ProductVariant::AsPrinted));
                }
            }
            FamilyKind::SelfConnection => {
                tasks.push(VerifyTask::SelfConnection(SelfVariant::OracleDelta));
                if config.as_printed {
                    tasks.push(VerifyTask::SelfConnection(SelfVariant::AsPrinted));
                }
            }
        }
    }
    if config.as_printed {
        tasks.push(VerifyTask::DerivativeLadder);
    }

    let run = || -> VerifyReport {
        let mut lines = Vec::new();
        let mut errata = Vec::new();
        let mut pass = true;
        for task in &tasks {
            let records = verify_family(*task, &params, config.n_max);
            let informational = task.informational();
            if !informational && !records.is_empty() {
                pass = false;
            }
            lines.push(VerifyLine {
                label: task.identity().to_string(),
                cells: grid_cells(task, params.len(), config.n_max),
                errata: records.len(),
                informational,
            });
            errata.extend(records);
        }
        VerifyReport {
            lines,
            errata,
            pass,
        }
    };

    match thread_cap() {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

fn thread_cap() -> Option<usize> {
    std::env::var("GEGEN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
}

/// Emit the quadrature rule for a float λ as CSV.
pub fn cmd_quad(lambda: f64, m: usize) -> Result<String, Error> {
    let rule = gauss_jacobi_rule(lambda, m)?;
    Ok(rule.to_csv().trim_end().to_string())
}

#[derive(Serialize)]
struct EvalOutput {
    lambda: String,
    n: usize,
    x: String,
    backend: &'static str,
    value: String,
}

/// Evaluate `C_n^(λ)(x)`. Rational strings for both λ and x run exactly;
/// a decimal in either routes to the float recurrence.
pub fn cmd_eval(lambda: &str, n: usize, x: &str) -> Result<String, Error> {
    let exact = (parse_rational(lambda), parse_rational(x));
    let out = match exact {
        (Ok(lam), Ok(xr)) => {
            let param = GegenParam::new(lam)?;
            let value = gegen_recurrence(&param, n).poly().eval(&xr);
            EvalOutput {
                lambda: param.lambda().to_string(),
                n,
                x: xr.to_string(),
                backend: "exact",
                value: value.to_string(),
            }
        }
        _ => {
            let lam: f64 = lambda
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("lambda: {e}")))?;
            let xf: f64 = x
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("x: {e}")))?;
            if !lam.is_finite() || lam <= -0.5 || lam == 0.0 {
                return Err(Error::InvalidWeight {
                    lambda: lambda.to_string(),
                    shift: 0,
                });
            }
            EvalOutput {
                lambda: format!("{lam}"),
                n,
                x: format!("{xf}"),
                backend: "float",
                value: format!("{:.16e}", eval_gegen_f64(lam, n, xf)),
            }
        }
    };
    Ok(serde_json::to_string(&out).expect("eval output serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_monomial_json() {
        let out = cmd_expand(&ExpandArgs {
            family: FamilyKind::Monomial,
            lambda: "1".into(),
            n: 2,
            k: None,
            method: Method::ClosedForm,
            variant: None,
            format: OutputFormat::Json,
        })
        .unwrap();
        assert_eq!(
            out,
            "{\"family\":\"monomial\",\"lambda\":\"1\",\"n\":2,\
             \"method\":\"closed_form\",\"coeffs\":[\
             {\"k\":0,\"value\":\"1/4\"},{\"k\":1,\"value\":\"0\"},\
             {\"k\":2,\"value\":\"1/4\"}]}"
        );
    }

    #[test]
    fn expand_product_corrected() {
        let out = cmd_expand(&ExpandArgs {
            family: FamilyKind::Product,
            lambda: "1".into(),
            n: 2,
            k: Some(1),
            method: Method::ClosedForm,
            variant: Some("corrected".into()),
            format: OutputFormat::Csv,
        })
        .unwrap();
        assert_eq!(out, "k,value\n0,1\n1,0\n2,1");
    }

    #[test]
    fn expand_bernoulli_trivial() {
        let out = cmd_expand(&ExpandArgs {
            family: FamilyKind::Bernoulli,
            lambda: "1/2".into(),
            n: 0,
            k: None,
            method: Method::ClosedForm,
            variant: None,
            format: OutputFormat::Csv,
        })
        .unwrap();
        assert_eq!(out, "k,value\n0,1");
    }

    #[test]
    fn expand_rejects_bad_lambda() {
        let err = cmd_expand(&ExpandArgs {
            family: FamilyKind::Monomial,
            lambda: "0".into(),
            n: 1,
            k: None,
            method: Method::ClosedForm,
            variant: None,
            format: OutputFormat::Json,
        })
        .unwrap_err();
        assert_eq!(exit_code(&err), EXIT_USAGE);
    }

    #[test]
    fn verify_default_passes_and_is_deterministic() {
        let config = RunConfig {
            n_max: 4,
            lambdas: vec![ratio(1, 2), ratio(1, 1)],
            ..RunConfig::default()
        };
        let a = cmd_verify(&config).unwrap();
        let b = cmd_verify(&config).unwrap();
        assert!(a.pass);
        assert_eq!(a.render(), b.render());
        assert_eq!(a.errata_json_lines(), b.errata_json_lines());
        // as-printed runs produce informational errata
        assert!(a.errata.iter().any(|r| r.identity.contains("as_printed")));
    }

    #[test]
    fn verify_rejects_zero_lambda() {
        let config = RunConfig {
            lambdas: vec![ratio(0, 1)],
            ..RunConfig::default()
        };
        let err = cmd_verify(&config).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_USAGE);
    }

    #[test]
    fn config_parsing() {
        let config = RunConfig::parse(
            "# comment\nlambdas = 1/2, 7/3\nn_max = 6\nfamilies = monomial, self\nformat = csv\nas_printed = false\n",
        )
        .unwrap();
        assert_eq!(config.lambdas, vec![ratio(1, 2), ratio(7, 3)]);
        assert_eq!(config.n_max, 6);
        assert_eq!(
            config.families,
            vec![FamilyKind::Monomial, FamilyKind::SelfConnection]
        );
        assert_eq!(config.format, OutputFormat::Csv);
        assert!(!config.as_printed);

        assert!(RunConfig::parse("bogus = 1").is_err());
        assert!(RunConfig::parse("n_max = 100").is_err());
    }

    #[test]
    fn quad_csv() {
        let out = cmd_quad(0.5, 2).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "node,weight");
        let err = cmd_quad(-0.6, 2).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INVALID_WEIGHT);
    }

    #[test]
    fn eval_backends() {
        let out = cmd_eval("1", 2, "1").unwrap();
        assert!(out.contains("\"backend\":\"exact\""));
        assert!(out.contains("\"value\":\"3\""));

        let out = cmd_eval("0.5", 3, "0.5").unwrap();
        assert!(out.contains("\"backend\":\"float\""));
        assert!(out.contains("-4.375"));

        let err = cmd_eval("-0.6", 1, "0").unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INVALID_WEIGHT);
    }
}
