//! Command-line front end: theta coefficients, representation counts,
//! divisor sums, logarithmic polynomials, identity verification, and b-file
//! cross-checks. All arithmetic is exact; all output is deterministic.
//!
//! Exit codes: 0 — success (and, for `verify`/`crosscheck`, everything
//! passed); 1 — at least one check failed; 2 — usage or domain error.

use std::collections::BTreeMap;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polygonal_reps::bell::{log_polynomials, taylor_coeffs};
use polygonal_reps::crosscheck::{crosscheck_sequence, parse_bfile, CrosscheckKind};
use polygonal_reps::divisorside::{divisor_lhs, jha_square_lhs, jha_triangular_lhs};
use polygonal_reps::exactnum::factorial;
use polygonal_reps::verify::{run_suite, IdentityName, IdentitySelection, SuiteConfig};
use polygonal_reps::{ExactRational, PolygonalSpec, RepTable, VerificationReport};

#[derive(Parser)]
#[command(
    name = "polyrep",
    version,
    about = "Exact calculations around generalized polygonal numbers",
    long_about = "Exact calculations around generalized polygonal numbers: theta series, \
representation counts, weighted divisor sums, logarithmic polynomials, and the identity \
checks tying them together."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print theta-series coefficients as CSV rows `n,coeff`.
    Theta {
        /// Number of sides (s >= 3; the product form needs s >= 4).
        #[arg(long)]
        s: i64,
        /// Highest coefficient index to print.
        #[arg(long = "n-max")]
        n_max: usize,
        /// How to compute the series: index enumeration or the Jacobi
        /// triple product.
        #[arg(long, value_enum, default_value_t = ThetaForm::Sum)]
        form: ThetaForm,
    },
    /// Print representation counts t_{s,j}(n) for n = 0..=n-max.
    Reps {
        #[arg(long)]
        s: i64,
        /// Tuple length j.
        #[arg(long)]
        j: usize,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print one weighted divisor sum (or closed form) exactly.
    Lhs {
        #[arg(long)]
        n: u64,
        /// Number of sides; required for the divisor form, implied (4 or 6)
        /// by the closed forms.
        #[arg(long)]
        s: Option<i64>,
        #[arg(long, value_enum, default_value_t = LhsForm::Divisor)]
        form: LhsForm,
    },
    /// Print logarithmic polynomials L_n beside the log-series coefficients
    /// as CSV rows `n,L_n,L_n/n!,log_coeff`.
    Bell {
        #[arg(long)]
        s: i64,
        /// Highest n to print (rows start at n = 1).
        #[arg(long)]
        n: usize,
    },
    /// Run identity checks over configurable ranges.
    Verify {
        #[arg(long, value_enum, default_value_t = IdentityArg::All)]
        identity: IdentityArg,
        #[arg(long = "s-min", default_value_t = 4)]
        s_min: i64,
        #[arg(long = "s-max", default_value_t = 12)]
        s_max: i64,
        #[arg(long = "n-max", default_value_t = 60)]
        n_max: u64,
        /// Primes for the cor-prime checks (comma-separated or repeated).
        #[arg(long, value_delimiter = ',', default_values_t = [3u64, 5, 7, 11, 13])]
        p: Vec<u64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Summary)]
        format: ReportFormat,
    },
    /// Compare computed values or theta coefficients against a b-file.
    Crosscheck {
        /// Path to the b-file (e.g. fixtures/b001318.txt).
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        s: i64,
        /// Value bound (polygonal) or highest coefficient index (theta).
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ThetaForm {
    /// Direct enumeration over the index range.
    Sum,
    /// Jacobi triple product (s >= 4).
    Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LhsForm {
    /// The weighted divisor sum at general s.
    Divisor,
    /// The odd-divisor closed form at s = 4.
    #[value(name = "jha-square")]
    JhaSquare,
    /// The parity-weighted closed form at s = 6.
    #[value(name = "jha-tri")]
    JhaTri,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    All,
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "lemma1")]
    Lemma1,
    #[value(name = "lemma2")]
    Lemma2,
    Binomial,
    #[value(name = "cor-s4")]
    CorS4,
    #[value(name = "cor-s6")]
    CorS6,
    #[value(name = "cor-s5")]
    CorS5,
    #[value(name = "cor-prime")]
    CorPrime,
    #[value(name = "triple-product")]
    TripleProduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// The sorted distinct generalized polygonal values.
    Polygonal,
    /// Theta-series coefficients.
    Theta,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Theta { s, n_max, form } => cmd_theta(s, n_max, form),
        Command::Reps { s, j, n_max, format } => cmd_reps(s, j, n_max, format),
        Command::Lhs { n, s, form } => cmd_lhs(n, s, form),
        Command::Bell { s, n } => cmd_bell(s, n),
        Command::Verify {
            identity,
            s_min,
            s_max,
            n_max,
            p,
            format,
        } => cmd_verify(identity, s_min, s_max, n_max, p, format),
        Command::Crosscheck {
            fixture,
            kind,
            s,
            limit,
        } => cmd_crosscheck(&fixture, kind, s, limit),
    }
}

fn fail<E: std::fmt::Display>(error: E) -> String {
    error.to_string()
}

fn cmd_theta(s: i64, n_max: usize, form: ThetaForm) -> Result<u8, String> {
    let spec = PolygonalSpec::new(s).map_err(fail)?;
    let coeffs = match form {
        ThetaForm::Sum => spec.theta_coefficients(n_max),
        ThetaForm::Product => {
            let series = spec.triple_product_series(n_max).map_err(fail)?;
            (0..=n_max).map(|n| series.coeff(n).to_integer()).collect()
        }
    };
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    writeln!(out, "n,coeff").map_err(fail)?;
    for (n, c) in coeffs.iter().enumerate() {
        writeln!(out, "{n},{c}").map_err(fail)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct RepsJson {
    s: i64,
    j: usize,
    counts: Vec<String>,
}

fn cmd_reps(s: i64, j: usize, n_max: usize, format: TableFormat) -> Result<u8, String> {
    let spec = PolygonalSpec::new(s).map_err(fail)?;
    let table = RepTable::build(&spec, j, n_max);
    let row = table.row(j);
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        TableFormat::Csv => {
            writeln!(out, "n,count").map_err(fail)?;
            for (n, c) in row.iter().enumerate() {
                writeln!(out, "{n},{c}").map_err(fail)?;
            }
        }
        TableFormat::Json => {
            let payload = RepsJson {
                s,
                j,
                counts: row.iter().map(|c| c.to_string()).collect(),
            };
            let json = serde_json::to_string_pretty(&payload).map_err(fail)?;
            writeln!(out, "{json}").map_err(fail)?;
        }
    }
    Ok(0)
}

fn cmd_lhs(n: u64, s: Option<i64>, form: LhsForm) -> Result<u8, String> {
    let value = match form {
        LhsForm::Divisor => {
            let s = s.ok_or("the divisor form needs --s")?;
            divisor_lhs(n, s).map_err(fail)?
        }
        LhsForm::JhaSquare => {
            if let Some(s) = s {
                if s != 4 {
                    return Err(format!("jha-square is the s = 4 closed form, got --s {s}"));
                }
            }
            jha_square_lhs(n).map_err(fail)?
        }
        LhsForm::JhaTri => {
            if let Some(s) = s {
                if s != 6 {
                    return Err(format!("jha-tri is the s = 6 closed form, got --s {s}"));
                }
            }
            jha_triangular_lhs(n).map_err(fail)?
        }
    };
    println!("{value}");
    Ok(0)
}

fn cmd_bell(s: i64, n: usize) -> Result<u8, String> {
    let spec = PolygonalSpec::new(s).map_err(fail)?;
    let g = taylor_coeffs(&spec, n);
    let ls = log_polynomials(&g).map_err(fail)?;
    let log_series = spec.theta_series(n).log().map_err(fail)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    writeln!(out, "n,L_n,L_n/n!,log_coeff").map_err(fail)?;
    for m in 1..=n {
        let ratio = &ls[m] / ExactRational::from_integer(factorial(m as u64));
        writeln!(out, "{m},{},{ratio},{}", ls[m], log_series.coeff(m)).map_err(fail)?;
    }
    Ok(0)
}

fn suite_config(
    identity: IdentityArg,
    s_min: i64,
    s_max: i64,
    n_max: u64,
    primes: Vec<u64>,
) -> SuiteConfig {
    let mut config = SuiteConfig {
        selection: selection_for(identity),
        s_min,
        s_max,
        n_max,
        primes,
        ..SuiteConfig::default()
    };
    // A full run keeps the per-identity caps that bound the expensive
    // families; a single-identity run means "this one, over my ranges", so
    // the matching caps open up to the requested range.
    match identity {
        IdentityArg::All => {
            config.triple_product_order = config.triple_product_order.min(n_max as usize);
        }
        IdentityArg::Lemma1 => {
            config.lemma1_s_max = s_max;
            config.lemma1_n_max = n_max;
        }
        IdentityArg::Lemma2 => {
            config.lemma2_n_max = n_max;
            config.lemma2_s_values = (s_min.max(4)..=s_max).collect();
        }
        IdentityArg::Binomial => {
            config.binomial_n_max = n_max;
        }
        IdentityArg::TripleProduct => {
            config.triple_product_order = n_max as usize;
        }
        _ => {}
    }
    config
}

fn selection_for(identity: IdentityArg) -> IdentitySelection {
    match identity {
        IdentityArg::All => IdentitySelection::All,
        IdentityArg::Theorem1 => IdentitySelection::Single(IdentityName::Theorem1),
        IdentityArg::Lemma1 => IdentitySelection::Single(IdentityName::Lemma1),
        IdentityArg::Lemma2 => IdentitySelection::Single(IdentityName::Lemma2),
        IdentityArg::Binomial => IdentitySelection::Single(IdentityName::BinomialIdentity),
        IdentityArg::CorS4 => IdentitySelection::Single(IdentityName::CorS4),
        IdentityArg::CorS6 => IdentitySelection::Single(IdentityName::CorS6),
        IdentityArg::CorS5 => IdentitySelection::Single(IdentityName::CorS5),
        IdentityArg::CorPrime => IdentitySelection::Single(IdentityName::CorPrime),
        IdentityArg::TripleProduct => IdentitySelection::Single(IdentityName::TripleProduct),
    }
}

fn cmd_verify(
    identity: IdentityArg,
    s_min: i64,
    s_max: i64,
    n_max: u64,
    primes: Vec<u64>,
    format: ReportFormat,
) -> Result<u8, String> {
    if s_min > s_max {
        return Err(format!("--s-min {s_min} exceeds --s-max {s_max}"));
    }
    if n_max == 0 {
        return Err("--n-max must be at least 1".to_string());
    }
    let config = suite_config(identity, s_min, s_max, n_max, primes);
    let outcome = run_suite(&config);
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        ReportFormat::Json => {
            let json = serde_json::to_string_pretty(&outcome.reports).map_err(fail)?;
            writeln!(out, "{json}").map_err(fail)?;
        }
        ReportFormat::Csv => {
            writeln!(out, "identity_name,s,n,j,k,p,lhs,rhs,passed,detail").map_err(fail)?;
            for report in &outcome.reports {
                writeln!(out, "{}", csv_row(report)).map_err(fail)?;
            }
        }
        ReportFormat::Summary => {
            write_summary(&mut out, &outcome.reports).map_err(fail)?;
        }
    }
    out.flush().map_err(fail)?;
    Ok(if outcome.all_passed() { 0 } else { 1 })
}

fn csv_row(report: &VerificationReport) -> String {
    let param = |key: &str| {
        report
            .parameters
            .get(key)
            .map(|v| v.to_string())
            .unwrap_or_default()
    };
    let fields = [
        report.identity_name.to_string(),
        param("s"),
        param("n"),
        param("j"),
        param("k"),
        param("p"),
        report.lhs.to_string(),
        report.rhs.to_string(),
        report.passed.to_string(),
        report.detail.clone().unwrap_or_default(),
    ];
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

fn write_summary<W: Write>(out: &mut W, reports: &[VerificationReport]) -> std::io::Result<()> {
    let mut per_identity: BTreeMap<IdentityName, (usize, usize, usize)> = BTreeMap::new();
    for report in reports {
        let slot = per_identity.entry(report.identity_name).or_default();
        if report.is_skipped() {
            slot.2 += 1;
        } else if report.passed {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    let mut total = (0usize, 0usize, 0usize);
    for (identity, (passed, failed, skipped)) in &per_identity {
        writeln!(
            out,
            "{identity}: passed={passed} failed={failed} skipped={skipped}"
        )?;
        total.0 += passed;
        total.1 += failed;
        total.2 += skipped;
    }
    writeln!(
        out,
        "total: passed={} failed={} skipped={}",
        total.0, total.1, total.2
    )?;
    let failures: Vec<&VerificationReport> = reports
        .iter()
        .filter(|r| !r.passed && !r.is_skipped())
        .collect();
    const SHOWN: usize = 5;
    for report in failures.iter().take(SHOWN) {
        let params: Vec<String> = report
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(
            out,
            "FAIL {} [{}] lhs={} rhs={}",
            report.identity_name,
            params.join(", "),
            report.lhs,
            report.rhs
        )?;
    }
    if failures.len() > SHOWN {
        writeln!(out, "... and {} more failures", failures.len() - SHOWN)?;
    }
    writeln!(
        out,
        "result: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    )
}

fn cmd_crosscheck(fixture: &PathBuf, kind: KindArg, s: i64, limit: u64) -> Result<u8, String> {
    let text = std::fs::read_to_string(fixture)
        .map_err(|e| format!("cannot read {}: {e}", fixture.display()))?;
    let stem = fixture
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("fixture");
    let sequence_id = sequence_id_from_stem(stem);
    let parsed = parse_bfile(&sequence_id, &text).map_err(fail)?;
    let spec = PolygonalSpec::new(s).map_err(fail)?;
    let kind = match kind {
        KindArg::Polygonal => CrosscheckKind::PolygonalValues,
        KindArg::Theta => CrosscheckKind::ThetaCoeffs,
    };
    let report = crosscheck_sequence(kind, &spec, &parsed, limit).map_err(fail)?;
    let json = serde_json::to_string_pretty(&report).map_err(fail)?;
    println!("{json}");
    Ok(if report.passed { 0 } else { 1 })
}

/// `b000122` (the conventional b-file stem) becomes `A000122`; anything else
/// is used verbatim.
fn sequence_id_from_stem(stem: &str) -> String {
    match stem.strip_prefix('b') {
        Some(digits) if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
            format!("A{digits}")
        }
        _ => stem.to_string(),
    }
}
